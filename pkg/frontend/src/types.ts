// Wire types for the /api/v1 JSON service.  Vertices are 1-based everywhere.

export type Arrow = [number, number, number]; // [source, target, weight]

export interface QuiverJson {
  n: number;
  arrows: Arrow[];
}

export interface CyclePattern {
  vertices: number[];
  oriented: boolean;
}

export interface BasicSubquiver {
  kind: string; // basic_d4 | basic_adjacent_triangles | basic_oriented_cycle
  vertices: number[];
}

export interface InfiniteCertificate {
  clause: string;
  roman: string;
  witness: number[][];
  description: string;
}

export interface AnalyzeResult {
  rank_z: number;
  corank_z: number;
  corank_gf2: number;
  dim_v00: number;
  quotient_dim: number;
  double_edges: number[][];
  cycles: CyclePattern[];
  basic_subquivers: BasicSubquiver[];
  infinite_certificate: InfiniteCertificate | null;
  radical_basis_z: number[][];
  basic_radical_vectors: number[][];
}

export interface ClassifyResult {
  verdict: string;
  name: string | null;
  display: string;
  evidence: string[];
}

export interface ClassResult {
  size: number;
  status: string;
  witness?: QuiverJson;
  members?: QuiverJson[];
  offset?: number;
}

export interface CatalogEntry {
  name: string;
  n: number;
}

export interface FieldError {
  path: string;
  message: string;
}
