import type { QuiverJson } from './types.js';

export interface Point {
  x: number;
  y: number;
}

export interface LayoutOptions {
  width: number;
  height: number;
  /** Positions to keep: every vertex present here stays exactly where it is. */
  previous?: ReadonlyMap<number, Point>;
  iterations?: number;
}

const IDEAL_EDGE = 120;
const REPULSION = 18000;

/**
 * Small deterministic spring embedder.  Vertices carried over from
 * `previous` are frozen so the picture stays stable across a mutation; only
 * vertices without a prior position (fresh load, or ones added in the
 * editor) are placed and relaxed.  No randomness: new vertices start on a
 * circle in id order, so the same input always yields the same drawing.
 */
export function layoutPositions(q: QuiverJson, opts: LayoutOptions): Map<number, Point> {
  const { width, height } = opts;
  const prev = opts.previous;
  const cx = width / 2;
  const cy = height / 2;
  const pos = new Map<number, Point>();
  const movable: number[] = [];

  const radius = Math.min(width, height) / 2 - 60;
  for (let v = 1; v <= q.n; v++) {
    const old = prev?.get(v);
    if (old) {
      pos.set(v, { x: old.x, y: old.y });
    } else {
      const angle = (2 * Math.PI * (v - 1)) / Math.max(q.n, 1) - Math.PI / 2;
      pos.set(v, { x: cx + radius * Math.cos(angle), y: cy + radius * Math.sin(angle) });
      movable.push(v);
    }
  }
  if (movable.length === 0 || q.n <= 1) return pos;

  const iterations = opts.iterations ?? 250;
  let temperature = Math.min(width, height) / 8;
  const cool = Math.pow(0.02, 1 / iterations);

  for (let it = 0; it < iterations; it++) {
    const disp = new Map<number, Point>();
    for (const v of movable) disp.set(v, { x: 0, y: 0 });

    for (const v of movable) {
      const pv = pos.get(v)!;
      const dv = disp.get(v)!;
      for (let u = 1; u <= q.n; u++) {
        if (u === v) continue;
        const pu = pos.get(u)!;
        let dx = pv.x - pu.x;
        let dy = pv.y - pu.y;
        let d2 = dx * dx + dy * dy;
        if (d2 < 0.01) {
          // coincident points: separate along an id-determined direction
          const a = (v * 37 + u * 11) % 360;
          dx = Math.cos(a);
          dy = Math.sin(a);
          d2 = 1;
        }
        const f = REPULSION / d2;
        const d = Math.sqrt(d2);
        dv.x += (dx / d) * f;
        dv.y += (dy / d) * f;
      }
      // gentle pull toward the canvas center keeps components together
      dv.x += (cx - pv.x) * 0.02;
      dv.y += (cy - pv.y) * 0.02;
    }

    for (const [i, j] of q.arrows) {
      const pi = pos.get(i)!;
      const pj = pos.get(j)!;
      const dx = pj.x - pi.x;
      const dy = pj.y - pi.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 0.1);
      const f = (d - IDEAL_EDGE) * 0.08;
      const ux = dx / d;
      const uy = dy / d;
      const di = disp.get(i);
      if (di) {
        di.x += ux * f;
        di.y += uy * f;
      }
      const dj = disp.get(j);
      if (dj) {
        dj.x -= ux * f;
        dj.y -= uy * f;
      }
    }

    for (const v of movable) {
      const pv = pos.get(v)!;
      const dv = disp.get(v)!;
      const len = Math.sqrt(dv.x * dv.x + dv.y * dv.y);
      if (len > 0) {
        const step = Math.min(len, temperature);
        pv.x += (dv.x / len) * step;
        pv.y += (dv.y / len) * step;
      }
      pv.x = Math.min(width - 30, Math.max(30, pv.x));
      pv.y = Math.min(height - 30, Math.max(30, pv.y));
    }
    temperature *= cool;
  }
  return pos;
}
