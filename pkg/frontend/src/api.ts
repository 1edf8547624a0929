import type {
  AnalyzeResult,
  CatalogEntry,
  ClassifyResult,
  ClassResult,
  FieldError,
  QuiverJson,
} from './types.js';

/** Server rejected the request (400 schema or 422 domain error). */
export class ApiError extends Error {
  readonly status: number;
  readonly code: string;
  readonly fieldErrors: FieldError[];

  constructor(status: number, code: string, message: string, fieldErrors: FieldError[] = []) {
    super(message);
    this.status = status;
    this.code = code;
    this.fieldErrors = fieldErrors;
  }
}

/** Could not reach the service at all; the UI shows a retry banner. */
export class ServiceUnreachableError extends Error {
  constructor(base: string, cause: unknown) {
    super(`service unreachable at ${base}`);
    this.cause = cause;
  }
}

async function throwApiError(resp: Response): Promise<never> {
  let body: any = null;
  try {
    body = await resp.json();
  } catch {
    // non-JSON error body, fall through to generic
  }
  if (body && typeof body.code === 'string') {
    throw new ApiError(resp.status, body.code, body.message ?? 'request failed',
      Array.isArray(body.errors) ? body.errors : []);
  }
  throw new ApiError(resp.status, 'http_' + resp.status, `unexpected ${resp.status} response`);
}

export class ExplorerApi {
  readonly base: string;

  constructor(base: string) {
    // tolerate a trailing slash in the configured base
    this.base = base.replace(/\/+$/, '');
  }

  private async post<T>(route: string, payload: unknown): Promise<T> {
    let resp: Response;
    try {
      resp = await fetch(this.base + route, {
        method: 'POST',
        headers: { 'content-type': 'application/json' },
        body: JSON.stringify(payload),
      });
    } catch (err) {
      throw new ServiceUnreachableError(this.base, err);
    }
    if (!resp.ok) await throwApiError(resp);
    return resp.json() as Promise<T>;
  }

  async mutate(quiver: QuiverJson, k: number): Promise<QuiverJson> {
    const out = await this.post<{ quiver: QuiverJson }>('/mutate', { quiver, k });
    return out.quiver;
  }

  analyze(quiver: QuiverJson): Promise<AnalyzeResult> {
    return this.post<AnalyzeResult>('/analyze', { quiver });
  }

  classify(quiver: QuiverJson, caps?: { max_size?: number; weight_abort?: number }): Promise<ClassifyResult> {
    return this.post<ClassifyResult>('/classify', caps ? { quiver, caps } : { quiver });
  }

  mutationClass(quiver: QuiverJson, opts?: {
    caps?: { max_size?: number; weight_abort?: number };
    include_members?: boolean;
    offset?: number;
    limit?: number;
  }): Promise<ClassResult> {
    return this.post<ClassResult>('/class', { quiver, ...opts });
  }

  async catalog(): Promise<CatalogEntry[]> {
    let resp: Response;
    try {
      resp = await fetch(this.base + '/catalog');
    } catch (err) {
      throw new ServiceUnreachableError(this.base, err);
    }
    if (!resp.ok) await throwApiError(resp);
    const body = await resp.json();
    return body.seeds;
  }
}
