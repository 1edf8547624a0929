// Client-side reading and writing of the two quiver formats, used for file
// upload diagnostics and export.  The grammar mirrors the service exactly:
//
//   # optional comments
//   n 4
//   1 2 1
//
// header line "n <count>", then one "<source> <target> <weight>" arrow per
// line, all 1-based.  JSON: {"n": int, "arrows": [[i, j, w], ...]}.
// No mutation math happens here; the server owns all of that.

import type { Arrow, QuiverJson } from './types.js';

export class ParseError extends Error {
  readonly line: number | null;

  constructor(message: string, line: number | null = null) {
    super(line === null ? message : `line ${line}: ${message}`);
    this.line = line;
  }
}

function checkArrow(n: number, i: number, j: number, w: number,
                    line: number | null, seen: Set<string>): void {
  if (!(i >= 1 && i <= n && j >= 1 && j <= n)) {
    throw new ParseError(`vertex out of range 1..${n} in arrow (${i},${j},${w})`, line);
  }
  if (i === j) throw new ParseError(`loop forbidden at vertex ${i}`, line);
  if (w < 1) throw new ParseError(`arrow weight must be >= 1, got ${w}`, line);
  const pair = i < j ? `${i},${j}` : `${j},${i}`;
  if (seen.has(pair)) {
    throw new ParseError(`conflicting edge between ${pair.replace(',', ' and ')}`, line);
  }
  seen.add(pair);
}

export function parseTextQuiver(text: string): QuiverJson {
  let n: number | null = null;
  const arrows: Arrow[] = [];
  const seen = new Set<string>();
  const lines = text.split(/\r?\n/);
  for (let idx = 0; idx < lines.length; idx++) {
    const ln = idx + 1;
    const line = lines[idx].split('#', 1)[0].trim();
    if (!line) continue;
    const parts = line.split(/\s+/);
    if (n === null) {
      if (parts.length !== 2 || parts[0] !== 'n') {
        throw new ParseError("expected header 'n <count>'", ln);
      }
      n = parseIntStrict(parts[1], ln, 'vertex count');
      if (n < 0) throw new ParseError('vertex count must be non-negative', ln);
      continue;
    }
    if (parts.length !== 3) {
      throw new ParseError(`expected '<i> <j> <w>', got '${line}'`, ln);
    }
    const i = parseIntStrict(parts[0], ln, 'arrow entry');
    const j = parseIntStrict(parts[1], ln, 'arrow entry');
    const w = parseIntStrict(parts[2], ln, 'arrow entry');
    checkArrow(n, i, j, w, ln, seen);
    arrows.push([i, j, w]);
  }
  if (n === null) throw new ParseError("empty input: missing 'n <count>' header");
  return { n, arrows };
}

function parseIntStrict(s: string, line: number, what: string): number {
  if (!/^[+-]?\d+$/.test(s)) {
    throw new ParseError(`${what} is not an integer: '${s}'`, line);
  }
  return parseInt(s, 10);
}

export function formatTextQuiver(q: QuiverJson): string {
  const lines = [`n ${q.n}`];
  for (const [i, j, w] of q.arrows) lines.push(`${i} ${j} ${w}`);
  return lines.join('\n') + '\n';
}

export function parseJsonQuiver(text: string): QuiverJson {
  let obj: any;
  try {
    obj = JSON.parse(text);
  } catch (err: any) {
    throw new ParseError(`not valid JSON: ${err.message}`);
  }
  if (obj === null || typeof obj !== 'object' || Array.isArray(obj)) {
    throw new ParseError('quiver JSON must be an object');
  }
  const extra = Object.keys(obj).filter((k) => k !== 'n' && k !== 'arrows');
  if (extra.length) throw new ParseError(`unexpected keys in quiver JSON: ${extra.sort().join(', ')}`);
  if (!('n' in obj) || !('arrows' in obj)) {
    throw new ParseError("quiver JSON needs keys 'n' and 'arrows'");
  }
  if (!Number.isInteger(obj.n) || obj.n < 0) {
    throw new ParseError(`'n' must be a non-negative integer, got ${JSON.stringify(obj.n)}`);
  }
  if (!Array.isArray(obj.arrows)) {
    throw new ParseError("'arrows' must be a list of [i, j, w] triples");
  }
  const seen = new Set<string>();
  const arrows: Arrow[] = [];
  for (let idx = 0; idx < obj.arrows.length; idx++) {
    const item = obj.arrows[idx];
    if (!Array.isArray(item) || item.length !== 3 || !item.every((x) => Number.isInteger(x))) {
      throw new ParseError(`arrow #${idx + 1} must be an [i, j, w] integer triple`);
    }
    const [i, j, w] = item as Arrow;
    checkArrow(obj.n, i, j, w, null, seen);
    arrows.push([i, j, w]);
  }
  return { n: obj.n, arrows };
}

/** Compact one-line JSON, the form stored in history and offered for export. */
export function formatJsonQuiver(q: QuiverJson): string {
  return JSON.stringify({ n: q.n, arrows: q.arrows });
}

/** Parse an upload whose format is guessed from the content. */
export function parseUpload(text: string): QuiverJson {
  const head = text.trimStart();
  if (head.startsWith('{')) return parseJsonQuiver(text);
  return parseTextQuiver(text);
}
