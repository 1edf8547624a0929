import type { Arrow, QuiverJson } from './types.js';

// Structural edits for the quiver editor.  Pure functions: each returns a
// new quiver object which the app then loads as a fresh session (an edited
// quiver starts a new mutation history).

export function addVertex(q: QuiverJson): QuiverJson {
  return { n: q.n + 1, arrows: q.arrows.map(copy) };
}

export function removeVertex(q: QuiverJson, v: number): QuiverJson {
  if (!(v >= 1 && v <= q.n)) throw new Error(`no vertex ${v}`);
  const relabel = (x: number) => (x > v ? x - 1 : x);
  const arrows: Arrow[] = [];
  for (const [i, j, w] of q.arrows) {
    if (i === v || j === v) continue;
    arrows.push([relabel(i), relabel(j), w]);
  }
  return { n: q.n - 1, arrows };
}

/** Add an arrow i -> j of the given weight; an existing edge on the same
    vertex pair (either direction) is replaced. */
export function setArrow(q: QuiverJson, i: number, j: number, w: number): QuiverJson {
  if (!(i >= 1 && i <= q.n) || !(j >= 1 && j <= q.n)) {
    throw new Error(`vertex out of range 1..${q.n}`);
  }
  if (i === j) throw new Error('loops are not allowed');
  if (!Number.isInteger(w) || w < 1) throw new Error(`weight must be a positive integer, got ${w}`);
  const arrows = q.arrows.filter(([a, b]) => !samePair(a, b, i, j)).map(copy);
  arrows.push([i, j, w]);
  return { n: q.n, arrows };
}

export function removeArrow(q: QuiverJson, i: number, j: number): QuiverJson {
  const arrows = q.arrows.filter(([a, b]) => !samePair(a, b, i, j)).map(copy);
  if (arrows.length === q.arrows.length) throw new Error(`no edge between ${i} and ${j}`);
  return { n: q.n, arrows };
}

function samePair(a: number, b: number, i: number, j: number): boolean {
  return (a === i && b === j) || (a === j && b === i);
}

function copy(a: Arrow): Arrow {
  return [a[0], a[1], a[2]];
}
