import { ApiError, ServiceUnreachableError } from './api.js';
import type { AnalyzeResult, ClassifyResult } from './types.js';

// DOM builders for the side panels.  Pure rendering: every number shown here
// came from the last /analyze or /classify response.

function div(cls: string, ...children: (Node | string)[]): HTMLDivElement {
  const d = document.createElement('div');
  d.className = cls;
  d.append(...children);
  return d;
}

function row(label: string, value: string): HTMLDivElement {
  const d = div('inv-row');
  const l = document.createElement('span');
  l.className = 'inv-label';
  l.textContent = label;
  const v = document.createElement('span');
  v.className = 'inv-value';
  v.textContent = value;
  d.append(l, v);
  return d;
}

function vectorText(vs: number[][]): string {
  if (vs.length === 0) return 'none';
  return vs.map((v) => '(' + v.join(', ') + ')').join('  ');
}

export function renderInvariants(root: HTMLElement, a: AnalyzeResult | null): void {
  root.replaceChildren();
  if (!a) return;
  root.append(
    row('rank over Z', String(a.rank_z)),
    row('corank over Z', String(a.corank_z)),
    row('corank over GF(2)', String(a.corank_gf2)),
    row('dim V̄00', String(a.dim_v00)),
    row('quotient dim', String(a.quotient_dim)),
    row('radical basis (Z)', vectorText(a.radical_basis_z)),
    row('basic radical vectors', vectorText(a.basic_radical_vectors)),
  );
}

type HighlightFn = (vertices: number[]) => void;

function patternList(title: string, items: { text: string; vertices: number[] }[],
                     highlight: HighlightFn, clear: () => void): HTMLElement {
  const section = div('pattern-section');
  const h = document.createElement('h3');
  h.textContent = title;
  section.appendChild(h);
  if (items.length === 0) {
    section.appendChild(div('pattern-empty', 'none'));
    return section;
  }
  const ul = document.createElement('ul');
  for (const item of items) {
    const li = document.createElement('li');
    li.textContent = item.text;
    li.addEventListener('mouseenter', () => highlight(item.vertices));
    li.addEventListener('mouseleave', clear);
    ul.appendChild(li);
  }
  section.appendChild(ul);
  return section;
}

export function renderPatterns(root: HTMLElement, a: AnalyzeResult | null,
                               highlight: HighlightFn, clear: () => void): void {
  root.replaceChildren();
  if (!a) return;
  root.append(
    patternList('Double edges', a.double_edges.map((vs) => ({
      text: `{${vs.join(', ')}}  weight 2`,
      vertices: vs,
    })), highlight, clear),
    patternList('Induced cycles', a.cycles.map((c) => ({
      text: `{${c.vertices.join(', ')}}  ${c.oriented ? 'oriented' : 'non-oriented'}`,
      vertices: c.vertices,
    })), highlight, clear),
    patternList('Basic subquivers', a.basic_subquivers.map((b) => ({
      text: `{${b.vertices.join(', ')}}  ${b.kind.replace('basic_', '').replace(/_/g, ' ')}`,
      vertices: b.vertices,
    })), highlight, clear),
  );
  if (a.infinite_certificate) {
    const c = a.infinite_certificate;
    const section = div('pattern-section certificate');
    const h = document.createElement('h3');
    h.textContent = 'Infinite-type certificate';
    const body = div('pattern-empty', `clause (${c.roman}): ${c.description}`);
    body.addEventListener('mouseenter', () => highlight(c.witness.flat()));
    body.addEventListener('mouseleave', clear);
    section.append(h, body);
    root.appendChild(section);
  }
}

export function renderClassification(root: HTMLElement, c: ClassifyResult | null): void {
  root.replaceChildren();
  if (!c) return;
  const verdict = div('classify-verdict', c.display);
  const ul = document.createElement('ul');
  ul.className = 'classify-evidence';
  for (const line of c.evidence) {
    const li = document.createElement('li');
    li.textContent = line;
    ul.appendChild(li);
  }
  root.append(verdict, ul);
}

export function describeError(err: unknown): string {
  if (err instanceof ServiceUnreachableError) return err.message;
  if (err instanceof ApiError) {
    if (err.fieldErrors.length > 0) {
      return `${err.message}: ` + err.fieldErrors.map((e) => `${e.path}: ${e.message}`).join('; ');
    }
    return `${err.code}: ${err.message}`;
  }
  return err instanceof Error ? err.message : String(err);
}

export function showBanner(root: HTMLElement, err: unknown, retry: () => void): void {
  root.replaceChildren();
  root.classList.add('visible');
  const msg = document.createElement('span');
  msg.textContent = describeError(err);
  root.appendChild(msg);
  if (err instanceof ServiceUnreachableError) {
    const btn = document.createElement('button');
    btn.textContent = 'Retry';
    btn.addEventListener('click', retry);
    root.appendChild(btn);
  }
  const close = document.createElement('button');
  close.textContent = '×';
  close.className = 'banner-close';
  close.addEventListener('click', () => hideBanner(root));
  root.appendChild(close);
}

export function hideBanner(root: HTMLElement): void {
  root.classList.remove('visible');
  root.replaceChildren();
}
