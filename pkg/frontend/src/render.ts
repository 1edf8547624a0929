import type { Point } from './layout.js';
import type { QuiverJson } from './types.js';

const SVG_NS = 'http://www.w3.org/2000/svg';
const NODE_R = 16;

export interface ViewCallbacks {
  onVertexClick?: (v: number) => void;
  onVertexMoved?: (v: number, p: Point) => void;
}

function el<K extends keyof SVGElementTagNameMap>(tag: K, attrs: Record<string, string>): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [k, v] of Object.entries(attrs)) node.setAttribute(k, v);
  return node;
}

/**
 * Imperative SVG view of one quiver.  Edges are single strokes with an
 * arrowhead marker; weights >= 2 get a midpoint label (so a double edge reads
 * as one stroke labeled "2", matching the usual figures).  Dragging a vertex
 * pins it; a plain click mutates.
 */
export class QuiverView {
  private svg: SVGSVGElement;
  private edgeGroup: SVGGElement;
  private nodeGroup: SVGGElement;
  private callbacks: ViewCallbacks;
  private positions = new Map<number, Point>();
  private quiver: QuiverJson = { n: 0, arrows: [] };
  private highlighted = new Set<number>();

  constructor(svg: SVGSVGElement, callbacks: ViewCallbacks = {}) {
    this.svg = svg;
    this.callbacks = callbacks;

    const defs = el('defs', {});
    const marker = el('marker', {
      id: 'arrowhead',
      viewBox: '0 0 10 10',
      refX: '9',
      refY: '5',
      markerWidth: '7',
      markerHeight: '7',
      orient: 'auto-start-reverse',
    });
    marker.appendChild(el('path', { d: 'M 0 0 L 10 5 L 0 10 z', fill: 'var(--edge, #444)' }));
    defs.appendChild(marker);
    this.svg.appendChild(defs);
    this.edgeGroup = el('g', { class: 'edges' });
    this.nodeGroup = el('g', { class: 'nodes' });
    this.svg.appendChild(this.edgeGroup);
    this.svg.appendChild(this.nodeGroup);
  }

  update(q: QuiverJson, positions: ReadonlyMap<number, Point>): void {
    this.quiver = q;
    this.positions = new Map(positions);
    this.redraw();
  }

  setHighlight(vertices: ReadonlySet<number>): void {
    this.highlighted = new Set(vertices);
    this.redraw();
  }

  getPositions(): ReadonlyMap<number, Point> {
    return this.positions;
  }

  private redraw(): void {
    this.edgeGroup.replaceChildren();
    this.nodeGroup.replaceChildren();

    for (const [i, j, w] of this.quiver.arrows) {
      const a = this.positions.get(i);
      const b = this.positions.get(j);
      if (!a || !b) continue;
      const dx = b.x - a.x;
      const dy = b.y - a.y;
      const d = Math.max(Math.sqrt(dx * dx + dy * dy), 0.1);
      // stop the stroke at the circle border so the arrowhead is visible
      const sx = a.x + (dx / d) * NODE_R;
      const sy = a.y + (dy / d) * NODE_R;
      const tx = b.x - (dx / d) * (NODE_R + 2);
      const ty = b.y - (dy / d) * (NODE_R + 2);
      const hl = this.highlighted.has(i) && this.highlighted.has(j);
      const line = el('line', {
        x1: String(sx),
        y1: String(sy),
        x2: String(tx),
        y2: String(ty),
        class: hl ? 'edge highlight' : 'edge',
        'marker-end': 'url(#arrowhead)',
      });
      this.edgeGroup.appendChild(line);
      if (w >= 2) {
        const label = el('text', {
          x: String((sx + tx) / 2 + (dy / d) * 10),
          y: String((sy + ty) / 2 - (dx / d) * 10),
          class: 'edge-weight',
          'text-anchor': 'middle',
        });
        label.textContent = String(w);
        this.edgeGroup.appendChild(label);
      }
    }

    for (let v = 1; v <= this.quiver.n; v++) {
      const p = this.positions.get(v);
      if (!p) continue;
      const g = el('g', {
        class: this.highlighted.has(v) ? 'vertex highlight' : 'vertex',
        transform: `translate(${p.x},${p.y})`,
      });
      g.appendChild(el('circle', { r: String(NODE_R) }));
      const label = el('text', { 'text-anchor': 'middle', dy: '0.35em' });
      label.textContent = String(v);
      g.appendChild(label);
      this.attachPointer(g, v);
      this.nodeGroup.appendChild(g);
    }
  }

  private attachPointer(g: SVGGElement, v: number): void {
    let dragging = false;
    let moved = false;
    let grabDx = 0;
    let grabDy = 0;

    g.addEventListener('pointerdown', (ev) => {
      dragging = true;
      moved = false;
      const p = this.positions.get(v)!;
      const m = this.toSvgPoint(ev);
      grabDx = p.x - m.x;
      grabDy = p.y - m.y;
      g.setPointerCapture(ev.pointerId);
    });
    g.addEventListener('pointermove', (ev) => {
      if (!dragging) return;
      const m = this.toSvgPoint(ev);
      const next = { x: m.x + grabDx, y: m.y + grabDy };
      const p = this.positions.get(v)!;
      if (!moved && Math.hypot(next.x - p.x, next.y - p.y) < 4) return;
      moved = true;
      this.positions.set(v, next);
      this.redraw();
    });
    g.addEventListener('pointerup', () => {
      if (!dragging) return;
      dragging = false;
      if (moved) {
        this.callbacks.onVertexMoved?.(v, this.positions.get(v)!);
      } else {
        this.callbacks.onVertexClick?.(v);
      }
    });
  }

  private toSvgPoint(ev: PointerEvent): Point {
    const rect = this.svg.getBoundingClientRect();
    const vb = this.svg.viewBox.baseVal;
    if (vb && vb.width > 0) {
      return {
        x: vb.x + ((ev.clientX - rect.left) / rect.width) * vb.width,
        y: vb.y + ((ev.clientY - rect.top) / rect.height) * vb.height,
      };
    }
    return { x: ev.clientX - rect.left, y: ev.clientY - rect.top };
  }
}
