import { ExplorerApi } from './api.js';
import { formatJsonQuiver, formatTextQuiver } from './formats.js';
import { MutationHistory } from './history.js';
import type { AnalyzeResult, ClassifyResult, QuiverJson } from './types.js';

export type SessionEvent = 'quiver' | 'analysis' | 'classify' | 'highlight' | 'error';

type Listener = (event: SessionEvent) => void;

/**
 * The whole client-side state of the explorer: current quiver, history,
 * latest analysis, highlight selection.  All mathematics happens on the
 * server; this class only round-trips JSON and keeps the stack.
 *
 * Mutating operations go through a single promise chain, so at most one
 * request is in flight and rapid vertex clicks are applied in order.
 */
export class ExplorerSession {
  readonly api: ExplorerApi;

  private history: MutationHistory | null = null;
  private highlightSet = new Set<number>();
  private lastClassify: ClassifyResult | null = null;
  private lastError: unknown = null;
  private listeners: Listener[] = [];
  private chain: Promise<void> = Promise.resolve();
  private pending = 0;

  constructor(api: ExplorerApi) {
    this.api = api;
  }

  // --- observers ---------------------------------------------------------

  onChange(fn: Listener): void {
    this.listeners.push(fn);
  }

  private notify(event: SessionEvent): void {
    for (const fn of this.listeners) fn(event);
  }

  // --- state access ------------------------------------------------------

  get loaded(): boolean {
    return this.history !== null;
  }

  /** Exact JSON text of the displayed quiver. */
  currentJson(): string {
    return this.mustHistory().current.quiverJson;
  }

  current(): QuiverJson {
    return JSON.parse(this.currentJson());
  }

  initialJson(): string {
    return this.mustHistory().initial.quiverJson;
  }

  analysis(): AnalyzeResult | null {
    return this.mustHistory().current.analysis;
  }

  classification(): ClassifyResult | null {
    return this.lastClassify;
  }

  highlight(): ReadonlySet<number> {
    return this.highlightSet;
  }

  error(): unknown {
    return this.lastError;
  }

  canUndo(): boolean {
    return this.history !== null && this.history.canUndo();
  }

  canRedo(): boolean {
    return this.history !== null && this.history.canRedo();
  }

  /** Vertices mutated since load, oldest first. */
  vertexSequence(): number[] {
    return this.mustHistory().vertexSequence();
  }

  /** Requests queued or running; the drawing can grey out while nonzero. */
  busy(): boolean {
    return this.pending > 0;
  }

  private mustHistory(): MutationHistory {
    if (this.history === null) throw new Error('no quiver loaded');
    return this.history;
  }

  // --- operations --------------------------------------------------------

  /** Replace the session with a freshly loaded quiver; history restarts. */
  load(quiver: QuiverJson): Promise<void> {
    return this.enqueue(async () => {
      const json = formatJsonQuiver(quiver);
      const analysis = await this.api.analyze(quiver);
      this.history = new MutationHistory(json, analysis);
      this.lastClassify = null;
      this.highlightSet = new Set();
      this.notify('quiver');
      this.notify('analysis');
    });
  }

  /** Mutate at 1-based vertex k: server round trip, then push history. */
  clickVertex(k: number): Promise<void> {
    return this.enqueue(async () => {
      const hist = this.mustHistory();
      const mutated = await this.api.mutate(JSON.parse(hist.current.quiverJson), k);
      const analysis = await this.api.analyze(mutated);
      hist.push(formatJsonQuiver(mutated), k, analysis);
      this.lastClassify = null;
      this.notify('quiver');
      this.notify('analysis');
    });
  }

  undo(): Promise<boolean> {
    return this.enqueueValue(async () => {
      const moved = this.mustHistory().undo();
      if (moved) this.afterMove();
      return moved;
    });
  }

  redo(): Promise<boolean> {
    return this.enqueueValue(async () => {
      const moved = this.mustHistory().redo();
      if (moved) this.afterMove();
      return moved;
    });
  }

  private afterMove(): void {
    this.lastClassify = null;
    this.notify('quiver');
    if (this.mustHistory().current.analysis !== null) {
      this.notify('analysis');
    } else {
      // only possible if a load was interrupted; repair in the background
      void this.refreshAnalysis();
    }
  }

  private async refreshAnalysis(): Promise<void> {
    const hist = this.mustHistory();
    const analysis = await this.api.analyze(JSON.parse(hist.current.quiverJson));
    hist.setAnalysis(analysis);
    this.notify('analysis');
  }

  classifyCurrent(caps?: { max_size?: number; weight_abort?: number }): Promise<ClassifyResult> {
    return this.enqueueValue(async () => {
      const verdict = await this.api.classify(this.current(), caps);
      this.lastClassify = verdict;
      this.notify('classify');
      return verdict;
    });
  }

  setHighlight(vertices: Iterable<number>): void {
    this.highlightSet = new Set(vertices);
    this.notify('highlight');
  }

  clearHighlight(): void {
    if (this.highlightSet.size === 0) return;
    this.highlightSet = new Set();
    this.notify('highlight');
  }

  exportText(): string {
    return formatTextQuiver(this.current());
  }

  exportJson(): string {
    return this.currentJson();
  }

  // --- queueing ----------------------------------------------------------

  private enqueue(op: () => Promise<void>): Promise<void> {
    return this.enqueueValue(op);
  }

  private enqueueValue<T>(op: () => Promise<T>): Promise<T> {
    this.pending++;
    const result = this.chain.then(op);
    // keep the chain alive whether or not the op failed; the caller sees
    // the rejection through `result`
    this.chain = result.then(
      () => {
        this.pending--;
      },
      (err) => {
        this.pending--;
        this.lastError = err;
        this.notify('error');
      },
    );
    return result;
  }
}
