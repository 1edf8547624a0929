import type { AnalyzeResult } from './types.js';

export interface HistoryEntry {
  /** Exact JSON text of the quiver at this point; undo restores it verbatim. */
  quiverJson: string;
  /** 1-based vertex whose mutation produced this entry; null for the loaded quiver. */
  vertex: number | null;
  /** Analysis fetched when the entry was created; the service is stateless so
      this stays equal to what a fresh /analyze call would return. */
  analysis: AnalyzeResult | null;
}

/**
 * Linear undo history.  entries[0] is always the initially loaded quiver, and
 * replaying entries[1..cursor].vertex through /api/mutate starting from
 * entries[0] reproduces the current quiver.
 */
export class MutationHistory {
  private entries: HistoryEntry[];
  private cursor = 0;

  constructor(initialQuiverJson: string, analysis: AnalyzeResult | null = null) {
    this.entries = [{ quiverJson: initialQuiverJson, vertex: null, analysis }];
  }

  get current(): HistoryEntry {
    return this.entries[this.cursor];
  }

  get initial(): HistoryEntry {
    return this.entries[0];
  }

  get length(): number {
    return this.entries.length;
  }

  get position(): number {
    return this.cursor;
  }

  /** Vertices mutated to get from the initial quiver to the current one. */
  vertexSequence(): number[] {
    const seq: number[] = [];
    for (let t = 1; t <= this.cursor; t++) seq.push(this.entries[t].vertex as number);
    return seq;
  }

  push(quiverJson: string, vertex: number, analysis: AnalyzeResult | null): void {
    // a new mutation branches: drop the redo tail
    this.entries.length = this.cursor + 1;
    this.entries.push({ quiverJson, vertex, analysis });
    this.cursor++;
  }

  canUndo(): boolean {
    return this.cursor > 0;
  }

  canRedo(): boolean {
    return this.cursor < this.entries.length - 1;
  }

  undo(): boolean {
    if (!this.canUndo()) return false;
    this.cursor--;
    return true;
  }

  redo(): boolean {
    if (!this.canRedo()) return false;
    this.cursor++;
    return true;
  }

  setAnalysis(analysis: AnalyzeResult): void {
    this.entries[this.cursor] = { ...this.entries[this.cursor], analysis };
  }
}
