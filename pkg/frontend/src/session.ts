import { ApiClient } from "./api.js";
import {
  canonicalDiagonal,
  canonicalDocument,
  containsDiagonal,
  type AnalysisReport,
  type DiagramDocument,
  type Diagonal,
  type MutationDirection,
  type MutationReport,
} from "./types.js";

export type SessionAction =
  | { kind: "load"; document: DiagramDocument }
  | { kind: "toggle"; diagonal: Diagonal; autoClose: boolean }
  | { kind: "mutate"; diagonal: Diagonal; direction: MutationDirection };

/** One step of the session: the action and the canonical document after it. */
export interface HistoryEntry {
  action: SessionAction;
  document: DiagramDocument;
}

export interface SessionState {
  document: DiagramDocument;
  report: AnalysisReport;
  selection: Diagonal | null;
  lastMutation: MutationReport | null;
  /** set when the latest mutation left a non-closed diagram */
  warning: string | null;
}

/**
 * Why a replacement lost closure: the removed member bordered a cell that
 * still holds internal diagonals. Both facts come from service responses
 * (the pre-mutation analysis and the mutation report).
 */
function describeFailure(before: AnalysisReport, removed: Diagonal): string {
  const cell = before.cells.find(
    (c) =>
      c.kind !== "empty" &&
      c.vertices.includes(removed[0]) &&
      c.vertices.includes(removed[1]),
  );
  if (!cell) return "mutation result is not closed under extensions; undo to revert";
  return (
    `replacing ${removed[0]}-${removed[1]} broke closure: it bordered the ` +
    `${cell.kind} cell (${cell.vertices.join(", ")}) with ${cell.vertices.length} ` +
    "vertices; undo to revert"
  );
}

/**
 * Drives one exploration session against the service. Every document shown
 * to the user is canonical, every highlight comes from the last analysis
 * response, and the history stack replays losslessly from the start.
 *
 * Requests are funneled through a single queue so at most one is in flight;
 * rapid clicks are applied in order.
 */
export class ExplorerSession {
  private doc: DiagramDocument;
  private report: AnalysisReport;
  private history: HistoryEntry[] = [];
  private redoStack: HistoryEntry[] = [];
  private selection: Diagonal | null = null;
  private lastMutation: MutationReport | null = null;
  private warning: string | null = null;
  private queue: Promise<unknown> = Promise.resolve();

  private constructor(
    private readonly client: ApiClient,
    document: DiagramDocument,
    report: AnalysisReport,
  ) {
    this.doc = document;
    this.report = report;
    this.history.push({ action: { kind: "load", document }, document });
  }

  static async open(client: ApiClient, document: DiagramDocument): Promise<ExplorerSession> {
    const canonical = canonicalDocument(document);
    const report = await client.analyze(canonical);
    return new ExplorerSession(client, canonical, report);
  }

  static empty(client: ApiClient, polygonSize: number): Promise<ExplorerSession> {
    return ExplorerSession.open(client, { polygon_size: polygonSize, diagonals: [] });
  }

  get state(): SessionState {
    return {
      document: this.doc,
      report: this.report,
      selection: this.selection,
      lastMutation: this.lastMutation,
      warning: this.warning,
    };
  }

  get historyEntries(): readonly HistoryEntry[] {
    return this.history;
  }

  get canUndo(): boolean {
    return this.history.length > 1;
  }

  get canRedo(): boolean {
    return this.redoStack.length > 0;
  }

  private enqueue<T>(task: () => Promise<T>): Promise<T> {
    const next = this.queue.then(task, task);
    this.queue = next.catch(() => undefined);
    return next;
  }

  select(diagonal: Diagonal | null): void {
    this.selection = diagonal === null ? null : canonicalDiagonal(diagonal);
  }

  /**
   * Add or remove one diagonal. With autoClose the document is replaced by
   * its Ptolemy closure, so the screen always shows a closed diagram.
   */
  toggle(diagonal: Diagonal, autoClose: boolean): Promise<SessionState> {
    return this.enqueue(async () => {
      const next = await this.applyToggle(this.doc, diagonal, autoClose);
      await this.commit(
        { kind: "toggle", diagonal: canonicalDiagonal(diagonal), autoClose },
        next,
      );
      this.lastMutation = null;
      this.warning = null;
      return this.state;
    });
  }

  /** Replace the selected member; the report always describes the result. */
  mutateSelected(direction: MutationDirection): Promise<SessionState> {
    return this.enqueue(async () => {
      if (!this.selection) throw new Error("no diagonal selected");
      const mutation = await this.client.mutate(this.doc, this.selection, direction);
      const before = this.report;
      await this.commit(
        { kind: "mutate", diagonal: this.selection, direction },
        canonicalDocument(mutation.result),
      );
      this.lastMutation = mutation;
      this.selection = canonicalDiagonal(mutation.inserted);
      this.warning = mutation.extension_closed
        ? null
        : describeFailure(before, mutation.removed);
      return this.state;
    });
  }

  undo(): Promise<SessionState> {
    return this.enqueue(async () => {
      if (this.history.length <= 1) return this.state;
      const undone = this.history.pop();
      if (undone) this.redoStack.push(undone);
      await this.restoreTop();
      return this.state;
    });
  }

  redo(): Promise<SessionState> {
    return this.enqueue(async () => {
      const entry = this.redoStack.pop();
      if (!entry) return this.state;
      this.history.push(entry);
      await this.restoreTop();
      return this.state;
    });
  }

  /**
   * Re-derive every document in the history by replaying its actions from
   * the initial load through the service. The result must match the stored
   * documents byte for byte; used to audit that no state was invented
   * client-side.
   */
  replay(): Promise<DiagramDocument[]> {
    return this.enqueue(async () => {
      const first = this.history[0];
      if (!first || first.action.kind !== "load") {
        throw new Error("history must start with a load action");
      }
      let doc = canonicalDocument(first.action.document);
      const reproduced: DiagramDocument[] = [doc];
      for (const entry of this.history.slice(1)) {
        doc = await this.applyAction(doc, entry.action);
        reproduced.push(doc);
      }
      return reproduced;
    });
  }

  private async applyAction(
    doc: DiagramDocument,
    action: SessionAction,
  ): Promise<DiagramDocument> {
    switch (action.kind) {
      case "load":
        return canonicalDocument(action.document);
      case "toggle":
        return this.applyToggle(doc, action.diagonal, action.autoClose);
      case "mutate": {
        const report = await this.client.mutate(doc, action.diagonal, action.direction);
        return canonicalDocument(report.result);
      }
    }
  }

  private async applyToggle(
    doc: DiagramDocument,
    diagonal: Diagonal,
    autoClose: boolean,
  ): Promise<DiagramDocument> {
    const target = canonicalDiagonal(diagonal);
    const present = containsDiagonal(doc.diagonals, target);
    const diagonals = present
      ? doc.diagonals.filter((d) => !(d[0] === target[0] && d[1] === target[1]))
      : [...doc.diagonals, target];
    let next = canonicalDocument({ polygon_size: doc.polygon_size, diagonals });
    if (autoClose) next = canonicalDocument(await this.client.closure(next));
    return next;
  }

  /** Push a history step, adopt the document, and fetch its analysis. */
  private async commit(action: SessionAction, document: DiagramDocument): Promise<void> {
    this.history.push({ action, document });
    this.redoStack = [];
    this.doc = document;
    this.report = await this.client.analyze(document);
    if (this.selection && !containsDiagonal(document.diagonals, this.selection)) {
      this.selection = null;
    }
  }

  private async restoreTop(): Promise<void> {
    const top = this.history[this.history.length - 1];
    if (!top) return;
    this.doc = top.document;
    this.report = await this.client.analyze(top.document);
    this.lastMutation = null;
    this.warning = null;
    if (this.selection && !containsDiagonal(top.document.diagonals, this.selection)) {
      this.selection = null;
    }
  }
}
