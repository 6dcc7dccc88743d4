import { spawn, type ChildProcess } from "node:child_process";
import { afterAll, beforeAll, describe, expect, it } from "vitest";

import { ApiClient, ApiError } from "../src/api.js";
import { ExplorerSession } from "../src/session.js";
import { documentKey, type DiagramDocument } from "../src/types.js";

const PYTHON = process.env.PTOLEMY_LAB_PYTHON ?? "python3";

const SHOWCASE: DiagramDocument = {
  polygon_size: 12,
  diagonals: [
    [1, 3], [1, 9], [1, 11], [3, 5], [3, 9], [3, 11], [5, 7], [7, 9], [9, 11],
  ],
};

const GOLDEN_RESULT: DiagramDocument = {
  polygon_size: 12,
  diagonals: [[1, 3], [1, 11], [3, 5], [5, 7], [5, 11], [7, 9], [9, 11]],
};

let server: ChildProcess | null = null;
let client: ApiClient;

async function waitForServer(base: string): Promise<void> {
  const deadline = Date.now() + 15_000;
  while (Date.now() < deadline) {
    try {
      const response = await fetch(`${base}/api/quiver?size=6`);
      if (response.ok) return;
    } catch {
      // not listening yet
    }
    await new Promise((resolve) => setTimeout(resolve, 150));
  }
  throw new Error("service did not come up in time");
}

beforeAll(async () => {
  const port = 21000 + Math.floor(Math.random() * 20000);
  const base = `http://127.0.0.1:${port}`;
  server = spawn(
    PYTHON,
    ["-m", "ptolemy_lab.cli", "serve", "--host", "127.0.0.1", "--port", String(port)],
    { stdio: "ignore" },
  );
  await waitForServer(base);
  client = new ApiClient(base);
}, 20_000);

afterAll(() => {
  server?.kill();
});

describe("scripted exploration session", () => {
  it("walks the guided mutation story to the golden document", async () => {
    const session = await ExplorerSession.open(client, SHOWCASE);
    expect(session.state.report.ptolemy).toBe(true);
    expect(session.state.report.dissecting).toHaveLength(7);
    const clique = session.state.report.cells.find((c) => c.kind === "clique");
    expect(clique?.vertices).toEqual([1, 3, 9, 11]);

    // replacing the member between the clique cell and the empty square
    // loses closure: the session applies the result and warns
    session.select([3, 9]);
    let state = await session.mutateSelected("backward");
    expect(state.lastMutation?.inserted).toEqual([1, 5]);
    expect(state.lastMutation?.extension_closed).toBe(false);
    expect(state.warning).toMatch(/clique cell \(1, 3, 9, 11\)/);
    expect(state.report.ptolemy).toBe(false);

    state = await session.undo();
    expect(state.warning).toBeNull();
    expect(documentKey(state.document)).toBe(documentKey(SHOWCASE));

    // emptying the clique cell re-enables the replacement
    state = await session.toggle([3, 11], true);
    state = await session.toggle([1, 9], true);
    expect(state.report.ptolemy).toBe(true);

    session.select([3, 9]);
    state = await session.mutateSelected("backward");
    expect(state.warning).toBeNull();
    expect(state.lastMutation?.inserted).toEqual([5, 11]);
    expect(state.lastMutation?.cover_mutation?.equals_inserted).toBe(true);
    expect(documentKey(state.document)).toBe(documentKey(GOLDEN_RESULT));

    // lossless replay: re-deriving every step through the service gives
    // byte-identical documents
    const reproduced = await session.replay();
    const stored = session.historyEntries.map((entry) => entry.document);
    expect(reproduced).toHaveLength(stored.length);
    for (let i = 0; i < stored.length; i++) {
      expect(documentKey(reproduced[i]!)).toBe(documentKey(stored[i]!));
    }
  }, 30_000);

  it("reports the crossing witness when the selection cannot be replaced", async () => {
    const session = await ExplorerSession.open(client, SHOWCASE);
    session.select([3, 11]);
    const failure = await session.mutateSelected("backward").catch((e) => e);
    expect(failure).toBeInstanceOf(ApiError);
    expect((failure as ApiError).code).toBe("NOT_EXT_PROJECTIVE");
    expect((failure as ApiError).witness).toEqual([1, 9]);
    // the failed call must not advance the session
    expect(documentKey(session.state.document)).toBe(documentKey(SHOWCASE));
    expect(session.historyEntries).toHaveLength(1);
  });

  it("auto-close completes a crossing pair", async () => {
    const session = await ExplorerSession.empty(client, 6);
    await session.toggle([0, 2], true);
    const state = await session.toggle([1, 3], true);
    expect(state.document.diagonals).toEqual([[0, 2], [0, 3], [1, 3]]);
    expect(state.report.ptolemy).toBe(true);
  });

  it("toggle is an involution when auto-close is off", async () => {
    const session = await ExplorerSession.empty(client, 6);
    await session.toggle([0, 2], false);
    let state = await session.toggle([1, 3], false);
    expect(state.report.ptolemy).toBe(false);
    expect(state.report.cells.some((c) => c.kind === "mixed")).toBe(true);
    state = await session.toggle([1, 3], false);
    expect(state.document.diagonals).toEqual([[0, 2]]);
  });

  it("undo and redo restore snapshots exactly", async () => {
    const session = await ExplorerSession.empty(client, 8);
    await session.toggle([0, 2], true);
    const afterFirst = documentKey(session.state.document);
    await session.toggle([4, 6], true);
    const afterSecond = documentKey(session.state.document);

    await session.undo();
    expect(documentKey(session.state.document)).toBe(afterFirst);
    expect(session.canRedo).toBe(true);
    await session.redo();
    expect(documentKey(session.state.document)).toBe(afterSecond);
    // a fresh action clears the redo branch
    await session.undo();
    await session.toggle([1, 3], true);
    expect(session.canRedo).toBe(false);
  });
});
