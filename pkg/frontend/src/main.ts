import { ApiClient, ApiError } from "./api.js";
import { diagonalAtPoint, vertexPositions } from "./geometry.js";
import { renderScene } from "./render.js";
import { ExplorerSession } from "./session.js";
import { containsDiagonal, type Diagonal } from "./types.js";

const SCENE_SIZE = 520;

function el<T extends HTMLElement>(id: string): T {
  const node = document.getElementById(id);
  if (!node) throw new Error(`missing element #${id}`);
  return node as T;
}

async function boot(): Promise<void> {
  const svg = el<HTMLElement>("scene") as unknown as SVGSVGElement;
  const sizeInput = el<HTMLInputElement>("polygon-size");
  const autoClose = el<HTMLInputElement>("auto-close");
  const status = el<HTMLElement>("status");
  const banner = el<HTMLElement>("banner");
  const backwardButton = el<HTMLButtonElement>("mutate-backward");
  const forwardButton = el<HTMLButtonElement>("mutate-forward");
  const undoButton = el<HTMLButtonElement>("undo");
  const redoButton = el<HTMLButtonElement>("redo");
  const resetButton = el<HTMLButtonElement>("reset");
  const downloadLink = el<HTMLAnchorElement>("download");

  const client = new ApiClient("");
  let session = await ExplorerSession.empty(client, Number(sizeInput.value));

  function showError(message: string): void {
    banner.textContent = message;
    banner.classList.toggle("hidden", message === "");
  }

  function describe(): string {
    const { document: doc, report, selection } = session.state;
    const parts = [
      `${doc.diagonals.length} diagonals`,
      report.ptolemy ? "closed under extensions" : "NOT closed",
      `${report.dissecting.length} dissecting`,
    ];
    if (selection) parts.push(`selected ${selection[0]}-${selection[1]}`);
    return parts.join(" · ");
  }

  function redraw(): void {
    renderScene(svg, session.state, {
      size: SCENE_SIZE,
      onDiagonalClick: (d) => {
        session.select(d);
        redraw();
      },
    });
    status.textContent = describe();
    const warning = session.state.warning;
    showError(warning ?? "");
    const selected = session.state.selection;
    const selectable =
      selected !== null &&
      containsDiagonal(session.state.report.ext_projectives, selected);
    backwardButton.disabled = !selectable;
    forwardButton.disabled = !selectable;
    undoButton.disabled = !session.canUndo;
    redoButton.disabled = !session.canRedo;
    downloadLink.href =
      "data:application/json;charset=utf-8," +
      encodeURIComponent(JSON.stringify(session.state.document, null, 2) + "\n");
  }

  async function run(task: () => Promise<unknown>): Promise<void> {
    try {
      await task();
      redraw();
    } catch (error) {
      if (error instanceof ApiError) {
        const witness = error.witness
          ? ` (crossing witness ${error.witness[0]}-${error.witness[1]})`
          : "";
        showError(`${error.code}: ${error.message}${witness}`);
      } else {
        showError(String(error));
      }
    }
  }

  svg.addEventListener("click", (event) => {
    const rect = svg.getBoundingClientRect();
    const scale = SCENE_SIZE / rect.width;
    const point = {
      x: (event.clientX - rect.left) * scale,
      y: (event.clientY - rect.top) * scale,
    };
    const n = session.state.document.polygon_size;
    const positions = vertexPositions(n, { x: SCENE_SIZE / 2, y: SCENE_SIZE / 2 }, SCENE_SIZE / 2 - 36);
    const diagonal: Diagonal | null = diagonalAtPoint(point, positions);
    if (!diagonal) return;
    if (containsDiagonal(session.state.document.diagonals, diagonal)) {
      // clicking a member chord selects it; projective chords already
      // handled their own click, so this covers crossed members
      session.select(diagonal);
      redraw();
      return;
    }
    void run(() => session.toggle(diagonal, autoClose.checked));
  });

  backwardButton.addEventListener("click", () => {
    void run(() => session.mutateSelected("backward"));
  });
  forwardButton.addEventListener("click", () => {
    void run(() => session.mutateSelected("forward"));
  });
  undoButton.addEventListener("click", () => {
    void run(() => session.undo());
  });
  redoButton.addEventListener("click", () => {
    void run(() => session.redo());
  });
  resetButton.addEventListener("click", () => {
    void run(async () => {
      session = await ExplorerSession.empty(client, Number(sizeInput.value));
    });
  });
  sizeInput.addEventListener("change", () => {
    const size = Number(sizeInput.value);
    if (!Number.isInteger(size) || size < 4 || size > 24) {
      showError("polygon size must be between 4 and 24");
      return;
    }
    void run(async () => {
      session = await ExplorerSession.empty(client, size);
    });
  });

  redraw();
}

void boot().catch((error) => {
  const banner = document.getElementById("banner");
  if (banner) {
    banner.textContent = `failed to reach the service: ${error}`;
    banner.classList.remove("hidden");
  }
});
