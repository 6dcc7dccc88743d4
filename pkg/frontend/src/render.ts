import { vertexPositions, type Point } from "./geometry.js";
import type { SessionState } from "./session.js";
import { containsDiagonal, sameDiagonal, type Diagonal } from "./types.js";

const SVG_NS = "http://www.w3.org/2000/svg";

const CELL_FILL: Record<string, string> = {
  clique: "rgba(233, 106, 64, 0.25)",
  mixed: "url(#mixed-hatch)",
};

function svgElement<K extends keyof SVGElementTagNameMap>(
  tag: K,
  attrs: Record<string, string>,
): SVGElementTagNameMap[K] {
  const node = document.createElementNS(SVG_NS, tag);
  for (const [key, value] of Object.entries(attrs)) {
    node.setAttribute(key, value);
  }
  return node;
}

function line(a: Point, b: Point, attrs: Record<string, string>): SVGLineElement {
  return svgElement("line", {
    x1: String(a.x), y1: String(a.y), x2: String(b.x), y2: String(b.y), ...attrs,
  });
}

function hatchPattern(): SVGPatternElement {
  const pattern = svgElement("pattern", {
    id: "mixed-hatch", width: "8", height: "8", patternUnits: "userSpaceOnUse",
  });
  pattern.appendChild(svgElement("rect", {
    width: "8", height: "8", fill: "rgba(201, 60, 60, 0.12)",
  }));
  pattern.appendChild(line({ x: 0, y: 8 }, { x: 8, y: 0 }, {
    stroke: "rgba(201, 60, 60, 0.45)", "stroke-width": "1.5",
  }));
  return pattern;
}

export interface RenderOptions {
  size: number;
  onDiagonalClick?: (d: Diagonal) => void;
}

/**
 * Draw the whole scene from the session state. Everything highlighted here
 * is read off the last analysis report; the renderer adds no mathematics
 * of its own.
 */
export function renderScene(
  svg: SVGSVGElement,
  state: SessionState,
  options: RenderOptions,
): void {
  const { report, document: doc } = state;
  const n = doc.polygon_size;
  const span = options.size;
  const center = { x: span / 2, y: span / 2 };
  const radius = span / 2 - 36;
  const positions = vertexPositions(n, center, radius);

  svg.replaceChildren();
  svg.setAttribute("viewBox", `0 0 ${span} ${span}`);
  const defs = svgElement("defs", {});
  defs.appendChild(hatchPattern());
  svg.appendChild(defs);

  const at = (v: number): Point => positions[v] ?? center;

  // tinted cells first so members draw on top; triangles stay untinted
  for (const cell of report.cells) {
    if (cell.kind === "empty" || cell.vertices.length < 4) continue;
    const path = cell.vertices.map((v) => `${at(v).x},${at(v).y}`).join(" ");
    svg.appendChild(svgElement("polygon", {
      points: path,
      fill: CELL_FILL[cell.kind] ?? "none",
      stroke: "none",
    }));
  }

  // polygon boundary
  for (let v = 0; v < n; v++) {
    svg.appendChild(line(at(v), at((v + 1) % n), {
      stroke: "#888", "stroke-width": "1.5",
    }));
  }

  const ghost = state.lastMutation?.removed ?? null;
  if (ghost) {
    svg.appendChild(line(at(ghost[0]), at(ghost[1]), {
      stroke: "#bbb", "stroke-width": "2", "stroke-dasharray": "2 6",
    }));
  }

  for (const d of doc.diagonals) {
    const dissecting = containsDiagonal(report.dissecting, d);
    const selected = state.selection !== null && sameDiagonal(d, state.selection);
    const projective = containsDiagonal(report.ext_projectives, d);
    const stroke = selected ? "#0b69d4" : dissecting ? "#2c8a43" : "#333";
    const chord = line(at(d[0]), at(d[1]), {
      stroke,
      "stroke-width": selected ? "4" : dissecting ? "3" : "2",
      "stroke-linecap": "round",
    });
    if (projective && options.onDiagonalClick) {
      chord.setAttribute("cursor", "pointer");
      chord.addEventListener("click", (event) => {
        event.stopPropagation();
        options.onDiagonalClick?.(d);
      });
      // invisible fat hit area under the same handler
      const hit = line(at(d[0]), at(d[1]), {
        stroke: "transparent", "stroke-width": "12",
      });
      hit.setAttribute("cursor", "pointer");
      hit.addEventListener("click", (event) => {
        event.stopPropagation();
        options.onDiagonalClick?.(d);
      });
      svg.appendChild(chord);
      svg.appendChild(hit);
      continue;
    }
    svg.appendChild(chord);
  }

  // preview of the diagonal a mutation of the selection would insert
  const preview = previewInsertion(state);
  if (preview) {
    svg.appendChild(line(at(preview[0]), at(preview[1]), {
      stroke: "#0b69d4", "stroke-width": "2", "stroke-dasharray": "6 4",
    }));
  }

  for (let v = 0; v < n; v++) {
    const p = at(v);
    svg.appendChild(svgElement("circle", {
      cx: String(p.x), cy: String(p.y), r: "4", fill: "#444",
    }));
    const direction = {
      x: (p.x - center.x) / radius || 0,
      y: (p.y - center.y) / radius || 0,
    };
    const label = svgElement("text", {
      x: String(p.x + direction.x * 18),
      y: String(p.y + direction.y * 18 + 4),
      "text-anchor": "middle",
      "font-size": "13",
    });
    label.textContent = String(v);
    svg.appendChild(label);
  }
}

/** Outside diagonal of the selection's left triangle, for the dashed hint. */
function previewInsertion(state: SessionState): Diagonal | null {
  if (!state.selection) return null;
  for (const triangle of state.report.weak_ar_left) {
    if (sameDiagonal(triangle.member, state.selection)) return triangle.outside;
  }
  return null;
}
