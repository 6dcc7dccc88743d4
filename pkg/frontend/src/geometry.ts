import type { Diagonal } from "./types.js";

export interface Point {
  x: number;
  y: number;
}

/**
 * Positions of the polygon vertices, anticlockwise on screen, vertex 0 at
 * the top. SVG's y axis points down, so anticlockwise means subtracting
 * the angle step.
 */
export function vertexPositions(
  count: number,
  center: Point,
  radius: number,
): Point[] {
  const points: Point[] = [];
  for (let k = 0; k < count; k++) {
    const angle = Math.PI / 2 + (2 * Math.PI * k) / count;
    points.push({
      x: center.x + radius * Math.cos(angle),
      y: center.y - radius * Math.sin(angle),
    });
  }
  return points;
}

function distanceToSegment(p: Point, a: Point, b: Point): number {
  const abx = b.x - a.x;
  const aby = b.y - a.y;
  const length2 = abx * abx + aby * aby;
  const t = length2 === 0
    ? 0
    : Math.max(0, Math.min(1, ((p.x - a.x) * abx + (p.y - a.y) * aby) / length2));
  const dx = p.x - (a.x + abx * t);
  const dy = p.y - (a.y + aby * t);
  return Math.hypot(dx, dy);
}

/** All diagonals of the polygon (edges excluded), ascending pairs. */
export function allDiagonals(count: number): Diagonal[] {
  const result: Diagonal[] = [];
  for (let u = 0; u < count; u++) {
    for (let v = u + 2; v < count; v++) {
      if (u === 0 && v === count - 1) continue;
      result.push([u, v]);
    }
  }
  return result;
}

/**
 * The diagonal whose chord is nearest the click, or null when the click is
 * further than the threshold from every chord.
 */
export function diagonalAtPoint(
  point: Point,
  positions: Point[],
  threshold = 10,
): Diagonal | null {
  let best: Diagonal | null = null;
  let bestDistance = threshold;
  for (const [u, v] of allDiagonals(positions.length)) {
    const a = positions[u];
    const b = positions[v];
    if (!a || !b) continue;
    const distance = distanceToSegment(point, a, b);
    if (distance < bestDistance) {
      bestDistance = distance;
      best = [u, v];
    }
  }
  return best;
}

/** Vertex index within the click radius, or null. */
export function vertexAtPoint(
  point: Point,
  positions: Point[],
  radius = 12,
): number | null {
  for (let i = 0; i < positions.length; i++) {
    const pos = positions[i];
    if (pos && Math.hypot(point.x - pos.x, point.y - pos.y) <= radius) return i;
  }
  return null;
}
