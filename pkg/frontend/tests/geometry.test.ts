import { describe, expect, it } from "vitest";

import {
  allDiagonals,
  diagonalAtPoint,
  vertexAtPoint,
  vertexPositions,
} from "../src/geometry.js";

const CENTER = { x: 100, y: 100 };

describe("vertexPositions", () => {
  it("places every vertex on the circle", () => {
    const points = vertexPositions(7, CENTER, 50);
    expect(points).toHaveLength(7);
    for (const p of points) {
      expect(Math.hypot(p.x - CENTER.x, p.y - CENTER.y)).toBeCloseTo(50, 6);
    }
  });

  it("starts at the top and runs anticlockwise on screen", () => {
    const points = vertexPositions(4, CENTER, 50);
    expect(points[0]!.x).toBeCloseTo(100, 6);
    expect(points[0]!.y).toBeCloseTo(50, 6);
    // anticlockwise with y down: vertex 1 sits left of vertex 0
    expect(points[1]!.x).toBeLessThan(points[0]!.x);
  });
});

describe("allDiagonals", () => {
  it("matches the n(n-3)/2 count and skips edges", () => {
    for (const n of [4, 6, 9, 12]) {
      const diagonals = allDiagonals(n);
      expect(diagonals).toHaveLength((n * (n - 3)) / 2);
      expect(diagonals).not.toContainEqual([0, 1]);
      expect(diagonals).not.toContainEqual([0, n - 1]);
    }
  });
});

describe("diagonalAtPoint", () => {
  it("finds the chord under the cursor", () => {
    const points = vertexPositions(6, CENTER, 50);
    const a = points[0]!;
    const b = points[2]!;
    const mid = { x: (a.x + b.x) / 2, y: (a.y + b.y) / 2 };
    expect(diagonalAtPoint(mid, points)).toEqual([0, 2]);
  });

  it("returns null far away from every chord", () => {
    const points = vertexPositions(6, CENTER, 50);
    expect(diagonalAtPoint({ x: 400, y: 400 }, points)).toBeNull();
  });

  it("prefers the nearest of two crossing chords", () => {
    const points = vertexPositions(8, CENTER, 80);
    const a = points[1]!;
    const b = points[4]!;
    const nearEnd = {
      x: a.x + (b.x - a.x) * 0.05,
      y: a.y + (b.y - a.y) * 0.05,
    };
    expect(diagonalAtPoint(nearEnd, points, 20)).toEqual([1, 4]);
  });
});

describe("vertexAtPoint", () => {
  it("hits a vertex within its radius and misses outside", () => {
    const points = vertexPositions(5, CENTER, 50);
    const p = points[3]!;
    expect(vertexAtPoint({ x: p.x + 4, y: p.y - 4 }, points)).toBe(3);
    expect(vertexAtPoint(CENTER, points)).toBeNull();
  });
});
