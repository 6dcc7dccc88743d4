/** Wire types mirroring the JSON emitted by the analysis service. */

export type Diagonal = [number, number];

export interface DiagramDocument {
  polygon_size: number;
  diagonals: Diagonal[];
}

export type CellKind = "empty" | "clique" | "mixed";

export interface CellInfo {
  vertices: number[];
  kind: CellKind;
}

export interface TriangleInfo {
  direction: "left" | "right";
  outside: Diagonal;
  middle: Diagonal[];
  member: Diagonal;
}

export interface AnalysisReport {
  ptolemy: boolean;
  extension_closed: boolean;
  dissecting: Diagonal[];
  cells: CellInfo[];
  ext_projectives: Diagonal[];
  weak_ar_left: TriangleInfo[];
  weak_ar_right: TriangleInfo[];
  mutable_two_empty_cells: Diagonal[];
}

export interface CoverMutationInfo {
  cover_subcategory: Diagonal[];
  cover_summands: Diagonal[];
  cover_in_subcategory: boolean;
  cover_is_precover: boolean;
  cover_is_right_minimal: boolean;
  cocone_of_cover: Diagonal;
  equals_inserted: boolean;
  reason: string;
}

export interface MutationReport {
  input: DiagramDocument;
  removed: Diagonal;
  inserted: Diagonal;
  result: DiagramDocument;
  extension_closed: boolean;
  criterion_two_empty_cells: boolean;
  inserted_ext_projective_in_result: boolean;
  cover_mutation: CoverMutationInfo | null;
}

export interface QuiverData {
  polygon_size: number;
  nodes: Diagonal[];
  arrows: [Diagonal, Diagonal][];
}

export type MutationDirection = "backward" | "forward";

/** Normalize one diagonal to ascending vertex order. */
export function canonicalDiagonal(d: Diagonal): Diagonal {
  return d[0] <= d[1] ? [d[0], d[1]] : [d[1], d[0]];
}

/**
 * Normalize a document to the exact shape the server emits: each pair
 * ascending, the list lexicographically sorted, no duplicates.
 */
export function canonicalDocument(doc: DiagramDocument): DiagramDocument {
  const pairs = doc.diagonals.map(canonicalDiagonal);
  pairs.sort((a, b) => a[0] - b[0] || a[1] - b[1]);
  const unique: Diagonal[] = [];
  for (const p of pairs) {
    const last = unique[unique.length - 1];
    if (!last || last[0] !== p[0] || last[1] !== p[1]) unique.push(p);
  }
  return { polygon_size: doc.polygon_size, diagonals: unique };
}

export function documentKey(doc: DiagramDocument): string {
  return JSON.stringify(canonicalDocument(doc));
}

export function sameDiagonal(a: Diagonal, b: Diagonal): boolean {
  const [x, y] = canonicalDiagonal(a);
  const [u, v] = canonicalDiagonal(b);
  return x === u && y === v;
}

export function containsDiagonal(list: Diagonal[], d: Diagonal): boolean {
  return list.some((m) => sameDiagonal(m, d));
}
