import type {
  AnalysisReport,
  DiagramDocument,
  Diagonal,
  MutationDirection,
  MutationReport,
  QuiverData,
} from "./types.js";

/** Error body sent by the service for rejected requests. */
export class ApiError extends Error {
  constructor(
    readonly code: string,
    detail: string,
    readonly witness: Diagonal | null = null,
  ) {
    super(detail);
    this.name = "ApiError";
  }
}

interface ErrorBody {
  error?: unknown;
  detail?: unknown;
  witness?: unknown;
}

function toApiError(status: number, body: unknown): ApiError {
  const data = (typeof body === "object" && body !== null ? body : {}) as ErrorBody;
  const code = typeof data.error === "string" ? data.error : `HTTP_${status}`;
  const detail = typeof data.detail === "string" ? data.detail : "request failed";
  let witness: Diagonal | null = null;
  if (
    Array.isArray(data.witness) &&
    data.witness.length === 2 &&
    data.witness.every((v) => typeof v === "number")
  ) {
    witness = [data.witness[0], data.witness[1]] as Diagonal;
  }
  return new ApiError(code, detail, witness);
}

/**
 * Thin client for the diagram service. All mathematical facts shown in the
 * UI come from these calls; nothing is recomputed locally.
 */
export class ApiClient {
  constructor(
    private readonly baseUrl: string = "",
    private readonly fetchFn: typeof fetch = fetch,
  ) {}

  private async request<T>(path: string, init?: RequestInit): Promise<T> {
    const response = await this.fetchFn(`${this.baseUrl}${path}`, init);
    const body: unknown = await response.json();
    if (!response.ok) throw toApiError(response.status, body);
    return body as T;
  }

  private post<T>(path: string, payload: unknown): Promise<T> {
    return this.request<T>(path, {
      method: "POST",
      headers: { "content-type": "application/json" },
      body: JSON.stringify(payload),
    });
  }

  analyze(document: DiagramDocument): Promise<AnalysisReport> {
    return this.post("/api/analyze", document);
  }

  closure(document: DiagramDocument): Promise<DiagramDocument> {
    return this.post("/api/closure", document);
  }

  mutate(
    document: DiagramDocument,
    diagonal: Diagonal,
    direction: MutationDirection,
  ): Promise<MutationReport> {
    return this.post("/api/mutate", { document, diagonal, direction });
  }

  quiver(size: number): Promise<QuiverData> {
    return this.request(`/api/quiver?size=${size}`);
  }
}
