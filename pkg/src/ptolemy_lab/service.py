"""Stateless HTTP service wrapping the same pipeline as the CLI.

Every response body is produced by the shared serializer, so the bytes
match the CLI exactly.  Domain errors surface as 400 responses carrying the
machine-readable code, a human-readable detail, and, for role errors, the
crossing witness.
"""
from __future__ import annotations

import sys
from typing import Any

from fastapi import FastAPI, Request
from fastapi.responses import Response
from fastapi.staticfiles import StaticFiles

from .errors import DiagonalRoleError, LabError, ParseError
from .mutation import backward_replace, forward_replace
from .ptolemy import ptolemy_closure
from .serialize import (
    analysis_report,
    document_dict,
    dumps,
    mutation_report_dict,
    parse_diagonal,
    parse_document,
    quiver_dict,
)


def _json_response(payload: Any, status: int = 200) -> Response:
    return Response(
        content=dumps(payload), status_code=status, media_type="application/json"
    )


async def _decoded_body(request: Request) -> Any:
    try:
        return await request.json()
    except Exception:
        raise ParseError("request body is not valid JSON") from None


def create_app(static_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="ptolemy-lab", docs_url=None, redoc_url=None)

    @app.exception_handler(LabError)
    async def _lab_error(_request: Request, exc: LabError) -> Response:
        body: dict[str, Any] = {"error": exc.code, "detail": str(exc)}
        if isinstance(exc, DiagonalRoleError) and exc.witness is not None:
            body["witness"] = list(exc.witness)
        return _json_response(body, status=400)

    @app.post("/api/analyze")
    async def _analyze(request: Request) -> Response:
        diagram = parse_document(await _decoded_body(request))
        return _json_response(analysis_report(diagram))

    @app.post("/api/closure")
    async def _closure(request: Request) -> Response:
        diagram = parse_document(await _decoded_body(request))
        return _json_response(document_dict(ptolemy_closure(diagram)))

    @app.post("/api/mutate")
    async def _mutate(request: Request) -> Response:
        data = await _decoded_body(request)
        if not isinstance(data, dict):
            raise ParseError("mutate payload must be a JSON object")
        diagram = parse_document(data.get("document"))
        diagonal = parse_diagonal(diagram.polygon, data.get("diagonal"))
        direction = data.get("direction", "backward")
        if direction not in ("backward", "forward"):
            raise ParseError(f"direction must be backward or forward, got {direction!r}")
        mutate = backward_replace if direction == "backward" else forward_replace
        return _json_response(mutation_report_dict(mutate(diagram, diagonal)))

    @app.get("/api/quiver")
    async def _quiver(request: Request) -> Response:
        raw = request.query_params.get("size")
        if raw is None:
            raise ParseError("missing query parameter: size")
        try:
            size = int(raw)
        except ValueError:
            raise ParseError(f"size must be an integer, got {raw!r}") from None
        if size < 4:
            raise ParseError(f"size must be at least 4, got {size}")
        return _json_response(quiver_dict(size))

    if static_dir is not None:
        # mounted last so /api keeps precedence
        app.mount("/", StaticFiles(directory=static_dir, html=True), name="ui")

    return app


def run_service(host: str, port: int, static_dir: str | None) -> int:
    import uvicorn

    try:
        uvicorn.run(create_app(static_dir), host=host, port=port, log_level="warning")
    except OSError as exc:
        sys.stderr.write(f"BIND_FAILURE: {exc}\n")
        return 1
    return 0
