"""Stateless HTTP API exposing layout measurement and ranking.

Every response is a pure function of the request: layouts live client-side
and nothing is persisted. Request and response bodies are UTF-8 JSON.
"""

from __future__ import annotations

import json
from typing import Any

from fastapi import FastAPI, Request, Response

from . import __version__
from .formats import (
    MalformedSyntaxError,
    SchemaError,
    layout_from_document,
    render_report,
)
from .metrics import detail as measure_with_detail
from .metrics import measure, rank
from .model import Layout, LayoutValidationError

#: Generous for thousands of rectangles while blocking abuse.
MAX_BODY_BYTES = 1 << 20

MAX_RANK_ENTRIES = 64


class ApiError(Exception):
    """Maps a request problem onto the wire error document."""

    def __init__(self, status: int, code: str, message: str, field: str | None = None):
        self.status = status
        self.code = code
        self.message = message
        self.field = field
        super().__init__(message)

    def to_response(self) -> Response:
        body: dict[str, Any] = {"error": self.code, "message": self.message}
        if self.field is not None:
            body["field"] = self.field
        return Response(
            json.dumps(body) + "\n",
            status_code=self.status,
            media_type="application/json",
        )


async def _read_json_body(request: Request) -> bytes:
    declared = request.headers.get("content-length")
    if declared is not None and declared.isdigit() and int(declared) > MAX_BODY_BYTES:
        raise ApiError(413, "too_large", f"request body exceeds {MAX_BODY_BYTES} bytes")
    content_type = request.headers.get("content-type", "").split(";")[0].strip().lower()
    if content_type != "application/json":
        raise ApiError(400, "malformed", "content-type must be application/json")
    body = await request.body()
    if len(body) > MAX_BODY_BYTES:
        raise ApiError(413, "too_large", f"request body exceeds {MAX_BODY_BYTES} bytes")
    return body


def _decode_json(body: bytes) -> Any:
    try:
        return json.loads(body)
    except json.JSONDecodeError as exc:
        raise ApiError(400, "malformed", f"invalid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})") from None


def _layout_or_api_error(raw: Any, field_prefix: str = "") -> Layout:
    try:
        return layout_from_document(raw)
    except MalformedSyntaxError as exc:
        raise ApiError(400, "malformed", str(exc)) from None
    except SchemaError as exc:
        raise ApiError(400, "schema", str(exc), field=field_prefix + exc.field) from None
    except LayoutValidationError as exc:
        offending = next((v.object_id for v in exc.violations if v.object_id), None)
        field = field_prefix + offending if offending else (field_prefix or None)
        raise ApiError(400, "validation", str(exc), field=field) from None


def create_app(allow_any_origin: bool = False) -> FastAPI:
    """Build the API application.

    ``allow_any_origin`` adds a permissive CORS policy and exists for
    development only; production deployments serve the UI same-origin.
    """
    app = FastAPI(title="sda", docs_url=None, redoc_url=None, openapi_url=None)

    if allow_any_origin:
        from fastapi.middleware.cors import CORSMiddleware

        app.add_middleware(
            CORSMiddleware,
            allow_origins=["*"],
            allow_methods=["*"],
            allow_headers=["*"],
        )

    @app.post("/api/measure")
    async def api_measure(request: Request, detail: bool = False) -> Response:
        try:
            body = await _read_json_body(request)
            layout = _layout_or_api_error(_decode_json(body))
            report = measure_with_detail(layout) if detail else measure(layout)
            payload = render_report(report, "json", detail=detail)
        except ApiError as exc:
            return exc.to_response()
        except Exception as exc:  # pragma: no cover - never for valid input
            return ApiError(500, "internal", f"internal error: {exc}").to_response()
        return Response(payload, media_type="application/json")

    @app.post("/api/rank")
    async def api_rank(request: Request) -> Response:
        try:
            body = await _read_json_body(request)
            data = _decode_json(body)
            if not isinstance(data, dict):
                raise ApiError(400, "schema", "body must be a JSON object", field="$")
            unknown = set(data) - {"layouts"}
            if unknown:
                raise ApiError(400, "schema", "unknown key", field=sorted(unknown)[0])
            entries = data.get("layouts")
            if not isinstance(entries, list) or not (1 <= len(entries) <= MAX_RANK_ENTRIES):
                raise ApiError(
                    400,
                    "schema",
                    f"layouts must be an array of 1..{MAX_RANK_ENTRIES} entries",
                    field="layouts",
                )
            scored: list[tuple[str, float]] = []
            seen: set[str] = set()
            for i, entry in enumerate(entries):
                path = f"layouts[{i}]"
                if not isinstance(entry, dict) or set(entry) != {"id", "layout"}:
                    raise ApiError(400, "schema", "entry must have exactly the keys id and layout", field=path)
                entry_id = entry["id"]
                if not isinstance(entry_id, str):
                    raise ApiError(400, "schema", "id must be a string", field=f"{path}.id")
                if entry_id in seen:
                    raise ApiError(400, "schema", f"duplicate layout id {entry_id!r}", field=f"{path}.id")
                seen.add(entry_id)
                try:
                    layout = _layout_or_api_error(entry["layout"], field_prefix=f"{path}.layout.")
                except ApiError as exc:
                    exc.message = f"layout {entry_id!r}: {exc.message}"
                    raise
                scored.append((entry_id, measure(layout).aesthetic_value))
            ranking = [
                {"id": r.id, "aesthetic_value": r.value, "rank": r.rank}
                for r in rank(scored)
            ]
            payload = json.dumps({"ranking": ranking}, ensure_ascii=False) + "\n"
        except ApiError as exc:
            return exc.to_response()
        except Exception as exc:  # pragma: no cover - never for valid input
            return ApiError(500, "internal", f"internal error: {exc}").to_response()
        return Response(payload, media_type="application/json")

    @app.api_route("/api/health", methods=["GET", "HEAD"])
    def api_health() -> dict[str, str]:
        return {"status": "ok", "version": __version__}

    return app
