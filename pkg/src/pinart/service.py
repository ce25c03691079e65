"""Stateless HTTP/JSON facade over render, lint, diff, and the catalog.

Every response is a pure function of the request body; there is no
session state, so any client (the browser editor, scripts, curl) can
interleave requests freely. Bodies use the scene interchange format.

Routes:
    GET  /api/health   -> {"ok": true}
    GET  /api/catalog  -> catalog entries with default boxes
    POST /api/render   -> {"grid", "renders", "lint"} for a scene
    POST /api/lint     -> lint report for a scene
    POST /api/diff     -> {"added", "removed", "counts"} between two scenes
"""

from __future__ import annotations

import json
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer

from .catalog import catalog_list
from .codec import ParseError, canonical_json, parse_scene, render_payload, report_payload
from .grid import diff_grids, extent_mm
from .scene import SceneValidationError, lint_scene, render_scene


class ApiError(Exception):
    def __init__(self, status: int, code: str, message: str, detail=None):
        super().__init__(message)
        self.status = status
        self.code = code
        self.message = message
        self.detail = detail

    def body(self) -> dict:
        obj = {"status": self.status, "code": self.code, "message": self.message}
        if self.detail is not None:
            obj["detail"] = self.detail
        return obj


def _catalog_body() -> dict:
    return {
        "entries": [
            {
                "name": e.name,
                "default_bbox": list(e.default_bbox_px),
                "size_mm": [
                    extent_mm(e.default_bbox_px[0]),
                    extent_mm(e.default_bbox_px[1]),
                ],
                "group": e.source,
            }
            for e in catalog_list()
        ]
    }


def _parse_body_scene(obj, field: str) -> "Scene":
    if field not in obj:
        raise ApiError(400, "bad_request", f'body is missing "{field}"')
    return _scene_from_obj(obj[field], field)


def _scene_from_obj(value, field: str):
    # round-trip through the canonical text form so parse errors carry
    # positions local to the embedded document
    try:
        return parse_scene(json.dumps(value))
    except ParseError as exc:
        raise ApiError(
            400,
            "parse_error",
            f"invalid scene in {field!r}: {exc.message}",
            detail={"line": exc.line, "column": exc.column},
        ) from None


def _handle(method: str, path: str, body: bytes) -> tuple[int, dict]:
    if method == "GET" and path == "/api/health":
        return 200, {"ok": True}
    if method == "GET" and path == "/api/catalog":
        return 200, _catalog_body()
    if method == "POST" and path in ("/api/render", "/api/lint", "/api/diff"):
        try:
            obj = json.loads(body.decode("utf-8"))
        except (UnicodeDecodeError, json.JSONDecodeError) as exc:
            raise ApiError(400, "parse_error", f"request body is not JSON: {exc}")
        if not isinstance(obj, dict):
            raise ApiError(400, "bad_request", "request body must be a JSON object")
        try:
            if path == "/api/render":
                scene = _parse_body_scene(obj, "scene")
                grid, renders = render_scene(scene)
                report = lint_scene(scene)
                return 200, render_payload(grid, renders, report)
            if path == "/api/lint":
                scene = _parse_body_scene(obj, "scene")
                return 200, report_payload(lint_scene(scene))
            before = _parse_body_scene(obj, "before")
            after = _parse_body_scene(obj, "after")
            grid_a, _ = render_scene(before)
            grid_b, _ = render_scene(after)
            diff = diff_grids(grid_a, grid_b)
            added = sorted(diff.added, key=lambda c: (c[1], c[0]))
            removed = sorted(diff.removed, key=lambda c: (c[1], c[0]))
            return 200, {
                "added": [list(p) for p in added],
                "removed": [list(p) for p in removed],
                "counts": {"added": len(added), "removed": len(removed)},
            }
        except SceneValidationError as exc:
            raise ApiError(
                422,
                "validation_error",
                "scene does not validate",
                detail=[
                    {"item": i.item_index, "message": i.message} for i in exc.issues
                ],
            ) from None
        except (KeyError, ValueError) as exc:
            msg = exc.args[0] if exc.args else str(exc)
            raise ApiError(422, "validation_error", str(msg)) from None
    raise ApiError(404, "not_found", f"no route for {method} {path}")


class _Handler(BaseHTTPRequestHandler):
    server_version = "pinart"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _respond(self, status: int, payload: dict) -> None:
        data = canonical_json(payload).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(data)

    def _run(self, method: str) -> None:
        length = int(self.headers.get("Content-Length") or 0)
        body = self.rfile.read(length) if length else b""
        try:
            status, payload = _handle(method, self.path, body)
        except ApiError as exc:
            status, payload = exc.status, exc.body()
        except Exception as exc:  # pragma: no cover - last resort
            status, payload = 500, {
                "status": 500,
                "code": "internal",
                "message": str(exc),
            }
        self._respond(status, payload)

    def do_GET(self) -> None:
        self._run("GET")

    def do_POST(self) -> None:
        self._run("POST")

    def do_OPTIONS(self) -> None:
        self.send_response(204)
        self.send_header("Access-Control-Allow-Origin", "*")
        self.send_header("Access-Control-Allow-Methods", "GET, POST, OPTIONS")
        self.send_header("Access-Control-Allow-Headers", "Content-Type")
        self.send_header("Content-Length", "0")
        self.end_headers()


def make_server(port: int) -> ThreadingHTTPServer:
    return ThreadingHTTPServer(("127.0.0.1", port), _Handler)


def serve(port: int) -> None:
    with make_server(port) as httpd:
        httpd.serve_forever()
