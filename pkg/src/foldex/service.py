"""HTTP facade for interactive parameter tuning.

Holds uploaded polyline datasets in memory (optionally persisted to a
directory), recomputes the full fold report when parameters change, and
serves the browser UI bundle. Analysis responses are cached (LRU, 64
entries) keyed by dataset id and parameters, so slider scrubbing that
revisits recent values returns byte-identical bodies instantly.
"""
from __future__ import annotations

import json
import threading
import uuid
from collections import OrderedDict
from pathlib import Path

from fastapi import FastAPI, Request, Response
from fastapi.middleware.cors import CORSMiddleware
from fastapi.responses import HTMLResponse, JSONResponse
from fastapi.staticfiles import StaticFiles

from .errors import FoldexError
from .folds import DetectionParams, detect_folds
from .formats import ParseError, polyline_from_dict, polyline_to_dict, report_to_dict
from .geometry import Polyline
from .maximal import MaximalParams
from .minimal import MinimalParams

CACHE_CAPACITY = 64

_PLACEHOLDER = """<!doctype html>
<html><head><title>foldex</title></head>
<body><h1>foldex tuning service</h1>
<p>No UI bundle is configured. Build the frontend and pass its dist
directory via --static, or use the JSON API under /api/.</p>
</body></html>"""


class DatasetStore:
    """Thread-safe id -> polyline map with optional directory persistence."""

    def __init__(self, persist_dir: str | None = None):
        self._lock = threading.Lock()
        self._data: dict[str, tuple[str, Polyline]] = {}
        self._persist = Path(persist_dir) if persist_dir else None
        if self._persist:
            self._persist.mkdir(parents=True, exist_ok=True)
            for f in sorted(self._persist.glob("*.json")):
                try:
                    doc = json.loads(f.read_text(encoding="utf-8"))
                    self._data[f.stem] = (doc.get("name", ""), polyline_from_dict(doc))
                except (json.JSONDecodeError, FoldexError):
                    continue

    def add(self, name: str, p: Polyline) -> str:
        ds_id = uuid.uuid4().hex
        with self._lock:
            self._data[ds_id] = (name, p)
        if self._persist:
            (self._persist / f"{ds_id}.json").write_text(
                json.dumps(polyline_to_dict(p, name=name)), encoding="utf-8")
        return ds_id

    def get(self, ds_id: str) -> tuple[str, Polyline] | None:
        with self._lock:
            return self._data.get(ds_id)

    def list_ids(self) -> list[str]:
        with self._lock:
            return list(self._data)


class ReportCache:
    def __init__(self, capacity: int = CACHE_CAPACITY):
        self._lock = threading.Lock()
        self._data: OrderedDict[tuple, bytes] = OrderedDict()
        self._capacity = capacity

    def get(self, key: tuple) -> bytes | None:
        with self._lock:
            body = self._data.get(key)
            if body is not None:
                self._data.move_to_end(key)
            return body

    def put(self, key: tuple, body: bytes) -> None:
        with self._lock:
            self._data[key] = body
            self._data.move_to_end(key)
            while len(self._data) > self._capacity:
                self._data.popitem(last=False)


def _parse_params(q) -> DetectionParams:
    def num(name, default, cast=float):
        raw = q.get(name)
        if raw is None:
            return default
        try:
            return cast(raw)
        except ValueError:
            raise FoldexError(f"parameter {name}={raw!r} is not a number")

    return DetectionParams(
        minimal=MinimalParams(
            tau=num("tau", MinimalParams().tau),
            smooth_factor=num("smooth", MinimalParams().smooth_factor),
            samples=num("samples", 0, int),
        ),
        maximal=MaximalParams(
            delta=num("delta", 1.0),
            side=q.get("side", "auto"),
            rho=num("rho", 3.0),
            chord_slack=num("chord_slack", 0.05),
        ),
        containment_mode=q.get("mode", "overlap"),
    )


def _params_key(params: DetectionParams) -> tuple:
    return (params.minimal.tau, params.minimal.smooth_factor,
            params.minimal.samples, params.maximal.delta, params.maximal.side,
            params.maximal.rho, params.maximal.chord_slack,
            params.containment_mode)


def create_app(static_dir: str | None = None,
               persist_dir: str | None = None) -> FastAPI:
    app = FastAPI(title="foldex tuning service")
    app.add_middleware(
        CORSMiddleware,
        allow_origin_regex=r"http://(localhost|127\.0\.0\.1)(:\d+)?",
        allow_methods=["*"],
        allow_headers=["*"],
    )
    store = DatasetStore(persist_dir)
    cache = ReportCache()

    @app.post("/api/datasets", status_code=201)
    async def upload_dataset(request: Request):
        try:
            doc = await request.json()
        except json.JSONDecodeError:
            return JSONResponse({"error": "invalid JSON body"}, status_code=400)
        try:
            p = polyline_from_dict(doc)
        except (ParseError, FoldexError) as e:
            return JSONResponse({"error": str(e)}, status_code=400)
        name = doc.get("name", "") if isinstance(doc, dict) else ""
        return {"id": store.add(name, p)}

    @app.get("/api/datasets")
    def list_datasets():
        return {"ids": store.list_ids()}

    @app.get("/api/datasets/{ds_id}/analysis")
    def analysis(ds_id: str, request: Request):
        entry = store.get(ds_id)
        if entry is None:
            return JSONResponse({"error": "unknown dataset"}, status_code=404)
        try:
            params = _parse_params(request.query_params)
        except FoldexError as e:
            return JSONResponse({"error": str(e)}, status_code=400)
        key = (ds_id, _params_key(params))
        body = cache.get(key)
        if body is None:
            _, polyline = entry
            try:
                report = detect_folds(polyline, params)
            except FoldexError as e:
                return JSONResponse({"error": str(e)}, status_code=400)
            body = json.dumps(report_to_dict(report)).encode("utf-8")
            cache.put(key, body)
        return Response(content=body, media_type="application/json")

    static = Path(static_dir) if static_dir else None
    if static and static.is_dir():
        app.mount("/", StaticFiles(directory=str(static), html=True), name="ui")
    else:
        @app.get("/", response_class=HTMLResponse)
        @app.head("/", response_class=HTMLResponse)
        def index():
            return _PLACEHOLDER

    return app
