"""File formats: polyline documents and serialized fold reports.

Polylines travel as JSON (``{"version": 1, "vertices": [[x, y], ...]}``)
or CSV (one ``x,y`` pair per line, ``#`` comments). Reports serialize
losslessly: parsing a serialized report and re-serializing it yields the
identical document.
"""
from __future__ import annotations

import csv
import io
import json
from typing import Any

from . import __version__
from .errors import DegenerateInput, FoldexError
from .folds import DetectionParams, Fold, FoldReport
from .geometry import FOLD, MAXIMAL, MINIMAL, Interval, Polyline, build_polyline
from .maximal import MaximalParams, OffsetPolyline
from .minimal import Chirality, Extremum, MinimalParams, OrientationAnalysis
from .orientation import SampledSignal

import numpy as np

POLYLINE_FORMAT_VERSION = 1
REPORT_FORMAT_VERSION = 1


class ParseError(FoldexError):
    """Malformed polyline or report document."""


def polyline_to_dict(p: Polyline, name: str = "", unit: str = "") -> dict:
    return {
        "version": POLYLINE_FORMAT_VERSION,
        "name": name,
        "unit": unit,
        "vertices": [[float(x), float(y)] for x, y in p.vertices],
    }


def polyline_from_dict(doc: dict) -> Polyline:
    if not isinstance(doc, dict) or "vertices" not in doc:
        raise ParseError("polyline document must have a 'vertices' field")
    try:
        return build_polyline(doc["vertices"])
    except (TypeError, ValueError) as e:
        raise ParseError(f"bad vertices: {e}") from e


def read_polyline_json(text: str) -> Polyline:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as e:
        raise ParseError(f"invalid JSON: {e}") from e
    return polyline_from_dict(doc)


def read_polyline_csv(text: str) -> Polyline:
    points = []
    for lineno, row in enumerate(csv.reader(io.StringIO(text)), start=1):
        if not row or row[0].lstrip().startswith("#"):
            continue
        if len(row) < 2:
            raise ParseError(f"line {lineno}: expected x,y")
        try:
            points.append((float(row[0]), float(row[1])))
        except ValueError as e:
            raise ParseError(f"line {lineno}: {e}") from e
    if not points:
        raise ParseError("no coordinate rows found")
    try:
        return build_polyline(points)
    except DegenerateInput as e:
        raise ParseError(str(e)) from e


def read_polyline_file(path) -> Polyline:
    text = open(path, encoding="utf-8").read()
    if str(path).lower().endswith(".csv"):
        return read_polyline_csv(text)
    return read_polyline_json(text)


def write_polyline_file(path, p: Polyline, name: str = "") -> None:
    if str(path).lower().endswith(".csv"):
        lines = [f"{x!r},{y!r}" for x, y in p.vertices]
        open(path, "w", encoding="utf-8").write("\n".join(lines) + "\n")
    else:
        open(path, "w", encoding="utf-8").write(
            json.dumps(polyline_to_dict(p, name=name)))


def _interval_pair(iv: Interval) -> list[float]:
    return [float(iv.t_a), float(iv.t_b)]


def params_to_dict(params: DetectionParams) -> dict:
    return {
        "tau": params.minimal.tau,
        "smooth": params.minimal.smooth_factor,
        "samples": params.minimal.samples,
        "eps_flat": params.minimal.eps_flat,
        "delta": params.maximal.delta,
        "side": params.maximal.side,
        "rho": params.maximal.rho,
        "chord_slack": params.maximal.chord_slack,
        "mode": params.containment_mode,
    }


def params_from_dict(d: dict) -> DetectionParams:
    return DetectionParams(
        minimal=MinimalParams(
            tau=d["tau"],
            smooth_factor=d["smooth"],
            samples=int(d["samples"]),
            eps_flat=d["eps_flat"],
        ),
        maximal=MaximalParams(
            delta=d["delta"],
            side=d["side"],
            rho=d["rho"],
            chord_slack=d["chord_slack"],
        ),
        containment_mode=d["mode"],
    )


def report_to_dict(r: FoldReport) -> dict:
    return {
        "version": REPORT_FORMAT_VERSION,
        "params": params_to_dict(r.params),
        "polyline": {
            "vertices": [[float(x), float(y)] for x, y in r.polyline.vertices],
            "arc_length": r.polyline.length,
        },
        "offset": {
            "delta": r.offset.delta,
            "side": r.offset.side,
            "vertices": [[float(x), float(y)] for x, y in r.offset.vertices],
        },
        "chirality": {
            "direction": r.chirality.direction,
            "confident": r.chirality.confident,
        },
        "orientation": {
            "m": r.analysis.raw.m,
            "domain_length": r.analysis.raw.domain_length,
            "raw": [float(v) for v in r.analysis.raw.values],
            "smoothed": [float(v) for v in r.analysis.smoothed.values],
        },
        "extrema": [
            {"t": e.t, "value": e.value, "kind": e.kind} for e in r.analysis.extrema
        ],
        "minimal_subsets": [_interval_pair(iv) for iv in r.minimal_subsets],
        "maximal_subsets": [_interval_pair(iv) for iv in r.maximal_subsets],
        "folds": [
            {
                "label": f.label,
                "t_a": f.interval.t_a,
                "t_b": f.interval.t_b,
                "width": f.width,
                "depth": f.depth,
                "arc_length": f.arc_length,
                "minimal_children": [_interval_pair(iv) for iv in f.minimal_children],
            }
            for f in r.folds
        ],
    }


def report_from_dict(d: dict) -> FoldReport:
    try:
        polyline = Polyline(np.array(d["polyline"]["vertices"], dtype=float))
        params = params_from_dict(d["params"])
        L = d["orientation"]["domain_length"]
        raw = SampledSignal(np.array(d["orientation"]["raw"]), L)
        smoothed = SampledSignal(np.array(d["orientation"]["smoothed"]), L)
        extrema = [Extremum(e["t"], e["value"], e["kind"]) for e in d["extrema"]]
        chirality = Chirality(d["chirality"]["direction"], d["chirality"]["confident"])
        minimal = [Interval(a, b, MINIMAL) for a, b in d["minimal_subsets"]]
        maximal = [Interval(a, b, MAXIMAL) for a, b in d["maximal_subsets"]]
        offset = OffsetPolyline(
            base=polyline,
            delta=d["offset"]["delta"],
            side=d["offset"]["side"],
            vertices=np.array(d["offset"]["vertices"], dtype=float),
        )
        folds = [
            Fold(
                interval=Interval(f["t_a"], f["t_b"], FOLD),
                minimal_children=[Interval(a, b, MINIMAL)
                                  for a, b in f["minimal_children"]],
                width=f["width"],
                depth=f["depth"],
                arc_length=f["arc_length"],
                label=f["label"],
            )
            for f in d["folds"]
        ]
    except (KeyError, TypeError, ValueError) as e:
        raise ParseError(f"bad report document: {e}") from e
    analysis = OrientationAnalysis(raw, smoothed, extrema, chirality, minimal)
    return FoldReport(
        polyline=polyline,
        params=params,
        analysis=analysis,
        offset=offset,
        minimal_subsets=minimal,
        maximal_subsets=maximal,
        folds=folds,
    )


def report_document(r: FoldReport, timestamp: str) -> dict[str, Any]:
    """Wrap a report with tool provenance for file output."""
    return {
        "tool": "foldex",
        "tool_version": __version__,
        "generated_at": timestamp,
        "report": report_to_dict(r),
    }


def report_from_document(doc: dict) -> FoldReport:
    if "report" in doc:
        return report_from_dict(doc["report"])
    return report_from_dict(doc)
