"""Batch command line interface.

Subcommands: ``detect`` (polyline file or directory -> report JSON,
optional SVG), ``render`` (report -> SVG), ``synth`` (generate fixtures),
``serve`` (run the tuning service). ``detect`` exits 0 on success, 2 when
no folds were found (scriptable), 1 on error. ``FOLDEX_LOG`` sets the
diagnostic verbosity.
"""
from __future__ import annotations

import argparse
import datetime
import json
import logging
import math
import os
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict
from pathlib import Path

import numpy as np

from .errors import FoldexError
from .folds import DetectionParams, detect_folds
from .formats import (
    ParseError,
    polyline_to_dict,
    read_polyline_csv,
    read_polyline_json,
    report_document,
    report_from_document,
    report_to_dict,
)
from .geometry import Polyline
from .maximal import (
    MaximalParams,
    back_project,
    offset_polyline,
    resolve_side,
    self_intersections,
)
from .minimal import MinimalParams, analyze_orientation
from .render import render_report_svg
from .synth import CombSpec, generate_bulge, generate_comb

log = logging.getLogger("foldex")

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_NO_FOLDS = 2


def _setup_logging() -> None:
    level = os.environ.get("FOLDEX_LOG", "WARNING").upper()
    logging.basicConfig(level=getattr(logging, level, logging.WARNING),
                        format="%(levelname)s %(name)s: %(message)s")


def _read_polyline(path: Path, fmt: str | None) -> Polyline:
    text = path.read_text(encoding="utf-8")
    if fmt == "csv" or (fmt is None and path.suffix.lower() == ".csv"):
        return read_polyline_csv(text)
    return read_polyline_json(text)


def _auto_delta(p: Polyline, params: DetectionParams) -> float:
    """Pilot pass: median endpoint chord of back-projected candidates.

    Tries a few growing pilot offsets because a small one slides through
    wide fold mouths without ever crossing itself.
    """
    chirality = analyze_orientation(p, params.minimal).chirality
    side = resolve_side(params.maximal.side, chirality)
    for fraction in (0.02, 0.04, 0.08, 0.12):
        pilot = fraction * p.length
        op = offset_polyline(p, pilot, side)
        chords = [p.chord_distance(back_project(op, x))
                  for x in self_intersections(op)
                  if back_project(op, x).length > 0]
        chords = [c for c in chords if c > 0]
        if chords:
            return float(np.median(chords))
    raise FoldexError("delta-auto pilot pass found no offset crossings; "
                      "pass --delta explicitly")


def _detection_params(args) -> DetectionParams:
    return DetectionParams(
        minimal=MinimalParams(tau=args.tau, smooth_factor=args.smooth,
                              samples=args.samples),
        maximal=MaximalParams(delta=args.delta if args.delta else 1.0,
                              side=args.side, rho=args.rho,
                              chord_slack=args.chord_slack),
        containment_mode=args.mode,
    )


def _detect_one(path: Path, out_path: Path, svg_path: Path | None, args) -> int:
    p = _read_polyline(path, args.format)
    params = _detection_params(args)
    if not args.delta:
        if not args.delta_auto:
            raise FoldexError("--delta is required unless --delta-auto is set")
        delta = _auto_delta(p, params)
        log.info("%s: delta-auto resolved to %.6g", path.name, delta)
        params = DetectionParams(
            minimal=params.minimal,
            maximal=MaximalParams(delta=delta, side=args.side, rho=args.rho,
                                  chord_slack=args.chord_slack),
            containment_mode=args.mode,
        )
    report = detect_folds(p, params)
    stamp = datetime.datetime.now(datetime.timezone.utc).isoformat()
    out_path.write_text(json.dumps(report_document(report, stamp)),
                        encoding="utf-8")
    if svg_path is not None:
        svg_path.write_text(render_report_svg(report_to_dict(report)),
                            encoding="utf-8")
    log.info("%s: %d folds", path.name, len(report.folds))
    return EXIT_OK if report.folds else EXIT_NO_FOLDS


def cmd_detect(args) -> int:
    src = Path(args.input)
    if src.is_dir():
        files = sorted([*src.glob("*.json"), *src.glob("*.csv")])
        files = [f for f in files if not f.name.endswith(".report.json")]
        if not files:
            print(f"no polyline files in {src}", file=sys.stderr)
            return EXIT_ERROR
        out_dir = Path(args.output) if args.output else src
        out_dir.mkdir(parents=True, exist_ok=True)

        def run(f: Path):
            try:
                return _detect_one(f, out_dir / f"{f.stem}.report.json", None, args)
            except (FoldexError, OSError) as e:
                print(f"{f.name}: {e}", file=sys.stderr)
                return EXIT_ERROR

        with ThreadPoolExecutor() as pool:
            codes = list(pool.map(run, files))
        if EXIT_ERROR in codes:
            return EXIT_ERROR
        return EXIT_OK if EXIT_OK in codes else EXIT_NO_FOLDS
    out = Path(args.output) if args.output else src.with_suffix(".report.json")
    svg = Path(args.svg) if args.svg else None
    try:
        return _detect_one(src, out, svg, args)
    except (FoldexError, OSError) as e:
        print(f"{src}: {e}", file=sys.stderr)
        return EXIT_ERROR


def cmd_render(args) -> int:
    try:
        doc = json.loads(Path(args.report).read_text(encoding="utf-8"))
        report = report_from_document(doc)
    except (json.JSONDecodeError, ParseError, OSError) as e:
        print(f"{args.report}: {e}", file=sys.stderr)
        return EXIT_ERROR
    Path(args.out).write_text(render_report_svg(report_to_dict(report)),
                              encoding="utf-8")
    return EXIT_OK


def cmd_synth(args) -> int:
    try:
        if args.kind == "comb":
            spec = CombSpec(teeth=args.teeth, tooth_width=args.tooth_width,
                            tooth_depth=args.tooth_depth, spacing=args.spacing,
                            rounding=args.rounding, noise=args.noise,
                            seed=args.seed, chirality=args.chirality)
            poly, truth = generate_comb(spec)
        else:
            poly, truth = generate_bulge(mouth_width=args.mouth_width,
                                         depth=args.bulge_depth)
    except FoldexError as e:
        print(f"synth: {e}", file=sys.stderr)
        return EXIT_ERROR
    Path(args.out).write_text(json.dumps(polyline_to_dict(poly, name=args.kind)),
                              encoding="utf-8")
    if args.truth:
        truth_doc = {
            "fold_count": truth.fold_count,
            "teeth": [
                {
                    "mouth": [t.mouth.t_a, t.mouth.t_b],
                    "tip_t": t.tip_t,
                    "width": t.width,
                    "depth": t.depth,
                    "turning": t.turning,
                }
                for t in truth.teeth
            ],
        }
        Path(args.truth).write_text(json.dumps(truth_doc), encoding="utf-8")
    return EXIT_OK


def cmd_serve(args) -> int:
    import uvicorn

    from .service import create_app

    host, _, port = args.listen.rpartition(":")
    app = create_app(static_dir=args.static, persist_dir=args.persist)
    uvicorn.run(app, host=host or "127.0.0.1", port=int(port))
    return EXIT_OK


def _add_detect_flags(sp: argparse.ArgumentParser) -> None:
    sp.add_argument("--tau", type=float, default=2.0 * math.pi / 3.0,
                    help="turning angle threshold in radians (default 2pi/3)")
    sp.add_argument("--delta", type=float, default=None,
                    help="offset distance; about the width of an average fold")
    sp.add_argument("--delta-auto", action="store_true",
                    help="derive delta from a pilot pass")
    sp.add_argument("--smooth", type=float, default=0.05,
                    help="smoothing factor in (0, 1]")
    sp.add_argument("--samples", type=int, default=0,
                    help="orientation sample count (0 = auto)")
    sp.add_argument("--side", choices=["left", "right", "auto"], default="auto")
    sp.add_argument("--rho", type=float, default=3.0,
                    help="significance ratio arc length / chord")
    sp.add_argument("--chord-slack", type=float, default=0.05)
    sp.add_argument("--mode", choices=["overlap", "strict"], default="overlap")
    sp.add_argument("--format", choices=["json", "csv"], default=None,
                    help="force the input format instead of sniffing")


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="foldex",
                                 description="Fold extraction from membrane polylines")
    sub = ap.add_subparsers(dest="command", required=True)

    d = sub.add_parser("detect", help="detect folds in polyline file(s)")
    d.add_argument("input", help="polyline file or directory")
    d.add_argument("-o", "--output", default=None,
                   help="report path (or directory for directory input)")
    d.add_argument("--svg", default=None, help="also render an SVG here")
    _add_detect_flags(d)
    d.set_defaults(func=cmd_detect)

    r = sub.add_parser("render", help="render a report as SVG")
    r.add_argument("report")
    r.add_argument("out")
    r.set_defaults(func=cmd_render)

    s = sub.add_parser("synth", help="generate synthetic fixtures")
    s.add_argument("out", help="polyline JSON output path")
    s.add_argument("--kind", choices=["comb", "bulge"], default="comb")
    s.add_argument("--truth", default=None, help="ground-truth JSON output path")
    s.add_argument("--teeth", type=int, default=3)
    s.add_argument("--tooth-width", type=float, default=1.0)
    s.add_argument("--tooth-depth", type=float, default=2.0)
    s.add_argument("--spacing", type=float, default=2.0)
    s.add_argument("--rounding", type=float, default=0.45)
    s.add_argument("--noise", type=float, default=0.0)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--chirality", choices=["left", "right"], default="right")
    s.add_argument("--mouth-width", type=float, default=6.0)
    s.add_argument("--bulge-depth", type=float, default=2.0)
    s.set_defaults(func=cmd_synth)

    v = sub.add_parser("serve", help="run the interactive tuning service")
    v.add_argument("--listen", default="127.0.0.1:8787")
    v.add_argument("--static", default=None, help="UI bundle directory")
    v.add_argument("--persist", default=None, help="dataset persistence directory")
    v.set_defaults(func=cmd_serve)
    return ap


def main(argv=None) -> int:
    _setup_logging()
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
