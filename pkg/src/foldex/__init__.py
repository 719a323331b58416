"""Fold extraction from segmented membrane polylines."""

from .errors import BadParam, DegenerateInput, FoldexError, OutOfRange
from .folds import DetectionParams, Fold, FoldReport, detect_folds, fold_metrics
from .geometry import Interval, Point2, Polyline, build_polyline
from .maximal import MaximalParams, OffsetPolyline, SelfIntersection, maximal_subsets
from .minimal import Chirality, Extremum, MinimalParams, minimal_subsets
from .orientation import (
    OrientationFunction,
    SampledSignal,
    orientation_function,
    sample_uniform,
    smooth_lowpass,
    unwrap,
)
from .synth import CombSpec, GroundTruth, generate_bulge, generate_comb

__version__ = "0.1.0"

__all__ = [
    "BadParam",
    "Chirality",
    "CombSpec",
    "DegenerateInput",
    "DetectionParams",
    "Extremum",
    "Fold",
    "FoldReport",
    "FoldexError",
    "GroundTruth",
    "Interval",
    "MaximalParams",
    "MinimalParams",
    "OffsetPolyline",
    "OrientationFunction",
    "OutOfRange",
    "Point2",
    "Polyline",
    "SampledSignal",
    "SelfIntersection",
    "build_polyline",
    "detect_folds",
    "fold_metrics",
    "generate_bulge",
    "generate_comb",
    "maximal_subsets",
    "minimal_subsets",
    "orientation_function",
    "sample_uniform",
    "smooth_lowpass",
    "unwrap",
]
