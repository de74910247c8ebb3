"""Exhaustive enumeration and adjudication of bound claims."""

from .claims import CLAIMS, VerificationReport, check_claim, check_claims, classify, default_battery
from .scan import ExtremalResult, extremal_scan, scan
from .spaces import (
    DEFAULT_CAP,
    AllConnected,
    Hypertrees,
    UniformConnected,
    UniformHypertrees,
    WeakBipartite,
    enumerate_space,
    parse_space,
    space_size,
)

__all__ = [
    "CLAIMS",
    "DEFAULT_CAP",
    "AllConnected",
    "ExtremalResult",
    "Hypertrees",
    "UniformConnected",
    "UniformHypertrees",
    "VerificationReport",
    "WeakBipartite",
    "check_claim",
    "check_claims",
    "classify",
    "default_battery",
    "enumerate_space",
    "extremal_scan",
    "parse_space",
    "scan",
    "space_size",
]
