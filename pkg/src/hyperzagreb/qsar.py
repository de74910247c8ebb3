"""Hyper-Zagreb descriptors and the bilinear bioactivity regression.

The model is ``activity = alpha*HM1 + beta*HM2 + gamma*HM1*HM2 + delta``.
Descriptors differ by many orders of magnitude, so the fit is solved on
standardized features (zero mean, unit variance) with an orthogonal
least-squares solver, and raw-unit coefficients are recovered afterwards.
"""

from __future__ import annotations

import csv
import io
import json
from collections.abc import Iterable
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Optional

import numpy as np

from .core import Hypergraph
from .errors import DuplicateName, FitError, MissingActivity, QSARError, TooFewRows
from .indices import indices

_COND_LIMIT = 1e12


@dataclass(frozen=True)
class DescriptorRow:
    name: str
    hm1: int
    hm2: int
    activity: Optional[float] = None

    @property
    def interaction(self) -> int:
        return self.hm1 * self.hm2


@dataclass(frozen=True)
class FitResult:
    alpha: float
    beta: float
    gamma: float
    delta: float
    standardized_coefficients: tuple[float, float, float, float]
    feature_means: tuple[float, float, float]
    feature_scales: tuple[float, float, float]
    r_squared: float
    condition_warning: bool
    n_rows: int


def descriptor_table(entries: Iterable[tuple[str, Hypergraph, Optional[float]]]) -> list[DescriptorRow]:
    rows, seen = [], set()
    for name, h, activity in entries:
        if name in seen:
            raise DuplicateName(f"duplicate descriptor name {name!r}")
        seen.add(name)
        a, b = indices(h)
        rows.append(DescriptorRow(name, a, b, activity))
    return rows


def _to_float(v: int, what: str) -> float:
    try:
        return float(v)
    except OverflowError:
        raise FitError(f"{what} = {v} is outside the floating-point range") from None


def _features(row: DescriptorRow) -> list[float]:
    return [
        _to_float(row.hm1, f"{row.name}: HM1"),
        _to_float(row.hm2, f"{row.name}: HM2"),
        _to_float(row.interaction, f"{row.name}: HM1*HM2"),
    ]


def fit(rows: list[DescriptorRow]) -> FitResult:
    if any(r.activity is None for r in rows):
        missing = [r.name for r in rows if r.activity is None]
        raise MissingActivity(f"rows without activity: {', '.join(missing)}")
    if len(rows) < 4:
        raise TooFewRows(f"need at least 4 rows to fit 4 coefficients, got {len(rows)}")
    X = np.array([_features(r) for r in rows])
    y = np.array([float(r.activity) for r in rows])
    if not np.all(np.isfinite(X)):
        raise FitError("descriptor conversion produced a non-finite value")

    mu = X.mean(axis=0)
    sigma = X.std(axis=0)
    flat = sigma == 0
    Z = np.where(flat, 0.0, (X - mu) / np.where(flat, 1.0, sigma))
    A = np.column_stack([Z, np.ones(len(rows))])
    coef, _, rank, sv = np.linalg.lstsq(A, y, rcond=None)
    warning = bool(rank < A.shape[1] or sv[-1] == 0 or sv[0] / sv[-1] > _COND_LIMIT)

    raw = np.where(flat, 0.0, coef[:3] / np.where(flat, 1.0, sigma))
    delta = coef[3] - float(np.dot(raw, mu))
    resid = y - A @ coef
    ss_res = float(resid @ resid)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - ss_res / ss_tot if ss_tot > 0 else 0.0
    return FitResult(
        alpha=float(raw[0]),
        beta=float(raw[1]),
        gamma=float(raw[2]),
        delta=float(delta),
        standardized_coefficients=tuple(float(c) for c in coef),
        feature_means=tuple(float(v) for v in mu),
        feature_scales=tuple(float(v) for v in sigma),
        r_squared=r2,
        condition_warning=warning,
        n_rows=len(rows),
    )


def predict(fit: FitResult, row: DescriptorRow) -> float:
    x1, x2, x3 = _features(row)
    return fit.alpha * x1 + fit.beta * x2 + fit.gamma * x3 + fit.delta


def predict_standardized(fit: FitResult, row: DescriptorRow) -> float:
    total = fit.standardized_coefficients[3]
    for c, x, mu, s in zip(fit.standardized_coefficients, _features(row), fit.feature_means, fit.feature_scales):
        if s:
            total += c * (x - mu) / s
    return total


@dataclass(frozen=True)
class LineFit:
    slope: float
    intercept: float
    r_squared: float
    n_points: int


def line_fit(points: list[tuple[float, float]]) -> LineFit:
    """Ordinary least-squares line ``y = slope*x + intercept``."""
    if len(points) < 2:
        raise TooFewRows("a line fit needs at least 2 points")
    x = np.array([p[0] for p in points], dtype=float)
    y = np.array([p[1] for p in points], dtype=float)
    slope, intercept = np.polyfit(x, y, 1)
    resid = y - (slope * x + intercept)
    ss_tot = float(((y - y.mean()) ** 2).sum())
    r2 = 1.0 - float(resid @ resid) / ss_tot if ss_tot > 0 else 0.0
    return LineFit(float(slope), float(intercept), r2, len(points))


# published reference values for the ACE-inhibitor scatter, kept for comparison only
FIGURE1_PLOTTED_SLOPE = 0.98
FIGURE1_PLOTTED_INTERCEPT = 0.02
FIGURE1_CAPTION_R2 = 0.89


def figure1_points() -> list[tuple[float, float]]:
    text = resources.files("hyperzagreb").joinpath("data/figure1.csv").read_text()
    return [(float(r["predicted"]), float(r["experimental"])) for r in csv.DictReader(io.StringIO(text))]


def figure1_report() -> dict:
    lf = line_fit(figure1_points())
    return {
        "n_points": lf.n_points,
        "computed": {"slope": lf.slope, "intercept": lf.intercept, "r_squared": lf.r_squared},
        "reference": {
            "plotted_slope": FIGURE1_PLOTTED_SLOPE,
            "plotted_intercept": FIGURE1_PLOTTED_INTERCEPT,
            "caption_r_squared": FIGURE1_CAPTION_R2,
        },
    }


def table1_rows() -> list[DescriptorRow]:
    text = resources.files("hyperzagreb").joinpath("data/table1.csv").read_text()
    return parse_descriptor_csv(text)


# ----------------------------------------------------------------- CSV/JSON


def parse_descriptor_csv(text: str) -> list[DescriptorRow]:
    reader = csv.DictReader(io.StringIO(text))
    need = {"name", "hm1", "hm2"}
    if reader.fieldnames is None or not need <= set(reader.fieldnames):
        raise QSARError("descriptor CSV needs a header with name,hm1,hm2[,activity]")
    rows, seen = [], set()
    for lineno, rec in enumerate(reader, 2):
        name = rec["name"]
        if name in seen:
            raise DuplicateName(f"line {lineno}: duplicate name {name!r}")
        seen.add(name)
        try:
            h1, h2 = int(rec["hm1"]), int(rec["hm2"])
            act = rec.get("activity")
            activity = float(act) if act not in (None, "") else None
        except ValueError as exc:
            raise QSARError(f"line {lineno}: {exc}") from None
        if h1 < 0 or h2 < 0:
            raise QSARError(f"line {lineno}: index values must be non-negative")
        rows.append(DescriptorRow(name, h1, h2, activity))
    return rows


def read_descriptor_csv(path: str | Path) -> list[DescriptorRow]:
    return parse_descriptor_csv(Path(path).read_text())


def format_descriptor_csv(rows: list[DescriptorRow], fitted: Optional[FitResult] = None) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["name", "hm1", "hm2", "interaction", "activity", "prediction"])
    for r in rows:
        pred = "" if fitted is None else repr(predict(fitted, r))
        act = "" if r.activity is None else repr(r.activity)
        w.writerow([r.name, str(r.hm1), str(r.hm2), str(r.interaction), act, pred])
    return buf.getvalue()


def fit_to_json(f: FitResult) -> str:
    d = {
        "alpha": repr(f.alpha),
        "beta": repr(f.beta),
        "gamma": repr(f.gamma),
        "delta": repr(f.delta),
        "standardized_coefficients": [repr(c) for c in f.standardized_coefficients],
        "feature_means": [repr(c) for c in f.feature_means],
        "feature_scales": [repr(c) for c in f.feature_scales],
        "r_squared": repr(f.r_squared),
        "condition_warning": f.condition_warning,
        "n_rows": f.n_rows,
    }
    return json.dumps(d, indent=2) + "\n"
