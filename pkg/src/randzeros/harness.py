"""Seeded Monte Carlo experiment runner.

A trial's randomness comes only from (seed, trial index), and aggregation is
an index-ordered reduction, so reports are identical under any worker count.
"""

from __future__ import annotations

import csv
import dataclasses
import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Optional

import numpy as np

from . import predictors
from .ensembles import RngStream, sample_expsum, sample_kac, sample_kostlan, sample_trig, sample_trig_system
from .geometry import ComplexPolytope, great_circle, kappa_curve, kappa_length, pseudovolume_detail
from .spectra import ComplexSpectrum, Spectrum1D, SpectrumND
from .zerocount import (
    circle_zeros_count,
    disk_zeros_count,
    hyperplane_curve_intersections,
    real_roots_count,
    torus_common_zeros_count,
)

KINDS = ("kac", "kostlan", "trig1d", "trig2d", "trig2d_mixed", "crofton", "expsum", "pvol")
DISCARD_CAP = 1e-3  # discarded fraction above this fails the experiment loudly
DEFAULT_RADII = (5.0, 10.0, 15.0, 20.0, 25.0, 30.0, 35.0, 40.0)


class ExperimentError(RuntimeError):
    """Raised when an experiment cannot produce a trustworthy report."""


@dataclass(frozen=True)
class ExperimentConfig:
    kind: str
    trials: int = 1
    seed: int = 0
    m: Optional[int] = None
    spectrum_1d: Optional[Spectrum1D] = None
    spectrum_nd: Optional[SpectrumND] = None
    spectrum_nd2: Optional[SpectrumND] = None
    complex_spectrum: Optional[ComplexSpectrum] = None
    curve: str = "kappa"             # crofton: "kappa" or "great_circle"
    curve_dim: int = 3               # great-circle ambient dimension
    radii: tuple[float, ...] = DEFAULT_RADII
    vertices: Optional[tuple[tuple[complex, ...], ...]] = None  # pvol polytope
    angle_samples: int = 200_000
    expected: Optional[float] = None  # pvol reference value
    z_max: float = 3.0
    fit_slack: float = 0.05
    band: Optional[tuple[float, float]] = None
    rel_slack: Optional[float] = None
    workers: int = 1
    keep_per_trial: bool = False

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown experiment kind {self.kind!r}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.workers < 1:
            raise ValueError("need at least one worker")
        radii = tuple(float(r) for r in self.radii)
        if any(b <= a for a, b in zip(radii, radii[1:])):
            raise ValueError("radii must be strictly increasing")
        object.__setattr__(self, "radii", radii)
        needs = {
            "kac": self.m is not None,
            "kostlan": self.m is not None,
            "trig1d": self.spectrum_1d is not None,
            "trig2d": self.spectrum_nd is not None,
            "trig2d_mixed": self.spectrum_nd is not None and self.spectrum_nd2 is not None,
            "crofton": self.curve == "great_circle" or self.spectrum_1d is not None,
            "expsum": self.complex_spectrum is not None,
            "pvol": self.vertices is not None,
        }
        if not needs[self.kind]:
            raise ValueError(f"missing parameters for kind {self.kind!r}")


@dataclass(frozen=True)
class TrialOutcome:
    index: int
    value: float
    certified: bool
    detail: tuple = ()


@dataclass(frozen=True)
class ExperimentReport:
    config: dict
    empirical_mean: float
    empirical_stderr: float
    predicted: float
    z_score: float
    discarded_trials: int
    verdict: str
    predicted_semiperimeter: Optional[float] = None
    per_trial: Optional[tuple] = None

    @property
    def passed(self) -> bool:
        return self.verdict == "pass"


def slope_fit(radii, counts) -> tuple[float, float, float]:
    """Least-squares line through (radius, count); residual is the max
    absolute deviation, absorbing the bounded drift term."""
    radii = np.asarray(radii, dtype=float)
    counts = np.asarray(counts, dtype=float)
    if radii.size < 4:
        raise ValueError("need at least four radii for a slope fit")
    if np.any(np.diff(counts) < 0):
        raise ValueError("zero counts decreased with radius; counting failure")
    A = np.stack([radii, np.ones_like(radii)], axis=1)
    (slope, intercept), *_ = np.linalg.lstsq(A, counts, rcond=None)
    residual = float(np.max(np.abs(A @ np.array([slope, intercept]) - counts)))
    return float(slope), float(intercept), residual


# --------------------------------------------------------------------------
# Per-trial execution (top-level so worker processes can pickle the calls)
# --------------------------------------------------------------------------

def _curve_for(cfg: ExperimentConfig):
    if cfg.curve == "great_circle":
        return great_circle(cfg.curve_dim)
    return kappa_curve(cfg.spectrum_1d)


def _single_trial(cfg: ExperimentConfig, index: int) -> TrialOutcome:
    stream = RngStream(cfg.seed, index)
    if cfg.kind == "kac":
        res = real_roots_count(sample_kac(cfg.m, stream))
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "kostlan":
        res = real_roots_count(sample_kostlan(cfg.m, stream))
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "trig1d":
        res = circle_zeros_count(sample_trig(cfg.spectrum_1d, stream))
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "trig2d":
        f, g = sample_trig_system([cfg.spectrum_nd, cfg.spectrum_nd], stream)
        res = torus_common_zeros_count(f, g)
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "trig2d_mixed":
        f, g = sample_trig_system([cfg.spectrum_nd, cfg.spectrum_nd2], stream)
        res = torus_common_zeros_count(f, g)
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "crofton":
        curve = _curve_for(cfg)
        xi = stream.generator().standard_normal(curve.dim)
        res = hyperplane_curve_intersections(curve, xi)
        return TrialOutcome(index, float(res.count), res.certified)
    if cfg.kind == "expsum":
        f = sample_expsum(cfg.complex_spectrum, stream)
        counts = []
        certified = True
        nodes = 512
        for r in cfg.radii:
            res = disk_zeros_count(f, r, start_nodes=nodes)
            nodes = 512 * 2 ** max(0, res.depth - 1)  # warm-start the next contour
            counts.append(res.count)
            certified = certified and res.certified
        try:
            slope, _, _ = slope_fit(cfg.radii, counts)
        except ValueError:
            return TrialOutcome(index, math.nan, False, tuple(counts))
        return TrialOutcome(index, slope, certified, tuple(counts))
    raise ValueError(f"kind {cfg.kind!r} has no per-trial form")


def _trial_batch(cfg: ExperimentConfig, indices: tuple[int, ...]) -> list[TrialOutcome]:
    return [_single_trial(cfg, i) for i in indices]


def _run_trials(cfg: ExperimentConfig) -> list[TrialOutcome]:
    indices = tuple(range(cfg.trials))
    if cfg.workers == 1:
        return _trial_batch(cfg, indices)
    chunk = max(1, math.ceil(cfg.trials / (4 * cfg.workers)))
    chunks = [indices[i : i + chunk] for i in range(0, cfg.trials, chunk)]
    with ProcessPoolExecutor(max_workers=cfg.workers) as pool:
        parts = list(pool.map(_trial_batch, [cfg] * len(chunks), chunks))
    out = [t for part in parts for t in part]
    out.sort(key=lambda t: t.index)
    return out


def _predicted(cfg: ExperimentConfig) -> tuple[float, Optional[float]]:
    if cfg.kind == "kac":
        return predictors.kac_asymptotic(cfg.m), None
    if cfg.kind == "kostlan":
        return math.sqrt(cfg.m), None
    if cfg.kind == "trig1d":
        return predictors.trig_expected(cfg.spectrum_1d), None
    if cfg.kind == "trig2d":
        return predictors.nd_expected(cfg.spectrum_nd), None
    if cfg.kind == "trig2d_mixed":
        return predictors.nd_expected_mixed(cfg.spectrum_nd, cfg.spectrum_nd2), None
    if cfg.kind == "crofton":
        if cfg.curve == "great_circle":
            return 2.0, None
        return kappa_length(cfg.spectrum_1d) / math.pi, None
    if cfg.kind == "expsum":
        per = predictors.expsum_slope(cfg.complex_spectrum, predictors.SlopeConvention.PERIMETER)
        semi = predictors.expsum_slope(cfg.complex_spectrum, predictors.SlopeConvention.SEMIPERIMETER)
        return per, semi
    raise ValueError(f"kind {cfg.kind!r} has no scalar prediction")


def _mean_verdict(cfg: ExperimentConfig, mean: float, stderr: float, predicted: float, fit_type: bool) -> tuple[str, float]:
    z = 0.0 if mean == predicted else (math.inf if stderr == 0.0 else (mean - predicted) / stderr)
    if cfg.band is not None:
        ok = cfg.band[0] <= mean <= cfg.band[1]
    elif fit_type:
        ok = abs(mean - predicted) <= cfg.fit_slack * abs(predicted)
    else:
        ok = abs(z) <= cfg.z_max
        if not ok and cfg.rel_slack is not None and predicted != 0.0:
            ok = abs(mean - predicted) <= cfg.rel_slack * abs(predicted)
    return ("pass" if ok else "fail"), z


def run_experiment(cfg: ExperimentConfig) -> ExperimentReport:
    """Execute the configured experiment and compare against its predictor."""
    if cfg.kind == "pvol":
        return _run_pvol(cfg)
    outcomes = _run_trials(cfg)
    kept = [t for t in outcomes if t.certified]
    discarded = cfg.trials - len(kept)
    if discarded > DISCARD_CAP * cfg.trials:
        raise ExperimentError(
            f"{discarded} of {cfg.trials} trials uncertified "
            f"(cap {DISCARD_CAP:.1%}); the counters are in numerical trouble"
        )
    if not kept:
        raise ExperimentError("all trials uncertified")
    values = np.array([t.value for t in kept])
    mean = float(values.mean())
    stderr = float(values.std(ddof=1) / math.sqrt(values.size)) if values.size > 1 else 0.0
    predicted, predicted_semi = _predicted(cfg)
    verdict, z = _mean_verdict(cfg, mean, stderr, predicted, fit_type=(cfg.kind == "expsum"))
    per_trial = tuple(outcomes) if cfg.keep_per_trial else None
    return ExperimentReport(
        config=_config_echo(cfg),
        empirical_mean=mean,
        empirical_stderr=stderr,
        predicted=predicted,
        z_score=z,
        discarded_trials=discarded,
        verdict=verdict,
        predicted_semiperimeter=predicted_semi,
        per_trial=per_trial,
    )


def _run_pvol(cfg: ExperimentConfig) -> ExperimentReport:
    poly = ComplexPolytope(len(cfg.vertices[0]), np.array(cfg.vertices))
    detail = pseudovolume_detail(poly, cfg.angle_samples, cfg.seed)
    predicted = cfg.expected if cfg.expected is not None else detail.value
    err = abs(detail.value - predicted)
    tol = max(cfg.z_max * detail.stderr, 1e-9 * (1.0 + abs(predicted)))
    verdict = "pass" if err <= tol else "fail"
    z = 0.0 if err == 0.0 else (math.inf if detail.stderr == 0.0 else err / detail.stderr)
    per_trial = (
        tuple(
            TrialOutcome(i, f.volume, True, (f.angle, f.angle_stderr, f.cosine))
            for i, f in enumerate(detail.faces)
        )
        if cfg.keep_per_trial
        else None
    )
    return ExperimentReport(
        config=_config_echo(cfg),
        empirical_mean=detail.value,
        empirical_stderr=detail.stderr,
        predicted=predicted,
        z_score=z,
        discarded_trials=0,
        verdict=verdict,
        per_trial=per_trial,
    )


# --------------------------------------------------------------------------
# Serialization
# --------------------------------------------------------------------------

def _config_echo(cfg: ExperimentConfig) -> dict:
    def plain(x):
        if isinstance(x, (Spectrum1D, SpectrumND)):
            return list(x.points)
        if isinstance(x, ComplexSpectrum):
            return [str(z) for z in x.points]
        if isinstance(x, tuple):
            return [plain(v) for v in x]
        if isinstance(x, complex):
            return str(x)
        return x

    out = {}
    for f in dataclasses.fields(cfg):
        v = getattr(cfg, f.name)
        if v is not None:
            out[f.name] = plain(v)
    return out


def report_to_dict(report: ExperimentReport) -> dict:
    out = {
        "config": report.config,
        "empirical_mean": report.empirical_mean,
        "empirical_stderr": report.empirical_stderr,
        "predicted": report.predicted,
        "z_score": report.z_score,
        "discarded_trials": report.discarded_trials,
        "verdict": report.verdict,
    }
    if report.predicted_semiperimeter is not None:
        out["predicted_semiperimeter"] = report.predicted_semiperimeter
    if report.per_trial is not None:
        out["per_trial"] = [
            {"trial": t.index, "value": t.value, "certified": t.certified, "detail": list(t.detail)}
            for t in report.per_trial
        ]
    return out


def write_report_json(report: ExperimentReport, path: str) -> None:
    with open(path, "w") as fh:
        json.dump(report_to_dict(report), fh, indent=2)
        fh.write("\n")


def write_per_trial_csv(report: ExperimentReport, path: str) -> None:
    if report.per_trial is None:
        raise ValueError("report was built without per-trial records")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "value", "certified"])
        for t in report.per_trial:
            writer.writerow([t.index, repr(t.value), t.certified])


def write_curve_csv(report: ExperimentReport, radii, path: str) -> None:
    """Per-trial (radius, count, fitted value) rows for external plotting."""
    if report.per_trial is None:
        raise ValueError("run with per-trial records to emit curves")
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["trial", "radius", "count", "fit"])
        for t in report.per_trial:
            if not t.detail:
                continue
            counts = np.asarray(t.detail, dtype=float)
            slope, icpt, _ = slope_fit(radii, counts)
            for r, c in zip(radii, counts):
                writer.writerow([t.index, r, int(c), repr(slope * r + icpt)])
