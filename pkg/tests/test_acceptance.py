"""Acceptance suite: every verification criterion at its stated tolerance,
one printed pass/fail line per criterion."""

import math
import time

import numpy as np
import pytest

from randzeros.ensembles import RngStream, sample_expsum, sample_kac, sample_trig
from randzeros.geometry import ComplexPolytope, kappa_length, pseudovolume_detail
from randzeros.harness import ExperimentConfig, run_experiment, slope_fit
from randzeros.predictors import SlopeConvention, expsum_slope, trig_prob
from randzeros.spectra import ComplexSpectrum, ExpSum, Spectrum1D, SpectrumND
from randzeros.zerocount import disk_zeros_count, real_roots_count

SEED = 20260810
TWO_PI = 2 * math.pi
WORKERS = 2


def check(cid, ok, detail):
    print(f"\n[criterion {cid:>2}] {'PASS' if ok else 'FAIL'}: {detail}")
    assert ok, f"criterion {cid}: {detail}"


def full_range(m):
    return Spectrum1D(tuple(range(-m, m + 1)))


def box_spectrum():
    return SpectrumND(2, tuple((i, j) for i in (-1, 0, 1) for j in (-1, 0, 1)))


def cross_spectrum():
    return SpectrumND(2, ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1)))


def test_c01_trig_exact_means():
    t0 = time.perf_counter()
    cfg = ExperimentConfig(kind="trig1d", trials=10_000, seed=SEED, spectrum_1d=full_range(3))
    rep = run_experiment(cfg)
    elapsed = time.perf_counter() - t0
    ok = abs(rep.empirical_mean - 4.0) <= 3 * rep.empirical_stderr and elapsed < 30.0
    details = [f"m=3 mean {rep.empirical_mean:.4f} vs 4.0 (stderr {rep.empirical_stderr:.4f}, {elapsed:.1f}s)"]
    for m, target in ((1, 2 * math.sqrt(2 / 3)), (5, 2 * math.sqrt(10))):
        r = run_experiment(ExperimentConfig(kind="trig1d", trials=10_000, seed=SEED, spectrum_1d=full_range(m)))
        ok = ok and abs(r.empirical_mean - target) <= 3 * r.empirical_stderr
        details.append(f"m={m} mean {r.empirical_mean:.4f} vs {target:.5f}")
    check(1, ok, "; ".join(details))


def test_c02_deterministic_spectrum():
    oks, details = [], []
    for k in (1, 3, 7):
        cfg = ExperimentConfig(
            kind="trig1d", trials=100, seed=SEED, spectrum_1d=Spectrum1D((-k, k)), keep_per_trial=True
        )
        rep = run_experiment(cfg)
        values = [t.value for t in rep.per_trial]
        oks.append(all(v == 2 * k for v in values) and rep.empirical_stderr == 0.0)
        details.append(f"k={k}: all counts {2 * k}, variance 0")
    check(2, all(oks), "; ".join(details))


def test_c03_general_spectrum_mean():
    target = 2 * math.sqrt(14.5)  # frozen from (1/4)(25+4+4+25) = 14.5
    cfg = ExperimentConfig(kind="trig1d", trials=10_000, seed=SEED, spectrum_1d=Spectrum1D((-5, -2, 2, 5)))
    rep = run_experiment(cfg)
    ok = abs(rep.empirical_mean - target) <= 3 * rep.empirical_stderr
    check(3, ok, f"mean {rep.empirical_mean:.4f} vs {target:.5f} (stderr {rep.empirical_stderr:.4f})")


def test_c04_probability_scaling_invariance():
    rng = np.random.default_rng(SEED)
    bad = 0
    for _ in range(20):
        pos = rng.choice(np.arange(1, 15), size=int(rng.integers(1, 5)), replace=False)
        pts = sorted({int(p) for p in pos} | {-int(p) for p in pos} | ({0} if rng.random() < 0.5 else set()))
        s = Spectrum1D(tuple(pts))
        for k in (2, 3, 5):
            if trig_prob(s.scaled(k)) != trig_prob(s):
                bad += 1
    check(4, bad == 0, f"trig_prob(k*spectrum) == trig_prob(spectrum) exactly, 20 spectra x k in {{2,3,5}} ({bad} failures)")


def test_c05_torus_systems():
    t0 = time.perf_counter()
    oks, details = [], []
    for label, spec, pred, bound in (
        ("box", box_spectrum(), 4 * math.pi / 3, 8),
        ("cross", cross_spectrum(), 4 * math.pi / 5, 4),
    ):
        cfg = ExperimentConfig(
            kind="trig2d", trials=2000, seed=SEED, spectrum_nd=spec, workers=WORKERS, keep_per_trial=True
        )
        rep = run_experiment(cfg)
        certified = [t.value for t in rep.per_trial if t.certified]
        z_ok = abs(rep.empirical_mean - pred) <= 3 * rep.empirical_stderr
        bound_ok = max(certified) <= bound
        oks.append(z_ok and bound_ok)
        details.append(
            f"{label}: mean {rep.empirical_mean:.4f} vs {pred:.5f} "
            f"(stderr {rep.empirical_stderr:.4f}), max count {int(max(certified))} <= {bound}"
        )
    elapsed = time.perf_counter() - t0
    oks.append(elapsed < 600.0)
    details.append(f"runtime {elapsed:.0f}s < 600s")
    check(5, all(oks), "; ".join(details))


def test_c06_mixed_spectra():
    target = 2 * math.pi * math.sqrt(4 / 15)
    cfg = ExperimentConfig(
        kind="trig2d_mixed", trials=2000, seed=SEED, spectrum_nd=box_spectrum(),
        spectrum_nd2=cross_spectrum(), workers=WORKERS,
    )
    rep = run_experiment(cfg)
    ok = abs(rep.empirical_mean - target) <= 3 * rep.empirical_stderr
    check(6, ok, f"mean {rep.empirical_mean:.4f} vs {target:.5f} (stderr {rep.empirical_stderr:.4f})")


def test_c07_crofton():
    gc = run_experiment(ExperimentConfig(kind="crofton", trials=10_000, seed=SEED, curve="great_circle", curve_dim=3))
    gc_ok = abs(gc.empirical_mean - 2.0) <= max(3 * gc.empirical_stderr, 1e-12)
    s = full_range(3)
    kap = run_experiment(
        ExperimentConfig(kind="crofton", trials=10_000, seed=SEED, spectrum_1d=s, keep_per_trial=True)
    )
    kap_ok = abs(kap.empirical_mean - 4.0) <= 3 * kap.empirical_stderr
    trig = run_experiment(
        ExperimentConfig(kind="trig1d", trials=10_000, seed=SEED, spectrum_1d=s, keep_per_trial=True)
    )
    equal = all(a.value == b.value for a, b in zip(trig.per_trial, kap.per_trial))
    check(
        7,
        gc_ok and kap_ok and equal,
        f"great circle {gc.empirical_mean:.4f} vs 2.0; kappa {kap.empirical_mean:.4f} vs 4.0; "
        f"per-trial route equality on all 10000 trials: {equal}",
    )


def test_c08_kappa_length_quadrature():
    rng = np.random.default_rng(SEED + 8)
    worst = 0.0
    for _ in range(10):
        pos = rng.choice(np.arange(1, 12), size=int(rng.integers(1, 5)), replace=False)
        pts = sorted({int(p) for p in pos} | {-int(p) for p in pos} | ({0} if rng.random() < 0.5 else set()))
        s = Spectrum1D(tuple(pts))
        closed = TWO_PI * math.sqrt(np.mean(np.array(s.points, float) ** 2))
        worst = max(worst, abs(kappa_length(s) - closed))
    check(8, worst < 1e-8, f"max |quadrature - closed form| = {worst:.2e} < 1e-8 over 10 spectra")


def test_c09_kac_band_and_trend():
    means = {}
    reports = {}
    for m, trials in ((10, 10_000), (100, 10_000), (1000, 250)):
        cfg = ExperimentConfig(kind="kac", trials=trials, seed=SEED, m=m, workers=WORKERS, band=(0.0, 100.0))
        rep = run_experiment(cfg)
        means[m] = rep.empirical_mean
        reports[m] = rep
    band_ok = 3.40 <= means[100] <= 3.75
    increasing = means[10] < means[100] < means[1000]
    step = (2 / math.pi) * math.log(10)
    d1, d2 = means[100] - means[10], means[1000] - means[100]
    trend_ok = abs(d1 - step) <= 0.25 * step and abs(d2 - step) <= 0.25 * step
    check(
        9,
        band_ok and increasing and trend_ok,
        f"m=100 mean {means[100]:.4f} in [3.40, 3.75]; means {means[10]:.3f} < {means[100]:.3f} < {means[1000]:.3f}; "
        f"diffs {d1:.3f}, {d2:.3f} within 25% of {step:.4f} "
        f"(asymptote (2/pi)ln 100 = {(2 / math.pi) * math.log(100):.4f} printed as the stated leading term)",
    )


def test_c10_kostlan_sqrt_law():
    oks, details = [], []
    for m in (25, 100):
        target = math.sqrt(m)
        cfg = ExperimentConfig(kind="kostlan", trials=10_000, seed=SEED, m=m, workers=WORKERS)
        rep = run_experiment(cfg)
        ok = (
            abs(rep.empirical_mean - target) <= 3 * rep.empirical_stderr
            or abs(rep.empirical_mean - target) <= 0.02 * target
        )
        oks.append(ok)
        details.append(f"m={m}: mean {rep.empirical_mean:.4f} vs {target:.1f} (stderr {rep.empirical_stderr:.4f})")
    check(10, all(oks), "; ".join(details))


def test_c11_exponential_sums():
    t0 = time.perf_counter()
    f_int = ExpSum(ComplexSpectrum((0, -TWO_PI * 1j)), (-1.0, 1.0))
    res = disk_zeros_count(f_int, 10.5)
    a_ok = res.count == 21 and res.certified

    radii = (10.0, 20.0, 30.0, 40.0, 50.0, 60.0)
    spec = ComplexSpectrum((0, 1, 1j))
    pred_per = expsum_slope(spec, SlopeConvention.PERIMETER)
    pred_semi = expsum_slope(spec, SlopeConvention.SEMIPERIMETER)
    within, semi_worse = 0, 0
    for i in range(20):
        f = sample_expsum(spec, RngStream(SEED, i))
        counts = [disk_zeros_count(f, r).count for r in radii]
        slope, _, _ = slope_fit(radii, counts)
        if abs(slope - pred_per) / pred_per < 0.05:
            within += 1
        if abs(slope - pred_semi) >= 3 * abs(slope - pred_per):
            semi_worse += 1
    b_ok = within >= 19 and semi_worse == 20

    f_sin = ExpSum(ComplexSpectrum((-1j, 1j)), (1.0, -1.0))
    counts = [disk_zeros_count(f_sin, r).count for r in radii]
    slope_sin, _, _ = slope_fit(radii, counts)
    c_ok = abs(slope_sin - 2 / math.pi) <= 0.02 * (2 / math.pi)
    elapsed = time.perf_counter() - t0
    check(
        11,
        a_ok and b_ok and c_ok and elapsed < 300.0,
        f"(a) integer count 21: {a_ok}; (b) {within}/20 slopes within 5% of {pred_per:.5f}, "
        f"semiperimeter residual >= 3x larger in {semi_worse}/20; "
        f"(c) sine slope {slope_sin:.5f} vs {2 / math.pi:.5f} within 2%; runtime {elapsed:.0f}s < 300s",
    )


def test_c12_local_count_bound():
    rng = np.random.default_rng(SEED + 12)
    counts, dists = [], []
    for i in range(100):
        lams = rng.normal(size=3) + 1j * rng.normal(size=3)
        f = sample_expsum(ComplexSpectrum(tuple(lams)), RngStream(SEED + 1, i))
        for _ in range(100):
            z = complex(rng.uniform(-50, 50), rng.uniform(-50, 50))
            if abs(z) > 50:
                z *= 50 / abs(z)
            counts.append(disk_zeros_count(f, 1.0, center=z).count)
            dists.append(abs(z))
    counts = np.array(counts, float)
    dists = np.array(dists)
    bound_ok = counts.max() <= 2 * (3 - 1) + 2
    x = dists - dists.mean()
    slope = float(np.dot(x, counts - counts.mean()) / np.dot(x, x))
    resid = counts - counts.mean() - slope * x
    slope_se = math.sqrt(float(np.dot(resid, resid)) / (len(counts) - 2) / float(np.dot(x, x)))
    trend_ok = abs(slope) <= 3 * slope_se
    check(
        12,
        bound_ok and trend_ok,
        f"max recentred unit-disk count {int(counts.max())} <= 6; "
        f"|z|-trend slope {slope:+.2e} within 3 x {slope_se:.2e}",
    )


def test_c13_pseudovolume_examples():
    tri = ComplexPolytope(1, np.array([[0j], [1 + 0j], [1j]]))
    sq = ComplexPolytope(2, np.array([[0j, 0j], [1 + 0j, 0j], [1 + 0j, 1 + 0j], [0j, 1 + 0j]]))
    seg = ComplexPolytope(1, np.array([[0j], [TWO_PI * 1j]]))
    results = []
    for poly, target in ((tri, (2 + math.sqrt(2)) / 2), (sq, 1.0), (seg, TWO_PI)):
        detail = pseudovolume_detail(poly, angle_samples=200_000, seed=SEED)
        tol = max(3 * detail.stderr, 1e-9 * (1 + abs(target)))
        results.append((detail.value, target, abs(detail.value - target) <= tol))
    ok = all(r[2] for r in results)
    check(
        13,
        ok,
        "; ".join(f"pvol {v:.5f} vs {t:.5f}" for v, t, _ in results),
    )


def test_c14_oracle_cross_agreement():
    certified = 0
    for i in range(10_000):
        res = real_roots_count(sample_kac(20, RngStream(SEED + 14, i)))
        certified += res.certified
    rate = certified / 10_000
    check(14, rate >= 0.999, f"companion vs Sturm agreement rate {rate:.4f} >= 0.999 on 10000 degree-20 draws")
