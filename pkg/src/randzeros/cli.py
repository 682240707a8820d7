"""Command-line surface: predictors, counters, geometry and experiments.

Exit codes: 0 success or experiment pass, 1 experiment failure, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import math
import sys

import numpy as np

from . import geometry, predictors
from .harness import (
    DEFAULT_RADII,
    ExperimentConfig,
    ExperimentError,
    run_experiment,
    write_curve_csv,
    write_per_trial_csv,
    write_report_json,
)
from .spectra import (
    ExpSum,
    SpectrumParseError,
    TrigPolynomial,
    parse_complex,
    parse_complex_list,
    parse_complex_spectrum,
    parse_real_list,
    parse_spectrum_1d,
    parse_spectrum_nd,
)
from .zerocount import circle_zeros_count, disk_zeros_count, real_roots_count
from .ensembles import RealPolynomial


def _print_table(rows: list[tuple[str, object]]) -> None:
    width = max(len(name) for name, _ in rows)
    for name, value in rows:
        if isinstance(value, float):
            print(f"{name:<{width}}  {value:.6f}")
        else:
            print(f"{name:<{width}}  {value}")


def _write_out(path: str | None, payload: dict) -> None:
    if path:
        with open(path, "w") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")


def _resolve_seed(args) -> int:
    if getattr(args, "seed", None) is None:
        print("note: no --seed given, defaulting to 0")
        return 0
    return args.seed


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="randzeros",
        description="Predicted vs. empirical zero counts of random polynomials, "
        "trig polynomials and exponential sums.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    # predict ---------------------------------------------------------------
    p_pred = sub.add_parser("predict", help="closed-form predictions")
    pred_sub = p_pred.add_subparsers(dest="what", required=True)

    q = pred_sub.add_parser("kac", help="asymptotic mean real-root count")
    q.add_argument("--m", type=int, required=True, help="polynomial degree")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = pred_sub.add_parser("kostlan", help="mean real-root count sqrt(m)")
    q.add_argument("--m", type=int, required=True, help="polynomial degree")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = pred_sub.add_parser("trig1d", help="mean circle-zero count and reality probability")
    q.add_argument("--spectrum", required=True, help='1-d spectrum, e.g. "-3..3" or "-5,-2,2,5"')
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = pred_sub.add_parser("trig2d", help="mean torus-zero count of a 2-d system")
    q.add_argument("--spectrum", required=True, help='lattice spectrum, e.g. "(-1,-1)..(1,1)"')
    q.add_argument("--spectrum2", help="second spectrum for mixed systems (default: same)")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = pred_sub.add_parser("expsum", help="zeros-per-radius slope of an exponential sum")
    q.add_argument("--spectrum", required=True, help='complex spectrum, e.g. "0,1,1i"')
    q.add_argument(
        "--convention",
        choices=[c.value for c in predictors.SlopeConvention],
        default=predictors.SlopeConvention.PERIMETER.value,
        help="boundary convention (default: perimeter)",
    )
    q.add_argument("--out", help="write JSON report here (default: none)")

    # count -----------------------------------------------------------------
    p_count = sub.add_parser("count", help="certified zero counts of explicit functions")
    count_sub = p_count.add_subparsers(dest="what", required=True)

    q = count_sub.add_parser("poly", help="distinct real roots of a polynomial")
    q.add_argument("--coeffs", required=True, help='ascending coefficients, e.g. "-6,11,-6,1"')
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = count_sub.add_parser("circle", help="zeros of a trig polynomial on the circle")
    q.add_argument("--spectrum", required=True, help="centrally symmetric 1-d spectrum")
    q.add_argument("--c0", type=float, default=0.0, help="constant coefficient (default 0)")
    q.add_argument("--alphas", default="", help="cos coefficients per positive frequency")
    q.add_argument("--betas", default="", help="sin coefficients per positive frequency")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = count_sub.add_parser("expsum", help="zeros of an exponential sum in a disk")
    q.add_argument("--spectrum", required=True, help="complex spectrum")
    q.add_argument("--coeffs", required=True, help="complex coefficients, one per frequency")
    q.add_argument("--radius", type=float, required=True, help="disk radius")
    q.add_argument("--center", default="0", help="disk center (default 0)")
    q.add_argument("--out", help="write JSON report here (default: none)")

    # geom ------------------------------------------------------------------
    p_geom = sub.add_parser("geom", help="geometry of spectra")
    geom_sub = p_geom.add_subparsers(dest="what", required=True)

    q = geom_sub.add_parser("ellipsoid", help="Newton ellipsoid matrix and volume")
    q.add_argument("--spectrum", required=True, help="lattice spectrum")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = geom_sub.add_parser("hull", help="Newton polytope perimeter and area")
    q.add_argument("--spectrum", required=True, help="lattice (n-d) or complex spectrum")
    q.add_argument("--complex", action="store_true", help="parse the spectrum as complex points")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = geom_sub.add_parser("kappa", help="circle-embedding speed and length")
    q.add_argument("--spectrum", required=True, help="centrally symmetric 1-d spectrum")
    q.add_argument("--out", help="write JSON report here (default: none)")

    q = geom_sub.add_parser("mixed", help="mixed area of two Newton ellipsoids")
    q.add_argument("--spectrum", required=True, help="first lattice spectrum")
    q.add_argument("--spectrum2", required=True, help="second lattice spectrum")
    q.add_argument("--out", help="write JSON report here (default: none)")

    # experiment --------------------------------------------------------------
    p_exp = sub.add_parser("experiment", help="seeded Monte Carlo verification runs")
    p_exp.add_argument(
        "kind",
        choices=["kac", "kostlan", "trig1d", "trig2d", "trig2d_mixed", "crofton", "expsum"],
    )
    p_exp.add_argument("--m", type=int, help="degree for kac/kostlan")
    p_exp.add_argument("--spectrum", help="spectrum (grammar depends on kind)")
    p_exp.add_argument("--spectrum2", help="second spectrum for trig2d_mixed")
    p_exp.add_argument("--great-circle-dim", type=int, help="crofton: use a great circle in S^(d-1)")
    p_exp.add_argument("--trials", type=int, default=1000, help="Monte Carlo trials (default 1000)")
    p_exp.add_argument("--seed", type=int, help="RNG seed (default 0, with a notice)")
    p_exp.add_argument("--radii", help='expsum radii, e.g. "10,20,30,40,50,60"')
    p_exp.add_argument("--z-max", type=float, default=3.0, help="z-score pass threshold (default 3.0)")
    p_exp.add_argument("--fit-slack", type=float, default=0.05, help="relative slope tolerance (default 0.05)")
    p_exp.add_argument("--band", help='verdict band "lo,hi" instead of a z-test')
    p_exp.add_argument("--rel-slack", type=float, help="relative fallback tolerance for mean tests")
    p_exp.add_argument("--workers", type=int, default=1, help="worker processes (default 1)")
    p_exp.add_argument("--per-trial", action="store_true", help="keep per-trial rows in the report")
    p_exp.add_argument("--out", help="write the JSON report here")
    p_exp.add_argument("--per-trial-csv", help="write per-trial CSV here (implies --per-trial)")
    p_exp.add_argument("--emit-curve", help="expsum: write (radius, count, fit) CSV here")

    # pvol --------------------------------------------------------------------
    p_pvol = sub.add_parser("pvol", help="pseudovolume of a polytope in C^n")
    src = p_pvol.add_mutually_exclusive_group(required=True)
    src.add_argument("--vertices", help="JSON array of vertices, each an array of [re, im] pairs")
    src.add_argument("--vertices-file", help="file containing the same JSON")
    p_pvol.add_argument("--angle-samples", type=int, default=200_000, help="Monte Carlo angle draws (default 200000)")
    p_pvol.add_argument("--seed", type=int, help="RNG seed (default 0, with a notice)")
    p_pvol.add_argument("--expected", type=float, help="reference value to compare against")
    p_pvol.add_argument("--out", help="write JSON report here (default: none)")

    return parser


# ---------------------------------------------------------------------------


def _cmd_predict(args) -> int:
    if args.what == "kac":
        value = predictors.kac_asymptotic(args.m)
        rows = [("asymptotic_mean", value)]
    elif args.what == "kostlan":
        value = math.sqrt(args.m)
        rows = [("expected_mean", value)]
    elif args.what == "trig1d":
        s = parse_spectrum_1d(args.spectrum)
        rows = [
            ("expected", predictors.trig_expected(s)),
            ("probability", predictors.trig_prob(s)),
        ]
    elif args.what == "trig2d":
        s = parse_spectrum_nd(args.spectrum)
        if args.spectrum2:
            s2 = parse_spectrum_nd(args.spectrum2)
            rows = [("expected_mixed", predictors.nd_expected_mixed(s, s2))]
        else:
            rows = [
                ("expected", predictors.nd_expected(s)),
                ("probability", predictors.nd_prob(s)),
            ]
    else:
        s = parse_complex_spectrum(args.spectrum)
        conv = predictors.SlopeConvention(args.convention)
        rows = [
            ("slope", predictors.expsum_slope(s, conv)),
            ("slope_perimeter", predictors.expsum_slope(s, predictors.SlopeConvention.PERIMETER)),
            ("slope_semiperimeter", predictors.expsum_slope(s, predictors.SlopeConvention.SEMIPERIMETER)),
        ]
    _print_table(rows)
    _write_out(args.out, dict(rows))
    return 0


def _cmd_count(args) -> int:
    if args.what == "poly":
        coeffs = parse_real_list(args.coeffs)
        res = real_roots_count(RealPolynomial(coeffs))
    elif args.what == "circle":
        s = parse_spectrum_1d(args.spectrum)
        f = TrigPolynomial(s, args.c0, parse_real_list(args.alphas), parse_real_list(args.betas))
        res = circle_zeros_count(f)
    else:
        s = parse_complex_spectrum(args.spectrum)
        coeffs = parse_complex_list(args.coeffs)
        f = ExpSum(s, coeffs)
        res = disk_zeros_count(f, args.radius, parse_complex(args.center))
    rows = [("count", res.count), ("certified", res.certified)]
    _print_table(rows)
    payload = {"count": res.count, "certified": res.certified, "min_abs": res.min_abs, "depth": res.depth}
    _write_out(args.out, payload)
    return 0


def _cmd_geom(args) -> int:
    if args.what == "ellipsoid":
        s = parse_spectrum_nd(args.spectrum)
        ell = geometry.newton_ellipsoid(s)
        vol = geometry.ellipsoid_volume(ell)
        rows = [("volume", vol)]
        for i, row in enumerate(ell.M):
            rows.append((f"M[{i}]", "  ".join(f"{x:.12g}" for x in row)))
        payload = {"volume": vol, "matrix": ell.M.tolist()}
    elif args.what == "hull":
        if args.complex:
            cs = parse_complex_spectrum(args.spectrum)
            pts = np.array([(z.real, z.imag) for z in cs.points])
        else:
            s = parse_spectrum_nd(args.spectrum)
            pts = s.as_array()
        hull = geometry.convex_hull_2d(pts)
        rows = [
            ("perimeter", geometry.polygon_perimeter(hull)),
            ("area", geometry.polygon_area(hull)),
            ("vertices", hull.vertices.tolist()),
        ]
        payload = {
            "perimeter": geometry.polygon_perimeter(hull),
            "area": geometry.polygon_area(hull),
            "vertices": hull.vertices.tolist(),
        }
    elif args.what == "kappa":
        s = parse_spectrum_1d(args.spectrum)
        rows = [("speed", geometry.kappa_speed(s, 0.0)), ("length", geometry.kappa_length(s))]
        payload = dict(rows)
    else:
        s = parse_spectrum_nd(args.spectrum)
        s2 = parse_spectrum_nd(args.spectrum2)
        v = geometry.mixed_area(geometry.newton_ellipsoid(s), geometry.newton_ellipsoid(s2))
        rows = [("mixed_area", v)]
        payload = dict(rows)
    _print_table(rows)
    _write_out(args.out, payload)
    return 0


def _cmd_experiment(args) -> int:
    seed = _resolve_seed(args)
    kw = dict(
        kind=args.kind,
        trials=args.trials,
        seed=seed,
        z_max=args.z_max,
        fit_slack=args.fit_slack,
        workers=args.workers,
        keep_per_trial=args.per_trial or bool(args.per_trial_csv) or bool(args.emit_curve),
    )
    if args.band:
        lo, hi = (float(x) for x in args.band.split(","))
        kw["band"] = (lo, hi)
    if args.rel_slack is not None:
        kw["rel_slack"] = args.rel_slack
    if args.kind in ("kac", "kostlan"):
        if args.m is None:
            raise SpectrumParseError("--m is required for kac/kostlan", 0)
        kw["m"] = args.m
    elif args.kind == "trig1d":
        kw["spectrum_1d"] = parse_spectrum_1d(args.spectrum)
    elif args.kind == "trig2d":
        kw["spectrum_nd"] = parse_spectrum_nd(args.spectrum)
    elif args.kind == "trig2d_mixed":
        kw["spectrum_nd"] = parse_spectrum_nd(args.spectrum)
        kw["spectrum_nd2"] = parse_spectrum_nd(args.spectrum2)
    elif args.kind == "crofton":
        if args.great_circle_dim:
            kw["curve"] = "great_circle"
            kw["curve_dim"] = args.great_circle_dim
        else:
            kw["spectrum_1d"] = parse_spectrum_1d(args.spectrum)
    elif args.kind == "expsum":
        kw["complex_spectrum"] = parse_complex_spectrum(args.spectrum)
        kw["radii"] = tuple(parse_real_list(args.radii)) if args.radii else DEFAULT_RADII
    cfg = ExperimentConfig(**kw)
    report = run_experiment(cfg)
    rows = [
        ("kind", cfg.kind),
        ("trials", cfg.trials),
        ("empirical_mean", report.empirical_mean),
        ("empirical_stderr", report.empirical_stderr),
        ("predicted", report.predicted),
        ("z_score", report.z_score),
        ("discarded_trials", report.discarded_trials),
        ("verdict", report.verdict),
    ]
    if report.predicted_semiperimeter is not None:
        rows.insert(-2, ("predicted_semiperimeter", report.predicted_semiperimeter))
    _print_table(rows)
    if args.out:
        write_report_json(report, args.out)
    if args.per_trial_csv:
        write_per_trial_csv(report, args.per_trial_csv)
    if args.emit_curve:
        write_curve_csv(report, cfg.radii, args.emit_curve)
    return 0 if report.passed else 1


def _cmd_pvol(args) -> int:
    seed = _resolve_seed(args)
    text = args.vertices
    if args.vertices_file:
        with open(args.vertices_file) as fh:
            text = fh.read()
    try:
        rows_json = json.loads(text)
    except json.JSONDecodeError as e:
        raise SpectrumParseError(f"bad vertex JSON: {e.msg}", e.pos) from None
    poly = geometry.ComplexPolytope.from_vertex_rows(rows_json)
    detail = geometry.pseudovolume_detail(poly, args.angle_samples, seed)
    leading = detail.value / (2.0 * math.pi) ** poly.n
    rows = [
        ("pseudovolume", detail.value),
        ("stderr", detail.stderr),
        ("leading_coefficient", leading),
        ("faces", len(detail.faces)),
    ]
    payload = {
        "pseudovolume": detail.value,
        "stderr": detail.stderr,
        "leading_coefficient": leading,
        "faces": [
            {
                "vertices": list(f.indices),
                "volume": f.volume,
                "angle": f.angle,
                "angle_stderr": f.angle_stderr,
                "cosine": f.cosine,
            }
            for f in detail.faces
        ],
    }
    code = 0
    if args.expected is not None:
        tol = max(3.0 * detail.stderr, 1e-9 * (1.0 + abs(args.expected)))
        ok = abs(detail.value - args.expected) <= tol
        rows.append(("verdict", "pass" if ok else "fail"))
        payload["verdict"] = "pass" if ok else "fail"
        code = 0 if ok else 1
    _print_table(rows)
    _write_out(args.out, payload)
    return code


# flags whose values may start with "-" (spectra, coefficient lists, bands);
# joined into --flag=value form so argparse does not read them as options
_DASH_VALUE_FLAGS = {
    "--spectrum", "--spectrum2", "--coeffs", "--alphas", "--betas",
    "--band", "--radii", "--center", "--vertices", "--expected",
}


def _join_dash_values(argv: list[str]) -> list[str]:
    merged = []
    i = 0
    while i < len(argv):
        tok = argv[i]
        if tok in _DASH_VALUE_FLAGS and i + 1 < len(argv):
            merged.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            merged.append(tok)
            i += 1
    return merged


def main(argv=None) -> int:
    parser = _build_parser()
    if argv is None:
        argv = sys.argv[1:]
    args = parser.parse_args(_join_dash_values(list(argv)))
    try:
        if args.command == "predict":
            return _cmd_predict(args)
        if args.command == "count":
            return _cmd_count(args)
        if args.command == "geom":
            return _cmd_geom(args)
        if args.command == "experiment":
            return _cmd_experiment(args)
        return _cmd_pvol(args)
    except SpectrumParseError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2
    except ExperimentError as e:
        print(f"experiment failed: {e}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
