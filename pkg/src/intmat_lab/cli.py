"""Command-line front end: counting, sampling, histograms, curves, verification, reports.

Output contract (stable for CI):

* stdout carries the document (CSV or JSON per --format; reports are JSON,
  verify emits a JSON summary), stderr carries logs.
* every document embeds its run manifest; rerunning the same command with the
  same seed/workers reproduces the numeric fields byte-for-byte (set
  SOURCE_DATE_EPOCH to also pin the manifest timestamp).
* CSV: comma separated, header row, LF line endings, probabilities and
  densities with 12 significant digits.  Trailing non-data rows are tagged in
  the first column: ``meta`` (histogram normalizer and area) and ``manifest``
  (the JSON manifest as a single quoted field).
* exit codes: 0 success, 1 usage error, 2 verification failure, 3 budget
  refusal (the message names the exceeded budget).
"""

from __future__ import annotations

import argparse
import csv
import datetime as _dt
import json
import math
import os
import sys
from typing import Sequence

import numpy as np

from . import __version__, counting, curves, properties, sampling
from .budgets import ENV_MEMORY_MB, BudgetExceededError, memory_budget_bytes
from .linalg import (
    IntMatrix,
    adjugate,
    char_poly,
    det,
    eigenvalue_modulus_bound,
    gershgorin_disks,
    integer_eigenvalues,
    verify_adjugate_identity,
)

SCHEMA = "intmat-lab/1"

_PROPERTY_FLAGS = {
    "singular": "singular",
    "integer-eig": "integer_eig",
    "real-eig": "real_eig",
    "lambda-eig": "lambda_eig",
    "always": "always",
}


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    """argparse exits with status 2 on usage errors; the contract wants 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(1, f"{self.prog}: error: {message}\n")


def _timestamp() -> str:
    epoch = os.environ.get("SOURCE_DATE_EPOCH")
    if epoch is not None:
        moment = _dt.datetime.fromtimestamp(int(epoch), tz=_dt.timezone.utc)
    else:
        moment = _dt.datetime.now(tz=_dt.timezone.utc)
    return moment.isoformat()


def _manifest(subcommand: str, params: dict, *, randomized: bool = False) -> dict:
    manifest = {
        "schema": SCHEMA,
        "tool_version": __version__,
        "subcommand": subcommand,
        "parameters": params,
        "budget_mb": memory_budget_bytes() // (1024 * 1024),
        "timestamp": _timestamp(),
    }
    if randomized:
        manifest["generator"] = sampling.GENERATOR_ID
    return manifest


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _write_csv(header: list[str], rows: list[list], manifest: dict, extra: list[list] | None = None):
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(header)
    writer.writerows(rows)
    for row in extra or []:
        writer.writerow(row)
    pad = [""] * max(0, len(header) - 2)
    writer.writerow(["manifest", json.dumps(manifest, sort_keys=True)] + pad)


def _write_json(document: dict):
    json.dump(document, sys.stdout, indent=2, sort_keys=False)
    sys.stdout.write("\n")


def _parse_k_grid(args, *, minimum: int = 1) -> list[int]:
    if getattr(args, "k", None) is not None and getattr(args, "k_grid", None):
        raise UsageError("give either --k or --k-grid, not both")
    if getattr(args, "k", None) is not None:
        grid = [args.k]
    elif getattr(args, "k_grid", None):
        try:
            grid = [int(tok) for tok in args.k_grid.split(",") if tok.strip()]
        except ValueError:
            raise UsageError(f"--k-grid must be comma-separated integers, got {args.k_grid!r}")
    else:
        raise UsageError("one of --k or --k-grid is required")
    if not grid or any(k < minimum for k in grid):
        raise UsageError(f"k values must be >= {minimum}")
    return grid


def _resolve_property(args) -> tuple[str, int | None]:
    name = _PROPERTY_FLAGS[args.property]
    lam = getattr(args, "lam", None)
    if name == "lambda_eig":
        if lam is None:
            raise UsageError("--property lambda-eig requires --lambda")
    elif lam is not None:
        raise UsageError("--lambda only applies to --property lambda-eig")
    return name, lam


# ---------------------------------------------------------------------------
# count


def _count_record(name: str, lam: int | None, n: int, k: int) -> counting.CountRecord:
    if name == "always":
        total = (2 * k + 1) ** (n * n)
        return counting.CountRecord("always", n, k, total, total)
    if n == 2:
        if name == "singular":
            return counting.count_singular_2x2(k)
        if name == "integer_eig":
            return counting.count_integer_eig_2x2(k)
        if name == "real_eig":
            return counting.count_real_eig_2x2(k)
        return counting.count_lambda_eig_2x2(k, lam)
    if name == "real_eig":
        raise UsageError("real-eig counts are defined for n = 2 only")
    if name == "integer_eig":
        return counting.count_integer_eig_any_n(n, k)
    prop = properties.by_name(name, lam)
    return counting.brute_force_count(n, k, prop)


def cmd_count(args) -> int:
    name, lam = _resolve_property(args)
    grid = _parse_k_grid(args)
    records = [_count_record(name, lam, args.n, k) for k in grid]
    params = {
        "property": args.property,
        "lambda": lam,
        "n": args.n,
        "k_grid": grid,
        "format": args.format,
    }
    manifest = _manifest("count", params)
    if args.format == "csv":
        rows = [
            [r.property, r.n, r.k, r.count, r.total, _fmt(r.probability_float)] for r in records
        ]
        _write_csv(["property", "n", "k", "count", "total", "probability"], rows, manifest)
    else:
        _write_json(
            {
                "schema": SCHEMA,
                "command": "count",
                "records": [
                    {
                        "property": r.property,
                        "n": r.n,
                        "k": r.k,
                        "count": r.count,
                        "total": r.total,
                        "probability": float(_fmt(r.probability_float)),
                    }
                    for r in records
                ],
                "manifest": manifest,
            }
        )
    return 0


# ---------------------------------------------------------------------------
# estimate


def cmd_estimate(args) -> int:
    name, lam = _resolve_property(args)
    if name == "real_eig" and args.n != 2:
        raise UsageError("real-eig estimates are defined for n = 2 only")
    prop = properties.by_name(name, lam)
    config = sampling.SamplerConfig(
        n=args.n, k=args.k, samples=args.samples, seed=args.seed, workers=args.workers
    )
    record = sampling.estimate_probability(config, prop)
    lo, hi = record.ci95
    params = {
        "property": args.property,
        "lambda": lam,
        "n": args.n,
        "k": args.k,
        "samples": args.samples,
        "seed": args.seed,
        "workers": args.workers,
        "format": args.format,
    }
    manifest = _manifest("estimate", params, randomized=True)
    if args.format == "csv":
        header = [
            "property", "n", "k", "samples", "seed", "workers",
            "hits", "p_hat", "stderr", "ci_lo", "ci_hi", "generator",
        ]
        row = [
            record.property, config.n, config.k, config.samples, config.seed, config.workers,
            record.hits, _fmt(record.p_hat), _fmt(record.stderr), _fmt(lo), _fmt(hi),
            record.generator,
        ]
        _write_csv(header, [row], manifest)
    else:
        _write_json(
            {
                "schema": SCHEMA,
                "command": "estimate",
                "record": {
                    "property": record.property,
                    "n": config.n,
                    "k": config.k,
                    "samples": config.samples,
                    "seed": config.seed,
                    "workers": config.workers,
                    "hits": record.hits,
                    "p_hat": float(_fmt(record.p_hat)),
                    "stderr": float(_fmt(record.stderr)),
                    "ci95": [float(_fmt(lo)), float(_fmt(hi))],
                    "generator": record.generator,
                },
                "manifest": manifest,
            }
        )
    return 0


# ---------------------------------------------------------------------------
# hist


def cmd_hist(args) -> int:
    mode = "integer_spectrum" if args.mode == "integer" else "real_spectrum"
    if args.n != 2:
        raise UsageError("histograms are defined for n = 2 only")
    if args.bins < 1:
        raise UsageError("--bins must be >= 1")
    bin_width = 4.0 / args.bins
    if args.source == "exact":
        if mode != "integer_spectrum":
            raise UsageError("exact histograms exist only for --mode integer")
        if args.samples is not None or args.seed is not None:
            raise UsageError("--samples/--seed apply to --source sampled only")
        hist = sampling.eigenvalue_histogram_exact(args.k, mode, bin_width)
        randomized = False
    else:
        if args.samples is None or args.seed is None:
            raise UsageError("--source sampled requires --samples and --seed")
        config = sampling.SamplerConfig(
            n=2, k=args.k, samples=args.samples, seed=args.seed, workers=args.workers
        )
        hist = sampling.eigenvalue_histogram_sampled(config, mode, bin_width)
        randomized = True
    params = {
        "mode": args.mode,
        "source": args.source,
        "n": args.n,
        "k": args.k,
        "bins": args.bins,
        "samples": args.samples,
        "seed": args.seed,
        "workers": args.workers if args.source == "sampled" else None,
        "format": args.format,
    }
    manifest = _manifest("hist", params, randomized=randomized)
    edges = hist.edges()
    if args.format == "csv":
        rows = [
            [_fmt(edges[i]), _fmt(edges[i + 1]), _fmt(float(hist.density[i]))]
            for i in range(hist.nbins)
        ]
        extra = [["meta", str(hist.normalizer), f"{hist.area():.6f}"]]
        _write_csv(["delta_lo", "delta_hi", "density"], rows, manifest, extra=extra)
    else:
        _write_json(
            {
                "schema": SCHEMA,
                "command": "hist",
                "histogram": {
                    "k": hist.k,
                    "mode": hist.mode,
                    "source": hist.source,
                    "bin_width": hist.bin_width,
                    "normalizer": hist.normalizer,
                    "area": float(f"{hist.area():.6f}"),
                    "bins": [
                        {
                            "delta_lo": float(_fmt(edges[i])),
                            "delta_hi": float(_fmt(edges[i + 1])),
                            "count": int(hist.bins[i]),
                            "density": float(_fmt(float(hist.density[i]))),
                        }
                        for i in range(hist.nbins)
                    ],
                },
                "manifest": manifest,
            }
        )
    return 0


# ---------------------------------------------------------------------------
# curve


def cmd_curve(args) -> int:
    if args.step <= 0:
        raise UsageError("--step must be positive")
    table_z = curves.curve_table("u_z", args.step)
    table_r = curves.curve_table("u_r", args.step)
    params = {"step": args.step, "format": args.format}
    manifest = _manifest("curve", params)
    if args.format == "csv":
        rows = [
            [_fmt(d), _fmt(vz), _fmt(vr)]
            for d, vz, vr in zip(table_z.deltas, table_z.values, table_r.values)
        ]
        _write_csv(["delta", "u_z", "u_r"], rows, manifest)
    else:
        _write_json(
            {
                "schema": SCHEMA,
                "command": "curve",
                "step": args.step,
                "rows": [
                    {"delta": float(_fmt(d)), "u_z": float(_fmt(vz)), "u_r": float(_fmt(vr))}
                    for d, vz, vr in zip(table_z.deltas, table_z.values, table_r.values)
                ],
                "manifest": manifest,
            }
        )
    return 0


# ---------------------------------------------------------------------------
# verify


def _random_matrix(rng: np.random.Generator, n: int, k: int) -> IntMatrix:
    return IntMatrix(n, tuple(int(x) for x in rng.integers(-k, k + 1, size=n * n)), bound=k)


def _check_identity(args) -> list[dict]:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(args.seed)))
    n, k = args.n, args.k
    if n < 3:
        raise UsageError("identity suite needs --n >= 3")
    bad: list[int] | None = None
    for _ in range(args.trials):
        m = _random_matrix(rng, n, k)
        if not verify_adjugate_identity(m):
            bad = list(m.entries)
            break
    checks = [
        {
            "name": f"minor-identity n={n} trials={args.trials}",
            "passed": bad is None,
            "counterexample": bad,
        }
    ]
    m = _random_matrix(rng, n, k)
    prod = m @ adjugate(m)
    expect = IntMatrix(n, tuple(det(m) if i == j else 0 for i in range(n) for j in range(n)))
    checks.append(
        {
            "name": "adjugate defining identity M*adj(M) == det(M)*I",
            "passed": prod.entries == expect.entries,
            "counterexample": None if prod.entries == expect.entries else list(m.entries),
        }
    )
    x = int(rng.integers(-3 * k, 3 * k + 1))
    poly = char_poly(m)
    consistent = poly(x) == _det_x_minus(m, x)
    checks.append(
        {
            "name": f"char-poly evaluation matches det(xI - M) at x={x}",
            "passed": consistent,
            "counterexample": None if consistent else list(m.entries),
        }
    )
    return checks


def _det_x_minus(m: IntMatrix, x: int) -> int:
    n = m.n
    neg = [-e for e in m.entries]
    for i in range(n):
        neg[i * n + i] += x
    return det(IntMatrix(n, tuple(neg)))


def _check_gershgorin(args) -> list[dict]:
    rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(args.seed)))
    n, k = args.n, args.k
    bad = None
    for _ in range(args.trials):
        m = _random_matrix(rng, n, k)
        disks = gershgorin_disks(m)
        bound = eigenvalue_modulus_bound(m)
        for lam in integer_eigenvalues(m):
            if abs(lam) > bound or not any(d.contains(lam) for d in disks):
                bad = {"matrix": list(m.entries), "eigenvalue": lam}
                break
        if bad:
            break
    checks = [
        {
            "name": f"integer eigenvalues inside Gershgorin disks and [-nk, nk] "
            f"(n={n}, k={k}, trials={args.trials})",
            "passed": bad is None,
            "counterexample": bad,
        }
    ]
    extremal_ok = True
    detail = None
    for nn in range(2, 7):
        m = IntMatrix.filled(nn, k)
        eigs = integer_eigenvalues(m)
        if nn * k not in eigs:
            extremal_ok = False
            detail = {"n": nn, "expected": nn * k, "got": eigs}
            break
    checks.append(
        {
            "name": f"all-entries-k matrix attains eigenvalue n*k (n=2..6, k={k})",
            "passed": extremal_ok,
            "counterexample": detail,
        }
    )
    return checks


def _check_oracle(args) -> list[dict]:
    checks = []
    for k in range(1, args.k_max + 1):
        fast = (
            counting.count_singular_2x2(k).count,
            counting.count_integer_eig_2x2(k).count,
            counting.count_real_eig_2x2(k).count,
        )
        brute = tuple(
            counting.brute_force_count(2, k, properties.by_name(name)).count
            for name in ("singular", "integer_eig", "real_eig")
        )
        checks.append(
            {
                "name": f"fast 2x2 counters equal brute force at k={k}",
                "passed": fast == brute,
                "counterexample": None if fast == brute else {"fast": fast, "brute": brute},
            }
        )
    lam_k = min(args.k_max, 3)
    sweep_ok = True
    detail = None
    for k in range(1, lam_k + 1):
        for lam in range(-2 * k, 2 * k + 1):
            fast = counting.count_lambda_eig_2x2(k, lam).count
            brute = counting.brute_force_count(2, k, properties.lambda_eig(lam)).count
            if fast != brute:
                sweep_ok = False
                detail = {"k": k, "lambda": lam, "fast": fast, "brute": brute}
                break
        if not sweep_ok:
            break
    checks.append(
        {
            "name": f"lambda-eigenvalue counter equals brute force (k <= {lam_k}, all lambda)",
            "passed": sweep_ok,
            "counterexample": detail,
        }
    )
    return checks


def _check_curves(_args) -> list[dict]:
    consts = curves.theory_constants()
    sq = curves.SQRT2
    eps = 1e-12
    checks = []

    def add(name, passed, detail=None):
        checks.append({"name": name, "passed": bool(passed), "counterexample": detail})

    v_lo = 4 - 2 * sq - 2 + 2 * math.log(1 + sq) + 2 * (sq - 1) * math.log(sq - 1)
    add(
        "v-profile branches agree at sqrt(2)",
        abs(curves.v_profile(sq) - v_lo) < eps
        and abs(curves.v_profile(math.nextafter(sq, 0)) - curves.v_profile(math.nextafter(sq, 2)))
        < 1e-9,
        {"value": curves.v_profile(sq)},
    )
    w_mid = curves.w_profile(1.0)
    add("w-profile value 15/32 at delta=1", abs(w_mid - 15.0 / 32.0) < eps, {"value": w_mid})
    add(
        "w-profile branches agree at sqrt(2)",
        abs(curves.w_profile(math.nextafter(sq, 0)) - curves.w_profile(math.nextafter(sq, 2)))
        < 1e-9,
        {"value": curves.w_profile(sq)},
    )
    add("v(0) == 4", curves.v_profile(0.0) == 4.0)
    add("v(2) == 0 and w(2) == 0", curves.v_profile(2.0) == 0.0 and curves.w_profile(2.0) == 0.0)
    add(
        "alpha matches 0.272008 to 6 decimal places",
        abs(consts.alpha - 0.272008) < 5e-7,
        {"alpha": consts.alpha},
    )
    area_z = curves.integrate_curve("u_z", -2.0, 2.0, 1e-9)
    area_r = curves.integrate_curve("u_r", -2.0, 2.0, 1e-9)
    add("area under u_z equals 2 within 1e-6", abs(area_z - 2.0) < 1e-6, {"area": area_z})
    add("area under u_r equals 2 within 1e-6", abs(area_r - 2.0) < 1e-6, {"area": area_r})
    grid = [i / 1000.0 for i in range(2001)]
    even_ok = all(
        abs(curves.u_z(d) - curves.u_z(-d)) < eps and abs(curves.u_r(d) - curves.u_r(-d)) < eps
        for d in grid[:: 50]
    )
    add("u_z and u_r are even", even_ok)
    argmax_r = max(grid, key=curves.u_r)
    argmax_z = max(grid, key=curves.u_z)
    add(
        "u_r bimodal: argmax |delta| in [0.70, 0.80] on a 1e-3 grid",
        0.70 <= argmax_r <= 0.80,
        {"argmax": argmax_r},
    )
    add("u_z unimodal with maximum at delta=0", argmax_z == 0.0, {"argmax": argmax_z})
    return checks


def cmd_verify(args) -> int:
    suites = {
        "identity": _check_identity,
        "gershgorin": _check_gershgorin,
        "oracle": _check_oracle,
        "curves": _check_curves,
    }
    names = list(suites) if args.suite == "all" else [args.suite]
    checks = []
    for name in names:
        checks.extend(suites[name](args))
    all_passed = all(c["passed"] for c in checks)
    for c in checks:
        tag = "PASS" if c["passed"] else "FAIL"
        print(f"[{tag}] {c['name']}", file=sys.stderr)
        if not c["passed"] and c.get("counterexample") is not None:
            print(f"       counterexample: {c['counterexample']}", file=sys.stderr)
    params = {
        "suite": args.suite,
        "n": args.n,
        "k": args.k,
        "trials": args.trials,
        "seed": args.seed,
        "k_max": args.k_max,
    }
    _write_json(
        {
            "schema": SCHEMA,
            "command": "verify",
            "suite": args.suite,
            "passed": all_passed,
            "checks": checks,
            "manifest": _manifest("verify", params, randomized=args.suite in ("identity", "gershgorin", "all")),
        }
    )
    return 0 if all_passed else 2


# ---------------------------------------------------------------------------
# report


def cmd_report(args) -> int:
    grid = _parse_k_grid(args, minimum=2)
    if len(grid) < 2:
        raise UsageError("--k-grid needs at least 2 values")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise UsageError("--k-grid must be strictly increasing")
    if args.target == "singular":
        empirical = [counting.count_singular_2x2(k) for k in grid]
        report = curves.convergence_report(empirical, "singular")
    elif args.target == "integer-eig":
        empirical = [counting.count_integer_eig_2x2(k) for k in grid]
        report = curves.convergence_report(empirical, "integer_eig")
    else:
        if args.bins < 1:
            raise UsageError("--bins must be >= 1")
        hists = [
            sampling.eigenvalue_histogram_exact(k, bin_width=4.0 / args.bins) for k in grid
        ]
        report = curves.convergence_report(hists, "histogram")
    params = {"target": args.target, "k_grid": grid, "bins": args.bins}
    _write_json(
        {
            "schema": SCHEMA,
            "command": "report",
            "target": report.target,
            "constant": report.constant,
            "gate": report.gate,
            "rows": [
                {
                    "k": row.k,
                    "empirical": row.empirical,
                    "theoretical": row.theoretical,
                    "ratio": row.ratio,
                    "deviation": row.deviation,
                    "improved": row.improved,
                }
                for row in report.rows
            ],
            "trend_ok": report.trend_ok,
            "metadata": dict(report.metadata),
            "manifest": _manifest("report", params),
        }
    )
    return 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="intmat",
        description="Exact counts, Monte Carlo estimates, and limiting-curve comparisons "
        "for random integer matrices with entries in [-k, k].",
    )
    parser.add_argument("--version", action="version", version=f"intmat-lab {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True, parser_class=_Parser)

    def add_format(p):
        p.add_argument("--format", choices=("csv", "json"), default="csv")

    p_count = sub.add_parser("count", help="exact counts of matrices with a property")
    p_count.add_argument("--property", choices=sorted(_PROPERTY_FLAGS), required=True)
    p_count.add_argument("--lambda", dest="lam", type=int, default=None)
    p_count.add_argument("--n", type=int, default=2)
    p_count.add_argument("--k", type=int, default=None)
    p_count.add_argument("--k-grid", default=None)
    add_format(p_count)
    p_count.set_defaults(func=cmd_count)

    p_est = sub.add_parser("estimate", help="Monte Carlo probability estimate")
    p_est.add_argument("--property", choices=sorted(_PROPERTY_FLAGS), required=True)
    p_est.add_argument("--lambda", dest="lam", type=int, default=None)
    p_est.add_argument("--n", type=int, default=2)
    p_est.add_argument("--k", type=int, required=True)
    p_est.add_argument("--samples", type=int, required=True)
    p_est.add_argument("--seed", type=int, required=True)
    p_est.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    add_format(p_est)
    p_est.set_defaults(func=cmd_estimate)

    p_hist = sub.add_parser("hist", help="scaled eigenvalue histogram (delta = lambda/k)")
    p_hist.add_argument("--mode", choices=("integer", "real"), required=True)
    p_hist.add_argument("--source", choices=("exact", "sampled"), required=True)
    p_hist.add_argument("--k", type=int, required=True)
    p_hist.add_argument("--n", type=int, default=2)
    p_hist.add_argument("--bins", type=int, default=100)
    p_hist.add_argument("--samples", type=int, default=None)
    p_hist.add_argument("--seed", type=int, default=None)
    p_hist.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    add_format(p_hist)
    p_hist.set_defaults(func=cmd_hist)

    p_curve = sub.add_parser("curve", help="limit curves u_z and u_r on a delta grid")
    p_curve.add_argument("--step", type=float, default=0.01)
    add_format(p_curve)
    p_curve.set_defaults(func=cmd_curve)

    p_verify = sub.add_parser("verify", help="run an invariant suite")
    p_verify.add_argument("suite", choices=("identity", "gershgorin", "oracle", "curves", "all"))
    p_verify.add_argument("--n", type=int, default=4)
    p_verify.add_argument("--k", type=int, default=10)
    p_verify.add_argument("--trials", type=int, default=1000)
    p_verify.add_argument("--seed", type=int, default=1)
    p_verify.add_argument("--k-max", dest="k_max", type=int, default=8)
    p_verify.set_defaults(func=cmd_verify)

    p_report = sub.add_parser("report", help="theory-vs-empirical convergence report (JSON)")
    p_report.add_argument("--target", choices=("singular", "integer-eig", "histogram"), required=True)
    p_report.add_argument("--k-grid", required=True)
    p_report.add_argument("--bins", type=int, default=100)
    p_report.set_defaults(func=cmd_report)

    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"intmat: error: {exc}", file=sys.stderr)
        return 1
    except BudgetExceededError as exc:
        print(f"intmat: budget refusal: {exc} (configure {ENV_MEMORY_MB} for memory caps)", file=sys.stderr)
        return 3


def entrypoint() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entrypoint()
