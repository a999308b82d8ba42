"""Command-line entry point.

Subcommands mirror the library operations one to one and emit
machine-readable reports (JSON by default, CSV or aligned text where it
makes sense).  Identical argv and seed give byte-identical output; every
error path prints a single-line JSON record to stderr.  Exit codes:
0 success, 1 domain error, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
from statistics import median

import numpy as np

from . import checks
from .converse_scan import ScanTarget, epsilon_schedule, scan
from .horn_realize import realize_triple, verify_theorem1_sweep
from .lr import find_scaling, lr_character_oracle, lr_general
from .parallel import default_workers
from .schur_weyl import DensityOperator, kw_bound, measurement_distribution
from .weights import SpectralTriple, parse_weight


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def _matrix_to_json(m: np.ndarray) -> list:
    return [[[float(v.real), float(v.imag)] for v in row] for row in m]


def _parse_density(diag: str | None, path: str | None) -> DensityOperator:
    if (diag is None) == (path is None):
        raise UsageError("give exactly one of a diagonal spectrum or a matrix file")
    if diag is not None:
        values = [float(tok) for tok in diag.split(",")]
        return DensityOperator.from_diagonal(values)
    with open(path) as fh:
        data = json.load(fh)
    entries = data["matrix"] if isinstance(data, dict) else data
    m = np.array(
        [[complex(c[0], c[1]) for c in row] for row in entries], dtype=complex
    )
    return DensityOperator(m)


def _emit(text: str, out: str | None) -> None:
    if out is None:
        print(text)
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _triple_from_args(args) -> SpectralTriple:
    return SpectralTriple.from_parts(
        parse_weight(args.mu).parts,
        parse_weight(args.nu).parts,
        parse_weight(args.lam).parts,
    )


def _cmd_lr(args) -> str:
    t = _triple_from_args(args)
    if args.method == "oracle":
        res = lr_character_oracle(t)
    else:
        res = lr_general(t)
    report = {
        "mu": list(t.mu.parts),
        "nu": list(t.nu.parts),
        "lambda": list(t.lam.parts),
        "coefficient": res.coefficient,
        "method": res.method,
        "balanced": t.balanced,
    }
    if args.find_scaling is not None:
        report["find_scaling"] = {
            "n_max": args.find_scaling,
            "N": find_scaling(t, args.find_scaling),
        }
    return json.dumps(report, indent=2)


def _cmd_realize(args) -> str:
    t = _triple_from_args(args)
    res = realize_triple(
        t, tol=args.tol, restarts=args.restarts, steps=args.steps, seed=args.seed
    )
    report = {
        "mu": list(t.mu.parts),
        "nu": list(t.nu.parts),
        "lambda": list(t.lam.parts),
        "residual": res.residual,
        "iterations": res.iterations,
        "seed": res.seed,
        "converged": res.converged,
        "A": _matrix_to_json(res.A),
        "B": _matrix_to_json(res.B),
    }
    return json.dumps(report, indent=2)


def _cmd_sweep(args) -> str:
    rep = verify_theorem1_sweep(
        args.max_boxes, args.d, tol=args.tol, seed=args.seed, workers=args.workers
    )
    report = {
        "max_boxes": rep.max_boxes,
        "d": rep.d,
        "tol": rep.tol,
        "total": rep.total,
        "succeeded": rep.succeeded,
        "success_rate": rep.success_rate,
        "worst_residual": rep.worst_residual,
        "failures": [
            {"mu": list(m), "nu": list(n), "lambda": list(l)} for m, n, l in rep.failures
        ],
    }
    return json.dumps(report, indent=2)


def _cmd_estimate(args) -> str:
    rho = _parse_density(args.rho_diag, args.rho_file)
    dist = measurement_distribution(rho, args.k)
    r = rho.spectrum()
    outcomes = [
        {
            "frame": list(frame),
            "prob": prob,
            "bound": kw_bound(frame, r, rho.d),
        }
        for frame, prob in dist.entries.items()
    ]
    if args.format == "csv":
        lines = ["frame,prob,bound"]
        for o in outcomes:
            lines.append(
                '"%s",%r,%r' % (",".join(str(v) for v in o["frame"]), o["prob"], o["bound"])
            )
        return "\n".join(lines)
    if args.format == "table":
        lines = [f"{'frame':<16}{'prob':<24}bound"]
        for o in outcomes:
            f = ",".join(str(v) for v in o["frame"])
            lines.append(f"{f:<16}{o['prob']:<24.12f}{o['bound']:.6g}")
        return "\n".join(lines)
    return json.dumps({"k": dist.k, "d": dist.d, "outcomes": outcomes}, indent=2)


def _cmd_scan(args) -> str:
    rho_a = _parse_density(args.rhoA, args.rhoA_file)
    rho_b = _parse_density(args.rhoB, args.rhoB_file)
    target = ScanTarget.from_states(rho_a, rho_b, args.p)
    n_values = [int(tok) for tok in args.n_list.split(",")]
    rep = scan(target, n_values, c0=args.c0)

    rows = []
    for w in rep.witnesses:
        rows.append(
            {
                "n": w.n,
                "k": w.k,
                "mu": list(w.triple.mu.parts),
                "nu": list(w.triple.nu.parts),
                "lambda": list(w.triple.lam.parts),
                "distances": list(w.distances),
                "coefficient": w.coefficient,
            }
        )
    if args.format == "csv":
        lines = ["n,k,mu,nu,lambda,d_mu,d_nu,d_lambda,coefficient"]
        for r in rows:
            lines.append(
                '%d,%d,"%s","%s","%s",%r,%r,%r,%d'
                % (
                    r["n"],
                    r["k"],
                    ",".join(map(str, r["mu"])),
                    ",".join(map(str, r["nu"])),
                    ",".join(map(str, r["lambda"])),
                    r["distances"][0],
                    r["distances"][1],
                    r["distances"][2],
                    r["coefficient"],
                )
            )
        return "\n".join(lines)
    # JSON lines: one witness per line, then the summary series
    lines = [json.dumps(r) for r in rows]
    summary = {
        "summary": {
            "p": target.p,
            "c0": rep.c0,
            "n": [w.n for w in rep.witnesses],
            "eps": [epsilon_schedule(w.n, target.d, rep.c0) for w in rep.witnesses],
            "median_distance": [median(w.distances) for w in rep.witnesses],
            "missing": list(rep.missing),
            "skipped": [{"n": n, "note": note} for n, note in rep.skipped],
        }
    }
    lines.append(json.dumps(summary))
    return "\n".join(lines)


def _cmd_check(args) -> str:
    report = checks.run_checks(quick=args.quick, seed=args.seed)
    return json.dumps(report, indent=2)


def build_parser() -> _Parser:
    parser = _Parser(prog="hornlr", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--out", default=None, help="write the report to a file")
        p.add_argument("--format", choices=("json", "csv", "table"), default="json")
        p.add_argument(
            "--workers",
            type=int,
            default=default_workers(),
            help="worker processes for sweeps (HORNLR_WORKERS overrides the default)",
        )

    p = sub.add_parser("lr", help="Littlewood-Richardson coefficient of a triple")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--method", choices=("general", "oracle"), default="general")
    p.add_argument("--find-scaling", type=int, default=None, metavar="N_MAX")
    common(p)
    p.set_defaults(fn=_cmd_lr)

    p = sub.add_parser("realize", help="search Hermitian witnesses for a triple")
    p.add_argument("--mu", required=True)
    p.add_argument("--nu", required=True)
    p.add_argument("--lambda", dest="lam", required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    p.add_argument("--restarts", type=int, default=32)
    p.add_argument("--steps", type=int, default=2000)
    common(p)
    p.set_defaults(fn=_cmd_realize)

    p = sub.add_parser("sweep-theorem1", help="realize every nonzero triple at scale")
    p.add_argument("--max-boxes", type=int, required=True)
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--tol", type=float, default=1e-6)
    common(p)
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("estimate", help="tensor-power measurement distribution")
    p.add_argument("--rho-diag", default=None, help="diagonal spectrum, e.g. 0.5,0.5")
    p.add_argument("--rho-file", default=None, help="JSON matrix of [re, im] pairs")
    p.add_argument("--k", type=int, required=True)
    common(p)
    p.set_defaults(fn=_cmd_estimate)

    p = sub.add_parser("scan", help="converse scan towards target spectra")
    p.add_argument("--rhoA", default=None)
    p.add_argument("--rhoA-file", default=None)
    p.add_argument("--rhoB", default=None)
    p.add_argument("--rhoB-file", default=None)
    p.add_argument("--p", type=float, required=True)
    p.add_argument("--n-list", required=True, help="comma-separated scales, e.g. 8,16,32")
    p.add_argument("--c0", type=float, default=2.0)
    common(p)
    p.set_defaults(fn=_cmd_scan)

    p = sub.add_parser("check", help="run the invariant suite")
    p.add_argument("--quick", action="store_true")
    common(p)
    p.set_defaults(fn=_cmd_check)

    return parser


def _error_record(kind: str, message: str) -> str:
    return json.dumps({"error": kind, "message": str(message)})


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except UsageError as exc:
        print(_error_record("usage", exc), file=sys.stderr)
        return 2
    try:
        text = args.fn(args)
    except UsageError as exc:
        print(_error_record("usage", exc), file=sys.stderr)
        return 2
    except (ValueError, OSError, json.JSONDecodeError) as exc:
        print(_error_record("domain", exc), file=sys.stderr)
        return 1
    _emit(text, args.out)
    if args.command == "check":
        return 0 if json.loads(text)["ok"] else 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
