"""Command-line surface: generation, verification, and plot-data export.

Subcommands
    poly       exact coefficients, zeros, and recurrence constants
    assoc      associated-function JSON (optionally sampled on a grid)
    gram       inner-product matrix as CSV or JSON
    potential  (x, V_m, W_m, psi_{l,m}...) grid as CSV or JSON
    verify     invariant suite for one family, table or JSON report

Exit codes: 0 ok, 2 parameter/domain constraint, 3 index above cutoff,
4 numerical non-convergence, 1 failed verification.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from fractions import Fraction

import numpy as np

from . import quadrature, schroedinger
from .assoc import make_assoc
from .classical import proportionality_residual
from .errors import (ConstraintViolation, DomainError, IndexAboveCutoff,
                     NoConvergence, NonIntegrable)
from .families import Family, parse_case
from .ladder import assoc_from_top, lower_level, norm_chain, raise_level
from .polynomials import poly_coeffs, rodrigues_coeffs, three_term_coeffs, zeros

EXIT_OK = 0
EXIT_FAILED_CHECK = 1
EXIT_CONSTRAINT = 2
EXIT_CUTOFF = 3
EXIT_NUMERICAL = 4


def _family_from(args) -> Family:
    return Family(parse_case(args.case), Fraction(args.alpha), Fraction(args.beta))


def _add_family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--case", required=True,
                   help="one of: one, s, 1-s2, s2-1, s2, s2+1")
    p.add_argument("--alpha", required=True, help="exact rational, e.g. -9 or -7/2")
    p.add_argument("--beta", required=True, help="exact rational")


def cmd_poly(args) -> int:
    fam = _family_from(args)
    l = args.l
    p = poly_coeffs(fam, l)
    out = {
        **fam.to_json(),
        "l": l,
        "cutoff": "inf" if fam.cutoff == float("inf") else str(fam.cutoff),
        "lambda": str(fam.eigenvalue(l)),
        "coeffs": [str(c) for c in p.coeffs],
        "zeros": [float(z) for z in zeros(fam, l)],
    }
    if l >= 1 and l + 1 < fam.cutoff:
        b_l, c_l = three_term_coeffs(fam, l)
        out["three_term"] = {"beta": str(b_l), "gamma": str(c_l)}
    else:
        out["three_term"] = None
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_assoc(args) -> int:
    fam = _family_from(args)
    f = make_assoc(fam, args.l, args.m)
    out = f.to_json()
    if args.grid is not None:
        lo, hi, n = args.grid
        s = np.linspace(lo, hi, int(n))
        fam.require_inside(s)
        out["samples"] = {"s": [float(v) for v in s],
                          "value": [float(v) for v in f(s)]}
    print(json.dumps(out, indent=2))
    return EXIT_OK


def cmd_gram(args) -> int:
    fam = _family_from(args)
    gram = quadrature.gram_matrix(fam, args.m, args.lmax, tol=args.tol)
    if args.format == "csv":
        sys.stdout.write(quadrature.gram_csv(gram))
    else:
        sys.stdout.write(quadrature.gram_json(gram))
    return EXIT_OK


def cmd_potential(args) -> int:
    fam = _family_from(args)
    ls = [int(v) for v in args.l.split(",")] if args.l else []
    if args.n < 1:
        raise DomainError("grid needs n >= 1")
    x = np.linspace(args.lo, args.hi, args.n)
    cov = schroedinger.change_of_variable(fam.case)
    cov.require_inside(x)
    cols = schroedinger.potential_grid(fam, args.m, ls, x)
    if args.format == "csv":
        names = list(cols)
        sys.stdout.write(",".join(names) + "\n")
        for i in range(len(x)):
            sys.stdout.write(",".join(repr(float(cols[c][i])) for c in names) + "\n")
    else:
        out = {**fam.to_json(), "m": args.m, "sign": cov.sign, "l": ls,
               "x": [float(v) for v in x],
               "V": [float(v) for v in cols["V"]],
               "W": [float(v) for v in cols["W"]],
               "psi": {str(l): [float(v) for v in cols[f"psi_{l}"]] for l in ls}}
        print(json.dumps(out, indent=2))
    return EXIT_OK


def _verify_checks(fam: Family, l_max: int, tol: float | None) -> list[dict]:
    """Run the invariant suite; tol overrides every numeric threshold when set."""
    checks = []

    def record(name: str, passed: bool, detail: str) -> None:
        checks.append({"name": name, "passed": bool(passed), "detail": detail})

    def threshold(default: float) -> float:
        return default if tol is None else tol

    top = min(l_max, fam.max_index if fam.is_finite_system else l_max)

    ok = all(poly_coeffs(fam, l) == rodrigues_coeffs(fam, l)
             for l in range(top + 1))
    record("dual_generation", ok, f"exact equality for l <= {top}")

    ok = True
    for l in range(1, top + 1):
        for m in range(l):
            f = make_assoc(fam, l, m)
            back = lower_level(raise_level(f))
            gap = fam.eigenvalue(l) - fam.eigenvalue(m)
            ok = ok and back.phi == f.phi.scale(gap)
        ok = ok and assoc_from_top(fam, l, 0).phi == make_assoc(fam, l, 0).phi
    record("ladder_closure", ok, f"raise/lower and top-down exact for l <= {top}")

    l_chain = max(1, top)
    try:
        chain = norm_chain(fam, l_chain)
        err = 0.0
        for m in range(l_chain):
            gap = float(fam.eigenvalue(l_chain) - fam.eigenvalue(m))
            err = max(err, abs(chain[m + 1] / chain[m] - np.sqrt(gap)) / np.sqrt(gap))
        record("norm_chain", err < threshold(1e-6),
               f"max relative gap error {err:.3e} at l={l_chain}")
    except (NoConvergence, NonIntegrable) as exc:
        record("norm_chain", False, f"quadrature failed: {exc}")

    worst_resid = max(proportionality_residual(fam, l) for l in range(top + 1))
    record("classical_proportionality", worst_resid < threshold(1e-9),
           f"max residual {worst_resid:.3e} for l <= {top}")

    box = schroedinger.DEFAULT_BOXES[fam.case]
    if fam.is_finite_system:
        exact = schroedinger.bound_spectrum(fam, 0)
    else:
        exact = [float(fam.eigenvalue(l)) for l in range(top + 1)]
    k = len(exact)
    fd = schroedinger.fd_eigensolve(lambda x: schroedinger.potential(fam, 0, x),
                                    box[0], box[1], box[2], k)
    err = max(abs(a - b) / max(1.0, abs(b)) for a, b in zip(fd, exact))
    record("fd_spectrum", err < threshold(1e-3),
           f"max relative eigenvalue error {err:.3e} over {k} levels")
    return checks


def cmd_verify(args) -> int:
    fam = _family_from(args)
    started = time.perf_counter()
    checks = _verify_checks(fam, args.lmax, args.tol)
    elapsed = time.perf_counter() - started
    all_ok = all(c["passed"] for c in checks)
    if args.format == "json":
        print(json.dumps({**fam.to_json(), "passed": all_ok, "checks": checks},
                         indent=2))
    else:
        width = max(len(c["name"]) for c in checks)
        for c in checks:
            status = "PASS" if c["passed"] else "FAIL"
            print(f"{c['name']:<{width}}  {status}  {c['detail']}")
        print(f"{'overall':<{width}}  {'PASS' if all_ok else 'FAIL'}")
    print(f"runtime: {elapsed:.2f}s", file=sys.stderr)
    return EXIT_OK if all_ok else EXIT_FAILED_CHECK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="hypoly", description=__doc__,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("poly", help="exact polynomial data for one index")
    _add_family_args(p)
    p.add_argument("--l", type=int, required=True)
    p.set_defaults(fn=cmd_poly)

    p = sub.add_parser("assoc", help="associated function as JSON")
    _add_family_args(p)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--grid", type=float, nargs=3, metavar=("LO", "HI", "N"))
    p.set_defaults(fn=cmd_assoc)

    p = sub.add_parser("gram", help="inner-product matrix")
    _add_family_args(p)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--lmax", type=int, required=True)
    p.add_argument("--tol", type=float, default=quadrature.TOL_DEFAULT)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_gram)

    p = sub.add_parser("potential", help="potential/superpotential/bound-state grid")
    _add_family_args(p)
    p.add_argument("--m", type=int, default=0)
    p.add_argument("--l", default="", help="comma-separated indices for psi columns")
    p.add_argument("--lo", type=float, required=True)
    p.add_argument("--hi", type=float, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.set_defaults(fn=cmd_potential)

    p = sub.add_parser("verify", help="run the invariant suite for one family")
    _add_family_args(p)
    p.add_argument("--lmax", type=int, default=6)
    p.add_argument("--tol", type=float, default=None,
                   help="override every numeric acceptance threshold "
                        "(defaults: norm chain 1e-6, proportionality 1e-9, "
                        "spectrum 1e-3)")
    p.add_argument("--format", choices=("table", "json"), default="table")
    p.set_defaults(fn=cmd_verify)
    return ap


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.fn(args)
    except ConstraintViolation as exc:
        print(f"constraint violated: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except DomainError as exc:
        print(f"domain error: {exc}", file=sys.stderr)
        return EXIT_CONSTRAINT
    except IndexAboveCutoff as exc:
        print(f"index above cutoff: {exc}", file=sys.stderr)
        return EXIT_CUTOFF
    except (NoConvergence, NonIntegrable) as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())
