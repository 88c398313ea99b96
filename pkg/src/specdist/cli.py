"""Command-line interface: ``specdist {gram,sd,verify,sweep}``.

Exit codes: 0 success, 1 verification or cross-check failure, 2 usage error.
"""
from __future__ import annotations

import argparse
import math
import sys

import numpy as np

from . import embedding, gramform, spectral, verify
from .linalg import complex_log_abs_det, jacobi_eigenvalues, polynomial_roots
from .numtheory import (
    euler_phi,
    has_distinct_roots,
    is_prime,
    is_squarefree,
    poly_substitute_power,
    radical,
)
from .sweep import sweep, to_csv, to_json

CHECK_TOL = 1e-8
MAX_CONDUCTOR = 500


class UsageError(Exception):
    pass


def parse_range(text: str) -> range:
    """``a:b`` (inclusive) or a single conductor ``n``."""
    try:
        if ":" in text:
            lo, hi = (int(x) for x in text.split(":", 1))
        else:
            lo = hi = int(text)
    except ValueError:
        raise UsageError(f"bad range {text!r}; expected a:b") from None
    if lo < 1 or hi > MAX_CONDUCTOR:
        raise UsageError(f"range must lie within [1, {MAX_CONDUCTOR}]")
    return range(lo, hi + 1)


def _add_selector(p):
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--cyclotomic", type=int, metavar="N", help="cyclotomic conductor n")
    g.add_argument("--quadratic", type=int, nargs=2, metavar=("B", "C"),
                   help="h(x) = x^2 + Bx + C, combined with --k")
    g.add_argument("--poly", type=int, nargs="+", metavar="A",
                   help="monic integer coefficients, constant term first")
    p.add_argument("--k", type=int, default=1, help="power substitution x -> x^k (with --quadratic)")
    p.add_argument("--check", action="store_true",
                   help=f"cross-check against the numerical oracle (fails above {CHECK_TOL:g})")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="specdist",
                                     description="Spectral distortion of cyclotomic and related polynomials.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gram", help="print the Gram matrix M^dagger M")
    _add_selector(p)

    p = sub.add_parser("sd", help="spectral distortion and its upper bounds")
    _add_selector(p)

    p = sub.add_parser("verify", help="run the verification suites")
    p.add_argument("--range", dest="range_", metavar="A:B", help="conductor interval (default 1:100)")
    p.add_argument("--quadratic-typo", action="store_true",
                   help="compare both quadratic eigenvalue radicands with Jacobi")
    p.add_argument("--tol", type=float, default=1e-9, help="matrix / spectrum / SD tolerance")
    p.add_argument("--disc-tol", type=float, default=1e-6, help="relative discriminant tolerance")

    p = sub.add_parser("sweep", help="tabulate SD data over a conductor range")
    p.add_argument("--range", dest="range_", required=True, metavar="A:B")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--output", "-o", default="-", help="output path, '-' for stdout")
    p.add_argument("--jobs", "-j", type=int, default=1, help="worker processes")
    return parser


# -- rendering -----------------------------------------------------------------

def render_int_matrix(m) -> str:
    width = max(len(str(int(x))) for x in m.flat)
    return "\n".join(" ".join(str(int(x)).rjust(width) for x in row) for row in m)


def render_float_matrix(m) -> str:
    cells = [[f"{x:.6f}" for x in row] for row in np.asarray(m, dtype=float) + 0.0]
    width = max(len(c) for row in cells for c in row)
    return "\n".join(" ".join(c.rjust(width) for c in row) for row in cells)


def _poly_of(args):
    if args.quadratic is not None:
        b, c = args.quadratic
        if args.k < 1:
            raise UsageError("--k must be >= 1")
        return [c, b, 1], args.k
    f = list(args.poly)
    if len(f) < 2 or f[-1] != 1:
        raise UsageError("--poly needs a monic polynomial of degree >= 1 (constant term first)")
    if not has_distinct_roots(f):
        raise UsageError("--poly polynomial has repeated roots")
    if not _irreducible(f):
        raise UsageError("--poly polynomial is reducible over Q")
    return f, 1


def _irreducible(f):
    import sympy

    x = sympy.Symbol("x")
    return sympy.Poly(list(reversed(f)), x).is_irreducible


def _fail_check(err, what):
    print(f"check FAILED: {what} max_err={err:.3g} > {CHECK_TOL:g}", file=sys.stderr)
    return 1


def cmd_gram(args) -> int:
    if args.cyclotomic is not None:
        n = args.cyclotomic
        if n < 1:
            raise UsageError("conductor must be >= 1")
        g = gramform.gram_cyclotomic(n)
        print(f"Phi_{n}: n = {n}, phi(n) = {euler_phi(n)}, rad(n) = {radical(n)}")
        if is_squarefree(n):
            print("toeplitz generator: " + " ".join(str(int(x)) for x in gramform.toeplitz_generator(n)))
        print(render_int_matrix(g.matrix))
        if args.check:
            err = float(np.max(np.abs(g.matrix - embedding.gram_oracle_cyclotomic(n))))
            if err > CHECK_TOL:
                return _fail_check(err, "closed form vs oracle")
            print(f"check: closed form vs oracle max_err={err:.3g} <= {CHECK_TOL:g}")
        return 0

    h, k = _poly_of(args)
    f = poly_substitute_power(h, k)
    if args.quadratic is not None:
        b, c = args.quadratic
        if not has_distinct_roots(f):
            raise UsageError(f"h(x^{k}) has repeated roots")
        if b * b - 4 * c < 0:
            route = "quadratic kronecker form"
            matrix = gramform.quadratic_power_gram(b, c, k)
        else:
            route = "power-substitution sum"
            matrix = gramform.gram_power_substitution(h, k).matrix
    else:
        route = "numerical oracle"
        matrix = embedding.gram_oracle(f)
    print(f"f = {spectral.poly_label(f)}: degree {len(f) - 1}, route: {route}")
    print(render_float_matrix(matrix))
    if args.check:
        err = float(np.max(np.abs(matrix - embedding.gram_oracle(f))))
        if err > CHECK_TOL:
            return _fail_check(err, "closed form vs oracle")
        print(f"check: closed form vs oracle max_err={err:.3g} <= {CHECK_TOL:g}")
    return 0


def _print_report(rep, closed=None):
    rows = [
        ("polynomial", rep.label),
        ("degree", str(rep.degree)),
        ("|det M|^(1/n)", f"{rep.det_root:.6f}"),
        ("sigma_min", f"{rep.sigma_min:.6f}"),
        ("lambda_min", f"{rep.lambda_min:.6f}"),
        ("lambda_max", f"{rep.lambda_max:.6f}"),
        ("sd", f"{rep.sd:.6f}"),
        ("hong_pan_bound", f"{rep.hong_pan_bound:.6f}"),
        ("yu_gu_bound", f"{rep.yu_gu_bound:.6f}"),
    ]
    if closed is not None:
        rows.append(("closed form", f"{closed:.6f}  p^((p-2)/(2(p-1)))"))
    for key, value in rows:
        print(f"{key:<16}{value}")


def cmd_sd(args) -> int:
    if args.cyclotomic is not None:
        n = args.cyclotomic
        if n < 1:
            raise UsageError("conductor must be >= 1")
        rep = spectral.sd_cyclotomic(n)
        _print_report(rep, spectral.sd_prime_closed(n) if is_prime(n) else None)
        if args.check:
            oracle = embedding.gram_oracle_cyclotomic(n)
            m = embedding.cyclotomic_vandermonde(n)
            lam = jacobi_eigenvalues(oracle).min
            sd_oracle = math.exp(complex_log_abs_det(m) / rep.degree - 0.5 * math.log(lam))
            err = abs(sd_oracle - rep.sd) / rep.sd
            if err > CHECK_TOL:
                return _fail_check(err, "sd closed form vs oracle (relative)")
            print(f"check: sd vs oracle relative err={err:.3g} <= {CHECK_TOL:g}")
        return 0

    h, k = _poly_of(args)
    f = poly_substitute_power(h, k)
    if not has_distinct_roots(f):
        raise UsageError(f"h(x^{k}) has repeated roots")
    rep = spectral.sd_power_substitution(h, k) if args.quadratic is not None else spectral.sd_polynomial(f)
    _print_report(rep)
    if args.check:
        # Independent route: Gram of the realified embedding B^dagger M.
        rs = embedding.rootset_from_roots(polynomial_roots(f))
        lam = jacobi_eigenvalues(embedding.gram_oracle_realified(rs)).min
        sd_oracle = math.exp(rep.log_abs_det_M / rep.degree - 0.5 * math.log(lam))
        err = abs(sd_oracle - rep.sd) / rep.sd
        if err > CHECK_TOL:
            return _fail_check(err, "sd vs realified oracle (relative)")
        print(f"check: sd vs realified oracle relative err={err:.3g} <= {CHECK_TOL:g}")
    return 0


def _typo_report():
    grid = [(float(b), float(c)) for b in range(-3, 4) for c in range(1, 6) if b * b < 4 * c]
    print(f"{'b':>5} {'c':>5}  {'jacobi':>21}  {'b^2+(c-1)^2':>21}  {'b^2+c^2+2c+1':>21}")
    for b, c, jac, fixed, printed, _, _ in verify.quadratic_typo_rows(grid):
        pair = lambda v: f"{v[0]:9.6f} {v[1]:11.6f}"  # noqa: E731
        print(f"{b:5.1f} {c:5.1f}  {pair(jac)}  {pair(fixed)}  {pair(printed)}")
    rows = list(verify.quadratic_typo_rows())
    fixed_err = max(r[5] for r in rows)
    printed_bad = sum(r[6] > 1e-10 for r in rows)
    print(f"full grid: {len(rows)} points; corrected radicand max_err={fixed_err:.3g}; "
          f"printed radicand disagrees with Jacobi at {printed_bad}/{len(rows)} points")
    return fixed_err <= 1e-10


def cmd_verify(args) -> int:
    ok = True
    if args.quadratic_typo:
        ok &= _typo_report()
        if args.range_ is None:
            return 0 if ok else 1
    ns = parse_range(args.range_ or "1:100")
    tol = verify.Tolerances(matrix=args.tol, relative=args.tol, spectrum=args.tol, disc=args.disc_tol)
    for result in verify.run_checks(ns, tol):
        print(result.line())
        ok &= result.passed
    print("all checks passed" if ok else "verification FAILED")
    return 0 if ok else 1


def cmd_sweep(args) -> int:
    ns = parse_range(args.range_) if not _empty_range(args.range_) else range(0)
    rows = sweep(ns, jobs=args.jobs)
    text = to_csv(rows) if args.format == "csv" else to_json(rows)
    if args.output == "-":
        sys.stdout.write(text)
        return 0
    try:
        with open(args.output, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise UsageError(f"cannot write {args.output}: {exc}") from None
    return 0


def _empty_range(text):
    lo, _, hi = text.partition(":")
    try:
        return bool(hi) and int(lo) > int(hi)
    except ValueError:
        return False


COMMANDS = {"gram": cmd_gram, "sd": cmd_sd, "verify": cmd_verify, "sweep": cmd_sweep}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except UsageError as exc:
        parser.exit(2, f"specdist {args.command}: error: {exc}\n")
    except ValueError as exc:
        parser.exit(2, f"specdist {args.command}: error: {exc}\n")


if __name__ == "__main__":
    sys.exit(main())
