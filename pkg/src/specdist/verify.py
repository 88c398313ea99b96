"""Verification suites: each check compares a closed form or identity with
an independent numerical route over a conductor range and reports the
largest error it saw."""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Iterator

import numpy as np

from . import embedding, gramform, spectral
from .linalg import complex_log_abs_det, identity, jacobi_eigenvalues, kron, polynomial_roots
from .numtheory import (
    abs_disc_cyclotomic,
    is_prime,
    is_squarefree,
    poly_substitute_power,
    radical,
)

# (h, k) instances of the h(x^k) family checked everywhere.
POWER_INSTANCES = [([1, 0, 1], k) for k in (1, 2, 3, 4)] + [([1, -1, 1], k) for k in (1, 2, 3)]


@dataclass
class Tolerances:
    matrix: float = 1e-9
    relative: float = 1e-9
    spectrum: float = 1e-9
    power_sub: float = 1e-8
    quadratic: float = 1e-10
    disc: float = 1e-6


@dataclass
class CheckResult:
    name: str
    scope: str
    max_err: float
    tol: float
    count: int

    @property
    def passed(self) -> bool:
        return self.max_err <= self.tol

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        rel = "<=" if self.passed else ">"
        return f"{self.name} {self.scope} max_err={self.max_err:.3g} {rel} {self.tol:g} [{self.count} cases] {status}"


def _scope(ns):
    ns = list(ns)
    if not ns:
        return "n=(none)"
    return f"n={ns[0]}" if len(ns) == 1 else f"n={ns[0]}..{ns[-1]}"


def _rel(a, b):
    return abs(a - b) / max(abs(b), 1e-300)


def _max(errs):
    errs = list(errs)
    return (max(errs) if errs else 0.0), len(errs)


# -- individual checks ---------------------------------------------------------

def check_closed_form(ns, tol):
    def errs():
        for n in ns:
            closed = gramform.gram_cyclotomic(n).matrix
            table = gramform.gram_entry_table(n)
            oracle = embedding.gram_oracle_cyclotomic(n)
            exact = 0.0 if np.array_equal(closed, table) else math.inf
            yield max(exact, float(np.max(np.abs(closed - oracle))))
    return "theorem1-vs-oracle", _max(errs()), tol


def check_oracle_integrality(ns, tol):
    def errs():
        for n in ns:
            g = embedding.gram_oracle_cyclotomic(n)
            yield float(np.max(np.abs(g - np.round(g))))
    return "oracle-integrality", _max(errs()), tol


def check_toeplitz(ns, tol):
    def errs():
        for n in ns:
            if not is_squarefree(n):
                continue
            g = gramform.gram_cyclotomic(n).matrix
            yield 0.0 if np.array_equal(g[1:, 1:], g[:-1, :-1]) else math.inf
    return "toeplitz-squarefree", _max(errs()), tol


def check_kronecker(ns, tol):
    def errs():
        for n in ns:
            rad = radical(n)
            if rad == n:
                continue
            s = n // rad
            table = gramform.gram_entry_table(n)
            built = s * kron(gramform.gram_entry_table(rad), identity(s))
            exact = 0.0 if np.array_equal(table, built) else math.inf
            base = spectral.cyclotomic_spectrum(rad).as_array()
            expected = np.sort(np.repeat(s * base, s))
            got = spectral.cyclotomic_spectrum(n).as_array()
            yield max(exact, float(np.max(np.abs(got - expected))))
    return "kronecker-structure", _max(errs()), tol


def check_prime_spectrum(ns, tol):
    def errs():
        for p in ns:
            if not is_prime(p):
                continue
            expected = np.array([1.0] + [float(p)] * (p - 2))
            yield float(np.max(np.abs(spectral.cyclotomic_spectrum(p).as_array() - expected)))
    return "prime-spectrum", _max(errs()), tol


def check_prime_sd(ns, tol):
    def errs():
        for p in ns:
            if is_prime(p):
                yield _rel(spectral.sd_cyclotomic(p, bounds=False).sd, spectral.sd_prime_closed(p))
    return "sd-prime-closed-form", _max(errs()), tol


def check_radical_invariance(ns, tol):
    def errs():
        for n in ns:
            if n >= 3:
                direct = spectral.sd_cyclotomic(n, bounds=False).sd
                yield max(_rel(direct, spectral.sd_cyclotomic(radical(n), bounds=False).sd),
                          _rel(direct, spectral.sd_cyclotomic(n, via_radical=True, bounds=False).sd))
    return "sd-radical-invariance", _max(errs()), tol


def check_sign_flip(ns, tol):
    def errs():
        for n in ns:
            if n < 3 or n % 2 == 0:
                continue
            g2 = gramform.gram_cyclotomic(2 * n).matrix
            flipped = gramform.sign_flip(gramform.gram_cyclotomic(n).matrix)
            yield 0.0 if np.array_equal(g2, flipped) else math.inf
    return "sign-flip-2n", _max(errs()), tol


def check_sd_2n(ns, tol):
    def errs():
        for n in ns:
            if n >= 3 and n % 2:
                yield _rel(spectral.sd_cyclotomic(2 * n, bounds=False).sd,
                           spectral.sd_cyclotomic(n, bounds=False).sd)
    return "sd-2n-vs-n", _max(errs()), tol


def check_discriminant(ns, tol):
    def errs():
        for n in ns:
            disc = abs_disc_cyclotomic(n)
            log_disc = math.log(disc)
            log_prod = float(np.sum(np.log(spectral.cyclotomic_spectrum(n).as_array())))
            log_det2 = 2 * complex_log_abs_det(embedding.cyclotomic_vandermonde(n))
            yield max(abs(math.expm1(log_prod - log_disc)), abs(math.expm1(log_det2 - log_disc)))
    return "discriminant-identity", _max(errs()), tol


def _bound_cases(ns):
    for n in ns:
        m = embedding.cyclotomic_vandermonde(n)
        yield spectral.sd_cyclotomic(n), m, 0.5 * math.log(abs_disc_cyclotomic(n))
    for h, k in POWER_INSTANCES:
        f = poly_substitute_power(h, k)
        m = embedding.vandermonde(embedding.rootset_from_roots(polynomial_roots(f)))
        yield spectral.sd_power_substitution(h, k), m, complex_log_abs_det(m)


def check_sd_bounds(ns, tol):
    """Positive excess of SD over either upper bound, or shortfall below 1."""
    def errs():
        for rep, _, _ in _bound_cases(ns):
            yield max(0.0, rep.sd - rep.hong_pan_bound, rep.sd - rep.yu_gu_bound, 1.0 - rep.sd)
    return "bound-soundness-sd", _max(errs()), tol


def check_sigma_bounds(ns, tol):
    """Positive excess of either sigma_min lower bound over sqrt(lambda_min)."""
    def errs():
        for rep, m, ld in _bound_cases(ns):
            excess = [spectral.hong_pan_sigma_min_bound(m, ld) - rep.sigma_min]
            if rep.degree > 1:
                excess.append(spectral.yu_gu_sigma_min_bound(m, ld) - rep.sigma_min)
            yield max(0.0, *excess)
    return "bound-soundness-sigma", _max(errs()), tol


def check_power_substitution(tol):
    def errs():
        for h, k in POWER_INSTANCES:
            closed = gramform.gram_power_substitution(h, k).matrix
            oracle = embedding.gram_oracle(poly_substitute_power(h, k))
            idx = np.arange(closed.shape[0])
            off = (idx[:, None] - idx[None, :]) % k != 0
            exact_zero = 0.0 if np.all(closed[off] == 0) else math.inf
            err = float(np.max(np.abs(closed - oracle)))
            if h[1] ** 2 - 4 * h[0] < 0:
                err = max(err, float(np.max(np.abs(closed - gramform.quadratic_power_gram(h[1], h[0], k)))))
            yield max(exact_zero, err)
    return "power-substitution-vs-oracle", _max(errs()), tol


def quadratic_grid(nb=21, nc=21):
    """Admissible (b, c): b uniform on [-3, 3], c on (b^2/4, 5]."""
    for b in np.linspace(-3.0, 3.0, nb):
        lo = b * b / 4
        for j in range(1, nc + 1):
            yield float(b), float(lo + (5.0 - lo) * j / nc)


def check_quadratic(tol):
    def errs():
        for b, c in quadratic_grid():
            jac = np.array(jacobi_eigenvalues(gramform.quadratic_gram(b, c)).eigenvalues)
            yield float(np.max(np.abs(jac - np.array(gramform.quadratic_eigenvalues(b, c)))))
    return "quadratic-eigenvalues", _max(errs()), tol


def quadratic_typo_rows(grid=None):
    """Rows (b, c, jacobi, corrected, printed, corrected_err, printed_err)."""
    grid = quadratic_grid() if grid is None else grid
    for b, c in grid:
        jac = tuple(jacobi_eigenvalues(gramform.quadratic_gram(b, c)).eigenvalues)
        fixed = gramform.quadratic_eigenvalues(b, c)
        printed = gramform.quadratic_eigenvalues_printed(b, c)
        yield (b, c, jac, fixed, printed,
               max(abs(x - y) for x, y in zip(jac, fixed)),
               max(abs(x - y) for x, y in zip(jac, printed)))


# -- driver --------------------------------------------------------------------

def run_checks(ns, tol: Tolerances | None = None) -> Iterator[CheckResult]:
    tol = tol or Tolerances()
    ns = list(ns)
    scope = _scope(ns)
    ranged: list[tuple[Callable, float]] = [
        (check_closed_form, tol.matrix),
        (check_oracle_integrality, tol.matrix),
        (check_toeplitz, 0.0),
        (check_kronecker, tol.spectrum),
        (check_prime_spectrum, tol.spectrum),
        (check_prime_sd, tol.relative),
        (check_radical_invariance, tol.relative),
        (check_sign_flip, 0.0),
        (check_sd_2n, tol.relative),
        (check_discriminant, tol.disc),
        (check_sd_bounds, 1e-12),
        (check_sigma_bounds, tol.matrix),
    ]
    for fn, t in ranged:
        name, (err, count), t = fn(ns, t)
        yield CheckResult(name, scope, err, t, count)
    for fn, t in [(check_power_substitution, tol.power_sub), (check_quadratic, tol.quadratic)]:
        name, (err, count), t = fn(t)
        yield CheckResult(name, "fixed", err, t, count)
