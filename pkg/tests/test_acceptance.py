"""Acceptance criteria, one test each.

Every test prints a single ``[criterion k] PASS|FAIL ...`` line to the
terminal (capture disabled) before asserting, so the log doubles as the
acceptance report.  Run standalone with ``python3 tests/test_acceptance.py``.
"""
import math
import subprocess
import sys
import time

import numpy as np
import pytest

from specdist.embedding import cyclotomic_vandermonde, gram_oracle, gram_oracle_cyclotomic
from specdist.gramform import (
    gram_cyclotomic,
    gram_power_substitution,
    quadratic_eigenvalues,
    quadratic_eigenvalues_printed,
    quadratic_gram,
    quadratic_power_gram,
    sign_flip,
)
from specdist.linalg import identity, jacobi_eigenvalues, kron
from specdist.numtheory import abs_disc_cyclotomic, is_prime, is_squarefree, poly_substitute_power, radical
from specdist.spectral import (
    cyclotomic_spectrum,
    hong_pan_sd_bound,
    sd_cyclotomic,
    sd_prime_closed,
    yu_gu_sd_bound,
)
from specdist.verify import POWER_INSTANCES, check_sd_bounds, check_sigma_bounds, quadratic_grid

PRIMES = [p for p in range(2, 98) if is_prime(p)]

PHI15 = np.array([
    [8, 1, 1, -2, 1, -4, -2, 1],
    [1, 8, 1, 1, -2, 1, -4, -2],
    [1, 1, 8, 1, 1, -2, 1, -4],
    [-2, 1, 1, 8, 1, 1, -2, 1],
    [1, -2, 1, 1, 8, 1, 1, -2],
    [-4, 1, -2, 1, 1, 8, 1, 1],
    [-2, -4, 1, -2, 1, 1, 8, 1],
    [1, -2, -4, 1, -2, 1, 1, 8],
])


@pytest.fixture
def report(capsys):
    def emit(k, ok, detail):
        with capsys.disabled():
            print(f"\n[criterion {k:>2}] {'PASS' if ok else 'FAIL'} {detail}")
        assert ok, detail
    return emit


def rel(a, b):
    return abs(a - b) / abs(b)


def test_c01_golden_matrix(report):
    t0 = time.perf_counter()
    g = gram_cyclotomic(15).matrix
    exact = g.dtype.kind == "i" and np.array_equal(g, PHI15)
    err = float(np.max(np.abs(gram_oracle_cyclotomic(15) - PHI15)))
    dt = time.perf_counter() - t0
    report(1, exact and err <= 1e-9 and dt < 1.0,
           f"golden Phi_15 exact={exact} oracle max_err={err:.2e} <= 1e-9 time={dt:.3f}s < 1s")


def test_c02_closed_form_vs_oracle(report):
    t0 = time.perf_counter()
    worst, integral = 0.0, True
    for n in range(1, 201):
        g = gram_cyclotomic(n).matrix
        integral &= g.dtype.kind == "i"
        worst = max(worst, float(np.max(np.abs(g - gram_oracle_cyclotomic(n)))))
    dt = time.perf_counter() - t0
    report(2, integral and worst <= 1e-9 and dt < 120,
           f"n=1..200 closed vs oracle max_err={worst:.2e} <= 1e-9 integer={integral} time={dt:.1f}s < 120s")


def test_c03_prime_spectrum(report):
    t0 = time.perf_counter()
    worst = 0.0
    for p in PRIMES:
        got = np.array(jacobi_eigenvalues(gram_cyclotomic(p).matrix).eigenvalues)
        want = np.array([1.0] + [float(p)] * (p - 2))
        worst = max(worst, float(np.max(np.abs(got - want))))
    dt = time.perf_counter() - t0
    report(3, worst <= 1e-9 and dt < 30,
           f"primes<=97 spectrum {{1, p x (p-2)}} max_err={worst:.2e} <= 1e-9 time={dt:.1f}s < 30s")


def test_c04_prime_sd(report):
    worst = max(rel(sd_cyclotomic(p).sd, sd_prime_closed(p)) for p in PRIMES)
    sd3 = sd_cyclotomic(3).sd
    ok3 = abs(sd3 - 3 ** 0.25) <= 1e-12 and f"{sd3:.6f}" == "1.316074"
    report(4, worst <= 1e-9 and ok3,
           f"primes<=97 sd vs p^((p-2)/(2(p-1))) max_rel={worst:.2e} <= 1e-9; sd(Phi_3)={sd3:.6f}")


def test_c05_radical_invariance(report):
    worst = max(rel(sd_cyclotomic(n, bounds=False).sd, sd_cyclotomic(radical(n), bounds=False).sd)
                for n in range(3, 201))
    report(5, worst <= 1e-9, f"n=3..200 sd(n) vs sd(rad n) max_rel={worst:.2e} <= 1e-9")


def test_c06_sign_flip(report):
    exact, worst = True, 0.0
    for n in range(3, 200, 2):
        exact &= np.array_equal(gram_cyclotomic(2 * n).matrix, sign_flip(gram_cyclotomic(n).matrix))
        worst = max(worst, rel(sd_cyclotomic(2 * n, bounds=False).sd, sd_cyclotomic(n, bounds=False).sd))
    report(6, exact and worst <= 1e-9,
           f"odd n=3..199 Gram(2n)=sign_flip(Gram(n)) exact={exact}; sd max_rel={worst:.2e} <= 1e-9")


def test_c07_kronecker(report):
    exact, worst, count = True, 0.0, 0
    for n in range(1, 201):
        if is_squarefree(n):
            continue
        count += 1
        r, s = radical(n), n // radical(n)
        g = gram_cyclotomic(n).matrix
        exact &= np.array_equal(g, s * kron(gram_cyclotomic(r).matrix, identity(s)))
        want = np.sort(np.repeat(s * cyclotomic_spectrum(r).as_array(), s))
        got = jacobi_eigenvalues(g).as_array()
        worst = max(worst, float(np.max(np.abs(got - want))))
    report(7, exact and worst <= 1e-9,
           f"{count} non-squarefree n<=200 kron exact={exact}; spectrum max_err={worst:.2e} <= 1e-9")


def test_c08_power_substitution(report):
    worst, zeros = 0.0, True
    for h, k in POWER_INSTANCES:
        g = gram_power_substitution(h, k).matrix
        worst = max(worst, float(np.max(np.abs(g - gram_oracle(poly_substitute_power(h, k))))))
        idx = np.arange(g.shape[0])
        zeros &= bool(np.all(g[(idx[:, None] - idx[None, :]) % k != 0] == 0.0))
    dev = float(np.max(np.abs(gram_power_substitution([1, 0, 1], 2).matrix - 4 * np.eye(4))))
    four_i = dev <= 1e-8 and np.array_equal(quadratic_power_gram(0, 1, 2), 4 * np.eye(4))
    four_i &= np.array_equal(gram_cyclotomic(8).matrix, 4 * np.eye(4, dtype=np.int64))
    report(8, worst <= 1e-8 and zeros and four_i,
           f"{len(POWER_INSTANCES)} h(x^k) instances max_err={worst:.2e} <= 1e-8 "
           f"exact zeros={zeros} x^4+1 -> 4*I_4={four_i} (dev {dev:.1e})")


def test_c09_quadratic_eigenvalues(report):
    grid = list(quadratic_grid())
    worst, printed_fail = 0.0, 0
    for b, c in grid:
        jac = np.array(jacobi_eigenvalues(quadratic_gram(b, c)).eigenvalues)
        worst = max(worst, float(np.max(np.abs(jac - quadratic_eigenvalues(b, c)))))
        printed_fail += float(np.max(np.abs(jac - quadratic_eigenvalues_printed(b, c)))) > 1e-10
    ok = len(grid) == 441 and worst <= 1e-10 and printed_fail == len(grid)
    report(9, ok, f"{len(grid)} grid points corrected radicand max_err={worst:.2e} <= 1e-10; "
                  f"printed radicand fails at {printed_fail}/{len(grid)}")


def test_c10_bound_soundness(report):
    ns = range(1, 101)
    _, (sd_excess, cases), _ = check_sd_bounds(ns, 0.0)
    _, (sigma_excess, _), _ = check_sigma_bounds(ns, 0.0)
    m3 = cyclotomic_vandermonde(3)
    target = 2 * 3 ** -0.25
    b3 = max(abs(hong_pan_sd_bound(m3) - target), abs(yu_gu_sd_bound(m3) - target))
    ok = sd_excess <= 1e-12 and sigma_excess <= 1e-9 and b3 <= 1e-9
    report(10, ok, f"{cases} cases sd excess over bounds={sd_excess:.2e} sigma bound excess="
                   f"{sigma_excess:.2e} <= 1e-9; Phi_3 bounds err={b3:.2e} (2*3^(-1/4)={target:.4f})")


def test_c11_discriminant(report):
    worst = 0.0
    for n in range(1, 201):
        log_prod = float(np.sum(np.log(cyclotomic_spectrum(n).as_array())))
        worst = max(worst, abs(math.expm1(log_prod - math.log(abs_disc_cyclotomic(n)))))
    report(11, worst <= 1e-6, f"n=1..200 prod(eigenvalues) vs |Disc| max_rel={worst:.2e} <= 1e-6")


def _sweep(jobs):
    cmd = [sys.executable, "-m", "specdist", "sweep", "--range", "3:100", "--format", "csv", "-j", str(jobs)]
    return subprocess.run(cmd, check=True, capture_output=True).stdout


def test_c12_determinism(report):
    a, b, c = _sweep(1), _sweep(1), _sweep(8)
    rows = a.count(b"\n") - 1
    report(12, a == b == c and rows == 98,
           f"sweep 3:100 ({rows} rows) run1==run2 {a == b}; jobs1==jobs8 {a == c}")


if __name__ == "__main__":
    sys.exit(pytest.main([__file__, "-q"]))
