"""Spectral distortion SD(f) = |det M_f|^(1/n) / sigma_min(M_f) and the
Hong-Pan / Yu-Gu upper bounds.

Determinants are carried as logarithms: |det M| for Phi_n grows like
n^(phi(n)/2) and overflows a double well inside the conductor ranges used
here.  sigma_min always comes from the Jacobi spectrum of the Gram matrix.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .embedding import (
    cyclotomic_vandermonde,
    gram_oracle,
    rootset_from_roots,
    vandermonde,
)
from .gramform import gram_cyclotomic, gram_power_substitution
from .linalg import (
    Spectrum,
    col_norms,
    complex_log_abs_det,
    frobenius_norm,
    jacobi_eigenvalues,
    polynomial_roots,
    row_norms,
)
from .numtheory import abs_disc_cyclotomic, is_prime, poly_substitute_power, radical


@dataclass(frozen=True)
class SDReport:
    label: str
    degree: int
    log_abs_det_M: float
    sigma_min: float
    sd: float
    hong_pan_bound: float
    yu_gu_bound: float
    eigenvalues: Spectrum
    abs_disc: int | None = None

    @property
    def abs_det_M(self) -> float:
        try:
            return math.exp(self.log_abs_det_M)
        except OverflowError:
            return math.inf

    @property
    def det_root(self) -> float:
        """|det M|^(1/degree)."""
        return math.exp(self.log_abs_det_M / self.degree)

    @property
    def lambda_min(self) -> float:
        return self.eigenvalues.min

    @property
    def lambda_max(self) -> float:
        return self.eigenvalues.max


def _sd(log_abs_det, dim, lambda_min):
    if not lambda_min > 0:
        raise ValueError(f"Gram matrix is not positive definite (lambda_min={lambda_min})")
    return math.exp(log_abs_det / dim - 0.5 * math.log(lambda_min))


def sd_from_gram(gram, abs_det_M: float) -> float:
    if abs_det_M <= 0:
        raise ValueError("|det M| must be positive")
    gram = np.asarray(gram)
    lam = jacobi_eigenvalues(gram).min
    return _sd(math.log(abs_det_M), gram.shape[0], lam)


def sd_prime_closed(p: int) -> float:
    """SD(Phi_p) = p^((p-2) / (2(p-1)))."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    return p ** ((p - 2) / (2 * (p - 1)))


# -- bounds --------------------------------------------------------------------

def _square(m):
    m = np.asarray(m)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise ValueError("bounds need a square matrix")
    return m


def _log_det(m, log_abs_det):
    if log_abs_det is None:
        log_abs_det = complex_log_abs_det(m)
    if not math.isfinite(log_abs_det):
        raise ValueError("matrix is singular")
    return log_abs_det


def _log_norm_ratios(m):
    r, c = row_norms(m), col_norms(m)
    if np.any(r == 0) or np.any(c == 0):
        raise ValueError("matrix has a zero row or column")
    lr, lc = np.log(r), np.log(c)
    # log(prod / min) for rows and for columns
    return float(lr.sum() - lr.min()), float(lc.sum() - lc.min())


def hong_pan_sigma_min_bound(m, log_abs_det: float | None = None) -> float:
    """((n-1)/n)^((n-1)/2) |det| max(r_min / prod r_i, c_min / prod c_i)."""
    m = _square(m)
    n = m.shape[0]
    ld = _log_det(m, log_abs_det)
    rows, cols = _log_norm_ratios(m)
    lead = 0.0 if n == 1 else (n - 1) / 2 * math.log((n - 1) / n)
    return math.exp(lead + ld - min(rows, cols))


def hong_pan_sd_bound(m, log_abs_det: float | None = None) -> float:
    """Upper bound on SD from the Hong-Pan sigma_min bound (better side)."""
    m = _square(m)
    n = m.shape[0]
    if n == 1:
        return 1.0
    ld = _log_det(m, log_abs_det)
    rows, cols = _log_norm_ratios(m)
    return math.exp((n - 1) / 2 * math.log(n / (n - 1)) + (1 - n) / n * ld + min(rows, cols))


def yu_gu_sigma_min_bound(m, log_abs_det: float | None = None) -> float:
    """|det| ((n-1) / ||M||_F^2)^((n-1)/2)."""
    m = _square(m)
    n = m.shape[0]
    if n < 2:
        raise ValueError("Yu-Gu bound needs dimension >= 2")
    ld = _log_det(m, log_abs_det)
    f2 = frobenius_norm(m) ** 2
    return math.exp(ld + (n - 1) / 2 * math.log((n - 1) / f2))


def yu_gu_sd_bound(m, log_abs_det: float | None = None) -> float:
    """(||M||_F^2 / (n-1))^((n-1)/2) |det M|^((1-n)/n); 1 in dimension 1."""
    m = _square(m)
    n = m.shape[0]
    if n == 1:
        return 1.0
    ld = _log_det(m, log_abs_det)
    f2 = frobenius_norm(m) ** 2
    return math.exp((n - 1) / 2 * math.log(f2 / (n - 1)) + (1 - n) / n * ld)


# -- reports -------------------------------------------------------------------

@lru_cache(maxsize=1024)
def cyclotomic_spectrum(n: int) -> Spectrum:
    """Jacobi spectrum of the full Phi_n Gram matrix."""
    return jacobi_eigenvalues(gram_cyclotomic(n).matrix)


def _report(label, m, gram, log_abs_det, spectrum=None, abs_disc=None, bounds=True):
    dim = gram.shape[0]
    spectrum = spectrum or jacobi_eigenvalues(gram)
    lam = spectrum.min
    sd = _sd(log_abs_det, dim, lam)
    hp = hong_pan_sd_bound(m, log_abs_det) if bounds else math.nan
    yg = yu_gu_sd_bound(m, log_abs_det) if bounds else math.nan
    return SDReport(label, dim, log_abs_det, math.sqrt(lam), sd, hp, yg, spectrum, abs_disc)


def sd_cyclotomic(n: int, via_radical: bool = False, bounds: bool = True) -> SDReport:
    """SD(Phi_n) with |det M| from the exact discriminant.

    ``via_radical`` takes sigma_min from the Phi_rad(n) spectrum scaled by
    n / rad(n) instead of diagonalizing the full Gram matrix.
    """
    disc = abs_disc_cyclotomic(n)
    log_det = 0.5 * math.log(disc)
    if via_radical:
        rad = radical(n)
        scale = n // rad
        base = cyclotomic_spectrum(rad)
        spectrum = Spectrum(tuple(sorted(scale * lam for lam in base for _ in range(scale))))
    else:
        spectrum = cyclotomic_spectrum(n)
    gram = gram_cyclotomic(n).matrix
    m = cyclotomic_vandermonde(n) if bounds else None
    return _report(f"Phi_{n}", m, gram, log_det, spectrum, disc, bounds)


def sd_polynomial(f, bounds: bool = True) -> SDReport:
    """SD of a monic squarefree integer polynomial via the numerical oracle."""
    f = [int(c) for c in f]
    gram = gram_oracle(f)
    m = vandermonde(rootset_from_roots(polynomial_roots(f)))
    return _report(poly_label(f), m, gram, complex_log_abs_det(m), bounds=bounds)


def sd_power_substitution(h, k: int, bounds: bool = True) -> SDReport:
    """SD of h(x^k) with the Gram matrix taken from the closed form."""
    f = poly_substitute_power([int(c) for c in h], k)
    gram = gram_power_substitution(h, k).matrix
    m = vandermonde(rootset_from_roots(polynomial_roots(f)))
    return _report(poly_label(f), m, gram, complex_log_abs_det(m), bounds=bounds)


def poly_label(f):
    terms = []
    for deg in range(len(f) - 1, -1, -1):
        c = f[deg]
        if c == 0:
            continue
        mono = "" if deg == 0 else ("x" if deg == 1 else f"x^{deg}")
        mag = abs(c)
        body = (str(mag) if mag != 1 or not mono else "") + mono
        terms.append(("-" if c < 0 else "+", body))
    if not terms:
        return "0"
    sign, body = terms[0]
    out = ("-" if sign == "-" else "") + body
    for sign, body in terms[1:]:
        out += f" {sign} {body}"
    return out
