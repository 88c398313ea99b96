"""Closed-form Gram matrices M^dagger M.

Cyclotomic Gram matrices are exact ``int64`` arrays.  For f(x) = h(x^k) the
Gram matrix is assembled from the roots of h, and for quadratic h with
negative discriminant from a Kronecker product with a diagonal factor.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .linalg import identity, kron, polynomial_roots, toeplitz_from_vector
from .numtheory import (
    euler_phi,
    factorize,
    has_distinct_roots,
    is_squarefree,
    omega,
    poly_substitute_power,
    radical,
)


@dataclass(frozen=True)
class CyclotomicGram:
    n: int
    matrix: np.ndarray
    generator: np.ndarray | None

    @property
    def dim(self) -> int:
        return self.matrix.shape[0]


@dataclass(frozen=True)
class PowerSubstitutionGram:
    h: tuple[int, ...]
    k: int
    matrix: np.ndarray

    @property
    def f(self) -> list[int]:
        return poly_substitute_power(list(self.h), self.k)


def gram_entry(n: int, i: int, j: int) -> int:
    """Entry (i, j) of the Phi_n Gram matrix; only i - j matters."""
    phi = euler_phi(n)
    if not (0 <= i < phi and 0 <= j < phi):
        raise IndexError(f"indices ({i}, {j}) out of range for dimension {phi}")
    if i == j:
        return phi
    rad = radical(n)
    block = n // rad
    diff = i - j
    if diff % block:
        return 0
    d = math.gcd(diff // block, n)
    sign = -1 if (omega(n) + omega(d)) % 2 else 1
    return sign * block * euler_phi(radical(d))


def gram_entry_table(n: int) -> np.ndarray:
    phi = euler_phi(n)
    return np.array([[gram_entry(n, i, j) for j in range(phi)] for i in range(phi)],
                    dtype=np.int64)


def toeplitz_generator(t: int) -> np.ndarray:
    """First row of the Phi_t Gram matrix for squarefree t."""
    if not is_squarefree(t):
        raise ValueError(f"{t} is not squarefree")
    primes = factorize(t).primes
    phi = euler_phi(t)
    v = np.full(phi, (-1) ** len(primes), dtype=np.int64)
    for i in range(phi):
        for p in primes:
            if i % p == 0:
                v[i] *= -(p - 1)
    v[0] = phi
    return v


def gram_cyclotomic(n: int) -> CyclotomicGram:
    """(n / rad n) * Toeplitz(rad n) kron I_(n / rad n)."""
    if n <= 2:
        return CyclotomicGram(n, np.ones((1, 1), dtype=np.int64), np.ones(1, dtype=np.int64))
    rad = radical(n)
    block = n // rad
    v = toeplitz_generator(rad)
    matrix = block * kron(toeplitz_from_vector(v), identity(block))
    return CyclotomicGram(n, matrix, v if block == 1 else None)


def sign_flip(a) -> np.ndarray:
    """out[i, j] = (-1)^(i + j) a[i, j]."""
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("sign_flip needs a square matrix")
    s = 1 - 2 * (np.arange(a.shape[0]) % 2)
    return a * np.outer(s, s).astype(a.dtype)


# -- h(x^k) family -------------------------------------------------------------

def _check_power_substitution(h, k):
    h = [int(c) for c in h]
    if k < 1:
        raise ValueError("k must be a positive integer")
    if len(h) < 2 or h[-1] != 1:
        raise ValueError("h must be monic of degree >= 1")
    if not has_distinct_roots(poly_substitute_power(h, k)):
        raise ValueError(f"h(x^{k}) has repeated roots")
    return h


def gram_power_substitution(h, k: int) -> PowerSubstitutionGram:
    """Gram matrix of f(x) = h(x^k) from the roots of h.

    With beta_t a k-th root (principal branch) of each root alpha_t of h,
    entry (i, j) is k * sum_t conj(beta_t)^i beta_t^j when k | i - j and
    exactly 0 otherwise.  Changing branch multiplies each term by a k-th
    root of unity raised to i - j, which is 1 on the nonzero pattern.
    """
    h = _check_power_substitution(h, k)
    alphas = polynomial_roots(h)
    betas = alphas.astype(np.complex128) ** (1.0 / k)
    dim = k * (len(h) - 1)
    idx = np.arange(dim)
    pw = betas[:, None] ** idx[None, :]
    dense = k * (pw.conj().T @ pw)
    matrix = dense.real
    matrix[(idx[:, None] - idx[None, :]) % k != 0] = 0.0
    return PowerSubstitutionGram(tuple(h), k, (matrix + matrix.T) / 2)


def quadratic_gram(b, c) -> np.ndarray:
    """Gram matrix [[2, -b], [-b, 2c]] of x^2 + b x + c, complex roots."""
    if b * b - 4 * c >= 0:
        raise ValueError("x^2 + bx + c must have negative discriminant")
    return np.array([[2, -b], [-b, 2 * c]], dtype=np.result_type(b, c, 2))


def quadratic_eigenvalues(b, c) -> tuple[float, float]:
    """Eigenvalues of :func:`quadratic_gram`, ascending.

    trace 2 + 2c and determinant 4c - b^2 give 1 + c -/+ sqrt(b^2 + (c-1)^2).
    """
    if b * b - 4 * c >= 0:
        raise ValueError("x^2 + bx + c must have negative discriminant")
    r = math.sqrt(b * b + (c - 1) ** 2)
    return 1 + c - r, 1 + c + r


def quadratic_eigenvalues_printed(b, c) -> tuple[float, float]:
    """The radicand b^2 + c^2 + 2c + 1 variant, kept for comparison reports."""
    r = math.sqrt(b * b + c * c + 2 * c + 1)
    return 1 + c - r, 1 + c + r


def quadratic_power_gram(b, c, k: int) -> np.ndarray:
    """Gram of h(x^k), h = x^2 + bx + c: k * Gram(h) kron diag(c^(s/k)).

    For complex roots |alpha|^2 = c, so the power-substituted roots of
    modulus c^(1/(2k)) contribute c^(s/k) on the residue-s sub-lattice.
    """
    g = quadratic_gram(b, c)
    diag = np.diag([float(c) ** (s / k) for s in range(k)])
    return k * kron(g.astype(float), diag)
