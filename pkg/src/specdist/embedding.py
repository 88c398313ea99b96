"""Numerical Minkowski embedding: root sets, Vandermonde matrices, the
realifying unitary change of basis, and Gram matrices by direct product.

Everything here is computed from explicit roots and serves as the ground
truth the closed forms in :mod:`specdist.gramform` are checked against.
"""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import polynomial_roots
from .numtheory import coprime_residues, has_distinct_roots

GRAM_IMAG_TOL = 1e-9
REALIFY_IMAG_TOL = 1e-8


@dataclass(frozen=True)
class RootSet:
    """Roots ordered as: real roots ascending, then one representative per
    conjugate pair by ascending argument in (0, pi), then the conjugates in
    mirrored order (so roots[k] and roots[-1 - k] pair up).
    """

    roots: np.ndarray
    r1: int
    r2: int

    def __post_init__(self):
        if self.r1 + 2 * self.r2 != len(self.roots):
            raise ValueError("r1 + 2*r2 must equal the number of roots")
        reps = self.roots[self.r1:self.r1 + self.r2]
        conj = self.roots[self.r1 + self.r2:][::-1]
        if not np.allclose(conj, np.conj(reps), rtol=0, atol=1e-12 * max(1.0, _scale(self.roots))):
            raise ValueError("conjugate pairing is inconsistent")

    @property
    def degree(self) -> int:
        return len(self.roots)

    def __len__(self):
        return len(self.roots)


def _scale(z):
    return float(np.max(np.abs(z))) if len(z) else 1.0


def rootset_from_roots(roots, tol=1e-10) -> RootSet:
    """Order an arbitrary conjugate-closed multiset of roots by convention."""
    z = np.asarray(roots, dtype=np.complex128)
    scale = max(1.0, _scale(z))
    real = np.sort(z[np.abs(z.imag) <= tol * scale].real)
    upper = z[z.imag > tol * scale]
    upper = upper[np.argsort(np.angle(upper), kind="stable")]
    if 2 * len(upper) + len(real) != len(z):
        raise ValueError("roots are not conjugate-closed")
    ordered = np.concatenate([real.astype(np.complex128), upper, np.conj(upper[::-1])])
    return RootSet(ordered, len(real), len(upper))


def cyclotomic_roots(n: int) -> RootSet:
    """Primitive n-th roots of unity e^(2 pi i c / n), c coprime to n."""
    if n <= 2:
        return RootSet(np.array([1.0 if n == 1 else -1.0], dtype=np.complex128), 1, 0)
    cs = np.array(coprime_residues(n))
    roots = np.exp(2j * np.pi * cs / n)
    # c and n - c are mirrored in the ascending residue list.
    roots[len(cs) // 2:] = np.conj(roots[: len(cs) // 2][::-1])
    return RootSet(roots, 0, len(cs) // 2)


def vandermonde(rs: RootSet | np.ndarray) -> np.ndarray:
    """Rows indexed by roots, columns by powers 0..deg-1."""
    roots = rs.roots if isinstance(rs, RootSet) else np.asarray(rs, dtype=np.complex128)
    if len(roots) == 0:
        raise ValueError("empty root set")
    return roots[:, None] ** np.arange(len(roots))[None, :]


def cyclotomic_vandermonde(n: int) -> np.ndarray:
    """Vandermonde of Phi_n with entries exp(2 pi i (c*j mod n) / n)."""
    if n <= 2:
        return vandermonde(cyclotomic_roots(n))
    cs = np.array(coprime_residues(n))
    j = np.arange(len(cs))
    return np.exp(2j * np.pi * ((cs[:, None] * j[None, :]) % n) / n)


def unitary_b(r1: int, r2: int) -> np.ndarray:
    """The block unitary taking Minkowski space to R^(r1 + 2 r2).

    Its column blocks assume the conjugate of representative k sits at
    position r1 + r2 + k (same order as the representatives).
    """
    n = r1 + 2 * r2
    b = np.zeros((n, n), dtype=np.complex128)
    b[:r1, :r1] = np.eye(r1)
    h = np.sqrt(2) / 2
    eye = np.eye(r2)
    b[r1:r1 + r2, r1:r1 + r2] = h * eye
    b[r1:r1 + r2, r1 + r2:] = 1j * h * eye
    b[r1 + r2:, r1:r1 + r2] = h * eye
    b[r1 + r2:, r1 + r2:] = -1j * h * eye
    return b


def realify(m, rs: RootSet) -> np.ndarray:
    """B^dagger M as a real matrix.

    Rows of ``m`` follow the :class:`RootSet` convention; the conjugate
    block is reordered to match the block layout of :func:`unitary_b`.
    """
    m = np.asarray(m, dtype=np.complex128)
    r1, r2 = rs.r1, rs.r2
    order = np.r_[np.arange(r1 + r2), np.arange(r1 + 2 * r2 - 1, r1 + r2 - 1, -1)]
    out = unitary_b(r1, r2).conj().T @ m[order]
    residue = float(np.max(np.abs(out.imag))) if out.size else 0.0
    if residue > REALIFY_IMAG_TOL * max(1.0, float(np.max(np.abs(m)))):
        raise ValueError(f"realified matrix has imaginary residue {residue:.3g}; "
                         "rows do not follow the conjugate-pairing convention")
    return out.real


def gram_from_vandermonde(m) -> np.ndarray:
    """M^dagger M, checked real and returned symmetrized."""
    m = np.asarray(m, dtype=np.complex128)
    g = m.conj().T @ m
    scale = max(1.0, float(np.max(np.abs(g))))
    if float(np.max(np.abs(g.imag))) > GRAM_IMAG_TOL * scale:
        raise ValueError("Gram matrix has a non-negligible imaginary part")
    g = g.real
    return (g + g.T) / 2


def gram_oracle(f) -> np.ndarray:
    """Gram matrix of a monic squarefree integer polynomial via its roots."""
    f = [int(c) for c in f]
    if len(f) < 2 or f[-1] != 1:
        raise ValueError("polynomial must be monic of degree >= 1")
    if not has_distinct_roots(f):
        raise ValueError("polynomial has repeated roots")
    rs = rootset_from_roots(polynomial_roots(f))
    return gram_from_vandermonde(vandermonde(rs))


def gram_oracle_cyclotomic(n: int) -> np.ndarray:
    if n <= 2:
        return np.ones((1, 1))
    return gram_from_vandermonde(cyclotomic_vandermonde(n))


def gram_oracle_realified(rs: RootSet) -> np.ndarray:
    """Second route to the Gram matrix: (B^dagger M)^T (B^dagger M)."""
    r = realify(vandermonde(rs), rs)
    return r.T @ r
