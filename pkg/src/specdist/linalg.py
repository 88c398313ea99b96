"""Dense linear algebra kernels used by the Gram and distortion code.

Matrices are numpy arrays: float64 for real symmetric matrices, int64 for
the exact integer Gram matrices, complex128 for embedding matrices.  The
eigensolver, root finder and determinant are implemented here directly;
numpy supplies storage and elementwise arithmetic only.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100

DK_MAX_ITER = 1000
DK_STEP_TOL = 1e-12
# Irrational angular offset for the initial Durand-Kerner circle.
DK_ANGLE_OFFSET = math.sqrt(2) - 1


class ConvergenceError(ArithmeticError):
    pass


@dataclass(frozen=True)
class Spectrum:
    eigenvalues: tuple[float, ...]

    @property
    def dim(self) -> int:
        return len(self.eigenvalues)

    @property
    def min(self) -> float:
        return self.eigenvalues[0]

    @property
    def max(self) -> float:
        return self.eigenvalues[-1]

    def as_array(self) -> np.ndarray:
        return np.asarray(self.eigenvalues)

    def __len__(self):
        return len(self.eigenvalues)

    def __iter__(self):
        return iter(self.eigenvalues)


def as_symmetric(a, *, exact=False) -> np.ndarray:
    """Validate and return ``a`` as a square symmetric array.

    With ``exact=True`` integer entries are kept and symmetry is checked
    exactly; otherwise the result is float64 and symmetry is enforced.
    """
    arr = np.array(a, dtype=np.int64 if exact else np.float64)
    if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {arr.shape}")
    if not np.array_equal(arr, arr.T):
        raise ValueError("matrix is not symmetric")
    return arr


def kron(a, b) -> np.ndarray:
    """Kronecker product: out[i*q + k, j*r + l] = a[i, j] * b[k, l]."""
    a, b = np.asarray(a), np.asarray(b)
    (m, n), (q, r) = a.shape, b.shape
    return (a[:, None, :, None] * b[None, :, None, :]).reshape(m * q, n * r)


def identity(k: int, dtype=np.int64) -> np.ndarray:
    return np.eye(k, dtype=dtype)


def toeplitz_from_vector(v) -> np.ndarray:
    """Symmetric Toeplitz matrix with out[i, j] = v[|i - j|]."""
    v = np.asarray(v)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("generator must be a nonempty vector")
    idx = np.arange(v.size)
    return v[np.abs(idx[:, None] - idx[None, :])]


def frobenius_norm(a) -> float:
    return float(np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2)))


def row_norms(a) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2, axis=1))


def col_norms(a) -> np.ndarray:
    return np.sqrt(np.sum(np.abs(np.asarray(a)) ** 2, axis=0))


# -- symmetric eigenvalues -----------------------------------------------------

def _round_robin(m: int):
    """Pairings of 0..m-1 (m even) covering every pair once over m-1 rounds."""
    players = list(range(m))
    for _ in range(m - 1):
        half = m // 2
        p = np.array(players[:half])
        q = np.array(players[half:][::-1])
        yield np.minimum(p, q), np.maximum(p, q)
        players = [players[0], players[-1]] + players[1:-1]


def _off_norm(a):
    off = a - np.diag(np.diag(a))
    return math.sqrt(float(np.sum(off * off)))


def jacobi_eigh(a, tol=JACOBI_TOL, max_sweeps=JACOBI_MAX_SWEEPS):
    """Eigen-decomposition of a real symmetric matrix by cyclic Jacobi.

    Each sweep visits every off-diagonal pair once, grouped by a
    round-robin schedule into rounds of disjoint pairs; the rotations in a
    round commute and are applied together.  Iteration stops once the
    off-diagonal Frobenius norm is at most ``tol * ||a||_F``.

    Returns ``(eigenvalues, vectors)`` sorted ascending, with eigenvectors
    in the columns of ``vectors``.
    """
    a = np.array(a, dtype=np.float64)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError(f"expected a square matrix, got shape {a.shape}")
    if not np.allclose(a, a.T, rtol=0, atol=1e-12 * max(1.0, frobenius_norm(a))):
        raise ValueError("matrix is not symmetric")
    a = (a + a.T) / 2
    n = a.shape[0]
    v = np.eye(n)
    threshold = tol * frobenius_norm(a)
    # Pad to an even size with a dummy index whose pairs are skipped.
    m = n + (n % 2)
    schedule = list(_round_robin(m)) if n > 1 else []

    for _ in range(max_sweeps):
        if _off_norm(a) <= threshold:
            break
        for p, q in schedule:
            keep = q < n
            p, q = p[keep], q[keep]
            apq = a[p, q]
            live = apq != 0.0
            if not live.any():
                continue
            p, q, apq = p[live], q[live], apq[live]
            with np.errstate(over="ignore"):
                theta = (a[q, q] - a[p, p]) / (2.0 * apq)
                t = np.where(theta >= 0, 1.0, -1.0) / (np.abs(theta) + np.hypot(theta, 1.0))
            c = 1.0 / np.sqrt(t * t + 1.0)
            s = t * c

            rp, rq = a[p, :], a[q, :]
            a[p, :] = c[:, None] * rp - s[:, None] * rq
            a[q, :] = s[:, None] * rp + c[:, None] * rq
            cp, cq = a[:, p], a[:, q]
            a[:, p] = cp * c - cq * s
            a[:, q] = cp * s + cq * c
            a[p, q] = 0.0
            a[q, p] = 0.0

            vp, vq = v[:, p], v[:, q]
            v[:, p] = vp * c - vq * s
            v[:, q] = vp * s + vq * c
    else:
        if _off_norm(a) > threshold:
            raise ConvergenceError(f"Jacobi did not converge in {max_sweeps} sweeps")

    w = np.diag(a).copy()
    order = np.argsort(w, kind="stable")
    return w[order], v[:, order]


def jacobi_eigenvalues(a) -> Spectrum:
    w, _ = jacobi_eigh(a)
    return Spectrum(tuple(float(x) for x in w))


# -- determinants --------------------------------------------------------------

def _lu_factor(a):
    """In-place LU with partial pivoting; returns (lu, row sign, singular?)."""
    lu = np.array(a, dtype=np.complex128)
    n = lu.shape[0]
    sign = 1
    for k in range(n):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        if lu[piv, k] == 0:
            return lu, sign, True
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            sign = -sign
        lu[k + 1:, k] /= lu[k, k]
        lu[k + 1:, k + 1:] -= np.outer(lu[k + 1:, k], lu[k, k + 1:])
    return lu, sign, False


def complex_det(a) -> complex:
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("determinant needs a square matrix")
    lu, sign, singular = _lu_factor(a)
    if singular:
        return 0j
    return complex(sign * np.prod(np.diag(lu)))


def complex_log_abs_det(a) -> float:
    """log |det a|, computed without forming the (possibly huge) product."""
    lu, _, singular = _lu_factor(a)
    if singular:
        return -math.inf
    return float(np.sum(np.log(np.abs(np.diag(lu)))))


def det_via_lu(a) -> float:
    return complex_det(a).real


# -- polynomial roots ----------------------------------------------------------

def horner(coeffs, z):
    """Evaluate an ascending-coefficient polynomial at ``z`` (array-friendly)."""
    out = np.zeros_like(np.asarray(z, dtype=np.complex128))
    for c in reversed(coeffs):
        out = out * z + c
    return out


def polynomial_roots(coeffs, max_iter=DK_MAX_ITER, tol=DK_STEP_TOL) -> np.ndarray:
    """All roots of a monic polynomial (ascending coefficients) by Durand-Kerner.

    For real coefficients the output is conjugate-closed: roots within
    tolerance of the real axis are made real and each upper-half-plane root
    is paired with its nearest lower-half partner, which is replaced by the
    exact conjugate.
    """
    coeffs = [complex(c) if isinstance(c, complex) else float(c) for c in coeffs]
    deg = len(coeffs) - 1
    if deg < 1:
        raise ValueError("polynomial must have degree >= 1")
    if coeffs[-1] != 1:
        raise ValueError("polynomial must be monic")
    if deg == 1:
        return np.array([-complex(coeffs[0])])

    radius = 1.0 + max(abs(c) for c in coeffs)
    k = np.arange(deg)
    z = radius * np.exp(1j * (2 * np.pi * k / deg + DK_ANGLE_OFFSET))
    for _ in range(max_iter):
        diff = z[:, None] - z[None, :]
        np.fill_diagonal(diff, 1.0)
        step = horner(coeffs, z) / np.prod(diff, axis=1)
        z = z - step
        if np.max(np.abs(step)) <= tol * max(1.0, np.max(np.abs(z))):
            break
    else:
        raise ConvergenceError(f"Durand-Kerner did not converge in {max_iter} iterations")

    if all(isinstance(c, float) for c in coeffs):
        z = _conjugate_close(z)
    return z


def _conjugate_close(z, tol=1e-8):
    real = np.sort(z[np.abs(z.imag) <= tol].real)
    upper = list(z[z.imag > tol])
    lower = list(z[z.imag < -tol])
    if len(upper) != len(lower):
        raise ConvergenceError("roots of a real polynomial are not conjugate-closed")
    pairs = []
    for u in upper:
        j = int(np.argmin([abs(np.conj(u) - w) for w in lower]))
        w = lower.pop(j)
        rep = (u + np.conj(w)) / 2
        pairs.append(rep)
    pairs.sort(key=lambda r: np.angle(r))
    reps = np.array(pairs, dtype=np.complex128)
    return np.concatenate([real.astype(np.complex128), reps, np.conj(reps[::-1])])
