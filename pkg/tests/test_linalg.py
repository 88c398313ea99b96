import numpy as np
import pytest
from hypothesis import given, settings, strategies as st
from hypothesis.extra.numpy import arrays

from oracles import eigvalsh, primitive_roots_of_unity
from specdist.linalg import (
    ConvergenceError,
    col_norms,
    complex_det,
    complex_log_abs_det,
    frobenius_norm,
    horner,
    jacobi_eigh,
    jacobi_eigenvalues,
    kron,
    polynomial_roots,
    row_norms,
    toeplitz_from_vector,
)
from specdist.numtheory import cyclotomic_coeffs

PHI15_ROW = [8, 1, 1, -2, 1, -4, -2, 1]


def test_kron_examples():
    assert np.array_equal(kron(np.array([[1]]), np.eye(2, dtype=int)), np.eye(2))
    a = np.array([[2, -1], [-1, 2]])
    expected = np.array([[2, 0, -1, 0], [0, 2, 0, -1], [-1, 0, 2, 0], [0, -1, 0, 2]])
    assert np.array_equal(kron(a, np.eye(2, dtype=int)), expected)


def test_kron_matches_numpy():
    rng = np.random.default_rng(3)
    a, b = rng.integers(-5, 5, (3, 4)), rng.integers(-5, 5, (2, 5))
    assert np.array_equal(kron(a, b), np.kron(a, b))


def test_toeplitz_examples():
    t = toeplitz_from_vector(PHI15_ROW)
    assert t.shape == (8, 8)
    assert list(t[0]) == PHI15_ROW and list(t[5]) == [-4, 1, -2, 1, 1, 8, 1, 1]
    assert np.array_equal(toeplitz_from_vector([7]), [[7]])
    assert np.array_equal(toeplitz_from_vector([2, -1]), [[2, -1], [-1, 2]])
    with pytest.raises(ValueError):
        toeplitz_from_vector([])


@given(st.lists(st.integers(-50, 50), min_size=1, max_size=12))
def test_toeplitz_symmetric_and_diagonal_constant(v):
    t = toeplitz_from_vector(v)
    assert np.array_equal(t, t.T)
    assert np.array_equal(t[1:, 1:], t[:-1, :-1])


def test_jacobi_examples():
    assert np.allclose(jacobi_eigenvalues([[2, -1], [-1, 2]]).eigenvalues, [1, 3], atol=1e-14)
    assert jacobi_eigenvalues(np.eye(4)).eigenvalues == (1, 1, 1, 1)
    spec = jacobi_eigenvalues(toeplitz_from_vector(PHI15_ROW))
    assert spec.dim == 8
    assert np.prod(spec.as_array()) == pytest.approx(1265625, rel=1e-10)


def _random_symmetric(rng, n):
    a = rng.standard_normal((n, n))
    return a + a.T


def test_jacobi_trace_and_determinant():
    rng = np.random.default_rng(20240611)
    for _ in range(200):
        n = int(rng.integers(1, 31))
        a = _random_symmetric(rng, n)
        w = jacobi_eigenvalues(a).as_array()
        assert np.all(np.diff(w) >= 0)
        assert abs(w.sum() - np.trace(a)) <= 1e-8 * max(1.0, np.abs(w).sum())
        det = complex_det(a).real
        assert np.prod(w) == pytest.approx(det, rel=1e-6, abs=1e-12)
        assert np.allclose(w, eigvalsh(a), atol=1e-10 * max(1.0, frobenius_norm(a)))


def test_jacobi_residual():
    rng = np.random.default_rng(7)
    for n in (2, 5, 17, 40):
        a = _random_symmetric(rng, n)
        w, v = jacobi_eigh(a)
        tol = 1e-9 * frobenius_norm(a)
        assert np.all(np.linalg.norm(a @ v - v * w, axis=0) <= tol)
        assert np.allclose(v.T @ v, np.eye(n), atol=1e-12)


def test_jacobi_rejects_nonsymmetric_and_budget():
    with pytest.raises(ValueError):
        jacobi_eigh([[1, 2], [3, 4]])
    with pytest.raises(ConvergenceError):
        jacobi_eigh(_random_symmetric(np.random.default_rng(0), 10), max_sweeps=1)


@settings(max_examples=50, deadline=None)
@given(arrays(np.float64, (4, 4), elements=st.floats(-10, 10)), st.integers(1, 4))
def test_kron_spectrum_property(a, k):
    a = a + a.T
    w = jacobi_eigenvalues(a).as_array()
    big = jacobi_eigenvalues(kron(a, np.eye(k))).as_array()
    assert np.allclose(big, np.sort(np.repeat(w, k)), atol=1e-9)


def test_norms():
    assert frobenius_norm(np.eye(3)) == pytest.approx(np.sqrt(3))
    assert np.allclose(row_norms(np.eye(3)), 1)
    z = np.exp(2j * np.pi / 3)
    m3 = np.array([[1, z], [1, np.conj(z)]])
    assert frobenius_norm(m3) ** 2 == pytest.approx(4)
    assert np.allclose(row_norms(m3), np.sqrt(2))
    assert np.allclose(col_norms(m3), np.sqrt(2))
    assert row_norms(np.array([[0, 0], [1, 2]]))[0] == 0


@given(arrays(np.complex128, (3, 5), elements=st.complex_numbers(max_magnitude=100, allow_nan=False)))
def test_frobenius_is_row_norm_sum(a):
    assert frobenius_norm(a) ** 2 == pytest.approx(np.sum(row_norms(a) ** 2), rel=1e-12, abs=1e-12)


def test_roots_examples():
    r = polynomial_roots([1, 0, 1])
    assert np.allclose(sorted(r, key=lambda z: z.imag), [-1j, 1j], atol=1e-12)
    assert np.allclose(polynomial_roots([-1, 1]), [1])
    r5 = polynomial_roots(cyclotomic_coeffs(5))
    assert _multiset_distance(r5, primitive_roots_of_unity(5)) <= 1e-8


def _multiset_distance(a, b):
    a, b = list(a), list(b)
    assert len(a) == len(b)
    worst = 0.0
    for x in a:
        j = int(np.argmin([abs(x - y) for y in b]))
        worst = max(worst, abs(x - b.pop(j)))
    return worst


def test_cyclotomic_roots_by_durand_kerner():
    for n in range(1, 101):
        f = cyclotomic_coeffs(n)
        r = polynomial_roots(f)
        assert _multiset_distance(r, primitive_roots_of_unity(n)) <= 1e-8, n
        assert np.max(np.abs(horner(f, r))) <= 1e-8 * (1 + max(map(abs, f)))


def test_roots_conjugate_closed_and_residual():
    f = [1, 1, 0, 1]  # x^3 + x + 1: one real root, one pair
    r = polynomial_roots(f)
    assert np.sum(r.imag == 0) == 1
    assert np.allclose(np.sort_complex(r), np.sort_complex(np.conj(r)))
    assert np.max(np.abs(horner(f, r))) <= 1e-8 * 2
    assert np.allclose(np.sort_complex(r), np.sort_complex(np.roots(f[::-1])), atol=1e-10)


def test_roots_input_validation():
    with pytest.raises(ValueError):
        polynomial_roots([3])
    with pytest.raises(ValueError):
        polynomial_roots([1, 2])


def test_complex_det_examples():
    assert complex_det(np.eye(5)) == pytest.approx(1)
    z = np.exp(2j * np.pi / 3)
    assert abs(complex_det([[1, z], [1, np.conj(z)]])) == pytest.approx(np.sqrt(3))
    assert abs(complex_det([[1, 1j], [1, -1j]])) == pytest.approx(2)
    assert complex_det([[1, 2], [2, 4]]) == 0
    assert complex_log_abs_det([[1, 2], [2, 4]]) == -np.inf


def test_complex_det_matches_numpy():
    rng = np.random.default_rng(11)
    for n in (1, 3, 8, 20):
        a = rng.standard_normal((n, n)) + 1j * rng.standard_normal((n, n))
        assert complex_det(a) == pytest.approx(np.linalg.det(a), rel=1e-10)
        assert complex_log_abs_det(a) == pytest.approx(np.linalg.slogdet(a)[1], rel=1e-12, abs=1e-12)
