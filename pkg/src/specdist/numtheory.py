"""Integer arithmetic: factorization, totients, cyclotomic polynomials and
their discriminants.

Polynomials are plain coefficient lists in ascending degree order, so
``[1, 0, 1]`` is x^2 + 1.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, prod


@dataclass(frozen=True)
class Factorization:
    n: int
    factors: tuple[tuple[int, int], ...]

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)

    def __iter__(self):
        return iter(self.factors)


def _check_positive(n):
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"expected an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"expected a positive integer, got {n}")


@lru_cache(maxsize=4096)
def factorize(n: int) -> Factorization:
    """Prime-power decomposition of ``n`` by trial division."""
    _check_positive(n)
    factors = []
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def is_prime(n: int) -> bool:
    return n >= 2 and factorize(n).factors == ((n, 1),)


def is_squarefree(n: int) -> bool:
    return all(e == 1 for _, e in factorize(n))


def euler_phi(n: int) -> int:
    return prod(p ** (e - 1) * (p - 1) for p, e in factorize(n))


def radical(n: int) -> int:
    return prod(factorize(n).primes)


def omega(n: int) -> int:
    return len(factorize(n).factors)


def divisors(n: int) -> list[int]:
    divs = [1]
    for p, e in factorize(n):
        divs = [d * p**k for d in divs for k in range(e + 1)]
    return sorted(divs)


def coprime_residues(n: int) -> list[int]:
    """Integers c in [1, n] with gcd(c, n) = 1, ascending."""
    _check_positive(n)
    return [c for c in range(1, n + 1) if gcd(c, n) == 1]


# -- integer polynomial helpers ----------------------------------------------

def poly_mul(a, b):
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def poly_divmod(num, den):
    """Long division; exact for integer inputs when ``den`` is monic."""
    num = list(num)
    if len(den) > len(num):
        return [0], _trim(num)
    lead = den[-1]
    quot = [0] * (len(num) - len(den) + 1)
    for k in range(len(quot) - 1, -1, -1):
        coeff = num[k + len(den) - 1]
        if lead != 1:
            coeff = Fraction(coeff, lead)
        quot[k] = coeff
        if coeff:
            for j, d in enumerate(den):
                num[k + j] -= coeff * d
    return quot, _trim(num[: len(den) - 1] or [0])


def _trim(p):
    p = list(p)
    while len(p) > 1 and p[-1] == 0:
        p.pop()
    return p


def poly_derivative(p):
    return [k * c for k, c in enumerate(p)][1:] or [0]


def poly_gcd(a, b):
    """Monic gcd over the rationals."""
    a, b = _trim([Fraction(x) for x in a]), _trim([Fraction(x) for x in b])
    while b != [0]:
        _, r = poly_divmod(a, b)
        a, b = b, r
    return [x / a[-1] for x in a]


def has_distinct_roots(p) -> bool:
    """True iff ``p`` is squarefree over Q, i.e. gcd(p, p') is constant."""
    if len(_trim(p)) <= 2:
        return True
    return len(poly_gcd(p, poly_derivative(p))) == 1


def poly_substitute_power(h, k: int):
    """Coefficients of h(x^k)."""
    out = [0] * ((len(h) - 1) * k + 1)
    for i, c in enumerate(h):
        out[i * k] = c
    return out


@lru_cache(maxsize=None)
def _cyclotomic(n: int) -> tuple[int, ...]:
    num = [-1] + [0] * (n - 1) + [1]
    den = [1]
    for d in divisors(n)[:-1]:
        den = poly_mul(den, list(_cyclotomic(d)))
    quot, rem = poly_divmod(num, den)
    if rem != [0]:
        raise ArithmeticError(f"inexact division building Phi_{n}")
    return tuple(int(c) for c in quot)


def cyclotomic_coeffs(n: int) -> list[int]:
    """Coefficients of the n-th cyclotomic polynomial, ascending degree."""
    _check_positive(n)
    return list(_cyclotomic(n))


def abs_disc_cyclotomic(n: int) -> int:
    """|Disc(Phi_n)| = n^phi(n) / prod_{p | n} p^(phi(n)/(p-1)), exactly."""
    phi = euler_phi(n)
    den = prod(p ** (phi // (p - 1)) for p in factorize(n).primes)
    value, rem = divmod(n**phi, den)
    assert rem == 0
    return value
