"""Exact arithmetic substrate: rationals, a small cyclotomic field, Bernoulli
machinery, the quadratic character mod 3, and elementary number theory.

All values are immutable and all functions are pure; nothing here ever
rounds.  Rational numbers are ``fractions.Fraction`` (always in lowest terms
with positive denominator), re-exported as ``Rational``.
"""

from __future__ import annotations

import cmath
from fractions import Fraction
from functools import lru_cache
from math import comb, gcd
from typing import Iterable, Sequence

Rational = Fraction

__all__ = [
    "Rational",
    "Cyclotomic",
    "IntegralityError",
    "as_integer",
    "bernoulli_number",
    "bernoulli_poly",
    "chi_minus3",
    "euler_phi",
    "factorize",
    "gauss_sum",
    "jacobi_symbol",
    "p_valuation",
    "prime_factors",
]


class IntegralityError(ArithmeticError):
    """A quantity that must be an integer came out non-integral."""


def as_integer(x: Fraction | int, what: str = "value") -> int:
    """Convert an exact rational known to be integral, else raise."""
    x = Fraction(x)
    if x.denominator != 1:
        raise IntegralityError(f"{what} = {x} is not an integer")
    return x.numerator


# ---------------------------------------------------------------------------
# elementary number theory
# ---------------------------------------------------------------------------

def jacobi_symbol(a: int, n: int) -> int:
    """Jacobi symbol (a/n) for odd positive n, extended to all integers a."""
    if n <= 0 or n % 2 == 0:
        raise ValueError(f"Jacobi symbol needs odd positive n, got {n}")
    result = 1
    if a < 0:
        a = -a
        if n % 4 == 3:
            result = -result
    a %= n
    while a != 0:
        while a % 2 == 0:
            a //= 2
            if n % 8 in (3, 5):
                result = -result
        a, n = n, a
        if a % 4 == 3 and n % 4 == 3:
            result = -result
        a %= n
    return result if n == 1 else 0


def chi_minus3(n: int) -> int:
    """Quadratic Dirichlet character mod 3: 0 on multiples of 3, +-1 else."""
    return (0, 1, -1)[n % 3]


def p_valuation(n: int | Fraction, p: int) -> int:
    """Exponent of the prime p in n (negative for p in the denominator)."""
    if n == 0:
        raise ValueError("p-adic valuation of 0 is undefined")
    n = Fraction(n)
    v = 0
    num = abs(n.numerator)
    while num % p == 0:
        num //= p
        v += 1
    den = n.denominator
    while den % p == 0:
        den //= p
        v -= 1
    return v


def factorize(n: int) -> dict[int, int]:
    """Prime factorization of a positive integer by trial division."""
    if n <= 0:
        raise ValueError(f"cannot factorize {n}")
    out: dict[int, int] = {}
    d = 2
    while d * d <= n:
        while n % d == 0:
            out[d] = out.get(d, 0) + 1
            n //= d
        d += 1 if d == 2 else 2
    if n > 1:
        out[n] = out.get(n, 0) + 1
    return out


def prime_factors(n: int) -> list[int]:
    return sorted(factorize(n))


def euler_phi(n: int) -> int:
    phi = n
    for p in factorize(n):
        phi = phi // p * (p - 1)
    return phi


# ---------------------------------------------------------------------------
# Bernoulli numbers and polynomials
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def bernoulli_number(k: int) -> Fraction:
    """B_k with B_1 = -1/2, via sum_{j<m} C(m+1,j) B_j = 0."""
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    if k == 0:
        return Fraction(1)
    s = sum(Fraction(comb(k + 1, j)) * bernoulli_number(j) for j in range(k))
    return -s / (k + 1)


def bernoulli_poly(k: int, x: Fraction | int) -> Fraction:
    """B_k(x) = sum_j C(k,j) B_j x^(k-j), exactly."""
    if k < 0:
        raise ValueError("Bernoulli index must be nonnegative")
    x = Fraction(x)
    return sum(
        Fraction(comb(k, j)) * bernoulli_number(j) * x ** (k - j)
        for j in range(k + 1)
    )


# ---------------------------------------------------------------------------
# cyclotomic field Q(zeta_N)
# ---------------------------------------------------------------------------

@lru_cache(maxsize=None)
def _cyclotomic_poly(n: int) -> tuple[int, ...]:
    """Coefficients (low to high) of the n-th cyclotomic polynomial."""
    # x^n - 1 = prod_{d | n} Phi_d(x); divide out the proper divisors.
    poly = [-1] + [0] * (n - 1) + [1]
    for d in range(1, n):
        if n % d == 0:
            phi_d = _cyclotomic_poly(d)
            # exact polynomial division (Phi_d is monic)
            out = [0] * (len(poly) - len(phi_d) + 1)
            rem = list(poly)
            for i in range(len(out) - 1, -1, -1):
                out[i] = rem[i + len(phi_d) - 1]
                if out[i]:
                    for j, c in enumerate(phi_d):
                        rem[i + j] -= out[i] * c
            assert all(c == 0 for c in rem[: len(phi_d) - 1])
            poly = out
    return tuple(poly)


@lru_cache(maxsize=None)
def _power_table(order: int) -> tuple[tuple[Fraction, ...], ...]:
    """Row j: coordinates of zeta^j in the power basis.  Covers every j a
    product reduction or a zeta_power lookup can ask for."""
    phi = euler_phi(order)
    cyc = _cyclotomic_poly(order)  # monic of degree phi
    rows: list[tuple[Fraction, ...]] = []
    for j in range(phi):
        rows.append(tuple(Fraction(int(i == j)) for i in range(phi)))
    for j in range(phi, max(order, 2 * phi - 1)):
        prev = rows[j - 1]
        # multiply by zeta: shift, then reduce the overflow via Phi
        top = prev[phi - 1]
        shifted = [Fraction(0)] + list(prev[:-1])
        if top:
            for i in range(phi):
                shifted[i] -= top * cyc[i]
        rows.append(tuple(shifted))
    return tuple(rows)


class Cyclotomic:
    """Exact element of Q(zeta_N) in the power basis 1, zeta, ..., zeta^(phi(N)-1).

    The default order 24 contains i, sqrt(2), sqrt(3) and the eighth roots of
    unity, which covers every root of unity and surd this project needs.
    """

    __slots__ = ("order", "coeffs")

    DEFAULT_ORDER = 24

    def __init__(self, coeffs: Sequence[Fraction | int], order: int = DEFAULT_ORDER):
        phi = euler_phi(order)
        if len(coeffs) != phi:
            raise ValueError(f"need {phi} coordinates for order {order}")
        self.order = order
        self.coeffs = tuple(Fraction(c) for c in coeffs)

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        return cls([0] * euler_phi(order), order)

    @classmethod
    def from_rational(cls, x: Fraction | int, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        c = [Fraction(0)] * euler_phi(order)
        c[0] = Fraction(x)
        return cls(c, order)

    @classmethod
    def zeta_power(cls, k: int, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        """zeta_order^k reduced into the power basis."""
        table = _power_table(order)
        return cls(table[k % order], order)

    @classmethod
    def root_of_unity(cls, x: Fraction | int, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        """e(x) = exp(2*pi*i*x) for rational x with denominator dividing order."""
        x = Fraction(x)
        if order % x.denominator != 0:
            raise ValueError(f"e({x}) does not lie in the order-{order} field")
        return cls.zeta_power(x.numerator * (order // x.denominator), order)

    @classmethod
    def sqrt_int(cls, n: int, order: int = DEFAULT_ORDER) -> "Cyclotomic":
        """sqrt(n) for positive n whose squarefree part has prime factors with
        4p | order (p odd) resp. 8 | order (p = 2)."""
        if n <= 0:
            raise ValueError("sqrt_int needs a positive integer")
        square, free = 1, 1
        for p, e in factorize(n).items():
            square *= p ** (e // 2)
            if e % 2:
                free *= p
        out = cls.from_rational(square, order)
        for p in factorize(free):
            if p == 2:
                root = cls.zeta_power(order // 8, order) + cls.zeta_power(-order // 8, order)
            else:
                # Gauss sum: sum_a (a/p) zeta_p^a = sqrt(p) or i*sqrt(p)
                g = cls.zero(order)
                for a in range(1, p):
                    g = g + cls.from_rational(jacobi_symbol(a, p), order) * cls.zeta_power(
                        a * (order // p), order
                    )
                root = g if p % 4 == 1 else g * cls.zeta_power(-order // 4, order)
            out = out * root
        return out

    # -- arithmetic --------------------------------------------------------

    def _check(self, other: "Cyclotomic") -> None:
        if self.order != other.order:
            raise ValueError("mixed cyclotomic orders")

    def __add__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.order)
        self._check(other)
        return Cyclotomic([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order)

    __radd__ = __add__

    def __neg__(self):
        return Cyclotomic([-a for a in self.coeffs], self.order)

    def __sub__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.order)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return Cyclotomic([a * other for a in self.coeffs], self.order)
        self._check(other)
        phi = len(self.coeffs)
        prod = [Fraction(0)] * (2 * phi - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    if b:
                        prod[i + j] += a * b
        table = _power_table(self.order)
        out = [Fraction(0)] * phi
        for j, c in enumerate(prod):
            if c:
                row = table[j]
                for i in range(phi):
                    if row[i]:
                        out[i] += c * row[i]
        return Cyclotomic(out, self.order)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if isinstance(other, (int, Fraction)):
            if other == 0:
                raise ZeroDivisionError
            return self * (Fraction(1) / Fraction(other))
        raise TypeError("division only by exact rationals")

    def __pow__(self, m: int):
        if m < 0:
            raise ValueError("negative cyclotomic powers are not supported")
        out = Cyclotomic.from_rational(1, self.order)
        base = self
        while m:
            if m & 1:
                out = out * base
            base = base * base
            m >>= 1
        return out

    def __eq__(self, other):
        if isinstance(other, (int, Fraction)):
            other = Cyclotomic.from_rational(other, self.order)
        if not isinstance(other, Cyclotomic):
            return NotImplemented
        return self.order == other.order and self.coeffs == other.coeffs

    def __hash__(self):
        return hash((self.order, self.coeffs))

    def __repr__(self):
        terms = [f"{c}*z^{i}" for i, c in enumerate(self.coeffs) if c]
        return "Cyclotomic(" + (" + ".join(terms) or "0") + f"; order {self.order})"

    # -- structure maps ----------------------------------------------------

    def galois(self, a: int) -> "Cyclotomic":
        """Field automorphism zeta -> zeta^a for a coprime to the order."""
        if gcd(a, self.order) != 1:
            raise ValueError(f"{a} is not coprime to {self.order}")
        out = Cyclotomic.zero(self.order)
        for j, c in enumerate(self.coeffs):
            if c:
                out = out + Cyclotomic.zeta_power(j * a, self.order) * c
        return out

    def conjugate(self) -> "Cyclotomic":
        """Complex conjugation, zeta -> zeta^(order-1)."""
        return self.galois(self.order - 1)

    def real_part(self) -> "Cyclotomic":
        return (self + self.conjugate()) * Fraction(1, 2)

    def norm_squared(self) -> "Cyclotomic":
        return self * self.conjugate()

    def is_rational(self) -> bool:
        return all(c == 0 for c in self.coeffs[1:])

    def as_rational(self) -> Fraction:
        if not self.is_rational():
            raise IntegralityError(f"{self!r} is not rational")
        return self.coeffs[0]

    def to_complex(self) -> complex:
        return sum(
            complex(c) * cmath.exp(2j * cmath.pi * j / self.order)
            for j, c in enumerate(self.coeffs)
        )


def gauss_sum(a: int, qvalues: Iterable[Fraction], order: int = Cyclotomic.DEFAULT_ORDER) -> Cyclotomic:
    """Quadratic Gauss sum sum_gamma e(a * q(gamma)) over the listed q-values.

    Negative a is the same sum with conjugated phases; a = 0 gives the number
    of q-values.
    """
    out = Cyclotomic.zero(order)
    for qv in qvalues:
        out = out + Cyclotomic.root_of_unity(a * Fraction(qv), order)
    return out
