"""Finite quadratic modules of even lattices and the Weil representation of
the metaplectic group Mp2(Z) on their group rings.

The discriminant group M_dual/M is computed from the Smith normal form of the
Gram matrix; its elements carry the Q/Z-valued quadratic form q(gamma) =
<gamma,gamma>/2 mod Z and bilinear form b(gamma,delta) = <gamma,delta> mod Z.
Representation matrices are exact matrices over a cyclotomic field.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import isqrt, lcm

from . import _linalg
from .exactmath import Cyclotomic, as_integer

__all__ = [
    "EvenLattice",
    "DiscriminantForm",
    "Mp2Element",
    "WeilRep",
    "conjugate_transpose",
    "discriminant_form",
    "gauss_milgram_check",
    "heegner_index",
    "short_vectors",
    "w_prime_form",
    "W_GRAM",
    "U_GRAM",
    "E8_GRAM",
    "W_PRIME_GRAM",
    "lambda0_gram",
    "lambda0_prime_gram",
]


# ---------------------------------------------------------------------------
# lattices
# ---------------------------------------------------------------------------

W_GRAM: tuple[tuple[int, ...], ...] = ((2, 1), (1, 2))
U_GRAM: tuple[tuple[int, ...], ...] = ((0, 1), (1, 0))

# E8 as the T(2,3,5) graph: trivalent node 0 with arms {1}, {2,3}, {4,5,6,7}
_E8_EDGES = ((0, 1), (0, 2), (2, 3), (0, 4), (4, 5), (5, 6), (6, 7))
E8_GRAM: tuple[tuple[int, ...], ...] = tuple(
    tuple(
        2 if i == j else (-1 if (i, j) in _E8_EDGES or (j, i) in _E8_EDGES else 0)
        for j in range(8)
    )
    for i in range(8)
)

W_PRIME_GRAM: tuple[tuple[int, ...], ...] = tuple(
    tuple(-x for x in row) for row in W_GRAM
)


def _direct_sum(*blocks):
    n = sum(len(b) for b in blocks)
    out = [[0] * n for _ in range(n)]
    off = 0
    for b in blocks:
        for i, row in enumerate(b):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(b)
    return tuple(tuple(row) for row in out)


def lambda0_gram() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of W + U + U + E8 + E8 (signature (20, 2))."""
    return _direct_sum(W_GRAM, U_GRAM, U_GRAM, E8_GRAM, E8_GRAM)


def lambda0_prime_gram() -> tuple[tuple[int, ...], ...]:
    """Gram matrix of -(W + U + U + E8 + E8) (signature (2, 20))."""
    return tuple(tuple(-x for x in row) for row in lambda0_gram())


@dataclass(frozen=True)
class EvenLattice:
    """Nondegenerate even integral lattice given by its Gram matrix."""

    gram: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        g = self.gram
        n = len(g)
        if any(len(row) != n for row in g):
            raise ValueError("Gram matrix must be square")
        if any(g[i][j] != g[j][i] for i in range(n) for j in range(n)):
            raise ValueError("Gram matrix must be symmetric")
        if any(g[i][i] % 2 for i in range(n)):
            raise ValueError("lattice is not even (odd diagonal entry)")
        if self.det() == 0:
            raise ValueError("Gram matrix is degenerate")

    @property
    def rank(self) -> int:
        return len(self.gram)

    def det(self) -> int:
        return as_integer(_linalg.det(self.gram), "lattice determinant")

    @property
    def signature(self) -> tuple[int, int]:
        return _linalg.inertia(self.gram)

    def inner(self, x, y) -> Fraction:
        g = self.gram
        return sum(
            Fraction(xi) * g[i][j] * Fraction(yj)
            for i, xi in enumerate(x)
            for j, yj in enumerate(y)
            if xi and g[i][j] and yj
        ) + Fraction(0)

    def half_norm(self, x) -> Fraction:
        return self.inner(x, x) / 2


# ---------------------------------------------------------------------------
# discriminant forms
# ---------------------------------------------------------------------------

def _frac_vec(v) -> tuple[Fraction, ...]:
    return tuple(Fraction(x) % 1 for x in v)


class DiscriminantForm:
    """The finite quadratic module M_dual/M of an even lattice.

    Cosets are listed with the zero class first and the remaining classes
    sorted by their canonical representative (coordinates in [0,1) with
    respect to the lattice basis) in lexicographic order.
    """

    def __init__(self, lattice: EvenLattice):
        self.lattice = lattice
        gram = [list(row) for row in lattice.gram]
        n = lattice.rank
        U, D, _V = _linalg.smith_normal_form(gram)
        dual_basis = _linalg.rational_inverse(gram)  # columns span M_dual
        u_inv = _linalg.rational_inverse(U)
        # generator i of Z^n / gram*Z^n is the class of column i of U^{-1};
        # the matching dual vector is gram^{-1} * U^{-1} * e_i
        gens = []
        orders = []
        for i in range(n):
            d = D[i][i]
            if d > 1:
                col = [u_inv[r][i] for r in range(n)]
                vec = tuple(
                    sum(dual_basis[r][s] * col[s] for s in range(n)) for r in range(n)
                )
                gens.append(_frac_vec(vec))
                orders.append(d)
        self.order = 1
        for d in orders:
            self.order *= d
        if self.order != abs(lattice.det()):
            raise AssertionError("discriminant group order must equal |det|")

        # enumerate all cosets as Z-combinations of the generators
        reps: set[tuple[Fraction, ...]] = set()
        stack = [tuple(Fraction(0) for _ in range(n))]
        reps.add(stack[0])
        for g, d in zip(gens, orders):
            new = set()
            for base in reps:
                acc = base
                for _ in range(1, d):
                    acc = _frac_vec([a + b for a, b in zip(acc, g)])
                    new.add(acc)
            reps |= new
        if len(reps) != self.order:
            raise AssertionError("coset enumeration does not match group order")
        zero = tuple(Fraction(0) for _ in range(n))
        self.cosets: list[tuple[Fraction, ...]] = [zero] + sorted(reps - {zero})
        self._index = {rep: i for i, rep in enumerate(self.cosets)}

        self.qvalues: list[Fraction] = [
            lattice.half_norm(rep) % 1 for rep in self.cosets
        ]
        self._neg = [
            self._index[_frac_vec([-x for x in rep])] for rep in self.cosets
        ]
        self._add = [
            [
                self._index[_frac_vec([a + b for a, b in zip(r1, r2)])]
                for r2 in self.cosets
            ]
            for r1 in self.cosets
        ]

    # -- group structure ---------------------------------------------------

    def add(self, i: int, j: int) -> int:
        return self._add[i][j]

    def neg(self, i: int) -> int:
        return self._neg[i]

    def multiple(self, i: int, m: int) -> int:
        out = 0
        step = i if m >= 0 else self._neg[i]
        for _ in range(abs(m)):
            out = self._add[out][step]
        return out

    def element_order(self, i: int) -> int:
        m, acc = 1, i
        while acc != 0:
            acc = self._add[acc][i]
            m += 1
        return m

    # -- quadratic/bilinear values ------------------------------------------

    def qvalue(self, i: int) -> Fraction:
        return self.qvalues[i]

    def bvalue(self, i: int, j: int) -> Fraction:
        return self.lattice.inner(self.cosets[i], self.cosets[j]) % 1

    @property
    def signature(self) -> tuple[int, int]:
        return self.lattice.signature

    @property
    def level(self) -> int:
        """Smallest N with N*q(gamma) integral for every coset."""
        return lcm(1, *(qv.denominator for qv in self.qvalues))

    def __len__(self):
        return self.order

    def __repr__(self):
        return f"DiscriminantForm(order {self.order}, q-values {self.qvalues})"


@lru_cache(maxsize=None)
def _cached_form(gram: tuple[tuple[int, ...], ...]) -> DiscriminantForm:
    return DiscriminantForm(EvenLattice(gram))


def discriminant_form(lattice: EvenLattice | tuple) -> DiscriminantForm:
    if isinstance(lattice, EvenLattice):
        return _cached_form(lattice.gram)
    return _cached_form(tuple(tuple(row) for row in lattice))


def w_prime_form() -> DiscriminantForm:
    """The order-3 discriminant form of -W, in the canonical labeling."""
    return discriminant_form(W_PRIME_GRAM)


def heegner_index(d: int, form: DiscriminantForm | None = None) -> tuple[Fraction, int]:
    """Map a discriminant d = 0, 2 mod 6 to its series slot (n, coset index):
    n = -d/6 and the coset is (d/2) times the first nonzero class, with the
    gamma and -gamma slots carrying identical coefficients."""
    if d <= 0 or d % 6 not in (0, 2):
        raise ValueError(f"d = {d} is not congruent to 0 or 2 mod 6")
    if form is None:
        form = w_prime_form()
    gamma1 = 1 if form.order > 1 else 0
    return Fraction(-d, 6), form.multiple(gamma1, (d // 2) % form.order)


# ---------------------------------------------------------------------------
# the metaplectic group
# ---------------------------------------------------------------------------

def _principal_phi(a: int, b: int, c: int, d: int, tau: complex) -> complex:
    return cmath.sqrt(c * tau + d)


@dataclass(frozen=True)
class Mp2Element:
    """Element (A, phi) of Mp2(Z): A in SL2(Z) and phi(tau) = eps*sqrt(c*tau+d)
    with the principal square root and eps in {+1, -1}."""

    a: int
    b: int
    c: int
    d: int
    eps: int = 1

    def __post_init__(self):
        if self.a * self.d - self.b * self.c != 1:
            raise ValueError("matrix is not in SL2(Z)")
        if self.eps not in (1, -1):
            raise ValueError("branch must be +1 or -1")

    @property
    def matrix(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @classmethod
    def identity(cls) -> "Mp2Element":
        return cls(1, 0, 0, 1, 1)

    @classmethod
    def T(cls, n: int = 1) -> "Mp2Element":
        return cls(1, n, 0, 1, 1)

    @classmethod
    def S(cls) -> "Mp2Element":
        return cls(0, -1, 1, 0, 1)

    def phi(self, tau: complex) -> complex:
        return self.eps * _principal_phi(self.a, self.b, self.c, self.d, tau)

    def act(self, tau: complex) -> complex:
        return (self.a * tau + self.b) / (self.c * tau + self.d)

    def __mul__(self, other: "Mp2Element") -> "Mp2Element":
        if not isinstance(other, Mp2Element):
            return NotImplemented
        a = self.a * other.a + self.b * other.c
        b = self.a * other.b + self.b * other.d
        c = self.c * other.a + self.d * other.c
        d = self.c * other.b + self.d * other.d
        # the branch cocycle, evaluated at tau = i where both factors are
        # far from the square-root branch cut; the ratio is exactly +-1
        tau = 1j
        lhs = self.phi(other.act(tau)) * other.phi(tau)
        rhs = _principal_phi(a, b, c, d, tau)
        ratio = lhs / rhs
        if abs(ratio - 1) < 1e-9:
            eps = 1
        elif abs(ratio + 1) < 1e-9:
            eps = -1
        else:  # pragma: no cover
            raise AssertionError(f"branch cocycle ratio {ratio} is not +-1")
        return Mp2Element(a, b, c, d, eps)

    def word_in_generators(self) -> list[tuple[str, int]]:
        """Deterministic word [('T', n) | ('S', 1)] whose product equals self.

        Euclidean reduction on the first column; a possible leftover central
        element (I, -1) is expressed as S^4.
        """
        word: list[tuple[str, int]] = []
        a, b, c, d = self.matrix
        while c != 0:
            # n = nearest integer to a/c so the remainder shrinks by half
            n = (2 * a + c) // (2 * c) if c > 0 else (2 * a - c) // (2 * c)
            if n:
                word.append(("T", n))
            word.append(("S", 1))
            # strip T^n * S from the left:  (a b; c d) = T^n S (c d; -(a-nc) -(b-nd))
            a, b, c, d = c, d, -(a - n * c), -(b - n * d)
        if a == 1:
            if b:
                word.append(("T", b))
        else:  # a == d == -1: the rest is S^2 * T^{-b}
            word.extend([("S", 1), ("S", 1)])
            if b:
                word.append(("T", -b))
        prod = Mp2Element.identity()
        for kind, n in word:
            prod = prod * (Mp2Element.T(n) if kind == "T" else Mp2Element.S())
        assert prod.matrix == self.matrix
        if prod.eps != self.eps:
            word.extend([("S", 1)] * 4)  # S^4 = (identity, -1)
        return word


# ---------------------------------------------------------------------------
# the Weil representation
# ---------------------------------------------------------------------------

def _mat_mul_cyc(x, y):
    n = len(x)
    return [
        [sum((x[i][k] * y[k][j] for k in range(n)), Cyclotomic.zero()) for j in range(n)]
        for i in range(n)
    ]


def _mat_identity_cyc(n):
    one = Cyclotomic.from_rational(1)
    zero = Cyclotomic.zero()
    return [[one if i == j else zero for j in range(n)] for i in range(n)]


def conjugate_transpose(m):
    n = len(m)
    return [[m[j][i].conjugate() for j in range(n)] for i in range(n)]


class WeilRep:
    """Weil representation (or its dual) of Mp2(Z) on the group ring of a
    discriminant form, with exact cyclotomic matrices.

    Matrices act on column vectors indexed by the cosets; rho(g) is computed
    by decomposing g into a word in the generators S and T.
    """

    def __init__(self, form: DiscriminantForm, dual: bool = False):
        self.form = form
        self.dual = dual
        self._cache: dict[tuple[int, int, int, int, int], list[list[Cyclotomic]]] = {}
        self._gen: dict[str, list[list[Cyclotomic]]] = {}

    # -- generator matrices --------------------------------------------------

    def _conj_if_dual(self, m):
        if not self.dual:
            return m
        return [[x.conjugate() for x in row] for row in m]

    def t_matrix(self, n: int = 1):
        """rho(T^n): diagonal with entries e(n*q(gamma))."""
        form = self.form
        zero = Cyclotomic.zero()
        out = [[zero] * form.order for _ in range(form.order)]
        for i in range(form.order):
            out[i][i] = Cyclotomic.root_of_unity(n * form.qvalue(i))
        return self._conj_if_dual(out)

    def s_matrix(self):
        """rho(S): (sqrt(i)^(b- - b+)/sqrt(order)) * (e(-<gamma,delta>))."""
        form = self.form
        bplus, bminus = form.signature
        front = Cyclotomic.zeta_power(3 * ((bminus - bplus) % 8))  # sqrt(i)^k
        front = front * Cyclotomic.sqrt_int(form.order) * Fraction(1, form.order)
        out = [
            [
                front * Cyclotomic.root_of_unity(-form.bvalue(i, j))
                for j in range(form.order)
            ]
            for i in range(form.order)
        ]
        return self._conj_if_dual(out)

    def generator_matrices(self):
        return self.t_matrix(1), self.s_matrix()

    # -- arbitrary elements ---------------------------------------------------

    def rho(self, g: Mp2Element):
        key = (*g.matrix, g.eps)
        if key in self._cache:
            return self._cache[key]
        if "S" not in self._gen:
            self._gen["S"] = self.s_matrix()
        out = _mat_identity_cyc(self.form.order)
        for kind, n in g.word_in_generators():
            out = _mat_mul_cyc(out, self.t_matrix(n) if kind == "T" else self._gen["S"])
        self._cache[key] = out
        return out

    def rho_gamma0_formula(self, g: Mp2Element):
        """Closed form for elements of Gamma0(N), N the level of the form:

            rho_dual(g) v_gamma =
                (a/order) * e((a-1)*oddity/8) * e(-b*d*q(gamma)) * v_{d*gamma}

        The oddity vanishes for odd-order forms (trivial 2-adic part), which
        is the only case supported here.
        """
        from .exactmath import jacobi_symbol

        form = self.form
        N = form.level
        if g.c % N != 0:
            raise ValueError(f"element is not in Gamma0({N})")
        if form.order % 2 == 0:
            raise NotImplementedError("closed form implemented for odd order only")
        oddity = 0
        zero = Cyclotomic.zero()
        out = [[zero] * form.order for _ in range(form.order)]
        for i in range(form.order):
            phase = Cyclotomic.root_of_unity(
                Fraction((g.a - 1) * oddity, 8) - g.b * g.d * form.qvalue(i)
            )
            target = form.multiple(i, g.d % form.order)
            out[target][i] = out[target][i] + phase * jacobi_symbol(g.a, form.order)
        if not self.dual:
            out = [[x.conjugate() for x in row] for row in out]
        if g.eps == -1:
            # peel off the central (identity, -1) = S^4; for forms whose
            # representation factors through SL2 this is the identity matrix
            out = _mat_mul_cyc(out, self.rho(Mp2Element(1, 0, 0, 1, -1)))
        return out

    def is_unitary(self, m) -> bool:
        prod = _mat_mul_cyc(m, conjugate_transpose(m))
        ident = _mat_identity_cyc(self.form.order)
        return all(
            prod[i][j] == ident[i][j]
            for i in range(self.form.order)
            for j in range(self.form.order)
        )


def gauss_milgram_check(form: DiscriminantForm) -> bool:
    """Exact identity sum_gamma e(q(gamma)) = sqrt(order) * e(signature/8)."""
    from .exactmath import gauss_sum

    total = gauss_sum(1, form.qvalues)
    bplus, bminus = form.signature
    rhs = Cyclotomic.sqrt_int(form.order) * Cyclotomic.root_of_unity(
        Fraction(bplus - bminus, 8)
    )
    return total == rhs


# ---------------------------------------------------------------------------
# positive definite lattice point enumeration (for theta series)
# ---------------------------------------------------------------------------

def short_vectors(
    lattice: EvenLattice, offset, bound: Fraction
) -> list[tuple[tuple[Fraction, ...], Fraction]]:
    """All vectors v = offset + x, x integral, with <v,v> <= bound, for a
    positive definite lattice.  Returns (coordinates, <v,v>) pairs.

    Enumeration by exact completion of squares (Fincke-Pohst); float square
    roots only propose candidate ranges, membership is checked exactly.
    """
    n = lattice.rank
    gram = lattice.gram
    offset = [Fraction(x) for x in offset]
    # Q(x) = sum_i a_i (x_i + sum_{j>i} b_ij x_j)^2 via exact LDL^T
    a = [[Fraction(gram[i][j]) for j in range(n)] for i in range(n)]
    coef = [[Fraction(0)] * n for _ in range(n)]
    diag = [Fraction(0)] * n
    for i in range(n):
        diag[i] = a[i][i]
        if diag[i] <= 0:
            raise ValueError("lattice is not positive definite")
        for j in range(i + 1, n):
            coef[i][j] = a[i][j] / diag[i]
        for r in range(i + 1, n):
            for s in range(i + 1, n):
                a[r][s] -= diag[i] * coef[i][r] * coef[i][s]

    out: list[tuple[tuple[Fraction, ...], Fraction]] = []
    x = [Fraction(0)] * n

    def recurse(i: int, remaining: Fraction):
        if i < 0:
            v = tuple(offset[k] + x[k] for k in range(n))
            norm = lattice.inner(v, v)
            if norm <= bound:
                out.append((v, norm))
            return
        # center of the i-th square: x_i + offset_i + sum_{j>i} coef[i][j]*(x_j+offset_j)
        center = offset[i] + sum(
            coef[i][j] * (x[j] + offset[j]) for j in range(i + 1, n)
        )
        radius_sq = remaining / diag[i]
        # integer window around -center of width 2*sqrt(radius_sq), padded
        span = (isqrt(int(radius_sq) + 1) if radius_sq >= 0 else 0) + 2
        base = -center
        lo = int(base) - span
        hi = int(base) + span
        for xi in range(lo, hi + 1):
            term = diag[i] * (xi + center) ** 2
            if term <= remaining:
                x[i] = Fraction(xi)
                recurse(i - 1, remaining - term)
        x[i] = Fraction(0)

    recurse(n - 1, Fraction(bound))
    return out
