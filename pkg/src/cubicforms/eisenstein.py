"""Eisenstein series: the classical level-1 series, the level-3 series with
quadratic character, and the vector-valued Eisenstein series attached to the
order-3 discriminant form, assembled from local Euler products.

The vector-valued coefficients are computed exactly: the transcendental parts
of the normalizing L-value cancel against Bernoulli sums, and each local
factor is built from representation counts of a quadratic congruence.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .exactmath import (
    IntegralityError,
    as_integer,
    bernoulli_number,
    bernoulli_poly,
    chi_minus3,
    prime_factors,
)
from .fqm import DiscriminantForm, EvenLattice, short_vectors, w_prime_form
from .qseries import QSeries
from .vvmf import VectorForm

__all__ = [
    "eisenstein_level1",
    "eisenstein_chi",
    "eisenstein_chi_rescaled",
    "alpha_series",
    "beta_series",
    "rep_count",
    "prime_power_counts",
    "LocalEulerData",
    "local_euler_data",
    "local_euler_factor",
    "l_value_ratio",
    "vv_eisenstein",
    "theta_series_rank10",
]


# ---------------------------------------------------------------------------
# scalar series
# ---------------------------------------------------------------------------

def _divisors(n: int) -> list[int]:
    out = [d for d in range(1, n + 1) if n % d == 0]
    return out


def eisenstein_level1(k: int, prec: int) -> QSeries:
    """E_k = 1 - (2k/B_k) sum_{n>=1} sigma_{k-1}(n) q^n, weight k even >= 4."""
    if k < 4 or k % 2:
        raise ValueError(f"level-1 Eisenstein series needs even k >= 4, got {k}")
    factor = Fraction(-2 * k) / bernoulli_number(k)
    coeffs = {0: Fraction(1)}
    for n in range(1, prec):
        coeffs[n] = factor * sum(d ** (k - 1) for d in _divisors(n))
    return QSeries(coeffs, 1, prec)


def eisenstein_chi(k: int, prec: int, convention: str = "character") -> QSeries:
    """Weight-k level-3 Eisenstein series with the quadratic character mod 3.

    k = 1 carries the 1 + 6*sum normalization; k >= 3 starts at q.  The two
    equivalent divisor-sum conventions are exposed for cross-checking:
    ``character`` sums d^(k-1) * chi(n/d), ``legendre`` sums (n/d)^(k-1) * chi(d).
    """
    if k < 1 or k % 2 == 0:
        raise ValueError(f"character Eisenstein series needs odd k >= 1, got {k}")
    if convention not in ("character", "legendre"):
        raise ValueError(f"unknown convention {convention!r}")
    coeffs: dict[int, Fraction] = {}
    for n in range(1, prec):
        if convention == "character":
            s = sum(d ** (k - 1) * chi_minus3(n // d) for d in _divisors(n))
        else:
            s = sum((n // d) ** (k - 1) * chi_minus3(d) for d in _divisors(n))
        coeffs[n] = Fraction(s)
    if k == 1:
        for n in coeffs:
            coeffs[n] *= 6
        coeffs[0] = Fraction(1)
    return QSeries(coeffs, 1, prec)


def eisenstein_chi_rescaled(k: int, prec: int) -> QSeries:
    """The same series in q^(1/3); prec counts integer q-steps before rescaling."""
    return eisenstein_chi(k, prec).rescale_exponent(Fraction(1, 3))


def alpha_series(prec: int) -> QSeries:
    """The weight-1 generator 1 + 6q + 6q^3 + 6q^4 + 12q^7 + ..."""
    return eisenstein_chi(1, prec)


def beta_series(prec: int) -> QSeries:
    """The weight-3 generator q + 3q^2 + 9q^3 + 13q^4 + 24q^5 + ..."""
    return eisenstein_chi(3, prec)


# ---------------------------------------------------------------------------
# representation counts for the local Euler factors
# ---------------------------------------------------------------------------

def _integer_polynomial(form: DiscriminantForm, gamma: int, n: Fraction):
    """The congruence (1/2)(r-gamma)^2 + n as an integer polynomial in r.

    Evenness gives (1/2)<r,r> in Z[r]; duality gives <r,gamma> in Z[r]; and
    q(gamma) + n in Z makes the constant term integral.  Returns (quad, lin,
    const) with quad the Gram matrix and lin = Gram * gamma.
    """
    lat = form.lattice
    rep = form.cosets[gamma]
    rank = lat.rank
    lin = []
    for i in range(rank):
        val = sum(Fraction(lat.gram[i][j]) * rep[j] for j in range(rank))
        lin.append(as_integer(val, "dual pairing coefficient"))
    const = as_integer(
        lat.half_norm(rep) + n, f"q(gamma) + n for coset {gamma}, n = {n}"
    )
    return lat.gram, tuple(lin), const


def rep_count(form: DiscriminantForm, gamma: int, n: Fraction, a: int) -> int:
    """Brute-force count of r in (Z/aZ)^rank with (1/2)(r-gamma)^2 + n = 0 mod a."""
    if a < 1:
        raise ValueError("modulus must be positive")
    n = Fraction(n)
    gram, lin, const = _integer_polynomial(form, gamma, n)
    rank = form.lattice.rank

    def value(r):
        q2 = sum(gram[i][j] * r[i] * r[j] for i in range(rank) for j in range(rank))
        assert q2 % 2 == 0
        return q2 // 2 - sum(lin[i] * r[i] for i in range(rank)) + const

    count = 0
    r = [0] * rank

    def walk(i):
        nonlocal count
        if i == rank:
            if value(r) % a == 0:
                count += 1
            return
        for x in range(a):
            r[i] = x
            walk(i + 1)

    walk(0)
    return count


def prime_power_counts(
    form: DiscriminantForm, gamma: int, n: Fraction, p: int, vmax: int
) -> list[int]:
    """Counts [N(p^0), ..., N(p^vmax)] of the same congruence, by lifting
    solutions one p-power at a time.

    A solution r mod p^j lifts to r + p^j*s; evenness makes the second-order
    term divisible by p^(j+1), so the lift condition is the linear congruence
    G(r)/p^j + grad(r).s = 0 mod p.  Agrees with rep_count (tested), but runs
    in time proportional to the number of solutions instead of p^(2v).
    """
    n = Fraction(n)
    gram, lin, const = _integer_polynomial(form, gamma, n)
    rank = form.lattice.rank

    def value(r):
        q2 = sum(gram[i][j] * r[i] * r[j] for i in range(rank) for j in range(rank))
        return q2 // 2 - sum(lin[i] * r[i] for i in range(rank)) + const

    def gradient(r):
        return [
            sum(gram[i][j] * r[j] for j in range(rank)) - lin[i] for i in range(rank)
        ]

    counts = [1]
    if vmax == 0:
        return counts
    # a solution with gradient nonzero mod p lifts to exactly p solutions,
    # all again with nonzero gradient, so those need no bookkeeping beyond a
    # running count; only singular solutions (gradient = 0 mod p) are stored
    nonsingular = 0
    singular: list[tuple[int, ...]] = []
    r = [0] * rank

    def seed(i):
        nonlocal nonsingular
        if i == rank:
            if value(r) % p == 0:
                if any(g % p for g in gradient(r)):
                    nonsingular += 1
                else:
                    singular.append(tuple(r))
            return
        for x in range(p):
            r[i] = x
            seed(i + 1)

    seed(0)
    counts.append(nonsingular + len(singular))
    pj = p
    shifts = [tuple(s) for s in _tuples(p, rank)]
    for _ in range(1, vmax):
        new: list[tuple[int, ...]] = []
        for sol in singular:
            val = value(sol)
            assert val % pj == 0
            # gradient stays 0 mod p on every lift, so a lift is a solution
            # iff the depressed value vanishes mod p, and then all p^rank
            # shifts qualify
            if (val // pj) % p == 0:
                for s in shifts:
                    new.append(tuple(x + pj * si for x, si in zip(sol, s)))
        nonsingular *= p
        singular = new
        counts.append(nonsingular + len(singular))
        pj *= p
    return counts


def _tuples(p: int, rank: int):
    if rank == 0:
        yield ()
        return
    for rest in _tuples(p, rank - 1):
        for x in range(p):
            yield rest + (x,)


@dataclass(frozen=True)
class LocalEulerData:
    """Everything the Euler factors at one index (gamma, n) depend on."""

    gamma: int
    n: Fraction
    d_gamma: int
    omega: dict[int, int]  # prime -> 1 + 2*v_p(2*d_gamma*n)
    counts: dict[tuple[int, int], int]  # (prime, v) -> N(p^v)


def _omega(form: DiscriminantForm, gamma: int, n: Fraction, p: int) -> int:
    m = as_integer(2 * form.element_order(gamma) * n, "2*d_gamma*n")
    v = 0
    while m % p == 0:
        m //= p
        v += 1
    return 1 + 2 * v


def local_euler_data(form: DiscriminantForm, gamma: int, n: Fraction) -> LocalEulerData:
    n = Fraction(n)
    if n <= 0:
        raise ValueError("index n must be positive")
    support = as_integer(18 * n, "18n")
    omega: dict[int, int] = {}
    counts: dict[tuple[int, int], int] = {}
    for p in prime_factors(support):
        w = _omega(form, gamma, n, p)
        omega[p] = w
        for e, c in enumerate(prime_power_counts(form, gamma, n, p, w)):
            counts[(p, e)] = c
    return LocalEulerData(gamma, n, form.element_order(gamma), omega, counts)


def local_euler_factor(
    k: int, form: DiscriminantForm, gamma: int, n: Fraction, p: int
) -> Fraction:
    """L_{gamma,n}(k,p) = (1-p^(1-k)) sum_{v<omega} N(p^v) p^(-kv)
                          + N(p^omega) p^(-k*omega)."""
    n = Fraction(n)
    w = _omega(form, gamma, n, p)
    counts = prime_power_counts(form, gamma, n, p, w)
    head = sum(counts[v] * Fraction(p) ** (-k * v) for v in range(w))
    return (1 - Fraction(p) ** (1 - k)) * head + counts[w] * Fraction(p) ** (-k * w)


def l_value_ratio(k: int) -> Fraction:
    """Exact rational value of 2^(k+1) pi^k (-1)^((k-1)/2) / (sqrt(3) Gamma(k) L(k,chi)).

    Expanding L(k, chi) = (2^(k-1) pi^k / (k! sqrt(3))) * sum_m chi(m) B_k(1-m/3)
    cancels pi^k and sqrt(3), leaving 4k(-1)^((k-1)/2) / sum_m chi(m) B_k(1-m/3).
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"L-value ratio needs odd k >= 3, got {k}")
    s = sum(chi_minus3(m) * bernoulli_poly(k, 1 - Fraction(m, 3)) for m in range(1, 4))
    return Fraction(4 * k * (-1) ** ((k - 1) // 2)) / s


# ---------------------------------------------------------------------------
# the vector-valued series
# ---------------------------------------------------------------------------

_VV_CACHE: dict[tuple, VectorForm] = {}


def vv_eisenstein(form: DiscriminantForm, k: int, prec: Fraction | int) -> VectorForm:
    """Vector-valued Eisenstein series for the order-3 form: constant term
    2*v_0, and coefficient of q^n v_gamma equal to

        ratio * n^(k-1) * prod_{p | 18n} L_{gamma,n}(k,p) / (1 - chi(p) p^(-k)).

    Every assembled coefficient must come out a nonnegative integer; anything
    else signals an Euler-factor bug and raises.
    """
    if form.order != 3 or form.lattice.rank != 2:
        raise ValueError(
            "vector-valued Eisenstein series is wired to the rank-2, order-3 form"
        )
    prec = Fraction(prec)
    key = (form.lattice.gram, k, prec)
    if key in _VV_CACHE:
        return _VV_CACHE[key]
    ratio = l_value_ratio(k)
    components = []
    for gamma in range(form.order):
        offset = (-form.qvalue(gamma)) % 1
        coeffs: dict[Fraction, Fraction] = {}
        n = offset if offset > 0 else Fraction(1)
        while n < prec:
            support = as_integer(18 * n, "18n")
            val = ratio * n ** (k - 1)
            for p in prime_factors(support):
                val *= local_euler_factor(k, form, gamma, n, p) / (
                    1 - chi_minus3(p) * Fraction(p) ** (-k)
                )
            c = as_integer(val, f"Eisenstein coefficient at q^{n} v_{gamma}")
            if c < 0:
                raise IntegralityError(
                    f"negative Eisenstein coefficient {c} at q^{n} v_{gamma}"
                )
            coeffs[n] = Fraction(c)
            n += 1
        if gamma == 0:
            coeffs[Fraction(0)] = Fraction(2)
        components.append(QSeries.from_terms(coeffs.items(), 3, prec))
    out = VectorForm(Fraction(k), form, tuple(components))
    _VV_CACHE[key] = out
    return out


_THETA_CACHE: dict[tuple[Fraction, str], VectorForm] = {}


def theta_series_rank10(prec: Fraction | int, method: str = "product") -> VectorForm:
    """Siegel theta series of the rank-10 positive definite lattice W + E8,
    by lattice point enumeration: coefficient of q^(v^2/2) v_gamma counts
    dual vectors v in coset gamma.

    ``product`` enumerates the two orthogonal summands separately and
    convolves their counting series (exact, and much faster); ``direct``
    walks the rank-10 lattice in one pass.  Both are pure enumeration and the
    tests pin them equal.  Indexed against the canonical order-3 form; the
    two nonzero slots carry equal series, so the coset matching is forced.
    Serves as the independent oracle for the Euler-product assembly.
    """
    from .fqm import E8_GRAM, W_GRAM, _direct_sum, discriminant_form

    prec = Fraction(prec)
    key = (prec, method)
    if key in _THETA_CACHE:
        return _THETA_CACHE[key]
    target_form = w_prime_form()
    step = Fraction(1, 3)  # the norm grid of the dual lattice
    bound = 2 * prec - 2 * step  # largest half-norm strictly below prec

    def bucket(lattice: EvenLattice, offset) -> dict[Fraction, Fraction]:
        out: dict[Fraction, Fraction] = {}
        for _vec, norm in short_vectors(lattice, offset, bound):
            half = norm / 2
            if half < prec:
                out[half] = out.get(half, Fraction(0)) + 1
        return out

    buckets: list[dict[Fraction, Fraction]]
    if method == "direct":
        gram = _direct_sum(W_GRAM, E8_GRAM)
        lattice = EvenLattice(gram)
        theta_form = discriminant_form(gram)
        buckets = [bucket(lattice, theta_form.cosets[i]) for i in range(3)]
        comps = tuple(QSeries.from_terms(b.items(), 3, prec) for b in buckets)
    elif method == "product":
        w_lat = EvenLattice(W_GRAM)
        w_form = discriminant_form(W_GRAM)
        e8 = QSeries.from_terms(
            bucket(EvenLattice(E8_GRAM), (0,) * 8).items(), 3, prec
        )
        comps = tuple(
            QSeries.from_terms(bucket(w_lat, w_form.cosets[i]).items(), 3, prec) * e8
            for i in range(3)
        )
    else:
        raise ValueError(f"unknown method {method!r}")
    out = VectorForm(Fraction(5), target_form, comps)
    _THETA_CACHE[key] = out
    return out
