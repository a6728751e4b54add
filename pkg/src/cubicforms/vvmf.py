"""Vector-valued modular forms for the dual Weil representation of the
order-3 discriminant form: Rankin-Cohen brackets, the dimension formula, the
weight-11 basis, the constrained solve for the degree-generating vector, and
the assembly of the scalar degree series.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from .exactmath import Cyclotomic, IntegralityError, as_integer, gauss_sum
from .fqm import DiscriminantForm, Mp2Element, WeilRep, w_prime_form
from .qseries import QSeries, solve_linear_combination

__all__ = [
    "VectorForm",
    "HeegnerSeries",
    "rankin_cohen",
    "dim_formula",
    "basis_weight11",
    "solve_psi",
    "assemble_theta",
    "fit_alpha_beta",
    "is_cuspidal",
    "numeric_modularity_check",
]


class VectorForm:
    """Weight-tagged tuple of q-series indexed by discriminant form cosets.

    Two structural facts are enforced at construction: components at gamma
    and -gamma coincide, and every exponent in the gamma component is
    congruent to -q(gamma) mod Z (the support condition for the dual
    representation).
    """

    __slots__ = ("weight", "form", "components")

    def __init__(self, weight: Fraction | int, form: DiscriminantForm, components):
        if len(components) != form.order:
            raise ValueError("need one component per coset")
        components = tuple(components)
        for i in range(form.order):
            j = form.neg(i)
            if components[i] != components[j]:
                raise ValueError(f"components at cosets {i} and -{i}={j} differ")
            residue = (-form.qvalue(i)) % 1
            for e in components[i].exponents():
                if (e - residue) % 1 != 0:
                    raise ValueError(
                        f"component {i} has exponent {e} off its residue class "
                        f"{residue} mod Z"
                    )
        self.weight = Fraction(weight)
        self.form = form
        self.components = components

    def component(self, i: int) -> QSeries:
        return self.components[i]

    def coefficient(self, n: Fraction | int, i: int) -> Fraction:
        return self.components[i].coefficient(n)

    def __add__(self, other: "VectorForm") -> "VectorForm":
        if self.weight != other.weight or self.form is not other.form:
            raise ValueError("can only add forms of equal weight and type")
        return VectorForm(
            self.weight,
            self.form,
            tuple(a + b for a, b in zip(self.components, other.components)),
        )

    def scale(self, c: Fraction | int) -> "VectorForm":
        return VectorForm(
            self.weight, self.form, tuple(f * Fraction(c) for f in self.components)
        )

    def __eq__(self, other):
        if not isinstance(other, VectorForm):
            return NotImplemented
        return (
            self.weight == other.weight
            and self.form is other.form
            and self.components == other.components
        )

    def __repr__(self):
        comps = ", ".join(f"v{i}: {c}" for i, c in enumerate(self.components))
        return f"VectorForm(weight {self.weight}; {comps})"


# ---------------------------------------------------------------------------
# Rankin-Cohen brackets
# ---------------------------------------------------------------------------

def _scalar_bracket(f: QSeries, k1, g: QSeries, k2, n: int) -> QSeries:
    """[f, g]_n = sum_r (-1)^r C(n+k1-1, n-r) C(n+k2-1, r) D^r f * D^(n-r) g,
    with D = q d/dq."""
    out = None
    for r in range(n + 1):
        c = (-1) ** r * comb(n + k1 - 1, n - r) * comb(n + k2 - 1, r)
        term = f.derivative(r) * g.derivative(n - r) * Fraction(c)
        out = term if out is None else out + term
    return out


def rankin_cohen(F: VectorForm, g: QSeries, g_weight: int, n: int) -> VectorForm:
    """Componentwise bracket of a vector form with a scalar level-1 form;
    the result has weight k1 + k2 + 2n."""
    if n < 0:
        raise ValueError("bracket order must be nonnegative")
    if any(e.denominator != 1 for e in g.exponents()):
        raise ValueError("scalar factor must have integer exponents")
    k1 = as_integer(F.weight, "vector form weight")
    comps = tuple(
        _scalar_bracket(f, k1, g, g_weight, n) for f in F.components
    )
    return VectorForm(Fraction(k1 + g_weight + 2 * n), F.form, comps)


# ---------------------------------------------------------------------------
# dimension formula
# ---------------------------------------------------------------------------

def dim_formula(k: int, form: DiscriminantForm | None = None) -> int:
    """Dimension of the weight-k space for the dual representation of the
    order-3 form, evaluated exactly in cyclotomic arithmetic:

        (2 - 1/2 - 2/3) + k/6
        - (1/(4 sqrt 3)) Re[e((k-1)/4) G(2)]
        - (1/9) Re[e((k+2)/6) (G(1) + G(-3))] - 1/3

    with G(a) the quadratic Gauss sum over the form's q-values.  The result
    must be a nonnegative integer.
    """
    if k < 3 or k % 2 == 0:
        raise ValueError(f"dimension formula needs odd k >= 3, got {k}")
    if form is None:
        form = w_prime_form()
    qvals = form.qvalues
    g1 = gauss_sum(1, qvals)
    g2 = gauss_sum(2, qvals)
    gm3 = gauss_sum(-3, qvals)
    sqrt3 = Cyclotomic.sqrt_int(3)

    term1 = (Cyclotomic.root_of_unity(Fraction(k - 1, 4)) * g2).real_part()
    # 1/(4 sqrt 3) = sqrt(3)/12
    term1 = term1 * sqrt3 * Fraction(1, 12)
    term2 = (
        Cyclotomic.root_of_unity(Fraction(k + 2, 6)) * (g1 + gm3)
    ).real_part() * Fraction(1, 9)

    total = (
        Cyclotomic.from_rational(Fraction(2) - Fraction(1, 2) - Fraction(2, 3))
        + Cyclotomic.from_rational(Fraction(k, 6))
        - term1
        - term2
        - Cyclotomic.from_rational(Fraction(1, 3))
    )
    value = total.as_rational()
    dim = as_integer(value, f"dimension at weight {k}")
    if dim < 0:
        raise IntegralityError(f"dimension formula gave {dim} < 0 at weight {k}")
    return dim


# ---------------------------------------------------------------------------
# the weight-11 basis and the constrained solve
# ---------------------------------------------------------------------------

_BASIS_CACHE: dict[Fraction, tuple[VectorForm, VectorForm]] = {}
_PSI_CACHE: dict[Fraction, VectorForm] = {}


def basis_weight11(prec: Fraction | int) -> tuple[VectorForm, VectorForm]:
    """The two brackets [E5, E6]_0 and [E5, E4]_1 spanning the weight-11
    space; linear independence is certified by a nonsingular 2x2 minor of
    leading coefficients."""
    from .eisenstein import eisenstein_level1, vv_eisenstein

    prec = Fraction(prec)
    if prec < 2:
        raise ValueError("need at least two integer q-steps")
    if prec in _BASIS_CACHE:
        return _BASIS_CACHE[prec]
    e5 = vv_eisenstein(w_prime_form(), 5, prec)
    iprec = int(prec) + (prec.denominator != 1)
    f0 = rankin_cohen(e5, eisenstein_level1(6, iprec), 6, 0)
    f1 = rankin_cohen(e5, eisenstein_level1(4, iprec), 4, 1)
    minor = f0.coefficient(0, 0) * f1.coefficient(1, 0) - f1.coefficient(
        0, 0
    ) * f0.coefficient(1, 0)
    if minor == 0:
        raise ArithmeticError("bracket basis is not linearly independent")
    _BASIS_CACHE[prec] = (f0, f1)
    return f0, f1


def solve_psi(prec: Fraction | int) -> VectorForm:
    """Solve c0*F0 + c1*F1 against the two normalizations pinning the degree
    series: constant coefficient -2 on the trivial coset (the Hodge bundle
    degree of a pencil) and vanishing q^(1/3) coefficient on the first
    nonzero coset (no discriminant-2 members in a general pencil)."""
    prec = Fraction(prec)
    if prec in _PSI_CACHE:
        return _PSI_CACHE[prec]
    f0, f1 = basis_weight11(prec)
    third = Fraction(1, 3)
    c0, c1 = solve_linear_combination(
        [
            QSeries.from_terms(
                [(0, f.coefficient(0, 0)), (third, f.coefficient(third, 1))], 3, 1
            )
            for f in (f0, f1)
        ],
        [(Fraction(0), Fraction(-2)), (third, Fraction(0))],
    )
    psi = f0.scale(c0) + f1.scale(c1)
    _PSI_CACHE[prec] = psi
    return psi


# ---------------------------------------------------------------------------
# the scalar degree series
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class HeegnerSeries:
    """The scalar series Psi_0 + (1/2)(Psi_1 + Psi_2) together with the
    integer degree table d -> N_d read off its 1/3-grid coefficients."""

    theta: QSeries
    degrees: dict[int, int]

    def degree(self, d: int) -> int:
        return self.degrees[d]


def assemble_theta(psi: VectorForm) -> HeegnerSeries:
    """Contract the vector form to the scalar degree series; every degree
    must come out an exact integer (half-integral values are a hard error)."""
    theta = psi.component(0) + (psi.component(1) + psi.component(2)) * Fraction(1, 2)
    degrees: dict[int, int] = {}
    prec = theta.prec
    d = 2
    while Fraction(d, 6) < prec:
        if d % 6 in (0, 2):
            val = theta.coefficient(Fraction(d, 6))
            degrees[d] = as_integer(val, f"degree at discriminant {d}")
        d += 2
    return HeegnerSeries(theta, degrees)


# ---------------------------------------------------------------------------
# polynomial identities in the weight-1 and weight-3 generators
# ---------------------------------------------------------------------------

def _monomials(weight: int, prec_steps: int, rescaled: bool) -> list[QSeries]:
    from .eisenstein import alpha_series, beta_series

    alpha = alpha_series(prec_steps)
    beta = beta_series(prec_steps)
    if rescaled:
        alpha = alpha.rescale_exponent(Fraction(1, 3))
        beta = beta.rescale_exponent(Fraction(1, 3))
    out = []
    b = 0
    while weight - 3 * b >= 0:
        out.append(alpha ** (weight - 3 * b) * beta**b)
        b += 1
    return out


def fit_alpha_beta(
    f: QSeries, weight: int = 11, rescaled: bool | str = False, min_extra: int = 25
) -> list[Fraction]:
    """Exact coefficients expressing f in the monomials a^(w-3b) * b^b of the
    two generators (substituted q -> q^(1/3) when ``rescaled``; both monomial
    families at once when ``rescaled="both"``).

    The system is solved on the first full-rank batch of coefficients and
    re-verified on every further computed coefficient; at least ``min_extra``
    verification points are required.
    """
    if f.prec is None:
        raise ValueError("fit needs a truncated series")
    steps = int(f.prec) + (f.prec.denominator != 1)
    if rescaled == "both":
        basis = _monomials(weight, steps, False) + _monomials(weight, 3 * steps, True)
    elif rescaled:
        basis = _monomials(weight, 3 * steps, True)
    else:
        basis = _monomials(weight, steps, False)
    grid = sorted(
        {e for g in basis for e in g.exponents()}
        | set(f.exponents()),
    )
    limit = min([f.prec] + [g.prec for g in basis])
    grid = [e for e in grid if e < limit]
    # pick the earliest exponents whose rows reach full column rank
    selected: list[Fraction] = []
    echelon: list[list[Fraction]] = []
    for e in grid:
        if len(selected) == len(basis):
            break
        row = [g.coefficient(e) for g in basis]
        for piv in echelon:
            lead = next(i for i, x in enumerate(piv) if x)
            if row[lead]:
                f_ = row[lead] / piv[lead]
                row = [x - f_ * y for x, y in zip(row, piv)]
        if any(row):
            echelon.append(row)
            selected.append(e)
    if len(selected) < len(basis):
        raise ArithmeticError("monomial basis is rank-deficient on the grid")
    extra = [e for e in grid if e not in set(selected)]
    if len(extra) < min_extra:
        raise ValueError(
            f"only {len(extra)} verification points available, need {min_extra}"
        )
    coeffs = solve_linear_combination(
        basis, [(e, f.coefficient(e)) for e in selected]
    )
    for e in extra:
        combo = sum((c * g.coefficient(e) for c, g in zip(coeffs, basis)), Fraction(0))
        if combo != f.coefficient(e):
            raise ArithmeticError(
                f"fit fails verification at q^{e}: {combo} != {f.coefficient(e)}"
            )
    return coeffs


def is_cuspidal(F: VectorForm) -> bool:
    """True iff every component has vanishing constant term."""
    return all(f.coefficient(0) == 0 for f in F.components)


# ---------------------------------------------------------------------------
# numeric modularity check
# ---------------------------------------------------------------------------

def _eval_qseries(f: QSeries, tau: complex) -> complex:
    q_third = cmath.exp(2j * cmath.pi * tau / f.den)
    return sum(complex(c) * q_third**e for e, c in f.coeffs.items())


def _truncation_bound(F: VectorForm, tau: complex) -> float:
    """Geometric tail estimate for the truncated evaluation at tau.

    Coefficients of holomorphic forms grow polynomially, so consecutive
    magnitude ratios settle down; the growth rate R is read off the trailing
    half of the stored coefficients (early ratios overshoot wildly) and the
    tail beyond prec is bounded by |c_last| R^(prec - e_last) x^prec/(1 - Rx).
    """
    x = abs(cmath.exp(2j * cmath.pi * tau))
    worst = 0.0
    for f in F.components:
        if f.prec is None:
            continue
        mags = [
            (float(Fraction(e, f.den)), abs(complex(c)))
            for e, c in sorted(f.coeffs.items())
            if c
        ]
        if not mags:
            continue
        tail = mags[len(mags) // 2 :]
        ratio = 1.0
        for (e1, m1), (e2, m2) in zip(tail, tail[1:]):
            ratio = max(ratio, (m2 / m1) ** (1.0 / (e2 - e1)))
        if ratio * x >= 1:
            return float("inf")
        e_last, m_last = mags[-1]
        prec = float(f.prec)
        worst = max(
            worst,
            m_last * ratio ** max(0.0, prec - e_last) * x**prec / (1 - ratio * x),
        )
    return worst


def numeric_modularity_check(
    F: VectorForm, g: Mp2Element, tau0: complex, tol: float = 1e-6
) -> float:
    """Max-norm residual of F(g tau0) - phi(tau0)^(2k) rho_dual(g) F(tau0),
    evaluated in floating complex arithmetic from the truncated expansions.

    Refuses tau0 whose estimated truncation error exceeds tol/10.
    """
    if tau0.imag <= 0:
        raise ValueError("tau0 must lie in the upper half-plane")
    tau1 = g.act(tau0)
    bound = max(_truncation_bound(F, tau0), _truncation_bound(F, tau1))
    if not bound < tol / 10:
        raise ValueError(
            f"truncation error estimate {bound} exceeds {tol / 10}; "
            "raise the precision or move tau0 higher"
        )
    rep = WeilRep(F.form, dual=True)
    rho = rep.rho(g)
    order = F.form.order
    values = [_eval_qseries(f, tau0) for f in F.components]
    transformed = [_eval_qseries(f, tau1) for f in F.components]
    autom = g.phi(tau0) ** int(2 * F.weight)
    residual = 0.0
    for i in range(order):
        rhs = autom * sum(
            rho[i][j].to_complex() * values[j] for j in range(order)
        )
        residual = max(residual, abs(transformed[i] - rhs))
    return residual
