"""Acceptance suite: one test per criterion, every tolerance pinned.

Run with ``pytest tests/test_acceptance.py -v -s`` to see one line per
criterion.  Everything is exact equality except the numeric modularity
residuals (criterion 8), whose stated tolerance is 1e-6 in max-norm.
"""

import random
from fractions import Fraction as F

from cubicforms.eisenstein import theta_series_rank10, vv_eisenstein
from cubicforms.fqm import (
    E8_GRAM,
    U_GRAM,
    W_GRAM,
    W_PRIME_GRAM,
    Mp2Element,
    WeilRep,
    _mat_mul_cyc,
    discriminant_form,
    gauss_milgram_check,
)
from cubicforms.qseries import QSeries
from cubicforms.vvmf import (
    VectorForm,
    dim_formula,
    fit_alpha_beta,
    numeric_modularity_check,
)

PREC = 30


def report(n, text):
    print(f"ACCEPTANCE {n:2d} PASS: {text}")


def test_criterion_1_theta_coefficients(heegner30, psi30):
    theta = heegner30.theta
    assert theta.coefficient(0) == -2
    assert heegner30.degree(6) == 192
    assert heegner30.degree(8) == 3402
    assert heegner30.degree(12) == 196272
    # the q^(7/3) value: internally consistent with the vector slot, and it
    # is 917568 (the digit-transposed reading 915678 is wrong)
    value = theta.coefficient(F(7, 3))
    assert value == psi30.coefficient(F(7, 3), 1)
    assert value == 917568 and value != 915678
    report(1, f"theta = -2 + 192q + 3402q^(4/3) + 196272q^2 + {value}q^(7/3) + ...")


def test_criterion_2_eisenstein_displays(e5):
    assert [e5.coefficient(n, 0) for n in range(4)] == [2, 492, 7200, 39372]
    for i in (1, 2):
        assert [e5.coefficient(F(3 * n + 1, 3), i) for n in range(3)] == [
            6,
            1446,
            14412,
        ]
    assert e5.component(1) == e5.component(2)
    report(2, "weight-5 vector Eisenstein series matches all displayed terms")


def test_criterion_3_oracle_equivalence(w_prime):
    e5 = vv_eisenstein(w_prime, 5, 4)
    twice_theta = theta_series_rank10(4).scale(2)
    for i in range(3):
        assert e5.component(i) == twice_theta.component(i)
    report(3, "Euler products equal twice the rank-10 theta series up to q^3")


def test_criterion_4_dimension_formula():
    assert dim_formula(3) == 1
    assert dim_formula(5) == 1
    assert dim_formula(11) == 2
    report(4, "dimensions (k=3,5,11) = (1,1,2), exact cyclotomic evaluation")


def test_criterion_5_polynomial_identities(psi30):
    fit0 = fit_alpha_beta(psi30.component(0), 11, False, min_extra=25)
    assert fit0 == [-2, 324, 183708, 4408992]
    theta_prime = psi30.component(0) + psi30.component(1) + psi30.component(2)
    fitp = fit_alpha_beta(theta_prime, 11, True, min_extra=25)
    assert fitp == [-2, 132, -2772, 18144]
    report(5, "generator-polynomial fits verified on 25+ extra coefficients")


def test_criterion_6_dual_path_degrees(heegner30):
    from cubicforms.schubert import (
        chern_invert,
        chern_sym3_dual_tautological,
        degree_c6_recurrence,
        degree_c6_segre,
        degree_c8_recurrence,
        degree_c8_segre,
    )
    from test_schubert import kernel_chern_displays

    assert heegner30.degree(6) == degree_c6_recurrence() == degree_c6_segre() == 192
    ckp = chern_invert(chern_sym3_dual_tautological())
    for i, expected in kernel_chern_displays().items():
        assert ckp.chern(i) == expected
    assert heegner30.degree(8) == degree_c8_recurrence() == degree_c8_segre() == 3402
    report(6, "192 and 3402 via series, bundle recurrence, and Segre classes")


def test_criterion_7_weil_representation(w_prime):
    for gram in (W_PRIME_GRAM, U_GRAM, E8_GRAM, W_GRAM):
        assert gauss_milgram_check(discriminant_form(gram))
    rep = WeilRep(w_prime, dual=True)
    rng = random.Random(20240817)

    def random_element(max_len=10):
        g = Mp2Element.identity()
        for _ in range(rng.randint(1, max_len)):
            tok = rng.choice(["S", "T", "T-"])
            g = g * (
                Mp2Element.S() if tok == "S" else Mp2Element.T(1 if tok == "T" else -1)
            )
        return g

    for _ in range(50):
        g1, g2 = random_element(6), random_element(6)
        assert rep.is_unitary(rep.rho(g1))
        assert rep.rho(g1 * g2) == _mat_mul_cyc(rep.rho(g1), rep.rho(g2))
    matched = 0
    while matched < 20:
        g = random_element()
        if g.c % 3 == 0:
            assert rep.rho(g) == rep.rho_gamma0_formula(g)
            matched += 1
    report(7, "Milgram x4, closed form on 20 level-3 elements, 50 unitary words")


def test_criterion_8_numeric_modularity(basis30, psi30):
    f0, _ = basis30
    r0 = numeric_modularity_check(f0, Mp2Element.S(), 1j, 1e-6)
    r1 = numeric_modularity_check(psi30, Mp2Element.S(), 1j, 1e-6)
    assert r0 < 1e-6 and r1 < 1e-6
    report(8, f"S-transform residuals at tau=i: {r0:.2e}, {r1:.2e} < 1e-6")


def test_criterion_9_schubert_kernel():
    from cubicforms.schubert import RingClassGr36, box_partitions

    s = RingClassGr36.sigma
    assert (s(1) ** 9).as_dict() == {(3, 3, 3): 42}
    for lam in box_partitions():
        comp = tuple(3 - x for x in reversed(lam))
        for mu in box_partitions():
            if sum(mu) == 9 - sum(lam):
                got = (RingClassGr36(((lam, 1),)) * RingClassGr36(((mu, 1),))).degree()
                assert got == (1 if mu == comp else 0)
    gens = [s(1), s(2), s(3)]
    for a in gens:
        for b in gens:
            for c in gens:
                assert (a * b) * c == a * (b * c)
    report(9, "sigma_1^9 = 42 * point, Poincare pairing, LR associativity")


def test_criterion_10_property_suites(w_prime, e5, basis30, psi30):
    rng = random.Random(99)

    def random_series(den, prec):
        terms = {e: F(rng.randint(-9, 9), rng.randint(1, 4)) for e in range(prec * den)}
        return QSeries(terms, den, prec)

    for _ in range(200):
        den = rng.choice((1, 3))
        f, g, h = (random_series(den, 10) for _ in range(3))
        assert (f * g) * h == f * (g * h)
        assert f * (g + h) == f * g + f * h
    for _ in range(50):
        den = rng.choice((1, 3))
        f, g = (random_series(den, 10) for _ in range(2))
        assert (f * g).derivative() == f.derivative() * g + f * g.derivative()
    for _ in range(50):
        f, g = (random_series(1, 20) for _ in range(2))
        assert (f * g).truncate(10) == (f.truncate(10) * g.truncate(10)).truncate(10)
    # support condition on every constructed vector form
    for form in (e5, *basis30, psi30):
        for i in range(3):
            residue = (-form.form.qvalue(i)) % 1
            assert all((e - residue) % 1 == 0 for e in form.component(i).exponents())
    # and the constructor rejects violations
    bad = QSeries.from_terms([(1, 1)], 3, 2)
    try:
        VectorForm(11, w_prime, (QSeries.zero(3, 2), bad, bad))
        raise AssertionError("support violation was not rejected")
    except ValueError:
        pass
    report(10, "ring axioms, Leibniz, truncation soundness, support condition")
