from fractions import Fraction as F

import pytest

from cubicforms.eisenstein import (
    alpha_series,
    beta_series,
    eisenstein_chi,
    eisenstein_chi_rescaled,
    eisenstein_level1,
    l_value_ratio,
    local_euler_data,
    local_euler_factor,
    prime_power_counts,
    rep_count,
    theta_series_rank10,
    vv_eisenstein,
)
from cubicforms.exactmath import bernoulli_poly, chi_minus3


class TestScalarSeries:
    def test_e4(self):
        e4 = eisenstein_level1(4, 4)
        assert [e4.coefficient(n) for n in range(3)] == [1, 240, 2160]

    def test_e6(self):
        e6 = eisenstein_level1(6, 4)
        assert [e6.coefficient(n) for n in range(3)] == [1, -504, -16632]

    def test_constant_term_is_one(self):
        for k in (4, 6, 8, 10, 12):
            assert eisenstein_level1(k, 2).coefficient(0) == 1

    def test_rejects_odd_or_small(self):
        with pytest.raises(ValueError):
            eisenstein_level1(5, 4)
        with pytest.raises(ValueError):
            eisenstein_level1(2, 4)

    def test_alpha_display(self):
        alpha = alpha_series(8)
        assert [alpha.coefficient(n) for n in range(8)] == [1, 6, 0, 6, 6, 0, 0, 12]

    def test_beta_display(self):
        beta = beta_series(6)
        assert [beta.coefficient(n) for n in range(6)] == [0, 1, 3, 9, 13, 24]

    def test_beta_ninth_coefficient(self):
        # sum over d | 9 of d^2 chi(9/d) = 81
        assert beta_series(10).coefficient(9) == 81

    def test_divisor_sum_conventions_agree(self):
        for k in (1, 3, 5):
            assert eisenstein_chi(k, 30, "character") == eisenstein_chi(
                k, 30, "legendre"
            )

    def test_rejects_even_weight(self):
        with pytest.raises(ValueError):
            eisenstein_chi(2, 4)

    def test_rescaled(self):
        a = eisenstein_chi_rescaled(1, 6)
        assert a.coefficient(F(1, 3)) == 6
        b = eisenstein_chi_rescaled(3, 6)
        assert b.exponents()[0] == F(1, 3)


class TestRepCounts:
    def test_modulus_one(self, w_prime):
        for gamma, n in ((0, F(1)), (1, F(1, 3)), (2, F(4, 3))):
            assert rep_count(w_prime, gamma, n, 1) == 1

    def test_trivial_coset_mod_2(self, w_prime):
        # enumerate r in {0,1}^2 for (1/2)r^2 + 1 = 0 mod 2 on the negated form
        assert rep_count(w_prime, 0, F(1), 2) == 3

    def test_gamma1_mod_3_regression(self, w_prime):
        # frozen after first computation with the 9-element enumeration
        assert rep_count(w_prime, 1, F(1, 3), 3) == 3

    def test_integrality_precondition(self, w_prime):
        with pytest.raises(Exception):
            rep_count(w_prime, 1, F(1), 2)  # q(gamma) + n not integral

    def test_lifted_counts_match_brute_force(self, w_prime):
        for gamma in (0, 1):
            offset = (-w_prime.qvalue(gamma)) % 1
            n = offset if offset > 0 else F(1)
            while n < 6:
                for p in (2, 3, 5):
                    lifted = prime_power_counts(w_prime, gamma, n, p, 3)
                    brute = [rep_count(w_prime, gamma, n, p**v) for v in range(4)]
                    assert lifted == brute, (gamma, n, p)
                n += 1


class TestLocalFactors:
    def test_l_value_ratio_at_5(self):
        assert l_value_ratio(5) == 486

    def test_bernoulli_sum_at_5(self):
        s = sum(chi_minus3(m) * bernoulli_poly(5, 1 - F(m, 3)) for m in range(1, 4))
        assert s == F(10, 243)

    def test_l_value_ratio_at_3_bernoulli_oracle(self):
        # k = 3 carries sign (-1)^((3-1)/2) = -1 on the 4k prefactor
        s = sum(chi_minus3(m) * bernoulli_poly(3, 1 - F(m, 3)) for m in range(1, 4))
        assert s == F(-2, 27)
        assert l_value_ratio(3) == -12 / s == 162

    def test_rejects_even(self):
        with pytest.raises(ValueError):
            l_value_ratio(4)

    def test_omega_collapse_single_term(self, w_prime):
        # when omega_p = 1 the factor is (1 - p^(1-k)) + N(p) p^(-k)
        data = local_euler_data(w_prime, 0, F(1))
        p = 3
        assert data.omega[p] == 1
        got = local_euler_factor(5, w_prime, 0, F(1), p)
        want = (1 - F(p) ** -4) + data.counts[(p, 1)] * F(p) ** -5
        assert got == want

    def test_assembled_from_data_object(self, w_prime):
        # the bundled counts agree with the per-prime factors
        data = local_euler_data(w_prime, 1, F(1, 3))
        assert data.d_gamma == 3
        assert set(data.omega) == {2, 3}
        for p, w in data.omega.items():
            assert data.counts[(p, 0)] == 1
            assert all((p, v) in data.counts for v in range(w + 1))

    def test_good_prime_factor_is_exactly_one(self, w_prime):
        # primes not dividing 18n contribute a factor of exactly 1
        for gamma, n in ((0, F(1)), (1, F(4, 3)), (0, F(5))):
            for p in (5, 7, 11):
                if (18 * n) % p == 0:
                    continue
                counts = prime_power_counts(w_prime, gamma, n, p, 1)
                factor = ((1 - F(p) ** (1 - 5)) + counts[1] * F(p) ** -5) / (
                    1 - chi_minus3(p) * F(p) ** -5
                )
                assert factor == 1


class TestVectorEisenstein:
    def test_v0_display(self, e5):
        assert [e5.coefficient(n, 0) for n in range(4)] == [2, 492, 7200, 39372]

    def test_v1_display(self, e5):
        assert [e5.coefficient(F(3 * n + 1, 3), 1) for n in range(3)] == [
            6,
            1446,
            14412,
        ]

    def test_v2_equals_v1(self, e5):
        assert e5.component(2) == e5.component(1)

    def test_all_coefficients_are_nonnegative_integers(self, e5):
        for comp in e5.components:
            for e, c in comp.coeffs.items():
                assert c.denominator == 1 and c >= 0

    def test_rejects_wrong_form(self):
        from cubicforms.fqm import E8_GRAM, discriminant_form

        with pytest.raises(ValueError):
            vv_eisenstein(discriminant_form(E8_GRAM), 5, 4)


class TestThetaOracle:
    def test_constant_term(self):
        th = theta_series_rank10(4)
        assert th.coefficient(0, 0) == 1
        assert th.component(1) == th.component(2)

    def test_norm2_vector_count(self):
        # 2 * 246 = 492: the coefficient counts lattice vectors of norm 2
        th = theta_series_rank10(4)
        assert th.coefficient(1, 0) == 246

    def test_minimal_coset_vectors(self):
        th = theta_series_rank10(4)
        assert th.coefficient(F(1, 3), 1) == 3

    def test_eisenstein_equals_twice_theta(self, w_prime):
        e5 = vv_eisenstein(w_prime, 5, 4)
        twice = theta_series_rank10(4).scale(2)
        for i in range(3):
            assert e5.component(i) == twice.component(i)

    def test_product_equals_direct_enumeration(self):
        prod = theta_series_rank10(2, method="product")
        direct = theta_series_rank10(2, method="direct")
        for i in range(3):
            assert prod.component(i) == direct.component(i)
