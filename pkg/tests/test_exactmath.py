import random
from fractions import Fraction as F

import pytest

from cubicforms.exactmath import (
    Cyclotomic,
    IntegralityError,
    bernoulli_number,
    bernoulli_poly,
    chi_minus3,
    gauss_sum,
    jacobi_symbol,
    p_valuation,
)


class TestJacobi:
    def test_identity_case(self):
        assert jacobi_symbol(1, 3) == 1

    def test_nonresidue_mod3(self):
        # brute force: squares mod 3 are {0, 1}
        squares = {x * x % 3 for x in range(3)}
        assert 2 not in squares
        assert jacobi_symbol(2, 3) == -1

    def test_multiplicativity_from_residue_tables(self):
        # (4/15) = (4/3)(4/5); 4 is a square mod both
        assert jacobi_symbol(4, 15) == 1

    @pytest.mark.parametrize("p", [3, 5, 7, 11, 13])
    def test_prime_case_matches_residue_table(self, p):
        squares = {x * x % p for x in range(1, p)}
        for a in range(p):
            expect = 0 if a % p == 0 else (1 if a in squares else -1)
            assert jacobi_symbol(a, p) == expect

    @pytest.mark.parametrize("n", [3, 9, 15, 21])
    def test_multiplicative_in_top_argument(self, n):
        for a in range(-10, 11):
            for b in range(-10, 11):
                assert jacobi_symbol(a * b, n) == jacobi_symbol(a, n) * jacobi_symbol(b, n)

    def test_rejects_even_or_nonpositive_modulus(self):
        with pytest.raises(ValueError):
            jacobi_symbol(1, 4)
        with pytest.raises(ValueError):
            jacobi_symbol(1, -3)


class TestChiMinus3:
    def test_basic_values(self):
        assert chi_minus3(1) == 1
        assert chi_minus3(5) == -1
        assert chi_minus3(6) == 0

    def test_period_and_multiplicativity(self):
        for n in range(-20, 20):
            assert chi_minus3(n) == chi_minus3(n + 3)
            for m in range(-10, 10):
                assert chi_minus3(n * m) == chi_minus3(n) * chi_minus3(m)

    def test_agrees_with_jacobi(self):
        for n in range(-30, 30):
            if n % 3:
                assert chi_minus3(n) == jacobi_symbol(n, 3)


class TestBernoulli:
    def test_small_numbers(self):
        assert bernoulli_number(0) == 1
        assert bernoulli_number(1) == F(-1, 2)
        assert bernoulli_number(4) == F(-1, 30)

    def test_odd_vanish(self):
        for k in (3, 5, 7, 9, 11):
            assert bernoulli_number(k) == 0

    def test_poly_at_zero_matches_numbers(self):
        for k in range(13):
            assert bernoulli_poly(k, 0) == bernoulli_number(k)

    def test_fifth_poly_values(self):
        assert bernoulli_poly(5, 0) == 0
        assert bernoulli_poly(5, F(1, 3)) == F(-5, 243)

    def test_reflection_symmetry(self):
        x = F(1, 3)
        for k in (4, 5, 6):
            assert bernoulli_poly(k, 1 - x) == (-1) ** k * bernoulli_poly(k, x)


class TestPValuation:
    def test_examples(self):
        assert p_valuation(12, 2) == 2
        assert p_valuation(5, 3) == 0
        assert p_valuation(54, 3) == 3

    def test_rational_and_negative(self):
        assert p_valuation(F(1, 8), 2) == -3
        assert p_valuation(-18, 3) == 2

    def test_rejects_zero(self):
        with pytest.raises(ValueError):
            p_valuation(0, 2)


class TestCyclotomic:
    def test_root_of_unity_order(self):
        z = Cyclotomic.root_of_unity(F(1, 24))
        assert z**24 == 1
        assert z**12 == -1

    def test_embedding_matches_products(self):
        rng = random.Random(1)
        for _ in range(1000):
            x = Cyclotomic([F(rng.randint(-100, 100), rng.randint(1, 9)) for _ in range(8)])
            y = Cyclotomic([F(rng.randint(-100, 100), rng.randint(1, 9)) for _ in range(8)])
            lhs = (x * y).to_complex()
            rhs = x.to_complex() * y.to_complex()
            assert abs(lhs - rhs) <= 1e-10 * max(1.0, abs(rhs))

    def test_embedding_long_products(self):
        # products of up to 8 factors with coefficients up to 1e6
        rng = random.Random(2)
        for _ in range(20):
            factors = [
                Cyclotomic([F(rng.randint(-10**6, 10**6)) for _ in range(8)])
                for _ in range(8)
            ]
            exact = factors[0]
            approx = factors[0].to_complex()
            for f in factors[1:]:
                exact = exact * f
                approx *= f.to_complex()
            assert abs(exact.to_complex() - approx) <= 1e-12 * max(1.0, abs(approx))

    def test_conjugation_and_real_part(self):
        z = Cyclotomic.root_of_unity(F(1, 24))
        assert z * z.conjugate() == 1
        r = (z + z.conjugate()).real_part()
        assert r == z + z.conjugate()  # already real

    def test_sqrt_int(self):
        for n in (1, 2, 3, 4, 6, 8, 9, 12, 18, 24):
            root = Cyclotomic.sqrt_int(n)
            assert (root * root).as_rational() == n
            assert root.to_complex().real > 0

    def test_as_rational_rejects_irrational(self):
        with pytest.raises(IntegralityError):
            Cyclotomic.sqrt_int(3).as_rational()


class TestGaussSum:
    # q-values of the order-3 form on the negated hexagonal lattice
    QVALUES = [F(0), F(2, 3), F(2, 3)]

    def test_a_minus_3_is_3(self):
        assert gauss_sum(-3, self.QVALUES) == 3

    def test_a_1_is_minus_i_sqrt3(self):
        i = Cyclotomic.root_of_unity(F(1, 4))
        assert gauss_sum(1, self.QVALUES) == -1 * i * Cyclotomic.sqrt_int(3)

    def test_a_2_is_conjugate(self):
        assert gauss_sum(2, self.QVALUES) == gauss_sum(1, self.QVALUES).conjugate()

    def test_modulus_squared(self):
        for a in (1, 2, 4, 5):
            g = gauss_sum(a, self.QVALUES)
            assert g.norm_squared() == 3
