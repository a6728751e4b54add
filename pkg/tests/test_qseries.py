import json
import random
from fractions import Fraction as F

import pytest

from cubicforms.qseries import (
    InconsistentSystemError,
    QSeries,
    SingularSystemError,
    solve_linear_combination,
)


def series(terms, den=1, prec=None):
    return QSeries.from_terms(terms, den, prec)


def random_series(rng, den, prec):
    terms = {
        e: F(rng.randint(-9, 9), rng.randint(1, 4)) for e in range(prec * den)
    }
    return QSeries(terms, den, prec)


class TestArithmetic:
    def test_mul_by_zero(self):
        f = series([(0, 1), (1, 6)], prec=10)
        assert (f * QSeries.zero(1, 10)).is_zero()
        assert (f * 0).is_zero()

    def test_difference_of_squares(self):
        one_plus = series([(0, 1), (1, 1)], prec=10)
        one_minus = series([(0, 1), (1, -1)], prec=10)
        assert one_plus * one_minus == series([(0, 1), (2, -1)], prec=10)

    def test_alpha_squared_by_convolution_oracle(self):
        # alpha = 1 + 6q + 6q^3 + 6q^4 + ... truncated at prec 5
        alpha = {0: 1, 1: 6, 2: 0, 3: 6, 4: 6}
        oracle = {}
        for i, a in alpha.items():
            for j, b in alpha.items():
                if i + j < 5:
                    oracle[i + j] = oracle.get(i + j, 0) + a * b
        f = QSeries({e: F(c) for e, c in alpha.items()}, 1, 5)
        assert f * f == QSeries({e: F(c) for e, c in oracle.items()}, 1, 5)
        assert oracle == {0: 1, 1: 12, 2: 36, 3: 12, 4: 84}

    def test_pow_empty_product(self):
        f = series([(0, 2), (1, 5)], prec=8)
        assert f**0 == QSeries.one()

    def test_pow_matches_mul(self):
        rng = random.Random(3)
        f = random_series(rng, 1, 8)
        assert f**2 == f * f
        assert f**3 == f * f * f

    def test_alpha_power_11_leading(self):
        from cubicforms.eisenstein import alpha_series

        a11 = alpha_series(6) ** 11
        assert a11.coefficient(0) == 1
        assert a11.coefficient(1) == 66


class TestRescaleDerivative:
    def test_rescale_definition(self):
        f = series([(0, 1), (1, 6)], prec=5)
        g = f.rescale_exponent(F(1, 3))
        assert g.coefficient(F(1, 3)) == 6
        assert g.prec == F(5, 3)

    def test_rescale_identity(self):
        f = series([(0, 1), (1, 6), (3, -2)], prec=5)
        assert f.rescale_exponent(1) == f

    def test_rescale_lowest_term(self):
        from cubicforms.eisenstein import beta_series

        b = beta_series(5).rescale_exponent(F(1, 3))
        assert b.exponents()[0] == F(1, 3)

    def test_rescale_twice(self):
        f = series([(1, 2), (2, 3)], prec=4)
        once = f.rescale_exponent(F(1, 9))
        twice = f.rescale_exponent(F(1, 3)).rescale_exponent(F(1, 3))
        assert once == twice

    def test_derivative_examples(self):
        f = series([(0, 1), (1, 6), (3, 6)], prec=5)
        assert f.derivative(0) == f
        assert f.derivative() == series([(1, 6), (3, 18)], prec=5)
        g = series([(F(4, 3), 1)], den=3, prec=3)
        assert g.derivative() == series([(F(4, 3), F(4, 3))], den=3, prec=3)


class TestCoefficientAccess:
    def test_alpha_beta_coefficients(self):
        from cubicforms.eisenstein import alpha_series, beta_series

        alpha, beta = alpha_series(8), beta_series(8)
        assert alpha.coefficient(0) == 1
        assert alpha.coefficient(2) == 0
        assert beta.coefficient(4) == 13

    def test_beyond_truncation_raises(self):
        f = series([(0, 1)], prec=5)
        with pytest.raises(ValueError):
            f.coefficient(5)
        with pytest.raises(ValueError):
            f.coefficient(7)
        assert f.coefficient(F(9, 2)) == 0  # off-grid but below prec


class TestLinearSolve:
    def test_two_by_two(self):
        basis = [series([(0, 1), (1, 1)], prec=5), series([(1, 1)], prec=5)]
        sol = solve_linear_combination(basis, [(0, 1), (1, 0)])
        assert sol == [F(1), F(-1)]

    def test_inconsistent_is_error_not_least_squares(self):
        basis = [series([(0, 1), (1, 1)], prec=5)]
        with pytest.raises(InconsistentSystemError):
            solve_linear_combination(basis, [(0, 1), (1, 2)])

    def test_rank_deficient(self):
        basis = [series([(0, 1)], prec=5), series([(0, 2)], prec=5)]
        with pytest.raises(SingularSystemError):
            solve_linear_combination(basis, [(0, 1), (1, 0)])

    def test_underdetermined(self):
        basis = [series([(0, 1)], prec=5), series([(1, 1)], prec=5)]
        with pytest.raises(SingularSystemError):
            solve_linear_combination(basis, [(0, 1)])


class TestRingProperties:
    def test_ring_axioms(self):
        rng = random.Random(11)
        for _ in range(200):
            den = rng.choice((1, 3))
            f, g, h = (random_series(rng, den, 10) for _ in range(3))
            assert (f * g) * h == f * (g * h)
            assert f * (g + h) == f * g + f * h
            assert f + g == g + f

    def test_leibniz_rule(self):
        rng = random.Random(12)
        for _ in range(60):
            den = rng.choice((1, 3))
            f, g = (random_series(rng, den, 10) for _ in range(2))
            assert (f * g).derivative() == f.derivative() * g + f * g.derivative()

    def test_rescale_is_multiplicative(self):
        rng = random.Random(13)
        for _ in range(40):
            f, g = (random_series(rng, 1, 8) for _ in range(2))
            r = F(1, 3)
            assert (f * g).rescale_exponent(r) == f.rescale_exponent(
                r
            ) * g.rescale_exponent(r)

    def test_truncation_soundness(self):
        rng = random.Random(14)
        for _ in range(60):
            f, g = (random_series(rng, 1, 20) for _ in range(2))
            assert (f * g).truncate(10) == (f.truncate(10) * g.truncate(10)).truncate(10)


class TestSerialization:
    def test_round_trip(self):
        f = series([(0, -2), (F(4, 3), 3402)], den=3, prec=F(10, 3))
        data = json.loads(json.dumps(f.to_json_dict()))
        assert QSeries.from_json_dict(data) == f

    def test_exact_strings(self):
        f = series([(0, F(1, 3))], den=1, prec=2)
        d = f.to_json_dict()
        assert d["terms"][0]["num"] == "1" and d["terms"][0]["den"] == "3"
        assert isinstance(d["prec_num"], str)
