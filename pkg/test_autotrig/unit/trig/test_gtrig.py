import math

import numpy as np
import pytest
from hypothesis import given
from hypothesis.strategies import floats, sampled_from
from scipy import integrate

import autotrig as at
from autotrig import exc
from autotrig.trig import gtrig

IDENTITY_PAIRS = [(2.0, 2.0), (2.0, 4.0), (3.0, 3.0), (5.0, 2.0), (10.0, 10.0)]


def smooth_factor(t, p, q):
    """
    ((1 - t^q) / (1 - t))^(-1/p), the integrand of F_pq with the (1 - t)^(-1/p) endpoint singularity divided out.
    """
    if t <= 0.0:
        return 1.0
    if t >= 1.0:
        return q ** (-1.0 / p)
    return (-math.expm1(q * math.log(t)) / (1.0 - t)) ** (-1.0 / p)


def pi_pq_from_quadrature(p, q):
    integral, _ = integrate.quad(
        smooth_factor,
        0.0,
        1.0,
        args=(p, q),
        weight="alg",
        wvar=(0.0, -1.0 / p),
        epsabs=1.0e-14,
        epsrel=1.0e-14,
    )
    return 2.0 * integral


def arcsin_pq_from_quadrature(s, p, q):
    integral, _ = integrate.quad(
        lambda t: (1.0 - t ** q) ** (-1.0 / p), 0.0, s, epsabs=1.0e-14, epsrel=1.0e-14
    )
    return integral


class TestParams:
    def test__exponents_must_exceed_one(self):

        with pytest.raises(exc.DomainException):
            at.Params(p=1.0, q=2.0)

        with pytest.raises(exc.DomainException):
            at.Params(p=2.0, q=0.5)

        with pytest.raises(exc.DomainException):
            at.Params(p=np.inf, q=2.0)

        with pytest.raises(exc.DomainException):
            at.Params(p=2.0, q=np.nan)

    def test__theorem_regime(self):

        assert at.Params(p=2.0, q=2.0).theorem_regime() is True
        assert at.Params(p=10.0, q=2.0).theorem_regime() is True
        assert at.Params(p=1.5, q=3.0).theorem_regime() is False
        assert at.Params(p=3.0, q=1.9).theorem_regime() is False

    def test__conjugate_exponent(self):

        params = at.Params(p=2.0, q=3.0)

        assert params.q_star == pytest.approx(1.5, 1.0e-15)
        assert 1.0 / params.q + 1.0 / params.q_star == pytest.approx(1.0, 1.0e-15)
        assert params.conjugate() == at.Params(p=1.5, q=3.0)
        assert at.Params(p=2.0, q=2.0).conjugate() == at.Params(p=2.0, q=2.0)

    def test__value_semantics(self, params_3_3):

        assert params_3_3 == at.Params(p=3, q=3)
        assert hash(params_3_3) == hash(at.Params(p=3.0, q=3.0))
        assert params_3_3 != at.Params(p=3.0, q=2.0)
        assert repr(params_3_3) == "Params(p=3, q=3)"

    def test__half_pi(self, params_2_4):

        assert params_2_4.half_pi == 0.5 * params_2_4.pi


class TestPiPq:
    def test__ordinary_pi(self, params_2_2):

        assert at.pi_pq(params=params_2_2) == pytest.approx(math.pi, abs=1.0e-12)

    def test__fixture_values(self, params_3_3, params_2_4):

        assert at.pi_pq(params=params_3_3) == pytest.approx(2.4183991523, abs=1.0e-9)
        assert at.pi_pq(params=params_2_4) == pytest.approx(2.6220575543, abs=1.0e-9)

    def test__matches_quadrature_of_the_defining_integral(self):

        for p, q in [(2.0, 3.0), (3.0, 3.0), (2.0, 4.0), (5.0, 2.0), (10.0, 10.0)]:

            assert at.pi_pq(params=at.Params(p=p, q=q)) == pytest.approx(
                pi_pq_from_quadrature(p=p, q=q), abs=1.0e-10
            )

    def test__pi_p_is_the_diagonal(self):

        assert at.pi_p(p=3.0) == at.pi_pq(params=at.Params(p=3.0, q=3.0))
        assert at.pi_p(p=2.0) == pytest.approx(math.pi, abs=1.0e-12)


class TestArcsinPq:
    def test__endpoints(self, params_3_3):

        assert at.arcsin_pq(s=0.0, params=params_3_3) == 0.0
        assert at.arcsin_pq(s=1.0, params=params_3_3) == params_3_3.half_pi

    def test__ordinary_arcsine(self, params_2_2):

        assert at.arcsin_pq(s=0.5, params=params_2_2) == pytest.approx(math.pi / 6.0, abs=1.0e-12)

        for s in np.linspace(0.0, 0.99, 12):
            assert at.arcsin_pq(s=s, params=params_2_2) == pytest.approx(
                math.asin(s), abs=1.0e-12
            )

    def test__matches_quadrature(self, params_3_3):

        for s in [0.1, 0.5, 0.9]:

            assert at.arcsin_pq(s=s, params=params_3_3) == pytest.approx(
                arcsin_pq_from_quadrature(s=s, p=3.0, q=3.0), abs=1.0e-10
            )

    def test__strictly_increasing(self, params_2_4):

        values = [at.arcsin_pq(s=s, params=params_2_4) for s in np.linspace(0.0, 1.0, 101)]

        assert all(later > earlier for earlier, later in zip(values[:-1], values[1:]))

    def test__outside_unit_interval__raises_domain_exception(self, params_2_2):

        with pytest.raises(exc.DomainException):
            at.arcsin_pq(s=-0.1, params=params_2_2)

        with pytest.raises(exc.DomainException):
            at.arcsin_pq(s=1.5, params=params_2_2)

        with pytest.raises(exc.DomainException):
            at.arcsin_pq(s=np.nan, params=params_2_2)


class TestReduceArgument:
    def test__zero_of_the_half_period(self, params_3_3):

        reduced = at.reduce_argument(x=params_3_3.pi, params=params_3_3)

        assert reduced == gtrig.ReducedArg(y=0.0, sign=1, deriv_sign=-1)

    def test__negative_argument__flips_sign_only(self, params_3_3):

        x0 = 0.3 * params_3_3.pi

        reduced = at.reduce_argument(x=-x0, params=params_3_3)

        assert reduced.y == pytest.approx(x0, 1.0e-15)
        assert reduced.sign == -1
        assert reduced.deriv_sign == 1

    def test__periodicity(self, params_2_4):

        x0 = 0.7

        reduced = at.reduce_argument(x=x0 + 2.0 * params_2_4.pi, params=params_2_4)

        assert reduced.y == pytest.approx(x0, abs=1.0e-14)
        assert reduced.sign == 1
        assert reduced.deriv_sign == 1

    def test__reflection_above_the_quarter_period(self, params_2_2):

        reduced = at.reduce_argument(x=2.0, params=params_2_2)

        assert reduced.y == pytest.approx(math.pi - 2.0, 1.0e-15)
        assert reduced.sign == 1
        assert reduced.deriv_sign == -1

    def test__reduced_argument_in_the_quarter_period(self, params_5_5):

        for x in np.linspace(-7.0 * params_5_5.pi, 7.0 * params_5_5.pi, 301):

            reduced = at.reduce_argument(x=x, params=params_5_5)

            assert 0.0 <= reduced.y <= params_5_5.half_pi

    def test__non_finite__raises_domain_exception(self, params_2_2):

        with pytest.raises(exc.DomainException):
            at.reduce_argument(x=np.inf, params=params_2_2)

        with pytest.raises(exc.DomainException):
            at.sin_pq(x=np.nan, params=params_2_2)


class TestSinPq:
    def test__pinned_values(self, params_3_3):

        assert at.sin_pq(x=0.0, params=params_3_3) == 0.0
        assert at.sin_pq(x=params_3_3.half_pi, params=params_3_3) == 1.0
        assert at.sin_pq(x=-params_3_3.half_pi, params=params_3_3) == -1.0

    def test__ordinary_sine(self, params_2_2):

        assert at.sin_pq(x=1.0, params=params_2_2) == pytest.approx(0.8414709848078965, abs=1.0e-12)

        xs = np.linspace(-2.0 * math.pi, 2.0 * math.pi, 1000)

        max_error = max(abs(at.sin_pq(x=x, params=params_2_2) - math.sin(x)) for x in xs)

        assert max_error <= 1.0e-10

    def test__inverts_the_quadrature_integral(self, params_3_3):

        s = at.sin_pq(x=1.0, params=params_3_3)

        assert 0.0 < s < 1.0
        assert arcsin_pq_from_quadrature(s=s, p=3.0, q=3.0) == pytest.approx(1.0, abs=1.0e-10)

    @given(
        pair=sampled_from([(2.0, 2.0), (3.0, 3.0), (2.0, 4.0), (10.0, 10.0)]),
        s=floats(min_value=0.0, max_value=1.0),
    )
    def test__round_trip_through_arcsin(self, pair, s):

        params = at.Params(p=pair[0], q=pair[1])

        assert at.sin_pq(x=at.arcsin_pq(s=s, params=params), params=params) == pytest.approx(
            s, abs=1.0e-10
        )

    @given(pair=sampled_from(IDENTITY_PAIRS), fraction=floats(min_value=0.0, max_value=1.0))
    def test__odd_and_anti_periodic(self, pair, fraction):

        params = at.Params(p=pair[0], q=pair[1])

        x = fraction * 2.0 * params.pi

        value = at.sin_pq(x=x, params=params)

        assert at.sin_pq(x=-x, params=params) == -value
        assert abs(at.sin_pq(x=x + params.pi, params=params) + value) <= 1.0e-10

    def test__strictly_below_the_identity_on_the_half_period(self):

        for p, q in IDENTITY_PAIRS:

            params = at.Params(p=p, q=q)

            for x in np.linspace(0.0, params.pi, 101)[1:-1]:

                assert 0.0 < at.sin_pq(x=x, params=params) < x

    def test__strictly_increasing_on_the_quarter_period(self, params_5_5):

        values = [
            at.sin_pq(x=x, params=params_5_5)
            for x in np.linspace(0.0, params_5_5.half_pi, 201)
        ]

        assert all(later > earlier for earlier, later in zip(values[:-1], values[1:]))

    def test__initial_guess_capped_one_ulp_below_one(self, params_2_2):

        assert gtrig._initial_guess(y=1.05, params=params_2_2) == 1.0 - np.finfo(float).eps
        assert gtrig._initial_guess(y=0.5, params=params_2_2) == 0.5

    def test__iteration_limit__raises_convergence_exception(self, params_2_2):

        with pytest.raises(exc.ConvergenceException):
            at.sin_pq(x=1.0, params=params_2_2, acc=at.Accuracy(max_iter=1))

    def test__sin_p_is_the_diagonal(self):

        assert at.sin_p(x=0.8, p=3.0) == at.sin_pq(x=0.8, params=at.Params(p=3.0, q=3.0))
        assert at.cos_p(x=0.8, p=3.0) == at.cos_pq(x=0.8, params=at.Params(p=3.0, q=3.0))


class TestCosPq:
    def test__pinned_values(self, params_2_4):

        assert at.cos_pq(x=0.0, params=params_2_4) == 1.0
        assert at.cos_pq(x=params_2_4.half_pi, params=params_2_4) == 0.0

    def test__ordinary_cosine(self, params_2_2):

        assert at.cos_pq(x=1.0, params=params_2_2) == pytest.approx(0.5403023058681398, abs=1.0e-12)

        for x in np.linspace(-2.0 * math.pi, 2.0 * math.pi, 200):
            assert at.cos_pq(x=x, params=params_2_2) == pytest.approx(math.cos(x), abs=1.0e-10)

    def test__pythagorean_identity(self):

        for p, q in IDENTITY_PAIRS:

            params = at.Params(p=p, q=q)

            for x in np.arange(-400, 401) * params.pi / 200.0:

                reduced = at.reduce_argument(x=x, params=params)

                s, c = at.sin_cos_reduced(y=reduced.y, params=params)

                assert abs(abs(c) ** p + abs(s) ** q - 1.0) <= 1.0e-10

    def test__is_the_derivative_of_sin(self):

        step = 1.0e-5

        for p, q in [(2.0, 2.0), (3.0, 3.0), (2.0, 4.0)]:

            params = at.Params(p=p, q=q)

            for x in np.linspace(-params.pi, params.pi, 41):

                difference = (
                    at.sin_pq(x=x + step, params=params) - at.sin_pq(x=x - step, params=params)
                ) / (2.0 * step)

                assert difference == pytest.approx(at.cos_pq(x=x, params=params), abs=1.0e-6)


class TestSinPqDd:
    def test__vanishes_at_zero(self, params_3_3):

        assert at.sin_pq_dd(x=0.0, params=params_3_3) == 0.0

    def test__ordinary_sine(self, params_2_2):

        assert at.sin_pq_dd(x=1.0, params=params_2_2) == pytest.approx(-math.sin(1.0), abs=1.0e-12)
        assert at.sin_pq_dd(x=-2.5, params=params_2_2) == pytest.approx(-math.sin(-2.5), abs=1.0e-12)

    def test__leading_order_near_zero(self, params_2_4):

        assert at.sin_pq_dd(x=0.1, params=params_2_4) == pytest.approx(-2.0e-3, abs=1.0e-5)

    def test__is_the_derivative_of_cos(self):

        step = 1.0e-5

        for p, q in [(2.0, 2.0), (3.0, 3.0), (2.0, 4.0)]:

            params = at.Params(p=p, q=q)

            for x in np.linspace(0.0, params.pi, 41):

                if abs(x - params.half_pi) < 0.05:
                    continue

                difference = (
                    at.cos_pq(x=x + step, params=params) - at.cos_pq(x=x - step, params=params)
                ) / (2.0 * step)

                assert difference == pytest.approx(at.sin_pq_dd(x=x, params=params), abs=1.0e-4)

    def test__singular_at_the_quarter_period_for_p_above_two(self, params_3_3):

        with pytest.raises(exc.SingularPointException):
            at.sin_pq_dd(x=params_3_3.half_pi, params=params_3_3)

        with pytest.raises(exc.SingularPointException):
            at.sin_pq_dd(x=-params_3_3.half_pi, params=params_3_3)

    def test__regular_at_the_quarter_period_for_p_equal_two(self, params_2_4):

        assert at.sin_pq_dd(x=params_2_4.half_pi, params=params_2_4) == pytest.approx(-2.0, 1.0e-12)
