"""
The generalized trigonometric functions sin_pq, cos_pq and the generalized constant pi_pq.

For 1 < p, q < inf the function

    F_pq(s) = int_0^s (1 - t^q)^(-1/p) dt,    s in [0,1]

is strictly increasing from 0 to pi_pq / 2 and sin_pq is its inverse on [0, pi_pq / 2]. It is extended to
(pi_pq / 2, pi_pq] by sin_pq(pi_pq - x) and to the real line as the odd 2 pi_pq-periodic continuation. Its
derivative cos_pq satisfies |cos_pq x|^p + |sin_pq x|^q = 1. For (p,q) = (2,2) everything reduces to the
ordinary sin, cos and pi.
"""
import logging
import math

import numpy as np

from autotrig import exc
from autotrig.settings import Accuracy, general_setting
from autotrig.special import special_fn
from autotrig.util.power_util import abs_power

logger = logging.getLogger(__name__)

_EPSILON = np.finfo(float).eps


class Params:
    def __init__(self, p: float, q: float):
        """
        The exponent pair (p,q) governing every evaluation of the generalized trigonometric functions.

        Parameters
        ----------
        p : float
            The exponent of (1 - t^q)^(1/p) in the defining integral, p > 1.
        q : float
            The exponent of t^q in the defining integral, q > 1.
        """
        p = float(p)
        q = float(q)

        if not (math.isfinite(p) and math.isfinite(q)) or p <= 1.0 or q <= 1.0:
            raise exc.DomainException(
                f"The exponents must satisfy 1 < p, q < inf (p={p}, q={q})"
            )

        self._p = p
        self._q = q
        self._pi = None

    @property
    def p(self) -> float:
        return self._p

    @property
    def q(self) -> float:
        return self._q

    @property
    def p_star(self) -> float:
        return self._p / (self._p - 1.0)

    @property
    def q_star(self) -> float:
        """
        The conjugate exponent q* = q / (q-1), so that 1/q + 1/q* = 1.
        """
        return self._q / (self._q - 1.0)

    @property
    def pi(self) -> float:
        if self._pi is None:
            self._pi = pi_pq(params=self)
        return self._pi

    @property
    def half_pi(self) -> float:
        return 0.5 * self.pi

    def theorem_regime(self) -> bool:
        """
        Whether 2 <= p, q, the hypothesis under which the Redheffer-type inequality for sin_pq is a theorem.
        """
        return self._p >= 2.0 and self._q >= 2.0

    def conjugate(self) -> "Params":
        """
        Returns the pair (q*, q) used by the cosine inequality and the multiple-angle formula.
        """
        return Params(p=self.q_star, q=self._q)

    def __eq__(self, other):
        if not isinstance(other, Params):
            return NotImplemented
        return self._p == other._p and self._q == other._q

    def __hash__(self):
        return hash((self._p, self._q))

    def __repr__(self):
        return f"Params(p={self._p:g}, q={self._q:g})"


class ReducedArg:
    def __init__(self, y: float, sign: int, deriv_sign: int):
        """
        An argument of sin_pq reduced to the fundamental quarter period [0, pi_pq / 2].

        The original values are rebuilt as sin_pq(x) = sign * sin_pq(y) and cos_pq(x) = deriv_sign * cos_pq(y).
        """
        self.y = y
        self.sign = sign
        self.deriv_sign = deriv_sign

    def __eq__(self, other):
        if not isinstance(other, ReducedArg):
            return NotImplemented
        return (self.y, self.sign, self.deriv_sign) == (
            other.y,
            other.sign,
            other.deriv_sign,
        )

    def __repr__(self):
        return f"ReducedArg(y={self.y!r}, sign={self.sign}, deriv_sign={self.deriv_sign})"


def beta_shapes_from(params: Params):
    """
    The shape parameters (a,b) = (1/q, 1 - 1/p) of the incomplete beta function equal to q F_pq / B(a,b) under
    the substitution u = t^q.
    """
    return 1.0 / params.q, 1.0 - 1.0 / params.p


def pi_pq(params: Params) -> float:
    """
    Returns the generalized constant pi_pq = 2 F_pq(1) in the closed form (2/q) B(1/q, 1 - 1/p).
    """
    a, b = beta_shapes_from(params=params)
    return 2.0 * special_fn.beta(a=a, b=b) / params.q


def pi_p(p: float) -> float:
    return pi_pq(params=Params(p=p, q=p))


def one_minus_power(s: float, q: float) -> float:
    """
    Returns 1 - s^q for s in [0,1], computed as -expm1(q log s) to keep full precision when s is close to 1.
    """
    if s <= 0.0:
        return 1.0
    if s >= 1.0:
        return 0.0
    return -math.expm1(q * math.log(s))


def _arcsin_pq_unchecked(s: float, params: Params, acc: Accuracy) -> float:

    if s <= 0.0:
        return 0.0
    if s >= 1.0:
        return params.half_pi

    a, b = beta_shapes_from(params=params)

    regularized = special_fn.inc_beta_reg_from_split(
        x=math.exp(params.q * math.log(s)),
        x_complement=one_minus_power(s=s, q=params.q),
        a=a,
        b=b,
        acc=acc,
    )

    return params.half_pi * regularized


def arcsin_pq(s: float, params: Params, acc: Accuracy = None) -> float:
    """
    Returns F_pq(s) = int_0^s (1 - t^q)^(-1/p) dt, the inverse of sin_pq on [0, pi_pq / 2].

    The integral is evaluated as (1/q) B(1/q, 1 - 1/p) I_(s^q)(1/q, 1 - 1/p), so no quadrature of the
    endpoint singularity at t = 1 is required.

    Parameters
    ----------
    s : float
        The value in [0,1] whose generalized arcsine is computed.
    params : Params
        The exponent pair (p,q).
    acc : Accuracy
        The tolerances of the incomplete beta evaluation.
    """
    if not math.isfinite(s) or s < 0.0 or s > 1.0:
        raise exc.DomainException(f"arcsin_pq requires 0 <= s <= 1 (s={s})")

    return _arcsin_pq_unchecked(s=s, params=params, acc=acc or Accuracy())


def reduce_argument(x: float, params: Params) -> ReducedArg:
    """
    Reduces a real argument to [0, pi_pq / 2] using 2 pi_pq-periodicity, oddness and the reflection
    sin_pq(pi_pq - x) on (pi_pq / 2, pi_pq].

    The nearest multiple of 2 pi_pq is removed in a single rounding, so the reduction carries an error of about
    one ulp of x, which is immaterial for |x| up to a few periods.
    """
    if not math.isfinite(x):
        raise exc.DomainException(f"sin_pq requires a finite argument (x={x})")

    period = 2.0 * params.pi

    remainder = x - round(x / period) * period

    sign = 1
    if remainder < 0.0:
        sign = -1
        remainder = -remainder

    if remainder > params.half_pi:
        y = params.pi - remainder
        deriv_sign = -1
    else:
        y = remainder
        deriv_sign = 1

    y = min(max(y, 0.0), params.half_pi)

    return ReducedArg(y=y, sign=sign, deriv_sign=deriv_sign)


def _initial_guess(y: float, params: Params) -> float:
    """
    Starting point of the inversion: s = y (sin_pq x ~ x near 0, and sin_pq x < x puts it above the root),
    or, close to the top of the quarter period, the asymptotic solution of
    F_pq(1) - F_pq(s) ~ (1-s)^(1-1/p) q^(-1/p) / (1 - 1/p), which lies below the root.
    """
    distance_to_top = params.half_pi - y

    if distance_to_top < 0.1 * params.half_pi:
        exponent = params.p / (params.p - 1.0)
        gap = abs_power(
            distance_to_top * (1.0 - 1.0 / params.p) * abs_power(params.q, 1.0 / params.p),
            exponent,
        )
        if 0.0 < gap < 1.0:
            return 1.0 - gap

    return min(y, 1.0 - _EPSILON)


def _sin_pq_reduced(y: float, params: Params, acc: Accuracy) -> float:
    """
    Solves F_pq(s) = y for s in [0,1] by Newton's method, bracketed and safeguarded by bisection.

    The Newton step uses 1 / F_pq'(s) = (1 - s^q)^(1/p). Because F_pq' blows up at s = 1 the Newton iterates
    can stall close to the top; a bisection step is taken whenever the Newton step leaves the bracket or fails
    to halve the step taken two iterations earlier.
    """
    if y <= 0.0:
        return 0.0

    if params.half_pi - y <= float(general_setting("gtrig", "top_pin_window")):
        return 1.0

    lower = 0.0
    upper = 1.0

    s = _initial_guess(y=y, params=params)

    step_old = upper - lower
    step = step_old

    for iteration in range(acc.max_iter):

        residual = _arcsin_pq_unchecked(s=s, params=params, acc=acc) - y

        if residual > 0.0:
            upper = s
        else:
            lower = s

        newton_step = residual * abs_power(
            one_minus_power(s=s, q=params.q), 1.0 / params.p
        )

        if abs(residual) <= acc.abs_tol:
            polished = s - newton_step
            if lower <= polished <= upper:
                return polished
            return s

        if upper - lower <= 4.0 * _EPSILON * upper:
            return s

        newton = s - newton_step

        if not lower < newton < upper or abs(2.0 * newton_step) > abs(step_old):
            step_old = step
            step = 0.5 * (upper - lower)
            s = lower + step
        else:
            step_old = step
            step = newton_step
            s = newton

    raise exc.ConvergenceException(
        f"sin_pq inversion did not converge in {acc.max_iter} iterations ({params}, y={y})"
    )


def sin_cos_reduced(y: float, params: Params, acc: Accuracy = None):
    """
    Returns (sin_pq y, cos_pq y) for a reduced argument y in [0, pi_pq / 2], where cos_pq comes from the
    identity |cos_pq y|^p + |sin_pq y|^q = 1.
    """
    acc = acc or Accuracy()

    s = _sin_pq_reduced(y=y, params=params, acc=acc)
    c = abs_power(one_minus_power(s=s, q=params.q), 1.0 / params.p)

    return s, c


def sin_pq(x: float, params: Params, acc: Accuracy = None) -> float:
    """
    Returns the generalized sine sin_pq(x) for any finite real x.

    Parameters
    ----------
    x : float
        The argument.
    params : Params
        The exponent pair (p,q).
    acc : Accuracy
        The tolerances of the inversion of F_pq; the residual |F_pq(result) - y| is at most acc.abs_tol.

    Raises
    ------
    DomainException
        If x is not finite.
    ConvergenceException
        If the inversion does not converge within acc.max_iter iterations.
    """
    reduced = reduce_argument(x=x, params=params)

    return reduced.sign * _sin_pq_reduced(y=reduced.y, params=params, acc=acc or Accuracy())


def cos_pq(x: float, params: Params, acc: Accuracy = None) -> float:
    """
    Returns the generalized cosine cos_pq(x) = (sin_pq x)', evaluated as deriv_sign * (1 - |sin_pq x|^q)^(1/p).
    """
    reduced = reduce_argument(x=x, params=params)

    s, c = sin_cos_reduced(y=reduced.y, params=params, acc=acc)

    return reduced.deriv_sign * c


def sin_pq_dd(x: float, params: Params, acc: Accuracy = None) -> float:
    """
    Returns the second derivative S''(x) = -(q/p) |sin_pq x|^(q-2) sin_pq x |cos_pq x|^(2-p).

    For p > 2 the factor |cos_pq x|^(2-p) is singular where cos_pq vanishes, i.e. at the odd multiples of
    pi_pq / 2, and evaluation there raises a `SingularPointException`.
    """
    reduced = reduce_argument(x=x, params=params)

    if params.p > 2.0 and params.half_pi - reduced.y <= float(
        general_setting("gtrig", "singular_window")
    ):
        raise exc.SingularPointException(
            f"S'' is singular at x={x} for {params} (cos_pq vanishes and p > 2)"
        )

    s, c = sin_cos_reduced(y=reduced.y, params=params, acc=acc)

    if params.p > 2.0 and c == 0.0:
        raise exc.SingularPointException(
            f"S'' is singular at x={x} for {params} (cos_pq vanishes and p > 2)"
        )

    return (
        -(params.q / params.p)
        * reduced.sign
        * abs_power(s, params.q - 1.0)
        * abs_power(c, 2.0 - params.p)
    )


def sin_p(x: float, p: float, acc: Accuracy = None) -> float:
    return sin_pq(x=x, params=Params(p=p, q=p), acc=acc)


def cos_p(x: float, p: float, acc: Accuracy = None) -> float:
    return cos_pq(x=x, params=Params(p=p, q=p), acc=acc)
