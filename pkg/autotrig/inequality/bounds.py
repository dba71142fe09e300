"""
The rational bounds compared against S(x) / x.
"""
from autotrig.trig.gtrig import Params
from autotrig.util.power_util import abs_power


def lower_bound(x: float, a: float) -> float:
    """
    The Redheffer-type lower bound (a^2 - x^2) / (a^2 + x^2) on S(x) / x for a function with anti-period a.
    """
    a2 = a * a
    x2 = x * x
    return (a2 - x2) / (a2 + x2)


def qpower_bound(x: float, params: Params) -> float:
    """
    The q-power variant (pi_pq^q - |x|^q) / (pi_pq^q + |x|^q), which holds near x = 0 but fails near pi_pq
    when q > 2. For q = 2 it is the lower bound itself.
    """
    if params.q == 2.0:
        return lower_bound(x=x, a=params.pi)

    a_q = abs_power(params.pi, params.q)
    x_q = abs_power(x, params.q)
    return (a_q - x_q) / (a_q + x_q)


def upper_bound(x: float, d: float) -> float:
    """
    The upper estimate (12 + d x^2) / (12 - d x^2) on S(x) / x, valid when d = lim S''(x) / x exists and is
    negative.
    """
    dx2 = d * x * x
    return (12.0 + dx2) / (12.0 - dx2)


def upper_bound_sin_p2(x: float, p: float) -> float:
    """
    The upper bound (6p - x^2) / (6p + x^2) on sin_p2(x) / x, i.e. `upper_bound` with d = -2/p.
    """
    six_p = 6.0 * p
    x2 = x * x
    return (six_p - x2) / (six_p + x2)
