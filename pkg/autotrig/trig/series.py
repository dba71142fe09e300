"""
The three-term expansion of sin_pq about x = 0,

    sin_pq x = x - c1 |x|^q x + c2 |x|^(2q) x + ...,

with c1 = 1 / (p (q+1)) and c2 = (1 - p + 3q - pq) / (2 p^2 (q+1) (2q+1)). The quotient sin_pq(x) / x is
therefore a power series in |x|^q, which is what motivates the q-power variant of the Redheffer bound.
"""
import logging

from autotrig.settings import general_setting
from autotrig.trig.gtrig import Params
from autotrig.util.power_util import abs_power

logger = logging.getLogger(__name__)


class SeriesCoeffs:
    def __init__(self, c1: float, c2: float):
        self.c1 = c1
        self.c2 = c2

    def __repr__(self):
        return f"SeriesCoeffs(c1={self.c1!r}, c2={self.c2!r})"


def series_coeffs(params: Params) -> SeriesCoeffs:
    p = params.p
    q = params.q

    return SeriesCoeffs(
        c1=1.0 / (p * (q + 1.0)),
        c2=(1.0 - p + 3.0 * q - p * q) / (2.0 * p ** 2 * (q + 1.0) * (2.0 * q + 1.0)),
    )


def series3_deficit(x: float, params: Params) -> float:
    """
    Returns 1 - series3(x) / x = c1 |x|^q - c2 |x|^(2q) without forming the difference with 1, so its relative
    accuracy survives where series3(x) / x rounds to 1.
    """
    coeffs = series_coeffs(params=params)

    power = abs_power(x, params.q)

    return coeffs.c1 * power - coeffs.c2 * power * power


def series3_ratio(x: float, params: Params) -> float:
    """
    Returns series3(x) / x = 1 - c1 |x|^q + c2 |x|^(2q), which stays accurate as x -> 0 where the quotient
    sin_pq(x) / x would suffer cancellation.
    """
    return 1.0 - series3_deficit(x=x, params=params)


def series3(x: float, params: Params) -> float:
    """
    Returns the three-term expansion x - c1 |x|^q x + c2 |x|^(2q) x of sin_pq.

    The expansion is intended for |x| <= regime_fraction * pi_pq (the `[series]` config section, default
    pi_pq / 4). Outside that range a warning is logged but the value is still returned.
    """
    regime = float(general_setting("series", "regime_fraction")) * params.pi

    if abs(x) > regime:
        logger.warning(
            f"series3 evaluated at |x|={abs(x):.6g} beyond its approximation regime |x| <= {regime:.6g} "
            f"for {params}"
        )

    return x * series3_ratio(x=x, params=params)
