from . import exc
from .settings import Accuracy
from .special.special_fn import beta, inc_beta_reg, ln_beta, ln_gamma
from .trig.gtrig import (
    Params,
    ReducedArg,
    arcsin_pq,
    cos_p,
    cos_pq,
    pi_p,
    pi_pq,
    reduce_argument,
    sin_cos_reduced,
    sin_p,
    sin_pq,
    sin_pq_dd,
)
from .trig.series import SeriesCoeffs, series3, series_coeffs
from .ode.ode_oracle import IvpPath, solve_ivp
from .inequality.report import (
    ConditionReport,
    Counterexample,
    GridSpec,
    InequalityReport,
    merge_reports,
)
from .inequality.bounds import lower_bound, qpower_bound, upper_bound, upper_bound_sin_p2
from .inequality.redheffer import (
    check_conditions,
    check_conditions_generic,
    check_cos_corollary,
    check_multiple_angle,
    check_theorem_gri,
    check_theorem_gri2,
    check_upper_p2,
    d_limit,
    explore_inequality,
    find_qpower_counterexample,
    h_function,
    partitioned,
    proof_quantities,
    tail_margin,
)

from autoconf import conf

conf.instance.register(__file__)

__version__ = '0.1.0'
