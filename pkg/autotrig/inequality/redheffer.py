"""
Redheffer-type inequalities for anti-periodic functions and for the generalized trigonometric functions.

A function S with anti-period a satisfying

    (S1) S(-x) = -S(x) and S(a+x) = -S(x) for x >= 0,
    (S2) 0 < S(x) < x on (0,a),
    (S3) S continuous on [0,a], C^1 on [0,a) and C^2 on [0,a) minus a finite set P,
    (S4) S'(x)^2 - S''(x) S(x) >= 1 on [0,a) minus P,

obeys (a^2 - x^2) / (a^2 + x^2) <= S(x) / x for x != 0. For 2 <= p, q the generalized sine sin_pq satisfies
(S1)-(S4) with a = pi_pq and P = {pi_pq / 2}.

Every check here samples a `GridSpec`, so its report is evidence, never a proof.
"""
import logging
import math

import numpy as np

from autotrig import exc
from autotrig.inequality import bounds
from autotrig.inequality.report import (
    ConditionReport,
    Counterexample,
    GridSpec,
    InequalityReport,
    merge_reports,
)
from autotrig.settings import Accuracy, general_setting
from autotrig.trig import gtrig, series
from autotrig.trig.gtrig import Params
from autotrig.util.power_util import abs_power

logger = logging.getLogger(__name__)

BOUNDS = ("eq-gri", "q-power", "upper-p2")

_SERIES_RATIO_RADIUS = 1.0e-6
_EPSILON = np.finfo(float).eps


def redheffer_setting(name):
    return float(general_setting("redheffer", name))


def sin_ratio(x: float, params: Params, acc: Accuracy = None) -> float:
    """
    Returns sin_pq(x) / x, using the series quotient for |x| < 1e-6 where the direct quotient loses digits.
    """
    if abs(x) < _SERIES_RATIO_RADIUS:
        return series.series3_ratio(x=x, params=params)

    return gtrig.sin_pq(x=x, params=params, acc=acc) / x


def _is_equality_point(x, equality_points, radius):
    return any(abs(x - point) <= radius for point in equality_points)


def scan_inequality(
    name: str,
    params,
    grid: GridSpec,
    abscissae,
    lhs_from,
    rhs_from,
    equality_points=(),
) -> InequalityReport:
    """
    Evaluates lhs(x) <= rhs(x) at every abscissa and assembles the report.

    A point is a violation only if its margin rhs - lhs is at or below minus the violation tolerance, which
    separates genuine failures from rounding noise at equality points. Equality points are still checked for
    violations but do not enter the minimum margin.
    """
    tolerance = redheffer_setting("violation_tolerance")

    min_margin = np.inf
    argmin_x = np.nan
    violations = []

    for x in abscissae:

        x = float(x)

        lhs = lhs_from(x)
        rhs = rhs_from(x)
        margin = rhs - lhs

        if margin <= -tolerance:
            violations.append(Counterexample(x=x, lhs=lhs, rhs=rhs))

        if _is_equality_point(x, equality_points, grid.exclusion_radius):
            continue

        if margin < min_margin:
            min_margin = margin
            argmin_x = x

    report = InequalityReport(
        params=params,
        grid=grid,
        min_margin=float(min_margin),
        argmin_x=float(argmin_x),
        violations=violations,
        name=name,
    )

    logger.debug(report.summary)

    return report


def partitioned(check, grid: GridSpec, parts: int, executor=None, **kwargs) -> InequalityReport:
    """
    Runs a grid check on `parts` slices of the grid and merges the reports.

    Parameters
    ----------
    check : callable
        A checker of this module taking a `grid` keyword, e.g. `check_theorem_gri2`.
    grid : GridSpec
        The full grid.
    parts : int
        The number of slices.
    executor : concurrent.futures.Executor
        If supplied, the slices are evaluated through `executor.submit`; otherwise they run in turn.
    """
    grids = grid.partition(parts=parts)

    if executor is None:
        reports = [check(grid=sub_grid, **kwargs) for sub_grid in grids]
    else:
        futures = [executor.submit(check, grid=sub_grid, **kwargs) for sub_grid in grids]
        reports = [future.result() for future in futures]

    return merge_reports(reports)


def check_theorem_gri(
    function, a: float, grid: GridSpec, name: str = "theorem-gri", params=None
) -> InequalityReport:
    """
    Checks (a^2 - x^2) / (a^2 + x^2) <= S(x) / x on a grid for any callable S with anti-period a.

    Equality holds at x = +-a, and x = 0 (a removable singularity) is excluded from the grid.
    """
    return scan_inequality(
        name=name,
        params=params,
        grid=grid,
        abscissae=grid.abscissae_excluding(excluded_points=[0.0]),
        lhs_from=lambda x: bounds.lower_bound(x=x, a=a),
        rhs_from=lambda x: function(x) / x,
        equality_points=(-a, a),
    )


def _check_sin_ratio_lower(name, params, grid, acc, lower_from, equality_points):
    return scan_inequality(
        name=name,
        params=params,
        grid=grid,
        abscissae=grid.abscissae_excluding(excluded_points=[0.0]),
        lhs_from=lower_from,
        rhs_from=lambda x: sin_ratio(x=x, params=params, acc=acc),
        equality_points=equality_points,
    )


def check_theorem_gri2(params: Params, grid: GridSpec, acc: Accuracy = None) -> InequalityReport:
    """
    Checks (pi_pq^2 - x^2) / (pi_pq^2 + x^2) <= sin_pq(x) / x over a grid.

    Raises
    ------
    RegimeException
        If the exponents fall outside 2 <= p, q, where the inequality is not a theorem; use
        `explore_inequality` to scan there.
    """
    if not params.theorem_regime():
        raise exc.RegimeException(
            f"The Redheffer-type inequality for sin_pq is proven for 2 <= p, q < inf only ({params})"
        )

    report = _check_sin_ratio_lower(
        name="redheffer",
        params=params,
        grid=grid,
        acc=acc or Accuracy(),
        lower_from=lambda x: bounds.lower_bound(x=x, a=params.pi),
        equality_points=(-params.pi, params.pi),
    )

    logger.info(report.summary)

    return report


def explore_inequality(
    params: Params, grid: GridSpec, bound: str, acc: Accuracy = None
) -> InequalityReport:
    """
    Scans one of the bounds against sin_pq(x) / x for any exponents 1 < p, q, without asserting a theorem.

    Parameters
    ----------
    bound : str
        "eq-gri" for (pi_pq^2 - x^2) / (pi_pq^2 + x^2) <= sin_pq(x) / x, "q-power" for the |x|^q variant of
        that bound, "upper-p2" for sin_pq(x) / x < (6p - x^2) / (6p + x^2).
    """
    acc = acc or Accuracy()

    if bound == "eq-gri":
        return _check_sin_ratio_lower(
            name="explore eq-gri",
            params=params,
            grid=grid,
            acc=acc,
            lower_from=lambda x: bounds.lower_bound(x=x, a=params.pi),
            equality_points=(-params.pi, params.pi),
        )

    if bound == "q-power":
        return _check_sin_ratio_lower(
            name="explore q-power",
            params=params,
            grid=grid,
            acc=acc,
            lower_from=lambda x: bounds.qpower_bound(x=x, params=params),
            equality_points=(-params.pi, params.pi),
        )

    if bound == "upper-p2":
        return scan_inequality(
            name="explore upper-p2",
            params=params,
            grid=grid,
            abscissae=grid.abscissae_excluding(excluded_points=[0.0]),
            lhs_from=lambda x: sin_ratio(x=x, params=params, acc=acc),
            rhs_from=lambda x: bounds.upper_bound_sin_p2(x=x, p=params.p),
        )

    raise exc.DomainException(f"Unknown bound {bound}, expected one of {BOUNDS}")


def qpower_margin(x: float, params: Params, acc: Accuracy = None) -> float:
    return sin_ratio(x=x, params=params, acc=acc) - bounds.qpower_bound(x=x, params=params)


def find_qpower_counterexample(params: Params, acc: Accuracy = None):
    """
    Locates a point in (pi_pq / 2, pi_pq) where the q-power bound exceeds sin_pq(x) / x.

    The interval is scanned at a resolution of `counterexample_resolution` * pi_pq; the first sign change of the
    margin is then refined by bisection to a width of acc.abs_tol and stored as `crossing`. The returned point is
    the scanned abscissa past the crossing with the most negative margin.

    Returns `None` if no violation is found, which is always the case for q = 2 where the bound is the proven
    one.
    """
    acc = acc or Accuracy()

    if params.q == 2.0:
        logger.info(f"q-power bound coincides with the proven bound for {params}, no counterexample")
        return None

    tolerance = redheffer_setting("violation_tolerance")
    resolution = redheffer_setting("counterexample_resolution")

    steps = int(round(0.5 / resolution))

    abscissae = [params.half_pi + k * resolution * params.pi for k in range(1, steps)]
    margins = [qpower_margin(x=x, params=params, acc=acc) for x in abscissae]

    first = next(
        (index for index, margin in enumerate(margins) if margin <= -tolerance), None
    )

    if first is None:
        logger.info(f"No q-power counterexample found in (pi_pq / 2, pi_pq) for {params}")
        return None

    lower = abscissae[first - 1] if first > 0 else params.half_pi
    upper = abscissae[first]

    while upper - lower > acc.abs_tol:

        middle = 0.5 * (lower + upper)

        if middle <= lower or middle >= upper:
            break

        if qpower_margin(x=middle, params=params, acc=acc) <= -tolerance:
            upper = middle
        else:
            lower = middle

    worst = first + int(np.argmin(margins[first:]))
    x = abscissae[worst]

    counterexample = Counterexample(
        x=x,
        lhs=bounds.qpower_bound(x=x, params=params),
        rhs=sin_ratio(x=x, params=params, acc=acc),
        crossing=upper,
    )

    logger.info(
        f"q-power counterexample for {params}: crossing at x={upper:.12g}, "
        f"worst margin {counterexample.margin:.6e} at x={x:.12g}"
    )

    return counterexample


def _check_grid_inside(grid: GridSpec, lo: float, hi: float, name: str):
    if grid.lo < lo or grid.hi > hi:
        raise exc.DomainException(
            f"{name} requires a grid inside [{lo}, {hi}] (grid={grid})"
        )


def check_cos_corollary(q: float, grid: GridSpec, acc: Accuracy = None) -> InequalityReport:
    """
    Checks (pi_(q*,q)^2 - x^2) / (pi_(q*,q)^2 + x^2) < cos_(q*,q)(x/2)^(q*-1) on a grid inside (0, pi_(q*,q)).

    For q = 2 this is the classical (pi^2 - x^2) / (pi^2 + x^2) < cos(x/2) on (0, pi).
    """
    if q < 2.0:
        raise exc.RegimeException(
            f"The cosine inequality is proven for 2 <= q < inf only (q={q})"
        )

    acc = acc or Accuracy()

    params = Params(p=2.0, q=q).conjugate()

    _check_grid_inside(grid=grid, lo=0.0, hi=params.pi, name="check_cos_corollary")

    exponent = params.p - 1.0

    report = scan_inequality(
        name="cos",
        params=params,
        grid=grid,
        abscissae=grid.abscissae_excluding(excluded_points=[0.0, params.pi]),
        lhs_from=lambda x: bounds.lower_bound(x=x, a=params.pi),
        rhs_from=lambda x: abs_power(
            gtrig.cos_pq(x=0.5 * x, params=params, acc=acc), exponent
        ),
    )

    logger.info(report.summary)

    return report


def check_multiple_angle(q: float, grid: GridSpec, acc: Accuracy = None) -> InequalityReport:
    """
    Checks the multiple-angle identity

        sin_(2,q)(2^(2/q) x) = 2^(2/q) sin_(q*,q)(x) cos_(q*,q)(x)^(q*-1),    x in [0, pi_(q*,q) / 2],

    and the constant relation pi_(2,q) = 2^(2/q - 1) pi_(q*,q).

    The report is an identity report: the margin at a point is identity_tolerance - |LHS - RHS|, `max_defect`
    is the largest |LHS - RHS| and `constant_defect` is |pi_(2,q) - 2^(2/q - 1) pi_(q*,q)|. A constant defect
    above constant_tolerance is recorded as a violation at x = pi_(q*,q).
    """
    acc = acc or Accuracy()

    params_2q = Params(p=2.0, q=q)
    params_star = params_2q.conjugate()

    _check_grid_inside(
        grid=grid, lo=0.0, hi=params_star.half_pi, name="check_multiple_angle"
    )

    scale = 2.0 ** (2.0 / q)
    exponent = params_star.p - 1.0

    identity_tolerance = redheffer_setting("identity_tolerance")
    constant_tolerance = redheffer_setting("constant_tolerance")

    defects = []
    violations = []

    for x in grid.abscissae:

        x = float(x)

        lhs = gtrig.sin_pq(x=scale * x, params=params_2q, acc=acc)
        rhs = (
            scale
            * gtrig.sin_pq(x=x, params=params_star, acc=acc)
            * abs_power(gtrig.cos_pq(x=x, params=params_star, acc=acc), exponent)
        )

        defect = abs(lhs - rhs)
        defects.append(defect)

        if defect >= identity_tolerance:
            violations.append(Counterexample(x=x, lhs=defect, rhs=identity_tolerance))

    constant_defect = abs(params_2q.pi - 2.0 ** (2.0 / q - 1.0) * params_star.pi)

    if constant_defect > constant_tolerance:
        violations.append(
            Counterexample(x=params_star.pi, lhs=constant_defect, rhs=constant_tolerance)
        )

    worst = int(np.argmax(defects))

    report = InequalityReport(
        params=params_star,
        grid=grid,
        min_margin=identity_tolerance - defects[worst],
        argmin_x=float(grid.abscissae[worst]),
        violations=violations,
        name="multiple-angle",
        max_defect=defects[worst],
        constant_defect=constant_defect,
    )

    logger.info(report.summary)

    return report


def proof_series_radius(params: Params) -> float:
    """
    The radius eps^(1/(3q)), capped at the series regime, below which `proof_quantities` evaluates f and g from
    the expansion in u = |x|^q. There the direct differences x - S and g lose more digits than the truncation of
    the expansion costs.
    """
    return min(
        _EPSILON ** (1.0 / (3.0 * params.q)),
        float(general_setting("series", "regime_fraction")) * params.pi,
    )


def _proof_series(x: float, params: Params):
    """
    f and g from the expansion in u = |x|^q. With d = 1 - S/x = c1 u - c2 u^2 + O(u^3) and
    w = 1 - S' = u/p + ((p-1)/(2p^2) - q c1/p) u^2 + O(u^3),

        f = x^2 (2 - d) / d,
        g = x (w - 3d + d^2) / (1 - d) = x (g1 u + g2 u^2) / (1 - d) + O(x u^3),

    where g1 = 1/p - 3 c1 and g2 = 3 c2 + c1^2 + (p-1)/(2p^2) - q c1/p.
    """
    p = params.p
    coeffs = series.series_coeffs(params=params)

    u = abs_power(x, params.q)
    d = series.series3_deficit(x=x, params=params)

    g1 = 1.0 / p - 3.0 * coeffs.c1
    g2 = (
        3.0 * coeffs.c2
        + coeffs.c1 * coeffs.c1
        + (p - 1.0) / (2.0 * p * p)
        - params.q * coeffs.c1 / p
    )

    f = x * x * (2.0 - d) / d
    g = x * u * (g1 + g2 * u) / (1.0 - d)

    return f, g


def proof_quantities(x: float, params: Params, acc: Accuracy = None):
    """
    Returns the quantities (f, g, s4) of the proof of the Redheffer-type inequality at x in (0, pi_pq):

        f(x) = x^2 (x + S) / (x - S),
        g(x) = x + S - x^2 (1 + S') / S,
        s4(x) = S'^2 - S'' S,

    with S = sin_pq, S' = cos_pq and S'' = sin_pq_dd. The proof shows g > 0, hence f decreases strictly towards
    f(pi_pq) = pi_pq^2, and (S4) requires s4 >= 1.

    Below `proof_series_radius` f and g come from the expansion of S(x) / x in |x|^q, where x - S and g would
    otherwise cancel to rounding noise.

    For p > 2, s4 is `nan` within the exclusion radius of pi_pq / 2, where S'' does not exist.
    """
    if not 0.0 < x < params.pi:
        raise exc.DomainException(
            f"proof_quantities requires 0 < x < pi_pq = {params.pi} (x={x})"
        )

    acc = acc or Accuracy()

    s = gtrig.sin_pq(x=x, params=params, acc=acc)
    ds = gtrig.cos_pq(x=x, params=params, acc=acc)

    if x < proof_series_radius(params=params):
        f, g = _proof_series(x=x, params=params)
    else:
        ratio = s / x
        f = x * x * (1.0 + ratio) / (1.0 - ratio)
        g = x + s - x * x * (1.0 + ds) / s

    radius = float(general_setting("grid", "exclusion_radius"))

    if params.p > 2.0 and abs(x - params.half_pi) <= radius:
        s4 = np.nan
    else:
        s4 = ds * ds - gtrig.sin_pq_dd(x=x, params=params, acc=acc) * s

    return f, g, s4


def h_function(t: float, params: Params) -> float:
    """
    The scalar reduction h(t) = (1 - q/p) t^2 + (q/p) t^(2-p) - 1 of S'^2 - S'' S - 1 at t = |cos_pq x|.

    For 2 <= p, q it is nonincreasing on (0,1] with h(1) = 0.
    """
    ratio = params.q / params.p
    return (1.0 - ratio) * t * t + ratio * abs_power(t, 2.0 - params.p) - 1.0


def tail_margin(x: float, a: float, function) -> float:
    """
    The margin S(x)/x - (a^2 - x^2)/(a^2 + x^2) for x > a rewritten through anti-periodicity, with t = x - a:

        t / (a+t) * ((2a^2 + 3at + t^2) / (2a^2 + 2at + t^2) - S(t) / t),

    which is positive whenever S(t) < t.
    """
    t = x - a
    a2 = a * a
    return (t / (a + t)) * (
        (2.0 * a2 + 3.0 * a * t + t * t) / (2.0 * a2 + 2.0 * a * t + t * t)
        - function(t) / t
    )


def _one_sided_jump(function, point, step):
    left = (function(point) - function(point - step)) / step
    right = (function(point + step) - function(point)) / step
    return abs(right - left)


def check_conditions_generic(
    function,
    a: float,
    grid: GridSpec,
    excluded_points,
    derivative=None,
    second_derivative=None,
    params=None,
) -> ConditionReport:
    """
    Samples the conditions (S1)-(S4) for a callable S with anti-period a.

    Derivatives not supplied in closed form are replaced by central differences, so any user function can be
    checked. The finite-difference estimate of min S'^2 - S'' S is always reported as `s4_fd_min_value`.

    Parameters
    ----------
    function : callable
        The function S.
    a : float
        The anti-period of S.
    grid : GridSpec
        The sample points; (S2) and (S4) use those in [0,a).
    excluded_points : [float]
        The set P where S'' may not exist. Windows of the grid's exclusion radius are removed around it.
    derivative, second_derivative : callable
        Closed forms of S' and S'', if known.
    """
    step = redheffer_setting("finite_difference_step")
    step_second = 10.0 * step

    abscissae = [float(x) for x in grid.abscissae]

    s1_max_defect = 0.0

    for x in abscissae:
        value = function(x)
        s1_max_defect = max(s1_max_defect, abs(function(-x) + value))
        if x >= 0.0:
            s1_max_defect = max(s1_max_defect, abs(function(a + x) + value))

    s2_holds = all(0.0 < function(x) < x for x in abscissae if 0.0 < x < a)

    notes = []

    for point in excluded_points:
        jump_coarse = _one_sided_jump(function, point, step)
        jump_fine = _one_sided_jump(function, point, 0.01 * step)
        verdict = "consistent with" if jump_fine <= jump_coarse else "not consistent with"
        notes.append(
            f"one-sided slopes at x={point:.10g} differ by {jump_coarse:.3e} (step {step:.0e}) and "
            f"{jump_fine:.3e} (step {0.01 * step:.0e}), {verdict} S' continuous"
        )

    notes.append(f"|S(a)| = {abs(function(a)):.3e}")

    def windowed(radius):
        return [
            x
            for x in abscissae
            if 0.0 <= x < a
            and all(abs(x - point) > radius for point in excluded_points)
        ]

    def fd_derivative(x):
        return (function(x + step) - function(x - step)) / (2.0 * step)

    def fd_second_derivative(x):
        return (
            function(x + step_second) - 2.0 * function(x) + function(x - step_second)
        ) / (step_second * step_second)

    s4_fd_values = [
        fd_derivative(x) ** 2 - fd_second_derivative(x) * function(x)
        for x in windowed(grid.exclusion_radius + step_second)
    ]

    derivative = derivative or fd_derivative
    second_derivative = second_derivative or fd_second_derivative

    s4_values = []

    for x in windowed(grid.exclusion_radius):
        try:
            s4_values.append(derivative(x) ** 2 - second_derivative(x) * function(x))
        except exc.SingularPointException:
            continue

    report = ConditionReport(
        params=params,
        s1_max_defect=s1_max_defect,
        s2_holds=s2_holds,
        s3_note="; ".join(notes),
        s4_min_value=float(min(s4_values)) if s4_values else np.nan,
        excluded_points=excluded_points,
        s4_fd_min_value=float(min(s4_fd_values)) if s4_fd_values else np.nan,
    )

    logger.info(report.summary)

    return report


def check_conditions(params: Params, grid: GridSpec, acc: Accuracy = None) -> ConditionReport:
    """
    Samples (S1)-(S4) for S = sin_pq with a = pi_pq and P = {pi_pq / 2}, using the closed forms cos_pq and
    sin_pq_dd for S' and S''.

    For 2 <= p, q the minimum of S'^2 - S'' S is expected to be at least 1 - 1e-9; outside that regime the report
    is produced but carries no theorem.
    """
    acc = acc or Accuracy()

    return check_conditions_generic(
        function=lambda x: gtrig.sin_pq(x=x, params=params, acc=acc),
        a=params.pi,
        grid=grid,
        excluded_points=[params.half_pi],
        derivative=lambda x: gtrig.cos_pq(x=x, params=params, acc=acc),
        second_derivative=lambda x: gtrig.sin_pq_dd(x=x, params=params, acc=acc),
        params=params,
    )


def d_limit(p: float) -> float:
    """
    Returns d = lim_(x -> 0+) S''(x) / x = -2/p for S = sin_(p,2).
    """
    if not math.isfinite(p) or p <= 1.0:
        raise exc.DomainException(f"d_limit requires 1 < p < inf (p={p})")

    return -2.0 / p


def d_estimate(p: float, x: float = 1.0e-3, acc: Accuracy = None) -> float:
    """
    Estimates d as sin_pq_dd(x, (p,2)) / x at a small x, the numerical counterpart of `d_limit`.
    """
    return gtrig.sin_pq_dd(x=x, params=Params(p=p, q=2.0), acc=acc) / x


def check_upper_p2(p: float, grid: GridSpec, acc: Accuracy = None) -> InequalityReport:
    """
    Checks the two-sided bound

        (pi_(p,2)^2 - x^2) / (pi_(p,2)^2 + x^2) < sin_(p,2)(x) / x < (6p - x^2) / (6p + x^2)

    on a grid inside (0, pi_(p,2)). The margin at a point is the smaller of the two margins.
    """
    if p < 2.0:
        raise exc.RegimeException(
            f"The two-sided bound for sin_(p,2) is proven for 2 <= p < inf only (p={p})"
        )

    acc = acc or Accuracy()

    params = Params(p=p, q=2.0)

    _check_grid_inside(grid=grid, lo=0.0, hi=params.pi, name="check_upper_p2")

    tolerance = redheffer_setting("violation_tolerance")

    min_margin = np.inf
    argmin_x = np.nan
    violations = []

    for x in grid.abscissae_excluding(excluded_points=[0.0, params.pi]):

        x = float(x)

        ratio = sin_ratio(x=x, params=params, acc=acc)
        lower = bounds.lower_bound(x=x, a=params.pi)
        upper = bounds.upper_bound_sin_p2(x=x, p=p)

        if ratio - lower <= -tolerance:
            violations.append(Counterexample(x=x, lhs=lower, rhs=ratio))
        if upper - ratio <= -tolerance:
            violations.append(Counterexample(x=x, lhs=ratio, rhs=upper))

        margin = min(ratio - lower, upper - ratio)

        if margin < min_margin:
            min_margin = margin
            argmin_x = x

    report = InequalityReport(
        params=params,
        grid=grid,
        min_margin=float(min_margin),
        argmin_x=float(argmin_x),
        violations=violations,
        name="upper",
    )

    logger.info(report.summary)

    return report
