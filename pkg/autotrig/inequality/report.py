import numpy as np

from autotrig import exc
from autotrig.settings import general_setting


class GridSpec:
    def __init__(
        self,
        lo: float,
        hi: float,
        n: int = None,
        exclusion_radius: float = None,
        start: int = 0,
        stop: int = None,
    ):
        """
        A uniform grid of sample abscissae over [lo, hi] on which inequalities and identities are checked.

        Points within `exclusion_radius` of an operation's excluded points (the removable singularity of
        S(x) / x at x = 0, or the set P where S'' is undefined) are removed before evaluation.

        A grid may describe only the slice [start:stop] of its n points, which is how `partition` splits a scan
        across workers without changing a single abscissa.

        Parameters
        ----------
        lo : float
            The first abscissa.
        hi : float
            The last abscissa.
        n : int
            The number of sample points, n >= 2. Read from the `[grid]` config section if None.
        exclusion_radius : float
            The half-width of the windows removed around excluded points. Read from the `[grid]` config section
            if None.
        """
        if n is None:
            n = int(general_setting("grid", "n"))
        if exclusion_radius is None:
            exclusion_radius = float(general_setting("grid", "exclusion_radius"))

        if not lo < hi:
            raise exc.DomainException(f"A grid requires lo < hi (lo={lo}, hi={hi})")
        if n < 2:
            raise exc.DomainException(f"A grid requires n >= 2 (n={n})")
        if exclusion_radius < 0.0:
            raise exc.DomainException(
                f"A grid requires exclusion_radius >= 0 (exclusion_radius={exclusion_radius})"
            )

        self.lo = float(lo)
        self.hi = float(hi)
        self.n = int(n)
        self.exclusion_radius = float(exclusion_radius)
        self.start = start
        self.stop = n if stop is None else stop

    @property
    def abscissae(self) -> np.ndarray:
        return np.linspace(self.lo, self.hi, self.n)[self.start : self.stop]

    def abscissae_excluding(self, excluded_points) -> np.ndarray:
        """
        The abscissae with every point within exclusion_radius of an excluded point removed.
        """
        abscissae = self.abscissae

        keep = np.full(shape=abscissae.shape, fill_value=True)

        for point in excluded_points:
            keep &= np.abs(abscissae - point) > self.exclusion_radius

        return abscissae[keep]

    def partition(self, parts: int):
        """
        Splits the grid into `parts` contiguous slices whose abscissae are exactly those of the full grid.
        """
        bounds = np.linspace(self.start, self.stop, parts + 1).astype("int")

        return [
            GridSpec(
                lo=self.lo,
                hi=self.hi,
                n=self.n,
                exclusion_radius=self.exclusion_radius,
                start=int(start),
                stop=int(stop),
            )
            for start, stop in zip(bounds[:-1], bounds[1:])
            if stop > start
        ]

    def whole(self) -> "GridSpec":
        return GridSpec(
            lo=self.lo, hi=self.hi, n=self.n, exclusion_radius=self.exclusion_radius
        )

    def __repr__(self):
        return (
            f"GridSpec(lo={self.lo:g}, hi={self.hi:g}, n={self.n}, "
            f"exclusion_radius={self.exclusion_radius:g})"
        )


class Counterexample:
    def __init__(self, x: float, lhs: float, rhs: float, crossing: float = None):
        """
        A point where a candidate inequality lhs <= rhs fails, with margin = rhs - lhs <= 0.

        Parameters
        ----------
        x : float
            The abscissa of the failure.
        lhs : float
            The value of the bound, which should lie below `rhs`.
        rhs : float
            The value the bound is compared against (e.g. sin_pq(x) / x).
        crossing : float
            For a counterexample located by a scan, the refined abscissa where the margin first changes sign.
        """
        self.x = x
        self.lhs = lhs
        self.rhs = rhs
        self.crossing = crossing

    @property
    def margin(self) -> float:
        return self.rhs - self.lhs

    def __repr__(self):
        return (
            f"Counterexample(x={self.x!r}, lhs={self.lhs!r}, rhs={self.rhs!r}, margin={self.margin!r})"
        )


class InequalityReport:
    def __init__(
        self,
        params,
        grid: GridSpec,
        min_margin: float,
        argmin_x: float,
        violations,
        name: str = "",
        max_defect: float = None,
        constant_defect: float = None,
    ):
        """
        The outcome of checking an inequality (or, with `max_defect`, an identity) over a grid.

        The margin at a point is RHS - LHS; for an identity it is the tolerance minus the defect |LHS - RHS|, so
        in both cases a positive margin everywhere means the check holds.

        Parameters
        ----------
        params : Params
            The exponent pair the check was run for.
        grid : GridSpec
            The grid of abscissae that was evaluated.
        min_margin : float
            The minimum margin over the grid, excluding equality points of the inequality.
        argmin_x : float
            The abscissa of the minimum margin.
        violations : [Counterexample]
            Every grid point whose margin falls below the violation tolerance.
        """
        self.params = params
        self.grid = grid
        self.min_margin = min_margin
        self.argmin_x = argmin_x
        self.violations = list(violations)
        self.name = name
        self.max_defect = max_defect
        self.constant_defect = constant_defect

    @property
    def holds(self) -> bool:
        return len(self.violations) == 0

    @property
    def summary(self) -> str:

        status = "PASS" if self.holds else "FAIL"

        if self.max_defect is not None:
            measure = f"max defect {self.max_defect:.6e}"
        else:
            measure = f"min margin {self.min_margin:.6e} at x={self.argmin_x:.10g}"

        if self.constant_defect is not None:
            measure += f", constant defect {self.constant_defect:.6e}"

        return f"{self.name} {self.params}: {measure}, violations {len(self.violations)}: {status}"

    def __repr__(self):
        return f"InequalityReport({self.summary})"


def merge_reports(reports) -> InequalityReport:
    """
    Merges reports computed on partitions of one grid into the report of the whole grid.

    The merge takes minima and maxima and sorts violations by abscissa, so it does not depend on the order in
    which the partitions are supplied.
    """
    reports = list(reports)

    if len(reports) == 0:
        raise exc.DomainException("merge_reports requires at least one report")

    best = min(reports, key=lambda report: (report.min_margin, report.argmin_x))

    violations = sorted(
        [violation for report in reports for violation in report.violations],
        key=lambda violation: violation.x,
    )

    defects = [report.max_defect for report in reports if report.max_defect is not None]
    constant_defects = [
        report.constant_defect for report in reports if report.constant_defect is not None
    ]

    return InequalityReport(
        params=best.params,
        grid=best.grid.whole(),
        min_margin=best.min_margin,
        argmin_x=best.argmin_x,
        violations=violations,
        name=best.name,
        max_defect=max(defects) if defects else None,
        constant_defect=max(constant_defects) if constant_defects else None,
    )


class ConditionReport:
    def __init__(
        self,
        params,
        s1_max_defect: float,
        s2_holds: bool,
        s3_note: str,
        s4_min_value: float,
        excluded_points,
        s4_fd_min_value: float = None,
    ):
        """
        The numerical status of the conditions (S1)-(S4) for a sampled function S with anti-period a.

        A grid check cannot prove the conditions, so the report only states whether the samples are consistent
        with them.

        Parameters
        ----------
        s1_max_defect : float
            The largest of |S(-x) + S(x)| and |S(a+x) + S(x)| over the grid.
        s2_holds : bool
            Whether 0 < S(x) < x at every grid point in (0,a).
        s3_note : str
            A description of the finite-difference continuity check of S' across the excluded points.
        s4_min_value : float
            The minimum of S'^2 - S'' S over the grid minus the windows around the excluded set P.
        excluded_points : [float]
            The set P of points where S'' may fail to exist.
        s4_fd_min_value : float
            The same minimum computed with finite-difference derivatives.
        """
        self.params = params
        self.s1_max_defect = s1_max_defect
        self.s2_holds = s2_holds
        self.s3_note = s3_note
        self.s4_min_value = s4_min_value
        self.excluded_points = list(excluded_points)
        self.s4_fd_min_value = s4_fd_min_value

    def consistent(self, s1_tolerance: float = 1.0e-10, s4_tolerance: float = None) -> bool:
        if s4_tolerance is None:
            s4_tolerance = float(general_setting("redheffer", "s4_tolerance"))

        return (
            self.s1_max_defect <= s1_tolerance
            and self.s2_holds
            and self.s4_min_value >= 1.0 - s4_tolerance
        )

    @property
    def summary(self) -> str:
        return (
            f"conditions {self.params}: S1 max defect {self.s1_max_defect:.6e}, "
            f"S2 {'consistent' if self.s2_holds else 'violated'}, S3 {self.s3_note}, "
            f"S4 min {self.s4_min_value:.12g}, P={[round(point, 12) for point in self.excluded_points]}"
        )
