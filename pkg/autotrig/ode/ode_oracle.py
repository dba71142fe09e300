"""
An independent path to sin_pq through the p-Laplacian initial value problem

    -(|u'|^(p-2) u')' = ((p-1) q / p) |u|^(q-2) u,    u(0) = 0, u'(0) = 1,

whose solution coincides with sin_pq and conserves |u'|^p + |u|^q = 1.

The problem is integrated as the first order system in the flux variable w = |u'|^(p-2) u',

    u' = |w|^(p'-2) w,    w' = -((p-1) q / p) |u|^(q-2) u,    p' = p / (p-1),

whose right-hand side stays continuous where u' = 0, unlike the second order form.
"""
import logging
import math

import numpy as np

from autotrig import exc
from autotrig.settings import general_setting
from autotrig.trig.gtrig import Params
from autotrig.util.power_util import abs_power, signed_power

logger = logging.getLogger(__name__)


class IvpPath:
    def __init__(
        self,
        params: Params,
        step: float,
        samples: np.ndarray,
        step_drifts: np.ndarray = None,
        projected: bool = False,
    ):
        """
        The sampled solution of the p-Laplacian initial value problem on a uniform grid.

        Parameters
        ----------
        params : Params
            The exponent pair (p,q) of the problem.
        step : float
            The uniform step between consecutive samples.
        samples : np.ndarray
            An array of shape [total_samples, 3] whose rows are (x, u, w), starting at (0, 0, 1).
        step_drifts : np.ndarray
            The change of |w|^p' + |u|^q made by each Runge-Kutta step, before any projection.
        projected : bool
            Whether every step was projected back onto the energy level.
        """
        self.params = params
        self.step = step
        self.samples = samples
        self.step_drifts = (
            np.zeros(shape=len(samples) - 1) if step_drifts is None else np.asarray(step_drifts)
        )
        self.projected = projected

    @property
    def xs(self) -> np.ndarray:
        return self.samples[:, 0]

    @property
    def us(self) -> np.ndarray:
        return self.samples[:, 1]

    @property
    def ws(self) -> np.ndarray:
        return self.samples[:, 2]

    @property
    def derivatives(self) -> np.ndarray:
        """
        The derivative u' = |w|^(p'-2) w at every sample.
        """
        return np.array(
            [signed_power(w, self.params.p_star - 1.0) for w in self.ws]
        )

    @property
    def energy_defects(self) -> np.ndarray:
        """
        The defect |u'|^p + |u|^q - 1 of the conserved energy at every sample, using |u'|^p = |w|^p'.
        """
        return np.array(
            [_energy(u=u, w=w, params=self.params) - 1.0 for u, w in zip(self.us, self.ws)]
        )

    @property
    def max_energy_defect(self) -> float:
        return float(np.max(np.abs(self.energy_defects)))

    @property
    def max_step_drift(self) -> float:
        return float(np.max(np.abs(self.step_drifts), initial=0.0))

    @property
    def total_step_drift(self) -> float:
        """
        The summed |drift| of all steps, an upper bound on the energy defect an unprojected integration reaches.
        """
        return float(np.sum(np.abs(self.step_drifts)))

    def max_error_against(self, function) -> float:
        """
        Returns max |u(x) - function(x)| over the samples, e.g. with function = sin_pq.
        """
        return float(
            max(abs(u - function(x)) for x, u in zip(self.xs, self.us))
        )


def _energy(u: float, w: float, params: Params) -> float:
    return abs_power(w, params.p_star) + abs_power(u, params.q)


def _right_hand_side(u: float, w: float, params: Params, coupling: float):
    return (
        signed_power(w, params.p_star - 1.0),
        -coupling * signed_power(u, params.q - 1.0),
    )


def _project_onto_energy(u: float, w: float, params: Params, iterations: int = 3):
    """
    Moves (u,w) along the gradient of E(u,w) = |w|^p' + |u|^q back onto the level set E = 1.

    Near the turning points (w ~ 0) the gradient points along u and near the zeros (u ~ 0) it points along w,
    so the correction always acts on the well-conditioned variable.
    """
    for iteration in range(iterations):

        defect = _energy(u=u, w=w, params=params) - 1.0

        if abs(defect) < 1.0e-15:
            break

        grad_u = params.q * signed_power(u, params.q - 1.0)
        grad_w = params.p_star * signed_power(w, params.p_star - 1.0)

        norm = grad_u * grad_u + grad_w * grad_w

        if norm == 0.0:
            break

        scale = defect / norm

        u -= scale * grad_u
        w -= scale * grad_w

    return u, w


def solve_ivp(
    params: Params, x_end: float, step: float, project_energy: bool = None
) -> IvpPath:
    """
    Integrates the p-Laplacian initial value problem on [0, x_end] with the classical fourth-order Runge-Kutta
    scheme at a fixed step.

    The number of steps is ceil(x_end / step) and the step is shrunk to x_end / steps so the final sample lands
    on x_end. After each step the state is optionally projected back onto the conserved energy level. The energy
    change of every step before projection is kept in `IvpPath.step_drifts`.

    Parameters
    ----------
    params : Params
        The exponent pair (p,q).
    x_end : float
        The end of the integration interval, 0 < x_end <= 2 pi_pq.
    step : float
        The requested step, 0 < step <= pi_pq / 100.
    project_energy : bool
        Whether to project each step onto |u'|^p + |u|^q = 1. Read from the `[ode]` config section if None.
    """
    if project_energy is None:
        project_energy = general_setting("ode", "project_energy")
        if isinstance(project_energy, str):
            project_energy = project_energy.strip().lower() == "true"

    period = 2.0 * params.pi

    if not math.isfinite(x_end) or x_end <= 0.0 or x_end > period * (1.0 + 1.0e-12):
        raise exc.DomainException(
            f"solve_ivp requires 0 < x_end <= 2 pi_pq = {period} (x_end={x_end})"
        )

    if not math.isfinite(step) or step <= 0.0 or step > params.pi / 100.0 * (1.0 + 1.0e-12):
        raise exc.DomainException(
            f"solve_ivp requires 0 < step <= pi_pq / 100 = {params.pi / 100.0} (step={step})"
        )

    total_steps = max(int(math.ceil(x_end / step - 1.0e-9)), 1)
    h = x_end / total_steps

    coupling = (params.p - 1.0) * params.q / params.p

    samples = np.zeros(shape=(total_steps + 1, 3))
    samples[0, :] = (0.0, 0.0, 1.0)

    step_drifts = np.zeros(shape=total_steps)

    u = 0.0
    w = 1.0

    for index in range(1, total_steps + 1):

        energy = _energy(u=u, w=w, params=params)

        k1_u, k1_w = _right_hand_side(u, w, params, coupling)
        k2_u, k2_w = _right_hand_side(
            u + 0.5 * h * k1_u, w + 0.5 * h * k1_w, params, coupling
        )
        k3_u, k3_w = _right_hand_side(
            u + 0.5 * h * k2_u, w + 0.5 * h * k2_w, params, coupling
        )
        k4_u, k4_w = _right_hand_side(u + h * k3_u, w + h * k3_w, params, coupling)

        u += h * (k1_u + 2.0 * k2_u + 2.0 * k3_u + k4_u) / 6.0
        w += h * (k1_w + 2.0 * k2_w + 2.0 * k3_w + k4_w) / 6.0

        step_drifts[index - 1] = _energy(u=u, w=w, params=params) - energy

        if project_energy:
            u, w = _project_onto_energy(u=u, w=w, params=params)

        samples[index, :] = (index * h, u, w)

    path = IvpPath(
        params=params, step=h, samples=samples, step_drifts=step_drifts, projected=project_energy
    )

    logger.debug(
        f"solve_ivp {params}: {total_steps} steps of {h:.3e}, max energy defect {path.max_energy_defect:.3e}, "
        f"summed step drift {path.total_step_drift:.3e}"
    )

    return path
