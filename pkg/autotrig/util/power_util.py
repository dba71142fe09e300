import numpy as np


def abs_power(z: float, alpha: float) -> float:
    """
    Returns |z|^alpha evaluated as exp(alpha * log|z|), with the base zero handled explicitly.

    For z = 0 the result is 0 for alpha > 0, 1 for alpha = 0 and inf for alpha < 0.
    """
    magnitude = abs(z)

    if magnitude == 0.0:
        if alpha > 0.0:
            return 0.0
        if alpha == 0.0:
            return 1.0
        return np.inf

    return float(np.exp(alpha * np.log(magnitude)))


def signed_power(z: float, alpha: float) -> float:
    """
    Returns |z|^alpha * sign(z), the odd power appearing in the p-Laplacian (e.g. |w|^(p'-2) w = signed_power(w, p'-1)).
    """
    if z == 0.0:
        return 0.0
    if z > 0.0:
        return abs_power(z, alpha)
    return -abs_power(z, alpha)
