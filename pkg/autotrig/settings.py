from autoconf import conf

from autotrig import exc


def general_setting(section, name):
    return conf.instance["general"][section][name]


class Accuracy:
    def __init__(self, abs_tol: float = None, rel_tol: float = None, max_iter: int = None):
        """
        The tolerances every iterative kernel of **autotrig** works to.

        Any value left as `None` is read from the `[accuracy]` section of the `general.ini` config file.

        Parameters
        ----------
        abs_tol : float
            The absolute tolerance on a computed value (e.g. the residual |F_pq(s) - y| when inverting F_pq).
        rel_tol : float
            The relative tolerance used by the continued fraction of the incomplete beta function.
        max_iter : int
            The maximum number of iterations any kernel may take before raising a `ConvergenceException`.
        """
        if abs_tol is None:
            abs_tol = float(general_setting("accuracy", "abs_tol"))
        if rel_tol is None:
            rel_tol = float(general_setting("accuracy", "rel_tol"))
        if max_iter is None:
            max_iter = int(general_setting("accuracy", "max_iter"))

        if not abs_tol > 0.0 or not rel_tol > 0.0:
            raise exc.DomainException(
                f"Accuracy tolerances must be positive (abs_tol={abs_tol}, rel_tol={rel_tol})"
            )

        if max_iter < 1:
            raise exc.DomainException(f"Accuracy max_iter must be >= 1 (max_iter={max_iter})")

        self.abs_tol = abs_tol
        self.rel_tol = rel_tol
        self.max_iter = max_iter

    def modify_abs_tol(self, abs_tol):
        return Accuracy(abs_tol=abs_tol, rel_tol=self.rel_tol, max_iter=self.max_iter)

    def __eq__(self, other):
        if not isinstance(other, Accuracy):
            return NotImplemented
        return (self.abs_tol, self.rel_tol, self.max_iter) == (
            other.abs_tol,
            other.rel_tol,
            other.max_iter,
        )

    def __repr__(self):
        return f"Accuracy(abs_tol={self.abs_tol}, rel_tol={self.rel_tol}, max_iter={self.max_iter})"
