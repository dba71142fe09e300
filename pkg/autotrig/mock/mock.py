import numpy as np


class MockAntiPeriodicFunction:
    def __init__(self, a=np.pi):
        """
        The ordinary sine rescaled to anti-period a, S(x) = (a / pi) sin(pi x / a), which satisfies (S1)-(S4) with
        S'^2 - S'' S = 1 exactly and an empty excluded set.

        Calls are counted so tests can check how often a checker samples the function.
        """
        self.a = a
        self.calls = 0

    def __call__(self, x):
        self.calls += 1
        return self.a / np.pi * np.sin(np.pi * x / self.a)

    def derivative(self, x):
        return np.cos(np.pi * x / self.a)

    def second_derivative(self, x):
        return -np.pi / self.a * np.sin(np.pi * x / self.a)


class MockLinearFunction:
    """
    S(x) = x, which breaks the strict sub-linearity 0 < S(x) < x and has no anti-period.
    """

    def __call__(self, x):
        return x
