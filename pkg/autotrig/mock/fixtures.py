import autotrig as at
from autotrig.mock.mock import MockAntiPeriodicFunction

###########
# Params #
###########


def make_params_2_2():
    return at.Params(p=2.0, q=2.0)


def make_params_3_3():
    return at.Params(p=3.0, q=3.0)


def make_params_2_4():
    return at.Params(p=2.0, q=4.0)


def make_params_5_5():
    return at.Params(p=5.0, q=5.0)


def make_params_10_2():
    return at.Params(p=10.0, q=2.0)


def make_params_sub_regime():
    return at.Params(p=1.5, q=3.0)


##############
# Accuracies #
##############


def make_acc():
    return at.Accuracy(abs_tol=1.0e-12, rel_tol=1.0e-12, max_iter=200)


#########
# Grids #
#########


def make_grid_0_to_pi():
    return at.GridSpec(lo=0.0, hi=3.141592653589793, n=200)


def make_grid_small():
    return at.GridSpec(lo=0.01, hi=1.0, n=20)


#############
# Functions #
#############


def make_anti_periodic_function():
    return MockAntiPeriodicFunction(a=2.0)
