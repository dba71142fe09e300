from os import path
import pytest
from hypothesis import HealthCheck, settings

from autoconf import conf
from autotrig.mock import fixtures

directory = path.dirname(path.realpath(__file__))

settings.register_profile(
    "autotrig",
    max_examples=50,
    deadline=None,
    suppress_health_check=[HealthCheck.function_scoped_fixture],
)
settings.load_profile("autotrig")


@pytest.fixture(autouse=True)
def set_config_path(request):

    conf.instance.push(
        new_path=path.join(directory, "config"),
        output_path=path.join(directory, "output"),
    )


##########
# Params #
##########


@pytest.fixture(name="params_2_2")
def make_params_2_2():
    return fixtures.make_params_2_2()


@pytest.fixture(name="params_3_3")
def make_params_3_3():
    return fixtures.make_params_3_3()


@pytest.fixture(name="params_2_4")
def make_params_2_4():
    return fixtures.make_params_2_4()


@pytest.fixture(name="params_5_5")
def make_params_5_5():
    return fixtures.make_params_5_5()


@pytest.fixture(name="params_10_2")
def make_params_10_2():
    return fixtures.make_params_10_2()


@pytest.fixture(name="params_sub_regime")
def make_params_sub_regime():
    return fixtures.make_params_sub_regime()


@pytest.fixture(name="acc")
def make_acc():
    return fixtures.make_acc()


#########
# Grids #
#########


@pytest.fixture(name="grid_0_to_pi")
def make_grid_0_to_pi():
    return fixtures.make_grid_0_to_pi()


@pytest.fixture(name="grid_small")
def make_grid_small():
    return fixtures.make_grid_small()


#############
# Functions #
#############


@pytest.fixture(name="anti_periodic_function")
def make_anti_periodic_function():
    return fixtures.make_anti_periodic_function()
