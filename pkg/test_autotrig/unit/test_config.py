from os import path

import pytest

from autoconf import conf
import autotrig as at
from autotrig import exc

directory = path.dirname(path.realpath(__file__))


@pytest.fixture(name="general_config")
def make_general_config():

    config = conf.Config(path.join(directory, "config"), path.join(directory, "output"))

    return config["general"]


class TestGeneralConfig:
    def test__accuracy_defaults(self, general_config):

        assert float(general_config["accuracy"]["abs_tol"]) == 1.0e-12
        assert float(general_config["accuracy"]["rel_tol"]) == 1.0e-12
        assert int(general_config["accuracy"]["max_iter"]) == 200

    def test__grid_and_tolerance_defaults(self, general_config):

        assert int(general_config["grid"]["n"]) == 500
        assert float(general_config["grid"]["exclusion_radius"]) == 1.0e-6
        assert float(general_config["redheffer"]["violation_tolerance"]) == 1.0e-12
        assert float(general_config["series"]["regime_fraction"]) == 0.25


class TestAccuracy:
    def test__defaults_read_from_config(self):

        acc = at.Accuracy()

        assert acc == at.Accuracy(abs_tol=1.0e-12, rel_tol=1.0e-12, max_iter=200)

    def test__explicit_values_override_config(self):

        acc = at.Accuracy(abs_tol=1.0e-8, max_iter=50)

        assert acc.abs_tol == 1.0e-8
        assert acc.rel_tol == 1.0e-12
        assert acc.max_iter == 50

    def test__modify_abs_tol__keeps_other_values(self):

        acc = at.Accuracy(abs_tol=1.0e-12, rel_tol=1.0e-10, max_iter=30)

        acc = acc.modify_abs_tol(abs_tol=1.0e-6)

        assert acc == at.Accuracy(abs_tol=1.0e-6, rel_tol=1.0e-10, max_iter=30)

    def test__invalid_values__raise_domain_exception(self):

        with pytest.raises(exc.DomainException):
            at.Accuracy(abs_tol=0.0)

        with pytest.raises(exc.DomainException):
            at.Accuracy(rel_tol=-1.0)

        with pytest.raises(exc.DomainException):
            at.Accuracy(max_iter=0)


class TestReleaseFiles:
    def test__release_script_has_unix_line_endings_and_runs_the_tests_first(self):

        with open(path.join(directory, "..", "..", "release.sh"), "rb") as f:
            script = f.read()

        assert b"\r" not in script
        assert script.index(b"pytest test_autotrig") < script.index(b"git flow release start")

    def test__readthedocs_builds_autotrig_docs(self):

        with open(path.join(directory, "..", "..", "readthedocs.yml")) as f:
            readthedocs = f.read()

        assert "version: 2" in readthedocs
        assert "docs/conf.py" in readthedocs
