import json
from importlib import resources

import pytest

from dfseq.algebra import parse_polynomial
from dfseq.geometry import make_test_configuration, rational_normal_curve, variety_from_input

SHIPPED = sorted(
    p.name for p in resources.files("dfseq").joinpath("data").iterdir()
    if p.name.endswith(".json") and not p.name.endswith(".schema.json")
)


def load_shipped(name):
    return json.loads(resources.files("dfseq").joinpath("data", name).read_text())


def configuration_from(doc):
    n = doc["numVars"]
    gens = [parse_polynomial(s, n) for s in doc["ideal"]]
    v = variety_from_input(gens, doc["exponent"], n, doc.get("dimension"))
    return make_test_configuration(v, doc["weights"])


def conic_with(weights):
    v = variety_from_input([parse_polynomial("z0*z2 - z1^2", 3)], 2, 3)
    return make_test_configuration(v, weights)


@pytest.fixture(scope="session")
def p1():
    return make_test_configuration(rational_normal_curve(1), (0, 1))


@pytest.fixture(scope="session")
def conic():
    return conic_with((0, 0, 1))


@pytest.fixture(scope="session")
def twisted_cubic():
    return make_test_configuration(rational_normal_curve(3), (0, 0, 0, 1))


# acceptance lines are collected here and echoed after the run
ACCEPTANCE_LINES = {}


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for key in sorted(ACCEPTANCE_LINES):
            terminalreporter.write_line(ACCEPTANCE_LINES[key])
