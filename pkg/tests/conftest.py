import random

import pytest

from garside.catalog import build
from garside.element import normalize, parse_element

SMALL_GROUPS = ["A:2", "A:3", "B:2", "B:3", "D:3", "I2:3", "I2:4", "I2:5", "dualA:2", "dualA:3", "dualI2:5", "torus:2", "torus:3", "Z:2,3", "Z:1,1,2"]


def group(desc):
    return build(desc)[0]


def random_element(s, rng, length=6, delta=True):
    letters = list(s.atom_names) + (["D"] if delta else [])
    word = " ".join(f"{rng.choice(letters)}^{rng.choice((1, -1))}" for _ in range(length))
    return parse_element(s, word)


def random_positive(s, rng, length=4):
    simples = [a for a in s.simples()]
    return normalize(s, 0, [rng.choice(simples) for _ in range(length)])


@pytest.fixture
def rng():
    return random.Random(12345)


_acceptance_lines = []


def record_criterion(line):
    _acceptance_lines.append(line)


def pytest_terminal_summary(terminalreporter):
    if _acceptance_lines:
        terminalreporter.section("acceptance criteria")
        for line in _acceptance_lines:
            terminalreporter.write_line(line)
