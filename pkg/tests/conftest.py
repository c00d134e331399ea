import random

import pytest
from hypothesis import settings

from bisectorfields import GF, QQ, Line, Quadrilateral
from bisectorfields.errors import InvalidQuadrilateral

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

# Filled by test_acceptance.py; echoed once at the end of the run.
ACCEPTANCE_KEY = pytest.StashKey[dict]()


def _order(key):
    return (0, int(key), "") if key.isdigit() else (1, 0, key)


def pytest_configure(config):
    config.stash[ACCEPTANCE_KEY] = {}


def pytest_terminal_summary(terminalreporter):
    lines = terminalreporter.config.stash.get(ACCEPTANCE_KEY, {})
    if not lines:
        return
    terminalreporter.section("acceptance criteria")
    for key in sorted(lines, key=_order):
        terminalreporter.write_line(lines[key])


@pytest.fixture
def acceptance(request):
    """``acceptance(key, ok, detail)`` records one PASS/FAIL line, then asserts."""
    store = request.config.stash[ACCEPTANCE_KEY]

    def record(key, ok, detail):
        line = f"[ACCEPTANCE {key}] {'PASS' if ok else 'FAIL'}: {detail}"
        store[str(key)] = line
        print(line)
        assert ok, line

    return record


def running_example(field=QQ):
    """A: Y=0, B: X-Y+1=0, A1: X=0, B1: 2X-Y-1=0."""
    return Quadrilateral(
        Line.of(0, 1, 0, field),
        Line.of(1, 1, 1, field),
        Line.of(1, 0, 0, field),
        Line.of(2, 1, -1, field),
    )


def random_line(field, rng, bound=9):
    def draw():
        if field.is_prime:
            return rng.randrange(field.p)
        return rng.randint(-bound, bound)

    if rng.random() < 0.15:
        return Line.of(1, 0, draw(), field)
    return Line.of(draw(), 1, draw(), field)


def random_quadrilateral(field, rng):
    while True:
        try:
            return Quadrilateral(*(random_line(field, rng) for _ in range(4)))
        except InvalidQuadrilateral:
            continue


@pytest.fixture
def rng():
    return random.Random(20240607)


@pytest.fixture
def example_q():
    return running_example()


@pytest.fixture(params=[3, 5, 7, 11, 13])
def small_field(request):
    return GF(request.param)
