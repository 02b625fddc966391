import pytest
from hypothesis import settings

from softtopo import (
    SoftSet,
    SoftTopology,
    discrete,
    indiscrete,
    parse_signature,
)

settings.register_profile("suite", deadline=None, max_examples=50)
settings.load_profile("suite")


SIG32 = parse_signature({"universe": ["h1", "h2", "h3"], "parameters": ["e1", "e2"]})
SIG21 = parse_signature({"universe": ["h1", "h2"], "parameters": ["e1"]})
SIG11 = parse_signature({"universe": ["h1"], "parameters": ["e1"]})


def example_topology() -> SoftTopology:
    """Three opens over a 3x2 signature; the smallest space where semiopen != open."""
    f1 = SoftSet.from_rows(SIG32, {"e1": ["h1", "h2"], "e2": ["h1"]})
    return SoftTopology(
        SIG32, [SoftSet(SIG32, 0), f1, SoftSet(SIG32, SIG32.full_mask)]
    )


@pytest.fixture(scope="session")
def sig32():
    return SIG32


@pytest.fixture(scope="session")
def sig21():
    return SIG21


@pytest.fixture(scope="session")
def example_space():
    return example_topology()


@pytest.fixture(scope="session")
def f1(example_space):
    return SoftSet.from_rows(SIG32, {"e1": ["h1", "h2"], "e2": ["h1"]})


@pytest.fixture(scope="session")
def g0():
    # nonnull set with null interior: its semi-closure is the whole space
    return SoftSet.from_rows(SIG32, {"e1": ["h1"], "e2": []})


@pytest.fixture(scope="session")
def discrete21():
    return discrete(SIG21)


@pytest.fixture(scope="session")
def indiscrete21():
    return indiscrete(SIG21)
