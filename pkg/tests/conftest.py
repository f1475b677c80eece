import random

import pytest

from prsig import CurveGroup, MockGroup


class ScriptedRng:
    """Randomness stub: randrange pops pre-scripted values in order."""

    def __init__(self, values):
        self.values = list(values)

    def randrange(self, n):
        if not self.values:
            raise AssertionError("scripted rng exhausted")
        v = self.values.pop(0)
        if not 0 <= v < n:
            raise AssertionError(f"scripted value {v} out of range for randrange({n})")
        return v


@pytest.fixture
def mock_ctx():
    return MockGroup(101)


@pytest.fixture(scope="session")
def curve_ctx():
    return CurveGroup()


@pytest.fixture
def rng():
    return random.Random(0xC0FFEE)


def values(sig):
    """Exponent view of a mock-backend signature."""
    return [e.left for e in sig.elems]


@pytest.fixture
def mock_values():
    return values
