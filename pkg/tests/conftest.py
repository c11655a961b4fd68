import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20260811)


def tiefree_series(rng, n):
    """A series whose windows are almost surely tie-free and non-monotone."""
    return rng.standard_normal(n)
