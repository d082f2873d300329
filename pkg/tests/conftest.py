import numpy as np
import pytest


@pytest.fixture
def rng():
    return np.random.default_rng(20240811)


def mrel(A, B):
    """Relative max-norm deviation between two arrays."""
    A, B = np.asarray(A), np.asarray(B)
    return float(np.abs(A - B).max() / max(1e-300, np.abs(A).max(), np.abs(B).max()))


def rel(a, b):
    return abs(a - b) / max(abs(a), abs(b), 1e-300)
