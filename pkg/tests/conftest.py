import numpy as np
import pytest

from qha.rng import make_rng


@pytest.fixture
def rng():
    return make_rng(20240611)


def rel(a, b):
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.linalg.norm(a - b) / max(np.linalg.norm(b), 1e-300))
