import numpy as np
import pytest

from zetageom import scan_zeros


@pytest.fixture(scope="session")
def zeros_below_1200():
    """Every critical-line zero in (10, 1200)."""
    return scan_zeros(10.0, 1200.0)


@pytest.fixture(scope="session")
def zeros_1100_1200(zeros_below_1200):
    return [r for r in zeros_below_1200 if 1100.0 < r.alpha < 1200.0]


@pytest.fixture(scope="session")
def zeros_np108():
    """Zeros in a window where sqrt(t/2pi) has integer part 108."""
    return scan_zeros(73290.0, 73430.0)


@pytest.fixture(scope="session")
def first20_zeros(zeros_below_1200):
    return np.array([r.alpha for r in zeros_below_1200[:20]])
