"""Shared fixtures and reference parameter sets."""

import numpy as np
import pytest

from wignerflow import DriveSpec, ideal_squeezed

# squeezing strength giving sigma_x = 1, sigma_p = 1/2
S_HALF = -np.log(2.0) / 2.0


@pytest.fixture
def squeezed_state():
    """The reference squeezed state displaced to x = 4."""
    return ideal_squeezed(4.0, S_HALF)


@pytest.fixture
def fig2_drive():
    """Linear drive with g=5, a=1, b=-1, omega0=1, omega1=2 (Omega=3)."""
    return DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=2.0)


@pytest.fixture
def fig2_state():
    return ideal_squeezed(-2.0, S_HALF)


@pytest.fixture
def resonant_drive():
    """omega1 = -omega0, so Omega = 0 exactly."""
    return DriveSpec.linear(1.0, g=5.0, a=1.0, b=-1.0, omega1=-1.0)
