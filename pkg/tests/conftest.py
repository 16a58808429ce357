import math

import pytest

from qie import EngineParams

PI = math.pi


@pytest.fixture
def x_params() -> EngineParams:
    """Reference operating point: T_M/T_S=0.2, dE=4, hw=1.5, g^2=0.4, wt_m=pi/2."""
    return EngineParams(0.2, 4.0, 1.5, 0.4, PI / 3)


@pytest.fixture
def fig6_params() -> EngineParams:
    """Same knobs as x_params but effectively frozen meter (T_M/T_S = 1e-6)."""
    return EngineParams(1e-6, 4.0, 1.5, 0.4, PI / 3)


@pytest.fixture
def fig2_params() -> EngineParams:
    """Strong-coupling soft-meter point: dE = kB TS = g^2, hw = 0.1 dE, T ratio 0.3."""
    return EngineParams(0.3, 1.0, 0.1, 1.0, 5.0 * PI)
