import math

import numpy as np
import pytest

from qie import EngineParams, ParameterError, phase, tls_populations, validate_params


def test_validate_accepts_reference_point():
    p = validate_params(0.2, 4.0, 1.5, 0.4, 1.0472)
    assert isinstance(p, EngineParams)
    assert p.delta_e == 4.0


@pytest.mark.parametrize(
    "kwargs, field",
    [
        (dict(temp_ratio=0.0), "temp_ratio"),
        (dict(temp_ratio=1.2), "temp_ratio"),
        (dict(delta_e=-1.0), "delta_e"),
        (dict(delta_e=0.0), "delta_e"),
        (dict(hbar_omega=0.0), "hbar_omega"),
        (dict(g_eff_sq=-0.1), "g_eff_sq"),
        (dict(tau=-0.5), "tau"),
        (dict(delta_e=math.nan), "delta_e"),
        (dict(hbar_omega=math.inf), "hbar_omega"),
    ],
)
def test_validate_rejects_and_names_field(kwargs, field):
    base = dict(temp_ratio=0.2, delta_e=4.0, hbar_omega=1.5, g_eff_sq=0.4, tau=1.0)
    base.update(kwargs)
    with pytest.raises(ParameterError) as err:
        validate_params(**base)
    assert err.value.field == field


def test_populations_degenerate_and_saturated():
    p = EngineParams(0.5, 1e-12, 1.0, 0.0, 0.0)
    pops = tls_populations(p)
    assert pops.a == pytest.approx(0.5, abs=1e-12)
    assert pops.b == pytest.approx(0.5, abs=1e-12)
    p = EngineParams(0.5, 100.0, 1.0, 0.0, 0.0)
    pops = tls_populations(p)
    assert pops.a == pytest.approx(1.0, abs=1e-12)
    assert pops.b == pytest.approx(0.0, abs=1e-12)


def test_populations_at_delta_e_four():
    pops = tls_populations(EngineParams(0.2, 4.0, 1.5, 0.4, 1.0))
    assert pops.a == pytest.approx(0.982014, abs=5e-7)
    assert pops.b == pytest.approx(0.017986, abs=5e-7)
    assert pops.a + pops.b == pytest.approx(1.0, abs=1e-15)


def test_population_sum_and_ordering_random_draws():
    rng = np.random.default_rng(11)
    for _ in range(200):
        # strict a < 1 only holds while b stays representable (dE < ~36)
        p = EngineParams(
            float(10 ** rng.uniform(-4, 0)),
            float(10 ** rng.uniform(-3, 1.5)),
            float(10 ** rng.uniform(-3, 2)),
            float(10 ** rng.uniform(-6, 6)),
            float(rng.uniform(0.0, 10.0)),
        )
        pops = tls_populations(p)
        assert abs(pops.a + pops.b - 1.0) <= 1e-15
        assert 0.0 < pops.b <= 0.5 <= pops.a < 1.0
    # saturated regime: the sum identity still holds exactly
    pops = tls_populations(EngineParams(0.5, 100.0, 1.0, 0.0, 0.0))
    assert pops.a + pops.b == pytest.approx(1.0, abs=1e-15)
    assert pops.b > 0.0


def test_phase_is_the_product():
    assert phase(EngineParams(0.2, 4.0, 1.5, 0.4, math.pi / 3)) == pytest.approx(math.pi / 2)
    assert phase(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0)) == 0.0
    # operating-point disambiguation uses this product form
    assert phase(EngineParams(0.2, 4.0, 0.631569, 0.4, 9.927e-3)) == pytest.approx(
        6.270e-3, rel=1e-3
    )


def test_phase_linear_in_tau():
    rng = np.random.default_rng(3)
    for _ in range(50):
        hw = float(10 ** rng.uniform(-3, 2))
        tau = float(rng.uniform(0.0, 5.0))
        k = float(rng.uniform(0.1, 7.0))
        lhs = phase(EngineParams(0.5, 1.0, hw, 0.0, k * tau))
        rhs = k * phase(EngineParams(0.5, 1.0, hw, 0.0, tau))
        assert lhs == pytest.approx(rhs, rel=1e-12, abs=1e-300)
