import math

import numpy as np
import pytest

from qie import (
    EngineParams,
    Regime,
    TailMassError,
    ThermoReport,
    TruncationCapError,
    ZeroMeasurementTimeError,
    classify_regime,
    information_efficiency,
    metrics_report,
    power,
    power_star,
    reference_efficiencies,
    thermo_efficiency,
    thermo_report,
)

PI = math.pi
TABLE_TIME_UNIT = 2.0 * PI  # published operating points quote power per 2pi/Omega


def _report(**kw):
    base = dict(w_meas=0.0, w_ext=0.0, w_net=0.0, info=0.0, s0=0.1, s_tm=0.1,
                n_prime=None, tail_mass=0.0)
    base.update(kw)
    return ThermoReport(**base)


# ---------------------------------------------------------------------------
# information efficiency
# ---------------------------------------------------------------------------

def test_eta_info_guard_at_zero_information():
    assert information_efficiency(_report(info=0.0)) == 0.0
    assert information_efficiency(_report(info=1e-16, w_ext=1e-17)) == 0.0


def test_eta_info_reference_point(x_params):
    rep = thermo_report(x_params)
    assert information_efficiency(rep) == pytest.approx(0.9266, abs=5e-4)


def test_eta_info_approaches_unity_cold_meter():
    rep = thermo_report(EngineParams(1e-3, 4.0, 1.5, 0.4, PI / 3))
    assert information_efficiency(rep) > 0.96


def test_eta_info_bounded_random_draws():
    rng = np.random.default_rng(53)
    checked = 0
    while checked < 300:
        hw = float(10 ** rng.uniform(-3, 2))
        p = EngineParams(
            float(10 ** rng.uniform(-4, 0)),
            float(10 ** rng.uniform(-3, 2)),
            hw,
            float(10 ** rng.uniform(-6, 6)),
            2.0 * PI * float(rng.uniform(1e-3, 1.0)) / hw,
        )
        try:
            rep = thermo_report(p)
        except TruncationCapError:
            continue
        checked += 1
        eta = information_efficiency(rep)
        assert 0.0 <= eta <= 1.0
        eta_he = thermo_efficiency(rep)
        if eta_he is not None:
            assert 0.0 <= eta_he <= 1.0


# ---------------------------------------------------------------------------
# power
# ---------------------------------------------------------------------------

def test_power_is_net_work_per_time(x_params):
    rep = thermo_report(x_params)
    assert power(x_params, rep) * x_params.tau == rep.w_net


def test_power_zero_time_error():
    with pytest.raises(ZeroMeasurementTimeError):
        power(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0))


def test_power_reference_point_in_table_units(x_params):
    # the published operating point quotes 0.045 with time in 2pi/Omega units
    assert TABLE_TIME_UNIT * power(x_params) == pytest.approx(0.045, rel=0.10)


def test_power_tiny_at_zeno_phase():
    p_fast = EngineParams(0.2, 4.0, 1.5, 0.4, 2.0 * PI * 1e-6 / 1.5)
    p_quarter = EngineParams(0.2, 4.0, 1.5, 0.4, (PI / 2) / 1.5)
    assert abs(power(p_fast)) * 1e3 < abs(power(p_quarter))


def test_power_star_limits(x_params):
    rep = thermo_report(x_params)
    # tau >> pi/delta_e restores the uncorrected power
    slow = EngineParams(0.2, 4.0, 1.5, 0.4, 2000.0 * PI)
    rep_slow = thermo_report(slow)
    assert power_star(slow, rep_slow) == pytest.approx(power(slow, rep_slow), rel=1e-3)
    # tau = pi/delta_e halves it
    matched = EngineParams(0.2, 4.0, 1.5, 0.4, PI / 4.0)
    rep_m = thermo_report(matched)
    assert power_star(matched, rep_m) == pytest.approx(0.5 * power(matched, rep_m), rel=1e-12)
    # strictly below whenever power is positive
    assert power_star(x_params, rep) < power(x_params, rep)
    assert math.copysign(1.0, power_star(x_params, rep)) == math.copysign(1.0, power(x_params, rep))


# ---------------------------------------------------------------------------
# thermodynamic efficiency and references
# ---------------------------------------------------------------------------

def test_thermo_efficiency_free_measurement():
    assert thermo_efficiency(_report(w_ext=1.0, w_net=1.0)) == 1.0


def test_thermo_efficiency_absent_outside_heat_engine():
    assert thermo_efficiency(_report(w_meas=2.0, w_ext=1.0, w_net=-1.0)) is None
    assert thermo_efficiency(_report()) is None


def test_thermo_efficiency_reference_point(x_params):
    assert thermo_efficiency(thermo_report(x_params)) == pytest.approx(0.5102, abs=2e-4)


def test_reference_efficiencies():
    assert reference_efficiencies(1.0) == (0.0, 0.0)
    assert reference_efficiencies(0.04) == pytest.approx((0.96, 0.8))
    eta_c, eta_ca = reference_efficiencies(0.2)
    assert eta_c == pytest.approx(0.8)
    assert eta_ca == pytest.approx(0.552786, abs=1e-6)


# ---------------------------------------------------------------------------
# regime classification
# ---------------------------------------------------------------------------

def test_regime_idle_at_zero_time():
    rep = thermo_report(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0))
    assert classify_regime(rep) is Regime.IDLE


def test_regime_heat_valve_strong_coupling():
    rep = thermo_report(EngineParams(0.1, 4.0, 1.5, 40.0, PI / 1.5))
    assert classify_regime(rep) is Regime.HEAT_VALVE


def test_regime_heat_engine_low_temperature():
    rep = thermo_report(EngineParams(0.05, 4.0, 1.5, 0.4, PI / 3))
    assert classify_regime(rep) is Regime.HEAT_ENGINE


# ---------------------------------------------------------------------------
# assembled report
# ---------------------------------------------------------------------------

def test_metrics_report_reference_point(x_params):
    met = metrics_report(x_params)
    assert met.regime is Regime.HEAT_ENGINE
    assert met.eta_he == pytest.approx(0.5102, abs=2e-4)
    assert met.eta_info == pytest.approx(0.9266, abs=5e-4)
    assert met.power_star <= met.power
    assert met.eta_carnot == pytest.approx(0.8)


def test_metrics_report_zero_time_idle():
    met = metrics_report(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0))
    assert met.regime is Regime.IDLE
    assert met.power == 0.0 and met.power_star == 0.0
    assert met.eta_he is None
    assert met.eta_info == 0.0


def test_metrics_report_refuses_fat_tail(x_params):
    rep = thermo_report(x_params)
    fat = ThermoReport(**{**rep.__dict__, "tail_mass": 1e-6})
    with pytest.raises(TailMassError):
        metrics_report(x_params, fat)
