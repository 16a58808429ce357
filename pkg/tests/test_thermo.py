import math

import numpy as np
import pytest

from qie import (
    EngineParams,
    InfiniteTemperatureError,
    TruncationCapError,
    extracted_work,
    free_energy_bound,
    information_gain,
    joint_distribution,
    measurement_work,
    net_work,
    passive_temperature,
    thermal_work,
    thermo_report,
    tls_populations,
)
from qie.oracle import evolve, initial_state, oracle_measurement_work

PI = math.pi


def _box_draw(rng):
    hw = float(10 ** rng.uniform(-3, 2))
    return EngineParams(
        float(10 ** rng.uniform(-4, 0)),
        float(10 ** rng.uniform(-3, 2)),
        hw,
        float(10 ** rng.uniform(-6, 6)),
        2.0 * PI * float(rng.uniform(1e-3, 1.0)) / hw,
    )


# ---------------------------------------------------------------------------
# measurement work
# ---------------------------------------------------------------------------

def test_measurement_work_zero_time():
    assert measurement_work(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0)) == 0.0


def test_measurement_work_half_period():
    p = EngineParams(0.2, 4.0, 1.5, 0.4, PI / 1.5)  # phi = pi
    b = tls_populations(p).b
    assert measurement_work(p) == pytest.approx(2.0 * b * 0.4, rel=1e-13)


def test_measurement_work_against_brute_force(x_params):
    state0 = initial_state(x_params, 64)
    state_t = evolve(x_params, 64)
    assert measurement_work(x_params) == pytest.approx(
        oracle_measurement_work(state_t, state0), abs=1e-8
    )


def test_measurement_work_symmetry_about_half_period():
    rng = np.random.default_rng(41)
    for _ in range(30):
        hw = float(10 ** rng.uniform(-1, 1))
        phi = float(rng.uniform(0.0, PI))
        p_lo = EngineParams(0.3, 2.0, hw, 0.9, phi / hw)
        p_hi = EngineParams(0.3, 2.0, hw, 0.9, (2.0 * PI - phi) / hw)
        assert measurement_work(p_lo) == pytest.approx(measurement_work(p_hi), abs=1e-12)
        d_lo = joint_distribution(p_lo)
        d_hi = joint_distribution(p_hi)
        assert extracted_work(d_lo) == pytest.approx(extracted_work(d_hi), abs=1e-12)
        assert information_gain(d_lo) == pytest.approx(information_gain(d_hi), abs=1e-12)


# ---------------------------------------------------------------------------
# extracted work
# ---------------------------------------------------------------------------

def test_extracted_work_zero_time_passive():
    dist = joint_distribution(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0))
    assert extracted_work(dist) == 0.0


def test_extracted_work_cold_meter_closed_form():
    p = EngineParams(1e-6, 4.0, 1.5, 0.4, PI / 3)
    dist = joint_distribution(p)
    b = tls_populations(p).b
    expected = 4.0 * b * -math.expm1(-dist.alpha_sq)
    assert extracted_work(dist) == pytest.approx(expected, rel=1e-10)


def test_extracted_work_gives_plateau_efficiency(fig6_params):
    rep = thermo_report(fig6_params)
    assert 1.0 - rep.w_meas / rep.w_ext == pytest.approx(0.57, abs=5e-3)


# ---------------------------------------------------------------------------
# information
# ---------------------------------------------------------------------------

def test_information_zero_cases():
    assert information_gain(joint_distribution(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0))) == (
        pytest.approx(0.0, abs=1e-15)
    )
    assert information_gain(joint_distribution(EngineParams(0.2, 4.0, 1.5, 0.0, 2.0))) == (
        pytest.approx(0.0, abs=1e-15)
    )


def test_information_ratio_at_reference_point(x_params):
    dist = joint_distribution(x_params)
    ratio = extracted_work(dist) / information_gain(dist)
    assert ratio == pytest.approx(0.9266, abs=5e-4)


def test_reset_points_are_clean():
    for k in (1, 2, 3):
        p = EngineParams(0.2, 4.0, 1.5, 0.4, 2.0 * PI * k / 1.5)
        dist = joint_distribution(p)
        assert measurement_work(p) <= 1e-12
        assert extracted_work(dist) <= 1e-12
        assert abs(information_gain(dist)) <= 1e-12


# ---------------------------------------------------------------------------
# net work, bound, thermal work
# ---------------------------------------------------------------------------

def test_net_work_zero_time():
    assert net_work(EngineParams(0.2, 4.0, 1.5, 0.4, 0.0)) == 0.0


def test_net_work_negative_window_at_strong_coupling():
    # one period in, coupling energy dominates the extractable energy
    p = EngineParams(0.1, 4.0, 1.5, 4.0, PI / 1.5)
    assert net_work(p) < 0.0


def test_net_work_positive_in_frozen_meter_regime(fig6_params):
    assert net_work(fig6_params) > 0.0


def test_free_energy_bound_random_draws():
    rng = np.random.default_rng(43)
    checked = 0
    while checked < 400:
        p = _box_draw(rng)
        try:
            dist = joint_distribution(p)
        except TruncationCapError:
            continue
        checked += 1
        info = information_gain(dist)
        assert info >= -1e-12
        assert extracted_work(dist) <= free_energy_bound(dist) + 1e-12


def test_free_energy_bound_asymptotics():
    # frozen meter, huge displacement: w_ext -> dE*b while the bound -> S(0)
    p = EngineParams(1e-6, 4.0, 1.5, 37.5, PI / 1.5)  # alpha_sq = 50
    dist = joint_distribution(p)
    pops = tls_populations(p)
    s0 = -(pops.a * math.log(pops.a) + pops.b * math.log(pops.b))
    assert free_energy_bound(dist) == pytest.approx(s0, rel=1e-6)
    assert extracted_work(dist) == pytest.approx(4.0 * pops.b, rel=1e-6)


def test_thermal_work_identity_and_nonnegativity():
    rng = np.random.default_rng(47)
    checked = 0
    while checked < 100:
        p = _box_draw(rng)
        try:
            dist = joint_distribution(p)
        except TruncationCapError:
            continue
        checked += 1
        wt = thermal_work(dist)
        assert wt >= -1e-12
        assert wt + extracted_work(dist) == pytest.approx(information_gain(dist), abs=1e-12)


def test_thermal_work_share_at_reference_point(x_params):
    dist = joint_distribution(x_params)
    info = information_gain(dist)
    assert thermal_work(dist) == pytest.approx((1.0 - 0.9266) * info, rel=1e-2)


# ---------------------------------------------------------------------------
# passive temperature
# ---------------------------------------------------------------------------

def test_passive_temperature_thermal_state(x_params):
    b = tls_populations(x_params).b
    assert passive_temperature(b, x_params) == pytest.approx(1.0, rel=1e-12)


def test_passive_temperature_both_branches(x_params):
    assert passive_temperature(0.6, x_params) == pytest.approx(4.0 / math.log(1.5), rel=1e-12)
    # passive branch mirrors the inverted one
    assert passive_temperature(0.4, x_params) == passive_temperature(0.6, x_params)


def test_passive_temperature_cold_limit(x_params):
    temps = [passive_temperature(p1, x_params) for p1 in (1e-3, 1e-6, 1e-12)]
    assert temps[0] > temps[1] > temps[2] > 0.0


def test_passive_temperature_rejects_half(x_params):
    with pytest.raises(InfiniteTemperatureError):
        passive_temperature(0.5, x_params)


# ---------------------------------------------------------------------------
# report assembly
# ---------------------------------------------------------------------------

def test_report_fields_consistent(x_params):
    rep = thermo_report(x_params)
    assert rep.w_net == rep.w_ext - rep.w_meas
    assert rep.info == pytest.approx(rep.s0 - rep.s_tm, abs=1e-15)
    assert rep.n_prime == 1
    assert rep.w_meas >= 0.0 and rep.w_ext >= 0.0 and rep.info >= 0.0
    assert rep.w_ext <= rep.info + 1e-12


def test_entropy_shortcut_matches_conditional_spectra(x_params):
    from qie.oracle import outcome_entropy

    rep = thermo_report(x_params)
    state_t = evolve(x_params, 64)
    assert rep.s_tm == pytest.approx(outcome_entropy(state_t), abs=1e-10)
