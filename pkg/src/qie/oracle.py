"""Brute-force reference: exact unitary evolution on a truncated Fock space.

Everything closed-form elsewhere in the package is validated against the
eigendecomposition of the full coupled Hamiltonian here. This module is a
desk-scale validation tool, never a production path; the hard dimension
cap keeps it that way.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional, Tuple

import numpy as np
from scipy.linalg import eigh

from .core import EngineParams, meter_boltzmann_factor, tls_populations
from .displaced_fock import alpha_sq
from .errors import ParameterError, TruncationLeakError
from .thermo import binary_entropy

DIM_CAP = 512
LEAK_THRESHOLD = 1e-10


@dataclass(frozen=True)
class TruncatedState:
    """Density matrix of TLS x meter on a truncated Fock space.

    Basis ordering is |i> x |n| -> index i * dim_meter + n, so the first
    dim_meter rows are the ground-TLS sector.
    """

    dim_meter: int
    rho: np.ndarray
    params: EngineParams

    def __post_init__(self):
        self.rho.setflags(write=False)


def default_dim_meter(params: EngineParams) -> int:
    """Truncation sized to hold the thermal plus displaced occupation.

    The geometric-tail term matters for warm meters, where the thermal
    occupation decays too slowly for a fixed headroom to pass the
    leak check.
    """
    q = meter_boltzmann_factor(params)
    nbar = q / (1.0 - q)
    geometric = 0.0 if q == 0.0 else math.log(1e-12) / math.log(q)
    x = alpha_sq(params)
    dim = int(math.ceil(nbar + x + 10.0 * math.sqrt(x + 1.0) + geometric)) + 20
    return min(dim, DIM_CAP)


def _ladder(dim: int) -> Tuple[np.ndarray, np.ndarray]:
    raise_op = np.diag(np.sqrt(np.arange(1, dim)), -1)
    lower_op = np.diag(np.sqrt(np.arange(1, dim)), 1)
    return raise_op, lower_op


def bare_hamiltonian(params: EngineParams, dim_meter: int) -> np.ndarray:
    """H_S + H_M: the uncoupled part, used for energy bookkeeping."""
    n = np.arange(dim_meter)
    h_m = params.hbar_omega * (n + 0.5)
    diag = np.concatenate([h_m, params.delta_e + h_m])
    return np.diag(diag).astype(complex)


def build_hamiltonian(params: EngineParams, dim_meter: int) -> np.ndarray:
    """Full coupled Hamiltonian during the measurement window.

    The coupling acts on the excited-TLS sector only, as
    i sqrt(g_eff^2 hw / 2) (a^dag - a); exactly Hermitian by construction.
    """
    if dim_meter < 2:
        raise ParameterError("dim_meter", f"must be >= 2, got {dim_meter}")
    h = bare_hamiltonian(params, dim_meter)
    raise_op, lower_op = _ladder(dim_meter)
    c = math.sqrt(params.g_eff_sq * params.hbar_omega / 2.0)
    h[dim_meter:, dim_meter:] += 1j * c * (raise_op - lower_op)
    return h


def initial_state(params: EngineParams, dim_meter: int) -> TruncatedState:
    """Product of TLS and meter thermal states, normalized on the truncation."""
    pops = tls_populations(params)
    q = meter_boltzmann_factor(params)
    if q > 0.0:
        w = q ** np.arange(dim_meter)
        w /= w.sum()
    else:
        w = np.zeros(dim_meter)
        w[0] = 1.0
    diag = np.concatenate([pops.a * w, pops.b * w])
    return TruncatedState(dim_meter, np.diag(diag).astype(complex), params)


def evolve(params: EngineParams, dim_meter: Optional[int] = None) -> TruncatedState:
    """rho(t_m) by eigendecomposition of the time-independent coupled H.

    Raises :class:`~qie.errors.TruncationLeakError` if the top two meter
    levels pick up more than 1e-10 population, i.e. the box was too small.
    """
    if dim_meter is None:
        dim_meter = default_dim_meter(params)
    state0 = initial_state(params, dim_meter)
    h = build_hamiltonian(params, dim_meter)
    energies, modes = eigh(h)
    u = (modes * np.exp(-1j * energies * params.tau)) @ modes.conj().T
    rho_t = u @ state0.rho @ u.conj().T
    rho_t = 0.5 * (rho_t + rho_t.conj().T)
    occ = np.real(np.diag(rho_t))
    top = occ[dim_meter - 2 : dim_meter].sum() + occ[2 * dim_meter - 2 :].sum()
    if top > LEAK_THRESHOLD:
        raise TruncationLeakError(
            f"top-level occupation {top:.3e} exceeds {LEAK_THRESHOLD:.0e} "
            f"at dim_meter={dim_meter}"
        )
    return TruncatedState(dim_meter, rho_t, params)


def oracle_measurement_work(state_tm: TruncatedState, state_0: TruncatedState) -> float:
    """tr{(H_S + H_M)(rho(t_m) - rho(0))}."""
    if state_tm.dim_meter != state_0.dim_meter:
        raise ParameterError("dim_meter", "states have mismatched truncations")
    h0 = bare_hamiltonian(state_tm.params, state_tm.dim_meter)
    delta = state_tm.rho - state_0.rho
    return float(np.real(np.trace(h0 @ delta)))


def joint_diagonals(state: TruncatedState) -> Tuple[np.ndarray, np.ndarray]:
    """(P(0, n), P(1, n)) read off the density-matrix diagonal."""
    d = np.real(np.diag(state.rho))
    return d[: state.dim_meter].copy(), d[state.dim_meter :].copy()


def outcome_entropy(state: TruncatedState) -> float:
    """S(t) = sum_n P(n) S(rho_S(t|n)) from the 2x2 conditional blocks.

    Computed from the exact conditional density matrices (including any
    off-diagonals), which validates the binary-entropy shortcut used by
    the closed-form pipeline.
    """
    dim = state.dim_meter
    total = 0.0
    for n in range(dim):
        block = np.array(
            [
                [state.rho[n, n], state.rho[n, dim + n]],
                [state.rho[dim + n, n], state.rho[dim + n, dim + n]],
            ]
        )
        p_n = float(np.real(np.trace(block)))
        if p_n <= 1e-300:
            continue
        eigvals = np.linalg.eigvalsh(block / p_n)
        s_n = float(-sum(v * math.log(v) for v in eigvals if v > 0.0))
        total += p_n * s_n
    return total


def oracle_information(state_tm: TruncatedState) -> float:
    """S(0) - S(t_m); the initial entropy is the TLS binary entropy."""
    pops = tls_populations(state_tm.params)
    return binary_entropy(pops.b) - outcome_entropy(state_tm)


def oracle_extracted_work(state_tm: TruncatedState) -> float:
    """Outcome-averaged ergotropy from the evolved diagonals."""
    p0, p1 = joint_diagonals(state_tm)
    diff = p1 - p0
    return float(state_tm.params.delta_e * np.where(diff > 0.0, diff, 0.0).sum())
