"""Benchmark the numba kernels against the pure-numpy fallback.

Run with ``python -m qie.benchmarks``. Regardless of the QIE_NO_NUMBA
flag this times both backends (when numba is importable) on identical
workloads and reports the agreement between them.

Usage:
    python -m qie.benchmarks [--repeat N]
"""

from __future__ import annotations

import argparse
import math
import time

import numpy as np

from . import _kernels

WORKLOADS = [
    # (label, x=|alpha|^2, beta_M*hbar_omega, n_max)
    ("cold meter, small displacement", 0.27, 7.5, 60),
    ("cold meter, large displacement", 50.0, 7.5, 180),
    ("warm meter", 2.0, 0.5, 400),
    ("hot soft meter", 10.0, 0.02, 4000),
]


def _time(fn, repeat):
    best = math.inf
    for _ in range(repeat):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def _bench_diagonal(repeat):
    print("displaced-thermal Fock diagonal (closed form)")
    header = f"{'workload':32s} {'numpy':>10s} {'numba':>10s} {'speedup':>8s} {'max|diff|':>10s}"
    print(header)
    for label, x, bmhw, n_max in WORKLOADS:
        q = math.exp(-bmhw)
        t_np = _time(lambda: _kernels.displaced_thermal_logpmf_numpy(x, q, n_max), repeat)
        row = f"{label:32s} {t_np * 1e3:9.3f}ms"
        if _kernels.HAVE_NUMBA:
            _kernels.displaced_thermal_logpmf_numba(x, q, n_max)  # JIT warmup
            t_nb = _time(lambda: _kernels.displaced_thermal_logpmf_numba(x, q, n_max), repeat)
            a = _kernels.displaced_thermal_logpmf_numpy(x, q, n_max)
            b = _kernels.displaced_thermal_logpmf_numba(x, q, n_max)
            diff = float(np.max(np.abs(np.exp(a) - np.exp(b))))
            row += f" {t_nb * 1e3:9.3f}ms {t_np / t_nb:7.1f}x {diff:10.2e}"
        else:
            row += "     (numba unavailable)"
        print(row)


def _bench_mixture(repeat):
    print("\nthermal mixture of displacement probabilities (cross-check path)")
    for label, x, bmhw, n_max in WORKLOADS[:3]:
        q = math.exp(-bmhw)
        m_top = max(0, int(math.ceil(math.log(1e-13) / math.log(q))))
        t_np = _time(lambda: _kernels.mixture_diagonals_numpy(x, q, n_max, m_top), repeat)
        row = f"{label:32s} {t_np * 1e3:9.3f}ms"
        if _kernels.HAVE_NUMBA:
            _kernels.mixture_diagonals_numba(x, q, n_max, m_top)
            t_nb = _time(lambda: _kernels.mixture_diagonals_numba(x, q, n_max, m_top), repeat)
            a = _kernels.mixture_diagonals_numpy(x, q, n_max, m_top)
            b = _kernels.mixture_diagonals_numba(x, q, n_max, m_top)
            diff = float(np.max(np.abs(a - b)))
            row += f" {t_nb * 1e3:9.3f}ms {t_np / t_nb:7.1f}x {diff:10.2e}"
        print(row)


def _bench_displacement_prob(repeat):
    print("\nsingle displacement probabilities |<n|D|m>|^2")
    cases = [(5, 2, 0.5), (120, 40, 25.0), (900, 100, 800.0)]

    def run(fn):
        return lambda: [fn(n, m, x) for n, m, x in cases for _ in range(200)]

    t_np = _time(run(_kernels.displacement_prob_numpy), repeat)
    row = f"{'600 mixed-index evaluations':32s} {t_np * 1e3:9.3f}ms"
    if _kernels.HAVE_NUMBA:
        _kernels.displacement_prob_numba(5, 2, 0.5)
        t_nb = _time(run(_kernels.displacement_prob_numba), repeat)
        diff = max(
            abs(_kernels.displacement_prob_numpy(n, m, x)
                - _kernels.displacement_prob_numba(n, m, x))
            for n, m, x in cases
        )
        row += f" {t_nb * 1e3:9.3f}ms {t_np / t_nb:7.1f}x {diff:10.2e}"
    print(row)


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--repeat", type=int, default=5, help="timing repetitions")
    args = parser.parse_args(argv)
    print(f"active backend: {_kernels.backend_name()} "
          f"(QIE_NO_NUMBA toggles the fallback)\n")
    _bench_diagonal(args.repeat)
    _bench_mixture(args.repeat)
    _bench_displacement_prob(args.repeat)


if __name__ == "__main__":
    main()
