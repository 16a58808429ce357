"""Multi-objective optimization of the engine: dominance primitives,
non-dominated sorting, crowding, a controlled-elitist NSGA-II, and the
engine-specific objective problems.

Conventions: objectives are minimized internally; the engine problems
negate the metrics they maximize. Constraint handling is by constraint
domination (any feasible point beats any infeasible one, smaller violation
beats larger), so objective scales never mix with violations. Runs are
deterministic given the seed, and worker count only parallelizes the pure
objective evaluations, so results are bit-identical for any worker count.
"""

from __future__ import annotations

import enum
import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Callable, NamedTuple, Optional, Sequence, Tuple

import numpy as np

from .core import OPTIMIZER_BOUNDS, EngineParams
from .errors import EvaluationBudgetError, ParameterError, TruncationCapError
from .metrics import information_efficiency
from .thermo import thermo_report

CAP_VIOLATION = 1e18  # constraint violation assigned to truncation-cap failures


class Pair(enum.Enum):
    POWER_VS_ETA_HE = "power_vs_eta_he"
    POWER_STAR_VS_ETA_HE = "power_star_vs_eta_he"
    POWER_VS_ETA_INFO = "power_vs_eta_info"


class Orientation(enum.Enum):
    MAX_MAX = "max_max"
    MAX_POWER_MIN_EFF = "max_power_min_eff"


@dataclass(frozen=True)
class ObjectiveVector:
    """Internally-minimized objectives plus a constraint-violation magnitude."""

    values: Tuple[float, ...]
    feasibility: float = 0.0

    def __post_init__(self):
        if any(not math.isfinite(v) for v in self.values):
            raise ParameterError("values", f"objectives must be finite, got {self.values}")
        if self.feasibility < 0.0:
            raise ParameterError("feasibility", "violation magnitude must be >= 0")


class PointEval(NamedTuple):
    """One objective evaluation: minimized objectives, violation, raw metrics."""

    objectives: Tuple[float, ...]
    violation: float
    raw: Tuple[float, ...]
    params: Optional[EngineParams]


@dataclass(frozen=True)
class Problem:
    name: str
    lower: np.ndarray
    upper: np.ndarray
    evaluate: Callable[[np.ndarray], PointEval]
    objective_names: Tuple[str, ...]
    raw_names: Tuple[str, ...]
    hv_reference: Tuple[float, ...]


@dataclass(frozen=True)
class GaConfig:
    population: int = 200
    generations: int = 400
    crossover_prob: float = 0.9
    crossover_index: float = 15.0
    mutation_prob: float = 0.2
    mutation_index: float = 20.0
    elite_fraction: float = 0.35
    seed: int = 1

    def __post_init__(self):
        if self.population < 8 or self.population % 2:
            raise ParameterError("population", f"must be even and >= 8, got {self.population}")
        if self.generations < 1:
            raise ParameterError("generations", "must be >= 1")
        for name in ("crossover_prob", "mutation_prob"):
            p = getattr(self, name)
            if not 0.0 <= p <= 1.0:
                raise ParameterError(name, f"must be in [0, 1], got {p}")
        if not 0.0 < self.elite_fraction <= 1.0:
            raise ParameterError("elite_fraction", "must be in (0, 1]")


@dataclass(frozen=True)
class FrontPoint:
    x: Tuple[float, ...]
    objectives: ObjectiveVector
    raw: Tuple[float, ...]
    params: Optional[EngineParams]


@dataclass(frozen=True)
class ParetoFront:
    points: Tuple[FrontPoint, ...]
    seed: int
    generations: int
    evaluations: int
    hypervolume: float
    hv_reference: Tuple[float, ...]
    problem: str
    raw_names: Tuple[str, ...] = field(default=())


# ---------------------------------------------------------------------------
# dominance primitives
# ---------------------------------------------------------------------------

def dominates(y: ObjectiveVector, y2: ObjectiveVector) -> bool:
    """Constraint-dominated Pareto order: True iff ``y`` beats ``y2``."""
    if len(y.values) != len(y2.values):
        raise ParameterError("values", "objective vectors have different lengths")
    if y.feasibility != y2.feasibility:
        return y.feasibility < y2.feasibility
    le = all(a <= b for a, b in zip(y.values, y2.values))
    lt = any(a < b for a, b in zip(y.values, y2.values))
    return le and lt


def _dominance_matrix(f: np.ndarray, v: np.ndarray) -> np.ndarray:
    """D[i, j] = individual i dominates individual j."""
    le = (f[:, None, :] <= f[None, :, :]).all(axis=2)
    lt = (f[:, None, :] < f[None, :, :]).any(axis=2)
    obj_dom = le & lt
    vi, vj = v[:, None], v[None, :]
    return (vi < vj) | ((vi == vj) & obj_dom)


def _fast_non_dominated_sort(f: np.ndarray, v: np.ndarray):
    """Rank partition; returns (list of index arrays, rank array)."""
    n = f.shape[0]
    dom = _dominance_matrix(f, v)
    n_dominators = dom.sum(axis=0).astype(np.int64)
    ranks = np.full(n, -1, dtype=np.int64)
    fronts = []
    current = np.flatnonzero(n_dominators == 0)
    rank = 0
    while current.size:
        ranks[current] = rank
        fronts.append(current)
        n_dominators[current] = -1
        n_dominators -= dom[current, :].sum(axis=0)
        current = np.flatnonzero(n_dominators == 0)
        rank += 1
    return fronts, ranks


def non_dominated_sort(points: Sequence[ObjectiveVector]):
    """Partition indices into fronts; rank 0 is the non-dominated set."""
    if not points:
        return []
    f = np.array([p.values for p in points], dtype=float)
    v = np.array([p.feasibility for p in points], dtype=float)
    fronts, _ = _fast_non_dominated_sort(f, v)
    return [list(map(int, fr)) for fr in fronts]


def _crowding(f: np.ndarray) -> np.ndarray:
    """Normalized neighbor-gap sums; boundary points get +inf."""
    m = f.shape[0]
    dist = np.zeros(m)
    if m <= 2:
        dist[:] = np.inf
        return dist
    for col in range(f.shape[1]):
        order = np.argsort(f[:, col], kind="stable")
        vals = f[order, col]
        dist[order[0]] = np.inf
        dist[order[-1]] = np.inf
        span = vals[-1] - vals[0]
        if span > 0.0:
            gaps = (vals[2:] - vals[:-2]) / span
            interior = order[1:-1]
            finite = np.isfinite(dist[interior])
            dist[interior[finite]] += gaps[finite]
    return dist


def crowding_distance(front: Sequence[ObjectiveVector]) -> np.ndarray:
    """Crowding distances for the members of a single front."""
    if not front:
        return np.zeros(0)
    return _crowding(np.array([p.values for p in front], dtype=float))


# ---------------------------------------------------------------------------
# variation operators
# ---------------------------------------------------------------------------

def _sbx_pair(p1, p2, lower, upper, eta, rng):
    """Bounded simulated binary crossover on one parent pair."""
    c1, c2 = p1.copy(), p2.copy()
    for i in range(len(p1)):
        if rng.random() > 0.5:
            continue
        y1, y2 = (p1[i], p2[i]) if p1[i] <= p2[i] else (p2[i], p1[i])
        if y2 - y1 < 1e-14:
            continue
        lo, hi = lower[i], upper[i]
        u = rng.random()
        beta = 1.0 + 2.0 * (y1 - lo) / (y2 - y1)
        alpha = 2.0 - beta ** -(eta + 1.0)
        if u <= 1.0 / alpha:
            betaq = (u * alpha) ** (1.0 / (eta + 1.0))
        else:
            betaq = (1.0 / (2.0 - u * alpha)) ** (1.0 / (eta + 1.0))
        child1 = 0.5 * ((y1 + y2) - betaq * (y2 - y1))
        beta = 1.0 + 2.0 * (hi - y2) / (y2 - y1)
        alpha = 2.0 - beta ** -(eta + 1.0)
        if u <= 1.0 / alpha:
            betaq = (u * alpha) ** (1.0 / (eta + 1.0))
        else:
            betaq = (1.0 / (2.0 - u * alpha)) ** (1.0 / (eta + 1.0))
        child2 = 0.5 * ((y1 + y2) + betaq * (y2 - y1))
        if rng.random() > 0.5:
            child1, child2 = child2, child1
        c1[i] = min(max(child1, lo), hi)
        c2[i] = min(max(child2, lo), hi)
    return c1, c2


def _polynomial_mutation(x, lower, upper, prob, eta, rng):
    y = x.copy()
    for i in range(len(x)):
        if rng.random() >= prob:
            continue
        lo, hi = lower[i], upper[i]
        span = hi - lo
        if span <= 0.0:
            continue
        u = rng.random()
        if u < 0.5:
            xy = 1.0 - (y[i] - lo) / span
            val = 2.0 * u + (1.0 - 2.0 * u) * xy ** (eta + 1.0)
            delta = val ** (1.0 / (eta + 1.0)) - 1.0
        else:
            xy = 1.0 - (hi - y[i]) / span
            val = 2.0 * (1.0 - u) + 2.0 * (u - 0.5) * xy ** (eta + 1.0)
            delta = 1.0 - val ** (1.0 / (eta + 1.0))
        y[i] = min(max(y[i] + delta * span, lo), hi)
    return y


# ---------------------------------------------------------------------------
# NSGA-II
# ---------------------------------------------------------------------------

class _Evaluator:
    def __init__(self, problem, workers, budget):
        self.problem = problem
        self.workers = workers
        self.budget = budget
        self.count = 0

    def __call__(self, xs):
        if self.budget is not None and self.count + len(xs) > self.budget:
            raise EvaluationBudgetError(
                f"evaluation budget {self.budget} exhausted at {self.count}"
            )
        self.count += len(xs)
        if self.workers > 1:
            with ThreadPoolExecutor(max_workers=self.workers) as pool:
                out = list(pool.map(self.problem.evaluate, xs))
        else:
            out = [self.problem.evaluate(x) for x in xs]
        for e in out:
            if not all(math.isfinite(val) for val in e.objectives):
                raise ParameterError(
                    "objectives", f"problem returned non-finite objectives {e.objectives}"
                )
        return out


def _rank_crowd(f, v):
    """Per-individual (rank, crowding) for tournament selection."""
    fronts, ranks = _fast_non_dominated_sort(f, v)
    crowd = np.zeros(f.shape[0])
    for fr in fronts:
        crowd[fr] = _crowding(f[fr])
    return ranks, crowd


def _tournament(i, j, v, ranks, crowd):
    if v[i] != v[j]:
        return i if v[i] < v[j] else j
    if ranks[i] != ranks[j]:
        return i if ranks[i] < ranks[j] else j
    if crowd[i] != crowd[j]:
        return i if crowd[i] > crowd[j] else j
    return min(i, j)


def _by_crowding(front_idx, f):
    """Front members ordered by descending crowding, index as tiebreak."""
    crowd = _crowding(f[front_idx])
    order = np.lexsort((front_idx, -crowd))
    return [int(front_idx[k]) for k in order]


def _environmental_selection(f, v, n, elite_fraction):
    """Controlled-elitist reduction of the combined population to size n.

    Rank-0 occupancy is capped at the elite fraction; later ranks fill the
    remainder in rank order with crowding truncation, and rank-0 leftovers
    backfill only if the later ranks run out.
    """
    fronts, _ = _fast_non_dominated_sort(f, v)
    cap0 = max(1, int(round(elite_fraction * n)))
    ordered0 = _by_crowding(fronts[0], f)
    selected = ordered0[: min(cap0, n)]
    leftovers = ordered0[len(selected) :]
    for fr in fronts[1:]:
        room = n - len(selected)
        if room <= 0:
            break
        if len(fr) <= room:
            selected.extend(int(k) for k in fr)
        else:
            selected.extend(_by_crowding(fr, f)[:room])
    room = n - len(selected)
    if room > 0:
        selected.extend(leftovers[:room])
    return selected


def nsga2_run(
    problem: Problem,
    config: GaConfig,
    *,
    workers: int = 1,
    eval_budget: Optional[int] = None,
) -> ParetoFront:
    """Run the controlled-elitist NSGA-II and return the final rank-0 front.

    Deterministic given ``config.seed``: the random stream drives only the
    sequential evolution loop, never the (pure) objective evaluations, so
    fronts are bit-identical across runs and worker counts.
    """
    rng = np.random.default_rng(config.seed)
    n = config.population
    dim = len(problem.lower)
    evaluator = _Evaluator(problem, workers, eval_budget)

    x = rng.uniform(problem.lower, problem.upper, size=(n, dim))
    evals = evaluator(list(x))
    f = np.array([e.objectives for e in evals], dtype=float)
    v = np.array([e.violation for e in evals], dtype=float)

    for _ in range(config.generations):
        ranks, crowd = _rank_crowd(f, v)
        parents = np.empty((n, dim))
        for k in range(n):
            i, j = rng.integers(0, n, size=2)
            parents[k] = x[_tournament(int(i), int(j), v, ranks, crowd)]
        children = np.empty_like(parents)
        for k in range(0, n, 2):
            p1, p2 = parents[k], parents[k + 1]
            if rng.random() <= config.crossover_prob:
                c1, c2 = _sbx_pair(p1, p2, problem.lower, problem.upper,
                                   config.crossover_index, rng)
            else:
                c1, c2 = p1.copy(), p2.copy()
            children[k] = _polynomial_mutation(c1, problem.lower, problem.upper,
                                               config.mutation_prob,
                                               config.mutation_index, rng)
            children[k + 1] = _polynomial_mutation(c2, problem.lower, problem.upper,
                                                   config.mutation_prob,
                                                   config.mutation_index, rng)
        child_evals = evaluator(list(children))
        cf = np.array([e.objectives for e in child_evals], dtype=float)
        cv = np.array([e.violation for e in child_evals], dtype=float)

        all_x = np.vstack([x, children])
        all_f = np.vstack([f, cf])
        all_v = np.concatenate([v, cv])
        all_evals = evals + child_evals
        keep = _environmental_selection(all_f, all_v, n, config.elite_fraction)
        x = all_x[keep]
        f = all_f[keep]
        v = all_v[keep]
        evals = [all_evals[k] for k in keep]

    fronts, _ = _fast_non_dominated_sort(f, v)
    members = []
    for idx in fronts[0]:
        e = evals[idx]
        members.append(
            FrontPoint(
                x=tuple(float(t) for t in x[idx]),
                objectives=ObjectiveVector(values=tuple(e.objectives), feasibility=e.violation),
                raw=tuple(e.raw),
                params=e.params,
            )
        )
    members.sort(key=lambda p: (p.raw, p.x))
    deduped = []
    for p in members:
        if deduped and deduped[-1].x == p.x and deduped[-1].raw == p.raw:
            continue
        deduped.append(p)
    feasible = [p for p in deduped if p.objectives.feasibility == 0.0]
    hv = hypervolume_2d([p.objectives.values for p in feasible], problem.hv_reference)
    return ParetoFront(
        points=tuple(deduped),
        seed=config.seed,
        generations=config.generations,
        evaluations=evaluator.count,
        hypervolume=hv,
        hv_reference=problem.hv_reference,
        problem=problem.name,
        raw_names=problem.raw_names,
    )


def hypervolume_2d(points, reference) -> float:
    """Dominated area between a 2-D minimization front and a reference point."""
    if len(reference) != 2:
        raise ParameterError("reference", "hypervolume reference must be 2-D")
    ref1, ref2 = reference
    pts = sorted({(p[0], p[1]) for p in points if p[0] < ref1 and p[1] < ref2})
    area = 0.0
    best2 = ref2
    for p1, p2 in pts:
        if p2 < best2:
            area += (ref1 - p1) * (best2 - p2)
            best2 = p2
    return area


# ---------------------------------------------------------------------------
# engine problems
# ---------------------------------------------------------------------------

_PAIR_RAW_NAMES = {
    Pair.POWER_VS_ETA_HE: ("power", "eta_he"),
    Pair.POWER_STAR_VS_ETA_HE: ("power_star", "eta_he"),
    Pair.POWER_VS_ETA_INFO: ("power", "eta_info"),
}


def engine_problem(
    pair: Pair,
    bounds: Optional[dict] = None,
    orientation: Orientation = Orientation.MAX_MAX,
    tol: float = 1e-12,
    hard_cap: int = 20000,
) -> Problem:
    """Two-objective engine trade-off problem over the five engine knobs.

    Decision variables are log10 of (temp_ratio, delta_e, hbar_omega,
    g_eff_sq), whose optima span many decades, plus omega*t_m/2pi on a
    linear scale. Heat-valve points carry violation -w_net; points beyond
    the truncation cap carry a huge violation so they lose to every
    computable point. MAX_POWER_MIN_EFF flips the efficiency sign to trace
    the lower branch of the attainable boundary.
    """
    box = dict(OPTIMIZER_BOUNDS)
    if bounds:
        box.update(bounds)
    lower = np.array([
        math.log10(box["temp_ratio"][0]),
        math.log10(box["delta_e"][0]),
        math.log10(box["hbar_omega"][0]),
        math.log10(box["g_eff_sq"][0]),
        box["cycles"][0],
    ])
    upper = np.array([
        math.log10(box["temp_ratio"][1]),
        math.log10(box["delta_e"][1]),
        math.log10(box["hbar_omega"][1]),
        math.log10(box["g_eff_sq"][1]),
        box["cycles"][1],
    ])
    flip = -1.0 if orientation is Orientation.MAX_MAX else 1.0
    star = pair is Pair.POWER_STAR_VS_ETA_HE
    want_info = pair is Pair.POWER_VS_ETA_INFO

    def evaluate(xvec) -> PointEval:
        temp = 10.0 ** xvec[0]
        delta_e = 10.0 ** xvec[1]
        hbar_omega = 10.0 ** xvec[2]
        g_eff_sq = 10.0 ** xvec[3]
        tau = 2.0 * math.pi * xvec[4] / hbar_omega
        params = EngineParams(min(temp, 1.0), delta_e, hbar_omega, g_eff_sq, tau)
        try:
            rep = thermo_report(params, tol=tol)
        except TruncationCapError:
            return PointEval(
                objectives=(0.0, 0.0),
                violation=CAP_VIOLATION,
                raw=(math.nan, math.nan),
                params=params,
            )
        pi_val = rep.w_net / tau
        if star:
            pi_val /= 1.0 + (math.pi / delta_e) / tau
        if want_info:
            eta = information_efficiency(rep)
        elif rep.w_net >= 0.0 and rep.w_ext > 0.0:
            eta = 1.0 - rep.w_meas / rep.w_ext
        else:
            eta = 0.0
        if not (math.isfinite(pi_val) and math.isfinite(eta)):
            return PointEval(
                objectives=(0.0, 0.0),
                violation=CAP_VIOLATION,
                raw=(math.nan, math.nan),
                params=params,
            )
        violation = max(0.0, -rep.w_net)
        return PointEval(
            objectives=(-pi_val, flip * eta),
            violation=violation,
            raw=(pi_val, eta),
            params=params,
        )

    ref = (0.0, 0.0) if orientation is Orientation.MAX_MAX else (0.0, 1.0)
    return Problem(
        name=f"{pair.value}:{orientation.value}",
        lower=lower,
        upper=upper,
        evaluate=evaluate,
        objective_names=tuple(
            ("neg_" if flip < 0 else "") + nm for nm in _PAIR_RAW_NAMES[pair]
        ),
        raw_names=_PAIR_RAW_NAMES[pair],
        hv_reference=ref,
    )


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

_PARAM_COLUMNS = ("temp_ratio", "delta_e", "hbar_omega", "g_eff_sq", "tau")


def front_export(front: ParetoFront, path) -> None:
    """Write the front as CSV: raw metrics, parameters, seed, rank.

    All numbers use 17 significant digits so a read-back reproduces the
    doubles exactly. Ordering is deterministic (sorted by the first raw
    metric). An empty front produces a header-only file.
    """
    raw_names = front.raw_names or tuple(f"f{i}" for i in range(2))
    has_params = any(p.params is not None for p in front.points)
    if has_params:
        var_cols = _PARAM_COLUMNS
    else:
        dim = len(front.points[0].x) if front.points else 1
        var_cols = tuple(f"x{i}" for i in range(dim))
    header = list(raw_names) + list(var_cols) + ["seed", "rank"]
    lines = [
        "# units: power in Omega*kB*TS, tau in 1/Omega, energies in kB*TS; "
        "efficiencies dimensionless",
        ",".join(header),
    ]
    for p in front.points:
        cells = [f"{val:.17g}" for val in p.raw]
        if has_params and p.params is not None:
            pr = p.params
            cells += [
                f"{pr.temp_ratio:.17g}", f"{pr.delta_e:.17g}", f"{pr.hbar_omega:.17g}",
                f"{pr.g_eff_sq:.17g}", f"{pr.tau:.17g}",
            ]
        else:
            cells += [f"{val:.17g}" for val in p.x]
        cells += [str(front.seed), "0"]
        lines.append(",".join(cells))
    text = "\n".join(lines) + "\n"
    try:
        with open(path, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    except OSError as exc:
        raise OSError(f"cannot write front CSV to {path}: {exc}") from exc
