"""Simulated annealing over discrete-coefficient pure states."""
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from ._validation import check_n_qubits, check_positive, check_unit_interval
from .measures import max_negativity, negativity_value, total_negativity
from .states import CoefficientSet, StateVector, coefficient_set, densify

DEFAULT_MAX_EVALUATIONS = 1_000_000


def count_nonnull(state):
    return int(np.count_nonzero(state.raw))


def search_space_bits(n_qubits, set_size):
    """``log2(|V| ** (2**n))``, the size of the search space in bits."""
    check_n_qubits(n_qubits)
    if set_size < 2:
        raise ValueError(f"set_size must be >= 2, got {set_size}")
    return (1 << n_qubits) * math.log2(set_size)


def _raw_scores(raw, n_qubits, alpha, max_neg):
    nonnull = np.count_nonzero(raw)
    amps = raw / math.sqrt(float(np.sum(raw.real**2 + raw.imag**2)))
    ent = negativity_value(amps) / max_neg
    frac = nonnull / raw.shape[0]
    return ent - alpha * frac, ent, frac


def fitness(state, alpha):
    """Normalized negativity minus ``alpha`` times the fraction of non-null coefficients."""
    alpha = check_unit_interval("alpha", alpha)
    n = state.n_qubits
    return float(_raw_scores(state.raw, n, alpha, max_negativity(n))[0])


def random_state(n_qubits, coefficients, rng):
    """Uniform draw from the search space, conditioned on not being all zero."""
    coefficients = coefficient_set(coefficients)
    members = coefficients.as_array()
    while True:
        raw = members[rng.integers(len(members), size=1 << n_qubits)]
        if np.any(raw):
            return StateVector(n_qubits, raw)


def _move_raw(raw, members, rng):
    # replace one coefficient by a different member; never produce all zeros
    size = len(members)
    while True:
        i = int(rng.integers(raw.shape[0]))
        cur = int(np.flatnonzero(members == raw[i])[0])
        j = int(rng.integers(size - 1))
        if j >= cur:
            j += 1
        new = raw.copy()
        new[i] = members[j]
        if new[i] != 0 or np.count_nonzero(raw) > 1 or raw[i] == 0:
            return new


def move(state, coefficients, rng):
    """Neighbour of ``state`` differing in exactly one raw coefficient."""
    members = coefficient_set(coefficients).as_array()
    if not np.all(np.isin(state.raw, members)):
        raise ValueError("state has coefficients outside the coefficient set")
    return StateVector(state.n_qubits, _move_raw(np.array(state.raw), members, rng))


@dataclass(frozen=True)
class AnnealConfig:
    n_qubits: int
    coefficients: CoefficientSet = field(default_factory=lambda: coefficient_set("v5"))
    alpha: float = 0.2
    t0: float = 0.00075
    beta: float = 0.995
    mil: int = 1000
    stop_stale_loops: int = 10
    rng_seed: int = 0
    max_evaluations: int = DEFAULT_MAX_EVALUATIONS

    def __post_init__(self):
        check_n_qubits(self.n_qubits, low=2)
        object.__setattr__(self, "coefficients", coefficient_set(self.coefficients))
        check_unit_interval("alpha", self.alpha)
        check_positive("t0", self.t0)
        check_unit_interval("beta", self.beta, low_open=True, high_open=True)
        check_positive("mil", self.mil, integer=True)
        check_positive("stop_stale_loops", self.stop_stale_loops, integer=True)
        check_positive("max_evaluations", self.max_evaluations, integer=True)
        if not 0 <= int(self.rng_seed) < 1 << 64:
            raise ValueError("rng_seed must be an unsigned 64-bit integer")


class TraceRow(NamedTuple):
    evaluation_index: int
    temperature: float
    fitness: float
    entanglement_normalized: float
    nonnull_fraction: float
    accepted: bool
    new_best: bool
    u: float  # the uniform draw of the acceptance test; NaN for the initial state


@dataclass
class SearchTrace:
    rows: list = field(default_factory=list)

    def __len__(self):
        return len(self.rows)

    def column(self, name):
        return np.array([getattr(r, name) for r in self.rows])


@dataclass
class SearchResult:
    best_state: StateVector
    best_fitness: float
    best_report: object
    evaluations_used: int
    trace: SearchTrace
    config: AnnealConfig


def _open_unit(rng):
    u = rng.random()
    while u == 0.0:
        u = rng.random()
    return u


def anneal(cfg):
    """Run one annealing chain; fully determined by ``cfg.rng_seed``.

    Stops after ``cfg.stop_stale_loops`` consecutive temperature steps without
    a new global best, or once ``cfg.max_evaluations`` states were evaluated.
    """
    rng = np.random.default_rng(cfg.rng_seed)
    n, alpha = cfg.n_qubits, cfg.alpha
    members = cfg.coefficients.as_array()
    max_neg = max_negativity(n)

    current = np.array(random_state(n, cfg.coefficients, rng).raw)
    f_cur, ent, frac = _raw_scores(current, n, alpha, max_neg)
    best, f_best = current, f_cur
    temperature = cfg.t0
    rows = [TraceRow(0, temperature, f_cur, ent, frac, True, True, math.nan)]
    evals = 1
    stale = 0
    while evals < cfg.max_evaluations:
        improved = False
        for _ in range(cfg.mil):
            if evals >= cfg.max_evaluations:
                break
            cand = _move_raw(current, members, rng)
            u = _open_unit(rng)
            f_c, ent, frac = _raw_scores(cand, n, alpha, max_neg)
            accepted = f_c > f_cur + temperature * math.log(u)
            new_best = False
            if accepted:
                current, f_cur = cand, f_c
                if f_c > f_best:
                    best, f_best = cand, f_c
                    new_best = improved = True
            rows.append(TraceRow(evals, temperature, f_c, ent, frac, accepted, new_best, u))
            evals += 1
        stale = 0 if improved else stale + 1
        if stale >= cfg.stop_stale_loops:
            break
        temperature *= cfg.beta

    best_state = StateVector(n, best)
    return SearchResult(
        best_state=best_state,
        best_fitness=float(f_best),
        best_report=total_negativity(densify(best_state)),
        evaluations_used=evals,
        trace=SearchTrace(rows),
        config=cfg,
    )
