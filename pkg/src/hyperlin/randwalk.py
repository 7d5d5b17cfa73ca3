"""Random walks on hypergraphs with exact transition kernels.

A walk step from vertex u first picks a hyperedge e containing u (weight
r(u, e)), then a vertex v in e (weight s(u, e, v)), so the transition
kernel is P[u][v] = sum over shared hyperedges of r * s. All kernels are
exact rationals; Monte-Carlo simulation draws 64-bit integers from a
fully specified generator so runs are bit-reproducible.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Mapping, Union

from .errors import (
    BadDistributionError,
    BadHorizonError,
    IsolatedVertexError,
    NotDisjointError,
    NotUniformPolicyError,
    SingletonEdgeNonLazyError,
    UnknownLabelError,
    UnreachableError,
)
from .hypergraph import Hypergraph
from .linalg import RationalMatrix, rat, solve

__all__ = [
    "WalkPolicy",
    "TransitionMatrix",
    "SplitMix64",
    "SimulationResult",
    "transition_matrix",
    "step_distribution",
    "hitting_times",
    "first_hit_probabilities",
    "verify_partition_transition",
    "simulate",
]

UNIFORM_NONLAZY = "UniformNonLazy"
UNIFORM_LAZY = "UniformLazy"
CUSTOM = "Custom"


@dataclass(frozen=True)
class WalkPolicy:
    """How a walker chooses its next vertex.

    The uniform non-lazy policy picks an incident hyperedge uniformly and
    then a uniform member other than the current vertex, so it never stands
    still. The uniform lazy policy picks a uniform member of the chosen
    hyperedge including the current vertex (each member gets 1/|e|; the
    commonly printed closed form drops that laziness correction, which is a
    known slip). Custom policies supply r and s directly.
    """

    kind: str
    edge_rule: Callable[[str, str], Fraction] | None = None
    vertex_rule: Callable[[str, str, str], Fraction] | None = None

    @classmethod
    def uniform_nonlazy(cls) -> "WalkPolicy":
        return cls(kind=UNIFORM_NONLAZY)

    @classmethod
    def uniform_lazy(cls) -> "WalkPolicy":
        return cls(kind=UNIFORM_LAZY)

    @classmethod
    def custom(
        cls,
        edge_rule: Callable[[str, str], Fraction],
        vertex_rule: Callable[[str, str, str], Fraction],
    ) -> "WalkPolicy":
        return cls(kind=CUSTOM, edge_rule=edge_rule, vertex_rule=vertex_rule)

    @property
    def is_uniform(self) -> bool:
        return self.kind in (UNIFORM_NONLAZY, UNIFORM_LAZY)


@dataclass(frozen=True)
class TransitionMatrix:
    """An exact row-stochastic kernel bound to its hypergraph and policy."""

    source: Hypergraph
    policy: WalkPolicy
    matrix: RationalMatrix

    @property
    def states(self) -> tuple[str, ...]:
        return self.matrix.row_labels

    def probability(self, u: str, v: str) -> Fraction:
        return self.matrix.entry(u, v)


def _policy_rules(h: Hypergraph, policy: WalkPolicy):
    """Resolve a policy to concrete (edge_rule, vertex_rule) callables."""
    if policy.kind == UNIFORM_NONLAZY:
        def edge_rule(u: str, e: str) -> Fraction:
            return Fraction(1, h.degree(u))

        def vertex_rule(u: str, e: str, v: str) -> Fraction:
            size = len(h.members(e))
            if size < 2:
                raise SingletonEdgeNonLazyError(
                    f"hyperedge {e!r} has one member; a non-lazy step cannot leave it"
                )
            if v == u:
                return Fraction(0)
            return Fraction(1, size - 1)

        return edge_rule, vertex_rule
    if policy.kind == UNIFORM_LAZY:
        def edge_rule(u: str, e: str) -> Fraction:
            return Fraction(1, h.degree(u))

        def vertex_rule(u: str, e: str, v: str) -> Fraction:
            return Fraction(1, len(h.members(e)))

        return edge_rule, vertex_rule
    if policy.kind == CUSTOM:
        if policy.edge_rule is None or policy.vertex_rule is None:
            raise ValueError("custom policies need both rules")
        return policy.edge_rule, policy.vertex_rule
    raise ValueError(f"unknown policy kind {policy.kind!r}")


def transition_matrix(h: Hypergraph, policy: WalkPolicy) -> TransitionMatrix:
    """Build the exact transition kernel of a walk policy on ``h``.

    Every vertex must lie in some hyperedge, and the per-vertex edge choice
    and per-edge vertex choice must each be probability distributions; this
    is validated exactly and implies the rows sum to one.
    """
    for v in h.vertices:
        if h.degree(v) == 0:
            raise IsolatedVertexError(f"vertex {v!r} has no incident hyperedge")
    edge_rule, vertex_rule = _policy_rules(h, policy)
    vstates = h.vertices
    index = {v: i for i, v in enumerate(vstates)}
    rows = [[Fraction(0)] * len(vstates) for _ in vstates]
    for u in vstates:
        star_u = h.star(u)
        star = [e for e in h.edge_labels if e in star_u]
        edge_mass = Fraction(0)
        for e in star:
            r = rat(edge_rule(u, e))
            if r < 0:
                raise BadDistributionError(f"negative edge weight at ({u!r}, {e!r})")
            edge_mass += r
            members = h.members(e)
            vertex_mass = Fraction(0)
            for v in h.vertices:
                if v not in members:
                    continue
                s = rat(vertex_rule(u, e, v))
                if s < 0:
                    raise BadDistributionError(
                        f"negative vertex weight at ({u!r}, {e!r}, {v!r})"
                    )
                vertex_mass += s
                rows[index[u]][index[v]] += r * s
            if vertex_mass != 1:
                raise BadDistributionError(
                    f"vertex choice within {e!r} from {u!r} sums to {vertex_mass}, not 1"
                )
        if edge_mass != 1:
            raise BadDistributionError(
                f"edge choice from {u!r} sums to {edge_mass}, not 1"
            )
    matrix = RationalMatrix.from_rows(vstates, vstates, rows)
    for lab, row in zip(vstates, matrix.entries):
        assert sum(row, Fraction(0)) == 1, f"row {lab!r} must be stochastic"
    return TransitionMatrix(source=h, policy=policy, matrix=matrix)


def _check_distribution(tm: TransitionMatrix, init: Mapping[str, Fraction]) -> dict[str, Fraction]:
    dist = {str(k): rat(v) for k, v in init.items()}
    unknown = set(dist) - set(tm.states)
    if unknown:
        raise UnknownLabelError(f"unknown states: {sorted(unknown)}")
    if any(v < 0 for v in dist.values()):
        raise BadDistributionError("probabilities must be nonnegative")
    total = sum(dist.values(), Fraction(0))
    if total != 1:
        raise BadDistributionError(f"initial distribution sums to {total}, not 1")
    return {v: dist.get(v, Fraction(0)) for v in tm.states}


def _as_distribution(tm: TransitionMatrix, init: Union[str, Mapping[str, Fraction]]) -> dict[str, Fraction]:
    if isinstance(init, str):
        if init not in tm.states:
            raise UnknownLabelError(f"unknown state {init!r}")
        return {v: Fraction(int(v == init)) for v in tm.states}
    return _check_distribution(tm, init)


def step_distribution(
    tm: TransitionMatrix, init: Union[str, Mapping[str, Fraction]], t: int
) -> dict[str, Fraction]:
    """Exact distribution after ``t`` steps from ``init`` (a state or a distribution)."""
    if t < 0:
        raise BadHorizonError("step count must be nonnegative")
    dist = _as_distribution(tm, init)
    for _ in range(t):
        dist = tm.matrix.apply_left(dist)
    return dist


def _support_predecessors(tm: TransitionMatrix) -> dict[str, list[str]]:
    preds: dict[str, list[str]] = {v: [] for v in tm.states}
    for u in tm.states:
        for v, p in tm.matrix.row(u).items():
            if p > 0:
                preds[v].append(u)
    return preds


def hitting_times(
    tm: TransitionMatrix, target: str, self_time: str = "return"
) -> dict[str, Fraction]:
    """Expected number of steps to reach ``target`` from every state, exactly.

    Solves the linear system (Id - P') h = 1 over the non-target states,
    where P' deletes the target row and column. The target's own entry is
    the expected first-return time 1 + sum_u P[target][u] h[u] by default;
    pass self_time="zero" for the convention that the target is already hit.

    Raises
    ------
    UnreachableError
        If some state cannot reach the target at all (the system would not
        determine finite values).
    """
    if target not in tm.states:
        raise UnknownLabelError(f"unknown state {target!r}")
    if self_time not in ("return", "zero"):
        raise ValueError("self_time must be 'return' or 'zero'")
    preds = _support_predecessors(tm)
    reached = {target}
    frontier = [target]
    while frontier:
        nxt = []
        for v in frontier:
            for u in preds[v]:
                if u not in reached:
                    reached.add(u)
                    nxt.append(u)
        frontier = nxt
    missing = set(tm.states) - reached
    if missing:
        raise UnreachableError(f"states cannot reach {target!r}: {sorted(missing)}")
    others = [v for v in tm.states if v != target]
    out: dict[str, Fraction] = {}
    if others:
        taboo = tm.matrix.submatrix(others, others)
        system = RationalMatrix.identity(others) - taboo
        ones = {v: Fraction(1) for v in others}
        sol = solve(system, ones)
        out.update(sol)
    if self_time == "zero":
        out[target] = Fraction(0)
    else:
        row = tm.matrix.row(target)
        out[target] = Fraction(1) + sum(
            (row[u] * out[u] for u in others), Fraction(0)
        )
    return {v: out[v] for v in tm.states}


def first_hit_probabilities(
    tm: TransitionMatrix,
    target: str,
    horizon: int,
    init: Union[str, Mapping[str, Fraction]],
) -> list[Fraction]:
    """Exact probability of first reaching ``target`` at each step 1..horizon.

    The walk starts from ``init``; mass that reaches the target is absorbed,
    so entry t is the probability that step t is the first visit (the first
    return, for mass starting on the target). The entries sum to at most 1.
    """
    if not isinstance(horizon, int) or horizon < 1:
        raise BadHorizonError("horizon must be a positive integer")
    if target not in tm.states:
        raise UnknownLabelError(f"unknown state {target!r}")
    cur = _as_distribution(tm, init)
    out: list[Fraction] = []
    for _ in range(horizon):
        stepped = tm.matrix.apply_left(cur)
        out.append(stepped[target])
        stepped[target] = Fraction(0)
        cur = stepped
    return out


def verify_partition_transition(
    tm: TransitionMatrix, u_part, v_part
) -> bool:
    """Check the walk symmetry of an equal partition under a uniform policy.

    For every state w outside U and V, the one-step probability of entering
    U equals that of entering V, exactly.
    """
    if not tm.policy.is_uniform:
        raise NotUniformPolicyError("the symmetry check applies to uniform policies")
    u_set = frozenset(str(x) for x in u_part)
    v_set = frozenset(str(x) for x in v_part)
    unknown = (u_set | v_set) - set(tm.states)
    if unknown:
        raise UnknownLabelError(f"unknown states: {sorted(unknown)}")
    if u_set & v_set:
        raise NotDisjointError(f"sets overlap on {sorted(u_set & v_set)}")
    for w in tm.states:
        if w in u_set or w in v_set:
            continue
        row = tm.matrix.row(w)
        mass_u = sum((row[x] for x in u_set), Fraction(0))
        mass_v = sum((row[x] for x in v_set), Fraction(0))
        if mass_u != mass_v:
            return False
    return True


# -- reproducible simulation -----------------------------------------------

_MASK64 = (1 << 64) - 1
_GAMMA = 0x9E3779B97F4A7C15
_TWO64 = 1 << 64


def _mix64(z: int) -> int:
    z &= _MASK64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
    return z ^ (z >> 31)


class SplitMix64:
    """SplitMix64: state advances by the golden gamma, output is the mixed state.

    This is the standard generator (Steele, Lea, Flood 2014). With the same
    seed any implementation produces the same uint64 stream, which is what
    makes simulations comparable across runtimes.
    """

    __slots__ = ("_state",)

    def __init__(self, seed: int) -> None:
        self._state = seed & _MASK64

    def next_u64(self) -> int:
        self._state = (self._state + _GAMMA) & _MASK64
        return _mix64(self._state)


def trajectory_seed(seed: int, index: int) -> int:
    """Seed for trajectory ``index``: output index+1 of SplitMix64(seed).

    Equivalent closed form: mix64(seed + (index + 1) * gamma). Seeding each
    trajectory with a mixed output (rather than a raw offset) keeps the
    per-trajectory streams from overlapping.
    """
    return _mix64((seed + (index + 1) * _GAMMA) & _MASK64)


def _cumulative_table(
    labels: tuple[str, ...], probs: Mapping[str, Fraction]
) -> tuple[list[int], list[int]]:
    """Integer thresholds for exact sampling with 64-bit draws.

    State k is chosen when the draw u satisfies u < ceil(c_k * 2^64), where
    c_k is the cumulative probability through k. Comparing against the
    ceiling is exact for integer draws; zero-probability states are skipped.
    """
    bounds: list[int] = []
    states: list[int] = []
    cum = Fraction(0)
    for i, lab in enumerate(labels):
        p = probs.get(lab, Fraction(0))
        if p == 0:
            continue
        cum += p
        boundary = -((-cum.numerator << 64) // cum.denominator)
        bounds.append(boundary)
        states.append(i)
    return bounds, states


@dataclass
class SimulationResult:
    """Empirical summary of a batch of simulated trajectories."""

    trajectories: int
    steps: int
    seed: int
    visit_counts: dict[str, int]
    first_hits: dict[str, dict[int, int]] = field(repr=False)

    def hit_count(self, v: str) -> int:
        return sum(self.first_hits.get(v, {}).values())

    def unhit_count(self, v: str) -> int:
        return self.trajectories - self.hit_count(v)

    def first_hit_mean(self, v: str) -> float:
        """Mean first-arrival step over the trajectories that reached ``v``."""
        hits = self.first_hits.get(v, {})
        n = sum(hits.values())
        if n == 0:
            raise ZeroDivisionError(f"no trajectory reached {v!r}")
        return sum(t * c for t, c in hits.items()) / n

    def first_hit_stderr(self, v: str) -> float:
        """Standard error of the first-arrival mean (sample variance, ddof=1)."""
        hits = self.first_hits.get(v, {})
        n = sum(hits.values())
        if n < 2:
            raise ZeroDivisionError(f"need at least two hits at {v!r}")
        mean = self.first_hit_mean(v)
        var = sum(c * (t - mean) ** 2 for t, c in hits.items()) / (n - 1)
        return (var / n) ** 0.5

    def to_json_dict(self) -> dict:
        out = {
            "trajectories": self.trajectories,
            "steps": self.steps,
            "seed": self.seed,
            "visit_counts": dict(self.visit_counts),
            "first_hit": {},
        }
        for v in self.visit_counts:
            hits = self.first_hits.get(v, {})
            n = sum(hits.values())
            entry = {"hits": n, "misses": self.trajectories - n}
            if n:
                entry["mean"] = self.first_hit_mean(v)
            out["first_hit"][v] = entry
        return out


def simulate(
    tm: TransitionMatrix,
    init: Union[str, Mapping[str, Fraction]],
    steps: int,
    trajectories: int,
    seed: int,
) -> SimulationResult:
    """Run seeded trajectories and tally visits and first arrivals.

    Trajectory i uses its own SplitMix64 generator seeded via
    trajectory_seed(seed, i), so results do not depend on scheduling and a
    batch can be reproduced or parallelized freely. Visits count states
    X_0 .. X_steps; the first-hit table records the first step t >= 1 with
    X_t = v (a first return when v is the start).
    """
    if steps < 0:
        raise BadHorizonError("steps must be nonnegative")
    if trajectories < 1:
        raise BadHorizonError("need at least one trajectory")
    dist = _as_distribution(tm, init)
    states = tm.states
    init_bounds, init_states = _cumulative_table(states, dist)
    row_tables = []
    for u in states:
        row_tables.append(_cumulative_table(states, tm.matrix.row(u)))
    visits = [0] * len(states)
    first_hits: list[dict[int, int]] = [dict() for _ in states]
    for i in range(trajectories):
        rng = SplitMix64(trajectory_seed(seed, i))
        u = rng.next_u64()
        cur = init_states[bisect.bisect_right(init_bounds, u)]
        visits[cur] += 1
        seen = [False] * len(states)
        for t in range(1, steps + 1):
            bounds, nexts = row_tables[cur]
            u = rng.next_u64()
            cur = nexts[bisect.bisect_right(bounds, u)]
            visits[cur] += 1
            if not seen[cur]:
                seen[cur] = True
                table = first_hits[cur]
                table[t] = table.get(t, 0) + 1
    return SimulationResult(
        trajectories=trajectories,
        steps=steps,
        seed=seed,
        visit_counts={lab: visits[i] for i, lab in enumerate(states)},
        first_hits={lab: first_hits[i] for i, lab in enumerate(states)},
    )
