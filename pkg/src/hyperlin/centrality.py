"""Centrality measures built on walks, units, and the graph projection."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

import numpy as np

from .errors import (
    BadHorizonError,
    DisconnectedError,
    IsolatedVertexError,
    NoConvergenceError,
    TooFewEdgesError,
    UnknownLabelError,
    WeightDomainMismatchError,
)
from .hypergraph import Hypergraph
from .linalg import rat
from .randwalk import TransitionMatrix, hitting_times
from .structures import UnitDecomposition, units

__all__ = [
    "GraphProjection",
    "CentralityReport",
    "graph_projection",
    "unit_distance",
    "rw_closeness",
    "rw_betweenness",
    "unit_closeness",
    "unit_eccentricity",
    "perron_centrality",
]


@dataclass(frozen=True)
class GraphProjection:
    """Simple graph on the units: adjacent when one hyperedge contains both."""

    nodes: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    decomposition: UnitDecomposition

    def neighbors(self, node: str) -> tuple[str, ...]:
        if node not in self.nodes:
            raise UnknownLabelError(f"no projection node {node!r}")
        out = []
        for a, b in self.edges:
            if a == node:
                out.append(b)
            elif b == node:
                out.append(a)
        return tuple(out)

    def distances_from(self, node: str) -> dict[str, int]:
        """Breadth-first hop counts; unreachable nodes are absent."""
        dist = {node: 0}
        if node not in self.nodes:
            raise UnknownLabelError(f"no projection node {node!r}")
        frontier = [node]
        while frontier:
            nxt = []
            for x in frontier:
                for y in self.neighbors(x):
                    if y not in dist:
                        dist[y] = dist[x] + 1
                        nxt.append(y)
            frontier = nxt
        return dist

    def is_connected(self) -> bool:
        if not self.nodes:
            return True
        return len(self.distances_from(self.nodes[0])) == len(self.nodes)

    def to_dot(self) -> str:
        out = ["graph projection {"]
        for n in self.nodes:
            out.append(f'  "{n}" [shape=box];')
        for a, b in self.edges:
            out.append(f'  "{a}" -- "{b}";')
        out.append("}")
        return "\n".join(out) + "\n"


def graph_projection(h: Hypergraph) -> GraphProjection:
    """Project a hypergraph onto its units.

    Two distinct units are adjacent when some hyperedge contains their
    union; a unit lies inside a hyperedge exactly when that hyperedge
    belongs to the unit's generator. No self-loops.
    """
    decomp = units(h)
    order = {u.label: i for i, u in enumerate(decomp.units)}
    pairs: set[tuple[str, str]] = set()
    for e in h.edge_labels:
        inside = [u.label for u in decomp.units if e in u.generator]
        for i in range(len(inside)):
            for j in range(i + 1, len(inside)):
                a, b = inside[i], inside[j]
                if order[a] > order[b]:
                    a, b = b, a
                pairs.add((a, b))
    edges = tuple(sorted(pairs, key=lambda p: (order[p[0]], order[p[1]])))
    return GraphProjection(nodes=decomp.labels, edges=edges, decomposition=decomp)


def unit_distance(h: Hypergraph, u: str, v: str) -> int:
    """Hop distance between the units of two vertices (a pseudometric on V)."""
    proj = graph_projection(h)
    du = proj.decomposition.unit_of(str(u)).label
    dv = proj.decomposition.unit_of(str(v)).label
    dist = proj.distances_from(du)
    if dv not in dist:
        raise DisconnectedError(f"units of {u!r} and {v!r} are not connected")
    return dist[dv]


@dataclass(frozen=True)
class CentralityReport:
    """Values per vertex plus the parameters that produced them."""

    kind: str
    values: dict[str, object]
    parameters: dict[str, object]

    def to_json_dict(self) -> dict:
        def encode(x):
            if isinstance(x, Fraction):
                return str(x)
            return x

        return {
            "kind": self.kind,
            "parameters": {k: encode(v) for k, v in self.parameters.items()},
            "values": {k: encode(v) for k, v in self.values.items()},
        }


def rw_closeness(tm: TransitionMatrix, self_time: str = "return") -> CentralityReport:
    """Random-walk closeness: vertex count over summed hitting times onto v.

    For each target v the exact expected hitting times E_u^v are summed
    over all starting vertices u (the target contributes its first-return
    time by default, or zero under self_time="zero"), and the centrality is
    |V| divided by that sum. Values are exact positive rationals.
    """
    h = tm.source
    n = h.n_vertices
    values: dict[str, object] = {}
    for v in h.vertices:
        times = hitting_times(tm, v, self_time=self_time)
        total = sum(times.values(), Fraction(0))
        values[v] = Fraction(n) / total
    return CentralityReport(
        kind="rw_closeness",
        values=values,
        parameters={"policy": tm.policy.kind, "self_time": self_time},
    )


def _mat_mult(a: list[list[Fraction]], b: list[list[Fraction]]) -> list[list[Fraction]]:
    n = len(a)
    m = len(b[0]) if b else 0
    bt = list(zip(*b))
    return [[sum((x * y for x, y in zip(row, col)), Fraction(0)) for col in bt] for row in a]


def _power_sums(p: list[list[Fraction]], horizon: int) -> list[list[Fraction]]:
    """Sum of matrix powers P^0 + P^1 + ... + P^horizon."""
    n = len(p)
    total = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    power = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for _ in range(horizon):
        power = _mat_mult(power, p)
        for i in range(n):
            row_t = total[i]
            row_p = power[i]
            for j in range(n):
                row_t[j] += row_p[j]
    return total


def rw_betweenness(tm: TransitionMatrix, horizon: int) -> CentralityReport:
    """Truncated random-walk betweenness, exact to the given horizon.

    For a vertex w, every ordered pair (u, v) with u, v distinct from w
    contributes the fraction of the walk mass flowing from u to v within
    the horizon that passes through w first. Pairs whose denominator
    (total u-to-v mass within the horizon, including the step-0 term) is
    zero contribute nothing. Horizon 1 forces every numerator to zero
    since no intermediate step exists.
    """
    if not isinstance(horizon, int) or horizon < 1:
        raise BadHorizonError("horizon must be a positive integer")
    states = list(tm.states)
    n = len(states)
    p = [list(row) for row in tm.matrix.entries]
    full = _power_sums(p, horizon)
    values: dict[str, object] = {}
    for wi, w in enumerate(states):
        keep = [i for i in range(n) if i != wi]
        reduced = [[p[i][j] for j in keep] for i in keep]
        avoided = _power_sums(reduced, horizon)
        score = Fraction(0)
        for a, i in enumerate(keep):
            for b, j in enumerate(keep):
                denom = full[i][j]
                if denom == 0:
                    continue
                score += (denom - avoided[a][b]) / denom
        values[w] = score
    return CentralityReport(
        kind="rw_betweenness",
        values=values,
        parameters={"policy": tm.policy.kind, "horizon": horizon},
    )


def unit_closeness(h: Hypergraph) -> CentralityReport:
    """Closeness under the unit pseudometric: inverse summed distance.

    Needs at least two hyperedges and a connected projection; both are
    checked up front. The distance from v sums |W| * d(unit(v), W) over all
    units W, so vertices in one unit share the same exact rational value.
    """
    if h.n_hyperedges < 2:
        raise TooFewEdgesError("unit closeness needs at least two hyperedges")
    proj = graph_projection(h)
    if not proj.is_connected():
        raise DisconnectedError("the graph projection is not connected")
    sizes = {u.label: u.size for u in proj.decomposition.units}
    values: dict[str, object] = {}
    for unit in proj.decomposition.units:
        dist = proj.distances_from(unit.label)
        total = sum(sizes[lab] * d for lab, d in dist.items())
        score = Fraction(1, total)
        for v in unit.members:
            values[v] = score
    values = {v: values[v] for v in h.vertices}
    return CentralityReport(kind="unit_closeness", values=values, parameters={})


def unit_eccentricity(h: Hypergraph) -> CentralityReport:
    """Largest unit distance from each vertex; zero when only one unit exists."""
    proj = graph_projection(h)
    if not proj.is_connected():
        raise DisconnectedError("the graph projection is not connected")
    values: dict[str, object] = {}
    for unit in proj.decomposition.units:
        dist = proj.distances_from(unit.label)
        ecc = max(dist.values())
        for v in unit.members:
            values[v] = ecc
    values = {v: values[v] for v in h.vertices}
    return CentralityReport(kind="unit_eccentricity", values=values, parameters={})


def perron_centrality(
    h: Hypergraph,
    edge_weights: Mapping[str, Fraction] | None = None,
    tol: float = 1e-12,
    max_iterations: int = 100_000,
) -> CentralityReport:
    """Positive eigenvector of the weighted vertex coincidence matrix.

    The matrix entry (u, v) sums the weights of the hyperedges containing
    both u and v (the diagonal is the weighted degree). Connectivity makes
    it irreducible, and the positive diagonal makes power iteration (from
    the all-ones vector, max-norm scaled) converge to the Perron vector.
    Iteration stops when successive normalized iterates differ by less than
    ``tol`` in max norm; the Rayleigh quotient estimates the spectral
    radius, and the final residual must stay below 100 * tol.
    """
    if not h.is_connected():
        raise DisconnectedError("the coincidence matrix needs a connected hypergraph")
    for v in h.vertices:
        if h.degree(v) == 0:
            raise IsolatedVertexError(f"vertex {v!r} has no incident hyperedge")
    if edge_weights is None:
        weights = {e: Fraction(1) for e in h.edge_labels}
    else:
        weights = {str(k): rat(v) for k, v in edge_weights.items()}
        if set(weights) != set(h.edge_labels):
            raise WeightDomainMismatchError("edge weights must cover exactly the hyperedges")
        if any(x <= 0 for x in weights.values()):
            raise WeightDomainMismatchError("edge weights must be positive")
    n = h.n_vertices
    stars = {v: h.star(v) for v in h.vertices}
    mat = np.zeros((n, n), dtype=float)
    for i, u in enumerate(h.vertices):
        for j, v in enumerate(h.vertices):
            shared = stars[u] & stars[v]
            if shared:
                mat[i, j] = float(sum((weights[e] for e in shared), Fraction(0)))
    x = np.ones(n, dtype=float)
    iterations = 0
    for iterations in range(1, max_iterations + 1):
        y = mat @ x
        norm = float(np.max(np.abs(y)))
        if norm == 0.0:
            raise NoConvergenceError("iteration collapsed to the zero vector")
        y = y / norm
        if float(np.max(np.abs(y - x))) < tol:
            x = y
            break
        x = y
    else:
        raise NoConvergenceError("power iteration hit the iteration cap")
    rayleigh = float(x @ (mat @ x)) / float(x @ x)
    residual = float(np.max(np.abs(mat @ x - rayleigh * x)))
    if residual >= 100.0 * tol:
        raise NoConvergenceError(f"residual {residual} above 100 * tol")
    values = {v: float(x[i]) for i, v in enumerate(h.vertices)}
    return CentralityReport(
        kind="perron",
        values=values,
        parameters={
            "tol": tol,
            "iterations": iterations,
            "spectral_radius": rayleigh,
            "residual": residual,
        },
    )
