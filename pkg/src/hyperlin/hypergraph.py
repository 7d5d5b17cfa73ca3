"""Core hypergraph model, parsing, and incidence constructions.

A hypergraph is a finite labeled vertex sequence plus a labeled sequence of
hyperedges, where each hyperedge is a non-empty subset of the vertices and
no two hyperedges share the same member set. Vertex and hyperedge order is
preserved everywhere so derived matrices and reports are deterministic.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

from .errors import (
    DuplicateHyperedgeSetError,
    EmptyHyperedgeError,
    EmptyStarError,
    HypergraphSyntaxError,
    UnknownLabelError,
    UnknownVertexError,
)
from .linalg import RationalMatrix

__all__ = [
    "Hypergraph",
    "IncidenceGraph",
    "parse",
    "incidence_matrix",
    "incidence_graph",
    "incidence_graph_adjacency",
    "dual",
]


@dataclass(frozen=True)
class Hypergraph:
    """Immutable labeled hypergraph.

    vertices: vertex labels in declaration order.
    hyperedges: (label, members) pairs in declaration order.
    """

    vertices: tuple[str, ...]
    hyperedges: tuple[tuple[str, frozenset[str]], ...]

    def __post_init__(self) -> None:
        verts = tuple(str(v) for v in self.vertices)
        if len(set(verts)) != len(verts):
            raise HypergraphSyntaxError("duplicate vertex labels")
        vert_set = set(verts)
        edges = []
        seen_labels: set[str] = set()
        seen_sets: dict[frozenset[str], str] = {}
        for label, members in self.hyperedges:
            label = str(label)
            members = frozenset(str(m) for m in members)
            if label in seen_labels:
                raise HypergraphSyntaxError(f"duplicate hyperedge label {label!r}")
            seen_labels.add(label)
            if not members:
                raise EmptyHyperedgeError(f"hyperedge {label!r} is empty")
            unknown = members - vert_set
            if unknown:
                raise UnknownVertexError(
                    f"hyperedge {label!r} uses undeclared vertices: {sorted(unknown)}"
                )
            if members in seen_sets:
                raise DuplicateHyperedgeSetError(
                    f"hyperedges {seen_sets[members]!r} and {label!r} have the same members"
                )
            seen_sets[members] = label
            edges.append((label, members))
        object.__setattr__(self, "vertices", verts)
        object.__setattr__(self, "hyperedges", tuple(edges))

    # -- basic accessors --------------------------------------------------

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_hyperedges(self) -> int:
        return len(self.hyperedges)

    @property
    def edge_labels(self) -> tuple[str, ...]:
        return tuple(label for label, _ in self.hyperedges)

    def members(self, edge_label: str) -> frozenset[str]:
        for label, members in self.hyperedges:
            if label == edge_label:
                return members
        raise UnknownLabelError(f"no hyperedge labeled {edge_label!r}")

    def has_vertex(self, v: str) -> bool:
        return v in self.vertices

    def star(self, v: str) -> frozenset[str]:
        """Labels of the hyperedges containing ``v``."""
        if v not in self.vertices:
            raise UnknownLabelError(f"no vertex labeled {v!r}")
        return frozenset(label for label, members in self.hyperedges if v in members)

    def degree(self, v: str) -> int:
        return len(self.star(v))

    def vertex_order(self, labels: Iterable[str]) -> tuple[str, ...]:
        """The given vertex labels, sorted into declaration order."""
        given = set(labels)
        unknown = given - set(self.vertices)
        if unknown:
            raise UnknownLabelError(f"unknown vertices: {sorted(unknown)}")
        return tuple(v for v in self.vertices if v in given)

    def is_connected(self) -> bool:
        """True when every vertex is reachable through shared hyperedges."""
        if self.n_vertices <= 1:
            return True
        adj: dict[str, set[str]] = {v: set() for v in self.vertices}
        for _, members in self.hyperedges:
            ms = sorted(members)
            for a in ms:
                adj[a].update(m for m in ms if m != a)
        seen = {self.vertices[0]}
        frontier = [self.vertices[0]]
        while frontier:
            nxt = []
            for v in frontier:
                for u in adj[v]:
                    if u not in seen:
                        seen.add(u)
                        nxt.append(u)
            frontier = nxt
        return len(seen) == self.n_vertices

    # -- serialization -----------------------------------------------------

    def to_json_dict(self) -> dict:
        """Canonical order-preserving JSON form."""
        return {
            "vertices": list(self.vertices),
            "hyperedges": {
                label: [v for v in self.vertices if v in members]
                for label, members in self.hyperedges
            },
        }

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)

    def digest(self) -> str:
        """Hex digest of the canonical JSON form."""
        text = json.dumps(self.to_json_dict(), separators=(",", ":"), sort_keys=False)
        return hashlib.sha256(text.encode("utf-8")).hexdigest()

    @classmethod
    def from_members(
        cls,
        hyperedges: Iterable[tuple[str, Iterable[str]]],
        vertices: Sequence[str] | None = None,
    ) -> "Hypergraph":
        """Build from (label, members) pairs.

        With an explicit ``vertices`` sequence every member must be declared
        in it. When ``vertices`` is omitted the vertex order is the first
        appearance order across hyperedges.
        """
        pairs = [(str(label), [str(m) for m in members]) for label, members in hyperedges]
        if vertices is not None:
            order = [str(v) for v in vertices]
        else:
            order = []
            seen: set[str] = set()
            for _, members in pairs:
                for m in members:
                    if m not in seen:
                        seen.add(m)
                        order.append(m)
        return cls(tuple(order), tuple((l, frozenset(ms)) for l, ms in pairs))

    @classmethod
    def from_json(cls, text: str) -> "Hypergraph":
        try:
            data = json.loads(text)
        except json.JSONDecodeError as exc:
            raise HypergraphSyntaxError(f"invalid JSON: {exc}") from exc
        if not isinstance(data, dict):
            raise HypergraphSyntaxError("top level must be an object")
        if "vertices" not in data or "hyperedges" not in data:
            raise HypergraphSyntaxError("need 'vertices' and 'hyperedges' keys")
        verts = data["vertices"]
        edges = data["hyperedges"]
        if not isinstance(verts, list) or not all(isinstance(v, str) for v in verts):
            raise HypergraphSyntaxError("'vertices' must be a list of strings")
        if not isinstance(edges, dict):
            raise HypergraphSyntaxError("'hyperedges' must be an object")
        pairs = []
        for label, members in edges.items():
            if not isinstance(members, list) or not all(isinstance(m, str) for m in members):
                raise HypergraphSyntaxError(f"members of {label!r} must be a list of strings")
            pairs.append((label, frozenset(members)))
        return cls(tuple(verts), tuple(pairs))

    @classmethod
    def from_lines(cls, text: str) -> "Hypergraph":
        """Parse the line format ``label: v1 v2 ...``.

        Lines starting with ``#`` are comments, except ``#vertices:`` which
        declares vertex order up front (and is the only way to get isolated
        vertices into this format). Vertex order is header order followed
        by first appearance.
        """
        declared: list[str] = []
        pairs: list[tuple[str, frozenset[str]]] = []
        appearance: list[str] = []
        seen_members: set[str] = set()
        for lineno, raw in enumerate(text.splitlines(), start=1):
            line = raw.strip()
            if not line:
                continue
            if line.startswith("#"):
                body = line[1:].strip()
                if body.lower().startswith("vertices:"):
                    for v in body[len("vertices:"):].split():
                        if v in declared:
                            raise HypergraphSyntaxError(
                                f"line {lineno}: vertex {v!r} declared twice"
                            )
                        declared.append(v)
                continue
            if ":" not in line:
                raise HypergraphSyntaxError(f"line {lineno}: expected 'label: members'")
            label, _, rest = line.partition(":")
            label = label.strip()
            if not label or " " in label:
                raise HypergraphSyntaxError(f"line {lineno}: bad hyperedge label {label!r}")
            members = rest.split()
            if not members:
                raise EmptyHyperedgeError(f"line {lineno}: hyperedge {label!r} is empty")
            pairs.append((label, frozenset(members)))
            for m in members:
                if m not in seen_members:
                    seen_members.add(m)
                    appearance.append(m)
        order = list(declared)
        seen = set(order)
        for m in appearance:
            if m not in seen:
                seen.add(m)
                order.append(m)
        return cls(tuple(order), tuple(pairs))


def parse(text: str, format: str = "json") -> Hypergraph:
    """Parse hypergraph text in the ``json`` or ``lines`` format."""
    if format == "json":
        return Hypergraph.from_json(text)
    if format == "lines":
        return Hypergraph.from_lines(text)
    raise ValueError(f"unknown format {format!r}")


def incidence_matrix(h: Hypergraph) -> RationalMatrix:
    """0/1 incidence matrix: rows are vertices, columns are hyperedges."""
    rows = [
        [Fraction(int(v in members)) for _, members in h.hyperedges]
        for v in h.vertices
    ]
    return RationalMatrix.from_rows(h.vertices, h.edge_labels, rows)


@dataclass(frozen=True)
class IncidenceGraph:
    """Bipartite incidence graph: vertices on the left, hyperedges on the right."""

    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]

    @property
    def n_nodes(self) -> int:
        return len(self.left) + len(self.right)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def to_dot(self) -> str:
        """Graphviz rendering with circles for vertices and boxes for hyperedges."""
        out = ["graph incidence {"]
        for v in self.left:
            out.append(f'  "v_{v}" [label="{v}", shape=circle];')
        for e in self.right:
            out.append(f'  "e_{e}" [label="{e}", shape=box];')
        for v, e in self.edges:
            out.append(f'  "v_{v}" -- "e_{e}";')
        out.append("}")
        return "\n".join(out) + "\n"


def incidence_graph(h: Hypergraph) -> IncidenceGraph:
    """The bipartite graph joining each vertex to the hyperedges containing it."""
    pairs = []
    for label, members in h.hyperedges:
        for v in h.vertices:
            if v in members:
                pairs.append((v, label))
    return IncidenceGraph(left=h.vertices, right=h.edge_labels, edges=tuple(pairs))


def incidence_graph_adjacency(h: Hypergraph) -> RationalMatrix:
    """Adjacency matrix of the incidence graph.

    Block form: the top-right block is the incidence matrix, the bottom-left
    its transpose, the diagonal blocks are zero. Rows and columns are labeled
    by vertices followed by hyperedge labels, which therefore must not collide.
    """
    inc = incidence_matrix(h)
    labels = h.vertices + h.edge_labels
    n, m = h.n_vertices, h.n_hyperedges
    rows = []
    for i in range(n):
        rows.append([Fraction(0)] * n + list(inc.entries[i]))
    for j in range(m):
        rows.append([inc.entries[i][j] for i in range(n)] + [Fraction(0)] * m)
    return RationalMatrix.from_rows(labels, labels, rows)


def dual(h: Hypergraph) -> Hypergraph:
    """Dual hypergraph: vertices are hyperedge labels, hyperedges are stars.

    Equal stars are deduplicated (keeping first appearance), and each dual
    hyperedge is labeled by the first vertex that generates its star.

    Raises
    ------
    EmptyStarError
        If some vertex has an empty star, since an empty hyperedge is not
        allowed on the dual side.
    """
    star_edges: list[tuple[str, frozenset[str]]] = []
    seen: set[frozenset[str]] = set()
    for v in h.vertices:
        s = h.star(v)
        if not s:
            raise EmptyStarError(f"vertex {v!r} has an empty star")
        if s in seen:
            continue
        seen.add(s)
        star_edges.append((v, s))
    return Hypergraph(h.edge_labels, tuple(star_edges))
