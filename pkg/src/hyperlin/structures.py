"""Dependence certificates and combinatorial substructures.

This module finds and verifies the structures that witness linear
dependence among vertices or hyperedges: coefficient-vector certificates,
units (maximal sets of vertices with identical stars), unit contraction,
equal partitions, star partitions, and covering projections between
hypergraphs.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Mapping

from .errors import (
    InvalidCertificateError,
    NotCardinalityPreservingError,
    NotDisjointError,
    NotInNullspaceError,
    OverlapError,
    TooSmallError,
    UnknownLabelError,
)
from .hypergraph import Hypergraph, incidence_graph_adjacency, incidence_matrix
from .linalg import RationalMatrix, nullspace, rat, vector_support

__all__ = [
    "CertificateKind",
    "Certificate",
    "Unit",
    "UnitDecomposition",
    "ContractionMap",
    "ProjectionClass",
    "dependent_vertices",
    "dependent_hyperedges",
    "is_dependent_set",
    "vertex_pair_certificate",
    "partition_certificate",
    "units",
    "unit_contraction",
    "verify_unit_maximality",
    "contraction_nullspace_lift",
    "verify_equal_edge_partition",
    "find_equal_edge_partitions",
    "verify_star_partition",
    "verify_equal_star_partition",
    "verify_covering_projection",
    "pullback_dependent_set",
]


class CertificateKind(str, Enum):
    DEPENDENT_VERTICES = "DependentVertices"
    DEPENDENT_HYPEREDGES = "DependentHyperedges"
    EQUAL_EDGE_PARTITION = "EqualEdgePartition"
    EQUAL_STAR_PARTITION = "EqualStarPartition"
    STAR_PARTITION = "StarPartition"
    UNIT_WITNESS = "UnitWitness"


#: Which matrix annihilates a certificate of each flavor.
VERTEX_AXIS = "I_H^T"
EDGE_AXIS = "I_H"


@dataclass(frozen=True)
class Certificate:
    """An exact coefficient vector witnessing a dependence.

    coefficients maps every label of the ambient axis (all vertices, or all
    hyperedges) to a rational; support is exactly the set of labels with a
    nonzero coefficient.
    """

    kind: CertificateKind
    support: frozenset[str]
    coefficients: dict[str, Fraction]
    annihilated_by: str

    def __post_init__(self) -> None:
        coeffs = {str(k): rat(v) for k, v in self.coefficients.items()}
        object.__setattr__(self, "coefficients", coeffs)
        object.__setattr__(self, "support", frozenset(str(s) for s in self.support))
        if self.support != vector_support(coeffs):
            raise InvalidCertificateError("support must equal the nonzero coefficients")
        if self.annihilated_by not in (VERTEX_AXIS, EDGE_AXIS, "A_GH"):
            raise InvalidCertificateError(f"unknown annihilator {self.annihilated_by!r}")

    @property
    def is_zero(self) -> bool:
        return not self.support

    def to_json_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "annihilated_by": self.annihilated_by,
            "support": sorted(self.support),
            "coefficients": {k: str(v) for k, v in self.coefficients.items()},
        }


def _certificate_from_vector(
    kind: CertificateKind, coeffs: Mapping[str, Fraction], annihilated_by: str
) -> Certificate:
    coeffs = dict(coeffs)
    return Certificate(
        kind=kind,
        support=vector_support(coeffs),
        coefficients=coeffs,
        annihilated_by=annihilated_by,
    )


def dependent_vertices(h: Hypergraph) -> Certificate | None:
    """Canonical certificate that V(H) is linearly dependent, if it is.

    The certificate is the first vector of the canonical nullspace basis of
    the transposed incidence matrix (the basis vector whose free column
    comes first in vertex order). Returns None when the vertex rows are
    independent.
    """
    basis = nullspace(incidence_matrix(h).transpose())
    if not basis.vectors:
        return None
    return _certificate_from_vector(
        CertificateKind.DEPENDENT_VERTICES, basis.vectors[0], VERTEX_AXIS
    )


def dependent_hyperedges(h: Hypergraph) -> Certificate | None:
    """Canonical certificate that E(H) is linearly dependent, if it is."""
    basis = nullspace(incidence_matrix(h))
    if not basis.vectors:
        return None
    return _certificate_from_vector(
        CertificateKind.DEPENDENT_HYPEREDGES, basis.vectors[0], EDGE_AXIS
    )


def is_dependent_set(h: Hypergraph, labels: Iterable[str], axis: str = "vertices") -> Certificate | None:
    """Certificate supported inside ``labels``, or None if that set is independent.

    axis is ``"vertices"`` (columns of the transposed incidence matrix) or
    ``"hyperedges"`` (columns of the incidence matrix). The restriction to the
    candidate set is solved exactly, and the certificate is embedded back
    into the full axis with zeros outside the set.
    """
    wanted = set(str(l) for l in labels)
    if axis == "vertices":
        m = incidence_matrix(h).transpose()
        ambient = h.vertices
        kind, annihilator = CertificateKind.DEPENDENT_VERTICES, VERTEX_AXIS
    elif axis == "hyperedges":
        m = incidence_matrix(h)
        ambient = h.edge_labels
        kind, annihilator = CertificateKind.DEPENDENT_HYPEREDGES, EDGE_AXIS
    else:
        raise ValueError(f"axis must be 'vertices' or 'hyperedges', got {axis!r}")
    unknown = wanted - set(ambient)
    if unknown:
        raise UnknownLabelError(f"unknown {axis}: {sorted(unknown)}")
    cols = [l for l in ambient if l in wanted]
    if not cols:
        return None
    sub = m.submatrix(m.row_labels, cols)
    basis = nullspace(sub)
    if not basis.vectors:
        return None
    coeffs = {lab: Fraction(0) for lab in ambient}
    coeffs.update(basis.vectors[0])
    return _certificate_from_vector(kind, coeffs, annihilator)


def vertex_pair_certificate(h: Hypergraph, u: str, v: str) -> Certificate:
    """The difference vector of two vertices with identical stars.

    This is the simplest dependence certificate: +1 on the first vertex in
    declaration order, -1 on the other. Raises InvalidCertificateError when
    the stars differ (the difference would not be annihilated).
    """
    first, second = h.vertex_order([u, v])
    if h.star(first) != h.star(second):
        raise InvalidCertificateError(f"vertices {u!r} and {v!r} have different stars")
    coeffs = {lab: Fraction(0) for lab in h.vertices}
    coeffs[first] = Fraction(1)
    coeffs[second] = Fraction(-1)
    return _certificate_from_vector(CertificateKind.DEPENDENT_VERTICES, coeffs, VERTEX_AXIS)


def partition_certificate(h: Hypergraph, u_part: Iterable[str], v_part: Iterable[str]) -> Certificate:
    """Certificate chi_U - chi_V for a verified equal partition."""
    ok, _ = verify_equal_edge_partition(h, u_part, v_part)
    if not ok:
        raise InvalidCertificateError("the pair is not an equal partition")
    coeffs = {lab: Fraction(0) for lab in h.vertices}
    for x in u_part:
        coeffs[str(x)] = Fraction(1)
    for x in v_part:
        coeffs[str(x)] = Fraction(-1)
    return _certificate_from_vector(CertificateKind.EQUAL_EDGE_PARTITION, coeffs, VERTEX_AXIS)


# -- units ------------------------------------------------------------------


@dataclass(frozen=True)
class Unit:
    """A maximal set of vertices sharing one star (the unit's generator)."""

    members: tuple[str, ...]
    generator: frozenset[str]

    @property
    def label(self) -> str:
        return "{" + ",".join(self.members) + "}"

    @property
    def size(self) -> int:
        return len(self.members)


@dataclass(frozen=True)
class UnitDecomposition:
    """All units of a hypergraph, in deterministic order."""

    units: tuple[Unit, ...]

    def unit_of(self, v: str) -> Unit:
        for u in self.units:
            if v in u.members:
                return u
        raise UnknownLabelError(f"no unit contains {v!r}")

    @property
    def labels(self) -> tuple[str, ...]:
        return tuple(u.label for u in self.units)

    def to_json_dict(self) -> dict:
        return {
            "units": [
                {"members": list(u.members), "generator": sorted(u.generator)}
                for u in self.units
            ]
        }


def units(h: Hypergraph) -> UnitDecomposition:
    """Group the vertices into units (star-equivalence classes).

    Members inside a unit are sorted by label and units are ordered by
    their smallest member label, so reports are reproducible. Isolated
    vertices form units with an empty generator.
    """
    by_star: dict[frozenset[str], list[str]] = {}
    for v in h.vertices:
        by_star.setdefault(h.star(v), []).append(v)
    out = [
        Unit(members=tuple(sorted(members)), generator=star)
        for star, members in by_star.items()
    ]
    out.sort(key=lambda u: u.members[0])
    return UnitDecomposition(units=tuple(out))


@dataclass(frozen=True)
class ContractionMap:
    """The quotient of a hypergraph by its unit partition.

    vertex_map sends each source vertex to its unit's label; edge_map is the
    induced bijection between source hyperedges and contracted hyperedges
    (labels are preserved, so it is the identity on labels).
    """

    source: Hypergraph
    contracted: Hypergraph
    decomposition: UnitDecomposition
    vertex_map: dict[str, str]
    edge_map: dict[str, str]

    def to_json_dict(self) -> dict:
        return {
            "contracted": self.contracted.to_json_dict(),
            "vertex_map": dict(self.vertex_map),
            "edge_map": dict(self.edge_map),
        }

    def to_dot(self) -> str:
        """Incidence rendering of the contraction, units drawn as boxes."""
        out = ["graph contraction {"]
        for u in self.decomposition.units:
            out.append(f'  "u_{u.label}" [label="{u.label}", shape=box];')
        for e in self.contracted.edge_labels:
            out.append(f'  "e_{e}" [label="{e}", shape=ellipse];')
        for e, members in self.contracted.hyperedges:
            for ulabel in self.contracted.vertices:
                if ulabel in members:
                    out.append(f'  "u_{ulabel}" -- "e_{e}";')
        out.append("}")
        return "\n".join(out) + "\n"


def unit_contraction(h: Hypergraph) -> ContractionMap:
    """Contract every unit to a single vertex.

    Each hyperedge maps to the set of units it meets; two source hyperedges
    can never collapse onto the same unit set (a hyperedge is the union of
    the units it meets, so the unit set pins the member set down), hence the
    edge map is a bijection and keeps the original labels. A hypergraph all
    of whose units are singletons contracts to an isomorphic copy of itself.
    """
    decomp = units(h)
    vmap = {v: u.label for u in decomp.units for v in u.members}
    contracted_edges = [
        (label, frozenset(vmap[v] for v in members)) for label, members in h.hyperedges
    ]
    contracted = Hypergraph(decomp.labels, tuple(contracted_edges))
    return ContractionMap(
        source=h,
        contracted=contracted,
        decomposition=decomp,
        vertex_map=vmap,
        edge_map={label: label for label in h.edge_labels},
    )


def verify_unit_maximality(h: Hypergraph, candidate: Iterable[str]) -> bool:
    """True iff ``candidate`` is exactly one unit with at least two members.

    Equivalently: all pairwise difference vectors of the candidate are
    annihilated by the incidence-graph adjacency, and no strict superset has
    that property.
    """
    cand = [str(v) for v in candidate]
    if len(set(cand)) < 2:
        raise TooSmallError("a unit check needs at least two distinct vertices")
    unknown = set(cand) - set(h.vertices)
    if unknown:
        raise UnknownLabelError(f"unknown vertices: {sorted(unknown)}")
    stars = {h.star(v) for v in cand}
    if len(stars) != 1:
        return False
    star = stars.pop()
    full_class = {v for v in h.vertices if h.star(v) == star}
    return full_class == set(cand)


def contraction_nullspace_lift(
    h: Hypergraph, z: Mapping[str, Fraction]
) -> dict[str, Fraction]:
    """Lift a nullspace vector of the contracted incidence-graph adjacency.

    ``z`` is indexed by the contraction's incidence-graph nodes (unit labels
    and hyperedge labels) and must be annihilated by that adjacency matrix.
    The lift spreads each unit value uniformly over the unit's members
    (value divided by unit size) and copies hyperedge values across the edge
    bijection. The result is annihilated by the source adjacency matrix.
    """
    cmap = unit_contraction(h)
    adj = incidence_graph_adjacency(cmap.contracted)
    zz = {str(k): rat(v) for k, v in z.items()}
    unknown = set(zz) - set(adj.row_labels)
    if unknown:
        raise UnknownLabelError(f"labels outside the contraction: {sorted(unknown)}")
    image = adj.apply(zz)
    if any(v != 0 for v in image.values()):
        raise NotInNullspaceError("vector is not annihilated by the contracted adjacency")
    lifted: dict[str, Fraction] = {}
    for unit in cmap.decomposition.units:
        value = zz.get(unit.label, Fraction(0)) / unit.size
        for v in unit.members:
            lifted[v] = value
    for e in h.edge_labels:
        lifted[e] = zz.get(cmap.edge_map[e], Fraction(0))
    return lifted


# -- partitions ---------------------------------------------------------------


def _check_vertex_sets(h: Hypergraph, u_part: Iterable[str], v_part: Iterable[str]):
    u_set = frozenset(str(x) for x in u_part)
    v_set = frozenset(str(x) for x in v_part)
    unknown = (u_set | v_set) - set(h.vertices)
    if unknown:
        raise UnknownLabelError(f"unknown vertices: {sorted(unknown)}")
    if u_set & v_set:
        raise NotDisjointError(f"sets overlap on {sorted(u_set & v_set)}")
    return u_set, v_set


def verify_equal_edge_partition(
    h: Hypergraph, u_part: Iterable[str], v_part: Iterable[str]
) -> tuple[bool, dict[str, tuple[int, int]]]:
    """Check |U meet e| == |V meet e| for every hyperedge e.

    Returns the verdict plus the per-edge count table that witnesses it.
    U and V must be disjoint vertex sets.
    """
    u_set, v_set = _check_vertex_sets(h, u_part, v_part)
    table = {
        label: (len(u_set & members), len(v_set & members))
        for label, members in h.hyperedges
    }
    ok = all(a == b for a, b in table.values())
    return ok, table


def find_equal_edge_partitions(
    h: Hypergraph, max_support: int = 8
) -> list[tuple[frozenset[str], frozenset[str]]]:
    """All equal partitions (U, V) with combined support at most ``max_support``.

    The search walks the nullspace of the transposed incidence matrix: a
    valid pair's signed indicator chi_U - chi_V must lie in it, so only
    sign combinations of the canonical basis vectors are enumerated (cost
    grows as 3^nullity, not with the number of vertex subsets). Pairs are
    deduplicated by orienting the first supported vertex into U, so U is
    never empty; V may be empty (isolated vertices make this legitimate).
    """
    if max_support < 1:
        raise ValueError("max_support must be at least 1")
    basis = nullspace(incidence_matrix(h).transpose())
    d = basis.dimension
    if d == 0:
        return []
    vertex_pos = {v: i for i, v in enumerate(h.vertices)}
    results: list[tuple[frozenset[str], frozenset[str]]] = []
    for combo in itertools.product((-1, 0, 1), repeat=d):
        if all(c == 0 for c in combo):
            continue
        coeffs = [Fraction(0)] * h.n_vertices
        for c, vec in zip(combo, basis.vectors):
            if c == 0:
                continue
            for lab, val in vec.items():
                if val != 0:
                    coeffs[vertex_pos[lab]] += c * val
        lead = next((x for x in coeffs if x != 0), None)
        if lead is None or lead < 0:
            continue
        if any(x not in (-1, 0, 1) for x in coeffs):
            continue
        support = [i for i, x in enumerate(coeffs) if x != 0]
        if len(support) > max_support:
            continue
        u_set = frozenset(h.vertices[i] for i in support if coeffs[i] == 1)
        v_set = frozenset(h.vertices[i] for i in support if coeffs[i] == -1)
        ok, _ = verify_equal_edge_partition(h, u_set, v_set)
        if ok:
            results.append((u_set, v_set))
    results.sort(
        key=lambda pair: (
            len(pair[0] | pair[1]),
            tuple(sorted(vertex_pos[v] for v in pair[0] | pair[1])),
            tuple(sorted(vertex_pos[v] for v in pair[0])),
        )
    )
    return results


def verify_star_partition(h: Hypergraph, center: str, parts: Iterable[str]) -> bool:
    """True iff the stars of ``parts`` partition the star of ``center``.

    The parts' stars must be pairwise disjoint and their union must equal
    the center's star. ``center`` may not appear among the parts.
    """
    center = str(center)
    part_list = [str(p) for p in parts]
    if center in part_list:
        raise OverlapError(f"center {center!r} may not be one of the parts")
    unknown = ({center} | set(part_list)) - set(h.vertices)
    if unknown:
        raise UnknownLabelError(f"unknown vertices: {sorted(unknown)}")
    if len(set(part_list)) != len(part_list):
        raise OverlapError("parts must be distinct vertices")
    stars = [h.star(p) for p in part_list]
    total = 0
    union: set[str] = set()
    for s in stars:
        total += len(s)
        union |= s
    if total != len(union):
        return False
    return union == h.star(center)


def verify_equal_star_partition(
    h: Hypergraph, e_part: Iterable[str], f_part: Iterable[str]
) -> tuple[bool, dict[str, tuple[int, int]]]:
    """Check |star(v) meet E| == |star(v) meet F| for every vertex v.

    E and F must be disjoint sets of hyperedge labels. This is the dual of
    verify_equal_edge_partition, so equivalently the signed indicator
    chi_E - chi_F is annihilated by the incidence matrix.
    """
    e_set = frozenset(str(x) for x in e_part)
    f_set = frozenset(str(x) for x in f_part)
    unknown = (e_set | f_set) - set(h.edge_labels)
    if unknown:
        raise UnknownLabelError(f"unknown hyperedges: {sorted(unknown)}")
    if e_set & f_set:
        raise NotDisjointError(f"sets overlap on {sorted(e_set & f_set)}")
    table = {}
    for v in h.vertices:
        star = h.star(v)
        table[v] = (len(star & e_set), len(star & f_set))
    ok = all(a == b for a, b in table.values())
    return ok, table


# -- covering projections ------------------------------------------------------


class ProjectionClass(str, Enum):
    NOT_HOMOMORPHISM = "NotHomomorphism"
    HOMOMORPHISM = "Homomorphism"
    COVERING = "Covering"
    CARDINALITY_PRESERVING_COVERING = "CardinalityPreservingCovering"


def _edge_image_map(
    source: Hypergraph, target: Hypergraph, f: Mapping[str, str]
) -> dict[str, str] | None:
    """Map each source hyperedge label to the target hyperedge its image equals.

    Returns None when some image set is not a hyperedge of the target.
    """
    by_members = {members: label for label, members in target.hyperedges}
    out: dict[str, str] = {}
    for label, members in source.hyperedges:
        image = frozenset(f[v] for v in members)
        hit = by_members.get(image)
        if hit is None:
            return None
        out[label] = hit
    return out


def _validate_vertex_map(
    source: Hypergraph, target: Hypergraph, f: Mapping[str, str]
) -> dict[str, str]:
    fmap = {str(k): str(v) for k, v in f.items()}
    missing = set(source.vertices) - set(fmap)
    if missing:
        raise UnknownLabelError(f"map not defined on: {sorted(missing)}")
    extra = set(fmap) - set(source.vertices)
    if extra:
        raise UnknownLabelError(f"map defined on unknown vertices: {sorted(extra)}")
    bad_targets = set(fmap.values()) - set(target.vertices)
    if bad_targets:
        raise UnknownLabelError(f"map hits unknown target vertices: {sorted(bad_targets)}")
    return fmap


def verify_covering_projection(
    source: Hypergraph, target: Hypergraph, f: Mapping[str, str]
) -> ProjectionClass:
    """Classify a vertex map between hypergraphs.

    The classes are strictly ordered: a homomorphism sends every hyperedge
    onto a hyperedge of the target; a covering is additionally surjective
    with every star mapped bijectively onto the image vertex's star; and a
    cardinality preserving covering also keeps every hyperedge's size.
    The strongest applicable class is returned.
    """
    fmap = _validate_vertex_map(source, target, f)
    edge_map = _edge_image_map(source, target, fmap)
    if edge_map is None:
        return ProjectionClass.NOT_HOMOMORPHISM
    surjective = set(fmap.values()) == set(target.vertices)
    covering = surjective
    if covering:
        for v in source.vertices:
            star = source.star(v)
            images = {edge_map[e] for e in star}
            if len(images) != len(star) or images != target.star(fmap[v]):
                covering = False
                break
    if not covering:
        return ProjectionClass.HOMOMORPHISM
    preserves = all(
        len(members) == len(target.members(edge_map[label]))
        for label, members in source.hyperedges
    )
    if preserves:
        return ProjectionClass.CARDINALITY_PRESERVING_COVERING
    return ProjectionClass.COVERING


def pullback_dependent_set(
    source: Hypergraph,
    target: Hypergraph,
    f: Mapping[str, str],
    cert: Certificate,
) -> Certificate:
    """Pull a vertex-dependence certificate back through a covering.

    ``f`` must classify as a cardinality preserving covering from source to
    target, and ``cert`` must be a vertex certificate of the target. The
    pullback assigns x(u) = cert(f(u)); the result is again annihilated by
    the transposed incidence matrix of the source, which is checked exactly.
    """
    fmap = _validate_vertex_map(source, target, f)
    cls = verify_covering_projection(source, target, fmap)
    if cls != ProjectionClass.CARDINALITY_PRESERVING_COVERING:
        raise NotCardinalityPreservingError(f"map classifies as {cls.value}")
    if cert.annihilated_by != VERTEX_AXIS or set(cert.coefficients) != set(target.vertices):
        raise InvalidCertificateError("certificate must live on the target's vertices")
    image = incidence_matrix(target).transpose().apply(cert.coefficients)
    if any(v != 0 for v in image.values()):
        raise InvalidCertificateError("certificate is not annihilated on the target")
    coeffs = {u: cert.coefficients[fmap[u]] for u in source.vertices}
    check = incidence_matrix(source).transpose().apply(coeffs)
    assert all(v == 0 for v in check.values()), "pullback must stay in the nullspace"
    return _certificate_from_vector(
        CertificateKind.DEPENDENT_VERTICES, coeffs, VERTEX_AXIS
    )
