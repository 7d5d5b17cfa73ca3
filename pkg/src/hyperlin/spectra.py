"""Weighted hypergraph matrices and their spectra.

Matrix construction is exact rational arithmetic throughout. Floating
point enters exactly once, inside eigenvalues_sym, after the exact
symmetry (or similarity) checks have passed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from .errors import (
    InvalidCertificateError,
    IsolatedVertexError,
    NoConvergenceError,
    NotSquareError,
    NotSymmetrizableError,
    SingletonEdgeError,
    WeightDomainMismatchError,
)
from .hypergraph import Hypergraph, incidence_graph_adjacency, incidence_matrix
from .linalg import RationalMatrix, rat
from .structures import Certificate, CertificateKind, VERTEX_AXIS

__all__ = [
    "WeightScheme",
    "Spectrum",
    "unit_weights",
    "edge_normalized_weights",
    "fully_normalized_weights",
    "weight_scheme",
    "build_Q",
    "build_D",
    "build_A",
    "build_K",
    "build_L",
    "build_A_GH",
    "eigenvalues_sym",
    "hypergraph_spectrum",
    "verify_Q_annihilation",
    "verify_A_eigenvalue",
    "verify_L_eigenvalue",
]

WEIGHT_PRESETS = ("unit", "edgenorm", "fullnorm")


@dataclass(frozen=True)
class WeightScheme:
    """Positive rational weights on vertices and hyperedges."""

    name: str
    vertex_weights: dict[str, Fraction]
    edge_weights: dict[str, Fraction]

    def __post_init__(self) -> None:
        object.__setattr__(
            self, "vertex_weights", {str(k): rat(v) for k, v in self.vertex_weights.items()}
        )
        object.__setattr__(
            self, "edge_weights", {str(k): rat(v) for k, v in self.edge_weights.items()}
        )

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "vertex_weights": {k: str(v) for k, v in self.vertex_weights.items()},
            "edge_weights": {k: str(v) for k, v in self.edge_weights.items()},
        }


def unit_weights(h: Hypergraph) -> WeightScheme:
    """All weights equal to one."""
    return WeightScheme(
        name="unit",
        vertex_weights={v: Fraction(1) for v in h.vertices},
        edge_weights={e: Fraction(1) for e in h.edge_labels},
    )


def edge_normalized_weights(h: Hypergraph) -> WeightScheme:
    """Vertex weight 1, hyperedge weight 1/(|e| - 1).

    Hyperedges of size one make the normalization divide by zero, so they
    are rejected.
    """
    weights = {}
    for label, members in h.hyperedges:
        if len(members) < 2:
            raise SingletonEdgeError(
                f"hyperedge {label!r} has a single member; 1/(|e|-1) is undefined"
            )
        weights[label] = Fraction(1, len(members) - 1)
    return WeightScheme(
        name="edgenorm",
        vertex_weights={v: Fraction(1) for v in h.vertices},
        edge_weights=weights,
    )


def fully_normalized_weights(h: Hypergraph) -> WeightScheme:
    """Vertex weight 1/|star(v)|, hyperedge weight 1/(|e| - 1).

    Requires every star to be nonempty and every hyperedge to have at
    least two members.
    """
    base = edge_normalized_weights(h)
    vweights = {}
    for v in h.vertices:
        deg = h.degree(v)
        if deg == 0:
            raise IsolatedVertexError(f"vertex {v!r} has an empty star")
        vweights[v] = Fraction(1, deg)
    return WeightScheme(name="fullnorm", vertex_weights=vweights, edge_weights=base.edge_weights)


def weight_scheme(h: Hypergraph, name: str) -> WeightScheme:
    """Look up a preset by name: unit, edgenorm, or fullnorm."""
    if name == "unit":
        return unit_weights(h)
    if name == "edgenorm":
        return edge_normalized_weights(h)
    if name == "fullnorm":
        return fully_normalized_weights(h)
    raise ValueError(f"unknown weight preset {name!r}")


def _check_weights(h: Hypergraph, w: WeightScheme) -> None:
    if set(w.vertex_weights) != set(h.vertices):
        raise WeightDomainMismatchError("vertex weights must cover exactly the vertices")
    if set(w.edge_weights) != set(h.edge_labels):
        raise WeightDomainMismatchError("edge weights must cover exactly the hyperedges")
    if any(x <= 0 for x in w.vertex_weights.values()) or any(
        x <= 0 for x in w.edge_weights.values()
    ):
        raise WeightDomainMismatchError("weights must be positive")


def build_Q(h: Hypergraph, w: WeightScheme) -> RationalMatrix:
    """Signless product matrix D_V I D_E I^T.

    Entry (u, v) is the vertex weight of u times the total edge weight of
    the hyperedges containing both u and v. The diagonal carries the
    weighted degree.
    """
    _check_weights(h, w)
    inc = incidence_matrix(h)
    dv = RationalMatrix.diagonal(h.vertices, w.vertex_weights)
    de = RationalMatrix.diagonal(h.edge_labels, w.edge_weights)
    return dv @ inc @ de @ inc.transpose()


def build_D(h: Hypergraph, w: WeightScheme) -> RationalMatrix:
    """Diagonal weighted-degree matrix: entry (v, v) is w_V(v) sum of w_E over star(v)."""
    _check_weights(h, w)
    diag = {
        v: w.vertex_weights[v]
        * sum((w.edge_weights[e] for e in h.star(v)), Fraction(0))
        for v in h.vertices
    }
    return RationalMatrix.diagonal(h.vertices, diag)


def build_A(h: Hypergraph, w: WeightScheme) -> RationalMatrix:
    """Weighted adjacency: Q with the diagonal zeroed (equivalently Q - D)."""
    q = build_Q(h, w)
    rows = [
        tuple(Fraction(0) if i == j else x for j, x in enumerate(row))
        for i, row in enumerate(q.entries)
    ]
    return RationalMatrix(q.row_labels, q.col_labels, tuple(rows))


def build_K(h: Hypergraph, w: WeightScheme) -> RationalMatrix:
    """Diagonal row-sum matrix of the weighted adjacency."""
    a = build_A(h, w)
    diag = {
        lab: sum(row, Fraction(0)) for lab, row in zip(a.row_labels, a.entries)
    }
    return RationalMatrix.diagonal(h.vertices, diag)


def build_L(h: Hypergraph, w: WeightScheme) -> RationalMatrix:
    """Weighted Laplacian K - A."""
    return build_K(h, w) - build_A(h, w)


def build_A_GH(h: Hypergraph) -> RationalMatrix:
    """Adjacency matrix of the incidence graph (vertices then hyperedges)."""
    return incidence_graph_adjacency(h)


@dataclass(frozen=True)
class Spectrum:
    """Grouped eigenvalues of a symmetric (or symmetrizable) matrix."""

    matrix_kind: str
    tolerance: float
    eigenvalues: tuple[tuple[float, int], ...]

    @property
    def dimension(self) -> int:
        return sum(mult for _, mult in self.eigenvalues)

    def values(self) -> list[float]:
        """All eigenvalues, multiplicities expanded, ascending."""
        out: list[float] = []
        for value, mult in self.eigenvalues:
            out.extend([value] * mult)
        return out

    def multiplicity_of(self, x: float, tol: float | None = None) -> int:
        """Total multiplicity within ``tol`` of ``x`` (default: grouping tolerance)."""
        t = self.tolerance if tol is None else tol
        return sum(m for v, m in self.eigenvalues if abs(v - x) <= t)

    def to_json_dict(self) -> dict:
        return {
            "matrix": self.matrix_kind,
            "tol": self.tolerance,
            "eigs": [{"value": v, "multiplicity": m} for v, m in self.eigenvalues],
        }


def _jacobi_eigenvalues(a: np.ndarray, tol: float, max_sweeps: int = 100) -> np.ndarray:
    """Cyclic Jacobi rotations until the off-diagonal Frobenius norm drops below tol."""
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    if n <= 1:
        return np.diagonal(a).copy()

    def off_norm(mat: np.ndarray) -> float:
        off = mat - np.diag(np.diagonal(mat))
        return float(np.sqrt(np.sum(off * off)))

    for _ in range(max_sweeps):
        if off_norm(a) < tol:
            return np.sort(np.diagonal(a).copy())
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                if apq == 0.0:
                    continue
                diff = a[q, q] - a[p, p]
                tau = diff / (2.0 * apq)
                if tau >= 0.0:
                    t = 1.0 / (tau + math.sqrt(1.0 + tau * tau))
                else:
                    t = -1.0 / (-tau + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # apply the rotation to rows p,q and columns p,q in place
                rows_pq = a[[p, q], :].copy()
                a[p, :] = c * rows_pq[0] - s * rows_pq[1]
                a[q, :] = s * rows_pq[0] + c * rows_pq[1]
                cols_pq = a[:, [p, q]].copy()
                a[:, p] = c * cols_pq[:, 0] - s * cols_pq[:, 1]
                a[:, q] = s * cols_pq[:, 0] + c * cols_pq[:, 1]
                a[p, q] = 0.0
                a[q, p] = 0.0
    if off_norm(a) < tol:
        return np.sort(np.diagonal(a).copy())
    raise NoConvergenceError("Jacobi sweeps exhausted before reaching the tolerance")


def _group_eigenvalues(values: Sequence[float], group_tol: float) -> tuple[tuple[float, int], ...]:
    """Cluster ascending values whose successive gaps stay below group_tol."""
    groups: list[tuple[float, int]] = []
    block: list[float] = []
    for v in values:
        if block and v - block[-1] > group_tol:
            groups.append((sum(block) / len(block), len(block)))
            block = []
        block.append(v)
    if block:
        groups.append((sum(block) / len(block), len(block)))
    return tuple(groups)


def eigenvalues_sym(
    m: RationalMatrix,
    tol: float = 1e-12,
    group_tol: float | None = None,
    similarity: Mapping[str, Fraction] | None = None,
    matrix_kind: str = "symmetric",
) -> Spectrum:
    """Eigenvalues of a symmetric or diagonally symmetrizable matrix.

    When ``m`` is not symmetric, a positive diagonal ``similarity`` may be
    declared. The exact condition m[i][j] * d[j] == m[j][i] * d[i] is then
    checked rationally; when it holds, the similar symmetric matrix with
    entries sign(m[i][j]) * sqrt(m[i][j] * m[j][i]) shares the spectrum and
    is handed to the Jacobi iteration.

    Parameters
    ----------
    tol : float
        Jacobi termination: off-diagonal Frobenius norm below this value.
    group_tol : float, optional
        Clustering width for multiplicities; defaults to 10 * tol.

    Raises
    ------
    NotSquareError, NotSymmetrizableError, NoConvergenceError
    """
    if not m.is_square:
        raise NotSquareError("eigenvalues need a square matrix")
    if group_tol is None:
        group_tol = 10.0 * tol
    n = m.rows
    if m.is_symmetric():
        arr = np.array([[float(x) for x in row] for row in m.entries], dtype=float)
    elif similarity is not None:
        d = {str(k): rat(v) for k, v in similarity.items()}
        if set(d) != set(m.row_labels) or m.row_labels != m.col_labels:
            raise NotSymmetrizableError("similarity diagonal must cover the matrix labels")
        if any(x <= 0 for x in d.values()):
            raise NotSymmetrizableError("similarity diagonal must be positive")
        dv = [d[lab] for lab in m.row_labels]
        for i in range(n):
            for j in range(i + 1, n):
                if m.entries[i][j] * dv[j] != m.entries[j][i] * dv[i]:
                    raise NotSymmetrizableError(
                        "matrix is not symmetric under the declared diagonal"
                    )
        arr = np.zeros((n, n), dtype=float)
        for i in range(n):
            arr[i, i] = float(m.entries[i][i])
            for j in range(i + 1, n):
                prod = m.entries[i][j] * m.entries[j][i]
                val = math.sqrt(float(prod))
                if m.entries[i][j] < 0:
                    val = -val
                arr[i, j] = val
                arr[j, i] = val
    else:
        raise NotSymmetrizableError("matrix is not symmetric and no similarity was declared")
    eigs = _jacobi_eigenvalues(arr, tol)
    return Spectrum(
        matrix_kind=matrix_kind,
        tolerance=group_tol,
        eigenvalues=_group_eigenvalues(list(eigs), group_tol),
    )


_MATRIX_BUILDERS = {
    "Q": build_Q,
    "A": build_A,
    "D": build_D,
    "K": build_K,
    "L": build_L,
}


def hypergraph_spectrum(
    h: Hypergraph,
    matrix: str,
    w: WeightScheme | None = None,
    tol: float = 1e-12,
    group_tol: float | None = None,
) -> Spectrum:
    """Spectrum of one of the named hypergraph matrices.

    ``matrix`` is Q, A, D, K, L, or A_GH. Weighted matrices default to unit
    weights; non-unit vertex weights are handled through the exact diagonal
    similarity, so the spectrum is still real.
    """
    if matrix == "A_GH":
        return eigenvalues_sym(
            build_A_GH(h), tol=tol, group_tol=group_tol, matrix_kind="A_GH"
        )
    if matrix not in _MATRIX_BUILDERS:
        raise ValueError(f"unknown matrix kind {matrix!r}")
    scheme = w if w is not None else unit_weights(h)
    built = _MATRIX_BUILDERS[matrix](h, scheme)
    return eigenvalues_sym(
        built,
        tol=tol,
        group_tol=group_tol,
        similarity=scheme.vertex_weights,
        matrix_kind=matrix,
    )


def _require_vertex_certificate(h: Hypergraph, cert: Certificate) -> None:
    if cert.annihilated_by != VERTEX_AXIS:
        raise InvalidCertificateError("certificate must be a vertex-axis certificate")
    if set(cert.coefficients) != set(h.vertices):
        raise InvalidCertificateError("certificate does not live on this hypergraph")


def verify_Q_annihilation(h: Hypergraph, w: WeightScheme, cert: Certificate) -> bool:
    """Exact check that Q annihilates the certificate's coefficient vector.

    Sound vertex-dependence certificates always pass, for every positive
    weight scheme; a perturbed vector fails. The check itself never rounds.
    """
    _require_vertex_certificate(h, cert)
    image = build_Q(h, w).apply(cert.coefficients)
    return all(v == 0 for v in image.values())


def _eigen_check(
    h: Hypergraph,
    cert: Certificate,
    matrix: RationalMatrix,
    per_vertex_constant: Mapping[str, Fraction],
    sign: int,
) -> Fraction | None:
    """Shared engine for the adjacency and Laplacian eigenvalue conditions."""
    _require_vertex_certificate(h, cert)
    if cert.kind != CertificateKind.DEPENDENT_VERTICES:
        raise InvalidCertificateError("certificate kind must be DependentVertices")
    if cert.is_zero:
        raise InvalidCertificateError("the zero vector is not an eigenvector")
    image = incidence_matrix(h).transpose().apply(cert.coefficients)
    if any(v != 0 for v in image.values()):
        raise InvalidCertificateError("certificate is not a dependence certificate")
    constants = {per_vertex_constant[v] for v in cert.support}
    if len(constants) != 1:
        return None
    c = constants.pop()
    expected = Fraction(sign) * c
    image = matrix.apply(cert.coefficients)
    assert all(
        image[v] == expected * cert.coefficients[v] for v in h.vertices
    ), "eigenvalue identity must hold exactly once the constancy condition does"
    return expected


def verify_A_eigenvalue(h: Hypergraph, w: WeightScheme, cert: Certificate) -> Fraction | None:
    """Eigenvalue of the weighted adjacency carried by a dependence certificate.

    When the weighted degree is constant on the certificate's support the
    coefficient vector is an eigenvector of A with eigenvalue minus that
    constant, verified exactly; returns None when the degrees differ.
    """
    _check_weights(h, w)
    degree = {
        v: w.vertex_weights[v]
        * sum((w.edge_weights[e] for e in h.star(v)), Fraction(0))
        for v in h.vertices
    }
    return _eigen_check(h, cert, build_A(h, w), degree, sign=-1)


def verify_L_eigenvalue(h: Hypergraph, w: WeightScheme, cert: Certificate) -> Fraction | None:
    """Eigenvalue of the weighted Laplacian carried by a dependence certificate.

    The relevant per-vertex constant sums edge weights over the stars of all
    vertices jointly incident with v, scaled by v's weight. When constant on
    the support, L has the certificate as an eigenvector with that eigenvalue.
    """
    _check_weights(h, w)
    constant = {}
    for v in h.vertices:
        star_v = h.star(v)
        total = Fraction(0)
        for u in h.vertices:
            shared = star_v & h.star(u)
            total += sum((w.edge_weights[e] for e in shared), Fraction(0))
        constant[v] = w.vertex_weights[v] * total
    return _eigen_check(h, cert, build_L(h, w), constant, sign=1)
