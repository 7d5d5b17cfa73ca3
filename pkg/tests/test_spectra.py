"""Weighted matrices and float spectra, cross-checked against numpy."""

from fractions import Fraction

import numpy as np
import pytest

from hyperlin import (
    Hypergraph,
    build_A,
    build_A_GH,
    build_D,
    build_K,
    build_L,
    build_Q,
    dependent_hyperedges,
    dependent_vertices,
    eigenvalues_sym,
    hypergraph_spectrum,
    incidence_matrix,
    verify_A_eigenvalue,
    verify_L_eigenvalue,
    verify_Q_annihilation,
    vertex_pair_certificate,
    weight_scheme,
)
from hyperlin.errors import (
    InvalidCertificateError,
    IsolatedVertexError,
    NotSymmetrizableError,
    SingletonEdgeError,
)
from hyperlin.linalg import RationalMatrix, nullspace
from hyperlin.spectra import unit_weights
from hyperlin.structures import Certificate, CertificateKind, VERTEX_AXIS
from hyperlin import fixtures as fx


def _to_numpy(m: RationalMatrix) -> np.ndarray:
    return np.array(
        [[float(m.entry(r, c)) for c in m.col_labels] for r in m.row_labels]
    )


def test_weight_presets_exact_values():
    h = fx.unit_blocks()
    w_unit = weight_scheme(h, "unit")
    assert all(v == 1 for v in w_unit.vertex_weights.values())
    assert all(v == 1 for v in w_unit.edge_weights.values())
    w_edge = weight_scheme(h, "edgenorm")
    assert w_edge.edge_weights["e1"] == Fraction(1, 6)
    assert w_edge.edge_weights["e2"] == Fraction(1, 3)
    assert all(v == 1 for v in w_edge.vertex_weights.values())
    w_full = weight_scheme(h, "fullnorm")
    assert w_full.edge_weights == w_edge.edge_weights
    assert w_full.vertex_weights["1"] == Fraction(1, 2)
    assert w_full.vertex_weights["10"] == Fraction(1, 3)


def test_edgenorm_rejects_singleton_edges():
    h = fx.nested_chain(3)  # contains the singleton hyperedge {1}
    with pytest.raises(SingletonEdgeError):
        weight_scheme(h, "edgenorm")


def test_fullnorm_rejects_isolated_vertices():
    h = Hypergraph.from_members([("e", ["a", "b"])], vertices=["a", "b", "c"])
    with pytest.raises(IsolatedVertexError):
        weight_scheme(h, "fullnorm")


def test_matrix_builders_on_a_single_edge():
    h = Hypergraph.from_members([("e", ["a", "b"])])
    w = unit_weights(h)
    q = build_Q(h, w)
    assert q.row("a") == {"a": Fraction(1), "b": Fraction(1)}
    d = build_D(h, w)
    assert d.entry("a", "a") == 1 and d.entry("a", "b") == 0
    a = build_A(h, w)
    assert a.entry("a", "a") == 0 and a.entry("a", "b") == 1
    k = build_K(h, w)
    assert k.entry("a", "a") == 1 and k.entry("a", "b") == 0
    lap = build_L(h, w)
    assert lap.row("a") == {"a": Fraction(1), "b": Fraction(-1)}


def test_Q_is_weighted_incidence_product():
    h = fx.unit_blocks()
    for preset in ("unit", "edgenorm", "fullnorm"):
        w = weight_scheme(h, preset)
        inc = incidence_matrix(h)
        dv = RationalMatrix.diagonal(h.vertices, w.vertex_weights)
        de = RationalMatrix.diagonal(h.edge_labels, w.edge_weights)
        assert build_Q(h, w) == dv @ inc @ de @ inc.transpose()


def test_A_GH_matches_numpy_spectrum():
    h = fx.unit_blocks()
    spec = hypergraph_spectrum(h, "A_GH")
    expected = np.linalg.eigvalsh(_to_numpy(build_A_GH(h)))
    got = np.array(spec.values())
    assert np.allclose(np.sort(got), np.sort(expected), atol=1e-8)


@pytest.mark.parametrize("matrix", ["Q", "A", "L", "K", "D"])
@pytest.mark.parametrize("preset", ["unit", "edgenorm", "fullnorm"])
def test_weighted_spectra_match_numpy(matrix, preset):
    h = fx.unit_blocks()
    w = weight_scheme(h, preset)
    spec = hypergraph_spectrum(h, matrix, w)
    builders = {"Q": build_Q, "A": build_A, "L": build_L, "K": build_K, "D": build_D}
    floatm = _to_numpy(builders[matrix](h, w))
    # the weighted matrices need not be symmetric, but are similar to
    # symmetric ones; numpy's general eigenvalues come back essentially real
    expected = np.linalg.eigvals(floatm)
    assert np.max(np.abs(expected.imag)) < 1e-9
    got = np.array(spec.values())
    assert np.allclose(np.sort(got), np.sort(expected.real), atol=1e-8)


def test_spectrum_groups_multiplicities():
    h = Hypergraph.from_members([("e", ["a", "b", "c"])])
    spec = hypergraph_spectrum(h, "A")
    assert spec.dimension == 3
    assert spec.multiplicity_of(-1.0) == 2
    assert spec.multiplicity_of(2.0) == 1


def test_eigenvalues_sym_rejects_unsymmetrizable_input():
    m = RationalMatrix.from_rows(["a", "b"], ["a", "b"], [[0, 1], [0, 0]])
    with pytest.raises(NotSymmetrizableError):
        eigenvalues_sym(m)


def test_spectrum_symmetric_about_zero_for_incidence_graph():
    spec = hypergraph_spectrum(fx.hub_cycle(), "A_GH")
    vals = sorted(spec.values())
    assert np.allclose(np.array(vals), -np.array(vals[::-1]), atol=1e-8)


def test_Q_annihilation_of_all_certificates():
    for h in (fx.hub_cycle(), fx.unit_blocks(), fx.balanced_overlap()):
        basis = nullspace(incidence_matrix(h).transpose())
        for preset in ("unit", "edgenorm", "fullnorm"):
            w = weight_scheme(h, preset)
            for vec in basis.vectors:
                support = frozenset(k for k, v in vec.items() if v != 0)
                cert = Certificate(
                    CertificateKind.DEPENDENT_VERTICES, support, dict(vec), VERTEX_AXIS
                )
                assert verify_Q_annihilation(h, w, cert)


def test_Q_annihilation_rejects_non_kernel_vectors():
    h = fx.hub_cycle()
    coeffs = {v: Fraction(0) for v in h.vertices}
    coeffs["1"] = Fraction(1)
    cert = Certificate(
        CertificateKind.DEPENDENT_VERTICES, frozenset({"1"}), coeffs, VERTEX_AXIS
    )
    assert not verify_Q_annihilation(h, unit_weights(h), cert)


def test_unit_pair_eigenvalue_per_preset():
    h = fx.unit_blocks()
    cert = vertex_pair_certificate(h, "1", "2")
    expected = {
        "unit": Fraction(-2),
        "edgenorm": Fraction(-1, 2),
        "fullnorm": Fraction(-1, 4),
    }
    for preset, eigenvalue in expected.items():
        w = weight_scheme(h, preset)
        assert verify_A_eigenvalue(h, w, cert) == eigenvalue


def test_unit_pair_eigenvalues_appear_in_float_spectra():
    h = fx.unit_blocks()
    for preset, eigenvalue in (("unit", -2.0), ("edgenorm", -0.5), ("fullnorm", -0.25)):
        spec = hypergraph_spectrum(h, "A", weight_scheme(h, preset))
        assert any(abs(v - eigenvalue) < 1e-8 for v in spec.values())


def test_L_eigenvalue_for_unit_pairs():
    h = fx.unit_blocks()
    cert = vertex_pair_certificate(h, "1", "2")
    for preset in ("unit", "edgenorm", "fullnorm"):
        w = weight_scheme(h, preset)
        lam = verify_L_eigenvalue(h, w, cert)
        assert lam is not None and lam > 0
        # the certificate really is an eigenvector of L for this eigenvalue
        lap = build_L(h, w)
        image = lap.apply(cert.coefficients)
        assert image == {
            v: lam * cert.coefficients[v] for v in h.vertices
        }


def test_eigen_checks_return_none_when_not_constant():
    h = fx.hub_cycle()
    cert = dependent_vertices(h)
    w = unit_weights(h)
    # support {1,2,3,4} has non-constant weighted degrees toward the chord
    assert verify_A_eigenvalue(h, w, cert) is None


def test_eigen_checks_reject_wrong_axis():
    h = fx.hub_cycle()
    cert = dependent_hyperedges(h)
    with pytest.raises(InvalidCertificateError):
        verify_A_eigenvalue(h, unit_weights(h), cert)
