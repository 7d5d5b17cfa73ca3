"""Dependence certificates, units, contraction, partitions, coverings."""

from fractions import Fraction

import pytest

from hyperlin import (
    Hypergraph,
    contraction_nullspace_lift,
    dependent_hyperedges,
    dependent_vertices,
    find_equal_edge_partitions,
    is_dependent_set,
    pullback_dependent_set,
    unit_contraction,
    units,
    verify_covering_projection,
    verify_equal_edge_partition,
    verify_equal_star_partition,
    verify_unit_maximality,
)
from hyperlin.errors import (
    NotCardinalityPreservingError,
    NotDisjointError,
    NotInNullspaceError,
)
from hyperlin.hypergraph import incidence_graph_adjacency, incidence_matrix
from hyperlin.linalg import nullspace
from hyperlin.structures import (
    Certificate,
    CertificateKind,
    ProjectionClass,
    VERTEX_AXIS,
    partition_certificate,
    vertex_pair_certificate,
)
from hyperlin import fixtures as fx


def test_dependent_vertices_alternating_signs():
    cert = dependent_vertices(fx.hub_cycle())
    assert cert is not None
    assert cert.support == frozenset({"1", "2", "3", "4"})
    assert cert.coefficients == {
        "1": Fraction(1),
        "2": Fraction(-1),
        "3": Fraction(1),
        "4": Fraction(-1),
        "5": Fraction(0),
    }


def test_dependent_hyperedges_alternating_signs():
    cert = dependent_hyperedges(fx.hub_cycle())
    assert cert is not None
    assert cert.support == frozenset({"e1", "e2", "e3", "e4"})
    assert cert.coefficients["e1"] == 1
    assert cert.coefficients["e2"] == -1
    assert cert.coefficients["e3"] == 1
    assert cert.coefficients["e4"] == -1
    assert cert.coefficients["e5"] == 0


def test_independent_hypergraph_has_no_certificates():
    h = fx.nested_chain(4)
    assert dependent_vertices(h) is None
    assert dependent_hyperedges(h) is None


def test_is_dependent_set_detects_only_real_supports():
    h = fx.hub_cycle()
    assert is_dependent_set(h, ["1", "2", "3", "4"]) is not None
    assert is_dependent_set(h, ["1", "2", "3"]) is None
    assert is_dependent_set(h, ["1", "2", "3", "4", "5"]) is not None
    assert (
        is_dependent_set(h, ["e1", "e2", "e3", "e4"], axis="hyperedges") is not None
    )
    assert is_dependent_set(h, ["e1", "e2", "e5"], axis="hyperedges") is None


def test_certificates_are_annihilated_exactly():
    h = fx.hub_cycle()
    inc = incidence_matrix(h)
    vcert = dependent_vertices(h)
    assert all(v == 0 for v in inc.transpose().apply(vcert.coefficients).values())
    ecert = dependent_hyperedges(h)
    assert all(v == 0 for v in inc.apply(ecert.coefficients).values())


def test_unit_decomposition_frozen_example():
    dec = units(fx.unit_blocks())
    got = [(u.members, u.generator) for u in dec.units]
    assert got == [
        (("1", "2"), frozenset({"e1", "e2"})),
        (("10",), frozenset({"e1", "e3", "e5"})),
        (("11",), frozenset({"e1", "e5"})),
        (("3", "4"), frozenset({"e2", "e3"})),
        (("5", "6", "7"), frozenset({"e1", "e4"})),
        (("8", "9"), frozenset({"e4", "e5"})),
    ]
    assert dec.labels == ("{1,2}", "{10}", "{11}", "{3,4}", "{5,6,7}", "{8,9}")


def test_units_partition_the_vertices():
    for h in (fx.hub_cycle(), fx.unit_blocks(), fx.balanced_overlap()):
        dec = units(h)
        all_members = [v for u in dec.units for v in u.members]
        assert sorted(all_members) == sorted(h.vertices)


def test_unit_members_share_their_star():
    h = fx.unit_blocks()
    for u in units(h).units:
        stars = {h.star(v) for v in u.members}
        assert len(stars) == 1
        assert stars.pop() == u.generator


def test_verify_unit_maximality():
    h = fx.unit_blocks()
    assert verify_unit_maximality(h, ["1", "2"])
    assert verify_unit_maximality(h, ["5", "6", "7"])
    # strict subset of a unit is not maximal
    assert not verify_unit_maximality(h, ["5", "6"])
    # mixed stars are not a unit at all
    assert not verify_unit_maximality(h, ["1", "3"])


def test_vertex_pair_certificate_for_twins():
    h = fx.unit_blocks()
    cert = vertex_pair_certificate(h, "1", "2")
    assert cert.support == frozenset({"1", "2"})
    assert cert.coefficients["1"] == 1
    assert cert.coefficients["2"] == -1
    a = incidence_graph_adjacency(h)
    assert all(v == 0 for v in a.apply(cert.coefficients).values())


def test_contraction_shape_and_bijection():
    con = unit_contraction(fx.unit_blocks())
    assert con.contracted.n_vertices == 6
    assert con.contracted.n_hyperedges == 5
    assert sorted(con.edge_map) == sorted(con.source.edge_labels)
    assert sorted(con.edge_map.values()) == sorted(con.contracted.edge_labels)
    # every vertex maps onto the unit containing it
    for u in con.decomposition.units:
        for v in u.members:
            assert con.vertex_map[v] == u.label


def test_contracting_twice_changes_nothing():
    con = unit_contraction(fx.unit_blocks())
    again = unit_contraction(con.contracted)
    assert all(len(u.members) == 1 for u in again.decomposition.units)
    assert again.contracted.n_vertices == con.contracted.n_vertices
    assert again.contracted.n_hyperedges == con.contracted.n_hyperedges


def test_nullity_drops_by_unit_excess_under_contraction():
    h = fx.unit_blocks()
    big = nullspace(incidence_graph_adjacency(h))
    assert big.dimension == 6
    con = unit_contraction(h)
    small = nullspace(incidence_graph_adjacency(con.contracted))
    assert small.dimension == 1
    excess = sum(len(u.members) - 1 for u in con.decomposition.units)
    assert big.dimension == small.dimension + excess


def test_contraction_lift_is_annihilated():
    h = fx.unit_blocks()
    con = unit_contraction(h)
    small = nullspace(incidence_graph_adjacency(con.contracted))
    a = incidence_graph_adjacency(h)
    for vec in small.vectors:
        lifted = contraction_nullspace_lift(h, vec)
        assert all(v == 0 for v in a.apply(lifted).values())


def test_lift_rejects_vectors_outside_the_nullspace():
    h = fx.unit_blocks()
    con = unit_contraction(h)
    labels = con.contracted.vertices + con.contracted.edge_labels
    bogus = {lab: Fraction(1) for lab in labels}
    with pytest.raises(NotInNullspaceError):
        contraction_nullspace_lift(h, bogus)


def test_verify_equal_edge_partition_counts():
    h = fx.balanced_overlap()
    ok, table = verify_equal_edge_partition(h, ["1", "5"], ["2", "3", "4"])
    assert ok
    assert table == {"e1": (2, 2), "e2": (2, 2), "e3": (2, 2)}
    bad, table2 = verify_equal_edge_partition(h, ["1"], ["2"])
    assert not bad
    assert table2["e2"] == (1, 0)


def test_verify_equal_edge_partition_requires_disjoint_sets():
    with pytest.raises(NotDisjointError):
        verify_equal_edge_partition(fx.balanced_overlap(), ["1", "2"], ["2", "3"])


def test_find_equal_edge_partitions_frozen_examples():
    assert find_equal_edge_partitions(fx.balanced_overlap()) == [
        (frozenset({"1"}), frozenset({"5"})),
        (frozenset({"1", "5"}), frozenset({"2", "3", "4"})),
    ]
    assert find_equal_edge_partitions(fx.hub_cycle()) == [
        (frozenset({"1", "3"}), frozenset({"2", "4"}))
    ]


def test_found_partitions_match_the_nullspace_both_ways():
    h = fx.balanced_overlap()
    inc_t = incidence_matrix(h).transpose()
    for u_set, v_set in find_equal_edge_partitions(h):
        chi = {v: Fraction(1) for v in u_set}
        chi.update({v: Fraction(-1) for v in v_set})
        assert all(x == 0 for x in inc_t.apply(chi).values())


def test_partition_certificate_wraps_the_indicator():
    cert = partition_certificate(fx.balanced_overlap(), ["1", "5"], ["2", "3", "4"])
    assert cert.kind == CertificateKind.EQUAL_EDGE_PARTITION
    assert cert.annihilated_by == VERTEX_AXIS
    assert cert.coefficients["1"] == 1
    assert cert.coefficients["2"] == -1


def test_equal_star_partition_on_edge_sets():
    h = fx.hub_cycle()
    ok, table = verify_equal_star_partition(h, ["e1", "e3"], ["e2", "e4"])
    assert ok
    assert table["5"] == (2, 2)
    bad, _ = verify_equal_star_partition(h, ["e1"], ["e2"])
    assert not bad


def test_covering_projection_classes():
    cover, base, proj = fx.double_cover()
    assert (
        verify_covering_projection(cover, base, proj)
        is ProjectionClass.CARDINALITY_PRESERVING_COVERING
    )
    con = unit_contraction(fx.unit_blocks())
    got = verify_covering_projection(
        fx.unit_blocks(), con.contracted, dict(con.vertex_map)
    )
    assert got is ProjectionClass.COVERING


def test_non_projection_is_rejected():
    cover, base, proj = fx.double_cover()
    broken = dict(proj)
    broken["u1"] = "2"  # no longer maps stars onto stars
    got = verify_covering_projection(cover, base, broken)
    assert got is not ProjectionClass.CARDINALITY_PRESERVING_COVERING
    assert got is not ProjectionClass.COVERING


def test_pullback_lifts_certificates_exactly():
    cover, base, proj = fx.double_cover()
    cert = dependent_vertices(base)
    assert cert is not None
    lifted = pullback_dependent_set(cover, base, proj, cert)
    assert lifted.support == frozenset(
        u for u, b in proj.items() if b in cert.support
    )
    inc_t = incidence_matrix(cover).transpose()
    assert all(v == 0 for v in inc_t.apply(lifted.coefficients).values())


def test_pullback_requires_cardinality_preservation():
    h = fx.unit_blocks()
    con = unit_contraction(h)
    cert = dependent_vertices(con.contracted)
    if cert is None:
        small = nullspace(incidence_matrix(con.contracted).transpose())
        assert small.dimension == 0
        pytest.skip("contraction has no vertex certificate to pull back")
    with pytest.raises(NotCardinalityPreservingError):
        pullback_dependent_set(h, con.contracted, dict(con.vertex_map), cert)


def test_certificate_validation():
    with pytest.raises(Exception):
        Certificate(
            CertificateKind.DEPENDENT_VERTICES,
            frozenset({"a"}),
            {"a": Fraction(0)},
            VERTEX_AXIS,
        )
