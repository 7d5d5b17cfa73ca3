"""Centralities: walk-based, projection-based, and spectral."""

from fractions import Fraction

import numpy as np
import pytest

from hyperlin import (
    Hypergraph,
    WalkPolicy,
    graph_projection,
    perron_centrality,
    rw_betweenness,
    rw_closeness,
    transition_matrix,
    unit_closeness,
    unit_distance,
    unit_eccentricity,
    units,
)
from hyperlin.errors import (
    DisconnectedError,
    TooFewEdgesError,
    WeightDomainMismatchError,
)
from hyperlin.spectra import build_Q, unit_weights
from hyperlin import fixtures as fx


def _path():
    return Hypergraph.from_members([("e1", ["a", "b"]), ("e2", ["b", "c"])])


def test_graph_projection_nodes_and_edges_frozen():
    gp = graph_projection(fx.unit_blocks())
    assert gp.nodes == ("{1,2}", "{10}", "{11}", "{3,4}", "{5,6,7}", "{8,9}")
    assert gp.edges == (
        ("{1,2}", "{10}"),
        ("{1,2}", "{11}"),
        ("{1,2}", "{3,4}"),
        ("{1,2}", "{5,6,7}"),
        ("{10}", "{11}"),
        ("{10}", "{3,4}"),
        ("{10}", "{5,6,7}"),
        ("{10}", "{8,9}"),
        ("{11}", "{5,6,7}"),
        ("{11}", "{8,9}"),
        ("{5,6,7}", "{8,9}"),
    )
    assert gp.is_connected()


def test_projection_adjacency_requires_a_common_hyperedge():
    gp = graph_projection(fx.unit_blocks())
    # {1,2} and {8,9} never sit inside one hyperedge together
    assert ("{1,2}", "{8,9}") not in gp.edges
    assert ("{8,9}", "{1,2}") not in gp.edges


def test_unit_distance():
    h = fx.unit_blocks()
    assert unit_distance(h, "1", "2") == 0
    assert unit_distance(h, "1", "10") == 1
    assert unit_distance(h, "1", "8") == 2


def test_rw_closeness_on_a_path():
    tm = transition_matrix(_path(), WalkPolicy.uniform_nonlazy())
    rep = rw_closeness(tm)
    assert rep.values == {
        "a": Fraction(3, 11),
        "b": Fraction(3, 4),
        "c": Fraction(3, 11),
    }
    rep0 = rw_closeness(tm, self_time="zero")
    assert rep0.values["b"] == Fraction(3, 2)
    assert rep0.values["a"] == Fraction(3, 7)


def test_rw_betweenness_symmetry_and_center():
    tm = transition_matrix(_path(), WalkPolicy.uniform_nonlazy())
    rep = rw_betweenness(tm, horizon=40)
    assert rep.values["a"] == rep.values["c"]
    assert rep.values["b"] > rep.values["a"]


def test_walk_centralities_constant_on_units():
    h = fx.unit_blocks()
    tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
    for rep in (rw_closeness(tm), rw_betweenness(tm, horizon=12)):
        for u in units(h).units:
            assert len({rep.values[v] for v in u.members}) == 1


def test_unit_closeness_on_a_path():
    rep = unit_closeness(_path())
    assert rep.values == {
        "a": Fraction(1, 3),
        "b": Fraction(1, 2),
        "c": Fraction(1, 3),
    }


def test_unit_eccentricity_on_a_path():
    rep = unit_eccentricity(_path())
    assert rep.values == {"a": 2, "b": 1, "c": 2}


def test_unit_centralities_need_two_edges():
    h = Hypergraph.from_members([("e", ["a", "b"])])
    with pytest.raises(TooFewEdgesError):
        unit_closeness(h)


def test_unit_centralities_need_connectivity():
    h = Hypergraph.from_members([("e1", ["a", "b"]), ("e2", ["c", "d"])])
    with pytest.raises(DisconnectedError):
        unit_closeness(h)


def test_perron_on_a_single_edge():
    h = Hypergraph.from_members([("e", ["a", "b"])])
    rep = perron_centrality(h)
    assert abs(rep.parameters["spectral_radius"] - 2.0) < 1e-10
    assert abs(rep.values["a"] - rep.values["b"]) < 1e-12


def test_perron_matches_numpy_extreme_eigenvalue():
    h = fx.unit_blocks()
    rep = perron_centrality(h)
    q = build_Q(h, unit_weights(h))
    arr = np.array(
        [[float(q.entry(r, c)) for c in q.col_labels] for r in q.row_labels]
    )
    top = max(np.linalg.eigvalsh(arr))
    assert abs(rep.parameters["spectral_radius"] - top) < 1e-8
    assert rep.parameters["residual"] < 1e-10


def test_perron_constant_on_units():
    h = fx.unit_blocks()
    rep = perron_centrality(h)
    for u in units(h).units:
        vals = [rep.values[v] for v in u.members]
        assert max(vals) - min(vals) < 1e-10
    assert all(v > 0 for v in rep.values.values())


def test_perron_requires_connectivity():
    h = Hypergraph.from_members([("e1", ["a", "b"]), ("e2", ["c", "d"])])
    with pytest.raises(DisconnectedError):
        perron_centrality(h)


def test_perron_rejects_mismatched_weight_domain():
    h = Hypergraph.from_members([("e1", ["a", "b"]), ("e2", ["b", "c"])])
    with pytest.raises(WeightDomainMismatchError):
        perron_centrality(h, edge_weights={"e1": Fraction(1)})
