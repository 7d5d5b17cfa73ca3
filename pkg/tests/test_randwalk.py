"""Walk policies, exact hitting times, first-hit laws, seeded simulation."""

from fractions import Fraction

import pytest

from hyperlin import (
    Hypergraph,
    WalkPolicy,
    first_hit_probabilities,
    hitting_times,
    simulate,
    step_distribution,
    transition_matrix,
    verify_partition_transition,
)
from hyperlin.errors import (
    BadDistributionError,
    BadHorizonError,
    IsolatedVertexError,
    NotUniformPolicyError,
    SingletonEdgeNonLazyError,
    UnreachableError,
)
from hyperlin.randwalk import SplitMix64, _cumulative_table, trajectory_seed
from hyperlin import fixtures as fx


def _triangle():
    return Hypergraph.from_members([("e", ["a", "b", "c"])])


def test_nonlazy_rows_on_a_single_edge():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    assert tm.matrix.row("a") == {
        "a": Fraction(0),
        "b": Fraction(1, 2),
        "c": Fraction(1, 2),
    }


def test_lazy_rows_on_a_single_edge():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_lazy())
    assert tm.matrix.row("a") == {
        "a": Fraction(1, 3),
        "b": Fraction(1, 3),
        "c": Fraction(1, 3),
    }


def test_rows_are_stochastic_on_fixtures():
    for h in (fx.hub_cycle(), fx.unit_blocks(), fx.balanced_overlap()):
        for policy in (WalkPolicy.uniform_nonlazy(), WalkPolicy.uniform_lazy()):
            tm = transition_matrix(h, policy)
            for u in h.vertices:
                assert sum(tm.matrix.row(u).values()) == 1


def test_nonlazy_walk_equals_normalized_adjacency():
    """P[u][v] = sum over shared edges of 1/|E_u| * 1/(|e|-1), zero diagonal."""
    for h in (fx.hub_cycle(), fx.unit_blocks()):
        tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
        for u in h.vertices:
            row = tm.matrix.row(u)
            assert row[u] == 0
            for v in h.vertices:
                if v == u:
                    continue
                expected = sum(
                    (
                        Fraction(1, h.degree(u)) * Fraction(1, len(h.members(e)) - 1)
                        for e in h.star(u)
                        if v in h.members(e)
                    ),
                    Fraction(0),
                )
                assert row[v] == expected


def test_isolated_vertices_cannot_walk():
    h = Hypergraph.from_members([("e", ["a", "b"])], vertices=["a", "b", "c"])
    with pytest.raises(IsolatedVertexError):
        transition_matrix(h, WalkPolicy.uniform_nonlazy())


def test_nonlazy_rejects_singleton_edges():
    with pytest.raises(SingletonEdgeNonLazyError):
        transition_matrix(fx.nested_chain(3), WalkPolicy.uniform_nonlazy())
    # the lazy walk is fine with them: the walker just stays put
    tm = transition_matrix(fx.nested_chain(3), WalkPolicy.uniform_lazy())
    assert tm.matrix.row("1")["1"] > 0


def test_custom_policy_validation():
    h = _triangle()
    bad = WalkPolicy.custom(
        edge_rule=lambda u, e: Fraction(1),
        vertex_rule=lambda u, e, v: Fraction(2) if v == "b" else Fraction(0),
    )
    with pytest.raises(BadDistributionError):
        transition_matrix(h, bad)


def test_step_distribution_conserves_mass():
    tm = transition_matrix(fx.hub_cycle(), WalkPolicy.uniform_nonlazy())
    for t in range(5):
        dist = step_distribution(tm, "1", t)
        assert sum(dist.values()) == 1


def test_hitting_times_single_edge():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    times = hitting_times(tm, "c")
    assert times["a"] == 2
    assert times["b"] == 2
    tm_lazy = transition_matrix(_triangle(), WalkPolicy.uniform_lazy())
    assert hitting_times(tm_lazy, "c")["a"] == 3


def test_hitting_times_hub_cycle_frozen():
    """Values cross-checked by an independent stdlib-random simulation."""
    h = fx.hub_cycle()
    tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
    assert hitting_times(tm, "5") == {
        "1": Fraction(11, 4),
        "2": Fraction(11, 4),
        "3": Fraction(9, 4),
        "4": Fraction(9, 4),
        "5": Fraction(7, 2),
    }
    tm_lazy = transition_matrix(h, WalkPolicy.uniform_lazy())
    assert hitting_times(tm_lazy, "5") == {
        "1": Fraction(33, 8),
        "2": Fraction(33, 8),
        "3": Fraction(27, 8),
        "4": Fraction(27, 8),
        "5": Fraction(7, 2),
    }


def test_hitting_time_self_conventions():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    ret = hitting_times(tm, "c", self_time="return")
    assert ret["c"] == 3  # stationary is uniform on three vertices
    zero = hitting_times(tm, "c", self_time="zero")
    assert zero["c"] == 0
    assert zero["a"] == ret["a"]


def test_hitting_times_unreachable_target():
    h = Hypergraph.from_members([("e1", ["a", "b"]), ("e2", ["c", "d"])])
    tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
    with pytest.raises(UnreachableError):
        hitting_times(tm, "c")


def test_first_hit_law_is_geometric_on_a_single_edge():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    dist = first_hit_probabilities(tm, "c", 8, "a")
    assert dist == [Fraction(1, 2 ** t) for t in range(1, 9)]
    assert sum(dist) < 1


def test_first_hit_distribution_mean_matches_hitting_time():
    h = fx.hub_cycle()
    tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
    horizon = 220
    dist = first_hit_probabilities(tm, "5", horizon, "1")
    mean_lower = sum(Fraction(t) * p for t, p in enumerate(dist, start=1))
    tail = 1 - sum(dist)
    assert tail < Fraction(1, 10 ** 12)
    exact = hitting_times(tm, "5")["1"]
    assert abs(float(mean_lower) - float(exact)) < 1e-9


def test_first_hit_rejects_bad_horizon():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    with pytest.raises(BadHorizonError):
        first_hit_probabilities(tm, "c", 0, "a")


def test_partition_transition_balance():
    h = fx.hub_cycle()
    tm = transition_matrix(h, WalkPolicy.uniform_nonlazy())
    assert verify_partition_transition(tm, ["1", "3"], ["2", "4"])
    assert not verify_partition_transition(tm, ["1"], ["3"])


def test_partition_transition_accepts_both_uniform_policies():
    h = fx.hub_cycle()
    tm_lazy = transition_matrix(h, WalkPolicy.uniform_lazy())
    assert verify_partition_transition(tm_lazy, ["1", "3"], ["2", "4"])


def test_partition_transition_rejects_custom_policies():
    h = _triangle()
    nonlazy_by_hand = WalkPolicy.custom(
        edge_rule=lambda u, e: Fraction(1),
        vertex_rule=lambda u, e, v: Fraction(0) if v == u else Fraction(1, 2),
    )
    tm = transition_matrix(h, nonlazy_by_hand)
    with pytest.raises(NotUniformPolicyError):
        verify_partition_transition(tm, ["a"], ["b"])


def test_splitmix64_reference_stream():
    """First outputs from seed 0 in the published reference implementation."""
    g = SplitMix64(0)
    assert [g.next_u64() for _ in range(3)] == [
        0xE220A8397B1DCDAF,
        0x6E789E6AA1B965F4,
        0x06C45D188009454F,
    ]


def test_trajectory_seeds_are_distinct():
    seeds = {trajectory_seed(42, i) for i in range(1000)}
    assert len(seeds) == 1000


def test_cumulative_table_thresholds():
    labels = ("a", "b", "c")
    probs = {"a": Fraction(0), "b": Fraction(1, 2), "c": Fraction(1, 2)}
    boundaries, _ = _cumulative_table(labels, probs)
    assert boundaries[-1] == 2 ** 64
    # a zero-probability label never owns a slice of the integer range
    assert len(boundaries) == 2


def test_simulation_is_deterministic_and_consistent():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    a = simulate(tm, "a", steps=40, trajectories=300, seed=7)
    b = simulate(tm, "a", steps=40, trajectories=300, seed=7)
    assert a.visit_counts == b.visit_counts
    assert a.first_hits == b.first_hits
    c = simulate(tm, "a", steps=40, trajectories=300, seed=8)
    assert c.visit_counts != a.visit_counts
    total_visits = sum(a.visit_counts.values())
    assert total_visits == 300 * 41  # the start counts at step zero


def test_simulation_mean_matches_exact_hitting_time():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    sim = simulate(tm, "a", steps=120, trajectories=4000, seed=123)
    assert sim.hit_count("c") == 4000
    mean = sim.first_hit_mean("c")
    spread = sim.first_hit_stderr("c")
    assert abs(mean - 2.0) < 3 * spread


def test_first_hits_use_arrival_steps_not_start():
    tm = transition_matrix(_triangle(), WalkPolicy.uniform_nonlazy())
    sim = simulate(tm, "a", steps=30, trajectories=100, seed=5)
    # the walk starts at a, so a's own first hit is its first return
    assert all(t >= 1 for t in sim.first_hits["a"])
    assert all(t >= 1 for t in sim.first_hits["c"])
