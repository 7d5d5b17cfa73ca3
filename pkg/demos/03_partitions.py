"""Walkthrough: equal partitions and their nullspace characterization.

A pair of disjoint vertex sets (U, V) is an equal partition of hyperedges
when every hyperedge meets U and V in the same number of vertices. That
counting condition is equivalent to the signed indicator of (U, V) lying in
the nullspace of the transposed incidence matrix, so partitions can be
found by linear algebra and certified by counting — or the other way round.
"""

from fractions import Fraction

from hyperlin import (
    find_equal_edge_partitions,
    verify_equal_edge_partition,
    verify_equal_star_partition,
)
from hyperlin import fixtures as fx
from hyperlin.hypergraph import incidence_matrix
from hyperlin.structures import partition_certificate


def show(title):
    print()
    print(title)
    print("-" * len(title))


def describe(h, u_set, v_set):
    ok, table = verify_equal_edge_partition(h, u_set, v_set)
    print(f"  U = {sorted(u_set, key=int)}  V = {sorted(v_set, key=int)}  equal? {ok}")
    for label in sorted(table):
        a, b = table[label]
        print(f"    |U ∩ {label}| = {a}   |V ∩ {label}| = {b}")


def main():
    h = fx.balanced_overlap()
    show(f"Overlap hypergraph: {h.n_vertices} vertices, {h.n_hyperedges} hyperedges")
    for label, members in h.hyperedges:
        print(f"  {label} = {{{', '.join(sorted(members, key=int))}}}")

    show("All equal partitions of hyperedges (found via the nullspace)")
    found = find_equal_edge_partitions(h, max_support=h.n_vertices)
    for u_set, v_set in found:
        print(f"  U = {sorted(u_set, key=int)}  V = {sorted(v_set, key=int)}")

    show("Verifying one by counting, edge by edge")
    describe(h, {"1", "5"}, {"2", "3", "4"})

    show("The nullspace side of the same fact")
    chi = {v: Fraction(0) for v in h.vertices}
    chi.update({"1": Fraction(1), "5": Fraction(1)})
    chi.update({"2": Fraction(-1), "3": Fraction(-1), "4": Fraction(-1)})
    image = incidence_matrix(h).transpose().apply(chi)
    print(f"  I^T (chi_U - chi_V) = {dict(sorted(image.items()))}")
    cert = partition_certificate(h, {"1", "5"}, {"2", "3", "4"})
    print(f"  packaged certificate kind: {cert.kind.value}, axis: {cert.annihilated_by}")

    show("A partition that fails, for contrast")
    describe(h, {"1"}, {"2"})

    show("Equal partitions of stars (the dual notion, on hyperedges)")
    g = fx.hub_cycle()
    ok, table = verify_equal_star_partition(g, {"e1", "e3"}, {"e2", "e4"})
    print(f"  E = ['e1', 'e3']  F = ['e2', 'e4']  equal? {ok}")
    for v in sorted(table, key=int):
        a, b = table[v]
        print(f"    vertex {v}: |E_v ∩ E| = {a}   |E_v ∩ F| = {b}")


if __name__ == "__main__":
    main()
