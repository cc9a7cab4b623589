"""Core graph type and construction tests."""

import random
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from localchrom import families
from localchrom.graphs import (
    Graph,
    WeightedGraph,
    bits,
    blow_up,
    blow_up_classes,
    common_neighbourhood,
    complement,
    cycle_power,
    find_twins,
    mask_of,
    merge_twins,
    min_weighted_degree,
    relabel,
    weighted_degree,
)


@st.composite
def graphs(draw, max_n=8):
    n = draw(st.integers(min_value=0, max_value=max_n))
    pairs = list(combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    return Graph(n, chosen)


def k4():
    return Graph(4, [(u, v) for u, v in combinations(range(4), 2)])


class TestGraphBasics:
    def test_rejects_self_loop(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])

    def test_rejects_out_of_range(self):
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_from_rows_validates_symmetry(self):
        with pytest.raises(ValueError):
            Graph.from_rows([0b010, 0b000, 0b000])

    def test_immutable(self):
        g = Graph(2, [(0, 1)])
        with pytest.raises(AttributeError):
            g.n = 5

    def test_edges_sorted(self):
        g = Graph(4, [(2, 3), (0, 2), (0, 1)])
        assert list(g.edges()) == [(0, 1), (0, 2), (2, 3)]

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_adjacency_invariants(self, g):
        for v, row in enumerate(g.adj):
            assert not row >> g.n
            assert not row >> v & 1
            for u in bits(row):
                assert g.adj[u] >> v & 1


class TestComplement:
    def test_complement_c7_is_square(self):
        # the same graph up to the relabelling i -> 3i mod 7
        comp = complement(cycle_power(7, 1))
        square = cycle_power(7, 2)
        assert relabel(comp, [3 * i % 7 for i in range(7)]) == square

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_involution(self, g):
        assert complement(complement(g)) == g

    def test_complement_k4_empty(self):
        assert complement(k4()).edge_count() == 0


class TestCyclePower:
    def test_c7bar(self):
        g = cycle_power(7, 2)
        for v in range(7):
            assert g.neighbours(v) == mask_of({(v + d) % 7 for d in (1, 2, 5, 6)})

    def test_c5(self):
        assert cycle_power(5, 1) == Graph(5, [(i, (i + 1) % 5) for i in range(5)])

    def test_regularity_11_2(self):
        g = cycle_power(11, 2)
        assert g.n == 11 and all(g.degree(v) == 4 for v in range(11))

    @pytest.mark.parametrize("k,j", [(2, 0), (1, 0), (4, 2), (6, 3)])
    def test_rejects_bad_parameters(self, k, j):
        with pytest.raises(ValueError):
            cycle_power(k, j)

    def test_j_zero_empty(self):
        assert cycle_power(5, 0).edge_count() == 0


class TestBlowUp:
    @given(graphs(max_n=6))
    @settings(max_examples=40, deadline=None)
    def test_identity_blow_up(self, g):
        assert blow_up(g, [1] * g.n) == g

    def test_k2_to_k23(self):
        b = blow_up(Graph(2, [(0, 1)]), [2, 3])
        assert b.n == 5 and b.edge_count() == 6
        assert all(b.has_edge(u, v) for u in (0, 1) for v in (2, 3, 4))

    def test_rejects_empty_class(self):
        with pytest.raises(ValueError):
            blow_up(Graph(2, [(0, 1)]), [1, 0])

    def test_class_ranges(self):
        assert blow_up_classes([2, 1, 3]) == [range(0, 2), range(2, 3), range(3, 6)]

    def test_classes_independent_and_complete_between(self):
        g = families.c7bar()
        sizes = [2, 1, 3, 1, 2, 1, 1]
        b = blow_up(g, sizes)
        classes = blow_up_classes(sizes)
        for v, cls in enumerate(classes):
            for x, y in combinations(cls, 2):
                assert not b.has_edge(x, y)
            for u in range(g.n):
                expected = g.has_edge(u, v) if u != v else False
                for x in classes[u]:
                    for y in cls:
                        if x != y:
                            assert b.has_edge(x, y) == expected


class TestTwins:
    def test_doubled_class_pair(self):
        assert find_twins(blow_up(Graph(2, [(0, 1)]), [2, 1])) == [(0, 1)]

    def test_c7bar_twin_free_by_enumeration(self):
        g = families.c7bar()
        expected = [
            (u, v) for u, v in combinations(range(7), 2) if g.adj[u] == g.adj[v]
        ]
        assert expected == [] and find_twins(g) == []

    def test_k3_no_twins(self):
        assert find_twins(Graph(3, [(0, 1), (0, 2), (1, 2)])) == []

    def test_merge_undoes_blow_up(self):
        wg = WeightedGraph(blow_up(families.c7bar(), [2, 1, 1, 1, 1, 1, 1]), [1] * 8)
        merged = merge_twins(wg)
        assert merged.graph == families.c7bar()
        assert merged.weights == (Fraction(2), 1, 1, 1, 1, 1, 1)

    def test_merge_fixed_point(self):
        wg = WeightedGraph(families.h2(), [1] * 7)
        assert merge_twins(wg) is wg

    def test_merge_preserves_weighted_degrees_random(self):
        rng = random.Random(7)
        for _ in range(50):
            sizes = [rng.randint(1, 3) for _ in range(7)]
            b = blow_up(families.h2(), sizes)
            wg = WeightedGraph(b, [Fraction(rng.randint(1, 4)) for _ in range(b.n)])
            merged = merge_twins(wg)
            assert merged.total_weight() == wg.total_weight()
            assert min_weighted_degree(merged) == min_weighted_degree(wg)
            before = sorted(set(weighted_degree(wg, v) for v in range(b.n)))
            after = sorted(set(weighted_degree(merged, v) for v in range(merged.graph.n)))
            assert before == after


class TestNeighbourhoods:
    def test_h2_figure_weighting_is_regular(self):
        wg = WeightedGraph(families.h2(), families.H2_FIGURE_WEIGHTS)
        assert all(weighted_degree(wg, v) == Fraction(6, 11) for v in range(7))

    def test_h2plus_centre_degree(self):
        wg = WeightedGraph(families.h2plus(), families.H2PLUS_FIGURE_WEIGHTS)
        assert weighted_degree(wg, 7) == Fraction(2, 3)
        assert min_weighted_degree(wg) == Fraction(5, 9)

    def test_common_neighbourhood_c7bar(self):
        g = families.c7bar()
        assert common_neighbourhood(g, mask_of({0, 3})) == mask_of({1, 2, 5})

    def test_empty_set_rejected(self):
        with pytest.raises(ValueError):
            common_neighbourhood(families.c7bar(), 0)

    @given(graphs())
    @settings(max_examples=60, deadline=None)
    def test_degree_union_identity(self, g):
        for u, v in combinations(range(g.n), 2):
            d_uv = (g.adj[u] & g.adj[v]).bit_count()
            assert d_uv == g.degree(u) + g.degree(v) - (g.adj[u] | g.adj[v]).bit_count()


class TestWeightedGraph:
    def test_rejects_negative(self):
        with pytest.raises(ValueError):
            WeightedGraph(families.h2(), [1, 1, 1, -1, 1, 1, 1])

    def test_rejects_length_mismatch(self):
        with pytest.raises(ValueError):
            WeightedGraph(families.h2(), [1, 1])

    def test_total_weight_recomputed(self):
        wg = WeightedGraph(families.h2(), families.H2_FIGURE_WEIGHTS)
        assert wg.total_weight() == 1
