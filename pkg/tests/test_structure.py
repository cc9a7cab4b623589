"""Local-structure tests, with an independent odd-wheel oracle."""

import random
from itertools import combinations, permutations

import pytest

from localchrom import families
from localchrom.graphs import Graph, bits, blow_up, mask_of
from localchrom.homomorphism import find_subgraph, subgraph_embeddings
from localchrom.structure import (
    OddWheelWitness,
    PairClass,
    classify_pair,
    dense_set,
    is_edge_maximal_locally_bipartite,
    is_locally_bipartite,
    is_twin_free,
    locally_bipartite_after_adding,
    odd_wheel,
    saturate,
    sparse_missing_spoke,
)


def k4():
    return Graph(4, [(u, v) for u, v in combinations(range(4), 2)])


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


def odd_wheel_exists_oracle(g: Graph) -> bool:
    """Direct search: an odd wheel is a centre plus an odd vertex set of its
    neighbourhood carrying a Hamiltonian cycle.  Exponential; small n only."""
    for centre in range(g.n):
        nbrs = list(bits(g.adj[centre]))
        for size in range(3, len(nbrs) + 1, 2):
            for subset in combinations(nbrs, size):
                first = subset[0]
                for rest in permutations(subset[1:]):
                    cycle = (first,) + rest
                    if all(g.has_edge(cycle[i], cycle[(i + 1) % size]) for i in range(size)):
                        return True
    return False


class TestLocallyBipartite:
    def test_families(self):
        assert is_locally_bipartite(families.h0())
        assert not is_locally_bipartite(families.wheel(7))

    def test_k4_is_w3(self):
        witness = odd_wheel(k4())
        assert witness is not None and len(witness.rim) == 3

    def test_blow_up_preserves(self):
        rng = random.Random(3)
        for _ in range(20):
            sizes = [rng.randint(1, 3) for _ in range(8)]
            assert is_locally_bipartite(blow_up(families.h2plus(), sizes))

    def test_witness_validates_and_is_odd(self):
        for g in (families.wheel(5), families.wheel(7), k4(), families.wheel(9)):
            witness = odd_wheel(g)
            assert witness is not None
            assert witness.validate(g)

    def test_witness_shortest_rim(self):
        # a chord across the 7-rim shortens the apex's odd rim from 7 to 5
        g = families.wheel(7).with_edge(0, 3)
        witness = odd_wheel(g)
        assert witness.centre == 7 and len(witness.rim) == 5
        assert witness.validate(g)

    def test_against_oracle_random(self):
        rng = random.Random(20260810)
        agree = 0
        for _ in range(120):
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.2, 0.8))
            assert is_locally_bipartite(g) == (not odd_wheel_exists_oracle(g))
            assert (odd_wheel(g) is None) == is_locally_bipartite(g)
            agree += 1
        assert agree == 120

    def test_incremental_matches_full(self):
        rng = random.Random(5)
        for _ in range(60):
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.2, 0.6))
            if not is_locally_bipartite(g):
                continue
            for u, v in g.non_edges():
                assert locally_bipartite_after_adding(g, u, v) == is_locally_bipartite(
                    g.with_edge(u, v)
                )

    def test_witness_str_format(self):
        witness = OddWheelWitness(2, (0, 1, 3))
        assert str(witness) == "centre: 2 rim: 0,1,3"


class TestPairClassification:
    def test_c7bar_dense_pair(self):
        assert classify_pair(families.c7bar(), 0, 3) is PairClass.DENSE

    def test_c5_explicit(self):
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert classify_pair(c5, 0, 2) is PairClass.SPARSE

    def test_adjacent(self):
        assert classify_pair(families.h2(), 0, 1) is PairClass.ADJACENT

    def test_same_vertex_rejected(self):
        with pytest.raises(ValueError):
            classify_pair(families.h2(), 3, 3)

    def test_dense_iff_missing_k4_edge(self):
        # in a locally bipartite graph: dense <=> the missing edge of a K4
        rng = random.Random(11)
        for _ in range(60):
            g = random_graph(rng, rng.randint(4, 7), rng.uniform(0.3, 0.7))
            if not is_locally_bipartite(g):
                continue
            for u, v in g.non_edges():
                missing_k4 = any(
                    g.has_edge(x, y)
                    and all(g.has_edge(w, z) for w in (u, v) for z in (x, y))
                    for x, y in combinations(range(g.n), 2)
                    if len({u, v, x, y}) == 4
                )
                assert (classify_pair(g, u, v) is PairClass.DENSE) == missing_k4

    def test_exactly_one_class_per_pair(self):
        g = families.counterexample8()
        for u, v in combinations(range(g.n), 2):
            assert classify_pair(g, u, v) in PairClass


class TestDenseSet:
    def test_c7bar(self):
        assert dense_set(families.c7bar(), 0) == mask_of({3, 4})

    def test_c5_empty(self):
        c5 = Graph(5, [(i, (i + 1) % 5) for i in range(5)])
        assert all(dense_set(c5, v) == 0 for v in range(5))


class TestSaturation:
    def test_h2_saturates_to_c7bar(self):
        assert saturate(families.h2()) == families.c7bar()

    def test_fixed_points(self):
        assert saturate(families.c7bar()) == families.c7bar()
        assert saturate(families.h2plus()) == families.h2plus()

    def test_empty_three_gives_k3(self):
        assert saturate(Graph(3)) == Graph(3, [(0, 1), (0, 2), (1, 2)])

    def test_rejects_non_locally_bipartite(self):
        with pytest.raises(ValueError):
            saturate(k4())

    def test_output_edge_maximal_and_contains_input(self):
        rng = random.Random(13)
        for _ in range(25):
            g = random_graph(rng, rng.randint(3, 7), rng.uniform(0.2, 0.5))
            if not is_locally_bipartite(g):
                continue
            s = saturate(g)
            assert is_edge_maximal_locally_bipartite(s)
            for u, v in g.edges():
                assert s.has_edge(u, v)


class TestEdgeMaximalAndTwins:
    def test_h0_not_edge_maximal(self):
        assert not is_edge_maximal_locally_bipartite(families.h0())

    def test_delta3_edge_maximal(self):
        assert is_edge_maximal_locally_bipartite(families.delta(3))

    def test_blow_up_not_twin_free(self):
        assert not is_twin_free(blow_up(families.h2(), [2, 1, 1, 1, 1, 1, 1]))

    def test_named_twin_free(self):
        for fid in ("H0", "H2", "H2PLUS", "C7BAR", "COUNTEREXAMPLE8"):
            assert is_twin_free(families.generate(fid)), fid


class TestFiveVertexCorollary:
    def test_no_vertex_has_five_neighbours_in_an_h0_copy(self):
        h0 = families.h0()
        for fid in ("C7BAR", "H2PLUS", "COUNTEREXAMPLE8"):
            g = families.generate(fid)
            count = 0
            for embedding in subgraph_embeddings(h0, g, induced=False):
                image = mask_of(embedding)
                assert all((g.adj[v] & image).bit_count() <= 4 for v in range(g.n))
                count += 1
                if count >= 50:
                    break
            assert count > 0  # these families all contain H0


class TestOddCycleThrough:
    def test_block_logic_matches_path_enumeration(self):
        # oracle: exhaustive simple-path DFS (exponential, small n only)
        from localchrom.structure import _odd_cycle_through

        def oracle(h, target):
            def extend(path, on_path):
                v = path[-1]
                for u in bits(h.adj[v]):
                    if u == target and len(path) >= 3 and len(path) % 2 == 1:
                        return True
                    if not on_path >> u & 1 and u != target:
                        path.append(u)
                        if extend(path, on_path | (1 << u)):
                            return True
                        path.pop()
                return False

            return extend([target], 1 << target)

        rng = random.Random(515)
        for _ in range(120):
            g = random_graph(rng, rng.randint(2, 8), rng.uniform(0.15, 0.7))
            for v in range(g.n):
                assert _odd_cycle_through(g, v) == oracle(g, v)

    def test_polynomial_on_dense_bipartite_region(self):
        # K_{9,9} has no odd cycles at all; path enumeration would explode here
        from localchrom.structure import _odd_cycle_through

        g = blow_up(Graph(2, [(0, 1)]), [9, 9])
        assert not _odd_cycle_through(g, 0)


class TestSparseMissingSpoke:
    def test_detects_w5_missing_spoke(self):
        # 5-wheel with one spoke removed: that spoke is a sparse pair
        g = families.wheel(5)
        rim0 = 0
        edges = [(u, v) for u, v in g.edges() if (u, v) != (rim0, 5)]
        broken = Graph(6, edges)
        assert classify_pair(broken, rim0, 5) is PairClass.SPARSE
        assert sparse_missing_spoke(broken) is not None

    def test_clean_on_k3_blow_ups(self):
        # hypotheses of the no-missing-spoke lemmas hold here
        g = blow_up(Graph(3, [(0, 1), (0, 2), (1, 2)]), [3, 3, 3])
        assert find_subgraph(families.h0(), g) is None
        assert 2 * g.min_degree() > g.n
        assert sparse_missing_spoke(g) is None
