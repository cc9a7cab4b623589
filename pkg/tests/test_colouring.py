"""Exact colouring and independence-number tests."""

import random
from itertools import combinations

import pytest

from localchrom import families
from localchrom.colouring import (
    chromatic_number,
    clique_number,
    greedy_clique,
    independence_number,
    k_colourable,
    normalise_colouring,
    validate_colouring,
)
from localchrom.graphs import Graph, bits, blow_up, relabel


def random_graph(rng, n, p):
    return Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < p])


class TestKColourable:
    def test_c7bar_not_3_colourable(self):
        assert k_colourable(families.c7bar(), 3) is None

    def test_augmented_figure_graph(self):
        g = families.h2plus_augmented()
        col = k_colourable(g, 4)
        assert col is not None and validate_colouring(g, col, 4)
        assert validate_colouring(g, families.AUGMENTED_FIGURE_COLOURING, 4)

    def test_bipartite_always_2_colourable(self):
        rng = random.Random(1)
        for _ in range(30):
            a, b = rng.randint(1, 4), rng.randint(1, 4)
            g = blow_up(Graph(2, [(0, 1)]), [a, b])
            assert k_colourable(g, 2) is not None

    def test_rejects_k_zero(self):
        with pytest.raises(ValueError):
            k_colourable(families.h2(), 0)

    def test_normalised_first_occurrence(self):
        col = k_colourable(families.c7bar(), 4)
        assert col[0] == 1
        seen = []
        for c in col:
            if c not in seen:
                seen.append(c)
        assert seen == sorted(seen)

    def test_none_is_order_robust(self):
        # a NONE verdict must survive relabelling the instance
        rng = random.Random(2)
        g = families.c7bar()
        assert k_colourable(g, 3) is None
        for _ in range(10):
            perm = list(range(g.n))
            rng.shuffle(perm)
            assert k_colourable(relabel(g, perm), 3) is None

    def test_normalise_helper(self):
        assert normalise_colouring([3, 3, 1, 2]) == (1, 1, 2, 3)


class TestChromaticNumber:
    @pytest.mark.parametrize("fid", ["H0", "H1", "H2", "H2PLUS", "C7BAR", "WHEEL(7)"])
    def test_families_four_chromatic(self, fid):
        g = families.generate(fid)
        k, colouring = chromatic_number(g)
        assert k == 4
        assert validate_colouring(g, colouring, 4)
        assert k_colourable(g, 3) is None

    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_delta_four_chromatic(self, ell):
        assert chromatic_number(families.delta(ell))[0] == 4

    def test_k1(self):
        assert chromatic_number(Graph(1))[0] == 1

    def test_empty_graph(self):
        assert chromatic_number(Graph(0)) == (0, ())

    def test_blow_up_invariance(self):
        rng = random.Random(8)
        for _ in range(25):
            g = random_graph(rng, rng.randint(2, 6), rng.uniform(0.3, 0.7))
            sizes = [rng.randint(1, 3) for _ in range(g.n)]
            assert chromatic_number(blow_up(g, sizes))[0] == chromatic_number(g)[0]

    def test_counting_bound(self):
        rng = random.Random(21)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            chi = chromatic_number(g)[0]
            alpha = independence_number(g)[0]
            assert chi * alpha >= g.n


class TestIndependenceNumber:
    @pytest.mark.parametrize("ell", [2, 3, 4])
    def test_delta(self, ell):
        assert independence_number(families.delta(ell))[0] == ell

    def test_c7bar_by_brute_force(self):
        g = families.c7bar()
        brute = max(
            len(s)
            for size in range(8)
            for s in combinations(range(7), size)
            if all(not g.has_edge(u, v) for u, v in combinations(s, 2))
        )
        assert brute == 2
        assert independence_number(g)[0] == 2

    def test_empty_graph_alpha_n(self):
        assert independence_number(Graph(6))[0] == 6

    def test_witness_is_independent(self):
        rng = random.Random(9)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            size, mask = independence_number(g)
            members = list(bits(mask))
            assert len(members) == size
            assert all(not g.has_edge(u, v) for u, v in combinations(members, 2))

    def test_vs_brute_force(self):
        rng = random.Random(10)
        for _ in range(40):
            g = random_graph(rng, rng.randint(1, 7), rng.random())
            brute = max(
                (
                    len(s)
                    for size in range(g.n, -1, -1)
                    for s in combinations(range(g.n), size)
                    if all(not g.has_edge(u, v) for u, v in combinations(s, 2))
                ),
                default=0,
            )
            assert independence_number(g)[0] == brute


class TestCliqueHelpers:
    def test_greedy_clique_is_clique(self):
        rng = random.Random(12)
        for _ in range(30):
            g = random_graph(rng, rng.randint(1, 8), rng.random())
            members = list(bits(greedy_clique(g)))
            assert all(g.has_edge(u, v) for u, v in combinations(members, 2))

    def test_clique_number_blow_up_invariant(self):
        rng = random.Random(14)
        for _ in range(20):
            g = random_graph(rng, rng.randint(2, 5), rng.uniform(0.3, 0.8))
            sizes = [rng.randint(1, 3) for _ in range(g.n)]
            assert clique_number(blow_up(g, sizes)) == clique_number(g)
