"""Independent cross-checks for the generation and optimisation internals."""

import random
import time
from itertools import combinations, permutations, product

import pytest

from localchrom.colouring import SolverTimeout, chromatic_number, k_colourable
from localchrom.decompose import _minimise_assignment
from localchrom.graphs import Graph
from localchrom.homomorphism import _encode
from localchrom.search import _next_level
from localchrom.structure import is_locally_bipartite


def test_level_counts_match_exhaustive_labelled_enumeration():
    # isomorphism classes of locally bipartite graphs, counted two ways:
    # augment-by-vertex generation vs all labelled graphs keyed by the
    # permutation-minimum encoding (a different complete invariant)
    level = [Graph(1)]
    counts = {1: len(level)}
    for n in range(2, 6):
        level = _next_level(level)
        counts[n] = len(level)

    for n in range(2, 6):
        classes = set()
        pairs = list(combinations(range(n), 2))
        for mask in range(1 << len(pairs)):
            g = Graph(n, [pairs[i] for i in range(len(pairs)) if mask >> i & 1])
            if is_locally_bipartite(g):
                classes.add(min(_encode(g, list(p)) for p in permutations(range(n))))
        assert len(classes) == counts[n]
    # n = 4: every graph except K4 is locally bipartite
    assert counts[4] == 10


def test_chromatic_number_vs_all_assignments():
    rng = random.Random(303)
    for _ in range(40):
        n = rng.randint(1, 6)
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5])
        edges = list(g.edges())
        brute = next(
            k
            for k in range(1, n + 1)
            if any(
                all(col[u] != col[v] for u, v in edges)
                for col in product(range(k), repeat=n)
            )
        )
        assert chromatic_number(g)[0] == brute


def test_minimise_assignment_reaches_brute_force_optimum():
    rng = random.Random(404)
    penalised = {frozenset((i, (i + 3) % 7)) for i in range(7)}
    for _ in range(40):
        n = rng.randint(2, 8)
        g = Graph(n, [(u, v) for u, v in combinations(range(n), 2) if rng.random() < 0.5])
        admissible = {
            v: tuple(sorted(rng.sample(range(7), rng.randint(1, 3)))) for v in range(n)
        }
        assignment = {v: admissible[v][0] for v in range(n)}
        _, s = _minimise_assignment(g, assignment, admissible, penalised)

        def cost(choice):
            return sum(
                1
                for u, v in g.edges()
                if frozenset((choice[u], choice[v])) in penalised
            )

        best = min(cost(dict(zip(range(n), pick))) for pick in product(*(admissible[v] for v in range(n))))
        assert s == best


def test_colouring_deadline_is_cooperative():
    # C9 with k=3 enters the search loop (the clique bound cannot answer),
    # so an already-expired deadline must surface as SolverTimeout
    g = Graph(9, [(i, (i + 1) % 9) for i in range(9)])
    with pytest.raises(SolverTimeout):
        k_colourable(g, 3, deadline=time.monotonic() - 1)
