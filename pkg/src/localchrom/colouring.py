"""Exact chromatic number, k-colourability certificates, independence number."""

from __future__ import annotations

import time

from .graphs import Graph, bits, complement


class SolverTimeout(Exception):
    """Raised when a cooperative deadline expires; never a wrong verdict."""


def greedy_clique(g: Graph) -> int:
    """A (not necessarily maximum) clique bitset, grown greedily by degree."""
    best = 0
    for start in sorted(range(g.n), key=lambda v: -g.degree(v)):
        clique = 1 << start
        candidates = g.adj[start]
        while candidates:
            v = max(bits(candidates), key=lambda u: (g.adj[u] & candidates).bit_count())
            clique |= 1 << v
            candidates &= g.adj[v]
        if clique.bit_count() > best.bit_count():
            best = clique
    return best


def normalise_colouring(colours: list[int]) -> tuple[int, ...]:
    """Renumber colours by first occurrence so certificates are canonical."""
    seen: dict[int, int] = {}
    out = []
    for c in colours:
        if c not in seen:
            seen[c] = len(seen) + 1
        out.append(seen[c])
    return tuple(out)


def validate_colouring(g: Graph, colours: tuple[int, ...], k: int | None = None) -> bool:
    if len(colours) != g.n:
        return False
    if k is not None and any(not 1 <= c <= k for c in colours):
        return False
    return all(colours[u] != colours[v] for u, v in g.edges())


def k_colourable(g: Graph, k: int, deadline: float | None = None) -> tuple[int, ...] | None:
    """A proper k-colouring (colours 1..k, first-occurrence normalised) or None.

    DSATUR-ordered backtracking.  A greedy clique is pre-coloured 1..q (any
    proper colouring can be renamed to agree, so this only breaks symmetry),
    and a branch offers at most one unused colour.
    """
    if k < 1:
        raise ValueError("k must be >= 1")
    n = g.n
    if n == 0:
        return ()
    clique = greedy_clique(g)
    if clique.bit_count() > k:
        return None
    colour = [0] * n
    forbidden = [0] * n  # bitmask of colours 1..k seen in the neighbourhood
    used = 0

    def assign(v: int, c: int) -> list[int]:
        colour[v] = c
        touched = []
        for u in bits(g.adj[v]):
            if not colour[u] and not forbidden[u] >> c & 1:
                forbidden[u] |= 1 << c
                touched.append(u)
        return touched

    def undo(v: int, c: int, touched: list[int]) -> None:
        colour[v] = 0
        for u in touched:
            forbidden[u] &= ~(1 << c)

    for i, v in enumerate(bits(clique)):
        assign(v, i + 1)
        used = max(used, i + 1)
    uncoloured = [v for v in range(n) if not colour[v]]

    def solve(remaining: int, used: int) -> bool:
        if deadline is not None and time.monotonic() > deadline:
            raise SolverTimeout("k_colourable deadline expired")
        if remaining == 0:
            return True
        v = max(
            (u for u in range(n) if not colour[u]),
            key=lambda u: (forbidden[u].bit_count(), g.degree(u), -u),
        )
        avail = ~forbidden[v]
        top = min(k, used + 1)
        for c in range(1, top + 1):
            if avail >> c & 1:
                touched = assign(v, c)
                if solve(remaining - 1, max(used, c)):
                    return True
                undo(v, c, touched)
        return False

    if solve(len(uncoloured), used):
        return normalise_colouring(colour)
    return None


def chromatic_number(g: Graph, deadline: float | None = None) -> tuple[int, tuple[int, ...]]:
    """Least k admitting a proper colouring, with a witness."""
    if g.n == 0:
        return 0, ()
    lower = greedy_clique(g).bit_count()
    for k in range(max(lower, 1), g.n + 1):
        witness = k_colourable(g, k, deadline)
        if witness is not None:
            return k, witness
    raise AssertionError("n colours always suffice")


def independence_number(g: Graph) -> tuple[int, int]:
    """(alpha, witness bitset): maximum independent set via cliques of the complement."""
    if g.n == 0:
        return 0, 0
    comp = complement(g)
    order = sorted(range(g.n), key=lambda v: -comp.degree(v))
    best = [0, 0]

    def bound(candidates: int) -> int:
        # greedy colouring of the candidate subgraph; class count bounds the clique
        classes: list[int] = []
        for v in bits(candidates):
            for i, cls in enumerate(classes):
                if not comp.adj[v] & cls:
                    classes[i] |= 1 << v
                    break
            else:
                classes.append(1 << v)
        return len(classes)

    def expand(current: int, size: int, candidates: int) -> None:
        if size > best[0]:
            best[0], best[1] = size, current
        if not candidates or size + bound(candidates) <= best[0]:
            return
        for v in order:
            if candidates >> v & 1:
                candidates &= ~(1 << v)
                expand(current | (1 << v), size + 1, candidates & comp.adj[v])
                if size + candidates.bit_count() <= best[0]:
                    return

    expand(0, 0, (1 << g.n) - 1)
    return best[0], best[1]


def clique_number(g: Graph) -> int:
    return independence_number(complement(g))[0]
