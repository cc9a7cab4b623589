"""Exact decision procedures: homomorphism, (induced) subgraph, isomorphism.

All solvers are deterministic: pattern vertices are processed in descending
degree order (ties by index) and candidate images in ascending index order,
so failures and certificates are reproducible.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .graphs import Graph, bits, mask_of
from .structure import is_edge_maximal_locally_bipartite, is_locally_bipartite, is_twin_free


def is_homomorphism(g: Graph, h: Graph, mapping: tuple[int, ...]) -> bool:
    """Single edge scan: every edge of g must map to an edge of h."""
    if len(mapping) != g.n or any(not 0 <= x < h.n for x in mapping):
        return False
    return all(h.has_edge(mapping[u], mapping[v]) for u, v in g.edges())


def compose(first: tuple[int, ...], second: tuple[int, ...]) -> tuple[int, ...]:
    """Composite certificate: G -> H -> K from G -> H and H -> K."""
    return tuple(second[x] for x in first)


def _pattern_order(g: Graph) -> list[int]:
    return sorted(range(g.n), key=lambda v: (-g.degree(v), v))


def find_homomorphism(g: Graph, h: Graph) -> tuple[int, ...] | None:
    """A map V(g) -> V(h) preserving edges, or None; exhaustive backtracking.

    Candidates for a pattern vertex are the intersection of its already-placed
    neighbours' host neighbourhoods, kept as a bitset.
    """
    if g.n == 0:
        return ()
    if h.n == 0 or (h.edge_count() == 0 and g.edge_count() > 0):
        return None
    order = _pattern_order(g)
    position = {v: i for i, v in enumerate(order)}
    earlier = [[u for u in bits(g.adj[v]) if position[u] < position[v]] for v in order]
    image = [-1] * g.n
    full = (1 << h.n) - 1

    def place(i: int) -> bool:
        if i == g.n:
            return True
        v = order[i]
        candidates = full
        for u in earlier[i]:
            candidates &= h.adj[image[u]]
        for x in bits(candidates):
            image[v] = x
            if place(i + 1):
                return True
        image[v] = -1
        return False

    if place(0):
        return tuple(image)
    return None


def brute_force_homomorphism(g: Graph, h: Graph) -> bool:
    """Exhaustive decision over all |h|^|g| maps in index order.

    Organised as a prefix walk: a partial assignment is abandoned exactly when
    it already violates an edge, which discards precisely the total maps
    extending it.  No ordering heuristics, no degree reasoning: this is the
    independent cross-check for the backtracking solver.
    """
    if g.n == 0:
        return True
    image = [-1] * g.n

    def place(v: int) -> bool:
        if v == g.n:
            return True
        for x in range(h.n):
            ok = True
            for u in bits(g.adj[v]):
                if u < v and not h.has_edge(x, image[u]):
                    ok = False
                    break
            if ok:
                image[v] = x
                if place(v + 1):
                    return True
        image[v] = -1
        return False

    return place(0)


def subgraph_embeddings(pattern: Graph, host: Graph, induced: bool) -> Iterator[tuple[int, ...]]:
    """All injective maps preserving edges (and non-edges when induced).

    Candidate images are maintained as bitsets: the intersection of the placed
    neighbours' host neighbourhoods, minus placed non-neighbours' ones when
    induced, minus used vertices and vertices of insufficient degree.
    """
    if pattern.n > host.n:
        return
    order = _pattern_order(pattern)
    position = {v: i for i, v in enumerate(order)}
    earlier_nbr = [[u for u in bits(pattern.adj[v]) if position[u] < position[v]] for v in order]
    earlier_non = [
        [
            u
            for u in range(pattern.n)
            if u != v and not pattern.has_edge(u, v) and position[u] < position[v]
        ]
        for v in order
    ]
    image = [-1] * pattern.n
    full = (1 << host.n) - 1
    host_deg = host.degrees()
    degree_ok = [
        mask_of(x for x in range(host.n) if host_deg[x] >= pattern.degree(v)) for v in range(pattern.n)
    ]

    def place(i: int, used: int) -> Iterator[tuple[int, ...]]:
        if i == pattern.n:
            yield tuple(image)
            return
        v = order[i]
        candidates = degree_ok[v] & ~used & full
        for u in earlier_nbr[i]:
            candidates &= host.adj[image[u]]
        if induced:
            for u in earlier_non[i]:
                candidates &= ~host.adj[image[u]]
        for x in bits(candidates):
            image[v] = x
            yield from place(i + 1, used | (1 << x))
        image[v] = -1

    yield from place(0, 0)


def find_subgraph(pattern: Graph, host: Graph, induced: bool = False) -> tuple[int, ...] | None:
    for embedding in subgraph_embeddings(pattern, host, induced):
        return embedding
    return None


# ---------------------------------------------------------------------------
# Canonical labelling by iterated refinement plus individualization.


def _refine(g: Graph, colour: list[int]) -> list[int]:
    """1-dimensional colour refinement to a fixpoint.

    New colours are ranks of (old colour, sorted neighbour-colour multiset),
    which is isomorphism-invariant.
    """
    n = g.n
    while True:
        keys = []
        for v in range(n):
            nbr = sorted(colour[u] for u in bits(g.adj[v]))
            keys.append((colour[v], tuple(nbr)))
        ranked = {key: i for i, key in enumerate(sorted(set(keys)))}
        new = [ranked[keys[v]] for v in range(n)]
        if new == colour:
            return colour
        colour = new


def _encode(g: Graph, order: list[int]) -> int:
    """Adjacency bits of g relabelled by ``order``, column-major, MSB first.

    Bit (i, j) with i < j records order[i] ~ order[j]; columns are emitted in
    increasing j, so the first C(k, 2) bits depend only on order[:k] and
    integer comparison is lexicographic on orderings.
    """
    code = 0
    for j, vj in enumerate(order):
        row = g.adj[vj]
        for i in range(j):
            code = (code << 1) | (row >> order[i] & 1)
    return code


def canonical_form(g: Graph) -> tuple[int, int]:
    """(n, minimal adjacency encoding) over the refinement search tree.

    Individualization-refinement: branch on the first non-singleton colour
    class, prune a branch when the encoding of its forced prefix already
    exceeds the best complete encoding.  Refinement keys and the cell choice
    are isomorphism-invariant, so the set of leaf encodings (hence its
    minimum) is a complete invariant: equal forms iff isomorphic graphs.
    """
    n = g.n
    if n == 0:
        return (0, 0)
    total_bits = n * (n - 1) // 2
    best: list[int | None] = [None]

    def search(colour: list[int]) -> None:
        cells: dict[int, list[int]] = {}
        for v, c in enumerate(colour):
            cells.setdefault(c, []).append(v)
        ordered = [cells[c] for c in sorted(cells)]
        fixed_order: list[int] = []
        for cell in ordered:
            if len(cell) > 1:
                break
            fixed_order.append(cell[0])
        if len(fixed_order) == n:
            code = _encode(g, fixed_order)
            if best[0] is None or code < best[0]:
                best[0] = code
            return
        if best[0] is not None and len(fixed_order) > 1:
            k = len(fixed_order)
            if _encode(g, fixed_order) > best[0] >> (total_bits - k * (k - 1) // 2):
                return
        target = next(cell for cell in ordered if len(cell) > 1)
        for v in target:
            # individualize v: strictly smaller colour than its former cellmates
            child = [colour[u] * 2 + (0 if u == v else 1) for u in range(n)]
            search(_refine(g, child))

    search(_refine(g, [0] * n))
    assert best[0] is not None
    return (n, best[0])


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or g.edge_count() != h.edge_count():
        return False
    return canonical_form(g) == canonical_form(h)


# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InducedCopyReport:
    """Hypothesis-by-hypothesis audit of the induced-copy lemma on one pair (f, g)."""

    f_twin_free: bool
    f_edge_maximal_locally_bipartite: bool
    g_locally_bipartite: bool
    homomorphism: tuple[int, ...] | None
    hypotheses_hold: bool
    induced_embedding: tuple[int, ...] | None
    conclusion_holds: bool | None  # None when hypotheses fail

    def failed_hypotheses(self) -> list[str]:
        out = []
        if not self.f_twin_free:
            out.append("twin-free")
        if not self.f_edge_maximal_locally_bipartite:
            out.append("edge-maximal")
        if not self.g_locally_bipartite:
            out.append("locally-bipartite")
        if self.homomorphism is None:
            out.append("hom")
        return out


def verify_hom_forces_induced(f: Graph, g: Graph) -> InducedCopyReport:
    """Check: twin-free edge-maximal locally bipartite f with f -> g and g
    locally bipartite forces an induced copy of f in g."""
    twin_free = is_twin_free(f)
    edge_max = is_edge_maximal_locally_bipartite(f)
    g_lb = is_locally_bipartite(g)
    hom = find_homomorphism(f, g)
    holds = twin_free and edge_max and g_lb and hom is not None
    embedding = None
    conclusion = None
    if holds:
        embedding = find_subgraph(f, g, induced=True)
        conclusion = embedding is not None
    return InducedCopyReport(twin_free, edge_max, g_lb, hom, holds, embedding, conclusion)
