"""Neighbourhood structure: odd wheels, dense/sparse pairs, saturation.

A graph is locally bipartite exactly when every vertex neighbourhood induces a
bipartite graph, equivalently when it contains no odd wheel (an odd rim cycle
plus a centre adjacent to the whole rim; W3 = K4).
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from enum import Enum

from .graphs import Graph, bits, induced_subgraph


class PairClass(Enum):
    ADJACENT = "adjacent"
    DENSE = "dense"
    SPARSE = "sparse"


@dataclass(frozen=True)
class OddWheelWitness:
    """An odd wheel found in the graph: rim is an odd cycle inside the centre's neighbourhood."""

    centre: int
    rim: tuple[int, ...]

    def validate(self, g: Graph) -> bool:
        k = len(self.rim)
        if k < 3 or k % 2 == 0 or len(set(self.rim)) != k:
            return False
        if any(not g.has_edge(self.centre, v) for v in self.rim):
            return False
        return all(g.has_edge(self.rim[i], self.rim[(i + 1) % k]) for i in range(k))

    def __str__(self) -> str:
        return f"centre: {self.centre} rim: {','.join(map(str, self.rim))}"


def _shortest_odd_cycle(h: Graph) -> tuple[int, ...] | None:
    """Shortest odd cycle of h (None if bipartite), by BFS from every root.

    For a root r and an edge xy with depth(x) = depth(y) mod 2 in r's BFS
    tree, the tree paths x->z and y->z to their lowest common ancestor close
    an odd simple cycle of length <= depth(x) + depth(y) + 1.
    """
    best: tuple[int, ...] | None = None
    for root in range(h.n):
        depth = {root: 0}
        parent = {root: -1}
        queue = deque([root])
        order = []
        while queue:
            v = queue.popleft()
            order.append(v)
            for u in bits(h.adj[v]):
                if u not in depth:
                    depth[u] = depth[v] + 1
                    parent[u] = v
                    queue.append(u)
        for v in order:
            for u in bits(h.adj[v]):
                if u <= v or u not in depth:
                    continue
                if (depth[u] + depth[v]) % 2 == 0:
                    px, py = [v], [u]
                    x, y = v, u
                    while depth[x] > depth[y]:
                        x = parent[x]
                        px.append(x)
                    while depth[y] > depth[x]:
                        y = parent[y]
                        py.append(y)
                    while x != y:
                        x, y = parent[x], parent[y]
                        px.append(x)
                        py.append(y)
                    cycle = tuple(px + py[-2::-1])
                    if len(cycle) % 2 == 1 and (best is None or len(cycle) < len(best)):
                        best = cycle
    return best


def odd_wheel(g: Graph) -> OddWheelWitness | None:
    """First odd wheel by centre index, with the shortest rim in that neighbourhood."""
    for centre in range(g.n):
        h, labels = induced_subgraph(g, g.adj[centre])
        cycle = _shortest_odd_cycle(h)
        if cycle is not None:
            witness = OddWheelWitness(centre, tuple(labels[v] for v in cycle))
            assert witness.validate(g)
            return witness
    return None


def is_locally_bipartite(g: Graph) -> bool:
    """Cheap decision (one BFS 2-colouring per neighbourhood, no witness)."""
    return all(neighbourhood_is_bipartite(g, v) for v in range(g.n))


def neighbourhood_is_bipartite(g: Graph, centre: int, rows=None) -> bool:
    """2-colour G[adj(centre)] by BFS; rows may override g.adj."""
    adj = rows if rows is not None else g.adj
    members = adj[centre]
    colour = {}
    for start in bits(members):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in bits(adj[v] & members):
                if u not in colour:
                    colour[u] = colour[v] ^ 1
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def locally_bipartite_after_adding(g: Graph, u: int, v: int) -> bool:
    """Whether g + uv is still locally bipartite, for locally bipartite g.

    Only the neighbourhoods of u, v and their common neighbours change.
    """
    rows = list(g.adj)
    rows[u] |= 1 << v
    rows[v] |= 1 << u
    affected = (1 << u) | (1 << v) | (g.adj[u] & g.adj[v])
    return all(neighbourhood_is_bipartite(g, w, rows) for w in bits(affected))


def classify_pair(g: Graph, u: int, v: int) -> PairClass:
    """Adjacent, dense (non-adjacent, common neighbourhood has an edge) or sparse."""
    if u == v:
        raise ValueError("classify_pair needs two distinct vertices")
    if g.has_edge(u, v):
        return PairClass.ADJACENT
    common = g.adj[u] & g.adj[v]
    for x in bits(common):
        if g.adj[x] & common:
            return PairClass.DENSE
    return PairClass.SPARSE


def dense_set(g: Graph, v: int) -> int:
    """Bitset of the vertices forming a dense pair with v."""
    out = 0
    for u in range(g.n):
        if u != v and classify_pair(g, u, v) is PairClass.DENSE:
            out |= 1 << u
    return out


def saturate(g: Graph) -> Graph:
    """Edge-maximal locally bipartite supergraph of g, on the same vertices.

    Non-edges are tried in lexicographic (u, v) order and kept whenever the
    graph stays locally bipartite.  Different orders may give different
    maximal supergraphs; this order is the documented one.
    """
    if not is_locally_bipartite(g):
        raise ValueError("saturate requires a locally bipartite input")
    current = g
    for u in range(g.n):
        for v in range(u + 1, g.n):
            if not current.has_edge(u, v) and locally_bipartite_after_adding(current, u, v):
                current = current.with_edge(u, v)
    return current


def is_edge_maximal_locally_bipartite(g: Graph) -> bool:
    if not is_locally_bipartite(g):
        return False
    return not any(locally_bipartite_after_adding(g, u, v) for u, v in g.non_edges())


def is_twin_free(g: Graph) -> bool:
    return len(set(g.adj)) == g.n


def _blocks_through(h: Graph, target: int) -> list[int]:
    """Vertex bitsets of the biconnected blocks containing ``target``."""
    disc: dict[int, int] = {}
    low: dict[int, int] = {}
    edge_stack: list[tuple[int, int]] = []
    blocks: list[int] = []
    counter = [0]

    def dfs(v: int, parent: int) -> None:
        disc[v] = low[v] = counter[0]
        counter[0] += 1
        for u in bits(h.adj[v]):
            if u not in disc:
                edge_stack.append((v, u))
                dfs(u, v)
                low[v] = min(low[v], low[u])
                if low[u] >= disc[v]:
                    members = 0
                    while True:
                        a, b = edge_stack.pop()
                        members |= (1 << a) | (1 << b)
                        if (a, b) == (v, u):
                            break
                    blocks.append(members)
            elif u != parent and disc[u] < disc[v]:
                edge_stack.append((v, u))
                low[v] = min(low[v], disc[u])

    dfs(target, -1)
    return [b for b in blocks if b >> target & 1]


def _odd_cycle_through(h: Graph, target: int) -> bool:
    """Whether some simple odd cycle of h passes through ``target``.

    A 2-connected non-bipartite graph has an odd cycle through every vertex
    (route two disjoint paths from the vertex to an odd cycle; the two arcs
    between their endpoints have different parities), so it suffices to test
    the target's biconnected blocks for bipartiteness.
    """
    for members in _blocks_through(h, target):
        if members.bit_count() < 3:
            continue
        block, _ = induced_subgraph(h, members)
        if not _is_bipartite(block):
            return True
    return False


def _is_bipartite(h: Graph) -> bool:
    colour: dict[int, int] = {}
    for start in range(h.n):
        if start in colour:
            continue
        colour[start] = 0
        queue = deque([start])
        while queue:
            v = queue.popleft()
            for u in bits(h.adj[v]):
                if u not in colour:
                    colour[u] = colour[v] ^ 1
                    queue.append(u)
                elif colour[u] == colour[v]:
                    return False
    return True


def sparse_missing_spoke(g: Graph, max_rim: int | None = None) -> tuple[int, int] | None:
    """A sparse pair (u, v) such that uv is the missing spoke of an odd wheel.

    The configuration is an odd cycle through v whose other vertices all lie
    in the neighbourhood of u.  ``max_rim`` = 5 restricts to 5-wheels.
    Returns None when no such configuration exists.
    """
    for u in range(g.n):
        for v in range(g.n):
            if u == v or classify_pair(g, min(u, v), max(u, v)) is not PairClass.SPARSE:
                continue
            region = g.adj[u] | (1 << v)
            h, labels = induced_subgraph(g, region)
            target = labels.index(v)
            if max_rim is None:
                if _odd_cycle_through(h, target):
                    return (u, v)
            else:
                if _bounded_odd_cycle_through(h, target, max_rim):
                    return (u, v)
    return None


def _bounded_odd_cycle_through(h: Graph, target: int, max_len: int) -> bool:
    def extend(path: list[int], on_path: int) -> bool:
        v = path[-1]
        if len(path) > max_len:
            return False
        for u in bits(h.adj[v]):
            if u == target and 3 <= len(path) <= max_len and len(path) % 2 == 1:
                return True
            if not on_path >> u & 1 and u != target:
                path.append(u)
                if extend(path, on_path | (1 << u)):
                    return True
                path.pop()
        return False

    return extend([target], 1 << target)
