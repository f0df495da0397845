"""Shortest-path metric and structural classifiers (antipodality, blocks).

Distances are exact BFS hop counts.  Unreachable pairs carry ``None`` --- a
dedicated sentinel that fails fast in arithmetic instead of corrupting
max/min comparisons.
"""

from __future__ import annotations

from typing import Sequence

from .graph import Graph, bits

__all__ = [
    "DistanceMatrix",
    "all_pairs_distances",
    "is_connected",
    "diameter",
    "is_two_antipodal",
    "cut_vertices",
    "blocks",
    "is_generalized_tree",
    "leaf_count",
]


class DistanceMatrix:
    """All-pairs hop distances plus per-source distance balls as bitmasks.

    ``balls[v][k]`` is the bitmask of vertices within distance k of v; the
    last entry is v's whole reachable set.  The balls power the O(1)
    maximal-distance tests in the strong resolving machinery.
    """

    __slots__ = ("n", "rows", "balls")

    def __init__(self, n: int, rows: Sequence[Sequence[int | None]], balls):
        self.n = n
        self.rows = rows
        self.balls = balls

    def dist(self, u: int, v: int) -> int | None:
        return self.rows[u][v]

    def ball(self, v: int, radius: int) -> int:
        """Bitmask of vertices within ``radius`` of v (clamped to reachability)."""
        if radius < 0:
            return 0
        levels = self.balls[v]
        return levels[radius] if radius < len(levels) else levels[-1]

    def eccentricity(self, v: int) -> int:
        """Largest finite distance from v."""
        return len(self.balls[v]) - 1

    def finite_diameter(self) -> int:
        return max(self.eccentricity(v) for v in range(self.n))


def _bfs(adj: Sequence[int], n: int, src: int) -> tuple[list[int | None], list[int]]:
    row: list[int | None] = [None] * n
    row[src] = 0
    seen = 1 << src
    levels = [seen]
    frontier = seen
    d = 0
    while True:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        nxt &= ~seen
        if not nxt:
            return row, levels
        d += 1
        for u in bits(nxt):
            row[u] = d
        seen |= nxt
        levels.append(seen)
        frontier = nxt


def all_pairs_distances(g: Graph) -> DistanceMatrix:
    rows = []
    balls = []
    for v in range(g.n):
        row, levels = _bfs(g.adj, g.n, v)
        rows.append(row)
        balls.append(levels)
    return DistanceMatrix(g.n, rows, balls)


def is_connected(g: Graph) -> bool:
    if g.n == 0:
        return False
    _, levels = _bfs(g.adj, g.n, 0)
    return levels[-1] == (1 << g.n) - 1


def _require_connected(g: Graph) -> None:
    if not is_connected(g):
        raise ValueError("graph must be connected")


def diameter(g: Graph, dm: DistanceMatrix | None = None) -> int:
    _require_connected(g)
    dm = dm or all_pairs_distances(g)
    return dm.finite_diameter()


def is_two_antipodal(g: Graph, dm: DistanceMatrix | None = None) -> bool:
    """True iff every vertex has exactly one vertex at distance diam(G)."""
    _require_connected(g)
    dm = dm or all_pairs_distances(g)
    d = dm.finite_diameter()
    for v in range(g.n):
        levels = dm.balls[v]
        if len(levels) - 1 != d:
            return False
        at_diam = levels[d] & ~levels[d - 1] if d > 0 else levels[0]
        if at_diam.bit_count() != 1:
            return False
    return True


# ---------------------------------------------------------------------------
# blocks and cut vertices (iterative Hopcroft-Tarjan)
# ---------------------------------------------------------------------------


def _block_structure(g: Graph) -> tuple[frozenset[int], list[frozenset[int]]]:
    _require_connected(g)
    n = g.n
    if n == 1:
        return frozenset(), [frozenset({0})]

    disc = [-1] * n
    low = [0] * n
    parent = [-1] * n
    cut = set()
    comp_edges: list[list[tuple[int, int]]] = []
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    # stack entries: (vertex, iterator over neighbors)
    stack = [(0, iter(list(g.neighbors(0))))]
    disc[0] = low[0] = timer
    timer += 1
    root_children = 0

    while stack:
        u, it = stack[-1]
        advanced = False
        for v in it:
            if disc[v] == -1:
                parent[v] = u
                if u == 0:
                    root_children += 1
                edge_stack.append((u, v))
                disc[v] = low[v] = timer
                timer += 1
                stack.append((v, iter(list(g.neighbors(v)))))
                advanced = True
                break
            elif v != parent[u] and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])
        if advanced:
            continue
        stack.pop()
        if stack:
            p = stack[-1][0]
            low[p] = min(low[p], low[u])
            if low[u] >= disc[p]:
                comp = []
                while edge_stack and edge_stack[-1] != (p, u):
                    comp.append(edge_stack.pop())
                comp.append(edge_stack.pop())
                comp_edges.append(comp)
                if p != 0:
                    cut.add(p)
    if root_children >= 2:
        cut.add(0)

    blocks_out = [
        frozenset(x for edge in comp for x in edge) for comp in comp_edges
    ]
    return frozenset(cut), blocks_out


def cut_vertices(g: Graph) -> frozenset[int]:
    """Articulation points of a connected graph."""
    return _block_structure(g)[0]


def blocks(g: Graph) -> list[frozenset[int]]:
    """Vertex sets of the maximal biconnected subgraphs, in discovery order."""
    return _block_structure(g)[1]


def is_generalized_tree(g: Graph) -> bool:
    """Block-graph test: every block induces a complete subgraph."""
    _require_connected(g)
    for block in blocks(g):
        mask = 0
        for v in block:
            mask |= 1 << v
        for v in block:
            if g.adj[v] & mask != mask ^ (1 << v):
                return False
    return True


def leaf_count(g: Graph) -> int:
    _require_connected(g)
    return sum(1 for u in range(g.n) if g.degree(u) == 1)
