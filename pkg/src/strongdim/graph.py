"""Simple undirected graphs over dense integer ids, backed by per-vertex bitsets.

Everything downstream (metrics, products, exact solvers) leans on the bitset
representation: ``adj[u]`` is an int whose bit ``v`` is set iff ``uv`` is an
edge.  Graphs are immutable after construction and safe to share.
"""

from __future__ import annotations

import random
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "make_graph",
    "path",
    "cycle",
    "complete",
    "complete_multipartite",
    "grid",
    "star",
    "random_connected",
    "generalized_tree",
    "generate",
    "disjoint_union",
    "complement",
    "induced_subgraph",
    "relabel",
    "graphs_isomorphic",
    "from_graph6",
    "to_graph6",
    "to_dot",
    "bits",
]

RANDOM_CONNECTED_RETRY_CAP = 10_000
ISOMORPHISM_SIZE_CAP = 16


def bits(mask: int) -> Iterator[int]:
    """Yield the indices of the set bits of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


class Graph:
    """Immutable simple undirected graph on vertices ``0..n-1``."""

    __slots__ = ("n", "adj")

    def __init__(self, n: int, adj: Sequence[int]):
        self.n = n
        self.adj = tuple(adj)

    # -- queries ----------------------------------------------------------

    def degree(self, u: int) -> int:
        return self.adj[u].bit_count()

    def neighbors(self, u: int) -> Iterator[int]:
        return bits(self.adj[u])

    def closed_neighborhood(self, u: int) -> int:
        """Bitmask of N[u] = N(u) plus u itself."""
        return self.adj[u] | (1 << u)

    def has_edge(self, u: int, v: int) -> bool:
        return (self.adj[u] >> v) & 1 == 1

    def edges(self) -> Iterator[tuple[int, int]]:
        """All edges as ordered pairs (u, v) with u < v."""
        for u in range(self.n):
            for v in bits(self.adj[u] >> (u + 1)):
                yield (u, u + 1 + v)

    @property
    def num_edges(self) -> int:
        return sum(m.bit_count() for m in self.adj) // 2

    def degree_sequence(self) -> tuple[int, ...]:
        return tuple(sorted(m.bit_count() for m in self.adj))

    # -- dunder -----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, Graph) and self.n == other.n and self.adj == other.adj
        )

    def __hash__(self) -> int:
        return hash((self.n, self.adj))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.num_edges})"


def _validated(n: int, adj: list[int]) -> Graph:
    for u in range(n):
        if adj[u] >> n:
            raise ValueError(f"neighbor id out of range for vertex {u}")
        if (adj[u] >> u) & 1:
            raise ValueError(f"loop edge at vertex {u}")
        for v in bits(adj[u]):
            if not (adj[v] >> u) & 1:
                raise ValueError(f"asymmetric adjacency between {u} and {v}")
    return Graph(n, adj)


def make_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph from an edge list; edges are deduplicated.

    Raises ValueError for negative n, out-of-range endpoints or loops.
    """
    if n < 0:
        raise ValueError("vertex count must be non-negative")
    adj = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise ValueError(f"edge ({u},{v}) has an endpoint outside [0,{n})")
        if u == v:
            raise ValueError(f"loop edge at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, adj)


# ---------------------------------------------------------------------------
# named families
# ---------------------------------------------------------------------------


def path(n: int) -> Graph:
    """Path P_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError("path needs n >= 1")
    return make_graph(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    """Cycle C_n on n >= 3 vertices."""
    if n < 3:
        raise ValueError("cycle needs n >= 3")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    """Complete graph K_n on n >= 1 vertices."""
    if n < 1:
        raise ValueError("complete needs n >= 1")
    full = (1 << n) - 1
    return Graph(n, [full ^ (1 << u) for u in range(n)])


def complete_multipartite(parts: Sequence[int]) -> Graph:
    """Complete multipartite graph; vertices grouped by consecutive parts."""
    if len(parts) < 2:
        raise ValueError("complete_multipartite needs at least 2 parts")
    if any(p < 1 for p in parts):
        raise ValueError("part sizes must be positive")
    n = sum(parts)
    masks = []
    start = 0
    for p in parts:
        masks.append(((1 << p) - 1) << start)
        start += p
    full = (1 << n) - 1
    adj = []
    for mask in masks:
        row = full ^ mask
        adj.extend(row for _ in range(mask.bit_count()))
    return Graph(n, adj)


def grid(rows: int, cols: int) -> Graph:
    """Grid graph: the Cartesian product of two paths, built directly row-major."""
    if rows < 1 or cols < 1:
        raise ValueError("grid needs positive dimensions")
    edges = []
    for i in range(rows):
        for j in range(cols):
            if j + 1 < cols:
                edges.append((i * cols + j, i * cols + j + 1))
            if i + 1 < rows:
                edges.append((i * cols + j, (i + 1) * cols + j))
    return make_graph(rows * cols, edges)


def star(n: int) -> Graph:
    """Star on n >= 2 vertices: center 0 joined to all others."""
    if n < 2:
        raise ValueError("star needs n >= 2")
    return make_graph(n, [(0, v) for v in range(1, n)])


def random_connected(n: int, p: float, seed: int) -> Graph:
    """Seeded Erdos-Renyi draws, rejected until connected.

    Raises ValueError when the retry cap is hit (p too small for n).
    """
    if n < 1:
        raise ValueError("random_connected needs n >= 1")
    if not 0.0 < p <= 1.0:
        raise ValueError("edge probability must be in (0, 1]")
    rng = random.Random(seed)
    for _ in range(RANDOM_CONNECTED_RETRY_CAP):
        adj = [0] * n
        for u in range(n):
            for v in range(u + 1, n):
                if rng.random() < p:
                    adj[u] |= 1 << v
                    adj[v] |= 1 << u
        if _connected_masks(n, adj):
            return Graph(n, adj)
    raise ValueError(
        f"no connected graph found in {RANDOM_CONNECTED_RETRY_CAP} draws "
        f"(n={n}, p={p})"
    )


def generalized_tree(block_sizes: Sequence[int], seed: int) -> Graph:
    """Chain complete blocks: each new block shares one vertex with the graph so far.

    The attachment vertex is drawn uniformly from the existing vertices
    (seeded, reproducible).  All block sizes must be >= 2.
    """
    if not block_sizes:
        raise ValueError("generalized_tree needs at least one block")
    if any(s < 2 for s in block_sizes):
        raise ValueError("block sizes must all be >= 2")
    rng = random.Random(seed)
    n = block_sizes[0]
    edges = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for s in block_sizes[1:]:
        attach = rng.randrange(n)
        block = [attach] + list(range(n, n + s - 1))
        n += s - 1
        edges.extend(
            (block[i], block[j]) for i in range(s) for j in range(i + 1, s)
        )
    return make_graph(n, edges)


def _connected_masks(n: int, adj: Sequence[int]) -> bool:
    if n == 0:
        return False
    seen = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in bits(frontier):
            nxt |= adj[u]
        frontier = nxt & ~seen
        seen |= frontier
    return seen == (1 << n) - 1


def generate(spec: str) -> Graph:
    """Build a named-family graph from a compact ``family:params`` string.

    Examples: ``path:4``, ``cycle:7``, ``complete:5``, ``kpartite:2,2,3``,
    ``grid:3x4``, ``star:5``, ``random:8,0.4,17`` (n, p, seed),
    ``gtree:3,3@17`` (block sizes, optional @seed).
    """
    family, sep, arg = spec.partition(":")
    if not sep:
        raise ValueError(f"generator spec {spec!r} is missing ':'")
    try:
        if family == "path":
            return path(int(arg))
        if family == "cycle":
            return cycle(int(arg))
        if family == "complete":
            return complete(int(arg))
        if family == "kpartite":
            return complete_multipartite([int(s) for s in arg.split(",")])
        if family == "grid":
            a, b = arg.split("x")
            return grid(int(a), int(b))
        if family == "star":
            return star(int(arg))
        if family == "random":
            n_s, p_s, seed_s = arg.split(",")
            return random_connected(int(n_s), float(p_s), int(seed_s))
        if family == "gtree":
            sizes_s, _, seed_s = arg.partition("@")
            sizes = [int(s) for s in sizes_s.split(",")]
            return generalized_tree(sizes, int(seed_s) if seed_s else 0)
    except ValueError:
        raise
    except Exception as exc:  # int()/split() failures on malformed params
        raise ValueError(f"bad parameters in generator spec {spec!r}: {exc}") from exc
    raise ValueError(f"unknown graph family {family!r}")


# ---------------------------------------------------------------------------
# combinators
# ---------------------------------------------------------------------------


def disjoint_union(graphs: Sequence[Graph]) -> Graph:
    """Disjoint union; vertex blocks are relabeled by cumulative offset."""
    n = sum(g.n for g in graphs)
    adj = []
    offset = 0
    for g in graphs:
        adj.extend(mask << offset for mask in g.adj)
        offset += g.n
    return Graph(n, adj)


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph(g.n, [full ^ mask ^ (1 << u) for u, mask in enumerate(g.adj)])


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, list[int]]:
    """Subgraph induced by ``keep``; returns the graph and old ids in new order."""
    old_ids = sorted(set(keep))
    index = {old: new for new, old in enumerate(old_ids)}
    adj = [0] * len(old_ids)
    for new, old in enumerate(old_ids):
        for w in bits(g.adj[old]):
            if w in index:
                adj[new] |= 1 << index[w]
    return Graph(len(old_ids), adj), old_ids


def relabel(g: Graph, perm: Sequence[int]) -> Graph:
    """Apply the permutation ``perm`` (old id -> new id) to vertices."""
    adj = [0] * g.n
    for u in range(g.n):
        row = 0
        for w in bits(g.adj[u]):
            row |= 1 << perm[w]
        adj[perm[u]] = row
    return Graph(g.n, adj)


# ---------------------------------------------------------------------------
# isomorphism (desk scale only)
# ---------------------------------------------------------------------------


def _refine_colors(g: Graph) -> list[int]:
    """Iterated neighbor-color refinement starting from degrees."""
    colors = [g.degree(u) for u in range(g.n)]
    for _ in range(g.n):
        signature = [
            (colors[u], tuple(sorted(colors[w] for w in g.neighbors(u))))
            for u in range(g.n)
        ]
        palette = {sig: i for i, sig in enumerate(sorted(set(signature)))}
        new = [palette[sig] for sig in signature]
        if new == colors:
            break
        colors = new
    return colors


def graphs_isomorphic(a: Graph, b: Graph, size_cap: int = ISOMORPHISM_SIZE_CAP) -> bool:
    """Exact isomorphism test by backtracking over refinement color classes.

    Intended for small graphs (SR shapes of factors); raises ValueError above
    ``size_cap`` so callers fall back to shape summaries.
    """
    if a.n != b.n or a.num_edges != b.num_edges:
        return False
    if a.n > size_cap:
        raise ValueError(f"isomorphism check capped at {size_cap} vertices")
    ca, cb = _refine_colors(a), _refine_colors(b)
    if sorted(ca) != sorted(cb):
        return False

    n = a.n
    order = sorted(range(n), key=lambda u: (ca.count(ca[u]), ca[u], u))
    mapping = [-1] * n
    used = 0

    def extend(pos: int) -> bool:
        nonlocal used
        if pos == n:
            return True
        u = order[pos]
        for x in range(n):
            if (used >> x) & 1 or cb[x] != ca[u]:
                continue
            ok = True
            for q in range(pos):
                v = order[q]
                if a.has_edge(u, v) != b.has_edge(x, mapping[v]):
                    ok = False
                    break
            if ok:
                mapping[u] = x
                used |= 1 << x
                if extend(pos + 1):
                    return True
                used ^= 1 << x
                mapping[u] = -1
        return False

    return extend(0)


# ---------------------------------------------------------------------------
# graph6 serialization
# ---------------------------------------------------------------------------

_G6_MAX_N = 1 << 18


def to_graph6(g: Graph) -> str:
    """Encode in standard graph6 (printable ASCII, upper triangle column-major)."""
    n = g.n
    if n >= _G6_MAX_N:
        raise ValueError(f"graph6 encoding supported for n < {_G6_MAX_N}")
    if n <= 62:
        head = chr(n + 63)
    else:
        head = "~" + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))
    acc = 0
    nbits = 0
    out = [head]
    for v in range(1, n):
        col = g.adj[v]
        for u in range(v):
            acc = (acc << 1) | ((col >> u) & 1)
            nbits += 1
            if nbits == 6:
                out.append(chr(acc + 63))
                acc, nbits = 0, 0
    if nbits:
        out.append(chr((acc << (6 - nbits)) + 63))
    return "".join(out)


def from_graph6(text: str) -> Graph:
    """Decode a graph6 string; strict about truncation and trailing garbage."""
    s = text.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    if not s:
        raise ValueError("empty graph6 string")
    for ch in s:
        if not 63 <= ord(ch) <= 126:
            raise ValueError(f"invalid graph6 byte {ch!r}")
    if s[0] != "~":
        n = ord(s[0]) - 63
        body = s[1:]
    else:
        if len(s) >= 2 and s[1] == "~":
            raise ValueError("graph6 order >= 2^18 not supported")
        if len(s) < 4:
            raise ValueError("truncated graph6 header")
        n = 0
        for ch in s[1:4]:
            n = (n << 6) | (ord(ch) - 63)
        if n <= 62:
            raise ValueError("non-canonical graph6 header (small order in long form)")
        body = s[4:]
    npairs = n * (n - 1) // 2
    need = (npairs + 5) // 6
    if len(body) < need:
        raise ValueError("truncated graph6 bit stream")
    if len(body) > need:
        raise ValueError("trailing garbage after graph6 bit stream")
    adj = [0] * n
    idx = 0
    stream = 0
    have = 0
    for ch in body:
        stream = (stream << 6) | (ord(ch) - 63)
        have += 6
    # padding bits (beyond npairs) must be zero
    pad = need * 6 - npairs
    if pad and stream & ((1 << pad) - 1):
        raise ValueError("nonzero padding bits in graph6 stream")
    for v in range(1, n):
        for u in range(v):
            bit = (stream >> (have - 1 - idx)) & 1
            idx += 1
            if bit:
                adj[u] |= 1 << v
                adj[v] |= 1 << u
    return _validated(n, adj)


# ---------------------------------------------------------------------------
# DOT export
# ---------------------------------------------------------------------------


def to_dot(g: Graph, labels: dict[int, str] | None = None, name: str = "G") -> str:
    """Render as an undirected DOT graph; ``labels`` override vertex names."""
    lines = [f"graph {name} {{"]
    for u in range(g.n):
        label = labels.get(u) if labels else None
        if label is not None:
            lines.append(f'  {u} [label="{label}"];')
        else:
            lines.append(f"  {u};")
    for u, v in g.edges():
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
