"""The four two-factor graph products, with one fixed coordinate convention.

A product vertex (u, v) gets id ``u * n2 + v`` (row-major).  Adjacency rows
are assembled with shifted-bitmask arithmetic, so building a product costs
O(n1 * n2) big-int operations rather than a Python loop over vertex pairs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .graph import Graph, bits

__all__ = ["PRODUCT_KINDS", "ProductSpec", "product", "project", "coordinate_labels"]

PRODUCT_KINDS = ("strong", "cartesian", "lexicographic", "cartesian_sum")


@dataclass(frozen=True)
class ProductSpec:
    """Which product was taken and how (u, v) pairs map to product ids."""

    kind: str
    n1: int
    n2: int

    def __post_init__(self):
        if self.kind not in PRODUCT_KINDS:
            raise ValueError(f"unknown product kind {self.kind!r}")
        if self.n1 < 1 or self.n2 < 1:
            raise ValueError("factors must be nonempty")

    @property
    def size(self) -> int:
        return self.n1 * self.n2

    def index(self, u: int, v: int) -> int:
        if not (0 <= u < self.n1 and 0 <= v < self.n2):
            raise ValueError(f"coordinate ({u},{v}) outside factor ranges")
        return u * self.n2 + v

    def decode(self, p: int) -> tuple[int, int]:
        if not 0 <= p < self.size:
            raise ValueError(f"product id {p} out of range")
        return divmod(p, self.n2)


def product(kind: str, g: Graph, h: Graph) -> Graph:
    """Product graph of g and h under the row-major index convention."""
    if g.n == 0 or h.n == 0:
        raise ValueError("product factors must be nonempty")
    if kind not in PRODUCT_KINDS:
        raise ValueError(f"unknown product kind {kind!r}")
    n1, n2 = g.n, h.n
    full_h = (1 << n2) - 1
    # stride masks: sum of 2^(u'*n2) over u' in the given G-side set
    def stride(mask: int) -> int:
        out = 0
        for u in bits(mask):
            out |= 1 << (u * n2)
        return out

    stride_open = [stride(g.adj[u]) for u in range(n1)]
    ones_all = stride((1 << n1) - 1)

    adj = [0] * (n1 * n2)
    if kind == "strong":
        stride_closed = [
            stride_open[u] | (1 << (u * n2)) for u in range(n1)
        ]
        for u in range(n1):
            base = u * n2
            s = stride_closed[u]
            for v in range(n2):
                closed_v = h.adj[v] | (1 << v)
                adj[base + v] = (closed_v * s) & ~(1 << (base + v))
    elif kind == "cartesian":
        for u in range(n1):
            base = u * n2
            s = stride_open[u]
            for v in range(n2):
                adj[base + v] = (h.adj[v] << base) | ((1 << v) * s)
    elif kind == "lexicographic":
        for u in range(n1):
            base = u * n2
            layer = full_h * stride_open[u]
            for v in range(n2):
                adj[base + v] = layer | (h.adj[v] << base)
    else:  # cartesian_sum
        for u in range(n1):
            base = u * n2
            layer = full_h * stride_open[u]
            for v in range(n2):
                adj[base + v] = layer | (h.adj[v] * ones_all)
    return Graph(n1 * n2, adj)


def project(spec: ProductSpec, vertices: Iterable[int], side: str) -> frozenset[int]:
    """Coordinate projection of a product vertex set onto one factor."""
    if spec is None:
        raise ValueError("vertex set is not associated with a product")
    if side not in ("G", "H", "g", "h"):
        raise ValueError("side must be 'G' or 'H'")
    first = side in ("G", "g")
    out = set()
    for p in vertices:
        u, v = spec.decode(p)
        out.add(u if first else v)
    return frozenset(out)


def coordinate_labels(spec: ProductSpec) -> dict[int, str]:
    """DOT-friendly labels 'u,v' for every product vertex id."""
    return {p: f"{u},{v}" for p in range(spec.size) for u, v in [spec.decode(p)]}
