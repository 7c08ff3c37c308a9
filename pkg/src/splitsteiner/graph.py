"""Undirected simple graphs over vertices 0..n-1.

Adjacency is kept in CSR form (two numpy arrays) so that dense cliques of
tens of thousands of vertices stay affordable: a split graph on 50,000
vertices carries ~1.4e8 clique edges, which rules out per-edge Python
objects. All neighbor lists are sorted ascending, which the BFS helpers
rely on for deterministic output.
"""

from __future__ import annotations

from collections import deque
from collections.abc import Iterable, Iterator

import numpy as np


class Graph:
    """Immutable undirected simple graph."""

    __slots__ = ("n", "_indptr", "_indices")

    def __init__(self, n: int, indptr: np.ndarray, indices: np.ndarray):
        # Trusted constructor: callers must supply symmetric, sorted,
        # loop-free CSR data. Use from_edges for validated construction.
        self.n = n
        self._indptr = indptr
        self._indices = indices

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from an edge list, validating simplicity.

        Raises ValueError on out-of-range endpoints, self-loops and
        duplicate edges (either orientation).
        """
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        us: list[int] = []
        vs: list[int] = []
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            us.append(u)
            vs.append(v)
        m = len(us)
        src = np.fromiter(us, dtype=np.int64, count=m)
        dst = np.fromiter(vs, dtype=np.int64, count=m)
        lo = np.minimum(src, dst)
        hi = np.maximum(src, dst)
        if m:
            keys = lo * n + hi
            keys.sort()
            if np.any(keys[1:] == keys[:-1]):
                pos = int(np.flatnonzero(keys[1:] == keys[:-1])[0])
                k = int(keys[pos])
                raise ValueError(f"duplicate edge ({k // n}, {k % n})")
        both_src = np.concatenate([lo, hi])
        both_dst = np.concatenate([hi, lo])
        order = np.lexsort((both_dst, both_src))
        indices = both_dst[order].astype(np.int32)
        counts = np.bincount(both_src, minlength=n)
        indptr = np.zeros(n + 1, dtype=np.int64)
        np.cumsum(counts, out=indptr[1:])
        return cls(n, indptr, indices)

    @classmethod
    def from_csr(cls, n: int, indptr: np.ndarray, indices: np.ndarray) -> "Graph":
        """Wrap prebuilt CSR arrays (sorted, symmetric, loop-free).

        Meant for the instance generators, which assemble large cliques
        vectorized; no validation beyond shape checks is performed.
        """
        if len(indptr) != n + 1:
            raise ValueError("indptr length must be n+1")
        return cls(n, np.asarray(indptr, dtype=np.int64),
                   np.asarray(indices, dtype=np.int32))

    @property
    def m(self) -> int:
        return len(self._indices) // 2

    def degree(self, v: int) -> int:
        return int(self._indptr[v + 1] - self._indptr[v])

    def degrees(self) -> np.ndarray:
        return np.diff(self._indptr)

    def neighbors(self, v: int) -> np.ndarray:
        """Sorted neighbor ids of v as a numpy view."""
        return self._indices[self._indptr[v]:self._indptr[v + 1]]

    def neighbor_list(self, v: int) -> list[int]:
        return [int(w) for w in self.neighbors(v)]

    def has_edge(self, u: int, v: int) -> bool:
        nb = self.neighbors(u)
        i = int(np.searchsorted(nb, v))
        return i < len(nb) and int(nb[i]) == v

    def edges(self) -> Iterator[tuple[int, int]]:
        """Yield each edge once as (u, v) with u < v, lexicographically."""
        for u in range(self.n):
            nb = self.neighbors(u)
            start = int(np.searchsorted(nb, u + 1))
            for w in nb[start:]:
                yield (u, int(w))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return (self.n == other.n
                and np.array_equal(self._indptr, other._indptr)
                and np.array_equal(self._indices, other._indices))

    def __hash__(self):  # pragma: no cover - graphs are not hashed
        return hash((self.n, self.m))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def _bfs(g: Graph, subset: Iterable[int]) -> tuple[list[tuple[int, int]], int, int]:
    """BFS over the induced subgraph on `subset`.

    Returns (tree edges in discovery order, number visited, subset size).
    Root is the smallest subset vertex; neighbors are explored ascending.
    """
    sub = sorted(set(subset))
    if not sub:
        return [], 0, 0
    if sub[0] < 0 or sub[-1] >= g.n:
        raise ValueError("subset contains out-of-range vertex ids")
    eligible = np.zeros(g.n, dtype=bool)
    eligible[sub] = True
    root = sub[0]
    eligible[root] = False
    q: deque[int] = deque([root])
    edges: list[tuple[int, int]] = []
    visited = 1
    while q:
        u = q.popleft()
        nb = g.neighbors(u)
        new = nb[eligible[nb]]
        if new.size:
            eligible[new] = False
            visited += int(new.size)
            for w in new.tolist():
                edges.append((u, w))
                q.append(w)
    return edges, visited, len(sub)


def is_connected(g: Graph, subset: Iterable[int] | None = None) -> bool:
    """True iff the induced subgraph on `subset` (default: all vertices)
    is connected. The empty set and singletons count as connected."""
    if subset is None:
        subset = range(g.n)
    _, visited, size = _bfs(g, subset)
    return visited == size


def bfs_tree(g: Graph, subset: Iterable[int]) -> tuple[tuple[int, int], ...]:
    """Spanning tree of the induced subgraph on `subset` via BFS.

    Edges are (parent, child) in discovery order; the root is the smallest
    vertex id in the subset and neighbors are explored in ascending order,
    so the output is deterministic. Raises ValueError if the induced
    subgraph is disconnected.
    """
    edges, visited, size = _bfs(g, subset)
    if visited != size:
        raise ValueError(
            f"subset induces a disconnected subgraph ({visited} of {size} reachable)")
    return tuple(edges)
