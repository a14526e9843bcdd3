"""Finite simple connected graphs and the standard families used in the examples.

A :class:`Graph` stores its edges with a fixed orientation: the pair ``(u, v)``
places the edge coordinate at 0 on ``u`` and at ``L`` on ``v``.  Nothing
downstream depends on that choice, but the incidence matrices do.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import (
    Disconnected,
    DuplicateEdge,
    EmptyGraph,
    SelfLoop,
    VertexOutOfRange,
)

Edge = tuple[int, int]


@dataclass(frozen=True)
class Graph:
    vertex_count: int
    edges: tuple[Edge, ...]
    degrees: tuple[int, ...] = field(init=False, repr=False)

    def __post_init__(self) -> None:
        if not self.edges:
            raise EmptyGraph("graph has no edges")
        edges = tuple((int(u), int(v)) for u, v in self.edges)
        seen: set[frozenset[int]] = set()
        degrees = [0] * self.vertex_count
        for u, v in edges:
            for w in (u, v):
                if not 0 <= w < self.vertex_count:
                    raise VertexOutOfRange(
                        f"edge ({u}, {v}): vertex {w} not in [0, {self.vertex_count})"
                    )
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            key = frozenset((u, v))
            if key in seen:
                raise DuplicateEdge(f"duplicate edge ({u}, {v})")
            seen.add(key)
            degrees[u] += 1
            degrees[v] += 1
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "degrees", tuple(degrees))
        unreached = _unreached_vertices(self.vertex_count, edges)
        if unreached:
            raise Disconnected(
                f"graph is disconnected: vertex {unreached[0]} unreachable from vertex 0"
            )

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    def adjacency(self) -> list[list[int]]:
        nbrs: list[list[int]] = [[] for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return nbrs

    def adjacency_matrix(self) -> np.ndarray:
        a = np.zeros((self.vertex_count, self.vertex_count))
        for u, v in self.edges:
            a[u, v] = a[v, u] = 1.0
        return a

    def reoriented(self, flips: Sequence[bool]) -> "Graph":
        """Same graph with the orientation of edge ``i`` reversed where ``flips[i]``."""
        edges = tuple((v, u) if f else (u, v) for (u, v), f in zip(self.edges, flips))
        return Graph(self.vertex_count, edges)


def _unreached_vertices(n: int, edges: Iterable[Edge]) -> list[int]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    seen = [False] * n
    seen[0] = True
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for w in nbrs[u]:
            if not seen[w]:
                seen[w] = True
                queue.append(w)
    return [v for v in range(n) if not seen[v]]


def from_edge_list(pairs: Iterable[Sequence[int]], vertex_count: int | None = None) -> Graph:
    """Build a validated graph from ``(u, v)`` pairs.

    ``vertex_count`` defaults to one more than the largest index seen.
    """
    edges = [(int(p[0]), int(p[1])) for p in pairs]
    if not edges:
        raise EmptyGraph("edge list is empty")
    if vertex_count is None:
        vertex_count = max(max(e) for e in edges) + 1
    for u, v in edges:
        if min(u, v) < 0:
            raise VertexOutOfRange(f"edge ({u}, {v}) has a negative vertex index")
    return Graph(vertex_count, tuple(edges))


def parse_edge_list(text: str) -> Graph:
    """Parse the whitespace-separated edge-list format ('#' comments, blank lines skipped)."""
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected two vertex indices, got {raw!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer vertex index in {raw!r}") from None
    return from_edge_list(pairs)


def read_edge_list(path: str | Path) -> Graph:
    return parse_edge_list(Path(path).read_text())


def format_edge_list(g: Graph) -> str:
    lines = [f"# V={g.vertex_count} E={g.edge_count}"]
    lines += [f"{u} {v}" for u, v in g.edges]
    return "\n".join(lines) + "\n"


def betti_number(g: Graph) -> int:
    """Number of independent cycles, E - V + 1."""
    return g.edge_count - g.vertex_count + 1


def is_bipartite(g: Graph) -> bool:
    colour = [-1] * g.vertex_count
    nbrs = g.adjacency()
    for root in range(g.vertex_count):
        if colour[root] >= 0:
            continue
        colour[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for w in nbrs[u]:
                if colour[w] < 0:
                    colour[w] = 1 - colour[u]
                    queue.append(w)
                elif colour[w] == colour[u]:
                    return False
    return True


# families

def complete_bipartite(m: int, p: int) -> Graph:
    """K_{m,p}: parts ``0..m-1`` and ``m..m+p-1``, edges oriented first part -> second."""
    if m < 1 or p < 1:
        raise ValueError(f"complete_bipartite needs m, p >= 1 (got m={m}, p={p})")
    edges = tuple((u, m + w) for u in range(m) for w in range(p))
    return Graph(m + p, edges)


def star(edge_count: int) -> Graph:
    """Star with ``edge_count`` leaves; vertex 0 is the centre."""
    if edge_count < 1:
        raise ValueError(f"star needs at least one edge (got {edge_count})")
    return complete_bipartite(1, edge_count)


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError(f"cycle needs n >= 3 (got {n})")
    return Graph(n, tuple((i, (i + 1) % n) for i in range(n)))


def path(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"path needs n >= 2 (got {n})")
    return Graph(n, tuple((i, i + 1) for i in range(n - 1)))


def complete(n: int) -> Graph:
    if n < 2:
        raise ValueError(f"complete graph needs n >= 2 (got {n})")
    return Graph(n, tuple(itertools.combinations(range(n), 2)))


def random_tree(n: int, rng: np.random.Generator) -> Graph:
    """Uniform random labelled tree via a random Pruefer sequence."""
    if n == 2:
        return Graph(2, ((0, 1),))
    seq = [int(x) for x in rng.integers(0, n, size=n - 2)]
    degree = [1] * n
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = next(i for i in range(n) if degree[i] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (i for i in range(n) if degree[i] == 1)
    edges.append((u, v))
    return Graph(n, tuple(edges))


def random_connected_graph(
    n: int, rng: np.random.Generator, extra_edge_prob: float | None = None
) -> Graph:
    """Random spanning tree plus each remaining pair added independently.

    With ``extra_edge_prob=None`` the density itself is drawn uniformly from
    [0, 1], so a batch of samples covers trees through near-complete graphs.
    """
    tree = random_tree(n, rng)
    if extra_edge_prob is None:
        extra_edge_prob = float(rng.uniform())
    present = {frozenset(e) for e in tree.edges}
    edges = list(tree.edges)
    for u, v in itertools.combinations(range(n), 2):
        if frozenset((u, v)) not in present and rng.uniform() < extra_edge_prob:
            edges.append((u, v) if rng.uniform() < 0.5 else (v, u))
    return Graph(n, tuple(edges))


def connected_graphs(n: int) -> Iterator[Graph]:
    """Every connected labelled simple graph on ``n`` vertices (n >= 2)."""
    pairs = list(itertools.combinations(range(n), 2))
    for mask in range(1, 1 << len(pairs)):
        edges = tuple(pairs[i] for i in range(len(pairs)) if mask >> i & 1)
        if len(edges) < n - 1 or _unreached_vertices(n, edges):
            continue
        yield Graph(n, edges)
