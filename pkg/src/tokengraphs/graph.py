"""Simple undirected graphs, named families, Laplacians and edge-list I/O.

Vertices are always ``0..n-1``. Every family constructor fixes a canonical
labelling so that derived objects (token graphs, partitions, spectra) are
reproducible:

* ``cycle:n``   vertex ``i`` adjacent to ``i +- 1 (mod n)``
* ``path:n``    vertex ``i`` adjacent to ``i + 1``
* ``complete:n``
* ``star:n``    centre ``0``, leaves ``1..n-1``
* ``complete_multipartite:n1,...,nr``  parts are consecutive index blocks
* ``odd:r``     vertex = colex rank of an (r-1)-subset of ``range(2r-1)``,
  adjacent iff disjoint
* ``hypercube:d``  vertex = d-bit integer, adjacent iff Hamming distance 1
* ``petersen``  same as ``odd:3``
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from itertools import combinations
from pathlib import Path
from typing import Iterable, Optional

import numpy as np

from .combinatorics import colex_subsets
from .errors import InvalidFamilyError


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[tuple[int, ...], ...]
    name: str = field(default="", compare=False)

    def __post_init__(self):
        if len(self.adj) != self.n:
            raise ValueError(f"adjacency has {len(self.adj)} rows for n={self.n}")
        for i, nb in enumerate(self.adj):
            if list(nb) != sorted(set(nb)):
                raise ValueError(f"neighbours of {i} not strictly increasing")
            for j in nb:
                if not 0 <= j < self.n:
                    raise ValueError(f"neighbour {j} of {i} out of range")
                if j == i:
                    raise ValueError(f"loop at vertex {i}")
                if i not in self.adj[j]:
                    raise ValueError(f"edge {i}-{j} is not symmetric")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], name: str = "") -> "Graph":
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs), name)

    @property
    def m(self) -> int:
        return sum(len(nb) for nb in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        return [(i, j) for i, nb in enumerate(self.adj) for j in nb if i < j]

    def degrees(self) -> list[int]:
        return [len(nb) for nb in self.adj]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.adj[u]

    def relabel(self, perm: Iterable[int]) -> "Graph":
        """Graph with vertex ``i`` renamed ``perm[i]``."""
        p = list(perm)
        if sorted(p) != list(range(self.n)):
            raise ValueError("relabelling is not a permutation")
        return Graph.from_edges(self.n, ((p[u], p[v]) for u, v in self.edges()), self.name)

    def __repr__(self):
        label = self.name or "Graph"
        return f"<{label}: n={self.n}, m={self.m}>"


def _ints(text: str, spec: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",")]
    except ValueError:
        raise InvalidFamilyError(f"malformed parameters in family spec {spec!r}") from None


def _require(cond: bool, spec: str, why: str):
    if not cond:
        raise InvalidFamilyError(f"{spec!r}: {why}")


def cycle(n: int) -> Graph:
    _require(n >= 3, f"cycle:{n}", "cycle needs n >= 3")
    return Graph.from_edges(n, ((i, (i + 1) % n) for i in range(n)), f"cycle:{n}")


def path(n: int) -> Graph:
    _require(n >= 1, f"path:{n}", "path needs n >= 1")
    return Graph.from_edges(n, ((i, i + 1) for i in range(n - 1)), f"path:{n}")


def complete(n: int) -> Graph:
    _require(n >= 1, f"complete:{n}", "complete graph needs n >= 1")
    return Graph.from_edges(n, combinations(range(n), 2), f"complete:{n}")


def star(n: int) -> Graph:
    _require(n >= 2, f"star:{n}", "star needs n >= 2")
    return Graph.from_edges(n, ((0, i) for i in range(1, n)), f"star:{n}")


def complete_multipartite(*parts: int) -> Graph:
    spec = "complete_multipartite:" + ",".join(map(str, parts))
    _require(len(parts) >= 2, spec, "need at least two parts")
    _require(all(p >= 1 for p in parts), spec, "part sizes must be positive")
    owner = [i for i, p in enumerate(parts) for _ in range(p)]
    n = len(owner)
    edges = [(u, v) for u, v in combinations(range(n), 2) if owner[u] != owner[v]]
    return Graph.from_edges(n, edges, spec)


def odd_graph(r: int) -> Graph:
    _require(r >= 2, f"odd:{r}", "odd graph needs r >= 2")
    subsets = [frozenset(s) for s in colex_subsets(2 * r - 1, r - 1)]
    edges = [
        (i, j)
        for i, j in combinations(range(len(subsets)), 2)
        if not subsets[i] & subsets[j]
    ]
    return Graph.from_edges(len(subsets), edges, f"odd:{r}")


def hypercube(d: int) -> Graph:
    _require(d >= 1, f"hypercube:{d}", "hypercube needs d >= 1")
    n = 1 << d
    edges = [(v, v ^ (1 << b)) for v in range(n) for b in range(d) if not v >> b & 1]
    return Graph.from_edges(n, edges, f"hypercube:{d}")


def petersen() -> Graph:
    g = odd_graph(3)
    return Graph(g.n, g.adj, "petersen")


_UNARY = {
    "cycle": cycle,
    "path": path,
    "complete": complete,
    "star": star,
    "odd": odd_graph,
    "hypercube": hypercube,
}


def build_family(spec: str) -> Graph:
    """Build a named graph from a descriptor such as ``"cycle:9"``.

    >>> build_family("odd:3").n
    10
    """
    if not isinstance(spec, str) or not spec.strip():
        raise InvalidFamilyError(f"empty family spec {spec!r}")
    spec = spec.strip()
    kind, _, params = spec.partition(":")
    if kind == "petersen":
        _require(params == "", spec, "petersen takes no parameters")
        return petersen()
    if kind == "complete_multipartite":
        _require(params != "", spec, "missing part sizes")
        return complete_multipartite(*_ints(params, spec))
    if kind not in _UNARY:
        raise InvalidFamilyError(f"unknown graph family {kind!r} in {spec!r}")
    values = _ints(params, spec) if params else []
    _require(len(values) == 1, spec, "expected exactly one integer parameter")
    return _UNARY[kind](values[0])


def laplacian(g: Graph) -> np.ndarray:
    """Integer Laplacian ``D - A`` as an ``int64`` array."""
    lap = np.zeros((g.n, g.n), dtype=np.int64)
    for i, nb in enumerate(g.adj):
        lap[i, i] = len(nb)
        for j in nb:
            lap[i, j] = -1
    return lap


def adjacency(g: Graph) -> np.ndarray:
    a = np.zeros((g.n, g.n), dtype=np.int64)
    for i, nb in enumerate(g.adj):
        a[i, list(nb)] = 1
    return a


def delete_vertex(g: Graph, i: int) -> Graph:
    """``G \\ i`` with the remaining vertices renumbered in their original order."""
    if not 0 <= i < g.n:
        raise IndexError(f"vertex {i} out of range for n={g.n}")

    def shift(v):
        return v - 1 if v > i else v

    edges = [(shift(u), shift(v)) for u, v in g.edges() if i not in (u, v)]
    name = f"{g.name}\\{i}" if g.name else ""
    return Graph.from_edges(g.n - 1, edges, name)


def bipartite_classes(g: Graph) -> Optional[list[int]]:
    """Two-colouring by BFS from the lowest vertex of each component, or None."""
    color = [-1] * g.n
    for root in range(g.n):
        if color[root] >= 0:
            continue
        color[root] = 0
        queue = deque([root])
        while queue:
            u = queue.popleft()
            for v in g.adj[u]:
                if color[v] < 0:
                    color[v] = 1 - color[u]
                    queue.append(v)
                elif color[v] == color[u]:
                    return None
    return color


def components(g: Graph) -> int:
    """Number of connected components (union-find)."""
    parent = list(range(g.n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    count = g.n
    for u, v in g.edges():
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            count -= 1
    return count


def is_connected(g: Graph) -> bool:
    return g.n > 0 and components(g) == 1


# -- edge-list text format ------------------------------------------------

def format_edge_list(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{u} {v}" for u, v in g.edges()]
    return "\n".join(lines) + "\n"


def parse_edge_list(text: str, name: str = "") -> Graph:
    """Parse ``"n m"`` followed by ``m`` lines ``"i j"`` with ``i < j``."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows or len(rows[0]) != 2:
        raise ValueError("edge list must start with a line 'n m'")
    try:
        n, m = int(rows[0][0]), int(rows[0][1])
        pairs = [(int(a), int(b)) for a, b in rows[1:]]
    except ValueError:
        raise ValueError("edge list entries must be integer pairs") from None
    if len(pairs) != m:
        raise ValueError(f"header announces {m} edges, found {len(pairs)}")
    seen = set()
    for u, v in pairs:
        if u == v:
            raise ValueError(f"loop at vertex {u}")
        if not u < v:
            raise ValueError(f"edge ({u}, {v}) must satisfy i < j")
        if (u, v) in seen:
            raise ValueError(f"duplicate edge ({u}, {v})")
        seen.add((u, v))
    return Graph.from_edges(n, pairs, name)


def read_edge_list(path: str | Path) -> Graph:
    p = Path(path)
    return parse_edge_list(p.read_text(encoding="utf-8"), name=p.name)


def write_edge_list(g: Graph, path: str | Path) -> None:
    Path(path).write_text(format_edge_list(g), encoding="utf-8", newline="\n")
