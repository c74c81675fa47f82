"""Labeled simple undirected graphs with exact integer Laplacians.

Vertices are the integers ``0..n-1``.  For graphs produced from creation
sequences the vertex id is the creation index, so "created later" is plain
integer comparison.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .exceptions import GraphError

Edge = tuple[int, int]
IntegerMatrix = tuple[tuple[int, ...], ...]


def normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Immutable simple graph on vertices ``0..n-1``.

    ``adjacency[v]`` is the sorted tuple of neighbours of ``v``.  Use
    :meth:`from_edges` rather than the raw constructor.
    """

    n: int
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {self.n}")
        if len(self.adjacency) != self.n:
            raise GraphError("adjacency length does not match vertex count")
        sets = [frozenset(nbrs) for nbrs in self.adjacency]
        for v, nbrs in enumerate(self.adjacency):
            if list(nbrs) != sorted(sets[v]):
                raise GraphError(f"adjacency of {v} is not a sorted duplicate-free tuple")
            for u in nbrs:
                if not 0 <= u < self.n:
                    raise GraphError(f"neighbour {u} of {v} out of range")
                if u == v:
                    raise GraphError(f"self-loop at {v}")
                if v not in sets[u]:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")
        object.__setattr__(self, "_sets", tuple(sets))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Sequence[int]]) -> Graph:
        nbrs: list[set[int]] = [set() for _ in range(n)]
        for edge in edges:
            u, v = edge
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge {u}-{v} references a vertex outside 0..{n - 1}")
            if u == v:
                raise GraphError(f"self-loop at {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, tuple(tuple(sorted(s)) for s in nbrs))

    @classmethod
    def complete(cls, n: int) -> Graph:
        return cls(n, tuple(tuple(u for u in range(n) if u != v) for v in range(n)))

    @classmethod
    def cycle(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, (i + 1) % n) for i in range(n)])

    @classmethod
    def path(cls, n: int) -> Graph:
        return cls.from_edges(n, [(i, i + 1) for i in range(n - 1)])

    def _check(self, v: int) -> None:
        if not isinstance(v, int) or not 0 <= v < self.n:
            raise GraphError(f"invalid vertex id {v!r} for a graph on {self.n} vertices")

    def neighbors(self, v: int) -> tuple[int, ...]:
        self._check(v)
        return self.adjacency[v]

    def neighbor_set(self, v: int) -> frozenset[int]:
        self._check(v)
        return self._sets[v]  # type: ignore[attr-defined]

    def closed_neighbor_set(self, v: int) -> frozenset[int]:
        return self.neighbor_set(v) | {v}

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return v in self._sets[u]  # type: ignore[attr-defined]

    def edges(self) -> list[Edge]:
        """All edges as ``(u, v)`` with ``u < v``, in lexicographic order."""
        return [(u, v) for u in range(self.n) for v in self.adjacency[u] if u < v]

    def edge_count(self) -> int:
        return sum(len(nbrs) for nbrs in self.adjacency) // 2

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adjacency]

    def relabel(self, mapping: Sequence[int]) -> Graph:
        """Return the graph with vertex ``v`` renamed to ``mapping[v]``."""
        if sorted(mapping) != list(range(self.n)):
            raise GraphError("relabeling is not a permutation of the vertices")
        return Graph.from_edges(self.n, [(mapping[u], mapping[v]) for u, v in self.edges()])

    def induced_edges(self, vertices: Iterable[int]) -> list[Edge]:
        keep = set(vertices)
        return [(u, v) for u, v in self.edges() if u in keep and v in keep]


def degree(graph: Graph, v: int) -> int:
    return len(graph.neighbors(v))


def conjugate_degree_counts(graph: Graph) -> list[int]:
    """``d*[i-1] = |{v : deg(v) >= i}|`` for ``i = 1..n``."""
    n = graph.n
    hist = [0] * (n + 1)
    for d in graph.degrees():
        hist[d] += 1
    counts = [0] * n
    running = 0
    for i in range(n, 0, -1):
        running += hist[i]
        counts[i - 1] = running
    return counts


def laplacian(graph: Graph) -> IntegerMatrix:
    n = graph.n
    rows = []
    for i in range(n):
        row = [0] * n
        row[i] = len(graph.adjacency[i])
        for j in graph.adjacency[i]:
            row[j] = -1
        rows.append(tuple(row))
    return tuple(rows)


def components(graph: Graph) -> list[list[int]]:
    seen = [False] * graph.n
    result = []
    for start in range(graph.n):
        if seen[start]:
            continue
        seen[start] = True
        comp = [start]
        stack = [start]
        while stack:
            v = stack.pop()
            for u in graph.adjacency[v]:
                if not seen[u]:
                    seen[u] = True
                    comp.append(u)
                    stack.append(u)
        result.append(sorted(comp))
    return result


def is_connected(graph: Graph) -> bool:
    if graph.n < 1:
        raise GraphError("connectivity is undefined for the empty graph")
    return len(components(graph)) == 1


def is_spanning_tree(graph: Graph, edges: Iterable[Sequence[int]]) -> bool:
    """True iff ``edges`` is a set of ``n-1`` edges of ``graph`` forming a tree."""
    edge_list = [normalize_edge(*e) for e in edges]
    if len(set(edge_list)) != len(edge_list) or len(edge_list) != graph.n - 1:
        return False
    for u, v in edge_list:
        if not (0 <= u < graph.n and 0 <= v < graph.n) or u == v or not graph.has_edge(u, v):
            return False
    return graph.n >= 1 and is_connected(Graph.from_edges(graph.n, edge_list))


# -- text formats -----------------------------------------------------------


def _content_lines(text: str) -> list[list[str]]:
    rows = []
    for raw in text.splitlines():
        line = raw.split("#", 1)[0].strip()
        if line:
            rows.append(line.split())
    return rows


def _ints(tokens: list[str], lineno_hint: str) -> list[int]:
    try:
        return [int(t) for t in tokens]
    except ValueError:
        raise GraphError(f"non-integer token in {lineno_hint}: {' '.join(tokens)}") from None


def parse_edge_list(text: str) -> Graph:
    """Parse ``n`` followed by ``u v`` lines (0-based, ``u < v``)."""
    rows = _content_lines(text)
    if not rows:
        raise GraphError("edge list is empty")
    header = _ints(rows[0], "header")
    if len(header) != 1 or header[0] < 0:
        raise GraphError("edge list header must be a single vertex count")
    n = header[0]
    edges = []
    for tokens in rows[1:]:
        pair = _ints(tokens, "edge line")
        if len(pair) != 2:
            raise GraphError(f"edge line must hold two vertices: {' '.join(tokens)}")
        u, v = pair
        if u >= v:
            raise GraphError(f"edge {u} {v} must be written with u < v")
        edges.append((u, v))
    if len(set(edges)) != len(edges):
        raise GraphError("duplicate edge in edge list")
    return Graph.from_edges(n, edges)


def format_edge_list(graph: Graph) -> str:
    lines = [str(graph.n)]
    lines.extend(f"{u} {v}" for u, v in graph.edges())
    return "\n".join(lines) + "\n"


def to_dot(graph: Graph, name: str = "G", edges: Iterable[Edge] | None = None,
           attributes: dict[int, str] | None = None) -> str:
    """Render ``graph`` (or the given subset of its edges) in Graphviz DOT."""
    attributes = attributes or {}
    lines = [f"graph {name} {{"]
    for v in range(graph.n):
        attr = attributes.get(v)
        lines.append(f"  {v}" + (f" [{attr}]" if attr else "") + ";")
    for u, v in (graph.edges() if edges is None else sorted(normalize_edge(*e) for e in edges)):
        lines.append(f"  {u} -- {v};")
    lines.append("}")
    return "\n".join(lines) + "\n"
