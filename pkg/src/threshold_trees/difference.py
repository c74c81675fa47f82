"""Bipartite creation sequences and difference graphs.

Every character adds one vertex: ``1`` puts it in ``X`` joined to all of the
current ``Y``, ``0`` puts it in ``Y`` with no edges.  So for ``i < j`` the
vertices are adjacent iff ``chars[i] == '0'`` and ``chars[j] == '1'``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .exceptions import GraphError, PreconditionError
from .graph_core import Graph, _content_lines, _ints
from .threshold import CreationSequence, ThresholdGraph, build


@dataclass(frozen=True)
class BipartiteCreationSequence:
    chars: str

    def __post_init__(self):
        if not self.chars:
            raise ValueError("bipartite creation sequence is empty")
        bad = set(self.chars) - {"0", "1"}
        if bad:
            raise ValueError(f"bipartite creation sequence has characters outside {{0,1}}: "
                             f"{''.join(sorted(bad))!r}")

    def __len__(self) -> int:
        return len(self.chars)

    def __str__(self) -> str:
        return self.chars


def parse_bipartite(text: str) -> BipartiteCreationSequence:
    s = text.strip()
    if len(s) >= 2 and s[0] == s[-1] and s[0] in "'\"":
        s = s[1:-1].strip()
    return BipartiteCreationSequence(s)


@dataclass(frozen=True)
class DifferenceGraph:
    graph: Graph
    sequence: BipartiteCreationSequence
    X: frozenset[int]
    Y: frozenset[int]

    @property
    def n(self) -> int:
        return self.graph.n


def build_bipartite(seq: BipartiteCreationSequence | str) -> DifferenceGraph:
    if isinstance(seq, str):
        seq = parse_bipartite(seq)
    chars = seq.chars
    n = len(chars)
    X = frozenset(i for i in range(n) if chars[i] == "1")
    Y = frozenset(range(n)) - X
    adjacency = []
    for i in range(n):
        if i in X:
            nbrs = [j for j in range(i) if j in Y]
        else:
            nbrs = [j for j in range(i + 1, n) if j in X]
        adjacency.append(tuple(nbrs))
    return DifferenceGraph(Graph(n, tuple(adjacency)), seq, X, Y)


def _check_bipartition(graph: Graph, X: Iterable[int], Y: Iterable[int]) -> tuple[set, set]:
    X, Y = set(X), set(Y)
    if X & Y:
        raise GraphError(f"parts overlap: {sorted(X & Y)}")
    if X | Y != set(range(graph.n)):
        raise GraphError("X and Y do not partition the vertex set")
    for u, v in graph.edges():
        if (u in X) == (v in X):
            raise GraphError(f"edge {u}-{v} lies inside one part")
    return X, Y


def recognize_bipartite_with_order(graph: Graph, X: Iterable[int], Y: Iterable[int]
                                   ) -> tuple[BipartiteCreationSequence, tuple[int, ...]] | None:
    """Peel X-vertices adjacent to all remaining Y, else isolated Y-vertices.

    Returns ``(sequence, order)`` with ``order[i]`` the vertex of ``graph``
    that plays creation index ``i``, or ``None`` if no sequence exists.
    """
    X, Y = _check_bipartition(graph, X, Y)
    if graph.n == 0:
        raise GraphError("cannot recognize the empty graph")
    rem_x, rem_y = set(X), set(Y)
    deg = graph.degrees()
    chars: list[str] = []
    order: list[int] = []
    while rem_x or rem_y:
        full = [x for x in rem_x if deg[x] == len(rem_y)]
        if full:
            v, ch = max(full), "1"
            rem_x.remove(v)
        else:
            isolated = [y for y in rem_y if deg[y] == 0]
            if not isolated:
                return None
            v, ch = max(isolated), "0"
            rem_y.remove(v)
        for u in graph.adjacency[v]:
            deg[u] -= 1
        chars.append(ch)
        order.append(v)
    return BipartiteCreationSequence("".join(reversed(chars))), tuple(reversed(order))


def recognize_bipartite(graph: Graph, X: Iterable[int], Y: Iterable[int]
                        ) -> BipartiteCreationSequence | None:
    found = recognize_bipartite_with_order(graph, X, Y)
    return None if found is None else found[0]


def threshold_companion(H: DifferenceGraph) -> ThresholdGraph:
    """The threshold graph on the same sequence with the leading ``0`` read as ``*``.

    Its edges are those of ``H`` plus every pair inside ``X``; vertex ids are
    unchanged, so ``U == X`` and ``v_star`` is the first ``Y`` vertex.
    """
    chars = H.sequence.chars
    if chars[0] != "0":
        raise PreconditionError("threshold companion needs a sequence starting with '0'")
    return build(CreationSequence("*" + chars[1:]))


def degree_sorted_parts(H: DifferenceGraph) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``X`` and ``Y`` each sorted by degree, ties by creation index."""
    deg = H.graph.degrees()
    return (tuple(sorted(H.X, key=lambda v: (deg[v], v))),
            tuple(sorted(H.Y, key=lambda v: (deg[v], v))))


def parse_bipartite_edge_list(text: str) -> tuple[Graph, frozenset[int], frozenset[int]]:
    """Parse ``|X| |Y|`` then ``x_i y_j`` lines with 0-based within-part indices.

    Vertex ids are ``0..|X|-1`` for ``X`` and ``|X|..|X|+|Y|-1`` for ``Y``.
    """
    rows = _content_lines(text)
    if not rows:
        raise GraphError("bipartite edge list is empty")
    header = _ints(rows[0], "header")
    if len(header) != 2 or min(header) < 0:
        raise GraphError("bipartite edge list header must be '|X| |Y|'")
    nx, ny = header
    edges = []
    for tokens in rows[1:]:
        pair = _ints(tokens, "edge line")
        if len(pair) != 2:
            raise GraphError(f"edge line must hold two indices: {' '.join(tokens)}")
        i, j = pair
        if not (0 <= i < nx and 0 <= j < ny):
            raise GraphError(f"edge {i} {j} out of range for parts of size {nx} and {ny}")
        edges.append((i, nx + j))
    if len(set(edges)) != len(edges):
        raise GraphError("duplicate edge in bipartite edge list")
    graph = Graph.from_edges(nx + ny, edges)
    return graph, frozenset(range(nx)), frozenset(range(nx, nx + ny))


def format_bipartite_edge_list(graph: Graph, X: Iterable[int], Y: Iterable[int]) -> str:
    X, Y = _check_bipartition(graph, X, Y)
    xs, ys = sorted(X), sorted(Y)
    xi = {v: i for i, v in enumerate(xs)}
    yi = {v: i for i, v in enumerate(ys)}
    lines = [f"{len(xs)} {len(ys)}"]
    pairs = sorted((xi[u], yi[v]) if u in X else (xi[v], yi[u]) for u, v in graph.edges())
    lines.extend(f"{i} {j}" for i, j in pairs)
    return "\n".join(lines) + "\n"
