"""Joyal-style bijection between restricted functions and marked spanning trees.

For a connected threshold graph ``G`` with ``n >= 2`` let ``F`` be the maps
``f`` with ``f(v)`` in ``N(v)`` for ``v`` in ``Z`` or ``v_star`` and in
``N[v]`` for ``v`` in ``U``, and ``T`` the spanning trees of ``G`` carrying a
black mark on a vertex of ``U`` and a white mark on any vertex.  :func:`psi`
maps ``F`` onto ``T`` bijectively, with :func:`psi_inverse` as its inverse,
so ``|U| * n * tau(G) = |F|`` and pushing a uniform ``f`` through ``psi``
gives a uniform spanning tree.

All "created later" comparisons are integer comparisons of vertex ids, which
holds for graphs made by :func:`threshold.build`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from itertools import product
from math import prod
from typing import Iterable, Iterator, Sequence

from .counting import enumerate_spanning_trees
from .difference import DifferenceGraph, threshold_companion
from .exceptions import EnumerationLimitError, PreconditionError
from .graph_core import Edge, Graph, is_connected, is_spanning_tree, normalize_edge, to_dot
from .threshold import ThresholdGraph


@dataclass(frozen=True)
class FunctionMap:
    """A map ``v -> image[v]`` on vertices ``0..n-1``."""

    image: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "image", tuple(self.image))

    def __getitem__(self, v: int) -> int:
        return self.image[v]

    def __len__(self) -> int:
        return len(self.image)

    def to_text(self) -> str:
        return " ".join(map(str, self.image))

    @classmethod
    def from_text(cls, text: str) -> FunctionMap:
        try:
            return cls(tuple(int(tok) for tok in text.split()))
        except ValueError:
            raise ValueError(f"function map must be whitespace-separated integers: {text!r}") from None


@dataclass(frozen=True)
class MarkedSpanningTree:
    edges: frozenset[Edge]
    black: int
    white: int

    def __post_init__(self):
        object.__setattr__(self, "edges", frozenset(normalize_edge(*e) for e in self.edges))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def to_text(self) -> str:
        lines = [f"{u} {v}" for u, v in self.sorted_edges()]
        lines.append(f"black={self.black} white={self.white}")
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> MarkedSpanningTree:
        edges = []
        marks: dict[str, int] = {}
        for raw in text.splitlines():
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" in line:
                for tok in line.split():
                    key, _, val = tok.partition("=")
                    if key not in ("black", "white"):
                        raise ValueError(f"unknown mark {key!r}")
                    marks[key] = int(val)
                continue
            u, v = (int(t) for t in line.split())
            edges.append((u, v))
        if set(marks) != {"black", "white"}:
            raise ValueError("marked tree needs a 'black=<i> white=<j>' trailer")
        return cls(frozenset(edges), marks["black"], marks["white"])

    def to_dot(self, n: int, name: str = "T") -> str:
        attrs = {self.black: 'style=filled, fillcolor="black", fontcolor="white"'}
        if self.white == self.black:
            attrs[self.white] += ', color="gray"'
        else:
            attrs[self.white] = 'style=filled, fillcolor="white"'
        return to_dot(Graph.from_edges(n, self.edges), name=name, attributes=attrs)


def candidates(tg: ThresholdGraph, v: int) -> tuple[int, ...]:
    """Allowed values of ``f(v)``, sorted: ``N[v]`` for dominating ``v``, else ``N(v)``."""
    nbrs = tg.graph.neighbors(v)
    if v in tg.U:
        return tuple(sorted(nbrs + (v,)))
    return nbrs


def function_count(tg: ThresholdGraph) -> int:
    """``|F| = |U| * prod_{u in U} (deg(u)+1) * prod_{z in Z} deg(z)``."""
    deg = tg.graph.degrees()
    return len(tg.U) * prod(deg[u] + 1 for u in tg.U) * prod(deg[z] for z in tg.Z)


def in_F(tg: ThresholdGraph, f: FunctionMap) -> bool:
    if len(f) != tg.n:
        return False
    for v in range(tg.n):
        w = f[v]
        if w == v:
            if v not in tg.U:
                return False
        elif not (0 <= w < tg.n and tg.graph.has_edge(v, w)):
            return False
    return True


def _require_connected(graph: Graph) -> None:
    if graph.n < 2:
        raise PreconditionError("the bijection needs at least two vertices")
    if not is_connected(graph):
        raise PreconditionError("the bijection needs a connected graph")


def functional_cycles(image: Sequence[int]) -> list[list[int]]:
    """The directed cycle of each component of the functional digraph of ``image``.

    Each cycle is listed in the direction of ``image`` starting at its
    smallest vertex; cycles are returned in order of discovery.
    """
    n = len(image)
    state = [0] * n  # 0 unvisited, 1 on current walk, 2 done
    cycles = []
    for start in range(n):
        if state[start]:
            continue
        walk = []
        v = start
        while state[v] == 0:
            state[v] = 1
            walk.append(v)
            v = image[v]
        if state[v] == 1:
            cyc = walk[walk.index(v):]
            i = cyc.index(min(cyc))
            cycles.append(cyc[i:] + cyc[:i])
        for w in walk:
            state[w] = 2
    return cycles


def _psi_core(n: int, image: Sequence[int]) -> MarkedSpanningTree:
    anchors = []  # (latest vertex on cycle, its predecessor on the cycle)
    for cyc in functional_cycles(image):
        pos = cyc.index(max(cyc))
        anchors.append((cyc[pos], cyc[pos - 1]))
    anchors.sort()
    latest = [a for a, _ in anchors]
    before = [b for _, b in anchors]
    cut = set(before)
    edges = {normalize_edge(v, image[v]) for v in range(n) if v not in cut}
    for j in range(len(anchors) - 1):
        # the next anchor is created later than this cycle's vertices, so this is a graph edge
        edges.add(normalize_edge(before[j], latest[j + 1]))
    return MarkedSpanningTree(frozenset(edges), latest[0], before[-1])


def psi(tg: ThresholdGraph, f: FunctionMap | Sequence[int]) -> MarkedSpanningTree:
    """Turn ``f`` in ``F`` into a marked spanning tree of ``tg.graph``.

    In every cycle of the functional digraph the latest-created vertex is an
    anchor and its cycle predecessor a break point.  With anchors sorted by
    creation, each cycle is opened at its anchor and joined to the next
    anchor; the first anchor is marked black and the last break point white.
    """
    if not isinstance(f, FunctionMap):
        f = FunctionMap(tuple(f))
    _require_connected(tg.graph)
    if not in_F(tg, f):
        raise PreconditionError("function does not map every vertex into its allowed neighbourhood")
    tree = _psi_core(tg.n, f.image)
    if len(tree.edges) != tg.n - 1:
        raise AssertionError("cycle surgery did not yield n-1 edges")
    return tree


def _tree_parents(n: int, edges: Iterable[Edge], root: int) -> list[int]:
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in edges:
        nbrs[u].append(v)
        nbrs[v].append(u)
    parent = [-1] * n
    parent[root] = root
    stack = [root]
    while stack:
        v = stack.pop()
        for u in nbrs[v]:
            if parent[u] == -1:
                parent[u] = v
                stack.append(u)
    return parent


def record_positions(path: Sequence[int]) -> list[int]:
    """Positions along ``path`` whose vertex is created later than everything before it."""
    positions = []
    best = -1
    for i, v in enumerate(path):
        if v > best:
            positions.append(i)
            best = v
    return positions


def _psi_inverse_core(n: int, tree: MarkedSpanningTree) -> FunctionMap:
    parent = _tree_parents(n, tree.edges, tree.white)
    path = [tree.black]
    while path[-1] != tree.white:
        path.append(parent[path[-1]])
    starts = record_positions(path)
    image = list(parent)
    ends = [s - 1 for s in starts[1:]] + [len(path) - 1]
    for s, e in zip(starts, ends):
        # close the segment path[s..e] into a cycle through its anchor path[s]
        image[path[e]] = path[s]
    return FunctionMap(tuple(image))


def _check_marked_tree(graph: Graph, tree: MarkedSpanningTree) -> None:
    if not is_spanning_tree(graph, tree.edges):
        raise PreconditionError("edges are not a spanning tree of the graph")
    if not (0 <= tree.white < graph.n):
        raise PreconditionError(f"white mark {tree.white} is not a vertex")


def psi_inverse(tg: ThresholdGraph, tree: MarkedSpanningTree) -> FunctionMap:
    """Recover ``f`` from a marked spanning tree.

    Edges are pointed toward the white vertex.  On the black-to-white path
    the record vertices (later than all predecessors) start new segments;
    each segment's last vertex is sent back to the segment's first.
    """
    _require_connected(tg.graph)
    _check_marked_tree(tg.graph, tree)
    if tree.black not in tg.U:
        raise PreconditionError(f"black mark {tree.black} is not a dominating vertex")
    return _psi_inverse_core(tg.n, tree)


def enumerate_F(tg: ThresholdGraph, cap: int | None = None) -> Iterator[FunctionMap]:
    """Every member of ``F`` once, in lexicographic order of the image tuple."""
    size = function_count(tg)
    if cap is not None and size > cap:
        raise EnumerationLimitError(f"|F| = {size} exceeds cap {cap}", size=size)
    choices = [candidates(tg, v) for v in range(tg.n)]
    for image in product(*choices):
        yield FunctionMap(image)


def marked_spanning_trees(graph: Graph, black: Iterable[int], white: Iterable[int]
                          ) -> set[MarkedSpanningTree]:
    """All spanning trees of ``graph`` with every allowed pair of marks."""
    black, white = sorted(black), sorted(white)
    return {MarkedSpanningTree(frozenset(t), b, w)
            for t in enumerate_spanning_trees(graph) for b in black for w in white}


def random_function(tg: ThresholdGraph, rng: random.Random) -> FunctionMap:
    """Uniform member of ``F``: one ``randrange`` per vertex over its sorted candidates."""
    image = []
    for v in range(tg.n):
        options = candidates(tg, v)
        image.append(options[rng.randrange(len(options))])
    return FunctionMap(tuple(image))


def sample_spanning_tree(tg: ThresholdGraph, seed: int | None = None,
                         rng: random.Random | None = None) -> list[Edge]:
    """A uniformly random spanning tree of a connected threshold graph.

    Randomness comes from :class:`random.Random` (Mersenne Twister), seeded
    with ``seed`` unless an ``rng`` is passed; the output is reproducible
    for a given seed across platforms.
    """
    _require_connected(tg.graph)
    if rng is None:
        rng = random.Random(seed)
    return psi(tg, random_function(tg, rng)).sorted_edges()


def sample_spanning_trees(tg: ThresholdGraph, count: int, seed: int | None = None) -> list[list[Edge]]:
    rng = random.Random(seed)
    return [sample_spanning_tree(tg, rng=rng) for _ in range(count)]


# -- difference graphs ------------------------------------------------------------


def in_H(H: DifferenceGraph, f: FunctionMap) -> bool:
    return len(f) == H.n and all(0 <= f[v] < H.n and H.graph.has_edge(v, f[v]) for v in range(H.n))


def difference_function_count(H: DifferenceGraph) -> int:
    return prod(H.graph.degrees())


def enumerate_H(H: DifferenceGraph, cap: int | None = None) -> Iterator[FunctionMap]:
    """Every ``f`` with ``f(v)`` in ``N_H(v)``, lexicographically."""
    size = difference_function_count(H)
    if cap is not None and size > cap:
        raise EnumerationLimitError(f"|H| = {size} exceeds cap {cap}", size=size)
    for image in product(*(H.graph.neighbors(v) for v in range(H.n))):
        yield FunctionMap(image)


def psi_difference(H: DifferenceGraph, f: FunctionMap | Sequence[int]) -> MarkedSpanningTree:
    """``psi`` on the threshold companion, restricted to maps along edges of ``H``.

    The result is a spanning tree of ``H`` itself with black in ``X`` and
    white in ``Y``.
    """
    if not isinstance(f, FunctionMap):
        f = FunctionMap(tuple(f))
    _require_connected(H.graph)
    if not in_H(H, f):
        raise PreconditionError("function must send every vertex to a neighbour in the difference graph")
    tree = psi(threshold_companion(H), f)
    if not (tree.edges <= set(H.graph.edges()) and tree.black in H.X and tree.white in H.Y):
        raise AssertionError("restricted bijection left the difference graph")
    return tree


def psi_inverse_difference(H: DifferenceGraph, tree: MarkedSpanningTree) -> FunctionMap:
    _require_connected(H.graph)
    _check_marked_tree(H.graph, tree)
    if tree.black not in H.X:
        raise PreconditionError(f"black mark {tree.black} is not in X")
    if tree.white not in H.Y:
        raise PreconditionError(f"white mark {tree.white} is not in Y")
    f = psi_inverse(threshold_companion(H), tree)
    if not in_H(H, f):
        raise AssertionError("restricted inverse left the difference-graph function set")
    return f


def random_difference_function(H: DifferenceGraph, rng: random.Random) -> FunctionMap:
    image = []
    for v in range(H.n):
        options = H.graph.neighbors(v)
        image.append(options[rng.randrange(len(options))])
    return FunctionMap(tuple(image))


def sample_difference_spanning_tree(H: DifferenceGraph, seed: int | None = None,
                                    rng: random.Random | None = None) -> list[Edge]:
    """Uniform spanning tree of a connected difference graph.

    Each unmarked tree has exactly ``|X| * |Y|`` preimages among the maps
    along edges of ``H``, so a uniform map gives a uniform tree.
    """
    _require_connected(H.graph)
    if rng is None:
        rng = random.Random(seed)
    return psi_difference(H, random_difference_function(H, rng)).sorted_edges()
