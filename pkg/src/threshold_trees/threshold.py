"""Creation sequences and threshold graphs.

A creation sequence is ``*`` followed by ``0``/``1`` characters.  Vertex
``i`` of the built graph is the one added by ``chars[i]``: a ``1`` joins it
to every earlier vertex (a dominating vertex, set ``U``), a ``0`` adds it
isolated (an independent vertex, set ``Z``).  Vertex 0 is ``v_star``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .exceptions import GraphError
from .graph_core import Graph


@dataclass(frozen=True)
class CreationSequence:
    chars: str

    def __post_init__(self):
        if not self.chars:
            raise ValueError("creation sequence is empty")
        if self.chars[0] != "*":
            raise ValueError(f"creation sequence must start with '*': {self.chars!r}")
        bad = set(self.chars[1:]) - {"0", "1"}
        if bad:
            raise ValueError(f"creation sequence has characters outside {{0,1}} after '*': "
                             f"{''.join(sorted(bad))!r}")

    def __len__(self) -> int:
        return len(self.chars)

    def __str__(self) -> str:
        return self.chars


def parse(text: str) -> CreationSequence:
    """Parse a creation sequence, tolerating whitespace and surrounding quotes."""
    s = text.strip()
    if len(s) >= 2 and s[0] == s[-1] and s[0] in "'\"":
        s = s[1:-1].strip()
    return CreationSequence(s)


@dataclass(frozen=True)
class ThresholdGraph:
    graph: Graph
    sequence: CreationSequence
    U: frozenset[int]
    Z: frozenset[int]
    v_star: int = 0

    @property
    def n(self) -> int:
        return self.graph.n


@dataclass(frozen=True)
class WeightAssignment:
    phi: tuple[int, ...]
    alpha: int


def build(seq: CreationSequence | str) -> ThresholdGraph:
    if isinstance(seq, str):
        seq = parse(seq)
    chars = seq.chars
    n = len(chars)
    U = frozenset(i for i in range(1, n) if chars[i] == "1")
    Z = frozenset(i for i in range(1, n) if chars[i] == "0")
    adjacency = []
    for i in range(n):
        if i in U:
            # all earlier vertices, then the dominating vertices created later
            nbrs = list(range(i)) + [j for j in range(i + 1, n) if j in U]
        else:
            nbrs = [j for j in range(i + 1, n) if j in U]
        adjacency.append(tuple(nbrs))
    return ThresholdGraph(Graph(n, tuple(adjacency)), seq, U, Z, 0)


def recognize_with_order(graph: Graph) -> tuple[CreationSequence, tuple[int, ...]] | None:
    """Recognize a threshold graph by repeatedly peeling dominating or isolated vertices.

    Returns ``(sequence, order)`` where ``order[i]`` is the vertex of
    ``graph`` playing creation index ``i``; so ``graph`` equals
    ``build(sequence).graph`` relabeled by ``order``.  Returns ``None`` when
    the graph is not threshold.
    """
    n = graph.n
    if n == 0:
        raise GraphError("cannot recognize the empty graph")
    remaining = set(range(n))
    deg = graph.degrees()
    removed_chars: list[str] = []
    removed_order: list[int] = []
    while len(remaining) > 1:
        size = len(remaining)
        dominating = [v for v in remaining if deg[v] == size - 1]
        if dominating:
            v, ch = max(dominating), "1"
        else:
            isolated = [v for v in remaining if deg[v] == 0]
            if not isolated:
                return None
            v, ch = max(isolated), "0"
        remaining.remove(v)
        for u in graph.adjacency[v]:
            if u in remaining:
                deg[u] -= 1
        removed_chars.append(ch)
        removed_order.append(v)
    (last,) = remaining
    removed_chars.append("*")
    removed_order.append(last)
    return CreationSequence("".join(reversed(removed_chars))), tuple(reversed(removed_order))


def recognize(graph: Graph) -> CreationSequence | None:
    """The creation sequence of ``graph``, or ``None`` if it is not threshold."""
    found = recognize_with_order(graph)
    return None if found is None else found[0]


def as_threshold_graph(graph: Graph) -> ThresholdGraph | None:
    """Recognize ``graph`` and return it as a threshold graph keeping its own vertex ids.

    ``U``, ``Z`` and ``v_star`` are mapped back onto ``graph``'s labels, but
    the bijection relies on vertex id == creation index, so callers that need
    it should use ``build(recognize(graph))`` instead.
    """
    found = recognize_with_order(graph)
    if found is None:
        return None
    seq, order = found
    U = frozenset(order[i] for i in range(1, len(seq)) if seq.chars[i] == "1")
    Z = frozenset(order[i] for i in range(1, len(seq)) if seq.chars[i] == "0")
    return ThresholdGraph(graph, seq, U, Z, order[0])


def assign_weights(seq: CreationSequence | str) -> WeightAssignment:
    """Integer weights ``phi`` and threshold ``alpha`` realizing ``build(seq)``.

    With ``alpha = 0`` and ``phi(v_star) = 0``, each dominating vertex gets
    ``1 - min`` and each independent vertex ``-1 - max`` of the weights so far.
    """
    if isinstance(seq, str):
        seq = parse(seq)
    phi = [0]
    lo = hi = 0
    for ch in seq.chars[1:]:
        w = 1 - lo if ch == "1" else -1 - hi
        phi.append(w)
        lo, hi = min(lo, w), max(hi, w)
    return WeightAssignment(tuple(phi), 0)


def weights_realize(graph: Graph, phi: Sequence[int], alpha) -> bool:
    """All-pairs check that ``u ~ v`` iff ``phi[u] + phi[v] >= alpha``."""
    n = graph.n
    if len(phi) != n:
        return False
    for u in range(n):
        for v in range(u + 1, n):
            if graph.has_edge(u, v) != (phi[u] + phi[v] >= alpha):
                return False
    return True


def degree_sorted_labels(tg: ThresholdGraph) -> tuple[int, ...]:
    """Vertices in nondecreasing degree order: ``Z``, then ``v_star``, then ``U``.

    Ties are broken by class (Z before v_star before U) and then by creation
    index ascending.  Entry ``i`` is the vertex labeled ``v_{i+1}``.
    """
    deg = tg.graph.degrees()

    def rank(v: int) -> int:
        if v in tg.Z:
            return 0
        return 1 if v == tg.v_star else 2

    return tuple(sorted(range(tg.n), key=lambda v: (deg[v], rank(v), v)))
