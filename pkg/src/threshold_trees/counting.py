"""Exact spanning-tree counts.

Closed forms for threshold and difference graphs sit next to two oracles
that know nothing about graph structure: a fraction-free determinant of a
reduced Laplacian and brute-force enumeration of spanning trees.
"""

from __future__ import annotations

from math import prod
from typing import Sequence

from .difference import DifferenceGraph
from .exceptions import ConsistencyError, EnumerationLimitError, GraphError
from .graph_core import Edge, Graph, conjugate_degree_counts, is_connected, laplacian
from .threshold import ThresholdGraph


def _exact_div(numerator: int, denominator: int, what: str) -> int:
    q, r = divmod(numerator, denominator)
    if r:
        raise ConsistencyError(f"{what}: {numerator} is not divisible by {denominator}")
    return q


# -- threshold graphs ---------------------------------------------------------


def tau_threshold_formula(tg: ThresholdGraph) -> int:
    """``(1/n) * prod_{i=1}^{n-1} |{v : deg(v) >= i}|``."""
    n = tg.n
    if n == 1:
        return 1
    counts = conjugate_degree_counts(tg.graph)
    return _exact_div(prod(counts[: n - 1]), n, "conjugate-degree product")


def tau_threshold_uz(tg: ThresholdGraph) -> int:
    """``(1/n) * prod_{u in U} (deg(u)+1) * prod_{z in Z} deg(z)``."""
    n = tg.n
    if n == 1:
        return 1
    deg = tg.graph.degrees()
    total = prod(deg[u] + 1 for u in tg.U) * prod(deg[z] for z in tg.Z)
    return _exact_div(total, n, "U/Z degree product")


def merris_spectrum(tg: ThresholdGraph) -> tuple[int, ...]:
    """Laplacian eigenvalues, nonincreasing: the conjugate degree counts."""
    return tuple(conjugate_degree_counts(tg.graph))


def characteristic_polynomial(matrix: Sequence[Sequence[int]]) -> list[int]:
    """Coefficients of ``det(xI - A)``, leading coefficient first.

    Faddeev-LeVerrier over the integers; every division is exact for an
    integer matrix and is checked.
    """
    n = len(matrix)
    A = [list(row) for row in matrix]
    coeffs = [1]
    M = [[0] * n for _ in range(n)]
    c = 1
    for k in range(1, n + 1):
        # M <- A*M + c*I
        AM = [[sum(A[i][t] * M[t][j] for t in range(n)) for j in range(n)] for i in range(n)]
        for i in range(n):
            AM[i][i] += c
        M = AM
        trace = sum(sum(A[i][t] * M[t][i] for t in range(n)) for i in range(n))
        c = -_exact_div(trace, k, "Faddeev-LeVerrier step")
        coeffs.append(c)
    return coeffs


def polynomial_from_roots(roots: Sequence[int]) -> list[int]:
    """Coefficients of ``prod (x - r)``, leading coefficient first."""
    coeffs = [1]
    for r in roots:
        nxt = coeffs + [0]
        for i, c in enumerate(coeffs):
            nxt[i + 1] -= r * c
        coeffs = nxt
    return coeffs


def verify_merris(tg: ThresholdGraph) -> bool:
    return characteristic_polynomial(laplacian(tg.graph)) == polynomial_from_roots(merris_spectrum(tg))


# -- difference graphs ----------------------------------------------------------


def tau_difference_conjugate(H: DifferenceGraph) -> int:
    """Count via conjugate degree counts of each side, divided by ``|X||Y|``."""
    n = H.n
    if n == 1:
        return 1
    if not H.X or not H.Y:
        return 0
    deg = H.graph.degrees()
    nx, ny = len(H.X), len(H.Y)
    from_y = prod(sum(1 for y in H.Y if deg[y] >= i) for i in range(1, nx + 1))
    from_x = prod(sum(1 for x in H.X if deg[x] >= i) for i in range(1, ny + 1))
    return _exact_div(from_y * from_x, nx * ny, "difference conjugate product")


def tau_difference_degrees(H: DifferenceGraph) -> int:
    """Count as the product of all degrees divided by ``|X||Y|``."""
    n = H.n
    if n == 1:
        return 1
    if not H.X or not H.Y:
        return 0
    return _exact_div(prod(H.graph.degrees()), len(H.X) * len(H.Y), "difference degree product")


def tau_difference(H: DifferenceGraph) -> int:
    a = tau_difference_conjugate(H)
    b = tau_difference_degrees(H)
    if a != b:
        raise ConsistencyError(f"difference-graph forms disagree: {a} != {b}")
    return a


# -- oracles --------------------------------------------------------------------


def bareiss_determinant(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of an integer matrix by fraction-free elimination.

    Pivot: first nonzero entry at or below the diagonal in the current
    column; a row swap flips the sign.
    """
    a = [list(row) for row in matrix]
    n = len(a)
    if any(len(row) != n for row in a):
        raise ValueError("matrix is not square")
    if n == 0:
        return 1
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def reduced_laplacian(graph: Graph, removed: int = 0) -> list[list[int]]:
    L = laplacian(graph)
    keep = [i for i in range(graph.n) if i != removed]
    return [[L[i][j] for j in keep] for i in keep]


def tau_kirchhoff(graph: Graph, removed: int = 0) -> int:
    """``|det L'|`` with row and column ``removed`` deleted from the Laplacian."""
    if graph.n < 1:
        raise GraphError("spanning trees of the empty graph are undefined")
    if not 0 <= removed < graph.n:
        raise GraphError(f"cannot delete row {removed} of a {graph.n}x{graph.n} Laplacian")
    if graph.n == 1:
        return 1
    return abs(bareiss_determinant(reduced_laplacian(graph, removed)))


def enumerate_spanning_trees(graph: Graph, limit: int | None = None) -> list[tuple[Edge, ...]]:
    """Every spanning tree as a sorted tuple of ``(u, v)`` edges, sorted overall.

    Grows a tree from vertex 0 one frontier edge at a time.  After an edge
    has been tried it is forbidden for the sibling branches, and the loop
    stops once forbidding disconnects what is left of the graph, so every
    branch ends in a tree.  Raises :class:`EnumerationLimitError` carrying
    the trees found so far if more than ``limit`` exist.
    """
    n = graph.n
    if n < 1:
        raise GraphError("spanning trees of the empty graph are undefined")
    if n == 1:
        return [()]
    if not is_connected(graph):
        return []

    alive = [sum(1 << u for u in graph.adjacency[v]) for v in range(n)]
    full = (1 << n) - 1
    found: list[tuple[Edge, ...]] = []
    tree: list[Edge] = []

    def still_connected() -> bool:
        reached = frontier = 1
        while frontier:
            nxt = 0
            bits = frontier
            while bits:
                low = bits & -bits
                nxt |= alive[low.bit_length() - 1]
                bits ^= low
            frontier = nxt & ~reached
            reached |= nxt
        return reached == full

    def grow(in_tree: int, frontier: list[Edge]) -> None:
        if len(tree) == n - 1:
            found.append(tuple(sorted((u, v) if u < v else (v, u) for u, v in tree)))
            if limit is not None and len(found) > limit:
                raise EnumerationLimitError(
                    f"more than {limit} spanning trees", partial=sorted(found[:limit]))
            return
        frontier = list(frontier)
        forbidden: list[Edge] = []
        while frontier:
            u, v = frontier.pop()
            child = [(a, b) for a, b in frontier if b != v]
            bits = alive[v] & ~in_tree
            while bits:
                low = bits & -bits
                child.append((v, low.bit_length() - 1))
                bits ^= low
            tree.append((u, v))
            grow(in_tree | (1 << v), child)
            tree.pop()
            alive[u] &= ~(1 << v)
            alive[v] &= ~(1 << u)
            forbidden.append((u, v))
            if not still_connected():
                break
        for u, v in forbidden:
            alive[u] |= 1 << v
            alive[v] |= 1 << u

    grow(1, [(0, w) for w in graph.adjacency[0]])
    return sorted(found)
