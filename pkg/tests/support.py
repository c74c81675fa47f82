"""Worked-example fixtures and brute-force oracles shared by the tests."""

import random
from itertools import combinations, permutations

from threshold_trees.bijection import FunctionMap, MarkedSpanningTree
from threshold_trees.difference import degree_sorted_parts
from threshold_trees.graph_core import Graph
from threshold_trees.threshold import degree_sorted_labels

# The 10-vertex example uses degree-sorted labels 1..10; this is their creation order.
EXAMPLE_CREATION_ORDER = [6, 5, 7, 4, 8, 3, 2, 9, 1, 10]
EXAMPLE_LABEL = {label: idx for idx, label in enumerate(EXAMPLE_CREATION_ORDER)}

# Its edges and integer weights in those labels.
EXAMPLE_EDGES_LABELLED = [
    (7, 5), (7, 6), (8, 4), (8, 7), (8, 5), (8, 6), (9, 6), (9, 5), (9, 7), (9, 4), (9, 8),
    (9, 3), (9, 2), (10, 6), (10, 5), (10, 7), (10, 4), (10, 8), (10, 3), (10, 2), (10, 9),
    (10, 1),
]
EXAMPLE_WEIGHTS_LABELLED = {6: 4, 5: 4, 7: 5, 4: 3, 8: 6, 3: 2, 2: 2, 9: 7, 1: 1, 10: 8}

# The bipartite example "0010100101", vertices numbered 1..10 in creation order.
BIPARTITE_EXAMPLE_EDGES = [
    (3, 2), (3, 1), (5, 4), (5, 2), (5, 1), (8, 1), (8, 2), (8, 4), (8, 6), (8, 7),
    (10, 1), (10, 2), (10, 4), (10, 6), (10, 7), (10, 9),
]

# A function on the 10-vertex example and the marked tree psi maps it to, in the same labels.
WORKED_F = {1: 10, 2: 9, 3: 9, 4: 8, 5: 7, 6: 7, 7: 8, 8: 5, 9: 10, 10: 10}
WORKED_TREE = [(7, 10), (8, 5), (5, 7), (6, 7), (4, 8), (9, 10), (1, 10), (3, 9), (2, 9)]


def example_graph() -> Graph:
    return Graph.from_edges(10, [(EXAMPLE_LABEL[a], EXAMPLE_LABEL[b]) for a, b in EXAMPLE_EDGES_LABELLED])


def bipartite_example_graph() -> Graph:
    return Graph.from_edges(10, [(a - 1, b - 1) for a, b in BIPARTITE_EXAMPLE_EDGES])


def worked_function():
    image = [0] * 10
    for a, b in WORKED_F.items():
        image[EXAMPLE_LABEL[a]] = EXAMPLE_LABEL[b]
    return FunctionMap(tuple(image))


def worked_tree():
    edges = frozenset((EXAMPLE_LABEL[a], EXAMPLE_LABEL[b]) for a, b in WORKED_TREE)
    return MarkedSpanningTree(edges, EXAMPLE_LABEL[8], EXAMPLE_LABEL[10])


def example_edge_list_text() -> str:
    """The 10-vertex example with degree-sorted labels minus one, i.e. not in creation order."""
    lines = ["# threshold example, vertex k-1 has degree-sorted label k", "10"]
    lines += [f"{min(a, b) - 1} {max(a, b) - 1}" for a, b in EXAMPLE_EDGES_LABELLED]
    return "\n".join(lines) + "\n"


def random_sequences(seed, count, max_n, min_n=1, bipartite=False):
    rng = random.Random(seed)
    out = []
    for _ in range(count):
        n = rng.randint(min_n, max_n)
        p = rng.random()
        body = "".join("1" if rng.random() < p else "0" for _ in range(n if bipartite else n - 1))
        out.append(body if bipartite else "*" + body)
    return out


def leibniz_det(matrix):
    """Determinant by the permutation expansion; only for tiny matrices."""
    n = len(matrix)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inversions % 2 else 1
        for i in range(n):
            term *= matrix[i][perm[i]]
            if not term:
                break
        total += term
    return total


def brute_force_tree_count(graph: Graph) -> int:
    """Count (n-1)-edge subsets that connect every vertex; independent of the library."""
    n = graph.n
    if n == 1:
        return 1
    count = 0
    for subset in combinations(graph.edges(), n - 1):
        parent = list(range(n))

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        ok = True
        for u, v in subset:
            ru, rv = find(u), find(v)
            if ru == rv:
                ok = False
                break
            parent[ru] = rv
        count += ok
    return count


def random_kruskal_tree(graph: Graph, rng) -> list:
    """Some spanning tree of a connected graph: Kruskal over shuffled edges (not uniform)."""
    edges = graph.edges()
    rng.shuffle(edges)
    parent = list(range(graph.n))

    def find(x):
        while parent[x] != x:
            x = parent[x]
        return x

    tree = []
    for u, v in edges:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            tree.append((u, v))
    return tree


def check_neighbourhood_identities(tg):
    """Degree-sorted labels split as Z, v_star, U with the nested neighbourhoods."""
    g = tg.graph
    n = tg.n
    deg = g.degrees()
    v = degree_sorted_labels(tg)
    m = len(tg.Z)
    assert [deg[x] for x in v] == sorted(deg)
    assert set(v[:m]) == tg.Z and v[m] == tg.v_star and set(v[m + 1:]) == tg.U
    for i in range(1, m + 1):
        assert g.neighbor_set(v[i - 1]) == {w for w in range(n) if deg[w] >= n - i}
    for i in range(m + 2, n + 1):
        assert g.closed_neighbor_set(v[i - 1]) == {w for w in range(n) if deg[w] >= n - i + 1}


def check_difference_neighbourhoods(H):
    """Degree-sorted sides have nested neighbourhoods."""
    deg = H.graph.degrees()
    xs, ys = degree_sorted_parts(H)
    nx, ny = len(xs), len(ys)
    for i, x in enumerate(xs, start=1):
        assert H.graph.neighbor_set(x) == {y for y in H.Y if deg[y] >= nx - i + 1}
    for i, y in enumerate(ys, start=1):
        assert H.graph.neighbor_set(y) == {x for x in H.X if deg[x] >= ny - i + 1}


# Filled by the acceptance tests and printed by conftest after the run.
ACCEPTANCE_LINES: list[str] = []
