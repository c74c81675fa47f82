import random
from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from threshold_trees.bijection import (
    FunctionMap,
    MarkedSpanningTree,
    candidates,
    difference_function_count,
    enumerate_F,
    enumerate_H,
    function_count,
    functional_cycles,
    in_F,
    in_H,
    marked_spanning_trees,
    psi,
    psi_difference,
    psi_inverse,
    psi_inverse_difference,
    random_difference_function,
    random_function,
    record_positions,
    sample_difference_spanning_tree,
    sample_spanning_tree,
    sample_spanning_trees,
)
from threshold_trees.counting import enumerate_spanning_trees, tau_kirchhoff
from threshold_trees.difference import build_bipartite
from threshold_trees.exceptions import EnumerationLimitError, PreconditionError
from threshold_trees.graph_core import is_spanning_tree
from threshold_trees.threshold import build

from support import EXAMPLE_LABEL, worked_function, worked_tree, random_kruskal_tree

connected_sequences = st.text(alphabet="01", max_size=8).map(lambda s: "*" + s + "1")
connected_bipartite = st.text(alphabet="01", max_size=8).map(lambda s: "0" + s + "1")


# -- worked example -------------------------------------------------------------------


def test_psi_worked_example():
    tg = build("*010100101")
    f = worked_function()
    assert in_F(tg, f)
    cycles = functional_cycles(f.image)
    assert len(cycles) == 2
    assert psi(tg, f) == worked_tree()


def test_psi_inverse_worked_example():
    tg = build("*010100101")
    tree = worked_tree()
    assert psi_inverse(tg, tree) == worked_function()


def test_worked_example_path_and_records():
    path = [EXAMPLE_LABEL[v] for v in (8, 5, 7, 10)]
    assert [path[i] for i in record_positions(path)] == [EXAMPLE_LABEL[8], EXAMPLE_LABEL[10]]


# -- small cases ------------------------------------------------------------------------


def test_k2():
    tg = build("*1")
    tree = psi(tg, [1, 1])
    assert tree == MarkedSpanningTree(frozenset({(0, 1)}), 1, 1)
    assert psi_inverse(tg, tree) == FunctionMap((1, 1))


def test_single_cycle_at_latest_vertex_gives_same_tree():
    # "*011": every vertex points straight at vertex 3, which loops
    tg = build("*011")
    tree = psi(tg, [3, 3, 3, 3])
    assert tree == MarkedSpanningTree(frozenset({(0, 3), (1, 3), (2, 3)}), 3, 3)
    # a deeper tree, still oriented toward the loop at 3
    tree = psi(tg, [2, 2, 3, 3])
    assert tree == MarkedSpanningTree(frozenset({(0, 2), (1, 2), (2, 3)}), 3, 3)


def test_psi_rejects_bad_input():
    with pytest.raises(PreconditionError):
        psi(build("*10"), [1, 0, 0])
    with pytest.raises(PreconditionError):
        psi(build("*1"), [0, 1])  # v_star cannot map to itself
    with pytest.raises(PreconditionError):
        psi(build("*01"), [2, 0, 2])  # 1 and 0 are not adjacent
    with pytest.raises(PreconditionError):
        psi(build("*"), [0])


def test_psi_inverse_rejects_bad_input():
    tg = build("*011")
    with pytest.raises(PreconditionError):
        psi_inverse(tg, MarkedSpanningTree(frozenset({(0, 3), (1, 3), (2, 3)}), 0, 3))
    with pytest.raises(PreconditionError):
        psi_inverse(tg, MarkedSpanningTree(frozenset({(0, 3), (1, 3), (0, 1)}), 3, 3))
    with pytest.raises(PreconditionError):
        psi_inverse(tg, MarkedSpanningTree(frozenset({(0, 3), (1, 3)}), 3, 3))


def test_function_count_examples():
    assert function_count(build("*1")) == 2
    assert len(list(enumerate_F(build("*1")))) == 2
    assert function_count(build("*001")) == 4
    assert len(list(enumerate_F(build("*001")))) == 4
    tg = build("*011")
    assert function_count(tg) == 64 == len(tg.U) * tg.n * tau_kirchhoff(tg.graph)


def test_enumerate_F_cap():
    with pytest.raises(EnumerationLimitError) as info:
        list(enumerate_F(build("*111"), cap=100))
    assert info.value.size == 3 * 4 ** 3


@pytest.mark.parametrize("s", ["*1", "*01", "*11", "*011", "*0101", "*111", "*00011"])
def test_exhaustive_bijection(s):
    tg = build(s)
    trees = marked_spanning_trees(tg.graph, tg.U, range(tg.n))
    fs = list(enumerate_F(tg))
    assert len(fs) == function_count(tg) == len(trees)
    images = [psi(tg, f) for f in fs]
    assert set(images) == trees
    assert all(psi_inverse(tg, t) == f for t, f in zip(images, fs))
    hits = Counter(t.edges for t in images)
    assert set(hits.values()) == {len(tg.U) * tg.n}


# -- random round trips ----------------------------------------------------------------


@settings(deadline=None)
@given(connected_sequences, st.randoms(use_true_random=False))
def test_round_trip_from_functions(s, rnd):
    tg = build(s)
    f = random_function(tg, rnd)
    assert in_F(tg, f)
    tree = psi(tg, f)
    assert is_spanning_tree(tg.graph, tree.edges)
    assert tree.black in tg.U
    assert psi_inverse(tg, tree) == f


@settings(deadline=None)
@given(connected_sequences, st.randoms(use_true_random=False))
def test_round_trip_from_trees(s, rnd):
    tg = build(s)
    tree = MarkedSpanningTree(frozenset(random_kruskal_tree(tg.graph, rnd)),
                              rnd.choice(sorted(tg.U)), rnd.randrange(tg.n))
    f = psi_inverse(tg, tree)
    assert in_F(tg, f)
    assert psi(tg, f) == tree


@settings(deadline=None)
@given(connected_sequences, st.randoms(use_true_random=False))
def test_anchors_are_dominating_and_joins_are_edges(s, rnd):
    tg = build(s)
    f = random_function(tg, rnd)
    anchors = sorted(max(c) for c in functional_cycles(f.image))
    assert set(anchors) <= tg.U
    tree = psi(tg, f)
    assert tree.black == anchors[0]
    assert tree.edges <= set(tg.graph.edges())


# -- sampler -----------------------------------------------------------------------------


def test_sampler_trivial_cases():
    assert sample_spanning_tree(build("*1"), seed=7) == [(0, 1)]
    for seed in range(5):
        assert sample_spanning_tree(build("*001"), seed=seed) == [(0, 3), (1, 3), (2, 3)]


def test_sampler_is_seeded():
    tg = build("*010100101")
    assert sample_spanning_trees(tg, 5, seed=3) == sample_spanning_trees(tg, 5, seed=3)
    assert sample_spanning_tree(tg, seed=3) == sample_spanning_tree(tg, rng=random.Random(3))


def test_sampler_refuses_disconnected():
    with pytest.raises(PreconditionError):
        sample_spanning_tree(build("*10"), seed=0)


def test_random_function_draws_from_sorted_candidates():
    tg = build("*0101")
    assert candidates(tg, 4) == (0, 1, 2, 3, 4)
    assert candidates(tg, 0) == (2, 4)
    rng = random.Random(0)
    for _ in range(50):
        assert in_F(tg, random_function(tg, rng))


# -- difference graphs ----------------------------------------------------------------


def test_psi_difference_single_edge():
    H = build_bipartite("01")
    tree = psi_difference(H, [1, 0])
    assert tree == MarkedSpanningTree(frozenset({(0, 1)}), 1, 0)
    assert psi_inverse_difference(H, tree) == FunctionMap((1, 0))


def test_psi_difference_bipartite_example_containment(bip_example):
    H = build_bipartite("0010100101")
    rng = random.Random(2024)
    edges = set(bip_example.edges())
    for _ in range(1000):
        f = random_difference_function(H, rng)
        tree = psi_difference(H, f)
        assert tree.edges <= edges
        assert tree.black in H.X and tree.white in H.Y
        assert psi_inverse_difference(H, tree) == f


def test_psi_inverse_difference_bipartite_example_random_trees():
    H = build_bipartite("0010100101")
    trees = enumerate_spanning_trees(H.graph)
    assert len(trees) == 1440
    rng = random.Random(5)
    for _ in range(200):
        tree = MarkedSpanningTree(frozenset(rng.choice(trees)), rng.choice(sorted(H.X)),
                                  rng.choice(sorted(H.Y)))
        f = psi_inverse_difference(H, tree)
        assert in_H(H, f)
        assert psi_difference(H, f) == tree


@pytest.mark.parametrize("s", ["01", "0011", "0101", "00111", "01011"])
def test_exhaustive_difference_bijection(s):
    H = build_bipartite(s)
    trees = marked_spanning_trees(H.graph, H.X, H.Y)
    fs = list(enumerate_H(H))
    assert len(fs) == difference_function_count(H) == len(trees)
    images = [psi_difference(H, f) for f in fs]
    assert set(images) == trees
    assert all(psi_inverse_difference(H, t) == f for t, f in zip(images, fs))


@settings(deadline=None)
@given(connected_bipartite, st.randoms(use_true_random=False))
def test_difference_round_trips(s, rnd):
    H = build_bipartite(s)
    f = random_difference_function(H, rnd)
    tree = psi_difference(H, f)
    assert psi_inverse_difference(H, tree) == f
    marked = MarkedSpanningTree(frozenset(random_kruskal_tree(H.graph, rnd)),
                                rnd.choice(sorted(H.X)), rnd.choice(sorted(H.Y)))
    g = psi_inverse_difference(H, marked)
    assert in_H(H, g)
    assert psi_difference(H, g) == marked


def test_difference_rejections():
    H = build_bipartite("0011")
    with pytest.raises(PreconditionError):
        psi_difference(H, [2, 2, 3, 0])  # 2 -> 3 joins two X vertices: a companion-only edge
    tree = MarkedSpanningTree(frozenset({(0, 2), (1, 2), (0, 3)}), 0, 1)
    with pytest.raises(PreconditionError):
        psi_inverse_difference(H, tree)
    tree = MarkedSpanningTree(frozenset({(0, 2), (1, 2), (0, 3)}), 2, 3)
    with pytest.raises(PreconditionError):
        psi_inverse_difference(H, tree)


def test_difference_sampler_stays_in_graph(bip_example):
    H = build_bipartite("0010100101")
    rng = random.Random(1)
    for _ in range(20):
        assert is_spanning_tree(bip_example, sample_difference_spanning_tree(H, rng=rng))


# -- serialization ----------------------------------------------------------------------


def test_function_map_text_round_trip():
    f = worked_function()
    assert FunctionMap.from_text(f.to_text()) == f
    assert len(f.to_text().split()) == 10
    with pytest.raises(ValueError):
        FunctionMap.from_text("1 x 2")


def test_marked_tree_text_round_trip():
    tree = worked_tree()
    text = tree.to_text()
    assert text.splitlines()[-1] == f"black={EXAMPLE_LABEL[8]} white={EXAMPLE_LABEL[10]}"
    assert MarkedSpanningTree.from_text(text) == tree
    with pytest.raises(ValueError):
        MarkedSpanningTree.from_text("0 1\n")


def test_marked_tree_dot():
    dot = worked_tree().to_dot(10)
    assert dot.count(" -- ") == 9
    assert 'fillcolor="black"' in dot and 'fillcolor="white"' in dot
