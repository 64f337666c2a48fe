"""Level tree graphs, unique paths and fiber decompositions."""

import itertools

import pytest

from bairecomb import levelgraph as lg
from bairecomb import seqcoding as sc
from bairecomb.errors import AlphabetTooSmall, NotAPath, VertexNotInGraph


def closure_k(l):
    """Smallest alphabet containing every letter of the dense words up to l."""
    k = 2
    for j in range(l + 1):
        for letter in sc.psi(sc.OMEGA, j):
            k = max(k, letter + 1)
    return k


def test_build_rejects_small_alphabet():
    # dense word 4 starts with letter 2, so level 5 needs k >= 3
    lg.build(3, 2)
    with pytest.raises(AlphabetTooSmall):
        lg.build(4, 2)


def test_closure_rule():
    # psi stems up to index 3 use letters <= 1, index 4 is (2,)
    assert closure_k(1) == 2
    assert closure_k(3) == 2
    assert closure_k(4) == 3


def test_trees():
    for l in range(4):
        k = closure_k(l)
        g = lg.build(l, k)
        assert lg.is_tree(g)
        assert len(g.edges) == len(g.vertices) - 1


def test_trees_larger_alphabets():
    for l, k in [(0, 4), (1, 3), (2, 3), (2, 4)]:
        g = lg.build(l, k)
        assert lg.is_tree(g)


def test_hub_word():
    assert lg.hub_word(1) == sc.dense_seq(sc.OMEGA, 1)
    assert lg.hub_word(3) == sc.dense_seq(sc.OMEGA, 3)


def test_edge_fiber():
    a = (1, 0, 0)
    b = (1, 0, 2)
    f = lg.edge_fiber(a, b)
    assert f is not None and f.n == 2 and f.t == ()
    assert lg.edge_fiber((1, 1), (2, 2)) is None
    assert lg.edge_fiber((1, 1), (1, 2)) is None  # neither letter is 0


def test_paths_match_bfs():
    for l in (0, 1, 2):
        for k in range(2, 5):
            try:
                g = lg.build(l, k)
            except AlphabetTooSmall:
                continue
            for s, s2 in itertools.combinations(g.vertices, 2):
                assert lg.unique_path(g, s, s2) == lg.bfs_path(g, s, s2)


def test_path_validity():
    g = lg.build(2, 2)
    for s, s2 in itertools.combinations(g.vertices, 2):
        p = lg.unique_path(g, s, s2)
        fibers = lg.check_path(p)
        assert p[0] == s and p[-1] == s2
        assert len(fibers) == len(p) - 1


def test_path_outside_truncation():
    g = lg.build(1, 2)
    with pytest.raises(VertexNotInGraph):
        lg.unique_path(g, (0, 3), (1, 0))


def test_check_path_rejects():
    with pytest.raises(NotAPath):
        lg.check_path([])
    with pytest.raises(NotAPath):
        lg.check_path([(0, 0), (1, 1)])
    with pytest.raises(NotAPath):
        lg.check_path([(0, 0), (1, 0), (0, 0)])


def test_fiber_decompose_runs():
    g = lg.build(1, 3)
    p = lg.unique_path(g, (1, 1), (2, 2))
    runs = lg.fiber_decompose(g, p)
    # entry vertices are path vertices, runs alternate fibers
    for (f, entry), (f2, _) in zip(runs, runs[1:]):
        assert f != f2
    assert all(entry in p for _, entry in runs)


def test_to_dot():
    g = lg.build(0, 3)
    text = lg.to_dot(g)
    assert text.startswith("graph level1 {")
    assert text.endswith("}")
    assert '"[0]" -- "[1]"' in text
    # deterministic
    assert text == lg.to_dot(lg.build(0, 3))
