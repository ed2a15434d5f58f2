import pytest
from hypothesis import given, strategies as st

import oracles
from qrep.category import category
from qrep.tqft_spaces import (FusionTree, dehn_twist_cut, enumerate_basis, loop_positions, n_edges,
                              projective_relations, rep_genus1, special_vector, tree_vertices)


@given(st.integers(1, 3), st.integers(0, 6))
def test_basis_size_is_verlinde(g, k):
    assert len(enumerate_basis(g, k)) == oracles.verlinde_dim(g, k)


def test_genus_two_sizes():
    assert [len(enumerate_basis(2, k)) for k in (4, 6, 8, 10)] == [oracles.verlinde_dim(2, k) for k in (4, 6, 8, 10)]


@pytest.mark.parametrize("g", [2, 3, 4])
def test_every_vertex_admissible(g):
    cat = category(3)
    verts = tree_vertices(g)
    assert len(verts) == 2 * g - 2
    for t in enumerate_basis(g, 3):
        assert len(t.labels) == n_edges(g)
        for v in verts:
            a, b, c = (t.labels[p] for p in v.inputs + v.outputs)
            assert cat.admissible(a, b, c)


def test_loops_and_ordering():
    trees = enumerate_basis(3, 2)
    assert trees == sorted(trees)
    assert loop_positions(3) == (0, 2, 5)
    t = FusionTree(3, (1, 0, 1, 1, 0, 2))
    assert (t.loop(1), t.loop(2), t.loop(3)) == (1, 1, 2)


def test_special_vectors():
    trees = enumerate_basis(2, 4)
    v = special_vector(2, 3, 4)
    assert sum(v) == 1
    assert trees[v.index(1)].labels == (0, 0, 3)
    w = special_vector(2, {0: 1, 4: 2}, 4)
    assert sorted(x for x in w if x) == [1, 2]


@pytest.mark.parametrize("k", [1, 2, 4, 7, 10])
def test_projective_relations(k):
    assert all(projective_relations(k).values())


def test_genus_one_generators():
    assert rep_genus1("T", 3).is_diagonal()
    with pytest.raises(ValueError):
        rep_genus1("U", 3)


def test_dehn_twists_are_diagonal_and_commute():
    D0, D1 = dehn_twist_cut(2, 0, 4), dehn_twist_cut(2, 2, 4)
    assert D0.is_diagonal() and (D0 @ D1) == (D1 @ D0)
    with pytest.raises(IndexError):
        dehn_twist_cut(2, 3, 4)
