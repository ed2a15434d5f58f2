import random

import pytest
from hypothesis import given, strategies as st

import oracles
from qrep.category import LabelError, category
from qrep.recoupling import hexagon_holds, hexagon_tuples, pentagon_holds, pentagon_tuples, recoupling
from qrep.scalars import ExactMatrix

levels = st.integers(0, 12)


@given(levels, st.data())
def test_quantum_dimensions_and_twists(k, data):
    j = data.draw(st.integers(0, k))
    cat = category(k)
    assert abs(cat.qdim(j).to_complex() - oracles.qdim(j, k)) < 1e-9
    assert abs(cat.twist(j).to_complex() - oracles.twist(j, k)) < 1e-9


@pytest.mark.parametrize("k", [1, 2, 5, 8, 13])
def test_s_matrix_matches_sine_formula(k):
    S = category(k).smatrix().to_complex()
    ref = oracles.smatrix(k)
    assert max(abs(S[i][j] - ref[i][j]) for i in range(k + 1) for j in range(k + 1)) < 1e-9


@given(levels, st.data())
def test_fusion_rules(k, data):
    i, j, l = (data.draw(st.integers(0, k)) for _ in range(3))
    cat = category(k)
    assert cat.fusion(i, j, l) == oracles.fusion(i, j, l, k)
    assert cat.fusion(i, j, l) == cat.fusion(j, i, l) == cat.fusion(i, l, j)


def test_unit_and_simple_current():
    cat = category(6)
    assert cat.fusion_product(0, 3) == [3]
    assert cat.fusion_product(6, 2) == [4]
    assert cat.simple_current_action(2) == 4
    assert cat.twist(6) == cat.field.rational(-1)  # theta_k = i^k


@pytest.mark.parametrize("k", range(0, 9))
def test_verlinde_formula_exact(k):
    cat = category(k)
    S = cat.smatrix()
    F = cat.field
    for i in cat.labels:
        for j in cat.labels:
            for l in cat.labels:
                n = sum((S[i, m] * S[j, m] * S[l, m] / S[0, m] for m in cat.labels), F.zero())
                assert n == F.rational(cat.fusion(i, j, l))


@pytest.mark.parametrize("k", [2, 3, 6, 9])
def test_modular_group_relations(k):
    cat = category(k)
    S, T = cat.smatrix(), cat.tmatrix()
    one = ExactMatrix.identity(cat.field, k + 1)
    assert S @ S @ S @ S == one
    assert S @ S.conjugate_transpose() == one
    lhs = S @ T @ S @ T @ S @ T
    assert (lhs @ (S @ S).conjugate_transpose()).is_diagonal()


@given(st.integers(0, 5), st.integers(1, 4))
def test_verlinde_dimension(k, g):
    assert category(k).verlinde_dim(g) == oracles.verlinde_dim(g, k)


def test_bad_label():
    with pytest.raises(LabelError):
        category(3).qdim(4)


@pytest.mark.parametrize("k", range(0, 7))
def test_pentagon_and_hexagon_exhaustive(k):
    eng = recoupling(k)
    assert all(pentagon_holds(eng, *t) for t in pentagon_tuples(k))
    for t in hexagon_tuples(k):
        assert hexagon_holds(eng, *t)
        assert hexagon_holds(eng, *t, inverse=True)


def random_pentagon_tuple(k, rng):
    cat = category(k)
    while True:
        a, b, c, d = (rng.randint(0, k) for _ in range(4))
        p = rng.choice(cat.fusion_product(a, b))
        qs = cat.fusion_product(p, c)
        rs = cat.fusion_product(c, d)
        if not qs or not rs:
            continue
        q, r = rng.choice(qs), rng.choice(rs)
        es = cat.fusion_product(q, d)
        ss = cat.fusion_product(b, r)
        if not es or not ss:
            continue
        e, s = rng.choice(es), rng.choice(ss)
        if cat.admissible(a, s, e):
            return (a, b, c, d, e, p, q, r, s)


def random_hexagon_tuple(k, rng):
    cat = category(k)
    while True:
        a, b, c = (rng.randint(0, k) for _ in range(3))
        e = rng.choice(cat.fusion_product(a, c))
        ds = cat.fusion_product(e, b)
        if not ds:
            continue
        d = rng.choice(ds)
        g = rng.choice(cat.fusion_product(c, b))
        if cat.admissible(a, g, d):
            return (a, b, c, d, e, g)


@pytest.mark.parametrize("k", [9, 12])
def test_pentagon_and_hexagon_sampled(k):
    rng = random.Random(k)
    eng = recoupling(k)
    for _ in range(60):
        assert pentagon_holds(eng, *random_pentagon_tuple(k, rng))
        assert hexagon_holds(eng, *random_hexagon_tuple(k, rng))
