import pytest
from hypothesis import given, strategies as st

from qrep.category import category
from qrep.commutant import (HypothesisNotMet, UnsupportedLevelError, ade_p, closed_form_check,
                            decomposition_report, p_column, p_matrix, pi_projectors, projector_idempotency,
                            projector_traces, reducibility_certificate, verify_fusion_relations)
from qrep.frobenius import build_ade, unit_algebra
from qrep.modular_invariant import z_matrix
from qrep.scalars import ExactMatrix
from qrep.tqft_spaces import dehn_twist_cut, enumerate_basis, n_edges


def test_genus_one_is_z_transposed():
    A = build_ade(10, "E6")
    P = p_matrix(1, A).matrix
    assert P == z_matrix(A).Z.transpose()


@pytest.mark.parametrize("g,k", [(2, 4), (2, 6), (3, 2)])
def test_unit_algebra_acts_as_identity(g, k):
    P = p_matrix(g, unit_algebra(k)).matrix
    assert P == ExactMatrix.identity(P.field, P.nrows)


@pytest.mark.parametrize("g,k", [(1, 4), (1, 6), (1, 8), (2, 4), (2, 6)])
def test_relations_hold(g, k):
    report = verify_fusion_relations(g, k)
    assert report and all(e["ok"] for e in report.values()), report


def test_d_squared_scalar_at_genus_two():
    k = 4
    P = ade_p(2, k, "D").matrix
    d = build_ade(k, "D").dim()
    assert P @ P == P.scale((2 / d) * 2)


@pytest.mark.parametrize("k", [4, 6])
def test_triangulation_independence(k):
    A = build_ade(k, "D")
    assert p_matrix(2, A).matrix == p_matrix(2, A, mirror=True).matrix


@pytest.mark.parametrize("g,k", [(2, 4), (2, 6), (3, 4)])
def test_commutes_with_dehn_twists(g, k):
    P = p_matrix(g, build_ade(k, "D"))
    for c in range(n_edges(g)):
        assert P.commutes_with(dehn_twist_cut(g, c, k))


@given(st.sampled_from([4, 6]), st.data())
def test_columns_agree_with_matrix(k, data):
    trees = enumerate_basis(2, k)
    j = data.draw(st.integers(0, len(trees) - 1))
    A = build_ade(k, "D")
    P = ade_p(2, k, "D").matrix
    col = p_column(2, A, trees[j].labels)
    dense = {trees[i].labels: P[i, j] for i in range(len(trees)) if P[i, j]}
    assert col == dense


@pytest.mark.parametrize("g,k", [(1, 4), (1, 10), (2, 4)])
def test_projectors(g, k):
    assert all(projector_idempotency(g, k).values())
    plus, minus = pi_projectors(g, k, "D")
    assert plus @ plus == plus and plus @ minus == plus.scale(0)
    traces = projector_traces(g, k)
    assert traces["D+"] + traces["D-"] == category(k).verlinde_dim(g)


@pytest.mark.parametrize("g,k", [(1, 4), (1, 6), (2, 4), (2, 6)])
def test_closed_form_d_projector(g, k):
    assert closed_form_check(g, k)["D+"] == {"constructible": True, "idempotent": True, "equals_spectral": True}


@pytest.mark.parametrize("n", [1, 2])
def test_genus_one_d_dimensions(n):
    rep = decomposition_report(1, 4 * n, "D")
    assert [d for _, d in rep.dims] == [n + 1, 3 * n]
    assert all(note["match"] for note in rep.notes)


def test_level_six_mismatch_is_reported():
    rep = decomposition_report(1, 6, "D")
    assert [d for _, d in rep.dims] == [6, 1]
    assert {n["quantity"]: (n["computed"], n["stated"], n["match"]) for n in rep.notes} == {
        "D+": (6, 2, False), "D-": (1, 5, False)}
    assert rep.to_json()["sum_ok"] and rep.to_json()["all_positive"]


def test_unsupported_levels():
    with pytest.raises(UnsupportedLevelError):
        decomposition_report(1, 5)
    with pytest.raises(UnsupportedLevelError):
        decomposition_report(1, 8, "E")


def test_certificates():
    cert = reducibility_certificate(2, build_ade(4, "D"))
    assert cert["verdict"] == "reducible" and cert["label"] == 0 and cert["z_row"] == {0: 1, 4: 1}
    assert reducibility_certificate(1, build_ade(10, "E6"))["verdict"] == "reducible"
    with pytest.raises(HypothesisNotMet):
        reducibility_certificate(1, unit_algebra(4))
