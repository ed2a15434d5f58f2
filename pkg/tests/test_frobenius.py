import pytest

import oracles
from qrep.category import category
from qrep.frobenius import (AlgebraPresentation, UnsupportedAlgebraError, ade_object, available_series, box_plus,
                            box_tensor, build_ade, check_ssfa, left_center, solve_structure, unit_algebra)
from qrep.modular_invariant import InvariantMatrix, is_modular_invariant, is_trivial, z_matrix


@pytest.mark.parametrize("k,series", [(4, "D"), (6, "D"), (8, "D"), (10, "E6"), (12, "D")])
def test_ade_algebras_pass_every_axiom(k, series):
    report = check_ssfa(build_ade(k, series))
    assert report and all(report.values()), report


@pytest.mark.parametrize("k", [3, 5, 7, 9])
def test_no_d_algebra_at_odd_level(k):
    assert solve_structure(k, (0, k)) is None
    with pytest.raises(UnsupportedAlgebraError):
        build_ade(k, "D")


def test_unavailable_series():
    assert available_series(10) == ["D", "E6"]
    assert available_series(3) == []
    with pytest.raises(UnsupportedAlgebraError):
        ade_object(12, "E6")


def test_dimension_is_sum_of_quantum_dimensions():
    cat = category(10)
    A = build_ade(10, "E6")
    assert A.dim() == cat.qdim(0) + cat.qdim(6)
    assert abs(A.dim().to_complex() - (oracles.qdim(0, 10) + oracles.qdim(6, 10))) < 1e-9


def test_presentation_json_round_trip():
    A = build_ade(6, "D")
    B = AlgebraPresentation.from_json(A.to_json())
    assert B.summands == A.summands and B.to_json() == A.to_json()
    assert all(check_ssfa(B).values())


def test_products_and_sums_are_algebras():
    A = build_ade(4, "D")
    T = box_tensor(A, A)
    assert sorted(T.summands) == [0, 0, 4, 4]
    assert all(check_ssfa(T).values())
    S = box_plus(A, unit_algebra(4))
    assert sorted(S.summands) == [0, 0, 4]


def test_left_center_of_d4():
    C = left_center(build_ade(4, "D"))
    assert sorted(C.summands) == [0, 4]


# modular invariants --------------------------------------------------------------------

@pytest.mark.parametrize("k", [0, 1, 5, 12])
def test_unit_gives_identity(k):
    Z = z_matrix(unit_algebra(k))
    assert Z.to_lists() == oracles.ade_z(k, "A")
    assert is_trivial(Z)


@pytest.mark.parametrize("k,series", [(4, "D"), (6, "D"), (8, "D"), (10, "D"), (10, "E6")])
def test_z_matches_known_invariants(k, series):
    Z = z_matrix(build_ade(k, series))
    assert Z.to_lists() == oracles.ade_z(k, series)
    assert oracles.commutes_float(Z.to_lists(), oracles.smatrix(k))
    assert is_modular_invariant(Z)
    assert not is_trivial(Z)


def test_d4_block_and_e6_trace():
    assert z_matrix(build_ade(4, "D")).to_lists() == [
        [1, 0, 0, 0, 1], [0, 0, 0, 0, 0], [0, 0, 2, 0, 0], [0, 0, 0, 0, 0], [1, 0, 0, 0, 1]]
    Z = z_matrix(build_ade(10, "E6")).to_lists()
    assert sum(Z[i][i] for i in range(11)) == 6


def test_z_is_additive_and_multiplicative():
    A = build_ade(6, "D")
    ZA = z_matrix(A)
    assert z_matrix(box_plus(A, A), verify=False).Z == ZA.Z + ZA.Z
    assert z_matrix(box_tensor(A, A), verify=False).Z == ZA.Z @ ZA.Z


def test_invariant_matrix_json():
    Z = z_matrix(build_ade(4, "D"))
    assert Z.to_json()["Z"] == Z.to_lists()
    assert isinstance(Z, InvariantMatrix) and Z == z_matrix(build_ade(4, "D"))
