"""Exact su(2)_k computations: Frobenius algebras, their modular invariants and the
commutant elements they induce on genus-g block spaces."""

from .scalars import KERNEL, CyclotomicField, ExactMatrix, ExactScalar, cyclotomic_field
from .category import CategoryData, category
from .recoupling import ColoredNet, TreeState, evaluate_closed_net, recoupling
from .frobenius import (AlgebraPresentation, InvalidAlgebraError, UnsupportedAlgebraError, available_series,
                        box_plus, box_tensor, build_ade, check_ssfa, left_center, solve_structure, unit_algebra)
from .modular_invariant import InvariantMatrix, is_modular_invariant, is_trivial, z_matrix
from .tqft_spaces import FusionTree, dehn_twist_cut, enumerate_basis, rep_genus1, special_vector
from .commutant import (CommutantElement, DecompositionReport, decomposition_report, p_matrix, pi_projectors,
                        reducibility_certificate, verify_fusion_relations)
from .rig import MoritaClass, class_multiply, rig_table

__version__ = "0.1.0"

__all__ = [
    "KERNEL", "CyclotomicField", "ExactMatrix", "ExactScalar", "cyclotomic_field",
    "CategoryData", "category", "ColoredNet", "TreeState", "evaluate_closed_net", "recoupling",
    "AlgebraPresentation", "InvalidAlgebraError", "UnsupportedAlgebraError", "available_series",
    "box_plus", "box_tensor", "build_ade", "check_ssfa", "left_center", "solve_structure", "unit_algebra",
    "InvariantMatrix", "is_modular_invariant", "is_trivial", "z_matrix",
    "FusionTree", "dehn_twist_cut", "enumerate_basis", "rep_genus1", "special_vector",
    "CommutantElement", "DecompositionReport", "decomposition_report", "p_matrix", "pi_projectors",
    "reducibility_certificate", "verify_fusion_relations",
    "MoritaClass", "class_multiply", "rig_table",
]
