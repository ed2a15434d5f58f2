"""Torus partition functions Z(A) from the ranks of the endofunctor idempotents."""

from __future__ import annotations

from dataclasses import dataclass

from .frobenius import AlgebraPresentation, InvalidAlgebraError, check_ssfa, endofunctor_block
from .scalars import ExactMatrix, rank


@dataclass(frozen=True)
class InvariantMatrix:
    Z: ExactMatrix
    algebra_tag: str
    level: int

    def entry(self, i: int, j: int) -> int:
        return int(self.Z[i, j].to_fraction())

    def to_lists(self) -> list[list[int]]:
        n = self.Z.nrows
        return [[self.entry(i, j) for j in range(n)] for i in range(n)]

    def to_json(self) -> dict:
        return {"level": self.level, "algebra": self.algebra_tag, "Z": self.to_lists()}

    def __eq__(self, other):
        return isinstance(other, InvariantMatrix) and self.level == other.level and self.Z == other.Z

    def __hash__(self):
        return hash((self.level, tuple(map(tuple, self.to_lists()))))


def endofunctor_ranks(alg: AlgebraPresentation, mirror: bool = False) -> list[list[int]]:
    """Z_ij = rank of P^l_A(U_i) restricted to Hom(U_j, A (x) U_i)."""
    k = alg.level
    out = [[0] * (k + 1) for _ in range(k + 1)]
    for i in range(k + 1):
        for j in range(k + 1):
            q = endofunctor_block(alg, i, j, mirror)
            if q.nrows:
                out[i][j] = rank(q)
    return out


def z_matrix(alg: AlgebraPresentation, verify: bool = True) -> InvariantMatrix:
    """Z(A); memoized on the presentation, since the rank computation dominates every caller."""
    cached = alg.__dict__.get("_zmatrix")
    if cached is not None and (cached[1] or not verify):
        return cached[0]
    if verify:
        report = check_ssfa(alg)
        if not all(report.values()):
            failed = sorted(key for key, ok in report.items() if not ok)
            raise InvalidAlgebraError(f"algebra {alg.tag} fails {', '.join(failed)}")
    grid = endofunctor_ranks(alg)
    Z = InvariantMatrix(ExactMatrix.from_dense(alg.field, grid), alg.tag, alg.level)
    alg.__dict__["_zmatrix"] = (Z, verify)
    return Z


def is_trivial(Z: InvariantMatrix) -> bool:
    """True when Z is a scalar multiple of the identity."""
    m = Z.Z
    if not m.is_diagonal():
        return False
    diag = {m[i, i] for i in range(m.nrows)}
    return len(diag) <= 1


def is_modular_invariant(Z: InvariantMatrix) -> bool:
    from .category import category

    cat = category(Z.level)
    return not Z.Z.commutator(cat.smatrix()).nnz() and not Z.Z.commutator(cat.tmatrix()).nnz()
