"""Morita classes of the ADE algebras and their multiplication under the box product.

Classes are identified by their torus partition functions.  The product of two
classes is read off from Z(A (x) B) = Z(A) Z(B), decomposed as a nonnegative
integer combination of the generators' Z-matrices.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .frobenius import AlgebraPresentation, available_series, box_tensor, build_ade, unit_algebra
from .modular_invariant import InvariantMatrix, z_matrix
from .scalars import ExactMatrix


class UnknownClassError(ValueError):
    """A Z-matrix that is not a nonnegative combination of the known generators."""


@dataclass(frozen=True)
class MoritaClass:
    representative: AlgebraPresentation
    z_signature: InvariantMatrix
    name: str

    def __eq__(self, other):
        return isinstance(other, MoritaClass) and self.z_signature == other.z_signature

    def __hash__(self):
        return hash(self.z_signature)


def short_name(series: str) -> str:
    return "E" if series.startswith("E") else series


def generators(k: int) -> dict:
    """{'A': ..., 'D': ..., 'E': ...} for whatever exists at level k."""
    out = {"A": MoritaClass(unit_algebra(k), z_matrix(unit_algebra(k)), "A")}
    for s in available_series(k):
        if s == "A":
            continue
        alg = build_ade(k, s)
        out[short_name(s)] = MoritaClass(alg, z_matrix(alg), short_name(s))
    return out


def format_sum(coeffs: dict) -> str:
    parts = []
    for name in sorted(coeffs):
        c = coeffs[name]
        if c:
            parts.append(f"[{name}]" if c == 1 else f"{c}[{name}]")
    return "+".join(parts) if parts else "0"


def decompose(Z: ExactMatrix, k: int) -> dict:
    """Nonnegative integers c_X with Z = sum_X c_X Z(X) over the generators at level k.

    Every generator has Z_00 = 1, so the coefficients sum to Z_00 and the
    search is finite.
    """
    gens = generators(k)
    names = sorted(gens)
    total = Z[0, 0].to_fraction()
    if total.denominator != 1 or total < 0:
        raise UnknownClassError(f"Z_00 = {total} is not a nonnegative integer")
    found = []
    for combo in itertools.combinations_with_replacement(names, int(total)):
        acc = ExactMatrix.zeros(Z.field, Z.nrows)
        for name in combo:
            acc = acc + gens[name].z_signature.Z
        if acc == Z:
            found.append({name: combo.count(name) for name in set(combo)})
    if len(found) != 1:
        raise UnknownClassError(f"Z decomposes in {len(found)} ways over {names}")
    return found[0]


def class_multiply(x: MoritaClass, y: MoritaClass, method: str = "z") -> dict:
    """[x] x [y] as {generator name: multiplicity}.

    ``method='z'`` multiplies the two Z-matrices; ``method='tensor'`` builds the
    box product algebra and computes its Z from scratch (slow beyond k = 16).
    """
    k = x.representative.level
    if y.representative.level != k:
        raise ValueError("classes live at different levels")
    if method == "z":
        Z = x.z_signature.Z @ y.z_signature.Z
    elif method == "tensor":
        Z = z_matrix(box_tensor(x.representative, y.representative), verify=False).Z
    else:
        raise ValueError(f"unknown method {method!r}")
    return decompose(Z, k)


def rig_table(k: int, method: str = "z") -> dict:
    """Full multiplication table over the generators at level k."""
    gens = generators(k)
    names = sorted(gens)
    table = {}
    for a, b in itertools.product(names, repeat=2):
        table[(a, b)] = class_multiply(gens[a], gens[b], method)
    return table


def table_to_json(k: int, table: dict) -> dict:
    names = sorted({a for a, _ in table})
    return {
        "level": k,
        "generators": names,
        "table": {f"{a}x{b}": {"sum": format_sum(c), "coeffs": dict(sorted(c.items()))}
                  for (a, b), c in sorted(table.items())},
    }


def render_table(k: int, table: dict) -> str:
    names = sorted({a for a, _ in table})
    width = max(8, *(len(format_sum(c)) for c in table.values()))
    lines = [f"level {k}", "x".ljust(4) + "".join(f"[{n}]".ljust(width + 2) for n in names)]
    for a in names:
        lines.append(f"[{a}]".ljust(4) + "".join(format_sum(table[(a, b)]).ljust(width + 2) for b in names))
    return "\n".join(lines)


__all__ = ["MoritaClass", "UnknownClassError", "generators", "decompose", "class_multiply",
           "rig_table", "table_to_json", "render_table", "format_sum"]
