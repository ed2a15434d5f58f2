"""Standard bases of the genus-g block spaces and the diagonal mapping class actions.

The handlebody spine is a chain: loop 1 hangs off the first vertex, each middle
handle contributes a fuse vertex and a split vertex joined through its loop, and
the last loop closes the chain.  A basis tree is the label tuple

    (i_1, c_1, i_2, c_2, c_3, i_3, ..., c_{2g-3}, i_g)

with loops ``i_t`` and connectors ``c_s``; genus 1 is the single loop ``(i,)``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .category import category
from .scalars import ExactMatrix


@dataclass(frozen=True, order=True)
class FusionTree:
    genus: int
    labels: tuple

    def loop(self, t: int) -> int:
        """Label of loop t (1-based)."""
        return self.labels[loop_positions(self.genus)[t - 1]]

    def to_json(self) -> list:
        return list(self.labels)


@dataclass(frozen=True)
class Vertex:
    """One trivalent vertex: input edge positions and output edge positions in the label tuple."""
    kind: str  # "split": one input, two outputs; "fuse": two inputs, one output
    inputs: tuple
    outputs: tuple


@lru_cache(maxsize=None)
def loop_positions(g: int) -> tuple:
    if g < 1:
        raise ValueError("genus must be at least 1")
    if g == 1:
        return (0,)
    return (0,) + tuple(2 + 3 * (t - 2) for t in range(2, g)) + (3 * g - 4,)


@lru_cache(maxsize=None)
def tree_vertices(g: int) -> tuple:
    """Vertices of the spine along the chain, bottom to top, as tuple positions."""
    if g < 2:
        return ()
    loops = loop_positions(g)
    verts = [Vertex("split", (loops[0],), (loops[0], _connector(1)))]
    for t in range(2, g):
        left, mid, right = _connector(2 * t - 3), _connector(2 * t - 2), _connector(2 * t - 1)
        verts.append(Vertex("fuse", (left, loops[t - 1]), (mid,)))
        verts.append(Vertex("split", (mid,), (loops[t - 1], right)))
    verts.append(Vertex("fuse", (_connector(2 * g - 3), loops[-1]), (loops[-1],)))
    return tuple(verts)


def _connector(s: int) -> int:
    # c_1 sits at 1; each middle handle t adds (i_t, c_{2t-2}, c_{2t-1})
    if s == 1:
        return 1
    t = s // 2 + 1
    base = 2 + 3 * (t - 2)
    return base + 1 if s % 2 == 0 else base + 2


def n_edges(g: int) -> int:
    return 1 if g == 1 else 3 * g - 3


@lru_cache(maxsize=None)
def _basis(g: int, k: int) -> tuple:
    cat = category(k)
    n = n_edges(g)
    verts = tree_vertices(g)
    out = []

    def extend(prefix):
        pos = len(prefix)
        if pos == n:
            out.append(FusionTree(g, tuple(prefix)))
            return
        for lab in range(k + 1):
            cand = prefix + [lab]
            if all(_vertex_ok(cat, v, cand) for v in verts if max(v.inputs + v.outputs) == pos):
                extend(cand)

    extend([])
    return tuple(out)


def _vertex_ok(cat, v: Vertex, labels) -> bool:
    a, b, c = (labels[p] for p in v.inputs + v.outputs)
    return cat.admissible(a, b, c)


def enumerate_basis(g: int, k: int) -> list:
    """All admissible labelings of the genus-g spine, lexicographic in the label tuple."""
    if g < 1:
        raise ValueError("genus must be at least 1")
    return list(_basis(g, k))


@lru_cache(maxsize=None)
def basis_index(g: int, k: int) -> dict:
    return {t.labels: n for n, t in enumerate(_basis(g, k))}


def special_vector(g: int, obj, k: int) -> list:
    """v^g_U as a dense integer coefficient list on ``enumerate_basis(g, k)``.

    ``obj`` is a label or a multiplicity map {label: multiplicity}.
    """
    mults = {obj: 1} if isinstance(obj, int) else dict(obj)
    idx = basis_index(g, k)
    vec = [0] * len(idx)
    for i, m in mults.items():
        category(k).check_label(i)
        labels = [0] * n_edges(g)
        labels[loop_positions(g)[-1]] = i
        vec[idx[tuple(labels)]] += m
    return vec


def rep_genus1(generator: str, k: int) -> ExactMatrix:
    cat = category(k)
    if generator == "S":
        return cat.smatrix()
    if generator == "T":
        return cat.tmatrix()
    raise ValueError(f"unknown generator {generator!r}; expected 'S' or 'T'")


def dehn_twist_cut(g: int, curve_index: int, k: int) -> ExactMatrix:
    """Twist along the pants curve around tree edge ``curve_index``: diagonal theta of that label."""
    if not 0 <= curve_index < n_edges(g):
        raise IndexError(f"curve index {curve_index} outside 0..{n_edges(g) - 1}")
    cat = category(k)
    trees = _basis(g, k)
    return ExactMatrix.diagonal(cat.field, [cat.twist(t.labels[curve_index]) for t in trees],
                                row_basis=list(trees), col_basis=list(trees))


def projective_relations(k: int) -> dict:
    """Check S^4 = 1 and (ST)^3 = c S^2 with c a root of unity."""
    from .scalars import is_proportional

    S, T = rep_genus1("S", k), rep_genus1("T", k)
    S2 = S @ S
    ST = S @ T
    c = is_proportional(ST @ ST @ ST, S2)
    root = c is not None and any(c ** n == 1 for n in range(1, 4 * c.field.order + 1))
    n = k + 1
    return {"S4_identity": S2 @ S2 == ExactMatrix.identity(S.field, n),
            "ST3_proportional_S2": c is not None,
            "scalar_root_of_unity": bool(root)}

