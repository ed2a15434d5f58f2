"""Symmetric special Frobenius algebras in su(2)_k, stored by components.

An algebra object is a list of simple summands (labels may repeat after a
tensor product or direct sum).  ``m[(i, j, l)]`` is the coefficient of the
multiplication restricted to summands i (x) j -> l against the normalised
fusion vertex; ``comultiplication()[(l, i, j)]`` is the analogous splitting
coefficient.  The coproduct is never solved for: it is the unique one making
(m, counit) Frobenius, Delta = (id (x) m) o (copairing (x) id).
"""

from __future__ import annotations

import itertools
import json
from functools import cached_property, lru_cache

from .category import category
from .recoupling import TreeState, recoupling
from .scalars import ExactMatrix, ExactScalar


class UnsupportedAlgebraError(ValueError):
    """The requested ADE series does not exist at this level."""


class InvalidAlgebraError(ValueError):
    """A presentation failed one of the symmetric special Frobenius axioms."""


class AlgebraPresentation:
    def __init__(self, level, summands, m, unit, counit, tag, forced_gauge=None):
        self.level = level
        self.summands = tuple(summands)
        self.m = {key: v for key, v in m.items() if v}
        self.unit = {key: v for key, v in unit.items() if v}
        self.counit = {key: v for key, v in counit.items() if v}
        self.tag = tag
        self.forced_gauge = forced_gauge or {}

    def __repr__(self):
        return f"AlgebraPresentation({self.tag}, level={self.level}, object={list(self.summands)})"

    @property
    def cat(self):
        return category(self.level)

    @property
    def eng(self):
        return recoupling(self.level)

    @property
    def object(self) -> list[int]:
        return list(self.summands)

    @property
    def field(self):
        return self.cat.field

    @cached_property
    def by_label(self) -> dict[int, list[int]]:
        out: dict[int, list[int]] = {}
        for idx, a in enumerate(self.summands):
            out.setdefault(a, []).append(idx)
        return out

    def dim(self) -> ExactScalar:
        acc = self.field.zero()
        for a in self.summands:
            acc = acc + self.cat.qdim(a)
        return acc

    def is_haploid(self) -> bool:
        return len(self.by_label.get(0, [])) == 1

    def mult(self, i, j, l) -> ExactScalar:
        return self.m.get((i, j, l), self.field.zero())

    # Frobenius data ---------------------------------------------------------
    @cached_property
    def pairing(self) -> dict:
        """kappa = counit o m on summand pairs of equal label."""
        out = {}
        for a, idxs in self.by_label.items():
            for i, j in itertools.product(idxs, repeat=2):
                acc = self.field.zero()
                for u, e in self.counit.items():
                    acc = acc + e * self.mult(i, j, u)
                if acc:
                    out[(i, j)] = acc
        return out

    @cached_property
    def copairing(self) -> dict:
        """Components of the inverse form 1 -> A (x) A against the splitting vertex 0 -> a a."""
        out = {}
        eng = self.eng
        for a, idxs in self.by_label.items():
            zig = TreeState.strand(eng, a).split(0, a, 0).split(1, a, a).fuse(0, 0).fuse(0, a).coefficient((a,))
            block = ExactMatrix.from_dense(
                self.field, [[self.pairing.get((i, j), self.field.zero()) * zig for j in idxs] for i in idxs])
            inv = _inverse(block)
            if inv is None:
                raise InvalidAlgebraError(f"degenerate pairing on label {a}")
            for r, i in enumerate(idxs):
                for c, j in enumerate(idxs):
                    if inv[r][c]:
                        out[(i, j)] = inv[r][c]
        return out

    @cached_property
    def comultiplication(self) -> dict:
        out = {}
        eng = self.eng
        cop = self.copairing
        for (i, j, l), mv in self.m.items():
            # Delta_c^{a b} = sum_{a'} cop[a, a'] m[a', c -> b]: here i plays a', j plays c, l plays b
            a = self.summands[i]
            c = self.summands[j]
            b = self.summands[l]
            y = TreeState.strand(eng, c).split(0, 0, c).split(0, a, a).fuse(1, b).coefficient((a, b))
            if not y:
                continue
            for i2 in self.by_label[a]:
                cv = cop.get((i2, i))
                if cv:
                    key = (j, i2, l)
                    out[key] = out.get(key, self.field.zero()) + cv * mv * y
        return {key: v for key, v in out.items() if v}

    def comult(self, l, i, j) -> ExactScalar:
        return self.comultiplication.get((l, i, j), self.field.zero())

    # serialization -------------------------------------------------------------
    def to_json(self) -> dict:
        def enc(d):
            return {",".join(map(str, key)): v.to_json() for key, v in sorted(d.items())}

        return {
            "level": self.level,
            "object": list(self.summands),
            "tag": self.tag,
            "m": enc(self.m),
            "unit": {str(key): v.to_json() for key, v in sorted(self.unit.items())},
            "counit": {str(key): v.to_json() for key, v in sorted(self.counit.items())},
        }

    @classmethod
    def from_json(cls, obj) -> "AlgebraPresentation":
        level = obj["level"]
        field = category(level).field

        def dec(d):
            return {tuple(int(x) for x in key.split(",")): field.from_json(v) for key, v in d.items()}

        summands = obj["object"]
        unit = {int(key): field.from_json(v) for key, v in obj.get("unit", {}).items()}
        if not unit:
            unit = {i: field.one() for i, a in enumerate(summands) if a == 0}
        counit = {int(key): field.from_json(v) for key, v in obj.get("counit", {}).items()}
        pres = cls(level, summands, dec(obj["m"]), unit, counit, obj.get("tag", "custom"))
        if not counit:
            pres.counit = {i: pres.dim() for i, a in enumerate(summands) if a == 0}
        return pres

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def _inverse(block: ExactMatrix):
    n = block.nrows
    f = block.field
    aug = [row + [f.one() if i == j else f.zero() for j in range(n)] for i, row in enumerate(block.to_dense())]
    for col in range(n):
        piv = next((r for r in range(col, n) if aug[r][col]), None)
        if piv is None:
            return None
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    return [row[n:] for row in aug]


# axiom checks ---------------------------------------------------------------------

def _assoc_residuals(level, summands, m):
    """Yield (key, residual) of m o (m (x) id) = m o (id (x) m) per fusion channel."""
    eng = recoupling(level)
    zero = eng.field.zero()
    idx = range(len(summands))
    lab = summands
    for i, j, l, d in itertools.product(idx, repeat=4):
        a, b, c, dd = lab[i], lab[j], lab[l], lab[d]
        fs = [f for f in eng.channels(b, c) if eng.admissible(a, f, dd)]
        if not fs:
            continue
        finv = eng.Finv(a, b, c, dd)
        for f in fs:
            lhs = zero
            for e in idx:
                x = m.get((i, j, e))
                if x is None:
                    continue
                y = m.get((e, l, d))
                if y is None:
                    continue
                w = finv.get(f, {}).get(lab[e])
                if w is not None:
                    lhs = lhs + x * y * w
            rhs = zero
            for e in idx:
                if lab[e] != f:
                    continue
                x = m.get((j, l, e))
                y = m.get((i, e, d))
                if x is not None and y is not None:
                    rhs = rhs + x * y
            yield (i, j, l, d, f), lhs - rhs


def check_ssfa(alg: AlgebraPresentation) -> dict:
    """Report on every axiom; the coproduct is the one derived from (m, counit)."""
    eng = alg.eng
    cat = alg.cat
    F = alg.field
    n = len(alg.summands)
    lab = alg.summands
    report = {}
    report["associative"] = all(not r for _, r in _assoc_residuals(alg.level, lab, alg.m))

    unital = True
    for i, j in itertools.product(range(n), repeat=2):
        if lab[i] != lab[j]:
            continue
        want = F.one() if i == j else F.zero()
        left = F.zero()
        right = F.zero()
        for u, e in alg.unit.items():
            left = left + e * alg.mult(u, i, j)
            right = right + e * alg.mult(i, u, j)
        if left != want or right != want:
            unital = False
    report["unital"] = unital

    try:
        alg.copairing
        nondeg = True
    except InvalidAlgebraError:
        nondeg = False
    if alg.is_haploid():
        u = alg.by_label[0][0]
        nondeg = nondeg and all(
            any(alg.mult(i, j, u) for j in range(n) if lab[j] == lab[i]) for i in range(n))
    report["nondegenerate"] = nondeg
    if not nondeg:
        report.update(symmetric=False, special=False, frobenius=False)
        return report

    # symmetry: kappa o c_{A,A} o (theta (x) id) = kappa
    sym = True
    for (i, j), v in alg.pairing.items():
        a = lab[i]
        if alg.pairing.get((j, i), F.zero()) * eng.braid(a, a, 0) * cat.twist(a) != v:
            sym = False
    for (i, j) in itertools.product(range(n), repeat=2):
        if lab[i] == lab[j] and (i, j) not in alg.pairing and (j, i) in alg.pairing:
            sym = False
    report["symmetric"] = sym

    delta = alg.comultiplication
    special = True
    for l, l2 in itertools.product(range(n), repeat=2):
        if lab[l] != lab[l2]:
            continue
        acc = F.zero()
        for (c, i, j), dv in delta.items():
            if c == l:
                acc = acc + alg.mult(i, j, l2) * dv
        if acc != (F.one() if l == l2 else F.zero()):
            special = False
    eps_eta = F.zero()
    for u, e in alg.counit.items():
        eps_eta = eps_eta + e * alg.unit.get(u, F.zero())
    special = special and eps_eta == alg.dim()
    report["special"] = special
    report["frobenius"] = _frobenius_holds(alg)
    return report


def _frobenius_holds(alg) -> bool:
    eng = alg.eng
    lab = alg.summands
    n = len(lab)
    delta = alg.comultiplication
    d_by_src: dict[int, list] = {}
    for (c, i, j), v in delta.items():
        d_by_src.setdefault(c, []).append((i, j, v))
    m_by_pair: dict[tuple, list] = {}
    for (i, j, l), v in alg.m.items():
        m_by_pair.setdefault((i, j), []).append((l, v))
    for i, j in itertools.product(range(n), repeat=2):
        a, b = lab[i], lab[j]
        for e in eng.channels(a, b):
            ket = TreeState.vertex(eng, e, a, b)
            # Delta o m
            lhs = {}
            for l, mv in m_by_pair.get((i, j), []):
                if lab[l] != e:
                    continue
                for (c, d, dv) in d_by_src.get(l, []):
                    key = (c, d)
                    lhs[key] = lhs.get(key, alg.field.zero()) + mv * dv
            # (m (x) id) o (id (x) Delta)
            mid = {}
            for (x, d, dv) in d_by_src.get(j, []):
                st = ket.split(1, lab[x], lab[d], dv)
                for c, mv in m_by_pair.get((i, x), []):
                    val = st.fuse(0, lab[c], mv).coefficient((lab[c], lab[d]), (e,))
                    if val:
                        mid[(c, d)] = mid.get((c, d), alg.field.zero()) + val
            # (id (x) m) o (Delta (x) id)
            rgt = {}
            for (c, x, dv) in d_by_src.get(i, []):
                st = ket.split(0, lab[c], lab[x], dv)
                for d, mv in m_by_pair.get((x, j), []):
                    val = st.fuse(1, lab[d], mv).coefficient((lab[c], lab[d]), (e,))
                    if val:
                        rgt[(c, d)] = rgt.get((c, d), alg.field.zero()) + val
            if _clean(lhs) != _clean(mid) or _clean(lhs) != _clean(rgt):
                return False
    return True


def _clean(d):
    return {key: v for key, v in d.items() if v}


# constructing algebras ---------------------------------------------------------------

def unit_algebra(level: int) -> AlgebraPresentation:
    F = category(level).field
    return AlgebraPresentation(level, (0,), {(0, 0, 0): F.one()}, {0: F.one()}, {0: F.one()}, "unit")


def solve_structure(level: int, labels, tag="custom"):
    """Exact structure constants on the haploid object sum_{a in labels} U_a, or None.

    Unit components are fixed by unitality.  The remaining constants are
    found by propagating the associativity equations: whenever an equation
    has a single unknown left, appearing linearly, it is solved.  When
    propagation stalls, the rescaling freedom of a summand is used to set one
    nonzero constant to 1 (trying 0 as well, since the pattern of zeros is not
    known in advance).
    """
    labels = sorted(set(labels))
    if 0 not in labels:
        raise ValueError("algebra object must contain the unit")
    cat = category(level)
    F = cat.field
    eng = recoupling(level)
    n = len(labels)
    pos = {a: i for i, a in enumerate(labels)}
    known = {}
    unknown = []
    for i, j, l in itertools.product(range(n), repeat=3):
        a, b, c = labels[i], labels[j], labels[l]
        if not eng.admissible(a, b, c):
            continue
        if a == 0:
            known[(i, j, l)] = F.one() if j == l else F.zero()
        elif b == 0:
            known[(i, j, l)] = F.one() if i == l else F.zero()
        else:
            unknown.append((i, j, l))
    # symbolic equations: list of terms (coeff, key1, key2)
    equations = []
    for i, j, l, d in itertools.product(range(n), repeat=4):
        a, b, c, dd = (labels[x] for x in (i, j, l, d))
        finv = eng.Finv(a, b, c, dd) if any(eng.admissible(a, f, dd) for f in eng.channels(b, c)) else {}
        for f in eng.channels(b, c):
            if not eng.admissible(a, f, dd):
                continue
            terms = []
            for e in range(n):
                w = finv.get(f, {}).get(labels[e])
                if w is not None and eng.admissible(a, b, labels[e]) and eng.admissible(labels[e], c, dd):
                    terms.append((w, (i, j, e), (e, l, d)))
            if f in pos:
                e = pos[f]
                if eng.admissible(b, c, f) and eng.admissible(a, f, dd):
                    terms.append((-F.one(), (j, l, e), (i, e, d)))
            if terms:
                equations.append(terms)

    weights = {}
    for (i, j, l) in unknown:
        w = [0] * n
        w[i] += 1
        w[j] += 1
        w[l] -= 1
        weights[(i, j, l)] = tuple(w)

    solution = _propagate_search(F, equations, dict(known), unknown, weights)
    if solution is None:
        return None
    m = {key: v for key, v in solution.items() if v}
    forced = {}
    pres = AlgebraPresentation(level, labels, m, {0: F.one()}, {}, tag, forced)
    pres.counit = {0: pres.dim()}
    for i in range(1, n):
        if not pres.mult(i, i, 0):
            return None
    return pres


def _reduce_equation(F, terms, values):
    """Split an equation into (constant, linear part) or None if a product of unknowns remains."""
    const = F.zero()
    lin = {}
    for w, k1, k2 in terms:
        v1, v2 = values.get(k1), values.get(k2)
        if v1 is not None and v2 is not None:
            const = const + w * v1 * v2
        elif v1 is not None:
            if v1:
                lin[k2] = lin.get(k2, F.zero()) + w * v1
        elif v2 is not None:
            if v2:
                lin[k1] = lin.get(k1, F.zero()) + w * v2
        else:
            return None
    return const, {key: v for key, v in lin.items() if v}


def _propagate(F, equations, values, unknown):
    """Solve the equations that have become linear until stuck; None on contradiction."""
    values = dict(values)
    while True:
        changed = False
        pending = []
        for terms in equations:
            reduced = _reduce_equation(F, terms, values)
            if reduced is None:
                continue
            const, lin = reduced
            if not lin:
                if const:
                    return None
                continue
            if len(lin) == 1:
                (key, coef), = lin.items()
                values[key] = -const / coef
                changed = True
            else:
                pending.append((const, lin))
        if changed:
            continue
        if not pending:
            return values
        solved = _solve_linear(F, pending)
        if solved is None:
            return None
        if not solved:
            return values
        values.update(solved)


def _solve_linear(F, rows):
    """Eliminate a linear system; return the unknowns it pins down, or None if inconsistent."""
    keys = sorted({key for _, lin in rows for key in lin})
    col = {key: i for i, key in enumerate(keys)}
    reduced = []  # (pivot column, row dict, constant)
    for const, lin in rows:
        row = {col[key]: v for key, v in lin.items()}
        rhs = -const
        for pc, prow, prhs in reduced:
            c = row.get(pc)
            if c:
                for j, v in prow.items():
                    nv = row.get(j, F.zero()) - c * v
                    if nv:
                        row[j] = nv
                    else:
                        row.pop(j, None)
                rhs = rhs - c * prhs
        if not row:
            if rhs:
                return None
            continue
        pc = min(row)
        inv = row[pc].inverse()
        row = {j: v * inv for j, v in row.items()}
        rhs = rhs * inv
        for idx, (qc, qrow, qrhs) in enumerate(reduced):
            c = qrow.get(pc)
            if c:
                for j, v in row.items():
                    nv = qrow.get(j, F.zero()) - c * v
                    if nv:
                        qrow[j] = nv
                    else:
                        qrow.pop(j, None)
                reduced[idx] = (qc, qrow, qrhs - c * rhs)
        reduced.append((pc, row, rhs))
    return {keys[pc]: rhs for pc, row, rhs in reduced if len(row) == 1}


def _propagate_search(F, equations, values, unknown, weights, gauge=()):
    values = _propagate(F, equations, values, unknown)
    if values is None:
        return None
    free = [u for u in unknown if u not in values]
    if not free:
        return values
    span = [weights[u][1:] for u, v in gauge if v]
    base = _rank(span)
    # a fix is harmless when the rescaling it needs exists in the field, which
    # is the case when the fixed weights stay part of a lattice basis
    candidates = [u for u in free if _rank(span + [weights[u][1:]]) > base]
    candidates.sort(key=lambda u: (not _saturated(span + [weights[u][1:]]),
                                   sum(abs(x) for x in weights[u][1:]), u))
    for u in candidates:
        for trial in (F.one(), F.zero()):
            sol = _propagate_search(F, equations, {**values, u: trial}, unknown, weights, gauge + ((u, trial),))
            if sol is not None:
                return sol
        return None
    # rescaling freedom is used up but constants remain undetermined
    return None


def _saturated(vectors) -> bool:
    """True if the integer vectors span a primitive sublattice (gcd of maximal minors is 1)."""
    from math import gcd

    import sympy

    r = len(vectors)
    ncols = len(vectors[0])
    g = 0
    for cols in itertools.combinations(range(ncols), r):
        g = gcd(g, int(sympy.Matrix([[v[c] for c in cols] for v in vectors]).det()))
        if g == 1:
            return True
    return False


def _rank(vectors):
    from fractions import Fraction

    rows = [[Fraction(x) for x in v] for v in vectors if any(v)]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c] / rows[r][c]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        r += 1
    return r


# ADE algebras --------------------------------------------------------------------------

_ADE_OBJECTS = {
    "E6": (10, (0, 6)),
    "E7": (16, (0, 8, 16)),
    "E8": (28, (0, 10, 18, 28)),
}


def ade_object(k: int, series: str) -> tuple:
    """Simple summands of the ADE algebra object, or raise if the series does not exist at k."""
    if series == "A":
        return (0,)
    if series == "D":
        if k >= 4 and k % 2 == 0:
            return (0, k)
        raise UnsupportedAlgebraError(f"D series needs an even level >= 4, got {k}")
    if series in _ADE_OBJECTS:
        level, obj = _ADE_OBJECTS[series]
        if k == level:
            return obj
        raise UnsupportedAlgebraError(f"{series} exists only at level {level}")
    raise UnsupportedAlgebraError(f"unknown series {series!r}")


def available_series(k: int) -> list[str]:
    out = []
    for s in ("D", "E6", "E7", "E8"):
        try:
            ade_object(k, s)
        except UnsupportedAlgebraError:
            continue
        out.append(s)
    return out


@lru_cache(maxsize=None)
def build_ade(k: int, series: str) -> AlgebraPresentation:
    """The haploid symmetric special Frobenius algebra of the given ADE type at level k."""
    labels = ade_object(k, series)
    if series == "A":
        return unit_algebra(k)
    alg = solve_structure(k, labels, tag=series)
    if alg is None:
        raise InvalidAlgebraError(f"no algebra structure found on {labels} at level {k}")
    return alg


# tensor product and direct sum ---------------------------------------------------------------

def box_tensor(A: AlgebraPresentation, B: AlgebraPresentation) -> AlgebraPresentation:
    """A (x) B with multiplication (m_A (x) m_B) o (id (x) c_{B,A} (x) id).

    Summand (alpha, beta, z) is the image of U_z in U_a (x) U_b under the
    normalised splitting vertex.
    """
    if A.level != B.level:
        raise ValueError("algebras live at different levels")
    eng = A.eng
    F = A.field
    parts = [(al, be, z) for al, a in enumerate(A.summands) for be, b in enumerate(B.summands)
             for z in eng.channels(a, b)]
    index = {part: r for r, part in enumerate(parts)}
    labels = [z for _, _, z in parts]
    mA_by_pair = _by_pair(A.m)
    mB_by_pair = _by_pair(B.m)
    m = {}
    for (p, (a1, b1, z1)), (q, (a2, b2, z2)) in itertools.product(enumerate(parts), repeat=2):
        la1, lb1, la2, lb2 = A.summands[a1], B.summands[b1], A.summands[a2], B.summands[b2]
        outs_a = mA_by_pair.get((a1, a2), ())
        outs_b = mB_by_pair.get((b1, b2), ())
        if not outs_a or not outs_b:
            continue
        for z3 in eng.channels(z1, z2):
            base = TreeState.vertex(eng, z3, z1, z2).split(0, la1, lb1).split(2, la2, lb2).braid(1)
            for a3, mav in outs_a:
                sa = base.fuse(0, A.summands[a3], mav)
                for b3, mbv in outs_b:
                    r = index.get((a3, b3, z3))
                    if r is None:
                        continue
                    val = sa.fuse(1, B.summands[b3], mbv).fuse(0, z3).coefficient((z3,))
                    if val:
                        key = (p, q, r)
                        m[key] = m.get(key, F.zero()) + val
    unit = {}
    counit = {}
    for r, (x, y, z) in enumerate(parts):
        if z == 0 and x in A.unit and y in B.unit:
            unit[r] = A.unit[x] * B.unit[y]
        if z == 0 and x in A.counit and y in B.counit:
            counit[r] = A.counit[x] * B.counit[y]
    pres = AlgebraPresentation(A.level, labels, m, unit, counit, f"({A.tag}*{B.tag})")
    pres.provenance = parts
    return pres


def box_plus(A: AlgebraPresentation, B: AlgebraPresentation) -> AlgebraPresentation:
    """Block-diagonal direct sum; the result has two unit summands."""
    if A.level != B.level:
        raise ValueError("algebras live at different levels")
    shift = len(A.summands)
    m = dict(A.m)
    m.update({(i + shift, j + shift, l + shift): v for (i, j, l), v in B.m.items()})
    unit = dict(A.unit)
    unit.update({i + shift: v for i, v in B.unit.items()})
    counit = dict(A.counit)
    counit.update({i + shift: v for i, v in B.counit.items()})
    return AlgebraPresentation(A.level, A.summands + B.summands, m, unit, counit, f"({A.tag}+{B.tag})")


def _by_pair(m):
    out: dict[tuple, list] = {}
    for (i, j, l), v in m.items():
        out.setdefault((i, j), []).append((l, v))
    return out


# the endofunctor idempotent and the left center -------------------------------------------------

def endofunctor_block(alg: AlgebraPresentation, i: int, j: int, mirror: bool = False) -> ExactMatrix:
    """Matrix of P^l_A(U_i) on Hom(U_j, A (x) U_i).

    The basis is one splitting vertex U_j -> U_a (x) U_i per summand a, in
    summand order (only summands with N_{a i}^j = 1 appear).  The morphism
    splits A with the coproduct, lets one leg encircle U_i, crosses it back
    over the other leg with a twist and multiplies.  ``mirror`` reflects every
    crossing and inverts the twist.
    """
    eng = alg.eng
    S = alg.summands
    basis = [al for al, a in enumerate(S) if eng.admissible(a, i, j)]
    pos = {al: n for n, al in enumerate(basis)}
    out = ExactMatrix.zeros(alg.field, len(basis), row_basis=basis, col_basis=basis)
    by_src: dict[int, list] = {}
    for (l, b1, b2), dv in alg.comultiplication.items():
        by_src.setdefault(l, []).append((b1, b2, dv))
    by_pair = _by_pair(alg.m)
    for al in basis:
        start = TreeState.vertex(eng, j, S[al], i)
        for b1, b2, dv in by_src.get(al, ()):
            s = start.split(0, S[b1], S[b2], dv)
            s = s.monodromy(1, mirror).twist(1, -1 if mirror else 1).braid(0, mirror)
            for g, mv in by_pair.get((b2, b1), ()):
                if g not in pos:
                    continue
                c = s.fuse(0, S[g], mv).coefficient((S[g], i))
                if c:
                    out[pos[g], pos[al]] = out[pos[g], pos[al]] + c
    return out


def _image_split(q: ExactMatrix):
    """Factor an idempotent as E @ R with R @ E = 1; returns (pivot columns, E, R)."""
    from .scalars import rref

    reduced, pivots = rref(q)
    E = [[q[r, c] for c in pivots] for r in range(q.nrows)]
    R = [[reduced[r][c] for c in range(q.ncols)] for r in range(len(pivots))]
    return pivots, E, R


def left_center(alg: AlgebraPresentation) -> AlgebraPresentation:
    """Image of P^l_A = P^l_A(U_0) with the induced commutative Frobenius structure."""
    F = alg.field
    embed = {}    # new summand -> {old summand: coefficient}
    retract = {}  # new summand -> {old summand: coefficient}
    labels = []
    for c in sorted(alg.by_label):
        q = endofunctor_block(alg, 0, c)
        if not q.nrows:
            continue
        pivots, E, R = _image_split(q)
        old = q.col_basis
        for t in range(len(pivots)):
            idx = len(labels)
            labels.append(c)
            embed[idx] = {old[r]: E[r][t] for r in range(len(old)) if E[r][t]}
            retract[idx] = {old[r]: R[t][r] for r in range(len(old)) if R[t][r]}
    n = len(labels)
    m = {}
    for p, q_, s in itertools.product(range(n), repeat=3):
        if not alg.eng.admissible(labels[p], labels[q_], labels[s]):
            continue
        acc = F.zero()
        for a, ea in embed[p].items():
            for b, eb in embed[q_].items():
                for g, rg in retract[s].items():
                    v = alg.m.get((a, b, g))
                    if v:
                        acc = acc + rg * v * ea * eb
        if acc:
            m[(p, q_, s)] = acc
    unit = {}
    for s in range(n):
        acc = F.zero()
        for u, uv in alg.unit.items():
            acc = acc + retract[s].get(u, F.zero()) * uv
        if acc:
            unit[s] = acc
    dim_c = F.zero()
    for c in labels:
        dim_c = dim_c + alg.cat.qdim(c)
    zeta = dim_c / alg.dim()
    counit = {}
    for s in range(n):
        acc = F.zero()
        for u, ev in alg.counit.items():
            acc = acc + ev * embed[s].get(u, F.zero())
        if acc:
            counit[s] = zeta * acc
    return AlgebraPresentation(alg.level, labels, m, unit, counit, f"C_l({alg.tag})")
