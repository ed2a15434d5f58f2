"""Recoupling engine: 6j symbols, braiding eigenvalues and fusion-tree states.

Vertices are the Jones-Wenzl trivalent vertices of Temperley-Lieb recoupling
theory with the loop value of the spin-1/2 line taken to be -[2].  In that
gauge every F-symbol is a rational function of quantum integers, so it lives
in the cyclotomic field without square roots.  The associator is the genuine
su(2)_k one (the spin-1/2 Frobenius-Schur sign shows up as
F^{aaa}_a[0,0] = (-1)^a / d_a).

Splitting vertices are normalised so that the dual (fusion) vertex composes
with them to the identity; ``theta`` reports the Jones-Wenzl theta net with
positive loop values, which is the quantity the dual pairing divides out.

Conventions, checked by the pentagon and hexagon tests:

* ``F(a,b,c,d)[e][f]``:  |(ab)_e c -> d>  =  sum_f F[e][f] |a (bc)_f -> d>
* ``braid(a,b,c)``:  c_{a,b} applied to a splitting vertex c -> a b gives
  braid(a,b,c) times the splitting vertex c -> b a.
"""

from __future__ import annotations

import atexit
import itertools
import json
import os
import threading

from .category import CategoryData, category
from .scalars import ExactScalar


class Recoupling:
    """Memoised recoupling data for one level."""

    def __init__(self, cat: CategoryData):
        self.cat = cat
        self.k = cat.level
        self.field = cat.field
        self._lock = threading.Lock()
        self._fact = [self.field.one()]
        for n in range(1, 2 * self.k + 4):
            self._fact.append(self._fact[-1] * self.cat.qint(n))
        # [k+2] = 0, so only [0]!..[k+1]! are invertible.  One field
        # inversion, then walk down with 1/[n-1]! = [n]/[n]!
        top = self.k + 1
        self._ifact = [None] * (top + 1)
        self._ifact[top] = self._fact[top].inverse()
        for n in range(top, 0, -1):
            self._ifact[n - 1] = self._ifact[n] * self.cat.qint(n)
        self._theta_kl = {}
        self._tet = {}
        self._tet_keys = {}
        self._inv_theta = {}
        self._F = {}
        self._Finv = {}
        self._R = {}

    # Temperley-Lieb building blocks -----------------------------------------
    def _signed_qint(self, n: int) -> ExactScalar:
        q = self.cat.qint(n)
        return q if n % 2 else -q

    def _fac(self, n: int) -> ExactScalar:
        return self._fact[n]

    def _ifac(self, n: int) -> ExactScalar:
        return self._ifact[n]

    def _inv_theta_tl(self, a, b, c) -> ExactScalar:
        key = (a, b, c)
        val = self._inv_theta.get(key)
        if val is None:
            val = self._inv_theta[key] = self._inv_theta_formula(a, b, c)
        return val

    def _inv_theta_formula(self, a, b, c) -> ExactScalar:
        m, n, p = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
        ifac, fac = self._ifac, self._fac
        val = ifac(m + n + p + 1) * ifac(m) * ifac(n) * ifac(p) * fac(m + n) * fac(n + p) * fac(m + p)
        return -val if (m + n + p) % 2 else val

    def loop(self, a: int) -> ExactScalar:
        """Temperley-Lieb loop value (-1)^a [a+1]."""
        return self._signed_qint(a + 1)

    def admissible(self, a, b, c) -> bool:
        return self.cat.admissible(a, b, c)

    def theta_tl(self, a: int, b: int, c: int) -> ExactScalar:
        key = (a, b, c)
        val = self._theta_kl.get(key)
        if val is None:
            val = self._theta_formula(a, b, c, signed=True)
            with self._lock:
                self._theta_kl[key] = val
        return val

    def _theta_formula(self, a, b, c, signed):
        if not self.admissible(a, b, c):
            return self.field.zero()
        m, n, p = (a + b - c) // 2, (b + c - a) // 2, (a + c - b) // 2
        fac = self._fac
        ifac = self._ifac
        val = fac(m + n + p + 1) * fac(m) * fac(n) * fac(p) * ifac(m + n) * ifac(n + p) * ifac(m + p)
        return -val if signed and (m + n + p) % 2 else val

    def theta(self, a: int, b: int, c: int) -> ExactScalar:
        """Theta net with positive loop values; zero when (a,b,c) is not admissible."""
        return self._theta_formula(a, b, c, signed=False)

    def tet(self, A, B, E, C, D, F) -> ExactScalar:
        """Tetrahedral net with faces (A,D,E), (B,C,E), (A,B,F), (C,D,F); zero if a face is inadmissible."""
        raw = (E, A, D, B, C, F)
        key = self._tet_keys.get(raw)
        if key is None:
            adm = self.admissible
            ok = adm(A, D, E) and adm(B, C, E) and adm(A, B, F) and adm(C, D, F)
            key = self._tet_keys[raw] = _tet_canonical(raw) if ok else ()
        if not key:
            return self.field.zero()
        val = self._tet.get(key)
        if val is None:
            e, a, d, b, c, f = key
            val = self._tet_formula(a, b, e, c, d, f)
            with self._lock:
                self._tet[key] = val
        return val

    def _tet_formula(self, A, B, E, C, D, F) -> ExactScalar:
        a = [(A + D + E) // 2, (B + C + E) // 2, (A + B + F) // 2, (C + D + F) // 2]
        b = [(B + D + E + F) // 2, (A + C + E + F) // 2, (A + B + C + D) // 2]
        fac, ifac = self._fac, self._ifac
        inner = self.field.one()
        for i in a:
            for j in b:
                inner = inner * fac(j - i)
        for x in (A, B, C, D, E, F):
            inner = inner * ifac(x)
        total = self.field.zero()
        for s in range(max(a), min(b) + 1):
            term = fac(s + 1)
            for i in a:
                term = term * ifac(s - i)
            for j in b:
                term = term * ifac(j - s)
            total = total + term if s % 2 == 0 else total - term
        return inner * total

    # F and R ------------------------------------------------------------------
    def channels(self, a: int, b: int) -> list[int]:
        return self.cat.fusion_product(a, b)

    def F(self, a: int, b: int, c: int, d: int) -> dict:
        """F-matrix of Hom(d, a b c) as ``{e: {f: value}}`` over admissible e, f."""
        key = (a, b, c, d)
        val = self._F.get(key)
        if val is None:
            val = {}
            adm = self.admissible
            for e in self.channels(a, b):
                if not adm(e, c, d):
                    continue
                row = {}
                for f in self.channels(b, c):
                    if not adm(a, f, d):
                        continue
                    x = (self.tet(a, d, e, c, b, f) * self.loop(f)
                         * self._inv_theta_tl(b, c, f) * self._inv_theta_tl(a, f, d))
                    if x:
                        row[f] = x
                val[e] = row
            with self._lock:
                self._F[key] = val
        return val

    def Finv(self, a: int, b: int, c: int, d: int) -> dict:
        """Inverse F-matrix: |a (bc)_f -> d> = sum_e Finv[f][e] |(ab)_e c -> d>."""
        key = (a, b, c, d)
        val = self._Finv.get(key)
        if val is None:
            # mirror image of the F network: same tetrahedron, other pair of vertices
            val = {}
            adm = self.admissible
            for f in self.channels(b, c):
                if not adm(a, f, d):
                    continue
                row = {}
                for e in self.channels(a, b):
                    if not adm(e, c, d):
                        continue
                    x = (self.tet(a, d, e, c, b, f) * self.loop(e)
                         * self._inv_theta_tl(a, b, e) * self._inv_theta_tl(e, c, d))
                    if x:
                        row[e] = x
                val[f] = row
            with self._lock:
                self._Finv[key] = val
        return val

    def sixj(self, a, b, c, d, e, f) -> ExactScalar:
        """Single F-matrix entry F^{abc}_d[e, f]; zero if inadmissible."""
        if not all(0 <= x <= self.k for x in (a, b, c, d, e, f)):
            return self.field.zero()
        return self.F(a, b, c, d).get(e, {}).get(f, self.field.zero())

    def braid(self, a: int, b: int, c: int) -> ExactScalar:
        """Eigenvalue of c_{a,b} on the c channel; zero if inadmissible."""
        key = (a, b, c)
        val = self._R.get(key)
        if val is None:
            if not self.admissible(a, b, c):
                val = self.field.zero()
            else:
                t = (a + b - c) // 2
                # exponent of q^(1/4): (c(c+2) - a(a+2) - b(b+2)) / 2
                val = self.cat.eta_power((c * (c + 2) - a * (a + 2) - b * (b + 2)) // 2)
                if t % 2:
                    val = -val
            with self._lock:
                self._R[key] = val
        return val


# edges of the tetrahedron indexed by the pair of faces they bound, faces 0..3
_TET_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_TET_SYMMETRIES = tuple(
    tuple(_TET_PAIRS.index(tuple(sorted((perm[x], perm[y])))) for x, y in _TET_PAIRS)
    for perm in itertools.permutations(range(4))
)


def _tet_canonical(labels: tuple) -> tuple:
    """Smallest relabelling of (E, A, D, B, C, F) under the 24 symmetries of the tetrahedron."""
    return min(tuple(labels[i] for i in sym) for sym in _TET_SYMMETRIES)


def _invert_block(field, es, fs, fm):
    """Invert the square F block given as nested dicts."""
    if len(es) != len(fs):
        raise ValueError("F block is not square")
    pos_e = {e: i for i, e in enumerate(es)}
    grid = [[fm[e].get(f, field.zero()) for f in fs] for e in es]
    n = len(es)
    # Gauss-Jordan on [grid | I]
    aug = [row + [field.one() if i == j else field.zero() for j in range(n)] for i, row in enumerate(grid)]
    for col in range(n):
        piv = next(r for r in range(col, n) if aug[r][col])
        aug[col], aug[piv] = aug[piv], aug[col]
        inv = aug[col][col].inverse()
        aug[col] = [x * inv for x in aug[col]]
        for r in range(n):
            if r != col and aug[r][col]:
                fac = aug[r][col]
                aug[r] = [x - fac * y for x, y in zip(aug[r], aug[col])]
    inv = {f: {} for f in fs}
    for fi, f in enumerate(fs):
        for e in es:
            x = aug[fi][n + pos_e[e]]
            if x:
                inv[f][e] = x
    return inv


_ENGINES: dict[int, Recoupling] = {}
_ENGINES_LOCK = threading.Lock()


def recoupling(k: int) -> Recoupling:
    eng = _ENGINES.get(k)
    if eng is None:
        with _ENGINES_LOCK:
            eng = _ENGINES.get(k)
            if eng is None:
                eng = _ENGINES[k] = Recoupling(category(k))
                _load_disk_cache(eng)
    return eng


# optional on-disk memo of tetrahedral nets, one UTF-8 JSON file per level

def _cache_path(k: int):
    root = os.environ.get("QREP_CACHE_DIR")
    return os.path.join(root, f"tet_level{k}.json") if root else None


def _load_disk_cache(eng: Recoupling):
    path = _cache_path(eng.k)
    if path is None:
        return
    if os.path.exists(path):
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh)
        for key, val in data.items():
            eng._tet[tuple(int(x) for x in key.split(","))] = eng.field.from_json(val)
    eng._disk_size = len(eng._tet)
    atexit.register(save_disk_cache, eng)


def save_disk_cache(eng: Recoupling):
    """Write the tetrahedral memo to QREP_CACHE_DIR if it grew."""
    path = _cache_path(eng.k)
    if path is None or len(eng._tet) == getattr(eng, "_disk_size", -1):
        return
    os.makedirs(os.path.dirname(path), exist_ok=True)
    data = {",".join(map(str, key)): val.to_json() for key, val in sorted(eng._tet.items())}
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(data, fh, sort_keys=True)
    os.replace(tmp, path)
    eng._disk_size = len(eng._tet)


class TreeState:
    """A vector in Hom(U_top, x_1 (x) ... (x) x_n) on left-associated splitting trees.

    Keys are ``(xs, ys)`` with ``xs`` the strand labels and ``ys[j]`` the
    intermediate charge after fusing strands ``0..j+1``; the last entry of
    ``ys`` is the top label.  All operations return new states.
    """

    __slots__ = ("eng", "top", "terms")

    def __init__(self, eng: Recoupling, top: int, terms: dict):
        self.eng = eng
        self.top = top
        self.terms = terms

    @classmethod
    def vertex(cls, eng: Recoupling, top: int, a: int, b: int, coeff=None):
        """The splitting vertex top -> a b (zero state when inadmissible)."""
        one = eng.field.one() if coeff is None else coeff
        terms = {((a, b), (top,)): one} if eng.admissible(a, b, top) else {}
        return cls(eng, top, terms)

    @classmethod
    def strand(cls, eng: Recoupling, a: int):
        return cls(eng, a, {((a,), ()): eng.field.one()})

    def _add(self, out, key, val):
        if not val:
            return
        cur = out.get(key)
        val = val if cur is None else cur + val
        if val:
            out[key] = val
        else:
            out.pop(key, None)

    @staticmethod
    def _left_charge(xs, ys, p):
        return xs[0] if p == 1 else ys[p - 2]

    def split(self, p: int, x: int, y: int, coeff=None):
        """Replace strand p by the pair (x, y) through a splitting vertex."""
        eng = self.eng
        out = {}
        for (xs, ys), v in self.terms.items():
            xp = xs[p]
            if not eng.admissible(x, y, xp):
                continue
            if coeff is not None:
                v = v * coeff
            nxs = xs[:p] + (x, y) + xs[p + 1:]
            if p == 0:
                self._add(out, (nxs, (xp,) + ys), v)
                continue
            yl = self._left_charge(xs, ys, p)
            yr = ys[p - 1]
            for e, w in eng.Finv(yl, x, y, yr).get(xp, {}).items():
                self._add(out, (nxs, ys[:p - 1] + (e,) + ys[p - 1:]), v * w)
        return TreeState(eng, self.top, out)

    def fuse(self, p: int, z: int, coeff=None):
        """Project strands p, p+1 onto channel z with the dual vertex."""
        eng = self.eng
        out = {}
        for (xs, ys), v in self.terms.items():
            nxs = xs[:p] + (z,) + xs[p + 2:]
            if p == 0:
                if ys[0] != z:
                    continue
                w = v
                nys = ys[1:]
            else:
                yl = self._left_charge(xs, ys, p)
                w = eng.F(yl, xs[p], xs[p + 1], ys[p]).get(ys[p - 1], {}).get(z)
                if w is None:
                    continue
                w = v * w
                nys = ys[:p - 1] + ys[p:]
            if coeff is not None:
                w = w * coeff
            self._add(out, (nxs, nys), w)
        return TreeState(eng, self.top, out)

    def braid(self, p: int, inverse: bool = False):
        """Apply c_{x_p, x_{p+1}}, or with ``inverse`` the map c^{-1}_{x_{p+1}, x_p}."""
        eng = self.eng
        out = {}
        for (xs, ys), v in self.terms.items():
            a, b = xs[p], xs[p + 1]
            nxs = xs[:p] + (b, a) + xs[p + 2:]
            if p == 0:
                z = ys[0]
                r = eng.braid(b, a, z).inverse() if inverse else eng.braid(a, b, z)
                self._add(out, (nxs, ys), v * r)
                continue
            yl = self._left_charge(xs, ys, p)
            yr = ys[p]
            for z, w in eng.F(yl, a, b, yr).get(ys[p - 1], {}).items():
                r = eng.braid(b, a, z).inverse() if inverse else eng.braid(a, b, z)
                vz = v * w * r
                for e, u in eng.Finv(yl, b, a, yr).get(z, {}).items():
                    self._add(out, (nxs, ys[:p - 1] + (e,) + ys[p:]), vz * u)
        return TreeState(eng, self.top, out)

    def monodromy(self, p: int, inverse: bool = False):
        """The double braid c_{x_{p+1}, x_p} c_{x_p, x_{p+1}}, diagonal in the fused channel."""
        eng = self.eng
        cat = eng.cat
        out = {}
        for (xs, ys), v in self.terms.items():
            a, b = xs[p], xs[p + 1]
            base = cat.twist(a) * cat.twist(b)
            if p == 0:
                z = ys[0]
                r = cat.twist(z) / base
                self._add(out, (xs, ys), v * (r.inverse() if inverse else r))
                continue
            yl = self._left_charge(xs, ys, p)
            yr = ys[p]
            for z, w in eng.F(yl, a, b, yr).get(ys[p - 1], {}).items():
                r = cat.twist(z) / base
                vz = v * w * (r.inverse() if inverse else r)
                for e, u in eng.Finv(yl, a, b, yr).get(z, {}).items():
                    self._add(out, (xs, ys[:p - 1] + (e,) + ys[p:]), vz * u)
        return TreeState(eng, self.top, out)

    @classmethod
    def vacuum(cls, eng: Recoupling):
        """The empty diagram: no strands, value 1."""
        return cls(eng, 0, {((), ()): eng.field.one()})

    def insert_unit(self, p: int):
        """Insert a strand labelled 0 at position p (canonical, coefficient 1)."""
        out = {}
        for (xs, ys), v in self.terms.items():
            nxs = xs[:p] + (0,) + xs[p:]
            if not xs:
                nys = ()
            elif p == 0:
                nys = (xs[0],) + ys
            else:
                left = xs[0] if p == 1 else ys[p - 2]
                nys = ys[:p - 1] + (left,) + ys[p - 1:]
            out[(nxs, nys)] = v
        return TreeState(self.eng, self.top, out)

    def remove_unit(self, p: int):
        """Drop the 0-labelled strand at position p."""
        out = {}
        for (xs, ys), v in self.terms.items():
            if xs[p] != 0:
                raise ValueError(f"strand {p} is labelled {xs[p]}, not 0")
            nxs = xs[:p] + xs[p + 1:]
            if len(xs) == 1:
                nys = ()
            elif p == 0:
                nys = ys[1:]
            else:
                nys = ys[:p - 1] + ys[p:]
            self._add(out, (nxs, nys), v)
        return TreeState(self.eng, self.top, out)

    def cup(self, p: int, a: int):
        """Create an a-labelled arc whose two ends become strands p and p+1."""
        return self.insert_unit(p).split(p, a, a)

    def cap(self, p: int):
        """Close strands p and p+1 (equal labels) with an arc; a closed loop gives (-1)^a [a+1]."""
        a = self._common_label(p)
        return self.fuse(p, 0, self.eng.loop(a)).remove_unit(p)

    def fuse_vertex(self, p: int, z: int):
        """The trivalent fusion vertex as a diagram (not the dual-basis projection)."""
        out = TreeState(self.eng, self.top, {})
        for (xs, ys), v in self.terms.items():
            a, b = xs[p], xs[p + 1]
            if not self.eng.admissible(a, b, z):
                continue
            c = self.eng.theta_tl(a, b, z) / self.eng.loop(z)
            piece = TreeState(self.eng, self.top, {(xs, ys): v}).fuse(p, z, c)
            out = out + piece
        return out

    def _common_label(self, p):
        labels = {(xs[p], xs[p + 1]) for xs, _ in self.terms}
        if len(labels) != 1:
            raise ValueError("strand labels differ between terms")
        ((a, b),) = labels
        if a != b:
            raise ValueError(f"cannot cap strands labelled {a} and {b}")
        return a

    def twist(self, p: int, power: int = 1):
        cat = self.eng.cat
        out = {}
        for (xs, ys), v in self.terms.items():
            self._add(out, (xs, ys), v * cat.twist(xs[p]) ** power)
        return TreeState(self.eng, self.top, out)

    def scale(self, c):
        return TreeState(self.eng, self.top, {key: v * c for key, v in self.terms.items() if v * c})

    def __add__(self, other):
        out = dict(self.terms)
        for key, v in other.terms.items():
            self._add(out, key, v)
        return TreeState(self.eng, self.top, out)

    def coefficient(self, xs, ys=None):
        """Coefficient of one tree; ``ys`` may be omitted for one or two strands."""
        if ys is None:
            ys = (self.top,) if len(xs) == 2 else ()
        return self.terms.get((tuple(xs), tuple(ys)), self.eng.field.zero())

    def __repr__(self):
        return f"TreeState(top={self.top}, terms={len(self.terms)})"


# --------------------------------------------------------------------------------------
# closed colored nets in Morse form

NET_OPS = ("cup", "cap", "split", "fuse", "braid", "twist")


class ColoredNet:
    """A planar colored trivalent net read bottom to top as a list of elementary steps.

    Each step acts on the current row of strands:

    * ``{"op": "cup", "pos": p, "label": a}``: new arc, ends at p and p+1
    * ``{"op": "cap", "pos": p}``: close strands p and p+1
    * ``{"op": "split", "pos": p, "labels": [a, b]}``: trivalent vertex c -> a b
    * ``{"op": "fuse", "pos": p, "label": c}``: trivalent vertex a b -> c
    * ``{"op": "braid", "pos": p, "inverse": bool}``: crossing of strands p, p+1
    * ``{"op": "twist", "pos": p, "power": n}``: n framing kinks, ((-1)^a theta_a)^n

    ``boundary`` lists the labels of the open strands at the bottom; a closed
    net has an empty boundary and must end with no strands.
    """

    def __init__(self, level: int, steps, boundary=()):
        self.level = level
        self.steps = [dict(s) for s in steps]
        self.boundary = tuple(boundary)
        for s in self.steps:
            if s.get("op") not in NET_OPS:
                raise ValueError(f"unknown net step {s!r}")

    def to_json(self) -> dict:
        return {"level": self.level, "boundary": list(self.boundary), "steps": self.steps}

    @classmethod
    def from_json(cls, obj) -> "ColoredNet":
        return cls(obj["level"], obj["steps"], obj.get("boundary", ()))

    def rows(self) -> list:
        """Strand labels before each step, plus the final row."""
        row = list(self.boundary)
        out = [tuple(row)]
        for s in self.steps:
            op, p = s["op"], s["pos"]
            if op == "cup":
                row[p:p] = [s["label"], s["label"]]
            elif op == "cap":
                del row[p:p + 2]
            elif op == "split":
                row[p:p + 1] = list(s["labels"])
            elif op == "fuse":
                row[p:p + 2] = [s["label"]]
            elif op == "braid":
                row[p], row[p + 1] = row[p + 1], row[p]
            out.append(tuple(row))
        return out


def apply_net(net: ColoredNet, state: TreeState) -> TreeState:
    for s in net.steps:
        op, p = s["op"], s["pos"]
        if op == "cup":
            state = state.cup(p, s["label"])
        elif op == "cap":
            state = state.cap(p)
        elif op == "split":
            a, b = s["labels"]
            state = state.split(p, a, b)
        elif op == "fuse":
            state = state.fuse_vertex(p, s["label"])
        elif op == "braid":
            state = state.braid(p, bool(s.get("inverse", False)))
        else:
            power = int(s.get("power", 1))
            state = state.twist(p, power)
            # a kink in the unoriented calculus is (-1)^a theta_a
            labels = {xs[p] for xs, _ in state.terms}
            if len(labels) == 1 and labels.pop() * power % 2:
                state = state.scale(-1)
        if not state.terms:
            break
    return state


def evaluate_closed_net(net: ColoredNet) -> ExactScalar:
    """Exact value of a closed net; zero whenever some vertex is inadmissible.

    Nets are unoriented, so they are evaluated with signed loops (-1)^a [a+1]:
    that is the normalization in which a zigzag is the identity.  A theta net
    therefore gives ``theta_tl``, which differs from ``theta`` by (-1)^((a+b+c)/2).
    """
    if net.boundary:
        raise ValueError("net has open ends")
    eng = recoupling(net.level)
    out = apply_net(net, TreeState.vacuum(eng))
    if not out.terms:
        return eng.field.zero()
    if set(key for key in out.terms) != {((), ())}:
        raise ValueError("net does not close: strands remain at the top")
    return out.terms[((), ())]


# coherence checks ----------------------------------------------------------------------

def _f_entry(eng: Recoupling, a, b, c, d, e, f) -> ExactScalar:
    return eng.F(a, b, c, d).get(e, {}).get(f, eng.field.zero())


def pentagon_holds(eng: Recoupling, a, b, c, d, e, p, q, r, s) -> bool:
    """((ab)_p c)_q d -> e re-associated to a (b (cd)_r)_s -> e along both paths."""
    lhs = _f_entry(eng, p, c, d, e, q, r) * _f_entry(eng, a, b, r, e, p, s)
    rhs = eng.field.zero()
    for t in eng.channels(b, c):
        rhs = rhs + (_f_entry(eng, a, b, c, q, p, t) * _f_entry(eng, a, t, d, e, q, s)
                     * _f_entry(eng, b, c, d, s, t, r))
    return lhs == rhs


def hexagon_holds(eng: Recoupling, a, b, c, d, e, g, inverse: bool = False) -> bool:
    """R^{ca}_e F^{acb}_d[e,g] R^{cb}_g = sum_f F^{cab}_d[e,f] R^{cf}_d F^{abc}_d[f,g]."""
    zero = eng.field.zero()

    def R(x, y, z):
        r = eng.braid(x, y, z)
        return r.inverse() if inverse and r else r

    lhs = R(c, a, e) * _f_entry(eng, a, c, b, d, e, g) * R(c, b, g)
    rhs = zero
    for f in eng.channels(a, b):
        rhs = rhs + _f_entry(eng, c, a, b, d, e, f) * R(c, f, d) * _f_entry(eng, a, b, c, d, f, g)
    return lhs == rhs


def pentagon_tuples(k: int):
    """Every (a,b,c,d,e,p,q,r,s) with both sides of the pentagon potentially nonzero."""
    cat = category(k)
    labels = range(k + 1)
    for a, b, c, d in itertools.product(labels, repeat=4):
        for p in cat.fusion_product(a, b):
            for q in cat.fusion_product(p, c):
                for e in cat.fusion_product(q, d):
                    for r in cat.fusion_product(c, d):
                        for s in cat.fusion_product(b, r):
                            if cat.admissible(a, s, e):
                                yield (a, b, c, d, e, p, q, r, s)


def hexagon_tuples(k: int):
    cat = category(k)
    labels = range(k + 1)
    for a, b, c in itertools.product(labels, repeat=3):
        for e in cat.fusion_product(a, c):
            for d in cat.fusion_product(e, b):
                for g in cat.fusion_product(c, b):
                    if cat.admissible(a, g, d):
                        yield (a, b, c, d, e, g)
