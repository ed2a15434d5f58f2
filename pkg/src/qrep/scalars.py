"""Exact arithmetic in cyclotomic fields and exact sparse matrices over them.

An element of Q(zeta_N) is stored as an integer coefficient vector in the
power basis 1, zeta, ..., zeta^(phi-1) together with one positive common
denominator.  The pair is kept in lowest terms, so equal field elements
always have identical representations.
"""

from __future__ import annotations

import cmath
import math
import os
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

try:  # compiled kernel, built by setup.py when Cython is available
    if os.environ.get("QREP_PURE_PYTHON") == "1":
        raise ImportError("pure Python kernel requested")
    from . import _kernel as _k

    KERNEL = "compiled"
except ImportError:
    from . import _kernel_py as _k

    KERNEL = "python"


class IncompatibleFieldError(ValueError):
    """Raised when mixing elements of different cyclotomic fields."""


class CyclotomicField:
    """The field Q(zeta_N) with cached reduction tables."""

    def __init__(self, order: int):
        import sympy

        if order < 1:
            raise ValueError("field order must be positive")
        self.order = order
        x = sympy.Symbol("x")
        poly = sympy.Poly(sympy.cyclotomic_poly(order, x), x)
        coeffs = [int(c) for c in reversed(poly.all_coeffs())]
        self.phi = len(coeffs) - 1
        self.poly = tuple(coeffs)
        phi = self.phi
        # red[e] = power-basis vector of zeta**e; built by repeated multiplication by zeta
        red = []
        cur = [0] * phi
        cur[0] = 1
        for _ in range(max(order, 2 * phi)):
            red.append(list(cur))
            top = cur[-1]
            cur = [0] + cur[:-1]
            if top:
                for t in range(phi):
                    cur[t] -= top * coeffs[t]
        self.red = red
        self.units = [t for t in range(1, order) if math.gcd(t, order) == 1] or [1]
        self._zero = ExactScalar(self, [0] * phi, 1)
        self._one = ExactScalar(self, [1] + [0] * (phi - 1), 1)

    def __repr__(self):
        return f"CyclotomicField({self.order})"

    def __reduce__(self):
        return (cyclotomic_field, (self.order,))

    def zero(self) -> "ExactScalar":
        return self._zero

    def one(self) -> "ExactScalar":
        return self._one

    def zeta(self, power: int) -> "ExactScalar":
        return ExactScalar(self, list(self.red[power % self.order]), 1)

    def rational(self, value) -> "ExactScalar":
        value = Fraction(value)
        return ExactScalar(self, [value.numerator] + [0] * (self.phi - 1), value.denominator)

    def coerce(self, value) -> "ExactScalar":
        if isinstance(value, ExactScalar):
            if value.field is not self:
                raise IncompatibleFieldError(f"element of {value.field} used in {self}")
            return value
        if isinstance(value, (int, Rational)):
            return self.rational(value)
        raise TypeError(f"cannot coerce {type(value).__name__} into {self}")

    def from_json(self, obj) -> "ExactScalar":
        if obj["order"] != self.order:
            raise IncompatibleFieldError(f"order {obj['order']} does not match {self.order}")
        fracs = [Fraction(n, d) for n, d in obj["coeffs"]]
        den = math.lcm(*(f.denominator for f in fracs)) if fracs else 1
        return ExactScalar(self, [int(f * den) for f in fracs], den)


@lru_cache(maxsize=None)
def cyclotomic_field(order: int) -> CyclotomicField:
    return CyclotomicField(order)


def root_of_unity(order: int, power: int, ambient: int | None = None) -> "ExactScalar":
    """exp(2 pi i power / order) inside Q(zeta_ambient); ``order`` must divide ``ambient``."""
    ambient = order if ambient is None else ambient
    if order <= 0 or ambient % order:
        raise IncompatibleFieldError(f"a primitive {order}-th root is not in Q(zeta_{ambient})")
    field = cyclotomic_field(ambient)
    return field.zeta((ambient // order) * power)


class ExactScalar:
    __slots__ = ("field", "num", "den", "_hash")

    def __init__(self, field: CyclotomicField, num, den: int = 1):
        if den < 0:
            num = [-c for c in num]
            den = -den
        g = math.gcd(den, *num)
        if g > 1:
            num = [c // g for c in num]
            den //= g
        elif g == 0:
            den = 1
        self.field = field
        self.num = num
        self.den = den
        self._hash = None

    # construction helpers -------------------------------------------------
    def _lift(self, other):
        if isinstance(other, ExactScalar):
            if other.field is not self.field:
                raise IncompatibleFieldError(f"{other.field} vs {self.field}")
            return other
        if isinstance(other, (int, Rational)):
            return self.field.rational(other)
        return NotImplemented

    # arithmetic -----------------------------------------------------------
    def __add__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        d1, d2 = self.den, other.den
        if d1 == d2:
            return ExactScalar(self.field, [a + b for a, b in zip(self.num, other.num)], d1)
        return ExactScalar(self.field, [a * d2 + b * d1 for a, b in zip(self.num, other.num)], d1 * d2)

    __radd__ = __add__

    def __neg__(self):
        return ExactScalar(self.field, [-a for a in self.num], self.den)

    def __sub__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return ExactScalar(self.field, [a * other for a in self.num], self.den)
        other = self._lift(other)
        if other is NotImplemented:
            return other
        if self.is_zero() or other.is_zero():
            return self.field.zero()
        f = self.field
        return ExactScalar(f, _k.mulmod(self.num, other.num, f.red, f.phi), self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = self._lift(other)
        if other is NotImplemented:
            return other
        return self * other.inverse()

    def __rtruediv__(self, other):
        return self.inverse() * other

    def __pow__(self, n: int):
        if n < 0:
            return self.inverse() ** (-n)
        result, base = self.field.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def galois(self, t: int) -> "ExactScalar":
        """Image under zeta -> zeta**t (t coprime to the order)."""
        f = self.field
        return ExactScalar(f, _k.permute_reduce(self.num, t, f.red, f.phi, f.order), self.den)

    def conjugate(self) -> "ExactScalar":
        return self.galois(self.field.order - 1)

    def inverse(self) -> "ExactScalar":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero in a cyclotomic field")
        f = self.field
        if self.is_rational():
            return f.rational(Fraction(self.den, self.num[0]))
        # the product of all nontrivial conjugates divided by the norm
        cof = f.one()
        for t in f.units[1:]:
            cof = cof * self.galois(t)
        norm = self * cof
        assert norm.is_rational(), "norm must be rational"
        return cof * _rational_inverse(norm)

    # predicates and conversions --------------------------------------------
    def is_zero(self) -> bool:
        return not any(self.num)

    def is_rational(self) -> bool:
        return not any(self.num[1:])

    def to_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError("element is not rational")
        return Fraction(self.num[0], self.den)

    def to_complex(self) -> complex:
        n = self.field.order
        total = 0j
        for e, c in enumerate(self.num):
            if c:
                total += c * cmath.exp(2j * math.pi * e / n)
        return total / self.den

    def __complex__(self):
        return self.to_complex()

    def __eq__(self, other):
        if isinstance(other, ExactScalar):
            return self.field is other.field and self.den == other.den and self.num == other.num
        if isinstance(other, (int, Rational)):
            return self.is_rational() and Fraction(self.num[0], self.den) == other
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self.num[0], self.den))
            else:
                self._hash = hash((self.field.order, self.den, tuple(self.num)))
        return self._hash

    def __bool__(self):
        return not self.is_zero()

    def to_json(self) -> dict:
        return {
            "order": self.field.order,
            "coeffs": [[c // math.gcd(c, self.den), self.den // math.gcd(c, self.den)] for c in self.num],
        }

    def __repr__(self):
        return f"ExactScalar({self.pretty()})"

    def pretty(self) -> str:
        if self.is_rational():
            return str(self.to_fraction())
        terms = []
        for e, c in enumerate(self.num):
            if not c:
                continue
            coeff = Fraction(c, self.den)
            mono = "1" if e == 0 else (f"z{self.field.order}" + (f"^{e}" if e > 1 else ""))
            terms.append(f"{coeff}*{mono}" if e else str(coeff))
        return " + ".join(terms).replace("+ -", "- ")


def _rational_inverse(x: ExactScalar) -> ExactScalar:
    return x.field.rational(Fraction(x.den, x.num[0]))


class ExactMatrix:
    """Sparse exact matrix: each row is a dict ``{column: ExactScalar}`` holding nonzero entries only.

    ``row_basis`` and ``col_basis`` are optional tags (label lists or fusion
    trees) describing what the rows and columns index.
    """

    __slots__ = ("field", "nrows", "ncols", "rows", "row_basis", "col_basis")

    def __init__(self, field, nrows, ncols, rows=None, row_basis=None, col_basis=None):
        self.field = field
        self.nrows = nrows
        self.ncols = ncols
        self.rows = rows if rows is not None else [dict() for _ in range(nrows)]
        self.row_basis = row_basis
        self.col_basis = col_basis

    # constructors ----------------------------------------------------------
    @classmethod
    def zeros(cls, field, nrows, ncols=None, **tags):
        return cls(field, nrows, nrows if ncols is None else ncols, **tags)

    @classmethod
    def identity(cls, field, n, **tags):
        one = field.one()
        return cls(field, n, n, [{i: one} for i in range(n)], **tags)

    @classmethod
    def diagonal(cls, field, values, **tags):
        rows = [{i: field.coerce(v)} if v else {} for i, v in enumerate(values)]
        return cls(field, len(rows), len(rows), rows, **tags)

    @classmethod
    def from_dense(cls, field, grid, **tags):
        nrows = len(grid)
        ncols = len(grid[0]) if nrows else 0
        rows = []
        for r in grid:
            row = {}
            for j, v in enumerate(r):
                v = field.coerce(v)
                if v:
                    row[j] = v
            rows.append(row)
        return cls(field, nrows, ncols, rows, **tags)

    def copy(self):
        return ExactMatrix(self.field, self.nrows, self.ncols, [dict(r) for r in self.rows],
                           self.row_basis, self.col_basis)

    # access ----------------------------------------------------------------
    @property
    def shape(self):
        return (self.nrows, self.ncols)

    def __getitem__(self, ij):
        i, j = ij
        return self.rows[i].get(j, self.field.zero())

    def __setitem__(self, ij, value):
        i, j = ij
        value = self.field.coerce(value)
        if value:
            self.rows[i][j] = value
        else:
            self.rows[i].pop(j, None)

    def to_dense(self):
        z = self.field.zero()
        return [[r.get(j, z) for j in range(self.ncols)] for r in self.rows]

    def nnz(self):
        return sum(len(r) for r in self.rows)

    def column(self, j):
        return [r.get(j, self.field.zero()) for r in self.rows]

    def apply(self, vec):
        """Matrix times a dense vector."""
        out = []
        for r in self.rows:
            acc = self.field.zero()
            for j, v in r.items():
                if vec[j]:
                    acc = acc + v * vec[j]
            out.append(acc)
        return out

    # algebra ---------------------------------------------------------------
    def _check_shape(self, other):
        if self.shape != other.shape:
            raise ValueError(f"shape mismatch {self.shape} vs {other.shape}")

    def __add__(self, other):
        self._check_shape(other)
        rows = []
        for a, b in zip(self.rows, other.rows):
            row = dict(a)
            for j, v in b.items():
                s = row[j] + v if j in row else v
                if s:
                    row[j] = s
                else:
                    row.pop(j, None)
            rows.append(row)
        return ExactMatrix(self.field, self.nrows, self.ncols, rows, self.row_basis, self.col_basis)

    def __neg__(self):
        return self.scale(-1)

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c):
        c = self.field.coerce(c)
        if not c:
            return ExactMatrix.zeros(self.field, self.nrows, self.ncols)
        rows = [{j: v * c for j, v in r.items()} for r in self.rows]
        return ExactMatrix(self.field, self.nrows, self.ncols, rows, self.row_basis, self.col_basis)

    def __mul__(self, c):
        return self.scale(c)

    __rmul__ = __mul__

    def __matmul__(self, other):
        if self.ncols != other.nrows:
            raise ValueError(f"cannot multiply {self.shape} by {other.shape}")
        rows = []
        for a in self.rows:
            acc = {}
            for k, v in a.items():
                for j, w in other.rows[k].items():
                    p = v * w
                    acc[j] = acc[j] + p if j in acc else p
            rows.append({j: v for j, v in acc.items() if v})
        return ExactMatrix(self.field, self.nrows, other.ncols, rows, self.row_basis, other.col_basis)

    def transpose(self):
        rows = [dict() for _ in range(self.ncols)]
        for i, r in enumerate(self.rows):
            for j, v in r.items():
                rows[j][i] = v
        return ExactMatrix(self.field, self.ncols, self.nrows, rows, self.col_basis, self.row_basis)

    def conjugate_transpose(self):
        t = self.transpose()
        t.rows = [{j: v.conjugate() for j, v in r.items()} for r in t.rows]
        return t

    def __eq__(self, other):
        if not isinstance(other, ExactMatrix):
            return NotImplemented
        return self.shape == other.shape and all(a == b for a, b in zip(self.rows, other.rows))

    __hash__ = None

    def is_zero(self):
        return not any(self.rows)

    def trace(self):
        acc = self.field.zero()
        for i in range(min(self.nrows, self.ncols)):
            v = self.rows[i].get(i)
            if v is not None:
                acc = acc + v
        return acc

    def is_diagonal(self):
        return all(set(r) <= {i} for i, r in enumerate(self.rows))

    def restrict(self, rows, cols):
        """Submatrix on the given row and column index lists."""
        cpos = {c: n for n, c in enumerate(cols)}
        out = []
        for i in rows:
            out.append({cpos[j]: v for j, v in self.rows[i].items() if j in cpos})
        return ExactMatrix(self.field, len(rows), len(cols), out)

    def commutator(self, other):
        return self @ other - other @ self

    def to_json(self):
        z = self.field.zero()
        return [[r.get(j, z).to_json() for j in range(self.ncols)] for r in self.rows]

    def to_complex(self):
        return [[v.to_complex() for v in row] for row in self.to_dense()]

    def __repr__(self):
        return f"ExactMatrix({self.nrows}x{self.ncols}, nnz={self.nnz()}, order={self.field.order})"


def rank(m: ExactMatrix) -> int:
    """Exact rank by Gaussian elimination over the cyclotomic field."""
    rows = [dict(r) for r in m.rows if r]
    r = 0
    while rows:
        # choose the sparsest row and its leading column as pivot
        rows.sort(key=len)
        pivot = rows.pop(0)
        if not pivot:
            continue
        col = min(pivot)
        inv = pivot[col].inverse()
        pivot = {j: v * inv for j, v in pivot.items()}
        r += 1
        nxt = []
        for row in rows:
            f = row.get(col)
            if f is not None:
                row = dict(row)
                for j, v in pivot.items():
                    s = row[j] - f * v if j in row else -(f * v)
                    if s:
                        row[j] = s
                    else:
                        row.pop(j, None)
            if row:
                nxt.append(row)
        rows = nxt
    return r


def _rref_rows(m: ExactMatrix) -> dict:
    """Sparse reduced row echelon form as {pivot column: normalised row}."""
    rows = [dict(r) for r in m.rows if r]
    pivots = {}
    for row in rows:
        for c, prow in pivots.items():
            fac = row.get(c)
            if fac is not None:
                _axpy(row, prow, fac)
        if not row:
            continue
        col = min(row)
        inv = row[col].inverse()
        row = {j: v * inv for j, v in row.items()}
        for prow in pivots.values():
            fac = prow.get(col)
            if fac is not None:
                _axpy(prow, row, fac)
        pivots[col] = row
    return pivots


def _axpy(row: dict, other: dict, fac):
    """row -= fac * other, in place, dropping zeros."""
    for j, v in other.items():
        s = row[j] - fac * v if j in row else -(fac * v)
        if s:
            row[j] = s
        else:
            row.pop(j, None)


def rref(m: ExactMatrix):
    """Dense reduced row echelon form (nonzero rows only) and the pivot columns."""
    pivots = _rref_rows(m)
    cols = sorted(pivots)
    zero = m.field.zero()
    return [[pivots[c].get(j, zero) for j in range(m.ncols)] for c in cols], cols


def kernel(m: ExactMatrix) -> list[list[ExactScalar]]:
    """Basis of the right null space as dense vectors."""
    f = m.field
    pivots = _rref_rows(m)
    basis = []
    for free in range(m.ncols):
        if free in pivots:
            continue
        vec = [f.zero()] * m.ncols
        vec[free] = f.one()
        for c, prow in pivots.items():
            v = prow.get(free)
            if v is not None:
                vec[c] = -v
        basis.append(vec)
    return basis


def is_proportional(m: ExactMatrix, n: ExactMatrix):
    """Return c with m == c*n, or None.  Two zero matrices give ratio 1."""
    m._check_shape(n)
    if m.is_zero():
        return m.field.one() if n.is_zero() else m.field.zero()
    ratio = None
    for a, b in zip(m.rows, n.rows):
        if set(a) != set(b):
            return None
        for j, v in b.items():
            c = a[j] / v
            if ratio is None:
                ratio = c
            elif c != ratio:
                return None
    if ratio is None:
        return m.field.one()
    return ratio


def vectors_proportional(u, v):
    """Ratio c with u == c*v for dense vectors, else None."""
    if u and v and not any(u):
        return u[0].field.one() if not any(v) else u[0].field.zero()
    ratio = None
    for a, b in zip(u, v):
        if bool(a) != bool(b):
            return None
        if b:
            c = a / b
            if ratio is None:
                ratio = c
            elif c != ratio:
                return None
    return ratio if ratio is not None else (u[0].field.one() if u else None)
