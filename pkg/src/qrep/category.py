"""Structural data of the su(2)_k ribbon category.

Everything lives in one cyclotomic field.  Twists need q^(1/4) with
q = exp(2 pi i/(k+2)), hence order 4(k+2).  The unitary S-matrix also needs
sqrt(2/(k+2)), which that field only contains for even k, so odd levels
double the order.
"""

from __future__ import annotations

from functools import lru_cache

from .scalars import ExactMatrix, ExactScalar, cyclotomic_field


class LabelError(ValueError):
    """A simple label outside 0..k."""


class ConsistencyError(RuntimeError):
    """An internal exactness check failed."""


def field_order(k: int) -> int:
    return 4 * (k + 2) if k % 2 == 0 else 8 * (k + 2)


class CategoryData:
    """su(2)_k data: labels 0..k, 0/1 fusion, quantum dimensions, twists and S."""

    def __init__(self, k: int):
        if k < 0:
            raise ValueError("level must be nonnegative")
        self.level = k
        self.labels = tuple(range(k + 1))
        self.field = F = cyclotomic_field(field_order(k))
        # eta is the primitive 4(k+2)-th root, so q = eta^4 and theta_j = eta^(j(j+2))
        self._step = F.order // (4 * (k + 2))
        self._qint_cache = {}
        self.q = self.eta_power(4)
        self.picard = (0, k) if k > 0 else (0,)
        self._qdims = tuple(self.qint(i + 1) for i in self.labels)
        self._twists = tuple(self.eta_power(i * (i + 2)) for i in self.labels)
        self._smatrix = None

    def __repr__(self):
        return f"CategoryData(level={self.level})"

    def __reduce__(self):
        return (category, (self.level,))

    # field helpers -----------------------------------------------------------
    def eta_power(self, e: int) -> ExactScalar:
        """q^(e/4) exactly."""
        return self.field.zeta(self._step * e)

    def qint(self, n: int) -> ExactScalar:
        """Quantum integer [n] = (q^(n/2) - q^(-n/2)) / (q^(1/2) - q^(-1/2))."""
        val = self._qint_cache.get(n)
        if val is None:
            val = self._qint_cache[n] = self._qint(n)
        return val

    def _qint(self, n: int) -> ExactScalar:
        if n == 0:
            return self.field.zero()
        sign = 1
        if n < 0:
            n, sign = -n, -1
        acc = self.field.zero()
        for m in range(n):
            acc = acc + self.eta_power(2 * (n - 1 - 2 * m))
        return acc if sign > 0 else -acc

    # labels and fusion ----------------------------------------------------------
    def check_label(self, i: int):
        if not isinstance(i, int) or not 0 <= i <= self.level:
            raise LabelError(f"label {i!r} outside 0..{self.level}")

    def dual(self, i: int) -> int:
        self.check_label(i)
        return i

    def fusion(self, i: int, j: int, l: int) -> int:
        """N_{ij}^l in {0, 1}."""
        k = self.level
        if not (0 <= i <= k and 0 <= j <= k and 0 <= l <= k):
            return 0
        if (i + j + l) % 2:
            return 0
        return int(abs(i - j) <= l <= min(i + j, 2 * k - i - j))

    def admissible(self, i: int, j: int, l: int) -> bool:
        return bool(self.fusion(i, j, l))

    def fusion_product(self, i: int, j: int) -> list[int]:
        self.check_label(i)
        self.check_label(j)
        k = self.level
        return list(range(abs(i - j), min(i + j, 2 * k - i - j) + 1, 2))

    def fusion_matrix(self, i: int) -> ExactMatrix:
        """(N_i)_{jl} = N_{ij}^l."""
        n = self.level + 1
        grid = [[self.fusion(i, j, l) for l in range(n)] for j in range(n)]
        return ExactMatrix.from_dense(self.field, grid, row_basis=list(self.labels), col_basis=list(self.labels))

    def simple_current_action(self, i: int) -> int:
        """Label of U_k (x) U_i."""
        (out,) = self.fusion_product(self.level, i)
        return out

    # dimensions and twists ---------------------------------------------------------
    def qdim(self, i: int) -> ExactScalar:
        self.check_label(i)
        return self._qdims[i]

    def twist(self, i: int) -> ExactScalar:
        self.check_label(i)
        return self._twists[i]

    def global_dim_squared(self) -> ExactScalar:
        acc = self.field.zero()
        for d in self._qdims:
            acc = acc + d * d
        return acc

    def global_dim(self) -> ExactScalar:
        """Positive square root of sum d_i^2, built from a quadratic Gauss sum."""
        k = self.level
        F = self.field
        m = k + 2
        # sqrt(m) = G(4m) / (2(1+i)) with G(c) = sum_n exp(2 pi i n^2 / c)
        gauss = F.zero()
        for n in range(4 * m):
            gauss = gauss + self.eta_power(n * n % (4 * m))
        i_unit = self.eta_power(m)
        sqrt_m = gauss / (2 * (1 + i_unit))
        sqrt2 = self._root(8, 1) + self._root(8, -1)
        sin_pi = (self.eta_power(2) - self.eta_power(-2)) / (2 * i_unit)
        dim = sqrt_m / (sqrt2 * sin_pi)
        if dim * dim != self.global_dim_squared():
            raise ConsistencyError("global dimension does not square to sum of d_i^2")
        if dim.to_complex().real < 0:
            dim = -dim
        return dim

    def _root(self, order: int, power: int) -> ExactScalar:
        return self.field.zeta(self.field.order // order * power)

    # modular data ------------------------------------------------------------------
    def smatrix(self) -> ExactMatrix:
        """Unitary S from the joint eigenvectors of the fusion matrices."""
        if self._smatrix is None:
            self._smatrix = self._build_smatrix()
        return self._smatrix

    def _build_smatrix(self) -> ExactMatrix:
        k = self.level
        n = k + 1
        n1 = self.fusion_matrix(1) if k >= 1 else None
        columns = []
        for m in range(n):
            # eigenvalue of N_1 on the m-th eigenvector: [2] evaluated at q^(m+1)
            lam = self.eta_power(2 * (m + 1)) + self.eta_power(-2 * (m + 1))
            vec = [self.field.one()]
            if k >= 1:
                vec.append(lam)
                for i in range(1, k):
                    vec.append(lam * vec[i] - vec[i - 1])
                if n1.apply(vec) != [lam * v for v in vec]:
                    raise ConsistencyError(f"column {m} is not an eigenvector of N_1")
            columns.append(vec)
        inv_dim = self.global_dim().inverse()
        grid = [[columns[m][i] * self._qdims[m] * inv_dim for m in range(n)] for i in range(n)]
        return ExactMatrix.from_dense(self.field, grid, row_basis=list(self.labels), col_basis=list(self.labels))

    def tmatrix(self) -> ExactMatrix:
        return ExactMatrix.diagonal(self.field, self._twists, row_basis=list(self.labels), col_basis=list(self.labels))

    def verlinde_dim(self, g: int) -> int:
        """dim of the genus-g block space, sum_i (D/d_i)^(2g-2)."""
        if g < 0:
            raise ValueError("genus must be nonnegative")
        dsq = self.global_dim_squared()
        acc = self.field.zero()
        for d in self._qdims:
            acc = acc + (dsq / (d * d)) ** (g - 1) if g >= 1 else acc + (d * d / dsq)
        value = acc.to_fraction() if acc.is_rational() else None
        if value is None or value.denominator != 1:
            raise ConsistencyError(f"Verlinde sum at genus {g} is not an integer: {acc}")
        return int(value)

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "labels": list(self.labels),
            "qdims": [{"exact": d.to_json(), "float": d.to_complex().real} for d in self._qdims],
            "twists": [{"exact": t.to_json(), "float": [t.to_complex().real, t.to_complex().imag]}
                       for t in self._twists],
            "smatrix": self.smatrix().to_json(),
        }


@lru_cache(maxsize=None)
def category(k: int) -> CategoryData:
    return CategoryData(k)


__all__ = ["CategoryData", "LabelError", "ConsistencyError", "category", "field_order"]
