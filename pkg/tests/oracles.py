"""Independent reference values.

Everything here is computed in floating point from closed formulas, or written
down from the classification of su(2) modular invariants, without touching the
exact machinery under test.
"""

from __future__ import annotations

import cmath
import math


def qnum(n: int, k: int) -> float:
    x = math.pi / (k + 2)
    return math.sin(n * x) / math.sin(x)


def qfact(n: int, k: int) -> float:
    out = 1.0
    for m in range(1, n + 1):
        out *= qnum(m, k)
    return out


def qdim(j: int, k: int) -> float:
    return qnum(j + 1, k)


def twist(j: int, k: int) -> complex:
    return cmath.exp(2j * math.pi * j * (j + 2) / (4 * (k + 2)))


def smatrix(k: int) -> list:
    c = math.sqrt(2 / (k + 2))
    return [[c * math.sin((i + 1) * (j + 1) * math.pi / (k + 2)) for j in range(k + 1)] for i in range(k + 1)]


def fusion(i: int, j: int, l: int, k: int) -> int:
    """su(2)_k fusion multiplicity from the truncated Clebsch-Gordan rule."""
    return int(abs(i - j) <= l <= i + j and (i + j + l) % 2 == 0 and i + j + l <= 2 * k)


def verlinde_fusion(i: int, j: int, l: int, k: int) -> float:
    S = smatrix(k)
    return sum(S[i][m] * S[j][m] * S[l][m] / S[0][m] for m in range(k + 1))


def verlinde_dim(g: int, k: int) -> int:
    S = smatrix(k)
    return round(sum(S[0][j] ** (2 - 2 * g) for j in range(k + 1)))


def _delta(a, b, c, k):
    # twice-spin labels
    return math.sqrt(qfact((a + b - c) // 2, k) * qfact((a - b + c) // 2, k) * qfact((-a + b + c) // 2, k)
                     / qfact((a + b + c) // 2 + 1, k))


def racah_6j(a, b, e, c, d, f, k) -> float:
    """q-6j symbol {a b e; c d f} of su(2)_k (twice-spin labels), Racah form."""
    alphas = [(a + b + e) // 2, (e + c + d) // 2, (b + c + f) // 2, (a + f + d) // 2]
    betas = [(a + b + c + d) // 2, (a + c + e + f) // 2, (b + d + e + f) // 2]
    total = 0.0
    for z in range(max(alphas), min(betas) + 1):
        den = 1.0
        for x in alphas:
            den *= qfact(z - x, k)
        for y in betas:
            den *= qfact(y - z, k)
        total += (-1) ** z * qfact(z + 1, k) / den
    return _delta(a, b, e, k) * _delta(e, c, d, k) * _delta(b, c, f, k) * _delta(a, f, d, k) * total


def unitary_f_squared(a, b, c, d, e, f, k) -> float:
    """|F^{abc}_d[e, f]|^2 in a unitary gauge; gauge invariant as F[e,f] Finv[f,e]."""
    return qnum(e + 1, k) * qnum(f + 1, k) * racah_6j(a, b, e, c, d, f, k) ** 2


def ade_z(k: int, series: str) -> list:
    """Known su(2)_k modular invariants as integer matrices."""
    n = k + 1
    Z = [[0] * n for _ in range(n)]

    def block(labels, weight=1):
        for i in labels:
            for j in labels:
                Z[i][j] += weight

    if series == "A":
        for i in range(n):
            Z[i][i] = 1
    elif series == "D" and k % 4 == 0:
        for j in range(0, k // 2, 2):
            block((j, k - j))
        Z[k // 2][k // 2] = 2
    elif series == "D":
        for j in range(n):
            Z[j][j if j % 2 == 0 else k - j] = 1
    elif series == "E6":
        for pair in ((0, 6), (3, 7), (4, 10)):
            block(pair)
    elif series == "E7":
        for pair in ((0, 16), (4, 12), (6, 10)):
            block(pair)
        Z[8][8] = 1
        for j in (2, 14):
            Z[8][j] = Z[j][8] = 1
    elif series == "E8":
        block((0, 10, 18, 28))
        block((6, 12, 16, 22))
    else:
        raise ValueError(series)
    return Z


def commutes_float(Z, M, tol=1e-9) -> bool:
    n = len(Z)
    for i in range(n):
        for j in range(n):
            a = sum(Z[i][m] * M[m][j] for m in range(n))
            b = sum(M[i][m] * Z[m][j] for m in range(n))
            if abs(a - b) > tol:
                return False
    return True


def tmatrix(k: int) -> list:
    return [[twist(i, k) if i == j else 0 for j in range(k + 1)] for i in range(k + 1)]
