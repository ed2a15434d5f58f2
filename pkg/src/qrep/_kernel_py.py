"""Pure-Python polynomial kernels for cyclotomic arithmetic.

Coefficient vectors are plain lists of Python ints of length ``phi``.
``red[e]`` is the power-basis image of ``zeta**e`` for every ``0 <= e < N``.
"""

from __future__ import annotations


def mulmod(a, b, red, phi):
    """Product of two integer coefficient vectors reduced modulo the cyclotomic polynomial."""
    conv = [0] * (2 * phi - 1)
    for i in range(phi):
        ai = a[i]
        if ai:
            for j in range(phi):
                bj = b[j]
                if bj:
                    conv[i + j] += ai * bj
    out = conv[:phi]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c:
            r = red[e]
            for t in range(phi):
                rt = r[t]
                if rt:
                    out[t] += c * rt
    return out


def permute_reduce(a, t, red, phi, order):
    """Apply the Galois automorphism zeta -> zeta**t to a coefficient vector."""
    out = [0] * phi
    for e in range(phi):
        c = a[e]
        if c:
            r = red[(e * t) % order]
            for s in range(phi):
                rs = r[s]
                if rs:
                    out[s] += c * rs
    return out
