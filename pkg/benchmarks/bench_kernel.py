"""Compare the compiled and pure-Python cyclotomic kernels.

    python benchmarks/bench_kernel.py [--repeat 5] [--levels 4 10 28]

Times ``mulmod`` on random coefficient vectors with small and large entries,
then a full genus-1 Z-matrix build with each kernel swapped in.
"""

from __future__ import annotations

import argparse
import random
import timeit

from qrep import scalars
from qrep import _kernel_py
from qrep.category import field_order

try:
    from qrep import _kernel as _compiled
except ImportError:
    _compiled = None


def _vectors(phi, bound, n, rng):
    return [[rng.randint(-bound, bound) for _ in range(phi)] for _ in range(n)]


def bench_mulmod(k, repeat, rng):
    F = scalars.cyclotomic_field(field_order(k))
    rows = []
    for bound in (10, 10 ** 30):
        vecs = _vectors(F.phi, bound, 64, rng)
        pairs = list(zip(vecs, reversed(vecs)))
        for name, mod in (("python", _kernel_py), ("compiled", _compiled)):
            if mod is None:
                continue
            for a, b in pairs[:4]:
                assert mod.mulmod(a, b, F.red, F.phi) == _kernel_py.mulmod(a, b, F.red, F.phi)
            t = min(timeit.repeat(lambda: [mod.mulmod(a, b, F.red, F.phi) for a, b in pairs],
                                  number=1, repeat=repeat))
            rows.append((k, F.phi, bound, name, t / len(pairs) * 1e6))
    return rows


def bench_zmatrix(k, series):
    """Wall time of a cold Z(A) build under each kernel."""
    import importlib

    category, frobenius, modular_invariant, recoupling = (
        importlib.import_module(f"qrep.{m}") for m in ("category", "frobenius", "modular_invariant", "recoupling"))

    out = {}
    for name, mod in (("python", _kernel_py), ("compiled", _compiled)):
        if mod is None:
            continue
        scalars._k = mod
        for cache in (category.category, recoupling.recoupling, scalars.cyclotomic_field, frobenius.build_ade):
            if hasattr(cache, "cache_clear"):
                cache.cache_clear()
        recoupling._ENGINES.clear()
        alg = frobenius.build_ade(k, series)
        out[name] = timeit.timeit(lambda: modular_invariant.z_matrix(alg, verify=False), number=1)
    scalars._k = _compiled or _kernel_py
    return out


def main():
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--levels", type=int, nargs="+", default=[4, 10, 28])
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args()
    rng = random.Random(args.seed)
    print(f"compiled kernel available: {_compiled is not None}")
    print(f"{'k':>3} {'phi':>4} {'|coeff|':>8} {'kernel':>9} {'us/mul':>9}")
    for k in args.levels:
        for k_, phi, bound, name, us in bench_mulmod(k, args.repeat, rng):
            print(f"{k_:>3} {phi:>4} {bound:>8.0e} {name:>9} {us:>9.2f}")
    print()
    for k, series in ((10, "E6"), (16, "E7")):
        times = bench_zmatrix(k, series)
        print(f"Z({series}, k={k}): " + ", ".join(f"{n} {t:.2f}s" for n, t in times.items()))


if __name__ == "__main__":
    main()
