import cmath
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from qrep import scalars
from qrep import _kernel_py
from qrep.scalars import (ExactMatrix, IncompatibleFieldError, cyclotomic_field, is_proportional, kernel, rank,
                          vectors_proportional)

ORDERS = [12, 24, 40, 56]

orders = st.sampled_from(ORDERS)


def element(F, draw):
    coeffs = draw(st.lists(st.integers(-50, 50), min_size=F.phi, max_size=F.phi))
    den = draw(st.integers(1, 30))
    return scalars.ExactScalar(F, coeffs, den)


@st.composite
def field_and_elements(draw, n=3):
    F = cyclotomic_field(draw(orders))
    return F, [element(F, draw) for _ in range(n)]


@given(field_and_elements())
def test_ring_axioms(data):
    F, (a, b, c) = data
    assert a + b == b + a
    assert a * b == b * a
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a - a == F.zero()
    assert a * F.one() == a


@given(field_and_elements(n=1))
def test_inverse(data):
    F, (a,) = data
    if a.is_zero():
        with pytest.raises(ZeroDivisionError):
            a.inverse()
    else:
        assert a * a.inverse() == F.one()


@given(field_and_elements(n=2), st.data())
def test_galois_is_a_ring_homomorphism(data, more):
    F, (a, b) = data
    t = more.draw(st.sampled_from(F.units))
    assert (a * b).galois(t) == a.galois(t) * b.galois(t)
    assert (a + b).galois(t) == a.galois(t) + b.galois(t)


@given(field_and_elements(n=2))
def test_complex_embedding_agrees(data):
    F, (a, b) = data
    assert abs((a * b).to_complex() - a.to_complex() * b.to_complex()) < 1e-6 * (1 + abs(a.to_complex() * b.to_complex()))


@given(field_and_elements(n=1))
def test_canonical_form_hash(data):
    F, (a,) = data
    b = (a * 3) / 3
    assert a == b and hash(a) == hash(b)


def test_zeta_has_exact_order():
    for N in ORDERS:
        F = cyclotomic_field(N)
        z = F.zeta(1)
        assert z ** N == F.one()
        assert all(z ** d != F.one() for d in range(1, N))
        assert abs(z.to_complex() - cmath.exp(2j * cmath.pi / N)) < 1e-12


def test_rationals_round_trip():
    F = cyclotomic_field(24)
    x = F.rational(Fraction(-7, 12))
    assert x.is_rational() and x.to_fraction() == Fraction(-7, 12)
    assert F.from_json(x.to_json()) == x


def test_fields_do_not_mix():
    with pytest.raises(IncompatibleFieldError):
        cyclotomic_field(12).one() + cyclotomic_field(24).one()


@given(st.sampled_from([12, 40, 120]),
       st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=64, max_size=64),
       st.lists(st.integers(-10 ** 20, 10 ** 20), min_size=64, max_size=64))
def test_compiled_kernel_matches_python(order, xs, ys):
    compiled = pytest.importorskip("qrep._kernel")
    F = cyclotomic_field(order)
    a, b = xs[:F.phi], ys[:F.phi]
    assert compiled.mulmod(a, b, F.red, F.phi) == _kernel_py.mulmod(a, b, F.red, F.phi)
    for t in F.units[:3]:
        assert (compiled.permute_reduce(a, t, F.red, F.phi, F.order)
                == _kernel_py.permute_reduce(a, t, F.red, F.phi, F.order))


def test_kernel_flag():
    assert scalars.KERNEL in ("compiled", "python")


# matrices ------------------------------------------------------------------------------

def test_rank_and_kernel():
    F = cyclotomic_field(12)
    z = F.zeta(1)
    m = ExactMatrix.from_dense(F, [[F.one(), z, z * z], [z, z * z, z ** 3], [F.one(), F.zero(), F.one()]])
    assert rank(m) == 2
    (v,) = kernel(m)
    assert all(x.is_zero() for x in m.apply(v))


@given(st.integers(1, 5), st.integers(-4, 4))
def test_proportionality(n, c):
    F = cyclotomic_field(12)
    m = ExactMatrix.identity(F, n)
    ratio = is_proportional(m.scale(F.rational(c)), m)
    assert ratio == F.rational(c)
    assert vectors_proportional([F.rational(c)] * n, [F.one()] * n) == F.rational(c)


def test_matrix_algebra():
    F = cyclotomic_field(8)
    z = F.zeta(1)
    a = ExactMatrix.from_dense(F, [[z, F.one()], [F.zero(), z]])
    b = ExactMatrix.from_dense(F, [[F.one(), F.zero()], [z, F.one()]])
    assert (a @ b).transpose() == b.transpose() @ a.transpose()
    assert (a + b).trace() == a.trace() + b.trace()
    assert a.commutator(a).is_zero()


def test_pure_python_fallback_selected_by_environment():
    import os
    import subprocess
    import sys

    env = dict(os.environ, QREP_PURE_PYTHON="1")
    code = ("import qrep; from qrep.category import category; "
            "assert qrep.KERNEL == 'python'; "
            "print(category(5).smatrix().to_json() == None)")
    out = subprocess.run([sys.executable, "-c", code], env=env, capture_output=True, text=True, check=True)
    assert out.stdout.strip() == "False"
