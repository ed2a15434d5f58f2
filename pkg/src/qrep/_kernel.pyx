# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled versions of the cyclotomic kernels in ``_kernel_py``.

Products are computed in the narrowest integer type that cannot overflow:
C ``long long`` for small coefficients, ``__int128`` for medium ones and
Python integers otherwise.
"""

cdef extern from *:
    ctypedef long long i128 "__int128"
    ctypedef unsigned long long u64 "unsigned long long"

cdef enum:
    MAXPHI = 128
    # |coeff| < 2^18: products and reductions stay below 2^(36+7+7+12) < 2^63
    SMALL = 1 << 18
    # reduction rows must have entries below 2^12 for either C path
    MAXRED = 1 << 12

# |coeff| < 2^50: the same bound in 128 bits
cdef long long MEDIUM = 1LL << 50

cdef dict _red_ok = {}


cdef bint _reduction_fits(list red):
    entry = _red_ok.get(id(red))
    if entry is None or entry[0] is not red:
        entry = (red, all(-MAXRED < x < MAXRED for row in red if row for x in row))
        _red_ok[id(red)] = entry
    return entry[1]


cdef int _tier(list v, int phi):
    """0: fits SMALL, 1: fits MEDIUM, 2: needs Python integers."""
    cdef int i, t = 0
    cdef object x
    for i in range(phi):
        x = v[i]
        if -SMALL < x < SMALL:
            continue
        if -MEDIUM < x < MEDIUM:
            t = 1
        else:
            return 2
    return t


cdef object _from_i128(i128 x):
    cdef long long hi = <long long>(x >> 64)
    cdef u64 lo = <u64>(x & <i128>0xFFFFFFFFFFFFFFFF)
    if hi == 0:
        return lo
    if hi == -1 and lo >= (<u64>1 << 63):
        return <long long>lo
    return (<object>hi << 64) + lo


def mulmod(list a, list b, list red, int phi):
    cdef int ta, tb
    if phi > MAXPHI or not _reduction_fits(red):
        return _mulmod_object(a, b, red, phi)
    ta = _tier(a, phi)
    if ta == 2:
        return _mulmod_object(a, b, red, phi)
    tb = _tier(b, phi)
    if tb == 2:
        return _mulmod_object(a, b, red, phi)
    if ta == 0 and tb == 0:
        return _mulmod_small(a, b, red, phi)
    return _mulmod_medium(a, b, red, phi)


cdef list _mulmod_small(list a, list b, list red, int phi):
    cdef long long ca[MAXPHI]
    cdef long long cb[MAXPHI]
    cdef long long conv[2 * MAXPHI]
    cdef long long c
    cdef int i, j, e, t
    cdef list r
    for i in range(phi):
        ca[i] = a[i]
        cb[i] = b[i]
    for i in range(2 * phi - 1):
        conv[i] = 0
    for i in range(phi):
        if ca[i] != 0:
            for j in range(phi):
                conv[i + j] += ca[i] * cb[j]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c != 0:
            r = red[e]
            for t in range(phi):
                conv[t] += c * <long long> r[t]
    return [conv[i] for i in range(phi)]


cdef list _mulmod_medium(list a, list b, list red, int phi):
    cdef i128 ca[MAXPHI]
    cdef i128 cb[MAXPHI]
    cdef i128 conv[2 * MAXPHI]
    cdef i128 c
    cdef int i, j, e, t
    cdef list r
    for i in range(phi):
        ca[i] = <long long> a[i]
        cb[i] = <long long> b[i]
    for i in range(2 * phi - 1):
        conv[i] = 0
    for i in range(phi):
        if ca[i] != 0:
            for j in range(phi):
                conv[i + j] += ca[i] * cb[j]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c != 0:
            r = red[e]
            for t in range(phi):
                conv[t] += c * <long long> r[t]
    return [_from_i128(conv[i]) for i in range(phi)]


cdef list _mulmod_object(list a, list b, list red, int phi):
    cdef list conv = [0] * (2 * phi - 1)
    cdef int i, j, e, t
    cdef object x, c
    cdef list r
    for i in range(phi):
        x = a[i]
        if x:
            for j in range(phi):
                if b[j]:
                    conv[i + j] += x * b[j]
    for e in range(phi, 2 * phi - 1):
        c = conv[e]
        if c:
            r = red[e]
            for t in range(phi):
                if r[t]:
                    conv[t] += c * r[t]
    return conv[:phi]


def permute_reduce(list a, int t, list red, int phi, int order):
    cdef list out = [0] * phi
    cdef int e, s
    cdef object c
    cdef list r
    for e in range(phi):
        c = a[e]
        if c:
            r = red[(e * t) % order]
            for s in range(phi):
                if r[s]:
                    out[s] += c * r[s]
    return out
