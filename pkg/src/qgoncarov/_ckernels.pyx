# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled dense integer polynomial kernels.

Same contract as ``_pykernels``.  ``mul`` and ``add``/``sub`` switch to a
machine-word loop when the coefficient bit sizes guarantee no overflow.
"""

from libc.stdlib cimport malloc, free
from math import gcd

__all__ = [
    "trim", "add", "sub", "neg", "scale", "mul", "content", "primitive",
    "divexact", "prem", "pgcd", "horner_frac",
]

cdef int WORD_BITS = 62


cdef int _maxbits(tuple a):
    cdef int m = 0, b
    for x in a:
        b = (<object>x).bit_length()
        if b > m:
            m = b
    return m


cdef int _bitlen(Py_ssize_t n):
    cdef int b = 0
    while n:
        b += 1
        n >>= 1
    return b


cpdef tuple trim(a):
    cdef Py_ssize_t n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


cpdef tuple add(tuple a, tuple b):
    cdef Py_ssize_t i, nb
    cdef list out
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    nb = len(b)
    for i in range(nb):
        out[i] = out[i] + b[i]
    return trim(out)


cpdef tuple sub(tuple a, tuple b):
    cdef Py_ssize_t i, na = len(a), nb = len(b)
    cdef list out = list(a)
    if nb > na:
        out.extend([0] * (nb - na))
    for i in range(nb):
        out[i] = out[i] - b[i]
    return trim(out)


cpdef tuple neg(tuple a):
    return tuple([-x for x in a])


cpdef tuple scale(tuple a, k):
    if k == 0:
        return ()
    return tuple([k * x for x in a])


cdef tuple _mul_word(tuple a, tuple b):
    cdef Py_ssize_t na = len(a), nb = len(b), i, j
    cdef long long *ca = <long long *>malloc(na * sizeof(long long))
    cdef long long *cb = <long long *>malloc(nb * sizeof(long long))
    cdef long long *co = <long long *>malloc((na + nb - 1) * sizeof(long long))
    cdef long long y
    try:
        for i in range(na):
            ca[i] = a[i]
        for j in range(nb):
            cb[j] = b[j]
        for i in range(na + nb - 1):
            co[i] = 0
        for j in range(nb):
            y = cb[j]
            if y:
                for i in range(na):
                    co[i + j] += ca[i] * y
        return tuple([co[i] for i in range(na + nb - 1)])
    finally:
        free(ca)
        free(cb)
        free(co)


cpdef tuple mul(tuple a, tuple b):
    cdef Py_ssize_t na, nb, i, j
    cdef list out
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    na = len(a)
    nb = len(b)
    if _maxbits(a) + _maxbits(b) + _bitlen(nb) <= WORD_BITS:
        return _mul_word(a, b)
    out = [0] * (na + nb - 1)
    for j in range(nb):
        y = b[j]
        if y:
            for i in range(na):
                out[i + j] = out[i + j] + a[i] * y
    return tuple(out)


cpdef object content(tuple a):
    """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
    return gcd(*a) if a else 0


cpdef tuple primitive(tuple a):
    """Split ``a`` as ``c * p`` with ``p`` primitive and lc(p) > 0."""
    if not a:
        return 0, ()
    c = gcd(*a)
    if a[len(a) - 1] < 0:
        c = -c
    if c == 1:
        return 1, a
    return c, tuple([x // c for x in a])


cpdef tuple divexact(tuple a, tuple b):
    """Quotient of ``a`` by ``b`` over the integers; raises if inexact."""
    cdef Py_ssize_t db, k, i, na
    cdef list r, quot
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    na = len(a)
    db = len(b) - 1
    if na - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    r = list(a)
    lb = b[db]
    quot = [0] * (na - db)
    for k in range(na - 1 - db, -1, -1):
        c, m = divmod(r[k + db], lb)
        if m:
            raise ArithmeticError("inexact polynomial division")
        if c:
            quot[k] = c
            for i in range(db + 1):
                r[k + i] = r[k + i] - c * b[i]
    for x in r:
        if x:
            raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


cpdef tuple prem(tuple a, tuple b):
    """Pseudo-remainder of ``a`` by ``b``."""
    cdef Py_ssize_t db, dr, i
    cdef list r
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    lb = b[db]
    while r and len(r) - 1 >= db:
        c = r[len(r) - 1]
        dr = len(r) - 1
        r = [lb * x for x in r]
        for i in range(db + 1):
            r[dr - db + i] = r[dr - db + i] - c * b[i]
        r.pop()
        while r and r[len(r) - 1] == 0:
            r.pop()
    return tuple(r)


cpdef tuple pgcd(tuple a, tuple b):
    """Primitive gcd with positive leading coefficient (primitive PRS)."""
    if not a:
        return primitive(b)[1]
    if not b:
        return primitive(a)[1]
    if len(a) == 1 or len(b) == 1:
        return (1,)
    a = primitive(a)[1]
    b = primitive(b)[1]
    if len(a) < len(b):
        a, b = b, a
    while b:
        r = prem(a, b)
        a, b = b, (primitive(r)[1] if r else ())
        if len(b) == 1:
            return (1,)
    return a


cpdef object horner_frac(tuple a, num, den):
    """Return ``den**deg(a) * a(num/den)`` as an integer (``den`` > 0)."""
    if not a:
        return 0
    acc = 0
    dpow = 1
    for x in reversed(a):
        acc = acc * num + x * dpow
        dpow = dpow * den
    return acc
