"""Dense integer polynomial kernels (pure Python).

Polynomials are tuples of Python ints indexed by degree, with no trailing
zeros; the zero polynomial is the empty tuple.  ``_ckernels`` is a compiled
drop-in replacement exposing the same functions.
"""

from math import gcd

__all__ = [
    "trim", "add", "sub", "neg", "scale", "mul", "content", "primitive",
    "divexact", "prem", "pgcd", "horner_frac",
]


def trim(a):
    n = len(a)
    while n and a[n - 1] == 0:
        n -= 1
    return tuple(a[:n])


def add(a, b):
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, y in enumerate(b):
        out[i] += y
    return trim(out)


def sub(a, b):
    out = list(a) + [0] * (len(b) - len(a))
    for i, y in enumerate(b):
        out[i] -= y
    return trim(out)


def neg(a):
    return tuple(-x for x in a)


def scale(a, k):
    if k == 0:
        return ()
    return tuple(k * x for x in a)


def mul(a, b):
    if not a or not b:
        return ()
    if len(a) < len(b):
        a, b = b, a
    out = [0] * (len(a) + len(b) - 1)
    for j, y in enumerate(b):
        if y:
            for i, x in enumerate(a):
                out[i + j] += x * y
    return tuple(out)


def content(a):
    """Non-negative gcd of the coefficients (0 for the zero polynomial)."""
    return gcd(*a) if a else 0


def primitive(a):
    """Split ``a`` as ``c * p`` with ``p`` primitive and lc(p) > 0."""
    if not a:
        return 0, ()
    c = gcd(*a)
    if a[-1] < 0:
        c = -c
    if c == 1:
        return 1, tuple(a)
    return c, tuple(x // c for x in a)


def divexact(a, b):
    """Quotient of ``a`` by ``b`` over the integers; raises if inexact."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    if not a:
        return ()
    db = len(b) - 1
    if len(a) - 1 < db:
        raise ArithmeticError("inexact polynomial division")
    r = list(a)
    lb = b[-1]
    quot = [0] * (len(a) - db)
    for k in range(len(a) - 1 - db, -1, -1):
        c, m = divmod(r[k + db], lb)
        if m:
            raise ArithmeticError("inexact polynomial division")
        if c:
            quot[k] = c
            for i, y in enumerate(b):
                r[k + i] -= c * y
    if any(r):
        raise ArithmeticError("inexact polynomial division")
    return tuple(quot)


def prem(a, b):
    """Pseudo-remainder of ``a`` by ``b``."""
    if not b:
        raise ZeroDivisionError("polynomial division by zero")
    db = len(b) - 1
    r = list(a)
    lb = b[-1]
    while len(r) - 1 >= db and r:
        c = r[-1]
        dr = len(r) - 1
        r = [lb * x for x in r]
        for i, y in enumerate(b):
            r[dr - db + i] -= c * y
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return tuple(r)


def pgcd(a, b):
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


def horner_frac(a, num, den):
    """Return ``den**deg(a) * a(num/den)`` as an integer (``den`` > 0)."""
    if not a:
        return 0
    acc = 0
    dpow = 1
    for x in reversed(a):
        acc = acc * num + x * dpow
        dpow *= den
    return acc
