"""Polynomials in ``x`` with coefficients in Q(q)."""

from fractions import Fraction

from qgoncarov.errors import BasisError, InconsistencyError
from qgoncarov.qfield import ONE, ZERO, QPoly, QRat, as_qrat

__all__ = ["XPoly", "X", "evaluate", "change_of_basis", "from_basis", "random_xpoly"]


class XPoly:
    """Dense polynomial in x; ``coeffs[k]`` is the coefficient of ``x^k``."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=()):
        cs = [as_qrat(c) for c in coeffs]
        while cs and not cs[-1]:
            cs.pop()
        self._c = tuple(cs)
        self._hash = None

    @classmethod
    def _raw(cls, cs):
        p = cls.__new__(cls)
        cs = list(cs)
        while cs and not cs[-1]:
            cs.pop()
        p._c = tuple(cs)
        p._hash = None
        return p

    @classmethod
    def constant(cls, c):
        return cls([c])

    @classmethod
    def monomial(cls, k, c=ONE):
        return cls._raw([ZERO] * k + [as_qrat(c)])

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        """Degree in x; -1 for the zero polynomial."""
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def lc(self):
        return self._c[-1] if self._c else ZERO

    def coeff(self, k):
        return self._c[k] if 0 <= k < len(self._c) else ZERO

    def __bool__(self):
        return bool(self._c)

    def __eq__(self, other):
        if isinstance(other, XPoly):
            return self._c == other._c
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self._c == o._c

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(self._c)
        return self._hash

    def __add__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, y in enumerate(b):
            out[i] = out[i] + y
        return XPoly._raw(out)

    __radd__ = __add__

    def __neg__(self):
        return XPoly._raw([-c for c in self._c])

    def __sub__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = _coerce(other)
        if o is None:
            return NotImplemented
        a, b = self._c, o._c
        if not a or not b:
            return XPoly._raw([])
        if len(b) == 1:
            return self.scale(b[0])
        if len(a) == 1:
            return o.scale(a[0])
        out = [ZERO] * (len(a) + len(b) - 1)
        for i, x in enumerate(a):
            if not x:
                continue
            for j, y in enumerate(b):
                if y:
                    out[i + j] = out[i + j] + x * y
        return XPoly._raw(out)

    __rmul__ = __mul__

    def scale(self, c):
        c = as_qrat(c)
        if not c:
            return XPoly._raw([])
        return XPoly._raw([c * x for x in self._c])

    def __pow__(self, k):
        out = XPoly([ONE])
        for _ in range(k):
            out = out * self
        return out

    def __call__(self, z):
        return evaluate(self, z)

    def compose(self, g):
        """``self(g(x))`` by Horner's scheme."""
        acc = XPoly._raw([])
        for c in reversed(self._c):
            acc = acc * g + XPoly._raw([c])
        return acc

    def _divmod(self, g):
        # long division in x; only used internally where exactness is expected
        if not g:
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self._c)
        dg = g.degree
        inv = g.lc().inverse()
        quot = [ZERO] * max(len(r) - dg, 0)
        for k in range(len(r) - 1 - dg, -1, -1):
            c = r[k + dg] * inv
            if c:
                quot[k] = c
                for i, y in enumerate(g._c):
                    r[k + i] = r[k + i] - c * y
        return XPoly._raw(quot), XPoly._raw(r[:dg] if dg > 0 else [])

    def exact_div(self, g):
        quot, rem = self._divmod(g)
        if rem:
            raise InconsistencyError(f"nonzero remainder {rem} dividing {self} by {g}")
        return quot

    def __str__(self):
        if not self._c:
            return "0"
        if len(self._c) == 1:
            return str(self._c[0])
        terms = []
        for k in range(len(self._c) - 1, -1, -1):
            c = self._c[k]
            if not c:
                continue
            if k == 0:
                terms.append(f"({c})")
            elif k == 1:
                terms.append(f"({c})*x")
            else:
                terms.append(f"({c})*x^{k}")
        return " + ".join(terms)

    def __repr__(self):
        return f"XPoly({str(self)!r})"

    def to_json(self):
        return [c.to_json() for c in self._c]

    @classmethod
    def from_json(cls, arr):
        return cls(QRat.from_json(c) for c in arr)


X = XPoly([ZERO, ONE])


def _coerce(x):
    if isinstance(x, XPoly):
        return x
    c = as_qrat(x, strict=False)
    if c is None:
        return None
    return XPoly._raw([c])


def evaluate(f, z):
    """Evaluate ``f`` at ``z`` in Q(q) by Horner's scheme."""
    z = as_qrat(z)
    acc = ZERO
    for c in reversed(f.coeffs):
        acc = acc * z + c
    return acc


def change_of_basis(f, basis):
    """Coefficients ``c`` with ``f == sum(c[i] * basis[i])``.

    ``basis`` is indexable (``basis[i]`` is the degree-``i`` element) and must
    be graded; elimination runs from the top degree down.
    """
    d = f.degree
    if d < 0:
        return []
    out = [ZERO] * (d + 1)
    r = list(f.coeffs)
    for n in range(d, -1, -1):
        p = basis[n]
        if p.degree != n:
            raise BasisError(f"basis element {n} has degree {p.degree}")
        c = r[n] / p.lc() if r[n] else ZERO
        out[n] = c
        if c:
            for i, y in enumerate(p.coeffs):
                if y:
                    r[i] = r[i] - c * y
    return out


def from_basis(coeffs, basis):
    acc = XPoly._raw([])
    for i, c in enumerate(coeffs):
        if c:
            acc = acc + basis[i].scale(c)
    return acc


def random_xpoly(rng, degree, q_degree=1):
    """Seeded random polynomial of exact degree ``degree``.

    Each coefficient is a polynomial in q of degree <= ``q_degree`` whose
    rational coefficients are ``randint(-9, 9) / randint(1, 9)``.
    """
    def coeff():
        return as_qrat(QPoly(Fraction(rng.randint(-9, 9), rng.randint(1, 9)) for _ in range(q_degree + 1)))

    cs = [coeff() for _ in range(degree)]
    lead = coeff()
    while not lead:
        lead = coeff()
    return XPoly(cs + [lead])
