"""Exact arithmetic in Q[q] and Q(q), and the usual q-analogs.

``QPoly`` is a dense polynomial in the formal variable ``q`` with rational
coefficients.  ``QRat`` is a reduced quotient of two such polynomials; it is
stored as ``c * N / D`` with ``c`` rational and ``N``, ``D`` primitive integer
polynomials with positive leading coefficients, which makes structural
equality decide equality in Q(q).
"""

from fractions import Fraction
from functools import lru_cache, reduce
from math import lcm

from qgoncarov import _kernels as K
from qgoncarov.errors import PoleError

__all__ = [
    "QPoly", "QRat", "Q", "ONE", "ZERO", "as_qrat",
    "q_integer", "q_factorial", "q_binomial", "q_pochhammer", "specialize",
]


def _frac_str(c):
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _to_ints(coeffs):
    """Split rational coefficients as ``scale * ints`` with ``ints`` primitive."""
    if not coeffs:
        return Fraction(0), ()
    den = reduce(lcm, (c.denominator for c in coeffs), 1)
    ints = tuple(c.numerator * (den // c.denominator) for c in coeffs)
    cont, prim = K.primitive(ints)
    return Fraction(cont, den), prim


class QPoly:
    """Polynomial in ``q`` over Q, immutable."""

    __slots__ = ("_c", "_hash")

    def __init__(self, coeffs=()):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self._c = tuple(cs)
        self._hash = None

    @classmethod
    def _from_ints(cls, scale, ints):
        p = cls.__new__(cls)
        if scale == 0 or not ints:
            p._c = ()
        elif scale.denominator == 1:
            s = scale.numerator
            p._c = tuple(Fraction(s * x) for x in ints)
        else:
            p._c = tuple(scale * x for x in ints)
        p._hash = None
        return p

    @classmethod
    def monomial(cls, k, c=1):
        return cls([0] * k + [c])

    @property
    def coeffs(self):
        return self._c

    @property
    def degree(self):
        return len(self._c) - 1

    def is_zero(self):
        return not self._c

    def lc(self):
        return self._c[-1] if self._c else Fraction(0)

    def _ints(self):
        return _to_ints(self._c)

    def __eq__(self, other):
        if isinstance(other, QPoly):
            return self._c == other._c
        if isinstance(other, (int, Fraction)):
            return self._c == QPoly([other])._c
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            self._hash = hash(("QPoly", self._c))
        return self._hash

    def __bool__(self):
        return bool(self._c)

    def _coerce(self, other):
        if isinstance(other, QPoly):
            return other
        if isinstance(other, (int, Fraction)):
            return QPoly([other])
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self._c), len(o._c))
        a = self._c + (Fraction(0),) * (n - len(self._c))
        b = o._c + (Fraction(0),) * (n - len(o._c))
        return QPoly(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        p = QPoly.__new__(QPoly)
        p._c = tuple(-x for x in self._c)
        p._hash = None
        return p

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        sa, a = self._ints()
        sb, b = o._ints()
        return QPoly._from_ints(sa * sb, K.mul(a, b))

    __rmul__ = __mul__

    def __pow__(self, k):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative int")
        out = QPoly([1])
        base = self
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def exact_div(self, other):
        """Quotient when ``other`` divides ``self`` in Q[q]; ArithmeticError otherwise."""
        sa, a = self._ints()
        sb, b = other._ints()
        if not b:
            raise ZeroDivisionError("division by the zero polynomial")
        # b is primitive, so the quotient of the integer parts is integral (Gauss)
        return QPoly._from_ints(sa / sb, K.divexact(a, b))

    def __call__(self, x):
        acc = Fraction(0)
        for c in reversed(self._c):
            acc = acc * x + c
        return acc

    def __str__(self):
        if not self._c:
            return "0"
        out = []
        for k, c in enumerate(self._c):
            if c == 0:
                continue
            mag = abs(c)
            if k == 0:
                body = _frac_str(mag)
            else:
                qk = "q" if k == 1 else f"q^{k}"
                body = qk if mag == 1 else f"{_frac_str(mag)}*{qk}"
            if out:
                out.append(("-" if c < 0 else "+") + body)
            else:
                out.append(("-" if c < 0 else "") + body)
        return "".join(out)

    def __repr__(self):
        return f"QPoly({str(self)!r})"


class QRat:
    """Element of Q(q) in canonical reduced form."""

    __slots__ = ("_s", "_n", "_d", "_hash")

    def __init__(self, num=0, den=1):
        n = num if isinstance(num, QPoly) else QPoly([num])
        d = den if isinstance(den, QPoly) else QPoly([den])
        if d.is_zero():
            raise ZeroDivisionError("QRat with zero denominator")
        sn, a = n._ints()
        sd, b = d._ints()
        self._set(*_reduce(sn / sd, a, b))

    def _set(self, s, n, d):
        self._s = s
        self._n = n
        self._d = d
        self._hash = None

    @classmethod
    def _raw(cls, s, n, d):
        r = cls.__new__(cls)
        r._s = s
        r._n = n
        r._d = d
        r._hash = None
        return r

    @classmethod
    def _make(cls, s, n, d):
        return cls._raw(*_reduce(s, n, d))

    @property
    def num(self):
        """Numerator as a QPoly, paired with a monic ``den``."""
        return QPoly._from_ints(self._s / self._d[-1], self._n)

    @property
    def den(self):
        return QPoly._from_ints(Fraction(1, self._d[-1]), self._d)

    def is_zero(self):
        return not self._n

    def is_polynomial(self):
        return len(self._d) == 1

    def is_constant(self):
        return len(self._d) == 1 and len(self._n) <= 1

    def as_fraction(self):
        """The rational value of a constant element."""
        if not self.is_constant():
            raise ValueError(f"{self} is not constant in q")
        return self._s * (self._n[0] if self._n else 0)

    def as_qpoly(self):
        if not self.is_polynomial():
            raise ValueError(f"{self} is not a polynomial in q")
        return QPoly._from_ints(self._s, self._n)

    def __bool__(self):
        return bool(self._n)

    def __eq__(self, other):
        if not isinstance(other, QRat):
            other = as_qrat(other, strict=False)
            if other is None:
                return NotImplemented
        return self._s == other._s and self._n == other._n and self._d == other._d

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._s, self._n, self._d))
        return self._hash

    def __neg__(self):
        return QRat._raw(-self._s, self._n, self._d)

    def __add__(self, other):
        o = as_qrat(other, strict=False)
        if o is None:
            return NotImplemented
        if not o._n:
            return self
        if not self._n:
            return o
        s1, s2 = self._s, o._s
        L = lcm(s1.denominator, s2.denominator)
        k1 = s1.numerator * (L // s1.denominator)
        k2 = s2.numerator * (L // s2.denominator)
        d1, d2 = self._d, o._d
        if d1 == d2:
            m = K.add(K.scale(self._n, k1), K.scale(o._n, k2))
            if len(d1) == 1:
                if not m:
                    return ZERO
                c, m = K.primitive(m)
                return QRat._raw(Fraction(c, L), m, d1)
            return QRat._make(Fraction(1, L), m, d1)
        g = K.pgcd(d1, d2)
        e1 = K.divexact(d1, g)
        e2 = K.divexact(d2, g)
        m = K.add(K.mul(K.scale(self._n, k1), e2), K.mul(K.scale(o._n, k2), e1))
        return QRat._make(Fraction(1, L), m, K.mul(K.mul(g, e1), e2))

    __radd__ = __add__

    def __sub__(self, other):
        o = as_qrat(other, strict=False)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = as_qrat(other, strict=False)
        if o is None:
            return NotImplemented
        if not self._n or not o._n:
            return ZERO
        s = self._s * o._s
        n1, d1, n2, d2 = self._n, self._d, o._n, o._d
        if len(d1) == 1 and len(d2) == 1:
            return QRat._raw(s, K.mul(n1, n2), (1,))
        if len(d2) > 1 and len(n1) > 1:
            g = K.pgcd(n1, d2)
            if len(g) > 1:
                n1 = K.divexact(n1, g)
                d2 = K.divexact(d2, g)
        if len(d1) > 1 and len(n2) > 1:
            g = K.pgcd(n2, d1)
            if len(g) > 1:
                n2 = K.divexact(n2, g)
                d1 = K.divexact(d1, g)
        return QRat._raw(s, K.mul(n1, n2), K.mul(d1, d2))

    __rmul__ = __mul__

    def inverse(self):
        if not self._n:
            raise ZeroDivisionError("inverse of zero in Q(q)")
        return QRat._raw(1 / self._s, self._d, self._n)

    def __truediv__(self, other):
        o = as_qrat(other, strict=False)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __rtruediv__(self, other):
        return as_qrat(other) * self.inverse()

    def __pow__(self, k):
        if not isinstance(k, int):
            raise ValueError("exponent must be an int")
        base = self if k >= 0 else self.inverse()
        k = abs(k)
        out = ONE
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def __str__(self):
        if len(self._d) == 1:
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"QRat({str(self)!r})"

    def to_json(self):
        return {
            "num": [_frac_str(c) for c in self.num.coeffs],
            "den": [_frac_str(c) for c in self.den.coeffs],
        }

    @classmethod
    def from_json(cls, obj):
        if isinstance(obj, (int, str)) and not isinstance(obj, bool):
            if isinstance(obj, int):
                return cls(obj)
            from qgoncarov.parse import parse_node_expr
            return parse_node_expr(obj)
        return cls(QPoly(Fraction(c) for c in obj["num"]),
                   QPoly(Fraction(c) for c in obj.get("den", ["1"])))


def _reduce(s, n, d):
    """Canonicalize ``s * n / d`` for arbitrary integer polynomials ``n``, ``d``."""
    if not d:
        raise ZeroDivisionError("zero denominator")
    if not n or s == 0:
        return Fraction(0), (), (1,)
    if len(d) > 1 and len(n) > 1:
        g = K.pgcd(n, d)
        if len(g) > 1:
            n = K.divexact(n, g)
            d = K.divexact(d, g)
    cn, n = K.primitive(n)
    cd, d = K.primitive(d)
    return s * Fraction(cn, cd), n, d


def as_qrat(x, strict=True):
    if isinstance(x, QRat):
        return x
    if isinstance(x, bool):
        x = int(x)
    if isinstance(x, int):
        if x == 0:
            return ZERO
        return QRat._raw(Fraction(x), (1,), (1,))
    if isinstance(x, Fraction):
        if x == 0:
            return ZERO
        return QRat._raw(x, (1,), (1,))
    if isinstance(x, QPoly):
        s, n = x._ints()
        if not n:
            return ZERO
        return QRat._raw(s, n, (1,))
    if strict:
        raise TypeError(f"cannot interpret {x!r} as an element of Q(q)")
    return None


ZERO = QRat._raw(Fraction(0), (), (1,))
ONE = QRat._raw(Fraction(1), (1,), (1,))
Q = QRat._raw(Fraction(1), (0, 1), (1,))


@lru_cache(maxsize=None)
def q_integer(n):
    """``[n]_q = 1 + q + ... + q^(n-1)``; zero for ``n = 0``."""
    if n < 0:
        raise ValueError("q_integer needs n >= 0")
    return QPoly([1] * n)


@lru_cache(maxsize=None)
def q_factorial(n):
    if n < 0:
        raise ValueError("q_factorial needs n >= 0")
    if n == 0:
        return QPoly([1])
    return q_factorial(n - 1) * q_integer(n)


@lru_cache(maxsize=None)
def q_binomial(n, k):
    """Gaussian binomial coefficient, computed as an exact quotient of q-factorials."""
    if n < 0:
        raise ValueError("q_binomial needs n >= 0")
    if k < 0 or k > n:
        return QPoly()
    k = min(k, n - k)
    num = QPoly([1])
    for i in range(n - k + 1, n + 1):
        num = num * q_integer(i)
    return num.exact_div(q_factorial(k))


def q_pochhammer(a, n):
    """``(a; q)_n = prod_{k<n} (1 - a q^k)``."""
    if n < 0:
        raise ValueError("q_pochhammer needs n >= 0")
    a = as_qrat(a)
    out = ONE
    qk = ONE
    for _ in range(n):
        out = out * (ONE - a * qk)
        qk = qk * Q
    return out


def specialize(r, q0):
    """Evaluate ``r`` exactly at the rational point ``q = q0``."""
    r = as_qrat(r)
    q0 = Fraction(q0)
    num, den = q0.numerator, q0.denominator
    dv = K.horner_frac(r._d, num, den)
    if dv == 0:
        raise PoleError(f"denominator {r.den} vanishes at q = {q0}")
    nv = K.horner_frac(r._n, num, den)
    shift = (len(r._d) - 1) - (len(r._n) - 1)
    val = r._s * Fraction(nv, dv)
    if shift >= 0:
        return val * Fraction(den) ** shift
    return val / Fraction(den) ** (-shift)
