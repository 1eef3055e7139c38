"""q-delta operators represented by their basic polynomial sequences.

An operator is known only through its basic sequence ``p_0, p_1, ...``: it
acts on a polynomial by expanding it in that basis and sending ``p_n`` to
``[n]_q p_{n-1}``.
"""

import json
import threading
from dataclasses import dataclass, field

from qgoncarov.errors import BasisError
from qgoncarov.qfield import ONE, Q, ZERO, as_qrat, q_binomial, q_integer, q_pochhammer
from qgoncarov.xpoly import X, XPoly, change_of_basis, evaluate

__all__ = [
    "BasicSequence", "DeltaOperator", "BivariateExpansion",
    "monomial_basic", "hahn_basic", "monomial_sequence", "hahn_sequence",
    "custom_sequence", "load_custom_sequence",
    "delta_apply", "delta_power_apply", "hahn_apply_direct",
    "g_tilde", "q_hermite", "oplus_expand", "operator_from_spec",
]


def monomial_basic(n):
    return XPoly.monomial(n)


def hahn_basic(h, n):
    """Shifted q-factorial ``x (x - h[1]_q) ... (x - h[n-1]_q)``."""
    h = as_qrat(h)
    out = XPoly([ONE])
    for k in range(n):
        out = out * (X - h * q_integer(k))
    return out


class BasicSequence:
    """Memoized basic sequence; elements are checked against the axioms as they are built.

    The axioms are ``p_0 = 1``, ``deg p_n = n`` and ``p_n(0) = 0`` for ``n >= 1``.
    ``length`` is ``None`` for generated families and the list length for
    user-supplied sequences.
    """

    def __init__(self, family, generator, h=None, length=None):
        self.family = family
        self.h = h
        self.length = length
        self._gen = generator
        self._memo = {}
        self._lock = threading.Lock()

    def __getitem__(self, n):
        p = self._memo.get(n)
        if p is not None:
            return p
        if n < 0 or (self.length is not None and n >= self.length):
            raise BasisError(f"basic sequence {self.name} has no element p_{n}")
        with self._lock:
            p = self._memo.get(n)
            if p is None:
                p = self._gen(n)
                _check_axioms(p, n)
                self._memo[n] = p
        return p

    @property
    def name(self):
        if self.family == "hahn":
            return f"hahn(h={self.h})"
        return self.family

    def __repr__(self):
        return f"BasicSequence({self.name})"


def _check_axioms(p, n):
    if p.degree != n:
        raise BasisError(f"p_{n} has degree {p.degree}, expected {n}")
    if n == 0 and p != XPoly([ONE]):
        raise BasisError(f"p_0 must be 1, got {p}")
    if n >= 1 and p.coeff(0):
        raise BasisError(f"p_{n}(0) = {p.coeff(0)} is not zero")


def monomial_sequence():
    return BasicSequence("monomial", monomial_basic)


def hahn_sequence(h):
    h = as_qrat(h)
    return BasicSequence("hahn", lambda n: hahn_basic(h, n), h=h)


def custom_sequence(polys):
    polys = [p if isinstance(p, XPoly) else XPoly.from_json(p) for p in polys]
    seq = BasicSequence("custom", lambda n: polys[n], length=len(polys))
    for n in range(len(polys)):
        seq[n]
    return seq


def load_custom_sequence(path):
    with open(path) as fh:
        data = json.load(fh)
    if not isinstance(data, list):
        raise BasisError(f"{path}: expected a JSON list of polynomials")
    return custom_sequence(data)


@dataclass(frozen=True, eq=False)
class DeltaOperator:
    basis: BasicSequence

    def __call__(self, f):
        return delta_apply(self, f)

    @property
    def name(self):
        return self.basis.name


def delta_apply(op, f):
    if f.degree < 1:
        return XPoly()
    basis = op.basis
    cs = change_of_basis(f, basis)
    acc = XPoly()
    for n in range(1, len(cs)):
        if cs[n]:
            acc = acc + basis[n - 1].scale(cs[n] * q_integer(n))
    return acc


def delta_power_apply(op, j, f):
    if j < 0:
        raise ValueError("j must be >= 0")
    for _ in range(j):
        if f.is_zero():
            break
        f = delta_apply(op, f)
    return f


def hahn_apply_direct(h, f):
    """``(f(qx + h) - f(x)) / ((q - 1) x + h)`` by substitution and exact division."""
    h = as_qrat(h)
    num = f.compose(X.scale(Q) + h) - f
    den = XPoly([h, Q - ONE])
    return num.exact_div(den)


def g_tilde(basis, n):
    """Return ``(g~_n, flag)`` where ``flag`` records ``g~_n(0) == 0`` (vacuous for n = 0)."""
    qq = q_pochhammer(Q, n)
    acc = XPoly()
    for k in range(n // 2 + 1):
        w = qq * Q ** k / (q_pochhammer(Q ** 2, k) * q_pochhammer(Q, n - 2 * k))
        acc = acc + basis[n - 2 * k].scale(w)
    flag = True if n == 0 else not evaluate(acc, ZERO)
    return acc, flag


def q_hermite(n):
    """Continuous q-Hermite polynomial ``H_n(x|q)`` from its three-term recurrence."""
    prev, cur = XPoly([ONE]), XPoly([ZERO, as_qrat(2)])
    if n == 0:
        return prev
    for k in range(1, n):
        prev, cur = cur, cur * XPoly([ZERO, as_qrat(2)]) - prev.scale(ONE - Q ** k)
    return cur


@dataclass(frozen=True)
class BivariateExpansion:
    """``sum(coeff * p_m(y) * p_k(x))`` over ``terms = [(m, k, coeff), ...]``."""
    basis: BasicSequence = field(compare=False)
    n: int
    terms: tuple

    def translate(self, xi):
        """Substitute ``y = xi`` and return the resulting polynomial in x."""
        xi = as_qrat(xi)
        acc = XPoly()
        for m, k, c in self.terms:
            acc = acc + self.basis[k].scale(c * evaluate(self.basis[m], xi))
        return acc


def oplus_expand(basis, n):
    terms = []
    for m in range(n + 1):
        for j in range((n - m) // 2 + 1):
            c = as_qrat(q_binomial(n, m) * q_binomial(n - m, 2 * j))
            c = c * _qq2(j) * Q ** j
            terms.append((m, n - m - 2 * j, c))
    return BivariateExpansion(basis, n, tuple(terms))


def _qq2(j):
    # (q; q^2)_j
    out = ONE
    for i in range(j):
        out = out * (ONE - Q ** (2 * i + 1))
    return out


def operator_from_spec(spec):
    """Build an operator from ``monomial``, ``hahn:h=<expr>`` or ``custom:<path>``."""
    from qgoncarov.parse import parse_node_expr

    spec = spec.strip()
    if spec == "monomial":
        return DeltaOperator(monomial_sequence())
    if spec.startswith("hahn"):
        rest = spec[4:]
        if not rest:
            return DeltaOperator(hahn_sequence(ONE))
        if not rest.startswith(":h="):
            raise ValueError(f"bad operator spec {spec!r}; expected hahn:h=<expr>")
        return DeltaOperator(hahn_sequence(parse_node_expr(rest[3:])))
    if spec.startswith("custom:"):
        return DeltaOperator(load_custom_sequence(spec[len("custom:"):]))
    raise ValueError(f"unknown operator spec {spec!r}")
