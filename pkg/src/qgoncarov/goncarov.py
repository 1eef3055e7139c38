"""Generalized q-Goncarov bases, interpolation and identity checkers.

For an operator with basic sequence ``p_n`` and a grid ``z_0, z_1, ...`` the
basis is built by the triangular recurrence

    t_n = p_n - sum_{i<n} [n, i]_q p_{n-i}(z_i) t_i

and is characterized by ``eval_{z_i}(D^i t_n) = [n]_q! delta_{i,n}``.  The
basis of a shifted grid ``z_{i+j}`` is an independent basis object; the
differential relation linking it to the original is one of the checkers.
"""

import random
import threading
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from qgoncarov.errors import GridTooShortError
from qgoncarov.operators import delta_apply, delta_power_apply
from qgoncarov.qfield import ONE, Q, ZERO, QPoly, as_qrat, q_binomial, q_factorial, q_integer, q_pochhammer
from qgoncarov.xpoly import XPoly, evaluate, from_basis

__all__ = [
    "Grid", "GoncarovBasis", "basis_for",
    "goncarov_poly", "shifted_basis",
    "check_defg", "check_dt", "check_bino", "check_cascade", "check_zero_grid",
    "verify_biorthogonality", "interpolation_data", "interpolate", "expand_in_goncarov",
    "random_rational_grid", "random_qpoly_grid", "seeded_grids",
    "SymbolicTerm", "goncarov_terms",
]


class Grid:
    """Finite prefix ``z_0 .. z_{N-1}`` of an interpolation grid over Q(q)."""

    __slots__ = ("nodes", "offset")

    def __init__(self, nodes, offset=0):
        self.nodes = tuple(as_qrat(z) for z in nodes)
        self.offset = offset

    @classmethod
    def zero(cls, length):
        return cls([ZERO] * length)

    @classmethod
    def constant(cls, z, length):
        return cls([z] * length)

    def __len__(self):
        return len(self.nodes)

    def __getitem__(self, i):
        if i < 0 or i >= len(self.nodes):
            raise GridTooShortError(i + self.offset, len(self.nodes) + self.offset)
        return self.nodes[i]

    def require(self, n):
        """Raise unless nodes ``z_0 .. z_{n-1}`` exist."""
        if n > len(self.nodes):
            raise GridTooShortError(n - 1 + self.offset, len(self.nodes) + self.offset)

    def shift(self, j):
        """Grid whose i-th node is ``z_{i+j}``."""
        return Grid(self.nodes[j:], self.offset + j)

    def __eq__(self, other):
        return isinstance(other, Grid) and self.nodes == other.nodes

    def __hash__(self):
        return hash(self.nodes)

    def __repr__(self):
        return "Grid([" + ", ".join(str(z) for z in self.nodes) + "])"


class GoncarovBasis:
    """Memoized ``t_0, t_1, ...`` for one (operator, grid) pair."""

    def __init__(self, op, grid):
        self.op = op
        self.grid = grid
        self._t = [XPoly([ONE])]
        self._pz = {}
        self._shifted = {}
        self._lock = threading.RLock()

    def p(self, n):
        return self.op.basis[n]

    def pz(self, k, i):
        """``p_k(z_i)``, cached."""
        key = (k, i)
        v = self._pz.get(key)
        if v is None:
            v = evaluate(self.op.basis[k], self.grid[i])
            self._pz[key] = v
        return v

    def t(self, n):
        if n < len(self._t):
            return self._t[n]
        self.grid.require(n)
        with self._lock:
            while len(self._t) <= n:
                m = len(self._t)
                acc = self.op.basis[m]
                for i in range(m):
                    c = self.pz(m - i, i)
                    if c:
                        acc = acc - self._t[i].scale(c * q_binomial(m, i))
                self._t.append(acc)
        return self._t[n]

    def __getitem__(self, n):
        return self.t(n)

    def shifted(self, j):
        if j == 0:
            return self
        with self._lock:
            b = self._shifted.get(j)
            if b is None:
                b = GoncarovBasis(self.op, self.grid.shift(j))
                self._shifted[j] = b
        return b


@lru_cache(maxsize=128)
def basis_for(op, grid):
    """Shared basis object for ``(op, grid)``; operators hash by identity."""
    return GoncarovBasis(op, grid)


def goncarov_poly(op, grid, n):
    return basis_for(op, grid).t(n)


def shifted_basis(op, grid, j, n):
    """``t_n`` of the grid shifted by ``j``."""
    grid.require(n + j)
    return basis_for(op, grid).shifted(j).t(n)


def _falling_qfactorial(n, j):
    """``[n]_q! / [n-j]_q!`` as a QRat."""
    out = ONE
    for k in range(n - j + 1, n + 1):
        out = out * q_integer(k)
    return out


def check_defg(op, grid, n, j):
    """``D^j t_n == ((q^(n-j+1); q)_j / (1-q)^j) * t^{(j)}_{n-j}``."""
    b = basis_for(op, grid)
    grid.require(n)
    scalar = q_pochhammer(Q ** (n - j + 1), j) / (ONE - Q) ** j
    if scalar != _falling_qfactorial(n, j):
        return False
    lhs = delta_power_apply(op, j, b.t(n))
    rhs = b.shifted(j).t(n - j).scale(scalar)
    return lhs == rhs


def dt_sides(op, grid, n):
    b = basis_for(op, grid)
    grid.require(n)
    rhs = XPoly()
    for i in range(n + 1):
        c = b.pz(n - i, i) if i < n else ONE
        if c:
            rhs = rhs + b.t(i).scale(c * q_binomial(n, i))
    return b.p(n), rhs


def check_dt(op, grid, n):
    """``p_n == sum_i [n, i]_q p_{n-i}(z_i) t_i``."""
    lhs, rhs = dt_sides(op, grid, n)
    return lhs == rhs


def _binomial_expansion(b, n, xi):
    # R_n(x; xi) = sum_i [n, i]_q t^{(i)}_{n-i}(xi) p_i(x)
    acc = XPoly()
    for i in range(n + 1):
        c = evaluate(b.shifted(i).t(n - i), xi)
        if c:
            acc = acc + b.p(i).scale(c * q_binomial(n, i))
    return acc


def bino_sides(op, grid, n):
    b = basis_for(op, grid)
    grid.require(n)
    return b.t(n), _binomial_expansion(b, n, ZERO)


def check_bino(op, grid, n):
    """``t_n == sum_i [n, i]_q t^{(i)}_{n-i}(0) p_i``."""
    lhs, rhs = bino_sides(op, grid, n)
    return lhs == rhs


def check_cascade(op, grid, n, xi):
    """Characterize the binomial expansion at a general point ``xi``.

    With ``R_n(x; xi)`` as in ``check_bino`` but evaluated at ``xi``, checks
    ``D R_n = [n]_q R'_{n-1}`` where ``R'`` uses the grid shifted by one, and
    ``R_n(0; xi) == t_n(xi)``.
    """
    b = basis_for(op, grid)
    grid.require(n)
    xi = as_qrat(xi)
    r = _binomial_expansion(b, n, xi)
    if evaluate(r, ZERO) != evaluate(b.t(n), xi):
        return False
    if n == 0:
        return delta_apply(op, r).is_zero()
    r1 = _binomial_expansion(b.shifted(1), n - 1, xi)
    return delta_apply(op, r) == r1.scale(q_integer(n))


def check_zero_grid(op, n):
    """With the all-zero grid the basis is the basic sequence."""
    return goncarov_poly(op, Grid.zero(n), n) == op.basis[n]


def verify_biorthogonality(op, grid, N):
    """Matrix ``M[i][n] = eval_{z_i}(D^i t_n)`` for ``0 <= i, n <= N``."""
    b = basis_for(op, grid)
    grid.require(N)
    m = [[ZERO] * (N + 1) for _ in range(N + 1)]
    for n in range(N + 1):
        f = b.t(n)
        for i in range(N + 1):
            if f.is_zero():
                break
            # constants need no node, so z_N is never required
            m[i][n] = f.coeff(0) if f.degree == 0 else evaluate(f, grid[i])
            f = delta_apply(op, f)
    return m


def interpolation_data(op, grid, f, n=None):
    """Forward functionals ``b_i = eval_{z_i}(D^i f)`` for ``i <= n`` (default ``deg f``)."""
    if n is None:
        n = max(f.degree, 0)
    grid.require(n + 1)
    out = []
    for i in range(n + 1):
        out.append(evaluate(f, grid[i]) if f else ZERO)
        f = delta_apply(op, f)
    return out


def interpolate(op, grid, b):
    """The unique polynomial of degree ``<= len(b) - 1`` with ``eval_{z_i}(D^i f) = b_i``."""
    b = [as_qrat(v) for v in b]
    if not b:
        raise ValueError("need at least one interpolation value")
    if len(b) > len(grid):
        raise ValueError(f"{len(b)} values but only {len(grid)} grid nodes")
    basis = basis_for(op, grid)
    acc = XPoly()
    for i, v in enumerate(b):
        if v:
            acc = acc + basis.t(i).scale(v / q_factorial(i))
    return acc


def expand_in_goncarov(f, basis):
    """Coefficients of ``f`` in ``basis``: ``eval_{z_i}(D^i f) / [i]_q!``."""
    if f.is_zero():
        return []
    data = interpolation_data(basis.op, basis.grid, f)
    return [v / q_factorial(i) for i, v in enumerate(data)]


def reconstruct(coeffs, basis):
    return from_basis(coeffs, basis)


def random_qrat_small(rng):
    return as_qrat(Fraction(rng.randint(-5, 5), rng.randint(1, 4)))


def random_qpoly_node(rng):
    return as_qrat(QPoly([Fraction(rng.randint(-5, 5), rng.randint(1, 4)) for _ in range(rng.randint(1, 3))]))


def random_rational_grid(seed, length):
    rng = random.Random(seed)
    return Grid([random_qrat_small(rng) for _ in range(length)])


def random_qpoly_grid(seed, length):
    rng = random.Random(seed)
    return Grid([random_qpoly_node(rng) for _ in range(length)])


def seeded_grids(seed, length):
    """The standard three test grids: rational nodes, q-polynomial nodes, and a mix."""
    rng = random.Random(seed * 7919 + 3)
    mixed = Grid([random_qrat_small(rng) if k % 2 else random_qpoly_node(rng) for k in range(length)])
    return [
        random_rational_grid(seed, length),
        random_qpoly_grid(seed + 1, length),
        mixed,
    ]


@dataclass(frozen=True)
class SymbolicTerm:
    """One term of ``t_n`` written over generic basic polynomials.

    The term is ``sign * prod([hi, lo]_q for hi, lo in binomials) *
    prod(p_k(z_j) for k, j in nodes) * p_degree(x)``.
    """
    sign: int
    binomials: tuple
    nodes: tuple
    degree: int

    def value(self, basis, x):
        """Evaluate against a concrete GoncarovBasis at the point ``x``."""
        v = as_qrat(self.sign)
        for hi, lo in self.binomials:
            v = v * q_binomial(hi, lo)
        for k, j in self.nodes:
            v = v * basis.pz(k, j)
        return v * evaluate(basis.p(self.degree), x)


@lru_cache(maxsize=None)
def goncarov_terms(n):
    """Expansion of ``t_n`` by unrolling the recurrence symbolically."""
    terms = [SymbolicTerm(1, (), (), n)]
    for i in range(n):
        for t in goncarov_terms(i):
            binom = t.binomials if i == 0 else ((n, i),) + t.binomials
            terms.append(SymbolicTerm(-t.sign, binom, ((n - i, i),) + t.nodes, t.degree))
    return tuple(terms)
