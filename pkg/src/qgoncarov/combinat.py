"""Compositions, constant terms of q-Goncarov polynomials, and q-Fubini numbers.

The ordered partitions of ``[n]`` whose blocks are consecutive intervals are
in bijection with compositions of ``n``; a composition ``(b_1, ..., b_k)``
has partial sums ``s_i = b_1 + ... + b_i``.  Its weight in the constant-term
formula is ``(-1)^k prod_i [s_i, b_i]_q p_{b_i}(z_{n - s_i})``.
"""

from dataclasses import dataclass
from functools import lru_cache
from itertools import accumulate
from math import comb

from qgoncarov.goncarov import basis_for
from qgoncarov.qfield import ONE, ZERO, QPoly, as_qrat, q_binomial, specialize
from qgoncarov.xpoly import evaluate

__all__ = [
    "Composition", "compositions", "composition_sum", "constant_term_formula",
    "constant_term_recurrence", "q_fubini", "q_fubini_compositions",
    "classical_fubini", "fubini_table",
]


@dataclass(frozen=True)
class Composition:
    blocks: tuple

    def __post_init__(self):
        if any(b < 1 for b in self.blocks):
            raise ValueError(f"composition blocks must be positive: {self.blocks}")

    @property
    def n(self):
        return sum(self.blocks)

    @property
    def partial_sums(self):
        """``(s_0, s_1, ..., s_k)`` with ``s_0 = 0``."""
        return (0,) + tuple(accumulate(self.blocks))

    def __len__(self):
        return len(self.blocks)


@lru_cache(maxsize=None)
def _compositions(n):
    if n == 0:
        return ((),)
    out = []
    for first in range(1, n + 1):
        out.extend((first,) + rest for rest in _compositions(n - first))
    return tuple(out)


def compositions(n):
    """All compositions of ``n`` in lexicographic order of their block sequences."""
    if n < 0:
        raise ValueError("n must be >= 0")
    return [Composition(c) for c in _compositions(n)]


def composition_sum(n, weight):
    """``sum_rho (-1)^k prod_i [s_i, b_i]_q weight(b_i, n - s_i)`` over compositions of ``n``.

    ``weight(b, j)`` stands for ``p_b(z_j)``.
    """
    total = ZERO
    for rho in compositions(n):
        s = rho.partial_sums
        term = ONE if len(rho) % 2 == 0 else -ONE
        for i, b in enumerate(rho.blocks, start=1):
            term = term * q_binomial(s[i], b) * weight(b, n - s[i])
        total = total + term
    return total


def constant_term_formula(op, grid, n):
    """``t_n(0)`` as a signed sum over compositions of ``n``; ``n = 0`` is the empty composition."""
    if n < 0:
        raise ValueError("n must be >= 0")
    grid.require(n)
    b = basis_for(op, grid)
    return composition_sum(n, b.pz)


def constant_term_recurrence(op, grid, n):
    """``t_n(0) = -sum_{i<n} [n, i]_q p_{n-i}(z_i) t_i(0)`` by dynamic programming."""
    grid.require(n)
    vals = [ONE]
    pz = _node_values(op, grid)
    for m in range(1, n + 1):
        acc = ZERO
        for i in range(m):
            acc = acc + vals[i] * pz(m - i, i) * q_binomial(m, i)
        vals.append(-acc)
    return vals[n]


def _node_values(op, grid):
    cache = {}

    def pz(k, i):
        v = cache.get((k, i))
        if v is None:
            v = cache[(k, i)] = evaluate(op.basis[k], grid[i])
        return v

    return pz


@lru_cache(maxsize=None)
def q_fubini(n):
    """q-Fubini number from ``f_n = sum_{k<n} [n, k]_q f_k`` with ``f_0 = 1``."""
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return QPoly([1])
    acc = QPoly()
    for k in range(n):
        acc = acc + q_binomial(n, k) * q_fubini(k)
    return acc


def q_fubini_compositions(n):
    """q-Fubini number as the composition sum with every ``p_b(z_j)`` replaced by -1."""
    if n == 0:
        return QPoly([1])
    minus_one = as_qrat(-1)
    return composition_sum(n, lambda b, j: minus_one).as_qpoly()


@lru_cache(maxsize=None)
def classical_fubini(n):
    """Ordered Bell number ``a_n = sum_{k<n} C(n, k) a_k``."""
    if n == 0:
        return 1
    return sum(comb(n, k) * classical_fubini(k) for k in range(n))


def fubini_table(n_max, q_at=None):
    """Rows ``(n, f_q, f_1, f_at, agree, f_q_compositions)``; ``f_at`` is None without ``q_at``."""
    rows = []
    for n in range(n_max + 1):
        f = q_fubini(n)
        g = q_fubini_compositions(n)
        at = specialize(f, q_at) if q_at is not None else None
        rows.append((n, f, specialize(f, 1), at, f == g, g))
    return rows
