import threading
from fractions import Fraction

import pytest

from qgoncarov import ONE, Q, ZERO, X, XPoly, GridTooShortError
from qgoncarov.goncarov import (
    Grid, GoncarovBasis, basis_for, check_bino, check_cascade, check_defg, check_dt,
    check_zero_grid, expand_in_goncarov, goncarov_poly, goncarov_terms, interpolate,
    interpolation_data, reconstruct, seeded_grids, shifted_basis, verify_biorthogonality,
)
from qgoncarov.operators import DeltaOperator, delta_power_apply, monomial_sequence
from qgoncarov.qfield import as_qrat, q_binomial, q_factorial, q_integer
from qgoncarov.xpoly import evaluate, random_xpoly

MONO = DeltaOperator(monomial_sequence())
NAT = Grid([as_qrat(k) for k in range(12)])


def test_small_examples(families, grids):
    assert goncarov_poly(MONO, NAT, 2) == X * X - X.scale(ONE + Q)
    assert goncarov_poly(MONO, NAT, 0) == XPoly([ONE])
    for op in families:
        g = grids[1]
        assert goncarov_poly(op, g, 1) == op.basis[1] - evaluate(op.basis[1], g[0])


def test_short_grid_names_index():
    with pytest.raises(GridTooShortError, match="z_2"):
        goncarov_poly(MONO, Grid([ZERO, ONE]), 3)


def test_shifted_examples():
    assert shifted_basis(MONO, NAT, 1, 1) == X - 1
    assert shifted_basis(MONO, NAT, 0, 3) == goncarov_poly(MONO, NAT, 3)
    assert shifted_basis(MONO, NAT, 4, 0) == XPoly([ONE])
    b = basis_for(MONO, NAT).shifted(2)
    assert b.grid.nodes == NAT.nodes[2:]


def test_vanishes_at_first_node(families, grids):
    for op in families:
        for g in grids:
            b = basis_for(op, g)
            assert evaluate(b.t(0), g[0]) == ONE
            for n in range(1, 9):
                assert evaluate(b.t(n), g[0]) == ZERO


def test_degree_and_leading_coefficient(families, grids):
    for op in families:
        for g in grids:
            for n in range(11):
                t = goncarov_poly(op, g, n)
                assert t.degree == n and t.lc() == op.basis[n].lc()


@pytest.mark.parametrize("n", range(11))
def test_zero_grid(families, n):
    for op in families:
        assert check_zero_grid(op, n)


def test_identities(families, grids):
    for op in families:
        for g in grids:
            for n in range(7):
                assert check_dt(op, g, n)
                assert check_bino(op, g, n)
                assert check_cascade(op, g, n, Q - Fraction(1, 3))
                for j in range(n + 1):
                    assert check_defg(op, g, n, j)


def test_defg_example():
    assert check_defg(MONO, NAT, 2, 1)
    t2 = goncarov_poly(MONO, NAT, 2)
    assert delta_power_apply(MONO, 2, t2) == XPoly([q_factorial(2)])


def test_bino_n2_by_hand(families, grids):
    for op in families:
        g = grids[0]
        b = basis_for(op, g)
        t1s0 = evaluate(b.shifted(1).t(1), ZERO)
        assert t1s0 == -b.pz(1, 1)
        rhs = b.p(2) + b.p(1).scale(q_integer(2) * t1s0) + evaluate(b.t(2), ZERO)
        assert b.t(2) == rhs


@pytest.mark.parametrize("n", range(7))
def test_bino_constant_grid(families, n):
    g = Grid.constant(Q + Fraction(2, 3), 8)
    for op in families:
        assert check_bino(op, g, n)
        assert basis_for(op, g).shifted(3).grid == Grid.constant(Q + Fraction(2, 3), 5)


def test_biorthogonality(families, grids):
    for op in families:
        for g in grids:
            m = verify_biorthogonality(op, g, 6)
            assert m[0][0] == ONE
            for i in range(7):
                for n in range(7):
                    assert m[i][n] == (q_factorial(n) if i == n else ZERO)


def test_interpolation_examples():
    assert interpolate(MONO, NAT, [ONE]) == XPoly([ONE])
    assert interpolate(MONO, NAT, [ZERO, ZERO, ONE + Q]) == goncarov_poly(MONO, NAT, 2)
    with pytest.raises(ValueError):
        interpolate(MONO, Grid([ZERO]), [ONE, ONE])


def test_interpolation_round_trip(families, grids, rng):
    for op in families:
        for g in grids:
            for _ in range(4):
                f = random_xpoly(rng, rng.randint(0, 6))
                b = interpolation_data(op, g, f)
                assert interpolate(op, g, b) == f


def test_expand_in_goncarov(families, grids):
    for op in families:
        b = basis_for(op, grids[2])
        assert expand_in_goncarov(b.t(3), b) == [ZERO, ZERO, ZERO, ONE]
        assert expand_in_goncarov(XPoly(), b) == []
        n = 5
        coeffs = expand_in_goncarov(b.p(n), b)
        want = [q_binomial(n, i) * b.pz(n - i, i) for i in range(n)] + [ONE]
        assert coeffs == want
        assert reconstruct(coeffs, b) == b.p(n)


def test_symbolic_terms_match_numeric(families, grids):
    x = Q * Q - 2
    for op in families:
        for g in grids:
            b = basis_for(op, g)
            for n in range(6):
                total = ZERO
                for term in goncarov_terms(n):
                    total = total + term.value(b, x)
                assert total == evaluate(b.t(n), x)
    assert len(goncarov_terms(3)) == 8
    assert [len(goncarov_terms(n)) for n in range(6)] == [1, 2, 4, 8, 16, 32]


def test_threaded_builds_agree():
    g = seeded_grids(3, 10)[1]
    b = GoncarovBasis(MONO, g)
    out = [None] * 4

    def work(k):
        out[k] = b.t(8)

    threads = [threading.Thread(target=work, args=(k,)) for k in range(4)]
    for t in threads:
        t.start()
    for t in threads:
        t.join()
    assert all(o == out[0] for o in out)
    assert out[0] == GoncarovBasis(MONO, g).t(8)
