import json
import random
from fractions import Fraction

import pytest

from qgoncarov import (
    ONE, Q, ZERO, BasisError, DeltaOperator, X, XPoly, delta_apply, delta_power_apply,
    g_tilde, hahn_apply_direct, hahn_basic, hahn_sequence, monomial_basic, monomial_sequence,
    oplus_expand, q_hermite, InconsistencyError,
)
from qgoncarov.operators import custom_sequence, load_custom_sequence, operator_from_spec
from qgoncarov.qfield import as_qrat, q_binomial, q_factorial, q_integer
from qgoncarov.xpoly import random_xpoly

H_VALUES = [ZERO, ONE, as_qrat(2), as_qrat(Fraction(1, 2))]


def falling(n, j):
    return q_factorial(n).exact_div(q_factorial(n - j))


def test_hahn_basic_examples():
    assert hahn_basic(1, 2) == X * X - X
    assert hahn_basic(1, 3) == X * (X - 1) * (X - (ONE + Q))
    for k in range(6):
        assert hahn_basic(0, k) == XPoly.monomial(k)


def test_monomial_basic():
    assert monomial_basic(0) == XPoly([ONE])
    assert monomial_basic(1) == X
    assert monomial_basic(5) == X**5
    for n in range(11):
        assert monomial_basic(n) == hahn_basic(0, n)


def test_delta_examples():
    mono = DeltaOperator(monomial_sequence())
    assert delta_apply(mono, X * X) == X.scale(ONE + Q)
    h = Q**2 - 3
    hahn = DeltaOperator(hahn_sequence(h))
    assert delta_apply(hahn, X * X) == X.scale(ONE + Q) + h
    for op in (mono, hahn):
        assert delta_apply(op, XPoly([as_qrat(7)])).is_zero()


@pytest.mark.parametrize("seq", [monomial_sequence(), hahn_sequence(ONE), hahn_sequence(Q)],
                         ids=["monomial", "hahn1", "hahnq"])
def test_delta_on_basis(seq):
    op = DeltaOperator(seq)
    for n in range(1, 11):
        assert delta_apply(op, seq[n]) == seq[n - 1].scale(q_integer(n))


def test_delta_power_matches_closed_form():
    op = DeltaOperator(hahn_sequence(ONE))
    for n in range(7):
        for j in range(n + 2):
            got = delta_power_apply(op, j, op.basis[n])
            expect = op.basis[n - j].scale(falling(n, j)) if j <= n else XPoly()
            assert got == expect
    assert delta_power_apply(op, 0, X * X) == X * X
    mono = DeltaOperator(monomial_sequence())
    assert delta_power_apply(mono, 2, X * X) == XPoly([ONE + Q])


def test_degree_drops_by_one(families, rng):
    for op in families:
        for _ in range(10):
            f = random_xpoly(rng, rng.randint(1, 7))
            assert delta_apply(op, f).degree == f.degree - 1


def test_hahn_direct_examples():
    h = Q + Fraction(1, 3)
    assert hahn_apply_direct(h, X * X) == X.scale(ONE + Q) + h
    assert hahn_apply_direct(h, X) == XPoly([ONE])
    assert hahn_apply_direct(h, XPoly([ONE])).is_zero()


def test_hahn_direct_equals_basis_route():
    rng = random.Random(11)
    for h in H_VALUES:
        op = DeltaOperator(hahn_sequence(h))
        for _ in range(8):
            f = random_xpoly(rng, rng.randint(0, 8))
            assert delta_apply(op, f) == hahn_apply_direct(h, f)


def test_inexact_division_is_loud():
    with pytest.raises(InconsistencyError):
        (X * X + 1).exact_div(XPoly([ONE, ONE]))


def test_g_tilde():
    mono = monomial_sequence()
    g1, ok1 = g_tilde(mono, 1)
    assert g1 == mono[1] and ok1
    g2, ok2 = g_tilde(mono, 2)
    assert g2 == X * X + Q * (ONE - Q) and not ok2
    g0, ok0 = g_tilde(mono, 0)
    assert g0 == XPoly([ONE]) and ok0


def test_q_hermite():
    assert q_hermite(0) == XPoly([ONE])
    assert q_hermite(1) == X.scale(2)
    assert q_hermite(2) == (X * X).scale(4) - (ONE - Q)
    for n in range(2, 7):
        rhs = X.scale(2) * q_hermite(n) - q_hermite(n - 1).scale(ONE - Q**n)
        assert q_hermite(n + 1) == rhs


def test_oplus_expand_examples():
    seq = monomial_sequence()
    assert oplus_expand(seq, 0).terms == ((0, 0, ONE),)
    assert sorted(oplus_expand(seq, 1).terms, key=lambda t: t[:2]) == [(0, 1, ONE), (1, 0, ONE)]
    t2 = {(m, k): c for m, k, c in oplus_expand(seq, 2).terms}
    assert t2 == {(0, 2): ONE, (1, 1): ONE + Q, (2, 0): ONE, (0, 0): (ONE - Q) * Q}


def test_oplus_expand_degree_bound():
    seq = hahn_sequence(ONE)
    for n in range(9):
        keys = set()
        for m, k, c in oplus_expand(seq, n).terms:
            assert m + k <= n and (m, k) not in keys
            keys.add((m, k))
            j2 = n - m - k
            assert j2 % 2 == 0
            if j2 == 0:
                assert c == as_qrat(q_binomial(n, m))


def test_translate_substitutes_y():
    seq = monomial_sequence()
    e = oplus_expand(seq, 2)
    xi = Q + 1
    expect = X * X + X.scale((ONE + Q) * xi) + xi * xi + (ONE - Q) * Q
    assert e.translate(xi) == expect


def test_custom_sequence_validation(tmp_path):
    good = [XPoly([ONE]), X.scale(2), X * X - X]
    seq = custom_sequence(good)
    assert seq[2] == X * X - X
    with pytest.raises(BasisError):
        seq[3]
    with pytest.raises(BasisError):
        custom_sequence([XPoly([ONE]), X + 1])
    with pytest.raises(BasisError):
        custom_sequence([XPoly([ONE]), X * X])
    with pytest.raises(BasisError):
        custom_sequence([XPoly([as_qrat(2)])])
    path = tmp_path / "basis.json"
    path.write_text(json.dumps([p.to_json() for p in good]))
    loaded = load_custom_sequence(str(path))
    op = DeltaOperator(loaded)
    assert delta_apply(op, loaded[2]) == loaded[1].scale(ONE + Q)
    assert operator_from_spec(f"custom:{path}").basis[1] == X.scale(2)


def test_operator_specs():
    assert operator_from_spec("monomial").basis.family == "monomial"
    op = operator_from_spec("hahn:h=1/2+q")
    assert op.basis.h == Q + Fraction(1, 2)
    with pytest.raises(ValueError):
        operator_from_spec("shift")
