import random

import pytest
from fractions import Fraction

from qfano.wps import (
    CASE_A,
    CASE_B,
    NON_TERMINAL,
    RATIONAL_BY_PROJECTION,
    MuAction,
    WeightedHypersurface,
    WpsError,
    classify_x10,
    dp_dims,
    degree_A3,
    equivariant_series,
    fano_index,
    hilbert_coeff,
)

X10 = WeightedHypersurface((1, 2, 3, 4, 5), 10)
X14 = WeightedHypersurface((2, 3, 4, 5, 7), 14)
X6 = WeightedHypersurface((1, 1, 2, 2, 3), 6)


def test_fano_index():
    assert fano_index(X10) == 5
    assert fano_index(X14) == 7
    assert fano_index(X6) == 3
    with pytest.raises(WpsError):
        fano_index(WeightedHypersurface((1, 1, 1, 1), 5))


def test_degree_A3():
    assert degree_A3(X10) == Fraction(1, 12)
    assert degree_A3(X14) == Fraction(1, 60)
    assert degree_A3(X6) == Fraction(1, 2)


def test_hilbert_coeff():
    assert hilbert_coeff(X10, 4) == 5
    assert hilbert_coeff(X14, 6) == 3
    assert hilbert_coeff(X10, 0) == 1
    sdp5 = WeightedHypersurface((1, 2, 3, 5), 6)
    assert hilbert_coeff(sdp5, 5) == 6
    assert all(hilbert_coeff(X10, m) >= 0 for m in range(61))


def test_equivariant_fixtures():
    x8 = WeightedHypersurface((1, 2, 3, 4, 5), 8, MuAction(2, (0, 1, 1, 1, 1), 0))
    series = equivariant_series(x8, 3)
    assert series.h == [[1, 0], [1, 0], [1, 1], [1, 2]]
    x6q = WeightedHypersurface((1, 2, 2, 3, 3), 6, MuAction(3, (0, 1, 2, 1, 2), 0))
    assert equivariant_series(x6q, 2).h[2] == [1, 1, 1]
    trivial = WeightedHypersurface((1, 2, 3, 4, 5), 10, MuAction(1, (0, 0, 0, 0, 0), 0))
    assert [row[0] for row in equivariant_series(trivial, 6).h] == [
        hilbert_coeff(X10, m) for m in range(7)
    ]


def test_equivariant_row_sums():
    for weights, d, n, chars in (
        ((1, 2, 3, 4, 5), 8, 2, (0, 1, 1, 1, 1)),
        ((1, 2, 2, 3, 3), 6, 3, (0, 1, 2, 1, 2)),
        ((1, 1, 2, 2, 3), 4, 2, (0, 1, 1, 1, 0)),
    ):
        wh = WeightedHypersurface(weights, d, MuAction(n, chars, 0))
        plain = WeightedHypersurface(weights, d)
        series = equivariant_series(wh, 8)
        for m in range(9):
            assert sum(series.h[m]) == hilbert_coeff(plain, m)


def test_equivariant_inconsistent_action():
    # no degree-4 monomial of character 1 in P(2,2,2,2,2)-like setup
    wh = WeightedHypersurface((2, 2, 2, 2), 4, MuAction(2, (0, 0, 0, 0), 1))
    with pytest.raises(WpsError):
        equivariant_series(wh, 3)


CASE_A_POLY = {
    (0, 0, 0, 0, 2): 1,  # x5^2
    (0, 1, 0, 2, 0): 1,  # x4^2 x2
    (0, 0, 2, 1, 0): 1,  # x4 x3^2
    (10, 0, 0, 0, 0): 1,  # x1^10
}
CASE_B_POLY = {
    (0, 0, 0, 0, 2): 1,
    (0, 0, 2, 1, 0): 1,  # x4 x3^2
    (0, 3, 0, 1, 0): 1,  # x4 x2^3
    (0, 5, 0, 0, 0): 1,  # x2^5
}
NON_TERMINAL_POLY = {
    (0, 1, 0, 2, 0): 1,
    (0, 0, 2, 1, 0): 1,
    (10, 0, 0, 0, 0): 1,
}


def test_classify_examples():
    a = classify_x10(CASE_A_POLY)
    assert a.case == CASE_A and a.p3_via_x4x3sq
    b = classify_x10(CASE_B_POLY)
    assert b.case == RATIONAL_BY_PROJECTION and b.lam == 0 and b.rational
    assert classify_x10(NON_TERMINAL_POLY).case == NON_TERMINAL


def test_classify_case_b_nonzero_lambda():
    poly = dict(CASE_B_POLY)
    poly[(2, 0, 0, 2, 0)] = Fraction(-1)  # x4^2 x1^2
    out = classify_x10(poly)
    assert out.case == CASE_B and out.lam == -1 and out.rational


def test_classify_square_completion():
    # x5-linear terms must be eliminated exactly before reading the verdict:
    # (x5 + x4 x1)^2 - x4^2 x1^2 hides the lambda term inside the square
    poly = dict(CASE_B_POLY)
    poly[(1, 0, 0, 1, 1)] = 2  # 2 x5 x4 x1
    out = classify_x10(poly)
    assert out.case == CASE_B and out.lam == -1


def test_classify_scaling_invariance():
    rng = random.Random(99)
    for poly in (CASE_A_POLY, CASE_B_POLY, NON_TERMINAL_POLY):
        base = classify_x10(poly)
        for _ in range(30):
            scale = [Fraction(rng.randint(1, 9), rng.randint(1, 9)) for _ in range(5)]
            scaled = {
                expo: coeff * (
                    scale[0] ** expo[0] * scale[1] ** expo[1] * scale[2] ** expo[2]
                    * scale[3] ** expo[3] * scale[4] ** expo[4]
                )
                for expo, coeff in poly.items()
            }
            out = classify_x10(scaled)
            assert out.case == base.case
            assert (out.lam == 0) == (base.lam == 0)


def test_classify_rejects_wrong_degree():
    with pytest.raises(WpsError):
        classify_x10({(1, 0, 0, 0, 0): 1})


def test_dp_dims():
    assert dp_dims("P(1,2,3)", 5) == 4
    assert dp_dims("P(1,1,2)", 2) == 3
    assert dp_dims("P2", 3) == 9
    with pytest.raises(WpsError):
        dp_dims("P3", 1)
    with pytest.raises(WpsError):
        dp_dims("P2", 0)
