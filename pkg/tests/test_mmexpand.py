from fractions import Fraction

import pytest
import sympy as sp
from hypothesis import given, strategies as st

from mmr.braid import BraidWord, parse_braid
from mmr.burau import ConwayPolynomial
from mmr.errors import InputError
from mmr.mmexpand import (
    check_integrality,
    extract_D,
    fit_in_alpha_squared,
    line_coefficients,
    rational_line,
    recover_P,
    solve_exact,
    stabilize,
    to_line_series,
)
from mmr.qtrace import jones_h_series


@pytest.fixture(scope="module")
def trefoil12():
    b = parse_braid("1,1,1")
    return b, extract_D(b, 12)


@pytest.fixture(scope="module")
def figure_eight12():
    b = parse_braid("1,-2,1,-2")
    return b, extract_D(b, 12)


def test_unknot_table():
    t = extract_D(BraidWord(1, ()), 6)
    assert t.D == {(0, 0): 1}


def test_solve_exact_small():
    assert solve_exact([[2, 1], [1, 3]], [3, 5]) == [Fraction(4, 5), Fraction(7, 5)]


@given(st.lists(st.integers(-9, 9), min_size=1, max_size=5))
def test_fit_recovers_polynomial(coeffs):
    samples = list(range(1, len(coeffs) + 1))
    vals = [sum(c * (a * a) ** j for j, c in enumerate(coeffs)) for a in samples]
    assert fit_in_alpha_squared(samples, vals) == coeffs


def test_fit_rejects_duplicate_squares():
    with pytest.raises(InputError):
        fit_in_alpha_squared([1, -1], [0, 0])


def test_melvin_morton_bound(trefoil12, figure_eight12):
    for _, t in (trefoil12, figure_eight12):
        assert all(2 * m <= n for (m, n), c in t.D.items() if c)


def test_overdetermined_refit_oracle():
    # interpolate through alpha = 1..M+1 with sympy; extra degrees must vanish
    b = parse_braid("1,-2,1,-2")
    M = 6
    t = extract_D(b, M)
    x = sp.Symbol("x")
    samples = list(range(1, M + 2))
    series = [jones_h_series(b, a, M) for a in samples]
    for n in range(M + 1):
        pts = [(a * a, sp.Rational(s[n].numerator, s[n].denominator) if isinstance(s[n], Fraction) else s[n]) for a, s in zip(samples, series)]
        poly = sp.Poly(sp.interpolate(pts, x), x)
        for m in range(len(samples)):
            expect = poly.coeff_monomial(x ** m)
            assert sp.Rational(str(t[m, n])) == expect


def test_line_zero_is_inverse_conway(trefoil12, figure_eight12):
    b, t = trefoil12
    assert list(line_coefficients(t, 0)) == [(-1) ** m for m in range(7)]
    b, t = figure_eight12
    assert list(line_coefficients(t, 0)) == [1] * 7


def test_recover_P_values(trefoil12, figure_eight12):
    b, t = trefoil12
    s = to_line_series(t)
    assert recover_P(b, 0, t, s).P == (1,)
    assert recover_P(b, 1, t, s).P == (0, 2, 1)
    assert recover_P(b, 2, t, s).P == (1, -3, -1)
    b, t = figure_eight12
    s = to_line_series(t)
    assert recover_P(b, 1, t, s).P == (0,)
    assert recover_P(b, 2, t, s).P == (-1, 0, 1)


def test_undetermined_at_low_order():
    b = parse_braid("1,1,1")
    r = recover_P(b, 1, extract_D(b, 8))
    assert r.P is None and not r.stable and r.undetermined_at == (2, 1)


def test_rational_line_inverts_product():
    delta = ConwayPolynomial((1, 1))
    assert rational_line((0, 2, 1), delta, 1, 4) == [0, 2, -5, 9]


def test_stabilize_policy():
    assert stabilize([1, 0, 0]) == ((1,), None)
    assert stabilize([1, 2, 0, 5]) == (None, (3, 5))
    assert stabilize([1, 2, 0, 0]) == ((1, 2), None)


def test_integrality(trefoil12, figure_eight12):
    for b, t in (trefoil12, figure_eight12):
        lines = [recover_P(b, n, t) for n in range(3)]
        rep = check_integrality(t, lines)
        assert rep.ok, rep


def test_sample_independence():
    b = parse_braid("1,1,1")
    a = extract_D(b, 6)
    c = extract_D(b, 6, samples=(2, 3, 5, 7))
    assert a.D == c.D


def test_prefix_stability():
    b = parse_braid("1,-2,1,-2")
    a = extract_D(b, 6)
    c = extract_D(b, 8)
    assert {k: v for k, v in c.D.items() if k[1] <= 6} == a.D


def test_too_few_samples():
    with pytest.raises(InputError):
        extract_D(parse_braid("1,1,1"), 8, samples=(1, 2))
