import math
from fractions import Fraction

import pytest
from scipy.integrate import quad

from basicemb.sequences import (
    GeometricDecompositionError,
    alternating_sums,
    const_rule,
    cross_g_increment,
    custom_family,
    geometric_decompose,
    geometric_family,
    geometric_rule,
    harmonic_rule,
    power_family,
    tail_ratio,
    validate_prefix,
    w_area,
)


def _w(x):
    """Pointwise spike function, for a quadrature cross-check of W."""
    for i in range(1, 12):
        L = 4.0 ** -i
        P = L + 4.0 ** (-3 * i - 1)
        R = L + 4.0 ** (-3 * i)
        H = 2.0 ** (3 * i)
        if L <= x <= P:
            return H * (x - L) / (P - L)
        if P <= x <= R:
            return H * (R - x) / (R - P)
    return 0.0


def _breaks(lo, hi):
    out = []
    for i in range(1, 12):
        L = 4.0 ** -i
        out += [t for t in (L, L + 4.0 ** (-3 * i - 1), L + 4.0 ** (-3 * i)) if lo < t < hi]
    return out


def test_family_terms():
    g = geometric_family()
    assert g.term(1) == (Fraction(1, 2), Fraction(1, 1))
    assert g.term(2) == (Fraction(1, 2), Fraction(1, 2))
    p = power_family()
    assert p.start == 2
    assert p.term(2) == pytest.approx((1.0, 1.0))
    assert p.term(3) == pytest.approx((2 ** -0.5, 1.0))


@pytest.mark.parametrize("gen", [geometric_family(), power_family()])
def test_prefixes_are_arrays(gen):
    assert validate_prefix(gen, 40)
    pts = [a for _, a in gen.prefix(40)]
    assert len(set(pts)) == 40


def test_custom_family():
    gen = custom_family([(3, (1, 1)), (1, (0, 0)), (2, (1, 0))])
    assert gen.start == 1
    assert gen.prefix(10) == [(1, (0, 0)), (2, (1, 0)), (3, (1, 1))]
    assert validate_prefix(gen, 3)
    with pytest.raises(ValueError):
        custom_family([(1, (0, 0)), (3, (1, 0))])


def test_power_harmonic_diverges():
    rep = alternating_sums(power_family(), harmonic_rule, 1000)
    assert rep.max_partial > 3.0
    assert rep.verdict == "diverges"
    # the summand is 1/n, so S_N is a shifted harmonic number
    assert rep.partials[-1] == pytest.approx(sum(1 / n for n in range(2, 1002)), rel=1e-12)


def test_geometric_rule_converges():
    rep = alternating_sums(geometric_family(), geometric_rule, 200)
    assert rep.verdict == "converges"
    assert rep.partials[-1] == pytest.approx(-1 / 3, abs=1e-12)


def test_constant_rule_inconclusive():
    rep = alternating_sums(geometric_family(), const_rule(1), 100)
    assert rep.verdict == "inconclusive"
    assert rep.max_abs == 1


def test_geometric_tail_ratio_bounded():
    rep = tail_ratio(geometric_family(), 50, 200)
    assert rep.max_ratio <= 4
    assert all(b < 1e-9 for b in rep.remainder_bounds)
    assert rep.heuristic_verdict == "heuristic: looks bounded"


def test_power_tail_ratio_grows():
    rep = tail_ratio(power_family(), 20, 2000)
    assert rep.max_ratio > 100
    assert math.isinf(rep.remainder_bounds[0])
    with pytest.raises(ValueError):
        tail_ratio(power_family(), 3000, 100)


def test_w_area_exact_values():
    assert w_area(1) == Fraction(1, 14)
    assert w_area(Fraction(1, 4)) == Fraction(1, 112)
    assert w_area(0) == 0
    with pytest.raises(ValueError):
        w_area(2)


@pytest.mark.parametrize("x", [0.3, 0.26, 0.0629, 0.0157, 0.0039])
def test_w_area_matches_quadrature(x):
    lo = x / 2
    approx, _ = quad(_w, lo, x, points=_breaks(lo, x) or None, limit=200, epsabs=1e-13)
    exact = float(w_area(Fraction(x)) - w_area(Fraction(lo)))
    assert approx == pytest.approx(exact, rel=1e-9, abs=1e-12)


def test_w_area_is_monotone():
    xs = [Fraction(k, 1000) for k in range(1001)]
    vals = [w_area(x) for x in xs]
    assert vals == sorted(vals)


@pytest.mark.parametrize("e", [3, 4])
def test_cross_increment_bound(e):
    rep = cross_g_increment(Fraction(1, 4 ** e), 30)
    assert rep.holds
    assert float(rep.value) >= rep.bound


def test_cross_increment_at_one_sixteenth():
    # the increments are capped by the total spike mass 1/14 < 2^-3/2 / 2
    rep = cross_g_increment(Fraction(1, 16), 30)
    assert 0 <= Fraction(1, 14) - rep.value < Fraction(1, 2 ** 80)
    assert not rep.holds


def test_cross_increment_domain():
    with pytest.raises(ValueError):
        cross_g_increment(Fraction(1, 4), 5)


def test_geometric_decompose_additive():
    rep = geometric_decompose(lambda x, y: x + y, 40)
    assert rep.residual < 1e-9
    assert rep.g_quotients[3][1] == pytest.approx(1.0, abs=1e-6)


def test_geometric_decompose_product():
    rep = geometric_decompose(lambda x, y: x * y, 40)
    assert rep.residual < 1e-9
    assert abs(rep.g_quotients[30][1]) < 1e-6


def test_geometric_decompose_failure_carries_report():
    with pytest.raises(GeometricDecompositionError) as exc:
        geometric_decompose(lambda x, y: float(x == y and x > 0), 10)
    assert exc.value.report.residual >= 1e-9
