from fractions import Fraction

import pytest

from basicemb.decomp import (
    Decomposition2,
    MissingCoordinate,
    Obstruction2,
    alternating_array,
    alternating_sum,
    anchor_gauge,
    best_sup_approx,
    decompose_exact,
    gen_hard_instance,
    hard_layer,
    m_coord,
    make_alternating_instance,
    min_norm_exact,
    peel_decompose,
    valued_set,
    verify,
)
from basicemb.rook import Cyclic, e_depth, equivalence_classes, is_array, point

import oracles

GRID = valued_set([((0, 0), 0), ((0, 1), 0), ((1, 0), 0), ((1, 1), 3)])


def test_grid_obstruction():
    ob = decompose_exact(GRID)
    assert isinstance(ob, Obstruction2)
    assert abs(ob.alternating_sum) == 3
    assert alternating_sum(GRID, ob.cycle) == ob.alternating_sum
    assert isinstance(min_norm_exact(GRID), Obstruction2)


def test_grid_chebyshev_residual():
    D, rep = best_sup_approx(GRID)
    assert rep.residual == Fraction(3, 4)
    ref = oracles.chebyshev_scipy(GRID.values)
    assert float(rep.residual) == pytest.approx(ref.fun, abs=1e-9)


def test_unit_grid_residual_quarter():
    Kf = valued_set([((0, 0), 0), ((0, 1), 0), ((1, 0), 0), ((1, 1), 1)])
    assert best_sup_approx(Kf)[1].residual == Fraction(1, 4)


def test_two_point_example():
    Kf = valued_set([((0, 0), 1), ((1, 0), 3)])
    D = decompose_exact(Kf)
    assert verify(Kf, D).residual == 0
    assert D.h[0] == 0 and D.g[0] == 1 and D.g[1] == 3


def test_empty_set():
    Kf = valued_set([])
    D = decompose_exact(Kf)
    assert D.g == {} and D.h == {}
    assert verify(Kf, D).objective == 0


def test_missing_coordinate():
    Kf = valued_set([((0, 0), 1)])
    with pytest.raises(MissingCoordinate):
        verify(Kf, Decomposition2({0: 1}, {}))


def test_duplicate_points_rejected():
    with pytest.raises(ValueError):
        valued_set([((0, 0), 1), (("0/1", 0), 2)])


def test_peel_rejects_cyclic():
    with pytest.raises(ValueError):
        peel_decompose(valued_set([((0, 0), 0), ((0, 1), 0), ((1, 0), 0), ((1, 1), 0)]))


@pytest.mark.parametrize("seed", range(60))
def test_additive_functions_recovered(seed):
    rng = oracles.seeded(seed)
    pts = oracles.random_points(rng, 14, 0, 4) or [(0, 0)]
    Kf = valued_set(oracles.random_additive(rng, pts))
    D = decompose_exact(Kf)
    assert verify(Kf, D).residual == 0
    if not isinstance(e_depth(Kf.base), Cyclic):
        assert verify(Kf, peel_decompose(Kf)).residual == 0
    D2, rep = min_norm_exact(Kf)
    assert rep.residual == 0
    ref = oracles.min_norm_scipy(Kf.values)
    assert float(rep.objective) == pytest.approx(ref.fun, abs=1e-7)


@pytest.mark.parametrize("seed", range(60))
def test_rejection_matches_cycle_enumeration(seed):
    rng = oracles.seeded(1000 + seed)
    pts = oracles.random_points(rng, 12, 0, 3)
    if rng.random() < 0.5:
        f = oracles.random_additive(rng, pts)
    else:
        f = {p: Fraction(rng.randint(-3, 3)) for p in pts}
    Kf = valued_set(f)
    bad = any(oracles.walk_sum(Kf.values, w) != 0 for w in oracles.closed_walks(list(Kf.base)))
    res = decompose_exact(Kf)
    assert isinstance(res, Obstruction2) == bad
    if bad:
        assert res.alternating_sum != 0
        assert is_array(res.cycle.points, "y", closed=True)
        assert alternating_sum(Kf, res.cycle) == res.alternating_sum


@pytest.mark.parametrize("seed", range(30))
def test_chebyshev_matches_scipy(seed):
    rng = oracles.seeded(2000 + seed)
    pts = oracles.random_points(rng, 10, 0, 3) or [(0, 0)]
    f = {p: Fraction(rng.randint(-6, 6), rng.randint(1, 3)) for p in pts}
    D, rep = best_sup_approx(valued_set(f))
    assert float(rep.residual) == pytest.approx(oracles.chebyshev_scipy(f).fun, abs=1e-7)


def test_gauge_invariance():
    rng = oracles.seeded(7)
    pts = oracles.random_points(rng, 12, 0, 4)
    Kf = valued_set(oracles.random_additive(rng, pts))
    D = decompose_exact(Kf)
    for c in (Fraction(1, 3), -5):
        S = D.shifted(c)
        assert verify(Kf, S).residual == 0
        A, B = anchor_gauge(Kf, D), anchor_gauge(Kf, S)
        assert A.g == B.g and A.h == B.h
    for cls in equivalence_classes(Kf.base):
        assert anchor_gauge(Kf, D).h[cls[0].y] == 0


@pytest.mark.parametrize("m", range(1, 9))
def test_alternating_norm_growth(m):
    Kf = make_alternating_instance(m)
    assert len(Kf) == 2 * m + 4
    assert is_array(alternating_array(m).points, "y")
    D, rep = min_norm_exact(Kf)
    assert rep.residual == 0
    assert rep.objective == 2 * m + 3
    assert rep.sup_f == 1


def test_hard_layers_are_arrays():
    for k in range(1, 6):
        layer = hard_layer(k)
        assert len(layer.points) == 2 ** k == len(set(layer.points))
        assert is_array(layer.points, "x")


def test_m_coord_values():
    assert m_coord(1, 2) == 1
    assert m_coord(2, 0) == Fraction(5, 4)
    assert m_coord(3, 2 ** 3) == 2 - Fraction(3, 8) + Fraction(1, 8)


@pytest.mark.parametrize("i", range(1, 5))
def test_hard_instance_telescoping_sign(i):
    # Every exact decomposition has h(2 - 3/2^k) - h(2 - 2/2^k) = -1:
    # along layer k the values +-2^-k alternate over 2^k points.
    Kf = gen_hard_instance(i)
    D, rep = min_norm_exact(Kf)
    assert rep.residual == 0
    for k in range(1, i + 1):
        lo, hi = m_coord(k, 0), m_coord(k, 2 ** k)
        assert D.h[lo] - D.h[hi] == -1


def test_decomposition_call():
    D = Decomposition2({1: 2}, {3: 4})
    assert D(point(1, 3)) == 6
