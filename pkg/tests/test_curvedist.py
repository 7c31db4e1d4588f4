import math

import numpy as np
import pytest

from oracles import brute_point_to_polyline, dense_lp, random_polyline
from vehaz.curvedist import (CurveGraph, compare_graphs, lp, point_to_graph,
                             se, ve)


def flat(c, lo=0.0, hi=10.0, m=101):
    xs = np.linspace(lo, hi, m)
    return CurveGraph(xs, np.full(m, c))


def random_pair(rng, m=97):
    """Smooth random pair on a shared grid."""
    xs = np.linspace(0.0, 6.0, m)
    def curve():
        a, b, w1, w2 = rng.uniform(0.2, 1.0, size=4)
        return 1.0 + a * np.sin(w1 * 2 * xs) + b * np.cos(w2 * xs)
    return CurveGraph(xs, curve()), CurveGraph(xs, curve())


# ---------------------------------------------------------------- geometry

def test_point_on_vertex_has_zero_distance():
    g = CurveGraph(np.array([0.0, 1.0, 2.0]), np.array([1.0, 3.0, 0.5]))
    assert point_to_graph((1.0, 3.0), g) == 0.0


def test_vertical_drop_to_horizontal_segment():
    g = flat(2.0, m=2)
    assert point_to_graph((5.0, 2.25), g) == 0.25


def test_distance_to_diagonal():
    g = CurveGraph(np.array([0.0, 2.0]), np.array([0.0, 2.0]))
    assert point_to_graph((0.0, 1.0), g) == math.sqrt(0.5)


def test_brute_force_oracle_agreement():
    rng = np.random.default_rng(2024)
    for _ in range(1000):
        qx, qy = random_polyline(rng)
        px = float(rng.uniform(-2.0, 12.0))
        py = float(rng.normal(scale=3.0))
        got = point_to_graph((px, py), CurveGraph(qx, qy))
        want = brute_point_to_polyline(px, py, qx, qy)
        assert abs(got - want) <= 1e-12


def test_single_vertex_graph():
    g = CurveGraph(np.array([1.0]), np.array([2.0]))
    assert point_to_graph((1.0, 2.0), g) == 0.0
    assert point_to_graph((4.0, 6.0), g) == 5.0


# ---------------------------------------------------------------- criteria

def test_identical_graphs_zero_everywhere():
    rng = np.random.default_rng(3)
    g, _ = random_pair(rng)
    rep = compare_graphs(g, g)
    assert all(v == 0.0 for v in rep.as_dict().values())


def test_constant_graphs_closed_forms():
    est, truth = flat(0.3), flat(0.0)
    for direction in ("est_to_truth", "truth_to_est"):
        assert ve(direction, math.inf, est, truth) == pytest.approx(0.3, abs=1e-15)
        assert ve(direction, 2, est, truth) ** 2 == pytest.approx(0.9, abs=1e-3)
        assert ve(direction, 1, est, truth) == pytest.approx(3.0, abs=1e-3)
    assert se(math.inf, est, truth) == pytest.approx(0.3, abs=1e-15)
    assert lp(2, est, truth) == pytest.approx(0.9, rel=1e-12)
    assert lp(1, est, truth) == pytest.approx(3.0, rel=1e-12)
    assert lp(math.inf, est, truth) == 0.3


def test_vertical_domination_pointwise_and_integrated():
    rng = np.random.default_rng(11)
    for _ in range(200):
        est, truth = random_pair(rng)
        rep = compare_graphs(est, truth)
        from vehaz._core import polyline_min_dists
        d = polyline_min_dists(est.xs, est.ys, truth.xs, truth.ys)
        assert np.all(d <= np.abs(est.ys - truth.ys) + 1e-12)
        assert rep.ve2_eh ** 2 <= rep.l2 + 1e-12
        assert rep.ve2_he ** 2 <= rep.l2 + 1e-12


def test_report_internal_identities():
    rng = np.random.default_rng(13)
    for _ in range(25):
        est, truth = random_pair(rng)
        rep = compare_graphs(est, truth)
        assert abs(rep.se2 ** 2 - (rep.ve2_eh ** 2 + rep.ve2_he ** 2)) <= 1e-12
        assert rep.se1 == rep.ve1_eh + rep.ve1_he
        assert rep.seinf == max(rep.veinf_eh, rep.veinf_he)
        assert min(rep.as_dict().values()) >= 0.0


def test_se_is_symmetric():
    rng = np.random.default_rng(17)
    g1, g2 = random_pair(rng)
    for p in (1, 2, math.inf):
        assert se(p, g1, g2) == se(p, g2, g1)


def test_hausdorff_zero_iff_identical():
    rng = np.random.default_rng(19)
    g, _ = random_pair(rng)
    assert se(math.inf, g, g) == 0.0
    bumped = CurveGraph(g.xs, g.ys + np.where(np.arange(g.m) == 40, 1e-6, 0.0))
    assert se(math.inf, g, bumped) > 1e-12


def test_translation_invariance():
    rng = np.random.default_rng(23)
    est, truth = random_pair(rng)
    shift_x, shift_y = 0.37, -1.21
    est2 = CurveGraph(est.xs + shift_x, est.ys + shift_y)
    truth2 = CurveGraph(truth.xs + shift_x, truth.ys + shift_y)
    a = compare_graphs(est, truth).as_dict()
    b = compare_graphs(est2, truth2).as_dict()
    for k in a:
        assert b[k] == pytest.approx(a[k], rel=1e-12, abs=1e-12)


def test_refinement_stability():
    xs = np.linspace(0.0, 6.0, 512)
    xs2 = np.linspace(0.0, 6.0, 1023)  # doubled resolution, same endpoints
    def f_est(x):
        return 1.0 + 0.4 * np.sin(1.3 * x)
    def f_tr(x):
        return 1.1 + 0.35 * np.cos(0.9 * x)
    a = compare_graphs(CurveGraph(xs, f_est(xs)), CurveGraph(xs, f_tr(xs))).as_dict()
    b = compare_graphs(CurveGraph(xs2, f_est(xs2)), CurveGraph(xs2, f_tr(xs2))).as_dict()
    for k in a:
        assert abs(b[k] - a[k]) <= 1e-3 * max(abs(a[k]), 1e-6)


def test_lp_matches_dense_grid_oracle():
    # smooth, gently sloped pair on a fine shared grid; production trapezoid
    # error must stay below 1e-6 relative against a 1e5-point oracle
    xs = np.linspace(0.0, 10.0, 4096)
    ye = 1.0 + 0.3 + 0.05 * np.sin(xs)
    yt = 1.0 + 0.04 * np.cos(0.7 * xs)
    est, truth = CurveGraph(xs, ye), CurveGraph(xs, yt)
    for p in (1, 2):
        got = lp(p, est, truth)
        want = dense_lp(p, xs, ye, xs, yt)
        assert got == pytest.approx(want, rel=1e-6)
    assert lp(math.inf, est, truth) == pytest.approx(
        dense_lp(math.inf, xs, ye, xs, yt), rel=1e-6)


def test_triangle_inequality_violation_frozen_triple():
    # flat-zero and flat-one curves, plus a spiky curve hugging the zero line
    # while touching one: the symmetrised quadratic criterion of the outer
    # pair exceeds the sum through the middle curve.
    xs = np.linspace(0.0, 1.0, 501)
    a = CurveGraph(xs, np.zeros_like(xs))
    c = CurveGraph(xs, np.ones_like(xs))
    bx = [0.0]
    by = [0.0]
    for center in (0.1, 0.3, 0.5, 0.7, 0.9):
        bx += [center - 0.01, center, center + 0.01]
        by += [0.0, 1.0, 0.0]
    bx.append(1.0)
    by.append(0.0)
    allx = np.union1d(np.array(bx), np.linspace(0.0, 1.0, 401))
    ally = np.interp(allx, np.array(bx), np.array(by))
    b = CurveGraph(allx, ally)
    margin = se(2, a, c) - se(2, a, b) - se(2, b, c)
    assert margin > 1e-6
    assert margin == pytest.approx(0.260446, abs=1e-4)


def test_non_overlapping_graphs_rejected():
    g1 = CurveGraph(np.array([0.0, 1.0]), np.array([0.0, 0.0]))
    g2 = CurveGraph(np.array([2.0, 3.0]), np.array([0.0, 0.0]))
    with pytest.raises(ValueError):
        ve("est_to_truth", 2, g1, g2)
    with pytest.raises(ValueError):
        lp(2, g1, g2)


def test_partial_overlap_uses_intersection():
    g1 = CurveGraph(np.array([0.0, 4.0]), np.array([1.0, 1.0]))
    g2 = CurveGraph(np.array([2.0, 6.0]), np.array([1.5, 1.5]))
    # overlap [2, 4], gap 0.5
    assert lp(1, g1, g2) == pytest.approx(1.0, rel=1e-12)
    assert ve("est_to_truth", math.inf, g1, g2) == pytest.approx(0.5, abs=1e-12)


def test_invalid_inputs():
    with pytest.raises(ValueError):
        CurveGraph(np.array([1.0, 1.0]), np.array([0.0, 0.0]))  # not strictly ascending
    with pytest.raises(ValueError):
        CurveGraph(np.array([0.0, 1.0]), np.array([np.nan, 0.0]))
    g = flat(1.0)
    with pytest.raises(ValueError):
        ve("sideways", 2, g, g)
    with pytest.raises(ValueError):
        ve("est_to_truth", 3, g, g)
    with pytest.raises(ValueError):
        lp(0.5, g, g)
