"""Curvature of the deformed metrics: closed form, oracle, sign behavior,
and the submersion bookkeeping behind the deformation."""

from fractions import Fraction

import numpy as np
import pytest

from milnor.deform import (
    DeformedMetric,
    cheeger_quotient_factors,
    compensating_scale,
    find_negative_plane,
    horizontal_lift_check,
    negative_plane_witness,
    scan_min_sectional,
    witness_plane_value,
)
from milnor.errors import DegeneratePlaneError, ParameterError, ValidationError
from milnor.liealg import ReductiveSplit, Su2Power

RNG = np.random.default_rng(90125)


def diag_metric(factors, a):
    alg = Su2Power(factors)
    return DeformedMetric(ReductiveSplit.diagonal(alg), a)


def span_i_metric(factors, a):
    alg = Su2Power(factors)
    direction = alg.zero()
    direction[0, 0] = 1.0
    return DeformedMetric(ReductiveSplit.circle(alg, direction), a)


def test_undeformed_metric_gives_quarter_norm_curvature():
    metric = diag_metric(2, 1.0)
    alg = metric.algebra
    for _ in range(300):
        u, v = alg.random(RNG), alg.random(RNG)
        w = alg.bracket(u, v)
        want = 0.25 * float(alg.inner(w, w))
        assert abs(float(metric.curvature_of_pair(u, v)) - want) < 1e-9


@pytest.mark.parametrize("a", [0.5, 1.0, 4.0 / 3.0, 2.0])
@pytest.mark.parametrize("make", [diag_metric, span_i_metric])
def test_closed_form_agrees_with_connection_oracle(make, a):
    metric = make(2, a)
    assert metric.oracle_agreement(samples=300, seed=5) < 1e-9


def test_curvature_is_symmetric_and_scales_quadratically():
    metric = diag_metric(2, 1.4)
    alg = metric.algebra
    for _ in range(100):
        u, v = alg.random(RNG), alg.random(RNG)
        kuv = float(metric.curvature_of_pair(u, v))
        kvu = float(metric.curvature_of_pair(v, u))
        assert abs(kuv - kvu) < 1e-9 * max(1.0, abs(kuv))
        scaled = float(metric.curvature_of_pair(2.5 * u, v))
        assert abs(scaled - 2.5 ** 2 * kuv) < 1e-8 * max(1.0, abs(kuv))


def test_component_input_membership_is_checked():
    metric = diag_metric(2, 1.2)
    alg = metric.algebra
    split = metric.split
    u = alg.random(RNG)
    A, X = split.split(u)
    with pytest.raises(ValidationError):
        metric.curvature(X, A, A, X)


def test_su2_circle_sectional_closed_form():
    """Shrinking span(i) in one su(2): the plane (j, k) has curvature
    4 - 3a under the induced normalization."""
    for a in (0.5, 1.0, 4.0 / 3.0, 1.5, 2.0):
        metric = span_i_metric(1, a)
        alg = metric.algebra
        j = alg.element([0.0, 1.0, 0.0])
        k = alg.element([0.0, 0.0, 1.0])
        assert abs(metric.sectional(j, k) - (4.0 - 3.0 * a)) < 1e-9


def test_sectional_rejects_degenerate_planes():
    metric = diag_metric(2, 1.0)
    alg = metric.algebra
    u = alg.random(RNG)
    with pytest.raises(DegeneratePlaneError):
        metric.sectional(u, 2.0 * u)
    with pytest.raises(DegeneratePlaneError):
        metric.sectional(u, alg.zero())


def test_sectional_batch_matches_scalar_path():
    metric = diag_metric(2, 1.3)
    alg = metric.algebra
    U = np.stack([alg.random(RNG) for _ in range(50)])
    V = np.stack([alg.random(RNG) for _ in range(50)])
    vals, ok = metric.sectional_batch(U, V)
    assert ok.all()
    for idx in range(0, 50, 7):
        assert abs(vals[idx] - metric.sectional(U[idx], V[idx])) < 1e-9


def test_scan_stays_nonnegative_in_the_allowed_window():
    for metric in (diag_metric(2, 1.0), span_i_metric(2, 4.0 / 3.0)):
        res = scan_min_sectional(metric, n_planes=20000, seed=3)
        assert res.min_value >= -1e-9
        assert res.n_valid > 19000


def test_witness_plane_is_negative_past_the_threshold():
    for a in (1.05, 1.2, 4.0 / 3.0 + 0.01):
        metric = diag_metric(2, a)
        A, X, B, Y = negative_plane_witness(metric)
        value = float(metric.curvature(A, X, B, Y))
        assert abs(value - witness_plane_value(a)) < 1e-10
        assert value < 0.0
        oracle = float(metric.curvature_oracle(A, X, B, Y))
        assert abs(value - oracle) < 1e-10


def test_witness_requires_the_deformation_to_overshoot():
    with pytest.raises(ParameterError):
        negative_plane_witness(diag_metric(2, 1.0))
    with pytest.raises(ParameterError):
        negative_plane_witness(span_i_metric(2, 1.5))


def test_negative_plane_search_finds_certified_planes():
    res = find_negative_plane(diag_metric(2, 1.05), budget=60000, seed=11)
    assert res.found
    assert res.value < -1e-10
    assert abs(res.value - res.oracle_value) < 1e-10
    assert res.evaluations <= 60000

    res2 = find_negative_plane(span_i_metric(1, 1.5), budget=30000, seed=11)
    assert res2.found
    assert res2.value < -0.4
    assert abs(res2.value - res2.oracle_value) < 1e-10


def test_negative_plane_search_reports_absence():
    res = find_negative_plane(diag_metric(2, 1.0), budget=4000, seed=2)
    assert not res.found
    assert res.scan_min >= -1e-9


def test_quotient_factors_are_exact():
    assert cheeger_quotient_factors(3) == (Fraction(1), Fraction(3, 4))
    assert cheeger_quotient_factors(Fraction(1, 2)) == (Fraction(1), Fraction(1, 3))
    assert compensating_scale(3) == Fraction(4, 3)
    lam = Fraction(7, 2)
    assert compensating_scale(lam) * (lam / (lam + 1)) == 1
    with pytest.raises(ParameterError):
        cheeger_quotient_factors(0)
    with pytest.raises(ParameterError):
        compensating_scale(-1)


@pytest.mark.parametrize("lam", [Fraction(1, 2), 1, 3, Fraction(13, 5)])
def test_horizontal_lift_geometry(lam):
    alg = Su2Power(2)
    split = ReductiveSplit.diagonal(alg)
    report = horizontal_lift_check(split, lam, samples=12, seed=1)
    assert report.max_residual < 1e-10
    assert report.orthogonality_residual < 1e-10
    for got, want in report.lift_norm_pairs:
        assert abs(got - want) < 1e-10 * max(1.0, abs(want))


def test_lift_check_accepts_matching_deformed_metric():
    alg = Su2Power(2)
    split = ReductiveSplit.diagonal(alg)
    metric = DeformedMetric(split, compensating_scale(3))
    report = horizontal_lift_check(split, 3, metric=metric, samples=8, seed=4)
    assert report.max_residual < 1e-10
