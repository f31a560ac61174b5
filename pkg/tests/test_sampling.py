"""Supremum estimator: schedules, determinism, monotonicity, diagnostics."""

import math

import numpy as np
import pytest

from blochlab import sampling
from blochlab import seminorms as sn
from blochlab.catalog import lookup
from blochlab.errors import EvaluationPoisoned
from blochlab.geometry import INF, BallSpace, norm, norm_batch

DISC = BallSpace(1, INF)
BIDISC = BallSpace(2, INF)


def test_shell_count_schedule():
    assert sampling.shell_count(1) == 1
    assert sampling.shell_count(16) == 4
    assert sampling.shell_count(64) == 16
    assert sampling.shell_count(120) == 16
    assert sampling.shell_count(128) == 30
    assert sampling.shell_count(10**6) == 30


def test_shell_radius():
    assert sampling.shell_radius(0) == 0.0
    assert sampling.shell_radius(3) == pytest.approx(1 - 0.125)
    deepest = sampling.shell_radius(sampling.SHELL_CAP - 1)
    assert 1.0 - deepest > sampling.BOUNDARY_GUARD


def test_shell_points_deterministic_and_on_shell():
    X1 = sampling.shell_points(BIDISC, 5, 200, seed=3)
    X2 = sampling.shell_points(BIDISC, 5, 200, seed=3)
    assert np.array_equal(X1, X2)
    X3 = sampling.shell_points(BIDISC, 5, 200, seed=4)
    assert not np.array_equal(X1, X3)
    r = sampling.shell_radius(5)
    norms = norm_batch(BIDISC, X1)
    assert np.max(np.abs(norms - r)) < 1e-12


def test_shell_points_prefix_stability():
    # sample m of shell j never depends on how many samples are requested
    big = sampling.shell_points(BIDISC, 4, 300, seed=9)
    small = sampling.shell_points(BIDISC, 4, 120, seed=9)
    assert np.array_equal(big[:, :120], small)


def test_random_interior_points():
    rng = np.random.default_rng(5)
    for space in (DISC, BIDISC, BallSpace(2, 2.0), BallSpace(3, 1.5)):
        P = sampling.random_interior_points(space, rng, 128, rmax=0.9)
        assert P.shape == (space.n, 128)
        assert norm_batch(space, P).max() <= 0.9 + 1e-12


def _nat_objectives(entry):
    space = entry.space
    f = entry.expr

    def batch(X):
        return sn.nat_density_batch(f, space, X)

    def scalar(x):
        return sn.nat_density(f, space, x)

    return batch, scalar


def _inv_objectives(entry):
    space = entry.space
    f = entry.expr

    def batch(X):
        return sn.inv_density_batch(f, space, X)

    def scalar(x):
        return sn.inv_density(f, space, x)

    return batch, scalar


def test_estimator_deterministic():
    e = lookup("countex1")
    batch, scalar = _inv_objectives(e)
    a = sampling.estimate_supremum(e.space, batch, scalar, 512, seed=0)
    b = sampling.estimate_supremum(e.space, batch, scalar, 512, seed=0)
    assert a == b
    # the seed reaches the random part of the schedule (points beyond the
    # two deterministic probes differ); the polished estimate itself may
    # coincide across seeds when a probe point dominates
    p0 = sampling.shell_points(e.space, 3, 8, seed=0)
    p1 = sampling.shell_points(e.space, 3, 8, seed=1)
    assert np.allclose(p0[:, :2], p1[:, :2])
    assert not np.allclose(p0[:, 2:], p1[:, 2:])


def test_estimator_monotone_under_doubling():
    cases = []
    e = lookup("countex1")
    cases.append((e.space, _inv_objectives(e)))
    cases.append((e.space, _nat_objectives(e)))
    m = lookup("mobius:0.5")
    cases.append((m.space, _nat_objectives(m)))
    r = lookup("reciprocal")
    cases.append((r.space, _nat_objectives(r)))
    for space, (batch, scalar) in cases:
        prev = -math.inf
        budget = 16
        while budget <= 8192:
            est = sampling.estimate_supremum(space, batch, scalar, budget, seed=0)
            assert est.value >= prev, f"estimate dropped at budget {budget}"
            prev = est.value
            budget *= 2


def test_witness_certifies_value():
    for name, objs in (
        ("countex1", _inv_objectives),
        ("mobius:0.5", _nat_objectives),
    ):
        e = lookup(name)
        batch, scalar = objs(e)
        est = sampling.estimate_supremum(e.space, batch, scalar, 1024, seed=0)
        assert est.witness is not None
        assert norm(e.space, est.witness) <= 1.0 - sampling.BOUNDARY_GUARD + 1e-15
        revalue = scalar(est.witness)
        assert revalue == pytest.approx(est.value, rel=1e-9)
        assert all(isinstance(w, complex) for w in est.witness)


def test_divergence_flag_on_logarithmic_growth():
    e = lookup("countex1")
    batch, scalar = _inv_objectives(e)
    est = sampling.estimate_supremum(e.space, batch, scalar, 4096, seed=0)
    assert est.divergence is not None
    assert 0.9 < est.divergence.slope < 1.05
    assert est.divergence.stderr < 0.1
    assert "radial shells" in est.divergence.path


def test_no_divergence_flag_on_bounded_or_pole_growth():
    e = lookup("countex1")
    batch, scalar = _nat_objectives(e)
    est = sampling.estimate_supremum(e.space, batch, scalar, 4096, seed=0)
    assert est.divergence is None
    r = lookup("reciprocal")
    batch, scalar = _nat_objectives(r)
    est = sampling.estimate_supremum(r.space, batch, scalar, 4096, seed=0)
    assert est.divergence is None
    m = lookup("mobius:0.5")
    batch, scalar = _nat_objectives(m)
    est = sampling.estimate_supremum(m.space, batch, scalar, 4096, seed=0)
    assert est.divergence is None


def test_all_poisoned_objective():
    def batch(X):
        return np.full(X.shape[1], np.nan)

    def scalar(x):
        raise EvaluationPoisoned("always")

    est = sampling.estimate_supremum(DISC, batch, scalar, 256, seed=0)
    assert est.value == 0.0
    assert est.witness == (0j,)
    assert est.poisoned_count == 256
    assert est.divergence is None


def test_partially_poisoned_counts():
    def batch(X):
        vals = np.abs(X[0])
        vals = np.where(X[0].real > 0, vals, np.nan)
        return vals

    def scalar(x):
        if x[0].real <= 0:
            raise EvaluationPoisoned("left half")
        return abs(x[0])

    est = sampling.estimate_supremum(DISC, batch, scalar, 512, seed=0)
    assert 0 < est.poisoned_count < 512
    assert est.value > 0.9


def test_budget_validation():
    def batch(X):
        return np.zeros(X.shape[1])

    def scalar(x):
        return 0.0

    with pytest.raises(ValueError):
        sampling.estimate_supremum(DISC, batch, scalar, 0, seed=0)
