"""Catalog integrity: names, registered bounds, analytic gradients."""

import math

import numpy as np
import pytest

from blochlab import catalog as cat
from blochlab import expressions as ex
from blochlab import seminorms as sn
from blochlab.geometry import INF, norm_batch

from conftest import fd_gradient, interior_points, rel_err


def test_catalog_size_and_uniqueness():
    entries = cat.all_entries()
    names = [e.name for e in entries]
    assert len(names) == len(set(names))
    assert len(entries) >= 100
    assert len(cat.bounded_entries()) >= 100


def test_lookup():
    e = cat.lookup("countex1")
    assert e.space.p == INF and e.space.n == 2
    with pytest.raises(KeyError):
        cat.lookup("nope")


def test_entry_arities_fit_spaces():
    for e in cat.all_entries():
        assert ex.max_variable(e.expr) <= e.space.n


def test_separation_entries_flags():
    for name in ("countex1", "reciprocal", "h"):
        e = cat.lookup(name)
        assert not e.bounded
        assert e.sup_upper is None
    assert cat.lookup("countex1").nat_upper is not None
    assert cat.lookup("reciprocal").inv_upper == 1.0
    assert cat.lookup("h").nat_upper == 2.0


def test_text_round_trip_evaluates_identically():
    rng = np.random.default_rng(17)
    for e in cat.all_entries():
        text = ex.to_text(e.expr)
        back = ex.parse(text, e.space.n)
        X = interior_points(e.space, 21, 3, rmax=0.8)
        for i in range(3):
            x = tuple(X[:, i])
            v1 = ex.eval_value(e.expr, x)
            v2 = ex.eval_value(back, x)
            assert v1 == v2, e.name


def test_bounded_entries_respect_registered_sup():
    for e in cat.bounded_entries():
        X = interior_points(e.space, 33, 400, rmax=0.999)
        with np.errstate(all="ignore"):
            vals = np.abs(ex.eval_value_batch(e.expr, X))
        vals = vals[np.isfinite(vals)]
        assert vals.size
        assert vals.max() <= e.sup_upper + 1e-9, e.name


def test_bounded_entries_default_seminorm_bounds():
    for e in cat.bounded_entries():
        assert e.nat_upper is not None and e.inv_upper is not None
        assert e.nat_upper <= 2.0 * e.sup_upper + 1e-12


def test_selfmaps_stay_inside_disc():
    for e in cat.all_entries():
        if not e.name.startswith(("mobius:", "blaschke:")):
            continue
        assert e.sup_upper == 1.0
        X = interior_points(e.space, 41, 300, rmax=0.999)
        vals = np.abs(ex.eval_value_batch(e.expr, X))
        assert vals.max() < 1.0


def test_exp_and_cayley_sup_bounds():
    e = cat.lookup("expcoord")
    assert e.sup_upper == pytest.approx(math.e)
    c = cat.lookup("cayley:2")
    assert c.sup_upper == pytest.approx(1.0)
    c = cat.lookup("cayley:1.5")
    assert c.sup_upper == pytest.approx(2.0)


def test_mean_lp_sup_bound():
    e = cat.lookup("mean:lp:3:2")
    # sup of |(x1+x2)/2| over the l^3 ball: dual norm of (1/2, 1/2) in l^{3/2}
    assert e.sup_upper == pytest.approx(0.5 * 2.0 ** (2.0 / 3.0))


def test_random_polynomial_deterministic():
    f1, s1 = cat.random_polynomial(2, 3, 5)
    f2, s2 = cat.random_polynomial(2, 3, 5)
    assert f1 == f2 and s1 == s2
    f3, _ = cat.random_polynomial(2, 3, 6)
    assert f3 != f1
    assert s1 > 0.0


def test_random_polynomial_coeff_sum_bounds_values():
    f, coeff_sum = cat.random_polynomial(2, 4, 11)
    X = interior_points(cat.BIDISC, 51, 200, rmax=0.999)
    vals = np.abs(ex.eval_value_batch(f, X))
    assert vals.max() <= coeff_sum + 1e-9


def test_multi_indices_cover_degree():
    idx = list(cat.multi_indices(2, 2))
    assert (0, 0) in idx and (2, 0) in idx and (1, 1) in idx
    assert (2, 1) not in idx
    assert len(idx) == 6


def test_gradients_match_finite_differences():
    for e in cat.all_entries():
        X = interior_points(e.space, 61, 8, rmax=0.8)
        checked = 0
        for i in range(8):
            x = tuple(X[:, i])
            _, g = ex.eval_gradient(e.expr, x)
            fd = fd_gradient(e.expr, x, h=1e-5)
            for a, b in zip(g, fd):
                assert rel_err(a, b) < 1e-6, e.name
            checked += 1
        assert checked == 8


def test_wlogw_bound_value():
    assert cat.WLOGW_BOUND == pytest.approx(
        2.0 * math.sqrt(math.log(2.0) ** 2 + math.pi**2), rel=1e-15
    )
