"""Norms, dual norms, and the pseudohyperbolic distance."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blochlab import geometry as g
from blochlab.errors import OutsideDomain, UnsupportedSpace

SPACES = [
    g.BallSpace(1, g.INF),
    g.BallSpace(2, g.INF),
    g.BallSpace(2, 2.0),
    g.BallSpace(3, 2.0),
    g.BallSpace(2, 3.0),
    g.BallSpace(3, 1.5),
]

coord = st.builds(
    complex, st.floats(-3, 3, allow_nan=False), st.floats(-3, 3, allow_nan=False)
)


def vec(n):
    return st.lists(coord, min_size=n, max_size=n).map(tuple)


def test_ballspace_validation():
    with pytest.raises(ValueError):
        g.BallSpace(0, 2.0)
    with pytest.raises(ValueError):
        g.BallSpace(2, 0.5)


def test_describe_labels():
    assert g.BallSpace(2, g.INF).describe() == "linf:2"
    assert g.BallSpace(3, 2.0).describe() == "l2:3"
    assert g.BallSpace(2, 3.0).describe() == "lp:3:2"


def test_norm_hand_values():
    s = g.BallSpace(2, g.INF)
    assert g.norm(s, (0.3 + 0.4j, 0.2)) == pytest.approx(0.5)
    s2 = g.BallSpace(2, 2.0)
    assert g.norm(s2, (3, 4j)) == pytest.approx(5.0)
    sp = g.BallSpace(2, 3.0)
    assert g.norm(sp, (1, 1)) == pytest.approx(2.0 ** (1.0 / 3.0))


def test_conjugate_exponent():
    assert g.conjugate_exponent(g.INF) == 1.0
    assert g.conjugate_exponent(2.0) == 2.0
    assert g.conjugate_exponent(3.0) == pytest.approx(1.5)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_norm_triangle_and_homogeneity(space, data):
    x = data.draw(vec(space.n))
    y = data.draw(vec(space.n))
    lam = data.draw(st.floats(-2, 2, allow_nan=False))
    nx, ny = g.norm(space, x), g.norm(space, y)
    s = tuple(a + b for a, b in zip(x, y))
    assert g.norm(space, s) <= nx + ny + 1e-9
    scaled = tuple(lam * a for a in x)
    assert g.norm(space, scaled) == pytest.approx(abs(lam) * nx, abs=1e-9)


@settings(max_examples=60, deadline=None)
@given(st.sampled_from(SPACES), st.data())
def test_dual_norm_holder_pairing(space, data):
    L = data.draw(vec(space.n))
    x = data.draw(vec(space.n))
    pairing = abs(sum(a * b for a, b in zip(L, x)))
    assert pairing <= g.dual_norm(space, L) * g.norm(space, x) + 1e-9


def test_norming_vector_achieves_dual_norm():
    rng = np.random.default_rng(7)
    for space in SPACES:
        for _ in range(20):
            L = tuple(
                complex(a, b)
                for a, b in zip(rng.standard_normal(space.n), rng.standard_normal(space.n))
            )
            d = g.dual_norm(space, L)
            if d == 0.0:
                continue
            v = g.norming_vector(space, L)
            assert g.norm(space, v) <= 1.0 + 1e-12
            pairing = sum(a * b for a, b in zip(L, v))
            assert abs(pairing.imag) < 1e-9
            assert pairing.real == pytest.approx(d, rel=1e-12, abs=1e-12)


def test_batch_norms_match_scalar():
    rng = np.random.default_rng(11)
    for space in SPACES:
        X = rng.standard_normal((space.n, 40)) + 1j * rng.standard_normal((space.n, 40))
        nb = g.norm_batch(space, X)
        db = g.dual_norm_batch(space, X)
        for i in range(40):
            col = tuple(X[:, i])
            assert nb[i] == pytest.approx(g.norm(space, col), rel=1e-12)
            assert db[i] == pytest.approx(g.dual_norm(space, col), rel=1e-12)


def test_pseudo_disc_values():
    assert g.pseudo_disc(0j, 0.5 + 0j) == pytest.approx(0.5)
    assert g.pseudo_disc(0.3 + 0j, 0.3 + 0j) == 0.0
    # |(z - w) / (1 - conj(z) w)|
    z, w = 0.5 + 0.1j, -0.2 + 0.3j
    expect = abs((z - w) / (1 - z.conjugate() * w))
    assert g.pseudo_disc(z, w) == pytest.approx(expect, rel=1e-15)


def test_pseudo_distance_dispatch():
    disc = g.BallSpace(1, 3.0)  # any exponent: the one-dimensional ball is the disc
    assert g.pseudo_distance(disc, (0.5 + 0j,), (0j,)) == pytest.approx(0.5)
    poly = g.BallSpace(2, g.INF)
    v = g.pseudo_distance(poly, (0.5 + 0j, 0.1j), (0j, 0j))
    assert v == pytest.approx(0.5)
    hilb = g.BallSpace(2, 2.0)
    assert g.pseudo_distance(hilb, (0j, 0j), (0.3, 0.4j)) == pytest.approx(0.5)
    with pytest.raises(UnsupportedSpace):
        g.pseudo_distance(hilb, (0.1 + 0j, 0j), (0.2 + 0j, 0j))


def test_pseudo_distance_rejects_boundary():
    disc = g.BallSpace(1, g.INF)
    with pytest.raises(OutsideDomain):
        g.pseudo_distance(disc, (1.0 + 0j,), (0j,))


def test_hyperbolic_scale():
    assert g.hyperbolic(0.0) == 0.0
    assert g.hyperbolic(0.5) == pytest.approx(math.atanh(0.5))
    disc = g.BallSpace(1, g.INF)
    d = g.hyperbolic_distance(disc, (0.5 + 0j,), (0j,))
    assert d == pytest.approx(math.atanh(0.5))


def test_schwarz_rho_bound_holds_on_samples():
    rng = np.random.default_rng(23)
    for space in (g.BallSpace(1, g.INF), g.BallSpace(2, g.INF)):
        for _ in range(200):
            x = tuple(
                complex(a, b) * 0.4
                for a, b in zip(rng.standard_normal(space.n), rng.standard_normal(space.n))
            )
            nx = g.norm(space, x)
            if nx >= 0.8:
                continue
            r = (1.0 - nx) * rng.uniform(0.3, 0.99)
            d = tuple(
                complex(a, b)
                for a, b in zip(rng.standard_normal(space.n), rng.standard_normal(space.n))
            )
            dn = g.norm(space, d)
            if dn == 0.0:
                continue
            t = rng.uniform(0.05, 0.95)
            y = tuple(a + t * r * b / dn for a, b in zip(x, d))
            rho, ratio = g.schwarz_rho_bound(x, y, r, space)
            assert rho <= ratio + 1e-10


def test_schwarz_rho_bound_preconditions():
    disc = g.BallSpace(1, g.INF)
    with pytest.raises(ValueError):
        g.schwarz_rho_bound((0j,), (0.1 + 0j,), -1.0, disc)
    with pytest.raises(OutsideDomain):
        g.schwarz_rho_bound((0.5 + 0j,), (0.6 + 0j,), 0.9, disc)
    with pytest.raises(OutsideDomain):
        g.schwarz_rho_bound((0j,), (0.5 + 0j,), 0.2, disc)
