"""Acceptance gate: nine pinned criteria, one pass/fail line each.

Every criterion states a tolerance fixed in advance.  The prints keep a
human-readable audit trail in the test log; the asserts are the gate.
"""

import math

import numpy as np
import pytest

from blochlab import automorphisms as am
from blochlab import catalog as cat
from blochlab import expressions as ex
from blochlab import sampling
from blochlab import seminorms as sn
from blochlab.geometry import (
    INF,
    BallSpace,
    dual_norm,
    norm,
    norm_batch,
    pseudo_distance,
)

from conftest import fd_gradient, interior_points, rel_err

DISC = cat.DISC
BIDISC = cat.BIDISC
EUCLID2 = cat.EUCLID2
L32 = cat.L3_2


def _report(num, name, ok, detail):
    line = f"criterion {num} ({name}): {'PASS' if ok else 'FAIL'} - {detail}"
    print(line)
    assert ok, line


def _shared_stream(space, budget, seed):
    S = sampling.shell_count(budget)
    cols = [
        sampling.shell_points(space, j, len(range(j, budget, S)), seed)
        for j in range(S)
    ]
    return np.concatenate(cols, axis=1)


def test_criterion_1_classical_embedding():
    worst = -math.inf
    for t in range(200):
        f, _ = cat.random_polynomial(1, 5, 20000 + t)
        X = _shared_stream(DISC, 10**4, t)
        dens = sn.nat_density_batch(f, DISC, X)
        sup = np.abs(ex.eval_value_batch(f, X))
        worst = max(worst, float(dens.max() - sup.max()))
    _report(
        1,
        "classical embedding",
        worst <= 1e-8,
        f"200 polynomials, 10^4 shared points: max(density - supnorm) = {worst:.3e} <= 1e-8",
    )


def test_criterion_2_schwarz_pick():
    entries = [
        e
        for e in cat.all_entries()
        if e.name.startswith(("mobius:", "blaschke:"))
    ]
    per = max(1, 1000 // len(entries) + 1)
    worst = -math.inf
    total = 0
    for k, e in enumerate(entries):
        X = interior_points(DISC, 7000 + k, per, rmax=0.97)
        for i in range(per):
            x = (complex(X[0, i]),)
            v, g = ex.eval_gradient(e.expr, x)
            lhs = (1.0 - abs(x[0])) * abs(g[0])
            rhs = 1.0 - abs(v) ** 2
            worst = max(worst, lhs - rhs)
            total += 1
    a = 0.3 + 0j
    phi = am.DiscMobius(a)
    d0 = abs(phi.derivative_at_zero()[0][0])
    eq_err = abs(d0 - (1.0 - abs(a) ** 2))
    ok = worst <= 1e-8 and eq_err <= 1e-10 and abs(d0 - 0.91) <= 1e-12
    _report(
        2,
        "Schwarz-Pick bound",
        ok,
        f"{total} points: max violation {worst:.3e} <= 1e-8; "
        f"|phi_0.3'(0)| = {d0} (equality error {eq_err:.1e} <= 1e-10)",
    )


def test_criterion_3_bidisc_separation():
    e = cat.lookup("countex1")
    closed_ok = True
    details = []
    for n in (10, 100, 1000):
        val = sn.inv_density(e.expr, e.space, (1.0 - 1.0 / n + 0j, 0j))
        closed = (2.0 - 1.0 / n) + math.sqrt(math.log(n) ** 2 + math.pi**2)
        closed_ok &= abs(val - closed) <= 1e-9 and val > 1.0 + math.log(n)
        details.append(f"n={n}: {val:.4f} > {1 + math.log(n):.4f}")
    inv_est = sn.estimate_sup("inv", e.expr, e.space, 10**5, 0)
    slope = inv_est.divergence.slope if inv_est.divergence else float("nan")
    slope_ok = inv_est.divergence is not None and abs(slope - 1.0) <= 0.05
    nat_est = sn.estimate_sup("nat", e.expr, e.space, 10**5, 0)
    m = sn.oracle_wlogw_sup()
    window_ok = 2.0 <= nat_est.value <= 4.0 + m
    ok = closed_ok and slope_ok and window_ok
    _report(
        3,
        "bidisc separation",
        ok,
        f"{'; '.join(details)}; inv slope {slope:.4f} in 1.0+-0.05; "
        f"nat estimate {nat_est.value:.4f} in [2, {4 + m:.4f}]",
    )


def test_criterion_4_lp_reverse_separation():
    e = cat.lookup("reciprocal")
    vals = []
    closed_ok = True
    for t, expect in ((0.9, 19.0), (0.99, 199.0), (0.999, 1999.0)):
        v = sn.nat_density(e.expr, e.space, (t + 0j, 0j))
        closed_ok &= abs(v - expect) <= 1e-9
        vals.append(f"{v:.6f}")
    X = interior_points(e.space, 31, 100, rmax=0.95)
    inv_vals = [sn.inv_density(e.expr, e.space, tuple(X[:, i])) for i in range(100)]
    spread = max(inv_vals) - min(inv_vals)
    const_ok = abs(max(inv_vals) - 1.0) <= 1e-12 and spread <= 1e-12
    ok = closed_ok and const_ok
    _report(
        4,
        "lp reverse separation",
        ok,
        f"nat at t=0.9/0.99/0.999: {', '.join(vals)} (tol 1e-9); "
        f"inv = 1 exactly over 100 points (spread {spread:.1e} <= 1e-12)",
    )


def test_criterion_5_chain_rule_identity():
    pool = [
        e.expr
        for e in cat.all_entries()
        if e.space == BIDISC and e.bounded
    ]
    assert len(pool) >= 10
    worst = 0.0
    total = 0
    k = 0
    while total < 1000:
        f = pool[k % len(pool)]
        X = interior_points(BIDISC, 40000 + k, 1, rmax=0.85)
        x = (complex(X[0, 0]), complex(X[1, 0]))
        phi = am.point_automorphism(BIDISC, x)
        pulled = ex.substitute(f, phi.to_expr_components())
        _, g = ex.eval_gradient(pulled, (0j, 0j))
        route = dual_norm(BIDISC, g)
        _, gf = ex.eval_gradient(f, x)
        closed = sum(
            (1.0 - abs(x[j]) ** 2) * abs(gf[j]) for j in range(2)
        )
        worst = max(worst, rel_err(route, closed))
        total += 1
        k += 1
    _report(
        5,
        "chain-rule identity",
        worst <= 1e-9,
        f"{total} (f, x) pairs on the bidisc: max relative gap {worst:.3e} <= 1e-9",
    )


def test_criterion_6_hinfty_embeddings():
    entries = cat.bounded_entries()
    assert len(entries) >= 100
    worst2 = -math.inf
    worst3 = -math.inf
    worst_inv = -math.inf
    for e in entries:
        nat = sn.estimate_sup("nat", e.expr, e.space, 2048, 0).value
        sup = sn.sup_norm_estimate(e.expr, e.space, 2048, 0)
        f0 = abs(ex.eval_value(e.expr, (0j,) * e.space.n))
        worst2 = max(worst2, nat - 2.0 * sup)
        worst3 = max(worst3, (nat + f0) - 3.0 * sup)
        if e.space.p == INF or e.space.n == 1:
            inv = sn.estimate_sup("inv", e.expr, e.space, 2048, 0).value
            worst_inv = max(worst_inv, inv - 2.0 * sup)
    ok = worst2 <= 1e-6 and worst3 <= 1e-6 and worst_inv <= 1e-6
    _report(
        6,
        "H-infinity embeddings",
        ok,
        f"{len(entries)} bounded functions: nat-2sup {worst2:.3e}, "
        f"bloch-3sup {worst3:.3e}, inv-2sup {worst_inv:.3e}, all <= 1e-6",
    )


def test_criterion_7_unbounded_bloch_witness():
    spaces = [
        ("h", DISC),
        ("log_functional:linf:2", BIDISC),
        ("log_functional:l2:2", EUCLID2),
        ("log_functional:lp:3:2", L32),
    ]
    worst_density = -math.inf
    min_sup = math.inf
    for name, space in spaces:
        e = cat.lookup(name)
        X = _shared_stream(space, 10**4, 5)
        with np.errstate(all="ignore"):
            d = sn.nat_density_batch(e.expr, space, X)
        d = d[np.isfinite(d)]
        worst_density = max(worst_density, float(d.max()))
        supv = sn.sup_norm_estimate(e.expr, space, 10**6, 0)
        min_sup = min(min_sup, supv)
    ok = worst_density <= 2.0 + 1e-9 and min_sup > 5.0
    _report(
        7,
        "unbounded Bloch witness",
        ok,
        f"log(1-x1) on 4 spaces: max density {worst_density:.12f} <= 2+1e-9; "
        f"min sup estimate at budget 10^6 is {min_sup:.3f} > 5",
    )


def test_criterion_8_geometry_suite():
    rng = np.random.default_rng(808)
    Z = interior_points(DISC, 81, 1000, rmax=0.95)
    W = interior_points(DISC, 82, 1000, rmax=0.95)
    A = interior_points(DISC, 83, 1000, rmax=0.9)
    alphas = rng.random(1000) * 2 * math.pi
    worst_inv = -math.inf
    for i in range(1000):
        phi = am.DiscMobius(complex(A[0, i]), float(alphas[i]))
        z, w = complex(Z[0, i]), complex(W[0, i])
        lhs = pseudo_distance(DISC, phi.apply((z,)), phi.apply((w,)))
        rhs = pseudo_distance(DISC, (z,), (w,))
        worst_inv = max(worst_inv, abs(lhs - rhs))
    maps = [cat.lookup("mobius:0.5"), cat.lookup("blaschke:0.3:0.5")]
    worst_con = -math.inf
    for k, e in enumerate(maps):
        X = interior_points(DISC, 84 + k, 500, rmax=0.95)
        Y = interior_points(DISC, 86 + k, 500, rmax=0.95)
        for i in range(500):
            x, y = (complex(X[0, i]),), (complex(Y[0, i]),)
            fx = ex.eval_value(e.expr, x)
            fy = ex.eval_value(e.expr, y)
            lhs = pseudo_distance(DISC, (fx,), (fy,))
            rhs = pseudo_distance(DISC, x, y)
            worst_con = max(worst_con, lhs - rhs)
    worst_eq = -math.inf
    for space in (DISC, BIDISC, EUCLID2, L32):
        Y = interior_points(space, 88, 250, rmax=0.999)
        for i in range(250):
            y = tuple(Y[:, i])
            worst_eq = max(
                worst_eq,
                abs(pseudo_distance(space, y, (0j,) * space.n) - norm(space, y)),
            )
    ok = worst_inv <= 1e-10 and worst_con <= 1e-10 and worst_eq <= 1e-10
    _report(
        8,
        "geometry suite",
        ok,
        f"invariance {worst_inv:.2e}, contractivity {worst_con:.2e}, "
        f"center equality {worst_eq:.2e}, all <= 1e-10",
    )


def test_criterion_9_numerics():
    worst_fd = 0.0
    for e in cat.all_entries():
        X = interior_points(e.space, 90, 100, rmax=0.8)
        for i in range(100):
            x = tuple(X[:, i])
            _, g = ex.eval_gradient(e.expr, x)
            fd = fd_gradient(e.expr, x, h=1e-5)
            for a, b in zip(g, fd):
                worst_fd = max(worst_fd, rel_err(a, b))
    cases = [
        ("nat", cat.lookup("countex1")),
        ("inv", cat.lookup("countex1")),
        ("nat", cat.lookup("reciprocal")),
        ("nat", cat.lookup("h")),
        ("nat", cat.lookup("mobius:0.5")),
        ("inv", cat.lookup("mean:l2:2")),
        ("nat", cat.lookup("monomial:2:2:l2:2")),
        ("inv", cat.lookup("log_functional:linf:2")),
        ("nat", cat.lookup("randpoly:2:0:linf:2")),
        ("nat", cat.lookup("cayley:2")),
    ]
    assert len(cases) == 10
    monotone = True
    for kind, e in cases:
        prev = -math.inf
        budget = 64
        while budget <= 2048:
            v = sn.estimate_sup(kind, e.expr, e.space, budget, 0).value
            if v < prev:
                monotone = False
            prev = v
            budget *= 2
    ok = worst_fd < 1e-6 and monotone
    _report(
        9,
        "numerics",
        ok,
        f"autodiff vs central differences on all catalog functions, 100 points "
        f"each: max relative error {worst_fd:.3e} < 1e-6; estimator monotone "
        f"under doubling on 10 cases: {monotone}",
    )
