"""The two Bloch densities and their supremum estimators.

The natural density at x is (1 - ||x||^2) ||f'(x)||, with the derivative
measured in the dual norm.  The invariant density is the derivative norm of
f composed with an automorphism moving 0 to x, and its form depends on the
ball:

  n = 1        (1 - |x|^2) |f'(x)|; the ball is the disc for every p
  p = inf      sum_k (1 - |x_k|^2) |d_k f(x)|, the coordinatewise pullback
  p = 2        || s^2 L_P + s L_Q ||_2 with s^2 = 1 - ||x||^2, where L_P is
               the component of f'(x) along conj(x) and L_Q the rest
  other p      dual_norm(f'(0)), independent of x: the only automorphisms
               are linear isometries, and the l^q norm is invariant under
               generalized permutations

On the polydisc 1 - max_k |x_k|^2 <= 1 - |x_k|^2 for each k, so the natural
density never exceeds the invariant one; the Hilbert form dominates because
s^2 <= s on (0, 1].  Suprema are estimated by the nested shell sampler and
reported as certified lower bounds with divergence diagnostics.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import expressions as ex
from . import sampling
from .errors import EvaluationPoisoned, OutsideDomain
from .geometry import (
    INF,
    BallSpace,
    dual_norm,
    dual_norm_batch,
    hyperbolic,
    norm,
    norm_batch,
    pseudo_distance,
)
from .sampling import SupEstimate


def _check_interior(space: BallSpace, x) -> tuple:
    pt = tuple(map(complex, x))
    if len(pt) != space.n:
        raise OutsideDomain(
            f"point has {len(pt)} coordinates, space has {space.n}"
        )
    if norm(space, pt) >= 1.0:
        raise OutsideDomain("point must lie strictly inside the ball")
    return pt


def nat_density(f: ex.Expr, space: BallSpace, x) -> float:
    """(1 - ||x||^2) times the dual norm of f'(x)."""
    pt = _check_interior(space, x)
    _, grad = ex.eval_gradient(f, pt)
    return (1.0 - norm(space, pt) ** 2) * dual_norm(space, grad)


def inv_density(f: ex.Expr, space: BallSpace, x) -> float:
    """Derivative norm of f pulled back by the automorphism sending 0 to x."""
    pt = _check_interior(space, x)
    if space.n == 1:
        _, grad = ex.eval_gradient(f, pt)
        return (1.0 - abs(pt[0]) ** 2) * abs(grad[0])
    if space.p == INF:
        _, grad = ex.eval_gradient(f, pt)
        return sum(
            (1.0 - abs(pt[k]) ** 2) * abs(grad[k]) for k in range(space.n)
        )
    if space.p == 2.0:
        _, grad = ex.eval_gradient(f, pt)
        normsq = sum(abs(c) ** 2 for c in pt)
        if normsq == 0.0:
            return math.sqrt(sum(abs(g) ** 2 for g in grad))
        bilinear = sum(g * c for g, c in zip(grad, pt))
        s = math.sqrt(1.0 - normsq)
        lp = tuple(c.conjugate() * bilinear / normsq for c in pt)
        lq = tuple(g - v for g, v in zip(grad, lp))
        cov = tuple(s * s * a + s * b for a, b in zip(lp, lq))
        return math.sqrt(sum(abs(c) ** 2 for c in cov))
    # only linear isometries: the pullback norm never depends on x
    _, grad0 = ex.eval_gradient(f, (0j,) * space.n)
    return dual_norm(space, grad0)


def nat_density_batch(f: ex.Expr, space: BallSpace, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.complex128)
    _, G = ex.eval_gradient_batch(f, X)
    with np.errstate(all="ignore"):
        return (1.0 - norm_batch(space, X) ** 2) * dual_norm_batch(space, G)


def inv_density_batch(f: ex.Expr, space: BallSpace, X: np.ndarray) -> np.ndarray:
    X = np.asarray(X, dtype=np.complex128)
    B = X.shape[1]
    if space.n >= 2 and space.p not in (2.0, INF):
        try:
            _, grad0 = ex.eval_gradient(f, (0j,) * space.n)
            c = dual_norm(space, grad0)
        except EvaluationPoisoned:
            c = math.nan
        return np.full(B, c)
    _, G = ex.eval_gradient_batch(f, X)
    with np.errstate(all="ignore"):
        if space.n == 1:
            return (1.0 - np.abs(X[0]) ** 2) * np.abs(G[0])
        if space.p == INF:
            return ((1.0 - np.abs(X) ** 2) * np.abs(G)).sum(axis=0)
        # Hilbert ball
        normsq = np.sum(np.abs(X) ** 2, axis=0)
        bilinear = np.sum(G * X, axis=0)
        s = np.sqrt(np.maximum(0.0, 1.0 - normsq))
        denom = np.where(normsq == 0.0, 1.0, normsq)
        lp = np.conj(X) * (bilinear / denom)[None, :]
        lq = G - lp
        cov = (s * s)[None, :] * lp + s[None, :] * lq
        vals = np.sqrt(np.sum(np.abs(cov) ** 2, axis=0))
        plain = np.sqrt(np.sum(np.abs(G) ** 2, axis=0))
        return np.where(normsq == 0.0, plain, vals)


_KINDS = ("nat", "inv")


def estimate_sup(
    kind: str,
    f: ex.Expr,
    space: BallSpace,
    budget: int,
    seed: int,
) -> SupEstimate:
    """Seeded lower-bound estimate of the chosen seminorm of f."""
    if kind not in _KINDS:
        raise ValueError(f"kind must be one of {_KINDS}, got {kind!r}")
    if kind == "nat":
        batch = lambda X: nat_density_batch(f, space, X)
        scalar = lambda x: nat_density(f, space, x)
    else:
        batch = lambda X: inv_density_batch(f, space, X)
        scalar = lambda x: inv_density(f, space, x)
    return sampling.estimate_supremum(space, batch, scalar, budget, seed)


def sup_norm_estimate(f: ex.Expr, space: BallSpace, budget: int, seed: int) -> float:
    """Lower-bound estimate of the sup-norm over the ball."""
    est = sup_norm_estimate_full(f, space, budget, seed)
    return est.value


def sup_norm_estimate_full(
    f: ex.Expr, space: BallSpace, budget: int, seed: int
) -> SupEstimate:
    def batch(X):
        with np.errstate(all="ignore"):
            return np.abs(ex.eval_value_batch(f, X))

    def scalar(x):
        return abs(ex.eval_value(f, x))

    return sampling.estimate_supremum(space, batch, scalar, budget, seed)


def oracle_wlogw_sup(grid: int = 4096) -> float:
    """sup |w log w| over |w| <= 2, principal branch, by boundary sweep.

    For fixed argument the modulus grows with |w| on [1, 2] and the small
    |w| bump t |log t| tops out below 1.3, so the maximum sits on |w| = 2;
    the sweep includes the endpoint angle pi where it is attained.
    """
    theta = np.linspace(-math.pi, math.pi, grid + 1)
    w = 2.0 * np.exp(1j * theta)
    w = np.where(w.imag == 0.0, w.real + 0.0j, w)
    vals = np.abs(w) * np.abs(np.log(w))
    # interior check along the bump: t |log t| |(1, pi)| stays far below
    t = np.linspace(1e-12, 1.0, grid)
    bump = t * np.sqrt(np.log(t) ** 2 + math.pi**2)
    return float(max(vals.max(), bump.max()))


# ---------------------------------------------------------------------------
# Lipschitz behaviour against the hyperbolic distance
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class LipschitzReport:
    passed: bool
    checked: int
    rejected: int
    worst_slack: float
    failures: tuple


def lipschitz_check(
    f: ex.Expr,
    space: BallSpace,
    pairs,
    M: float,
    tolerance: float = 1e-8,
) -> LipschitzReport:
    """Verify |f(x) - f(y)| <= M beta(x, y) + tolerance pairwise.

    Pairs whose pseudohyperbolic distance has no closed form on this space,
    or that hit an evaluation singularity, are rejected individually and do
    not fail the summary.
    """
    checked = 0
    rejected = 0
    worst = -math.inf
    failures = []
    for x, y in pairs:
        try:
            rho = pseudo_distance(space, x, y)
            beta = hyperbolic(rho)
            lhs = abs(ex.eval_value(f, x) - ex.eval_value(f, y))
        except (EvaluationPoisoned, ValueError):
            # ValueError covers unsupported-space and out-of-domain pairs
            rejected += 1
            continue
        checked += 1
        slack = lhs - M * beta
        worst = max(worst, slack)
        if slack > tolerance:
            failures.append((tuple(map(complex, x)), tuple(map(complex, y)), lhs, M * beta))
    return LipschitzReport(
        passed=checked > 0 and not failures,
        checked=checked,
        rejected=rejected,
        worst_slack=worst,
        failures=tuple(failures),
    )
