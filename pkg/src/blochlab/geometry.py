"""Unit balls of finite-dimensional complex l^p spaces and their metrics.

A BallSpace is the open unit ball of (C^n, ||.||_p) with 1 <= p <= inf.
Norms and dual norms treat p = 1, p = 2 and p = inf as explicit cases, never
as limits of the general formula.

Distances.  The pseudohyperbolic distance is implemented only where a closed
form is available:

    disc (n = 1):        rho(z, w) = |z - w| / |1 - conj(z) w|
    polydisc (p = inf):  rho(x, y) = max_k rho(x_k, y_k)
    any ball, one point at the origin:  rho(x, 0) = ||x||

Every other point pair raises UnsupportedSpace rather than returning a guess.
The hyperbolic distance is beta = (1/2) log((1 + rho) / (1 - rho)).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .errors import OutsideDomain, UnsupportedSpace

INF = math.inf


@dataclass(frozen=True)
class BallSpace:
    """Open unit ball of (C^n, ||.||_p)."""

    n: int
    p: float

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"dimension must be a positive integer, got {self.n!r}")
        if not (self.p >= 1.0):
            raise ValueError(f"norm exponent must satisfy p >= 1, got {self.p!r}")

    def describe(self) -> str:
        if self.p == INF:
            return f"linf:{self.n}"
        if self.p == int(self.p):
            return f"lp:{int(self.p)}:{self.n}" if self.p not in (2.0,) else f"l2:{self.n}"
        return f"lp:{self.p}:{self.n}"


def _check_len(space: BallSpace, x: Sequence[complex], name: str = "vector") -> None:
    if len(x) != space.n:
        raise ValueError(f"{name} has length {len(x)}, space dimension is {space.n}")


def norm(space: BallSpace, x: Sequence[complex]) -> float:
    """||x||_p on the given space."""
    _check_len(space, x)
    p = space.p
    if p == INF:
        return max(abs(z) for z in x)
    if p == 1.0:
        return sum(abs(z) for z in x)
    if p == 2.0:
        return math.sqrt(sum((z.real * z.real + z.imag * z.imag) for z in map(complex, x)))
    return sum(abs(z) ** p for z in x) ** (1.0 / p)


def conjugate_exponent(p: float) -> float:
    """q with 1/p + 1/q = 1, with the endpoint cases handled explicitly."""
    if p == 1.0:
        return INF
    if p == INF:
        return 1.0
    if p == 2.0:
        return 2.0
    return p / (p - 1.0)


def dual_norm(space: BallSpace, L: Sequence[complex]) -> float:
    """Operator norm of the covector L: the l^q norm, q conjugate to p."""
    _check_len(space, L, "covector")
    q = conjugate_exponent(space.p)
    dual_space = BallSpace(space.n, q)
    return norm(dual_space, L)


def norming_vector(space: BallSpace, L: Sequence[complex]) -> tuple:
    """A unit vector x with L(x) = dual_norm(L), by the Hoelder equality case."""
    _check_len(space, L, "covector")
    d = dual_norm(space, L)
    if d == 0.0:
        return (0j,) * space.n
    p, q = space.p, conjugate_exponent(space.p)
    out = []
    if p == INF:
        for c in L:
            out.append(c.conjugate() / abs(c) if c != 0 else 1 + 0j)
    elif p == 1.0:
        k = max(range(space.n), key=lambda i: abs(L[i]))
        for i, c in enumerate(L):
            out.append(c.conjugate() / abs(c) if i == k else 0j)
    else:
        for c in L:
            if c == 0:
                out.append(0j)
            else:
                out.append((c.conjugate() / abs(c)) * (abs(c) / d) ** (q - 1.0))
    return tuple(out)


def norm_batch(space: BallSpace, X: np.ndarray) -> np.ndarray:
    """||.||_p along axis 0 of a (n, B) complex array."""
    A = np.abs(X)
    p = space.p
    if p == INF:
        return A.max(axis=0)
    if p == 1.0:
        return A.sum(axis=0)
    if p == 2.0:
        return np.sqrt((A * A).sum(axis=0))
    return (A**p).sum(axis=0) ** (1.0 / p)


def dual_norm_batch(space: BallSpace, G: np.ndarray) -> np.ndarray:
    q = conjugate_exponent(space.p)
    return norm_batch(BallSpace(space.n, q), G)


def pseudo_disc(z: complex, w: complex) -> float:
    """rho(z, w) = |z - w| / |1 - conj(z) w| on the unit disc."""
    if abs(z) >= 1.0 or abs(w) >= 1.0:
        raise OutsideDomain("pseudo_disc needs both points inside the unit disc")
    return abs(z - w) / abs(1.0 - z.conjugate() * w)


def pseudo_polydisc(x: Sequence[complex], y: Sequence[complex]) -> float:
    """Coordinatewise maximum of the disc distances."""
    if len(x) != len(y):
        raise ValueError("point dimensions differ")
    return max(pseudo_disc(a, b) for a, b in zip(x, y))


def pseudo_distance(space: BallSpace, x: Sequence[complex], y: Sequence[complex]) -> float:
    """Pseudohyperbolic distance where a closed form exists; see module notes."""
    _check_len(space, x, "x")
    _check_len(space, y, "y")
    nx, ny = norm(space, x), norm(space, y)
    if nx >= 1.0 or ny >= 1.0:
        raise OutsideDomain("points must lie in the open unit ball")
    if space.n == 1:
        return pseudo_disc(complex(x[0]), complex(y[0]))
    if space.p == INF:
        return pseudo_polydisc(x, y)
    if all(z == 0 for z in y):
        return nx
    if all(z == 0 for z in x):
        return ny
    raise UnsupportedSpace(
        f"no closed form for the pseudohyperbolic distance between two "
        f"non-zero points on {space.describe()}"
    )


def hyperbolic(rho: float) -> float:
    """beta = (1/2) log((1 + rho) / (1 - rho)) = atanh(rho)."""
    if not 0.0 <= rho < 1.0:
        raise OutsideDomain(f"pseudohyperbolic distance must lie in [0, 1), got {rho}")
    return math.atanh(rho)


def hyperbolic_distance(space: BallSpace, x: Sequence[complex], y: Sequence[complex]) -> float:
    return hyperbolic(pseudo_distance(space, x, y))


def schwarz_rho_bound(
    x: Sequence[complex], y: Sequence[complex], r: float, space: BallSpace
) -> tuple:
    """Return (rho(y, x), ||y - x|| / r) for y in the ball B(x, r) inside the unit ball.

    The first entry never exceeds the second.  Preconditions: ||y - x|| < r and
    ||x|| + r <= 1, so that B(x, r) sits inside the unit ball.
    """
    _check_len(space, x, "x")
    _check_len(space, y, "y")
    if r <= 0.0:
        raise ValueError("radius must be positive")
    if norm(space, x) + r > 1.0 + 1e-15:
        raise OutsideDomain("B(x, r) is not contained in the unit ball")
    diff = tuple(b - a for a, b in zip(x, y))
    d = norm(space, diff)
    if d >= r:
        raise OutsideDomain("y must lie inside B(x, r)")
    return pseudo_distance(space, y, x), d / r
