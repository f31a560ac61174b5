"""Shared numerical helpers: finite differences and seeded interior samples."""

from __future__ import annotations

import numpy as np

from blochlab import expressions as ex
from blochlab import sampling


def fd_gradient(f, x, h=1e-5):
    """Central differences with a real step in each coordinate.

    Valid for holomorphic expressions: the derivative along the real
    direction is the complex derivative.
    """
    x = tuple(complex(v) for v in x)
    out = []
    for k in range(len(x)):
        xp = list(x)
        xm = list(x)
        xp[k] += h
        xm[k] -= h
        fp = ex.eval_value(f, tuple(xp))
        fm = ex.eval_value(f, tuple(xm))
        out.append((fp - fm) / (2.0 * h))
    return tuple(out)


def richardson_gradient(f, x, h=1e-4):
    """One Richardson extrapolation step on the central difference."""
    d1 = fd_gradient(f, x, h)
    d2 = fd_gradient(f, x, h / 2.0)
    return tuple((4.0 * b - a) / 3.0 for a, b in zip(d1, d2))


def interior_points(space, seed, count, rmax=0.9):
    rng = np.random.default_rng((0xC0FFEE, seed))
    return sampling.random_interior_points(space, rng, count, rmax)


def rel_err(a, b):
    scale = max(abs(a), abs(b), 1.0)
    return abs(a - b) / scale
