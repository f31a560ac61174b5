"""Automorphism groups of the supported unit balls.

Three families cover every space this library handles: disc Mobius maps and
their coordinatewise products with a permutation (polydisc), Mobius maps of
the Hilbert ball built from the projection onto span(a), and generalized
permutations (phase times permutation), which are exactly the surjective
linear isometries of l^p in dimension >= 2 for p not in {2, inf}.

The disc map is normalized as an involution, w -> (a - w)/(1 - conj(a) w),
so phi_a(0) = a, phi_a(a) = 0 and phi_a' (0) = -(1 - |a|^2); an extra phase
e^{i alpha} in front gives the general disc automorphism.  Every class is a
frozen dataclass exposing apply (vector to vector), derivative_at_zero (an
n x n matrix as nested tuples) and to_expr_components (expression trees for
each coordinate, ready for substitution into a function being pulled back).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

from . import expressions as ex
from .errors import DimensionMismatch, OutsideDomain, UnsupportedSpace
from .geometry import INF, BallSpace, dual_norm, norm


def _check_permutation(sigma) -> tuple:
    sig = tuple(int(s) for s in sigma)
    if sorted(sig) != list(range(1, len(sig) + 1)):
        raise ValueError(f"not a permutation of 1..{len(sig)}: {sig}")
    return sig


def _check_point(y, n: int) -> tuple:
    pt = tuple(map(complex, y))
    if len(pt) != n:
        raise DimensionMismatch(f"expected a point with {n} coordinates, got {len(pt)}")
    return pt


@dataclass(frozen=True)
class DiscMobius:
    """w -> e^{i alpha} (a - w)/(1 - conj(a) w) on the unit disc."""

    a: complex
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "alpha", float(self.alpha))
        if abs(self.a) >= 1.0:
            raise OutsideDomain(f"disc parameter must satisfy |a| < 1, got |a| = {abs(self.a)}")

    @property
    def n(self) -> int:
        return 1

    def apply_scalar(self, w: complex) -> complex:
        w = complex(w)
        if abs(w) >= 1.0:
            raise OutsideDomain(f"point outside the disc: |w| = {abs(w)}")
        phase = cmath.exp(1j * self.alpha)
        return phase * (self.a - w) / (1.0 - self.a.conjugate() * w)

    def apply(self, y) -> tuple:
        (w,) = _check_point(y, 1)
        return (self.apply_scalar(w),)

    def derivative_at_zero(self) -> tuple:
        phase = cmath.exp(1j * self.alpha)
        return ((phase * -(1.0 - abs(self.a) ** 2),),)

    def to_expr_components(self) -> tuple:
        phase = cmath.exp(1j * self.alpha)
        num = ex.Mul(ex.Const(phase), ex.Sub(ex.Const(self.a), ex.Var(1)))
        den = ex.Sub(ex.Const(1.0 + 0j), ex.Mul(ex.Const(self.a.conjugate()), ex.Var(1)))
        return (ex.Div(num, den),)


@dataclass(frozen=True)
class PolydiscAuto:
    """Coordinatewise disc maps composed with a permutation of the inputs.

    Coordinate k of the output is components[k-1] applied to input
    coordinate sigma(k).
    """

    components: tuple
    sigma: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        for c in comps:
            if not isinstance(c, DiscMobius):
                raise TypeError(f"components must be DiscMobius, got {type(c).__name__}")
        object.__setattr__(self, "components", comps)
        sig = _check_permutation(self.sigma)
        if len(sig) != len(comps):
            raise ValueError(
                f"{len(comps)} components but permutation of length {len(sig)}"
            )
        object.__setattr__(self, "sigma", sig)

    @property
    def n(self) -> int:
        return len(self.components)

    def apply(self, y) -> tuple:
        pt = _check_point(y, self.n)
        return tuple(
            c.apply_scalar(pt[self.sigma[k] - 1]) for k, c in enumerate(self.components)
        )

    def derivative_at_zero(self) -> tuple:
        n = self.n
        rows = []
        for k, c in enumerate(self.components):
            d = c.derivative_at_zero()[0][0]
            rows.append(tuple(d if j + 1 == self.sigma[k] else 0j for j in range(n)))
        return tuple(rows)

    def to_expr_components(self) -> tuple:
        out = []
        for k, c in enumerate(self.components):
            (comp,) = c.to_expr_components()
            out.append(ex.substitute(comp, (ex.Var(self.sigma[k]),)))
        return tuple(out)


@dataclass(frozen=True)
class HilbertMobius:
    """Involutive Mobius map of the Euclidean ball with phi(0) = a.

    phi_a(y) = (a - P_a y - s Q_a y) / (1 - <y, a>) with P_a the projection
    onto span(a), Q_a = I - P_a and s = sqrt(1 - |a|^2); phi_0 = -identity.
    """

    a: tuple

    def __post_init__(self):
        pt = tuple(map(complex, self.a))
        if not pt:
            raise ValueError("parameter must have at least one coordinate")
        object.__setattr__(self, "a", pt)
        if math.sqrt(sum(abs(c) ** 2 for c in pt)) >= 1.0:
            raise OutsideDomain("parameter must lie strictly inside the Euclidean ball")

    @property
    def n(self) -> int:
        return len(self.a)

    def _normsq(self) -> float:
        return sum(abs(c) ** 2 for c in self.a)

    def apply(self, y) -> tuple:
        pt = _check_point(y, self.n)
        if math.sqrt(sum(abs(c) ** 2 for c in pt)) >= 1.0:
            raise OutsideDomain("point outside the Euclidean ball")
        nsq = self._normsq()
        if nsq == 0.0:
            return tuple(-w for w in pt)
        ip = sum(w * c.conjugate() for w, c in zip(pt, self.a))
        s = math.sqrt(1.0 - nsq)
        den = 1.0 - ip
        scale = ip / nsq
        out = []
        for k, w in enumerate(pt):
            p_k = scale * self.a[k]
            q_k = w - p_k
            out.append((self.a[k] - p_k - s * q_k) / den)
        return tuple(out)

    def derivative_at_zero(self) -> tuple:
        n = self.n
        nsq = self._normsq()
        if nsq == 0.0:
            return tuple(
                tuple(-1.0 + 0j if j == k else 0j for j in range(n)) for k in range(n)
            )
        s = math.sqrt(1.0 - nsq)
        rows = []
        for k in range(n):
            row = []
            for j in range(n):
                p_kj = self.a[k] * self.a[j].conjugate() / nsq
                q_kj = (1.0 if j == k else 0.0) - p_kj
                row.append(-(s * s * p_kj + s * q_kj))
            rows.append(tuple(row))
        return tuple(rows)

    def to_expr_components(self) -> tuple:
        n = self.n
        nsq = self._normsq()
        if nsq == 0.0:
            return tuple(ex.Neg(ex.Var(k + 1)) for k in range(n))
        s = math.sqrt(1.0 - nsq)
        # <x, a> as a function of x
        inner = ex.Linear(tuple(c.conjugate() for c in self.a))
        den = ex.Sub(ex.Const(1.0 + 0j), inner)
        out = []
        for k in range(n):
            # P_a x + s Q_a x = (1 - s) (<x,a>/|a|^2) a + s x, coordinate k
            proj = ex.Mul(ex.Const((1.0 - s) * self.a[k] / nsq), inner)
            num = ex.Sub(
                ex.Const(self.a[k]),
                ex.Add(proj, ex.Mul(ex.Const(complex(s)), ex.Var(k + 1))),
            )
            out.append(ex.Div(num, den))
        return tuple(out)


@dataclass(frozen=True)
class GenPermIsometry:
    """Generalized permutation: output k is phases[k-1] times input sigma(k)."""

    sigma: tuple
    phases: tuple

    def __post_init__(self):
        sig = _check_permutation(self.sigma)
        ph = tuple(map(complex, self.phases))
        if len(ph) != len(sig):
            raise ValueError(f"{len(ph)} phases but permutation of length {len(sig)}")
        for p in ph:
            if abs(abs(p) - 1.0) > 1e-9:
                raise ValueError(f"phase must be unimodular, got |phase| = {abs(p)}")
        object.__setattr__(self, "sigma", sig)
        object.__setattr__(self, "phases", ph)

    @classmethod
    def identity(cls, n: int) -> "GenPermIsometry":
        return cls(tuple(range(1, n + 1)), (1.0 + 0j,) * n)

    @property
    def n(self) -> int:
        return len(self.sigma)

    def apply(self, y) -> tuple:
        pt = _check_point(y, self.n)
        return tuple(self.phases[k] * pt[self.sigma[k] - 1] for k in range(self.n))

    def derivative_at_zero(self) -> tuple:
        n = self.n
        return tuple(
            tuple(self.phases[k] if j + 1 == self.sigma[k] else 0j for j in range(n))
            for k in range(n)
        )

    def to_expr_components(self) -> tuple:
        return tuple(
            ex.Mul(ex.Const(self.phases[k]), ex.Var(self.sigma[k]))
            for k in range(self.n)
        )


# ---------------------------------------------------------------------------
# Module-level operations
# ---------------------------------------------------------------------------


def apply(phi, y) -> tuple:
    return phi.apply(y)


def derivative_at_zero(phi) -> tuple:
    return phi.derivative_at_zero()


def point_automorphism(space: BallSpace, x):
    """An automorphism of the ball sending 0 to x.

    Exists for every x in the disc, polydisc and Hilbert cases.  For l^p
    with p not in {2, inf} and n >= 2 the only automorphisms are linear
    isometries, so x must be 0 there.
    """
    pt = _check_point(x, space.n)
    if norm(space, pt) >= 1.0:
        raise OutsideDomain("point must lie strictly inside the ball")
    if space.n == 1:
        return DiscMobius(pt[0])
    if space.p == INF:
        return PolydiscAuto(
            tuple(DiscMobius(c) for c in pt), tuple(range(1, space.n + 1))
        )
    if space.p == 2.0:
        return HilbertMobius(pt)
    if all(c == 0 for c in pt):
        return GenPermIsometry.identity(space.n)
    raise UnsupportedSpace(
        f"no automorphism of {space.describe()} moves 0 to a nonzero point: "
        "its automorphisms are the generalized permutations, which fix 0"
    )


def pullback_expr(f: ex.Expr, phi) -> ex.Expr:
    """The composition f after phi as an expression tree."""
    return ex.substitute(f, phi.to_expr_components())


def pullback_derivative_norm(f: ex.Expr, phi, space: BallSpace) -> float:
    """Dual norm of (f o phi)'(0), via the chain rule at phi(0)."""
    n = space.n
    if phi.n != n:
        raise DimensionMismatch(
            f"automorphism acts on {phi.n} coordinates, space has {n}"
        )
    if ex.max_variable(f) > n:
        raise DimensionMismatch(
            f"expression uses x{ex.max_variable(f)}, space has {n} coordinates"
        )
    x0 = phi.apply((0j,) * n)
    _, grad = ex.eval_gradient(f, x0)
    deriv = phi.derivative_at_zero()
    covector = tuple(
        sum(grad[k] * deriv[k][j] for k in range(n)) for j in range(n)
    )
    return dual_norm(space, covector)
