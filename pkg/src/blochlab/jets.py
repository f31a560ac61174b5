"""Forward-mode automatic differentiation over complex scalars.

A Jet carries a value together with the gradient covector against n complex
variables, propagated through arithmetic by the usual rules:

    (a + b)'  = a' + b'
    (a * b)'  = a' b + a b'
    (a / b)'  = (a' - (a/b) b') / b
    (log a)'  = a' / a          (branch choice does not affect the derivative)
    (exp a)'  = exp(a) a'
    (a ^ m)'  via repeated multiplication, m a non-negative integer

Values are ordinary Python complex numbers.  Gradients are tuples of complex,
one entry per variable.  Mixing jets of different dimension raises
DimensionMismatch.

Branch cuts.  Two logarithm branches are provided.  "principal" takes
arg in (-pi, pi]; points on the negative real axis are admitted and get
arg = pi.  "cut_positive_axis" takes arg in (0, 2pi); points on the positive
real axis sit on the cut and poison the evaluation.

Poisoning.  Any operation whose result would contain a NaN or infinity
raises EvaluationPoisoned instead of returning it, as do division by a zero
value and log of zero.  No non-finite number is ever handed downstream.
"""

from __future__ import annotations

import cmath
import math

from .errors import DimensionMismatch, EvaluationPoisoned

BRANCH_PRINCIPAL = "principal"
BRANCH_CUT_POSITIVE = "cut_positive_axis"
_TWO_PI = 2.0 * math.pi


def _finite(z: complex) -> bool:
    return math.isfinite(z.real) and math.isfinite(z.imag)


class Jet:
    """Value plus gradient covector of a holomorphic quantity."""

    __slots__ = ("val", "grad")

    def __init__(self, val: complex, grad: tuple):
        if not _finite(val):
            raise EvaluationPoisoned(f"non-finite jet value {val!r}")
        for g in grad:
            if not _finite(g):
                raise EvaluationPoisoned(f"non-finite jet gradient entry {g!r}")
        self.val = val
        self.grad = grad

    @property
    def dim(self) -> int:
        return len(self.grad)

    def __repr__(self) -> str:
        return f"Jet({self.val!r}, grad={self.grad!r})"

    def __add__(self, other: "Jet") -> "Jet":
        return jet_add(self, other)

    def __sub__(self, other: "Jet") -> "Jet":
        return jet_sub(self, other)

    def __mul__(self, other: "Jet") -> "Jet":
        return jet_mul(self, other)

    def __truediv__(self, other: "Jet") -> "Jet":
        return jet_div(self, other)

    def __neg__(self) -> "Jet":
        return Jet(-self.val, tuple(-g for g in self.grad))


def jet_const(value: complex, n: int) -> Jet:
    """Constant jet: zero gradient against n variables."""
    if n < 0:
        raise ValueError("dimension must be non-negative")
    return Jet(complex(value), (0j,) * n)


def jet_var(k: int, value: complex, n: int) -> Jet:
    """Seed jet for variable k (1-based) among n variables."""
    if not 1 <= k <= n:
        raise IndexError(f"variable index {k} outside 1..{n}")
    grad = tuple(1 + 0j if i == k - 1 else 0j for i in range(n))
    return Jet(complex(value), grad)


def _check_dims(a: Jet, b: Jet) -> None:
    if len(a.grad) != len(b.grad):
        raise DimensionMismatch(
            f"jet dimensions differ: {len(a.grad)} vs {len(b.grad)}"
        )


def jet_add(a: Jet, b: Jet) -> Jet:
    _check_dims(a, b)
    return Jet(a.val + b.val, tuple(x + y for x, y in zip(a.grad, b.grad)))


def jet_sub(a: Jet, b: Jet) -> Jet:
    _check_dims(a, b)
    return Jet(a.val - b.val, tuple(x - y for x, y in zip(a.grad, b.grad)))


def jet_mul(a: Jet, b: Jet) -> Jet:
    _check_dims(a, b)
    av, bv = a.val, b.val
    return Jet(av * bv, tuple(x * bv + y * av for x, y in zip(a.grad, b.grad)))


def jet_div(a: Jet, b: Jet) -> Jet:
    _check_dims(a, b)
    bv = b.val
    if bv == 0:
        raise EvaluationPoisoned("division by zero value")
    q = a.val / bv
    return Jet(q, tuple((x - q * y) / bv for x, y in zip(a.grad, b.grad)))


def jet_neg(a: Jet) -> Jet:
    return Jet(-a.val, tuple(-g for g in a.grad))


def complex_log(z: complex, branch: str = BRANCH_PRINCIPAL) -> complex:
    """Scalar logarithm with an explicit branch choice.

    Points with a signed-zero imaginary part are treated as exactly on the
    real axis, so -0.1 - 0.0j gets arg = pi under either branch.
    """
    if z == 0:
        raise EvaluationPoisoned("log of zero")
    re, im = z.real, z.imag
    if im == 0.0:
        theta = 0.0 if re > 0.0 else math.pi
    else:
        theta = math.atan2(im, re)
    if branch == BRANCH_CUT_POSITIVE:
        if theta == 0.0:
            raise EvaluationPoisoned("log argument on the positive-real cut")
        if theta < 0.0:
            theta += _TWO_PI
    elif branch != BRANCH_PRINCIPAL:
        raise ValueError(f"unknown branch {branch!r}")
    return complex(math.log(abs(z)), theta)


def jet_log(a: Jet, branch: str = BRANCH_PRINCIPAL) -> Jet:
    v = complex_log(a.val, branch)
    av = a.val
    return Jet(v, tuple(g / av for g in a.grad))


def jet_exp(a: Jet) -> Jet:
    try:
        v = cmath.exp(a.val)
    except OverflowError as exc:
        raise EvaluationPoisoned("exp overflow") from exc
    return Jet(v, tuple(v * g for g in a.grad))


def jet_ipow(a: Jet, m: int) -> Jet:
    """Integer power by repeated multiplication; m must be >= 0."""
    if m < 0:
        raise ValueError(f"negative exponent {m}")
    out = jet_const(1.0, len(a.grad))
    for _ in range(m):
        out = jet_mul(out, a)
    return out
