"""Named function catalog with registered analytic facts.

Every entry pins down a function, the ball it lives on, and whatever bounds
are known in closed form: a sup-norm bound when the function is bounded,
and upper bounds for the two Bloch seminorms when available.  The harness
checks estimated values against these registered bounds, so the bounds must
be honest consequences of the formulas, not tuned numbers.

For a bounded entry both seminorms are at most twice the sup-norm, so those
slots default to 2 * sup_upper.  The separation witnesses are here too:

  countex1    (x2+1)*log2pi(x1-1) on the bidisc, finite nat seminorm but
              log-divergent inv density along (1 - 1/n, 0)
  reciprocal  1/(1-x1) on the l^3 ball, inv seminorm exactly 1 but nat
              density (1+t)/(1-t) blowing up along (t, 0)
  h           log(1-x1) on the disc, nat density at most 2 everywhere yet
              unbounded (the classical unbounded Bloch function), with
              log_functional:* copies on each supported 2-dim space
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from . import expressions as ex
from .automorphisms import DiscMobius
from .errors import DimensionMismatch
from .geometry import INF, BallSpace

# sup of |w log w| over |w| <= 2, principal branch: attained at w = -2
WLOGW_BOUND = 2.0 * math.sqrt(math.log(2.0) ** 2 + math.pi**2)


@dataclass(frozen=True)
class CatalogEntry:
    name: str
    space: BallSpace
    text: str
    expr: ex.Expr
    bounded: bool
    sup_upper: float | None = None
    nat_upper: float | None = None
    inv_upper: float | None = None
    notes: str = ""

    def __post_init__(self):
        if ex.max_variable(self.expr) > self.space.n:
            raise DimensionMismatch(
                f"entry {self.name!r} uses x{ex.max_variable(self.expr)} "
                f"on a {self.space.n}-dimensional space"
            )
        if self.bounded and self.sup_upper is None:
            raise ValueError(f"bounded entry {self.name!r} must register sup_upper")


def _entry(
    name: str,
    space: BallSpace,
    expr_or_text,
    bounded: bool,
    sup_upper: float | None = None,
    nat_upper: float | None = None,
    inv_upper: float | None = None,
    notes: str = "",
) -> CatalogEntry:
    if isinstance(expr_or_text, str):
        text = expr_or_text
        expr = ex.parse(text, space.n)
    else:
        expr = expr_or_text
        text = ex.to_text(expr)
    if bounded and sup_upper is not None:
        if nat_upper is None:
            nat_upper = 2.0 * sup_upper
        if inv_upper is None:
            inv_upper = 2.0 * sup_upper
    return CatalogEntry(
        name, space, text, expr, bounded, sup_upper, nat_upper, inv_upper, notes
    )


DISC = BallSpace(1, INF)
BIDISC = BallSpace(2, INF)
EUCLID2 = BallSpace(2, 2.0)
L3_2 = BallSpace(2, 3.0)


# ---------------------------------------------------------------------------
# Random polynomials
# ---------------------------------------------------------------------------


def _monomial(alpha) -> ex.Expr:
    node = None
    for k, a in enumerate(alpha, start=1):
        if a == 0:
            continue
        factor = ex.Var(k) if a == 1 else ex.IPow(ex.Var(k), a)
        node = factor if node is None else ex.Mul(node, factor)
    return ex.Const(1.0 + 0j) if node is None else node


def multi_indices(arity: int, degree: int):
    """All exponent tuples with total degree <= degree, lexicographic."""
    for alpha in itertools.product(range(degree + 1), repeat=arity):
        if sum(alpha) <= degree:
            yield alpha


def random_polynomial(arity: int, degree: int, seed: int):
    """Seeded dense polynomial; returns (expr, sum of |coefficients|).

    Coefficients are uniform in the complex unit square, each scaled by
    1/(term degree + 1).  The coefficient sum bounds the sup-norm on every
    supported ball, since each monomial has modulus < 1 there.
    """
    rng = np.random.default_rng((45324, arity, degree, seed))
    node = None
    coeff_sum = 0.0
    for alpha in multi_indices(arity, degree):
        re_, im_ = rng.random(2)
        c = complex(re_, im_) / (sum(alpha) + 1)
        coeff_sum += abs(c)
        term = ex.Mul(ex.Const(c), _monomial(alpha))
        node = term if node is None else ex.Add(node, term)
    return node, coeff_sum


# ---------------------------------------------------------------------------
# Catalog assembly
# ---------------------------------------------------------------------------


def _mobius_expr(a: complex, alpha: float = 0.0) -> ex.Expr:
    (comp,) = DiscMobius(a, alpha).to_expr_components()
    return comp


def _separation_entries() -> list:
    entries = [
        _entry(
            "countex1",
            BIDISC,
            "(x2+1)*log2pi(x1-1)",
            bounded=False,
            nat_upper=4.0 + WLOGW_BOUND,
            notes="nat seminorm finite, inv density ~ 1 + log n along (1-1/n, 0)",
        ),
        _entry(
            "reciprocal",
            L3_2,
            "1/(1-x1)",
            bounded=False,
            inv_upper=1.0,
            notes="inv seminorm exactly 1, nat density (1+t)/(1-t) along (t, 0)",
        ),
        _entry(
            "h",
            DISC,
            "log(1-x1)",
            bounded=False,
            nat_upper=2.0,
            inv_upper=2.0,
            notes="unbounded yet nat density <= 2 everywhere",
        ),
    ]
    for space in (BIDISC, EUCLID2, L3_2):
        inv_up = None
        if space.p == INF:
            inv_up = 2.0
        elif space.p not in (2.0, INF):
            # inv is dual_norm(f'(0)) = ||(-1, 0)||_q = 1
            inv_up = 1.0
        entries.append(
            _entry(
                f"log_functional:{space.describe()}",
                space,
                "log(1-x1)",
                bounded=False,
                nat_upper=2.0,
                inv_upper=inv_up,
                notes="log(1 - L(x)) with L the first-coordinate functional",
            )
        )
    return entries


_MOBIUS_PARAMS = (
    0j,
    0.3 + 0j,
    0.5 + 0j,
    0.7 + 0j,
    0.9 + 0j,
    -0.5 + 0j,
    0.3 + 0.4j,
    0.6j,
    -0.2 - 0.6j,
    0.8 + 0j,
    0.25 - 0.35j,
    -0.85 + 0j,
)

_BLASCHKE_PAIRS = (
    (0.3 + 0j, 0.5 + 0j),
    (0.5 + 0j, -0.5 + 0j),
    (0.3 + 0.4j, 0.2 + 0j),
    (0.7 + 0j, 0.6j),
    (0.9 + 0j, 0.3 + 0j),
    (-0.6 + 0j, -0.3 + 0.2j),
)

_BIDISC_PAIRS = (
    (0.5 + 0j, 0.3 + 0j),
    (0.3 + 0.4j, 0.6 + 0j),
    (0.9 + 0j, 0.2j),
    (0.7 + 0j, -0.5 + 0j),
)


def _fmt_param(c: complex) -> str:
    out = f"{c.real:g}"
    if c.imag:
        out += f"{c.imag:+g}i"
    return out


def _bounded_entries() -> list:
    entries = []
    for a in _MOBIUS_PARAMS:
        entries.append(
            _entry(f"mobius:{_fmt_param(a)}", DISC, _mobius_expr(a), True, 1.0)
        )
    for a, alpha in ((0.4 + 0j, 1.0), (0.2 - 0.3j, 2.5)):
        entries.append(
            _entry(
                f"mobius:{_fmt_param(a)}:rot{alpha:g}",
                DISC,
                _mobius_expr(a, alpha),
                True,
                1.0,
            )
        )
    for a, b in _BLASCHKE_PAIRS:
        expr = ex.Mul(_mobius_expr(a), _mobius_expr(b))
        entries.append(
            _entry(f"blaschke:{_fmt_param(a)}:{_fmt_param(b)}", DISC, expr, True, 1.0)
        )
    for a, b in _BIDISC_PAIRS:
        expr = ex.Mul(
            _mobius_expr(a), ex.substitute(_mobius_expr(b), (ex.Var(2),))
        )
        entries.append(
            _entry(
                f"bidisc_product:{_fmt_param(a)}:{_fmt_param(b)}",
                BIDISC,
                expr,
                True,
                1.0,
            )
        )
    for m in range(1, 6):
        entries.append(_entry(f"monomial:{m}", DISC, f"x1^{m}", True, 1.0))
    for m1, m2 in ((1, 1), (2, 1), (1, 2), (2, 3), (3, 2), (5, 1)):
        entries.append(
            _entry(f"monomial:{m1}:{m2}", BIDISC, f"x1^{m1}*x2^{m2}", True, 1.0)
        )
    for space, (m1, m2) in (
        (EUCLID2, (2, 2)),
        (EUCLID2, (1, 3)),
        (L3_2, (1, 1)),
        (L3_2, (2, 2)),
    ):
        entries.append(
            _entry(
                f"monomial:{m1}:{m2}:{space.describe()}",
                space,
                f"x1^{m1}*x2^{m2}",
                True,
                1.0,
            )
        )
    for space in (BIDISC, EUCLID2, L3_2):
        entries.append(_entry(f"coord:x2:{space.describe()}", space, "x2", True, 1.0))
    entries.append(_entry("coord:x1", DISC, "x1", True, 1.0))
    for c in (0.5 + 0j, 0.3 + 0.4j):
        entries.append(
            _entry(f"const:{_fmt_param(c)}", DISC, ex.Const(c), True, abs(c))
        )
    # linear functionals: sup-norm is the dual norm of the coefficient vector
    entries.append(_entry("mean:linf:2", BIDISC, "0.5*x1+0.5*x2", True, 1.0))
    entries.append(
        _entry("mean:l2:2", EUCLID2, "0.5*x1+0.5*x2", True, math.sqrt(0.5))
    )
    entries.append(
        _entry("mean:lp:3:2", L3_2, "0.5*x1+0.5*x2", True, 0.5 * 2.0 ** (2.0 / 3.0))
    )
    # exp(L(x)): sup-norm exp(sup Re L) = exp(dual norm of L)
    entries.append(_entry("expcoord", DISC, "exp(x1)", True, math.e))
    entries.append(
        _entry("expmean:linf:2", BIDISC, "exp(0.5*x1+0.5*x2)", True, math.e)
    )
    entries.append(
        _entry(
            "expmean:l2:2", EUCLID2, "exp(0.5*x1+0.5*x2)", True, math.exp(math.sqrt(0.5))
        )
    )
    # 1/(c - x1) with c > 1: modulus at most 1/(c - 1) on the disc
    for c in (2.0, 1.5, 3.0):
        entries.append(
            _entry(f"cayley:{c:g}", DISC, f"1/({c!r}-x1)", True, 1.0 / (c - 1.0))
        )
    return entries


def _random_entries() -> list:
    entries = []
    for seed in range(24):
        expr, coeff_sum = random_polynomial(1, 5, seed)
        entries.append(
            _entry(f"randpoly:1:{seed}", DISC, expr, True, coeff_sum)
        )
    for space, tag in ((BIDISC, "linf:2"), (EUCLID2, "l2:2"), (L3_2, "lp:3:2")):
        for seed in range(8):
            expr, coeff_sum = random_polynomial(2, 5, seed + 100)
            entries.append(
                _entry(f"randpoly:2:{seed}:{tag}", space, expr, True, coeff_sum)
            )
    return entries


@lru_cache(maxsize=1)
def _catalog_tuple() -> tuple:
    entries = _separation_entries() + _bounded_entries() + _random_entries()
    names = [e.name for e in entries]
    if len(set(names)) != len(names):
        dupes = sorted({n for n in names if names.count(n) > 1})
        raise RuntimeError(f"duplicate catalog names: {dupes}")
    return tuple(entries)


def all_entries() -> list:
    """All registered entries, in a fixed order."""
    return list(_catalog_tuple())


def lookup(name: str) -> CatalogEntry:
    for entry in _catalog_tuple():
        if entry.name == name:
            return entry
    raise KeyError(f"no catalog entry named {name!r}")


def bounded_entries() -> list:
    return [e for e in _catalog_tuple() if e.bounded]
