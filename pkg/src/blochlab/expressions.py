"""Holomorphic expression trees: parsing, printing and evaluation.

Grammar accepted by parse():

    expr   := term (("+" | "-") term)*
    term   := factor (("*" | "/") factor)*
    factor := base ("^" INT)?
    base   := NUM | "i" | VAR | "(" expr ")" | FUNC "(" expr ")" | "-" base
    FUNC   := "log" | "log2pi" | "exp"
    VAR    := "x" INT          (x1 is the first variable)
    NUM    := decimal literal, scientific notation allowed

"log" is the principal branch (arg in (-pi, pi], negative reals get arg = pi),
"log2pi" the branch with arg in (0, 2pi).  Note that "-x1^2" parses as
(-x1)^2, because unary minus binds inside the power base.

The same tree evaluates three ways: plain complex values, jets carrying a
gradient, and numpy batches of points (shape (n, B)).  The scalar evaluators
raise EvaluationPoisoned at singularities; the batch evaluators let NaN and
inf flow through for the caller to mask.  A Linear node applies a fixed
covector; it has no surface syntax and prints as an expanded sum.
"""

from __future__ import annotations

import cmath
import math
import re
from dataclasses import dataclass

import numpy as np

from . import jets
from .errors import ArityError, DimensionMismatch, ParseError

_TWO_PI = 2.0 * math.pi


# ---------------------------------------------------------------------------
# AST nodes
# ---------------------------------------------------------------------------


class Expr:
    __slots__ = ()


@dataclass(frozen=True, slots=True)
class Const(Expr):
    value: complex


@dataclass(frozen=True, slots=True)
class Var(Expr):
    index: int  # 1-based

    def __post_init__(self):
        if self.index < 1:
            raise ValueError(f"variable index must be >= 1, got {self.index}")


@dataclass(frozen=True, slots=True)
class Neg(Expr):
    arg: Expr


@dataclass(frozen=True, slots=True)
class Add(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Sub(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Mul(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Div(Expr):
    left: Expr
    right: Expr


@dataclass(frozen=True, slots=True)
class Exp(Expr):
    arg: Expr


@dataclass(frozen=True, slots=True)
class Log(Expr):
    arg: Expr
    branch: str = jets.BRANCH_PRINCIPAL

    def __post_init__(self):
        if self.branch not in (jets.BRANCH_PRINCIPAL, jets.BRANCH_CUT_POSITIVE):
            raise ValueError(f"unknown log branch {self.branch!r}")


@dataclass(frozen=True, slots=True)
class IPow(Expr):
    base: Expr
    power: int

    def __post_init__(self):
        if self.power < 0:
            raise ValueError(f"power must be >= 0, got {self.power}")


@dataclass(frozen=True, slots=True)
class Linear(Expr):
    coeffs: tuple  # covector applied to (x1, ..., xk)


def max_variable(f: Expr) -> int:
    """Largest variable index referenced; 0 for a closed expression."""
    if isinstance(f, Const):
        return 0
    if isinstance(f, Var):
        return f.index
    if isinstance(f, Linear):
        return len(f.coeffs)
    if isinstance(f, (Neg, Exp, Log)):
        return max_variable(f.arg)
    if isinstance(f, IPow):
        return max_variable(f.base)
    return max(max_variable(f.left), max_variable(f.right))


# ---------------------------------------------------------------------------
# Tokenizer and recursive-descent parser
# ---------------------------------------------------------------------------

_NUM_RE = re.compile(r"(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?")
_IDENT_RE = re.compile(r"[A-Za-z][A-Za-z0-9]*")
_FUNCS = {"log": jets.BRANCH_PRINCIPAL, "log2pi": jets.BRANCH_CUT_POSITIVE, "exp": None}


class _Parser:
    def __init__(self, text: str, arity: int):
        self.text = text
        self.arity = arity
        self.pos = 0

    def _skip_ws(self):
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def _peek(self) -> str:
        self._skip_ws()
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def _fail(self, message: str):
        raise ParseError(message, self.pos)

    def parse(self) -> Expr:
        node = self._expr()
        self._skip_ws()
        if self.pos != len(self.text):
            self._fail(f"unexpected trailing input {self.text[self.pos:]!r}")
        return node

    def _expr(self) -> Expr:
        node = self._term()
        while True:
            ch = self._peek()
            if ch == "+":
                self.pos += 1
                node = Add(node, self._term())
            elif ch == "-":
                self.pos += 1
                node = Sub(node, self._term())
            else:
                return node

    def _term(self) -> Expr:
        node = self._factor()
        while True:
            ch = self._peek()
            if ch == "*":
                self.pos += 1
                node = Mul(node, self._factor())
            elif ch == "/":
                self.pos += 1
                node = Div(node, self._factor())
            else:
                return node

    def _factor(self) -> Expr:
        node = self._base()
        if self._peek() == "^":
            self.pos += 1
            self._skip_ws()
            m = _NUM_RE.match(self.text, self.pos)
            if m is None:
                self._fail("expected an integer after '^'")
            tok = m.group(0)
            if "." in tok or "e" in tok or "E" in tok:
                self._fail(f"exponent must be a plain integer, got {tok!r}")
            self.pos = m.end()
            node = IPow(node, int(tok))
        return node

    def _base(self) -> Expr:
        ch = self._peek()
        if ch == "":
            self._fail("unexpected end of input")
        if ch == "-":
            self.pos += 1
            return Neg(self._base())
        if ch == "(":
            self.pos += 1
            node = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            return node
        m = _NUM_RE.match(self.text, self.pos)
        if m is not None:
            self.pos = m.end()
            return Const(complex(float(m.group(0))))
        m = _IDENT_RE.match(self.text, self.pos)
        if m is None:
            self._fail(f"unexpected character {ch!r}")
        name = m.group(0)
        start = self.pos
        self.pos = m.end()
        if name == "i":
            return Const(1j)
        if name in _FUNCS:
            if self._peek() != "(":
                self.pos = start
                self._fail(f"expected '(' after {name!r}")
            self.pos += 1
            node = self._expr()
            if self._peek() != ")":
                self._fail("expected ')'")
            self.pos += 1
            if name == "exp":
                return Exp(node)
            return Log(node, _FUNCS[name])
        var = re.fullmatch(r"x(\d+)", name)
        if var is None:
            self.pos = start
            self._fail(f"unknown identifier {name!r}")
        index = int(var.group(1))
        if index < 1:
            self.pos = start
            self._fail("variable indices start at x1")
        if index > self.arity:
            self.pos = start
            raise ArityError(
                f"variable x{index} exceeds declared arity {self.arity}", start
            )
        return Var(index)


def parse(text: str, arity: int) -> Expr:
    """Parse an expression over variables x1..x<arity>."""
    if arity < 0:
        raise ValueError("arity must be non-negative")
    return _Parser(text, arity).parse()


# ---------------------------------------------------------------------------
# Printer.  parse(to_text(f), n) evaluates identically to f.
# ---------------------------------------------------------------------------

_PREC_ADD, _PREC_MUL, _PREC_ATOM = 1, 2, 3


def _fmt_float(v: float) -> str:
    return repr(float(v))


def _fmt_const(c: complex) -> str:
    re_, im = c.real, c.imag
    if im == 0.0:
        if re_ >= 0.0:
            return _fmt_float(re_)
        return f"(-{_fmt_float(-re_)})"
    if re_ == 0.0:
        if im == 1.0:
            return "i"
        if im == -1.0:
            return "(-i)"
        if im > 0:
            return f"({_fmt_float(im)}*i)"
        return f"(-{_fmt_float(-im)}*i)"
    sign = "+" if im > 0 else "-"
    im_abs = abs(im)
    im_part = "i" if im_abs == 1.0 else f"{_fmt_float(im_abs)}*i"
    re_part = _fmt_float(re_) if re_ >= 0 else f"-{_fmt_float(-re_)}"
    return f"({re_part}{sign}{im_part})"


def _print(f: Expr, prec: int, right: bool) -> str:
    if isinstance(f, Const):
        return _fmt_const(f.value)
    if isinstance(f, Var):
        return f"x{f.index}"
    if isinstance(f, Linear):
        terms = []
        for k, c in enumerate(f.coeffs, start=1):
            terms.append(f"{_fmt_const(complex(c))}*x{k}")
        return "(" + "+".join(terms) + ")" if terms else "0.0"
    if isinstance(f, Exp):
        return f"exp({_print(f.arg, _PREC_ADD, False)})"
    if isinstance(f, Log):
        name = "log" if f.branch == jets.BRANCH_PRINCIPAL else "log2pi"
        return f"{name}({_print(f.arg, _PREC_ADD, False)})"
    if isinstance(f, Neg):
        inner = _print(f.arg, _PREC_ATOM, False)
        if not isinstance(f.arg, (Const, Var, Exp, Log, Linear, Neg)):
            inner = f"({inner})"
        text = f"-{inner}"
        return f"({text})" if prec >= _PREC_ATOM else text
    if isinstance(f, IPow):
        base = _print(f.base, _PREC_ATOM, False)
        if not isinstance(f.base, (Var, Exp, Log, Linear)):
            base = f"({base})"
        return f"{base}^{f.power}"
    if isinstance(f, (Add, Sub)):
        op = "+" if isinstance(f, Add) else "-"
        text = (
            f"{_print(f.left, _PREC_ADD, False)}{op}{_print(f.right, _PREC_ADD, True)}"
        )
        if prec > _PREC_ADD or (prec == _PREC_ADD and right):
            return f"({text})"
        return text
    if isinstance(f, (Mul, Div)):
        op = "*" if isinstance(f, Mul) else "/"
        text = (
            f"{_print(f.left, _PREC_MUL, False)}{op}{_print(f.right, _PREC_MUL, True)}"
        )
        if prec > _PREC_MUL or (prec == _PREC_MUL and right):
            return f"({text})"
        return text
    raise TypeError(f"not an expression node: {f!r}")


def to_text(f: Expr) -> str:
    """Render f in the surface grammar."""
    return _print(f, 0, False)


# ---------------------------------------------------------------------------
# Scalar evaluation
# ---------------------------------------------------------------------------


def eval_value(f: Expr, x) -> complex:
    """Evaluate f at the point x (a sequence of complex)."""
    n = len(x)
    if max_variable(f) > n:
        raise DimensionMismatch(
            f"expression uses x{max_variable(f)}, point has {n} coordinates"
        )
    return _eval_val(f, tuple(map(complex, x)))


def _eval_val(f: Expr, x: tuple) -> complex:
    if isinstance(f, Const):
        return f.value
    if isinstance(f, Var):
        return x[f.index - 1]
    if isinstance(f, Linear):
        return sum((c * x[k] for k, c in enumerate(f.coeffs)), 0j)
    if isinstance(f, Neg):
        return -_eval_val(f.arg, x)
    if isinstance(f, Add):
        return _eval_val(f.left, x) + _eval_val(f.right, x)
    if isinstance(f, Sub):
        return _eval_val(f.left, x) - _eval_val(f.right, x)
    if isinstance(f, Mul):
        return _eval_val(f.left, x) * _eval_val(f.right, x)
    if isinstance(f, Div):
        num = _eval_val(f.left, x)
        den = _eval_val(f.right, x)
        if den == 0:
            raise jets.EvaluationPoisoned("division by zero value")
        return num / den
    if isinstance(f, Exp):
        v = _eval_val(f.arg, x)
        try:
            return cmath.exp(v)
        except OverflowError as exc:
            raise jets.EvaluationPoisoned("exp overflow") from exc
    if isinstance(f, Log):
        return jets.complex_log(_eval_val(f.arg, x), f.branch)
    if isinstance(f, IPow):
        base = _eval_val(f.base, x)
        out = 1 + 0j
        for _ in range(f.power):
            out = out * base
        return out
    raise TypeError(f"not an expression node: {f!r}")


def eval_gradient(f: Expr, x) -> tuple:
    """Return (f(x), grad f(x)) with the gradient a tuple of length len(x)."""
    n = len(x)
    if max_variable(f) > n:
        raise DimensionMismatch(
            f"expression uses x{max_variable(f)}, point has {n} coordinates"
        )
    seeds = [jets.jet_var(k + 1, x[k], n) for k in range(n)]
    out = _eval_jet(f, seeds, n)
    return out.val, out.grad


def _eval_jet(f: Expr, seeds, n: int) -> jets.Jet:
    if isinstance(f, Const):
        return jets.jet_const(f.value, n)
    if isinstance(f, Var):
        return seeds[f.index - 1]
    if isinstance(f, Linear):
        val = sum((c * seeds[k].val for k, c in enumerate(f.coeffs)), 0j)
        grad = tuple(
            complex(f.coeffs[k]) if k < len(f.coeffs) else 0j for k in range(n)
        )
        return jets.Jet(val, grad)
    if isinstance(f, Neg):
        return jets.jet_neg(_eval_jet(f.arg, seeds, n))
    if isinstance(f, Add):
        return jets.jet_add(_eval_jet(f.left, seeds, n), _eval_jet(f.right, seeds, n))
    if isinstance(f, Sub):
        return jets.jet_sub(_eval_jet(f.left, seeds, n), _eval_jet(f.right, seeds, n))
    if isinstance(f, Mul):
        return jets.jet_mul(_eval_jet(f.left, seeds, n), _eval_jet(f.right, seeds, n))
    if isinstance(f, Div):
        return jets.jet_div(_eval_jet(f.left, seeds, n), _eval_jet(f.right, seeds, n))
    if isinstance(f, Exp):
        return jets.jet_exp(_eval_jet(f.arg, seeds, n))
    if isinstance(f, Log):
        return jets.jet_log(_eval_jet(f.arg, seeds, n), f.branch)
    if isinstance(f, IPow):
        return jets.jet_ipow(_eval_jet(f.base, seeds, n), f.power)
    raise TypeError(f"not an expression node: {f!r}")


# ---------------------------------------------------------------------------
# Batch evaluation over numpy arrays of points.
#
# X has shape (n, B): column b is a point.  Singular points produce NaN or
# inf entries instead of exceptions; callers mask non-finite results.  On the
# real axis the batch log normalizes signed zeros exactly like complex_log,
# so batch and scalar paths agree at every non-poisoned point.
# ---------------------------------------------------------------------------


def _batch_log_value(z: np.ndarray, branch: str) -> np.ndarray:
    z = np.where(z.imag == 0.0, z.real + 0.0j, z)
    with np.errstate(all="ignore"):
        mod = np.log(np.abs(z))
        theta = np.angle(z)
        if branch == jets.BRANCH_CUT_POSITIVE:
            on_cut = (z.imag == 0.0) & (z.real > 0.0)
            theta = np.where(theta <= 0.0, theta + _TWO_PI, theta)
            theta = np.where(on_cut, np.nan, theta)
        out = mod + 1j * theta
        out = np.where(z == 0, np.nan + 0j, out)
    return out


def eval_value_batch(f: Expr, X: np.ndarray) -> np.ndarray:
    """Evaluate f at every column of X; non-finite entries mark poisoned points."""
    X = np.asarray(X, dtype=np.complex128)
    if max_variable(f) > X.shape[0]:
        raise DimensionMismatch(
            f"expression uses x{max_variable(f)}, batch has {X.shape[0]} coordinates"
        )
    with np.errstate(all="ignore"):
        return _bval(f, X)


def _bval(f: Expr, X: np.ndarray) -> np.ndarray:
    B = X.shape[1]
    if isinstance(f, Const):
        return np.full(B, f.value, dtype=np.complex128)
    if isinstance(f, Var):
        return X[f.index - 1].copy()
    if isinstance(f, Linear):
        k = len(f.coeffs)
        if k == 0:
            return np.zeros(B, dtype=np.complex128)
        c = np.asarray(f.coeffs, dtype=np.complex128)
        # explicit axis-0 reduction: per-column results must not depend on B
        return (c[:, None] * X[:k]).sum(axis=0)
    if isinstance(f, Neg):
        return -_bval(f.arg, X)
    if isinstance(f, Add):
        return _bval(f.left, X) + _bval(f.right, X)
    if isinstance(f, Sub):
        return _bval(f.left, X) - _bval(f.right, X)
    if isinstance(f, Mul):
        return _bval(f.left, X) * _bval(f.right, X)
    if isinstance(f, Div):
        den = _bval(f.right, X)
        out = _bval(f.left, X) / den
        return np.where(den == 0, np.nan + 0j, out)
    if isinstance(f, Exp):
        return np.exp(_bval(f.arg, X))
    if isinstance(f, Log):
        return _batch_log_value(_bval(f.arg, X), f.branch)
    if isinstance(f, IPow):
        base = _bval(f.base, X)
        out = np.ones(B, dtype=np.complex128)
        for _ in range(f.power):
            out = out * base
        return out
    raise TypeError(f"not an expression node: {f!r}")


def eval_gradient_batch(f: Expr, X: np.ndarray) -> tuple:
    """Return (values (B,), gradients (n, B)) for every column of X."""
    X = np.asarray(X, dtype=np.complex128)
    n = X.shape[0]
    if max_variable(f) > n:
        raise DimensionMismatch(
            f"expression uses x{max_variable(f)}, batch has {n} coordinates"
        )
    with np.errstate(all="ignore"):
        return _bjet(f, X)


def _bjet(f: Expr, X: np.ndarray) -> tuple:
    n, B = X.shape
    if isinstance(f, Const):
        return (
            np.full(B, f.value, dtype=np.complex128),
            np.zeros((n, B), dtype=np.complex128),
        )
    if isinstance(f, Var):
        g = np.zeros((n, B), dtype=np.complex128)
        g[f.index - 1] = 1.0
        return X[f.index - 1].copy(), g
    if isinstance(f, Linear):
        k = len(f.coeffs)
        c = np.asarray(f.coeffs, dtype=np.complex128)
        vals = (
            (c[:, None] * X[:k]).sum(axis=0) if k else np.zeros(B, dtype=np.complex128)
        )
        g = np.zeros((n, B), dtype=np.complex128)
        if k:
            g[:k] = c[:, None]
        return vals, g
    if isinstance(f, Neg):
        v, g = _bjet(f.arg, X)
        return -v, -g
    if isinstance(f, Add):
        va, ga = _bjet(f.left, X)
        vb, gb = _bjet(f.right, X)
        return va + vb, ga + gb
    if isinstance(f, Sub):
        va, ga = _bjet(f.left, X)
        vb, gb = _bjet(f.right, X)
        return va - vb, ga - gb
    if isinstance(f, Mul):
        va, ga = _bjet(f.left, X)
        vb, gb = _bjet(f.right, X)
        return va * vb, ga * vb[None, :] + gb * va[None, :]
    if isinstance(f, Div):
        va, ga = _bjet(f.left, X)
        vb, gb = _bjet(f.right, X)
        q = np.where(vb == 0, np.nan + 0j, va / vb)
        return q, (ga - q[None, :] * gb) / vb[None, :]
    if isinstance(f, Exp):
        v, g = _bjet(f.arg, X)
        ev = np.exp(v)
        return ev, ev[None, :] * g
    if isinstance(f, Log):
        v, g = _bjet(f.arg, X)
        out = _batch_log_value(v, f.branch)
        return out, g / np.where(v == 0, np.nan + 0j, v)[None, :]
    if isinstance(f, IPow):
        vb_, gb_ = _bjet(f.base, X)
        v = np.ones(B, dtype=np.complex128)
        g = np.zeros((n, B), dtype=np.complex128)
        for _ in range(f.power):
            g = g * vb_[None, :] + gb_ * v[None, :]
            v = v * vb_
        return v, g
    raise TypeError(f"not an expression node: {f!r}")


# ---------------------------------------------------------------------------
# Structural helpers
# ---------------------------------------------------------------------------


def substitute(f: Expr, components) -> Expr:
    """Replace every Var(k) by components[k-1]; Linear nodes expand to sums."""
    comps = tuple(components)
    need = max_variable(f)
    if need > len(comps):
        raise DimensionMismatch(
            f"expression uses x{need}, only {len(comps)} replacement components given"
        )
    return _subst(f, comps)


def _subst(f: Expr, comps: tuple) -> Expr:
    if isinstance(f, Const):
        return f
    if isinstance(f, Var):
        return comps[f.index - 1]
    if isinstance(f, Linear):
        node: Expr = Const(0j)
        for k, c in enumerate(f.coeffs):
            term = Mul(Const(complex(c)), comps[k])
            node = term if (isinstance(node, Const) and node.value == 0) else Add(node, term)
        return node
    if isinstance(f, Neg):
        return Neg(_subst(f.arg, comps))
    if isinstance(f, Add):
        return Add(_subst(f.left, comps), _subst(f.right, comps))
    if isinstance(f, Sub):
        return Sub(_subst(f.left, comps), _subst(f.right, comps))
    if isinstance(f, Mul):
        return Mul(_subst(f.left, comps), _subst(f.right, comps))
    if isinstance(f, Div):
        return Div(_subst(f.left, comps), _subst(f.right, comps))
    if isinstance(f, Exp):
        return Exp(_subst(f.arg, comps))
    if isinstance(f, Log):
        return Log(_subst(f.arg, comps), f.branch)
    if isinstance(f, IPow):
        return IPow(_subst(f.base, comps), f.power)
    raise TypeError(f"not an expression node: {f!r}")


compose = substitute
