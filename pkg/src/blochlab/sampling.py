"""Supremum estimation over the open unit ball.

The sample schedule is built so that doubling the budget can only extend
the evaluated set, never reshuffle it, making the reported value exactly
nondecreasing in the budget for a fixed seed:

  * Radii are dyadic shells r_j = 1 - 2^{-j}.  The shell count is the
    largest power of two at most budget/4, capped at 30; the cap keeps
    every sample at distance >= 2^{-29} from the boundary, inside the
    10^{-9} singularity guard.
  * Stream slot i lands on shell i mod S with within-shell index m = i
    div S.  Probe m = 0 is the first-coordinate axis point, m = 1 the
    normalized all-ones direction; higher m are seeded random directions
    (Gaussian on even slots, torus on odd) drawn in fixed blocks of 4096
    keyed by (seed, shell, block), so a sample's value depends only on its
    (shell, m) pair and the seed, never on the budget.
  * Pattern-search refinement starts from the best sample of the prefix
    of length 2^t for fixed checkpoints t, again budget-independent; a
    bigger budget only unlocks more checkpoints.

The reported value is the maximum of the raw stream maximum and the
refined candidates.  Batch objectives must be vectorized per column so
the raw maximum over a superset of columns cannot decrease.

Divergence diagnostics regress the raw per-shell maxima against
-log(1 - r_j) = j log 2 over the deepest half of the shells; a fitted
slope above 0.5 with standard error below 0.1 flags logarithmic growth
toward the boundary, the signature of the unbounded catalog examples.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import EvaluationPoisoned
from .geometry import INF, BallSpace, norm

BLOCK = 4096
SHELL_CAP = 30
BOUNDARY_GUARD = 1e-9
CHECKPOINTS = (16, 256, 4096, 65536, 1048576)

_PATTERN_LEVELS = 20
_PATTERN_STEP0 = 0.25
_PATTERN_ACCEPTS_PER_LEVEL = 4


@dataclass(frozen=True)
class DivergenceInfo:
    path: str
    slope: float
    stderr: float


@dataclass(frozen=True)
class SupEstimate:
    value: float
    witness: tuple
    samples_used: int
    poisoned_count: int
    divergence: DivergenceInfo | None = None


def shell_count(budget: int) -> int:
    """Power-of-two shell count (capped) so budget doubling nests schedules."""
    if budget < 1:
        raise ValueError("budget must be >= 1")
    q = 1
    while q * 2 <= max(1, budget // 4):
        q *= 2
    return min(SHELL_CAP, q)


def shell_radius(j: int) -> float:
    return 1.0 - 2.0 ** (-j)


def _ones_direction(space: BallSpace) -> np.ndarray:
    d = np.ones(space.n, dtype=np.complex128)
    if space.p != INF:
        d /= space.n ** (1.0 / space.p)
    return d


def _normalize_columns(space: BallSpace, X: np.ndarray) -> np.ndarray:
    if space.p == INF:
        norms = np.max(np.abs(X), axis=0)
    elif space.p == 2.0:
        norms = np.sqrt(np.sum(np.abs(X) ** 2, axis=0))
    elif space.p == 1.0:
        norms = np.sum(np.abs(X), axis=0)
    else:
        norms = np.sum(np.abs(X) ** space.p, axis=0) ** (1.0 / space.p)
    norms = np.where(norms == 0.0, 1.0, norms)
    return X / norms[None, :]


def random_interior_points(
    space: BallSpace, rng: np.random.Generator, count: int, rmax: float = 0.95
) -> np.ndarray:
    """(n, count) array of seeded points with norm < rmax, for test sampling."""
    raw = rng.standard_normal((2, space.n, count))
    dirs = _normalize_columns(space, raw[0] + 1j * raw[1])
    radii = rmax * rng.random(count)
    return dirs * radii[None, :]


def _random_block(space: BallSpace, seed: int, shell: int, block: int) -> np.ndarray:
    """4096 unit-sphere directions; offset o is Gaussian for even m, torus odd."""
    n = space.n
    rng = np.random.default_rng((0x5EED, seed, shell, block))
    raw = rng.standard_normal((2, n, BLOCK))
    gauss = _normalize_columns(space, raw[0] + 1j * raw[1])
    angles = rng.random((n, BLOCK))
    torus = np.exp(2j * math.pi * angles)
    if space.p != INF:
        torus = torus / space.n ** (1.0 / space.p)
    first_m = 2 + block * BLOCK
    use_gauss = (np.arange(first_m, first_m + BLOCK) % 2) == 0
    return np.where(use_gauss[None, :], gauss, torus)


def shell_points(space: BallSpace, j: int, count: int, seed: int) -> np.ndarray:
    """The first `count` schedule points on shell j, shape (n, count)."""
    n = space.n
    r = shell_radius(j)
    X = np.empty((n, count), dtype=np.complex128)
    if count == 0:
        return X
    axis = np.zeros(n, dtype=np.complex128)
    axis[0] = 1.0
    X[:, 0] = r * axis
    if count >= 2:
        X[:, 1] = r * _ones_direction(space)
    if count >= 3:
        blocks_needed = (count - 3) // BLOCK + 1
        for b in range(blocks_needed):
            dirs = _random_block(space, seed, j, b)
            lo = 2 + b * BLOCK
            hi = min(count, lo + BLOCK)
            X[:, lo:hi] = r * dirs[:, : hi - lo]
    return X


def _shell_sample_count(budget: int, S: int, j: int) -> int:
    return len(range(j, budget, S))


def _prefix_count(prefix: int, S: int, j: int) -> int:
    return len(range(j, prefix, S))


def _ols_slope(x: np.ndarray, y: np.ndarray):
    xbar = x.mean()
    ybar = y.mean()
    sxx = float(np.sum((x - xbar) ** 2))
    if sxx == 0.0:
        return None
    slope = float(np.sum((x - xbar) * (y - ybar)) / sxx)
    resid = y - (ybar + slope * (x - xbar))
    dof = len(x) - 2
    if dof <= 0:
        return None
    sigma2 = float(np.sum(resid**2)) / dof
    return slope, math.sqrt(sigma2 / sxx)


def _pattern_search(space, scalar_objective, x0):
    """Coordinatewise compass search with step halving, staying inside the guard."""
    n = space.n
    best = np.array(x0, dtype=np.complex128)
    try:
        best_val = float(scalar_objective(tuple(best)))
    except EvaluationPoisoned:
        return -math.inf, None
    if not math.isfinite(best_val):
        return -math.inf, None
    step = _PATTERN_STEP0
    for _ in range(_PATTERN_LEVELS):
        for _ in range(_PATTERN_ACCEPTS_PER_LEVEL):
            move_val = best_val
            move = None
            for k in range(n):
                for delta in (step, -step, 1j * step, -1j * step):
                    cand = best.copy()
                    cand[k] += delta
                    if norm(space, cand) > 1.0 - BOUNDARY_GUARD:
                        continue
                    try:
                        v = float(scalar_objective(tuple(cand)))
                    except EvaluationPoisoned:
                        continue
                    if math.isfinite(v) and v > move_val:
                        move_val = v
                        move = cand
            if move is None:
                break
            best = move
            best_val = move_val
        step *= 0.5
    return best_val, tuple(best)


def estimate_supremum(
    space: BallSpace,
    batch_objective,
    scalar_objective,
    budget: int,
    seed: int,
    refine: bool = True,
    diagnostics: bool = True,
) -> SupEstimate:
    """Seeded shell-sample maximum of a nonnegative objective over the ball.

    batch_objective maps an (n, B) array of points to B real values with
    NaN/inf marking poisoned evaluations; scalar_objective maps one point
    (a tuple) to a float and may raise EvaluationPoisoned.  The result is
    a certified lower bound for the supremum: every reported value is the
    objective evaluated at the reported witness.
    """
    if budget < 1:
        raise ValueError("budget must be >= 1")
    S = shell_count(budget)
    best_val = -math.inf
    best_point = None
    poisoned = 0
    shell_max = np.full(S, -math.inf)
    shell_values = []
    shell_arrays = []
    for j in range(S):
        count = _shell_sample_count(budget, S, j)
        X = shell_points(space, j, count, seed)
        vals = np.asarray(batch_objective(X), dtype=float)
        finite = np.isfinite(vals)
        poisoned += int(np.count_nonzero(~finite))
        masked = np.where(finite, vals, -math.inf)
        shell_values.append(masked)
        shell_arrays.append(X)
        if masked.size and masked.max() > -math.inf:
            shell_max[j] = masked.max()
            if shell_max[j] > best_val:
                best_val = float(shell_max[j])
                best_point = tuple(X[:, int(masked.argmax())])
    if refine:
        for prefix in CHECKPOINTS:
            if prefix > budget:
                break
            # Interpret the prefix under its own shell count: the candidate
            # is the best sample of the budget-`prefix` schedule, which the
            # nesting property makes a subset of what was just evaluated.
            SP = shell_count(prefix)
            cand_val = -math.inf
            cand_point = None
            for j in range(SP):
                c = _prefix_count(prefix, SP, j)
                if c == 0:
                    continue
                head = shell_values[j][:c]
                k = int(head.argmax())
                if head[k] > cand_val:
                    cand_val = head[k]
                    cand_point = tuple(shell_arrays[j][:, k])
            if cand_point is None:
                continue
            ref_val, ref_point = _pattern_search(space, scalar_objective, cand_point)
            if ref_point is not None and ref_val > best_val:
                best_val = ref_val
                best_point = ref_point
    divergence = None
    if diagnostics and S >= 6:
        lo = S // 2
        xs, ys = [], []
        for j in range(lo, S):
            if shell_max[j] > -math.inf:
                xs.append(j * math.log(2.0))
                ys.append(shell_max[j])
        if len(xs) >= 3:
            fit = _ols_slope(np.array(xs), np.array(ys))
            if fit is not None:
                slope, stderr = fit
                if slope > 0.5 and stderr < 0.1:
                    divergence = DivergenceInfo(
                        path=(
                            f"radial shells r = 1 - 2^-j, j = {lo}..{S - 1}; "
                            "maxima grow with -log(1 - r)"
                        ),
                        slope=slope,
                        stderr=stderr,
                    )
    if best_point is None:
        # every sample poisoned; report an empty estimate at the origin
        return SupEstimate(0.0, (0j,) * space.n, budget, poisoned, None)
    witness = tuple(complex(w) for w in best_point)
    return SupEstimate(best_val, witness, budget, poisoned, divergence)
