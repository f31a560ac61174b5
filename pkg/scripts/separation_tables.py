"""Print the two separation pictures as tables.

On the bidisc the invariant density of (1 + x2) log(1 - x1) blows up
logarithmically along (1 - 1/n, 0) while its natural seminorm stays finite.
On the p = 3 ball the roles flip: 1/(1 - x1) has invariant seminorm exactly 1
and unbounded natural density.  Closed forms come from the radial formulas,
estimates from the shell sampler, so every row cross-checks the two routes.
"""

import argparse
import math
from dataclasses import dataclass

from blochlab import catalog as cat
from blochlab import seminorms as sn


@dataclass
class Config:
    budget: int = 65536
    seed: int = 0
    ns: tuple = (10, 100, 1000, 10000)


def bidisc_table(cfg: Config) -> None:
    e = cat.lookup("countex1")
    print("bidisc, f = (1 + x2) log(1 - x1), points x = (1 - 1/n, 0)")
    print(f"{'n':>7} {'inv density':>14} {'closed form':>14} {'1 + ln n':>10} {'nat density':>12}")
    for n in cfg.ns:
        x = (1.0 - 1.0 / n + 0j, 0j)
        inv = sn.inv_density(e.expr, e.space, x)
        closed = (2.0 - 1.0 / n) + math.sqrt(math.log(n) ** 2 + math.pi**2)
        nat = sn.nat_density(e.expr, e.space, x)
        print(f"{n:>7} {inv:>14.6f} {closed:>14.6f} {1 + math.log(n):>10.4f} {nat:>12.6f}")
    inv_est = sn.estimate_sup("inv", e.expr, e.space, cfg.budget, cfg.seed)
    nat_est = sn.estimate_sup("nat", e.expr, e.space, cfg.budget, cfg.seed)
    print(f"inv estimate at budget {cfg.budget}: {inv_est.value:.6f}"
          f" (log-divergence flagged: {inv_est.divergence is not None})")
    print(f"nat estimate at budget {cfg.budget}: {nat_est.value:.6f}"
          f" (log-divergence flagged: {nat_est.divergence is not None})")
    print(f"nat upper bound 4 + sup w|log w|: {4 + sn.oracle_wlogw_sup():.6f}")


def lp_table(cfg: Config) -> None:
    e = cat.lookup("reciprocal")
    print()
    print("p = 3 ball in C^2, f = 1/(1 - x1), points x = (t, 0)")
    print(f"{'t':>7} {'nat density':>14} {'(1+t)/(1-t)':>14} {'inv density':>12}")
    for t in (0.9, 0.99, 0.999, 0.9999):
        x = (t + 0j, 0j)
        nat = sn.nat_density(e.expr, e.space, x)
        inv = sn.inv_density(e.expr, e.space, x)
        print(f"{t:>7} {nat:>14.4f} {(1 + t) / (1 - t):>14.4f} {inv:>12.10f}")
    nat_est = sn.estimate_sup("nat", e.expr, e.space, cfg.budget, cfg.seed)
    inv_est = sn.estimate_sup("inv", e.expr, e.space, cfg.budget, cfg.seed)
    print(f"nat estimate at budget {cfg.budget}: {nat_est.value:.4e}"
          f" (log-divergence flagged: {nat_est.divergence is not None})")
    print(f"inv estimate at budget {cfg.budget}: {inv_est.value:.12f}")


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--budget", type=int, default=Config.budget)
    ap.add_argument("--seed", type=int, default=Config.seed)
    args = ap.parse_args()
    cfg = Config(budget=args.budget, seed=args.seed)
    bidisc_table(cfg)
    lp_table(cfg)


if __name__ == "__main__":
    main()
