"""Time realize at several lengths to show linear scaling."""

import argparse
from dataclasses import dataclass, field
from typing import List

from trimulti.generate import bench_realize


@dataclass
class BenchConfig:
    sizes: List[int] = field(default_factory=lambda: [10**3, 10**4, 10**5, 10**6])
    trials: int = 5
    seed: int = 0


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__)
    cfg = BenchConfig()
    p.add_argument("--sizes", type=int, nargs="+", default=cfg.sizes)
    p.add_argument("--trials", type=int, default=cfg.trials)
    p.add_argument("--seed", type=int, default=cfg.seed)
    cfg = BenchConfig(**vars(p.parse_args()))
    print(f"{'n':>9} {'median s':>9} {'pairs':>9} {'us/vertex':>10}")
    for n in cfg.sizes:
        r = bench_realize(n, cfg.trials, seed=cfg.seed)
        print(f"{n:>9} {r.median_seconds:>9.4f} {r.max_pairs:>9} {1e6 * r.median_seconds / n:>10.3f}")


if __name__ == "__main__":
    main()
