"""Random valid sequences and the linear-time benchmark."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass, field
from typing import Callable, List, Optional, Tuple

import numpy as np

from .constructors import realize
from .errors import EmptyBenchmark, RetryBudgetExceeded
from .sequence import DegreeSequence, canonicalize


def generate_valid_sequence(seed: int, n_range: Tuple[int, int], degree_range: Tuple[int, int],
                            accept: Optional[Callable[[DegreeSequence], bool]] = None,
                            retry_budget: int = 1000) -> DegreeSequence:
    """Sample a sorted sequence meeting every realizability condition.

    Draws ``n`` and then ``n`` degrees uniformly, sorts, bumps ``d1`` by one
    if the sum is odd, and resamples when the ``d1`` bound fails or
    ``accept`` rejects the result. Deterministic per seed.
    """
    n_lo, n_hi = n_range
    d_lo, d_hi = degree_range
    if n_lo > n_hi or d_lo > d_hi:
        raise ValueError("ranges must be non-empty")
    if n_lo < 3 or d_lo < 4:
        raise ValueError("need n >= 3 and degrees >= 4")
    rng = np.random.default_rng(seed)
    for _ in range(retry_budget):
        n = int(rng.integers(n_lo, n_hi + 1))
        d = np.sort(rng.integers(d_lo, d_hi + 1, size=n))[::-1].copy()
        if int(d.sum()) % 2:
            d[0] += 1
        total = int(d.sum())
        if int(d[0]) > total - int(d[0]) - (n - 1):
            continue
        s = canonicalize(d)
        if accept is None or accept(s):
            return s
    raise RetryBudgetExceeded(f"no valid sequence after {retry_budget} attempts")


@dataclass
class BenchReport:
    n: int
    trials: int
    times: List[float]
    max_pairs: int
    branches: List[str] = field(default_factory=list)

    @property
    def median_seconds(self) -> float:
        return statistics.median(self.times)

    @property
    def edges_per_second(self) -> float:
        return self.max_pairs / self.median_seconds

    def to_dict(self) -> dict:
        return {"n": self.n, "trials": self.trials, "median_seconds": self.median_seconds,
                "edges_per_second": self.edges_per_second, "max_pairs": self.max_pairs,
                "branches": self.branches}


def bench_realize(n: int, trials: int, seed: int = 0,
                  degree_range: Tuple[int, int] = (4, 50)) -> BenchReport:
    """Median wall time of ``realize`` (verification included) on random length-``n`` sequences."""
    if trials <= 0:
        raise EmptyBenchmark("trials must be positive")
    times, pairs, branches = [], 0, []
    for t in range(trials):
        s = generate_valid_sequence(seed + t, (n, n), degree_range)
        start = time.perf_counter()
        g, cert = realize(s)
        times.append(time.perf_counter() - start)
        pairs = max(pairs, g.num_pairs)
        branches.append(cert.branch.value)
    return BenchReport(n, trials, times, pairs, branches)
