"""Wall-clock comparison of best-first Top-K against full enumeration."""
from __future__ import annotations

import heapq
import json
import time
from dataclasses import asdict, dataclass
from typing import Callable, Tuple

from .decomposition import enumerate_decomposition, expand_lengths
from .engine import topk_grouped
from .sweep import run_sweep
from .synth import GenConfig, generate

__all__ = ["BenchReport", "baseline_topk", "best_of", "run_bench"]


@dataclass(frozen=True)
class BenchReport:
    M: int
    l_mean: float
    i: int
    K: int
    seed: int
    k_all: int
    t_baseline: float
    t_ours: float
    speedup: float
    matched: bool

    def to_json(self) -> str:
        return json.dumps(asdict(self))

    @classmethod
    def from_json(cls, text: str) -> "BenchReport":
        return cls(**json.loads(text))


def best_of(fn: Callable[[], object], reps: int) -> Tuple[float, object]:
    """Minimum wall time over ``reps`` calls, and the last return value."""
    best = float("inf")
    out = None
    for _ in range(max(1, reps)):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def baseline_topk(bc, i: int, K: int):
    """Enumerate every exterior-power length, then heap-select the K largest."""
    groups = enumerate_decomposition(run_sweep(bc), i)
    lengths = expand_lengths(groups)
    return heapq.nlargest(K, lengths), len(lengths)


def run_bench(M: int, l_mean: float, i: int = 2, K: int = 10_000, seed: int = 0, reps: int = 3) -> BenchReport:
    bc = generate(GenConfig(M, l_mean, seed))
    t_base, (base_top, k_all) = best_of(lambda: baseline_topk(bc, i, K), reps)
    t_ours, res = best_of(lambda: topk_grouped(run_sweep(bc), i, K), reps)
    return BenchReport(
        M=M,
        l_mean=l_mean,
        i=i,
        K=K,
        seed=seed,
        k_all=k_all,
        t_baseline=t_base,
        t_ours=t_ours,
        speedup=t_base / t_ours,
        matched=res.lengths == base_top,
    )
