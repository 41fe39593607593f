"""Exact bottleneck distance and the Top-K stability laboratory.

The bottleneck distance is found by searching the finite candidate set
(all cross L-infinity distances, all half-lengths, and 0) for the smallest
value admitting an epsilon-matching.  Feasibility at a given epsilon uses
the Mendelsohn-Dulmage property of bipartite matchings: a matching that
covers every "forced" point on both sides (points farther than epsilon
from the diagonal) exists iff the forced points of each side can be
covered separately.  Everything else goes to the diagonal.
"""
from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, List, NamedTuple, Optional, Sequence, Tuple, Union

from .barcode import Barcode, ValidationError
from .decomposition import RefusalError, brute_force_lambda
from .engine import TopKResult, topk_grouped
from .matching import hopcroft_karp
from .sweep import run_sweep

__all__ = [
    "BOTTLENECK_LIMIT",
    "STABILITY_TOL",
    "Matching",
    "StabilityCheck",
    "bottleneck_distance",
    "bottleneck_matching",
    "check_exterior_stability",
    "check_topk_stability",
    "element_uniqueness_instance",
    "jitter",
    "length_vector",
    "tightness_pair",
]

BOTTLENECK_LIMIT = 200
STABILITY_TOL = 1e-9

Points = List[Tuple[float, float]]
BarcodeLike = Union[Barcode, Iterable]


def _points(X: BarcodeLike) -> Points:
    if isinstance(X, Barcode):
        return X.pairs()
    out = []
    for p in X:
        if hasattr(p, "birth"):
            out.append((p.birth, p.death))
        else:
            b, d = p
            out.append((float(b), float(d)))
    return out


def length_vector(res: Union[TopKResult, Sequence[float]], K: int) -> Tuple[float, ...]:
    """First K lengths, zero-padded to exactly K entries."""
    lengths = res.lengths if isinstance(res, TopKResult) else list(res)
    head = [float(x) for x in lengths[:K]]
    return tuple(head + [0.0] * (K - len(head)))


def _linf(p, q) -> float:
    return max(abs(p[0] - q[0]), abs(p[1] - q[1]))


def _half(p) -> float:
    return (p[1] - p[0]) / 2


def _cross_adjacency(xs: Points, ys: Points, eps: float, rows: Sequence[int], cols: Sequence[int]):
    return [[c for c in cols if _linf(xs[a], ys[c]) <= eps] for a in rows]


def _feasible(xs: Points, ys: Points, eps: float) -> bool:
    forced_x = [a for a, p in enumerate(xs) if _half(p) > eps]
    forced_y = [c for c, q in enumerate(ys) if _half(q) > eps]
    if forced_x:
        adj = _cross_adjacency(xs, ys, eps, forced_x, range(len(ys)))
        if hopcroft_karp(adj, len(ys))[0] < len(forced_x):
            return False
    if forced_y:
        adj = _cross_adjacency(ys, xs, eps, forced_y, range(len(xs)))
        if hopcroft_karp(adj, len(xs))[0] < len(forced_y):
            return False
    return True


def _candidates(xs: Points, ys: Points) -> List[float]:
    cand = {0.0}
    cand.update(_half(p) for p in xs)
    cand.update(_half(q) for q in ys)
    cand.update(_linf(p, q) for p in xs for q in ys)
    return sorted(cand)


def _guard(xs: Points, ys: Points, limit: Optional[int]) -> None:
    if limit is not None and len(xs) + len(ys) > limit:
        raise RefusalError(f"|X| + |Y| = {len(xs) + len(ys)} exceeds the bottleneck limit of {limit}")


def bottleneck_distance(X: BarcodeLike, Y: BarcodeLike, limit: Optional[int] = BOTTLENECK_LIMIT) -> float:
    """Exact bottleneck distance between two finite barcodes.

    ``X`` and ``Y`` may be barcodes, sequences of ``(birth, death)`` pairs,
    or anything with ``birth``/``death`` attributes.  ``limit=None`` lifts
    the size guard.
    """
    xs, ys = _points(X), _points(Y)
    _guard(xs, ys, limit)
    cand = _candidates(xs, ys)
    lo, hi = 0, len(cand) - 1
    # the largest candidate always works: every point can reach the diagonal
    while lo < hi:
        mid = (lo + hi) // 2
        if _feasible(xs, ys, cand[mid]):
            hi = mid
        else:
            lo = mid + 1
    return cand[lo]


@dataclass(frozen=True)
class Matching:
    pairs: Tuple[Tuple[int, int], ...]
    unmatched_x: Tuple[int, ...]
    unmatched_y: Tuple[int, ...]
    epsilon: float


def bottleneck_matching(X: BarcodeLike, Y: BarcodeLike, limit: Optional[int] = BOTTLENECK_LIMIT) -> Matching:
    """An optimal matching, built on the full diagonal-augmented graph.

    Left side: the n points of X then m diagonal slots for Y; right side:
    the m points of Y then n diagonal slots for X.
    """
    xs, ys = _points(X), _points(Y)
    eps = bottleneck_distance(xs, ys, limit)
    n, m = len(xs), len(ys)
    adj: List[List[int]] = []
    for a, p in enumerate(xs):
        row = [c for c, q in enumerate(ys) if _linf(p, q) <= eps]
        if _half(p) <= eps:
            row.append(m + a)
        adj.append(row)
    for c, q in enumerate(ys):
        row = [c] if _half(q) <= eps else []
        row.extend(m + a for a in range(n))
        adj.append(row)
    size, match_l, _ = hopcroft_karp(adj, m + n)
    if size != n + m:
        raise RuntimeError("no perfect matching at the computed bottleneck value")
    pairs = tuple((a, match_l[a]) for a in range(n) if match_l[a] < m)
    matched_y = {c for _, c in pairs}
    return Matching(
        pairs=pairs,
        unmatched_x=tuple(a for a in range(n) if match_l[a] >= m),
        unmatched_y=tuple(c for c in range(m) if c not in matched_y),
        epsilon=eps,
    )


class StabilityCheck(NamedTuple):
    lhs: float
    rhs: float
    holds: bool


def check_topk_stability(X: Barcode, Y: Barcode, i: int, K: int, tol: float = STABILITY_TOL) -> StabilityCheck:
    """Compare ``max |L_K(X) - L_K(Y)|`` against ``2 d_B(X, Y)``."""
    lx = length_vector(topk_grouped(run_sweep(X), i, K), K)
    ly = length_vector(topk_grouped(run_sweep(Y), i, K), K)
    lhs = max((abs(a - b) for a, b in zip(lx, ly)), default=0.0)
    rhs = 2 * bottleneck_distance(X, Y)
    return StabilityCheck(lhs, rhs, lhs <= rhs + tol)


def check_exterior_stability(X: Barcode, Y: Barcode, i: int, tol: float = STABILITY_TOL,
                             limit: Optional[int] = None) -> StabilityCheck:
    """``d_B`` of the brute-force exterior powers against ``d_B(X, Y)``."""
    lhs = bottleneck_distance(brute_force_lambda(X, i), brute_force_lambda(Y, i), limit=limit)
    rhs = bottleneck_distance(X, Y)
    return StabilityCheck(lhs, rhs, lhs <= rhs + tol)


def tightness_pair(eps: float = 0.5) -> Tuple[Barcode, Barcode]:
    """Two copies of [0, 4) against two copies shrunk by ``eps`` at both ends."""
    X = Barcode.from_pairs([(0.0, 4.0), (0.0, 4.0)])
    Y = Barcode.from_pairs([(eps, 4.0 - eps), (eps, 4.0 - eps)])
    return X, Y


def jitter(bc: Barcode, eps: float, rng: random.Random) -> Barcode:
    """Move every endpoint by at most ``eps``, redrawing bars that would empty."""
    pairs = []
    for bar in bc.bars:
        while True:
            b = bar.birth + rng.uniform(-eps, eps)
            d = bar.death + rng.uniform(-eps, eps)
            if b < d:
                break
        pairs.append((b, d))
    return Barcode.from_pairs(pairs)


def element_uniqueness_instance(xs: Sequence[float]) -> Barcode:
    """Bars ``[x, x + 1)``; their Top-1 pairwise overlap is 1 minus the min gap."""
    for k, x in enumerate(xs):
        if not (0.0 <= x <= 0.5) or math.isnan(x):
            raise ValidationError(f"value {k} = {x!r} outside [0, 1/2]", k)
    return Barcode.from_pairs([(x, x + 1.0) for x in xs])
