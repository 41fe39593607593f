"""Per-anchor stream arithmetic and the two full-enumeration routes.

``enumerate_decomposition`` walks every anchor's alive set and lists each
rank group with its binomial multiplicity; ``brute_force_lambda`` intersects
every i-subset of bars directly.  The second one never looks at the sweep
and is the oracle the rest of the package is tested against.
"""
from __future__ import annotations

import itertools
import math
from typing import List, NamedTuple, Optional, Sequence, Tuple

from .barcode import Barcode
from .ostree import QueryError
from .sweep import SweepSnapshots

__all__ = [
    "BRUTE_FORCE_LIMIT",
    "Group",
    "LambdaInterval",
    "RefusalError",
    "anchor_of",
    "anchored_length",
    "brute_force_lambda",
    "enumerate_decomposition",
    "expand_lengths",
    "positive_ranks",
    "total_count",
    "weight",
]

BRUTE_FORCE_LIMIT = 10**7


class RefusalError(RuntimeError):
    """Instance too large for an exhaustive computation."""


class Group(NamedTuple):
    length: float
    anchor: int
    rank: int
    multiplicity: int


class LambdaInterval(NamedTuple):
    members: Tuple[int, ...]
    birth: float
    death: float

    @property
    def length(self) -> float:
        return self.death - self.birth


def _check_order(i: int) -> None:
    if i < 2:
        raise ValueError(f"order i must be >= 2, got {i}")


def anchored_length(snap: SweepSnapshots, r: int, j: int) -> float:
    """max(0, min(d_r, d_r(j)) - b_r)."""
    if not 1 <= j <= snap.counts[r]:
        raise QueryError(f"rank {j} outside 1..{snap.counts[r]} for anchor {r}")
    bar = snap.barcode.bars[r]
    d = snap.death_at_rank(r, j)
    return max(0.0, min(bar.death, d) - bar.birth)


def weight(i: int, j: int, cap: int) -> int:
    """``min(C(j-1, i-2), cap)``, stopping as soon as the cap is reached.

    The running product after step t is C(n-k+t, t), which is nondecreasing
    in t, so stopping early is safe.
    """
    n, k = j - 1, i - 2
    if k < 0 or n < k:
        raise ValueError(f"weight needs i >= 2 and j >= i-1, got i={i}, j={j}")
    if cap < 1:
        raise ValueError("cap must be >= 1")
    k = min(k, n - k)
    acc = 1
    for t in range(1, k + 1):
        acc = acc * (n - k + t) // t
        if acc >= cap:
            return cap
    return min(acc, cap)


def positive_ranks(snap: SweepSnapshots, r: int, i: int) -> List[int]:
    """J_r: ranks j in [i-1, c_r] with a positive anchored length."""
    _check_order(i)
    return [j for j in range(i - 1, snap.counts[r] + 1) if anchored_length(snap, r, j) > 0]


def enumerate_decomposition(snap: SweepSnapshots, i: int, cap: Optional[int] = None) -> List[Group]:
    """Every positive rank group of every anchor, with its multiplicity.

    Each anchor's alive set is read off its tree version right to left in
    one pass, so the cost is linear in the output plus O(M log M).
    Multiplicities are exact binomials unless ``cap`` is given.
    """
    _check_order(i)
    tree = snap.tree
    values = snap.axis.sorted_deaths
    out = []
    append = out.append
    first = i - 1
    for r, bar in enumerate(snap.barcode.bars):
        if snap.counts[r] < first:
            continue
        b, d_r = bar.birth, bar.death
        j = 0
        for pos, cnt in tree.iter_from_right(snap.roots[r]):
            length = min(d_r, values[pos - 1]) - b
            for _ in range(cnt):
                j += 1
                if j < first or length <= 0:
                    continue
                w = math.comb(j - 1, i - 2) if cap is None else weight(i, j, cap)
                append(Group(length, r, j, w))
    return out


def expand_lengths(groups: Sequence[Group]) -> List[float]:
    out: List[float] = []
    for g in groups:
        out.extend([g.length] * g.multiplicity)
    return out


def total_count(groups: Sequence[Group]) -> int:
    return sum(g.multiplicity for g in groups)


def brute_force_lambda(bc: Barcode, i: int, limit: int = BRUTE_FORCE_LIMIT) -> List[LambdaInterval]:
    """All i-subsets of bars with a nonempty common intersection."""
    if i < 1:
        raise ValueError(f"order i must be >= 1, got {i}")
    n_tuples = math.comb(bc.M, i)
    if n_tuples > limit:
        raise RefusalError(f"C({bc.M}, {i}) = {n_tuples} tuples exceeds the limit of {limit}")
    bars = bc.bars
    out = []
    for combo in itertools.combinations(range(bc.M), i):
        lo = max(bars[k].birth for k in combo)
        hi = min(bars[k].death for k in combo)
        if lo < hi:
            out.append(LambdaInterval(combo, lo, hi))
    return out


def anchor_of(bc: Barcode, members: Sequence[int]) -> int:
    """The member whose birth is processed last: max birth, then max index."""
    return max(members, key=lambda k: (bc.bars[k].birth, k))
