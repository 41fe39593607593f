"""Best-first Top-K extraction over the per-anchor streams.

Two engines share the same contract: ``topk_grouped`` keeps one heap entry
per anchor and emits a whole rank group per pop; ``topk_colex`` keeps one
heap entry per explicit rank tuple and emits a single interval per pop.
Equal lengths pop in (anchor, rank) order so results are reproducible.
"""
from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from typing import Iterator, List, Optional, Sequence, Tuple

from .decomposition import anchor_of, enumerate_decomposition, weight
from .sweep import SweepSnapshots

__all__ = [
    "Emission",
    "TopKResult",
    "check_identities",
    "colex_subsets",
    "expand_identities",
    "topk_colex",
    "topk_enum",
    "topk_grouped",
]


@dataclass(frozen=True)
class Emission:
    length: float
    anchor: int
    rank: int
    copies: int
    ranks: Optional[Tuple[int, ...]] = None


@dataclass
class TopKResult:
    i: int
    K: int
    lengths: List[float] = field(default_factory=list)
    emissions: List[Emission] = field(default_factory=list)
    identities: Optional[List[Tuple[int, ...]]] = None

    def intervals(self, snap: SweepSnapshots) -> List[Tuple[float, float]]:
        """``[b_anchor, b_anchor + length)`` for every output position."""
        bars = snap.barcode.bars
        out = []
        for e in self.emissions:
            b = bars[e.anchor].birth
            out.extend([(b, b + e.length)] * e.copies)
        return out

    def anchors(self) -> List[int]:
        out: List[int] = []
        for e in self.emissions:
            out.extend([e.anchor] * e.copies)
        return out


def _check_args(i: int, K: int) -> None:
    if i < 2:
        raise ValueError(f"order i must be >= 2, got {i}")
    if K < 0:
        raise ValueError(f"K must be >= 0, got {K}")


def topk_grouped(snap: SweepSnapshots, i: int, K: int, identities: bool = False) -> TopKResult:
    """K longest intervals of the i-th exterior power, grouped variant."""
    _check_args(i, K)
    result = TopKResult(i, K)
    if K == 0:
        if identities:
            result.identities = []
        return result
    bars = snap.barcode.bars
    counts = snap.counts
    death_at_rank = snap.death_at_rank
    first = i - 1
    heap = []
    for r, c in enumerate(counts):
        if c < first:
            continue
        bar = bars[r]
        length = min(bar.death, death_at_rank(r, first)) - bar.birth
        if length > 0:
            heap.append((-length, r, first, weight(i, first, K)))
    heapq.heapify(heap)

    lengths = result.lengths
    emissions = result.emissions
    emitted = 0
    while emitted < K and heap:
        neg, r, j, w = heapq.heappop(heap)
        copies = min(w, K - emitted)
        lengths.extend([-neg] * copies)
        emissions.append(Emission(-neg, r, j, copies))
        emitted += copies
        if j < counts[r] and emitted < K:
            j += 1
            bar = bars[r]
            length = min(bar.death, death_at_rank(r, j)) - bar.birth
            if length > 0:
                heapq.heappush(heap, (-length, r, j, weight(i, j, K)))
    if identities:
        result.identities = expand_identities(snap, emissions, K, i)
    return result


def topk_colex(snap: SweepSnapshots, i: int, K: int, identities: bool = False) -> TopKResult:
    """Unbundled variant: states are strictly increasing (i-1)-tuples of ranks.

    A state's successors raise one coordinate by one while keeping the tuple
    strictly increasing, so every tuple is reachable from ``(1, ..., i-1)``
    and no successor is longer than its parent.  A seen-set keeps each tuple
    from being pushed twice.
    """
    _check_args(i, K)
    result = TopKResult(i, K)
    if K == 0:
        if identities:
            result.identities = []
        return result
    bars = snap.barcode.bars
    counts = snap.counts
    death_at_rank = snap.death_at_rank
    width = i - 1
    heap = []
    for r, c in enumerate(counts):
        if c < width:
            continue
        bar = bars[r]
        length = min(bar.death, death_at_rank(r, width)) - bar.birth
        if length > 0:
            heap.append((-length, r, tuple(range(1, i))))
    heapq.heapify(heap)
    seen = set((r, s) for _, r, s in heap)

    while len(result.lengths) < K and heap:
        neg, r, s = heapq.heappop(heap)
        result.lengths.append(-neg)
        result.emissions.append(Emission(-neg, r, s[-1], 1, s))
        for k in range(width):
            nxt = s[k] + 1
            if k + 1 < width:
                if nxt >= s[k + 1]:
                    continue
                neg_child = neg
            else:
                if nxt > counts[r]:
                    continue
                bar = bars[r]
                neg_child = -(min(bar.death, death_at_rank(r, nxt)) - bar.birth)
                if neg_child >= 0:
                    continue
            child = s[:k] + (nxt,) + s[k + 1:]
            if (r, child) in seen:
                continue
            seen.add((r, child))
            heapq.heappush(heap, (neg_child, r, child))
    if identities:
        result.identities = [_rank_tuple_to_bars(snap, e.anchor, e.ranks) for e in result.emissions]
    return result


def topk_enum(snap: SweepSnapshots, i: int, K: int, identities: bool = False) -> TopKResult:
    """Full enumeration then selection; emits in the same order as the grouped engine."""
    _check_args(i, K)
    result = TopKResult(i, K)
    groups = enumerate_decomposition(snap, i, cap=max(K, 1))
    groups.sort(key=lambda g: (-g.length, g.anchor, g.rank))
    emitted = 0
    for g in groups:
        if emitted >= K:
            break
        copies = min(g.multiplicity, K - emitted)
        result.lengths.extend([g.length] * copies)
        result.emissions.append(Emission(g.length, g.anchor, g.rank, copies))
        emitted += copies
    if identities:
        result.identities = expand_identities(snap, result.emissions, K, i)
    return result


def colex_subsets(n: int, k: int) -> Iterator[Tuple[int, ...]]:
    """k-subsets of ``{1..n}`` in colexicographic order.

    >>> list(colex_subsets(3, 2))
    [(1, 2), (1, 3), (2, 3)]
    """
    if k < 0 or k > n:
        return
    s = list(range(1, k + 1))
    while True:
        yield tuple(s)
        t = 0
        while t < k - 1 and s[t] + 1 == s[t + 1]:
            t += 1
        if k == 0 or s[t] == n and t == k - 1:
            return
        s[t] += 1
        s[:t] = range(1, t + 1)


def _rank_tuple_to_bars(snap: SweepSnapshots, r: int, ranks: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sorted([r] + [snap.bar_at_rank(r, j) for j in ranks]))


def expand_identities(snap: SweepSnapshots, emissions: Sequence[Emission], K: int, i: int) -> List[Tuple[int, ...]]:
    """Explicit i-tuples of bar indices behind grouped emissions.

    Emission ``(r, j, copies)`` becomes the first ``copies`` rank subsets
    with maximum ``j`` in colex order, each mapped to bar indices and joined
    with the anchor.  Output is capped at ``K`` tuples overall.
    """
    out: List[Tuple[int, ...]] = []
    for e in emissions:
        if len(out) >= K:
            break
        want = min(e.copies, K - len(out))
        for head in colex_subsets(e.rank - 1, i - 2):
            if want == 0:
                break
            out.append(_rank_tuple_to_bars(snap, e.anchor, head + (e.rank,)))
            want -= 1
    return out


def check_identities(snap: SweepSnapshots, result: TopKResult) -> bool:
    """Every identity tuple reproduces its length and anchor exactly."""
    if result.identities is None:
        return True
    bc = snap.barcode
    anchors = result.anchors()
    if len(result.identities) != len(result.lengths):
        return False
    for t, length, a in zip(result.identities, result.lengths, anchors):
        lo = max(bc.bars[k].birth for k in t)
        hi = min(bc.bars[k].death for k in t)
        if hi - lo != length or anchor_of(bc, t) != a or len(set(t)) != result.i:
            return False
    return True
