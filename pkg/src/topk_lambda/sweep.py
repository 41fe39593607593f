"""Preprocessing sweep: one persistent snapshot of the alive set per birth."""
from __future__ import annotations

from collections import defaultdict
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Dict, List, Tuple

from .barcode import Barcode, EventKind, build_event_list
from .ostree import EMPTY_ROOT, CompressedAxis, PersistentOSTree, QueryError, compress

__all__ = ["AliveDeaths", "SweepSnapshots", "alive_deaths", "run_sweep"]


@dataclass(frozen=True)
class SweepSnapshots:
    """Result of :func:`run_sweep`.

    ``roots[r]`` is the tree version holding the bars alive just before the
    birth of bar ``r`` and ``counts[r]`` is its size.  ``birth_order[r]`` is
    the position of r's birth among all births in event order; it is what
    decides which equal-time births count as alive for a later anchor.
    """

    barcode: Barcode
    axis: CompressedAxis
    tree: PersistentOSTree
    roots: Tuple[int, ...]
    counts: Tuple[int, ...]
    final_root: int
    birth_order: Tuple[int, ...]

    @property
    def M(self) -> int:
        return len(self.roots)

    def death_at_rank(self, r: int, j: int) -> float:
        """d_r(j): the j-th largest death (1-based) among bars alive at r."""
        return self.tree.kth_from_right(self.roots[r], j)

    def bar_at_rank(self, r: int, j: int) -> int:
        """Bar index holding rank ``j`` in the alive set of anchor ``r``.

        Bars with equal death are ranked by ascending bar index.
        """
        root = self.roots[r]
        pos = self.tree.kth_coord_from_right(root, j)
        offset = j - self.tree.count_above(root, pos)
        cutoff = self.birth_order[r]
        seen = 0
        for s in self._bars_by_death[pos]:
            if self.birth_order[s] < cutoff:
                seen += 1
                if seen == offset:
                    return s
        raise RuntimeError(f"rank {j} of anchor {r} does not resolve to a bar")

    @property
    def _bars_by_death(self) -> Dict[int, List[int]]:
        cache = self.__dict__.get("_by_death")
        if cache is None:
            cache = defaultdict(list)
            for bar in self.barcode.bars:
                cache[self.axis.coord(bar.death)].append(bar.index)
            object.__setattr__(self, "_by_death", cache)
        return cache


def run_sweep(bc: Barcode) -> SweepSnapshots:
    axis = compress(bc)
    tree = PersistentOSTree(axis)
    coord = [axis.coord(bar.death) for bar in bc.bars]
    M = bc.M
    roots = [EMPTY_ROOT] * M
    counts = [0] * M
    birth_order = [0] * M
    root = EMPTY_ROOT
    nbirths = 0
    update, size = tree.update, tree.size
    for _, kind, r in build_event_list(bc):
        if kind == EventKind.DEATH:
            root = update(root, coord[r], -1)
        else:
            roots[r] = root
            counts[r] = size(root)
            birth_order[r] = nbirths
            nbirths += 1
            root = update(root, coord[r], +1)
    return SweepSnapshots(bc, axis, tree, tuple(roots), tuple(counts), root, tuple(birth_order))


class AliveDeaths(Sequence):
    """Lazy view of ``d_r(1) >= ... >= d_r(c_r)``.

    Python indexing is 0-based; :meth:`at_rank` takes the 1-based rank.
    """

    def __init__(self, snap: SweepSnapshots, r: int):
        self._snap = snap
        self._r = r

    def __len__(self) -> int:
        return self._snap.counts[self._r]

    def __getitem__(self, k):
        if isinstance(k, slice):
            return [self[q] for q in range(*k.indices(len(self)))]
        if k < 0:
            k += len(self)
        if not 0 <= k < len(self):
            raise IndexError(k)
        return self._snap.death_at_rank(self._r, k + 1)

    def at_rank(self, j: int) -> float:
        if not 1 <= j <= len(self):
            raise QueryError(f"rank {j} outside 1..{len(self)} for anchor {self._r}")
        return self._snap.death_at_rank(self._r, j)


def alive_deaths(snap: SweepSnapshots, r: int) -> AliveDeaths:
    if not 0 <= r < snap.M:
        raise IndexError(f"bar index {r} outside 0..{snap.M - 1}")
    return AliveDeaths(snap, r)
