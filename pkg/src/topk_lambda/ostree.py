"""Path-copying order-statistics segment tree over compressed death times.

Every node lives in a flat arena (three parallel ``array`` columns) and a
version is just the integer id of its root node.  Node 0 is the shared empty
tree: its children point back at itself, so an update on the empty version
needs no special casing.
"""
from __future__ import annotations

from array import array
from bisect import bisect_left
from dataclasses import dataclass, field
from typing import Dict, Iterable, Iterator, Tuple

__all__ = [
    "EMPTY_ROOT",
    "CompressedAxis",
    "PersistentOSTree",
    "QueryError",
    "UnderflowError",
    "compress",
]

EMPTY_ROOT = 0


class QueryError(IndexError):
    """Rank or coordinate outside the valid range of a version."""


class UnderflowError(RuntimeError):
    """A -1 update hit a zero count; the caller's sweep is inconsistent."""


@dataclass(frozen=True)
class CompressedAxis:
    sorted_deaths: Tuple[float, ...]
    _coord: Dict[float, int] = field(repr=False, compare=False, default_factory=dict)

    def __post_init__(self):
        if not self._coord:
            self._coord.update((d, k) for k, d in enumerate(self.sorted_deaths, start=1))

    @property
    def N(self) -> int:
        return len(self.sorted_deaths)

    def coord(self, death: float) -> int:
        """1-based coordinate of a death value present on the axis."""
        try:
            return self._coord[death]
        except KeyError:
            raise KeyError(f"{death!r} is not on the axis") from None

    def value(self, pos: int) -> float:
        return self.sorted_deaths[pos - 1]

    def floor_coord(self, x: float) -> int:
        """Number of axis values strictly below ``x``."""
        return bisect_left(self.sorted_deaths, x)


def compress(deaths: Iterable[float]) -> CompressedAxis:
    """Accepts raw death values or a :class:`~topk_lambda.barcode.Barcode`."""
    values = [bar.death for bar in deaths.bars] if hasattr(deaths, "bars") else list(deaths)
    return CompressedAxis(tuple(sorted(set(values))))


class PersistentOSTree:
    """Fully persistent count tree over the coordinates ``1..N`` of an axis.

    Versions are plain ints returned by :meth:`update`; old versions are
    never touched again, so queries against them are stable forever.

    >>> t = PersistentOSTree(compress([2.5, 4.0, 7.0]))
    >>> v1 = t.update(EMPTY_ROOT, 2, +1)
    >>> v2 = t.update(v1, 3, +1)
    >>> t.size(v1), t.size(v2), t.kth_from_right(v2, 1), t.kth_from_right(v2, 2)
    (1, 2, 7.0, 4.0)
    """

    def __init__(self, axis: CompressedAxis):
        self.axis = axis
        self.n = axis.N
        self._left = array("l", [0])
        self._right = array("l", [0])
        self._count = array("l", [0])

    @property
    def node_count(self) -> int:
        """Nodes allocated so far, including the shared empty node."""
        return len(self._count)

    def size(self, root: int) -> int:
        return self._count[root]

    def update(self, root: int, pos: int, delta: int) -> int:
        if not 1 <= pos <= self.n:
            raise QueryError(f"position {pos} outside 1..{self.n}")
        left, right, count = self._left, self._right, self._count
        path = []
        node, lo, hi = root, 1, self.n
        while lo < hi:
            mid = (lo + hi) >> 1
            if pos <= mid:
                path.append((node, False))
                node, hi = left[node], mid
            else:
                path.append((node, True))
                node, lo = right[node], mid + 1
        leaf = count[node] + delta
        if leaf < 0:
            raise UnderflowError(f"count at position {pos} would become {leaf}")
        new = len(count)
        left.append(0)
        right.append(0)
        count.append(leaf)
        for parent, went_right in reversed(path):
            if went_right:
                left.append(left[parent])
                right.append(new)
            else:
                left.append(new)
                right.append(right[parent])
            count.append(count[parent] + delta)
            new += 1
        return new

    def kth_coord_from_right(self, root: int, k: int) -> int:
        """Coordinate of the k-th largest element (1-based, with multiplicity)."""
        left, right, count = self._left, self._right, self._count
        if not 1 <= k <= count[root]:
            raise QueryError(f"rank {k} outside 1..{count[root]}")
        node, lo, hi = root, 1, self.n
        while lo < hi:
            mid = (lo + hi) >> 1
            r = right[node]
            rc = count[r]
            if k <= rc:
                node, lo = r, mid + 1
            else:
                k -= rc
                node, hi = left[node], mid
        return lo

    def kth_from_right(self, root: int, k: int) -> float:
        """Death value of the k-th alive bar in non-increasing order."""
        return self.axis.sorted_deaths[self.kth_coord_from_right(root, k) - 1]

    def count_at(self, root: int, pos: int) -> int:
        left, right, count = self._left, self._right, self._count
        node, lo, hi = root, 1, self.n
        while lo < hi:
            mid = (lo + hi) >> 1
            if pos <= mid:
                node, hi = left[node], mid
            else:
                node, lo = right[node], mid + 1
        return count[node]

    def count_above(self, root: int, pos: int) -> int:
        """Number of elements at coordinates strictly greater than ``pos``."""
        left, right, count = self._left, self._right, self._count
        total = 0
        node, lo, hi = root, 1, self.n
        while lo < hi and node != EMPTY_ROOT:
            mid = (lo + hi) >> 1
            if pos <= mid:
                total += count[right[node]]
                node, hi = left[node], mid
            else:
                node, lo = right[node], mid + 1
        return total

    def iter_from_right(self, root: int) -> Iterator[Tuple[int, int]]:
        """Yield ``(coordinate, count)`` for nonzero leaves, largest first."""
        left, right, count = self._left, self._right, self._count
        if self.n == 0 or count[root] == 0:
            return
        stack = [(root, 1, self.n)]
        while stack:
            node, lo, hi = stack.pop()
            if lo == hi:
                yield lo, count[node]
                continue
            mid = (lo + hi) >> 1
            l, r = left[node], right[node]
            if count[l]:
                stack.append((l, lo, mid))
            if count[r]:
                stack.append((r, mid + 1, hi))
