"""Slow, obviously-correct reference computations used only by the tests."""
from __future__ import annotations

import itertools
import math


def naive_alive(bc, r):
    """Bars alive just before r's birth, straight from the tie rules.

    s counts iff its birth is processed earlier (smaller (birth, index)) and
    its death is not processed yet (deaths at b_r go before the birth).
    """
    br = bc[r].birth
    return [s.index for s in bc if (s.birth, s.index) < (br, r) and s.death > br]


def naive_ranked_alive(bc, r):
    """Alive set ordered by non-increasing death, ties by ascending index."""
    return sorted(naive_alive(bc, r), key=lambda s: (-bc[s].death, s))


def sorted_desc(xs):
    return sorted(xs, reverse=True)


def exhaustive_bottleneck(xs, ys):
    """Minimum over every partial matching of the worst matched cost."""
    n, m = len(xs), len(ys)
    half = lambda p: (p[1] - p[0]) / 2
    linf = lambda p, q: max(abs(p[0] - q[0]), abs(p[1] - q[1]))
    best = math.inf
    for k in range(min(n, m) + 1):
        for xsel in itertools.combinations(range(n), k):
            for ysel in itertools.permutations(range(m), k):
                cost = 0.0
                for a, c in zip(xsel, ysel):
                    cost = max(cost, linf(xs[a], ys[c]))
                for a in set(range(n)) - set(xsel):
                    cost = max(cost, half(xs[a]))
                for c in set(range(m)) - set(ysel):
                    cost = max(cost, half(ys[c]))
                best = min(best, cost)
    return best
