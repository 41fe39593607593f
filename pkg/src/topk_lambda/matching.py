"""Hopcroft-Karp maximum bipartite matching on small adjacency lists."""
from __future__ import annotations

from collections import deque
from typing import List, Sequence, Tuple

_INF = float("inf")


def hopcroft_karp(adj: Sequence[Sequence[int]], n_right: int) -> Tuple[int, List[int], List[int]]:
    """Maximum matching of a bipartite graph.

    Args:
        adj: ``adj[u]`` lists the right vertices adjacent to left vertex ``u``.
        n_right: number of right vertices.

    Returns:
        ``(size, match_left, match_right)`` with -1 marking unmatched vertices.
    """
    n_left = len(adj)
    match_l = [-1] * n_left
    match_r = [-1] * n_right
    dist = [0.0] * n_left
    size = 0

    def bfs() -> bool:
        q = deque()
        for u in range(n_left):
            if match_l[u] == -1:
                dist[u] = 0
                q.append(u)
            else:
                dist[u] = _INF
        found = False
        while q:
            u = q.popleft()
            for v in adj[u]:
                w = match_r[v]
                if w == -1:
                    found = True
                elif dist[w] == _INF:
                    dist[w] = dist[u] + 1
                    q.append(w)
        return found

    def dfs(root: int) -> bool:
        # iterative layered DFS; avoids recursion limits on long paths
        stack = [(root, iter(adj[root]))]
        path = []
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                w = match_r[v]
                if w == -1:
                    path.append((u, v))
                    for a, b in path:
                        match_l[a] = b
                        match_r[b] = a
                    return True
                if dist[w] == dist[u] + 1:
                    path.append((u, v))
                    stack.append((w, iter(adj[w])))
                    advanced = True
                    break
            if not advanced:
                dist[u] = _INF
                stack.pop()
                if path:
                    path.pop()
        return False

    while bfs():
        for u in range(n_left):
            if match_l[u] == -1 and dfs(u):
                size += 1
    return size, match_l, match_r
