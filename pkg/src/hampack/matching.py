"""Maximum cardinality matching in general graphs (Edmonds' blossom
algorithm, array-based, O(V^3)-style).

Used directly for the matching API and as the arbiter inside the
degree-factor machinery via the stub/core expansion.  A greedy seed
matching keeps the number of augmentation phases small on the dense
expansion graphs.
"""

from __future__ import annotations

from collections import deque

from .errors import InternalError


def greedy_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Maximal matching by scanning low-degree vertices first."""
    match = [-1] * n
    for v in sorted(range(n), key=lambda u: len(adj[u])):
        if match[v] == -1:
            for u in adj[v]:
                if match[u] == -1:
                    match[v] = u
                    match[u] = v
                    break
    return match


class _Matcher:
    def __init__(self, n: int, adj: list[list[int]]):
        self.n = n
        self.adj = adj
        self.match = greedy_matching(n, adj)
        self.p = [-1] * n
        self.base = list(range(n))

    def _lca(self, a: int, b: int) -> int:
        seen = [False] * self.n
        while True:
            a = self.base[a]
            seen[a] = True
            if self.match[a] == -1:
                break
            a = self.p[self.match[a]]
        while True:
            b = self.base[b]
            if seen[b]:
                return b
            b = self.p[self.match[b]]

    def _mark_path(self, v: int, b: int, child: int, blossom: list[bool]) -> None:
        while self.base[v] != b:
            blossom[self.base[v]] = True
            blossom[self.base[self.match[v]]] = True
            self.p[v] = child
            child = self.match[v]
            v = self.p[self.match[v]]

    def _find_path(self, root: int, augment: bool = True) -> bool:
        """Grow an alternating tree from ``root``.

        Returns True iff an augmenting path was found (and applied when
        ``augment``).  With ``augment=False`` the tree is only explored,
        which is how the outer-vertex labels are collected afterwards.
        """
        n, adj, match, p, base = self.n, self.adj, self.match, self.p, self.base
        used = [False] * n
        for i in range(n):
            p[i] = -1
            base[i] = i
        used[root] = True
        q = deque([root])
        while q:
            v = q.popleft()
            for to in adj[v]:
                if base[v] == base[to] or match[v] == to:
                    continue
                if to == root or (match[to] != -1 and p[match[to]] != -1):
                    # odd cycle: contract the blossom
                    curbase = self._lca(v, to)
                    blossom = [False] * n
                    self._mark_path(v, curbase, to, blossom)
                    self._mark_path(to, curbase, v, blossom)
                    for i in range(n):
                        if blossom[base[i]]:
                            base[i] = curbase
                            if not used[i]:
                                used[i] = True
                                q.append(i)
                elif p[to] == -1:
                    p[to] = v
                    if match[to] == -1:
                        if not augment:
                            raise InternalError(
                                "augmenting path found during label pass"
                            )
                        while to != -1:
                            prev = p[to]
                            nxt = match[prev]
                            match[to] = prev
                            match[prev] = to
                            to = nxt
                        return True
                    used[match[to]] = True
                    q.append(match[to])
        self._last_used = used
        return False

    def solve(self) -> list[int]:
        for v in range(self.n):
            if self.match[v] == -1:
                self._find_path(v)
        return self.match

    def outer_vertices(self) -> list[bool]:
        """Vertices reachable on an even alternating path from some
        exposed vertex, at optimality (the Gallai-Edmonds D-set)."""
        outer = [False] * self.n
        for v in range(self.n):
            if self.match[v] == -1:
                self._find_path(v, augment=False)
                for i, flag in enumerate(self._last_used):
                    if flag:
                        outer[i] = True
        return outer


def maximum_matching(n: int, adj: list[list[int]]) -> list[int]:
    """Mate array of a maximum matching (-1 for exposed vertices)."""
    return _Matcher(n, adj).solve()


def matching_size(match: list[int]) -> int:
    return sum(1 for v, u in enumerate(match) if u > v)
