"""Bipartite matchings that must cover prescribed vertices on both sides.

Modelled as a unit-capacity flow s -> L -> R -> t where the arcs s->u for
required u in L and v->t for required v in R carry a lower bound of 1.
The lower bounds are removed with the usual circulation transform
(t -> s arc of unbounded capacity, super source/sink for the demands).
"""

from __future__ import annotations

from collections import deque
from typing import Hashable, Iterable


class _Flow:
    def __init__(self, n: int):
        self.adj: list[list[int]] = [[] for _ in range(n)]
        self.to: list[int] = []
        self.cap: list[int] = []

    def add(self, u: int, v: int, c: int) -> int:
        self.adj[u].append(len(self.to))
        self.to.append(v)
        self.cap.append(c)
        self.adj[v].append(len(self.to))
        self.to.append(u)
        self.cap.append(0)
        return len(self.to) - 2

    def maxflow(self, s: int, t: int) -> int:
        total = 0
        while True:
            prev = [-1] * len(self.adj)
            prev[s] = -2
            q = deque([s])
            while q and prev[t] == -1:
                u = q.popleft()
                for e in self.adj[u]:
                    v = self.to[e]
                    if self.cap[e] > 0 and prev[v] == -1:
                        prev[v] = e
                        q.append(v)
            if prev[t] == -1:
                return total
            # bottleneck along the path
            push, v = None, t
            while v != s:
                e = prev[v]
                push = self.cap[e] if push is None else min(push, self.cap[e])
                v = self.to[e ^ 1]
            v = t
            while v != s:
                e = prev[v]
                self.cap[e] -= push
                self.cap[e ^ 1] += push
                v = self.to[e ^ 1]
            total += push


def saturating_matching(
    edges: Iterable[tuple[Hashable, Hashable]],
    required_left: Iterable[Hashable] = (),
    required_right: Iterable[Hashable] = (),
) -> dict | None:
    """A matching covering every required vertex, as ``{left: right}``, or None.

    Vertices not incident to any edge may still be required, in which case
    the answer is None.
    """
    edges = list(dict.fromkeys(edges))
    req_l, req_r = set(required_left), set(required_right)
    left = list(dict.fromkeys([u for u, _ in edges] + sorted(req_l, key=repr)))
    right = list(dict.fromkeys([v for _, v in edges] + sorted(req_r, key=repr)))
    li = {u: k for k, u in enumerate(left)}
    ri = {v: len(left) + k for k, v in enumerate(right)}
    s = len(left) + len(right)
    t, ss, tt = s + 1, s + 2, s + 3
    big = len(left) + len(right) + 1
    g = _Flow(s + 4)
    excess = [0] * (s + 4)

    for u in left:
        if u in req_l:  # lower bound 1, upper 1 -> residual capacity 0
            excess[li[u]] += 1
            excess[s] -= 1
        else:
            g.add(s, li[u], 1)
    for v in right:
        if v in req_r:
            excess[t] += 1
            excess[ri[v]] -= 1
        else:
            g.add(ri[v], t, 1)
    arc = {(u, v): g.add(li[u], ri[v], 1) for u, v in edges}
    g.add(t, s, big)

    need = 0
    for x, ex in enumerate(excess):
        if ex > 0:
            g.add(ss, x, ex)
            need += ex
        elif ex < 0:
            g.add(x, tt, -ex)
    if g.maxflow(ss, tt) != need:
        return None
    return {u: v for (u, v), e in arc.items() if g.cap[e] == 0}

