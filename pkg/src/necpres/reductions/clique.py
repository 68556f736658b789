"""Multicolored Clique instances and the twenty-voter Ranked Pairs compilation."""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass

from ..solvers.verdict import BudgetExceeded
from ._build import ProfileBuilder

TUPLE_BUDGET = 10**6

Vertex = tuple[int, int]  # (colour class, index within class), both 0-based


@dataclass(frozen=True)
class MulticoloredGraph:
    sizes: tuple[int, ...]
    edges: frozenset  # of frozenset({u, v})

    def __post_init__(self):
        object.__setattr__(self, "sizes", tuple(int(x) for x in self.sizes))
        object.__setattr__(self, "edges", frozenset(frozenset(e) for e in self.edges))
        if len(self.sizes) < 2:
            raise ValueError("need at least two colour classes")
        if any(s < 1 for s in self.sizes):
            raise ValueError("every colour class needs a vertex")
        for e in self.edges:
            if len(e) != 2:
                raise ValueError(f"edge {sorted(e)} is not a pair of distinct vertices")
            (i, a), (j, b) = sorted(e)
            if not (0 <= i < self.k and 0 <= a < self.sizes[i] and 0 <= j < self.k and 0 <= b < self.sizes[j]):
                raise ValueError(f"edge {sorted(e)} has an endpoint outside the graph")
            if i == j:
                raise ValueError(f"edge {sorted(e)} lies inside colour class {i + 1} (classes must be independent)")

    @property
    def k(self) -> int:
        return len(self.sizes)

    @property
    def r(self) -> int:
        return max(self.sizes)

    def padded(self) -> "MulticoloredGraph":
        """Equal class sizes by adding isolated vertices."""
        return MulticoloredGraph((self.r,) * self.k, self.edges)

    def edges_between(self, i: int, j: int) -> list[tuple[Vertex, Vertex]]:
        out = []
        for e in self.edges:
            u, v = sorted(e)
            if (u[0], v[0]) == (min(i, j), max(i, j)):
                out.append((u, v))
        return sorted(out)

    def adjacent(self, u: Vertex, v: Vertex) -> bool:
        return frozenset((u, v)) in self.edges


def random_multicolored_graph(k: int, r: int, density: float, seed: int) -> MulticoloredGraph:
    """Random graph with k classes of r vertices; every class pair keeps at least one edge."""
    rng = random.Random(seed)
    edges = set()
    for i, j in itertools.combinations(range(k), 2):
        pairs = [((i, a), (j, b)) for a in range(r) for b in range(r)]
        chosen = [pr for pr in pairs if rng.random() < density] or [rng.choice(pairs)]
        edges.update(frozenset(pr) for pr in chosen)
    return MulticoloredGraph((r,) * k, frozenset(edges))


def exhaustive_clique(g: MulticoloredGraph, budget: int = TUPLE_BUDGET):
    """A multicolored clique as a tuple of vertices (one per class), or None."""
    total = math.prod(g.sizes)
    if total > budget:
        raise BudgetExceeded("vertex tuples", total, budget)
    for pick in itertools.product(*[range(s) for s in g.sizes]):
        verts = [(i, a) for i, a in enumerate(pick)]
        if all(g.adjacent(u, v) for u, v in itertools.combinations(verts, 2)):
            return tuple(verts)
    return None


def parse_clique(text: str) -> MulticoloredGraph:
    """``p mcc k r1 .. rk`` then one edge per line: ``i a j b`` (all 1-based)."""
    sizes, edges = None, set()
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) < 4 or parts[1] != "mcc" or len(parts) != 3 + int(parts[2]):
                raise ValueError(f"bad header {line!r} (expected 'p mcc k r1 .. rk')")
            sizes = tuple(int(x) for x in parts[3:])
            continue
        nums = [int(x) for x in line.split()]
        if len(nums) != 4:
            raise ValueError(f"edge line needs 4 numbers 'i a j b': {line!r}")
        i, a, j, b = (x - 1 for x in nums)
        edges.add(frozenset({(i, a), (j, b)}))
    if sizes is None:
        raise ValueError("missing 'p mcc k r1 .. rk' header")
    return MulticoloredGraph(sizes, frozenset(edges))


def to_clique_text(g: MulticoloredGraph) -> str:
    lines = [f"p mcc {g.k} " + " ".join(map(str, g.sizes))]
    for e in sorted(tuple(sorted(e)) for e in g.edges):
        (i, a), (j, b) = e
        lines.append(f"{i + 1} {a + 1} {j + 1} {b + 1}")
    return "\n".join(lines) + "\n"


def _u(v: Vertex) -> str:
    return f"u{v[0] + 1}.{v[1] + 1}"


def _e(edge) -> str:
    u, v = edge
    return f"e{u[0] + 1}.{u[1] + 1}-{v[0] + 1}.{v[1] + 1}"


def clique_to_ranked_pairs(graph: MulticoloredGraph):
    """Twenty-voter Ranked Pairs instance: NO iff the graph has a multicolored clique.

    Classes are padded to equal size first.  Every pair of classes needs at
    least one edge, since its edges form a party.
    """
    g = graph.padded()
    k, r = g.k, g.r
    for i, j in itertools.combinations(range(k), 2):
        if not g.edges_between(i, j):
            raise ValueError(
                f"no edge between classes {i + 1} and {j + 1}: that party would be empty "
                "(and no multicolored clique can exist)"
            )
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    U = [[(i, a) for a in range(r)] for i in range(k)]
    for i in range(k):
        for v in U[i]:
            b.add(_u(v))
        b.party(*[_u(v) for v in U[i]])
    for i, j in itertools.combinations(range(k), 2):
        es = g.edges_between(i, j)
        for e in es:
            b.add(_e(e))
        b.party(*[_e(e) for e in es])

    def fwd(labels):
        return sorted(labels, key=b.index.get)

    def rev(labels):
        return fwd(labels)[::-1]

    def e_side(i, higher):
        """Edges of class i going to higher (or lower) classes."""
        out = []
        for h in range(k):
            if h != i and (h > i) == higher:
                out += g.edges_between(i, h)
        return out

    def incident(edges, v):
        return [_e(e) for e in edges if v in e]

    def block(i, higher, forward):
        es = e_side(i, higher)
        verts = U[i] if forward else U[i][::-1]
        out = []
        for v in verts:
            inc = incident(es, v)
            out += (fwd(inc) if forward else rev(inc)) + [_u(v)]
        return out

    A = [block(i, True, True) for i in range(k)]
    A_ = [block(i, True, False) for i in range(k)]
    B = [block(i, False, True) for i in range(k)]
    B_ = [block(i, False, False) for i in range(k)]
    V = [[_u(v) for v in U[i]] for i in range(k)]
    Egt = [[_e(e) for e in e_side(i, True)] for i in range(k)]
    Elt = [[_e(e) for e in e_side(i, False)] for i in range(k)]
    allV = [x for vs in V for x in vs]
    allE = [_e(e) for i, j in itertools.combinations(range(k), 2) for e in g.edges_between(i, j)]

    def cat(parts):
        return [x for part in parts for x in part]

    b.vote("x1", ["p", "w"] + cat(A))
    b.vote("x2", ["w", "p"] + cat(A))
    for h in (1, 2):
        b.vote(f"x'{h}", cat(A_[::-1]) + ["w", "p"])
    for h in (3, 4):
        b.vote(f"x{h}", ["p", "w"] + cat(B))
    for h in (3, 4):
        b.vote(f"x'{h}", cat(B_[::-1]) + ["w", "p"])
    y12 = ["p", "w"] + cat(fwd(V[i]) + fwd(Egt[i]) for i in range(k))
    y12_ = cat(rev(V[i]) + rev(Egt[i]) for i in range(k - 1, -1, -1)) + ["w", "p"]
    y34 = ["p", "w"] + cat(fwd(V[i]) + fwd(Elt[i]) for i in range(k))
    y34_ = cat(rev(V[i]) + rev(Elt[i]) for i in range(k - 1, -1, -1)) + ["w", "p"]
    for h in (1, 2):
        b.vote(f"y{h}", y12)
    for h in (1, 2):
        b.vote(f"y'{h}", y12_)
    for h in (3, 4):
        b.vote(f"y{h}", y34)
    for h in (3, 4):
        b.vote(f"y'{h}", y34_)
    for h in (1, 2):
        b.vote(f"z{h}", ["p"] + fwd(allV) + fwd(allE) + ["w"])
    for h in (1, 2):
        b.vote(f"z'{h}", rev(allE) + ["w", "p"] + rev(allV))

    padding = [f"class {i + 1}: +{r - s}" for i, s in enumerate(graph.sizes) if s < r]
    comments = [
        f"clique_to_ranked_pairs k={k} r={r}",
        "padding: " + (", ".join(padding) if padding else "none"),
        "fixed order = canonical index order",
    ]
    inst = b.build("p", comments)
    inst.metadata["padding"] = padding
    return inst
