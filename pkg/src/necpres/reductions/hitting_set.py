"""Hitting Set instances and their compilations into Necessary President."""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass

from ..scoring import Short, VetoLike
from ..solvers.verdict import BudgetExceeded
from ._build import ProfileBuilder

SUBSET_BUDGET = 2**20


@dataclass(frozen=True)
class HittingSetInstance:
    """Elements 0..n-1, a family of subsets and the budget k."""

    n: int
    family: tuple[frozenset, ...]
    k: int

    def __post_init__(self):
        object.__setattr__(self, "family", tuple(frozenset(int(x) for x in F) for F in self.family))
        if self.k <= 0:
            raise ValueError(f"hitting set budget k must be positive, got {self.k}")
        if self.n < 1:
            raise ValueError("need at least one element")
        for j, F in enumerate(self.family, 1):
            if not F:
                raise ValueError(f"set F{j} is empty")
            bad = [x for x in F if not 0 <= x < self.n]
            if bad:
                raise ValueError(f"set F{j} has elements out of range: {sorted(bad)}")

    @property
    def m(self) -> int:
        return len(self.family)


def exhaustive_hitting_set(h: HittingSetInstance, budget: int = SUBSET_BUDGET):
    """A smallest hitting set of size <= k (as a sorted tuple), or None."""
    total = sum(math.comb(h.n, s) for s in range(min(h.k, h.n) + 1))
    if total > budget:
        raise BudgetExceeded("hitting-set subsets", total, budget)
    for size in range(min(h.k, h.n) + 1):
        for sub in itertools.combinations(range(h.n), size):
            chosen = set(sub)
            if all(F & chosen for F in h.family):
                return sub
    return None


def parse_hitting_set(text: str) -> HittingSetInstance:
    """``p hs <n> <k>`` then one set per line as 1-based ids ending in 0."""
    header, family = None, []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "hs":
                raise ValueError(f"bad hitting-set header {line!r} (expected 'p hs n k')")
            header = (int(parts[2]), int(parts[3]))
            continue
        nums = [int(x) for x in line.split()]
        if not nums or nums[-1] != 0:
            raise ValueError(f"set line must end with 0: {line!r}")
        family.append(frozenset(x - 1 for x in nums[:-1]))
    if header is None:
        raise ValueError("missing 'p hs n k' header")
    return HittingSetInstance(header[0], tuple(family), header[1])


def to_hitting_set_text(h: HittingSetInstance) -> str:
    lines = [f"p hs {h.n} {h.k}"] + [" ".join(str(x + 1) for x in sorted(F)) + " 0" for F in h.family]
    return "\n".join(lines) + "\n"


def _copy(r: int, i: int) -> str:
    return f"s{r + 1}^{i}"


def _copies(b: ProfileBuilder, h: HittingSetInstance) -> None:
    for i in range(1, h.k + 1):
        for r in range(h.n):
            b.add(_copy(r, i))
        b.party(*[_copy(r, i) for r in range(h.n)])


def _fj(h: HittingSetInstance, j: int, i: int) -> list[str]:
    return [_copy(r, i) for r in sorted(h.family[j])]


def _dummies(b, group, count):
    out = []
    for k in range(1, count + 1):
        lab = f"d{group}_{k}"
        b.add(lab)
        b.party(lab)
        out.append(lab)
    return out


def _comment(h):
    sets = " ".join("{" + ",".join(f"s{x + 1}" for x in sorted(F)) + "}" for F in h.family)
    return f"hitting set: n={h.n} k={h.k} family={sets}"


def hitting_set_to_short(h: HittingSetInstance, family: Short):
    """YES iff h has no hitting set of size <= k."""
    ell = family.ell
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    _copies(b, h)
    d1, d2, d3, d4 = (_dummies(b, str(g), ell - 1) for g in (1, 2, 3, 4))
    m = h.m
    b.vote("w", b.fill(d1 + ["w"]))
    for j in range(m):
        order = b.fill([c for i in range(1, h.k + 1) for c in _fj(h, j, i)] + d2 + ["p"])
        b.vote(f"u{j + 1}", order)
        b.vote(f"u'{j + 1}", order)
    b.vote("v0", b.fill(["w"] + d3), copies=2 * m + 1)
    b.vote("v0'", b.fill(["p"] + d4), copies=2 * m + 1)
    return b.build("p", [f"hitting_set_to_short rule={family}", _comment(h), "placeholders in canonical order"])


def hitting_set_to_vetolike(h: HittingSetInstance, family: VetoLike):
    """YES iff h has no hitting set of size <= k."""
    ell = family.ell
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    _copies(b, h)
    d = _dummies(b, "", ell - 1)
    b.vote("v0", b.fill(tail=["p"] + d))
    for i in range(1, h.k + 1):
        b.vote(f"W{i}", b.fill(tail=[_copy(r, i) for r in range(h.n)] + d), copies=2)
    for j in range(h.m):
        tail = ["w"] + [c for i in range(1, h.k + 1) for c in _fj(h, j, i)] + d
        b.vote(f"V{j + 1}", b.fill(tail=tail), copies=2)
    return b.build("p", [f"hitting_set_to_vetolike rule={family}", _comment(h), "placeholders in canonical order"])
