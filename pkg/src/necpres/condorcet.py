"""Copeland^alpha, Maximin and Ranked Pairs on reduced elections.

All tie logic is exact: Copeland scores are :class:`fractions.Fraction`
and Ranked Pairs orders equal-weight arcs by an explicit policy.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

import numpy as np

from .election import PartyInstance, ReducedElection, pairwise_matrix
from .scoring import ScoreTable, score_winners


def parse_alpha(text: str | Fraction | int) -> Fraction:
    alpha = Fraction(text)
    if not 0 <= alpha <= 1:
        raise ValueError(f"alpha must lie in [0, 1], got {alpha}")
    return alpha


def copeland_scores(reduced: ReducedElection, alpha: Fraction) -> dict[int, Fraction]:
    alpha = parse_alpha(alpha)
    n = pairwise_matrix(reduced).counts
    wins = (n > n.T).sum(axis=1)
    ties = (n == n.T).sum(axis=1) - 1  # diagonal is always "tied"
    return {c: Fraction(int(wins[k])) + alpha * int(ties[k]) for k, c in enumerate(reduced.nominees)}


def maximin_scores(reduced: ReducedElection) -> ScoreTable:
    n = pairwise_matrix(reduced).counts
    if reduced.m == 1:
        c = reduced.nominees[0]
        return ScoreTable({c: reduced.election.n_voters}, (), "single nominee: Maximin score set to |V|")
    masked = n + np.diag(np.full(reduced.m, np.iinfo(np.int64).max // 2))
    mins = masked.min(axis=1)
    return ScoreTable({c: int(mins[k]) for k, c in enumerate(reduced.nominees)}, ())


def _max_witness(scores: dict, p: int) -> int | None:
    best = max(scores, key=lambda c: (scores[c], -c))
    return best if scores[best] > scores[p] else None


class CopelandRule:
    def __init__(self, alpha):
        self.alpha = parse_alpha(alpha)

    @property
    def id(self) -> str:
        return f"copeland:{self.alpha.numerator}/{self.alpha.denominator}"

    def __repr__(self):
        return f"CopelandRule({self.alpha})"

    def __eq__(self, other):
        return isinstance(other, CopelandRule) and other.alpha == self.alpha

    def __hash__(self):
        return hash(("copeland", self.alpha))

    def scores(self, reduced):
        return copeland_scores(reduced, self.alpha)

    def winners(self, reduced):
        return score_winners(self.scores(reduced))

    def witness(self, reduced, p):
        return _max_witness(self.scores(reduced), p)

    def checker(self, instance: PartyInstance):
        n = instance.election.majority
        num, den = self.alpha.numerator, self.alpha.denominator
        # scaled by den so everything stays integral
        pts = np.where(n > n.T, den, np.where(n == n.T, num, 0))
        np.fill_diagonal(pts, 0)
        pts = pts.tolist()
        p = instance.p

        def check(nominees):
            nom = list(nominees)
            score = {c: sum(pts[c][d] for d in nom) for c in nom}
            return _max_witness(score, p)

        return check


class MaximinRule:
    id = "maximin"

    def __repr__(self):
        return "MaximinRule()"

    def __eq__(self, other):
        return isinstance(other, MaximinRule)

    def __hash__(self):
        return hash("maximin")

    def scores(self, reduced):
        return maximin_scores(reduced)

    def winners(self, reduced):
        return score_winners(self.scores(reduced))

    def witness(self, reduced, p):
        return _max_witness(dict(self.scores(reduced).scores), p)

    def checker(self, instance: PartyInstance):
        n = instance.election.majority.tolist()
        p = instance.p

        def check(nominees):
            nom = list(nominees)
            if len(nom) == 1:
                return None
            score = {c: min(n[c][d] for d in nom if d != c) for c in nom}
            return _max_witness(score, p)

        return check


@dataclass(frozen=True)
class Lexicographic:
    """Equal-weight arcs in increasing (source index, target index) order."""

    def __str__(self):
        return "lex"

    def keys(self, m: int):
        return None


@dataclass(frozen=True)
class SeededRandom:
    """Equal-weight arcs ordered by a seeded random permutation of all ordered pairs."""

    seed: int

    def __str__(self):
        return f"seed={self.seed}"

    def keys(self, m: int):
        return _random_pair_keys(self.seed, m)


@lru_cache(maxsize=32)
def _random_pair_keys(seed: int, m: int) -> np.ndarray:
    keys = list(range(m * m))
    random.Random(seed).shuffle(keys)
    return np.array(keys, dtype=np.int64).reshape(m, m)


def parse_tiebreak(text: str | None):
    if text in (None, "", "lex"):
        return Lexicographic()
    if text.startswith("seed="):
        return SeededRandom(int(text[5:]))
    raise ValueError(f"unknown tie-break policy {text!r} (use 'lex' or 'seed=<n>')")


def sorted_majority_arcs(n: np.ndarray, candidates, tiebreak, m: int) -> list[tuple[int, int, int]]:
    """Strict-majority arcs ``(a, b, weight)`` in processing order.

    ``n`` is indexed by position in ``candidates``; arcs carry global indices.
    Tie-break keys are drawn over all ``m`` candidates of the parent election,
    so a pair is ordered the same way in every reduced election.
    """
    keys = tiebreak.keys(m)
    arcs = []
    for i, a in enumerate(candidates):
        for j, b in enumerate(candidates):
            if n[i, j] > n[j, i]:
                k = (a, b) if keys is None else int(keys[a, b])
                arcs.append((-int(n[i, j]), k, a, b))
    arcs.sort()
    return [(a, b, -w) for w, _, a, b in arcs]


@dataclass(frozen=True)
class RankedPairsResult:
    locked_arcs: tuple[tuple[int, int], ...]
    winners: frozenset[int]
    tiebreak: str


def lock_arcs(arcs, vertices):
    """Greedy acyclic locking.  Returns the locked arcs in insertion order."""
    vertices = list(vertices)
    desc = {v: 0 for v in vertices}  # bitmask of vertices reachable from v
    locked = []
    for a, b, *_ in arcs:
        if a == b or (desc[b] >> a) & 1:
            continue
        add = (1 << b) | desc[b]
        for x in vertices:
            if x == a or (desc[x] >> a) & 1:
                desc[x] |= add
        locked.append((a, b))
    return locked


def ranked_pairs_winners(reduced: ReducedElection, tiebreak=None) -> RankedPairsResult:
    tiebreak = tiebreak if tiebreak is not None else Lexicographic()
    mm = pairwise_matrix(reduced)
    arcs = sorted_majority_arcs(mm.counts, reduced.nominees, tiebreak, reduced.election.m)
    locked = lock_arcs(arcs, reduced.nominees)
    heads = {b for _, b in locked}
    winners = frozenset(c for c in reduced.nominees if c not in heads)
    return RankedPairsResult(tuple(locked), winners, str(tiebreak))


class RankedPairsRule:
    def __init__(self, tiebreak=None):
        self.tiebreak = tiebreak if tiebreak is not None else Lexicographic()

    @property
    def id(self) -> str:
        return f"rankedpairs:{self.tiebreak}"

    def __repr__(self):
        return f"RankedPairsRule({self.tiebreak})"

    def __eq__(self, other):
        return isinstance(other, RankedPairsRule) and other.tiebreak == self.tiebreak

    def __hash__(self):
        return hash(("rp", self.tiebreak))

    def result(self, reduced) -> RankedPairsResult:
        return ranked_pairs_winners(reduced, self.tiebreak)

    def winners(self, reduced):
        return self.result(reduced).winners

    def witness(self, reduced, p):
        for a, b in self.result(reduced).locked_arcs:
            if b == p:
                return a
        return None

    def checker(self, instance: PartyInstance):
        e = instance.election
        arcs = sorted_majority_arcs(e.majority, range(e.m), self.tiebreak, e.m)
        arcs = [(a, b) for a, b, _ in arcs]
        p = instance.p
        last_into_p = max((k for k, (_, b) in enumerate(arcs) if b == p), default=-1)
        arcs = arcs[:last_into_p + 1]

        def check(nominees):
            nom = list(nominees)
            mask = 0
            for c in nom:
                mask |= 1 << c
            desc = dict.fromkeys(nom, 0)
            for a, b in arcs:
                if not ((mask >> a) & 1 and (mask >> b) & 1):
                    continue
                db = desc[b]
                if (db >> a) & 1:
                    continue
                if b == p:
                    return a
                add = (1 << b) | db
                for x in nom:
                    if x == a or (desc[x] >> a) & 1:
                        desc[x] |= add
            return None

        return check
