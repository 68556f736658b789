"""Positional scoring rules: Borda, short, and Veto-like families."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

import numpy as np

from .election import PartyInstance, ReducedElection


@dataclass(frozen=True)
class Borda:
    def __str__(self):
        return "borda"


@dataclass(frozen=True)
class Short:
    """Vector ``(a1, ..., al, 0, ..., 0)`` with ``a1 >= ... >= al > 0``."""

    prefix: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "prefix", tuple(int(x) for x in self.prefix))
        pre = self.prefix
        if not pre:
            raise ValueError("short rule needs a nonempty prefix")
        if any(a < b for a, b in zip(pre, pre[1:])):
            raise ValueError(f"short prefix must be non-increasing: {pre}")
        if pre[-1] <= 0:
            raise ValueError(f"short prefix must end in a positive value: {pre}")

    @property
    def ell(self) -> int:
        return len(self.prefix)

    def __str__(self):
        return "short:" + ",".join(map(str, self.prefix))


@dataclass(frozen=True)
class VetoLike:
    """Vector ``(a, ..., a, a1, ..., al)`` with ``a > a1 >= ... >= al >= 0``."""

    a: int
    suffix: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "a", int(self.a))
        object.__setattr__(self, "suffix", tuple(int(x) for x in self.suffix))
        suf = self.suffix
        if not suf:
            raise ValueError("veto-like rule needs a nonempty suffix")
        if self.a <= suf[0]:
            raise ValueError(f"veto-like rule needs a > a1, got a={self.a}, a1={suf[0]}")
        if any(x < y for x, y in zip(suf, suf[1:])) or suf[-1] < 0:
            raise ValueError(f"veto-like suffix must be non-increasing and >= 0: {suf}")

    @property
    def ell(self) -> int:
        return len(self.suffix)

    def __str__(self):
        return f"vetolike:{self.a};" + ",".join(map(str, self.suffix))


ScoringRuleFamily = Borda | Short | VetoLike


def effective_vector(family: ScoringRuleFamily, m: int) -> tuple[int, ...]:
    """Concrete scoring vector for a reduced election with ``m`` nominees."""
    if m < 1:
        raise ValueError("scoring vector length must be >= 1")
    if isinstance(family, Borda):
        return tuple(range(m - 1, -1, -1))
    if isinstance(family, Short):
        pre = family.prefix[:m]
        return pre + (0,) * (m - len(pre))
    if isinstance(family, VetoLike):
        k = min(family.ell, m)
        return (family.a,) * (m - k) + family.suffix[family.ell - k:]
    raise TypeError(f"not a scoring rule family: {family!r}")


def truncation_warning(family: ScoringRuleFamily, m: int) -> str | None:
    if isinstance(family, (Short, VetoLike)) and m < family.ell:
        return f"{family} evaluated on {m} nominees (< l={family.ell}); vector truncated"
    return None


@dataclass(frozen=True)
class ScoreTable:
    scores: Mapping[int, int]
    vector: tuple[int, ...]
    warning: str | None = None

    def __getitem__(self, c: int) -> int:
        return self.scores[c]


def positional_scores(reduced: ReducedElection, family: ScoringRuleFamily) -> ScoreTable:
    m = reduced.m
    vec = np.array(effective_vector(family, m), dtype=np.int64)
    # per type: vec[position] weighted by multiplicity
    totals = (vec[reduced.ranks] * reduced.counts[:, None]).sum(axis=0)
    scores = {c: int(totals[k]) for k, c in enumerate(reduced.nominees)}
    return ScoreTable(scores, tuple(int(x) for x in vec), truncation_warning(family, m))


def score_winners(table: ScoreTable | Mapping[int, int]) -> frozenset[int]:
    scores = table.scores if isinstance(table, ScoreTable) else table
    if not scores:
        raise ValueError("empty score table")
    best = max(scores.values())
    return frozenset(c for c, v in scores.items() if v == best)


class ScoringRule:
    """Winner determination for a positional scoring family."""

    def __init__(self, family: ScoringRuleFamily):
        self.family = family

    @property
    def id(self) -> str:
        return str(self.family)

    def __repr__(self):
        return f"ScoringRule({self.id})"

    def __eq__(self, other):
        return isinstance(other, ScoringRule) and other.family == self.family

    def __hash__(self):
        return hash(self.family)

    def scores(self, reduced: ReducedElection) -> ScoreTable:
        return positional_scores(reduced, self.family)

    def winners(self, reduced: ReducedElection) -> frozenset[int]:
        return score_winners(self.scores(reduced))

    def witness(self, reduced: ReducedElection, p: int) -> int | None:
        """A nominee scoring strictly more than ``p``, or None if ``p`` wins."""
        sc = self.scores(reduced).scores
        best = max(sc, key=lambda c: (sc[c], -c))
        return best if sc[best] > sc[p] else None

    def checker(self, instance: PartyInstance):
        """Fast ``nominees -> witness | None`` for repeated evaluation on one instance."""
        e = instance.election
        vec = effective_vector(self.family, instance.t)
        orders = [o for o, _ in e.voter_types]
        counts = [n for _, n in e.voter_types]
        p = instance.p

        def check(nominees) -> int | None:
            nom = set(nominees)
            score = dict.fromkeys(nom, 0)
            for order, n in zip(orders, counts):
                k = 0
                for c in order:
                    if c in nom:
                        if vec[k] == 0:
                            break
                        score[c] += n * vec[k]
                        k += 1
            best = max(score, key=lambda c: (score[c], -c))
            return best if score[best] > score[p] else None

        return check
