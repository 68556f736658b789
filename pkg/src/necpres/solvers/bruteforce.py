"""Exhaustive search over all nominations (the XP / FPT(s, t) baseline)."""

from __future__ import annotations

import itertools
import math
import os

from ..election import PartyInstance
from .verdict import BudgetExceeded, Verdict, no_verdict, yes_verdict

DEFAULT_BUDGET = 10**7
BUDGET_ENV = "NECPRES_BRUTEFORCE_BUDGET"


def default_budget() -> int:
    return int(os.environ.get(BUDGET_ENV, DEFAULT_BUDGET))


def nomination_count(instance: PartyInstance) -> int:
    return math.prod(len(instance.parties[j]) for j in instance.other_parties())


def iter_nominations(instance: PartyInstance):
    """Nominee tuples containing ``p``, as a mixed-radix counter.

    Parties other than p's are ordered by (size, index); the last one
    varies fastest.
    """
    others = sorted(instance.other_parties(), key=lambda j: (len(instance.parties[j]), j))
    blocks = [instance.parties[j] for j in others]
    p = instance.p
    for combo in itertools.product(*blocks):
        yield (p,) + combo


def solve_bruteforce(instance: PartyInstance, rule, budget: int | None = None) -> Verdict:
    budget = default_budget() if budget is None else budget
    total = nomination_count(instance)
    if total > budget:
        raise BudgetExceeded("brute-force nominations", total, budget)
    check = rule.checker(instance)
    explored = 0
    for nominees in iter_nominations(instance):
        explored += 1
        w = check(nominees)
        if w is not None:
            return no_verdict(rule, "bruteforce", nominees, w, guesses=explored)
    return yes_verdict(rule, "bruteforce", guesses=explored)
