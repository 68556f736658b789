"""Polynomial-time Necessary President for Copeland^alpha.

Pairwise outcomes do not depend on who else is nominated, so each nominee
c shifts the gap Cpl(w) - Cpl(p) by a fixed amount and the parties can be
optimised independently.
"""

from __future__ import annotations

from fractions import Fraction

import numpy as np

from ..condorcet import CopelandRule, parse_alpha
from ..election import MajorityMatrix, PartyInstance
from .verdict import Verdict, no_verdict, yes_verdict


def _points(n: np.ndarray, num: int, den: int) -> np.ndarray:
    pts = np.where(n > n.T, den, np.where(n == n.T, num, 0)).astype(np.int64)
    np.fill_diagonal(pts, 0)
    return pts


def copeland_pair_delta(c: int, w: int, p: int, matrix: MajorityMatrix, alpha) -> Fraction:
    """Cpl(w, c) - Cpl(p, c), one of 1, 1-a, a, a-1, -a, -1, 0."""
    alpha = parse_alpha(alpha)

    def cpl(x):
        if matrix[x, c] > matrix[c, x]:
            return Fraction(1)
        return alpha if matrix[x, c] == matrix[c, x] else Fraction(0)

    return cpl(w) - cpl(p)


def solve_copeland(instance: PartyInstance, alpha) -> Verdict:
    rule = CopelandRule(alpha)
    num, den = rule.alpha.numerator, rule.alpha.denominator
    p = instance.p
    pts = _points(instance.election.majority, num, den)
    others = instance.other_parties()
    blocks = [np.array(instance.parties[j]) for j in others]
    guesses = 0
    for wj, wblock in zip(others, blocks):
        rest = [b for j, b in zip(others, blocks) if j != wj]
        for w in wblock.tolist():
            guesses += 1
            delta = pts[w] - pts[p]
            gap = int(pts[w, p] - pts[p, w]) + sum(int(delta[b].max()) for b in rest)
            if gap > 0:
                nominees = [p, w] + [int(b[np.argmax(delta[b])]) for b in rest]
                witness = rule.checker(instance)(nominees)
                return no_verdict(rule, "copeland", nominees, witness, guesses=guesses)
    return yes_verdict(rule, "copeland", guesses=guesses)
