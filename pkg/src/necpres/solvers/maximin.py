"""Polynomial-time Necessary President for Maximin.

Guess the rival w and the candidate c_hat realising p's Maximin score
s_hat = N(p, c_hat).  The guess is viable iff w beats s_hat against p and
c_hat and every remaining party owns someone w beats by more than s_hat.

c_hat is also allowed to be w itself.  Without that guess an election in
which p's worst comparison is against its own rival is missed whenever
no third nominee can play the c_hat role; with exactly two parties it is
the only guess there is.
"""

from __future__ import annotations

import numpy as np

from ..condorcet import MaximinRule
from ..election import PartyInstance
from .verdict import Verdict, no_verdict, yes_verdict


def solve_maximin(instance: PartyInstance) -> Verdict:
    rule = MaximinRule()
    n = instance.election.majority
    p = instance.p
    others = instance.other_parties()
    if not others:
        return yes_verdict(rule, "maximin", notes=("p's party is the only party",))
    blocks = [np.array(instance.parties[j]) for j in others]
    party_of = instance.party_of
    col = {j: k for k, j in enumerate(others)}
    # best[w, k] = max over c in the k-th other party of N(w, c)
    best = np.stack([n[:, b].max(axis=1) for b in blocks], axis=1)
    guesses = 0
    for wj, wblock in zip(others, blocks):
        for w in wblock.tolist():
            row = best[w].copy()
            row[col[wj]] = np.iinfo(np.int64).max  # w's own party is not a constraint
            order = np.argsort(row, kind="stable")
            low1 = row[order[0]]
            low2 = row[order[1]] if len(order) > 1 else np.iinfo(np.int64).max
            # c_hat = w: every other party must be covered
            cands = [(w, None)] + [(c, col[party_of[c]]) for b, j in zip(blocks, others) if j != wj for c in b.tolist()]
            for c_hat, k in cands:
                guesses += 1
                s_hat = n[p, c_hat]
                if n[w, p] <= s_hat or n[w, c_hat] <= s_hat and c_hat != w:
                    continue
                rest_min = low1 if k is None or order[0] != k else low2
                if rest_min > s_hat:
                    nominees = _assemble(instance, blocks, others, wj, w, c_hat, k, s_hat, n)
                    witness = rule.checker(instance)(nominees)
                    return no_verdict(rule, "maximin", nominees, witness, guesses=guesses)
    return yes_verdict(rule, "maximin", guesses=guesses)


def _assemble(instance, blocks, others, wj, w, c_hat, k_hat, s_hat, n):
    nominees = [instance.p, w]
    for k, (b, j) in enumerate(zip(blocks, others)):
        if j == wj:
            continue
        if k == k_hat:
            nominees.append(c_hat)
        else:
            nominees.append(int(b[np.argmax(n[w, b] > s_hat)]))
    return nominees
