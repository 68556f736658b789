"""Polynomial-time Necessary President for Borda.

For a guessed rival ``w`` every other party independently nominates a
candidate maximising ``delta(c)``: the number of voters ranking c between
w and p (w first) minus those ranking it between p and w (p first).
That nomination maximises sc(w) - sc(p), so p survives iff it survives
that one reduced election for every w.
"""

from __future__ import annotations

import numpy as np

from ..election import Election, PartyInstance
from ..scoring import Borda, ScoringRule
from .verdict import Verdict, no_verdict, yes_verdict


def borda_delta(c: int, p: int, w: int, election: Election) -> int:
    r = election.ranks
    n = election.counts
    wcp = (r[:, w] < r[:, c]) & (r[:, c] < r[:, p])
    pcw = (r[:, p] < r[:, c]) & (r[:, c] < r[:, w])
    return int(n[wcp].sum() - n[pcw].sum())


def _delta_row(election: Election, p: int, w: int) -> np.ndarray:
    """delta(c) for every candidate c at once (entries for p, w are 0)."""
    r = election.ranks
    n = election.counts[:, None]
    rw, rp = r[:, w:w + 1], r[:, p:p + 1]
    wcp = (rw < r) & (r < rp)
    pcw = (rp < r) & (r < rw)
    return (n * wcp).sum(axis=0) - (n * pcw).sum(axis=0)


def solve_borda(instance: PartyInstance) -> Verdict:
    rule = ScoringRule(Borda())
    e = instance.election
    p, pp = instance.p, instance.p_party
    nmat = e.majority
    others = instance.other_parties()
    blocks = [np.array(instance.parties[j]) for j in others]
    guesses = 0
    for wj, wblock in zip(others, blocks):
        rest = [b for j, b in zip(others, blocks) if j != wj]
        for w in wblock.tolist():
            guesses += 1
            delta = _delta_row(e, p, w)
            nominees = [p, w] + [int(b[np.argmax(delta[b])]) for b in rest]
            nom = np.array(nominees)
            score = nmat[np.ix_(nom, nom)].sum(axis=1)
            if score.max() > score[0]:
                k = int(np.argmax(score))
                return no_verdict(rule, "borda", nominees, nominees[k], guesses=guesses)
    return yes_verdict(rule, "borda", guesses=guesses)
