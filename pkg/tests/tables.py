"""Expected majority tables of the Ranked Pairs instances, built from the source objects.

Only the anchored pairs are listed; the reverse pair is the complement and
every unlisted pair sits at exactly half the electorate.
"""

import itertools
import re

from necpres.election import pairwise_matrix


def _table(labels, anchored, total, default):
    out = {}
    for a, b in itertools.permutations(labels, 2):
        if (a, b) in anchored:
            out[a, b] = anchored[a, b]
        elif (b, a) in anchored:
            out[a, b] = total - anchored[b, a]
        else:
            out[a, b] = default
    return out


def sat_rp_expected(f, labels):
    lits = [x for x in labels if re.fullmatch(r"~?x\d+", x)]
    cplus = [x for x in labels if re.fullmatch(r"C\d+\^\d", x)]
    occurs = {}
    for i, c in enumerate(f.clauses, 1):
        for j, x in enumerate(c, 1):
            neg = f"x{-x}" if x < 0 else f"~x{x}"
            occurs.setdefault(neg, set()).add(f"C{i}^{j}")
    exp = {("w", "p"): 7}
    for i in range(1, f.m + 1):
        chain = ["p", f"C{i}^-1", f"C{i}^-2", f"C{i}^-3", "w"]
        for a, b in zip(chain, chain[1:]):
            exp[a, b] = 8
    for lit in lits:
        exp["p", lit] = 10
        for c in cplus:
            exp[lit, c] = 8 if c in occurs.get(lit, ()) else 6
    for c in cplus:
        exp[c, "w"] = 10
    return _table(labels, exp, 12, 6)


def clique_rp_expected(labels):
    def vert(s):
        return tuple(int(t) for t in s.split("."))

    us = [x for x in labels if x.startswith("u")]
    es = [x for x in labels if x.startswith("e")]
    exp = {("w", "p"): 11}
    for u in us:
        exp["p", u] = 12
        exp["w", u] = 10
    for e in es:
        exp[e, "w"] = 12
        exp["p", e] = 10
        ends = {vert(s) for s in e[1:].split("-")}
        for u in us:
            v = vert(u[1:])
            exp[u, e] = 12 if v[0] in {x[0] for x in ends} and v not in ends else 10
    return _table(labels, exp, 20, 10)


def mismatches(inst, expected):
    n = pairwise_matrix(inst)
    labels = inst.election.labels
    idx = {x: i for i, x in enumerate(labels)}
    return [(a, b, n[idx[a], idx[b]], v) for (a, b), v in expected.items() if n[idx[a], idx[b]] != v]
