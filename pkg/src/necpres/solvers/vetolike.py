"""FPT(tau) Necessary President for Veto-like scoring rules.

With at most l*tau parties the size-t vector is just a short vector and the
structure search applies.  With more parties some nominee is never in
anyone's bottom l and so collects the maximum |V|*a, hence p survives iff
it can never be pushed into some voter's bottom l.
"""

from __future__ import annotations

from ..election import PartyInstance
from ..scoring import ScoringRule, Short, VetoLike, effective_vector
from .short_fpt import scored_length, solve_short_fpt
from .verdict import Verdict, no_verdict, yes_verdict


def solve_vetolike_fpt(instance: PartyInstance, family: VetoLike, budget: int | None = None) -> Verdict:
    rule = ScoringRule(family)
    t = instance.t
    tau = instance.election.tau
    if t <= family.ell * tau:
        vec = effective_vector(family, t)
        k = scored_length(vec)
        if k == 0:  # every nominee scores 0, so everyone ties
            return yes_verdict(rule, "vetolike_fpt/short", notes=("all-zero vector at this size",))
        return solve_short_fpt(instance, Short(vec[:k]), budget=budget, rule=rule, solver="vetolike_fpt/short")
    p = instance.p
    others = instance.other_parties()
    for i, (order, _) in enumerate(instance.election.voter_types):
        above = order[: order.index(p)]
        above_parties = {instance.party_of[c] for c in above} - {instance.p_party}
        # p's own party nominates p, so only the other parties can outrank it
        if len(above_parties) >= t - family.ell:
            chosen = {}
            for c in above:
                j = instance.party_of[c]
                if j != instance.p_party and j not in chosen:
                    chosen[j] = c
            nominees = [p] + [chosen.get(j, instance.parties[j][0]) for j in others]
            witness = rule.checker(instance)(nominees)
            return no_verdict(rule, "vetolike_fpt/count", nominees, witness, guesses=i + 1)
    return yes_verdict(rule, "vetolike_fpt/count", guesses=tau)
