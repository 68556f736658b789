"""Routing from a rule to the specialised algorithm for it."""

from __future__ import annotations

from ..condorcet import CopelandRule, MaximinRule
from ..scoring import Borda, ScoringRule, Short, VetoLike
from .borda import solve_borda
from .bruteforce import solve_bruteforce
from .copeland import solve_copeland
from .maximin import solve_maximin
from .short_fpt import solve_short_fpt
from .vetolike import solve_vetolike_fpt

SOLVERS = ("auto", "borda", "copeland", "maximin", "short", "vetolike", "bruteforce")

ROUTES = {
    "borda": "borda",
    "short": "short",
    "vetolike": "vetolike",
    "copeland": "copeland",
    "maximin": "maximin",
    "rankedpairs": "bruteforce",
}


def rule_kind(rule) -> str:
    if isinstance(rule, ScoringRule):
        return {Borda: "borda", Short: "short", VetoLike: "vetolike"}[type(rule.family)]
    if isinstance(rule, CopelandRule):
        return "copeland"
    if isinstance(rule, MaximinRule):
        return "maximin"
    return "rankedpairs"


def route(rule, solver: str = "auto") -> str:
    if solver not in SOLVERS:
        raise ValueError(f"unknown solver {solver!r}; choose from {', '.join(SOLVERS)}")
    kind = rule_kind(rule)
    chosen = ROUTES[kind] if solver == "auto" else solver
    if chosen not in ("bruteforce", kind):
        raise ValueError(f"solver {chosen!r} does not handle rule {rule.id}")
    return chosen


def solve(instance, rule, solver: str = "auto", budget: int | None = None):
    chosen = route(rule, solver)
    if chosen == "bruteforce":
        return solve_bruteforce(instance, rule, budget=budget)
    if chosen == "borda":
        return solve_borda(instance)
    if chosen == "copeland":
        return solve_copeland(instance, rule.alpha)
    if chosen == "maximin":
        return solve_maximin(instance)
    if chosen == "short":
        return solve_short_fpt(instance, rule.family, budget=budget)
    return solve_vetolike_fpt(instance, rule.family, budget=budget)
