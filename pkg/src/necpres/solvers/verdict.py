from __future__ import annotations

from dataclasses import dataclass, field

from ..election import PartyInstance, reduce


class BudgetExceeded(RuntimeError):
    """A super-polynomial enumeration would exceed its configured budget."""

    def __init__(self, what: str, needed: int, budget: int):
        self.what, self.needed, self.budget = what, needed, budget
        super().__init__(f"{what}: {needed} exceeds budget {budget}")


@dataclass(frozen=True)
class Verdict:
    """YES, or NO with a checkable counterexample nomination.

    ``nominees`` is the full nominee set C' (it contains ``p``) and
    ``witness`` a nominee that beats ``p`` in the reduced election over C'.
    """

    yes: bool
    rule: str
    solver: str
    nominees: tuple[int, ...] | None = None
    witness: int | None = None
    tiebreak: str | None = None
    guesses: int = 0
    notes: tuple[str, ...] = field(default=())

    @property
    def answer(self) -> str:
        return "YES" if self.yes else "NO"


def no_verdict(rule, solver, nominees, witness, **kw) -> Verdict:
    return Verdict(
        False,
        rule.id,
        solver,
        tuple(sorted(int(c) for c in nominees)),
        int(witness),
        tiebreak=_tiebreak(rule),
        **kw,
    )


def yes_verdict(rule, solver, **kw) -> Verdict:
    return Verdict(True, rule.id, solver, tiebreak=_tiebreak(rule), **kw)


def _tiebreak(rule) -> str | None:
    tb = getattr(rule, "tiebreak", None)
    return None if tb is None else str(tb)


def certificate_holds(instance: PartyInstance, rule, verdict: Verdict) -> bool:
    """Re-run winner determination on a NO certificate.

    True iff ``p`` is not a winner of the reduced election over the
    certificate's nominees and the witness is a nominee that beats ``p``.
    Malformed nominee sets count as invalid.
    """
    if verdict.yes or verdict.nominees is None:
        return False
    p = instance.p
    if p not in verdict.nominees or verdict.witness not in verdict.nominees:
        return False
    try:
        reduced = reduce(instance, verdict.nominees)
    except ValueError:
        return False
    if p in rule.winners(reduced):
        return False
    return _witness_beats(rule, reduced, verdict.witness, p)


def _witness_beats(rule, reduced, w, p) -> bool:
    if hasattr(rule, "result"):  # Ranked Pairs: w -> p must be a locked arc
        return (w, p) in rule.result(reduced).locked_arcs
    scores = rule.scores(reduced)
    scores = getattr(scores, "scores", scores)
    return scores[w] > scores[p]
