"""Rule identifiers as used on the command line and in reports.

    borda
    short:a1,...,al          (plurality = short:1, k-approval = short:1,...,1)
    vetolike:a;a1,...,al     (veto = vetolike:1;0)
    copeland:<num>/<den>     (llull = copeland:1/1)
    maximin
    rankedpairs[:lex|:seed=<n>]
"""

from __future__ import annotations

from .condorcet import CopelandRule, MaximinRule, RankedPairsRule, parse_tiebreak
from .scoring import Borda, ScoringRule, Short, VetoLike

_ALIASES = {
    "plurality": "short:1",
    "veto": "vetolike:1;0",
    "llull": "copeland:1/1",
    "copeland": "copeland:0/1",
}


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.split(",") if x.strip())


def parse_rule(text: str):
    spec = _ALIASES.get(text.strip().lower(), text.strip())
    name, _, arg = spec.partition(":")
    name = name.lower()
    try:
        if name == "borda" and not arg:
            return ScoringRule(Borda())
        if name == "short":
            return ScoringRule(Short(_ints(arg)))
        if name.endswith("-approval") and not arg:
            return ScoringRule(Short((1,) * int(name.split("-")[0])))
        if name.endswith("-veto") and not arg:
            return ScoringRule(VetoLike(1, (0,) * int(name.split("-")[0])))
        if name == "vetolike":
            a, _, suffix = arg.partition(";")
            return ScoringRule(VetoLike(int(a), _ints(suffix)))
        if name == "copeland":
            return CopelandRule(arg or "0")
        if name == "maximin" and not arg:
            return MaximinRule()
        if name == "rankedpairs":
            return RankedPairsRule(parse_tiebreak(arg or None))
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"bad rule identifier {text!r}: {exc}") from None
    raise ValueError(f"unknown rule identifier {text!r}")
