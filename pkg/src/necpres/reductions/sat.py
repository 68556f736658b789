"""(2,2)-E3-SAT formulas and their compilations into Necessary President.

Literals are DIMACS-style non-zero ints: ``v`` for x_v, ``-v`` for its
negation, variables numbered from 1.
"""

from __future__ import annotations

import itertools
import random
from collections import Counter
from dataclasses import dataclass

from ..scoring import Short, VetoLike
from ._build import ProfileBuilder

ASSIGNMENT_BUDGET_VARS = 24


@dataclass(frozen=True)
class Formula22E3:
    n: int
    clauses: tuple[tuple[int, int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "clauses", tuple(tuple(int(x) for x in c) for c in self.clauses))
        validate_formula(self)

    @property
    def m(self) -> int:
        return len(self.clauses)

    def satisfied_by(self, assignment) -> bool:
        """``assignment[v-1]`` is the truth value of x_v."""
        return all(any((lit > 0) == assignment[abs(lit) - 1] for lit in c) for c in self.clauses)


def validate_formula(f: Formula22E3) -> None:
    if f.n < 1:
        raise ValueError("formula needs at least one variable")
    if len(f.clauses) < 2:
        raise ValueError(f"a (2,2)-E3 formula has m >= 2 clauses, got {len(f.clauses)}")
    occ = Counter()
    for k, c in enumerate(f.clauses, 1):
        if len(c) != 3 or len(set(c)) != 3:
            raise ValueError(f"clause {k} must have exactly 3 distinct literals: {c}")
        for lit in c:
            if lit == 0 or abs(lit) > f.n:
                raise ValueError(f"clause {k}: literal {lit} out of range 1..{f.n}")
            occ[lit] += 1
    for v in range(1, f.n + 1):
        if occ[v] != 2 or occ[-v] != 2:
            raise ValueError(
                f"variable {v} occurs {occ[v]}x positively and {occ[-v]}x negatively (need 2 and 2)"
            )


def random_formula(n: int, seed: int, tries: int = 10_000) -> Formula22E3:
    """Uniform shuffle of the 4n literal occurrences into triples, rejecting repeats."""
    if (4 * n) % 3:
        raise ValueError(f"no (2,2)-E3 formula has n={n} variables (3m = 4n forces 3 | n)")
    rng = random.Random(seed)
    pool = [s * v for v in range(1, n + 1) for s in (1, 1, -1, -1)]
    for _ in range(tries):
        rng.shuffle(pool)
        clauses = [tuple(pool[i:i + 3]) for i in range(0, len(pool), 3)]
        if all(len(set(c)) == 3 for c in clauses):
            return Formula22E3(n, tuple(clauses))
    raise RuntimeError("could not sample a formula")  # pragma: no cover


def enumerate_assignments(f: Formula22E3, budget_vars: int = ASSIGNMENT_BUDGET_VARS):
    """(satisfiable, first satisfying assignment or None), scanning 2^n assignments."""
    if f.n > budget_vars:
        from ..solvers.verdict import BudgetExceeded

        raise BudgetExceeded("truth assignments", 2**f.n, 2**budget_vars)
    for bits in itertools.product((False, True), repeat=f.n):
        if f.satisfied_by(bits):
            return True, bits
    return False, None


def parse_dimacs(text: str) -> Formula22E3:
    n = None
    lits: list[int] = []
    for raw in text.splitlines():
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        if line.startswith("p"):
            parts = line.split()
            if len(parts) != 4 or parts[1] != "cnf":
                raise ValueError(f"bad DIMACS header {line!r}")
            n = int(parts[2])
            continue
        lits.extend(int(x) for x in line.split())
    if n is None:
        raise ValueError("missing 'p cnf n m' header")
    clauses, cur = [], []
    for x in lits:
        if x == 0:
            clauses.append(tuple(cur))
            cur = []
        else:
            cur.append(x)
    if cur:
        raise ValueError("last clause not terminated by 0")
    return Formula22E3(n, tuple(clauses))


def to_dimacs(f: Formula22E3) -> str:
    lines = [f"p cnf {f.n} {f.m}"] + [" ".join(map(str, c)) + " 0" for c in f.clauses]
    return "\n".join(lines) + "\n"


def _lit(x: int) -> str:
    return f"x{x}" if x > 0 else f"~x{-x}"


def _literal_parties(b: ProfileBuilder, n: int) -> None:
    for v in range(1, n + 1):
        b.add(_lit(v))
        b.add(_lit(-v))
        b.party(_lit(v), _lit(-v))


def _dummies(b: ProfileBuilder, group: str, count: int) -> list[str]:
    out = []
    for k in range(1, count + 1):
        lab = f"d{group}_{k}"
        b.add(lab)
        b.party(lab)
        out.append(lab)
    return out


def _formula_comment(f: Formula22E3) -> str:
    return "formula: " + " & ".join("(" + " | ".join(_lit(x) for x in c) + ")" for c in f.clauses)


def sat_to_short(f: Formula22E3, family: Short):
    """Plurality-like hardness instance: YES iff f is unsatisfiable."""
    ell = family.ell
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    _literal_parties(b, f.n)
    d1, d2, d3, d4 = (_dummies(b, str(h), ell - 1) for h in (1, 2, 3, 4))
    m = f.m
    b.vote("w", b.fill(d1 + ["w"]))
    b.vote("v0", b.fill(["w"] + d2), copies=2 * m + 1)
    b.vote("v0'", b.fill(["p"] + d3), copies=2 * m + 1)
    for j, c in enumerate(f.clauses, 1):
        order = b.fill([_lit(x) for x in c] + d4 + ["p"])
        b.vote(f"u{j}", order)
        b.vote(f"u'{j}", order)
    return b.build("p", [f"sat_to_short rule={family}", _formula_comment(f), "placeholders in canonical order"])


def sat_to_vetolike(f: Formula22E3, family: VetoLike):
    """Veto-like hardness instance: YES iff f is unsatisfiable."""
    ell = family.ell
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    _literal_parties(b, f.n)
    d = _dummies(b, "", ell - 1)
    b.vote("v0", b.fill(tail=["p"] + d))
    for i in range(1, f.n + 1):
        b.vote(f"W{i}", b.fill(tail=[_lit(i), _lit(-i)] + d), copies=2)
    for j, c in enumerate(f.clauses, 1):
        b.vote(f"V{j}", b.fill(tail=["w"] + [_lit(x) for x in c] + d), copies=2)
    return b.build("p", [f"sat_to_vetolike rule={family}", _formula_comment(f), "placeholders in canonical order"])


def _cpos(i: int, j: int) -> str:
    return f"C{i}^{j}"


def _cneg(i: int, j: int) -> str:
    return f"C{i}^-{j}"


def sat_to_ranked_pairs(f: Formula22E3):
    """Twelve-voter Ranked Pairs instance with parties of size <= 2: YES iff f is unsatisfiable."""
    q, r = f.m, f.n
    b = ProfileBuilder()
    b.add("p"), b.party("p")
    b.add("w"), b.party("w")
    _literal_parties(b, r)
    for i in range(1, q + 1):
        for j in (1, 2, 3):
            b.add(_cpos(i, j))
            b.add(_cneg(i, j))
            b.party(_cpos(i, j), _cneg(i, j))
    lits = [_lit(s * v) for v in range(1, r + 1) for s in (1, -1)]
    L = sorted(lits, key=b.index.get)
    cplus = sorted((_cpos(i, j) for i in range(1, q + 1) for j in (1, 2, 3)), key=b.index.get)
    cminus = sorted((_cneg(i, j) for i in range(1, q + 1) for j in (1, 2, 3)), key=b.index.get)
    # A(l): clause candidates whose literal is the complement of l
    A = {lab: [] for lab in lits}
    for i, c in enumerate(f.clauses, 1):
        for j, x in enumerate(c, 1):
            A[_lit(-x)].append(_cpos(i, j))
    for lab in A:
        A[lab].sort(key=b.index.get)
    Q = range(1, q + 1)
    QR = range(q, 0, -1)

    y = (
        ["p"] + L
        + [c for i in Q for c in (_cneg(i, 1), _cneg(i, 2))]
        + [_cneg(i, 3) for i in Q]
        + cplus + ["w"]
    )
    # y3, y4 regroup the negated clause candidates so that pairs from
    # different clauses end up tied; four identical copies of y would give
    # C_i^-2 -> C_k^-1 (i < k) and C_k^-2 -> C_i^-3 weight 8 and open
    # p ~> w paths that mix clauses.
    y34 = (
        ["p"] + L
        + [_cneg(i, 1) for i in Q]
        + [c for i in Q for c in (_cneg(i, 2), _cneg(i, 3))]
        + cplus + ["w"]
    )
    y12 = (
        cplus[::-1] + ["w"]
        + [c for i in QR for c in (_cneg(i, 2), _cneg(i, 3))]
        + ["p"] + [_cneg(i, 1) for i in QR] + L[::-1]
    )
    y34_ = (
        cplus[::-1] + [_cneg(i, 3) for i in QR] + ["w"]
        + [c for i in QR for c in (_cneg(i, 1), _cneg(i, 2))]
        + ["p"] + L[::-1]
    )
    pos = [_lit(v) for v in range(1, r + 1)]
    neg = [_lit(-v) for v in range(1, r + 1)]
    z_lits = [x for lab in pos + neg for x in [lab] + A[lab]]
    # the reverse block order; A(l) is also reversed so pairs inside it stay tied
    zr_lits = [x for lab in neg[::-1] + pos[::-1] for x in [lab] + A[lab][::-1]]
    z = z_lits + ["w", "p"] + cminus
    z1 = cminus[::-1] + ["p", "w"] + zr_lits
    z2 = cminus[::-1] + ["w", "p"] + zr_lits

    for h in (1, 2):
        b.vote(f"y{h}", y)
    for h in (3, 4):
        b.vote(f"y{h}", y34)
    for h in (1, 2):
        b.vote(f"y'{h}", y12)
    for h in (3, 4):
        b.vote(f"y'{h}", y34_)
    for h in (1, 2):
        b.vote(f"z{h}", z)
    b.vote("z'1", z1)
    b.vote("z'2", z2)
    return b.build("p", ["sat_to_ranked_pairs", _formula_comment(f), "fixed order = canonical index order"])
