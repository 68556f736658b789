"""FPT(tau) Necessary President for short scoring rules.

A counterexample election E_C' is summarised by its *structure*: for every
voter type i and scored position j, which party sits there.  Parties
other than P and P_w only matter through the equivalence classes of
positions they occupy.  We enumerate structures type by type, labelling
each scored cell with W (w's party), P (p's party) or a class id in
restricted-growth order, and keep for every class the bitmask of
candidates still well placed for it.  A leaf is then completed by a
matching between the remaining parties and the classes.

Two facts about the true structure of any counterexample let us prune
without losing completeness: cells in one row hold distinct labels, and
w's structural score exceeds p's.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from ..election import Election, PartyInstance
from ..scoring import ScoringRule, effective_vector
from .matching import saturating_matching
from .verdict import BudgetExceeded, Verdict, no_verdict, yes_verdict

DEFAULT_GUESS_BUDGET = 10**9

W, P = "W", "P"


@dataclass(frozen=True)
class StructureGuess:
    """One guess of (w, Q, Q_w, Q_p).  Cells are (type, position), 0-based."""

    p: int
    w: int
    ell: int
    classes: tuple[frozenset, ...]  # the classes other than Q_w and Q_p
    q_w: frozenset
    q_p: frozenset

    def partition(self) -> frozenset:
        return frozenset(q for q in self.classes + (self.q_w, self.q_p) if q)

    def key(self):
        return (self.w, self.partition(), self.q_w, self.q_p)


def scored_length(vector) -> int:
    """Number of leading positions that carry points."""
    k = len(vector)
    while k and vector[k - 1] == 0:
        k -= 1
    return k


def guess_bound(tau: int, ell: int, m: int) -> int:
    x = tau * ell
    return x ** (x + 2) * m


def _rows_of(q, tau: int, ell: int):
    rows = [[] for _ in range(tau)]
    for i, j in q:
        rows[i].append(j)
    return [r or [ell] for r in rows]  # position ell = beyond the scored prefix


def well_placed(c: int, q, guess: StructureGuess, election: Election, ell: int | None = None) -> bool:
    """Direct check of the well-placed conditions for candidate c and class q."""
    ell = guess.ell if ell is None else ell
    tau = election.tau
    r = election.ranks
    mine = _rows_of(q, tau, ell)
    for anchor, target in ((guess.q_p, guess.p), (guess.q_w, guess.w)):
        other = _rows_of(anchor, tau, ell)
        for i in range(tau):
            for j in mine[i]:
                for j2 in other[i]:
                    if j == j2 == ell:
                        continue
                    if bool(r[i, c] < r[i, target]) != (j < j2):
                        return False
    return True


def extract_structure(instance: PartyInstance, nominees, w: int, ell: int) -> StructureGuess:
    """The structure of the reduced election over ``nominees``, seen from rival w."""
    from ..election import reduce

    red = reduce(instance, nominees)
    party_of = instance.party_of
    cells: dict[int, set] = {}
    for i, order in enumerate(red.orders):
        for j, c in enumerate(order[:ell]):
            cells.setdefault(party_of[c], set()).add((i, j))
    pw, pp = party_of[w], instance.p_party
    classes = tuple(frozenset(v) for k, v in sorted(cells.items()) if k not in (pw, pp))
    return StructureGuess(
        instance.p, w, ell, classes, frozenset(cells.get(pw, ())), frozenset(cells.get(pp, ()))
    )


class _Context:
    """Per-instance precomputation shared by all w guesses."""

    def __init__(self, instance: PartyInstance, vector):
        e = instance.election
        self.instance = instance
        self.tau = e.tau
        self.vec = vector
        self.ell = scored_length(vector)
        self.counts = [int(x) for x in e.counts]
        self.orders = [o for o, _ in e.voter_types]
        self.ranks = e.ranks.tolist()
        p = instance.p
        self.p = p
        self.bp = self.before_mask(p)
        self.p_party = instance.p_party
        self.party_masks = [sum(1 << c for c in block) for block in instance.parties]

    def before_mask(self, x):
        """Per type, the bitmask of candidates ranked above x."""
        out = []
        for order in self.orders:
            m = 0
            for c in order:
                if c == x:
                    break
                m |= 1 << c
            out.append(m)
        return out


def _row_assignments(ncls: int, ell: int, limit: int):
    """Label sequences for one row: distinct labels, new classes in canonical order."""
    pool = [W, P] + list(range(ncls + ell))
    for seq in itertools.permutations(pool, ell):
        nxt = ncls
        ok = True
        for x in seq:
            if isinstance(x, int) and x >= ncls:
                if x != nxt:
                    ok = False
                    break
                nxt += 1
        if ok and nxt <= limit:
            yield seq, nxt


class _Search:
    def __init__(self, ctx: _Context, w: int):
        self.ctx = ctx
        self.w = w
        inst = ctx.instance
        self.w_party = inst.party_of[w]
        self.bw = ctx.before_mask(w)
        self.base = ((1 << inst.election.m) - 1) & ~ctx.party_masks[ctx.p_party] & ~ctx.party_masks[self.w_party]
        self.hat = [j for j in range(inst.t) if j not in (ctx.p_party, self.w_party)]
        self.limit = len(self.hat)
        self.rows_cache = {}
        ranks = ctx.ranks
        p = ctx.p
        self.w_before_p = [rk[w] < rk[p] for rk in ranks]
        rest = [0] * (ctx.tau + 1)
        for i in range(ctx.tau - 1, -1, -1):
            rest[i] = rest[i + 1] + ctx.counts[i] * ctx.vec[0]
        self.rest = rest

    def rows(self, ncls):
        if ncls not in self.rows_cache:
            self.rows_cache[ncls] = list(_row_assignments(ncls, self.ctx.ell, self.limit))
        return self.rows_cache[ncls]

    def leaves(self):
        """Yield (class masks, class cells, W cells, P cells, rows where W is scored)."""
        yield from self._dfs(0, [], [], self.base, 0, 0, [], [], [])

    def _dfs(self, i, masks, cells, fresh, sw, sp, wcells, pcells, wrows):
        ctx = self.ctx
        if i == ctx.tau:
            if sw > sp:
                yield masks, cells, wcells, pcells, wrows
            return
        if sw + self.rest[i] <= sp:
            return
        bp, bw = ctx.bp[i], self.bw[i]
        full = (1 << ctx.instance.election.m) - 1
        n, vec = ctx.counts[i], ctx.vec
        for seq, nxt in self.rows(len(masks)):
            jw = seq.index(W) if W in seq else None
            jp = seq.index(P) if P in seq else None
            if jw is not None and jp is not None:
                if (jw < jp) != self.w_before_p[i]:
                    continue
            elif jw is not None:
                if not self.w_before_p[i]:
                    continue
            elif jp is not None and self.w_before_p[i]:
                continue
            # constraint for a class absent from this row
            absent = full
            if jp is not None:
                absent &= ~bp
            if jw is not None:
                absent &= ~bw
            new_masks = [m & absent for m in masks] + [fresh] * (nxt - len(masks))
            new_cells = [list(c) for c in cells] + [[] for _ in range(nxt - len(masks))]
            for j, x in enumerate(seq):
                if not isinstance(x, int):
                    continue
                m = masks[x] if x < len(masks) else fresh
                m &= bp if jp is None or j < jp else ~bp
                m &= bw if jw is None or j < jw else ~bw
                new_masks[x] = m
                new_cells[x].append((i, j))
            if not all(new_masks):
                continue
            yield from self._dfs(
                i + 1,
                new_masks,
                new_cells,
                fresh & absent,
                sw + (n * vec[jw] if jw is not None else 0),
                sp + (n * vec[jp] if jp is not None else 0),
                wcells + ([(i, jw)] if jw is not None else []),
                pcells + ([(i, jp)] if jp is not None else []),
                wrows + ([i] if jw is not None else []),
            )


def _low(mask: int) -> int:
    return (mask & -mask).bit_length() - 1


def enumerate_structures(instance: PartyInstance, family, w: int):
    """All structure guesses for rival w that survive pruning."""
    ctx = _Context(instance, effective_vector(family, instance.t))
    for masks, cells, wc, pc, _ in _Search(ctx, w).leaves():
        yield StructureGuess(
            instance.p, w, ctx.ell, tuple(frozenset(c) for c in cells), frozenset(wc), frozenset(pc)
        )


def solve_short_fpt(
    instance: PartyInstance,
    family,
    budget: int | None = None,
    rule=None,
    solver: str = "short_fpt",
) -> Verdict:
    """Decide Necessary President for ``family`` by structure enumeration.

    ``family`` only needs to yield a vector with a nonzero scored prefix
    for size t; ``rule`` (default: the family's scoring rule) checks the
    final nomination.
    """
    budget = DEFAULT_GUESS_BUDGET if budget is None else budget
    rule = rule or ScoringRule(family)
    vector = effective_vector(family, instance.t)
    ctx = _Context(instance, vector)
    needed = guess_bound(ctx.tau, ctx.ell, instance.election.m)
    if needed > budget:
        raise BudgetExceeded(f"structure guesses (tau={ctx.tau}, l={ctx.ell})", needed, budget)
    if not instance.other_parties():
        return yes_verdict(rule, solver, notes=("p's party is the only party",))
    if ctx.ell == 0:  # nobody ever scores
        return yes_verdict(rule, solver)

    check = rule.checker(instance)
    tried: set = set()
    leaves = 0
    for w in (c for j in instance.other_parties() for c in instance.parties[j]):
        search = _Search(ctx, w)
        # safe[i] = candidates ranked below w by type i
        below_w = [search.base & ~search.bw[i] & ~(1 << w) for i in range(ctx.tau)]
        seen: dict = {}
        for masks, _, _, _, wrows in search.leaves():
            leaves += 1
            safe = search.base
            for i in wrows:
                safe &= below_w[i]
            key = (tuple(masks), safe)
            if key in seen:
                continue
            nominees = _complete(ctx, search, masks, safe)
            seen[key] = nominees
            if nominees is None:
                continue
            fz = frozenset(nominees)
            if fz in tried:
                continue
            tried.add(fz)
            witness = check(nominees)
            if witness is not None:
                return no_verdict(rule, solver, nominees, witness, guesses=leaves)
    return yes_verdict(rule, solver, guesses=leaves)


def _complete(ctx: _Context, search: _Search, masks, safe):
    """Nominees C_M from a matching covering all classes and non-secure parties, or None."""
    pm = ctx.party_masks
    secure = {j: _low(pm[j] & safe) for j in search.hat if pm[j] & safe}
    nonsecure = [j for j in search.hat if j not in secure]
    if len(nonsecure) > len(masks):
        return None
    edges = [(j, q) for q, m in enumerate(masks) for j in search.hat if pm[j] & m]
    matching = saturating_matching(edges, nonsecure, range(len(masks)))
    if matching is None:
        return None
    nominees = [ctx.p, search.w]
    for j in search.hat:
        if j in matching:
            nominees.append(_low(pm[j] & masks[matching[j]]))
        else:
            nominees.append(secure[j])
    return nominees
