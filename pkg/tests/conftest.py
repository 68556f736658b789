import itertools
import random
from pathlib import Path

import pytest

from necpres.election import Election, PartyInstance
from necpres.io import read_instance

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture
def three_voters():
    return read_instance(FIXTURES / "three_voters.np")


def lab(instance, *names):
    idx = instance.election.index
    return [idx(x) for x in names]


def random_instance(rng: random.Random, max_c=8, max_t=4, max_s=3, max_v=7) -> PartyInstance:
    """Small instance within the oracle-equivalence envelope (|C|, t, s, |V| bounds)."""
    while True:
        t = rng.randint(1, max_t)
        sizes = [rng.randint(1, max_s) for _ in range(t)]
        if sum(sizes) <= max_c and sum(sizes) >= 2:
            break
    m = sum(sizes)
    perm = list(range(m))
    rng.shuffle(perm)
    parties, k = [], 0
    for s in sizes:
        parties.append(tuple(sorted(perm[k:k + s])))
        k += s
    n_voters = rng.randint(1, max_v)
    pool = []
    for _ in range(rng.randint(1, n_voters)):
        o = list(range(m))
        rng.shuffle(o)
        pool.append(tuple(o))
    raw = [rng.choice(pool) for _ in range(n_voters)]
    e = Election.from_orders(tuple(f"c{i}" for i in range(m)), raw)
    return PartyInstance(e, tuple(parties), rng.randrange(m), {})


def exhaustive_matching_feasible(edges, req_l, req_r) -> bool:
    """Try every subset of edges; reference for saturating_matching."""
    edges = list(dict.fromkeys(edges))
    for r in range(len(edges) + 1):
        for sub in itertools.combinations(edges, r):
            ls = [u for u, _ in sub]
            rs = [v for _, v in sub]
            if len(set(ls)) == len(ls) and len(set(rs)) == len(rs):
                if set(req_l) <= set(ls) and set(req_r) <= set(rs):
                    return True
    return False


# one entry per acceptance criterion part: criterion -> [(ok, detail), ...]
ACCEPTANCE: dict[int, list[tuple[bool, str]]] = {}


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE):
        parts = ACCEPTANCE[k]
        status = "PASS" if all(ok for ok, _ in parts) else "FAIL"
        terminalreporter.write_line(f"criterion {k:2d}: {status}  " + "; ".join(d for _, d in parts))
