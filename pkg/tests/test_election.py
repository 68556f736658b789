import itertools
import random

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from necpres.election import (
    Election,
    InvalidInstanceError,
    PartyInstance,
    compress_voter_types,
    pairwise_matrix,
    reduce,
    validate,
)
from necpres.reductions import random_formula, sat_to_ranked_pairs

from .conftest import lab


def test_three_voters_is_valid(three_voters):
    validate(three_voters)
    assert three_voters.t == 3 and three_voters.s == 2 and three_voters.tau == 3
    assert three_voters.election.n_voters == 3
    assert three_voters.label(three_voters.p) == "p"


def test_partition_gap_rejected():
    e = Election.from_orders(("a", "b", "c"), [(0, 1, 2)])
    with pytest.raises(InvalidInstanceError, match="partition does not cover C"):
        PartyInstance(e, ((0,), (1,)), 0)


def test_partition_overlap_rejected():
    e = Election.from_orders(("a", "b", "c"), [(0, 1, 2)])
    with pytest.raises(InvalidInstanceError, match="overlap"):
        PartyInstance(e, ((0, 1), (1, 2)), 0)


def test_repeated_candidate_in_vote_rejected():
    with pytest.raises(InvalidInstanceError, match="not a permutation"):
        Election.from_orders(("a", "b", "c"), [(0, 1, 1)])


def test_zero_count_type_rejected():
    with pytest.raises(InvalidInstanceError):
        Election(("a", "b"), (((0, 1), 0),))


def test_p_outside_c_rejected():
    e = Election.from_orders(("a", "b"), [(0, 1)])
    with pytest.raises(InvalidInstanceError, match="outside C"):
        PartyInstance(e, ((0,), (1,)), 5)


def test_compress_three_voters_keeps_three_types(three_voters):
    raw = [o for o, k in three_voters.election.voter_types for _ in range(k)]
    types = compress_voter_types(raw)
    assert len(types) == 3 and all(k == 1 for _, k in types)


def test_compress_collapses_copies():
    types = compress_voter_types([(2, 0, 1)] * 5)
    assert types == (((2, 0, 1), 5),)


def test_sat_to_ranked_pairs_has_seven_types():
    for seed in range(5):
        inst = sat_to_ranked_pairs(random_formula(3 + 3 * (seed % 2), seed))
        assert inst.election.tau == 7
        assert sorted(k for _, k in inst.election.voter_types) == [1, 1, 2, 2, 2, 2, 2]


def test_reduce_three_voters(three_voters):
    red = reduce(three_voters, lab(three_voters, "p", "a1", "b1"))
    names = [[three_voters.label(c) for c in o] for o in red.orders]
    assert names == [["p", "a1", "b1"], ["a1", "p", "b1"], ["b1", "p", "a1"]]
    assert red.m == 3
    assert list(red.counts) == [1, 1, 1]


def test_reduce_identity_for_singletons():
    e = Election.from_orders(("a", "b", "c"), [(0, 1, 2), (2, 1, 0)])
    inst = PartyInstance(e, ((0,), (1,), (2,)), 0)
    red = reduce(inst, (0, 1, 2))
    assert red.orders == tuple(o for o, _ in e.voter_types)


def test_reduce_rejects_two_picks(three_voters):
    with pytest.raises(InvalidInstanceError, match="2 nominees"):
        reduce(three_voters, lab(three_voters, "p", "a1", "a2"))


def test_reduce_rejects_missing_party(three_voters):
    with pytest.raises(InvalidInstanceError, match="0 nominees"):
        reduce(three_voters, lab(three_voters, "p", "a1"))


def test_pairwise_three_voters(three_voters):
    n = pairwise_matrix(three_voters)
    p, a1 = lab(three_voters, "p", "a1")
    assert n[p, a1] == 2 and n[a1, p] == 1
    assert all(n.counts[c, c] == 0 for c in range(three_voters.election.m))


def test_pairwise_ranked_pairs_instance_w_over_p():
    inst = sat_to_ranked_pairs(random_formula(3, 0))
    p, w = lab(inst, "p", "w")
    assert pairwise_matrix(inst)[w, p] == 7


orders_st = st.integers(2, 5).flatmap(
    lambda m: st.lists(st.permutations(list(range(m))), min_size=1, max_size=8)
)


@settings(max_examples=60, deadline=None)
@given(orders_st)
def test_matrix_complement_and_compression_neutral(raw):
    m = len(raw[0])
    e = Election.from_orders(tuple(map(str, range(m))), raw)
    n = e.majority
    for a, b in itertools.permutations(range(m), 2):
        assert n[a, b] + n[b, a] == len(raw)
        assert 0 <= n[a, b] <= len(raw)
        direct = sum(1 for o in raw if o.index(a) < o.index(b))
        assert n[a, b] == direct
    assert e.tau <= len(raw)
    if m <= 5:
        assert e.tau <= len(list(itertools.permutations(range(m))))


@settings(max_examples=40, deadline=None)
@given(orders_st, st.randoms(use_true_random=False))
def test_reduce_preserves_relative_order(raw, rnd):
    m = len(raw[0])
    e = Election.from_orders(tuple(map(str, range(m))), raw)
    perm = list(range(m))
    rnd.shuffle(perm)
    cut = sorted(rnd.sample(range(1, m), rnd.randint(0, m - 1))) if m > 1 else []
    parties = [tuple(perm[a:b]) for a, b in zip([0] + cut, cut + [m])]
    inst = PartyInstance(e, tuple(parties), perm[0])
    nominees = [rnd.choice(blk) for blk in parties]
    red = reduce(inst, nominees)
    for (order, _), sub in zip(e.voter_types, red.orders):
        assert list(sub) == [c for c in order if c in set(nominees)]
    for i in range(e.tau):
        for a, b in itertools.combinations(red.nominees, 2):
            assert (red.position(i, a) < red.position(i, b)) == (e.ranks[i, a] < e.ranks[i, b])


def test_instances_are_immutable(three_voters):
    with pytest.raises(Exception):
        three_voters.distinguished = 0
    assert isinstance(three_voters.election.majority, np.ndarray)


def test_random_instances_validate():
    from .conftest import random_instance

    rng = random.Random(0)
    for _ in range(50):
        validate(random_instance(rng))
