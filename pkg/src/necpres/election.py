"""Election and party data model.

Candidates are dense indices ``0..m-1``; labels live only at the I/O
boundary.  Voter types are strict orders (tuples of candidate indices,
most preferred first) with positive multiplicities.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence

import numpy as np


class InvalidInstanceError(ValueError):
    """Raised when an election or party instance violates an invariant."""

    def __init__(self, path: str, message: str):
        self.path = path
        super().__init__(f"{path}: {message}" if path else message)


def _check_permutation(order: Sequence[int], m: int, path: str) -> None:
    if len(order) != m:
        seen = Counter(order)
        dup = [c for c, k in seen.items() if k > 1]
        if dup:
            raise InvalidInstanceError(path, f"not a permutation (candidate {dup[0]} repeated)")
        raise InvalidInstanceError(path, f"not a permutation ({len(order)} entries, expected {m})")
    seen = set()
    for c in order:
        if not isinstance(c, (int, np.integer)) or not 0 <= c < m:
            raise InvalidInstanceError(path, f"not a permutation (unknown candidate {c!r})")
        if c in seen:
            raise InvalidInstanceError(path, f"not a permutation (candidate {c} repeated)")
        seen.add(c)


def compress_voter_types(raw_orders: Iterable[Sequence[int]], m: int | None = None):
    """Merge identical orders into ``(order, count)`` pairs.

    Types keep the order of first appearance.  ``m`` defaults to the length
    of the first order.
    """
    counts: dict[tuple[int, ...], int] = {}
    for k, order in enumerate(raw_orders):
        order = tuple(int(c) for c in order)
        if m is None:
            m = len(order)
        _check_permutation(order, m, f"orders[{k}]")
        counts[order] = counts.get(order, 0) + 1
    return tuple(counts.items())


@dataclass(frozen=True)
class Election:
    labels: tuple[str, ...]
    voter_types: tuple[tuple[tuple[int, ...], int], ...]

    def __post_init__(self):
        object.__setattr__(self, "labels", tuple(str(x) for x in self.labels))
        object.__setattr__(
            self,
            "voter_types",
            tuple((tuple(int(c) for c in o), int(n)) for o, n in self.voter_types),
        )
        _validate_election(self)

    @classmethod
    def from_orders(cls, labels: Sequence[str], orders: Iterable[Sequence[int]]) -> "Election":
        return cls(tuple(labels), compress_voter_types(orders, len(labels)))

    @property
    def m(self) -> int:
        return len(self.labels)

    @property
    def tau(self) -> int:
        return len(self.voter_types)

    @property
    def n_voters(self) -> int:
        return sum(n for _, n in self.voter_types)

    @cached_property
    def counts(self) -> np.ndarray:
        return np.array([n for _, n in self.voter_types], dtype=np.int64)

    @cached_property
    def ranks(self) -> np.ndarray:
        """``ranks[i, c]`` is the position (0 = top) of ``c`` in type ``i``."""
        r = np.empty((self.tau, self.m), dtype=np.int64)
        for i, (order, _) in enumerate(self.voter_types):
            r[i, list(order)] = np.arange(self.m)
        return r

    @cached_property
    def majority(self) -> np.ndarray:
        """Full pairwise count matrix ``N[c, c']`` with a zero diagonal."""
        m = self.m
        out = np.zeros((m, m), dtype=np.int64)
        ranks = self.ranks
        counts = self.counts
        # chunked to bound memory at |C| = 200, tau = 1000
        step = max(1, 4_000_000 // max(1, m * m))
        for lo in range(0, self.tau, step):
            r = ranks[lo:lo + step]
            beats = r[:, :, None] < r[:, None, :]
            out += np.einsum("t,tab->ab", counts[lo:lo + step], beats.astype(np.int64))
        return out

    def index(self, label: str) -> int:
        try:
            return self.labels.index(label)
        except ValueError:
            raise KeyError(f"unknown candidate label {label!r}") from None

    def prefers(self, i: int, a: int, b: int) -> bool:
        return bool(self.ranks[i, a] < self.ranks[i, b])


def _validate_election(e: Election) -> None:
    m = len(e.labels)
    if m == 0:
        raise InvalidInstanceError("candidates", "no candidates")
    if len(set(e.labels)) != m:
        dup = [x for x, k in Counter(e.labels).items() if k > 1][0]
        raise InvalidInstanceError("candidates", f"duplicate label {dup!r}")
    if not e.voter_types:
        raise InvalidInstanceError("voter_types", "no voters")
    seen = set()
    for k, (order, n) in enumerate(e.voter_types):
        _check_permutation(order, m, f"voter_types[{k}].order")
        if n < 1:
            raise InvalidInstanceError(f"voter_types[{k}].count", f"count must be >= 1, got {n}")
        if order in seen:
            raise InvalidInstanceError(f"voter_types[{k}]", "duplicate voter type (compress first)")
        seen.add(order)


@dataclass(frozen=True)
class PartyInstance:
    """One Necessary President instance: election, party partition, distinguished ``p``."""

    election: Election
    parties: tuple[tuple[int, ...], ...]
    distinguished: int
    metadata: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(
            self, "parties", tuple(tuple(int(c) for c in blk) for blk in self.parties)
        )
        object.__setattr__(self, "distinguished", int(self.distinguished))
        validate(self)

    @property
    def p(self) -> int:
        return self.distinguished

    @property
    def t(self) -> int:
        return len(self.parties)

    @property
    def s(self) -> int:
        return max(len(b) for b in self.parties)

    @property
    def tau(self) -> int:
        return self.election.tau

    @cached_property
    def party_of(self) -> tuple[int, ...]:
        """Party index of every candidate."""
        out = [0] * self.election.m
        for j, blk in enumerate(self.parties):
            for c in blk:
                out[c] = j
        return tuple(out)

    @property
    def p_party(self) -> int:
        return int(self.party_of[self.p])

    def other_parties(self) -> list[int]:
        """Indices of every party except the one containing ``p``."""
        pp = self.p_party
        return [j for j in range(self.t) if j != pp]

    def label(self, c: int) -> str:
        return self.election.labels[c]

    def stats(self) -> dict:
        e = self.election
        return {"t": self.t, "s": self.s, "tau": e.tau, "voters": e.n_voters, "candidates": e.m}


def validate(instance: PartyInstance) -> None:
    """Raise :class:`InvalidInstanceError` on the first violated invariant."""
    e = instance.election
    _validate_election(e)
    m = e.m
    owner: dict[int, int] = {}
    for j, blk in enumerate(instance.parties):
        if not blk:
            raise InvalidInstanceError(f"parties[{j}]", "empty party")
        for c in blk:
            if not 0 <= c < m:
                raise InvalidInstanceError(f"parties[{j}]", f"unknown candidate {c}")
            if c in owner:
                raise InvalidInstanceError(
                    f"parties[{j}]",
                    f"partition overlap: {e.labels[c]!r} already in parties[{owner[c]}]",
                )
            owner[c] = j
    if len(owner) != m:
        missing = next(c for c in range(m) if c not in owner)
        raise InvalidInstanceError(
            "parties", f"partition does not cover C (missing {e.labels[missing]!r})"
        )
    if not 0 <= instance.distinguished < m:
        raise InvalidInstanceError("distinguished", f"p={instance.distinguished} outside C")


@dataclass(frozen=True)
class ReducedElection:
    """The election restricted to one nominee per party."""

    parent: PartyInstance
    nominees: tuple[int, ...]

    @property
    def election(self) -> Election:
        return self.parent.election

    @property
    def m(self) -> int:
        return len(self.nominees)

    @cached_property
    def ranks(self) -> np.ndarray:
        """``ranks[i, k]``: position of ``nominees[k]`` among nominees in type ``i``."""
        sub = self.election.ranks[:, list(self.nominees)]
        return np.argsort(np.argsort(sub, axis=1, kind="stable"), axis=1)

    @cached_property
    def orders(self) -> tuple[tuple[int, ...], ...]:
        nom = set(self.nominees)
        return tuple(
            tuple(c for c in order if c in nom) for order, _ in self.election.voter_types
        )

    @property
    def counts(self) -> np.ndarray:
        return self.election.counts

    def position(self, i: int, c: int) -> int:
        return int(self.ranks[i, self.nominees.index(c)])


def reduce(instance: PartyInstance, nominees: Iterable[int]) -> ReducedElection:
    """Build the reduced election over ``nominees`` (one candidate per party)."""
    nom = sorted({int(c) for c in nominees})
    picks = [0] * instance.t
    for c in nom:
        if not 0 <= c < instance.election.m:
            raise InvalidInstanceError("nominees", f"unknown candidate {c}")
        picks[int(instance.party_of[c])] += 1
    for j, k in enumerate(picks):
        if k != 1:
            names = ", ".join(instance.label(c) for c in instance.parties[j])
            raise InvalidInstanceError(
                "nominees", f"party {{{names}}} has {k} nominees, expected exactly 1"
            )
    return ReducedElection(instance, tuple(nom))


@dataclass(frozen=True, eq=False)
class MajorityMatrix:
    """Pairwise counts over ``candidates`` (global indices)."""

    counts: np.ndarray
    candidates: tuple[int, ...]
    n_voters: int

    def __getitem__(self, key) -> int:
        a, b = key
        pos = self._pos
        return int(self.counts[pos[a], pos[b]])

    @cached_property
    def _pos(self) -> dict[int, int]:
        return {c: k for k, c in enumerate(self.candidates)}

    def defeats(self, a: int, b: int) -> bool:
        return self[a, b] > self[b, a]

    def tied(self, a: int, b: int) -> bool:
        return a != b and self[a, b] == self[b, a]


def pairwise_matrix(obj: Election | ReducedElection | PartyInstance) -> MajorityMatrix:
    if isinstance(obj, PartyInstance):
        obj = obj.election
    if isinstance(obj, ReducedElection):
        idx = list(obj.nominees)
        full = obj.election.majority
        return MajorityMatrix(full[np.ix_(idx, idx)], obj.nominees, obj.election.n_voters)
    return MajorityMatrix(obj.majority, tuple(range(obj.m)), obj.n_voters)
