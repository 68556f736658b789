from __future__ import annotations

from collections import Counter

from ..election import Election, PartyInstance


class ProfileBuilder:
    """Collects labelled candidates, parties and named voters, then freezes them.

    ``fill`` completes a partial order with the remaining candidates in
    canonical (creation) order, which pins the "[...]" placeholders of the
    constructions.
    """

    def __init__(self):
        self.labels: list[str] = []
        self.index: dict[str, int] = {}
        self.parties: list[list[int]] = []
        self.voters: list[tuple[str, tuple[int, ...]]] = []

    def add(self, label: str) -> int:
        if label in self.index:
            raise ValueError(f"duplicate candidate {label!r}")
        self.index[label] = len(self.labels)
        self.labels.append(label)
        return self.index[label]

    def party(self, *members: str) -> None:
        self.parties.append([self.index[x] for x in members])

    def fill(self, head=(), tail=()) -> list[str]:
        used = set(head) | set(tail)
        if len(used) != len(head) + len(tail):
            raise ValueError("candidate listed twice in a partial order")
        middle = [c for c in self.labels if c not in used]
        return list(head) + middle + list(tail)

    def vote(self, name: str, order, copies: int = 1) -> None:
        order = tuple(self.index[x] for x in order)
        if sorted(order) != list(range(len(self.labels))):
            raise AssertionError(f"voter {name} does not rank every candidate exactly once")
        names = [name] if copies == 1 else [f"{name}.{h}" for h in range(1, copies + 1)]
        for nm in names:
            self.voters.append((nm, order))

    def build(self, distinguished: str, comments) -> PartyInstance:
        counts = Counter(o for _, o in self.voters)
        types, names = [], []
        for o in dict.fromkeys(o for _, o in self.voters):
            types.append((o, counts[o]))
            names.append(" ".join(n for n, oo in self.voters if oo == o))
        meta = {
            "comments": list(comments),
            "voter_names": {k: nm for k, nm in enumerate(names)},
        }
        return PartyInstance(
            Election(tuple(self.labels), tuple(types)),
            tuple(tuple(b) for b in self.parties),
            self.index[distinguished],
            meta,
        )
