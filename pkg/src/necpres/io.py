"""Instance files, random instances, PrefLib import and verdict reports.

Instance file (``necpres/1``)::

    # free comments
    format necpres/1
    candidates: p a1 a2 b1 b2
    parties:
      *p
      a1 a2
      b1 b2
    votes:
      1: p > a1 > b1 > a2 > b2   # v1
      2: b1 > p > a1 > b2 > a2

``*`` marks the distinguished candidate.  Text after ``#`` on a vote line
names the voters of that line.
"""

from __future__ import annotations

import json
import random
import re
from dataclasses import dataclass

from .election import Election, InvalidInstanceError, PartyInstance
from .solvers.verdict import Verdict

FORMAT = "necpres/1"
REPORT_FORMAT = "necpres-report/1"
_LABEL = re.compile(r"[^\s>:#*,]+")


class ParseError(ValueError):
    def __init__(self, line: int, col: int, message: str):
        self.line, self.col = line, col
        super().__init__(f"line {line}, col {col}: {message}")


@dataclass
class _Line:
    no: int
    text: str  # content without trailing comment
    comment: str | None
    indent: int


def _lines(text: str):
    for no, raw in enumerate(text.splitlines(), 1):
        body, hash_, comment = raw.partition("#")
        stripped = body.strip()
        yield _Line(no, stripped, comment.strip() if hash_ else None, len(body) - len(body.lstrip()))


def parse_instance(text: str) -> PartyInstance:
    labels: list[str] | None = None
    index: dict[str, int] = {}
    parties: list[tuple[int, ...]] = []
    star: tuple[int, int, int] | None = None  # (candidate, line, col)
    votes: list[tuple[tuple[int, ...], int, str | None]] = []
    header: list[str] = []
    section = None
    seen_format = False

    def label_at(tok_match, ln):
        lab = tok_match.group(0)
        if lab not in index:
            raise ParseError(ln.no, ln.indent + tok_match.start() + 1, f"unknown label {lab!r}")
        return index[lab]

    for ln in _lines(text):
        if not ln.text:
            if ln.comment is not None and section is None:
                header.append(ln.comment)
            continue
        col0 = ln.indent + 1
        if ln.text.startswith("format"):
            version = ln.text[len("format"):].strip()
            if version != FORMAT:
                raise ParseError(ln.no, col0, f"unsupported format {version!r} (expected {FORMAT})")
            seen_format = True
            continue
        if ln.text.startswith("candidates:"):
            if labels is not None:
                raise ParseError(ln.no, col0, "duplicate candidates line")
            rest = ln.text[len("candidates:"):]
            labels = []
            for tok in rest.split():
                if not _LABEL.fullmatch(tok):
                    raise ParseError(ln.no, col0 + ln.text.index(tok, len("candidates:")), f"bad label {tok!r}")
                if tok in index:
                    raise ParseError(ln.no, col0 + ln.text.index(tok, len("candidates:")), f"duplicate label {tok!r}")
                index[tok] = len(labels)
                labels.append(tok)
            if not labels:
                raise ParseError(ln.no, col0, "no candidates")
            section = None
            continue
        if ln.text in ("parties:", "votes:"):
            if labels is None:
                raise ParseError(ln.no, col0, "candidates line must come first")
            section = ln.text[:-1]
            continue
        if section == "parties":
            block = []
            for m in re.finditer(r"\*?[^\s]+", ln.text):
                tok = m.group(0)
                starred = tok.startswith("*")
                lm = _LABEL.fullmatch(tok[1:] if starred else tok)
                if lm is None:
                    raise ParseError(ln.no, ln.indent + m.start() + 1, f"bad label {tok!r}")
                lab = lm.group(0)
                if lab not in index:
                    raise ParseError(ln.no, ln.indent + m.start() + 1, f"unknown label {lab!r}")
                c = index[lab]
                if starred:
                    if star is not None:
                        raise ParseError(ln.no, ln.indent + m.start() + 1, "duplicate '*' (distinguished candidate)")
                    star = (c, ln.no, ln.indent + m.start() + 1)
                block.append(c)
            parties.append(tuple(block))
            continue
        if section == "votes":
            head, colon, body = ln.text.partition(":")
            if not colon:
                raise ParseError(ln.no, col0, "vote line must look like 'count: a > b > ...'")
            try:
                count = int(head.strip())
            except ValueError:
                raise ParseError(ln.no, col0, f"malformed count {head.strip()!r}") from None
            if count < 1:
                raise ParseError(ln.no, col0, f"count must be >= 1, got {count}")
            order = []
            offset = ln.indent + len(head) + 1
            for k, part in enumerate(body.split(">")):
                tok = part.strip()
                col = offset + 1 + (len(part) - len(part.lstrip()))
                if not tok:
                    raise ParseError(ln.no, col, "empty position in vote")
                if tok not in index:
                    raise ParseError(ln.no, col, f"unknown label {tok!r}")
                order.append(index[tok])
                offset += len(part) + 1
            if len(set(order)) != len(order) or len(order) != len(labels):
                raise ParseError(ln.no, col0, "vote is not a permutation of the candidates")
            votes.append((tuple(order), count, ln.comment))
            continue
        raise ParseError(ln.no, col0, f"unexpected line {ln.text!r}")

    if not seen_format:
        raise ParseError(1, 1, f"missing 'format {FORMAT}' line")
    if labels is None:
        raise ParseError(1, 1, "missing candidates line")
    if not votes:
        raise ParseError(1, 1, "no voters")
    if star is None:
        raise ParseError(1, 1, "no distinguished candidate (mark one with '*')")

    merged: dict[tuple[int, ...], int] = {}
    names: dict[tuple[int, ...], list[str]] = {}
    for order, count, name in votes:
        merged[order] = merged.get(order, 0) + count
        if name:
            names.setdefault(order, []).append(name)
    types = tuple(merged.items())
    voter_names = {k: ", ".join(names[o]) for k, (o, _) in enumerate(types) if o in names}
    meta = {"comments": header}
    if voter_names:
        meta["voter_names"] = voter_names
    try:
        return PartyInstance(Election(tuple(labels), types), tuple(parties), star[0], meta)
    except InvalidInstanceError as exc:
        raise ParseError(star[1], 1, str(exc)) from None


def serialize_instance(instance: PartyInstance) -> str:
    e = instance.election
    lab = e.labels
    out = [f"# {c}" if c else "#" for c in instance.metadata.get("comments", [])]
    out.append(f"format {FORMAT}")
    out.append("candidates: " + " ".join(lab))
    out.append("parties:")
    for blk in instance.parties:
        out.append("  " + " ".join(("*" if c == instance.p else "") + lab[c] for c in blk))
    out.append("votes:")
    names = instance.metadata.get("voter_names", {})
    for k, (order, count) in enumerate(e.voter_types):
        line = f"  {count}: " + " > ".join(lab[c] for c in order)
        if k in names:
            line += f"   # {names[k]}"
        out.append(line)
    return "\n".join(out) + "\n"


def read_instance(path) -> PartyInstance:
    with open(path, encoding="utf-8") as fh:
        return parse_instance(fh.read())


def write_instance(instance: PartyInstance, path) -> None:
    with open(path, "w", encoding="utf-8") as fh:
        fh.write(serialize_instance(instance))


def generate_random(
    n_candidates: int, n_parties: int, n_voters: int, n_types: int, seed: int
) -> PartyInstance:
    """Impartial-culture instance: ``n_types`` random orders, balanced random partition.

    Orders are drawn independently, so the realised number of types can be
    smaller than requested when two draws coincide.
    """
    if not 1 <= n_parties <= n_candidates:
        raise ValueError(f"need 1 <= t <= |C|, got t={n_parties}, |C|={n_candidates}")
    if not 1 <= n_types <= n_voters:
        raise ValueError(f"need 1 <= tau <= |V|, got tau={n_types}, |V|={n_voters}")
    rng = random.Random(seed)
    m = n_candidates
    orders = []
    for _ in range(n_types):
        o = list(range(m))
        rng.shuffle(o)
        orders.append(tuple(o))
    # split n_voters into n_types positive parts
    cuts = sorted(rng.sample(range(1, n_voters), n_types - 1))
    sizes = [b - a for a, b in zip([0] + cuts, cuts + [n_voters])]
    raw = [o for o, k in zip(orders, sizes) for _ in range(k)]
    perm = list(range(m))
    rng.shuffle(perm)
    parties = [tuple(sorted(perm[j::n_parties])) for j in range(n_parties)]
    p = rng.randrange(m)
    labels = tuple(f"c{i}" for i in range(m))
    meta = {"comments": [f"random: |C|={m} t={n_parties} |V|={n_voters} tau<={n_types} seed={seed}"]}
    return PartyInstance(Election.from_orders(labels, raw), tuple(parties), p, meta)


def import_preflib(soc_text: str, party_text: str) -> PartyInstance:
    """PrefLib strict complete orders (SOC) plus a party sidecar.

    Sidecar: one party per line, members given by alternative name or
    1-based PrefLib number, ``*`` marking the distinguished candidate.
    """
    names: dict[int, str] = {}
    votes: list[tuple[int, tuple[int, ...]]] = []
    n_alt = None
    for no, raw in enumerate(soc_text.splitlines(), 1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            m = re.match(r"#\s*ALTERNATIVE NAME (\d+):\s*(.*)", line)
            if m:
                names[int(m.group(1))] = re.sub(r"[\s>:#*,]+", "_", m.group(2).strip())
            m = re.match(r"#\s*NUMBER ALTERNATIVES:\s*(\d+)", line)
            if m:
                n_alt = int(m.group(1))
            continue
        head, colon, body = line.partition(":")
        if not colon:
            raise ParseError(no, 1, "expected 'count: a,b,c'")
        try:
            count = int(head)
            order = tuple(int(x) for x in body.split(","))
        except ValueError:
            raise ParseError(no, 1, "malformed PrefLib order line") from None
        if any(x.strip().startswith("{") for x in body.split(",")):
            raise ParseError(no, 1, "ties are not supported (SOC only)")
        votes.append((count, order))
    if not votes:
        raise ParseError(1, 1, "no voters")
    m = n_alt or max(max(o) for _, o in votes)
    labels = tuple(names.get(i, f"a{i}") for i in range(1, m + 1))
    index = {lab: k for k, lab in enumerate(labels)}
    index.update({str(k + 1): k for k in range(m)})
    parties, star = [], None
    for no, raw in enumerate(party_text.splitlines(), 1):
        line = raw.split("#")[0].strip()
        if not line:
            continue
        block = []
        for tok in line.replace(",", " ").split():
            starred = tok.startswith("*")
            key = tok.lstrip("*")
            if key not in index:
                raise ParseError(no, 1, f"unknown candidate {key!r} in party file")
            if starred:
                if star is not None:
                    raise ParseError(no, 1, "duplicate '*' (distinguished candidate)")
                star = index[key]
            block.append(index[key])
        parties.append(tuple(block))
    if star is None:
        raise ParseError(1, 1, "party file marks no distinguished candidate")
    raw_orders = []
    for count, order in votes:
        raw_orders.extend([tuple(x - 1 for x in order)] * count)
    return PartyInstance(Election.from_orders(labels, raw_orders), tuple(parties), star, {"comments": ["imported from PrefLib"]})


def verdict_report(instance: PartyInstance, verdict: Verdict, route: str, wall_time: float) -> dict:
    lab = instance.label
    cert = None
    if not verdict.yes:
        cert = {"nominees": [lab(c) for c in verdict.nominees], "witness": lab(verdict.witness)}
    return {
        "format": REPORT_FORMAT,
        "rule": verdict.rule,
        "answer": verdict.answer,
        "certificate": cert,
        "statistics": dict(instance.stats(), guesses=verdict.guesses, wall_time_s=round(wall_time, 6)),
        "solver": verdict.solver,
        "route": route,
        "tiebreak": verdict.tiebreak,
        "notes": list(verdict.notes),
    }


def dump_report(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True)


def verdict_from_report(instance: PartyInstance, report: dict) -> Verdict:
    """Rebuild a Verdict (label -> index) from a report; unknown labels raise KeyError."""
    cert = report.get("certificate")
    if report.get("answer") == "YES" or cert is None:
        return Verdict(True, report["rule"], report.get("solver", "?"))
    idx = instance.election.index
    return Verdict(
        False,
        report["rule"],
        report.get("solver", "?"),
        tuple(idx(x) for x in cert["nominees"]),
        idx(cert["witness"]),
        tiebreak=report.get("tiebreak"),
    )
