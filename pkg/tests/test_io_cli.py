import io
import json
from pathlib import Path

import pytest

from necpres import cli
from necpres.io import (
    ParseError,
    generate_random,
    import_preflib,
    parse_instance,
    serialize_instance,
)
from necpres.reductions import random_formula, to_dimacs

FIXTURE = Path(__file__).parent / "fixtures" / "three_voters.np"

HEAD = "format necpres/1\ncandidates: a b c\nparties:\n  *a\n  b c\n"


def test_three_voters_round_trip(three_voters):
    text = serialize_instance(three_voters)
    again = parse_instance(text)
    assert again.election == three_voters.election
    assert again.parties == three_voters.parties and again.p == three_voters.p
    assert serialize_instance(again) == text


def test_vote_lines_merge_into_types():
    inst = parse_instance(HEAD + "votes:\n  2: a > b > c\n  1: a > b > c  # late\n  1: c > b > a\n")
    assert inst.election.tau == 2
    assert inst.election.n_voters == 4


@pytest.mark.parametrize("text, line, msg", [
    (HEAD + "votes:\n", 1, "no voters"),
    ("format necpres/1\ncandidates: a b\nparties:\n  *a\n  *b\nvotes:\n  1: a > b\n", 5, "duplicate '\\*'"),
    (HEAD + "votes:\n  1: a > d > c\n", 7, "unknown label 'd'"),
    (HEAD + "votes:\n  x: a > b > c\n", 7, "malformed count"),
    (HEAD + "votes:\n  0: a > b > c\n", 7, "count must be"),
    (HEAD + "votes:\n  1: a > b\n", 7, "not a permutation"),
    (HEAD + "votes:\n  1: a > > c\n", 7, "empty position"),
    ("candidates: a\nparties:\n  *a\nvotes:\n  1: a\n", 1, "missing 'format"),
    ("format necpres/2\n", 1, "unsupported format"),
    ("format necpres/1\ncandidates: a a\n", 2, "duplicate label"),
    ("format necpres/1\ncandidates: a b\nparties:\n  a b\nvotes:\n  1: a > b\n", 1, "no distinguished"),
    ("format necpres/1\ncandidates: a b\nparties:\n  *a\nvotes:\n  1: a > b\n", 4, "does not cover"),
])
def test_parse_errors_report_position(text, line, msg):
    with pytest.raises(ParseError, match=msg) as info:
        parse_instance(text)
    assert info.value.line == line
    assert info.value.col >= 1


def test_unknown_label_column():
    with pytest.raises(ParseError) as info:
        parse_instance(HEAD + "votes:\n  1: a > d > c\n")
    assert info.value.col == 10


def test_generate_random_deterministic():
    a = generate_random(12, 4, 30, 5, seed=9)
    b = generate_random(12, 4, 30, 5, seed=9)
    assert serialize_instance(a) == serialize_instance(b)
    assert a.t == 4 and a.election.m == 12 and a.election.n_voters == 30
    assert a.election.tau <= 5
    assert serialize_instance(generate_random(12, 4, 30, 5, seed=10)) != serialize_instance(a)


@pytest.mark.parametrize("args", [(3, 4, 5, 1), (3, 0, 5, 1), (3, 2, 5, 6), (3, 2, 5, 0)])
def test_generate_random_rejects(args):
    with pytest.raises(ValueError):
        generate_random(*args, seed=0)


SOC = """# NUMBER ALTERNATIVES: 3
# ALTERNATIVE NAME 1: Ann
# ALTERNATIVE NAME 2: Bob Q
# ALTERNATIVE NAME 3: Cy
2: 1,2,3
1: 3,2,1
"""


def test_import_preflib():
    inst = import_preflib(SOC, "*Ann\nBob_Q 3\n")
    assert inst.election.labels == ("Ann", "Bob_Q", "Cy")
    assert inst.p == 0 and inst.parties == ((0,), (1, 2))
    assert inst.election.n_voters == 3 and inst.election.tau == 2


@pytest.mark.parametrize("soc, parties, msg", [
    (SOC, "Ann\nBob_Q Cy\n", "no distinguished"),
    (SOC, "*Ann\n*Cy Bob_Q\n", "duplicate"),
    (SOC, "*Ann\nZed\n", "unknown candidate"),
    ("# NUMBER ALTERNATIVES: 2\n", "*1\n2\n", "no voters"),
    ("1: {1,2}\n", "*1\n2\n", "malformed|ties"),
])
def test_import_preflib_errors(soc, parties, msg):
    with pytest.raises(ParseError, match=msg):
        import_preflib(soc, parties)


# -- command line ---------------------------------------------------------------


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_cli_solve_three_voters_yes(capsys):
    code, out, _ = run(capsys, "solve", "--rule", "borda", "--file", str(FIXTURE))
    report = json.loads(out)
    assert code == 0
    assert report["answer"] == "YES" and report["rule"] == "borda" and report["route"] == "borda"
    assert report["statistics"]["t"] == 3 and report["statistics"]["tau"] == 3


def test_cli_solve_check_round_trip(tmp_path, capsys):
    inst = tmp_path / "inst.np"
    cert = tmp_path / "cert.json"
    # make b1 distinguished so the answer is NO
    text = FIXTURE.read_text().replace("*p", "p").replace("  b1 b2", "  *b1 b2")
    inst.write_text(text)
    code, _, _ = run(capsys, "solve", "--rule", "borda", "--file", str(inst), "--out", str(cert))
    assert code == 0
    report = json.loads(cert.read_text())
    assert report["answer"] == "NO" and "b1" in report["certificate"]["nominees"]
    code, out, _ = run(capsys, "check", "--file", str(inst), "--certificate", str(cert))
    assert code == 0 and "certificate valid" in out
    report["certificate"]["witness"] = "b1"
    cert.write_text(json.dumps(report))
    code, _, _ = run(capsys, "check", "--file", str(inst), "--certificate", str(cert))
    assert code == cli.EXIT_BAD_CERT


def test_cli_parse_error_exit_code(tmp_path, capsys):
    bad = tmp_path / "bad.np"
    bad.write_text(HEAD + "votes:\n  1: a > q > c\n")
    code, _, err = run(capsys, "solve", "--rule", "borda", "--file", str(bad))
    assert code == cli.EXIT_PARSE and "line 7" in err


def test_cli_missing_file(capsys):
    code, _, _ = run(capsys, "stats", "--file", "/nonexistent/x.np")
    assert code == cli.EXIT_PARSE


def test_cli_unknown_rule_is_usage_error(capsys):
    code, _, _ = run(capsys, "solve", "--rule", "schulze", "--file", str(FIXTURE))
    assert code == cli.EXIT_USAGE


def test_cli_argparse_usage(capsys):
    with pytest.raises(SystemExit) as info:
        cli.main(["solve"])
    assert info.value.code == 2


def test_cli_budget_exit_code(capsys, monkeypatch):
    code, _, err = run(capsys, "solve", "--rule", "rankedpairs", "--file", str(FIXTURE), "--budget", "1")
    assert code == cli.EXIT_BUDGET and "exceeds budget" in err
    monkeypatch.setenv("NECPRES_BRUTEFORCE_BUDGET", "2")
    code, _, _ = run(capsys, "solve", "--rule", "rankedpairs", "--file", str(FIXTURE))
    assert code == cli.EXIT_BUDGET


def test_cli_crosscheck_random(capsys):
    code, out, _ = run(capsys, "crosscheck", "--rule", "maximin", "--random", "25", "--seed", "4")
    summary = json.loads(out)
    assert code == 0 and summary["disagreements"] == 0
    assert sum(summary["agree"].values()) == 25


def test_cli_crosscheck_file(capsys):
    code, out, _ = run(capsys, "crosscheck", "--rule", "copeland:1/2", "--file", str(FIXTURE))
    assert code == 0 and json.loads(out)["agree"]["YES"] == 1


def test_cli_crosscheck_detects_disagreement(capsys, monkeypatch):
    from necpres.solvers.verdict import yes_verdict

    monkeypatch.setattr(cli, "solve", lambda inst, rule, **kw: yes_verdict(rule, "broken"))
    text = FIXTURE.read_text().replace("*p", "p").replace("  b1 b2", "  *b1 b2")
    monkeypatch.setattr("sys.stdin", io.StringIO(text))
    code, _, err = run(capsys, "crosscheck", "--rule", "borda", "--file", "-")
    assert code == cli.EXIT_DISAGREE and "brute force says NO" in err


def test_cli_reduce_and_solve(tmp_path, capsys):
    src = tmp_path / "f.cnf"
    src.write_text(to_dimacs(random_formula(3, 1)))
    out = tmp_path / "r.np"
    code, _, _ = run(capsys, "reduce", "--from", "sat", "--rule", "plurality", "--in", str(src), "--out", str(out))
    assert code == 0
    code, text, _ = run(capsys, "solve", "--rule", "plurality", "--file", str(out), "--solver", "bruteforce")
    assert code == 0 and json.loads(text)["answer"] == "NO"


def test_cli_reduce_rejects_mismatch(tmp_path, capsys):
    src = tmp_path / "f.cnf"
    src.write_text(to_dimacs(random_formula(3, 1)))
    code, _, _ = run(capsys, "reduce", "--from", "clique", "--rule", "borda", "--in", str(src))
    assert code in (cli.EXIT_USAGE, cli.EXIT_PARSE)
    src.write_text("p cnf 3 4\n1 2 0\n")
    code, _, _ = run(capsys, "reduce", "--from", "sat", "--rule", "veto", "--in", str(src))
    assert code == cli.EXIT_PARSE


def test_cli_stats(capsys):
    code, out, _ = run(capsys, "stats", "--file", str(FIXTURE))
    s = json.loads(out)
    assert code == 0
    assert (s["t"], s["s"], s["tau"], s["voters"], s["candidates"]) == (3, 2, 3, 3, 5)
    assert s["majority"]["condorcet_winner"] == "p"


def test_cli_generate_and_import(tmp_path, capsys):
    code, out, _ = run(capsys, "generate", "--candidates", "6", "--parties", "3", "--seed", "2")
    assert code == 0 and parse_instance(out).t == 3
    soc, parties = tmp_path / "x.soc", tmp_path / "x.parties"
    soc.write_text(SOC)
    parties.write_text("*Ann\nBob_Q Cy\n")
    code, out, _ = run(capsys, "import", "--soc", str(soc), "--parties", str(parties))
    assert code == 0 and parse_instance(out).election.labels == ("Ann", "Bob_Q", "Cy")


def test_cli_bench_quick(tmp_path, capsys):
    out = tmp_path / "bench.json"
    code, _, _ = run(capsys, "bench", "--suite", "borda", "--quick", "--types", "20", "--out", str(out))
    rows = json.loads(out.read_text())
    assert code == 0 and rows[0]["C"] == 50 and rows[0]["solver"] == "borda"
