from __future__ import annotations

import io as stdio
import json

import pytest

from cliffcs import io
from cliffcs.cli import main
from cliffcs.errors import ParseError
from cliffcs.gates import GateWord, evaluate_word
from cliffcs.so6 import su4_to_so6
from cliffcs.synthesis import random_operator


def run(argv):
    out = stdio.StringIO()
    code = main(argv, out)
    return code, out.getvalue()


def test_matrix_roundtrip(tmp_path):
    u, _ = random_operator(7, 1)
    assert io.loads_matrix(io.dumps_matrix(u)) == u
    path = tmp_path / "u.json"
    io.write_matrix(path, u)
    assert io.read_matrix(path) == u
    doc = json.loads(path.read_text())
    assert doc["format_version"] == 1 and doc["ring"] == "zomega" and doc["sde"] == u.k
    m = su4_to_so6(u)
    assert io.loads_matrix(io.dumps_matrix(m)) == m


def test_large_entries_survive():
    u, _ = random_operator(300, 2)
    assert u.max_bits() > 64
    assert io.loads_matrix(io.dumps_matrix(u)) == u


@pytest.mark.parametrize(
    "text",
    [
        "not json",
        '{"format_version": 2, "ring": "zomega", "sde": 0, "rows": []}',
        '{"format_version": 1, "ring": "zomega", "sde": 0, "rows": [[["1","0","0","0"]]]}',
        '{"format_version": 1, "ring": "zomega", "sde": -1, "rows": []}',
    ],
)
def test_malformed_matrix(text):
    with pytest.raises(ParseError):
        io.loads_matrix(text)


def test_circuit_roundtrip(tmp_path):
    tokens = ("H1", "CS", "CZ", "W^3")
    text = io.format_circuit(tokens, comment="example\ncircuit")
    assert text.startswith("# example\n# circuit\n")
    assert io.parse_circuit(text) == tokens
    path = tmp_path / "c.txt"
    path.write_text("H1 CS # first\n\nCZ   W^3\n")
    assert io.read_circuit(path) == tokens


def test_cli_synth_golden(capsys):
    code, out = run(["synth", "--word", "CS"])
    assert code == 0 and out == "G3 CLIFF(identity)\n"
    err = capsys.readouterr().err
    assert "cs-count: 1" in err and "lde: 1" in err


def test_cli_synth_both_formats_evaluate():
    word = "H1 CS H2 CS CZ"
    code, out = run(["synth", "--word", word, "--format", "both"])
    syl, gates = out.splitlines()
    assert code == 0 and syl == "G1 G8 CLIFF(H1 H2 CZ)"
    assert GateWord.parse(gates).evaluate() == evaluate_word(word)


def test_cli_synth_from_files(tmp_path):
    u, nf = random_operator(5, 4)
    path = tmp_path / "u.json"
    io.write_matrix(path, u)
    code, out = run(["synth", "--input", str(path), "--format", "gates"])
    assert code == 0 and GateWord.parse(out).evaluate() == u
    circ = tmp_path / "c.txt"
    circ.write_text(io.format_circuit(nf.tokens()))
    code, out = run(["synth", "--circuit", str(circ)])
    assert code == 0 and out.split()[:5] == [f"G{j}" for j in nf.syllables]


def test_cli_so6(tmp_path):
    code, out = run(["so6", "--word", "CS"])
    assert code == 0 and io.loads_matrix(out) == su4_to_so6(evaluate_word("CS"))


def test_cli_random_is_deterministic():
    a = run(["random", "--cs-count", "4", "--seed", "9"])
    b = run(["random", "--cs-count", "4", "--seed", "9"])
    assert a == b and a[0] == 0
    doc = json.loads(a[1])
    assert doc["cs_count"] == 4
    u, nf = random_operator(4, 9)
    assert io.matrix_from_dict(doc["matrix"]) == u and doc["word"] == " ".join(nf.tokens())


@pytest.mark.parametrize(
    "word, code, out",
    [("G3 G1 CLIFF", 0, "accept P222\n"), ("G1 G1 CLIFF", 2, "reject\n"), ("G99", 3, "")],
)
def test_cli_validate(word, code, out):
    assert run(["validate", "--word", word]) == (code, out)


def test_cli_count_and_bound():
    assert run(["count", "--n", "2"]) == (0, "n: 2\nexact: 13824000\ncumulative: 15298560\n")
    code, out = run(["bound", "--epsilon", "1e-2,1e-4"])
    assert code == 0
    assert out.splitlines() == [
        "epsilon,headline_bound,volume_root,volume_min_count",
        "1e-2,32.549281,32.550151,33",
        "1e-4,65.768562,65.769432,66",
    ]


def test_cli_lde():
    code, out = run(["lde", "--counts", "2,6", "--samples", "3"])
    rows = out.splitlines()
    assert code == 0 and rows[0] == "cs_count,seed,su4_lde,so6_lde,in_bounds"
    assert len(rows) == 7 and all(r.endswith(",1") for r in rows[1:])


def test_cli_bench():
    code, out = run(["bench", "--counts", "5,20", "--reps", "1", "--backend", "python"])
    assert code == 0 and "python" in out


@pytest.mark.parametrize(
    "argv, code",
    [
        (["synth", "--word", "CS Q"], 3),
        (["bogus"], 3),
        (["synth"], 3),
        (["count", "--n", "-1"], 3),
        (["bound", "--epsilon", "2"], 3),
        (["bound", "--epsilon", "abc"], 3),
        (["bench", "--backend", "nope"], 3),
        (["synth", "--input", "/nonexistent/u.json"], 3),
    ],
)
def test_cli_usage_errors(argv, code):
    assert run(argv)[0] == code


def test_cli_not_in_group(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text(json.dumps({"format_version": 1, "ring": "zomega", "sde": 0,
                                "rows": [[["2" if i == j else "0", "0", "0", "0"] for j in range(4)]
                                         for i in range(4)]}))
    assert run(["synth", "--input", str(path)])[0] == 2
