import json
import subprocess
import sys
from pathlib import Path

import pytest
from hypothesis import given, settings, strategies as st

from seqcm_engine.cli import COMMANDS, dumps, main, run
from seqcm_engine.corpus import random_instance
from seqcm_engine.document import Document, DocumentError, format_document, parse

DATA = Path(__file__).resolve().parent.parent / "data"
GOLDEN = Path(__file__).resolve().parent / "golden"


def test_parse_examples():
    d = parse("ring 2 32003\nmodule 1\ntwists 0\ngen [x1^2]\n")
    (g,) = d.submodule.generators
    assert g.coeffs == {(0, (2, 0)): 1}
    d = parse("ring 2\nmodule 1\ntwists 0\ngen [x1*x2 + x2^2]")
    assert len(d.submodule.generators[0].coeffs) == 2
    with pytest.raises(DocumentError, match="line 4"):
        parse("ring 2\nmodule 1\ntwists 0\ngen [x1 + x2^2]")


@pytest.mark.parametrize(
    "text,where",
    [
        ("ring 2 32004", "line 1, column 8"),
        ("ring 2\nmodule 1\ngen [x1 $ x2]", "line 3, column 9"),
        ("ring 2\nmodule 1\ngen [x1^99999]", "exceeds"),
        ("ring 2\nmodule 1\ngen [x1 x2]", "line 3, column 9"),
        ("ring 2\nmodule 1\ngen [x5]", "outside"),
        ("ring 2\nmodule 2\ngen [x1]", "rank is 2"),
        ("ring 2\nmodule 1\ngen [(x1]", "expected ')'"),
        ("module 1", "before ring"),
        ("ring 2\nfoo 3", "unknown keyword"),
        ("ring 2\nmodule 2\ntwists 0", "expected 2 twists"),
    ],
)
def test_parse_errors(text, where):
    with pytest.raises(DocumentError, match=where.replace("(", r"\(").replace(")", r"\)")):
        parse(text)


def test_comments_and_defaults():
    d = parse("# c\nring 3   # three variables\nmodule 2\ngen [x1, x2]   # linear\n")
    assert d.ring.p == 32003 and d.module.twists == (0, 0)


@settings(max_examples=30, deadline=None)
@given(st.integers(0, 10_000))
def test_round_trip(seed):
    U = random_instance(seed).U
    doc = Document(U.ring, U.module, U)
    text = format_document(doc)
    again = parse(text)
    assert again == doc
    assert format_document(again) == text


@pytest.mark.parametrize("command", COMMANDS)
def test_every_command_runs(command):
    doc = parse((DATA / "edge_and_vertex.txt").read_text())
    report, code = run(command, doc, seed=7)
    assert code == 0
    assert list(report)[:9] == ["engine", "version", "command", "p", "n", "twists", "generators", "seed", "mode"]
    json.loads(dumps(report))


def test_run_examples():
    doc = parse((DATA / "edge_and_vertex.txt").read_text())
    r, code = run("seqcm", doc, seed=7, mode="generic")
    assert code == 0 and r["result"]["sequentially_cohen_macaulay"]
    ad = r["result"]["adeg_criterion"]
    assert ad["adeg_U"] == ad["adeg_V"] == 2
    r, _ = run("adeg", parse((DATA / "zero.txt").read_text()))
    assert r["result"]["adeg"] == 1
    planes = parse((DATA / "two_planes.txt").read_text())
    r, code = run("filter-regular", planes, mode="as-given")
    assert code == 0 and not r["result"]["overall"]
    assert r["result"]["per_variable"][0] == {"variable": "x4", "colon_dim": 2, "filter_regular": False}
    r, code = run("seqcm", planes, mode="as-given")
    assert code == 2 and r["result"]["herzog_sbarra"] == "not applicable"


def test_self_check_flag():
    doc = parse((DATA / "embedded_point.txt").read_text())
    r, code = run("hilbert", doc, self_check=True, degree_bound=6)
    assert code == 0 and r["self_check"]["passed"] and r["self_check"]["ext_checked"]


def test_main_exit_codes(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert main(["seqcm", str(DATA / "edge_and_vertex.txt"), "--json", str(out)]) == 0
    assert json.loads(out.read_text())["result"]["sequentially_cohen_macaulay"] is True
    assert main(["seqcm", str(DATA / "two_planes.txt"), "--mode", "as-given"]) == 2
    bad = tmp_path / "bad.txt"
    bad.write_text("ring 2\nmodule 1\ngen [x1 + x2^2]\n")
    assert main(["gb", str(bad)]) == 1
    assert "not homogeneous" in capsys.readouterr().err
    assert main(["gb", str(tmp_path / "missing.txt")]) == 1


def test_json_to_stdout(capsys):
    assert main(["adeg", str(DATA / "zero.txt"), "--json", "-"]) == 0
    assert json.loads(capsys.readouterr().out)["result"]["adeg"] == 1


@pytest.mark.parametrize("name", sorted(p.stem for p in DATA.glob("*.txt")))
def test_golden_reports(name):
    doc = parse((DATA / f"{name}.txt").read_text())
    for mode in ("generic", "as-given"):
        report, _ = run("seqcm", doc, seed=0, mode=mode)
        assert dumps(report) == (GOLDEN / f"{name}.{mode}.json").read_text()


def test_console_script_is_byte_stable(tmp_path):
    outs = []
    for k in range(2):
        path = tmp_path / f"{k}.json"
        subprocess.run([sys.executable, "-m", "seqcm_engine.cli", "seqcm", str(DATA / "two_planes.txt"),
                        "--seed", "3", "--json", str(path)], check=True, capture_output=True)
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
