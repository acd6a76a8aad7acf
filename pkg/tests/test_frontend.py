import json
from fractions import Fraction
from importlib import resources
from pathlib import Path

import jsonschema
import pytest
from hypothesis import given, strategies as st

from jordansplit.algebra import grassmann, matrix_algebra
from jordansplit.errors import NotAssociative
from jordansplit.frontend import cli, dsl, jsonio
from jordansplit.frontend.corpus import corpus
from jordansplit.frontend.instances import gf9, row_ring
from jordansplit.frontend.runner import RunReport, run

from test_algebra import algebras

SCRIPTS = resources.files("jordansplit.frontend") / "scripts"
SCHEMA = json.loads((resources.files("jordansplit.frontend") / "report.schema.json").read_text())
ALL_SCRIPTS = sorted(p.name for p in SCRIPTS.iterdir() if p.name.endswith(".jsa"))


def script_path(name) -> str:
    return str(SCRIPTS / name)


G2_NONSPLIT = """algebra G2 = grassmann(2) over Q
map phi : G2 -> G2 { 1 -> 1; a -> a; b -> b; ab -> a + ab; }
check splittable phi
"""


# -- parsing -----------------------------------------------------------------------

def test_parse_statements():
    s = dsl.parse("algebra G = grassmann(2) over Q\n"
                  "map p : G -> G { 1 -> 1; a -> 2*a - 1/2*b; } default 0\n"
                  "check hom p\nsplit p\nreport json\n")
    a, m, c, sp, r = s.statements
    assert a == dsl.AlgebraDef("G", dsl.Expr("grassmann", (2,)), "Q")
    assert m.images == (("1", ((Fraction(1), "1"),)), ("a", ((Fraction(2), "a"), (Fraction(-1, 2), "b"))))
    assert m.default_zero
    assert c == dsl.Check("hom", "p") and sp == dsl.Split("p")
    assert s.output_format == "json"


def test_zero_image_and_comments():
    s = dsl.parse("# header\nalgebra G = grassmann(1) over GF(5)  # trailing\n"
                  "map z : G -> G { 1 -> 0; a -> 0; }\n")
    assert s.env["z"].images == [(0, 0), (0, 0)]


@pytest.mark.parametrize("text, line, col, fragment", [
    ("algebra G = grassmann(2) over Q\nmap p : G -> G { 1 -> 1; }\n", 2, 1, "no image for a, b, ab"),
    ("check hom x\n", 1, 1, "undefined name 'x'"),
    ("algebra G = grassmann(2) over Q\nmap p : G -> G { 1 -> z; } default 0\n", 2, 23, "'z' is not a basis label"),
    ("algebra G = grassmann(2) over Q\nmap p : G -> G { q -> 1; } default 0\n", 2, 18, "'q' is not a basis label"),
    ("algebra G = foo(2) over Q\n", 1, 13, "unknown algebra expression"),
    ("check bogus x\n", 1, 7, "unknown check kind"),
    ("algebra G = grassmann(2) over Q\ncheck hom G\n", 2, 1, "is not a map"),
    ("algebra G = grassmann(2) over Q\nalgebra G = matrix(2) over Q\n", 2, 1, "already defined"),
    ("algebra G = grassmann(2) over R\n", 1, 31, "expected a field"),
    ("algebra G = grassmann(2) over Q $\n", 1, 33, "unexpected character"),
])
def test_parse_errors(text, line, col, fragment):
    with pytest.raises(dsl.DslError) as exc:
        dsl.parse(text)
    e = exc.value
    assert (e.line, e.col) == (line, col) and fragment in e.msg
    assert str(e).startswith(f"{line}:{col}: ")


@pytest.mark.parametrize("name", ALL_SCRIPTS)
def test_print_parse_roundtrip(name):
    text = Path(script_path(name)).read_text()
    s = dsl.parse(text, base_dir=Path(script_path(name)).parent)
    printed = dsl.print_script(s)
    s2 = dsl.parse(printed, base_dir=Path(script_path(name)).parent)
    assert s2 == s
    assert dsl.print_script(s2) == printed


@given(st.lists(st.tuples(st.fractions(max_denominator=9).filter(lambda q: q != 0),
                          st.sampled_from(["1", "a", "b", "ab"])), min_size=1, max_size=5))
def test_lincomb_roundtrip(terms):
    text = dsl.format_lincomb(terms)
    s = dsl.parse(f"algebra G = grassmann(2) over Q\nmap p : G -> G {{ a -> {text}; }} default 0\n")
    got = s.statements[1].images[0][1]
    want = {}
    for q, l in terms:
        want[l] = want.get(l, 0) + q
    have = {}
    for q, l in got:
        have[l] = have.get(l, 0) + q
    assert {k: v for k, v in have.items() if v} == {k: v for k, v in want.items() if v}


# -- running -----------------------------------------------------------------------

def test_empty_script():
    rep = run(dsl.parse(""))
    assert rep.entries == [] and rep.ok
    assert rep.summary() == {"pass": 0, "fail": 0, "unknown": 0, "error": 0}


def test_nonsplit_script_reports_witness():
    rep = run(dsl.parse(G2_NONSPLIT))
    (e,) = rep.entries
    assert e.verdict == "fail" and e.value is False
    assert e.witnesses["intersection"] == "ab"
    assert e.data["V"] == ["a", "ab"] and e.data["W"] == ["a", "ab"]


def test_transpose_split_script():
    text = ("algebra M = matrix(2) over Q\n"
            "map t : M -> M { e11 -> e11; e12 -> e21; e21 -> e12; e22 -> e22; }\nsplit t\n")
    (e,) = run(dsl.parse(text)).entries
    assert e.verdict == "pass" and e.value == "direct_sum"
    assert set(e.data["phi1"].values()) == {"0"}
    assert e.data["I1"] == []


def test_split_of_nonsplittable_map_is_error_verdict():
    (e,) = run(dsl.parse(G2_NONSPLIT.replace("check splittable", "split"))).entries
    assert e.verdict == "error" and e.detail.startswith("NotSplittable")
    assert "intersection" in e.witnesses


def test_identities_on_non_jordan_is_error():
    text = ("algebra M = matrix(2) over Q\nmap bad : M -> M { e11 -> e12; } default 0\n"
            "check identities bad\ncheck jordan bad\n")
    err, fail = run(dsl.parse(text)).entries
    assert err.verdict == "error" and err.witnesses["identity"]
    assert fail.verdict == "fail" and fail.witnesses["residual"] == "2*e12"


def test_algebra_checks():
    text = ("algebra G = grassmann(2) over Q\nalgebra K = table(\"gf9.json\") over GF(3)\n"
            "check semiprime G\ncheck reduced G\ncheck reduced K\n")
    sp, rg, rk = run(dsl.parse(text, base_dir=script_path(".")), ).entries
    assert sp.verdict == "fail" and sp.data["radical"]
    assert rg.verdict == "fail" and rg.witnesses["nilpotent"]
    assert rk.verdict == "pass"


@pytest.mark.parametrize("name", ALL_SCRIPTS)
def test_reports_are_deterministic_and_valid(name):
    s = dsl.parse(Path(script_path(name)).read_text(), base_dir=Path(script_path(name)).parent)
    a, b = run(s, seed=3).to_json(), run(s, seed=3).to_json()
    assert a == b
    doc = json.loads(a)
    jsonschema.validate(doc, SCHEMA)
    assert RunReport.from_dict(doc).to_json() == a


def test_timings_only_on_request():
    s = dsl.parse(G2_NONSPLIT)
    assert "timing_ms" not in run(s).to_json()
    doc = json.loads(run(s, timings=True).to_json())
    jsonschema.validate(doc, SCHEMA)
    assert doc["entries"][0]["timing_ms"] >= 0


def test_text_report_mentions_verdicts():
    out = run(dsl.parse(G2_NONSPLIT)).to_text()
    assert "[fail] check splittable phi" in out and "summary: 0 pass, 1 fail" in out


# -- JSON algebra format -------------------------------------------------------------

@given(algebras)
def test_json_roundtrip(A):
    B = jsonio.algebra_from_json(json.loads(jsonio.dumps_algebra(A)))
    assert B.field == A.field and list(B.labels) == list(A.labels)
    assert B.table == A.table and B.unit == A.unit


def test_shipped_tables_match_builders():
    for fname, A in (("row.json", row_ring()), ("gf9.json", gf9())):
        B = jsonio.load_algebra(script_path(fname))
        assert B.table == A.table and list(B.labels) == list(A.labels)


@pytest.mark.parametrize("mutate, fragment", [
    (lambda d: d.update(field="R"), "unknown field"),
    (lambda d: d["table"][0][0].__setitem__(0, ["0.5", 0]), "not a rational"),
    (lambda d: d["table"][0][0].__setitem__(0, [1, 0]), "not a rational"),
    (lambda d: d["table"][0][0].__setitem__(0, ["1", 9]), "out of range"),
    (lambda d: d.pop("labels"), "missing key"),
    (lambda d: d["table"].pop(), "table must be"),
])
def test_json_rejections(mutate, fragment):
    doc = jsonio.algebra_to_json(grassmann(1))
    mutate(doc)
    with pytest.raises(jsonio.FormatError, match=fragment):
        jsonio.algebra_from_json(doc)


def test_json_rejects_non_associative():
    doc = jsonio.algebra_to_json(matrix_algebra(2))
    doc["table"][1][2] = [["2", 0]]  # e12 e21 = 2 e11 breaks associativity
    with pytest.raises(NotAssociative):
        jsonio.algebra_from_json(doc)


# -- command line ----------------------------------------------------------------------

def test_cli_exit_codes(tmp_path, capsys):
    assert cli.main(["check", script_path("matrix2.jsa")]) == 0
    assert cli.main(["check", script_path("grassmann2.jsa")]) == 1
    bad = tmp_path / "bad.jsa"
    bad.write_text("check hom nothing\n")
    assert cli.main(["check", str(bad)]) == 2
    err = capsys.readouterr().err
    assert f"{bad}:1:1: undefined name 'nothing'" in err
    assert cli.main(["check", str(tmp_path / "missing.jsa")]) == 2
    with pytest.raises(SystemExit) as exc:
        cli.main(["frobnicate"])
    assert exc.value.code == 2


def test_cli_split(capsys):
    assert cli.main(["split", script_path("twisted_row.jsa"), "--map", "phi", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["entries"][0]["data"]["phi1"] == {"e12": "e12_1"}
    assert cli.main(["split", script_path("twisted_row.jsa"), "--map", "R"]) == 2
    assert cli.main(["split", script_path("grassmann2.jsa"), "--map", "phi"]) == 1


def test_cli_report_and_output(tmp_path, capsys):
    out = tmp_path / "r.json"
    assert cli.main(["--seed", "5", "report", script_path("reduced.jsa"), "--format", "json", "-o", str(out)]) == 0
    doc = json.loads(out.read_text())
    assert doc["seed"] == 5
    jsonschema.validate(doc, SCHEMA)
    assert cli.main(["report", script_path("reduced.jsa")]) == 0
    assert capsys.readouterr().out.startswith("jordansplit ")


def test_script_report_statement_sets_format(capsys):
    assert cli.main(["check", script_path("reduced.jsa")]) == 0
    json.loads(capsys.readouterr().out)


def test_corpus_report_is_green():
    rep = corpus()
    assert rep.ok, rep.text()


def test_cli_corpus(capsys):
    assert cli.main(["corpus", "--format", "json"]) == 0
    doc = json.loads(capsys.readouterr().out)
    jsonschema.validate(doc, SCHEMA)
    assert doc["summary"]["fail"] == 0 and len(doc["entries"]) == 20


def test_cli_bad_table_file(tmp_path, capsys):
    (tmp_path / "t.json").write_text('{"field": "Q", "labels": ["x"], "table": [[[["0.5", 0]]]]}')
    (tmp_path / "s.jsa").write_text('algebra A = table("t.json") over Q\n')
    assert cli.main(["check", str(tmp_path / "s.jsa")]) == 2
    assert "not a rational" in capsys.readouterr().err
