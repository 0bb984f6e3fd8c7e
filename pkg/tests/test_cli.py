import json

import pytest

from epidecide.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_decide_holds(capsys):
    code, out, _ = run(capsys, "decide", "x'x = xx'")
    assert code == 0 and out.strip() == "HOLDS"


def test_decide_fails_with_counterexample(capsys):
    code, out, _ = run(capsys, "decide", "xy = yx", "--counterexample")
    assert code == 1
    assert out.startswith("FAILS")
    assert "counterexample in" in out


def test_normalize_worked_example(capsys):
    code, out, _ = run(capsys, "normalize", "(xz^(w+2))^w z^(w-5)")
    assert code == 0 and out.strip() == "(xz^(w+2))^(w-1)xz^(w-3)"


def test_canon(capsys):
    code, out, _ = run(capsys, "canon", "x(yx)^(w+3)")
    assert code == 0 and out.strip() == "(xy)^(w+3)x"


def test_lcp(capsys):
    code, out, _ = run(capsys, "lcp", "(xy)^wx", "(xy)^(w+2)")
    assert code == 0 and out.strip() == "(xy)^wx"


def test_expand(capsys):
    code, out, _ = run(capsys, "expand", "(xy)^(w+1)", "--k", "3")
    assert code == 0 and out.strip() == "xyxyxyxy"


def test_expand_precondition(capsys):
    code, _, err = run(capsys, "expand", "x^(w-5)", "--k", "3")
    assert code == 2 and "defect" in err


def test_parse_error_exit_code(capsys):
    code, _, err = run(capsys, "decide", "x^^ = x")
    assert code == 2 and "error" in err


def test_json_output_stable(capsys):
    code1, out1, _ = run(capsys, "decide", "x^w = x^(w+1)", "--json")
    code2, out2, _ = run(capsys, "decide", "x^w = x^(w+1)", "--json")
    assert code1 == code2 == 1
    assert out1 == out2
    d = json.loads(out1)
    assert d["outcome"] == "fails"
    assert set(d) >= {"outcome", "lhsNormal", "rhsNormal", "steps"}


def test_finite_check_corpus(capsys):
    code, out, _ = run(capsys, "finite", "check", "x'x = xx'", "--corpus", "default")
    assert code == 0 and out.strip() == "HOLDS"
    code, out, _ = run(capsys, "finite", "check", "xy = yx", "--corpus", "default")
    assert code == 1 and out.startswith("FAILS in")


def test_finite_table_file(tmp_path, capsys):
    from epidecide import finite_epigroups as fin

    p = tmp_path / "z2.json"
    p.write_text(json.dumps(fin.cyclic_group(2).to_json()))
    code, out, _ = run(capsys, "finite", "check", "xy = yx", "--table", str(p))
    assert code == 0
    code, out, _ = run(capsys, "finite", "pseudoinv", "--table", str(p))
    assert code == 0 and "0->0" in out and "1->1" in out


def test_trace_flag(capsys):
    code, out, _ = run(capsys, "normalize", "x^wx", "--trace")
    assert code == 0
    assert out.splitlines()[0] == "x^(w+1)"
    assert any("S-windOn" in line for line in out.splitlines()[1:])
