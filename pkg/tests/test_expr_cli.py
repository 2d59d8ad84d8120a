import io
import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from hermcoh.cli import run
from hermcoh.expr import ExprEvalError, ExprSyntaxError, evaluate, parse


def cli(*argv):
    out = io.StringIO()
    code = run(list(argv), stdout=out)
    return code, (json.loads(out.getvalue()) if out.getvalue() else None)


def test_precedence():
    assert parse("c1+c2*h^2") == ("+", ("var", "c1"), ("*", ("var", "c2"), ("pow", ("var", "h"), 2)))
    assert parse("c1*c2*c3") == ("*", ("*", ("var", "c1"), ("var", "c2")), ("var", "c3"))
    assert parse("(c1+c2)^2") == ("pow", ("+", ("var", "c1"), ("var", "c2")), 2)
    assert parse("s[2,1]") == ("schubert", (2, 1))


@pytest.mark.parametrize("src,pos", [("c1 - c2", 3), ("c1 +", 4), ("(c1", 3), ("c1^c2", 3), ("c1 $", 3),
                                     ("", 0), ("c1^2^3", 4), ("s[1,2]", 0)])
def test_syntax_errors_report_position(src, pos):
    with pytest.raises(ExprSyntaxError) as exc:
        parse(src)
    assert exc.value.position == pos


def test_subtraction_only_over_integers():
    assert evaluate("c3 - c1", "schubert", "z") == "s[1] - s[1,1,1]"
    with pytest.raises(ExprSyntaxError):
        evaluate("c3 - c1", "schubert", "z2")


def test_eval_examples():
    assert evaluate("c1^2*c2*h^16", "ps5") == "c1^4*c2*h^14"
    assert evaluate("c1*c2^2", "gr35") == "0"
    assert evaluate("s[1]^6", "schubert", "z") == "5*s[2,2,2]"
    assert evaluate("h^20", "ps5", "z") == "50*s[2,2,2]*h^14"
    assert evaluate("s[2,2,2]", "gr35") == "c1^4*c2"


def test_unknown_variable():
    with pytest.raises(ExprEvalError):
        evaluate("x", "gr35")
    with pytest.raises(ExprEvalError):
        evaluate("h", "schubert")


names = st.sampled_from(["c1", "c2", "c3", "h", "s[1]", "s[2,1]", "1", "2"])


@st.composite
def expressions(draw, depth=2):
    if depth == 0:
        return draw(names)
    kind = draw(st.sampled_from(["leaf", "+", "*", "^"]))
    if kind == "leaf":
        return draw(names)
    if kind == "^":
        return f"({draw(expressions(depth=depth - 1))})^{draw(st.integers(0, 3))}"
    return f"({draw(expressions(depth=depth - 1))}){kind}({draw(expressions(depth=depth - 1))})"


@given(expressions(), st.sampled_from([("ps5", "z2"), ("gr35", "z2"), ("gr35", "z"), ("ps5", "z")]))
def test_printed_forms_reparse(src, ring_coeff):
    ring, coeff = ring_coeff
    if ring == "gr35" and "h" in src:
        src = src.replace("h", "c1")
    text = evaluate(src, ring, coeff)
    assert evaluate(text, ring, coeff) == text


def test_cli_eval_and_schema():
    code, out = cli("eval", "--ring", "gr35", "c1*c2^2")
    assert code == 0 and out["results"] == {"normal_form": "0"}
    assert set(out) == {"schema_version", "version", "command", "inputs", "results", "provenance", "seed",
                        "timing_ms"}
    assert out["timing_ms"] is None
    code, out = cli("--timing", "eval", "--ring", "ps5", "c1^2*c2*h^16")
    assert out["results"]["normal_form"] == "c1^4*c2*h^14" and out["timing_ms"] >= 0


def test_cli_bound_and_surface():
    code, out = cli("bound", "--n", "2", "--q", "5")
    assert code == 0 and out["results"]["total_bound"] == 14
    code, out = cli("surface", "--q", "4", "--pg", "5", "--k2min", "16")
    assert code == 0 and out["results"]["K2_window"] == [16, 17]
    code, out = cli("surface", "--q", "4", "--pg", "5", "--k2min", "20")
    assert code == 1 and out["results"]["consistent"] is False


def test_cli_dtable():
    code, out = cli("dtable", "--q", "4", "--m", "4")
    assert code == 0 and out["results"]["upper"] == 5


def test_cli_usage_errors(capsys):
    assert run(["bound", "--n", "2"]) == 2
    assert run(["eval", "--ring", "gr35", "c1 - c2"]) == 2
    assert run(["eval", "--ring", "gr35", "--bogus", "c1"]) == 2
    assert run(["hermitian", "verify-family", "--trials", "0"]) == 2
    assert "error" in capsys.readouterr().err


def test_cli_clifford_and_seed_env(monkeypatch):
    monkeypatch.setenv("HERMCOH_SEED", "77")
    code, out = cli("hermitian", "clifford", "--q", "4", "--trials", "20")
    assert code == 0 and out["seed"] == 77 and out["results"]["dimension"] == 5
    monkeypatch.setenv("HERMCOH_SEED", "x")
    assert run(["hermitian", "clifford", "--q", "4", "--trials", "5"]) == 2


def test_cli_verify_family():
    code, out = cli("hermitian", "verify-family", "--trials", "50", "--seed", "9")
    assert code == 0 and out["results"]["passed"] and out["seed"] == 9
