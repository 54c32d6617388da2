from __future__ import annotations

import json

import pytest

from ncgeom.cli import main
from ncgeom.parser import BinOp, Call, Name, Neg, Num, ParseError, Pow, EvalError, eval_text, parse, tokenize
from ncgeom.report import Report, emit, emit_json
from ncgeom.scalars import Q
from ncgeom.torus import Tensor

CORPUS = [
    "1", "0", "-3", "q", "q^2 - 1", "1/(q^2 - 1)", "(q+1)/(q-1)", "q^-3", "2/3", "u", "v", "u^-1", "v^-2",
    "u*v", "v*u", "u v", "u*v*u^-1", "(u + v)^2", "(u - v)*(u + v)", "q*u + v/q", "u^3 v^-2", "(1 + u)^3",
    "u/v", "v^2/u", "(u+v)/q", "du", "dv", "du*u", "u*du", "dv*u*v", "du + dv", "q du*v - dv*u",
    "d(u)", "d(v)", "d(u*v)", "d(u^-1)", "d(u^2 v^3)", "d(du*v)", "d(dv*u)", "d(d(u*v))", "du ^^ dv",
    "dv ^^ du", "du∧dv", "(du*u) ^^ (dv*v)", "du ^^ du", "Du", "Dv", "∂_u", "∂_v", "u*Du", "Du*v", "u Du + v Dv",
    "int(Du, du)", "int(Dv, du ^^ dv)", "int(Du, du ^^ dv)", "int(u Du, dv*u)", "L(Du, u^3)", "L(u*Du, v*u)",
    "L(Du, du ^^ dv*u)", "L(Dv, du*v)", "du⊗dv", "du*dv", "Du⊗du", "-(u + v)", "--u", "u^+2", "3*(q+1)",
    "(2*q^2 + 1)/2", "du·((q) v^1 u^1)", "Du⌟dv",
]


def test_corpus_size():
    assert len(CORPUS) >= 50


@pytest.mark.parametrize("text", CORPUS)
def test_round_trip(text):
    value = eval_text(text)
    assert eval_text(value.render()) == value


def test_parse_examples():
    assert parse("u*v") == BinOp("*", Name("u"), Name("v"))
    assert eval_text("u*v") == Tensor.monomial(1, 1, Q)
    assert eval_text("d(u*v)").render() == "du·((1) v^1) + dv·((q) u^1)"
    assert parse("-u^2") == Neg(Pow(Name("u"), 2))
    assert parse("1 + 2*u") == BinOp("+", Num(1), BinOp("*", Num(2), Name("u")))
    assert parse("int(Du, du)") == Call("int", (Name("Du"), Name("du")))


def test_syntax_error_offset_and_expected():
    with pytest.raises(ParseError) as err:
        parse("(u")
    assert err.value.offset == 2
    assert "')'" in err.value.expected
    with pytest.raises(ParseError) as err:
        parse("u + ")
    assert err.value.offset == 4
    with pytest.raises(ParseError) as err:
        parse("u ^ v")
    assert "integer exponent" in err.value.expected


def test_byte_offsets_for_unicode():
    tokens = tokenize("∂_u⊗du")
    assert [t.offset for t in tokens] == [0, 5, 8, 10]
    with pytest.raises(ParseError) as err:
        parse("∂_u ⊗ ?")
    assert err.value.offset == len("∂_u ⊗ ".encode())


def test_eval_errors():
    with pytest.raises(EvalError):
        eval_text("u/(u+v)")
    with pytest.raises(EvalError):
        eval_text("1/0")
    with pytest.raises(ParseError):
        eval_text("w")


def test_cli_eval_prints_normal_form(capsys):
    assert main(["eval", "u*v"]) == 0
    assert capsys.readouterr().out.strip() == "(q) v^1 u^1"


def test_cli_eval_numeric(capsys):
    assert main(["--eval-q", "2", "eval", "q^2 + 1/2"]) == 0
    assert capsys.readouterr().out.splitlines()[-1] == "at q = 2: 9/2"


def test_cli_parse_error_exit_code(capsys):
    assert main(["eval", "(u"]) == 2
    assert "offset 2" in capsys.readouterr().err


def test_cli_usage_error_exit_code():
    with pytest.raises(SystemExit) as err:
        main(["verify", "nothing"])
    assert err.value.code == 2
    assert main(["verify", "torus", "--params", "r_xx=1"]) == 2


def test_cli_verify_torus_json_is_byte_stable(capsys):
    assert main(["verify", "torus", "--format", "json", "--samples", "3"]) == 0
    first = capsys.readouterr().out
    assert main(["--format", "json", "verify", "torus", "--samples", "3"]) == 0
    second = capsys.readouterr().out
    assert first == second
    data = json.loads(first)
    assert data["suite"] == "torus"
    assert all(set(c) == {"name", "status", "expected", "actual", "ms"} for c in data["checks"])
    assert any(c["name"].startswith("dim = 2") and c["status"] == "pass" for c in data["checks"])


def test_cli_failing_check_exits_nonzero(capsys):
    # the stated case (d) compatibility claim does not hold (see ledger)
    assert main(["verify", "sphere", "--case", "d", "--samples", "2"]) == 1
    out = capsys.readouterr().out
    assert "[FAIL ] compatible" in out


def test_cli_flows_and_dims(capsys):
    assert main(["verify", "flows", "--order", "3", "--samples", "2"]) == 0
    capsys.readouterr()
    assert main(["dim", "torus", "--params", "r_uu=q", "s_vv=1/q"]) == 0
    assert capsys.readouterr().out.strip() == "2"
    assert main(["dim", "sphere", "--h121", "1", "--format", "json"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == "(q^2 - 3)/(q^2 - 2)"


def test_empty_report_json():
    assert json.loads(emit_json(Report("empty"))) == {"suite": "empty", "checks": []}


def test_report_error_status():
    rep = Report("x")
    rep.run("boom", lambda: 1 / 0)
    assert rep.checks[0].status == "error" and not rep.ok
    assert "ZeroDivisionError" in emit(rep, "text")
