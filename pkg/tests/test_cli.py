import json
from fractions import Fraction as F
from importlib import resources

import jsonschema
import pytest

from tsmult.cli import (Config, TSSum, Var, format_expr, main, parse, to_germ)
from tsmult.errors import GermParseError, TsmultError


def _schema(name):
    text = resources.files("tsmult.schemas").joinpath(f"{name}.json").read_text()
    return json.loads(text)


def _validate(payload, schema_name):
    jsonschema.validate(payload, _schema(schema_name))


def _run(capsys, argv):
    code = main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


# ---- parser ----

def test_parse_pair():
    expr = parse("z1^2 + z2^3")
    assert expr == TSSum(Var("z1", 2), Var("z2", 3))


def test_parse_left_assoc():
    expr = parse("x^3+y^3+z^3")
    assert expr == TSSum(TSSum(Var("x", 3), Var("y", 3)), Var("z", 3))


def test_parse_ts_operator_and_coefficients():
    expr = parse("2*z1^2 (+) 1/3*z2^3")
    assert expr == TSSum(Var("z1", 2, F(2)), Var("z2", 3, F(1, 3)))


def test_parse_errors_with_position():
    with pytest.raises(GermParseError) as err:
        parse("z^2 + z^3")
    assert "repeated variable" in str(err.value)
    assert err.value.pos == 6
    with pytest.raises(GermParseError) as err:
        parse("z^1 + w^3")
    assert err.value.pos == 2
    with pytest.raises(GermParseError):
        parse("z^2 +")
    with pytest.raises(GermParseError):
        parse("z^2 @ w^3")
    with pytest.raises(GermParseError):
        parse("z1^2 z2^3")
    with pytest.raises(GermParseError):
        parse("0*z^2")
    with pytest.raises(GermParseError):
        parse("")


def test_round_trip():
    for text in ["z1^2 + z2^3", "x^3 + y^3 + z^3", "2*a^2 + 1/3*b^5"]:
        expr = parse(text)
        assert format_expr(expr) == text
        assert parse(format_expr(expr)) == expr


def test_to_germ():
    germ = to_germ(parse("2*z1^2 + z2^3"))
    assert germ.exponents == (2, 3)
    assert germ.var_names == ("z1", "z2")
    assert germ.coefficients == (F(2), F(1))


def test_config_validation():
    with pytest.raises(TsmultError):
        Config(window=F(0))
    with pytest.raises(TsmultError):
        Config(mc_samples=0)


# ---- commands ----

def test_cmd_lct(capsys):
    code, out, _ = _run(capsys, ["lct", "z1^2 + z2^3"])
    assert code == 0 and out.strip() == "5/6"


def test_cmd_lct_json(capsys):
    code, out, _ = _run(capsys, ["lct", "--json", "z1^2 + z2^3"])
    payload = json.loads(out)
    assert payload == {"lct": "5/6"}
    _validate(payload, "lct")


def test_cmd_ideal_golden(capsys):
    code, out, _ = _run(capsys, ["ideal", "--alpha", "5/6", "z1^2 + z2^3"])
    assert code == 0 and out.strip() == "gens [[1,0],[0,1]]"


def test_cmd_ideal_periodic(capsys):
    code, out, _ = _run(capsys, ["ideal", "--alpha", "7/6", "z1^2 + z2^3"])
    assert code == 0 and out.strip() == "power 1 gens [[0,0]]"


def test_cmd_ideal_json(capsys):
    code, out, _ = _run(capsys, ["ideal", "--alpha", "5/6", "--json",
                                 "z1^2 + z2^3"])
    payload = json.loads(out)
    assert payload["power"] == 0
    assert payload["ideal"]["gens"] == [[0, 1], [1, 0]]
    _validate(payload, "scaled_ideal")


def test_cmd_ideal_one_var(capsys):
    code, out, _ = _run(capsys, ["ideal", "--alpha", "2/3", "z^3"])
    assert code == 0 and out.strip() == "gens [[2]]"


def test_cmd_jc(capsys):
    code, out, _ = _run(capsys, ["jc", "z1^2 + z2^3"])
    assert code == 0
    assert out.split() == ["5/6", "1", "11/6"]


def test_cmd_jc_json_schema(capsys):
    code, out, _ = _run(capsys, ["jc", "--json", "--window", "3",
                                 "z1^2 + z2^3"])
    payload = json.loads(out)
    assert payload["values"] == ["5/6", "1", "11/6", "2", "17/6"]
    _validate(payload, "jump_set")


def test_cmd_spectrum(capsys):
    code, out, _ = _run(capsys, ["spectrum", "x^2+y^3+z^5"])
    lines = out.strip().splitlines()
    assert code == 0 and len(lines) == 8
    assert lines[0] == "31/30 1"


def test_cmd_spectrum_json(capsys):
    code, out, _ = _run(capsys, ["spectrum", "--json", "z1^2 + z2^3"])
    payload = json.loads(out)
    assert payload["entries"] == [{"value": "5/6", "mult": 1},
                                  {"value": "7/6", "mult": 1}]
    _validate(payload, "spectrum")


def test_cmd_eigen(capsys):
    code, out, _ = _run(capsys, ["eigen", "z1^2 + z2^3"])
    assert code == 0 and out.split("\n")[:2] == ["-5/6 1", "-1/6 1"]
    code, out, _ = _run(capsys, ["eigen", "--json", "z1^2 + z2^3"])
    _validate(json.loads(out), "eigen_table")


def test_cmd_graded(capsys):
    code, out, _ = _run(capsys, ["graded", "--alpha", "5/6", "z1^2 + z2^3"])
    assert code == 0
    assert out.strip().splitlines() == ["dim 1", "exps [[0,0]]"]
    code, out, _ = _run(capsys, ["graded", "--alpha", "5/6", "--json",
                                 "z1^2 + z2^3"])
    _validate(json.loads(out), "graded_piece")


def test_cmd_irrationality(capsys):
    code, out, _ = _run(capsys, ["irrationality", "x^3 + y^3 + z^3"])
    assert code == 0
    assert out.strip().splitlines() == ["dim 1", "exps [[0,0,0]]"]
    code, out, _ = _run(capsys, ["irrationality", "--json", "x^3 + y^3 + z^3"])
    _validate(json.loads(out), "irrationality")


# ---- error handling and exit codes ----

def test_exit_code_parse_error(capsys):
    code, _, err = _run(capsys, ["lct", "z^2 + z^3"])
    assert code == 2
    assert "repeated variable" in err


def test_exit_code_window_error(capsys):
    code, _, err = _run(capsys, ["graded", "--alpha", "9/2", "z1^2 + z2^3"])
    assert code == 2
    assert "window" in err


def test_exit_code_domain_error(capsys):
    code, _, err = _run(capsys, ["irrationality", "z^5"])
    assert code == 2


def test_window_env_override(capsys, monkeypatch):
    monkeypatch.setenv("TSMULT_WINDOW", "3")
    code, out, _ = _run(capsys, ["jc", "z1^2 + z2^3"])
    assert code == 0
    assert out.split() == ["5/6", "1", "11/6", "2", "17/6"]
    monkeypatch.setenv("TSMULT_WINDOW", "junk")
    code, _, err = _run(capsys, ["jc", "z1^2 + z2^3"])
    assert code == 2


def test_cli_flag_beats_env(capsys, monkeypatch):
    monkeypatch.setenv("TSMULT_WINDOW", "3")
    code, out, _ = _run(capsys, ["jc", "--window", "1", "z1^2 + z2^3"])
    assert code == 0
    assert out.split() == ["5/6"]


# ---- verify ----

def test_verify_convolution_suite(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "convolution"])
    assert code == 0
    assert "convolution: 25/25 passed" in out


def test_verify_json_report(capsys):
    code, out, _ = _run(capsys, ["verify", "--suite", "spectral", "--json"])
    assert code == 0
    payload = json.loads(out)
    _validate(payload, "verify_report")
    assert payload["ok"] is True
    suite = payload["suites"][0]
    assert suite["suite"] == "spectral"
    assert suite["passed"] == suite["total"] == 84


def test_montecarlo_evidence_schema():
    from tsmult.germs import Germ
    from tsmult.oracles import MonteCarloConfig, monte_carlo_integrable
    evidence = monte_carlo_integrable(Germ((2, 3)), (0, 0), F(7, 10),
                                      MonteCarloConfig(shells=4, samples=500))
    _validate(evidence, "mc_evidence")


def test_chain_and_alpha_one_schemas():
    from tsmult.convolution import alpha_one_sequence_check
    from tsmult.filtration import v_to_j
    from tsmult.germs import Germ, diagonal_microlocal_chain
    chain = diagonal_microlocal_chain(Germ((2, 3)))
    _validate(chain.to_json(), "jump_chain")
    _validate(v_to_j(chain).to_json(), "jump_chain")
    report = alpha_one_sequence_check(Germ((2,), var_names=("x",)),
                                      Germ((3,), var_names=("y",)))
    _validate(report.to_json(), "alpha_one_report")
