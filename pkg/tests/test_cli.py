import json
import subprocess
import sys
from importlib import resources

import jsonschema
import pytest

from drinfeld.cli import main

SCHEMA = json.loads(resources.files("drinfeld").joinpath("schema.json").read_text())


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def validate(obj, kind):
    jsonschema.validate(obj, SCHEMA)
    jsonschema.validate(obj, {"$defs": SCHEMA["$defs"], "$ref": f"#/$defs/{kind}"})


def test_schema_is_valid():
    jsonschema.Draft202012Validator.check_schema(SCHEMA)


def test_ord_delta(capsys):
    code, out, _ = run(capsys, "ord", "delta", "--a", "T", "--r", "2", "--q", "3")
    assert code == 0 and out.strip() == '{"ord":"1"}'
    validate(json.loads(out), "ord")


def test_carlitz_divpoly(capsys):
    code, out, _ = run(capsys, "carlitz", "divpoly", "--a", "T", "--q", "2")
    assert code == 0 and out.strip() == '{"rho":"T*X + X^2"}'
    validate(json.loads(out), "divpoly")
    code, out, _ = run(capsys, "carlitz", "divpoly", "--a", "T^2", "--q", "2")
    assert json.loads(out)["rho"] == "T^2*X + (T^2+T)*X^2 + X^4"


def test_carlitz_frobdeg(capsys):
    code, out, _ = run(capsys, "carlitz", "frobdeg", "--ell", "T^2+T+1", "--pi", "T", "--q", "2")
    d = json.loads(out)
    assert code == 0 and d["degrees"] == [3] and d["predicted"] == 3 and d["consistent"]
    validate(d, "frobdeg")


def test_zeta_partial(capsys):
    code, out, _ = run(capsys, "zeta", "partial", "--t", "1/T", "--f", "1", "--q", "2", "--at", "-1")
    d = json.loads(out)
    # x^{-1} + 1/(1 - 2x) at x = 2: 1/2 - 1/3
    assert code == 0 and d["value"] == "1/6"
    validate(d, "zeta")


def test_ord_e1u(capsys):
    code, out, _ = run(capsys, "ord", "e1u", "--n", "T", "--u", "1/T,0", "--nu", "1,0;0,1", "--q", "3")
    assert code == 0 and json.loads(out) == {"ord": "1"}
    code, out, _ = run(capsys, "ord", "e1u", "--n", "T", "--u", "0,1/T", "--q", "3")
    assert json.loads(out) == {"ord": "0"}


def test_eis_eval(capsys):
    code, out, _ = run(capsys, "eis", "eval", "--k", "2", "--z", "alpha*T^2", "--q", "3", "--prec", "20")
    d = json.loads(out)
    assert code == 0 and d["value"]["m"] == 2 and d["N"] == 20
    validate(d, "analytic_value")
    code, out, _ = run(capsys, "eis", "eval", "--k", "1", "--u", "1/T,0", "--z", "alpha*T^2", "--q", "2",
                       "--prec", "20")
    assert code == 0
    validate(json.loads(out), "analytic_value")


def test_j_and_gdelta(capsys):
    code, out, _ = run(capsys, "j", "eval", "--z", "alpha*T^2", "--q", "2", "--prec", "20")
    assert code == 0
    validate(json.loads(out), "analytic_value")
    code, out, _ = run(capsys, "gdelta", "check", "--z", "alpha*T^2", "--q", "2", "--prec", "20")
    d = json.loads(out)
    assert code == 0 and d["ok"]
    validate(d, "gdelta")


def test_slope(capsys):
    code, out, _ = run(capsys, "slope", "--form", "delta", "--q", "3", "--mrange", "3:7")
    d = json.loads(out)
    assert code == 0 and d["limit"] == "2"
    validate(d, "slope")


def test_selftest_suite(capsys):
    code, out, err = run(capsys, "selftest", "--suite", "zeta")
    d = json.loads(out)
    assert code == 0 and d["passed"] and d["tally"] == {"pass": 1, "fail": 0}
    assert "criterion 11 PASS" in err
    validate(d, "selftest")


def test_selftest_seed_changes_draws_not_outcomes(capsys):
    outs = [json.loads(run(capsys, "selftest", "--suite", "boundary", "--seed", str(s))[1]) for s in (0, 5)]
    assert all(o["passed"] for o in outs)


def test_byte_identical_reruns(capsys):
    argv = ["eis", "eval", "--k", "3", "--z", "alpha*T^2+1/T", "--q", "2", "--prec", "16"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first
    argv = ["selftest", "--suite", "carlitz"]
    first = run(capsys, *argv)[1]
    assert run(capsys, *argv)[1] == first


def test_text_format(capsys):
    code, out, _ = run(capsys, "ord", "delta", "--a", "T^2+T+1", "--q", "2", "--format", "text")
    assert code == 0 and out.strip() == "ord: 5"


def test_environment_precision(capsys, monkeypatch):
    monkeypatch.setenv("DRINFELD_PRECISION", "12")
    code, out, _ = run(capsys, "eis", "eval", "--k", "2", "--z", "alpha*T", "--q", "3")
    assert code == 0 and json.loads(out)["N"] == 12
    monkeypatch.setenv("DRINFELD_PRECISION", "many")
    assert run(capsys, "eis", "eval", "--k", "2", "--z", "alpha*T", "--q", "3")[0] == 64


@pytest.mark.parametrize("argv,code", [
    (["bogus"], 64),
    ([], 64),
    (["ord", "delta", "--a", "T", "--q", "6"], 64),
    (["selftest", "--suite", ""], 64),
    (["selftest", "--suite", "nope"], 64),
    (["slope", "--form", "delta", "--mrange", "3:4", "--q", "3"], 64),
    (["ord", "delta", "--a", "1", "--q", "2"], 1),
    (["eis", "eval", "--k", "2", "--z", "T^5", "--q", "3"], 1),
    (["carlitz", "frobdeg", "--ell", "T", "--pi", "T", "--q", "2"], 1),
])
def test_exit_codes(capsys, argv, code):
    assert run(capsys, *argv)[0] == code


def test_parse_error_has_caret(capsys):
    code, _, err = run(capsys, "carlitz", "divpoly", "--a", "T+*", "--q", "2")
    assert code == 65
    lines = err.splitlines()
    assert lines[1].strip() == "T+*" and lines[2].index("^") == lines[1].index("*")


def test_parse_error_offset_inside_vector(capsys):
    code, _, err = run(capsys, "ord", "e1u", "--n", "T", "--u", "1/T,T+*", "--q", "2")
    assert code == 65 and "position 6" in err


def test_precision_error_reports_achievable(capsys):
    code, _, err = run(capsys, "eis", "eval", "--k", "3", "--z", "alpha*T^2", "--q", "2", "--prec", "60", "--D", "1")
    assert code == 2
    d = json.loads(err)
    assert d["error"] == "precision" and d["achievable"] is not None


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "drinfeld", "ord", "delta", "--a", "T", "--r", "3", "--q", "2"],
                         capture_output=True, text=True)
    assert res.returncode == 0 and res.stdout.strip() == '{"ord":"1"}'
