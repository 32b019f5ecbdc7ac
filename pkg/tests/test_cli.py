import csv
import io
import json
from importlib import resources

import pytest
from jsonschema import Draft202012Validator

from dfseq.cli.io import load_schema
from dfseq.cli.main import main, run

DATA = resources.files("dfseq").joinpath("data")


def data(name):
    return str(DATA.joinpath(name))


def report_validator():
    return Draft202012Validator(load_schema("report.schema.json"))


def write(tmp_path, obj, name="in.json"):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def test_invariants_conic_json(capsys):
    assert main(["invariants", data("conic.json"), "--gamma-max", "20"]) == 0
    out = json.loads(capsys.readouterr().out)
    assert out["F"][:3] == ["-1/8", "-1/8", "1/8"]
    assert out["norms"]["norm1"] == "1/3"
    assert out["rFirst"] == 1
    assert out["centralFiber"] == ["z0*z2"]
    assert out["lambda"] == {"coeff": "1/1", "times": "1/pi", "float": pytest.approx(0.3183098861837907)}
    report_validator().validate(out)


def test_mu_gamma_p1_csv(tmp_path):
    out = tmp_path / "p1.csv"
    assert main(["mu-gamma", data("p1_line.json"), "--gamma-max", "40", "--format", "csv", "--out", str(out)]) == 0
    rows = list(csv.DictReader(io.StringIO(out.read_text())))
    assert len(rows) == 40
    assert {r["T"] for r in rows} == {"0/1 π^-1"}


def test_mu_gamma_conic_json(capsys):
    assert main(["mu-gamma", data("conic.json"), "--gamma-max", "30", "--tail-window", "5"]) == 0
    out = json.loads(capsys.readouterr().out)
    report_validator().validate(out)
    assert out["rFirst"] == 1 and out["Fr"] == "-1/8"
    assert out["tailInf"]["window"] == 5
    assert out["rows"][0]["T"]["coeff"] == "-1/4"


def test_inhomogeneous_generator_exit_2(tmp_path, capsys):
    bad = write(tmp_path, {"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1"], "weights": [0, 0, 1]})
    assert main(["invariants", bad]) == 2
    err = capsys.readouterr().err
    assert "ideal[0]" in err and "not homogeneous" in err


@pytest.mark.parametrize(
    "obj, fragment",
    [
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1^2"]}, "'weights' is a required property"),
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1^2"], "weights": [0, "a", 1]}, "weights[1]"),
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1^2"], "weights": [0, 1]}, "weights"),
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z9"], "weights": [0, 0, 1]}, "ideal[0]"),
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1^2"], "weights": [0, 0, 1], "gammaMax": 3}, "gammaMax"),
        ({"numVars": 3, "exponent": 2, "ideal": ["z0*z2 - z1^2"], "weights": [0, 0, 1], "extra": 1}, "extra"),
    ],
)
def test_validation_errors(tmp_path, capsys, obj, fragment):
    assert main(["invariants", write(tmp_path, obj)]) == 2
    assert fragment in capsys.readouterr().err


def test_unreadable_input(capsys):
    assert main(["invariants", "/nonexistent/input.json"]) == 2
    assert "cannot read" in capsys.readouterr().err


def test_bad_flags(capsys):
    assert main(["invariants", data("conic.json"), "--order", "0"]) == 2
    assert main(["mu-gamma", data("conic.json"), "--tail-window", "0"]) == 2


def test_certificate_failure_exit_3(monkeypatch, capsys):
    import dfseq.geometry as geo

    monkeypatch.setattr(geo, "quotient_dimension", lambda *a: 0)
    assert main(["invariants", data("conic.json")]) == 3
    assert "certificate" in capsys.readouterr().err


def test_sequence_command(tmp_path, monkeypatch, capsys):
    seq = {
        "name": "three curves",
        "items": [
            json.loads(DATA.joinpath("p1_line.json").read_text()),
            json.loads(DATA.joinpath("conic.json").read_text()),
            json.loads(DATA.joinpath("twisted_cubic.json").read_text()),
        ],
        "gammaMax": 12,
    }
    for item in seq["items"]:
        item.pop("gammaMax")
    path = write(tmp_path, seq)
    monkeypatch.setenv("DFSEQ_THREADS", "3")
    assert main(["sequence", path]) == 0
    out = json.loads(capsys.readouterr().out)
    report_validator().validate(out)
    assert [it["T"]["coeff"] for it in out["items"]] == ["0/1", "-1/4", "-1/2"]
    assert out["tailInf"]["coeff"] == "-1/2"
    monkeypatch.setenv("DFSEQ_THREADS", "zero")
    assert main(["sequence", path]) == 2


def test_sequence_order_checked(tmp_path, capsys):
    conic = json.loads(DATA.joinpath("conic.json").read_text())
    p1 = json.loads(DATA.joinpath("p1_line.json").read_text())
    assert main(["sequence", write(tmp_path, {"items": [conic, p1], "gammaMax": 10})]) == 2
    assert "increasing" in capsys.readouterr().err


def test_numeric_command(tmp_path, capsys):
    doc = json.loads(DATA.joinpath("p1_line.json").read_text())
    doc["numeric"] = {"gammas": [4], "sValues": [-1.0, 0.0], "tValues": [0.5], "bergmanK": [3]}
    assert main(["numeric", write(tmp_path, doc), "--nodes", "64"]) == 0
    out = json.loads(capsys.readouterr().out)
    report_validator().validate(out)
    assert out["scene"]["radialNodes"] == 64
    assert out["A"][0]["value"] == pytest.approx(0.5, abs=1e-3)
    assert out["bergman"][0]["deviation"] < 1e-8
    assert out["productType"] is True


def test_numeric_conic_non_product(capsys):
    assert main(["numeric", data("conic.json"), "--gamma-max", "10", "--format", "csv"]) == 0
    rows = list(csv.reader(io.StringIO(capsys.readouterr().out)))
    series = {r[0] for r in rows[1:]}
    assert series == {"fdot", "bergman"}


def test_numeric_rejects_surfaces(capsys):
    assert main(["numeric", data("projective_plane.json")]) == 2


@pytest.mark.parametrize("command, name", [("invariants", "twisted_cubic.json"), ("mu-gamma", "conic.json")])
def test_deterministic_output(command, name):
    a = run([command, data(name), "--gamma-max", "15"])
    b = run([command, data(name), "--gamma-max", "15"])
    assert a[0] == 0 and a[1] == b[1]
    a = run([command, data(name), "--gamma-max", "15", "--format", "csv"])
    b = run([command, data(name), "--gamma-max", "15", "--format", "csv"])
    assert a[1] == b[1]


def test_shipped_inputs_validate_and_round_trip():
    from dfseq.cli.io import validate

    for p in DATA.iterdir():
        if p.name.endswith(".json") and not p.name.endswith(".schema.json"):
            validate(json.loads(p.read_text()), "input.schema.json", "configuration")
            code, text = run(["invariants", str(p), "--gamma-max", "12"])
            assert code == 0
            report_validator().validate(json.loads(text))
