import json

import pytest

from mzspace import (
    ExactMatrix,
    FieldSpec,
    field_from_json,
    field_to_json,
    matrix_from_json,
    matrix_to_json,
    ms_by_idempotent_criterion,
    span_of,
    subspace_from_json,
    subspace_to_json,
    trace_zero_space,
    verdict_to_json,
)
from mzspace.cli import main
from mzspace.errors import ConfigError

F5 = FieldSpec(5)


def test_field_literal_roundtrip():
    for F in [F5, FieldSpec(2, 2, (1, 1, 1)), FieldSpec(0)]:
        assert field_from_json(field_to_json(F)) == F


def test_matrix_literal_roundtrip():
    a = ExactMatrix.from_rows(F5, [[F5.scalar(v) for v in r] for r in [[1, 2], [3, 4]]])
    assert matrix_from_json(matrix_to_json(a)) == a
    Q = FieldSpec(0)
    b = ExactMatrix.diagonal(Q, [Q.scalar("1/2"), Q.scalar(-3)])
    data = matrix_to_json(b)
    assert data["rows"][0][0] == "1/2"
    assert matrix_from_json(data) == b


def test_subspace_literal_roundtrip():
    H = trace_zero_space(2, F5)
    assert subspace_from_json(subspace_to_json(H)) == H


def test_bad_literals_raise_config_error():
    with pytest.raises(ConfigError):
        matrix_from_json({"p": 5, "k": 1})  # no rows
    with pytest.raises(ConfigError):
        matrix_from_json({"p": 5, "k": 1, "rows": [[1, 2], [3]]})  # ragged


def test_verdict_json_includes_witness():
    v = ms_by_idempotent_criterion(span_of([ExactMatrix.identity(F5, 2)]))
    data = verdict_to_json(v)
    assert data["status"] == "NotMS"
    w = matrix_from_json(data["witness"])
    assert w * w == w


def _write_subspace(tmp_path, S, name="s.json"):
    path = tmp_path / name
    path.write_text(json.dumps(subspace_to_json(S)))
    return str(path)


def test_cli_certify_exit_codes(tmp_path, capsys):
    good = _write_subspace(tmp_path, trace_zero_space(2, F5), "good.json")
    assert main(["certify", "--subspace", good]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"]["status"] == "MS_Proper"

    bad = _write_subspace(tmp_path, span_of([ExactMatrix.identity(F5, 2)]), "bad.json")
    assert main(["certify", "--subspace", bad]) == 1
    report = json.loads(capsys.readouterr().out)
    assert report["verdict"]["status"] == "NotMS"
    assert "witness" in report["verdict"]

    assert main(["certify", "--subspace", str(tmp_path / "missing.json")]) == 2


def test_cli_construct_and_maximal(capsys):
    params = json.dumps({"p": 5, "n": 2, "r": 1, "s1": 1, "s2": 2})
    assert main(["construct", "--family", "cor26", "--params", params]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["certificate"]["valid"]

    assert main(["maximal", "--family-params", params]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["is_maximal"] and report["directions"] == 6


def test_cli_single_direction(capsys):
    params = json.dumps({"p": 5, "n": 2, "r": 1, "s1": 1, "s2": 2})
    direction = json.dumps({"p": 5, "k": 1, "rows": [[0, 0], [1, 0]]})
    assert main(["maximal", "--family-params", params,
                 "--direction", direction]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["witness"]["case"] == "Case1"
    assert report["witness"]["beta"] == 3


def test_cli_oracle_compare(capsys):
    assert main(["oracle-compare", "--n", "2", "--q", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["oracle_agreement"]


def test_cli_census_and_classify2(capsys):
    assert main(["census", "--n", "2", "--q", "2",
                 "--compare-classification"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["maximal_per_dim"] == {"1": 2, "2": 4}

    assert main(["classify2", "--field", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["predicted"]) == 4


def test_cli_demo_basechange(capsys):
    assert main(["demo-basechange", "--p", "5", "--s", "2"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["base_is_ms"] and report["base_is_maximal"]
    assert report["extension_field"] == {"p": 5, "k": 2, "modulus": [3, 0, 1]}
    assert main(["demo-basechange", "--p", "5", "--s", "1"]) == 2


def test_cli_debondt_sample(capsys):
    assert main(["debondt-sample", "--samples", "5", "--seed", "11"]) == 0
    report = json.loads(capsys.readouterr().out)
    assert report["with_idempotent"] == 5


def test_cli_output_file(tmp_path, capsys):
    good = _write_subspace(tmp_path, trace_zero_space(2, F5))
    out = tmp_path / "report.json"
    assert main(["certify", "--subspace", good, "--output", str(out)]) == 0
    report = json.loads(out.read_text())
    assert report["verdict"]["status"] == "MS_Proper"
