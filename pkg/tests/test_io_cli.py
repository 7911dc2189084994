import json

import pytest

from liebax import io
from liebax.cli import main
from liebax.linalg import array_equal


def test_algebra_roundtrip(sl2q, sl2c6):
    for F in (sl2q, sl2c6):
        doc = io.algebra_to_doc(F.algebra)
        assert io.algebra_from_doc(json.loads(json.dumps(doc))) == F.algebra


def test_matrix_and_tensor_roundtrip(sl2q):
    G = sl2q.form
    assert array_equal(io.matrix_from_doc(io.matrix_to_doc(G), 3), G)
    r = sl2q.tensors["r3"]
    assert array_equal(io.tensor_from_doc(io.tensor_to_doc(r), 3), r)


@pytest.mark.parametrize(
    "entry, where",
    [
        ({"i": 1, "j": 0, "coeffs": [0, 0]}, "algebra.brackets[0]: need i < j"),
        ({"i": 0, "j": 5, "coeffs": [0, 0]}, "algebra.brackets[0]: index out of range"),
        ({"i": 0, "j": 1, "coeffs": [0]}, "algebra.brackets[0].coeffs: expected 2"),
        ({"i": 0, "j": 1, "coeffs": ["x", 0]}, "algebra.brackets[0].coeffs[0]"),
    ],
)
def test_position_annotated_errors(entry, where):
    with pytest.raises(io.InputError) as exc:
        io.algebra_from_doc({"dim": 2, "brackets": [entry]})
    assert str(exc.value).startswith(where)


def test_duplicate_and_field_errors():
    e = {"i": 0, "j": 1, "coeffs": [1, 0]}
    with pytest.raises(io.InputError, match="duplicate"):
        io.algebra_from_doc({"dim": 2, "brackets": [e, e]})
    with pytest.raises(io.InputError, match=r"field\.kind"):
        io.algebra_from_doc({"dim": 2, "brackets": [], "field": {"kind": "R"}})
    L = io.algebra_from_doc({"dim": 1, "brackets": [], "field": {"kind": "QuadExt", "d": -1}})
    assert L.field == -1


def test_load_json_reports_position(tmp_path):
    p = tmp_path / "bad.json"
    p.write_text('{"dim": 2,\n "brackets": [}')
    with pytest.raises(io.InputError, match=r"bad\.json:2:"):
        io.load_json(str(p))


def write(tmp_path, name, doc):
    p = tmp_path / name
    p.write_text(json.dumps(doc))
    return str(p)


def test_cli_classify(capsys):
    assert main(["classify", "--fixture", "sl2q", "--tensor", "r1"]) == 0
    assert capsys.readouterr().out.startswith("verdict: TRIANGULAR")
    assert main(["classify", "--fixture", "sl2q", "--tensor", "r3", "--format", "structured"]) == 0
    doc = json.loads(capsys.readouterr().out)
    assert doc["verdict"] == "ALMOST_FACTORIZABLE" and doc["extension_d"] == -1


def test_cli_structured_matches_text(capsys):
    main(["classify", "--fixture", "sl2c6", "--tensor", "r"])
    text = capsys.readouterr().out
    main(["classify", "--fixture", "sl2c6", "--tensor", "r", "--format", "structured"])
    doc = json.loads(capsys.readouterr().out)
    assert f"verdict: {doc['verdict']}" in text


def test_cli_rejections(tmp_path, capsys):
    assert main(["rb", "--fixture", "sl2q", "--map", "id", "--weight", "0"]) == 1
    out = capsys.readouterr().out
    assert "residual_zero: False" in out and "(h, x)" in out
    assert main(["rb", "--fixture", "sl2c6", "--map", "B", "--weight", "2phi"]) == 0
    t = write(tmp_path, "t.json", {"coeffs": [[0] * 6 for _ in range(6)]})
    assert main(["classify", "--fixture", "sl2c6", "--tensor", t]) == 0
    capsys.readouterr()


def test_cli_not_bialgebra(tmp_path, capsys):
    coeffs = [[0] * 6 for _ in range(6)]
    coeffs[4][0], coeffs[0][4] = 1, -1
    t = write(tmp_path, "t.json", {"coeffs": coeffs})
    assert main(["classify", "--fixture", "sl2c6", "--tensor", t]) == 1
    assert "NOT_BIALGEBRA" in capsys.readouterr().out
    assert main(["double", "--fixture", "sl2c6", "--tensor", t]) == 1


def test_cli_input_errors(tmp_path, capsys):
    assert main(["check", "--fixture", "nope"]) == 2
    assert "unknown fixture" in capsys.readouterr().err
    non_jacobi = write(tmp_path, "a.json", {
        "dim": 3,
        "brackets": [
            {"i": 0, "j": 1, "coeffs": [0, 0, 1]},
            {"i": 0, "j": 2, "coeffs": [1, 0, 0]},
            {"i": 1, "j": 2, "coeffs": [1, 0, 0]},
        ],
    })
    assert main(["check", "--algebra", non_jacobi]) == 1
    assert main(["classify", "--algebra", non_jacobi, "--tensor", "x"]) == 2
    assert "Jacobi" in capsys.readouterr().err
    assert main(["classify", "--fixture", "sl2q"]) == 2
    missing = str(tmp_path / "missing.json")
    assert main(["rb", "--algebra", missing]) == 2
    assert main(["classify", "--fixture", "sl2q", "--tensor", "r1", "--form", write(tmp_path, "g.json", {"matrix": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]})]) == 2
    assert "invariant" in capsys.readouterr().err


def test_cli_misc(capsys):
    assert main(["fixtures"]) == 0
    assert "sl2c6" in capsys.readouterr().out
    assert main(["fixtures", "sl2q"]) == 0
    assert json.loads(capsys.readouterr().out)["name"] == "sl2q"
    assert main(["centroid", "--fixture", "sl2c6"]) == 0
    assert "dimension: 2" in capsys.readouterr().out
    assert main(["double", "--fixture", "sl2q", "--map", "R1", "--weight", "0"]) == 0
    assert json.loads(capsys.readouterr().out)["dim"] == 6
    assert main(["check", "--fixture", "sl2q", "--tensor", "r1", "--format", "structured"]) == 0
    assert json.loads(capsys.readouterr().out)["form_invariant"] is True
    assert main(["classify", "--fixture", "sl2q", "--tensor", "r3", "--extend", "-1"]) == 0
    assert "FACTORIZABLE" in capsys.readouterr().out
