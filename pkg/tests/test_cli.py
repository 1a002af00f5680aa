import json

import jsonschema
import pytest

from heisencf.cli import COMMANDS, load_schema, main
from heisencf.numfield import fixed_point_of
from heisencf.serialize import point_to_json
from heisencf.unitary import j_matrix, tokens_to_matrix, translation
from heisencf.siegel import IntegerPoint
from heisencf.gaussian import GaussianInteger as G

J_JSON = json.dumps(j_matrix().to_json())
MG2 = j_matrix() @ translation(IntegerPoint(G(2), 1))
MG2_JSON = json.dumps({"matrix": MG2.to_json()})
RATIONAL = '{"u": "1/2", "v": "1/8+1/3i"}'


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr().out
    doc = json.loads(out)
    jsonschema.validate(doc, load_schema(argv[0]))
    return code, doc, out


def test_verify_unitary_on_j(capsys):
    assert run(capsys, "verify-unitary", J_JSON)[:2] == (0, {"unitary": True})


def test_euler_matches_word_product(capsys):
    code, doc, _ = run(capsys, "euler", '{"preperiod":[[0,0]],"period":[{"a":"2","c":1}]}')
    assert code == 0
    assert doc["matrix"] == MG2.to_json()


def test_selftest_is_deterministic(capsys):
    _, _, a = run(capsys, "selftest", "--seed", "7")
    _, _, b = run(capsys, "selftest", "--seed", "7")
    assert a == b


@pytest.mark.parametrize(
    "argv",
    [
        ("expand", RATIONAL),
        ("convergents", RATIONAL),
        ("convergents", '{"preperiod":[[0,0]],"period":[{"a":"2","c":1}]}', "--n-max", "5"),
        ("period", RATIONAL),
        ("lagrange", MG2_JSON),
        ("verify-relation", MG2_JSON),
        ("verify-relation", json.dumps({"x": json.loads(RATIONAL), "y": {"u": "0", "v": "i"}})),
        ("decompose", MG2_JSON),
        ("torsion", J_JSON),
        ("nearest", RATIONAL),
        ("trace", RATIONAL),
        ("trace", MG2_JSON, "--n-max", "30"),
        ("qcheck", '[{"a":"2","c":1}]'),
    ],
)
def test_outputs_validate(capsys, argv):
    code, _, _ = run(capsys, *argv)
    assert code == 0


def test_every_command_ships_a_schema():
    for name in COMMANDS:
        jsonschema.Draft202012Validator.check_schema(load_schema(name))


def test_period_of_field_point(capsys):
    h = json.dumps(point_to_json(fixed_point_of(MG2)))
    code, doc, _ = run(capsys, "period", h)
    assert code == 0 and doc["status"] == "periodic" and doc["certificate"]
    code, doc, _ = run(capsys, "period", h, "--n-max", "1")
    assert code == 2 and doc["status"] == "not-found"


def test_torsion_and_decompose_docs(capsys):
    assert run(capsys, "torsion", J_JSON)[1] == {"order": 2, "torsion": True}
    doc = run(capsys, "decompose", MG2_JSON)[1]
    assert doc["round_trip"] and doc["power"] == 4


def test_input_from_file_and_output_file(tmp_path, capsys):
    src = tmp_path / "m.json"
    src.write_text(J_JSON)
    dst = tmp_path / "out.json"
    assert main(["verify-unitary", str(src), "--output", str(dst)]) == 0
    assert json.loads(dst.read_text()) == {"unitary": True}


def test_exit_codes(capsys):
    with pytest.raises(SystemExit) as e:
        main(["no-such-command"])
    assert e.value.code == 64
    with pytest.raises(SystemExit) as e:
        main(["expand", RATIONAL, "--tolerance", "2"])
    assert e.value.code == 64
    assert main(["expand", "{not json"]) == 64
    code, doc, _ = run(capsys, "expand", '{"u": "1", "v": "7"}')
    assert code == 1 and doc["error"] == "NotOnQuadricError"
    code, doc, _ = run(capsys, "lagrange", J_JSON)
    assert code == 2


def test_qcheck_with_point(capsys):
    toks = ["J", IntegerPoint(G(2), 1), "J", IntegerPoint(G(1, 1), -2)]
    h = fixed_point_of(tokens_to_matrix(toks))
    arg = json.dumps({"word": [{"a": "2", "c": 1}, {"a": "1+i", "c": -2}], "point": point_to_json(h)})
    assert run(capsys, "qcheck", arg)[:2] == (0, {"qproduct": True})
