import json
from pathlib import Path

import pytest

from coloredfans import fileio
from coloredfans.colored import fan_from_maximal_cones
from coloredfans.cones import cone_from_generators
from coloredfans.errors import SchemaError, SemanticError

FIXTURES = Path(__file__).parent / "fixtures"


def test_parse_datum_roundtrip():
    text = (FIXTURES / "datum_rank1.json").read_text()
    datum = fileio.parse_datum(json.loads(text))
    assert datum.dim == 1
    assert datum.colors == ("D+", "D-")
    assert fileio.serialize_datum(datum) == text
    reparsed = fileio.parse_datum(json.loads(fileio.serialize_datum(datum)))
    assert fileio.serialize_datum(reparsed) == text


def test_parse_fan_roundtrip():
    datum = fileio.parse_datum(json.loads((FIXTURES / "datum_toric2.json").read_text()))
    text = (FIXTURES / "fan_p1xp1.json").read_text()
    raw = fileio.parse_fan(json.loads(text), datum)
    assert len(raw) == 4
    fan = fan_from_maximal_cones(datum, raw)
    serialized = fileio.serialize_fan(datum, fan)
    again = fan_from_maximal_cones(datum, fileio.parse_fan(json.loads(serialized), datum))
    assert fileio.serialize_fan(datum, again) == serialized


def test_p1_files_give_two_maximal_cones_closing_to_three_members():
    datum = fileio.parse_datum(json.loads((FIXTURES / "datum_p1.json").read_text()))
    assert datum.dim == 1 and datum.colors == ()
    raw = fileio.parse_fan(json.loads((FIXTURES / "fan_p1.json").read_text()), datum)
    assert len(raw) == 2
    fan = fan_from_maximal_cones(datum, raw)
    assert len(fan) == 3


def test_action_roundtrip():
    datum = fileio.parse_datum(json.loads((FIXTURES / "datum_toric2.json").read_text()))
    text = (FIXTURES / "action_swap.json").read_text()
    action = fileio.parse_action(json.loads(text), datum)
    assert len(action.generators) == 1
    assert fileio.serialize_action(action) == text


def test_morphism_roundtrip():
    datum = fileio.parse_datum(json.loads((FIXTURES / "datum_toric2.json").read_text()))
    text = (FIXTURES / "morphism_projection.json").read_text()
    morphism, datum_dst, target_raw = fileio.parse_morphism(json.loads(text), datum)
    target_fan = fan_from_maximal_cones(datum_dst, target_raw)
    assert fileio.serialize_morphism(morphism, datum_dst, target_fan) == text


def test_rationals_rejected():
    obj = {"dim": 1, "valuation_cone": {"generators": [[0.5]]}, "colors": []}
    with pytest.raises(SchemaError):
        fileio.parse_datum(obj)
    obj = {"dim": 1, "valuation_cone": {"generators": [[True]]}, "colors": []}
    with pytest.raises(SchemaError):
        fileio.parse_datum(obj)


def test_unknown_color_in_fan_rejected():
    datum = fileio.parse_datum(json.loads((FIXTURES / "datum_toric2.json").read_text()))
    obj = {"cones": [{"rays": [[1, 0]], "colors": ["D9"]}]}
    with pytest.raises(SchemaError, match="D9"):
        fileio.parse_fan(obj, datum)


def test_duplicate_color_names_rejected():
    obj = {
        "dim": 1,
        "valuation_cone": {"generators": []},
        "colors": [{"name": "D", "rho": [1]}, {"name": "D", "rho": [2]}],
    }
    with pytest.raises(SchemaError, match="duplicate"):
        fileio.parse_datum(obj)


def test_wrong_vector_length_rejected():
    obj = {"dim": 2, "valuation_cone": {"generators": [[1]]}, "colors": []}
    with pytest.raises(SchemaError):
        fileio.parse_datum(obj)


def test_unknown_keys_rejected():
    obj = {"dim": 1, "valuation_cone": {"generators": []}, "colours": []}
    with pytest.raises(SchemaError):
        fileio.parse_datum(obj)


def test_parse_inputs_loads_everything_validated():
    inputs = fileio.parse_inputs(
        FIXTURES / "datum_toric2.json",
        FIXTURES / "fan_quadrant.json",
        FIXTURES / "action_swap.json",
        FIXTURES / "morphism_projection.json",
    )
    assert inputs.fan is not None and len(inputs.fan) == 4
    assert inputs.action is not None
    assert inputs.morphism is not None and inputs.target_datum.dim == 1
    assert inputs.reports["fan"].passed and inputs.reports["action"].passed


def test_parse_inputs_rejects_invalid_fan(tmp_path):
    fan = tmp_path / "fan.json"
    fan.write_text(json.dumps({"cones": [{"rays": [[1, 0], [-1, 0]], "colors": []}]}))
    with pytest.raises(SemanticError, match="C3"):
        fileio.parse_inputs(FIXTURES / "datum_toric2.json", fan)


def test_non_integral_data_not_serializable():
    from coloredfans.colored import SphericalDatum
    from fractions import Fraction

    datum = SphericalDatum(
        1,
        cone_from_generators([(1,), (-1,)], 1),
        ("D",),
        {"D": (Fraction(1, 2),)},
    )
    with pytest.raises(SemanticError):
        fileio.serialize_datum(datum)
