"""JSON file formats, validated loading, and canonical serialization.

All vectors and matrices in files are integer-valued: rays and valuation
generators are scale-invariant, and the remaining matrices are lattice maps,
so integer input is lossless while internal arithmetic stays rational.
Parsing is strict: non-integers (including booleans) are schema errors.

:func:`parse_inputs` is the one-stop loader: it parses whatever paths it is
given, applies the face closure to fans, validates everything, and raises
:class:`~coloredfans.errors.SemanticError` (exit code 2 at the CLI) on any
structural violation, naming the failed check.

Serialization is canonical and deterministic; ``parse`` then ``serialize``
reproduces a canonically ordered file byte for byte.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path

from .colored import (
    ColoredCone,
    ColoredFan,
    SphericalDatum,
    fan_from_maximal_cones,
    member_sort_key,
    validate_colored_cone,
    validate_colored_fan,
)
from .cones import Cone, cone_from_generators
from .errors import InputFileError, SchemaError, SemanticError
from .galois import GroupAction, GroupElement, action_from_generators, validate_action
from .linalg import neg
from .monoid import MorphismData, validate_morphism_data
from .quasiproj import maximal_members
from .reports import ValidationReport


def _require_int(x, where: str) -> int:
    if type(x) is not int:
        raise SchemaError(f"{where}: expected an integer, got {x!r}")
    return x


def _int_vector(obj, length: int, where: str) -> tuple[int, ...]:
    if not isinstance(obj, list) or len(obj) != length:
        raise SchemaError(f"{where}: expected a list of {length} integers")
    return tuple(_require_int(x, where) for x in obj)


def _int_matrix(obj, nrows: int, ncols: int, where: str) -> tuple[tuple[int, ...], ...]:
    if not isinstance(obj, list) or len(obj) != nrows:
        raise SchemaError(f"{where}: expected {nrows} rows")
    return tuple(_int_vector(row, ncols, f"{where}[{i}]") for i, row in enumerate(obj))


def _expect_keys(obj, required: tuple[str, ...], optional: tuple[str, ...], where: str) -> dict:
    if not isinstance(obj, dict):
        raise SchemaError(f"{where}: expected an object")
    missing = [k for k in required if k not in obj]
    if missing:
        raise SchemaError(f"{where}: missing keys {missing}")
    extra = [k for k in obj if k not in required and k not in optional]
    if extra:
        raise SchemaError(f"{where}: unknown keys {extra}")
    return obj


def load_json(path) -> object:
    p = Path(path)
    if not p.is_file():
        raise InputFileError(f"no such file: {p}")
    try:
        return json.loads(p.read_text(encoding="utf-8"))
    except json.JSONDecodeError as exc:
        raise SchemaError(f"{p}: not valid JSON ({exc})") from None


def parse_datum(obj, where: str = "datum") -> SphericalDatum:
    data = _expect_keys(obj, ("dim", "valuation_cone"), ("colors",), where)
    dim = _require_int(data["dim"], f"{where}.dim")
    if dim < 1:
        raise SchemaError(f"{where}.dim: must be positive")
    vc = _expect_keys(data["valuation_cone"], ("generators",), (), f"{where}.valuation_cone")
    gens_obj = vc["generators"]
    if not isinstance(gens_obj, list):
        raise SchemaError(f"{where}.valuation_cone.generators: expected a list")
    gens = [
        _int_vector(g, dim, f"{where}.valuation_cone.generators[{i}]")
        for i, g in enumerate(gens_obj)
    ]
    names: list[str] = []
    rho: dict[str, tuple[int, ...]] = {}
    for i, entry in enumerate(data.get("colors", [])):
        cobj = _expect_keys(entry, ("name", "rho"), (), f"{where}.colors[{i}]")
        name = cobj["name"]
        if not isinstance(name, str) or not name:
            raise SchemaError(f"{where}.colors[{i}].name: expected a nonempty string")
        if name in rho:
            raise SchemaError(f"{where}.colors[{i}]: duplicate color name {name!r}")
        names.append(name)
        rho[name] = _int_vector(cobj["rho"], dim, f"{where}.colors[{i}].rho")
    return SphericalDatum(dim, cone_from_generators(gens, dim), tuple(names), rho)


def parse_fan(obj, datum: SphericalDatum, where: str = "fan") -> list[ColoredCone]:
    """Schema-level parse of the maximal cones; no axiom validation here."""
    data = _expect_keys(obj, ("cones",), (), where)
    if not isinstance(data["cones"], list):
        raise SchemaError(f"{where}.cones: expected a list")
    out = []
    for i, entry in enumerate(data["cones"]):
        cobj = _expect_keys(entry, ("rays",), ("colors",), f"{where}.cones[{i}]")
        if not isinstance(cobj["rays"], list):
            raise SchemaError(f"{where}.cones[{i}].rays: expected a list")
        rays = [
            _int_vector(r, datum.dim, f"{where}.cones[{i}].rays[{j}]")
            for j, r in enumerate(cobj["rays"])
        ]
        colors = cobj.get("colors", [])
        if not isinstance(colors, list) or not all(isinstance(c, str) for c in colors):
            raise SchemaError(f"{where}.cones[{i}].colors: expected a list of names")
        unknown = sorted(set(colors) - set(datum.colors))
        if unknown:
            raise SchemaError(f"{where}.cones[{i}]: unknown colors {unknown}")
        out.append(ColoredCone(cone_from_generators(rays, datum.dim), frozenset(colors)))
    return out


def parse_action(obj, datum: SphericalDatum, where: str = "action") -> GroupAction:
    data = _expect_keys(obj, ("generators",), (), where)
    if not isinstance(data["generators"], list):
        raise SchemaError(f"{where}.generators: expected a list")
    gens = []
    for i, entry in enumerate(data["generators"]):
        gobj = _expect_keys(entry, ("matrix",), ("color_perm",), f"{where}.generators[{i}]")
        matrix = _int_matrix(
            gobj["matrix"], datum.dim, datum.dim, f"{where}.generators[{i}].matrix"
        )
        perm_obj = gobj.get("color_perm", {})
        if not isinstance(perm_obj, dict) or not all(
            isinstance(k, str) and isinstance(v, str) for k, v in perm_obj.items()
        ):
            raise SchemaError(f"{where}.generators[{i}].color_perm: expected a name map")
        perm = {c: perm_obj.get(c, c) for c in datum.colors}
        unknown = sorted(set(perm_obj) - set(datum.colors))
        if unknown:
            raise SchemaError(f"{where}.generators[{i}].color_perm: unknown colors {unknown}")
        gens.append(GroupElement.make(matrix, perm))
    return action_from_generators(datum, gens)


def parse_morphism(obj, datum_src: SphericalDatum, where: str = "morphism"):
    """Returns (MorphismData, target datum, raw target maximal cones)."""
    data = _expect_keys(
        obj,
        ("matrix", "target_datum", "target_fan"),
        ("color_map", "dominant_colors"),
        where,
    )
    datum_dst = parse_datum(data["target_datum"], f"{where}.target_datum")
    matrix = _int_matrix(data["matrix"], datum_dst.dim, datum_src.dim, f"{where}.matrix")
    cmap_obj = data.get("color_map", {})
    if not isinstance(cmap_obj, dict) or not all(
        isinstance(k, str) and isinstance(v, str) for k, v in cmap_obj.items()
    ):
        raise SchemaError(f"{where}.color_map: expected a name map")
    dom_obj = data.get("dominant_colors", [])
    if not isinstance(dom_obj, list) or not all(isinstance(c, str) for c in dom_obj):
        raise SchemaError(f"{where}.dominant_colors: expected a list of names")
    morphism = MorphismData.make(matrix, cmap_obj, dom_obj)
    target_raw = parse_fan(data["target_fan"], datum_dst, f"{where}.target_fan")
    return morphism, datum_dst, target_raw


# -- validated one-stop loading ----------------------------------------------


@dataclass
class ParsedInputs:
    """Validated in-memory objects plus the validation reports behind them."""

    datum: SphericalDatum
    fan: ColoredFan | None = None
    action: GroupAction | None = None
    morphism: MorphismData | None = None
    target_datum: SphericalDatum | None = None
    target_fan: ColoredFan | None = None
    reports: dict[str, ValidationReport] = field(default_factory=dict)


def validated_fan(
    datum: SphericalDatum, raw: list[ColoredCone], where: str = "fan"
) -> tuple[ColoredFan, ValidationReport]:
    """Close raw maximal cones under colored faces and validate the result.

    Raises :class:`SemanticError` naming the failed axiom when a member or
    the closed fan is invalid.
    """
    for i, cc in enumerate(raw):
        report = validate_colored_cone(datum, cc)
        if not report.passed:
            failed = [name for name, ok in report.checks.items() if not ok]
            raise SemanticError(
                f"{where}.cones[{i}] violates {', '.join(failed)}: "
                + "; ".join(report.reasons)
            )
    fan = fan_from_maximal_cones(datum, raw)
    report = validate_colored_fan(datum, fan)
    if not report.passed:
        failed = [name for name, ok in report.checks.items() if not ok]
        raise SemanticError(f"{where} violates {', '.join(failed)}: " + "; ".join(report.reasons))
    return fan, report


def parse_inputs(
    datum_path, fan_path=None, action_path=None, morphism_path=None
) -> ParsedInputs:
    """Load and fully validate a datum plus optional fan, action, morphism."""
    datum = parse_datum(load_json(datum_path))
    out = ParsedInputs(datum)
    if fan_path is not None:
        raw = parse_fan(load_json(fan_path), datum)
        out.fan, out.reports["fan"] = validated_fan(datum, raw)
    if action_path is not None:
        action = parse_action(load_json(action_path), datum)
        report = validate_action(datum, action)
        if not report.passed:
            raise SemanticError("action is invalid: " + "; ".join(report.reasons))
        out.action = action
        out.reports["action"] = report
    if morphism_path is not None:
        morphism, datum_dst, target_raw = parse_morphism(load_json(morphism_path), datum)
        target_fan, target_report = validated_fan(datum_dst, target_raw, "morphism.target_fan")
        validate_morphism_data(datum, datum_dst, morphism)
        out.morphism = morphism
        out.target_datum = datum_dst
        out.target_fan = target_fan
        out.reports["target_fan"] = target_report
    return out


# -- canonical serialization ------------------------------------------------


def _as_int(x: Fraction, where: str) -> int:
    if x.denominator != 1:
        raise SemanticError(f"{where}: value {x} is not integral; files store integers only")
    return x.numerator


def _vector_out(v, where: str) -> list[int]:
    return [_as_int(x, where) for x in v]


def _cone_generators_out(cone: Cone, where: str) -> list[list[int]]:
    gens = [_vector_out(r, where) for r in cone.rays]
    for b in cone.lineality_basis:
        gens.append(_vector_out(b, where))
        gens.append(_vector_out(neg(b), where))
    return gens


def _emit(obj, indent: int) -> str:
    """Canonical pretty form: 2-space indents, integer vectors on one line."""
    pad = " " * indent
    inner = " " * (indent + 2)
    if isinstance(obj, dict):
        if not obj:
            return "{}"
        parts = [f"{inner}{json.dumps(k)}: {_emit(v, indent + 2)}" for k, v in obj.items()]
        return "{\n" + ",\n".join(parts) + f"\n{pad}}}"
    if isinstance(obj, list):
        if not obj:
            return "[]"
        if all(type(x) is int for x in obj):
            return "[" + ", ".join(str(x) for x in obj) + "]"
        parts = [f"{inner}{_emit(v, indent + 2)}" for v in obj]
        return "[\n" + ",\n".join(parts) + f"\n{pad}]"
    return json.dumps(obj)


def _dump(obj) -> str:
    return _emit(obj, 0) + "\n"


def datum_to_obj(datum: SphericalDatum) -> dict:
    return {
        "dim": datum.dim,
        "valuation_cone": {
            "generators": _cone_generators_out(datum.valuation_cone, "valuation_cone")
        },
        "colors": [
            {"name": name, "rho": _vector_out(datum.rho(name), f"rho({name})")}
            for name in datum.colors
        ],
    }


def serialize_datum(datum: SphericalDatum) -> str:
    return _dump(datum_to_obj(datum))


def fan_to_obj(datum: SphericalDatum, fan: ColoredFan) -> dict:
    cones = []
    for cc in sorted(maximal_members(datum, fan), key=member_sort_key):
        if cc.cone.lineality_basis:
            raise SemanticError("fan members must be strictly convex to serialize")
        cones.append(
            {
                "rays": [_vector_out(r, "fan ray") for r in cc.cone.rays],
                "colors": sorted(cc.colors),
            }
        )
    return {"cones": cones}


def serialize_fan(datum: SphericalDatum, fan: ColoredFan) -> str:
    return _dump(fan_to_obj(datum, fan))


def action_to_obj(action: GroupAction) -> dict:
    return {
        "generators": [
            {
                "matrix": [_vector_out(row, "action matrix") for row in g.matrix],
                "color_perm": {c: v for c, v in g.color_perm},
            }
            for g in action.generators
        ]
    }


def serialize_action(action: GroupAction) -> str:
    return _dump(action_to_obj(action))


def serialize_morphism(
    m: MorphismData, datum_dst: SphericalDatum, fan_dst: ColoredFan
) -> str:
    obj = {
        "matrix": [_vector_out(row, "morphism matrix") for row in m.matrix],
        "color_map": {c: v for c, v in m.color_map},
        "dominant_colors": sorted(m.dominant_colors),
        "target_datum": datum_to_obj(datum_dst),
        "target_fan": fan_to_obj(datum_dst, fan_dst),
    }
    return _dump(obj)
