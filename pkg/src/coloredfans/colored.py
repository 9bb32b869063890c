"""Spherical data, colored cones and colored fans, with axiom validation.

A :class:`SphericalDatum` fixes the ambient rational space, a polyhedral
valuation cone, and a placement map from abstract color labels into the
space.  Colored cones pair a cone with a color subset and are validated
against the four cone axioms:

* C1 -- the cone is generated by the placed colors together with finitely
  many valuation vectors;
* C2 -- the relative interior of the cone meets the valuation cone;
* C3 -- the cone is strictly convex;
* C4 -- no chosen color is placed at the origin.

Colored fans are finite collections of colored cones validated against

* F1 -- closure under colored faces;
* F2 -- a valuation vector lies in the relative interior of at most one
  member's cone.

Colored faces follow the usual convention: a geometric face qualifies when
its relative interior meets the valuation cone, and it inherits exactly the
parent colors placed inside it.  The convention is restated in every fan
validation report.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping, Sequence

from .cones import Cone, cone_from_generators, describe_vectors
from .errors import InvalidColoredConeError, InvalidFanError, UnknownColorError
from .linalg import F0, F1, RatVec, is_zero, vec
from .linprog import LPProblem, lp_feasible
from .reports import ValidationReport

FACE_CONVENTION_NOTE = (
    "colored-face convention: a geometric face is kept when its relative interior "
    "meets the valuation cone, and it inherits exactly the colors placed inside it"
)


@dataclass(frozen=True)
class SphericalDatum:
    """Ambient dimension, valuation cone, color labels, and color placements."""

    dim: int
    valuation_cone: Cone
    colors: tuple[str, ...] = ()
    rho_tilde: Mapping[str, RatVec] = field(default_factory=dict)

    def __post_init__(self):
        if self.valuation_cone.ambient_dim != self.dim:
            raise ValueError("valuation cone does not live in the ambient dimension")
        if len(set(self.colors)) != len(self.colors):
            raise ValueError("color labels must be distinct")
        placements = {name: vec(v) for name, v in self.rho_tilde.items()}
        if set(placements) != set(self.colors):
            raise ValueError("rho_tilde must be defined exactly on the color labels")
        for name, v in placements.items():
            if len(v) != self.dim:
                raise ValueError(f"placement of color {name!r} has length {len(v)}")
        object.__setattr__(self, "colors", tuple(self.colors))
        object.__setattr__(self, "rho_tilde", placements)

    def rho(self, name: str) -> RatVec:
        try:
            return self.rho_tilde[name]
        except KeyError:
            raise UnknownColorError(f"unknown color {name!r}") from None

    def check_colors(self, names: Iterable[str]) -> frozenset[str]:
        out = frozenset(names)
        unknown = out - set(self.colors)
        if unknown:
            raise UnknownColorError(f"unknown colors: {sorted(unknown)}")
        return out


@dataclass(frozen=True)
class ColoredCone:
    """A cone together with the chosen subset of colors."""

    cone: Cone
    colors: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "colors", frozenset(self.colors))

    def key(self):
        return (self.cone, tuple(sorted(self.colors)))

    def describe(self) -> str:
        body = f"rays={describe_vectors(self.cone.rays)}"
        if self.cone.lineality_basis:
            body += f", lineality={describe_vectors(self.cone.lineality_basis)}"
        return f"(cone {body}; colors={sorted(self.colors)})"


@dataclass(frozen=True)
class ColoredFan:
    """A finite collection of colored cones, stored in a fixed order."""

    cones: tuple[ColoredCone, ...]

    def __post_init__(self):
        object.__setattr__(self, "cones", tuple(self.cones))

    def member_keys(self) -> frozenset:
        return frozenset(cc.key() for cc in self.cones)

    def __iter__(self):
        return iter(self.cones)

    def __len__(self):
        return len(self.cones)


def relative_interior_meets(datum: SphericalDatum, cone: Cone, *others: Cone) -> bool:
    """Exact test for relint(cone) [and relint(each other)] meeting the valuation cone.

    Strict facet inequalities are homogenized to >= 1, which is equivalent for
    a cone of constraints.
    """
    ineqs = []
    for body in (cone, *others):
        if body.ambient_dim != datum.dim:
            raise ValueError("cone does not live in the ambient dimension")
        for a in body.inequalities:
            ineqs.append((a, F0))
        for a in body.facet_normals:
            ineqs.append((a, F1))
    for a in datum.valuation_cone.inequalities:
        ineqs.append((a, F0))
    lp = LPProblem(datum.dim, ineq_constraints=tuple(ineqs))
    return lp_feasible(lp) is not None


def validate_colored_cone(datum: SphericalDatum, cc: ColoredCone) -> ValidationReport:
    """Check the cone axioms C1-C4 for one colored cone."""
    colors = datum.check_colors(cc.colors)
    if cc.cone.ambient_dim != datum.dim:
        raise ValueError("colored cone does not live in the ambient dimension")
    report = ValidationReport(subject=f"colored cone {cc.describe()}")

    intersection = cc.cone.intersect(datum.valuation_cone)
    gens = [datum.rho(name) for name in sorted(colors)]
    gens.extend(intersection.generators())
    regenerated = cone_from_generators(gens, datum.dim)
    report.record(
        "C1",
        regenerated == cc.cone,
        "the placed colors and the valuation part of the cone generate "
        f"{describe_vectors(regenerated.rays)}, not the stored cone",
    )
    report.record(
        "C2",
        relative_interior_meets(datum, cc.cone),
        "the relative interior misses the valuation cone",
    )
    report.record("C3", cc.cone.is_strictly_convex, "the cone contains a line")
    zero_colors = sorted(name for name in colors if is_zero(datum.rho(name)))
    report.record(
        "C4", not zero_colors, f"colors placed at the origin: {zero_colors}"
    )
    return report


def colored_faces(datum: SphericalDatum, cc: ColoredCone) -> tuple[ColoredCone, ...]:
    """All colored faces of a validated colored cone, the cone itself included."""
    report = validate_colored_cone(datum, cc)
    if not report.passed:
        raise InvalidColoredConeError("; ".join(report.reasons) or "axioms failed")
    out = []
    for face in cc.cone.faces():
        if not relative_interior_meets(datum, face):
            continue
        inherited = frozenset(
            name for name in cc.colors if face.contains(datum.rho(name))
        )
        out.append(ColoredCone(face, inherited))
    return tuple(out)


def member_sort_key(cc: ColoredCone):
    cone = cc.cone
    return (cone.dim, cone.rays, cone.lineality_basis, tuple(sorted(cc.colors)))


def fan_from_maximal_cones(
    datum: SphericalDatum, maximal: Iterable[ColoredCone]
) -> ColoredFan:
    """Close the given colored cones under colored faces, deduplicated and sorted."""
    members: dict = {}
    for cc in maximal:
        for face in colored_faces(datum, cc):
            members.setdefault(face.key(), face)
    return ColoredFan(tuple(sorted(members.values(), key=member_sort_key)))


def validate_colored_fan(datum: SphericalDatum, fan: ColoredFan) -> ValidationReport:
    """Check C1-C4 on every member plus the fan axioms F1 and F2."""
    report = ValidationReport(subject=f"colored fan with {len(fan)} cones")
    report.notes.append(FACE_CONVENTION_NOTE)
    # members are a set: exact duplicates in the stored tuple collapse here
    members: dict = {}
    for cc in fan:
        members.setdefault(cc.key(), cc)
    distinct = list(members.values())
    cone_reports = []
    for i, cc in enumerate(distinct):
        sub = validate_colored_cone(datum, cc)
        cone_reports.append(sub)
        report.merge(sub, f"cone[{i}]")

    f1_ok = True
    for i, (cc, sub) in enumerate(zip(distinct, cone_reports)):
        if not sub.passed:
            continue
        for face in colored_faces(datum, cc):
            if face.key() not in members:
                f1_ok = False
                report.reasons.append(
                    f"F1: colored face {face.describe()} of cone[{i}] is not a member"
                )
    report.checks["F1"] = f1_ok

    f2_ok = True
    for i in range(len(distinct)):
        for j in range(i + 1, len(distinct)):
            if relative_interior_meets(datum, distinct[i].cone, distinct[j].cone):
                f2_ok = False
                report.reasons.append(
                    f"F2: {distinct[i].describe()} and {distinct[j].describe()} both "
                    "hold a valuation vector in their relative interiors"
                )
    report.checks["F2"] = f2_ok
    return report


def locate(datum: SphericalDatum, fan: ColoredFan, v: Sequence) -> ColoredCone | None:
    """The unique member whose cone holds v in its relative interior, if any.

    ``v`` must lie in the valuation cone; anything else is an error rather
    than a miss.
    """
    w = vec(v)
    if not datum.valuation_cone.contains(w):
        raise ValueError(f"vector {w} is outside the valuation cone")
    hits = [cc for cc in fan if cc.cone.in_relative_interior(w)]
    if len(hits) > 1:
        raise InvalidFanError(
            "multiple cones hold the vector in their relative interior; fan violates F2"
        )
    return hits[0] if hits else None
