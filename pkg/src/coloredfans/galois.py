"""Finite Galois-type actions on spherical data and k-form existence checks.

A group element acts on the ambient space by a lattice automorphism (an
integer matrix with integer inverse) and on the color labels by a
permutation, compatibly with the placements and stabilizing the valuation
cone.  The profinite group itself is never materialized: the caller supplies
generators of the relevant finite quotient and the closure is computed with
a size cap.

``has_k_form`` combines the two classification ingredients: (a) invariance
of the fan under the action, and (b) quasiprojectivity of every member's
orbit fan.  Invariance alone classifies the embedding among algebraic spaces
over the base field; (b) is the extra condition for a scheme form, stated
over a perfect base field.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Mapping

from .colored import (
    ColoredCone,
    ColoredFan,
    SphericalDatum,
    colored_faces,
    member_sort_key,
    relative_interior_meets,
    validate_colored_cone,
    validate_colored_fan,
)
from .errors import (
    ClosureCapError,
    InvalidColoredConeError,
    InvalidFanError,
    OrbitOverlapError,
)
from .linalg import RatMat, identity, invert, mat, matmul, matvec
from .quasiproj import is_quasiprojective
from .reports import ValidationReport

PERFECT_FIELD_NOTE = (
    "scheme-form criterion: stated over a perfect base field; "
    "fan invariance alone classifies forms among algebraic spaces"
)


@dataclass(frozen=True)
class GroupElement:
    """A lattice automorphism paired with a permutation of the color labels."""

    matrix: RatMat
    color_perm: tuple[tuple[str, str], ...] = ()

    @staticmethod
    def make(matrix, color_perm: Mapping[str, str] | None = None) -> "GroupElement":
        m = mat(matrix)
        perm = tuple(sorted((color_perm or {}).items()))
        return GroupElement(m, perm)

    @property
    def perm_map(self) -> dict[str, str]:
        return dict(self.color_perm)

    def apply_color(self, name: str) -> str:
        return self.perm_map.get(name, name)

    def compose(self, other: "GroupElement") -> "GroupElement":
        """self after other."""
        perm = self.perm_map
        combined = {c: perm.get(v, v) for c, v in other.color_perm}
        for c, v in perm.items():
            combined.setdefault(c, v)
        return GroupElement(matmul(self.matrix, other.matrix), tuple(sorted(combined.items())))


def identity_element(dim: int, colors: Iterable[str] = ()) -> GroupElement:
    return GroupElement(identity(dim), tuple(sorted((c, c) for c in colors)))


@dataclass(frozen=True)
class GroupAction:
    """Generators of a finite group acting on a spherical datum."""

    dim: int
    colors: tuple[str, ...]
    generators: tuple[GroupElement, ...]
    _cache: dict = field(default_factory=dict, compare=False, repr=False)

    def elements(self, cap: int = 100000) -> tuple[GroupElement, ...]:
        """Closure of the generators under composition (identity included).

        A finite closure of invertible elements automatically contains the
        inverses.  Raises :class:`ClosureCapError` if the closure exceeds
        ``cap`` elements.
        """
        cached = self._cache.get("elements")
        if cached is not None:
            return cached
        ident = identity_element(self.dim, self.colors)
        seen = {ident: None}
        frontier = [ident]
        for g in self.generators:
            if g not in seen:
                seen[g] = None
                frontier.append(g)
        while frontier:
            new_frontier = []
            for g in self.generators:
                for h in frontier:
                    gh = g.compose(h)
                    if gh not in seen:
                        seen[gh] = None
                        new_frontier.append(gh)
                        if len(seen) > cap:
                            raise ClosureCapError(
                                f"group closure exceeded the cap of {cap} elements"
                            )
            frontier = new_frontier
        out = tuple(seen)
        self._cache["elements"] = out
        return out


def action_from_generators(
    datum: SphericalDatum, generators: Iterable[GroupElement]
) -> GroupAction:
    return GroupAction(datum.dim, datum.colors, tuple(generators))


def validate_action(
    datum: SphericalDatum, action: GroupAction, cap: int = 100000
) -> ValidationReport:
    """Check each generator: lattice automorphism, placement equivariance,
    valuation-cone stability, and color-permutation sanity; then close."""
    report = ValidationReport(subject=f"group action with {len(action.generators)} generators")
    all_ok = True
    for i, g in enumerate(action.generators):
        label = f"generator[{i}]"
        square = len(g.matrix) == datum.dim and all(len(r) == datum.dim for r in g.matrix)
        integral = square and all(x.denominator == 1 for row in g.matrix for x in row)
        inverse = invert(g.matrix) if square else None
        inverse_integral = inverse is not None and all(
            x.denominator == 1 for row in inverse for x in row
        )
        ok = report.record(
            f"{label}.lattice_automorphism",
            integral and inverse_integral,
            "not a lattice automorphism (needs integer entries and an integer inverse)",
        )
        all_ok &= ok

        perm = g.perm_map
        domain_ok = set(perm) == set(datum.colors) and set(perm.values()) == set(datum.colors)
        ok = report.record(
            f"{label}.color_permutation",
            domain_ok,
            "color permutation is not a bijection of the datum's colors",
        )
        all_ok &= ok

        if square and domain_ok:
            bad = [
                name
                for name in datum.colors
                if matvec(g.matrix, datum.rho(name)) != datum.rho(perm[name])
            ]
            ok = report.record(
                f"{label}.equivariance",
                not bad,
                f"placement map is not equivariant at colors {bad}",
            )
            all_ok &= ok
        else:
            all_ok = False

        if square:
            stable = datum.valuation_cone.image(g.matrix) == datum.valuation_cone
            ok = report.record(
                f"{label}.valuation_stable",
                stable,
                "the valuation cone is not stable under the matrix",
            )
            all_ok &= ok

    if all_ok:
        try:
            order = len(action.elements(cap=cap))
        except ClosureCapError as exc:
            report.record("closure", False, str(exc))
        else:
            report.record("closure", True)
            report.notes.append(f"group order {order}")
    else:
        report.record("closure", False, "skipped: a generator failed validation")
    return report


def apply_element(g: GroupElement, cc: ColoredCone) -> ColoredCone:
    return ColoredCone(cc.cone.image(g.matrix), frozenset(g.apply_color(c) for c in cc.colors))


def is_fan_invariant(datum: SphericalDatum, action: GroupAction, fan: ColoredFan) -> bool:
    """True when every group element permutes the fan's members."""
    keys = fan.member_keys()
    return all(
        apply_element(g, cc).key() in keys for g in action.elements() for cc in fan
    )


def _invariance_offender(
    datum: SphericalDatum, action: GroupAction, fan: ColoredFan
) -> ColoredCone | None:
    keys = fan.member_keys()
    for g in action.elements():
        for cc in fan:
            if apply_element(g, cc).key() not in keys:
                return cc
    return None


def orbit_subfan(
    datum: SphericalDatum, action: GroupAction, cc: ColoredCone
) -> ColoredFan:
    """The fan generated by the orbit of one colored cone: orbit images closed
    under colored faces.

    Raises :class:`OrbitOverlapError` when two orbit cones share a valuation
    vector in their relative interiors; no invariant fan can contain the
    orbit in that case.
    """
    base = validate_colored_cone(datum, cc)
    if not base.passed:
        raise InvalidColoredConeError("; ".join(base.reasons) or "axioms failed")
    members: dict = {}
    for g in action.elements():
        moved = apply_element(g, cc)
        for face in colored_faces(datum, moved):
            members.setdefault(face.key(), face)
    ordered = sorted(members.values(), key=member_sort_key)
    for i in range(len(ordered)):
        for j in range(i + 1, len(ordered)):
            if relative_interior_meets(datum, ordered[i].cone, ordered[j].cone):
                raise OrbitOverlapError(
                    f"orbit cones {ordered[i].describe()} and {ordered[j].describe()} "
                    "overlap inside the valuation cone"
                )
    return ColoredFan(tuple(ordered))


@dataclass(frozen=True)
class KFormResult:
    verdict: bool
    invariant: bool
    orbits_quasiprojective: bool | None
    reasons: tuple[str, ...] = ()
    notes: tuple[str, ...] = (PERFECT_FIELD_NOTE,)


def has_k_form(
    datum: SphericalDatum,
    action: GroupAction,
    fan: ColoredFan,
    check: bool = True,
) -> KFormResult:
    """Decide k-form existence: (a) the fan is invariant under the action and
    (b) every member's orbit fan is quasiprojective.

    A member whose orbit fan sits inside an already verified orbit fan is
    skipped: a subfan of a quasiprojective fan is quasiprojective (it carves
    out an open invariant piece), so the check would be redundant.
    """
    if check:
        fan_report = validate_colored_fan(datum, fan)
        if not fan_report.passed:
            raise InvalidFanError("; ".join(fan_report.reasons) or "fan failed validation")
        action_report = validate_action(datum, action)
        if not action_report.passed:
            raise InvalidFanError(
                "; ".join(action_report.reasons) or "action failed validation"
            )

    offender = _invariance_offender(datum, action, fan)
    if offender is not None:
        return KFormResult(
            False,
            invariant=False,
            orbits_quasiprojective=None,
            reasons=(
                "(a) fan is not invariant under the Galois action; offending cone: "
                f"{offender.describe()}",
            ),
        )

    verified: list[frozenset] = []
    members = sorted(fan, key=lambda cc: -cc.cone.dim)
    for cc in members:
        try:
            orbit = orbit_subfan(datum, action, cc)
        except OrbitOverlapError as exc:
            return KFormResult(
                False, invariant=True, orbits_quasiprojective=False, reasons=(f"(b) {exc}",)
            )
        orbit_keys = orbit.member_keys()
        if any(orbit_keys <= done for done in verified):
            continue
        result = is_quasiprojective(datum, orbit, check=False)
        if not result.verdict:
            return KFormResult(
                False,
                invariant=True,
                orbits_quasiprojective=False,
                reasons=(f"(b) the orbit fan of {cc.describe()} is not quasiprojective",),
            )
        verified.append(orbit_keys)
    return KFormResult(True, invariant=True, orbits_quasiprojective=True)
