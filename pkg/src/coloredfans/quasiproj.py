"""Quasiprojectivity of a colored fan as an exact LP feasibility problem.

A fan is quasiprojective when each maximal cone Z carries a linear form l_Z
such that (1) the forms of two maximal cones agree on their intersection and
(2) for distinct maximal cones Z, Z' the difference l_Z - l_Z' is strictly
positive on the valuation vectors interior to Z.  The strict condition is
reduced to finitely many rows: nonnegativity on the rays of Z intersected
with the valuation cone plus value >= 1 at one relative-interior witness,
which is equivalent by homogeneity and convexity.

Variables are assigned to maximal cones only; faces inherit their parents'
forms through condition (1), so quantifying the strict condition over
face/parent pairs would contradict it and is deliberately avoided.
"""

from __future__ import annotations

from dataclasses import dataclass

from .colored import ColoredCone, ColoredFan, SphericalDatum, colored_faces, validate_colored_fan
from .errors import InvalidFanError
from .linalg import F0, F1, RatVec, neg
from .linprog import LPProblem, lp_feasible


@dataclass(frozen=True)
class SupportForm:
    """The linear form attached to one maximal colored cone."""

    cone: ColoredCone
    coefficients: RatVec


@dataclass(frozen=True)
class QuasiprojectivityResult:
    verdict: bool
    witness: tuple[SupportForm, ...] | None


def maximal_members(datum: SphericalDatum, fan: ColoredFan) -> tuple[ColoredCone, ...]:
    """Members that are not proper colored faces of another member, in fan order."""
    proper_face_keys = set()
    for cc in fan:
        for face in colored_faces(datum, cc):
            if face.key() != cc.key():
                proper_face_keys.add(face.key())
    return tuple(cc for cc in fan if cc.key() not in proper_face_keys)


def _require_valid(datum: SphericalDatum, fan: ColoredFan) -> None:
    report = validate_colored_fan(datum, fan)
    if not report.passed:
        raise InvalidFanError("; ".join(report.reasons) or "fan failed validation")


def build_support_lp(
    datum: SphericalDatum, fan: ColoredFan, check: bool = True
) -> LPProblem:
    """Assemble the support-form feasibility LP for a validated fan.

    Variables are the n coefficients of one linear form per maximal cone, in
    fan order.  Constraint blocks, in deterministic order:

    * condition (1): for every unordered pair of maximal cones and every
      generator g of their intersection, (l_Z - l_Z') . g = 0;
    * condition (2): for every ordered pair (Z, Z'), with K the intersection
      of Z's cone with the valuation cone, (l_Z - l_Z') . g >= 0 on the
      generators of K and (l_Z - l_Z') . w >= 1 at w = interior_point(K).
    """
    if check:
        _require_valid(datum, fan)
    maximal = maximal_members(datum, fan)
    n = datum.dim
    num_vars = n * len(maximal)

    def difference_row(k: int, l: int, g: RatVec) -> RatVec:
        row = [F0] * num_vars
        for t in range(n):
            row[n * k + t] += g[t]
            row[n * l + t] -= g[t]
        return tuple(row)

    eqs = []
    for k in range(len(maximal)):
        for l in range(k + 1, len(maximal)):
            shared = maximal[k].cone.intersect(maximal[l].cone)
            for g in shared.rays + shared.lineality_basis:
                eqs.append((difference_row(k, l, g), F0))
    ineqs = []
    for k, zk in enumerate(maximal):
        valuation_part = zk.cone.intersect(datum.valuation_cone)
        witness = valuation_part.interior_point()
        for l in range(len(maximal)):
            if l == k:
                continue
            for g in valuation_part.rays:
                ineqs.append((difference_row(k, l, g), F0))
            for b in valuation_part.lineality_basis:
                ineqs.append((difference_row(k, l, b), F0))
                ineqs.append((difference_row(k, l, neg(b)), F0))
            ineqs.append((difference_row(k, l, witness), F1))
    return LPProblem(num_vars, tuple(eqs), tuple(ineqs))


def is_quasiprojective(
    datum: SphericalDatum, fan: ColoredFan, check: bool = True
) -> QuasiprojectivityResult:
    """Decide quasiprojectivity; on success return re-verified support forms."""
    if check:
        _require_valid(datum, fan)
    maximal = maximal_members(datum, fan)
    lp = build_support_lp(datum, fan, check=False)
    assignment = lp_feasible(lp)
    if assignment is None:
        return QuasiprojectivityResult(False, None)
    if not lp.satisfied_by(assignment):
        raise AssertionError("internal error: support forms failed re-verification")
    n = datum.dim
    forms = tuple(
        SupportForm(cc, assignment[n * k : n * (k + 1)])
        for k, cc in enumerate(maximal)
    )
    return QuasiprojectivityResult(True, forms)
