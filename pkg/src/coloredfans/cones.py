"""Rational polyhedral cones with paired generator/inequality descriptions.

Every cone eagerly stores both descriptions, converted with an exact
incremental double description pass, and every stored field is canonical:

* ``lineality_basis`` -- primitive echelon basis of the largest linear
  subspace inside the cone;
* ``rays`` -- primitive representatives of the extreme rays modulo the
  lineality space, reduced against the lineality basis and sorted;
* ``span_equations`` -- primitive echelon basis of the functionals vanishing
  on the whole cone (empty exactly when the cone spans the ambient space);
* ``facet_normals`` -- primitive representatives of the facet-defining
  functionals modulo the span equations, sorted.

Two cones are equal as point sets exactly when these fields compare equal,
so equality and hashing are structural.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence

from .linalg import (
    RatMat,
    RatVec,
    add,
    dot,
    is_zero,
    neg,
    primitive,
    rank,
    reduce_mod_subspace,
    scale,
    sub,
    subspace_basis,
    vec,
    zero_vec,
)


def _dd(rows: Sequence[RatVec], dim: int) -> tuple[list[RatVec], list[RatVec]]:
    """Double description of {x : r . x >= 0 for r in rows}.

    Returns (lineality basis, extreme rays modulo the lineality space),
    inserting one inequality at a time.  Adjacency of candidate ray pairs is
    decided by the exact rank test on their common tight set.
    """
    lin: list[RatVec] = [tuple(Fraction(int(i == j)) for j in range(dim)) for i in range(dim)]
    # each ray carries the set of processed rows that vanish on it
    rays: list[tuple[RatVec, frozenset[int]]] = []
    for idx, a in enumerate(rows):
        lin_vals = [dot(a, b) for b in lin]
        if any(lin_vals):
            # the new inequality cuts the lineality space: peel one direction off
            j0 = next(i for i, v in enumerate(lin_vals) if v)
            b0, v0 = lin[j0], lin_vals[j0]
            if v0 < 0:
                b0, v0 = neg(b0), -v0
            lin = [
                sub(b, scale(b0, v / v0))
                for i, (b, v) in enumerate(zip(lin, lin_vals))
                if i != j0
            ]
            rays = [
                (primitive(sub(r, scale(b0, dot(a, r) / v0))), tight | {idx})
                for r, tight in rays
            ]
            rays.append((primitive(b0), frozenset(range(idx))))
        else:
            plus: list[tuple[RatVec, frozenset[int], Fraction]] = []
            minus: list[tuple[RatVec, frozenset[int], Fraction]] = []
            kept: list[tuple[RatVec, frozenset[int]]] = []
            for r, tight in rays:
                v = dot(a, r)
                if v > 0:
                    plus.append((r, tight, v))
                    kept.append((r, tight))
                elif v < 0:
                    minus.append((r, tight, v))
                else:
                    kept.append((r, tight | {idx}))
            target = dim - len(lin) - 2
            if target >= 0:
                for rp, tp, vp in plus:
                    for rm, tm, vm in minus:
                        common = tp & tm
                        if rank([rows[i] for i in common]) != target:
                            continue
                        w = sub(scale(rm, vp), scale(rp, vm))
                        kept.append((primitive(w), common | {idx}))
            rays = kept
    return lin, [r for r, _ in rays]


def _canonical_rays(raw: Iterable[RatVec], lineality: RatMat) -> tuple[RatVec, ...]:
    out = set()
    for r in raw:
        rr = primitive(reduce_mod_subspace(r, lineality))
        if not is_zero(rr):
            out.add(rr)
    return tuple(sorted(out))


class Cone:
    """Immutable rational polyhedral cone in a fixed ambient dimension."""

    __slots__ = (
        "ambient_dim",
        "rays",
        "lineality_basis",
        "facet_normals",
        "span_equations",
        "inequalities",
        "_faces",
        "_hash",
    )

    def __init__(self, ambient_dim, rays, lineality_basis, facet_normals, span_equations):
        self.ambient_dim = ambient_dim
        self.rays = rays
        self.lineality_basis = lineality_basis
        self.facet_normals = facet_normals
        self.span_equations = span_equations
        ineqs: list[RatVec] = []
        for e in span_equations:
            ineqs.append(e)
            ineqs.append(neg(e))
        ineqs.extend(facet_normals)
        self.inequalities = tuple(ineqs)
        self._faces = None
        self._hash = hash((ambient_dim, rays, lineality_basis))

    # -- construction -------------------------------------------------

    @staticmethod
    def _from_descriptions(dim, lin_raw, rays_raw, dual_lin_raw, dual_rays_raw) -> "Cone":
        lineality = subspace_basis(lin_raw)
        rays = _canonical_rays(rays_raw, lineality)
        span_eq = subspace_basis(dual_lin_raw)
        facets = _canonical_rays(dual_rays_raw, span_eq)
        return Cone(dim, rays, lineality, facets, span_eq)

    def generators(self) -> tuple[RatVec, ...]:
        """Rays plus a +/- spanning pair per lineality direction."""
        gens = list(self.rays)
        for b in self.lineality_basis:
            gens.append(b)
            gens.append(neg(b))
        return tuple(gens)

    # -- predicates ---------------------------------------------------

    def _check_vector(self, v: Sequence) -> RatVec:
        w = vec(v)
        if len(w) != self.ambient_dim:
            raise ValueError(
                f"dimension mismatch: vector of length {len(w)} in ambient dimension {self.ambient_dim}"
            )
        return w

    def contains(self, v: Sequence) -> bool:
        w = self._check_vector(v)
        return all(dot(a, w) >= 0 for a in self.inequalities)

    def in_relative_interior(self, v: Sequence) -> bool:
        w = self._check_vector(v)
        if not all(dot(e, w) == 0 for e in self.span_equations):
            return False
        return all(dot(a, w) > 0 for a in self.facet_normals)

    @property
    def dim(self) -> int:
        """Dimension of the linear span of the cone."""
        return rank(self.rays + self.lineality_basis)

    @property
    def is_strictly_convex(self) -> bool:
        return not self.lineality_basis

    @property
    def is_zero(self) -> bool:
        return not self.rays and not self.lineality_basis

    # -- derived cones ------------------------------------------------

    def intersect(self, other: "Cone") -> "Cone":
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch between cones")
        return cone_from_inequalities(self.inequalities + other.inequalities, self.ambient_dim)

    def image(self, matrix: RatMat) -> "Cone":
        if any(len(row) != self.ambient_dim for row in matrix):
            raise ValueError("matrix column count does not match the ambient dimension")
        gens = [tuple(dot(row, g) for row in matrix) for g in self.generators()]
        return cone_from_generators(gens, len(matrix))

    def faces(self) -> tuple["Cone", ...]:
        """All faces, canonical and deduplicated, the cone itself included."""
        if self._faces is None:
            found = {self}
            queue = [self]
            while queue:
                current = queue.pop()
                for a in self.facet_normals:
                    if all(dot(a, g) == 0 for g in current.generators()):
                        continue
                    cut = cone_from_inequalities(
                        current.inequalities + (a, neg(a)), self.ambient_dim
                    )
                    if cut not in found:
                        found.add(cut)
                        queue.append(cut)
            self._faces = tuple(sorted(found, key=_face_sort_key))
        return self._faces

    def is_face_of(self, other: "Cone") -> bool:
        if self.ambient_dim != other.ambient_dim:
            raise ValueError("dimension mismatch between cones")
        return self in other.faces()

    def interior_point(self) -> RatVec:
        """Sum of the canonical rays: a point in the relative interior."""
        point = zero_vec(self.ambient_dim)
        for r in self.rays:
            point = add(point, r)
        return point

    # -- structural equality -------------------------------------------

    def __eq__(self, other):
        if not isinstance(other, Cone):
            return NotImplemented
        return (
            self.ambient_dim == other.ambient_dim
            and self.rays == other.rays
            and self.lineality_basis == other.lineality_basis
        )

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Cone(ambient_dim={self.ambient_dim}, rays={describe_vectors(self.rays)}, lineality={describe_vectors(self.lineality_basis)})"


def _face_sort_key(cone: Cone):
    return (cone.dim, cone.rays, cone.lineality_basis)


def describe_vectors(vectors: Iterable[RatVec]) -> str:
    def fmt(x: Fraction) -> str:
        return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"

    return "[" + ", ".join("(" + ",".join(fmt(x) for x in v) + ")" for v in vectors) + "]"


def cone_from_generators(gens: Iterable[Sequence], dim: int) -> Cone:
    """Canonical cone of all nonnegative rational combinations of ``gens``."""
    rows = [vec(g) for g in gens]
    for g in rows:
        if len(g) != dim:
            raise ValueError(f"generator of length {len(g)} in ambient dimension {dim}")
    dual_lin, dual_rays = _dd(rows, dim)
    ineqs: list[RatVec] = []
    for b in dual_lin:
        ineqs.append(primitive(b))
        ineqs.append(primitive(neg(b)))
    ineqs.extend(dual_rays)
    lin, rays = _dd(ineqs, dim)
    return Cone._from_descriptions(dim, lin, rays, dual_lin, dual_rays)


def cone_from_inequalities(ineqs: Iterable[Sequence], dim: int) -> Cone:
    """Canonical cone {v : a . v >= 0 for every a in ineqs}."""
    rows = [vec(a) for a in ineqs]
    for a in rows:
        if len(a) != dim:
            raise ValueError(f"inequality of length {len(a)} in ambient dimension {dim}")
    lin, rays = _dd(rows, dim)
    gens = list(rays)
    for b in lin:
        gens.append(b)
        gens.append(neg(b))
    dual_lin, dual_rays = _dd(gens, dim)
    return Cone._from_descriptions(dim, lin, rays, dual_lin, dual_rays)


def intersect(a: Cone, b: Cone) -> Cone:
    return a.intersect(b)


def image(cone: Cone, matrix: RatMat) -> Cone:
    return cone.image(matrix)


def contains(cone: Cone, v: Sequence) -> bool:
    return cone.contains(v)


def in_relative_interior(cone: Cone, v: Sequence) -> bool:
    return cone.in_relative_interior(v)


def faces(cone: Cone) -> tuple[Cone, ...]:
    return cone.faces()


def is_face_of(face: Cone, cone: Cone) -> bool:
    return face.is_face_of(cone)


def interior_point(cone: Cone) -> RatVec:
    return cone.interior_point()
