"""Exact rational linear feasibility.

Two independent deciders over the same problem type:

* :func:`lp_feasible` -- equality pre-substitution followed by a phase-1
  simplex over exact rationals with Bland's anti-cycling rule; returns a
  satisfying assignment or ``None``.
* :func:`fourier_motzkin` -- variable elimination, intended as a slow
  cross-checking oracle and capped at a configurable variable count.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Sequence

from .errors import EliminationCapError
from .linalg import F0, F1, RatVec, dot, primitive, rref, vec

Constraint = tuple[RatVec, Fraction]


@dataclass(frozen=True)
class LPProblem:
    """Conjunction of exact linear constraints a.x = b and a.x >= b."""

    num_vars: int
    eq_constraints: tuple[Constraint, ...] = ()
    ineq_constraints: tuple[Constraint, ...] = ()

    def __post_init__(self):
        for a, _ in self.eq_constraints + self.ineq_constraints:
            if len(a) != self.num_vars:
                raise ValueError(
                    f"constraint of length {len(a)} in a problem with {self.num_vars} variables"
                )

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        return all(dot(a, x) == b for a, b in self.eq_constraints) and all(
            dot(a, x) >= b for a, b in self.ineq_constraints
        )


def constraint(coeffs, rhs=0) -> Constraint:
    return (vec(coeffs), Fraction(rhs))


def _substitute_equalities(
    lp: LPProblem,
) -> tuple[bool, int, Callable[[Sequence[Fraction]], RatVec], list[Constraint]]:
    """Solve the equality block exactly.

    Returns (consistent, number of free variables, map from free values back
    to a full assignment, inequalities rewritten over the free variables).
    """
    n = lp.num_vars
    aug = [tuple(a) + (b,) for a, b in lp.eq_constraints]
    reduced, pivots = rref(aug)
    if n in pivots:
        return False, 0, lambda t: (), []
    pivot_set = set(pivots)
    free = [j for j in range(n) if j not in pivot_set]
    # particular solution (free vars at zero) and one direction per free var
    particular = [F0] * n
    for row, p in zip(reduced, pivots):
        particular[p] = row[n]
    directions = []
    for f in free:
        d = [F0] * n
        d[f] = F1
        for row, p in zip(reduced, pivots):
            d[p] = -row[f]
        directions.append(tuple(d))

    def lift(t: Sequence[Fraction]) -> RatVec:
        out = list(particular)
        for val, d in zip(t, directions):
            if val:
                for i, di in enumerate(d):
                    if di:
                        out[i] += val * di
        return tuple(out)

    reduced_ineqs = []
    for a, b in lp.ineq_constraints:
        coeffs = tuple(dot(a, d) for d in directions)
        reduced_ineqs.append((coeffs, b - dot(a, particular)))
    return True, len(free), lift, reduced_ineqs


def lp_feasible(lp: LPProblem) -> RatVec | None:
    """Exact assignment satisfying the problem, or None when infeasible."""
    consistent, num_free, lift, ineqs = _substitute_equalities(lp)
    if not consistent:
        return None
    solution = _phase_one(num_free, ineqs)
    if solution is None:
        return None
    x = lift(solution)
    if not lp.satisfied_by(x):
        raise AssertionError("internal error: simplex solution failed re-verification")
    return x


def _phase_one(num_vars: int, ineqs: list[Constraint]) -> RatVec | None:
    """Feasible point of {x : a.x >= b} via phase-1 simplex with Bland's rule.

    Free variables are split as x = p - q; every constraint gets a slack, and
    only rows whose right hand side stays positive after orientation need an
    artificial variable.
    """
    m = len(ineqs)
    n_struct = 2 * num_vars + m
    n_art = sum(1 for _, b in ineqs if b > 0)
    ncols = n_struct + n_art
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    basis: list[int] = []
    next_art = n_struct
    for i, (a, b) in enumerate(ineqs):
        row = [F0] * ncols
        if b > 0:
            # a.x - s = b with an artificial basic column
            for j, c in enumerate(a):
                if c:
                    row[j] = c
                    row[num_vars + j] = -c
            row[2 * num_vars + i] = -F1
            row[next_art] = F1
            basis.append(next_art)
            next_art += 1
            rhs.append(b)
        else:
            # -a.x + s = -b with the slack basic at -b >= 0
            for j, c in enumerate(a):
                if c:
                    row[j] = -c
                    row[num_vars + j] = c
            row[2 * num_vars + i] = F1
            basis.append(2 * num_vars + i)
            rhs.append(-b)
        rows.append(row)

    # minimize the artificial sum; reduced costs relative to the start basis
    red = [F0] * ncols
    objective = F0
    for i in range(m):
        if basis[i] >= n_struct:
            objective += rhs[i]
            row = rows[i]
            for j in range(n_struct):
                if row[j]:
                    red[j] -= row[j]

    while True:
        enter = next((j for j in range(ncols) if red[j] < 0), None)
        if enter is None:
            break
        best: tuple[Fraction, int, int] | None = None
        for i in range(m):
            coef = rows[i][enter]
            if coef > 0:
                key = (rhs[i] / coef, basis[i], i)
                if best is None or key < best:
                    best = key
        if best is None:
            raise AssertionError("internal error: unbounded phase-1 objective")
        theta, _, leave = best
        objective += red[enter] * theta
        _pivot(rows, rhs, red, leave, enter)
        basis[leave] = enter

    if objective != 0:
        return None
    values = [F0] * ncols
    for i, col in enumerate(basis):
        values[col] = rhs[i]
    return tuple(values[j] - values[num_vars + j] for j in range(num_vars))


def _pivot(rows, rhs, red, r, c):
    prow = rows[r]
    piv = prow[c]
    if piv != 1:
        inv = 1 / piv
        rows[r] = prow = [x * inv for x in prow]
        rhs[r] *= inv
    nz = [j for j, x in enumerate(prow) if x]
    for i, row in enumerate(rows):
        if i == r:
            continue
        f = row[c]
        if f:
            for j in nz:
                row[j] -= f * prow[j]
            rhs[i] -= f * rhs[r]
    f = red[c]
    if f:
        for j in nz:
            red[j] -= f * prow[j]


def fourier_motzkin(lp: LPProblem, max_vars: int = 8) -> bool:
    """Feasibility by exact variable elimination.

    Equality constraints are substituted away by Gaussian elimination first;
    the remaining variables are eliminated one at a time, keeping rows in a
    primitive normal form to curb blowup.  Raises
    :class:`~coloredfans.errors.EliminationCapError` above the variable cap.
    """
    if lp.num_vars > max_vars:
        raise EliminationCapError(
            f"{lp.num_vars} variables exceed the Fourier-Motzkin cap of {max_vars}"
        )
    consistent, num_free, _, ineqs = _substitute_equalities(lp)
    if not consistent:
        return False
    rows = _normalize_rows(ineqs)
    if rows is None:
        return False
    remaining = list(range(num_free))
    while remaining:
        # eliminate the variable with the smallest pairing fan-out first
        costs = []
        for v in remaining:
            pos = sum(1 for a, _ in rows if a[v] > 0)
            neg_ = sum(1 for a, _ in rows if a[v] < 0)
            costs.append((pos * neg_, v))
        _, var = min(costs)
        remaining.remove(var)
        pos_rows = [(a, b) for a, b in rows if a[var] > 0]
        neg_rows = [(a, b) for a, b in rows if a[var] < 0]
        new_rows = [(a, b) for a, b in rows if a[var] == 0]
        for ap, bp in pos_rows:
            for an, bn in neg_rows:
                coeffs = tuple(-an[var] * x + ap[var] * y for x, y in zip(ap, an))
                new_rows.append((coeffs, -an[var] * bp + ap[var] * bn))
        rows = _normalize_rows(new_rows)
        if rows is None:
            return False
    return True


def _normalize_rows(rows) -> list[Constraint] | None:
    """Primitive scaling, duplicate folding, and constant-row screening.

    Returns None as soon as a row reads 0 >= b with b > 0.
    """
    best: dict[RatVec, Fraction] = {}
    for a, b in rows:
        if not any(a):
            if b > 0:
                return None
            continue
        prim = primitive(a)
        ratio = next(x / y for x, y in zip(a, prim) if y)
        b_scaled = b / ratio
        prev = best.get(prim)
        if prev is None or b_scaled > prev:
            best[prim] = b_scaled
    return [(a, b) for a, b in best.items()]
