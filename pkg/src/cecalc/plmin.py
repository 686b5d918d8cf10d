"""Exact minimization of piecewise-linear objectives over rational polytopes.

A program has n variables, equality constraints, inequality constraints
(coeffs . x <= rhs), and an objective made of a linear part plus hinge
terms sign * max(0, coeffs . x - rhs).  Such an objective is linear on
each cell of the hyperplane arrangement cut by the hinge breakpoints, so
its minimum over a bounded polytope is attained at an intersection point
of boundary and breakpoint hyperplanes.  The solver therefore:

  1. eliminates the equalities exactly, working in the affine subspace;
  2. certifies boundedness by checking that the recession cone of the
     projected inequalities is trivial (lineality space plus extreme-ray
     enumeration over (m-1)-subsets of the constraint normals);
  3. enumerates every m-subset of the projected boundary/breakpoint
     hyperplanes, solves each square system by fraction-free elimination
     over the integers, keeps the feasible intersection points, and
     evaluates the objective exactly at each.

Everything is Fraction/integer arithmetic; there is no floating point
anywhere, so reported minima and argmin points are exact.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm
from typing import Iterable, Optional, Sequence, Union

Scalar = Union[int, Fraction]
Vector = tuple[Fraction, ...]


class PLError(Exception):
    """Base class for solver failures."""


class InfeasibleError(PLError):
    """The feasible region is empty."""


class UnboundedError(PLError):
    """The feasible region is unbounded (vertex enumeration is invalid)."""


class SamplingError(PLError):
    """Rejection sampling found no feasible point within its budget."""


def _vec(values: Iterable[Scalar], n: int, what: str) -> Vector:
    out = tuple(Fraction(v) for v in values)
    if len(out) != n:
        raise ValueError(f"{what} has length {len(out)}, expected {n}")
    return out


@dataclass(frozen=True)
class Hinge:
    """A term sign * max(0, coeffs . x - rhs); sign is +1 or -1."""

    sign: int
    coeffs: Vector
    rhs: Fraction


@dataclass(frozen=True)
class PLProgram:
    num_vars: int
    equalities: tuple[tuple[Vector, Fraction], ...]
    inequalities: tuple[tuple[Vector, Fraction], ...]  # coeffs . x <= rhs
    objective_linear: Vector
    objective_const: Fraction
    hinges: tuple[Hinge, ...]


def program(
    num_vars: int,
    equalities: Sequence[tuple[Sequence[Scalar], Scalar]] = (),
    inequalities: Sequence[tuple[Sequence[Scalar], Scalar]] = (),
    objective_linear: Sequence[Scalar] = (),
    objective_const: Scalar = 0,
    hinges: Sequence[tuple[int, Sequence[Scalar], Scalar]] = (),
) -> PLProgram:
    """Build a PLProgram, coercing every number to Fraction and validating."""
    if num_vars < 1:
        raise ValueError(f"need at least one variable, got {num_vars}")
    eqs = tuple((_vec(a, num_vars, "equality"), Fraction(b)) for a, b in equalities)
    les = tuple((_vec(a, num_vars, "inequality"), Fraction(b)) for a, b in inequalities)
    lin = _vec(objective_linear or [0] * num_vars, num_vars, "objective")
    hs = []
    for sign, coeffs, rhs in hinges:
        if sign not in (1, -1):
            raise ValueError(f"hinge sign must be +1 or -1, got {sign}")
        hs.append(Hinge(sign, _vec(coeffs, num_vars, "hinge"), Fraction(rhs)))
    return PLProgram(num_vars, eqs, les, lin, Fraction(objective_const), tuple(hs))


@dataclass(frozen=True)
class PLSolution:
    min_value: Fraction
    argmin_points: tuple[Vector, ...]  # sorted lexicographically, deduplicated
    candidates_examined: int


# -- exact evaluation ---------------------------------------------------------


def _dot(a: Sequence[Fraction], x: Sequence[Fraction]) -> Fraction:
    return sum(ai * xi for ai, xi in zip(a, x))


def objective_value(p: PLProgram, x: Sequence[Scalar]) -> Fraction:
    x = _vec(x, p.num_vars, "point")
    value = _dot(p.objective_linear, x) + p.objective_const
    for h in p.hinges:
        excess = _dot(h.coeffs, x) - h.rhs
        if excess > 0:
            value += h.sign * excess
    return value


def is_feasible(p: PLProgram, x: Sequence[Scalar]) -> bool:
    x = _vec(x, p.num_vars, "point")
    return all(_dot(a, x) == b for a, b in p.equalities) and all(
        _dot(a, x) <= b for a, b in p.inequalities
    )


# -- exact linear algebra -----------------------------------------------------


def _rref(rows: list[list[Fraction]]) -> tuple[list[list[Fraction]], list[int]]:
    """Reduced row echelon form in place; returns (rows, pivot column list)."""
    if not rows:
        return rows, []
    ncols = len(rows[0])
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        inv = 1 / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c] != 0:
                factor = rows[i][c]
                rows[i] = [v - factor * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return rows, pivots


def _affine_subspace(p: PLProgram) -> tuple[Vector, list[Vector]]:
    """Parametrize {x : equalities hold} as x0 + span(basis), exactly."""
    n = p.num_vars
    if not p.equalities:
        x0 = tuple(Fraction(0) for _ in range(n))
        basis = [
            tuple(Fraction(1) if j == i else Fraction(0) for j in range(n))
            for i in range(n)
        ]
        return x0, basis
    rows = [list(a) + [b] for a, b in p.equalities]
    rows, pivots = _rref(rows)
    for row in rows:
        if all(v == 0 for v in row[:n]) and row[n] != 0:
            raise InfeasibleError("equality constraints are inconsistent")
    if n in pivots:  # pivot in the rhs column also signals inconsistency
        raise InfeasibleError("equality constraints are inconsistent")
    pivot_set = set(pivots)
    free = [c for c in range(n) if c not in pivot_set]
    x0_list = [Fraction(0)] * n
    for r, c in enumerate(pivots):
        x0_list[c] = rows[r][n]
    basis = []
    for fc in free:
        vec = [Fraction(0)] * n
        vec[fc] = Fraction(1)
        for r, c in enumerate(pivots):
            vec[c] = -rows[r][fc]
        basis.append(tuple(vec))
    return tuple(x0_list), basis


def _project_plane(
    coeffs: Vector, rhs: Fraction, x0: Vector, basis: list[Vector]
) -> tuple[tuple[int, ...], int, int]:
    """Rewrite a linear form in subspace coordinates, integerized.

    Returns (w, c, den) with den > 0 such that for x = x0 + sum t_j basis_j,
    coeffs . x - rhs = (w . t - c) / den.
    """
    w = [_dot(coeffs, col) for col in basis]
    c = rhs - _dot(coeffs, x0)
    den = lcm(*(v.denominator for v in w), c.denominator) if w else c.denominator
    return tuple(int(v * den) for v in w), int(c * den), den


def _normalize_plane(w: tuple[int, ...], c: int) -> tuple[tuple[int, ...], int]:
    g = 0
    for v in w:
        g = gcd(g, v)
    g = gcd(g, c)
    if g == 0:
        return w, c
    w = tuple(v // g for v in w)
    c //= g
    lead = next((v for v in w if v != 0), 0)
    if lead < 0:
        return tuple(-v for v in w), -c
    return w, c


def _solve_square_int(rows: list[tuple[tuple[int, ...], int]], m: int) -> Optional[Vector]:
    """Solve an m x m integer system by fraction-free elimination.

    Returns None when the system is singular; degenerate subsets contribute
    no candidate (an optimum on a positive-dimensional face is also attained
    at a vertex produced by another subset).
    """
    mat = [list(w) + [c] for w, c in rows]
    prev = 1
    for k in range(m):
        piv = -1
        for r in range(k, m):
            if mat[r][k] != 0:
                piv = r
                break
        if piv < 0:
            return None
        if piv != k:
            mat[k], mat[piv] = mat[piv], mat[k]
        pivot = mat[k][k]
        row_k = mat[k]
        for r in range(k + 1, m):
            row_r = mat[r]
            factor = row_r[k]
            if factor == 0:
                for j in range(k + 1, m + 1):
                    row_r[j] = (pivot * row_r[j]) // prev
            else:
                for j in range(k + 1, m + 1):
                    row_r[j] = (pivot * row_r[j] - factor * row_k[j]) // prev
                row_r[k] = 0
        prev = pivot
    out = [Fraction(0)] * m
    for i in range(m - 1, -1, -1):
        acc = Fraction(mat[i][m])
        row = mat[i]
        for j in range(i + 1, m):
            acc -= row[j] * out[j]
        out[i] = acc / row[i]
    return tuple(out)


def _null_ray(rows: list[tuple[int, ...]], m: int) -> Optional[tuple[int, ...]]:
    """Generator of the null space of the stacked rows when it is a line."""
    mat = [[Fraction(v) for v in w] for w in rows]
    mat, pivots = _rref(mat)
    if len(pivots) != m - 1:
        return None
    free = next(c for c in range(m) if c not in set(pivots))
    vec = [Fraction(0)] * m
    vec[free] = Fraction(1)
    for r, c in enumerate(pivots):
        vec[c] = -mat[r][free]
    den = lcm(*(v.denominator for v in vec))
    return tuple(int(v * den) for v in vec)


def _check_bounded(ineq_planes: list[tuple[tuple[int, ...], int]], m: int) -> None:
    """Raise UnboundedError unless {t : W t <= 0} is the zero cone."""
    rows = [w for w, _ in ineq_planes if any(v != 0 for v in w)]
    if not rows:
        raise UnboundedError("no inequality constrains the affine subspace")
    mat = [[Fraction(v) for v in w] for w in rows]
    _, pivots = _rref(mat)
    if len(pivots) < m:
        raise UnboundedError("constraint normals do not span; region contains a line")
    if m == 1:
        # every nonzero normal pins one side; both signs blocked iff normals differ in sign
        if all(w[0] > 0 for w in rows) or all(w[0] < 0 for w in rows):
            raise UnboundedError("feasible interval is a half line")
        return
    for subset in combinations(rows, m - 1):
        d = _null_ray(list(subset), m)
        if d is None:
            continue
        for ray in (d, tuple(-v for v in d)):
            if all(sum(wi * di for wi, di in zip(w, ray)) <= 0 for w in rows):
                raise UnboundedError(f"recession ray {ray} detected")


# -- the solver ---------------------------------------------------------------


def solve(p: PLProgram) -> PLSolution:
    """Exact global minimum of the hinge objective over the feasible region.

    Raises InfeasibleError when the region is empty and UnboundedError when
    it is unbounded.  Boundedness is a property of the recession cone of
    the constraint system and is certified before minimization (the vertex
    method needs a polytope), so a system that is simultaneously empty and
    recession-positive reports UnboundedError.
    """
    x0, basis = _affine_subspace(p)
    m = len(basis)

    proj_ineq: list[tuple[tuple[int, ...], int]] = []
    for a, b in p.inequalities:
        w, c, _ = _project_plane(a, b, x0, basis)
        if all(v == 0 for v in w):
            if c < 0:
                raise InfeasibleError("inequality violated on the equality subspace")
            continue
        proj_ineq.append((w, c))

    if m == 0:
        x = x0
        if all(_dot(a, x) <= b for a, b in p.inequalities):
            return PLSolution(objective_value(p, x), (x,), 1)
        raise InfeasibleError("the unique equality solution violates an inequality")

    _check_bounded(proj_ineq, m)

    seen: set[tuple[tuple[int, ...], int]] = set()
    planes: list[tuple[tuple[int, ...], int]] = []
    breakpoint_planes = []
    for h in p.hinges:
        w, c, _ = _project_plane(h.coeffs, h.rhs, x0, basis)
        if any(v != 0 for v in w):
            breakpoint_planes.append((w, c))
    for plane in proj_ineq + breakpoint_planes:
        key = _normalize_plane(*plane)
        if key not in seen:
            seen.add(key)
            planes.append(key)

    best: Optional[Fraction] = None
    argmins: dict[Vector, None] = {}
    examined = 0
    for subset in combinations(planes, m):
        t = _solve_square_int(list(subset), m)
        if t is None:
            continue
        examined += 1
        # integer feasibility check in subspace coordinates
        den = lcm(*(v.denominator for v in t))
        tn = [int(v * den) for v in t]
        ok = True
        for w, c in proj_ineq:
            if sum(wi * ti for wi, ti in zip(w, tn)) > c * den:
                ok = False
                break
        if not ok:
            continue
        x = tuple(
            x0[i] + sum(t[j] * basis[j][i] for j in range(m)) for i in range(p.num_vars)
        )
        value = objective_value(p, x)
        if best is None or value < best:
            best = value
            argmins = {x: None}
        elif value == best:
            argmins[x] = None
    if best is None:
        raise InfeasibleError("no intersection point satisfies all constraints")
    return PLSolution(best, tuple(sorted(argmins)), examined)


# -- feasible-point sampling oracle -------------------------------------------


def sample_check(
    p: PLProgram,
    trials: int,
    seed: int,
    center: Optional[Sequence[Scalar]] = None,
) -> Fraction:
    """Minimum of the objective over rejection-sampled feasible points.

    Points are drawn from boxes (in exact subspace coordinates) around a
    feasible anchor and accepted only if they satisfy every constraint
    exactly, so the returned value is a certified upper bound for the true
    minimum: it can never undercut ``solve``.  ``center`` may supply a known
    feasible point to anchor the boxes; it is validated first and, when
    feasible, also counts as the first sample.  Feasibility and objective
    evaluation run on integer-scaled subspace coordinates, so every
    accepted value is exact.
    """
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    x0, basis = _affine_subspace(p)
    m = len(basis)
    ineq_rows = []
    for a, b in p.inequalities:
        w, c, _ = _project_plane(a, b, x0, basis)
        if all(v == 0 for v in w):
            if c < 0:
                raise SamplingError("region is empty on the equality subspace")
            continue
        ineq_rows.append((w, c))
    # objective in subspace coordinates: value = const + (lw.t - lc)/lden + hinges
    lw, lc, lden = _project_plane(p.objective_linear, Fraction(0), x0, basis)
    hinge_rows = [
        (h.sign, *_project_plane(h.coeffs, h.rhs, x0, basis)) for h in p.hinges
    ]

    def feasible_t(tn: Sequence[int], td: int) -> bool:
        for w, c in ineq_rows:
            if sum(wi * ti for wi, ti in zip(w, tn)) > c * td:
                return False
        return True

    def value_at(tn: Sequence[int], td: int) -> Fraction:
        value = p.objective_const + Fraction(
            sum(wi * ti for wi, ti in zip(lw, tn)) - lc * td, lden * td
        )
        for sign, w, c, den in hinge_rows:
            excess = sum(wi * ti for wi, ti in zip(w, tn)) - c * td
            if excess > 0:
                value += sign * Fraction(excess, den * td)
        return value

    def as_int_coords(t: Sequence[Fraction]) -> tuple[tuple[int, ...], int]:
        den = lcm(*(v.denominator for v in t)) if t else 1
        return tuple(int(v * den) for v in t), den

    anchors: list[tuple[tuple[int, ...], int]] = []
    if center is not None:
        cx = _vec(center, p.num_vars, "center")
        if not is_feasible(p, cx):
            raise ValueError("supplied center is not feasible")
        anchors.append(as_int_coords(_coords_of(cx, x0, basis)))
    zero_t = ((0,) * m, 1)
    if feasible_t(*zero_t):
        anchors.append(zero_t)

    rng = random.Random(seed)
    best: Optional[Fraction] = None
    accepted = 0
    if anchors:
        best = value_at(*anchors[0])
        accepted = 1
    # radius ladder r = rn/rd; offsets are k * rn / (64 rd) with k in [-64, 64]
    radii = ((2, 1), (1, 1), (1, 2), (1, 8))
    budget = 400 * trials
    attempts = 0
    randint = rng.randint
    while accepted < trials and attempts < budget:
        attempts += 1
        rn, rd = radii[rng.randrange(4)]
        an, ad = anchors[rng.randrange(len(anchors))] if anchors else zero_t
        od = 64 * rd
        den = lcm(ad, od)
        sa, so = den // ad, (den // od) * rn
        tn = tuple(a * sa + randint(-64, 64) * so for a in an)
        if not feasible_t(tn, den):
            continue
        accepted += 1
        value = value_at(tn, den)
        if best is None or value < best:
            best = value
        if len(anchors) < 8:
            anchors.append((tn, den))
    if best is None:
        raise SamplingError(f"no feasible sample found in {budget} attempts")
    return best


def _coords_of(x: Vector, x0: Vector, basis: list[Vector]) -> Vector:
    """Subspace coordinates of a point on the affine subspace."""
    m = len(basis)
    diff = [xi - x0i for xi, x0i in zip(x, x0)]
    rows = [[basis[j][i] for j in range(m)] + [diff[i]] for i in range(len(x))]
    rows, pivots = _rref(rows)
    if m in pivots:
        raise ValueError("point does not lie on the equality subspace")
    t = [Fraction(0)] * m
    for r, c in enumerate(pivots):
        t[c] = rows[r][m]
    return tuple(t)


# -- the four bundled minimization instances ----------------------------------

PRESET_NAMES = ("lemma_b4", "lemma_coh4", "lemma_b5circ", "lemma_coh5")


def preset(name: str) -> PLProgram:
    """The bundled degree-4/5 codimension minimization programs.

    Variables are (x1, x2, x3, y1, y2) for the degree-4 instances and
    (x1..x4, y1..y5) for the degree-5 ones; x sums to 1, y sums to 1
    (degree 4) or 2 (degree 5), all coordinates ascending and nonnegative.
    """
    if name == "lemma_b4":
        return program(
            num_vars=5,
            equalities=[([1, 1, 1, 0, 0], 1), ([0, 0, 0, 1, 1], 1)],
            inequalities=[
                ([-1, 0, 0, 0, 0], 0),
                ([1, -1, 0, 0, 0], 0),
                ([0, 1, -1, 0, 0], 0),
                ([0, 0, 0, -1, 0], 0),
                ([0, 0, 0, 1, -1], 0),
                ([2, 0, 0, 0, -1], 0),
            ],
            objective_linear=[-2, 0, 2, -1, 1],
        )
    if name == "lemma_coh4":
        return program(
            num_vars=5,
            equalities=[([1, 1, 1, 0, 0], 1), ([0, 0, 0, 1, 1], 1)],
            inequalities=[
                ([-1, 0, 0, 0, 0], 0),
                ([1, -1, 0, 0, 0], 0),
                ([0, 1, -1, 0, 0], 0),
                ([0, 0, 0, -1, 0], 0),
                ([-2, 0, 0, 1, 0], 0),   # y1 <= 2 x1
                ([2, 0, 0, 0, -1], 0),   # 2 x1 <= y2
                ([0, -2, 0, 0, 1], 0),   # y2 <= 2 x2
                ([-1, 0, -1, 0, 1], 0),  # y2 <= x1 + x3
            ],
            objective_linear=[-2, 0, 2, -1, 1],
            hinges=[
                (-1, [-2, 0, 0, 0, 1], 0),   # -max(0, y2 - 2 x1)
                (-1, [-1, -1, 0, 0, 1], 0),  # -max(0, y2 - x1 - x2)
            ],
        )
    if name == "lemma_b5circ":
        return program(
            num_vars=9,
            equalities=[
                ([1, 1, 1, 1, 0, 0, 0, 0, 0], 1),
                ([0, 0, 0, 0, 1, 1, 1, 1, 1], 2),
            ],
            inequalities=_ordered_simplex_rows() + [
                ([1, 0, 0, 0, 1, 1, 0, 0, 0], 1),  # x1 + y1 + y2 <= 1
            ],
            objective_linear=[-3, -1, 1, 3, -4, -2, 0, 2, 4],
        )
    if name == "lemma_coh5":
        hinges = []
        groups = [((0, 1), 4), ((0, 2), 3), ((0, 3), 2), ((1, 2), 2)]
        for (j, k), count in groups:
            for i in range(count):
                coeffs = [0] * 9
                coeffs[i] = -1
                coeffs[4 + j] -= 1
                coeffs[4 + k] -= 1
                hinges.append((-1, coeffs, -1))  # -max(0, 1 - y_j - y_k - x_i)
        return program(
            num_vars=9,
            equalities=[
                ([1, 1, 1, 1, 0, 0, 0, 0, 0], 1),
                ([0, 0, 0, 0, 1, 1, 1, 1, 1], 2),
            ],
            inequalities=_ordered_simplex_rows() + [
                ([1, 0, 0, 0, 1, 1, 0, 0, 0], 1),    # x1 + y1 + y2 <= 1
                ([0, 0, 0, -1, -1, 0, -1, 0, 0], -1),  # y1 + y3 + x4 >= 1
                ([0, 0, -1, 0, -1, 0, 0, -1, 0], -1),  # y1 + y4 + x3 >= 1
                ([0, 0, -1, 0, 0, -1, -1, 0, 0], -1),  # y2 + y3 + x3 >= 1
            ],
            objective_linear=[-3, -1, 1, 3, -4, -2, 0, 2, 4],
            hinges=hinges,
        )
    raise ValueError(f"unknown preset {name!r}; choose from {PRESET_NAMES}")


def _ordered_simplex_rows() -> list[tuple[list[int], int]]:
    """0 <= x1 <= ... <= x4 and 0 <= y1 <= ... <= y5 in nine variables."""
    rows: list[tuple[list[int], int]] = []
    first_x = [0] * 9
    first_x[0] = -1
    rows.append((first_x, 0))
    for i in range(3):
        row = [0] * 9
        row[i], row[i + 1] = 1, -1
        rows.append((row, 0))
    first_y = [0] * 9
    first_y[4] = -1
    rows.append((first_y, 0))
    for i in range(4, 8):
        row = [0] * 9
        row[i], row[i + 1] = 1, -1
        rows.append((row, 0))
    return rows


@lru_cache(maxsize=None)
def preset_solution(name: str) -> PLSolution:
    """Cached exact solution of a bundled instance (solved once per process)."""
    return solve(preset(name))


def preset_minimum(name: str) -> Fraction:
    return preset_solution(name).min_value


def bound(k: int, genus: int, case: str) -> Fraction:
    """Codimension lower bound assembled from the solver output.

    Degree 4 uses (g+3) * min - 4; degree 5 uses (g+4) * min - 16.  The
    B_circ case minimizes over the full pair-of-bundles moduli problem,
    H_circ over the cover problem with its extra constraints and hinge
    corrections; both are computed, never hard-coded.
    """
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    if case not in ("B_circ", "H_circ"):
        raise ValueError(f"case must be B_circ or H_circ, got {case!r}")
    if k == 4:
        name = "lemma_b4" if case == "B_circ" else "lemma_coh4"
        return (genus + 3) * preset_minimum(name) - 4
    if k == 5:
        name = "lemma_b5circ" if case == "B_circ" else "lemma_coh5"
        return (genus + 4) * preset_minimum(name) - 16
    raise ValueError(f"bounds are defined for k in (4, 5), got {k}")


# -- JSON problem format -------------------------------------------------------


def program_to_json(p: PLProgram) -> dict:
    return {
        "vars": p.num_vars,
        "eq": [[str(v) for v in a] + [str(b)] for a, b in p.equalities],
        "le": [[str(v) for v in a] + [str(b)] for a, b in p.inequalities],
        "obj": {
            "lin": [str(v) for v in p.objective_linear],
            "const": str(p.objective_const),
            "hinges": [
                {
                    "sign": h.sign,
                    "coeffs": [str(v) for v in h.coeffs],
                    "rhs": str(h.rhs),
                }
                for h in p.hinges
            ],
        },
    }


def program_from_json(data: dict) -> PLProgram:
    n = int(data["vars"])

    def row(values: Sequence) -> tuple[list[Fraction], Fraction]:
        if len(values) != n + 1:
            raise ValueError(f"constraint row has {len(values)} entries, expected {n + 1}")
        nums = [Fraction(str(v)) for v in values]
        return nums[:n], nums[n]

    obj = data.get("obj", {})
    return program(
        num_vars=n,
        equalities=[row(r) for r in data.get("eq", [])],
        inequalities=[row(r) for r in data.get("le", [])],
        objective_linear=[Fraction(str(v)) for v in obj.get("lin", [0] * n)],
        objective_const=Fraction(str(obj.get("const", 0))),
        hinges=[
            (int(h["sign"]), [Fraction(str(v)) for v in h["coeffs"]], Fraction(str(h["rhs"])))
            for h in obj.get("hinges", [])
        ],
    )
