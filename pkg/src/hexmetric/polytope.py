"""Feasibility polytope for per-edge coordinates.

A coordinate vector z is realizable by a hyperbolic metric iff every
edge cycle has positive z-sum.  By LP duality this is equivalent to
min { z . y : y in D, sum y = 1 } > 0 over the cone

    D = { y >= 0 : y_i + y_j >= y_k for each 2-cell's edge triple },

which is the test implemented here, together with the construction of a
max-margin interior starting point for the energy maximizer.  The LP
solver is a small dense two-phase simplex with Bland's rule; problem
sizes are a few dozen variables.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import coords
from .surface import EdgeCycle, HexComplex

TAU_FEAS = 1e-9

_PIVOT_TOL = 1e-11


class LPError(RuntimeError):
    pass


class InfeasibleCoordinateError(ValueError):
    """Raised when a coordinate vector lies outside the open polytope."""

    def __init__(self, report: "PolytopeReport"):
        super().__init__(f"coordinate is not feasible (status={report.status})")
        self.report = report


# ---------------------------------------------------------------------------
# dense simplex, standard form  min c.x  s.t.  A x = b, x >= 0
# ---------------------------------------------------------------------------


def _bland_simplex(c: np.ndarray, a: np.ndarray, b: np.ndarray, basis: list[int]):
    """Simplex iterations from a given feasible basis, Bland's rule
    throughout (termination guaranteed, adequate at this scale).
    Returns (status, basis, x) with status 'optimal' or 'unbounded'."""
    m, n = a.shape
    for _ in range(200 * (n + m + 10)):
        bmat = a[:, basis]
        xb = np.linalg.solve(bmat, b)
        y = np.linalg.solve(bmat.T, c[basis])
        reduced = c - a.T @ y
        entering = -1
        for j in range(n):
            if j not in basis and reduced[j] < -_PIVOT_TOL:
                entering = j
                break
        if entering < 0:
            x = np.zeros(n)
            x[basis] = xb
            return "optimal", basis, x
        d = np.linalg.solve(bmat, a[:, entering])
        ratios = [
            (xb[i] / d[i], basis[i], i) for i in range(m) if d[i] > _PIVOT_TOL
        ]
        if not ratios:
            return "unbounded", basis, None
        min_ratio = min(r for r, _, _ in ratios)
        # Bland tie-break: among minimal ratios, leave the basic
        # variable with the smallest index
        leave_row = min(
            (bi, i) for r, bi, i in ratios if r <= min_ratio + _PIVOT_TOL
        )[1]
        basis[leave_row] = entering
    raise LPError("simplex iteration limit exceeded")


def _standard_form_solve(c: np.ndarray, a: np.ndarray, b: np.ndarray):
    """Two-phase simplex.  Returns (status, value, x)."""
    m, n = a.shape
    a = a.copy()
    b = b.copy()
    neg = b < 0
    a[neg] *= -1.0
    b[neg] *= -1.0
    # phase 1
    a1 = np.hstack([a, np.eye(m)])
    c1 = np.concatenate([np.zeros(n), np.ones(m)])
    basis = list(range(n, n + m))
    status, basis, x1 = _bland_simplex(c1, a1, b, basis)
    if status != "optimal" or float(c1 @ x1) > 1e-8:
        return "infeasible", None, None
    # drive artificials out of the basis where possible
    for i, bi in enumerate(basis):
        if bi >= n:
            bmat = a1[:, basis]
            for j in range(n):
                if j in basis:
                    continue
                d = np.linalg.solve(bmat, a1[:, j])
                if abs(d[i]) > 1e-9:
                    basis[i] = j
                    break
    if any(bi >= n for bi in basis):
        # redundant rows: keep the artificial at value 0 with cost 0
        a2 = a1
        c2 = np.concatenate([c, np.zeros(m)])
    else:
        a2 = a
        c2 = c
    status, basis, x = _bland_simplex(c2, a2, b, basis)
    if status != "optimal":
        return status, None, None
    return "optimal", float(c2 @ x), x[:n]


def lp_solve(
    c,
    a_ub=None,
    b_ub=None,
    a_eq=None,
    b_eq=None,
):
    """min c.x subject to a_ub x <= b_ub, a_eq x = b_eq, x >= 0.

    Returns (status, value, x); status in 'optimal' / 'unbounded' /
    'infeasible'.  Nonnegative variables only; callers split free
    variables into differences.
    """
    c = np.asarray(c, dtype=float)
    n = c.size
    rows = []
    rhs = []
    n_slack = 0
    if a_ub is not None:
        a_ub = np.atleast_2d(np.asarray(a_ub, dtype=float))
        b_ub = np.atleast_1d(np.asarray(b_ub, dtype=float))
        n_slack = a_ub.shape[0]
    if n + n_slack > 600:
        raise LPError("problem too large for the dense simplex")
    if a_ub is not None:
        for i in range(a_ub.shape[0]):
            slack = np.zeros(n_slack)
            slack[i] = 1.0
            rows.append(np.concatenate([a_ub[i], slack]))
            rhs.append(b_ub[i])
    if a_eq is not None:
        a_eq = np.atleast_2d(np.asarray(a_eq, dtype=float))
        b_eq = np.atleast_1d(np.asarray(b_eq, dtype=float))
        for i in range(a_eq.shape[0]):
            rows.append(np.concatenate([a_eq[i], np.zeros(n_slack)]))
            rhs.append(b_eq[i])
    if not rows:
        raise LPError("LP needs at least one constraint")
    a = np.vstack(rows)
    b = np.asarray(rhs, dtype=float)
    c_full = np.concatenate([c, np.zeros(n_slack)])
    status, value, x = _standard_form_solve(c_full, a, b)
    if status != "optimal":
        return status, None, None
    return status, value, x[:n]


# ---------------------------------------------------------------------------
# feasibility of per-edge coordinates
# ---------------------------------------------------------------------------


@dataclass
class PolytopeReport:
    feasible: bool
    status: str  # 'feasible' | 'boundary' | 'infeasible'
    lp_min: float
    boundary_values: np.ndarray
    certificate: np.ndarray | None = None  # cone direction with z.y <= tol
    witness: np.ndarray | None = None  # interior length structure
    violating_cycles: list = field(default_factory=list)

    def to_json_dict(self, cx: HexComplex) -> dict:
        d = {
            "feasible": self.feasible,
            "status": self.status,
            "lp_min": self.lp_min,
            "boundary_values": {
                f"b{i}": float(v) for i, v in enumerate(self.boundary_values)
            },
        }
        if self.certificate is not None:
            d["certificate"] = {
                cx.labels[e]: float(v) for e, v in enumerate(self.certificate)
            }
        if self.witness is not None:
            d["witness_x_arcs"] = [float(v) for v in self.witness]
        return d


def cone_inequalities(cx: HexComplex) -> np.ndarray:
    """Rows r with r.y >= 0 cutting out the cone D (triangle rows only;
    nonnegativity is implied and appended separately by callers)."""
    rows = []
    for h in range(cx.n):
        tri = cx.edges_of_hexagon(h)
        for i in range(3):
            j, k = (i + 1) % 3, (i + 2) % 3
            row = np.zeros(cx.num_edges)
            row[tri[i]] += 1.0
            row[tri[j]] += 1.0
            row[tri[k]] -= 1.0
            rows.append(row)
    return np.vstack(rows)


def _cone_lp_min(cx: HexComplex, z: np.ndarray):
    """min z.y over D intersected with the simplex sum(y) = 1."""
    m = cx.num_edges
    tri = cone_inequalities(cx)
    status, value, y = lp_solve(
        c=np.asarray(z, dtype=float),
        a_ub=-tri,
        b_ub=np.zeros(tri.shape[0]),
        a_eq=np.ones((1, m)),
        b_eq=np.array([1.0]),
    )
    if status != "optimal":
        raise LPError(f"cone LP unexpectedly {status}")
    return value, y


def _margin_lp(cx: HexComplex, z: np.ndarray):
    """Max-margin point of the affine slice t_a + t_b = z(e) over the
    facing pairs: returns (margin, t-array)."""
    m = cx.num_edges
    z = np.asarray(z, dtype=float)
    sign = np.zeros(cx.num_arcs)
    edge_of = np.zeros(cx.num_arcs, dtype=int)
    for w in range(cx.num_arcs):
        e, side = cx.arc_to_edge(w)
        edge_of[w] = e
        sign[w] = 1.0 if side == 0 else -1.0
    # variables: s+ (m), s- (m), mu+, mu-
    nv = 2 * m + 2
    rows = []
    rhs = []
    for h in range(cx.n):
        arcs = cx.arcs_of_hexagon(h)
        for i in range(3):
            wa, wb = arcs[i], arcs[(i + 1) % 3]
            row = np.zeros(nv)
            for w in (wa, wb):
                e = edge_of[w]
                row[e] -= sign[w]
                row[m + e] += sign[w]
            row[2 * m] += 1.0
            row[2 * m + 1] -= 1.0
            rows.append(row)
            rhs.append(0.5 * (z[edge_of[wa]] + z[edge_of[wb]]))
    c = np.zeros(nv)
    c[2 * m] = -1.0
    c[2 * m + 1] = 1.0
    status, value, x = lp_solve(c, a_ub=np.vstack(rows), b_ub=np.array(rhs))
    if status == "unbounded":
        raise LPError("margin LP unbounded; complex has no boundary constraint")
    if status != "optimal":
        raise LPError(f"margin LP unexpectedly {status}")
    s = x[:m] - x[m : 2 * m]
    mu = -value
    t = 0.5 * z[edge_of] + sign * s[edge_of]
    return mu, t


def check_feasibility(cx: HexComplex, z, tol: float = TAU_FEAS) -> PolytopeReport:
    """Decide whether z lies in the open feasibility polytope.

    Feasible iff the normalized cone LP minimum exceeds `tol`; minima in
    [-tol, tol] are reported as 'boundary' and treated as infeasible.
    Infeasible reports carry the minimizing cone direction as a
    certificate; feasible reports carry an interior length structure.
    """
    z = np.asarray(z, dtype=float)
    value, y = _cone_lp_min(cx, z)
    boundary_values = coords.boundary_z_sums(cx, z)
    if value > tol:
        _, t = _margin_lp(cx, z)
        witness = coords.x_of(cx, t)
        return PolytopeReport(
            feasible=True,
            status="feasible",
            lp_min=value,
            boundary_values=boundary_values,
            witness=witness,
        )
    status = "boundary" if value >= -tol else "infeasible"
    return PolytopeReport(
        feasible=False,
        status=status,
        lp_min=value,
        boundary_values=boundary_values,
        certificate=y,
    )


def check_cycles(cx: HexComplex, z, cycles: list[EdgeCycle]) -> list[tuple[EdgeCycle, float]]:
    """Cycles whose z-sum is nonpositive (violations of the open
    polytope's strict inequalities)."""
    z = np.asarray(z, dtype=float)
    out = []
    for cyc in cycles:
        s = float(sum(z[e] for e in cyc.edges))
        if s <= 0.0:
            out.append((cyc, s))
    return out


def interior_point(cx: HexComplex, z, tol: float = TAU_FEAS) -> np.ndarray:
    """A t-coordinate in the open slice with invariant z: the max-margin
    point of the facing-pair parametrization.  Raises
    InfeasibleCoordinateError (with the feasibility report) when no
    interior point exists."""
    z = np.asarray(z, dtype=float)
    mu, t = _margin_lp(cx, z)
    if mu <= tol:
        raise InfeasibleCoordinateError(check_feasibility(cx, z, tol))
    return t
