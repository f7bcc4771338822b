"""Dense bounded-variable primal simplex.

Solves

    min  c . x
    s.t. A x = b,   lower <= x <= upper

starting from a caller-supplied basis whose basic solution is feasible.
Nonbasic variables rest at one of their bounds; a variable whose bounds
coincide is pinned and never enters the basis.

Pivot selection is largest reduced cost (ties: lowest column index) with a
permanent switch to Bland's rule once 2 * (rows + cols) consecutive
degenerate steps accumulate, which guarantees termination. The tableau is
kept dense: problem sizes here stay in the low thousands of columns.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

OPTIMAL = "optimal"
INFEASIBLE = "infeasible"
NUMERIC_FAILURE = "numeric-failure"

_BASIC, _AT_LOWER, _AT_UPPER = 0, 1, 2

# Feasibility slack allowed on the caller's starting point.
_START_TOL = 1e-7


@dataclass
class SimplexResult:
    x: np.ndarray
    objective: float
    iterations: int
    status: str


def solve_bounded(
    A: np.ndarray,
    b: np.ndarray,
    c: np.ndarray,
    lower: np.ndarray,
    upper: np.ndarray,
    basis: np.ndarray,
    *,
    opt_tol: float = 1e-6,
    pivot_tol: float = 1e-9,
    max_iterations: int | None = None,
) -> SimplexResult:
    """Run the simplex loop; returns a vertex minimizer or a failure status.

    ``basis`` lists one column per row; setting every nonbasic variable to
    its lower bound must give basic values within [lower, upper] (this is a
    caller contract, checked up front). A wrong answer is never returned
    silently: iteration-cap or degeneracy exhaustion comes back as
    ``numeric-failure``.
    """
    A = np.asarray(A, dtype=float)
    b = np.asarray(b, dtype=float)
    c = np.asarray(c, dtype=float)
    lower = np.asarray(lower, dtype=float)
    upper = np.asarray(upper, dtype=float)
    nrows, ncols = A.shape
    basis = np.asarray(basis, dtype=np.int64).copy()
    if basis.shape != (nrows,) or len(set(basis.tolist())) != nrows:
        raise ValueError("basis must name one distinct column per row")
    if max_iterations is None:
        max_iterations = 25 * (nrows + ncols) + 100

    vstat = np.full(ncols, _AT_LOWER, dtype=np.int8)
    vstat[basis] = _BASIC

    # Tableau carries B^-1 [A | b]; column `ncols` is the transformed rhs.
    try:
        T = np.linalg.solve(A[:, basis], np.concatenate([A, b[:, None]], axis=1))
    except np.linalg.LinAlgError:
        return SimplexResult(
            x=np.full(ncols, np.nan),
            objective=np.nan,
            iterations=0,
            status=NUMERIC_FAILURE,
        )

    def basic_values() -> np.ndarray:
        vals = np.where(vstat == _AT_UPPER, upper, lower)
        nz = np.where((vstat != _BASIC) & (vals != 0.0))[0]
        out = T[:, ncols].copy()
        if nz.size:
            out -= T[:, nz] @ vals[nz]
        return out

    xB = basic_values()
    if (xB < lower[basis] - _START_TOL).any() or (xB > upper[basis] + _START_TOL).any():
        raise ValueError("starting basis is not primal feasible")

    z = c - c[basis] @ T[:, :ncols]
    z[basis] = 0.0

    can_move = (upper - lower) > pivot_tol
    bland = False
    degenerate_run = 0
    bland_trigger = 2 * (nrows + ncols)
    iterations = 0

    while True:
        nonbasic_lo = (vstat == _AT_LOWER) & can_move & (z < -opt_tol)
        nonbasic_up = (vstat == _AT_UPPER) & can_move & (z > opt_tol)
        eligible = np.where(nonbasic_lo | nonbasic_up)[0]
        if eligible.size == 0:
            break
        if iterations >= max_iterations:
            return SimplexResult(
                x=np.full(ncols, np.nan),
                objective=np.nan,
                iterations=iterations,
                status=NUMERIC_FAILURE,
            )
        if bland:
            enter = int(eligible[0])
        else:
            enter = int(eligible[np.argmax(np.abs(z[eligible]))])
        sigma = 1.0 if vstat[enter] == _AT_LOWER else -1.0
        ys = sigma * T[:, enter]

        # Ratio test: how far can the entering variable move before a basic
        # variable hits a bound, or it reaches its own opposite bound?
        delta = np.full(nrows, np.inf)
        dec = ys > pivot_tol
        inc = ys < -pivot_tol
        if dec.any():
            delta[dec] = (xB[dec] - lower[basis[dec]]) / ys[dec]
        if inc.any():
            delta[inc] = (upper[basis[inc]] - xB[inc]) / (-ys[inc])
        np.maximum(delta, 0.0, out=delta)
        flip = upper[enter] - lower[enter]
        row_min = float(delta.min()) if nrows else np.inf

        if flip < row_min - 1e-12:
            # The entering variable reaches its other bound first: bound
            # flip, no basis change. flip is finite here (it is below
            # row_min, and an infinite flip cannot be).
            xB -= flip * ys
            vstat[enter] = _AT_UPPER if vstat[enter] == _AT_LOWER else _AT_LOWER
            iterations += 1
            degenerate_run = 0
            continue

        if not np.isfinite(row_min):
            return SimplexResult(
                x=np.full(ncols, np.nan),
                objective=np.nan,
                iterations=iterations,
                status=NUMERIC_FAILURE,
            )

        ties = np.where(delta <= row_min + 1e-12)[0]
        row = int(ties[np.argmin(basis[ties])])
        leave = int(basis[row])
        step = row_min
        if step <= pivot_tol:
            degenerate_run += 1
            if degenerate_run >= bland_trigger:
                bland = True
        else:
            degenerate_run = 0

        enter_bound = lower[enter] if vstat[enter] == _AT_LOWER else upper[enter]
        xB -= step * ys
        vstat[leave] = _AT_LOWER if ys[row] > 0 else _AT_UPPER
        basis[row] = enter
        vstat[enter] = _BASIC
        xB[row] = enter_bound + sigma * step

        pivot = T[row, enter]
        if abs(pivot) < pivot_tol:
            return SimplexResult(
                x=np.full(ncols, np.nan),
                objective=np.nan,
                iterations=iterations,
                status=NUMERIC_FAILURE,
            )
        T[row, :] /= pivot
        colvals = T[:, enter].copy()
        colvals[row] = 0.0
        T -= np.outer(colvals, T[row, :])
        zcoef = z[enter]
        if zcoef != 0.0:
            z -= zcoef * T[row, :ncols]
        T[:, enter] = 0.0
        T[row, enter] = 1.0
        z[enter] = 0.0
        iterations += 1

    x = np.where(vstat == _AT_UPPER, upper, lower).astype(float)
    x[basis] = np.clip(basic_values(), lower[basis], upper[basis])
    return SimplexResult(
        x=x,
        objective=float(c @ x),
        iterations=iterations,
        status=OPTIMAL,
    )
