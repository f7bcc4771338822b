"""Exact solvers: exhaustive enumeration and a depth-first branch and bound.

Both restrict center characters at position j to the characters appearing
in column j, which is lossless: swapping an out-of-column character for
any in-column one never increases any string's distance.
"""

from __future__ import annotations

import time
from dataclasses import dataclass

import numpy as np

from .core import CenterString, Instance, objective
from .errors import CapacityError
from .lp import build_csp_lp, lp_lower_bound, solve_lp
from .simplex import OPTIMAL

PROOF_ENUMERATION = "enumeration"
PROOF_BRANCH_AND_BOUND = "branch-and-bound"

_CHUNK = 1 << 16


@dataclass(frozen=True)
class ExactResult:
    """Outcome of a complete (or timed-out) exact search."""

    center: CenterString
    optimum: int
    nodes_explored: int
    proof: str
    certified: bool

    def __post_init__(self) -> None:
        if self.optimum != self.center.objective:
            raise ValueError("optimum must equal the center's objective")


def brute_force_center(
    inst: Instance, node_limit: int = 2_000_000
) -> ExactResult:
    """Enumerate every center over the per-column character sets.

    The enumeration order is mixed-radix, most significant digit first,
    with each column's candidates in alphabet order; the first optimum in
    that order wins, so results are deterministic. Raises CapacityError
    (naming the required node count) when the grid exceeds ``node_limit``.
    """
    codes = inst.codes
    n, m = inst.n, inst.m
    col_codes = [np.unique(codes[:, j]) for j in range(n)]
    radices = [len(cc) for cc in col_codes]
    total = 1
    for r in radices:
        total *= r
    if total > node_limit:
        raise CapacityError(required=total, limit=node_limit)

    # Strides for decoding a flat index into per-column digit choices.
    strides = np.empty(n, dtype=np.int64)
    acc = 1
    for j in range(n - 1, -1, -1):
        strides[j] = acc
        acc *= radices[j]
    radix_arr = np.array(radices, dtype=np.int64)
    col_lookup = [cc.astype(np.int16) for cc in col_codes]

    best_obj = n + 1
    best_codes: np.ndarray | None = None
    for start in range(0, total, _CHUNK):
        stop = min(start + _CHUNK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        digits = (idx[:, None] // strides[None, :]) % radix_arr[None, :]
        grid = np.empty((stop - start, n), dtype=np.int16)
        for j in range(n):
            grid[:, j] = col_lookup[j][digits[:, j]]
        obj = np.zeros(stop - start, dtype=np.int32)
        for i in range(m):
            np.maximum(obj, (grid != codes[i][None, :]).sum(axis=1), out=obj)
        pos = int(np.argmin(obj))
        if int(obj[pos]) < best_obj:
            best_obj = int(obj[pos])
            best_codes = grid[pos].copy()

    assert best_codes is not None
    center_str = "".join(inst.alphabet.symbols[c] for c in best_codes)
    center = objective(center_str, inst)
    return ExactResult(
        center=center,
        optimum=center.objective,
        nodes_explored=total,
        proof=PROOF_ENUMERATION,
        certified=True,
    )


def branch_and_bound(
    inst: Instance,
    time_limit: float = 60.0,
    use_lp_bound: bool = False,
) -> ExactResult:
    """Depth-first search over positions with mismatch-count pruning.

    A node is cut as soon as some string's partial mismatch count reaches
    the incumbent objective. The initial incumbent is the best input
    string used as a center. With ``use_lp_bound`` the search can stop
    early once the incumbent matches the LP ceiling. On timeout the
    incumbent comes back with ``certified=False`` rather than an error.
    """
    codes = inst.codes
    n, m = inst.n, inst.m

    # Children ordered by descending column frequency (ties: alphabet order)
    # so good incumbents appear early.
    order: list[list[int]] = []
    for j in range(n):
        vals, counts = np.unique(codes[:, j], return_counts=True)
        ranked = sorted(zip(vals.tolist(), counts.tolist()), key=lambda t: (-t[1], t[0]))
        order.append([v for v, _ in ranked])

    pairwise = (codes[:, None, :] != codes[None, :, :]).sum(axis=2)
    input_objs = pairwise.max(axis=1)
    best = int(input_objs.min())
    best_codes = codes[int(np.argmin(input_objs))].copy()

    lower_bound = 0
    if use_lp_bound:
        sol = solve_lp(build_csp_lp(inst))
        if sol.status == OPTIMAL:
            lower_bound = lp_lower_bound(sol)

    cols = codes.T.tolist()
    deadline = time.monotonic() + time_limit
    mis = [0] * m
    partial = [0] * n
    nodes = 0
    timed_out = False

    def descend(j: int, cur_max: int) -> None:
        nonlocal best, best_codes, nodes, timed_out
        if timed_out or best <= lower_bound:
            return
        if j == n:
            if cur_max < best:
                best = cur_max
                best_codes = np.array(partial, dtype=np.int16)
            return
        col = cols[j]
        for ch in order[j]:
            nodes += 1
            if nodes % 4096 == 0 and time.monotonic() > deadline:
                timed_out = True
                return
            new_max = cur_max
            for i in range(m):
                if col[i] != ch:
                    mis[i] += 1
                    if mis[i] > new_max:
                        new_max = mis[i]
            if new_max < best:
                partial[j] = ch
                descend(j + 1, new_max)
            for i in range(m):
                if col[i] != ch:
                    mis[i] -= 1
            if timed_out:
                return

    descend(0, 0)

    center_str = "".join(inst.alphabet.symbols[c] for c in best_codes)
    center = objective(center_str, inst)
    return ExactResult(
        center=center,
        optimum=center.objective,
        nodes_explored=nodes,
        proof=PROOF_BRANCH_AND_BOUND,
        certified=not timed_out,
    )
