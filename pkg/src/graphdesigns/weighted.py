"""Weighted designs from nonsingular minors of the eigenvector matrix.

For any ``k`` there are ``k`` vertices and ``k`` eigenfunctions whose
``k x k`` minor of ``(phi_i(v))`` is invertible: otherwise every minor
would vanish and, expanding along rows, so would the determinant of the
full (orthogonal) matrix.  Solving the minor's linear system then gives
(possibly negative) weights integrating those ``k`` eigenfunctions.
"""

from __future__ import annotations

from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np

from .spectral import Spectrum

EPS_SING = 1e-10


class SingularMinorError(ValueError):
    """The requested minor is numerically singular."""


@dataclass(frozen=True, eq=False)
class WeightedSolution:
    subset: tuple[int, ...]
    eigen_indices: tuple[int, ...]
    weights: np.ndarray
    residual: float
    rcond: float
    null_space: bool = False

    @property
    def positive(self) -> bool:
        return bool(np.all(self.weights > 0))

    @property
    def total(self) -> float:
        return float(np.sum(self.weights))

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "eigen_indices": list(self.eigen_indices),
            "weights": self.weights.tolist(),
            "weight_sum": self.total,
            "residual": self.residual,
            "rcond": self.rcond,
            "null_space": self.null_space,
            "all_weights_positive": self.positive,
        }


def _system(s: Spectrum, members, targets):
    phi = s.vectors[:, list(targets)]
    a = phi[list(members), :].T
    b = phi.mean(axis=0)
    return a, b


def _rcond(a: np.ndarray) -> float:
    sv = np.linalg.svd(a, compute_uv=False)
    return float(sv[-1] / sv[0]) if sv[0] > 0 else 0.0


def solve_weights(s: Spectrum, members: Sequence[int], targets: Sequence[int], *,
                  eps_sing: float = EPS_SING) -> WeightedSolution:
    """Weights on ``members`` integrating the eigenfunctions ``targets``.

    Solves ``sum_j a_j phi_i(v_j) = mean(phi_i)`` for each target ``i``.
    When no target is constant the right-hand side vanishes.  A singular
    minor then has a null space, and the returned weights are the
    null-space vector closest to uniform, scaled to sum to one.  A
    nonsingular minor only admits the zero vector.
    """
    members, targets = list(members), list(targets)
    if len(members) != len(targets):
        raise ValueError("need as many target eigenfunctions as vertices")
    if len(set(members)) != len(members) or len(set(targets)) != len(targets):
        raise ValueError("vertices and eigen-indices must be distinct")
    if not members or max(members) >= s.n or max(targets) >= s.n or min(members + targets) < 0:
        raise ValueError("vertex or eigen-index out of range")
    order = np.argsort(members)
    members = [members[i] for i in order]
    a, b = _system(s, members, targets)
    rc = _rcond(a)
    zero_rhs = np.abs(b).max() <= s.eps_eig
    if rc < eps_sing:
        if not zero_rhs:
            raise SingularMinorError(f"minor is singular (reciprocal condition {rc:.3g} < {eps_sing:g})")
        _, sv, vt = np.linalg.svd(a)
        null = vt[sv <= eps_sing * max(sv[0], 1.0)]
        w = null.T @ (null @ np.ones(len(members)))
        if abs(w.sum()) <= eps_sing:
            raise SingularMinorError("null space of the minor has no vector with non-zero total weight")
        w = w / w.sum()
        null_space = True
    else:
        w = np.zeros(len(members)) if zero_rhs else np.linalg.solve(a, b)
        null_space = False
    residual = float(np.abs(a @ w - b).max())
    return WeightedSolution(tuple(int(v) for v in members), tuple(int(t) for t in targets),
                            w, residual, rc, null_space)


def find_minor_design(s: Spectrum, k: int, *, eps_sing: float = EPS_SING,
                      pivot_tol: float = 1e-8) -> WeightedSolution:
    """Pick ``k`` eigenfunctions and ``k`` vertices with an invertible minor.

    Rows of the eigenvector matrix are eliminated in frequency order.  A
    row whose remainder has an entry above ``pivot_tol`` on an unused
    vertex is kept, and its largest such entry becomes the pivot (lowest
    vertex on ties).  Rows of an invertible matrix are independent, so no
    row is ever skipped and the result integrates the leading ``k``
    eigenfunctions; the skip branch only guards against a defective
    eigensolver.
    """
    if not 1 <= k <= s.n:
        raise ValueError(f"k must be in [1, {s.n}]")
    rows = s.vectors.T.copy()
    kept_rows: list[int] = []
    pivots: list[int] = []
    reduced: list[np.ndarray] = []
    free = np.ones(s.n, dtype=bool)
    for i in range(s.n):
        r = rows[i].copy()
        for p, q in zip(pivots, reduced):
            r -= (r[p] / q[p]) * q
        mag = np.abs(r) * free
        top = mag.max()
        if top <= pivot_tol * max(np.abs(rows[i]).max(), 1.0):
            continue
        v = int(np.flatnonzero(mag >= top * (1 - 1e-9))[0])
        kept_rows.append(i)
        pivots.append(v)
        reduced.append(r)
        free[v] = False
        if len(kept_rows) == k:
            break
    if len(kept_rows) < k:
        raise SingularMinorError("eigenvector matrix is rank deficient; the spectrum is defective")
    return solve_weights(s, pivots, kept_rows, eps_sing=eps_sing)
