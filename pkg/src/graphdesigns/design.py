"""Quadrature residuals and design strength.

A weighted subset integrates an eigenfunction exactly when its weighted
sum equals the eigenfunction's mean over all vertices.  Equivalently the
signed measure ``mu = sum_w a_w delta_w - 1/n`` is orthogonal to it.
Everything below works with projections of ``mu`` onto whole frequency
classes, so results never depend on the basis chosen inside a degenerate
eigenspace.
"""

from __future__ import annotations

import math
from collections.abc import Sequence
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .graph import Graph, check_subset
from .spectral import Spectrum

EPS_INT = 1e-9
# residuals below this multiple of |weights| are round-off from forming mu
_ROUNDOFF = 1e3 * np.finfo(float).eps


@dataclass(frozen=True, eq=False)
class Design:
    subset: tuple[int, ...]
    weights: np.ndarray
    equal_weights: bool = False

    def __post_init__(self):
        if len(self.subset) != len(self.weights):
            raise ValueError("one weight per subset member is required")
        if abs(float(np.sum(self.weights)) - 1.0) > 1e-12:
            raise ValueError(f"weights must sum to 1, got {float(np.sum(self.weights))!r}")

    @classmethod
    def equal(cls, g: Graph, members: Sequence[int]) -> Design:
        subset = check_subset(g, members)
        return cls(subset, np.full(len(subset), 1.0 / len(subset)), equal_weights=True)

    @classmethod
    def weighted(cls, g: Graph, members: Sequence[int], weights: Sequence[float]) -> Design:
        if len(members) != len(weights):
            raise ValueError("one weight per subset member is required")
        pairs = sorted(zip(members, weights))
        subset = check_subset(g, [p[0] for p in pairs])
        return cls(subset, np.array([p[1] for p in pairs], dtype=float))

    @property
    def size(self) -> int:
        return len(self.subset)

    @property
    def positive(self) -> bool:
        return bool(np.all(self.weights > 0))

    def measure(self, n: int) -> np.ndarray:
        """The signed measure ``sum_w a_w delta_w - 1/n``."""
        mu = np.full(n, -1.0 / n)
        np.add.at(mu, list(self.subset), self.weights)
        return mu


Rule = Literal["admissible", "complete"]
RULES = ("admissible", "complete")


@dataclass(frozen=True, eq=False)
class DesignReport:
    """Outcome of checking one design against a spectrum.

    ``strength`` is the largest K such that, for some admissible ordering
    and some orthonormal eigenbasis, the first K eigenfunctions are
    integrated.  ``complete_strength`` only counts eigenspaces integrated
    in full, so it holds for every eigenbasis.
    """

    design: Design
    strength: int
    complete_strength: int
    lambda_star: float
    class_residuals: np.ndarray
    space_residuals: list[np.ndarray]
    failing_class: int | None
    mu_norm: float

    @property
    def all_weights_positive(self) -> bool:
        return self.design.positive

    def to_dict(self, graph_name: str = "") -> dict:
        return {
            "graph": graph_name,
            "subset": list(self.design.subset),
            "weights": self.design.weights.tolist(),
            "equal_weights": self.design.equal_weights,
            "K": self.strength,
            "K_complete": self.complete_strength,
            "lambda_star": self.lambda_star,
            "class_residuals": self.class_residuals.tolist(),
            "failing_class": self.failing_class,
            "all_weights_positive": self.all_weights_positive,
        }


def _failing_spaces(space_res: np.ndarray, tol: np.ndarray) -> np.ndarray:
    """Boolean mask (rows, spaces) of eigenspaces not integrated.

    Only called for rows whose class residual failed.  A class can fail
    while no single eigenspace does (its residual is a root sum of
    squares), in which case the largest contributor is blamed.
    """
    fail = space_res > tol[:, np.newaxis]
    none = ~fail.any(axis=1)
    if none.any():
        fail[none, np.argmax(space_res[none], axis=1)] = True
    return fail


def _class_gain(fail: np.ndarray, dims: np.ndarray, rule: str) -> np.ndarray:
    # eigenfunctions gained inside the first failing class
    if rule == "admissible":
        # integrated directions first, one failing direction per failing space
        return dims.sum() - fail.sum(axis=1)
    return (~fail * dims).sum(axis=1)


def quadrature_residuals(s: Spectrum, d: Design) -> np.ndarray:
    """Norm of the projection of the design measure onto each frequency class."""
    if max(d.subset) >= s.n:
        raise ValueError("design and spectrum live on different graphs")
    mu = s.scale * d.measure(s.n)
    return np.array([np.linalg.norm(b.T @ mu) for b in s.class_bases])


def design_strength(s: Spectrum, d: Design, eps_int: float = EPS_INT) -> DesignReport:
    """Count the leading eigenfunctions integrated exactly.

    Classes are scanned in frequency order and counted whole while their
    residual is at most ``eps_int * |mu|`` (floored at round-off level, so
    a measure that vanishes up to rounding integrates everything).  Inside the first failing class
    each eigenspace whose residual fails still has a codimension-one
    integrated subspace, so an admissible ordering can list those
    directions before the first failing one.
    """
    if max(d.subset) >= s.n:
        raise ValueError("design and spectrum live on different graphs")
    mu = s.scale * d.measure(s.n)
    mu_norm = float(np.linalg.norm(mu))
    tol = max(eps_int * mu_norm, _ROUNDOFF * float(np.linalg.norm(d.weights)))
    space_res = [np.array([np.linalg.norm(b.T @ mu) for b in blocks]) for blocks in s.space_bases]
    residuals = np.array([np.linalg.norm(r) for r in space_res])
    strength = complete = 0
    failing = None
    for j, (c, r) in enumerate(zip(s.classes, residuals)):
        if r > tol:
            failing = j
            fail = _failing_spaces(space_res[j][np.newaxis, :], np.array([tol]))
            dims = np.array([len(sp) for sp in c.spaces])
            strength += int(_class_gain(fail, dims, "admissible")[0])
            complete += int(_class_gain(fail, dims, "complete")[0])
            break
        strength += c.dim
        complete += c.dim
    lam = 0.0 if failing is None else s.classes[failing].frequency
    return DesignReport(d, strength, complete, lam, residuals, space_res, failing, mu_norm)


def threshold(report: DesignReport, s: Spectrum) -> float:
    """Largest frequency that is not integrated exactly (0 if none).

    Every eigenfunction with a strictly larger frequency is integrated, so
    this is the ``lambda`` that the growth bounds may use.
    """
    if report.failing_class is None:
        return 0.0
    return s.classes[report.failing_class].frequency


def _class_tables(s: Spectrum):
    # per non-constant class: scaled basis rows per eigenspace, mean offsets, dims
    tables = []
    for c, blocks in zip(s.classes[1:], s.space_bases[1:]):
        rows = [s.scale[:, np.newaxis] * b for b in blocks]
        tables.append((rows, [r.sum(axis=0) / s.n for r in rows],
                       np.array([len(sp) for sp in c.spaces])))
    return tables


def equal_weight_strengths(s: Spectrum, subsets: np.ndarray, eps_int: float = EPS_INT,
                           chunk: int = 200_000, rule: Rule = "admissible") -> np.ndarray:
    """Vectorised :func:`design_strength` for many equal-weight subsets.

    ``subsets`` is an integer array of shape ``(B, k)``; rows need not be
    sorted but must not repeat vertices.  Returns ``B`` strengths under
    ``rule`` (``"complete"`` gives :attr:`DesignReport.complete_strength`).
    """
    if rule not in RULES:
        raise ValueError(f"rule must be one of {RULES}")
    subsets = np.asarray(subsets)
    count, k = subsets.shape
    out = np.empty(count, dtype=np.int64)
    tables = _class_tables(s)
    prefix = np.cumsum([0] + [c.dim for c in s.classes])
    n = s.n
    sq = s.scale ** 2
    base = sq.sum() / n**2
    for lo in range(0, count, chunk):
        idx = subsets[lo:lo + chunk]
        # |scale * mu|^2 for mu = delta_W / k - 1/n
        mu_sq = base + sq[idx].sum(axis=1) * ((1.0 / k - 1.0 / n) ** 2 - 1.0 / n**2)
        tol = np.maximum(eps_int * np.sqrt(np.maximum(mu_sq, 0.0)), _ROUNDOFF / math.sqrt(k))
        k_out = np.full(len(idx), n, dtype=np.int64)
        alive = np.arange(len(idx))
        for j, (rows, offsets, dims) in enumerate(tables, start=1):
            if alive.size == 0:
                break
            sub = idx[alive]
            space_res = np.empty((len(alive), len(rows)))
            for i, (r, o) in enumerate(zip(rows, offsets)):
                proj = r[sub].sum(axis=1) / k - o
                space_res[:, i] = np.einsum("ij,ij->i", proj, proj)
            space_res = np.sqrt(space_res)
            res = np.sqrt((space_res ** 2).sum(axis=1))
            bad = res > tol[alive]
            if bad.any():
                fail = _failing_spaces(space_res[bad], tol[alive[bad]])
                k_out[alive[bad]] = prefix[j] + _class_gain(fail, dims, rule)
            alive = alive[~bad]
        out[lo:lo + chunk] = k_out
    return out
