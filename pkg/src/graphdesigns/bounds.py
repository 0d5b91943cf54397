"""Neighbourhood growth forced by exact integration.

If a positively weighted subset integrates every eigenfunction whose
frequency exceeds ``lam``, then for every radius ``k``::

    #{x : d(x, W) <= k}  >=  1/2 min(lam^(-2k), n)
                         >=  1/2 min(|W| lam^(-2k), n)     (equal weights)

and the sharper form ``1/#S_k - 1/n <= lam^(2k) sum a_w^2`` holds.  This
module evaluates the three bounds and checks them against the observed
ball sizes.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .design import EPS_INT, Design, design_strength
from .graph import Graph, check_subset, distances_from
from .spectral import Spectrum

# relative slack when comparing an integer count with a real bound
BOUND_RTOL = 1e-9


class HypothesisError(ValueError):
    """The design or graph does not satisfy the hypotheses of the bound."""


@dataclass(frozen=True)
class GrowthProfile:
    subset: tuple[int, ...]
    sizes: tuple[int, ...]

    @property
    def radii(self) -> range:
        return range(len(self.sizes))

    @property
    def eccentricity(self) -> int:
        return len(self.sizes) - 1

    def at(self, k: int) -> int:
        return self.sizes[min(k, self.eccentricity)]


def growth_profile(g: Graph, members) -> GrowthProfile:
    """Ball sizes ``|{x : d(x, W) <= k}|`` for ``k = 0 .. ecc(W)``."""
    subset = check_subset(g, members)
    dist = distances_from(g, subset)
    if (dist < 0).any():
        raise ValueError("graph is disconnected; some vertices are unreachable")
    counts = np.bincount(dist)
    return GrowthProfile(subset, tuple(int(c) for c in np.cumsum(counts)))


@dataclass(frozen=True)
class BoundValues:
    general: float
    equal: float | None
    sharp: float
    vacuous: bool


def theorem_lower_bound(lam: float, k: int, n: int, w_size: int, equal: bool,
                        sum_sq_weights: float) -> BoundValues:
    """Evaluate the three lower bounds on ``#{x : d(x, W) <= k}``.

    ``lam <= 0`` means every non-constant eigenfunction is integrated; then
    ``lam^(-2k)`` is read as infinite for ``k >= 1`` (bounds become ``n/2``
    and ``n``) and the result is flagged vacuous.
    """
    if k < 0:
        raise ValueError("radius must be non-negative")
    if lam > 1:
        raise ValueError("lam is a frequency and cannot exceed 1")
    vacuous = lam <= 0
    decay = 1.0 if k == 0 else (0.0 if vacuous else lam ** (2 * k))
    growth = math.inf if decay == 0 else 1.0 / decay
    general = 0.5 * min(growth, n)
    eq = 0.5 * min(w_size * growth, n) if equal else None
    sharp = 1.0 / (1.0 / n + decay * sum_sq_weights)
    return BoundValues(general, eq, sharp, vacuous)


def _holds(observed: int, bound: float | None) -> bool | None:
    if bound is None:
        return None
    return observed >= bound * (1 - BOUND_RTOL)


@dataclass(frozen=True)
class RadiusCheck:
    k: int
    observed: int
    general: float
    equal: float | None
    sharp: float
    general_ok: bool
    equal_ok: bool | None
    sharp_ok: bool

    @property
    def ok(self) -> bool:
        return self.general_ok and self.sharp_ok and self.equal_ok is not False


@dataclass(frozen=True)
class BoundCertificate:
    subset: tuple[int, ...]
    lam: float
    lam_source: str
    vacuous: bool
    rows: tuple[RadiusCheck, ...]

    @property
    def passed(self) -> bool:
        return all(r.ok for r in self.rows)

    def to_dict(self) -> dict:
        return {
            "subset": list(self.subset),
            "lambda": self.lam,
            "lambda_source": self.lam_source,
            "vacuous": self.vacuous,
            "passed": self.passed,
            "radii": [
                {"k": r.k, "observed": r.observed, "general": r.general, "equal": r.equal,
                 "sharp": r.sharp, "general_ok": r.general_ok, "equal_ok": r.equal_ok,
                 "sharp_ok": r.sharp_ok}
                for r in self.rows
            ],
        }


def check_theorem(g: Graph, s: Spectrum, d: Design, *, lam: float | None = None,
                  allow_irregular: bool = False, eps_int: float = EPS_INT) -> BoundCertificate:
    """Certify the growth bounds for ``d`` at every radius up to its eccentricity.

    By default ``lam`` is the verified threshold of the design: the largest
    frequency it fails to integrate.  An explicit ``lam`` must not be
    smaller than that, or the hypothesis would be false.
    """
    if not d.positive:
        raise HypothesisError("the bound needs strictly positive weights")
    if not g.is_regular() and not allow_irregular:
        raise HypothesisError("A D^-1 has no orthogonal eigenbasis on an irregular graph; "
                              "pass allow_irregular=True to evaluate anyway")
    report = design_strength(s, d, eps_int)
    if lam is None:
        lam, source = report.lambda_star, "verified"
    else:
        if lam < report.lambda_star - 1e-12:
            raise HypothesisError(f"lam={lam} is below the design threshold {report.lambda_star}; "
                                  "some eigenfunction above it is not integrated")
        source = "override"
    profile = growth_profile(g, d.subset)
    sum_sq = float(np.sum(d.weights ** 2))
    rows = []
    for k in profile.radii:
        b = theorem_lower_bound(lam, k, g.n, d.size, d.equal_weights, sum_sq)
        obs = profile.sizes[k]
        rows.append(RadiusCheck(k, obs, b.general, b.equal, b.sharp,
                                _holds(obs, b.general), _holds(obs, b.equal), _holds(obs, b.sharp)))
    return BoundCertificate(d.subset, float(lam), source, lam <= 0, tuple(rows))
