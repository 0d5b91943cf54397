"""Random-walk operator, its spectrum and the low-to-high frequency ordering.

For an eigenvalue ``lam`` of ``L = A D^-1 - I`` the *frequency* is
``|lam + 1|``: values near 1 survive diffusion (smooth functions), values
near 0 die out quickly.  Eigenpairs are stored sorted by frequency,
non-increasing, with the constant eigenvector in position 0.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field
from functools import cached_property
from typing import Literal

import numpy as np

from .graph import Graph

EPS_EIG = 1e-10
EPS_DEG = 1e-8

OperatorKind = Literal["random-walk", "normalized"]


class SpectrumError(ValueError):
    """Raised when an operator cannot be decomposed as requested."""


class AmbiguousClusteringWarning(UserWarning):
    """Two frequencies are neither clearly equal nor clearly distinct."""


def build_operator(g: Graph, kind: OperatorKind = "random-walk", *, strict: bool = True) -> np.ndarray:
    """Dense ``A D^-1`` (``kind="random-walk"``) or ``D^-1/2 A D^-1/2``.

    ``A D^-1`` is only symmetric for regular graphs; with ``strict=True``
    asking for it on an irregular graph is an error.
    """
    a = g.adjacency_matrix()
    deg = g.degrees.astype(float)
    if kind == "random-walk":
        if strict and not g.is_regular():
            raise SpectrumError("A D^-1 is not symmetric on an irregular graph; "
                                "use kind='normalized' or strict=False")
        return a / deg[np.newaxis, :]
    if kind == "normalized":
        s = 1.0 / np.sqrt(deg)
        return s[:, np.newaxis] * a * s[np.newaxis, :]
    raise ValueError(f"unknown operator kind {kind!r}")


@dataclass(frozen=True, eq=False)
class FrequencyClass:
    """Eigen-indices sharing one frequency ``|lam + 1|``.

    ``spaces`` splits the members into eigenspaces of ``A D^-1``: a class
    at frequency ``f > 0`` can hold both ``+f`` and ``-f``.
    """

    frequency: float
    members: tuple[int, ...]
    ambiguous: bool = False
    spaces: tuple[tuple[int, ...], ...] = ()

    def __post_init__(self):
        if not self.spaces:
            object.__setattr__(self, "spaces", (self.members,))

    @property
    def dim(self) -> int:
        return len(self.members)


@dataclass(frozen=True, eq=False)
class Spectrum:
    """Eigen-decomposition of the random-walk operator in frequency order.

    Attributes
    ----------
    values : ndarray, shape (n,)
        Eigenvalues ``lam`` of ``L = A D^-1 - I`` (so ``lam + 1`` are the
        eigenvalues of the walk operator).
    vectors : ndarray, shape (n, n)
        Column ``i`` is the eigenvector of ``A D^-1`` for ``values[i]``.
    basis : ndarray, shape (n, n)
        Orthonormal columns used for basis-free projections.  Equal to
        ``vectors`` on regular graphs.
    scale : ndarray, shape (n,)
        ``<f, vectors[:, i]> = <scale * f, basis[:, i]>`` up to a common
        constant.  All ones on regular graphs.
    ordering : ndarray, shape (n,)
        Permutation taking the solver's ascending output to frequency order.
    """

    values: np.ndarray
    vectors: np.ndarray
    basis: np.ndarray
    scale: np.ndarray
    ordering: np.ndarray
    eps_eig: float = EPS_EIG
    eps_deg: float = EPS_DEG
    standard_orthogonal: bool = True
    meta: dict = field(default_factory=dict)

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def frequency(self) -> np.ndarray:
        return np.abs(self.values + 1.0)

    @cached_property
    def classes(self) -> list[FrequencyClass]:
        return frequency_classes(self, self.eps_deg)

    @cached_property
    def class_bases(self) -> list[np.ndarray]:
        return [self.basis[:, list(c.members)] for c in self.classes]

    @cached_property
    def space_bases(self) -> list[list[np.ndarray]]:
        """Per class, one orthonormal basis block per eigenspace."""
        return [[self.basis[:, list(sp)] for sp in c.spaces] for c in self.classes]

    def to_dict(self, include_vectors: bool = False) -> dict:
        out = {
            "n": self.n,
            "eigenvalues": self.values.tolist(),
            "frequencies": self.frequency.tolist(),
            "classes": [
                {"frequency": c.frequency, "members": list(c.members), "dim": c.dim,
                 "eigenvalues": [float(self.values[sp[0]]) for sp in c.spaces],
                 "space_dims": [len(sp) for sp in c.spaces], "ambiguous": c.ambiguous}
                for c in self.classes
            ],
            "standard_orthogonal": self.standard_orthogonal,
            "eps_eig": self.eps_eig,
            "eps_deg": self.eps_deg,
        }
        if include_vectors:
            out["eigenvectors"] = self.vectors.T.tolist()
        return out


def _frequency_order(shifted: np.ndarray, digits: int = 9) -> np.ndarray:
    # ties in |mu| are broken toward positive mu so the constant vector
    # (mu = 1) precedes the bipartite one (mu = -1)
    freq = np.round(np.abs(shifted), digits)
    return np.lexsort((-shifted, -freq))


def eigendecompose(m: np.ndarray, *, degrees: np.ndarray | None = None,
                   eps_eig: float = EPS_EIG, eps_deg: float = EPS_DEG) -> Spectrum:
    """Full eigendecomposition of a symmetric walk-type operator.

    ``m`` is either ``A D^-1`` of a regular graph or ``D^-1/2 A D^-1/2``.
    For the latter pass ``degrees``; eigenvectors are then mapped back to
    ``A D^-1`` by ``D^1/2`` scaling, and orthogonality only holds in the
    degree-weighted inner product (``standard_orthogonal`` is False).
    """
    m = np.asarray(m, dtype=float)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise SpectrumError("operator must be a square matrix")
    asym = np.abs(m - m.T).max() if m.size else 0.0
    if asym > eps_eig:
        raise SpectrumError(f"operator is not symmetric (max deviation {asym:.3g})")
    try:
        w, v = np.linalg.eigh((m + m.T) / 2)
    except np.linalg.LinAlgError as exc:
        raise SpectrumError("eigensolver did not converge") from exc

    order = _frequency_order(w)
    w, v = w[order], v[:, order]

    n = len(w)
    regular = degrees is None or np.all(degrees == degrees[0])
    if regular:
        scale = np.ones(n)
        vectors = v
    else:
        deg = np.asarray(degrees, dtype=float)
        scale = np.sqrt(deg / deg.mean())
        vectors = scale[:, np.newaxis] * v
        vectors = vectors / np.linalg.norm(vectors, axis=0)

    # orient the constant vector positively
    if vectors[:, 0].sum() < 0:
        vectors[:, 0] *= -1
        v[:, 0] *= -1

    return Spectrum(values=w - 1.0, vectors=vectors, basis=v, scale=scale,
                    ordering=order, eps_eig=eps_eig, eps_deg=eps_deg,
                    standard_orthogonal=bool(regular))


def spectrum(g: Graph, *, kind: OperatorKind = "random-walk", allow_irregular: bool = False,
             eps_eig: float = EPS_EIG, eps_deg: float = EPS_DEG) -> Spectrum:
    """Spectrum of the random-walk Laplacian of ``g``.

    Irregular graphs go through the normalized-symmetric operator and need
    ``allow_irregular=True`` (or ``kind="normalized"``).
    """
    if g.is_regular():
        m = build_operator(g, "random-walk")
        return eigendecompose(m, eps_eig=eps_eig, eps_deg=eps_deg)
    if kind == "random-walk" and not allow_irregular:
        raise SpectrumError("graph is not regular: A D^-1 has no orthonormal eigenbasis; "
                            "pass allow_irregular=True to use the degree-weighted basis")
    m = build_operator(g, "normalized")
    return eigendecompose(m, degrees=g.degrees, eps_eig=eps_eig, eps_deg=eps_deg)


def frequency_classes(s: Spectrum, eps_deg: float = EPS_DEG) -> list[FrequencyClass]:
    """Group eigen-indices into classes of (numerically) equal frequency.

    The constant eigenvector is always its own leading class.  Remaining
    indices are single-linkage clustered: neighbours in frequency order
    share a class iff their frequencies differ by at most ``eps_deg``.
    A gap in ``(eps_deg/2, 2*eps_deg]`` is flagged as ambiguous.
    """
    freq = s.frequency
    mu = s.values + 1.0
    classes = [FrequencyClass(float(freq[0]), (0,))]
    if s.n == 1:
        return classes
    groups: list[list[int]] = [[1]]
    flags = [False]
    for i in range(2, s.n):
        gap = abs(freq[i - 1] - freq[i])
        ambiguous = eps_deg / 2 < gap <= 2 * eps_deg
        if gap <= eps_deg:
            groups[-1].append(i)
            flags[-1] = flags[-1] or ambiguous
        else:
            if ambiguous:
                flags[-1] = True
            groups.append([i])
            flags.append(ambiguous)
    for grp, flag in zip(groups, flags):
        if flag:
            warnings.warn(f"frequency gap near eps_deg={eps_deg:g} around "
                          f"{freq[grp[0]]:.12g}; class boundaries are ambiguous",
                          AmbiguousClusteringWarning, stacklevel=2)
        # within a class, +f members precede -f members (see _frequency_order)
        spaces = [[grp[0]]]
        for a, b in zip(grp, grp[1:]):
            if abs(mu[a] - mu[b]) <= eps_deg:
                spaces[-1].append(b)
            else:
                spaces.append([b])
        classes.append(FrequencyClass(float(np.mean(freq[grp])), tuple(grp), flag,
                                      tuple(tuple(sp) for sp in spaces)))
    return classes


def invariant_report(g: Graph, s: Spectrum) -> dict[str, float]:
    """Numerical health of a spectrum; all entries should be ~0.

    Keys: ``residual`` (max eigen-equation error), ``range`` (distance of
    eigenvalues outside [-2, 0]), ``orthonormality``, ``trace``,
    ``constant`` (deviation of the leading vector from constant), and
    ``zero_count`` (number of eigenvalues at 0, expected 1).
    """
    walk = g.adjacency_matrix() / g.degrees[np.newaxis, :]
    mu = s.values + 1.0
    phi = s.vectors
    residual = np.abs(walk @ phi - phi * mu[np.newaxis, :]).max()
    out_of_range = max(0.0, -2 - s.values.min(), s.values.max())
    gram = phi.T @ phi if s.standard_orthogonal else s.basis.T @ s.basis
    ortho = np.abs(gram - np.eye(s.n)).max()
    c = phi[:, 0]
    return {
        "residual": float(residual),
        "range": float(out_of_range),
        "orthonormality": float(ortho),
        "trace": float(abs(mu.sum())),
        "constant": float(np.ptp(c)),
        "zero_count": int(np.sum(np.abs(s.values) <= s.eps_eig)),
    }
