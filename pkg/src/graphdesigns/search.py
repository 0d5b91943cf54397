"""Finding equal-weight designs.

Three strategies: exhaustive enumeration of all subsets of one size, a
local search that spreads the subset out by total pairwise distance, and a
swap search that minimises the heat-kernel collision objective.  Every
subset a heuristic visits is scored with the exact strength.
"""

from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from .design import EPS_INT, Design, Rule, equal_weight_strengths
from .graph import Graph, check_subset
from .spectral import Spectrum, spectrum

DEFAULT_BUDGET = 10**7


class BudgetExceeded(RuntimeError):
    """Exhaustive search would examine more subsets than allowed."""


@dataclass(frozen=True, eq=False)
class SearchResult:
    method: str
    size: int
    best_K: int
    witnesses: list[tuple[int, ...]]
    witness_count: int
    subsets_examined: int
    seed: int | None = None
    meta: dict = field(default_factory=dict)

    def to_dict(self, graph_name: str = "") -> dict:
        return {
            "graph": graph_name,
            "method": self.method,
            "size": self.size,
            "best_K": self.best_K,
            "witnesses": [list(w) for w in self.witnesses],
            "witness_count": self.witness_count,
            "witnesses_truncated": self.witness_count > len(self.witnesses),
            "subsets_examined": self.subsets_examined,
            "seed": self.seed,
            "meta": self.meta,
        }


# ---------------------------------------------------------------------------
# exhaustive
# ---------------------------------------------------------------------------

def colex_combinations(n: int, r: int) -> np.ndarray:
    """All ``r``-subsets of ``range(n)`` as rows, in colexicographic order.

    Uses that the subsets of ``range(m)`` form a prefix of those of
    ``range(m + 1)``.
    """
    dtype = np.int16 if n < 2**15 else np.int64
    if r == 0:
        return np.zeros((1, 0), dtype=dtype)
    rows = np.arange(n, dtype=dtype)[:, np.newaxis]
    for level in range(2, r + 1):
        blocks = []
        for top in range(level - 1, n):
            head = rows[:math.comb(top, level - 1)]
            blocks.append(np.column_stack([head, np.full(len(head), top, dtype=dtype)]))
        rows = np.concatenate(blocks) if blocks else np.zeros((0, level), dtype=dtype)
    return rows


def _lex_sorted(rows: np.ndarray) -> np.ndarray:
    if len(rows) == 0:
        return rows
    return rows[np.lexsort(rows.T[::-1])]


def _scan_tops(s: Spectrum, size: int, tops: list[int], eps_int: float, keep: int, rule: str):
    """Best strength among subsets whose largest element is in ``tops``."""
    heads = colex_combinations(max(tops), size - 1) if size > 1 else None
    best, count, wit = -1, 0, []
    for top in tops:
        if size == 1:
            block = np.array([[top]])
        else:
            head = heads[:math.comb(top, size - 1)]
            block = np.column_stack([head, np.full(len(head), top, dtype=head.dtype)])
        ks = equal_weight_strengths(s, block, eps_int, rule=rule)
        kmax = int(ks.max())
        if kmax < best:
            continue
        hits = block[ks == kmax]
        if kmax > best:
            best, count, wit = kmax, 0, []
        count += len(hits)
        wit.append(_lex_sorted(hits)[:keep])
    wit = _lex_sorted(np.concatenate(wit))[:keep] if wit else np.zeros((0, size))
    return best, count, wit


def brute_force(g: Graph, s: Spectrum | None = None, size: int = 1, eps_int: float = EPS_INT, *,
                budget: int = DEFAULT_BUDGET, workers: int = 1, max_witnesses: int = 1000,
                rule: Rule = "admissible") -> SearchResult:
    """Exact best equal-weight strength over all subsets of ``size`` vertices.

    Subsets are enumerated in colex order, split by their largest element.
    With ``workers > 1`` those blocks are scanned in separate processes; the
    merged witness list is sorted lexicographically either way.  At most
    ``max_witnesses`` witnesses are kept (``witness_count`` has the total).
    """
    if not 1 <= size <= g.n:
        raise ValueError(f"size must be in [1, {g.n}]")
    total = math.comb(g.n, size)
    if total > budget:
        raise BudgetExceeded(f"C({g.n}, {size}) = {total} subsets exceeds the budget of {budget}; "
                             "raise --budget or use a heuristic search")
    s = spectrum(g) if s is None else s
    tops = list(range(size - 1, g.n))
    if workers > 1:
        # deal largest blocks first, round robin, so workers get similar loads
        order = tops[::-1]
        parts = [sorted(order[i::workers]) for i in range(workers)]
        parts = [p for p in parts if p]
        with ProcessPoolExecutor(max_workers=len(parts)) as pool:
            outs = list(pool.map(_scan_tops, [s] * len(parts), [size] * len(parts), parts,
                                 [eps_int] * len(parts), [max_witnesses] * len(parts),
                                 [rule] * len(parts)))
    else:
        outs = [_scan_tops(s, size, tops, eps_int, max_witnesses, rule)]
    best = max(o[0] for o in outs)
    count = sum(o[1] for o in outs if o[0] == best)
    wit = _lex_sorted(np.concatenate([o[2] for o in outs if o[0] == best]))[:max_witnesses]
    witnesses = [tuple(int(v) for v in row) for row in wit]
    return SearchResult("brute", size, best, witnesses, count, total,
                        meta={"eps_int": eps_int, "rule": rule, "workers": workers})


# ---------------------------------------------------------------------------
# diffusion
# ---------------------------------------------------------------------------

@dataclass(frozen=True, eq=False)
class HeatState:
    vector: np.ndarray
    steps: int

    @property
    def support(self) -> np.ndarray:
        return np.flatnonzero(self.vector > 0)


def walk_step(g: Graph, f: np.ndarray) -> np.ndarray:
    """One application of ``A D^-1``: ``(Pf)(u) = sum_{v ~ u} f(v) / deg(v)``."""
    e = g.edge_array
    pushed = (f / g.degrees)[e[:, 1]]
    return np.bincount(e[:, 0], weights=pushed, minlength=g.n)


def diffuse(g: Graph, d: Design, steps: int) -> HeatState:
    if steps < 0:
        raise ValueError("steps must be non-negative")
    f = np.zeros(g.n)
    f[list(d.subset)] = d.weights
    for _ in range(steps):
        f = walk_step(g, f)
    return HeatState(f, steps)


def heat_objective(g: Graph, d: Design, steps: int) -> tuple[float, float]:
    """Collision objective ``|P^t (sum a_w delta_w) - 1/n|^2``.

    Returns the value computed directly and via ``|P^t ...|^2 - 1/n``; the
    two agree because ``P`` preserves sums and the weights sum to one.
    """
    h = diffuse(g, d, steps).vector
    direct = float(np.sum((h - 1.0 / g.n) ** 2))
    via_norm = float(h @ h - 1.0 / g.n)
    return direct, via_norm


def default_heat_steps(g: Graph) -> int:
    return max(1, math.ceil(g.diameter() / 2))


# ---------------------------------------------------------------------------
# heuristics
# ---------------------------------------------------------------------------

class _Scorer:
    def __init__(self, g, s, eps_int, rule):
        self.s = spectrum(g) if s is None else s
        self.eps_int = eps_int
        self.rule = rule
        self.seen: dict[tuple[int, ...], int] = {}

    def __call__(self, members) -> int:
        key = tuple(sorted(int(v) for v in members))
        if key not in self.seen:
            self.seen[key] = int(equal_weight_strengths(self.s, np.array([key]), self.eps_int, rule=self.rule)[0])
        return self.seen[key]

    def result(self, method, size, seed, meta) -> SearchResult:
        best = max(self.seen.values())
        wit = sorted(k for k, v in self.seen.items() if v == best)
        return SearchResult(method, size, best, wit, len(wit), len(self.seen), seed, meta)


def heuristic_distance_search(g: Graph, size: int, seed: int = 0, max_iters: int = 1000, *,
                              s: Spectrum | None = None, eps_int: float = EPS_INT,
                              rule: Rule = "admissible") -> SearchResult:
    """Spread a random subset out by total pairwise distance.

    Each sweep visits members in ascending order; for a member the first
    neighbour (ascending) not in the subset whose swap strictly increases
    the distance sum is the candidate move, taken with probability 1/2.
    Stops after ``max_iters`` sweeps or when a sweep finds no improving
    move at all.
    """
    if not 1 <= size <= g.n:
        raise ValueError(f"size must be in [1, {g.n}]")
    rng = np.random.default_rng(seed)
    dist = g.distance_matrix
    current = set(int(v) for v in rng.choice(g.n, size, replace=False))
    score = _Scorer(g, s, eps_int, rule)
    score(current)
    sweeps, moves, reason = 0, 0, "max_iters"
    while sweeps < max_iters:
        sweeps += 1
        improving = False
        for v in sorted(current):
            if v not in current:
                continue
            others = list(current - {v})
            base = dist[v, others].sum()
            for u in g.adjacency[v]:
                if u in current:
                    continue
                if dist[u, others].sum() > base:
                    improving = True
                    if rng.random() < 0.5:
                        current.remove(v)
                        current.add(u)
                        moves += 1
                        score(current)
                    break
        if not improving:
            reason = "local_maximum"
            break
    meta = {"sweeps": sweeps, "moves": moves, "stop": reason,
            "final": sorted(current), "distance_sum": int(dist[np.ix_(sorted(current), sorted(current))].sum())}
    return score.result("distance", size, seed, meta)


def heat_local_search(g: Graph, size: int, steps: int | None = None, seed: int = 0, max_iters: int = 1000, *,
                      s: Spectrum | None = None, eps_int: float = EPS_INT,
                      rule: Rule = "admissible") -> SearchResult:
    """Steepest-descent swap search on the heat collision objective.

    Every iteration evaluates all (member, non-member) swaps and applies
    the one with the lowest objective if it is a strict improvement.
    """
    if not 1 <= size <= g.n:
        raise ValueError(f"size must be in [1, {g.n}]")
    steps = default_heat_steps(g) if steps is None else steps
    rng = np.random.default_rng(seed)
    # columns: P^t delta_v
    heat = np.eye(g.n)
    for _ in range(steps):
        heat = np.column_stack([walk_step(g, heat[:, v]) for v in range(g.n)])
    gram = heat.T @ heat
    diag = np.diag(gram)
    k, n = size, g.n

    inside = np.zeros(n, dtype=bool)
    inside[rng.choice(n, size, replace=False)] = True
    score = _Scorer(g, s, eps_int, rule)
    score(np.flatnonzero(inside))

    def objective(mask):
        idx = np.flatnonzero(mask)
        return gram[np.ix_(idx, idx)].sum() / k**2 - 1.0 / n

    q = objective(inside)
    iters, reason = 0, "max_iters"
    while iters < max_iters:
        iters += 1
        members, others = np.flatnonzero(inside), np.flatnonzero(~inside)
        if others.size == 0:
            reason = "full_set"
            break
        total = gram[np.ix_(members, members)].sum()
        sums = gram[:, members].sum(axis=1)
        # total after swapping a (out) for b (in)
        cand = (total - 2 * sums[members][:, None] + diag[members][:, None]
                + 2 * (sums[others][None, :] - gram[np.ix_(members, others)])
                + diag[others][None, :])
        i, j = np.unravel_index(np.argmin(cand), cand.shape)
        new_q = cand[i, j] / k**2 - 1.0 / n
        if not new_q < q - 1e-14:
            reason = "local_minimum"
            break
        inside[members[i]], inside[others[j]] = False, True
        q = new_q
        score(np.flatnonzero(inside))
    meta = {"steps": steps, "iterations": iters, "stop": reason,
            "final": np.flatnonzero(inside).tolist(), "objective": float(max(q, 0.0))}
    return score.result("heat", size, seed, meta)


def multi_seed(fn, g: Graph, size: int, seeds, **kwargs) -> SearchResult:
    """Run a heuristic once per seed and merge into one result."""
    runs = [fn(g, size, seed=int(sd), **kwargs) for sd in seeds]
    best = max(r.best_K for r in runs)
    wit = sorted({w for r in runs if r.best_K == best for w in r.witnesses})
    hits = [r.seed for r in runs if r.best_K == best]
    return SearchResult(runs[0].method, size, best, wit, len(wit),
                        sum(r.subsets_examined for r in runs), None,
                        {"seeds": [int(x) for x in seeds], "seeds_reaching_best": hits})


def equal_design(g: Graph, members) -> Design:
    return Design.equal(g, check_subset(g, members))
