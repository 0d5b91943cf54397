"""Acceptance criteria 1-10, one summary line each in the pytest terminal report.

Exact-match checks that the implementation cannot honestly meet are
strict xfails; their summary lines say FAIL.
"""

import numpy as np
import pytest
from conftest import ACCEPTANCE_LINES
from oracles import bfs_ball

from graphdesigns import catalog_get, names, spectrum
from graphdesigns.bounds import check_theorem, growth_profile, theorem_lower_bound
from graphdesigns.design import Design, design_strength, quadrature_residuals
from graphdesigns.graph import distances_from
from graphdesigns.reproduce import check_claim, load_witnesses, neighbourhood_ok
from graphdesigns.search import (brute_force, diffuse, heat_local_search,
                                 heuristic_distance_search)
from graphdesigns.spectral import build_operator, invariant_report
from graphdesigns.weighted import find_minor_design

CLAIMS = {c["id"]: c for c in load_witnesses()["claims"]}
FIGURES = [i for i, c in CLAIMS.items() if c["kind"] == "figure"]
TABLE = [i for i, c in CLAIMS.items() if c["kind"] != "figure"]


def record(n, ok, detail):
    status = ok if isinstance(ok, str) else ("PASS" if ok else "FAIL")
    ACCEPTANCE_LINES.append(f"criterion {n}: {status}  {detail}")


@pytest.fixture(scope="module")
def outcomes():
    """Every pinned claim re-derived by exhaustive search under both counting rules."""
    return {cid: check_claim(c, exhaustive=True, workers=4) for cid, c in CLAIMS.items()}


def _exact(cid):
    c = CLAIMS[cid]
    return c["admissible"]["best_K"] == c["claimed_K"]


def _claim_params(ids):
    return [pytest.param(i, marks=() if _exact(i) else pytest.mark.xfail(
        strict=True, reason="best admissible K differs from the published value"))
        for i in ids]


def _flag(o):
    return f"{o.id} claimed {o.claimed} vs K {o.best} / K_complete {o.best_complete} ({o.status})"


def _summary(n, ids, outcomes):
    exact = [i for i in ids if outcomes[i].status == "exact"]
    complete = [i for i in ids if outcomes[i].status == "exact-complete"]
    certified = all(outcomes[i].best >= outcomes[i].claimed and outcomes[i].search_matches_fixture
                    for i in ids)
    flags = [_flag(outcomes[i]) for i in ids if i not in exact]
    record(n, len(exact) == len(ids),
           f"exact {len(exact)}/{len(ids)} under the admissible count; {len(complete)} more equal the "
           f"complete-eigenspace count; every claim certified with best K >= claimed: {certified}"
           + (f"; flags: {', '.join(flags)}" if flags else ""))


@pytest.mark.slow
class TestCriterion1:
    def test_certified(self, outcomes):
        for cid in FIGURES:
            o = outcomes[cid]
            assert o.search_matches_fixture and o.witness_checks, cid
            assert o.best >= o.claimed, cid
        _summary(1, FIGURES, outcomes)

    @pytest.mark.parametrize("cid", _claim_params(FIGURES))
    def test_exact(self, outcomes, cid):
        assert outcomes[cid].best == outcomes[cid].claimed


@pytest.mark.slow
class TestCriterion2:
    def test_certified(self, outcomes):
        for cid in TABLE:
            o = outcomes[cid]
            assert o.search_matches_fixture and o.witness_checks, cid
            assert o.best >= o.claimed, cid
        _summary(2, TABLE, outcomes)

    @pytest.mark.parametrize("cid", _claim_params(TABLE))
    def test_exact(self, outcomes, cid):
        assert outcomes[cid].best == outcomes[cid].claimed


def test_criterion_3_bound_on_every_witness():
    checked = failures = 0
    for c in CLAIMS.values():
        g = catalog_get(c["graph"])
        s = spectrum(g)
        sets = c["admissible"]["witnesses"] + c["complete"]["witnesses"] + ([c["drawn"]] if "drawn" in c else [])
        for w in sets:
            cert = check_theorem(g, s, Design.equal(g, w))
            checked += 1
            failures += not (cert.passed and all(r.sharp_ok for r in cert.rows))
    record(3, failures == 0, f"{checked} witness designs, every radius, general/equal/sharp forms; "
                             f"{failures} failures")
    assert failures == 0


def test_criterion_4_neighbourhoods():
    figs = {"nauru-6": True, "truncated-tetrahedral-4": True, "mcgee-8": True, "sylvester-6": False,
            "frucht-4": False, "dyck-8": False, "wong-5": False}
    bad = []
    for cid, perfect in figs.items():
        c = CLAIMS[cid]
        g = catalog_get(c["graph"])
        sets = c["admissible"]["witnesses"] + c["complete"]["witnesses"] + ([c["drawn"]] if "drawn" in c else [])
        for w in sets:
            if distances_from(g, w).max() > 1 or (perfect and not neighbourhood_ok(g, w, "perfect_code")):
                bad.append((cid, w))
    record(4, not bad, f"radius-1 balls cover V for {len(figs)} figures; perfect codes for the first three; "
                       f"{len(bad)} exceptions")
    assert not bad


def test_criterion_5_spectral_invariants():
    rng = np.random.default_rng(2024)
    worst = 0.0
    for name in names():
        g = catalog_get(name)
        s = spectrum(g)
        inv = invariant_report(g, s)
        assert inv["residual"] <= 1e-10 and inv["range"] <= 1e-10, name
        assert inv["zero_count"] == 1 and inv["constant"] <= 1e-10 and inv["trace"] <= 1e-10, name
        # trace identity: sum of walk eigenvalues is tr(A D^-1) = 0
        assert abs(np.sum(s.values + 1)) <= 1e-10
        m = build_operator(g)
        f = rng.normal(size=(g.n, 100))
        assert np.allclose((m @ f).sum(axis=0), f.sum(axis=0), atol=1e-10)
        for _ in range(100):
            size = int(rng.integers(1, g.n + 1))
            w = rng.dirichlet(np.ones(size))
            d = Design.weighted(g, list(rng.choice(g.n, size, replace=False)), w / w.sum())
            res = quadrature_residuals(s, d)
            gap = abs(np.sum(res**2) - np.sum(d.measure(g.n) ** 2))
            worst = max(worst, gap)
    record(5, worst <= 1e-8, f"{len(names())} graphs; worst Parseval gap {worst:.1e}")
    assert worst <= 1e-8


def test_criterion_6_diffusion():
    rng = np.random.default_rng(6)
    graphs = [catalog_get(n) for n in names()]
    worst_mass = 0.0
    literal_fails = 0
    for trial in range(100):
        g = graphs[trial % len(graphs)]
        size = int(rng.integers(1, 6))
        w = rng.dirichlet(np.ones(size))
        d = Design.weighted(g, list(rng.choice(g.n, size, replace=False)), w / w.sum())
        reached = set()
        for t in range(0, 5):
            h = diffuse(g, d, t)
            worst_mass = max(worst_mass, abs(h.vector.sum() - 1))
            support = set(h.support.tolist())
            reached |= support
            ball = bfs_ball(g.n, g.edges, d.subset, t)
            literal_fails += support != ball
            assert support <= ball
            assert reached == ball
    record(6, worst_mass <= 1e-10, "cumulative support up to step t equals the radius-t ball on 100 random "
                                   f"designs; worst mass drift {worst_mass:.1e}; the single-step support "
                                   f"differs from the ball in {literal_fails}/500 cases (walk is not lazy)")
    assert worst_mass <= 1e-10


def test_criterion_6_single_step_support_is_not_a_ball():
    g = catalog_get("petersen")
    h = diffuse(g, Design.equal(g, [0]), 1)
    assert 0 not in h.support


def test_criterion_7_minor_designs():
    worst_res, worst_det = 0.0, 0.0
    graphs = names()
    for name in graphs:
        g = catalog_get(name)
        s = spectrum(g)
        worst_det = max(worst_det, abs(abs(np.linalg.det(s.vectors)) - 1))
        for k in range(1, g.n + 1):
            sol = find_minor_design(s, k)
            worst_res = max(worst_res, sol.residual)
    ok = worst_res <= 1e-9 and worst_det <= 1e-8
    record(7, ok, f"every k on all {len(graphs)} graphs; worst residual {worst_res:.1e}, "
                  f"worst | |det| - 1 | {worst_det:.1e}")
    assert ok


HEURISTICS = {
    ("distance", "nauru"): (heuristic_distance_search, 6, 19, {}),
    ("heat", "nauru"): (heat_local_search, 6, 19, {}),
    ("distance", "frucht"): (heuristic_distance_search, 4, 11, {}),
    ("heat", "frucht"): (heat_local_search, 4, 11, {}),
}
_hits: dict = {}


def _hit_seeds(method, graph):
    if (method, graph) not in _hits:
        fn, size, opt, kw = HEURISTICS[method, graph]
        g = catalog_get(graph)
        s = spectrum(g)
        runs = [fn(g, size, seed=sd, s=s, **kw).best_K for sd in range(50)]
        _hits[method, graph] = ([sd for sd, k in enumerate(runs) if k == opt], max(runs))
    return _hits[method, graph]


@pytest.mark.parametrize("method,graph", [
    ("distance", "nauru"), ("heat", "nauru"),
    pytest.param("distance", "frucht", marks=pytest.mark.xfail(
        strict=True, reason="distance spreading overshoots the Frucht optimum, whose distance sum is not maximal")),
    ("heat", "frucht"),
])
def test_criterion_8_heuristics(method, graph):
    hits, _ = _hit_seeds(method, graph)
    assert hits


def test_criterion_8_summary():
    parts, ok = [], True
    for method, graph in HEURISTICS:
        hits, best = _hit_seeds(method, graph)
        ok &= bool(hits)
        parts.append(f"{method}/{graph} {len(hits)}/50 (best {best})")
    record(8, ok, "seeds 0..49 reaching the optimum: " + ", ".join(parts))


def test_criterion_9_petersen_report():
    g = catalog_get("petersen")
    s = spectrum(g)
    best = {}
    for size in range(1, 6):
        r = brute_force(g, s, size)
        rc = brute_force(g, s, size, rule="complete")
        best[size] = (r.best_K, rc.best_K)
        for w in r.witnesses[:3]:
            assert design_strength(s, Design.equal(g, w)).strength == r.best_K
    record(9, "INFO", "Petersen best K (admissible/complete) by size: "
           + ", ".join(f"{k}: {a}/{c}" for k, (a, c) in best.items()))


def test_criterion_10_robertson_report():
    g = catalog_get("robertson")
    s = spectrum(g)
    r = brute_force(g, s, 3)
    rep = design_strength(s, Design.equal(g, r.witnesses[0]))
    cert = check_theorem(g, s, rep.design)
    at_star = theorem_lower_bound(rep.lambda_star, 2, g.n, 3, True, 1 / 3)
    caption = theorem_lower_bound(0.44, 2, g.n, 3, True, 1 / 3)
    observed = growth_profile(g, r.witnesses[0]).at(2)
    assert cert.passed
    record(10, "INFO", f"Robertson ({g.n} vertices) size 3: best K {r.best_K} (complete {rep.complete_strength}), "
                       f"lambda* {rep.lambda_star:.4f}; radius-2 ball {observed}; bound at lambda*: "
                       f"{at_star.general:.2f}; at the published 0.44: {caption.general:.2f} versus the "
                       f"caption's 8 (caption uses 20 vertices and K = 10)")
