import dataclasses
import itertools
import math

import networkx as nx
import numpy as np
import pytest
from conftest import complete, cycle
from oracles import cycle_eigenbasis, oracle_strength

from graphdesigns.design import (Design, design_strength, equal_weight_strengths,
                                 quadrature_residuals, threshold)
from graphdesigns.reproduce import load_witnesses
from graphdesigns.spectral import spectrum


def per_vector_strength(basis, members, tol=1e-9):
    """Leading columns of ``basis`` whose subset average equals their mean."""
    avg = basis[list(members)].mean(axis=0)
    ok = np.abs(avg - basis.mean(axis=0)) <= tol
    return int(np.argmin(ok)) if not ok.all() else basis.shape[1]


def rotate_within_spaces(s, rng):
    """Same spectrum, with a random orthonormal basis inside every eigenspace."""
    v = s.basis.copy()
    for c in s.classes:
        for sp in c.spaces:
            idx = list(sp)
            q, _ = np.linalg.qr(rng.normal(size=(len(idx), len(idx))))
            v[:, idx] = v[:, idx] @ q
    return dataclasses.replace(s, basis=v, vectors=v)


class TestDesignObject:
    def test_weights_must_sum_to_one(self):
        with pytest.raises(ValueError, match="sum to 1"):
            Design((0, 1), np.array([0.5, 0.6]))

    def test_weighted_sorts_members(self):
        d = Design.weighted(cycle(6), [3, 0], [0.25, 0.75])
        assert d.subset == (0, 3) and d.weights.tolist() == [0.75, 0.25]

    def test_measure_sums_to_zero(self):
        d = Design.equal(cycle(6), [1, 4])
        assert d.measure(6).sum() == pytest.approx(0)

    def test_duplicate_vertex_rejected(self):
        with pytest.raises(Exception):
            Design.equal(cycle(6), [1, 1])


def test_whole_vertex_set_integrates_everything(catalog):
    for g, s in catalog.values():
        r = design_strength(s, Design.equal(g, range(g.n)))
        assert (r.strength, r.complete_strength, r.lambda_star) == (g.n, g.n, 0.0)


def test_k4_single_vertex():
    g = complete(4)
    s = spectrum(g)
    r = design_strength(s, Design.equal(g, [0]))
    assert r.mu_norm == pytest.approx(math.sqrt(12) / 4)
    assert r.class_residuals == pytest.approx([0, math.sqrt(12) / 4], abs=1e-12)
    # the three-dimensional class fails, but a 2-dim slice of it is integrated
    assert (r.strength, r.complete_strength) == (3, 1)
    assert r.lambda_star == pytest.approx(1 / 3)
    assert threshold(r, s) == r.lambda_star


def test_c6_antipodal_pair_against_analytic_basis():
    g = cycle(6)
    s = spectrum(g)
    r = design_strength(s, Design.equal(g, [0, 3]))
    vals, basis = cycle_eigenbasis(6)
    # columns: 1, cos, sin (mu = 1/2), cos, sin (mu = -1/2), alternating
    sin_first = [0, 5, 1, 2, 4, 3]
    cos_first = [0, 5, 1, 2, 3, 4]
    assert vals[sin_first] == pytest.approx([1, -1, 0.5, 0.5, -0.5, -0.5])
    # cos(2 pi x / 3) takes the value 1 at both 0 and 3, so it is the failing direction
    assert per_vector_strength(basis[:, sin_first], [0, 3]) == r.strength == 5
    assert per_vector_strength(basis[:, cos_first], [0, 3]) == r.complete_strength == 4


def test_c4_pairs():
    g = cycle(4)
    s = spectrum(g)
    adjacent = design_strength(s, Design.equal(g, [0, 1]))
    opposite = design_strength(s, Design.equal(g, [0, 2]))
    assert adjacent.strength == 3
    # the alternating vector is second in the ordering and {0, 2} misses it
    assert opposite.strength == 1


@pytest.mark.parametrize("name", ["nauru", "petersen", "pappus", "24-cell", "dyck"])
def test_basis_invariance(catalog, name):
    g, s = catalog[name]
    rng = np.random.default_rng(11)
    members = rng.choice(g.n, 5, replace=False)
    d = Design.equal(g, members)
    ref = design_strength(s, d)
    for _ in range(3):
        r = design_strength(rotate_within_spaces(s, rng), d)
        assert (r.strength, r.complete_strength) == (ref.strength, ref.complete_strength)
        assert r.class_residuals == pytest.approx(ref.class_residuals, abs=1e-12)


def test_admissible_count_is_attained_by_some_basis(catalog):
    """Rotating the failing direction last within each space realises K per vector."""
    g, s = catalog["nauru"]
    members = [6, 9, 13, 16, 20, 23]
    d = Design.equal(g, members)
    r = design_strength(s, d)
    mu = d.measure(g.n)
    v = s.basis.copy()
    for sp in s.classes[r.failing_class].spaces:
        idx = list(sp)
        block = v[:, idx]
        c = block.T @ mu
        if np.linalg.norm(c) > 1e-12:
            # orthonormal basis of the block with the mu-direction as its last column
            q, _ = np.linalg.qr(np.column_stack([c / np.linalg.norm(c), np.eye(len(idx))]))
            q = np.column_stack([q[:, 1:len(idx)], q[:, 0]])
            v[:, idx] = block @ q
    # failing directions go after integrated ones in the failing class
    cls = s.classes[r.failing_class]
    resid = np.abs(v[:, list(cls.members)].T @ mu) > 1e-9
    order = list(range(cls.members[0])) + [m for m, bad in zip(cls.members, resid) if not bad] \
        + [m for m, bad in zip(cls.members, resid) if bad] + list(range(cls.members[-1] + 1, g.n))
    assert per_vector_strength(v[:, order], members) == r.strength == 19


def test_parseval(catalog):
    rng = np.random.default_rng(5)
    for g, s in catalog.values():
        w = rng.dirichlet(np.ones(4))
        d = Design.weighted(g, list(rng.choice(g.n, 4, replace=False)), w / w.sum())
        res = quadrature_residuals(s, d)
        assert np.sum(res**2) == pytest.approx(np.sum(d.measure(g.n) ** 2))
        assert res[0] == pytest.approx(0, abs=1e-12)


def test_tolerance_monotonicity(catalog):
    g, s = catalog["mcgee"]
    d = Design.equal(g, [0, 3, 6, 9, 12, 15, 18, 21])
    ks = [design_strength(s, d, eps).strength for eps in (1e-14, 1e-9, 1e-3, 0.5, 1.01)]
    assert ks == sorted(ks)
    assert ks[-1] == g.n


def test_automorphism_invariance(catalog):
    g, s = catalog["petersen"]
    members = [0, 1, 7]
    base = design_strength(s, Design.equal(g, members))
    gm = nx.algorithms.isomorphism.GraphMatcher(nx.Graph(g.edges), nx.Graph(g.edges))
    for auto in itertools.islice(gm.isomorphisms_iter(), 30):
        r = design_strength(s, Design.equal(g, [auto[v] for v in members]))
        assert (r.strength, r.complete_strength) == (base.strength, base.complete_strength)


WITNESS_CASES = [(c["id"], c["graph"], rule, c[rule]["witnesses"][0], c[rule]["best_K"])
                 for c in load_witnesses()["claims"] for rule in ("admissible", "complete")]


@pytest.mark.parametrize("cid,graph,rule,members,k", WITNESS_CASES,
                         ids=[f"{c[0]}-{c[2]}" for c in WITNESS_CASES])
def test_witnesses_against_projector_oracle(catalog, cid, graph, rule, members, k):
    g, s = catalog[graph]
    r = design_strength(s, Design.equal(g, members))
    assert (r.strength if rule == "admissible" else r.complete_strength) == k
    assert oracle_strength(g.n, g.edges, members, rule=rule) == k


def test_weighted_design_against_oracle(catalog):
    g, s = catalog["petersen"]
    members, w = [0, 1, 2, 8, 9], [0.4, 0.6, 0.4, -0.2, -0.2]
    r = design_strength(s, Design.weighted(g, members, w))
    assert r.strength == oracle_strength(g.n, g.edges, members, w)
    assert not r.all_weights_positive


@pytest.mark.parametrize("rule", ["admissible", "complete"])
@pytest.mark.parametrize("name", ["frucht", "pappus", "24-cell", "wong", "gosset"])
def test_vectorised_matches_scalar(catalog, name, rule):
    g, s = catalog[name]
    rng = np.random.default_rng(2)
    subsets = np.array([rng.choice(g.n, 4, replace=False) for _ in range(60)])
    # include a known witness so high strengths are exercised
    wit = next(c for c in load_witnesses()["claims"] if c["graph"] == name)
    if wit["size"] == 4:
        subsets[0] = wit["admissible"]["witnesses"][0]
    fast = equal_weight_strengths(s, subsets, rule=rule)
    for row, k in zip(subsets, fast):
        r = design_strength(s, Design.equal(g, row))
        assert k == (r.strength if rule == "admissible" else r.complete_strength)


def test_vectorised_rejects_unknown_rule(catalog):
    _, s = catalog["petersen"]
    with pytest.raises(ValueError):
        equal_weight_strengths(s, np.array([[0, 1]]), rule="basis")


def test_report_dict(catalog):
    g, s = catalog["frucht"]
    d = design_strength(s, Design.equal(g, [5, 6, 10, 11])).to_dict("frucht")
    assert (d["K"], d["K_complete"], d["all_weights_positive"]) == (11, 11, True)
