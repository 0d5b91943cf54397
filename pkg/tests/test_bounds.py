import math

import pytest
from conftest import cycle
from hypothesis import given
from hypothesis import strategies as st
from oracles import bfs_ball

from graphdesigns.bounds import (HypothesisError, check_theorem, growth_profile,
                                 theorem_lower_bound)
from graphdesigns.design import Design
from graphdesigns.graph import from_edge_list
from graphdesigns.reproduce import load_witnesses
from graphdesigns.spectral import spectrum


class TestFormula:
    def test_lam_one_gives_half(self):
        b = theorem_lower_bound(1.0, 5, 30, 3, True, 1 / 3)
        assert (b.general, b.equal) == (0.5, 1.5)
        assert b.sharp == pytest.approx(1 / (1 / 30 + 1 / 3))

    def test_general_value(self):
        b = theorem_lower_bound(0.44, 2, 19, 1, False, 1.0)
        assert 0.44 ** -4 == pytest.approx(26.68, abs=0.01)
        assert b.general == pytest.approx(9.5)
        assert b.equal is None

    def test_equal_weight_value(self):
        b = theorem_lower_bound(0.5, 3, 1000, 4, True, 0.25)
        assert b.general == pytest.approx(32)
        assert b.equal == pytest.approx(128)

    def test_radius_zero(self):
        b = theorem_lower_bound(0.3, 0, 20, 4, True, 0.25)
        assert (b.general, b.equal) == (0.5, 2.0)
        assert b.sharp == pytest.approx(1 / (1 / 20 + 0.25))

    def test_vacuous(self):
        b = theorem_lower_bound(0.0, 2, 12, 3, True, 1 / 3)
        assert b.vacuous
        assert (b.general, b.equal, b.sharp) == (6.0, 6.0, 12.0)

    @pytest.mark.parametrize("lam,k", [(1.5, 1), (0.5, -1)])
    def test_bad_arguments(self, lam, k):
        with pytest.raises(ValueError):
            theorem_lower_bound(lam, k, 10, 2, True, 0.5)

    @given(st.floats(0.01, 1.0), st.integers(0, 8), st.integers(2, 500), st.data())
    def test_sharp_form_dominates(self, lam, k, n, data):
        w = data.draw(st.integers(1, n))
        b = theorem_lower_bound(lam, k, n, w, True, 1 / w)
        assert b.sharp >= b.equal * (1 - 1e-12)
        assert b.equal >= b.general * (1 - 1e-12)


class TestProfile:
    def test_nauru_drawn_design(self, catalog):
        g, _ = catalog["nauru"]
        p = growth_profile(g, [6, 9, 13, 16, 20, 23])
        assert p.sizes == (6, 24) and p.eccentricity == 1
        assert p.at(5) == 24

    def test_dyck_perfect_cover(self, catalog):
        g, _ = catalog["dyck"]
        assert growth_profile(g, [0, 3, 7, 10, 14, 17, 20, 29]).at(1) == 32

    @pytest.mark.parametrize("name", ["petersen", "gp-12-4", "icosidodecahedral"])
    def test_against_bfs(self, catalog, name):
        g, _ = catalog[name]
        w = [0, 4]
        p = growth_profile(g, w)
        for k in p.radii:
            assert p.sizes[k] == len(bfs_ball(g.n, g.edges, w, k))
        assert p.sizes[-1] == g.n

    def test_disconnected(self):
        g = from_edge_list(4, [(0, 1), (2, 3)], allow_disconnected=True)
        with pytest.raises(ValueError):
            growth_profile(g, [0])


class TestCertificate:
    def test_nauru(self, catalog):
        g, s = catalog["nauru"]
        cert = check_theorem(g, s, Design.equal(g, [6, 9, 13, 16, 20, 23]))
        assert cert.passed and cert.lam_source == "verified"
        assert cert.lam == pytest.approx(1 / 3)
        assert [r.observed for r in cert.rows] == [6, 24]

    def test_every_pinned_witness(self, catalog):
        for c in load_witnesses()["claims"]:
            g, s = catalog[c["graph"]]
            for rule in ("admissible", "complete"):
                for w in c[rule]["witnesses"][:5]:
                    assert check_theorem(g, s, Design.equal(g, w)).passed, (c["id"], w)

    def test_whole_set_is_vacuous(self, catalog):
        g, s = catalog["petersen"]
        cert = check_theorem(g, s, Design.equal(g, range(10)))
        assert cert.vacuous and cert.passed

    def test_larger_lambda_override_still_holds(self, catalog):
        g, s = catalog["frucht"]
        d = Design.equal(g, [5, 6, 10, 11])
        cert = check_theorem(g, s, d, lam=0.99)
        assert cert.lam_source == "override" and cert.passed

    def test_lambda_below_threshold_rejected(self, catalog):
        g, s = catalog["nauru"]
        with pytest.raises(HypothesisError, match="below"):
            check_theorem(g, s, Design.equal(g, [6, 9, 13, 16, 20, 23]), lam=0.2)

    def test_signed_weights_rejected(self, catalog):
        g, s = catalog["petersen"]
        d = Design.weighted(g, [0, 1, 2, 8, 9], [0.4, 0.6, 0.4, -0.2, -0.2])
        with pytest.raises(HypothesisError, match="positive"):
            check_theorem(g, s, d)

    def test_irregular_needs_override(self):
        g = from_edge_list(4, [(0, 1), (1, 2), (2, 3)])
        s = spectrum(g, allow_irregular=True)
        d = Design.equal(g, [1])
        with pytest.raises(HypothesisError):
            check_theorem(g, s, d)
        assert check_theorem(g, s, d, allow_irregular=True).rows[0].observed == 1

    def test_cycle_with_trivial_threshold(self):
        # on C_8 a single vertex misses the alternating vector, so lam = 1; balls grow by 2 per step
        g = cycle(8)
        cert = check_theorem(g, spectrum(g), Design.equal(g, [0]))
        assert cert.passed
        for r in cert.rows:
            assert r.observed == min(2 * r.k + 1, 8)
            assert r.sharp <= r.observed
        assert cert.lam == pytest.approx(1.0)
        assert math.isclose(cert.rows[1].sharp, 1 / (1 / 8 + 1))
