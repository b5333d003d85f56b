"""Reflection-coefficient contracts and channel-set construction."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from vortexscatter import (ChannelCapError, DomainError, VortexConfig,
                           bessel_jy, build_partial_waves, upsilon)


class TestUpsilonValues:
    def test_dirichlet_is_j_over_h(self):
        for alpha, u in ((0.0, 1.0), (2.3, 7.0), (11.0, 4.5)):
            v = bessel_jy(alpha, u)
            assert upsilon(alpha, u, 0.0) == pytest.approx(v.j / v.h1, rel=1e-12)

    def test_half_integer_closed_form(self):
        # J_{1/2}/H1_{1/2} at u=1 collapses to sin^2(1) + i sin(1) cos(1)
        want = math.sin(1.0) ** 2 + 1j * math.sin(1.0) * math.cos(1.0)
        assert upsilon(0.5, 1.0, 0.0) == pytest.approx(want, rel=1e-13)
        assert upsilon(0.5, 1.0, 0.0) == pytest.approx(0.70807 + 0.45465j, abs=1e-5)

    def test_neumann_is_jp_over_hp(self):
        for alpha, u in ((0.0, 1.0), (2.3, 7.0), (0.7, 0.2)):
            v = bessel_jy(alpha, u)
            assert upsilon(alpha, u, 0.5) == pytest.approx(v.jp / v.h1p, rel=1e-12)

    def test_dirichlet_consistency_identity(self):
        for alpha, u in ((0.4, 3.3), (5.5, 9.1)):
            v = bessel_jy(alpha, u)
            assert upsilon(alpha, u, 0.0) * v.h1 == pytest.approx(v.j, rel=1e-12)

    def test_deep_tail_is_zero(self):
        assert upsilon(300.0, 0.5, 0.25) == 0.0

    def test_domain_errors(self):
        with pytest.raises(DomainError):
            upsilon(-1.0, 1.0, 0.0)
        with pytest.raises(DomainError):
            upsilon(1.0, 1.0, 1.0)


class TestElasticUnitarity:
    @settings(max_examples=300, deadline=None, derandomize=True)
    @given(alpha=st.floats(0.0, 300.0), u=st.floats(1e-3, 500.0),
           rho=st.floats(0.0, 1.0, exclude_max=True))
    def test_re_equals_mod_squared(self, alpha, u, rho):
        up = upsilon(alpha, u, rho)
        assert abs(up.real - abs(up) ** 2) < 1e-12

    @settings(max_examples=300, deadline=None, derandomize=True)
    @given(alpha=st.floats(0.0, 300.0), u=st.floats(1e-3, 500.0),
           rho=st.floats(0.0, 1.0, exclude_max=True))
    def test_unimodularity(self, alpha, u, rho):
        up = upsilon(alpha, u, rho)
        if up == 0.0:
            return  # deep-tail limit: 1 - 2*0 has unit modulus trivially
        assert abs(abs(1.0 - 2.0 * up) - 1.0) < 1e-12

    def test_bounds(self):
        rng = np.random.default_rng(11)
        for _ in range(500):
            up = upsilon(rng.uniform(0, 50), rng.uniform(0.01, 80), rng.uniform(0, 0.99))
            assert -1e-15 <= up.real <= 1.0 + 1e-15
            assert abs(up.imag) <= 0.5 + 1e-15


class TestBuildPartialWaves:
    def test_symmetric_at_zero_flux(self):
        pws = build_partial_waves(VortexConfig(k=1.0, r_c=1.0), 1e-16)
        assert pws.n_min == -pws.n_max
        by_n = {c.n: c for c in pws.channels}
        for n in range(1, pws.n_max + 1):
            assert by_n[n].upsilon == by_n[-n].upsilon  # identical orders |n|

    def test_broken_symmetry_at_fractional_flux(self):
        pws = build_partial_waves(VortexConfig(k=1.0, r_c=1.0, mu=0.3), 1e-14)
        by_n = {c.n: c for c in pws.channels}
        assert by_n[1].order != by_n[-1].order
        assert by_n[1].upsilon != by_n[-1].upsilon

    def test_window_covers_core_orders(self):
        cfg = VortexConfig(k=3.0, r_c=4.0, mu=0.3, rho=0.25)
        pws = build_partial_waves(cfg, 1e-14)
        covered = (pws.ns >= math.floor(cfg.mu - cfg.s)) & (pws.ns <= math.ceil(cfg.mu + cfg.s))
        assert covered.sum() >= 2 * int(cfg.s) + 1
        assert pws.tail_bound < 1e-14

    def test_truncation_regression_bound(self):
        cfg = VortexConfig(k=10.0, r_c=1.0, mu=0.5, rho=0.25)
        pws = build_partial_waves(cfg, 1e-14)
        assert pws.n_max - math.ceil(cfg.s + cfg.mu) <= 40

    def test_phases_unit_modulus(self):
        pws = build_partial_waves(VortexConfig(k=2.0, r_c=1.5, mu=0.7), 1e-14)
        assert np.all(np.abs(np.abs(pws.phases) - 1.0) < 1e-15)

    def test_flux_shift_covariance(self):
        tol = 1e-14
        a = build_partial_waves(VortexConfig(k=1.0, r_c=3.0, mu=0.3, rho=0.25), tol)
        b = build_partial_waves(VortexConfig(k=1.0, r_c=3.0, mu=1.3, rho=0.25), tol)
        shared = [n for n in a.ns if n + 1 in set(b.ns)]
        assert len(shared) >= len(a.ns) - 2
        a_by_n = {c.n: c for c in a.channels}
        b_by_n = {c.n: c for c in b.channels}
        for n in shared:
            ca, cb = a_by_n[n], b_by_n[n + 1]
            assert cb.order == pytest.approx(ca.order, abs=1e-14)
            assert cb.upsilon == pytest.approx(ca.upsilon, abs=1e-14)
            assert cb.phase == pytest.approx(-ca.phase, abs=1e-14)

    def test_channel_elastic_identity(self):
        pws = build_partial_waves(VortexConfig(k=1.0, r_c=20.0, mu=0.3, rho=0.5), 1e-14)
        res = np.abs(pws.upsilons.real - np.abs(pws.upsilons) ** 2)
        assert res.max() < 1e-12

    def test_hard_cap(self):
        with pytest.raises(ChannelCapError):
            build_partial_waves(VortexConfig(k=1.0, r_c=2e6), 1e-14)

    def test_bad_tolerance(self):
        with pytest.raises(DomainError):
            build_partial_waves(VortexConfig(k=1.0, r_c=1.0), 0.0)

    def test_negative_flux_floor(self):
        cfg = VortexConfig(k=1.0, r_c=1.0, mu=-1.3)
        assert cfg.nu == -2
        pws = build_partial_waves(cfg, 1e-14)
        assert pws.tail_bound < 1e-14
