"""Cross-section routes: channel sum, quadrature, closed short form."""

import math

import numpy as np
import pytest

from vortexscatter import (PreconditionError, VortexConfig,
                           build_partial_waves, cutoff_window,
                           delta_nu_x, dsigma_asymptotic, dsigma_exact,
                           f_tube_long, gamma_nu_x, sigma_closed_short,
                           sigma_parseval, sigma_quadrature)
from vortexscatter.cross_sections import a1_coefficient, a2_coefficient


def _pws(s, mu=0.0, rho=0.0, tol=1e-14):
    return build_partial_waves(VortexConfig(k=1.0, r_c=s, mu=mu, rho=rho), tol)


class TestDifferential:
    def test_flux_period_invariance(self):
        a = _pws(5.0, 0.3, 0.25, 1e-15)
        b = _pws(5.0, 1.3, 0.25, 1e-15)
        phig = np.linspace(-3.0, 3.0, 31)
        assert dsigma_exact(a, phig) == pytest.approx(dsigma_exact(b, phig), rel=1e-12)

    def test_long_wavelength_isotropy(self):
        pws = _pws(1e-4)
        base = dsigma_exact(pws, 0.0)
        for phi in (0.5, 1.5, 3.0):
            assert dsigma_exact(pws, phi) == pytest.approx(base, rel=0.01)
        # and the level is the squared logarithmic amplitude
        assert base == pytest.approx(abs(f_tube_long(1.0, 1e-4)) ** 2, rel=1e-4)

    def test_backscattering_is_classical(self):
        pws = _pws(200.0)
        assert dsigma_exact(pws, math.pi) == pytest.approx(100.0, rel=0.15)


class TestAsymptoticDifferential:
    def test_forward_value_is_cos_squared_peak(self):
        for mu in (0.0, 0.25, 0.4):
            cfg = VortexConfig(k=1.0, r_c=150.0, mu=mu, rho=0.3)
            want = (2.0 * cfg.k * cfg.r_c ** 2 / math.pi) * math.cos(mu * math.pi) ** 2
            assert dsigma_asymptotic(cfg, 0.0) == pytest.approx(want, rel=1e-12)

    def test_zero_flux_reduction(self):
        from vortexscatter import delta_tilde
        cfg = VortexConfig(k=1.0, r_c=64.0)
        for phi in (0.3, 1.2, 2.2):
            want = 2 * cfg.r_c * delta_tilde(cfg.s, phi) \
                + 0.5 * cfg.r_c * abs(math.sin(phi / 2))
            assert dsigma_asymptotic(cfg, phi) == pytest.approx(want, rel=1e-13)

    @pytest.mark.parametrize("rho", [0.0, 0.5])
    def test_band_against_exact(self, rho):
        cfg = VortexConfig(k=1.0, r_c=200.0, mu=0.3, rho=rho)
        pws = build_partial_waves(cfg, 1e-14)
        phig = np.linspace(0.3, math.pi - 0.3, 801)
        diff = np.abs(dsigma_asymptotic(cfg, phig) - dsigma_exact(pws, phig)) / cfg.r_c
        scale = cfg.s ** -0.5
        assert diff.max() <= 3.0 * scale
        assert np.median(diff) <= 0.7 * scale

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            dsigma_asymptotic(VortexConfig(k=1.0, r_c=3.0), 0.5)


class TestTotalCrossSections:
    @pytest.mark.parametrize("s,mu,rho", [(0.5, 0.0, 0.0), (5.0, 0.3, 0.25),
                                          (20.0, 0.5, 0.5), (1e-4, 0.0, 0.0)])
    def test_parseval_vs_quadrature(self, s, mu, rho):
        pws = _pws(s, mu, rho)
        par = sigma_parseval(pws)
        quad = sigma_quadrature(pws)
        assert abs(par.sigma - quad.sigma) < 1e-10 * par.sigma
        assert abs(par.sigma - quad.sigma) <= par.est_error + quad.est_error + 1e-12 * par.sigma

    def test_twice_classical_at_short_wavelength(self):
        pws = _pws(200.0, 0.3, 0.25)
        ratio = sigma_parseval(pws).sigma / (4.0 * 200.0)
        assert 0.98 <= ratio <= 1.02

    def test_long_wavelength_logarithmic_level(self):
        # sigma -> 2 pi |f_long|^2 with the resummed logarithmic amplitude
        pws = _pws(1e-4)
        sig = sigma_parseval(pws).sigma
        assert sig == pytest.approx(2 * math.pi * abs(f_tube_long(1.0, 1e-4)) ** 2,
                                    rel=1e-4)
        # the leading pi^2/(k L^2) level holds to ~ ln2/L
        level = math.pi ** 2 / abs(math.log(1e-4)) ** 2
        assert sig == pytest.approx(level, rel=0.06)

    def test_flux_period_and_sign_invariance(self):
        base = sigma_parseval(_pws(5.0, 0.3, 0.25, 1e-15)).sigma
        assert sigma_parseval(_pws(5.0, 1.3, 0.25, 1e-15)).sigma == pytest.approx(
            base, rel=1e-12)
        assert sigma_parseval(_pws(5.0, -0.3, 0.25, 1e-15)).sigma == pytest.approx(
            base, rel=1e-12)

    def test_channel_count_bound(self):
        pws = _pws(7.0, 0.4, 0.6)
        sig = sigma_parseval(pws).sigma
        assert 0.0 <= sig <= 4.0 * len(pws.channels)

    def test_boundary_universality_band(self):
        # measured |sigma(0) - sigma(1/2)| / sigma ~ 1.0 * s^(-2/3); the
        # turnover-zone physics decays slower than 1/s
        for s in (100.0, 200.0, 400.0):
            sd = sigma_parseval(_pws(s, 0.3, 0.0)).sigma
            sn = sigma_parseval(_pws(s, 0.3, 0.5)).sigma
            assert abs(sd - sn) / sd <= 1.4 * s ** (-2.0 / 3.0)


class TestClosedShortForm:
    def test_neumann_phase_shift_form(self):
        u = 123.0
        want = math.sin(2 * u - 2 * math.atan(2 * u))
        assert a1_coefficient(u, 0.5) == pytest.approx(want, rel=1e-13)
        assert a2_coefficient(u, 0.5) == pytest.approx(
            math.cos(2 * u - 2 * math.atan(2 * u)), rel=1e-13)

    def test_leading_order_is_four_radii(self):
        for mu, rho in ((0.0, 0.0), (0.3, 0.25), (0.85, 0.5)):
            cfg = VortexConfig(k=1.0, r_c=200.0, mu=mu, rho=rho)
            rep = sigma_closed_short(cfg)
            assert rep.sigma == pytest.approx(4.0 * cfg.r_c, rel=0.02)

    def test_against_parseval_band(self):
        # the closed form misses the turnover zone: |diff| ~ (2/k) s^(1/3)
        for s in (50.0, 200.0):
            for mu, rho in ((0.0, 0.0), (0.3, 0.25), (0.7, 0.5)):
                cfg = VortexConfig(k=1.0, r_c=s, mu=mu, rho=rho)
                closed = sigma_closed_short(cfg).sigma
                par = sigma_parseval(build_partial_waves(cfg, 1e-14)).sigma
                assert abs(closed - par) <= 2.0 * 1.8 * s ** (1.0 / 3.0)

    def test_matches_kernel_assembly(self):
        # independent route: 4pi/k [D(0) + cos(mu pi) D(pi) A1 + i sin(mu pi) G(pi) A2]
        for s, mu, rho in ((150.3, 0.3, 0.25), (87.6, 0.85, 0.5), (200.0, 0.0, 0.0)):
            cfg = VortexConfig(k=1.0, r_c=s, mu=mu, rho=rho)
            got = sigma_closed_short(cfg).sigma
            w = cutoff_window(s, mu)
            d0 = w.count / (2 * math.pi)
            dpi = delta_nu_x(s, mu, math.pi)
            gpi = 0.0 if mu == math.floor(mu) else gamma_nu_x(s, mu, math.pi)
            want = 4 * math.pi * (d0 + math.cos(mu * math.pi) * dpi * a1_coefficient(s, rho)
                                  + 1j * math.sin(mu * math.pi) * gpi * a2_coefficient(s, rho))
            assert abs(want.imag) < 1e-10 * abs(want.real)
            assert got == pytest.approx(want.real, rel=1e-12)

    def test_precondition(self):
        with pytest.raises(PreconditionError):
            sigma_closed_short(VortexConfig(k=1.0, r_c=5.0))
