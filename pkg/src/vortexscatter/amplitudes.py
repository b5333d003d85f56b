"""Scattering amplitudes: long-range (flux) part, core part, and the
error-function form that is regular through the forward direction.

The core amplitude is a Fourier sum over channels; its flux part is a
closed-form kernel.  They are kept separate because they enter the
unitarity identities in different roles, and only their combination is the
full amplitude away from the forward direction.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .angular_kernels import gamma_nu, wrap_angle
from .errors import DomainError
from .partial_waves import PartialWaveSet, VortexConfig, build_partial_waves
from .specfun import erfc_complex


@dataclass(frozen=True)
class ComplexAmplitude:
    """Amplitude value (units length^(1/2)) at one scattering angle."""

    value: complex
    phi: float
    config: VortexConfig
    est_error: float = 0.0


def fc_values(pws: PartialWaveSet, phi) -> np.ndarray:
    """Core amplitude on an array of angles (fast path).

    i sqrt(2/(k pi)) * sum_n e^{i n phi} phase_n upsilon_n over the
    retained channels.
    """
    ph = np.atleast_1d(np.asarray(phi, dtype=float))
    ph = np.array([wrap_angle(p) for p in ph.ravel()]).reshape(ph.shape)
    k = pws.config.k
    coeff = pws.phases * pws.upsilons
    return 1j * math.sqrt(2.0 / (k * math.pi)) * np.exp(1j * np.outer(ph, pws.ns)) @ coeff


def fc_exact(pws: PartialWaveSet, phi: float) -> ComplexAmplitude:
    """Core (finite-radius) scattering amplitude at one angle."""
    k = pws.config.k
    val = complex(fc_values(pws, float(phi))[0])
    err = math.sqrt(2.0 / (k * math.pi)) * pws.tail_bound
    return ComplexAmplitude(value=val, phi=wrap_angle(phi), config=pws.config,
                            est_error=err)


def f_tube(k: float, r_c: float, phi: float, tail_tol: float = 1e-14) -> ComplexAmplitude:
    """Amplitude for the flux-free impermeable tube (Dirichlet edge).

    Identical to the core amplitude at mu = 0, rho = 0.
    """
    pws = build_partial_waves(VortexConfig(k=k, r_c=r_c, mu=0.0, rho=0.0), tail_tol)
    return fc_exact(pws, phi)


def f0(k: float, mu: float, phi: float) -> ComplexAmplitude:
    """Long-range flux amplitude i sqrt(2 pi / k) sin(mu pi) Gamma(phi).

    Exactly zero for integer mu.  Diverges (principal value) in the forward
    direction; use `f0_near_forward` there.
    """
    if not (k > 0.0):
        raise DomainError(f"k must be positive, got {k}")
    cfg = VortexConfig(k=k, r_c=1.0, mu=mu, rho=0.0)
    phi_w = wrap_angle(phi)
    if mu == math.floor(mu):
        return ComplexAmplitude(value=0.0 + 0.0j, phi=phi_w, config=cfg)
    if phi_w == 0.0:
        raise DomainError("flux amplitude diverges at phi = 0; "
                          "use f0_near_forward for the forward region")
    val = 1j * math.sqrt(2.0 * math.pi / k) * math.sin(mu * math.pi) * gamma_nu(mu, phi_w)
    return ComplexAmplitude(value=complex(val), phi=phi_w, config=cfg)


def f0_near_forward(k: float, r: float, mu: float, phi: float) -> complex:
    """Full outgoing flux wave f0 * e^{i(kr + pi/4)} / sqrt(r), all angles.

    Regular for every phi; tends to +-i sin(mu pi) e^{ikr} as phi -> +-0,
    the discontinuity that cancels against the incident wave.
    """
    if not (r > 0.0):
        raise DomainError(f"r must be positive, got {r}")
    if mu == math.floor(mu):
        return 0.0 + 0.0j
    phi_w = wrap_angle(phi)
    nu = math.floor(mu)
    half = math.sin(phi_w / 2.0)
    sign = 1.0 if half > 0.0 else (-1.0 if half < 0.0 else 0.0)
    z = np.exp(-1j * math.pi / 4.0) * math.sqrt(2.0 * k * r) * abs(half)
    return (1j * math.sin(mu * math.pi)
            * np.exp(1j * k * r * math.cos(phi_w))
            * np.exp(1j * (nu + 0.5) * phi_w)
            * sign * erfc_complex(z))


def forward_wave(config: VortexConfig, r: float, tail_tol: float = 1e-14) -> complex:
    """Wave value on the forward ray: cos(mu pi) e^{ikr} + core outgoing term.

    Finite and continuous through phi = 0; the transmitted plane wave is
    modulated by the cosine of the flux.
    """
    if r < config.r_c:
        raise DomainError(f"r must be >= r_c = {config.r_c}, got {r}")
    k = config.k
    pws = build_partial_waves(config, tail_tol)
    fc0 = fc_values(pws, 0.0)[0]
    return (math.cos(config.mu * math.pi) * np.exp(1j * k * r)
            + fc0 * np.exp(1j * (k * r + math.pi / 4.0)) / math.sqrt(r))
