"""Closed-form limit amplitudes and the short-wavelength machinery.

The short-wavelength core amplitude is assembled from a window kernel sum
(geometric progression, exact) plus a stationary-phase reflection term; the
omitted turnover-zone tail grows like the cube root of the core size and is
the dominant error.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from .amplitudes import ComplexAmplitude
from .angular_kernels import delta_nu_x, delta_x, gamma_nu_x, wrap_angle
from .errors import DomainError, PreconditionError
from .partial_waves import VortexConfig, build_partial_waves

_EULER_GAMMA = float(np.euler_gamma)


def f_tube_long(k: float, r_c: float) -> complex:
    """Long-wavelength tube amplitude, valid for k r_c < 0.01.

    Evaluates the resummed logarithmic form
        -sqrt(pi/(2k)) / (ln(2/(k r_c)) - gamma + i pi/2),
    whose expansion in inverse powers of the logarithm gives the familiar
    two-term bracket.  The resummed form agrees with the exact partial-wave
    amplitude to ~1e-7 relative at k r_c = 1e-4, where any two-term
    truncation is off by several percent.  Angle independent.
    """
    s = k * r_c
    if not (0.0 < s < 0.01):
        raise PreconditionError(f"long-wavelength form needs k r_c < 0.01, got {s}")
    den = math.log(2.0 / s) - _EULER_GAMMA + 0.5j * math.pi
    return -math.sqrt(math.pi / (2.0 * k)) / den


def f_tube_short(k: float, r_c: float, phi: float) -> complex:
    """Short-wavelength tube amplitude: Fraunhofer peak + geometric reflection.

    Valid for k r_c > 10.  The reflection magnitude is
    sqrt(r_c |sin(phi/2)| / 2), the classical value.
    """
    s = k * r_c
    if not (s > 10.0):
        raise PreconditionError(f"short-wavelength form needs k r_c > 10, got {s}")
    phi = wrap_angle(phi)
    half = abs(math.sin(phi / 2.0))
    peak = 1j * math.sqrt(2.0 * math.pi / k) * delta_x(s, phi)
    refl = -math.sqrt(r_c * half / 2.0) * np.exp(-1j * (2.0 * s * half + math.pi / 4.0))
    return complex(peak + refl)


def reflection_phase(s: float, rho: float, phi: float) -> float:
    """Robin phase correction of the reflected ray, reduced to (-pi/2, pi/2].

    Computed with the quadrant-aware arctangent and folded by half a turn,
    which keeps the physically relevant exp(-2i chi) continuous in phi and
    gives chi -> 0 as phi -> 0 (Dirichlet has chi = 0 identically).
    """
    if rho == 0.0:
        return 0.0
    half = math.sin(phi / 2.0)
    num = 2.0 * s * abs(half) ** 3
    den = 2.0 * (math.cos(rho * math.pi) / math.sin(rho * math.pi)) * half * half - 1.0
    chi = math.atan2(num, den)
    if chi > math.pi / 2.0:
        chi -= math.pi
    return chi


@dataclass(frozen=True)
class QuasiclassicalBreakdown:
    """Pieces of the short-wavelength channel sum (with its factor 2).

    sigma1 : complex
        Window-kernel part (exact finite geometric sum).
    sigma2 : complex
        Stationary-phase reflection part; |sigma2| = sqrt(s pi |sin(phi/2)|)
        by construction.
    sigma3_bound : float
        Envelope bound 2 Gamma(2/3) (s/12)^(1/3) for the omitted
        turnover-zone tail.
    chi : float
        Robin reflection phase.
    """

    sigma1: complex
    sigma2: complex
    sigma3_bound: float
    chi: float


def quasiclassical_breakdown(config: VortexConfig, phi: float) -> QuasiclassicalBreakdown:
    s, mu, rho = config.s, config.mu, config.rho
    if not (s > 10.0):
        raise PreconditionError(f"quasiclassical form needs k r_c > 10, got {s}")
    phi = wrap_angle(phi)
    if phi == 0.0:
        raise DomainError("quasiclassical amplitude is singular at phi = 0; "
                          "use fc_forward for the strictly forward value")
    dk = delta_nu_x(s, mu, phi)
    if mu == math.floor(mu):
        gk = 0.0
    else:
        gk = gamma_nu_x(s, mu, phi)
    sigma1 = 2.0 * math.pi * (math.cos(mu * math.pi) * dk - math.sin(mu * math.pi) * gk)
    chi = reflection_phase(s, rho, phi)
    half = abs(math.sin(phi / 2.0))
    sigma2 = (math.sqrt(s * math.pi * half) * np.exp(1j * math.pi / 4.0)
              * np.exp(-2j * chi)
              * np.exp(1j * (-2.0 * s * half + mu * (phi - math.copysign(math.pi, phi)))))
    bound = 2.0 * _sp.gamma(2.0 / 3.0) * (s / 12.0) ** (1.0 / 3.0)
    return QuasiclassicalBreakdown(sigma1=complex(sigma1), sigma2=complex(sigma2),
                                   sigma3_bound=float(bound), chi=chi)


def fc_quasiclassical(config: VortexConfig, phi: float) -> ComplexAmplitude:
    """Short-wavelength core amplitude: diffraction kernels + reflection.

    The reported error estimate is sqrt(r_c) (k r_c)^(-1/6), the scale of
    the omitted turnover-zone tail; the estimate is not uniform near the
    forward peak.
    """
    br = quasiclassical_breakdown(config, phi)
    k = config.k
    val = 1j / math.sqrt(2.0 * math.pi * k) * (br.sigma1 + br.sigma2)
    err = math.sqrt(config.r_c) * config.s ** (-1.0 / 6.0)
    return ComplexAmplitude(value=complex(val), phi=wrap_angle(phi),
                            config=config, est_error=err)


def fc_forward(config: VortexConfig) -> complex:
    """Leading strictly-forward core amplitude i sqrt(2k/pi) r_c cos(mu pi)."""
    if not (config.s > 10.0):
        raise PreconditionError(f"forward estimate needs k r_c > 10, got {config.s}")
    return 1j * math.sqrt(2.0 * config.k / math.pi) * config.r_c * math.cos(config.mu * math.pi)


@dataclass(frozen=True)
class TailCheck:
    measured: float
    predicted: float


def sigma3_tail_check(config: VortexConfig, tail_tol: float = 1e-18) -> TailCheck:
    """Magnitude of the exact turnover tail vs its cube-root growth law.

    measured  = |2 sum_{|n-mu|>s} phase_n upsilon_n| at phi = 0, from exact
                channels;
    predicted = 2 Gamma(2/3) (s/12)^(1/3), the flux-free envelope (the two
                index branches carry opposite flux phases, so the measured
                value is modulated by |cos(mu pi)| on top of O(1) terms).
    """
    s = config.s
    if not (s > 10.0):
        raise PreconditionError(f"tail check needs k r_c > 10, got {s}")
    pws = build_partial_waves(config, tail_tol)
    tail = np.abs(pws.ns - config.mu) > s
    measured = abs(2.0 * np.sum(pws.phases[tail] * pws.upsilons[tail]))
    predicted = 2.0 * _sp.gamma(2.0 / 3.0) * (s / 12.0) ** (1.0 / 3.0)
    return TailCheck(measured=float(measured), predicted=float(predicted))
