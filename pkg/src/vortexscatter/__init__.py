"""Quantum scattering off a finite-radius impermeable magnetic vortex.

Exact partial-wave amplitudes and wave fields under Robin boundary
conditions, their short- and long-wavelength closed forms, cross sections,
and machine-precision optical-theorem verification.
"""

from .amplitudes import (ComplexAmplitude, f0, f0_near_forward, f_tube,
                         fc_exact, fc_values, forward_wave)
from .angular_kernels import (CutoffWindow, cutoff_window, delta_nu_x,
                              delta_tilde, delta_x, gamma_nu, gamma_nu_x,
                              wrap_angle)
from .asymptotics import (QuasiclassicalBreakdown, TailCheck, f_tube_long,
                          f_tube_short, fc_forward, fc_quasiclassical,
                          quasiclassical_breakdown, reflection_phase,
                          sigma3_tail_check)
from .cross_sections import (CrossSectionReport, dsigma_asymptotic,
                             dsigma_exact, sigma_closed_short, sigma_parseval,
                             sigma_quadrature)
from .errors import (ChannelCapError, DomainError, OverflowRangeError,
                     PreconditionError, VortexScatterError)
from .fields import (FieldSample, boundary_residual, incident_normalization,
                     psi_plane, psi_vortex, wavefield_grid)
from .partial_waves import (PartialWaveChannel, PartialWaveSet, VortexConfig,
                            build_partial_waves, upsilon)
from .specfun import CylFunValue, bessel_jy, erfc_complex, hankel1
from .unitarity import (UnitarityReport, quasiclassical_offdiagonal,
                        quasiclassical_optical_theorem,
                        singular_vortex_weak_form, suite_configs,
                        tube_offdiagonal_unitarity, tube_optical_theorem,
                        vortex_offdiagonal, vortex_optical_theorem)

__version__ = "0.1.0"

__all__ = [
    "ComplexAmplitude", "CrossSectionReport", "CutoffWindow", "CylFunValue",
    "FieldSample", "PartialWaveChannel", "PartialWaveSet",
    "QuasiclassicalBreakdown", "TailCheck", "UnitarityReport", "VortexConfig",
    "ChannelCapError", "DomainError", "OverflowRangeError",
    "PreconditionError", "VortexScatterError",
    "bessel_jy", "boundary_residual", "build_partial_waves", "cutoff_window",
    "delta_nu_x", "delta_tilde", "delta_x", "dsigma_asymptotic",
    "dsigma_exact", "erfc_complex", "f0", "f0_near_forward", "f_tube",
    "f_tube_long", "f_tube_short", "fc_exact", "fc_forward",
    "fc_quasiclassical", "fc_values", "forward_wave", "gamma_nu",
    "gamma_nu_x", "hankel1", "incident_normalization", "psi_plane",
    "psi_vortex", "wavefield_grid", "quasiclassical_breakdown", "quasiclassical_offdiagonal",
    "quasiclassical_optical_theorem", "reflection_phase", "sigma3_tail_check",
    "sigma_closed_short", "sigma_parseval", "sigma_quadrature",
    "singular_vortex_weak_form", "suite_configs", "tube_offdiagonal_unitarity",
    "tube_optical_theorem", "upsilon", "vortex_offdiagonal",
    "vortex_optical_theorem", "wrap_angle",
]
