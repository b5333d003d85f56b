"""Regularized angular delta-type kernels.

Every kernel here is a finite (or closed-form resummed) trigonometric sum
over integer angular-momentum indices.  The flux-shifted window
``|n - mu| <= x`` selects integers ``-s_minus .. s_plus`` with
``s_plus = [x + mu]``, ``s_minus = [x - mu]`` (floor).  The closed forms fall
into three branches keyed by ``s_plus - s_minus - 2*[mu]`` being 1, 0 or 2;
direct term-by-term summation is the arbiter for the branch bookkeeping and
is kept in the test suite.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError

# Below this |phi| the kernels switch to series in phi (removable 0/0).
_PHI_SMALL = 1e-6

# x +- mu closer than this to an integer is treated as a tie and broken
# deterministically by nudging x upward.
_TIE_EPS = 1e-12
_TIE_NUDGE = 1e-9


def wrap_angle(phi: float) -> float:
    """Map an angle to the principal interval (-pi, pi]."""
    w = math.remainder(phi, 2.0 * math.pi)
    if w <= -math.pi:
        w += 2.0 * math.pi
    return w


@dataclass(frozen=True)
class CutoffWindow:
    """Integer bookkeeping for the index window |n - mu| <= x."""

    x: float
    mu: float
    nu: int          # floor(mu)
    s_plus: int      # floor(x + mu): largest included n
    s_minus: int     # floor(x - mu): -smallest included n
    s_c: int         # effective cutoff entering the closed forms
    case: str        # "equal", "upper" or "lower"

    @property
    def count(self) -> int:
        """Number of integers in the window (0 if empty)."""
        return max(self.s_plus + self.s_minus + 1, 0)


def cutoff_window(x: float, mu: float) -> CutoffWindow:
    """Classify the index window and pick the closed-form branch."""
    if x <= 0.0:
        raise DomainError(f"cutoff x must be positive, got {x}")
    if (abs(x + mu - round(x + mu)) < _TIE_EPS
            or abs(x - mu - round(x - mu)) < _TIE_EPS):
        x = x + _TIE_NUDGE
    nu = math.floor(mu)
    s_plus = math.floor(x + mu)
    s_minus = math.floor(x - mu)
    diff = s_plus - s_minus
    if diff == 2 * nu + 1:
        case, s_c = "equal", s_plus - nu
    elif diff == 2 * nu:
        case, s_c = "upper", s_plus - nu
    elif diff == 2 * nu + 2:
        case, s_c = "lower", s_plus - nu - 1
    else:  # unreachable: floor(x+mu)-floor(x-mu) is always 2 nu + {0,1,2}
        raise AssertionError(f"window classification failed for x={x}, mu={mu}")
    return CutoffWindow(x=x, mu=mu, nu=nu, s_plus=s_plus, s_minus=s_minus,
                        s_c=s_c, case=case)


def _as_angles(phi):
    arr = np.atleast_1d(np.asarray(phi, dtype=float))
    return np.array([wrap_angle(p) for p in arr.ravel()]).reshape(arr.shape)


def _maybe_scalar(out, phi):
    if np.isscalar(phi) or np.asarray(phi).ndim == 0:
        return out.reshape(-1)[0].item()
    return out


def _sin_ratio(kappa: float, phi: np.ndarray) -> np.ndarray:
    """sin(kappa*phi) / sin(phi/2), with the removable singularity filled."""
    out = np.empty_like(phi)
    small = np.abs(phi) < _PHI_SMALL
    big = ~small
    out[big] = np.sin(kappa * phi[big]) / np.sin(phi[big] / 2.0)
    ps = phi[small]
    out[small] = 2.0 * kappa * (1.0 - (4.0 * kappa * kappa - 1.0) * ps * ps / 24.0)
    return out


def _versine_ratio(kappa: float, phi: np.ndarray) -> np.ndarray:
    """(1 - cos(kappa*phi)) / sin(phi/2), singularity filled.

    Evaluated as 2 sin^2(kappa phi / 2) / sin(phi/2), which avoids the
    1 - cos cancellation at small kappa*phi.
    """
    out = np.empty_like(phi)
    small = np.abs(phi) < _PHI_SMALL
    big = ~small
    out[big] = 2.0 * np.sin(kappa * phi[big] / 2.0) ** 2 / np.sin(phi[big] / 2.0)
    ps = phi[small]
    out[small] = kappa * kappa * ps * (1.0 - (kappa * kappa / 12.0 - 1.0 / 24.0) * ps * ps)
    return out


def delta_x(x: float, phi) -> float | np.ndarray:
    """Symmetric-window Dirichlet kernel: (1/2pi) sum_{|n|<=x} e^{i n phi}."""
    if x <= 0.0:
        raise DomainError(f"cutoff x must be positive, got {x}")
    m = math.floor(x)
    ph = _as_angles(phi)
    out = _sin_ratio(m + 0.5, ph) / (2.0 * np.pi)
    return _maybe_scalar(out, phi)


def delta_nu_x(x: float, mu: float, phi) -> complex | np.ndarray:
    """Flux-shifted window kernel: (1/2pi) sum_{|n-mu|<=x} e^{i n phi}."""
    w = cutoff_window(x, mu)
    ph = _as_angles(phi)
    if w.case == "equal":
        sigma, kappa = w.nu + 0.5, float(w.s_c)
    elif w.case == "upper":
        sigma, kappa = float(w.nu), w.s_c + 0.5
    else:
        sigma, kappa = w.nu + 1.0, w.s_c + 0.5
    out = np.exp(1j * sigma * ph) * _sin_ratio(kappa, ph) / (2.0 * np.pi)
    return _maybe_scalar(out, phi)


def gamma_nu_x(x: float, mu: float, phi) -> complex | np.ndarray:
    """Signed window kernel: (1/2pi i) sum_{|n-mu|<=x} sgn(n-mu) e^{i n phi}.

    Rejects integer mu, where sgn(n - mu) is undefined at n = mu; callers
    use the vanishing-sine branch of the amplitude instead.
    """
    if mu == math.floor(mu):
        raise DomainError("signed kernel undefined for integer mu")
    w = cutoff_window(x, mu)
    ph = _as_angles(phi)
    if w.case == "equal":
        out = np.exp(1j * (w.nu + 0.5) * ph) * _versine_ratio(float(w.s_c), ph) / (2.0 * np.pi)
    else:
        sigma = float(w.nu) if w.case == "upper" else w.nu + 1.0
        corner = 1j if w.case == "upper" else -1j
        out = np.exp(1j * sigma * ph) * (
            _versine_ratio(w.s_c + 0.5, ph) - np.tan(ph / 4.0) + corner
        ) / (2.0 * np.pi)
    return _maybe_scalar(out, phi)


def gamma_nu(mu: float, phi) -> complex | np.ndarray:
    """Full signed kernel e^{i(nu+1/2)phi} / (2 pi sin(phi/2)), phi != 0.

    The forward-direction divergence is principal-value; callers needing
    phi -> 0 behaviour use the error-function form of the amplitude.
    """
    if mu == math.floor(mu):
        raise DomainError("signed kernel undefined for integer mu")
    nu = math.floor(mu)
    ph = _as_angles(phi)
    if np.any(ph == 0.0):
        raise DomainError("signed kernel diverges at phi = 0 (principal value)")
    out = np.exp(1j * (nu + 0.5) * ph) / (2.0 * np.pi * np.sin(ph / 2.0))
    return _maybe_scalar(out, phi)


def delta_tilde(x: float, phi) -> float | np.ndarray:
    """Smoothed diffraction kernel sin^2(x phi) / (4 pi x sin^2(phi/2))."""
    if x < 10.0:
        raise DomainError(f"smoothed kernel requires x >= 10, got {x}")
    ph = _as_angles(phi)
    out = np.empty_like(ph)
    small = np.abs(ph) < _PHI_SMALL
    big = ~small
    out[big] = (np.sin(x * ph[big]) / np.sin(ph[big] / 2.0)) ** 2 / (4.0 * np.pi * x)
    ps = ph[small]
    zero = ps == 0.0
    ratio = np.empty_like(ps)
    ratio[zero] = x
    # sin(x phi)/phi stays well-conditioned; expand only 1/sin^2(phi/2)
    ratio[~zero] = np.sin(x * ps[~zero]) / ps[~zero]
    out[small] = ratio * ratio * (1.0 + ps * ps / 12.0) / (np.pi * x)
    return _maybe_scalar(out, phi)
