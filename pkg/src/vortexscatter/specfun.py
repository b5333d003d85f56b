"""Cylinder functions of real nonnegative order and the complex error function.

Evaluation is delegated to scipy.special except in the deep-tail regime
(order well above argument), where scipy's ``jv`` underflows to zero a few
orders of magnitude too early and loses relative accuracy just above its
internal cutoff.  There the ascending power series is used instead; with
``u <= 2*sqrt(alpha+1)`` the series terms decrease monotonically, so the
summation is cancellation-free and accurate to ~1e-15 relative all the way
down to the true double-precision underflow floor.

Derivatives use the downward recurrence ``F' = (alpha/u) F - F_{alpha+1}``,
which needs only nonnegative orders.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np
from scipy import special as _sp

from .errors import DomainError, OverflowRangeError

# Largest supported argument.  scipy's cylinder functions remain accurate
# well beyond this; the cap exists so the contract has a stated range.
U_MAX = 1.0e6

# Below this log-magnitude the value has fewer than 12 good digits even
# as a subnormal; treat it as underflowed.
_LOG_TINY = -744.0

# Smallest magnitude at which a subnormal double still carries ~1e-12
# relative precision.
_J_FLOOR = 1e-311


@dataclass(frozen=True)
class CylFunValue:
    """Bessel pair J_alpha(u), Y_alpha(u) and their u-derivatives."""

    j: float
    y: float
    jp: float
    yp: float

    @property
    def h1(self) -> complex:
        """First-kind Hankel value J + iY."""
        return complex(self.j, self.y)

    @property
    def h1p(self) -> complex:
        """Derivative of the first-kind Hankel function."""
        return complex(self.jp, self.yp)


def _series_j(orders: np.ndarray, u: float) -> np.ndarray:
    """Ascending series for J_alpha(u), valid for u <= 2*sqrt(alpha+1).

    All series terms after the first are bounded by their predecessor in
    that range, so no cancellation occurs and ~1e-15 relative accuracy is
    reached in at most a few dozen terms.  Entries whose leading factor
    ``(u/2)^alpha / Gamma(alpha+1)`` underflows are returned as 0.0.
    """
    orders = np.asarray(orders, dtype=float)
    log_pref = orders * np.log(u / 2.0) - _sp.gammaln(orders + 1.0)
    with np.errstate(under="ignore"):
        pref = np.where(log_pref < _LOG_TINY, 0.0, np.exp(log_pref))
    x = -0.25 * u * u
    term = np.ones_like(orders)
    total = np.ones_like(orders)
    for m in range(1, 300):
        term = term * (x / (m * (orders + m)))
        total += term
        if np.max(np.abs(term)) <= 1e-17 * np.min(np.abs(total)):
            break
    return pref * total


def _j_dispatch(orders: np.ndarray, u: float) -> np.ndarray:
    """J_alpha(u) for an array of orders, series-backed in the deep tail."""
    orders = np.asarray(orders, dtype=float)
    out = np.empty_like(orders)
    series = u <= 2.0 * np.sqrt(orders + 1.0)
    if np.any(series):
        out[series] = _series_j(orders[series], u)
    if np.any(~series):
        out[~series] = _sp.jv(orders[~series], u)
    return out


def _jy_arrays(orders: np.ndarray, u: float):
    """Vectorized (J, Y, J', Y') at scalar argument ``u``.

    Internal fast path: performs no domain checks and may return
    non-finite entries (Y overflow) or exact zeros (J underflow); callers
    mask those.  The scalar API `bessel_jy` adds the error contract.
    """
    orders = np.asarray(orders, dtype=float)
    with np.errstate(all="ignore"):
        j_both = _j_dispatch(np.concatenate([orders, orders + 1.0]), u)
        j, j1 = j_both[: orders.size], j_both[orders.size:]
        y = _sp.yv(orders, u)
        y1 = _sp.yv(orders + 1.0, u)
        jp = (orders / u) * j - j1
        yp = (orders / u) * y - y1
    return j, y, jp, yp


def bessel_jy(alpha: float, u: float) -> CylFunValue:
    """Evaluate J_alpha(u), Y_alpha(u) and their derivatives.

    Parameters
    ----------
    alpha : float
        Order, alpha >= 0.
    u : float
        Argument, 0 < u <= U_MAX.

    Returns
    -------
    CylFunValue

    Raises
    ------
    DomainError
        For u <= 0, alpha < 0 or u > U_MAX.
    OverflowRangeError
        When Y overflows (equivalently J underflows) the double range,
        which happens for large order at small argument.
    """
    if not (alpha >= 0.0):
        raise DomainError(f"order must be >= 0, got {alpha}")
    if not (0.0 < u <= U_MAX):
        raise DomainError(f"argument must be in (0, {U_MAX:g}], got {u}")
    arr = np.array([alpha], dtype=float)
    j, y, jp, yp = (float(v[0]) for v in _jy_arrays(arr, float(u)))
    if not all(map(np.isfinite, (j, y, jp, yp))) or (abs(j) < _J_FLOOR and u < alpha):
        raise OverflowRangeError(
            f"Y_alpha(u) outside representable range at alpha={alpha}, u={u}"
        )
    return CylFunValue(j=j, y=y, jp=jp, yp=yp)


def hankel1(alpha: float, u: float) -> complex:
    """First-kind Hankel function H^(1)_alpha(u) = J_alpha(u) + i Y_alpha(u)."""
    v = bessel_jy(alpha, u)
    return v.h1


def erfc_complex(z: complex) -> complex:
    """Complementary error function for complex argument.

    Backed by the Faddeeva function; on the ray z = exp(-i pi/4) * x the
    exponential factor exp(-z^2) has unit modulus, so the evaluation stays
    in range for arbitrarily large x.
    """
    return complex(_sp.erfc(complex(z)))
