"""Per-channel reflection coefficients for the finite-radius vortex.

A channel is one integer angular momentum ``n``; its radial order is
``|n - mu|`` and its reflection coefficient is the ratio of (Robin boundary
operator applied to J) over (the same operator applied to H1) at the core
surface.  Because numerator and the Hankel combination share the real part,
each coefficient satisfies ``Re(upsilon) = |upsilon|^2`` identically, which
is what makes the optical-theorem residuals pure truncation measurements.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .errors import ChannelCapError, DomainError, OverflowRangeError
from .specfun import _jy_arrays, bessel_jy

# Hard cap on the number of channels a single set may hold.
CHANNEL_CAP = 10**6

# Channels are appended in blocks of this size during the tail scan.
_SCAN_BLOCK = 16


@dataclass(frozen=True)
class VortexConfig:
    """Physical scenario: wavenumber, core radius, reduced flux, Robin mix.

    Attributes
    ----------
    k : float
        Wavenumber, > 0 (1/length).
    r_c : float
        Core radius, > 0 (length).
    mu : float
        Reduced magnetic flux (flux over flux quantum), any real.
    rho : float
        Robin boundary parameter in [0, 1): 0 is Dirichlet, 1/2 is Neumann.
    """

    k: float
    r_c: float
    mu: float = 0.0
    rho: float = 0.0

    def __post_init__(self):
        if not (self.k > 0.0):
            raise DomainError(f"k must be positive, got {self.k}")
        if not (self.r_c > 0.0):
            raise DomainError(f"r_c must be positive, got {self.r_c}")
        if not (0.0 <= self.rho < 1.0):
            raise DomainError(f"rho must lie in [0, 1), got {self.rho}")

    @property
    def s(self) -> float:
        """Dimensionless core size k * r_c."""
        return self.k * self.r_c

    @property
    def nu(self) -> int:
        """Integer part (floor) of the reduced flux."""
        return math.floor(self.mu)


@dataclass(frozen=True)
class PartialWaveChannel:
    n: int
    order: float
    upsilon: complex
    phase: complex  # unit-modulus factor exp(i (|n| - |n-mu|) pi)


@dataclass(frozen=True)
class PartialWaveSet:
    """Truncated channel family with a certified bound on the omitted tail."""

    config: VortexConfig
    channels: tuple[PartialWaveChannel, ...]
    tail_bound: float
    # Vector views over the channels, precomputed for the hot paths.
    ns: np.ndarray = field(repr=False, default=None)
    orders: np.ndarray = field(repr=False, default=None)
    upsilons: np.ndarray = field(repr=False, default=None)
    phases: np.ndarray = field(repr=False, default=None)

    def __post_init__(self):
        object.__setattr__(self, "ns", np.array([c.n for c in self.channels]))
        object.__setattr__(self, "orders", np.array([c.order for c in self.channels]))
        object.__setattr__(self, "upsilons",
                           np.array([c.upsilon for c in self.channels], dtype=complex))
        object.__setattr__(self, "phases",
                           np.array([c.phase for c in self.channels], dtype=complex))

    @property
    def n_min(self) -> int:
        return int(self.ns[0])

    @property
    def n_max(self) -> int:
        return int(self.ns[-1])

    @property
    def truncation_n(self) -> int:
        """Largest |n| retained."""
        return int(max(abs(self.n_min), abs(self.n_max)))


def _upsilon_from_parts(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """upsilon = a / (a + i b) for real arrays, scaled against overflow.

    Non-finite boundary values (Hankel overflow deep in the tail) and
    underflowed numerators map to exactly 0, the correct limit there.
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    out = np.zeros(a.shape, dtype=complex)
    m = np.maximum(np.abs(a), np.abs(b))
    ok = np.isfinite(a) & np.isfinite(b) & (m > 0.0) & (np.abs(a) > 0.0)
    an, bn = a[ok] / m[ok], b[ok] / m[ok]
    d = an * an + bn * bn
    out[ok] = (an * an - 1j * an * bn) / d
    return out


def _upsilon_arrays(orders: np.ndarray, u: float, rho: float) -> np.ndarray:
    """Vectorized reflection coefficients at dimensionless core size u."""
    j, y, jp, yp = _jy_arrays(orders, u)
    c, d = math.cos(math.pi * rho), math.sin(math.pi * rho)
    with np.errstate(all="ignore"):
        a = c * j + d * u * jp
        b = c * y + d * u * yp
    return _upsilon_from_parts(a, b)


def upsilon(order: float, u: float, rho: float) -> complex:
    """Reflection coefficient of a single radial order.

    Dirichlet (rho = 0) reduces to J/H1 and Neumann (rho = 1/2) to J'/H1'.
    Deep in the evanescent tail, where the Neumann function leaves the
    representable range, the coefficient is below 1e-300 in magnitude and
    is returned as exactly 0.
    """
    if not (order >= 0.0):
        raise DomainError(f"order must be >= 0, got {order}")
    if not (0.0 <= rho < 1.0):
        raise DomainError(f"rho must lie in [0, 1), got {rho}")
    try:
        bessel_jy(order, u)  # domain checks + representability probe
    except OverflowRangeError:
        return 0.0 + 0.0j
    return complex(_upsilon_arrays(np.array([order]), float(u), rho)[0])


def _phases_for(ns: np.ndarray, mu: float) -> np.ndarray:
    # exact real exponent, one exp call per channel: no phase accumulation
    return np.exp(1j * np.pi * (np.abs(ns) - np.abs(ns - mu)))


def _tail_decay_ratio(order: float, s: float) -> float:
    """|upsilon(order+1)| / |upsilon(order)| from the evanescent envelope
    exp[2 sqrt(a^2-s^2) - 2 a arccosh(a/s)]."""
    def g(a: float) -> float:
        return 2.0 * math.sqrt(a * a - s * s) - 2.0 * a * math.acosh(a / s)
    return math.exp(g(order + 1.0) - g(order))


def build_partial_waves(config: VortexConfig, tail_tol: float = 1e-14) -> PartialWaveSet:
    """Construct all channels needed to represent the scattering solution.

    The index window starts at ``|n - mu| <= s + 10 + 5 s^(1/3)`` (the
    turnover zone of the radial functions has width of order s^(1/3)) and
    each side is extended until five consecutive coefficients fall below
    ``tail_tol``.  The returned ``tail_bound`` is a geometric-envelope bound
    on the summed magnitude of everything omitted.

    Raises
    ------
    ChannelCapError
        If more than CHANNEL_CAP channels would be required.
    """
    if not (tail_tol > 0.0):
        raise DomainError(f"tail_tol must be positive, got {tail_tol}")
    s, mu, rho = config.s, config.mu, config.rho
    a0 = s + 10.0 + 5.0 * s ** (1.0 / 3.0)
    n_lo = math.floor(mu - a0)
    n_hi = math.ceil(mu + a0)
    if n_hi - n_lo + 1 > CHANNEL_CAP:
        raise ChannelCapError(f"initial window already exceeds {CHANNEL_CAP} channels")
    ns = np.arange(n_lo, n_hi + 1)
    ups = _upsilon_arrays(np.abs(ns - mu), s, rho)

    def extend(direction: int, ns: np.ndarray, ups: np.ndarray):
        # count the sub-tolerance run already present at this edge
        run = 0
        scan = ups[::-1] if direction == 1 else ups
        for v in scan:
            if abs(v) < tail_tol:
                run += 1
                if run >= 5:
                    break
            else:
                break
        while run < 5:
            if ns.size + _SCAN_BLOCK > CHANNEL_CAP:
                raise ChannelCapError(f"channel count exceeded {CHANNEL_CAP}")
            if direction == 1:
                block = np.arange(ns[-1] + 1, ns[-1] + 1 + _SCAN_BLOCK)
            else:
                block = np.arange(ns[0] - _SCAN_BLOCK, ns[0])
            bu = _upsilon_arrays(np.abs(block - mu), s, rho)
            if direction == 1:
                ns = np.concatenate([ns, block])
                ups = np.concatenate([ups, bu])
                scan_vals = bu
            else:
                ns = np.concatenate([block, ns])
                ups = np.concatenate([bu, ups])
                scan_vals = bu[::-1]
            for v in scan_vals:
                if abs(v) < tail_tol:
                    run += 1
                    if run >= 5:
                        break
                else:
                    run = 0
        return ns, ups

    ns, ups = extend(+1, ns, ups)
    ns, ups = extend(-1, ns, ups)

    def side_bound(order_last: float, mag_last: float) -> float:
        if mag_last == 0.0:
            return 0.0
        r = _tail_decay_ratio(order_last, s)
        r = min(r, 0.5)  # scan already confirmed decay; envelope ratio < 1
        return mag_last * r / (1.0 - r)

    tail_bound = (side_bound(abs(ns[-1] - mu), abs(ups[-1]))
                  + side_bound(abs(ns[0] - mu), abs(ups[0])))
    phases = _phases_for(ns, mu)
    channels = tuple(
        PartialWaveChannel(n=int(n), order=float(abs(n - mu)),
                           upsilon=complex(up), phase=complex(ph))
        for n, up, ph in zip(ns, ups, phases)
    )
    return PartialWaveSet(config=config, channels=channels, tail_bound=float(tail_bound))
