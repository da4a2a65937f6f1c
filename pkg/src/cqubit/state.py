"""The cqubit data model.

A cqubit ``e^{i alpha} cos(wt + varphi)|0> + e^{i beta} sin(wt + varphi)|1>``
is carried on four real channels::

    c0_re = cos(alpha) cos(wt + varphi)     c1_re = cos(beta) sin(wt + varphi)
    c0_im = sin(alpha) cos(wt + varphi)     c1_im = sin(beta) sin(wt + varphi)

Single samples are :class:`ChannelQuad` tuples; time series are
:class:`ChannelQuadWave` objects holding an ``(n, 4)`` array in the same
channel order.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field
from typing import NamedTuple

import numpy as np

from .signal import (
    OutOfDomainError,
    SampledWaveform,
    Sinusoid,
    quadrature,
    time_grid,
    wrap_phase,
)

CHANNELS = ("c0re", "c0im", "c1re", "c1im")
NORM_TOL = 1e-9


class NotNormalizedError(ValueError):
    """The state does not have unit norm."""


@dataclass(frozen=True)
class CqubitParams:
    omega: float
    varphi: float = 0.0
    alpha: float = 0.0
    beta: float = 0.0

    def __post_init__(self):
        if not (math.isfinite(self.omega) and self.omega >= 0):
            raise OutOfDomainError(f"omega must be finite and non-negative, got {self.omega}")
        for name in ("varphi", "alpha", "beta"):
            object.__setattr__(self, name, wrap_phase(getattr(self, name)))

    @property
    def phi_az(self) -> float:
        """Relative phase ``beta - alpha`` in [0, 2*pi)."""
        return wrap_phase(self.beta - self.alpha)

    @property
    def carrier(self) -> Sinusoid:
        return Sinusoid(1.0, self.omega, self.varphi)


class ChannelQuad(NamedTuple):
    c0_re: float
    c0_im: float
    c1_re: float
    c1_im: float


@dataclass(frozen=True)
class ChannelQuadWave:
    """Four channels sampled on the shared grid ``t0 + k*dt``."""

    t0: float
    dt: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        values = np.array(self.values, dtype=float)
        if values.ndim != 2 or values.shape[1] != 4 or values.shape[0] == 0:
            raise ValueError(f"values must have shape (n, 4) with n >= 1, got {values.shape}")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    @classmethod
    def from_channels(cls, c0_re, c0_im, c1_re, c1_im) -> ChannelQuadWave:
        waves = (c0_re, c0_im, c1_re, c1_im)
        grid = {(w.t0, w.dt, len(w)) for w in waves}
        if len(grid) != 1:
            raise ValueError("all four channels must share t0, dt and length")
        t0, dt, _ = grid.pop()
        return cls(t0, dt, np.column_stack([w.values for w in waves]))

    def __len__(self):
        return self.values.shape[0]

    @property
    def times(self) -> np.ndarray:
        return time_grid(self.t0, self.dt, len(self))

    def channel(self, index: int) -> SampledWaveform:
        return SampledWaveform(self.t0, self.dt, self.values[:, index])

    def with_values(self, values) -> ChannelQuadWave:
        return ChannelQuadWave(self.t0, self.dt, values)


def from_classical(carrier: Sinusoid, alpha: float, beta: float) -> CqubitParams:
    """Lift a unit-amplitude classical sinusoid to a cqubit with phases ``alpha``, ``beta``."""
    if abs(carrier.amplitude - 1.0) > 1e-12:
        raise NotNormalizedError(f"carrier amplitude must be 1, got {carrier.amplitude}")
    return CqubitParams(carrier.omega, carrier.varphi, alpha, beta)


def channel_array(p: CqubitParams, t) -> np.ndarray:
    """Channel values at each time in ``t``, shape ``t.shape + (4,)``.

    The |1> channels come from the carrier, the |0> channels from its
    quadrature companion.
    """
    carrier = p.carrier
    classical = carrier(t)
    quantum = quadrature(carrier)(t)
    return np.stack(
        [
            math.cos(p.alpha) * quantum,
            math.sin(p.alpha) * quantum,
            math.cos(p.beta) * classical,
            math.sin(p.beta) * classical,
        ],
        axis=-1,
    )


def channels_at(p: CqubitParams, t: float) -> ChannelQuad:
    return ChannelQuad(*channel_array(p, float(t)).tolist())


def channels_wave(p: CqubitParams, t0: float, dt: float, n: int) -> ChannelQuadWave:
    """Sample the four channels of ``p`` on ``n`` points starting at ``t0``."""
    return ChannelQuadWave(t0, dt, channel_array(p, time_grid(t0, dt, n)))


def amplitudes(q):
    """Pack channels into the complex amplitudes ``(a, b)`` of |0> and |1>.

    Works on a single quad (returns two ``complex``) or on an ``(..., 4)``
    array (returns two complex arrays).
    """
    arr = np.asarray(q, dtype=float)
    a = arr[..., 0] + 1j * arr[..., 1]
    b = arr[..., 2] + 1j * arr[..., 3]
    if arr.ndim == 1:
        return complex(a), complex(b)
    return a, b


def quad_of(a, b):
    """Inverse of :func:`amplitudes`."""
    a = np.asarray(a, dtype=complex)
    b = np.asarray(b, dtype=complex)
    out = np.stack([a.real, a.imag, b.real, b.imag], axis=-1)
    if out.ndim == 1:
        return ChannelQuad(*out.tolist())
    return out


def _norm_sq(a: complex, b: complex) -> float:
    return abs(a) ** 2 + abs(b) ** 2


def _require_normalized(a: complex, b: complex, tol: float = NORM_TOL):
    norm = _norm_sq(a, b)
    if abs(norm - 1.0) > tol:
        raise NotNormalizedError(f"state norm^2 is {norm!r}, expected 1 within {tol}")


def remove_global_phase(a: complex, b: complex) -> tuple[complex, complex]:
    """Rotate out the common phase so ``b`` is real and non-negative.

    When ``b`` vanishes the phase of ``a`` is removed instead.
    """
    a, b = complex(a), complex(b)
    if abs(a) == 0 and abs(b) == 0:
        raise ValueError("global phase of the zero vector is undefined")
    _require_normalized(a, b)
    if abs(b) > 1e-12:
        rot = cmath.exp(-1j * cmath.phase(b))
        return a * rot, complex(abs(b), 0.0)
    rot = cmath.exp(-1j * cmath.phase(a))
    return complex(abs(a), 0.0), b * rot


def prob_one(q) -> float:
    """Probability of |1>, i.e. ``c1_re**2 + c1_im**2``."""
    a, b = amplitudes(q)
    _require_normalized(a, b)
    return abs(b) ** 2


def prob_zero(q) -> float:
    return 1.0 - prob_one(q)


def bloch_vector(a: complex, b: complex) -> tuple[float, float, float]:
    a, b = complex(a), complex(b)
    _require_normalized(a, b)
    coherence = a.conjugate() * b
    return 2.0 * coherence.real, 2.0 * coherence.imag, abs(a) ** 2 - abs(b) ** 2
