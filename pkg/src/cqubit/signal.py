"""Real/complex signal primitives.

Sinusoidal carriers, range renormalization onto [-1, 1], sampling on a
uniform time grid and the derivation of the complex |0> coefficient from a
measured classical signal.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass, field

import numpy as np

TWO_PI = 2.0 * math.pi


class OutOfDomainError(ValueError):
    """A value lies outside the domain an operation is defined on."""


def wrap_phase(angle: float) -> float:
    """Reduce an angle to [0, 2*pi)."""
    wrapped = float(angle) % TWO_PI
    # tiny negative inputs round up to exactly 2*pi
    if wrapped >= TWO_PI:
        return 0.0
    return wrapped


@dataclass(frozen=True)
class SignalRange:
    f_min: float
    f_max: float

    def __post_init__(self):
        if not self.f_max > self.f_min:
            raise ValueError(f"f_max ({self.f_max}) must exceed f_min ({self.f_min})")


@dataclass(frozen=True)
class Sinusoid:
    """``amplitude * sin(omega * t + varphi + quarter_turns * pi/2)``.

    ``varphi`` is kept in [0, 2*pi) and ``quarter_turns`` in 0..3. Quarter
    turns are applied exactly (sin -> cos -> -sin -> -cos) rather than
    folded into ``varphi``, so a sinusoid and its quadrature are always
    evaluated at the same rounded argument.
    """

    amplitude: float = 1.0
    omega: float = 0.0
    varphi: float = 0.0
    quarter_turns: int = 0

    def __post_init__(self):
        if not 0.0 <= self.amplitude <= 1.0:
            raise OutOfDomainError(f"amplitude must lie in [0, 1], got {self.amplitude}")
        if not self.omega >= 0.0:
            raise OutOfDomainError(f"omega must be non-negative, got {self.omega}")
        object.__setattr__(self, "varphi", wrap_phase(self.varphi))
        object.__setattr__(self, "quarter_turns", int(self.quarter_turns) % 4)

    @property
    def phase(self) -> float:
        """Total initial phase including the quarter turns."""
        return wrap_phase(self.varphi + self.quarter_turns * math.pi / 2)

    def __call__(self, t):
        theta = self.omega * np.asarray(t, dtype=float) + self.varphi
        k = self.quarter_turns
        base = np.sin(theta) if k % 2 == 0 else np.cos(theta)
        return (self.amplitude if k < 2 else -self.amplitude) * base


@dataclass(frozen=True)
class SampledWaveform:
    t0: float
    dt: float
    values: np.ndarray = field(repr=False)

    def __post_init__(self):
        if not self.dt > 0:
            raise ValueError(f"dt must be positive, got {self.dt}")
        values = np.asarray(self.values, dtype=float)
        if values.ndim != 1 or values.size == 0:
            raise ValueError("values must be a non-empty 1-d sequence")
        values.setflags(write=False)
        object.__setattr__(self, "values", values)

    def __len__(self):
        return self.values.size

    @property
    def times(self) -> np.ndarray:
        return time_grid(self.t0, self.dt, len(self))


def time_grid(t0: float, dt: float, n: int) -> np.ndarray:
    return t0 + np.arange(n) * dt


def renormalize(s: float, signal_range: SignalRange) -> float:
    """Map ``s`` affinely from ``[f_min, f_max]`` onto ``[-1, 1]``."""
    f_min, f_max = signal_range.f_min, signal_range.f_max
    if not f_min <= s <= f_max:
        raise OutOfDomainError(f"{s} is outside [{f_min}, {f_max}]")
    if s == f_max:
        return 1.0
    if s == f_min:
        return -1.0
    value = (2.0 * s - (f_max + f_min)) / (f_max - f_min)
    return min(1.0, max(-1.0, value))


def sample_sinusoid(s: Sinusoid, t0: float, dt: float, n: int) -> SampledWaveform:
    if n < 1:
        raise ValueError(f"need at least one sample, got n={n}")
    if not dt > 0:
        raise ValueError(f"dt must be positive, got {dt}")
    return SampledWaveform(t0, dt, s(time_grid(t0, dt, n)))


def quadrature(s: Sinusoid) -> Sinusoid:
    """Return the cosine companion of ``s``, i.e. ``amplitude * cos(omega*t + varphi)``."""
    return Sinusoid(s.amplitude, s.omega, s.varphi, s.quarter_turns + 1)


def quantum_component(s_cl: float, branch: int, phi_az: float) -> complex:
    """Complex |0> coefficient ``branch * exp(-i*phi_az) * sqrt(1 - s_cl**2)``.

    ``branch`` selects the sign (+1 or -1) of the square root. For
    sinusoidal carriers use :func:`quadrature` instead, which keeps the sign
    of the cosine rather than its absolute value.
    """
    if branch not in (1, -1):
        raise ValueError(f"branch must be +1 or -1, got {branch}")
    if abs(s_cl) > 1.0:
        raise OutOfDomainError(f"|s_cl| must not exceed 1, got {s_cl}")
    return branch * cmath.exp(-1j * phi_az) * math.sqrt(1.0 - s_cl * s_cl)


def check_normalization(c0: complex, c1: complex, tol: float) -> bool:
    if not tol > 0:
        raise ValueError(f"tol must be positive, got {tol}")
    return abs(abs(c0) ** 2 + abs(c1) ** 2 - 1.0) <= tol
