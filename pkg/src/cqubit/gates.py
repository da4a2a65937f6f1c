"""Channel-level single-qubit gates and their unitary matrices.

The channel functions act directly on the four real channels and never
form complex numbers; :func:`oracle_apply` is the independent complex
matrix-vector route used to check them. All channel functions accept a
single quad or an ``(n, 4)`` array and map sample-wise.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Union

import numpy as np

from .signal import wrap_phase

INV_SQRT2 = 1.0 / math.sqrt(2.0)


@dataclass(frozen=True)
class Hadamard:
    name = "H"


@dataclass(frozen=True)
class PauliX:
    name = "X"


@dataclass(frozen=True)
class RPhi:
    """Conditional phase shift ``diag(1, exp(i*phi))``."""

    phi: float

    name = "RPHI"

    def __post_init__(self):
        object.__setattr__(self, "phi", wrap_phase(self.phi))


GateOp = Union[Hadamard, PauliX, RPhi]

H = Hadamard()
X = PauliX()


def _quad(q) -> np.ndarray:
    arr = np.array(q, dtype=float)
    if arr.shape[-1] != 4:
        raise ValueError(f"expected 4 channels in the last axis, got shape {arr.shape}")
    return arr


def hadamard_channels(q) -> np.ndarray:
    q = _quad(q)
    c0_re, c0_im, c1_re, c1_im = np.moveaxis(q, -1, 0)
    return np.stack(
        [
            INV_SQRT2 * (c0_re + c1_re),
            INV_SQRT2 * (c0_im + c1_im),
            INV_SQRT2 * (c0_re - c1_re),
            INV_SQRT2 * (c0_im - c1_im),
        ],
        axis=-1,
    )


def x_channels(q) -> np.ndarray:
    return _quad(q)[..., [2, 3, 0, 1]]


def rphi_channels(q, phi_gate: float) -> np.ndarray:
    out = _quad(q)
    c1_re = out[..., 2].copy()
    c1_im = out[..., 3].copy()
    cos_phi, sin_phi = math.cos(phi_gate), math.sin(phi_gate)
    out[..., 2] = cos_phi * c1_re - sin_phi * c1_im
    out[..., 3] = cos_phi * c1_im + sin_phi * c1_re
    return out


def matrix_of(gate: GateOp) -> np.ndarray:
    if isinstance(gate, Hadamard):
        return INV_SQRT2 * np.array([[1, 1], [1, -1]], dtype=complex)
    if isinstance(gate, PauliX):
        return np.array([[0, 1], [1, 0]], dtype=complex)
    if isinstance(gate, RPhi):
        return np.array([[1, 0], [0, np.exp(1j * gate.phi)]], dtype=complex)
    raise TypeError(f"unknown gate {gate!r}")


def is_unitary(m, tol: float = 1e-12) -> bool:
    m = np.asarray(m, dtype=complex)
    return m.shape == (2, 2) and np.allclose(m.conj().T @ m, np.eye(2), rtol=0, atol=tol)


def oracle_apply(m, a, b):
    """Reference product ``m @ (a, b)``; accepts scalars or equally-shaped arrays."""
    m = np.asarray(m, dtype=complex)
    if not is_unitary(m):
        raise ValueError("oracle matrix is not unitary")
    a_out = m[0, 0] * np.asarray(a) + m[0, 1] * np.asarray(b)
    b_out = m[1, 0] * np.asarray(a) + m[1, 1] * np.asarray(b)
    if np.ndim(a_out) == 0:
        return complex(a_out), complex(b_out)
    return a_out, b_out


def apply_gate(q, gate: GateOp) -> np.ndarray:
    if isinstance(gate, Hadamard):
        return hadamard_channels(q)
    if isinstance(gate, PauliX):
        return x_channels(q)
    if isinstance(gate, RPhi):
        return rphi_channels(q, gate.phi)
    raise TypeError(f"unknown gate {gate!r}")


def apply_pipeline(q, gates: Iterable[GateOp]) -> np.ndarray:
    """Apply ``gates`` left to right: the first gate listed acts first."""
    return reduce(apply_gate, gates, _quad(q))


def pipeline_matrix(gates: Iterable[GateOp]) -> np.ndarray:
    """Matrix of a left-to-right pipeline, ``G_n @ ... @ G_1``."""
    m = np.eye(2, dtype=complex)
    for gate in gates:
        m = matrix_of(gate) @ m
    return m
