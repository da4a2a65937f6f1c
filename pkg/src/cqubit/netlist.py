"""Block-level analog netlists.

Op-amp stages (adders, subtractors, followers, inverters) are ideal; the
only non-ideal element is the resistive divider, whose gain
``r2 / (r1 + r2)`` follows from its resistor values. A :class:`Netlist`
wires four input nets to four output nets through a DAG of blocks and is
validated when constructed.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from graphlib import CycleError, TopologicalSorter
from typing import Union

import numpy as np

from .gates import Hadamard, PauliX, RPhi
from .state import ChannelQuadWave

INV_SQRT2 = 1.0 / math.sqrt(2.0)
INPUT_NETS = ("in_c0re", "in_c0im", "in_c1re", "in_c1im")
OUTPUT_NETS = ("out_c0re", "out_c0im", "out_c1re", "out_c1im")

# Nearest standard parts for a 1/sqrt(2) divider: 10k / 24.14k.
STANDARD_R1 = 10e3
STANDARD_R2 = 24.14e3

# coefficients this close to 0 or +-1 are realized as a dropped branch or a wire
_SNAP = 1e-15


class NetlistError(ValueError):
    """Invalid netlist wiring (cycle, multiple drivers, undriven net)."""


@dataclass(frozen=True)
class Adder:
    a: str
    b: str
    out: str

    @property
    def inputs(self):
        return (self.a, self.b)

    def evaluate(self, a, b):
        return a + b


@dataclass(frozen=True)
class Subtractor:
    a: str
    b: str
    out: str

    @property
    def inputs(self):
        return (self.a, self.b)

    def evaluate(self, a, b):
        return a - b


@dataclass(frozen=True)
class Divider:
    """Resistive divider buffered by a follower; gain ``r2 / (r1 + r2)``."""

    inp: str
    out: str
    r1: float
    r2: float

    def __post_init__(self):
        if not (self.r1 > 0 and self.r2 > 0):
            raise ValueError(f"resistances must be positive, got r1={self.r1}, r2={self.r2}")

    @property
    def inputs(self):
        return (self.inp,)

    @property
    def gain(self) -> float:
        return divider_ratio(self.r1, self.r2)

    def evaluate(self, x):
        return self.gain * x


@dataclass(frozen=True)
class Inverter:
    inp: str
    out: str

    @property
    def inputs(self):
        return (self.inp,)

    def evaluate(self, x):
        return -x


@dataclass(frozen=True)
class Wire:
    inp: str
    out: str

    @property
    def inputs(self):
        return (self.inp,)

    def evaluate(self, x):
        return x


AnalogBlock = Union[Adder, Subtractor, Divider, Inverter, Wire]
ARITHMETIC_BLOCKS = (Adder, Subtractor, Divider, Inverter)


@dataclass(frozen=True)
class Netlist:
    blocks: tuple
    inputs: tuple = INPUT_NETS
    outputs: tuple = OUTPUT_NETS

    def __post_init__(self):
        object.__setattr__(self, "blocks", tuple(self.blocks))
        object.__setattr__(self, "inputs", tuple(self.inputs))
        object.__setattr__(self, "outputs", tuple(self.outputs))
        object.__setattr__(self, "_order", self._validate())

    def _validate(self) -> tuple:
        if len(self.inputs) != 4 or len(set(self.inputs)) != 4:
            raise NetlistError(f"need four distinct input nets, got {self.inputs}")
        if len(self.outputs) != 4:
            raise NetlistError(f"need four output nets, got {self.outputs}")

        driver = {net: None for net in self.inputs}
        for block in self.blocks:
            if block.out in driver:
                raise NetlistError(f"net {block.out!r} is driven more than once")
            driver[block.out] = block

        graph = {}
        for block in self.blocks:
            for net in block.inputs:
                if net not in driver:
                    raise NetlistError(f"net {net!r} feeding {block!r} has no driver")
            graph[block.out] = set(block.inputs)
        for net in self.outputs:
            if net not in driver:
                raise NetlistError(f"output net {net!r} has no driver")

        # every block has at least one driven input, so acyclic also means
        # every net (outputs included) is reachable from the inputs
        try:
            order = tuple(TopologicalSorter(graph).static_order())
        except CycleError as exc:
            raise NetlistError(f"netlist has a cycle through {exc.args[1]}") from None
        return tuple(driver[net] for net in order if driver[net] is not None)

    @property
    def resistors(self) -> list[float]:
        return [r for b in self.blocks if isinstance(b, Divider) for r in (b.r1, b.r2)]

    def count(self, *kinds) -> int:
        return sum(isinstance(b, kinds) for b in self.blocks)

    def evaluate(self, values: np.ndarray) -> np.ndarray:
        """Evaluate on an ``(n, 4)`` array of input channel samples."""
        values = np.asarray(values, dtype=float)
        nets = {net: values[..., i] for i, net in enumerate(self.inputs)}
        for block in self._order:
            nets[block.out] = block.evaluate(*(nets[n] for n in block.inputs))
        return np.stack([np.broadcast_to(nets[n], values.shape[:-1]) for n in self.outputs], axis=-1)


def divider_ratio(r1: float, r2: float) -> float:
    if not (r1 > 0 and r2 > 0):
        raise ValueError(f"resistances must be positive, got r1={r1}, r2={r2}")
    return r2 / (r1 + r2)


def design_divider(target: float, r1: float) -> float:
    """Shunt resistor giving gain ``target`` with series resistor ``r1``."""
    if not 0.0 < target < 1.0:
        raise ValueError(f"divider gain must lie in (0, 1), got {target}")
    if not r1 > 0:
        raise ValueError(f"r1 must be positive, got {r1}")
    return r1 * target / (1.0 - target)


def _make_divider(inp, out, target, r1, r2_inv_sqrt2):
    if r2_inv_sqrt2 is not None and abs(target - INV_SQRT2) < 1e-12:
        return Divider(inp, out, r1, r2_inv_sqrt2)
    return Divider(inp, out, r1, design_divider(target, r1))


def identity_netlist() -> Netlist:
    return Netlist([Wire(i, o) for i, o in zip(INPUT_NETS, OUTPUT_NETS)])


def build_hadamard_netlist(divider_r1: float = STANDARD_R1, divider_r2: float | None = None) -> Netlist:
    """Adders/subtractors on the channel pairs, then four 1/sqrt(2) dividers.

    ``divider_r2`` replaces the exactly designed shunt resistor, e.g.
    :data:`STANDARD_R2` for the standard-part values.
    """
    c0re, c0im, c1re, c1im = INPUT_NETS
    blocks = [
        Adder(c0re, c1re, "sum_re"),
        Adder(c0im, c1im, "sum_im"),
        Subtractor(c0re, c1re, "diff_re"),
        Subtractor(c0im, c1im, "diff_im"),
    ]
    for src, out in zip(("sum_re", "sum_im", "diff_re", "diff_im"), OUTPUT_NETS):
        blocks.append(_make_divider(src, out, INV_SQRT2, divider_r1, divider_r2))
    return Netlist(blocks)


def build_x_netlist() -> Netlist:
    """Pure rewiring: the |0> and |1> channel pairs trade places."""
    c0re, c0im, c1re, c1im = INPUT_NETS
    return Netlist([Wire(src, out) for src, out in zip((c1re, c1im, c0re, c0im), OUTPUT_NETS)])


def _scaled(src, tag, coeff, divider_r1, divider_r2, blocks):
    """Append blocks computing ``coeff * src``; return the result net or None if coeff is 0."""
    magnitude = abs(coeff)
    if magnitude <= _SNAP:
        return None
    net = src
    if magnitude < 1.0 - _SNAP:
        net = f"{tag}_div"
        blocks.append(_make_divider(src, net, magnitude, divider_r1, divider_r2))
    if coeff < 0:
        blocks.append(Inverter(net, f"{tag}_inv"))
        net = f"{tag}_inv"
    return net


def _combine(a, b, out, blocks, subtract):
    if a is not None and b is not None:
        blocks.append(Subtractor(a, b, out) if subtract else Adder(a, b, out))
    elif a is not None:
        blocks.append(Wire(a, out))
    elif subtract:
        blocks.append(Inverter(b, out))
    else:
        blocks.append(Wire(b, out))


def build_rphi_netlist(
    phi_gate: float, divider_r1: float = STANDARD_R1, divider_r2: float | None = None
) -> Netlist:
    """Phase-shift netlist: scale the |1> channels by cos/sin, then one subtractor and one adder.

    Negative coefficients get an inverter after the divider, unit
    coefficients a bare wire, and zero coefficients drop the branch. The
    |0> channels pass through wires.
    """
    c0re, c0im, c1re, c1im = INPUT_NETS
    cos_phi, sin_phi = math.cos(phi_gate), math.sin(phi_gate)
    blocks = [Wire(c0re, OUTPUT_NETS[0]), Wire(c0im, OUTPUT_NETS[1])]
    re_cos = _scaled(c1re, "re_cos", cos_phi, divider_r1, divider_r2, blocks)
    im_sin = _scaled(c1im, "im_sin", sin_phi, divider_r1, divider_r2, blocks)
    im_cos = _scaled(c1im, "im_cos", cos_phi, divider_r1, divider_r2, blocks)
    re_sin = _scaled(c1re, "re_sin", sin_phi, divider_r1, divider_r2, blocks)
    _combine(re_cos, im_sin, OUTPUT_NETS[2], blocks, subtract=True)
    _combine(im_cos, re_sin, OUTPUT_NETS[3], blocks, subtract=False)
    return Netlist(blocks)


def simulate_netlist(netlist: Netlist, wave: ChannelQuadWave) -> ChannelQuadWave:
    return wave.with_values(netlist.evaluate(wave.values))


def perturb_resistors(netlist: Netlist, tol_pct: float, seed) -> Netlist:
    """Scale every resistor by an independent uniform factor in ``1 +- tol_pct/100``.

    Resistors are drawn in block order (r1 before r2), so a given ``seed``
    always yields the same netlist.
    """
    if tol_pct < 0:
        raise ValueError(f"tolerance must be non-negative, got {tol_pct}")
    if tol_pct == 0:
        return netlist
    rng = np.random.default_rng(seed)
    tol = tol_pct / 100.0
    blocks = []
    for block in netlist.blocks:
        if isinstance(block, Divider):
            f1, f2 = rng.uniform(1.0 - tol, 1.0 + tol, size=2)
            block = replace(block, r1=block.r1 * f1, r2=block.r2 * f2)
        blocks.append(block)
    return Netlist(blocks, netlist.inputs, netlist.outputs)


def build_gate_netlist(gate, divider_r1: float = STANDARD_R1, divider_r2: float | None = None) -> Netlist:
    if isinstance(gate, Hadamard):
        return build_hadamard_netlist(divider_r1, divider_r2)
    if isinstance(gate, PauliX):
        return build_x_netlist()
    if isinstance(gate, RPhi):
        return build_rphi_netlist(gate.phi, divider_r1, divider_r2)
    raise TypeError(f"unknown gate {gate!r}")
