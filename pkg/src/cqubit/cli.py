"""``cqubit`` command line: run ``.cq`` programs, built-in demos, divider design.

Exit codes: 0 success, 1 tolerance failure, 2 parse or usage error.
"""

from __future__ import annotations

import argparse
import io
import math
import sys
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .dsl import DSLParseError, Program, compile_program, parse
from .gates import H, RPhi
from .netlist import STANDARD_R1, design_divider, divider_ratio
from .state import CHANNELS, ChannelQuadWave, CqubitParams, channels_wave

DEMO_OMEGA = 2 * math.pi * 1e9
CSV_HEADER = ["t"] + [f"in_{c}" for c in CHANNELS] + [f"out_{c}" for c in CHANNELS]

EXIT_OK, EXIT_TOLERANCE, EXIT_USAGE = 0, 1, 2


@dataclass(frozen=True)
class RunConfig:
    t0: float = 0.0
    t1: float = 2e-9
    samples: int = 1000
    backend: str = "ideal"
    divider_r1: float = STANDARD_R1
    divider_r2: float | None = None
    resistor_tol_pct: float = 0.0
    seed: int = 0
    out: str | None = None

    def __post_init__(self):
        if not self.t1 > self.t0:
            raise ValueError(f"--t1 ({self.t1}) must be greater than --t0 ({self.t0})")
        if self.samples < 2:
            raise ValueError(f"--samples must be at least 2, got {self.samples}")
        if self.resistor_tol_pct < 0:
            raise ValueError(f"--resistor-tol must be non-negative, got {self.resistor_tol_pct}")
        if self.divider_r1 <= 0 or (self.divider_r2 is not None and self.divider_r2 <= 0):
            raise ValueError("divider resistances must be positive")
        if self.backend not in ("ideal", "netlist"):
            raise ValueError(f"unknown backend {self.backend!r}")

    @property
    def dt(self) -> float:
        return (self.t1 - self.t0) / (self.samples - 1)


def simulate(program: Program, config: RunConfig, backend: str | None = None):
    """Return ``(input_wave, output_wave)`` for ``program`` on the config grid."""
    wave = channels_wave(program.init, config.t0, config.dt, config.samples)
    pipeline = compile_program(
        program,
        backend=backend or config.backend,
        divider_r1=config.divider_r1,
        divider_r2=config.divider_r2,
        resistor_tol_pct=config.resistor_tol_pct,
        seed=config.seed,
    )
    return wave, pipeline(wave)


def write_csv(stream, wave_in: ChannelQuadWave, wave_out: ChannelQuadWave):
    stream.write(",".join(CSV_HEADER) + "\n")
    table = np.column_stack([wave_in.times, wave_in.values, wave_out.values])
    # adding 0.0 folds -0.0 into 0.0
    for row in (table + 0.0).tolist():
        stream.write(",".join(repr(x) for x in row) + "\n")


def csv_text(wave_in, wave_out) -> str:
    buf = io.StringIO()
    write_csv(buf, wave_in, wave_out)
    return buf.getvalue()


def max_norm_error(wave: ChannelQuadWave) -> float:
    return float(np.max(np.abs(np.sum(wave.values**2, axis=1) - 1.0)))


def _emit(config: RunConfig, wave_in, wave_out, summary_lines):
    """Write CSV to ``config.out`` (summary to stdout) or to stdout (summary to stderr)."""
    if config.out:
        with open(config.out, "w", encoding="utf-8", newline="\n") as fh:
            write_csv(fh, wave_in, wave_out)
        summary = sys.stdout
    else:
        write_csv(sys.stdout, wave_in, wave_out)
        summary = sys.stderr
    for line in summary_lines:
        print(line, file=summary)


def demo_program(name: str) -> Program:
    if name == "hadamard":
        return Program(CqubitParams(DEMO_OMEGA, 0.0, 0.0, 0.0), (H,))
    if name == "rphi":
        return Program(CqubitParams(DEMO_OMEGA, math.pi / 2, 0.0, math.pi / 2), (RPhi(math.pi / 4),))
    raise ValueError(f"unknown demo {name!r}")


def demo_expected(name: str, t, wave_in: ChannelQuadWave) -> np.ndarray:
    """Closed-form output channels of the built-in demos."""
    wt = DEMO_OMEGA * np.asarray(t)
    r = 1 / math.sqrt(2)
    zeros = np.zeros_like(wt)
    if name == "hadamard":
        return np.column_stack(
            [r * (np.cos(wt) + np.sin(wt)), zeros, r * (np.cos(wt) - np.sin(wt)), zeros]
        )
    if name == "rphi":
        s = np.sin(wt + math.pi / 2)
        return np.column_stack([wave_in.values[:, 0], wave_in.values[:, 1], -r * s, r * s])
    raise ValueError(f"unknown demo {name!r}")


def _config(args) -> RunConfig:
    return RunConfig(
        t0=args.t0,
        t1=args.t1,
        samples=args.samples,
        backend=args.backend,
        divider_r1=args.divider_r1,
        divider_r2=args.divider_r2,
        resistor_tol_pct=args.resistor_tol,
        seed=args.seed,
        out=args.out,
    )


def _load(path: str) -> Program:
    return parse(Path(path).read_bytes())


def cmd_run(args, config):
    program = _load(args.program)
    wave_in, wave_out = simulate(program, config)
    _emit(
        config,
        wave_in,
        wave_out,
        [
            f"program: {args.program} ({len(program.gates)} gates)",
            f"backend: {config.backend}",
            f"samples: {config.samples}",
            f"max |norm-1|: {max_norm_error(wave_out):.3e}",
        ],
    )
    return EXIT_OK


def cmd_demo(args, config):
    program = demo_program(args.name)
    wave_in, wave_out = simulate(program, config)
    expected = demo_expected(args.name, wave_in.times, wave_in)
    deviation = float(np.max(np.abs(wave_out.values - expected)))
    _emit(
        config,
        wave_in,
        wave_out,
        [
            f"demo: {args.name}",
            f"backend: {config.backend}",
            f"samples: {config.samples}",
            f"max |norm-1|: {max_norm_error(wave_out):.3e}",
            f"max deviation from closed form: {deviation:.3e}",
        ],
    )
    return EXIT_OK


def cmd_design_divider(args, parser):
    if not 0.0 < args.ratio < 1.0:
        parser.error(f"--ratio must lie in (0, 1), got {args.ratio}")
    if not args.r1 > 0:
        parser.error(f"--r1 must be positive, got {args.r1}")
    r2 = design_divider(args.ratio, args.r1)
    print(f"r1: {args.r1:.6g} ohm")
    print(f"r2: {r2:.6g} ohm")
    print(f"achieved ratio: {divider_ratio(args.r1, r2)!r}")
    return EXIT_OK


def backend_deviation(program: Program, config: RunConfig):
    """Per-channel ``(max, rms)`` absolute difference between the two backends."""
    _, ideal = simulate(program, config, backend="ideal")
    _, analog = simulate(program, config, backend="netlist")
    diff = np.abs(ideal.values - analog.values)
    return diff.max(axis=0), np.sqrt(np.mean(diff**2, axis=0))


def cmd_compare(args, config):
    program = _load(args.program)
    max_dev, rms_dev = backend_deviation(program, config)
    worst = float(max_dev.max())
    print(f"program: {args.program} ({len(program.gates)} gates)")
    for name, m, r in zip(CHANNELS, max_dev, rms_dev):
        print(f"{name}: max {m:.3e}  rms {r:.3e}")
    print(f"max deviation: {worst:.3e} (tol {args.tol:.3e})")
    if worst < args.tol:
        print("PASS")
        return EXIT_OK
    print("FAIL")
    return EXIT_TOLERANCE


def _grid_flags(p: argparse.ArgumentParser):
    p.add_argument("--t0", type=float, default=0.0, help="start time, s")
    p.add_argument("--t1", type=float, default=2e-9, help="end time (inclusive), s")
    p.add_argument("--samples", type=int, default=1000)
    p.add_argument("--backend", choices=("ideal", "netlist"), default="ideal")
    p.add_argument("--out", default=None, help="CSV path (default: stdout)")
    p.add_argument("--divider-r1", type=float, default=STANDARD_R1, help="series divider resistor, ohms")
    p.add_argument(
        "--divider-r2",
        type=float,
        default=None,
        help="shunt resistor for 1/sqrt(2) dividers, ohms (default: exact design)",
    )
    p.add_argument("--resistor-tol", type=float, default=0.0, help="resistor tolerance, percent")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="cqubit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("run", help="run a .cq program and write waveform CSV")
    p.add_argument("program")
    _grid_flags(p)

    p = sub.add_parser("demo", help="built-in Hadamard or phase-shift experiment")
    p.add_argument("name", choices=("hadamard", "rphi"))
    _grid_flags(p)

    p = sub.add_parser("design-divider", help="shunt resistor for a divider ratio")
    p.add_argument("--ratio", type=float, required=True)
    p.add_argument("--r1", type=float, default=STANDARD_R1)

    p = sub.add_parser("compare-backends", help="ideal vs netlist deviation report")
    p.add_argument("program")
    _grid_flags(p)
    p.add_argument("--tol", type=float, default=1e-9)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "design-divider":
        return cmd_design_divider(args, parser)
    try:
        config = _config(args)
    except ValueError as exc:
        parser.error(str(exc))
    try:
        if args.command == "run":
            return cmd_run(args, config)
        if args.command == "demo":
            return cmd_demo(args, config)
        return cmd_compare(args, config)
    except DSLParseError as exc:
        for diag in exc.diagnostics:
            print(f"{args.program}:{diag}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"cqubit: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
