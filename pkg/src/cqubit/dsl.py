"""Parser, formatter and compiler for ``.cq`` circuit files.

Grammar (line oriented, ``#`` comments, blank lines ignored)::

    init omega=<float> varphi=<float> alpha=<float> beta=<float>
    H
    X
    RPHI <float>

``init`` must be the first statement and appear exactly once. Keywords are
case sensitive; floats are plain decimal or scientific notation. Angles
are reduced to [0, 2*pi) when parsed.
"""

from __future__ import annotations

import math
import re
from dataclasses import dataclass, field

from .gates import H, X, Hadamard, PauliX, RPhi
from .signal import OutOfDomainError
from .state import CqubitParams

_FLOAT = re.compile(r"[+-]?(?:\d+\.?\d*|\.\d+)(?:[eE][+-]?\d+)?\Z")
_INIT_KEYS = ("omega", "varphi", "alpha", "beta")


@dataclass(frozen=True)
class ParseDiagnostic:
    line: int
    column: int
    message: str
    severity: str = "error"

    def __str__(self):
        return f"{self.line}:{self.column}: {self.severity}: {self.message}"


class DSLParseError(ValueError):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        super().__init__("\n".join(str(d) for d in self.diagnostics))


@dataclass(frozen=True)
class Program:
    init: CqubitParams
    gates: tuple = ()
    # (line, column) of each gate statement; not part of program identity
    spans: tuple = field(default=(), compare=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "gates", tuple(self.gates))


def _tokens(line: str):
    """Yield ``(column, token)`` pairs, columns 1-based."""
    for match in re.finditer(r"\S+", line):
        yield match.start() + 1, match.group()


def _number(token: str):
    if _FLOAT.match(token):
        value = float(token)
        if math.isfinite(value):
            return value
    return None


def _parse_init(lineno, toks, diags):
    values = {}
    for col, tok in toks[1:]:
        key, eq, raw = tok.partition("=")
        if not eq:
            diags.append(ParseDiagnostic(lineno, col, f"expected key=value, got {tok!r}"))
        elif key not in _INIT_KEYS:
            diags.append(ParseDiagnostic(lineno, col, f"unknown init parameter {key!r}"))
        elif key in values:
            diags.append(ParseDiagnostic(lineno, col, f"duplicate init parameter {key!r}"))
        elif (value := _number(raw)) is None:
            diags.append(ParseDiagnostic(lineno, col + len(key) + 1, f"{key} is not a number: {raw!r}"))
        else:
            values[key] = value
    missing = [k for k in _INIT_KEYS if k not in values]
    if missing:
        diags.append(ParseDiagnostic(lineno, 1, f"init is missing {', '.join(missing)}"))
        return None
    try:
        return CqubitParams(**values)
    except OutOfDomainError as exc:
        diags.append(ParseDiagnostic(lineno, 1, str(exc)))
        return None


def _parse_gate(lineno, toks, diags):
    col, name = toks[0]
    args = toks[1:]
    if name in ("H", "X"):
        if args:
            diags.append(ParseDiagnostic(lineno, args[0][0], f"{name} takes no arguments"))
            return None
        return H if name == "H" else X
    if name == "RPHI":
        if not args:
            diags.append(ParseDiagnostic(lineno, col + len(name), "RPHI requires a phase argument"))
            return None
        if len(args) > 1:
            diags.append(ParseDiagnostic(lineno, args[1][0], "RPHI takes exactly one argument"))
            return None
        phase = _number(args[0][1])
        if phase is None:
            diags.append(ParseDiagnostic(lineno, args[0][0], f"RPHI phase is not a number: {args[0][1]!r}"))
            return None
        return RPhi(phase)
    diags.append(ParseDiagnostic(lineno, col, f"unknown statement {name!r}"))
    return None


def parse(text) -> Program:
    """Parse ``.cq`` source; raise :class:`DSLParseError` listing every problem found."""
    if isinstance(text, (bytes, bytearray)):
        try:
            text = bytes(text).decode("utf-8")
        except UnicodeDecodeError as exc:
            raise DSLParseError(
                [ParseDiagnostic(1, exc.start + 1, f"input is not valid UTF-8 (byte offset {exc.start})")]
            ) from None

    diags = []
    init = None
    init_seen = False
    gates, spans = [], []
    lines = text.split("\n")
    for lineno, raw in enumerate(lines, start=1):
        line = raw.removesuffix("\r").split("#", 1)[0]
        toks = list(_tokens(line))
        if not toks:
            continue
        col, head = toks[0]
        if head == "init":
            if init_seen:
                diags.append(ParseDiagnostic(lineno, col, "duplicate init statement"))
                continue
            if gates or spans:
                diags.append(ParseDiagnostic(lineno, col, "init must be the first statement"))
            init_seen = True
            init = _parse_init(lineno, toks, diags)
            continue
        if not init_seen:
            diags.append(ParseDiagnostic(lineno, col, "expected init before any gate"))
            init_seen = True
        gate = _parse_gate(lineno, toks, diags)
        spans.append((lineno, col))
        if gate is not None:
            gates.append(gate)

    if not init_seen:
        diags.append(ParseDiagnostic(max(len(lines), 1), 1, "missing init statement"))
    if diags:
        raise DSLParseError(diags)
    return Program(init, gates, tuple(spans))


def _fmt(x: float) -> str:
    s = repr(float(x))
    return s[:-2] if s.endswith(".0") else s


def format_program(p: Program) -> str:
    """Canonical ``.cq`` text for ``p``; ``parse(format_program(p)) == p``."""
    init = p.init
    lines = [
        f"init omega={_fmt(init.omega)} varphi={_fmt(init.varphi)} "
        f"alpha={_fmt(init.alpha)} beta={_fmt(init.beta)}"
    ]
    for gate in p.gates:
        if isinstance(gate, RPhi):
            lines.append(f"RPHI {_fmt(gate.phi)}")
        elif isinstance(gate, (Hadamard, PauliX)):
            lines.append(gate.name)
        else:
            raise TypeError(f"unknown gate {gate!r}")
    return "\n".join(lines) + "\n"


def compile_program(
    p: Program,
    backend: str = "ideal",
    divider_r1: float = 10e3,
    divider_r2: float | None = None,
    resistor_tol_pct: float = 0.0,
    seed: int = 0,
):
    """Build a fitted :class:`~cqubit.estimators.GatePipeline` for ``p``'s gates."""
    from .estimators import GatePipeline

    return GatePipeline(
        gates=p.gates,
        backend=backend,
        divider_r1=divider_r1,
        divider_r2=divider_r2,
        resistor_tol_pct=resistor_tol_pct,
        seed=seed,
    ).fit()

