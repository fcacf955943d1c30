"""Plain-text circuit files (".qc"): parser and canonical serializer.

Line-oriented grammar, one instruction per line::

    qubits 2              # required header, first
    clbits 2              # required header, second
    h 0                   # gate: name [ "(" angle ")" ] q0 [q1 [q2]]
    cphase(pi/2) 0 1      # angle: decimal or pi, -pi, pi/2, pi/4, pi/8,
                          #        pi/16, -pi/2, -pi/4 (radians)
    measure 0 -> 0        # measure: qubit -> clbit

"#" starts a comment; blank lines are ignored; gate names are matched
case-insensitively with the usual aliases (cx, ccnot, cp).  Input accepts
"\\n" or "\\r\\n"; serialize() always writes canonical form: lowercase names,
single spaces, decimal angles (shortest round-trip), "\\n" endings.
"""
from __future__ import annotations

import math
import re

from .errors import GatekitError, ParseError
from .ir import Circuit, GateKind, resolve_gate_name

PI_TOKENS = {
    "pi": math.pi,
    "-pi": -math.pi,
    "pi/2": math.pi / 2,
    "pi/4": math.pi / 4,
    "pi/8": math.pi / 8,
    "pi/16": math.pi / 16,
    "-pi/2": -math.pi / 2,
    "-pi/4": -math.pi / 4,
}

_GATE_RE = re.compile(r"^(?P<name>[A-Za-z]+)\s*(?:\(\s*(?P<angle>[^()]*?)\s*\))?(?P<rest>.*)$")
_MEASURE_RE = re.compile(r"^(?P<name>[A-Za-z]+)\s+(?P<q>\S+)\s*->\s*(?P<c>\S+)$")


def _parse_int(token: str, lineno: int, what: str) -> int:
    try:
        return int(token, 10)
    except ValueError:
        raise ParseError(lineno, f"expected integer {what}, got {token!r}") from None


def _parse_angle(token: str, lineno: int) -> float:
    if token in PI_TOKENS:
        return PI_TOKENS[token]
    try:
        value = float(token)
    except ValueError:
        raise ParseError(lineno, f"malformed angle {token!r}") from None
    if not math.isfinite(value):
        raise ParseError(lineno, f"angle {token!r} is not finite")
    return value


def parse(text: str) -> Circuit:
    """Parse a circuit document; errors carry the 1-based offending line."""
    lines = text.splitlines()
    header: list[tuple[int, str]] = []
    body: list[tuple[int, str]] = []
    for lineno, raw in enumerate(lines, start=1):
        stripped = raw.split("#", 1)[0].strip()
        if not stripped:
            continue
        (header if len(header) < 2 else body).append((lineno, stripped))

    if not header:
        raise ParseError(len(lines) + 1, "missing 'qubits <int>' header")
    nq = _parse_header(header[0], "qubits")
    if len(header) < 2:
        raise ParseError(header[0][0] + 1, "missing 'clbits <int>' header")
    nc = _parse_header(header[1], "clbits")

    try:
        Circuit(nq, 0)
    except GatekitError as exc:
        raise ParseError(header[0][0], str(exc)) from exc
    try:
        circuit = Circuit(nq, nc)
    except GatekitError as exc:
        raise ParseError(header[1][0], str(exc)) from exc

    for lineno, line in body:
        _parse_instruction(circuit, line, lineno)
    return circuit


def _parse_header(entry: tuple[int, str], keyword: str) -> int:
    lineno, line = entry
    tokens = line.split()
    if len(tokens) != 2 or tokens[0].lower() != keyword:
        raise ParseError(lineno, f"expected '{keyword} <int>' header, got {line!r}")
    return _parse_int(tokens[1], lineno, f"after '{keyword}'")


def _parse_instruction(circuit: Circuit, line: str, lineno: int) -> None:
    match = _GATE_RE.match(line)
    if not match:
        raise ParseError(lineno, f"cannot parse instruction {line!r}")
    name = match.group("name")
    try:
        kind = resolve_gate_name(name)
    except GatekitError as exc:
        raise ParseError(lineno, str(exc)) from exc

    if kind is GateKind.MEASURE:
        m = _MEASURE_RE.match(line)
        if not m:
            raise ParseError(lineno, f"expected 'measure <qubit> -> <clbit>', got {line!r}")
        q = _parse_int(m.group("q"), lineno, "qubit index")
        c = _parse_int(m.group("c"), lineno, "clbit index")
        operands = [q, c]
        params = []
    else:
        angle_token = match.group("angle")
        params = [] if angle_token is None else [_parse_angle(angle_token, lineno)]
        rest = match.group("rest").split()
        operands = [_parse_int(tok, lineno, "operand") for tok in rest]

    try:
        circuit.add_gate(name, operands, params)
    except GatekitError as exc:
        raise ParseError(lineno, str(exc)) from exc


def serialize(circuit: Circuit) -> str:
    """Canonical document: re-parsing it reproduces the circuit exactly."""
    lines = [f"qubits {circuit.num_qubits}", f"clbits {circuit.num_clbits}"]
    for op in circuit.ops:
        if op.kind is GateKind.MEASURE:
            lines.append(f"measure {op.qubits[0]} -> {op.clbit}")
        elif op.params:
            operands = " ".join(str(q) for q in op.qubits)
            lines.append(f"{op.kind.value}({repr(op.params[0])}) {operands}")
        else:
            operands = " ".join(str(q) for q in op.qubits)
            lines.append(f"{op.kind.value} {operands}")
    return "\n".join(lines) + "\n"
