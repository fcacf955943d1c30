"""Dense statevector simulation with mid-circuit measurement and shot sampling.

Conventions:
  * qubit 0 is the least-significant bit of the amplitude index;
  * a counts key prints clbit nc-1 leftmost and clbit 0 rightmost;
  * measuring draws one uniform u per measure instruction and collapses to
    outcome 1 iff u < p1, then renormalizes the surviving branch;
  * shot s consumes its own substream derived from (seed, s), so shots can
    execute in any batching/order with identical results.

Gates act via strided axis updates on the reshaped amplitude tensor; the
full 2^n x 2^n matrix of a gate is never materialized.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

import numpy as np

from . import gates
from .errors import BranchCapError, NoMeasurementError, SimError, ValidationError
from .ir import Circuit, GateKind, GateOp

# A selected measurement branch below this probability means the state is
# numerically corrupt; renormalizing would amplify garbage.
MIN_BRANCH_PROB = 1e-15

# exact_distribution enumerates at most 2^30 outcome paths.
MEASURE_BRANCH_CAP = 30


@dataclass
class StateVector:
    """2^n complex amplitudes of an n-qubit register."""

    n: int
    amps: np.ndarray

    @classmethod
    def zero(cls, n: int) -> "StateVector":
        """The all-|0> state."""
        amps = np.zeros(2**n, dtype=complex)
        amps[0] = 1.0
        return cls(n, amps)

    def norm_sq(self) -> float:
        return float(np.sum(np.abs(self.amps) ** 2))


@dataclass
class ClassicalRegister:
    """nc classical bits, all zero at the start of each shot."""

    bits: list[int]

    @classmethod
    def zeros(cls, nc: int) -> "ClassicalRegister":
        return cls([0] * nc)

    def key(self) -> str:
        """Bitstring with the highest-index bit leftmost."""
        return "".join(str(b) for b in reversed(self.bits))


@dataclass
class Counts:
    """Occurrences per classical-register bitstring over a shot run."""

    entries: dict[str, int]
    shots: int

    def __getitem__(self, key: str) -> int:
        return self.entries[key]

    def get(self, key: str, default: int = 0) -> int:
        return self.entries.get(key, default)

    def keys(self):
        return self.entries.keys()

    def items(self):
        return self.entries.items()


@dataclass
class ExactDistribution:
    """Exact probability of every reachable classical-register bitstring."""

    entries: dict[str, float]

    def __getitem__(self, key: str) -> float:
        return self.entries[key]

    def get(self, key: str, default: float = 0.0) -> float:
        return self.entries.get(key, default)

    def items(self):
        return self.entries.items()


# ---------------------------------------------------------------------------
# kernels over batched amplitudes (shape (batch, 2^n)), all updating in place


def _axis(n: int, q: int) -> int:
    # Batch axis is 0; qubit q sits at tensor axis 1 + (n-1-q) because the
    # amplitude index has qubit 0 as its least-significant bit.
    return 1 + (n - 1 - q)


def _sel(n: int, bits: dict[int, int]) -> tuple:
    """Index tuple picking the subspace where each given qubit has a fixed bit."""
    sel = [slice(None)] * (n + 1)
    for q, bit in bits.items():
        sel[_axis(n, q)] = bit
    return tuple(sel)


def _apply_1q(states: np.ndarray, n: int, q: int, u: np.ndarray) -> None:
    """Any 2x2 unitary as a strided update over the qubit's amplitude pairs."""
    t = states.reshape((states.shape[0],) + (2,) * n)
    s0, s1 = _sel(n, {q: 0}), _sel(n, {q: 1})
    low = t[s0].copy()
    t[s0] *= u[0, 0]
    t[s0] += u[0, 1] * t[s1]
    t[s1] *= u[1, 1]
    t[s1] += u[1, 0] * low


def _apply_perm(states: np.ndarray, n: int, sel_a: tuple, sel_b: tuple) -> None:
    """Exchange two disjoint subspaces (cnot, toffoli, swap)."""
    t = states.reshape((states.shape[0],) + (2,) * n)
    tmp = t[sel_a].copy()
    t[sel_a] = t[sel_b]
    t[sel_b] = tmp


def _apply_phase(states: np.ndarray, n: int, sel: tuple, factor: complex) -> None:
    t = states.reshape((states.shape[0],) + (2,) * n)
    t[sel] *= factor


def _measure_batch(states: np.ndarray, n: int, q: int, draws: np.ndarray) -> np.ndarray:
    """Collapse qubit q in place for every row; returns the outcome per row."""
    batch = states.shape[0]
    t = states.reshape((batch,) + (2,) * n)
    sel0, sel1 = _sel(n, {q: 0}), _sel(n, {q: 1})
    p0 = np.sum(np.abs(t[sel0].reshape(batch, -1)) ** 2, axis=1)
    p1 = np.sum(np.abs(t[sel1].reshape(batch, -1)) ** 2, axis=1)
    outcome = draws < p1
    selected = np.where(outcome, p1, p0)
    if np.any(selected < MIN_BRANCH_PROB):
        raise SimError("measurement branch probability is numerically zero")
    t[sel0][outcome] = 0.0
    t[sel1][~outcome] = 0.0
    states /= np.sqrt(selected)[:, None]
    return outcome


def _compile_op(n: int, op: GateOp) -> tuple:
    """Pre-resolve one op into a kernel step.

    Steps: ("m", qubit, clbit) for measurement;
           ("1q", qubit, 2x2 unitary) for any single-qubit gate;
           ("perm", sel_a, sel_b) for subspace exchange (cnot/toffoli/swap);
           ("phase", sel, factor) for a diagonal phase (cphase).
    """
    k, q = op.kind, op.qubits
    if k is GateKind.MEASURE:
        return ("m", q[0], op.clbit)
    if k.qubit_arity == 1:
        return ("1q", q[0], gates.unitary_of(k, op.params))
    if k is GateKind.CNOT:
        return ("perm", _sel(n, {q[0]: 1, q[1]: 0}), _sel(n, {q[0]: 1, q[1]: 1}))
    if k is GateKind.TOFFOLI:
        return (
            "perm",
            _sel(n, {q[0]: 1, q[1]: 1, q[2]: 0}),
            _sel(n, {q[0]: 1, q[1]: 1, q[2]: 1}),
        )
    if k is GateKind.SWAP:
        return ("perm", _sel(n, {q[0]: 0, q[1]: 1}), _sel(n, {q[0]: 1, q[1]: 0}))
    assert k is GateKind.CPHASE
    return ("phase", _sel(n, {q[0]: 1, q[1]: 1}), np.exp(1j * op.params[0]))


def _exec_unitary(states: np.ndarray, n: int, step: tuple) -> None:
    if step[0] == "1q":
        _apply_1q(states, n, step[1], step[2])
    elif step[0] == "perm":
        _apply_perm(states, n, step[1], step[2])
    else:
        _apply_phase(states, n, step[1], step[2])


# ---------------------------------------------------------------------------
# single-state operations


def apply_gate(state: StateVector, op: GateOp) -> StateVector:
    """Return the state transformed by one non-measure instruction."""
    if op.kind is GateKind.MEASURE:
        raise SimError("apply_gate cannot execute measure; use apply_measure")
    for q in op.qubits:
        if not 0 <= q < state.n:
            raise SimError(f"qubit {q} out of range for {state.n}-qubit state")
    amps = state.amps[None, :].astype(complex)
    _exec_unitary(amps, state.n, _compile_op(state.n, op))
    return StateVector(state.n, amps[0])


def apply_measure(
    state: StateVector,
    q: int,
    c: int,
    reg: ClassicalRegister,
    rng,
) -> tuple[StateVector, ClassicalRegister]:
    """Measure qubit q into clbit c, collapsing the state.

    `rng` is any stream with a `random()` method; one uniform is consumed.
    """
    if not 0 <= q < state.n:
        raise SimError(f"qubit {q} out of range for {state.n}-qubit state")
    if not 0 <= c < len(reg.bits):
        raise SimError(f"clbit {c} out of range for {len(reg.bits)}-bit register")
    amps = state.amps[None, :].copy()
    draw = np.array([float(rng.random())])
    outcome = _measure_batch(amps, state.n, q, draw)
    bits = list(reg.bits)
    bits[c] = int(outcome[0])
    return StateVector(state.n, amps[0]), ClassicalRegister(bits)


# ---------------------------------------------------------------------------
# shot execution


def _shot_stream(seed: int, shot: int) -> np.random.Generator:
    # Zigzag maps any int seed onto the non-negative entropy SeedSequence needs.
    entropy = 2 * seed if seed >= 0 else -2 * seed - 1
    return np.random.default_rng(np.random.SeedSequence(entropy=entropy, spawn_key=(shot,)))


def _compile_plan(circuit: Circuit) -> list[tuple]:
    return [_compile_op(circuit.num_qubits, op) for op in circuit.ops]


def run_shots(circuit: Circuit, shots: int, seed: int = 0, *, chunk_size: int = 4096) -> Counts:
    """Execute the circuit shots times and count classical-register bitstrings.

    Each shot starts from |0...0> with a zeroed register and replays the full
    instruction list.  Shots run in vectorized chunks; `chunk_size` is purely
    an execution knob and never changes the returned Counts.
    """
    if not circuit.has_measurement():
        raise NoMeasurementError("circuit has no measure instruction")
    if shots < 1:
        raise ValidationError(f"shots must be >= 1, got {shots}")
    if chunk_size < 1:
        raise ValidationError(f"chunk_size must be >= 1, got {chunk_size}")

    plan = _compile_plan(circuit)
    n, nc = circuit.num_qubits, circuit.num_clbits
    n_meas = sum(1 for step in plan if step[0] == "m")
    counter: Counter[str] = Counter()

    for start in range(0, shots, chunk_size):
        size = min(chunk_size, shots - start)
        draws = np.empty((size, n_meas))
        for i in range(size):
            draws[i] = _shot_stream(seed, start + i).random(n_meas)

        states = np.zeros((size, 2**n), dtype=complex)
        states[:, 0] = 1.0
        creg = np.zeros((size, nc), dtype=np.uint8)

        mi = 0
        for step in plan:
            if step[0] == "m":
                outcome = _measure_batch(states, n, step[1], draws[:, mi])
                creg[:, step[2]] = outcome
                mi += 1
            else:
                _exec_unitary(states, n, step)

        counter.update("".join("1" if b else "0" for b in row[::-1]) for row in creg)

    return Counts(dict(counter), shots)


def exact_distribution(circuit: Circuit) -> ExactDistribution:
    """Exact outcome probabilities by enumerating every measurement branch.

    Depth-first over both outcomes of each measure op, weighting branches by
    probability and skipping numerically-zero ones.  Independent of the
    sampling path: no random draws involved.
    """
    if not circuit.has_measurement():
        raise NoMeasurementError("circuit has no measure instruction")
    n_meas = sum(1 for op in circuit.ops if op.kind is GateKind.MEASURE)
    if n_meas > MEASURE_BRANCH_CAP:
        raise BranchCapError(f"{n_meas} measure ops exceeds the {MEASURE_BRANCH_CAP}-branch cap")

    plan = _compile_plan(circuit)
    n, nc = circuit.num_qubits, circuit.num_clbits
    probs: dict[str, float] = {}

    def walk(amps: np.ndarray, bits: list[int], idx: int, weight: float) -> None:
        for i in range(idx, len(plan)):
            step = plan[i]
            if step[0] != "m":
                _exec_unitary(amps[None, :], n, step)
                continue
            _, q, c = step
            t = amps.reshape((2,) * n)
            ax = n - 1 - q
            sel0 = [slice(None)] * n
            sel1 = [slice(None)] * n
            sel0[ax] = 0
            sel1[ax] = 1
            p0 = float(np.sum(np.abs(t[tuple(sel0)]) ** 2))
            p1 = float(np.sum(np.abs(t[tuple(sel1)]) ** 2))
            for outcome, p in ((0, p0), (1, p1)):
                if p <= MIN_BRANCH_PROB:
                    continue
                sel = [slice(None)] * n
                sel[ax] = 1 - outcome
                branch = t.copy()
                branch[tuple(sel)] = 0.0
                branch_bits = list(bits)
                branch_bits[c] = outcome
                walk(branch.reshape(-1) / np.sqrt(p), branch_bits, i + 1, weight * p)
            return
        key = "".join(str(b) for b in reversed(bits))
        probs[key] = probs.get(key, 0.0) + weight

    walk(StateVector.zero(n).amps, [0] * nc, 0, 1.0)
    return ExactDistribution(probs)
