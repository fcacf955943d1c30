"""Unitary matrices for the eleven non-measure gates.

Multi-qubit matrices are written over the basis |q_first q_second ...> with
the FIRST listed operand as the most significant bit of the local index, so
CNOT is [[1,0,0,0],[0,1,0,0],[0,0,0,1],[0,0,1,0]] over |control,target>.
Global phases follow the fixed conventions used throughout this package,
e.g. RZ(t) = diag(e^{-it/2}, e^{+it/2}); no re-phasing is applied.
"""
from __future__ import annotations

import math

import numpy as np

from .errors import ArityError, SemanticsError
from .ir import GateKind

_INV_SQRT2 = 1.0 / math.sqrt(2.0)


def _rx(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)


def _ry(theta: float) -> np.ndarray:
    c, s = math.cos(theta / 2.0), math.sin(theta / 2.0)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _rz(theta: float) -> np.ndarray:
    return np.array(
        [[np.exp(-0.5j * theta), 0.0], [0.0, np.exp(0.5j * theta)]], dtype=complex
    )


def _cphase(theta: float) -> np.ndarray:
    return np.diag([1.0, 1.0, 1.0, np.exp(1j * theta)]).astype(complex)


def _toffoli() -> np.ndarray:
    u = np.eye(8, dtype=complex)
    u[[6, 7]] = u[[7, 6]]
    return u


_FIXED = {
    GateKind.H: lambda: np.array([[1, 1], [1, -1]], dtype=complex) * _INV_SQRT2,
    GateKind.X: lambda: np.array([[0, 1], [1, 0]], dtype=complex),
    GateKind.Y: lambda: np.array([[0, -1j], [1j, 0]], dtype=complex),
    GateKind.Z: lambda: np.array([[1, 0], [0, -1]], dtype=complex),
    GateKind.CNOT: lambda: np.array(
        [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=complex
    ),
    GateKind.SWAP: lambda: np.array(
        [[1, 0, 0, 0], [0, 0, 1, 0], [0, 1, 0, 0], [0, 0, 0, 1]], dtype=complex
    ),
    GateKind.TOFFOLI: _toffoli,
}

_PARAMETRIC = {
    GateKind.RX: _rx,
    GateKind.RY: _ry,
    GateKind.RZ: _rz,
    GateKind.CPHASE: _cphase,
}


def unitary_of(kind: GateKind, params: tuple[float, ...] = ()) -> np.ndarray:
    """Return the 2^k x 2^k unitary of a k-qubit gate as a fresh array."""
    if kind is GateKind.MEASURE:
        raise SemanticsError("measure has no unitary")
    if len(params) != kind.param_count:
        raise ArityError(
            f"{kind.value} takes {kind.param_count} parameter(s), got {len(params)}"
        )
    if kind in _PARAMETRIC:
        return _PARAMETRIC[kind](float(params[0]))
    return _FIXED[kind]()


def is_unitary(u: np.ndarray, tol: float = 1e-12) -> bool:
    """True iff max|U†U - I| <= tol entrywise."""
    u = np.asarray(u, dtype=complex)
    if u.ndim != 2 or u.shape[0] != u.shape[1]:
        return False
    dev = u.conj().T @ u - np.eye(u.shape[0])
    return bool(np.max(np.abs(dev)) <= tol)
