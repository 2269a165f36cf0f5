"""Named operators and states: Paulis, two-qubit correlation operators,
the marking gates, phase superpositions and the Bell pair.

Basis convention: |+z> at index 0, |-z> at index 1; two-qubit labels
|a,b> sit at index 2a+b with subsystem 1 outermost.
"""

from __future__ import annotations

import enum
import math

import numpy as np

from . import linalg


class Axis(enum.Enum):
    """Pauli axis of one subsystem; I selects the identity (no probe)."""

    I = "0"
    X = "x"
    Y = "y"
    Z = "z"


_AXIS_ALIASES = {
    "0": Axis.I,
    "i": Axis.I,
    "x": Axis.X,
    "y": Axis.Y,
    "z": Axis.Z,
}

PAULI_AXES = (Axis.X, Axis.Y, Axis.Z)


def as_axis(axis) -> Axis:
    if isinstance(axis, Axis):
        return axis
    try:
        return _AXIS_ALIASES[str(axis).lower()]
    except KeyError:
        raise ValueError(f"unknown axis {axis!r}; expected x, y, z or 0") from None


def _frozen(m: np.ndarray) -> np.ndarray:
    m.setflags(write=False)
    return m


_IDENT = _frozen(np.eye(2, dtype=complex))
_SIGMA_X = _frozen(np.array([[0, 1], [1, 0]], dtype=complex))
_SIGMA_Y = _frozen(np.array([[0, -1j], [1j, 0]], dtype=complex))
_SIGMA_Z = _frozen(np.array([[1, 0], [0, -1]], dtype=complex))

_PAULI = {Axis.I: _IDENT, Axis.X: _SIGMA_X, Axis.Y: _SIGMA_Y, Axis.Z: _SIGMA_Z}

KET_PLUS_Z = _frozen(np.array([1, 0], dtype=complex))
KET_MINUS_Z = _frozen(np.array([0, 1], dtype=complex))


def pauli(axis) -> np.ndarray:
    """The 2x2 Pauli matrix for an axis, or the identity for Axis.I."""
    return _PAULI[as_axis(axis)].copy()


def k_operator(j, k) -> np.ndarray:
    """Two-qubit product operator pauli(j) on subsystem 1, pauli(k) on 2."""
    return linalg.kron(_PAULI[as_axis(j)], _PAULI[as_axis(k)])


def third_axis(j, k) -> Axis:
    """The Pauli axis missing from a distinct non-identity pair."""
    ja, ka = as_axis(j), as_axis(k)
    if ja == Axis.I or ka == Axis.I or ja == ka:
        raise ValueError("expected two distinct non-identity axes")
    (rest,) = set(PAULI_AXES) - {ja, ka}
    return rest


def cnot() -> np.ndarray:
    """Path-marking gate: flip subsystem 2 exactly when subsystem 1 is |+z>.

    Realized as the permutation matrix of the transition table
    |+z,+z> <-> |+z,-z>, |-z,b> -> |-z,b> (all entries +1).
    """
    u = np.zeros((4, 4), dtype=complex)
    u[1, 0] = 1.0
    u[0, 1] = 1.0
    u[2, 2] = 1.0
    u[3, 3] = 1.0
    return u


def partial_marker(theta: float) -> np.ndarray:
    """Partial path marking: rotate subsystem 2 by theta about x when
    subsystem 1 is |+z>, do nothing otherwise.

    theta = 0 is the identity; theta = pi reproduces cnot() up to a global
    phase on the controlled block, so the family interpolates between no
    marking and full marking.
    """
    if not math.isfinite(theta):
        raise ValueError("theta must be finite")
    c = math.cos(theta / 2.0)
    s = math.sin(theta / 2.0)
    rot = np.array([[c, -1j * s], [-1j * s, c]], dtype=complex)
    u = np.zeros((4, 4), dtype=complex)
    u[0:2, 0:2] = rot
    u[2:4, 2:4] = np.eye(2)
    return u


def phase_state(phi: float) -> np.ndarray:
    """Equal-weight path superposition (|+z> + e^{i phi} |-z>)/sqrt(2)."""
    if not math.isfinite(phi):
        raise ValueError("phi must be finite")
    return np.array([1.0, np.exp(1j * phi)], dtype=complex) / math.sqrt(2.0)


def bell_phi_plus() -> np.ndarray:
    """The correlated pair (|+z,+z> + |-z,-z>)/sqrt(2)."""
    v = np.zeros(4, dtype=complex)
    v[0] = 1.0 / math.sqrt(2.0)
    v[3] = 1.0 / math.sqrt(2.0)
    return v


def bell_psi_plus() -> np.ndarray:
    """The anticorrelated pair (|+z,-z> + |-z,+z>)/sqrt(2)."""
    v = np.zeros(4, dtype=complex)
    v[1] = 1.0 / math.sqrt(2.0)
    v[2] = 1.0 / math.sqrt(2.0)
    return v


def x_basis_states() -> tuple[np.ndarray, np.ndarray]:
    """|+x> and |-x>, the sigma_x eigenvectors (|+z> +- |-z>)/sqrt(2)."""
    plus = np.array([1.0, 1.0], dtype=complex) / math.sqrt(2.0)
    minus = np.array([1.0, -1.0], dtype=complex) / math.sqrt(2.0)
    return plus, minus


def projector(vec) -> np.ndarray:
    """Rank-1 projector |v><v| of a unit vector."""
    v = linalg.as_vector(vec)
    return np.outer(v, v.conj())
