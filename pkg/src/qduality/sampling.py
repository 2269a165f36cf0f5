"""Deterministic seeded generation of random states and observables.

The generator is the counter-based splittable stream defined in
``_kernels.reference``; identical (seed, stream_id) reproduce identical
samples on every run.  Each sampler consumes the stream in the exact order
the sweep kernels do, so a sweep sample can be reproduced one-off with
``gen.child(i)``.
"""

from __future__ import annotations

import numpy as np

from ._kernels import reference
from .errors import DimensionError
from .linalg import SUPPORTED_DIMS
from .operators import pauli
from .states import DensityOperator

#: Counter-based splittable random stream (seed, stream_id).
SeededGenerator = reference.Stream


def haar_pure(gen: SeededGenerator, dim: int) -> np.ndarray:
    """Haar-random unit vector: independent standard complex gaussians,
    normalized.  The distribution is invariant under any fixed unitary."""
    if dim not in SUPPORTED_DIMS:
        raise DimensionError(f"dimension {dim} unsupported")
    return np.array(reference.unit_vector(gen, dim), dtype=complex)


def ginibre_mixed(
    gen: SeededGenerator, dim: int, rank: int | None = None
) -> DensityOperator:
    """Trace-normalized G G^dagger with G a dim x rank complex gaussian;
    covers all rank-limited states."""
    if dim not in SUPPORTED_DIMS:
        raise DimensionError(f"dimension {dim} unsupported")
    if rank is None:
        rank = dim
    if not 1 <= rank <= dim:
        raise ValueError(f"rank {rank} out of range [1, {dim}]")
    rows = reference.wishart_state(gen, dim, rank)
    return DensityOperator(np.array(rows, dtype=complex))


def product_state(gen: SeededGenerator) -> DensityOperator:
    """Uncorrelated two-qubit state: tensor product of two independent
    single-qubit ginibre draws."""
    a = reference.wishart_state(gen, 2, 2)
    b = reference.wishart_state(gen, 2, 2)
    return DensityOperator(np.kron(np.array(a), np.array(b)))


def bloch_ball_point(gen: SeededGenerator) -> tuple[float, float, float]:
    """Uniform point in the closed unit Bloch ball."""
    return reference.ball_point(gen)


def bloch_ball(gen: SeededGenerator) -> DensityOperator:
    """Uniformly random mixed qubit: rho = (I + r . sigma)/2 for a uniform
    ball point r."""
    rx, ry, rz = reference.ball_point(gen)
    m = (
        np.eye(2, dtype=complex)
        + rx * pauli("x")
        + ry * pauli("y")
        + rz * pauli("z")
    ) / 2.0
    return DensityOperator(m)


def random_hermitian(gen: SeededGenerator, dim: int) -> np.ndarray:
    """(G + G^dagger)/2 for a dim x dim complex gaussian G."""
    if dim not in SUPPORTED_DIMS:
        raise DimensionError(f"dimension {dim} unsupported")
    return np.array(reference.hermitian_matrix(gen, dim), dtype=complex)
