"""Exact dense complex linear algebra at dimensions 2, 4 and 8.

Matrices are plain numpy complex arrays with row-major semantics; the
tensor-product convention keeps the subsystem-1 factor outermost, so the
basis label |a,b> maps to index 2a+b (with +z at 0, -z at 1).

The Hermitian eigensolver is a cyclic complex Jacobi iteration: at these
dimensions robustness matters more than asymptotics, and it keeps the
package's validity checks independent of LAPACK.
"""

from __future__ import annotations

import math

import numpy as np

from .errors import DimensionError, ValidationError

SUPPORTED_DIMS = (2, 4, 8)

#: Default tolerance for validity checks (Hermiticity, trace, positivity).
DEFAULT_EPS = 1e-9

_JACOBI_SWEEPS = 60


def as_matrix(a) -> np.ndarray:
    """Coerce to a supported square complex matrix, checking finiteness."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1]:
        raise DimensionError(f"expected a square matrix, got shape {m.shape}")
    if m.shape[0] not in SUPPORTED_DIMS:
        raise DimensionError(
            f"dimension {m.shape[0]} unsupported (expected one of {SUPPORTED_DIMS})"
        )
    if not np.all(np.isfinite(m.real)) or not np.all(np.isfinite(m.imag)):
        raise ValidationError("finite", "matrix contains non-finite entries")
    return m


def as_vector(v) -> np.ndarray:
    """Coerce to a supported complex state vector, checking finiteness."""
    w = np.asarray(v, dtype=complex)
    if w.ndim != 1 or w.shape[0] not in SUPPORTED_DIMS:
        raise DimensionError(f"expected a vector of length in {SUPPORTED_DIMS}")
    if not np.all(np.isfinite(w.real)) or not np.all(np.isfinite(w.imag)):
        raise ValidationError("finite", "vector contains non-finite entries")
    return w


def mat_mul(a, b) -> np.ndarray:
    """Matrix product; operands must share a supported dimension."""
    am, bm = as_matrix(a), as_matrix(b)
    if am.shape != bm.shape:
        raise DimensionError(f"dimension mismatch: {am.shape[0]} vs {bm.shape[0]}")
    return am @ bm


def kron(a, b) -> np.ndarray:
    """Kronecker product with the first factor outermost (block index)."""
    am = np.asarray(a, dtype=complex)
    bm = np.asarray(b, dtype=complex)
    out_dim = am.shape[0] * bm.shape[0]
    if out_dim not in SUPPORTED_DIMS:
        raise DimensionError(
            f"tensor product of dimensions {am.shape[0]} and {bm.shape[0]} "
            f"exceeds the supported sizes {SUPPORTED_DIMS}"
        )
    return np.kron(am, bm)


def adjoint(a) -> np.ndarray:
    """Conjugate transpose."""
    return as_matrix(a).conj().T.copy()


def trace(a) -> complex:
    """Sum of diagonal entries."""
    return complex(np.trace(as_matrix(a)))


def commutator(a, b) -> np.ndarray:
    """ab - ba."""
    am, bm = as_matrix(a), as_matrix(b)
    if am.shape != bm.shape:
        raise DimensionError(f"dimension mismatch: {am.shape[0]} vs {bm.shape[0]}")
    return am @ bm - bm @ am


def anticommutator(a, b) -> np.ndarray:
    """ab + ba."""
    am, bm = as_matrix(a), as_matrix(b)
    if am.shape != bm.shape:
        raise DimensionError(f"dimension mismatch: {am.shape[0]} vs {bm.shape[0]}")
    return am @ bm + bm @ am


def max_abs(a) -> float:
    """Largest entry magnitude (max norm)."""
    return float(np.max(np.abs(np.asarray(a))))


def is_hermitian(a, eps: float = DEFAULT_EPS) -> bool:
    m = np.asarray(a, dtype=complex)
    return bool(np.max(np.abs(m - m.conj().T)) <= eps)


def require_hermitian(a, eps: float = DEFAULT_EPS, what: str = "matrix") -> np.ndarray:
    m = as_matrix(a)
    dev = float(np.max(np.abs(m - m.conj().T)))
    if dev > eps:
        raise ValidationError(
            "hermitian", f"{what} is not Hermitian (max deviation {dev:.3e} > {eps:.1e})"
        )
    return m


def eig_hermitian(a, eps: float = DEFAULT_EPS) -> tuple[np.ndarray, np.ndarray]:
    """Eigendecomposition of a Hermitian matrix by cyclic Jacobi rotations.

    Parameters
    ----------
    a : array_like
        Hermitian matrix (within ``eps``) of dimension 2, 4 or 8.
    eps : float
        Hermiticity tolerance for the input check.

    Returns
    -------
    (w, v) : ndarray, ndarray
        Real eigenvalues sorted ascending and the matching orthonormal
        eigenvectors as columns, with a - v diag(w) v^dagger below 1e-10
        in max norm.
    """
    m = require_hermitian(a, eps)
    n = m.shape[0]
    # Work on the exact Hermitian part so roundoff in the input cannot leak
    # imaginary diagonals into the rotations.
    w = (m + m.conj().T) / 2.0
    v = np.eye(n, dtype=complex)
    for _ in range(_JACOBI_SWEEPS):
        off = 0.0
        for p in range(n):
            for q in range(p + 1, n):
                off += abs(w[p, q]) ** 2
        scale = float(np.max(np.abs(np.diag(w).real))) + math.sqrt(off)
        if math.sqrt(off) <= 1e-15 * max(scale, 1e-300):
            break
        for p in range(n):
            for q in range(p + 1, n):
                g = w[p, q]
                r = abs(g)
                if r == 0.0:
                    continue
                phase = g / r
                tau = (w[q, q].real - w[p, p].real) / (2.0 * r)
                t = -math.copysign(1.0, tau) / (abs(tau) + math.sqrt(1.0 + tau * tau))
                c = 1.0 / math.sqrt(1.0 + t * t)
                s = t * c
                # Unitary rotation: identity except rows/columns p, q where
                # J[p,p]=c, J[p,q]=-s*phase, J[q,p]=s*conj(phase), J[q,q]=c.
                col_p = c * w[:, p] + s * np.conj(phase) * w[:, q]
                col_q = -s * phase * w[:, p] + c * w[:, q]
                w[:, p] = col_p
                w[:, q] = col_q
                row_p = c * w[p, :] + s * phase * w[q, :]
                row_q = -s * np.conj(phase) * w[p, :] + c * w[q, :]
                w[p, :] = row_p
                w[q, :] = row_q
                w[p, q] = 0.0
                w[q, p] = 0.0
                vcol_p = c * v[:, p] + s * np.conj(phase) * v[:, q]
                vcol_q = -s * phase * v[:, p] + c * v[:, q]
                v[:, p] = vcol_p
                v[:, q] = vcol_q
    evals = np.diag(w).real.copy()
    order = np.argsort(evals, kind="stable")
    return evals[order], v[:, order]


def trace_distance(a, b, eps: float = DEFAULT_EPS) -> float:
    """Half the absolute-eigenvalue sum of a - b, for unit-trace Hermitians.

    This is the maximal statistical distinguishability of the two states;
    the result is clamped to [0, 1].
    """
    am = require_hermitian(a, eps, "first operand")
    bm = require_hermitian(b, eps, "second operand")
    if am.shape != bm.shape:
        raise DimensionError(f"dimension mismatch: {am.shape[0]} vs {bm.shape[0]}")
    for name, m in (("first", am), ("second", bm)):
        t = complex(np.trace(m))
        if abs(t - 1.0) > eps:
            raise ValidationError(
                "trace", f"{name} operand has trace {t:.6g}, expected 1"
            )
    evals, _ = eig_hermitian(am - bm, eps=max(eps, 1e-7))
    d = 0.5 * float(np.sum(np.abs(evals)))
    return min(max(d, 0.0), 1.0)
