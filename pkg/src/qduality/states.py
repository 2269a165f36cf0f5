"""Validated density operators and every moment-level quantity: expectations,
variances, symmetrized covariance, Bloch vectors, partial trace, the pair
correlation and covariance matrices, post-selection, and the three
uncertainty-relation checkers.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import NamedTuple

import numpy as np

from . import linalg, operators
from .errors import DimensionError, ValidationError, ZeroProbabilityError
from .linalg import DEFAULT_EPS
from .operators import Axis

# Expectation values of Hermitian observables must be real to this level.
_IMAG_TOL = 1e-10


class BlochVector(NamedTuple):
    """Pauli expectations of a single qubit; norm <= 1, = 1 iff pure."""

    sx: float
    sy: float
    sz: float

    def norm(self) -> float:
        return math.sqrt(self.sx**2 + self.sy**2 + self.sz**2)


@dataclass(frozen=True)
class UncertaintyReport:
    """One uncertainty-relation instance: variance product on the left,
    squared commutator expectation plus squared covariance on the right.

    The margin is reported, never asserted, so near-violations surface as
    diagnostics instead of exceptions.
    """

    lhs: float
    commutator_term: float
    covariance_term: float
    margin: float

    @property
    def rhs(self) -> float:
        return self.commutator_term + self.covariance_term


@dataclass(frozen=True)
class MomentTable:
    """All first and second moments of a two-qubit state: local Bloch
    vectors, the 3x3 correlation matrix K and covariance matrix M."""

    bloch1: BlochVector
    bloch2: BlochVector
    K: np.ndarray
    M: np.ndarray


class DensityOperator:
    """A quantum state: Hermitian, unit-trace, positive semidefinite matrix
    of dimension 2, 4 or 8.

    Construction validates all three invariants (positivity through the
    Jacobi eigensolver); ``from_pure`` skips the spectrum check since an
    outer product of a unit vector is positive by construction.
    """

    __slots__ = ("_matrix", "_dim")

    def __init__(self, matrix, eps: float = DEFAULT_EPS):
        m = linalg.as_matrix(matrix)
        dev = float(np.max(np.abs(m - m.conj().T)))
        if dev > eps:
            raise ValidationError(
                "hermitian",
                f"state is not Hermitian (max deviation {dev:.3e} > {eps:.1e})",
            )
        t = complex(np.trace(m))
        if abs(t - 1.0) > eps:
            raise ValidationError(
                "trace", f"state has trace {t.real:.6g}{t.imag:+.1e}j, expected 1"
            )
        evals, _ = linalg.eig_hermitian(m, eps=max(eps, 1e-7))
        if evals[0] < -eps:
            raise ValidationError(
                "positive",
                f"state has negative eigenvalue {evals[0]:.3e} < -{eps:.1e}",
            )
        self._matrix = m.copy()
        self._matrix.setflags(write=False)
        self._dim = m.shape[0]

    @classmethod
    def from_pure(cls, vec, eps: float = DEFAULT_EPS) -> "DensityOperator":
        """Projector |v><v| of a unit vector."""
        v = linalg.as_vector(vec)
        norm = float(np.linalg.norm(v))
        if abs(norm - 1.0) > eps:
            raise ValidationError(
                "norm", f"state vector has norm {norm:.6g}, expected 1"
            )
        out = cls.__new__(cls)
        out._matrix = np.outer(v, v.conj())
        out._matrix.setflags(write=False)
        out._dim = v.shape[0]
        return out

    @classmethod
    def maximally_mixed(cls, dim: int) -> "DensityOperator":
        if dim not in linalg.SUPPORTED_DIMS:
            raise DimensionError(f"dimension {dim} unsupported")
        return cls(np.eye(dim, dtype=complex) / dim)

    @property
    def matrix(self) -> np.ndarray:
        return self._matrix

    @property
    def dim(self) -> int:
        return self._dim

    def purity(self) -> float:
        return float(np.trace(self._matrix @ self._matrix).real)

    def __repr__(self) -> str:
        return f"DensityOperator(dim={self._dim}, purity={self.purity():.6f})"


def density_from_pure(vec, eps: float = DEFAULT_EPS) -> DensityOperator:
    """Alias of DensityOperator.from_pure for the functional API."""
    return DensityOperator.from_pure(vec, eps=eps)


def _as_state(rho) -> DensityOperator:
    if isinstance(rho, DensityOperator):
        return rho
    return DensityOperator(rho)


def expectation(rho, obs, eps: float = DEFAULT_EPS) -> float:
    """Tr(rho obs) for a Hermitian observable; the imaginary part must
    vanish to 1e-10 and is discarded."""
    state = _as_state(rho)
    om = linalg.require_hermitian(obs, eps, "observable")
    if om.shape[0] != state.dim:
        raise DimensionError(
            f"observable dimension {om.shape[0]} != state dimension {state.dim}"
        )
    val = complex(np.trace(state.matrix @ om))
    if abs(val.imag) > _IMAG_TOL:
        raise ValidationError(
            "real-expectation",
            f"expectation has imaginary part {val.imag:.3e} beyond {_IMAG_TOL:.0e}",
        )
    return val.real


def variance(rho, obs, eps: float = DEFAULT_EPS) -> float:
    """<obs^2> - <obs>^2, clamped to 0 when roundoff puts it in (-eps, 0).

    Values below -eps signal an invalid state or observable and raise.
    """
    state = _as_state(rho)
    om = linalg.require_hermitian(obs, eps, "observable")
    if om.shape[0] != state.dim:
        raise DimensionError(
            f"observable dimension {om.shape[0]} != state dimension {state.dim}"
        )
    mean = expectation(state, om, eps)
    second = expectation(state, om @ om, eps)
    var = second - mean * mean
    if var < 0.0:
        if var < -eps:
            raise ValidationError(
                "variance", f"variance {var:.3e} below -{eps:.1e}"
            )
        var = 0.0
    return var


def covariance_sym(rho, a1, a2, eps: float = DEFAULT_EPS) -> float:
    """Symmetrized covariance: half the expectation of the anticommutator
    of the centered observables, <(A1A2 + A2A1)/2> - <A1><A2>."""
    state = _as_state(rho)
    m1 = linalg.require_hermitian(a1, eps, "first observable")
    m2 = linalg.require_hermitian(a2, eps, "second observable")
    if m1.shape != m2.shape or m1.shape[0] != state.dim:
        raise DimensionError("observables and state must share one dimension")
    sym = linalg.anticommutator(m1, m2) / 2.0
    return expectation(state, sym, eps) - expectation(state, m1, eps) * expectation(
        state, m2, eps
    )


def schroedinger_report(rho, a1, a2, eps: float = DEFAULT_EPS) -> UncertaintyReport:
    """Variance-product bound for two Hermitian observables.

    lhs = var(A1) var(A2); the bound is |<B>|^2 + chi^2 with
    B = [A1, A2]/(2i) and chi the symmetrized covariance.
    """
    state = _as_state(rho)
    m1 = linalg.require_hermitian(a1, eps, "first observable")
    m2 = linalg.require_hermitian(a2, eps, "second observable")
    if m1.shape != m2.shape or m1.shape[0] != state.dim:
        raise DimensionError("observables and state must share one dimension")
    lhs = variance(state, m1, eps) * variance(state, m2, eps)
    b = linalg.commutator(m1, m2) / 2j
    b_exp = expectation(state, b, eps)
    chi = covariance_sym(state, m1, m2, eps)
    commutator_term = b_exp * b_exp
    covariance_term = chi * chi
    return UncertaintyReport(
        lhs=lhs,
        commutator_term=commutator_term,
        covariance_term=covariance_term,
        margin=lhs - commutator_term - covariance_term,
    )


def bloch(rho, eps: float = DEFAULT_EPS) -> BlochVector:
    """Bloch vector of a single-qubit state."""
    state = _as_state(rho)
    if state.dim != 2:
        raise DimensionError(f"bloch vector needs dimension 2, got {state.dim}")
    return BlochVector(
        sx=expectation(state, operators.pauli(Axis.X), eps),
        sy=expectation(state, operators.pauli(Axis.Y), eps),
        sz=expectation(state, operators.pauli(Axis.Z), eps),
    )


def single_qubit_relation(rho, j, k, eps: float = DEFAULT_EPS) -> UncertaintyReport:
    """Variance inequality for two distinct Pauli axes of one qubit:
    (1 - s_j^2)(1 - s_k^2) >= s_l^2 + s_j^2 s_k^2 with l the third axis.

    Every pure state saturates it, and perfect knowledge of one axis
    forces complete ignorance of the other two.
    """
    ja, ka = operators.as_axis(j), operators.as_axis(k)
    if ja == ka:
        raise ValueError("axes must be distinct")
    la = operators.third_axis(ja, ka)
    state = _as_state(rho)
    if state.dim != 2:
        raise DimensionError(f"single-qubit relation needs dimension 2, got {state.dim}")
    comps = dict(zip((Axis.X, Axis.Y, Axis.Z), bloch(state, eps)))
    sj, sk, sl = comps[ja], comps[ka], comps[la]
    lhs = (1.0 - sj * sj) * (1.0 - sk * sk)
    commutator_term = sl * sl
    covariance_term = sj * sj * sk * sk
    return UncertaintyReport(
        lhs=lhs,
        commutator_term=commutator_term,
        covariance_term=covariance_term,
        margin=lhs - commutator_term - covariance_term,
    )


def partial_trace(rho, keep, eps: float = DEFAULT_EPS) -> DensityOperator:
    """Reduced state of the kept subsystems (1-based indices, order kept
    ascending)."""
    state = _as_state(rho)
    n_sub = state.dim.bit_length() - 1
    if n_sub < 2:
        raise DimensionError("partial trace needs at least two subsystems")
    if isinstance(keep, int):
        keep_t = (keep,)
    else:
        keep_t = tuple(keep)
    if not keep_t or len(set(keep_t)) != len(keep_t):
        raise ValueError(f"invalid subsystem selector {keep!r}")
    if any(s < 1 or s > n_sub for s in keep_t):
        raise ValueError(
            f"invalid subsystem selector {keep!r} for {n_sub} subsystems"
        )
    keep_sorted = sorted(keep_t)
    tensor = state.matrix.reshape((2,) * (2 * n_sub))
    row_axes = list(range(n_sub))
    col_axes = list(range(n_sub, 2 * n_sub))
    for s in range(1, n_sub + 1):
        if s not in keep_sorted:
            col_axes[s - 1] = row_axes[s - 1]
    out_axes = [row_axes[s - 1] for s in keep_sorted] + [
        n_sub + s - 1 for s in keep_sorted
    ]
    reduced = np.einsum(tensor, row_axes + col_axes, out_axes)
    d = 2 ** len(keep_sorted)
    return DensityOperator(reduced.reshape(d, d), eps=eps)


def moment_table(rho, eps: float = DEFAULT_EPS) -> MomentTable:
    """All first and second moments of a two-qubit state."""
    state = _as_state(rho)
    if state.dim != 4:
        raise DimensionError(f"moment table needs dimension 4, got {state.dim}")
    axes = operators.PAULI_AXES
    b1 = BlochVector(
        *(expectation(state, operators.k_operator(j, Axis.I), eps) for j in axes)
    )
    b2 = BlochVector(
        *(expectation(state, operators.k_operator(Axis.I, k), eps) for k in axes)
    )
    kmat = np.array(
        [
            [expectation(state, operators.k_operator(j, k), eps) for k in axes]
            for j in axes
        ]
    )
    mmat = kmat - np.outer(b1, b2)
    bound = 1.0 + eps
    if np.max(np.abs(kmat)) > bound:
        raise ValidationError("correlation-bound", "|K| entry exceeds 1 + eps")
    if np.max(np.abs(mmat)) > bound:
        raise ValidationError("covariance-bound", "|M| entry exceeds 1 + eps")
    return MomentTable(bloch1=b1, bloch2=b2, K=kmat, M=mmat)


def intersubsystem_relation(rho, j, k, eps: float = DEFAULT_EPS) -> UncertaintyReport:
    """Variance inequality for one Pauli axis on each side of a pair:
    var(sigma_j^(1)) var(sigma_k^(2)) >= M_jk^2.

    The local observables commute, so the commutator term is identically
    zero and the bound is pure covariance; it is kept in the report so all
    relation reports share one shape.
    """
    ja, ka = operators.as_axis(j), operators.as_axis(k)
    if ja == Axis.I or ka == Axis.I:
        raise ValueError("axes must be non-identity")
    state = _as_state(rho)
    if state.dim != 4:
        raise DimensionError(
            f"intersubsystem relation needs dimension 4, got {state.dim}"
        )
    obs1 = operators.k_operator(ja, Axis.I)
    obs2 = operators.k_operator(Axis.I, ka)
    lhs = variance(state, obs1, eps) * variance(state, obs2, eps)
    m = covariance_sym(state, obs1, obs2, eps)
    covariance_term = m * m
    return UncertaintyReport(
        lhs=lhs,
        commutator_term=0.0,
        covariance_term=covariance_term,
        margin=lhs - covariance_term,
    )


def post_select(
    rho, proj, eps: float = DEFAULT_EPS
) -> tuple[DensityOperator, float]:
    """Condition a state on a projective outcome.

    Returns (Pi rho Pi / p, p) with p = Tr(Pi rho); outcomes with p below
    eps raise ZeroProbabilityError since the conditional state would be
    numerically meaningless.
    """
    state = _as_state(rho)
    pm = linalg.require_hermitian(proj, eps, "projector")
    if pm.shape[0] != state.dim:
        raise DimensionError(
            f"projector dimension {pm.shape[0]} != state dimension {state.dim}"
        )
    idem = float(np.max(np.abs(pm @ pm - pm)))
    if idem > eps:
        raise ValidationError(
            "idempotent", f"projector deviates from idempotency by {idem:.3e}"
        )
    p = float(np.trace(pm @ state.matrix).real)
    if p < eps:
        raise ZeroProbabilityError(p)
    conditional = pm @ state.matrix @ pm / p
    return DensityOperator(conditional, eps=max(eps, 1e-9)), p
