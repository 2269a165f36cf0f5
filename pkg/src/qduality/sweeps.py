"""Property sweeps over seeded random ensembles, one summary row per
relation family.  The heavy loops run on the active kernel backend.

Row semantics: each family defines a per-sample margin whose check passes
iff margin >= -tolerance.  For the inequality families the margin is
lhs - rhs and the tolerance is the configurable ``tol``; the auxiliary
families use fixed tolerances matched to their floating-point budgets:

* single/saturation  - signed margin, violation when |margin| > 1e-10
  (pure states must saturate, not merely satisfy);
* traceless/dimN     - margin = -|Tr[A1, A2]|, violation beyond 1e-10;
* intersubsystem/product - margin = -(covariance^2), violation beyond 1e-18.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import _kernels

DEFAULT_SAMPLES = 100_000
DEFAULT_TOL = 1e-9

SATURATION_TOL = 1e-10
TRACELESS_TOL = 1e-10
PRODUCT_TOL = 1e-18

#: Verify-report rows in output order.
RELATIONS = (
    "single/xy",
    "single/yz",
    "single/zx",
    "single/saturation",
    "schroedinger/dim2",
    "schroedinger/dim4",
    "intersubsystem/mixed",
    "intersubsystem/product",
    "traceless/dim2",
    "traceless/dim4",
)


@dataclass(frozen=True)
class RelationSummary:
    """Margin statistics of one relation family over a sweep."""

    relation: str
    dim: int
    samples: int
    count: int
    min_margin: float
    max_margin: float
    mean_margin: float
    violations: int


def _row(relation: str, dim: int, samples: int, stats) -> RelationSummary:
    count, mn, mx, total, violations = stats
    return RelationSummary(
        relation=relation,
        dim=dim,
        samples=samples,
        count=count,
        min_margin=mn,
        max_margin=mx,
        mean_margin=total / count if count else 0.0,
        violations=violations,
    )


def small_count(samples: int) -> int:
    """Sample count for the saturation and product families (a tenth)."""
    return max(1, samples // 10)


def run_verify(
    seed: int = 42,
    samples: int = DEFAULT_SAMPLES,
    tol: float = DEFAULT_TOL,
) -> list[RelationSummary]:
    """Run every relation sweep; returns the ten rows of RELATIONS order."""
    if samples < 1:
        raise ValueError("samples must be positive")
    if tol <= 0:
        raise ValueError("tol must be positive")
    k = _kernels.active
    n_small = small_count(samples)

    single = k.sweep_single(seed, samples, tol)
    saturation = k.sweep_saturation(seed, n_small, SATURATION_TOL)
    schro2 = k.sweep_schroedinger(seed, samples, 2, tol, TRACELESS_TOL)
    schro4 = k.sweep_schroedinger(seed, samples, 4, tol, TRACELESS_TOL)
    intersub = k.sweep_intersub(seed, samples, tol)
    product = k.sweep_product(seed, n_small, PRODUCT_TOL)

    return [
        _row("single/xy", 2, samples, single[0]),
        _row("single/yz", 2, samples, single[1]),
        _row("single/zx", 2, samples, single[2]),
        _row("single/saturation", 2, n_small, saturation[0]),
        _row("schroedinger/dim2", 2, samples, schro2[0]),
        _row("schroedinger/dim4", 4, samples, schro4[0]),
        _row("intersubsystem/mixed", 4, samples, intersub[0]),
        _row("intersubsystem/product", 4, n_small, product[0]),
        _row("traceless/dim2", 2, samples, schro2[1]),
        _row("traceless/dim4", 4, samples, schro4[1]),
    ]


def min_covariance_term(seed: int, samples: int, dim: int) -> float:
    """Smallest squared-covariance term seen in a variance-product sweep;
    nonnegative by construction, exposed for the acceptance checks."""
    k = _kernels.active
    return k.sweep_schroedinger(seed, samples, dim, DEFAULT_TOL, TRACELESS_TOL)[2]


def max_covariance_coverage(seed: int, samples: int) -> float:
    """Largest |M_jk| seen in the mixed-pair sweep (sampling coverage)."""
    k = _kernels.active
    return k.sweep_intersub(seed, samples, DEFAULT_TOL)[1]
