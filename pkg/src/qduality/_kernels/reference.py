"""Pure-Python kernel backend: seeded streams and the inequality sweep loops.

This module is the reference semantics for the compiled backend in
``_fast.pyx``.  Both implement the identical arithmetic, operation for
operation, so a sweep yields the same doubles on either backend (same
platform, contraction disabled in the C build).  Keep the two files in
sync when touching any formula.

Stream contract (frozen; test vectors live in tests/test_kernels.py):

* ``mix64`` is the SplitMix64 finalizer.
* A stream is keyed by ``key = mix64(seed XOR mix64(stream_id XOR SALT))``;
  word ``n`` of the stream is ``mix64((key + n*GAMMA) mod 2**64)``.
* Uniforms take the top 53 bits: ``u = (word >> 11) * 2**-53``, in [0, 1).
* Gaussians come in Box-Muller pairs from two consecutive uniforms:
  ``r = sqrt(-2 ln(1 - u1))``, ``z0 = r cos(2 pi u2)``, ``z1 = r sin(2 pi u2)``.
* Child ``i`` of stream ``s`` is ``mix64((s + (i+1)*GAMMA) mod 2**64)``.
  Sweep sample ``i`` always draws from child ``i`` of the sweep's base
  stream, so partitioning a sweep across workers cannot move any sample.
"""

from __future__ import annotations

import math

BACKEND_NAME = "python"

MASK = (1 << 64) - 1
GAMMA = 0x9E3779B97F4A7C15
SALT = 0xA5A5A5A5A5A5A5A5
_MIX_MULT_1 = 0xBF58476D1CE4E5B9
_MIX_MULT_2 = 0x94D049BB133111EB

# 2**-53 and 2*pi, written out so the compiled backend uses identical bits.
U53 = 1.0 / 9007199254740992.0
TWO_PI = 6.283185307179586

# Base stream ids, one per sweep family.
STREAM_SINGLE = 1
STREAM_SATURATION = 2
STREAM_SCHROEDINGER_DIM2 = 3
STREAM_SCHROEDINGER_DIM4 = 4
STREAM_INTERSUB = 5
STREAM_PRODUCT = 6


def mix64(z: int) -> int:
    """SplitMix64 finalizer, a bijection on 64-bit words."""
    z &= MASK
    z = ((z ^ (z >> 30)) * _MIX_MULT_1) & MASK
    z = ((z ^ (z >> 27)) * _MIX_MULT_2) & MASK
    return z ^ (z >> 31)


def stream_key(seed: int, stream_id: int) -> int:
    return mix64((seed & MASK) ^ mix64((stream_id & MASK) ^ SALT))


def child_id(stream_id: int, i: int) -> int:
    """Stream id of child ``i``; distinct for distinct i under one parent."""
    return mix64((stream_id + (i + 1) * GAMMA) & MASK)


class Stream:
    """Counter-based 64-bit random stream with splittable children.

    Identical ``(seed, stream_id)`` reproduce the identical sequence of
    words, uniforms and gaussian pairs on every run.  ``child(i)`` derives
    an independent stream; children of distinct indices never collide
    under one parent (the id map is injective per parent).
    """

    __slots__ = ("seed", "stream_id", "_key", "_n")

    def __init__(self, seed: int, stream_id: int = 0):
        self.seed = seed & MASK
        self.stream_id = stream_id & MASK
        self._key = stream_key(seed, stream_id)
        self._n = 0

    def raw(self) -> int:
        word = mix64((self._key + self._n * GAMMA) & MASK)
        self._n += 1
        return word

    def u01(self) -> float:
        """Uniform double in [0, 1), 53 significant bits."""
        return (self.raw() >> 11) * U53

    def gauss_pair(self) -> tuple[float, float]:
        """Two independent standard normals (Box-Muller, no rejection)."""
        u1 = 1.0 - self.u01()
        u2 = self.u01()
        r = math.sqrt(-2.0 * math.log(u1))
        return (r * math.cos(TWO_PI * u2), r * math.sin(TWO_PI * u2))

    def cgauss(self) -> complex:
        """Standard complex gaussian: real and imaginary parts are N(0,1)."""
        re, im = self.gauss_pair()
        return complex(re, im)

    def child(self, i: int) -> "Stream":
        return Stream(self.seed, child_id(self.stream_id, i))


def sample_stream(seed: int, base_stream: int, i: int) -> Stream:
    return Stream(seed, child_id(base_stream, i))


# ---------------------------------------------------------------------------
# Canonical sample constructors.  The consumption order of stream words is
# part of the contract: the library-level samplers follow it exactly.
# ---------------------------------------------------------------------------


def ball_point(st: Stream) -> tuple[float, float, float]:
    """Uniform point in the closed unit ball, by rejection from the cube."""
    while True:
        x = 2.0 * st.u01() - 1.0
        y = 2.0 * st.u01() - 1.0
        z = 2.0 * st.u01() - 1.0
        if x * x + y * y + z * z <= 1.0:
            return (x, y, z)


def unit_vector(st: Stream, dim: int) -> list[complex]:
    """Haar-random unit vector: dim complex gaussians, then normalize."""
    comps = [st.cgauss() for _ in range(dim)]
    s = 0.0
    for z in comps:
        s += z.real * z.real + z.imag * z.imag
    norm = math.sqrt(s)
    return [complex(z.real / norm, z.imag / norm) for z in comps]


def gaussian_matrix(st: Stream, rows: int, cols: int) -> list[list[complex]]:
    """Row-major matrix of independent standard complex gaussians."""
    return [[st.cgauss() for _ in range(cols)] for _ in range(rows)]


def wishart_state(st: Stream, dim: int, rank: int) -> list[list[complex]]:
    """Trace-normalized G G^dagger for a dim x rank complex gaussian G."""
    g = gaussian_matrix(st, dim, rank)
    h = [[0j] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(a, dim):
            re = 0.0
            im = 0.0
            for k in range(rank):
                za = g[a][k]
                zb = g[b][k]
                re += za.real * zb.real + za.imag * zb.imag
                im += za.imag * zb.real - za.real * zb.imag
            h[a][b] = complex(re, im)
            if b != a:
                h[b][a] = complex(re, -im)
    tr = 0.0
    for a in range(dim):
        tr += h[a][a].real
    return [[complex(z.real / tr, z.imag / tr) for z in row] for row in h]


def hermitian_matrix(st: Stream, dim: int) -> list[list[complex]]:
    """(G + G^dagger)/2 for a dim x dim complex gaussian G."""
    g = gaussian_matrix(st, dim, dim)
    return [
        [
            complex(
                (g[a][b].real + g[b][a].real) * 0.5,
                (g[a][b].imag - g[b][a].imag) * 0.5,
            )
            for b in range(dim)
        ]
        for a in range(dim)
    ]


# ---------------------------------------------------------------------------
# Small fixed-dimension numerics shared by the sweeps.
# ---------------------------------------------------------------------------

# Column action of each Pauli: _PAULI_COL[axis][col] = (row, value), with
# axis order x, y, z.  The identity action is _IDENT_COL.
_PAULI_COL = (
    ((1, 1 + 0j), (0, 1 + 0j)),
    ((1, 1j), (0, -1j)),
    ((0, 1 + 0j), (1, -1 + 0j)),
)
_IDENT_COL = ((0, 1 + 0j), (1, 1 + 0j))


def _pair_expect(rho: list[list[complex]], tab1, tab2) -> float:
    """Re Tr(rho (P1 x P2)) for column-action tables of two 2x2 operators."""
    total = 0.0
    for r in range(4):
        m1, v1 = tab1[r >> 1]
        m2, v2 = tab2[r & 1]
        v = v1 * v2
        z = rho[r][(m1 << 1) | m2]
        total += z.real * v.real - z.imag * v.imag
    return total


def pair_moments(
    rho: list[list[complex]],
) -> tuple[list[float], list[float], list[list[float]]]:
    """Local Bloch vectors and the 3x3 correlation matrix of a 4x4 state."""
    b1 = [_pair_expect(rho, _PAULI_COL[j], _IDENT_COL) for j in range(3)]
    b2 = [_pair_expect(rho, _IDENT_COL, _PAULI_COL[k]) for k in range(3)]
    kmat = [
        [_pair_expect(rho, _PAULI_COL[j], _PAULI_COL[k]) for k in range(3)]
        for j in range(3)
    ]
    return b1, b2, kmat


def _matmul(x, y, dim):
    out = [[0j] * dim for _ in range(dim)]
    for a in range(dim):
        for b in range(dim):
            re = 0.0
            im = 0.0
            for k in range(dim):
                za = x[a][k]
                zb = y[k][b]
                re += za.real * zb.real - za.imag * zb.imag
                im += za.real * zb.imag + za.imag * zb.real
            out[a][b] = complex(re, im)
    return out


def _trace_product(rho, x, dim):
    """Tr(rho x) as a complex number."""
    re = 0.0
    im = 0.0
    for r in range(dim):
        for m in range(dim):
            za = rho[r][m]
            zb = x[m][r]
            re += za.real * zb.real - za.imag * zb.imag
            im += za.real * zb.imag + za.imag * zb.real
    return complex(re, im)


def _diag_trace(x, dim):
    re = 0.0
    im = 0.0
    for a in range(dim):
        re += x[a][a].real
        im += x[a][a].imag
    return complex(re, im)


def _single_margins(sx: float, sy: float, sz: float) -> tuple[float, float, float]:
    """Margins of the three single-qubit variance inequalities."""
    xx = sx * sx
    yy = sy * sy
    zz = sz * sz
    m_xy = (1.0 - xx) * (1.0 - yy) - zz - xx * yy
    m_yz = (1.0 - yy) * (1.0 - zz) - xx - yy * zz
    m_zx = (1.0 - zz) * (1.0 - xx) - yy - zz * xx
    return (m_xy, m_yz, m_zx)


# ---------------------------------------------------------------------------
# Per-sample evaluators.  The sweeps below are plain loops over these; the
# compiled backend inlines the identical arithmetic.
# ---------------------------------------------------------------------------


def sample_single(seed: int, i: int) -> tuple[float, float, float]:
    """Margins (xy, yz, zx) for ball-sampled mixed-qubit state i."""
    st = sample_stream(seed, STREAM_SINGLE, i)
    x, y, z = ball_point(st)
    return _single_margins(x, y, z)


def sample_saturation(seed: int, i: int) -> tuple[float, float, float]:
    """Margins (xy, yz, zx) for Haar-pure qubit state i."""
    st = sample_stream(seed, STREAM_SATURATION, i)
    c0, c1 = unit_vector(st, 2)
    t_re = c0.real * c1.real + c0.imag * c1.imag
    t_im = c0.real * c1.imag - c0.imag * c1.real
    sx = 2.0 * t_re
    sy = 2.0 * t_im
    sz = (c0.real * c0.real + c0.imag * c0.imag) - (
        c1.real * c1.real + c1.imag * c1.imag
    )
    return _single_margins(sx, sy, sz)


def sample_schroedinger(seed: int, i: int, dim: int) -> tuple[float, float, float]:
    """(margin, covariance term, |Tr commutator|) for random draw i at dim."""
    base = STREAM_SCHROEDINGER_DIM2 if dim == 2 else STREAM_SCHROEDINGER_DIM4
    st = sample_stream(seed, base, i)
    rho = wishart_state(st, dim, dim)
    a1 = hermitian_matrix(st, dim)
    a2 = hermitian_matrix(st, dim)
    p12 = _matmul(a1, a2, dim)
    p21 = _matmul(a2, a1, dim)
    s1 = _matmul(a1, a1, dim)
    s2 = _matmul(a2, a2, dim)
    e1 = _trace_product(rho, a1, dim).real
    e2 = _trace_product(rho, a2, dim).real
    v1 = _trace_product(rho, s1, dim).real - e1 * e1
    v2 = _trace_product(rho, s2, dim).real - e2 * e2
    t12 = _trace_product(rho, p12, dim)
    t21 = _trace_product(rho, p21, dim)
    b_exp = (t12.imag - t21.imag) * 0.5
    chi = (t12.real + t21.real) * 0.5 - e1 * e2
    margin = v1 * v2 - b_exp * b_exp - chi * chi
    tc = _diag_trace(p12, dim) - _diag_trace(p21, dim)
    trace_dev = math.sqrt(tc.real * tc.real + tc.imag * tc.imag)
    return (margin, chi * chi, trace_dev)


def sample_intersub(seed: int, i: int) -> tuple[list[float], float]:
    """Nine pair-relation margins and max |covariance| for mixed draw i."""
    st = sample_stream(seed, STREAM_INTERSUB, i)
    rho = wishart_state(st, 4, 4)
    b1, b2, kmat = pair_moments(rho)
    margins = []
    max_abs_m = 0.0
    for j in range(3):
        for k in range(3):
            m = kmat[j][k] - b1[j] * b2[k]
            margins.append(
                (1.0 - b1[j] * b1[j]) * (1.0 - b2[k] * b2[k]) - m * m
            )
            am = abs(m)
            if am > max_abs_m:
                max_abs_m = am
    return (margins, max_abs_m)


def sample_product(seed: int, i: int) -> list[float]:
    """Squared covariances (all nine pairs) for an uncorrelated pair draw."""
    st = sample_stream(seed, STREAM_PRODUCT, i)
    fa = wishart_state(st, 2, 2)
    fb = wishart_state(st, 2, 2)
    rho = [[0j] * 4 for _ in range(4)]
    for a in range(4):
        for b in range(4):
            za = fa[a >> 1][b >> 1]
            zb = fb[a & 1][b & 1]
            rho[a][b] = complex(
                za.real * zb.real - za.imag * zb.imag,
                za.real * zb.imag + za.imag * zb.real,
            )
    b1, b2, kmat = pair_moments(rho)
    out = []
    for j in range(3):
        for k in range(3):
            m = kmat[j][k] - b1[j] * b2[k]
            out.append(m * m)
    return out


# ---------------------------------------------------------------------------
# Sweeps.  Each returns per-row statistics tuples
# (count, min, max, sum, violations); wrapping into report rows happens in
# qduality.sweeps.
# ---------------------------------------------------------------------------


class _Stats:
    __slots__ = ("count", "min", "max", "total", "violations")

    def __init__(self):
        self.count = 0
        self.min = math.inf
        self.max = -math.inf
        self.total = 0.0
        self.violations = 0

    def add(self, margin: float, tol: float) -> None:
        self.count += 1
        if margin < self.min:
            self.min = margin
        if margin > self.max:
            self.max = margin
        self.total += margin
        if margin < -tol:
            self.violations += 1

    def tuple(self) -> tuple[int, float, float, float, int]:
        return (self.count, self.min, self.max, self.total, self.violations)


def sweep_single(seed: int, n: int, tol: float):
    """Ball-sampled single-qubit relations; rows xy, yz, zx."""
    rows = (_Stats(), _Stats(), _Stats())
    for i in range(n):
        margins = sample_single(seed, i)
        for r in range(3):
            rows[r].add(margins[r], tol)
    return tuple(row.tuple() for row in rows)


def sweep_saturation(seed: int, n: int, tol: float):
    """Haar-pure single-qubit saturation; one row over all 3n margins.

    A violation is a margin away from zero by more than tol in either
    direction (pure states must saturate).
    """
    row = _Stats()
    for i in range(n):
        for m in sample_saturation(seed, i):
            row.count += 1
            if m < row.min:
                row.min = m
            if m > row.max:
                row.max = m
            row.total += m
            if m < -tol or m > tol:
                row.violations += 1
    return (row.tuple(),)


def sweep_schroedinger(seed: int, n: int, dim: int, tol: float, trace_tol: float):
    """Random-observable variance-product relation at dim 2 or 4.

    Returns (margin row, commutator-tracelessness row, min covariance term).
    The tracelessness row uses margin = -|Tr[A1, A2]|.
    """
    margin_row = _Stats()
    trace_row = _Stats()
    min_cov = math.inf
    for i in range(n):
        margin, cov, trace_dev = sample_schroedinger(seed, i, dim)
        margin_row.add(margin, tol)
        trace_row.add(-trace_dev, trace_tol)
        if cov < min_cov:
            min_cov = cov
    return (margin_row.tuple(), trace_row.tuple(), min_cov)


def sweep_intersub(seed: int, n: int, tol: float):
    """Mixed two-qubit pair relations, all nine index pairs per draw.

    Returns (margin row over 9n margins, max |covariance| seen).
    """
    row = _Stats()
    max_abs_m = 0.0
    for i in range(n):
        margins, mam = sample_intersub(seed, i)
        for m in margins:
            row.add(m, tol)
        if mam > max_abs_m:
            max_abs_m = mam
    return (row.tuple(), max_abs_m)


def sweep_product(seed: int, n: int, tol: float):
    """Uncorrelated pair draws; margin = -(covariance^2), must be ~0."""
    row = _Stats()
    for i in range(n):
        for msq in sample_product(seed, i):
            row.add(-msq, tol)
    return (row.tuple(),)
