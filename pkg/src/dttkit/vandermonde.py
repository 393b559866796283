"""Vandermonde matrices: construction, exact inversion, solving, and a
Monte Carlo Gaussian approximation of the inverse.

The matrix for nodes (g_0, ..., g_{N-1}) has rows (1, g_i, g_i^2, ...).
Exact inversion expands the Lagrange basis polynomials, which is O(N^2)
and algebraically identical to the elementary-symmetric-function entry
formulas; the Monte Carlo route estimates the inverse from the sample
covariance of Gaussian vectors whose true covariance is G G^T.
"""

from __future__ import annotations

import time
import warnings
from dataclasses import dataclass

import numpy as np

from .errors import IllConditionedWarning, RankDeficient, SingularMatrix

# Relative singular-value cutoff for pseudo-inverses of near-singular
# sample covariance matrices.
PINV_RCOND = 1e-12

# Condition-number estimate beyond which solves warn.
COND_WARN_THRESHOLD = 1e12


def as_nodes(nodes) -> np.ndarray:
    """Coerce to a 1-D node vector (float64 when purely real)."""
    arr = np.asarray(nodes)
    if arr.ndim != 1 or arr.size == 0:
        raise ValueError("nodes must be a nonempty 1-D vector")
    if np.iscomplexobj(arr):
        arr = arr.astype(np.complex128)
        if np.all(arr.imag == 0.0):
            arr = arr.real.astype(np.float64)
    else:
        arr = arr.astype(np.float64)
    if not np.all(np.isfinite(arr)):
        raise ValueError("nodes must be finite")
    return arr


def _require_distinct(nodes: np.ndarray) -> None:
    if len(set(nodes.tolist())) != nodes.size:
        raise SingularMatrix("duplicate Vandermonde nodes")


def build(nodes, cols: int) -> np.ndarray:
    """Vandermonde matrix with entry (i, j) = nodes[i]**j, j < cols."""
    if cols < 1:
        raise ValueError("cols must be >= 1")
    return np.vander(as_nodes(nodes), cols, increasing=True)


def det(nodes) -> complex:
    """Determinant by the pairwise product formula prod_{i<j}(g_j - g_i)."""
    g = as_nodes(nodes)
    out = 1.0 + 0.0j if np.iscomplexobj(g) else 1.0
    for i in range(g.size):
        for j in range(i + 1, g.size):
            out = out * (g[j] - g[i])
    return complex(out)


def inv_exact(nodes) -> np.ndarray:
    """Exact inverse via Lagrange basis polynomials.

    Column j holds the monomial coefficients of
    l_j(x) = prod_{m != j} (x - g_m) / (g_j - g_m), so that
    (G @ inv)[i, j] = l_j(g_i) = delta_ij.
    """
    g64 = as_nodes(nodes)
    _require_distinct(g64)
    n = g64.size
    if np.iscomplexobj(g64):
        work, final = np.clongdouble, np.complex128
    else:
        work, final = np.longdouble, np.float64
    # Entries of the true inverse grow explosively with N for clustered
    # nodes; carrying the expansion in extended precision keeps the final
    # float64 entries at their entrywise rounding floor.
    g = g64.astype(work)

    # Master polynomial prod_m (x - g_m), ascending coefficients.
    master = np.array([1.0], dtype=work)
    for m in range(n):
        nxt = np.zeros(master.size + 1, dtype=work)
        nxt[1:] = master
        nxt[:-1] -= g[m] * master
        master = nxt
    out = np.empty((n, n), dtype=work)
    for j in range(n):
        # Synthetic division master / (x - g_j), then scale by the
        # denominator prod_{m != j}(g_j - g_m).
        quot = np.empty(n, dtype=work)
        carry = master[n]
        for k in range(n - 1, -1, -1):
            quot[k] = carry
            carry = master[k] + g[j] * carry
        out[:, j] = quot / np.prod(g[j] - np.delete(g, j))
    return out.astype(final)


def residual_inf(nodes, inverse: np.ndarray) -> float:
    """Max-norm residual ||G @ inverse - I||_inf of a claimed inverse."""
    g = build(nodes, inverse.shape[0])
    r = g @ inverse - np.eye(inverse.shape[0])
    return float(np.abs(r).sum(axis=1).max())


def solve(nodes, rhs) -> np.ndarray:
    """Solve G c = rhs without forming the inverse.

    Bjorck-Pereyra primal algorithm: Newton divided differences of the
    interpolation data followed by conversion to monomial coefficients.
    O(N^2), and markedly more accurate than a dense LU on these systems.
    """
    g = as_nodes(nodes)
    _require_distinct(g)
    b = np.asarray(rhs)
    if b.shape != (g.size,):
        raise ValueError("rhs length must match node count")
    dtype = np.complex128 if (np.iscomplexobj(g) or np.iscomplexobj(b)) else np.float64
    c = b.astype(dtype).copy()
    gg = g.astype(dtype)
    n = g.size
    for k in range(n - 1):
        for j in range(n - 1, k, -1):
            c[j] = (c[j] - c[j - 1]) / (gg[j] - gg[j - k - 1])
    for k in range(n - 2, -1, -1):
        for j in range(k, n - 1):
            c[j] = c[j] - gg[k] * c[j + 1]
    return c


def condition_estimate(nodes) -> float:
    """2-norm condition number of the node Vandermonde matrix."""
    return float(np.linalg.cond(build(nodes, as_nodes(nodes).size)))


def warn_if_ill_conditioned(nodes) -> float:
    cond = condition_estimate(nodes)
    if cond > COND_WARN_THRESHOLD:
        warnings.warn(
            f"Vandermonde system condition estimate {cond:.3e} exceeds "
            f"{COND_WARN_THRESHOLD:.0e}; recovered values may be inaccurate",
            IllConditionedWarning,
            stacklevel=3,
        )
    return cond


@dataclass(frozen=True)
class McConfig:
    """Monte Carlo sampling plan.

    The sample index range is split into fixed chunks; chunk c draws from
    its own counter-based stream keyed by (seed, c), so serial and
    parallel schedules produce bit-identical estimates.
    """

    samples: int
    seed: int = 0
    chunk: int = 65536
    rank_adjusted: bool = False

    def __post_init__(self):
        if self.samples < 2:
            raise ValueError("samples must be >= 2")
        if self.chunk < 1:
            raise ValueError("chunk must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must fit in 64 unsigned bits")


@dataclass(frozen=True)
class McInverse:
    """Monte Carlo inverse estimate with its diagnostics.

    d1 is the Frobenius distance between the sample covariance S and the
    sampling target G G^T; d1_transposed is the same distance measured
    against G^T G instead (both are reported because the two appear
    interchangeably in accounts of this method).  d2 is the Frobenius
    reconstruction error ||G - G Ginv G||_F of the estimated inverse.
    """

    inverse: np.ndarray
    d1: float
    d2: float
    d1_transposed: float
    seconds: float


def _chunk_normal_sums(matrix: np.ndarray, cfg: McConfig):
    """Accumulate sum(X) and sum(X^T X) for X rows = matrix @ z, z std normal.

    Ordered reduction over chunks; chunk c uses Philox key (seed, c).
    """
    dim_in = matrix.shape[1]
    sum_x = np.zeros(matrix.shape[0], dtype=matrix.dtype)
    sum_xxt = np.zeros((matrix.shape[0], matrix.shape[0]), dtype=matrix.dtype)
    done = 0
    c = 0
    while done < cfg.samples:
        m = min(cfg.chunk, cfg.samples - done)
        key = np.array([cfg.seed, c], dtype=np.uint64)
        rng = np.random.Generator(np.random.Philox(key=key))
        z = rng.standard_normal((m, dim_in))
        x = z @ matrix.T
        sum_x += x.sum(axis=0)
        sum_xxt += x.T @ x
        done += m
        c += 1
    return sum_x, sum_xxt


def _sample_cov(matrix: np.ndarray, cfg: McConfig) -> np.ndarray:
    sum_x, sum_xxt = _chunk_normal_sums(matrix, cfg)
    n = cfg.samples
    mean = sum_x / n
    return (sum_xxt - n * np.outer(mean, mean)) / (n - 1)


def _pinv(s: np.ndarray, cfg: McConfig) -> np.ndarray:
    pinv = np.linalg.pinv(s, rcond=PINV_RCOND)
    if cfg.rank_adjusted:
        p = s.shape[0]
        svals = np.linalg.svd(s, compute_uv=False)
        r = int(np.sum(svals > PINV_RCOND * svals[0]))
        if p - r - 2 > 0:
            pinv = ((p - r - 2) / p) * pinv
    return pinv


def inv_mc(nodes, cfg: McConfig) -> McInverse:
    """Monte Carlo approximation of the square Vandermonde inverse.

    Draws cfg.samples vectors G z with z standard normal, so the sample
    covariance S estimates G G^T, and G^T S^+ estimates G^{-1}.  Quality is
    reported, not asserted.
    """
    g = as_nodes(nodes)
    _require_distinct(g)
    t0 = time.perf_counter()
    gamma = build(g, g.size)
    s = _sample_cov(gamma, cfg)
    s_pinv = _pinv(s, cfg)
    inverse = gamma.T @ s_pinv
    d1 = float(np.linalg.norm(s - gamma @ gamma.T))
    d1_t = float(np.linalg.norm(s - gamma.T @ gamma))
    d2 = float(np.linalg.norm(gamma - gamma @ inverse @ gamma))
    return McInverse(inverse, d1, d2, d1_t, time.perf_counter() - t0)


def rect_inverse_mc(nodes, cols: int, side: str, cfg: McConfig) -> np.ndarray:
    """Monte Carlo left/right inverse of a rectangular n x p Vandermonde X.

    side="left" (needs full column rank, p <= n): estimates
    (X^T X)^{-1} X^T from samples with covariance X^T X, so the result
    satisfies inv @ X ~= I_p.  side="right" (full row rank, n <= p):
    estimates X^T (X X^T)^{-1}, with X @ inv ~= I_n.
    """
    g = as_nodes(nodes)
    _require_distinct(g)
    n, p = g.size, cols
    x = build(g, cols)
    if side == "left":
        if p > n:
            raise RankDeficient(f"left inverse needs cols <= rows, got {n}x{p}")
        s = _sample_cov(x.T, cfg)  # target covariance X^T X (p x p)
        return _pinv(s, cfg) @ x.T
    if side == "right":
        if n > p:
            raise RankDeficient(f"right inverse needs rows <= cols, got {n}x{p}")
        s = _sample_cov(x, cfg)  # target covariance X X^T (n x n)
        return x.T @ _pinv(s, cfg)
    raise ValueError("side must be 'left' or 'right'")


CSV_HEADER = "n,l,d1,d2,seconds"


def mc_csv_row(n: int, cfg_samples: int, result: McInverse) -> str:
    """One Table-style CSV row: n,l,d1,d2,seconds."""
    return (
        f"{n},{cfg_samples},{result.d1:.9g},{result.d2:.9g},"
        f"{result.seconds:.3f}"
    )
