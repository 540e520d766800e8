"""Aperiodic ambiguity-function evaluation, peak metrics, and lower bounds.

The cross ambiguity of two length-N unimodular sequences at integer delay
tau and integer Doppler bin v is

    AF(tau, v) = sum_{i=0}^{N-1-tau} a(i) * conj(b(i + tau)) * xi_N^(i*v)

for 0 <= tau <= N-1, the mirrored sum over i = -tau .. N-1 for negative
tau, and 0 for |tau| >= N.  xi_N is the principal N-th root of unity, so
the Doppler axis is periodic with period N and the full scan covers the
open square (-N, N) x (-N, N).

For a set of M x N matrices the ambiguity of a pair is the row-wise sum.
Everything is evaluated by direct brute force in double-precision complex
arithmetic; matrices enter as exact integer exponent tables so the phase
error per term is a few ulps.  The magnitude classification tolerance
used by callers is 1e-6 * M * N.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass

import numpy as np

from .constructions import ComplementaryMatrix, SequenceSet


class LengthMismatchError(ValueError):
    """Sequences of different lengths in a pairwise ambiguity evaluation."""


class ShapeMismatchError(ValueError):
    """Matrices of different shapes in a set-level ambiguity evaluation."""


class RegionOutOfRangeError(ValueError):
    """Scan region (Z_x, Z_y) outside [1, N] x [1, N]."""


class NotApplicableError(ValueError):
    """Bound is vacuous for these parameters (side condition violated)."""


class NonPositiveBoundError(ValueError):
    """Optimality factor requested against a bound <= 0."""


def cross_af(a, b, tau: int, v: int) -> complex:
    """Aperiodic cross-ambiguity of two equal-length unimodular sequences."""
    a = np.asarray(a, dtype=complex).ravel()
    b = np.asarray(b, dtype=complex).ravel()
    if a.size != b.size:
        raise LengthMismatchError(f"lengths differ: {a.size} vs {b.size}")
    n = a.size
    if abs(tau) >= n:
        return 0j
    if tau >= 0:
        idx = np.arange(0, n - tau)
    else:
        idx = np.arange(-tau, n)
    phases = np.exp(2j * np.pi * idx * v / n)
    return complex(np.sum(a[idx] * np.conj(b[idx + tau]) * phases))


def _as_rows(c) -> np.ndarray:
    if isinstance(c, ComplementaryMatrix):
        return c.to_complex()
    arr = np.asarray(c, dtype=complex)
    if arr.ndim != 2:
        raise ShapeMismatchError("expected a 2-D matrix")
    return arr


def set_af(c1, c2, tau: int, v: int) -> complex:
    """Set-level ambiguity: row-wise cross_af summed over the M rows."""
    a = _as_rows(c1)
    b = _as_rows(c2)
    if a.shape != b.shape:
        raise ShapeMismatchError(f"shapes differ: {a.shape} vs {b.shape}")
    return complex(sum(cross_af(a[m], b[m], tau, v) for m in range(a.shape[0])))


def _pair_surface(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Full (2N-1) x (2N-1) ambiguity table, indexed [tau + N-1, v + N-1].

    Row sums are folded first: P[i, j] = sum_m a[m, i] * conj(b[m, j]),
    then each delay diagonal of P is transformed over the Doppler axis.
    """
    n = a.shape[1]
    p = a.T @ b.conj()
    w = np.zeros((n, 2 * n - 1), dtype=complex)
    for d in range(-(n - 1), n):
        diag = np.diagonal(p, offset=d)
        i0 = max(0, -d)
        w[i0 : i0 + diag.size, d + n - 1] = diag
    v = np.arange(-(n - 1), n)
    e = np.exp(2j * np.pi * np.outer(v, np.arange(n)) / n)
    return (e @ w).T


@dataclass(frozen=True)
class AFSurface:
    """Dense ambiguity table for one (ordered) pair of matrices."""

    n: int
    kind: str  # "auto" | "cross"
    ids: tuple[int, int]
    values: np.ndarray  # (2N-1) x (2N-1), indexed [tau + N-1, v + N-1]

    def value(self, tau: int, v: int) -> complex:
        if abs(tau) >= self.n or abs(v) >= self.n:
            return 0j
        return complex(self.values[tau + self.n - 1, v + self.n - 1])

    def magnitudes(self) -> np.ndarray:
        return np.abs(self.values)

    def to_csv(self) -> str:
        lines = ["tau,v,re,im,mag"]
        for ti in range(2 * self.n - 1):
            for vi in range(2 * self.n - 1):
                z = self.values[ti, vi]
                lines.append(
                    f"{ti - self.n + 1},{vi - self.n + 1},{z.real!r},{z.imag!r},{abs(z)!r}"
                )
        return "\n".join(lines) + "\n"


def af_surface(c1, c2=None, ids: tuple[int, int] | None = None) -> AFSurface:
    """Compute the full ambiguity surface of a pair (auto when c2 is None)."""
    a = _as_rows(c1)
    kind = "auto"
    b = a
    if c2 is not None:
        b = _as_rows(c2)
        if a.shape != b.shape:
            raise ShapeMismatchError(f"shapes differ: {a.shape} vs {b.shape}")
        kind = "cross"
    if ids is None:
        k1 = c1.index_k if isinstance(c1, ComplementaryMatrix) else 0
        k2 = c2.index_k if isinstance(c2, ComplementaryMatrix) else k1
        ids = (k1, k2)
    return AFSurface(n=a.shape[1], kind=kind, ids=ids, values=_pair_surface(a, b))


def bound_lemma1(k: int, m: int, n: int, z_x: int, z_y: int) -> float:
    """Correlation-style lower bound on the peak ambiguity magnitude.

    (M*N / sqrt(Z_y)) * sqrt((K*Z_x*Z_y / (M*(N + Z_x - 1)) - 1) / (K*Z_x - 1)).
    Raises NotApplicableError when the radicand is negative or K*Z_x <= 1.
    """
    if not (1 <= z_x <= n and 1 <= z_y <= n):
        raise RegionOutOfRangeError(f"region ({z_x}, {z_y}) outside [1, {n}]^2")
    if k * z_x <= 1:
        raise NotApplicableError("bound undefined for K*Z_x <= 1")
    numerator = k * z_x * z_y / (m * (n + z_x - 1)) - 1.0
    if numerator < 0:
        raise NotApplicableError("negative radicand; bound vacuous for these parameters")
    return m * n / math.sqrt(z_y) * math.sqrt(numerator / (k * z_x - 1))


def bound_eq2(k: int, m: int, n: int, z_y: int) -> float:
    """Sharper lower bound sqrt(M*N*(1 - 2*sqrt(M / (3*K*Z_y)))).

    Requires K > 3*M/Z_y; the companion delay-window condition
    N*sqrt(3M/(K*Z_y)) <= Z_x <= N is reported by eq2_zx_minimum and is
    not enforced here.
    """
    if not 1 <= z_y <= n:
        raise RegionOutOfRangeError(f"Z_y = {z_y} outside [1, {n}]")
    if k * z_y <= 3 * m:
        raise NotApplicableError(f"requires K > 3M/Z_y (K = {k}, M = {m}, Z_y = {z_y})")
    return math.sqrt(m * n * (1.0 - 2.0 * math.sqrt(m / (3.0 * k * z_y))))


def eq2_zx_minimum(k: int, m: int, n: int, z_y: int) -> float:
    """Smallest delay window for which the sharper bound's side condition holds."""
    return n * math.sqrt(3.0 * m / (k * z_y))


def optimality_factor(theta_max: float, bound: float) -> float:
    """Ratio of measured peak magnitude to a lower bound; 1 means optimal."""
    if bound <= 0:
        raise NonPositiveBoundError(f"bound must be positive, got {bound}")
    return theta_max / bound


@dataclass(frozen=True)
class MetricsReport:
    """Peak ambiguity metrics of a sequence set over a delay-Doppler region."""

    construction_id: str
    set_params: tuple[int, int, int, int]  # (K, M, N, alphabet)
    region: tuple[int, int]
    theta_a: float
    theta_c: float
    theta_max: float
    bound_lemma1: float | None
    bound_eq2: float | None
    bound_eq2_zx_min: float | None
    rho: float | None
    magnitude_histogram: tuple[tuple[float, int], ...]

    def to_json(self) -> str:
        payload = {
            "construction": self.construction_id,
            "K": self.set_params[0],
            "M": self.set_params[1],
            "N": self.set_params[2],
            "alphabet": self.set_params[3],
            "region": list(self.region),
            "theta_a": self.theta_a,
            "theta_c": self.theta_c,
            "theta_max": self.theta_max,
            "bound_lemma1": self.bound_lemma1,
            "bound_eq2": self.bound_eq2,
            "bound_eq2_zx_min": self.bound_eq2_zx_min,
            "rho": self.rho,
            "magnitude_histogram": [[mag, count] for mag, count in self.magnitude_histogram],
        }
        return json.dumps(payload, indent=2, sort_keys=True)


def metrics(sset: SequenceSet, region: tuple[int, int] | None = None) -> MetricsReport:
    """Exhaustive peak scan of a sequence set.

    The auto scan covers every matrix over the region excluding (0, 0);
    the cross scan covers every ordered pair k1 != k2 including (0, 0).
    The histogram collects all scanned magnitudes rounded to 1e-6.
    """
    n = sset.N
    if region is None:
        region = (n, n)
    z_x, z_y = region
    if not (1 <= z_x <= n and 1 <= z_y <= n):
        raise RegionOutOfRangeError(f"region ({z_x}, {z_y}) outside [1, {n}]^2")

    arrays = [mat.to_complex() for mat in sset.matrices]
    center = n - 1
    tau_slice = slice(center - (z_x - 1), center + z_x)
    v_slice = slice(center - (z_y - 1), center + z_y)

    theta_a = 0.0
    theta_c = 0.0
    observed = []
    for k1, a in enumerate(arrays):
        for k2, b in enumerate(arrays):
            mags = np.abs(_pair_surface(a, b)[tau_slice, v_slice])
            if k1 == k2:
                mags[z_x - 1, z_y - 1] = np.nan  # exclude the (0, 0) auto peak
                flat = mags[~np.isnan(mags)]
                if flat.size:
                    theta_a = max(theta_a, float(flat.max()))
            else:
                flat = mags.ravel()
                theta_c = max(theta_c, float(flat.max()))
            observed.append(flat)

    values, counts = np.unique(np.round(np.concatenate(observed), 6), return_counts=True)
    histogram = tuple((float(m), int(c)) for m, c in zip(values, counts))

    k, m = sset.K, sset.M
    try:
        b1 = bound_lemma1(k, m, n, z_x, z_y)
    except (NotApplicableError, RegionOutOfRangeError):
        b1 = None
    try:
        b2 = bound_eq2(k, m, n, z_y)
        zx_min = eq2_zx_minimum(k, m, n, z_y)
    except (NotApplicableError, RegionOutOfRangeError):
        b2 = None
        zx_min = None

    theta_max = max(theta_a, theta_c)
    rho = optimality_factor(theta_max, b2) if b2 else None
    return MetricsReport(
        construction_id=sset.construction_id,
        set_params=sset.params(),
        region=(z_x, z_y),
        theta_a=theta_a,
        theta_c=theta_c,
        theta_max=theta_max,
        bound_lemma1=b1,
        bound_eq2=b2,
        bound_eq2_zx_min=zx_min,
        rho=rho,
        magnitude_histogram=histogram,
    )
