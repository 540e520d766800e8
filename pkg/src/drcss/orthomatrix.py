"""Column-orthogonal root-of-unity matrices and multicarrier PAPR measurement.

A matrix is stored as a q x q integer exponent table over Z_p: entry
(i, j) encodes the complex value exp(2*pi*sqrt(-1) * e[i][j] / p).  The
default realization is the additive-character table of GF(p^n), which
degenerates to the classic DFT matrix when q is prime.

Orthogonality is checked exactly in the exponent domain: for prime p a
sum of p-th roots of unity vanishes if and only if every residue class
appears equally often, so the check is both necessary and sufficient.  A
numeric residual is reported alongside for diagnostics.
"""

from __future__ import annotations

import json
import warnings
from dataclasses import dataclass

import numpy as np

from .finite_field import FiniteField, _is_prime, abs_trace


class NonUnimodularError(ValueError):
    """PAPR input contains entries away from the unit circle."""


@dataclass(frozen=True)
class OrthoMatrix:
    """q x q matrix of p-th roots of unity, stored as an exponent table."""

    q: int
    p: int
    exponents: tuple[tuple[int, ...], ...]
    label: str = "user"

    def __post_init__(self):
        if len(self.exponents) != self.q or any(len(row) != self.q for row in self.exponents):
            raise ValueError(f"exponent table must be {self.q}x{self.q}")
        for row in self.exponents:
            for e in row:
                if not 0 <= e < self.p:
                    raise ValueError(f"exponent {e} outside [0, {self.p})")

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.asarray(self.exponents, dtype=float) / self.p)

    def column(self, j: int) -> np.ndarray:
        return self.to_complex()[:, j]

    def to_json(self) -> str:
        payload = {
            "q": self.q,
            "p": self.p,
            "label": self.label,
            "exponents": [list(row) for row in self.exponents],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "OrthoMatrix":
        data = json.loads(text)
        p = data["p"]
        rows = []
        reduced = False
        for row in data["exponents"]:
            if any(not 0 <= e < p for e in row):
                reduced = True
            rows.append(tuple(e % p for e in row))
        if reduced:
            warnings.warn("exponents outside [0, p-1] were reduced mod p", stacklevel=2)
        return cls(q=data["q"], p=p, exponents=tuple(rows), label=data.get("label", "user"))


def character_matrix(field: FiniteField) -> OrthoMatrix:
    """Additive-character table: entry (i, j) = Tr(x_i * x_j) down to F_p.

    x_k is the field element of canonical index k.  Columns are pairwise
    orthogonal for every q = p^n, and for prime q the table is exactly
    the DFT exponent matrix i*j mod p.
    """
    n, p, q = field.n, field.p, field.q
    gram = np.zeros((n, n), dtype=np.int64)
    for a in range(n):
        ea = field.from_index(p**a)
        for b in range(n):
            eb = field.from_index(p**b)
            gram[a, b] = abs_trace(ea * eb)
    digits = np.array([field.from_index(i).coeffs for i in range(q)], dtype=np.int64)
    table = (digits @ gram @ digits.T) % p
    return OrthoMatrix(q=q, p=p, exponents=tuple(tuple(int(e) for e in row) for row in table), label="character")


def dft_matrix(q: int) -> OrthoMatrix:
    """DFT exponent table i*j mod q; only valid as a p-th-root table for prime q."""
    if not _is_prime(q):
        raise ValueError(f"DFT table requires prime q, got {q}; use character_matrix instead")
    table = tuple(tuple((i * j) % q for j in range(q)) for i in range(q))
    return OrthoMatrix(q=q, p=q, exponents=table, label="dft")


_EXAMPLE_Q5_EXPONENTS = (
    (0, 0, 0, 0, 0),
    (0, 1, 2, 4, 3),
    (0, 2, 4, 3, 1),
    (0, 4, 3, 1, 2),
    (0, 3, 1, 2, 4),
)


def example_matrix_q5() -> OrthoMatrix:
    """The fixed 5 x 5 reference table used by the q = 5 worked examples."""
    return OrthoMatrix(q=5, p=5, exponents=_EXAMPLE_Q5_EXPONENTS, label="example_q5")


@dataclass(frozen=True)
class OrthogonalityReport:
    ok: bool
    exact: bool
    worst_residual: float
    failures: tuple[tuple[int, int], ...]


def validate_orthogonality(matrix: OrthoMatrix) -> OrthogonalityReport:
    """Check pairwise column orthogonality.

    Exact pass: for every column pair the multiset of exponent differences
    is uniform over Z_p.  Falls back to the numeric inner product with an
    absolute threshold of 1e-9 * q; the worst residual is always reported.
    """
    q, p = matrix.q, matrix.p
    table = np.asarray(matrix.exponents, dtype=np.int64)
    roots = np.exp(2j * np.pi * np.arange(p) / p)
    exact = True
    worst = 0.0
    failures = []
    for j1 in range(q):
        for j2 in range(j1 + 1, q):
            diffs = (table[:, j1] - table[:, j2]) % p
            counts = np.bincount(diffs, minlength=p)
            uniform = q % p == 0 and bool(np.all(counts == q // p))
            residual = float(abs(roots[diffs].sum()))
            worst = max(worst, residual)
            if not uniform:
                exact = False
                if residual > 1e-9 * q:
                    failures.append((j1, j2))
    return OrthogonalityReport(
        ok=not failures,
        exact=exact,
        worst_residual=worst,
        failures=tuple(failures),
    )


def papr(u, oversampling: int = 64) -> float:
    """Peak-to-average power ratio of a unimodular sequence.

    Parameters
    ----------
    u : array_like
        Length-M complex sequence with |u_m| = 1.
    oversampling : int
        Grid factor L; the continuous-time peak is approximated on the
        L*M uniform grid t = k / (L*M).  Monotone nondecreasing in L.

    Returns
    -------
    float
        max_k |sum_m u_m exp(2*pi*i*m*t_k)|^2 / M.
    """
    vec = np.asarray(u, dtype=complex).ravel()
    m = vec.size
    if m == 0:
        raise ValueError("empty sequence")
    if oversampling < 1:
        raise ValueError(f"oversampling must be >= 1, got {oversampling}")
    if np.max(np.abs(np.abs(vec) - 1.0)) > 1e-9:
        raise NonUnimodularError("sequence entries must have unit modulus")
    grid = oversampling * m
    signal = np.fft.ifft(vec, n=grid) * grid
    return float(np.max(np.abs(signal) ** 2) / m)


@dataclass(frozen=True)
class PaprReport:
    """Per-column PAPR of a unimodular matrix plus the column maximum."""

    per_column: tuple[float, ...]
    max_papr: float
    oversampling: int

    def to_csv(self) -> str:
        lines = ["column_index,papr"]
        lines += [f"{j},{value!r}" for j, value in enumerate(self.per_column)]
        return "\n".join(lines) + "\n"


def max_column_papr(matrix, oversampling: int = 64, snap_multiple: int | None = None) -> PaprReport:
    """PAPR of every column of an M x N unimodular matrix.

    When snap_multiple is given, the grid factor is raised to the next
    multiple of it, which places the rational-phase peaks of root-of-unity
    columns exactly on the evaluation grid.
    """
    arr = np.asarray(matrix, dtype=complex)
    if arr.ndim != 2:
        raise ValueError("expected a 2-D matrix")
    eff = oversampling
    if snap_multiple is not None and snap_multiple > 0 and eff % snap_multiple:
        eff += snap_multiple - eff % snap_multiple
    values = tuple(papr(arr[:, j], eff) for j in range(arr.shape[1]))
    return PaprReport(per_column=values, max_papr=max(values), oversampling=eff)
