"""Generators for the five families of complementary sequence sets.

Each family takes the trace sequence s(t) = Tr(beta^t) of an extension
tower (read cyclically with period q^2 - 1), pushes it through a
bijection phi into Z_q, and turns windows of it into unimodular matrices:

  T1: K = q+1 matrices of shape q x q,     entry = psi[m][phi(s(k(q-1)+t))]
  T2: same with t truncated to q-1 columns
  T3: K = q-1 matrices of shape q x (q+1), entry = psi[m][phi(s(k(q+1)+t))]
  T4: K = q-1 matrices of shape (q-1) x q, entry = m*phi(s(e+k(q+1)+t+1)) mod q-1
  T5: same with t truncated to q-1 columns

T1-T3 store exponents of p-th roots of unity (alphabet p from psi),
T4-T5 exponents of (q-1)-th roots (alphabet q-1).  e is the unique
trace-zero exponent in [0, q], which keeps every T4/T5 window clear of
the zero trace value.  Matrices stay exact integer exponent tables until
the ambiguity module converts them to complex values.
"""

from __future__ import annotations

import json
from dataclasses import dataclass

import numpy as np

from .finite_field import ExtensionTower, PhiMap, phi_default
from .orthomatrix import OrthoMatrix, character_matrix


class ParameterTooSmallError(ValueError):
    """The field is below the minimum size the family requires."""


class DimensionMismatchError(ValueError):
    """The supplied orthogonal matrix does not match the field size."""


@dataclass(frozen=True)
class ComplementaryMatrix:
    """One M x N unimodular matrix, stored as exponents modulo `alphabet`."""

    exponents: tuple[tuple[int, ...], ...]
    alphabet: int
    index_k: int

    def __post_init__(self):
        for row in self.exponents:
            for e in row:
                if not 0 <= e < self.alphabet:
                    raise ValueError(f"exponent {e} outside [0, {self.alphabet})")

    @property
    def rows(self) -> int:
        return len(self.exponents)

    @property
    def cols(self) -> int:
        return len(self.exponents[0])

    def to_complex(self) -> np.ndarray:
        return np.exp(2j * np.pi * np.asarray(self.exponents, dtype=float) / self.alphabet)


@dataclass(frozen=True)
class SequenceSet:
    """A family of K complementary matrices plus generation provenance."""

    construction_id: str
    q: int
    p: int
    n: int
    alphabet: int
    matrices: tuple[ComplementaryMatrix, ...]
    provenance: dict

    @property
    def K(self) -> int:
        return len(self.matrices)

    @property
    def M(self) -> int:
        return self.matrices[0].rows

    @property
    def N(self) -> int:
        return self.matrices[0].cols

    def params(self) -> tuple[int, int, int, int]:
        """(K, M, N, alphabet)."""
        return (self.K, self.M, self.N, self.alphabet)

    def to_json(self) -> str:
        payload = {
            "construction": self.construction_id,
            "q": self.q,
            "p": self.p,
            "n": self.n,
            "K": self.K,
            "M": self.M,
            "N": self.N,
            "alphabet": self.alphabet,
            "e": self.provenance.get("e"),
            "modulus": self.provenance.get("modulus"),
            "base_modulus": self.provenance.get("base_modulus"),
            "beta": self.provenance.get("beta"),
            "phi": self.provenance.get("phi"),
            "psi_label": self.provenance.get("psi_label"),
            "psi_exponents": self.provenance.get("psi_exponents"),
            "matrices": [[list(row) for row in m.exponents] for m in self.matrices],
        }
        return json.dumps(payload, indent=2, sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "SequenceSet":
        data = json.loads(text)
        alphabet = data["alphabet"]
        matrices = tuple(
            ComplementaryMatrix(
                exponents=tuple(tuple(int(e) for e in row) for row in table),
                alphabet=alphabet,
                index_k=k,
            )
            for k, table in enumerate(data["matrices"])
        )
        provenance = {
            key: data.get(key)
            for key in ("e", "modulus", "base_modulus", "beta", "phi", "psi_label", "psi_exponents")
        }
        return cls(
            construction_id=data["construction"],
            q=data["q"],
            p=data["p"],
            n=data["n"],
            alphabet=alphabet,
            matrices=matrices,
            provenance=provenance,
        )

    def to_csv(self) -> str:
        """Flat export, one row per exponent: k,m,t,exponent."""
        lines = ["k,m,t,exponent"]
        for mat in self.matrices:
            for m, row in enumerate(mat.exponents):
                for t, e in enumerate(row):
                    lines.append(f"{mat.index_k},{m},{t},{e}")
        return "\n".join(lines) + "\n"


def _phi_sequence(tower: ExtensionTower, phi: PhiMap) -> list[int]:
    """phi(s(t)) over one full period of the trace sequence."""
    return [phi(s) for s in tower.m_sequence()]


def _provenance(tower: ExtensionTower, phi: PhiMap, psi: OrthoMatrix | None, e: int | None) -> dict:
    prov = {
        "modulus": list(tower.ext.modulus),
        "base_modulus": list(tower.base.modulus),
        "beta": list(tower.beta.coeffs),
        "phi": list(phi.table),
        "psi_label": psi.label if psi is not None else None,
        "psi_exponents": None,
        "e": e,
    }
    if psi is not None and psi.label == "user":
        prov["psi_exponents"] = [list(row) for row in psi.exponents]
    return prov


def _check_tower(tower: ExtensionTower) -> None:
    if tower.r != 2:
        raise ValueError("constructions require a quadratic extension tower (r = 2)")


def _resolve_psi(tower: ExtensionTower, psi: OrthoMatrix | None) -> OrthoMatrix:
    if psi is None:
        psi = character_matrix(tower.base)
    if psi.q != tower.q:
        raise DimensionMismatchError(f"psi is {psi.q}x{psi.q} but the field has q = {tower.q}")
    return psi


def _psi_family(
    construction_id: str,
    tower: ExtensionTower,
    phi: PhiMap | None,
    psi: OrthoMatrix | None,
    k_count: int,
    n_cols: int,
    stride: int,
) -> SequenceSet:
    """Common generator for T1-T3: row m of C^k is psi row m sampled at
    column phi(s(k*stride + t))."""
    _check_tower(tower)
    q = tower.q
    phi = phi if phi is not None else phi_default(tower.base)
    psi = _resolve_psi(tower, psi)
    seq = _phi_sequence(tower, phi)
    period = q * q - 1
    matrices = []
    for k in range(k_count):
        cols = [seq[(k * stride + t) % period] for t in range(n_cols)]
        rows = tuple(tuple(psi.exponents[m][j] for j in cols) for m in range(q))
        matrices.append(ComplementaryMatrix(exponents=rows, alphabet=psi.p, index_k=k))
    return SequenceSet(
        construction_id=construction_id,
        q=q,
        p=tower.base.p,
        n=tower.base.n,
        alphabet=psi.p,
        matrices=tuple(matrices),
        provenance=_provenance(tower, phi, psi, None),
    )


def construct_t1(tower: ExtensionTower, phi: PhiMap | None = None, psi: OrthoMatrix | None = None) -> SequenceSet:
    """First family: (q+1, q, q, q) with alphabet p; requires q > 2."""
    if tower.q <= 2:
        raise ParameterTooSmallError(f"T1 requires q > 2, got q = {tower.q}")
    return _psi_family("T1", tower, phi, psi, k_count=tower.q + 1, n_cols=tower.q, stride=tower.q - 1)


def construct_t2(tower: ExtensionTower, phi: PhiMap | None = None, psi: OrthoMatrix | None = None) -> SequenceSet:
    """Second family: (q+1, q, q-1, q); equals T1 truncated to q-1 columns."""
    if tower.q <= 3:
        raise ParameterTooSmallError(f"T2 requires q > 3, got q = {tower.q}")
    return _psi_family("T2", tower, phi, psi, k_count=tower.q + 1, n_cols=tower.q - 1, stride=tower.q - 1)


def construct_t3(tower: ExtensionTower, phi: PhiMap | None = None, psi: OrthoMatrix | None = None) -> SequenceSet:
    """Third family: (q-1, q, q+1, q); windows advance by q+1."""
    if tower.q <= 3:
        raise ParameterTooSmallError(f"T3 requires q > 3, got q = {tower.q}")
    return _psi_family("T3", tower, phi, psi, k_count=tower.q - 1, n_cols=tower.q + 1, stride=tower.q + 1)


def _char_family(
    construction_id: str,
    tower: ExtensionTower,
    phi: PhiMap | None,
    n_cols: int,
) -> SequenceSet:
    """Common generator for T4-T5: entry (m, t) of C^k is
    m * phi(s(e + k(q+1) + t + 1)) mod (q - 1)."""
    _check_tower(tower)
    q = tower.q
    phi = phi if phi is not None else phi_default(tower.base)
    seq = _phi_sequence(tower, phi)
    period = q * q - 1
    alphabet = q - 1
    e = tower.find_zero_exponent()
    matrices = []
    for k in range(q - 1):
        cols = [seq[(e + k * (q + 1) + t + 1) % period] for t in range(n_cols)]
        rows = tuple(tuple((m * j) % alphabet for j in cols) for m in range(q - 1))
        matrices.append(ComplementaryMatrix(exponents=rows, alphabet=alphabet, index_k=k))
    return SequenceSet(
        construction_id=construction_id,
        q=q,
        p=tower.base.p,
        n=tower.base.n,
        alphabet=alphabet,
        matrices=tuple(matrices),
        provenance=_provenance(tower, phi, None, e),
    )


def construct_t4(tower: ExtensionTower, phi: PhiMap | None = None) -> SequenceSet:
    """Fourth family: (q-1, q-1, q, q-1) with alphabet q-1; requires q > 3."""
    if tower.q <= 3:
        raise ParameterTooSmallError(f"T4 requires q > 3, got q = {tower.q}")
    return _char_family("T4", tower, phi, n_cols=tower.q)


def construct_t5(tower: ExtensionTower, phi: PhiMap | None = None) -> SequenceSet:
    """Fifth family: (q-1, q-1, q-1, q-1); equals T4 truncated to q-1 columns."""
    if tower.q <= 4:
        raise ParameterTooSmallError(f"T5 requires q > 4, got q = {tower.q}")
    return _char_family("T5", tower, phi, n_cols=tower.q - 1)


CONSTRUCTORS = {
    "T1": construct_t1,
    "T2": construct_t2,
    "T3": construct_t3,
    "T4": construct_t4,
    "T5": construct_t5,
}

# Matrix families T4/T5 take no orthogonal matrix input.
PSI_FAMILIES = ("T1", "T2", "T3")


def construct(construction_id: str, tower: ExtensionTower, phi: PhiMap | None = None,
              psi: OrthoMatrix | None = None) -> SequenceSet:
    """Dispatch by family id T1..T5."""
    if construction_id not in CONSTRUCTORS:
        raise ValueError(f"unknown construction {construction_id!r}")
    if construction_id in PSI_FAMILIES:
        return CONSTRUCTORS[construction_id](tower, phi, psi)
    return CONSTRUCTORS[construction_id](tower, phi)
