"""Exact arithmetic for small finite fields GF(p^n).

Everything here is plain integer arithmetic modulo p; no floating point.
Elements are stored in the polynomial basis as coefficient tuples
(c_0, ..., c_{n-1}), ascending degree, and the canonical index of an
element is the base-p digit value sum(c_i * p^i).  That index gives a
stable total order on the field, which the rest of the toolkit relies on
(default bijection to Z_q, matrix row/column indexing, deterministic
primitive-element selection).

The sizes involved are tiny (q <= 49 for single fields, q^2 <= 2500 for
extension towers), so all searches are exhaustive and all inverses go
through exponentiation.
"""

from __future__ import annotations

import csv
import itertools
from functools import cached_property
from typing import Iterator, Sequence


class NonPrimeError(ValueError):
    """The requested characteristic is not a prime number."""


class ReduciblePolynomialError(ValueError):
    """The supplied modulus polynomial is not irreducible over F_p."""


class FieldMismatchError(ValueError):
    """Binary operation on elements of two different fields."""


class NotInSubfieldError(ArithmeticError):
    """A value expected to lie in the base field does not (internal failure)."""


class ZeroNotFoundError(ArithmeticError):
    """No zero of the trace sequence in the expected index range (internal failure)."""


class NotABijectionError(ValueError):
    """A user-supplied index mapping is not a permutation of 0..q-1."""


def _is_prime(m: int) -> bool:
    if m < 2:
        return False
    if m % 2 == 0:
        return m == 2
    d = 3
    while d * d <= m:
        if m % d == 0:
            return False
        d += 2
    return True


def _prime_factors(m: int) -> list[int]:
    """Distinct prime factors of m, by trial division."""
    factors = []
    d = 2
    while d * d <= m:
        if m % d == 0:
            factors.append(d)
            while m % d == 0:
                m //= d
        d += 1
    if m > 1:
        factors.append(m)
    return factors


def _poly_trim(coeffs: list[int]) -> list[int]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return coeffs


def _poly_mod(coeffs: list[int], modulus: Sequence[int], p: int) -> list[int]:
    """Remainder of coeffs (ascending degree) modulo a monic modulus, over Z_p."""
    rem = [c % p for c in coeffs]
    deg_m = len(modulus) - 1
    while len(_poly_trim(rem)) > deg_m:
        lead = rem[-1]
        shift = len(rem) - 1 - deg_m
        for i, m in enumerate(modulus):
            rem[shift + i] = (rem[shift + i] - lead * m) % p
        rem = _poly_trim(rem)
    return rem


def _poly_divides(divisor: Sequence[int], poly: Sequence[int], p: int) -> bool:
    return len(_poly_trim(_poly_mod(list(poly), divisor, p))) == 0


def _is_irreducible(poly: Sequence[int], p: int) -> bool:
    """Exhaustive check: no monic factor of degree 1..deg/2 divides poly."""
    deg = len(poly) - 1
    if deg < 1:
        return False
    for d in range(1, deg // 2 + 1):
        for lower in itertools.product(range(p), repeat=d):
            divisor = list(lower) + [1]
            if _poly_divides(divisor, poly, p):
                return False
    return True


def _smallest_irreducible(p: int, n: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible of degree n over F_p.

    Candidates are ordered by their low-degree coefficient tuple
    (c_0, c_1, ..., c_{n-1}), constant coefficient most significant.
    """
    for lower in itertools.product(range(p), repeat=n):
        candidate = tuple(lower) + (1,)
        if _is_irreducible(candidate, p):
            return candidate
    raise AssertionError(f"no irreducible of degree {n} over F_{p}")


class FiniteField:
    """The field GF(p^n), with a verified-irreducible monic modulus.

    When no modulus is supplied the lexicographically smallest monic
    irreducible of degree n is selected, so identical (p, n) inputs always
    build identical fields.
    """

    def __init__(self, p: int, n: int = 1, modulus_poly: Sequence[int] | None = None):
        if not _is_prime(p):
            raise NonPrimeError(f"p = {p} is not prime")
        if n < 1:
            raise ValueError(f"extension degree must be >= 1, got {n}")
        self.p = p
        self.n = n
        self.q = p**n
        if modulus_poly is None:
            self.modulus = _smallest_irreducible(p, n)
        else:
            mod = tuple(c % p for c in modulus_poly)
            if len(mod) != n + 1 or mod[-1] != 1:
                raise ValueError(f"modulus must be monic of degree {n}, got {list(modulus_poly)}")
            if not _is_irreducible(mod, p):
                raise ReduciblePolynomialError(f"{list(modulus_poly)} is reducible over F_{p}")
            self.modulus = mod

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FiniteField)
            and (self.p, self.n, self.modulus) == (other.p, other.n, other.modulus)
        )

    def __hash__(self) -> int:
        return hash((self.p, self.n, self.modulus))

    def __repr__(self) -> str:
        return f"FiniteField(p={self.p}, n={self.n}, modulus={list(self.modulus)})"

    def element(self, value: int | Sequence[int]) -> "FieldElement":
        """Element from a canonical index or a coefficient sequence."""
        if isinstance(value, int):
            return self.from_index(value)
        coeffs = [c % self.p for c in value]
        if len(coeffs) > self.n:
            coeffs = _poly_mod(coeffs, self.modulus, self.p)
        coeffs += [0] * (self.n - len(coeffs))
        return FieldElement(self, tuple(coeffs))

    def from_index(self, index: int) -> "FieldElement":
        if not 0 <= index < self.q:
            raise ValueError(f"index {index} outside [0, {self.q})")
        digits = []
        for _ in range(self.n):
            digits.append(index % self.p)
            index //= self.p
        return FieldElement(self, tuple(digits))

    def elements(self) -> Iterator["FieldElement"]:
        """All field elements in canonical index order."""
        for i in range(self.q):
            yield self.from_index(i)

    def zero(self) -> "FieldElement":
        return FieldElement(self, (0,) * self.n)

    def one(self) -> "FieldElement":
        return FieldElement(self, (1,) + (0,) * (self.n - 1))

    @cached_property
    def _trace_form(self) -> tuple[int, ...]:
        """Absolute trace of each polynomial-basis element, as integers mod p."""
        form = []
        for i in range(self.n):
            basis = self.from_index(self.p**i)
            total = self.zero()
            power = basis
            for _ in range(self.n):
                total = total + power
                power = power**self.p
            if any(c != 0 for c in total.coeffs[1:]):
                raise AssertionError("trace image escaped the prime subfield")
            form.append(total.coeffs[0])
        return tuple(form)

    def descriptor(self) -> dict:
        """JSON-ready descriptor: {"p": ..., "n": ..., "modulus": [...]}."""
        return {"p": self.p, "n": self.n, "modulus": list(self.modulus)}

    @classmethod
    def from_descriptor(cls, data: dict) -> "FiniteField":
        return cls(data["p"], data["n"], data["modulus"])


def make_field(p: int, n: int = 1, modulus_poly: Sequence[int] | None = None) -> FiniteField:
    """Build GF(p^n); selects the default modulus when none is given."""
    return FiniteField(p, n, modulus_poly)


class FieldElement:
    """Immutable element of a FiniteField, in polynomial-basis representation."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: FiniteField, coeffs: tuple[int, ...]):
        self.field = field
        self.coeffs = coeffs

    @property
    def index(self) -> int:
        """Canonical index: base-p digit value of the coefficient vector."""
        value = 0
        for c in reversed(self.coeffs):
            value = value * self.field.p + c
        return value

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)

    def _check_same_field(self, other: "FieldElement") -> None:
        if not isinstance(other, FieldElement) or other.field != self.field:
            raise FieldMismatchError(f"cannot combine {self!r} with {other!r}")

    def __add__(self, other: "FieldElement") -> "FieldElement":
        self._check_same_field(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a + b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "FieldElement") -> "FieldElement":
        self._check_same_field(other)
        p = self.field.p
        return FieldElement(self.field, tuple((a - b) % p for a, b in zip(self.coeffs, other.coeffs)))

    def __neg__(self) -> "FieldElement":
        p = self.field.p
        return FieldElement(self.field, tuple((-a) % p for a in self.coeffs))

    def __mul__(self, other: "FieldElement") -> "FieldElement":
        self._check_same_field(other)
        p = self.field.p
        n = self.field.n
        prod = [0] * (2 * n - 1)
        for i, a in enumerate(self.coeffs):
            if a == 0:
                continue
            for j, b in enumerate(other.coeffs):
                prod[i + j] = (prod[i + j] + a * b) % p
        reduced = _poly_mod(prod, self.field.modulus, p)
        reduced += [0] * (n - len(reduced))
        return FieldElement(self.field, tuple(reduced))

    def __pow__(self, exponent: int) -> "FieldElement":
        if exponent < 0:
            return self.inverse() ** (-exponent)
        result = self.field.one()
        base = self
        e = exponent
        while e:
            if e & 1:
                result = result * base
            base = base * base
            e >>= 1
        return result

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise ZeroDivisionError("inverse of zero")
        return self ** (self.field.q - 2)

    def __truediv__(self, other: "FieldElement") -> "FieldElement":
        self._check_same_field(other)
        return self * other.inverse()

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, FieldElement)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self) -> int:
        return hash((self.field, self.coeffs))

    def __repr__(self) -> str:
        return f"FieldElement({list(self.coeffs)} over GF({self.field.p}^{self.field.n}))"


def find_primitive(field: FiniteField) -> FieldElement:
    """Element of smallest canonical index with multiplicative order q - 1.

    The order test checks x^((q-1)/l) != 1 for every prime divisor l of
    q - 1, which is exact for nonzero elements.
    """
    group = field.q - 1
    factors = _prime_factors(group)
    one = field.one()
    for i in range(1, field.q):
        x = field.from_index(i)
        if all(x ** (group // f) != one for f in factors):
            return x
    raise AssertionError("no primitive element found (broken field)")


def abs_trace(x: FieldElement) -> int:
    """Trace of x from GF(p^n) down to the prime field, as an int in [0, p-1].

    Computed through the cached linear form over the polynomial basis.
    """
    form = x.field._trace_form
    return sum(c * f for c, f in zip(x.coeffs, form)) % x.field.p


class PhiMap:
    """A bijection from field elements to Z_q, stored as an index permutation."""

    def __init__(self, field: FiniteField, table: Sequence[int]):
        tbl = tuple(table)
        if sorted(tbl) != list(range(field.q)):
            raise NotABijectionError(f"table of length {len(tbl)} is not a permutation of 0..{field.q - 1}")
        self.field = field
        self.table = tbl
        inverse = [0] * field.q
        for i, v in enumerate(tbl):
            inverse[v] = i
        self.inverse = tuple(inverse)

    @classmethod
    def identity(cls, field: FiniteField) -> "PhiMap":
        """Canonical bijection: element index maps to itself."""
        return cls(field, range(field.q))

    def __call__(self, x: FieldElement) -> int:
        if x.field != self.field:
            raise FieldMismatchError("element does not belong to this map's field")
        return self.table[x.index]

    def preimage_index(self, value: int) -> int:
        return self.inverse[value]


def phi_default(field: FiniteField) -> PhiMap:
    """Default bijection F_q -> Z_q via the base-p digit value."""
    return PhiMap.identity(field)


class ExtensionTower:
    """GF(p^n) together with GF(p^{rn}) and an explicit embedding.

    The extension is built as a single degree r*n extension of the prime
    field; the embedding sends the base generator to a root of the base
    modulus found inside the extension (smallest canonical index).  beta
    is the default primitive element of the extension and drives the trace
    m-sequence s(t) = Tr(beta^t).
    """

    def __init__(
        self,
        base: FiniteField,
        r: int = 2,
        ext_modulus: Sequence[int] | None = None,
    ):
        if r < 2:
            raise ValueError(f"extension ratio must be >= 2, got {r}")
        self.base = base
        self.r = r
        self.q = base.q
        self.ext = FiniteField(base.p, r * base.n, ext_modulus)
        self.gamma = self._find_embedding_root()
        self._gamma_powers = [self.ext.one()]
        for _ in range(base.n - 1):
            self._gamma_powers.append(self._gamma_powers[-1] * self.gamma)
        self._down = {self.embed(x).coeffs: x for x in base.elements()}
        self.alpha = find_primitive(base)
        self.beta = find_primitive(self.ext)

    def _find_embedding_root(self) -> FieldElement:
        constants = [self.ext.element([c]) for c in self.base.modulus]
        for y in self.ext.elements():
            acc = self.ext.zero()
            for c in reversed(constants):
                acc = acc * y + c
            if acc.is_zero():
                return y
        raise AssertionError("base modulus has no root in the extension (broken tower)")

    def embed(self, x: FieldElement) -> FieldElement:
        """Field homomorphism GF(p^n) -> GF(p^{rn})."""
        if x.field != self.base:
            raise FieldMismatchError("embed expects a base-field element")
        acc = self.ext.zero()
        for c, gp in zip(x.coeffs, self._gamma_powers):
            if c:
                acc = acc + self.ext.element([c]) * gp
        return acc

    def project(self, y: FieldElement) -> FieldElement:
        """Inverse of embed on its image; raises NotInSubfieldError otherwise."""
        if y.field != self.ext:
            raise FieldMismatchError("project expects an extension-field element")
        down = self._down.get(y.coeffs)
        if down is None:
            raise NotInSubfieldError(f"{y!r} is not in the embedded base field")
        return down

    def rel_trace(self, y: FieldElement) -> FieldElement:
        """Relative trace y + y^q + ... + y^(q^(r-1)), as a base-field element."""
        if y.field != self.ext:
            raise FieldMismatchError("rel_trace expects an extension-field element")
        total = y
        power = y
        for _ in range(self.r - 1):
            power = power**self.q
            total = total + power
        return self.project(total)

    @cached_property
    def _m_sequence(self) -> tuple[FieldElement, ...]:
        period = self.q**self.r - 1
        out = []
        cur = self.ext.one()
        for _ in range(period):
            out.append(self.rel_trace(cur))
            cur = cur * self.beta
        return tuple(out)

    def m_sequence(self) -> tuple[FieldElement, ...]:
        """Trace sequence s(t) = Tr(beta^t), one full period of q^r - 1 symbols."""
        return self._m_sequence

    def find_zero_exponent(self) -> int:
        """The unique e in [0, q] with Tr(beta^e) = 0 (r = 2 towers only)."""
        if self.r != 2:
            raise ValueError("zero-exponent search is defined for r = 2 towers")
        seq = self.m_sequence()
        zeros = [e for e in range(self.q + 1) if seq[e].is_zero()]
        if len(zeros) != 1:
            raise ZeroNotFoundError(f"expected exactly one trace zero in [0, {self.q}], found {zeros}")
        return zeros[0]

    def __repr__(self) -> str:
        return f"ExtensionTower(GF({self.base.p}^{self.base.n}) in GF({self.base.p}^{self.ext.n}))"


def write_m_sequence_csv(tower: ExtensionTower, path) -> None:
    """Export the trace m-sequence as CSV rows t,value_index."""
    with open(path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["t", "value_index"])
        for t, s in enumerate(tower.m_sequence()):
            writer.writerow([t, s.index])
