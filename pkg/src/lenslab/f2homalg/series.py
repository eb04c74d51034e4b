"""Truncated U-power series over GF(2) and over the rational-exponent group ring.

The three series that drive the surgery arguments:

  * tau_series        -- 1 at every triangular exponent k(k+1)/2
  * surgery_series    -- GF(2) sum of U^((2n'-p)^2 - (2n-p)^2)/(8p) over
                         n' = n (mod p); vanishes for n = 0, constant term 1
                         for 1 <= n <= p-1
  * twisted_genus1_series -- coefficient mu(2n+1) + mu(-2n-1) at U^(n(n+1)/2)
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from ..errors import DomainError, InvariantError


@dataclass(frozen=True)
class GroupRingElem:
    """GF(2) combination of formal exponentials mu(x), x an exact rational."""

    support: frozenset[Fraction]

    @classmethod
    def zero(cls) -> "GroupRingElem":
        return cls(frozenset())

    @classmethod
    def mu(cls, x: int | Fraction) -> "GroupRingElem":
        return cls(frozenset({Fraction(x)}))

    def __add__(self, other: "GroupRingElem") -> "GroupRingElem":
        return GroupRingElem(self.support ^ other.support)

    def __mul__(self, other: "GroupRingElem") -> "GroupRingElem":
        acc: set[Fraction] = set()
        for a in self.support:
            for b in other.support:
                acc ^= {a + b}
        return GroupRingElem(frozenset(acc))

    def __bool__(self) -> bool:
        return bool(self.support)

    def is_unit(self) -> bool:
        """Unit of the group ring itself (a single exponential)."""
        return len(self.support) == 1

    def __str__(self) -> str:
        if not self.support:
            return "0"
        return " + ".join(f"mu({x})" for x in sorted(self.support))


GF2 = "gf2"
GROUP_RING = "groupring"

Coeff = Union[int, GroupRingElem]


@dataclass(frozen=True)
class USeries:
    """Power series in U truncated at order N (exponents > N unrepresented)."""

    ring: str
    truncation: int
    coeffs: tuple[tuple[int, Coeff], ...]  # sorted (exponent, nonzero coeff)

    @classmethod
    def make(cls, ring: str, truncation: int, data: dict[int, Coeff]) -> "USeries":
        if ring not in (GF2, GROUP_RING):
            raise DomainError(f"unknown coefficient ring {ring!r}")
        if truncation < 0:
            raise DomainError("truncation order must be >= 0")
        items = []
        for k, c in sorted(data.items()):
            if k < 0:
                raise DomainError("negative exponent")
            if k > truncation:
                continue
            if ring == GF2:
                c = int(c) % 2
                if c:
                    items.append((k, 1))
            else:
                if not isinstance(c, GroupRingElem):
                    raise DomainError("group-ring series needs GroupRingElem coefficients")
                if c:
                    items.append((k, c))
        return cls(ring, truncation, tuple(items))

    @classmethod
    def zero(cls, ring: str, truncation: int) -> "USeries":
        return cls.make(ring, truncation, {})

    @classmethod
    def one(cls, ring: str, truncation: int) -> "USeries":
        unit: Coeff = 1 if ring == GF2 else GroupRingElem.mu(0)
        return cls.make(ring, truncation, {0: unit})

    def coeff(self, k: int) -> Coeff:
        for j, c in self.coeffs:
            if j == k:
                return c
        return 0 if self.ring == GF2 else GroupRingElem.zero()

    def __add__(self, other: "USeries") -> "USeries":
        self._match(other)
        data = dict(self.coeffs)
        for k, c in other.coeffs:
            if k in data:
                merged = (data[k] + c) if self.ring == GROUP_RING else (data[k] ^ c)
                if merged:
                    data[k] = merged
                else:
                    del data[k]
            else:
                data[k] = c
        return USeries.make(self.ring, self.truncation, data)

    def __mul__(self, other: "USeries") -> "USeries":
        self._match(other)
        n = self.truncation
        data: dict[int, Coeff] = {}
        for j, a in self.coeffs:
            for k, b in other.coeffs:
                e = j + k
                if e > n:
                    continue
                term = (a * b) if self.ring == GROUP_RING else (a & b)
                if e in data:
                    merged = (data[e] + term) if self.ring == GROUP_RING else (data[e] ^ term)
                    if merged:
                        data[e] = merged
                    else:
                        del data[e]
                elif term:
                    data[e] = term
        return USeries.make(self.ring, self.truncation, data)

    def _match(self, other: "USeries") -> None:
        if self.ring != other.ring or self.truncation != other.truncation:
            raise DomainError("series live in different truncated rings")

    def is_invertible(self) -> bool:
        """Invertibility in the truncated ring: the constant coefficient must
        be invertible in the coefficient ring (for group-ring coefficients
        this means invertible in its field of fractions, i.e. nonzero)."""
        c0 = self.coeff(0)
        if self.ring == GF2:
            return c0 == 1
        return bool(c0)

    def inverse(self) -> "USeries":
        """Multiplicative inverse up to the truncation order (GF(2) only)."""
        if self.ring != GF2:
            raise DomainError("inverse implemented for GF(2) coefficients only")
        if not self.is_invertible():
            raise DomainError("constant coefficient is not invertible")
        n = self.truncation
        a = {k: c for k, c in self.coeffs}
        b = [0] * (n + 1)
        b[0] = 1
        for k in range(1, n + 1):
            acc = 0
            for j in range(1, k + 1):
                if a.get(j, 0) and b[k - j]:
                    acc ^= 1
            b[k] = acc
        return USeries.make(GF2, n, {k: v for k, v in enumerate(b) if v})

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for k, c in self.coeffs:
            if self.ring == GF2:
                head = "1" if k == 0 else ("U" if k == 1 else f"U^{k}")
            else:
                body = str(c)
                head = body if k == 0 else (
                    f"U*({body})" if k == 1 else f"U^{k}*({body})"
                )
            parts.append(head)
        return " + ".join(parts)


def tau_series(truncation: int) -> USeries:
    """Coefficient 1 exactly at the triangular exponents k(k+1)/2 <= N."""
    if truncation < 0:
        raise DomainError("truncation order must be >= 0")
    data = {}
    k = 0
    while k * (k + 1) // 2 <= truncation:
        data[k * (k + 1) // 2] = 1
        k += 1
    return USeries.make(GF2, truncation, data)


def surgery_series(p: int, n: int, truncation: int) -> USeries:
    """GF(2) sum of U^((2n'-p)^2 - (2n-p)^2) / (8p) over all n' = n (mod p)
    with integral exponent in [0, N].

    A non-integral exponent for some contributing n' would mean the
    congruence handling is wrong, so it raises instead of skipping.
    """
    if p < 1:
        raise DomainError("p must be positive")
    if not 0 <= n <= p - 1:
        raise DomainError(f"n={n} outside [0, {p - 1}]")
    if truncation < 0:
        raise DomainError("truncation order must be >= 0")
    base = (2 * n - p) ** 2
    data: dict[int, int] = {}
    k = 0
    while True:
        hit_window = False
        for n2 in (n + k * p, n - k * p) if k else (n,):
            num = (2 * n2 - p) ** 2 - base
            if num % (8 * p) != 0:
                raise InvariantError(
                    f"non-integral exponent for p={p}, n={n}, n'={n2}"
                )
            e = num // (8 * p)
            if e < 0:
                raise InvariantError(
                    f"negative exponent for p={p}, n={n}, n'={n2}"
                )
            if e <= truncation:
                hit_window = True
                data[e] = data.get(e, 0) ^ 1
        if not hit_window and k > 0:
            break
        k += 1
    return USeries.make(GF2, truncation, data)


def twisted_genus1_series(truncation: int) -> USeries:
    """Group-ring series: coefficient mu(2n+1) + mu(-2n-1) at U^(n(n+1)/2)."""
    if truncation < 0:
        raise DomainError("truncation order must be >= 0")
    data: dict[int, Coeff] = {}
    n = 0
    while n * (n + 1) // 2 <= truncation:
        data[n * (n + 1) // 2] = GroupRingElem.mu(2 * n + 1) + GroupRingElem.mu(-2 * n - 1)
        n += 1
    return USeries.make(GROUP_RING, truncation, data)
