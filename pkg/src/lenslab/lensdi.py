"""Lens spaces, their Spin^c labels, and the recursive d-invariants.

`d_rec` is the one sign primitive of the package:

    d(1, *, 0)   = 0
    d(p, q, i)   = (pq - (2i + 1 - p - q)^2) / (4pq) - d(q, p mod q, i mod q)

Every consumer states its own sign usage relative to this function rather
than re-deriving orientation conventions.
"""

from __future__ import annotations

import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd
from pathlib import Path

from .errors import DomainError, InvariantError, NotALensSpaceError

CACHE_ENV_VAR = "LENSLAB_CACHE"
CACHE_FORMAT_VERSION = "1"


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q) with q normalized into [1, p] and gcd(p, q) = 1."""

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 1:
            raise NotALensSpaceError(f"p must be positive, got {self.p}")
        if not 1 <= self.q <= self.p:
            raise NotALensSpaceError(f"q={self.q} not normalized for p={self.p}")
        if gcd(self.p, self.q) != 1:
            raise NotALensSpaceError(f"gcd({self.p}, {self.q}) != 1")

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"

    def canonical(self) -> "LensSpace":
        """Least-q representative of the homeomorphism class {q, q^-1 mod p}."""
        if self.p == 1:
            return LensSpace(1, 1)
        qinv = pow(self.q, -1, self.p)
        return LensSpace(self.p, min(self.q, qinv if qinv else self.p))

    def is_homeomorphic(self, other: "LensSpace") -> bool:
        return self.canonical() == other.canonical()


def lens_normalize(p: int, q: int) -> LensSpace:
    """Reduce q mod p into [1, p]; reject non-coprime pairs."""
    if p < 1:
        raise NotALensSpaceError(f"p must be positive, got {p}")
    q = q % p
    if q == 0:
        if p == 1:
            return LensSpace(1, 1)
        raise NotALensSpaceError(f"gcd({p}, 0) = {p} != 1")
    return LensSpace(p, q)


def conj_label(space: LensSpace, i: int) -> int:
    """Conjugation involution on labels: i -> p + q - 1 - i (mod p)."""
    return (space.p + space.q - 1 - i) % space.p


@lru_cache(maxsize=None)
def _d_rec(p: int, q: int, i: int) -> Fraction:
    if p == 1:
        return Fraction(0)
    q %= p
    i %= p
    num = p * q - (2 * i + 1 - p - q) ** 2
    return Fraction(num, 4 * p * q) - _d_rec(q, p % q, i % q)


def d_rec(space: LensSpace, i: int) -> Fraction:
    """The recursion value for label i of L(p, q)."""
    if not 0 <= i < space.p:
        raise DomainError(f"label {i} outside Z/{space.p}")
    return _d_rec(space.p, space.q, i)


@dataclass(frozen=True)
class DInvariantTable:
    space: LensSpace
    values: tuple[Fraction, ...]

    def __getitem__(self, i: int) -> Fraction:
        return self.values[i % self.space.p]


def d_table(space: LensSpace, cache: "DInvariantCache | None" = None) -> DInvariantTable:
    """All p recursion values; conjugation symmetry is asserted before return
    (also on cache hits, so a damaged cache entry cannot slip through)."""
    stored = cache.get(space) if cache is not None else None
    if stored is not None:
        values = tuple(stored)
    else:
        values = tuple(_d_rec(space.p, space.q, i) for i in range(space.p))
    for i in range(space.p):
        j = conj_label(space, i)
        if values[i] != values[j]:
            raise InvariantError(
                f"conjugation symmetry broken for {space}: "
                f"d({i}) = {values[i]} but d({j}) = {values[j]}"
            )
    if cache is not None and stored is None:
        cache.put(space, values)
    return DInvariantTable(space, values)


def froy_closed_form(p: int, n: int) -> Fraction:
    """(2n - p)^2 / (4p) - 1/4 for 0 <= n <= p."""
    if p < 1:
        raise DomainError(f"p must be positive, got {p}")
    if not 0 <= n <= p:
        raise DomainError(f"n={n} outside [0, {p}]")
    return Fraction((2 * n - p) ** 2, 4 * p) - Fraction(1, 4)


def grading_diff(p: int, n: int, n2: int) -> Fraction:
    """((2n - p)^2 - (2n' - p)^2) / (4p); antisymmetric in (n, n')."""
    if p < 1:
        raise DomainError(f"p must be positive, got {p}")
    return Fraction((2 * n - p) ** 2 - (2 * n2 - p) ** 2, 4 * p)


class DInvariantCache:
    """On-disk d-table store: one JSON document per (p, q).

    Writes are atomic (temp file + rename) so concurrent readers always see
    a complete document; re-writing an entry is idempotent.  Entries whose
    format version does not match are ignored.
    """

    def __init__(self, directory: str | os.PathLike[str]):
        self.directory = Path(directory)
        self.directory.mkdir(parents=True, exist_ok=True)

    @classmethod
    def from_environment(cls, cache_dir: str | None = None) -> "DInvariantCache | None":
        path = cache_dir or os.environ.get(CACHE_ENV_VAR)
        return cls(path) if path else None

    def _path(self, space: LensSpace) -> Path:
        return self.directory / f"d_{space.p}_{space.q}.json"

    def get(self, space: LensSpace) -> list[Fraction] | None:
        path = self._path(space)
        try:
            doc = json.loads(path.read_text())
        except (OSError, json.JSONDecodeError):
            return None
        if doc.get("version") != CACHE_FORMAT_VERSION:
            return None
        if doc.get("p") != space.p or doc.get("q") != space.q:
            return None
        values = [Fraction(s) for s in doc["d"]]
        if len(values) != space.p:
            return None
        return values

    def put(self, space: LensSpace, values: tuple[Fraction, ...]) -> None:
        doc = {
            "version": CACHE_FORMAT_VERSION,
            "p": space.p,
            "q": space.q,
            "d": [f"{v.numerator}/{v.denominator}" for v in values],
        }
        fd, tmp = tempfile.mkstemp(dir=self.directory, suffix=".tmp")
        try:
            with os.fdopen(fd, "w") as handle:
                json.dump(doc, handle)
            os.replace(tmp, self._path(space))
        except BaseException:
            try:
                os.unlink(tmp)
            except OSError:
                pass
            raise
