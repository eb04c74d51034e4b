"""Knot-polynomial obstructions to lens-space surgeries.

Pipeline per lens space L(p, q): enumerate the conjugation-equivariant
affine label bijections sigma, form the difference vector

    t_i = d_rec(L(p,1), [i]) - d_rec(L(p,q), sigma[i])     (2|i| <= p)

and accept sigma only when every t_i is a nonpositive even integer.  The
torsion coefficients are then T_i = -t_i / 2 and the candidate polynomial is
recovered through the second-difference inverse

    a_i = T_{i-1} - 2 T_i + T_{i+1}  (i >= 1),    a_0 = 1 - 2 sum a_i.

Sign calibration: with the recursion as the d-values of L(p, *) itself this
normalization reproduces the (2,5)-torus-knot polynomial for L(9,7) with
sigma(i) = 3 + 4i, and only then.  The one-sided formula that builds the
polynomial directly from t/2 differences (which flips the sign of every
non-constant coefficient) is kept in `literal_reconstruction` for
comparison output, never for filtering.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd

from .errors import DomainError
from .lensdi import LensSpace, conj_label, d_rec, lens_normalize


@dataclass(frozen=True)
class AlexPoly:
    """Symmetric integer Laurent polynomial with value 1 at T = 1.

    Only i >= 0 is stored; a_{-i} = a_i is structural.
    """

    coeffs: tuple[tuple[int, int], ...]  # sorted (degree, coefficient), no zeros

    @classmethod
    def from_dict(cls, data: dict[int, int]) -> "AlexPoly":
        items = tuple(sorted((i, a) for i, a in data.items() if a != 0))
        if any(i < 0 for i, _ in items):
            raise DomainError("store only the i >= 0 half of a symmetric polynomial")
        poly = cls(items)
        if poly.at_one() != 1:
            raise DomainError(f"polynomial evaluates to {poly.at_one()} != 1 at T = 1")
        return poly

    def coeff(self, i: int) -> int:
        i = abs(i)
        for j, a in self.coeffs:
            if j == i:
                return a
        return 0

    @property
    def degree(self) -> int:
        return self.coeffs[-1][0] if self.coeffs else 0

    def at_one(self) -> int:
        a0 = self.coeff(0)
        return a0 + 2 * sum(a for i, a in self.coeffs if i > 0)

    def full_coeffs(self) -> list[int]:
        """Coefficients from degree -g to +g."""
        g = self.degree
        return [self.coeff(i) for i in range(-g, g + 1)]

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        parts = []
        g = self.degree
        for i in range(g, -g - 1, -1):
            a = self.coeff(i)
            if a == 0:
                continue
            sign = "-" if a < 0 else "+"
            mag = abs(a)
            if i == 0:
                term = f"{mag}"
            else:
                term = ("" if mag == 1 else f"{mag}*") + (f"T^{i}" if i != 1 else "T")
            parts.append((sign, term))
        first_sign, first_term = parts[0]
        text = ("-" if first_sign == "-" else "") + first_term
        for sign, term in parts[1:]:
            text += f" {sign} {term}"
        return text


ONE = AlexPoly(((0, 1),))
TREFOIL = AlexPoly(((0, -1), (1, 1)))


@dataclass(frozen=True)
class TorsionSeq:
    """Finitely supported T_i for i >= 0."""

    values: tuple[tuple[int, int], ...]  # sorted (i, T_i), no zeros

    @classmethod
    def from_list(cls, seq: list[int]) -> "TorsionSeq":
        return cls(tuple((i, t) for i, t in enumerate(seq) if t != 0))

    def value(self, i: int) -> int:
        i = abs(i)
        for j, t in self.values:
            if j == i:
                return t
        return 0

    @property
    def support_bound(self) -> int:
        return self.values[-1][0] + 1 if self.values else 0


def torsion_from_alex(poly: AlexPoly) -> TorsionSeq:
    """T_i = sum_{j >= 1} j * a_{i+j} for i >= 0."""
    g = poly.degree
    out = []
    for i in range(g):
        t = sum(j * poly.coeff(i + j) for j in range(1, g - i + 1))
        if t:
            out.append((i, t))
    return TorsionSeq(tuple(out))


def alex_from_torsion(seq: TorsionSeq) -> AlexPoly:
    """Second-difference inverse of torsion_from_alex.

    The lens-space pipeline only ever feeds nonnegative torsion (T = -t/2
    with t nonpositive); the identity itself is sign-agnostic.
    """
    top = seq.support_bound
    data: dict[int, int] = {}
    for i in range(1, top + 2):
        a = seq.value(i - 1) - 2 * seq.value(i) + seq.value(i + 1)
        if a:
            data[i] = a
    data[0] = 1 - 2 * sum(data.values())
    return AlexPoly.from_dict(data)


@dataclass(frozen=True)
class Correspondence:
    """Affine label bijection sigma(i) = c + u*i (mod p), u a unit.

    Instances produced by enumerate_correspondences additionally satisfy the
    conjugation equivariance sigma(-i) = conj(sigma(i)), which for an affine
    map is the single congruence 2c = q - 1 (mod p).
    """

    space: LensSpace
    c: int
    u: int

    def __post_init__(self) -> None:
        if gcd(self.u, self.space.p) != 1:
            raise DomainError(f"u={self.u} is not a unit mod {self.space.p}")

    def __call__(self, i: int) -> int:
        return (self.c + self.u * i) % self.space.p

    def is_equivariant(self) -> bool:
        """sigma(-i) = conjugate of sigma(i) for every residue."""
        space = self.space
        return all(
            self(-i) == conj_label(space, self(i)) for i in range(space.p)
        )


def enumerate_correspondences(space: LensSpace) -> list[Correspondence]:
    """All equivariant affine bijections, checked directly on all residues."""
    out = []
    for u in range(1, space.p + 1):
        if gcd(u, space.p) != 1:
            continue
        for c in range(space.p):
            cand = Correspondence(space, c, u)
            if cand.is_equivariant():
                out.append(cand)
    return out


@dataclass(frozen=True)
class TVector:
    """t_i for 0 <= i <= p/2; t_{-i} = t_i, zero outside 2|i| <= p."""

    space: LensSpace
    t: tuple[Fraction, ...]

    def value(self, i: int) -> Fraction:
        i = abs(i)
        return self.t[i] if i < len(self.t) else Fraction(0)


def t_vector(space: LensSpace, sigma: Correspondence) -> TVector:
    if sigma.space != space:
        raise DomainError("correspondence belongs to a different lens space")
    base = lens_normalize(space.p, 1)
    vals = tuple(
        d_rec(base, i % space.p) - d_rec(space, sigma(i))
        for i in range(space.p // 2 + 1)
    )
    return TVector(space, vals)


@dataclass(frozen=True)
class FilterSet:
    require_t_nonpositive: bool = True
    require_t_even: bool = True
    require_pm1_alternating: bool = True

    def names(self) -> list[str]:
        on = []
        if self.require_t_nonpositive:
            on.append("t-nonpositive")
        if self.require_t_even:
            on.append("t-even")
        if self.require_pm1_alternating:
            on.append("pm1-alternating")
        return on


def _pm1_alternating(poly: AlexPoly) -> bool:
    nz = [a for a in poly.full_coeffs() if a != 0]
    if any(abs(a) != 1 for a in nz):
        return False
    return all(nz[k] == -nz[k + 1] for k in range(len(nz) - 1))


@dataclass(frozen=True)
class Candidate:
    poly: AlexPoly
    sigma: Correspondence
    t: TVector


def candidate_polynomials(
    space: LensSpace, filters: FilterSet = FilterSet()
) -> list[Candidate]:
    """Deduplicated candidate polynomials with one witnessing sigma each."""
    seen: dict[tuple, Candidate] = {}
    for sigma in enumerate_correspondences(space):
        tv = t_vector(space, sigma)
        if filters.require_t_nonpositive and any(x > 0 for x in tv.t):
            continue
        if filters.require_t_even and any(
            x.denominator != 1 or x.numerator % 2 for x in tv.t
        ):
            continue
        torsion = [Fraction(-x, 2) for x in tv.t]
        if any(x.denominator != 1 for x in torsion):
            continue
        seq = TorsionSeq.from_list([int(x) for x in torsion])
        try:
            poly = alex_from_torsion(seq)
        except DomainError:
            continue
        if filters.require_pm1_alternating and not _pm1_alternating(poly):
            continue
        if poly.coeffs not in seen:
            seen[poly.coeffs] = Candidate(poly, sigma, tv)
    return [seen[k] for k in sorted(seen)]


def literal_reconstruction(tv: TVector) -> dict[int, Fraction]:
    """The one-sided display formula 1 + sum (t_{i-1}/2 - t_i + t_{i+1}/2) T^i.

    Comparison output only; differs from the normative reconstruction by the
    sign of every non-constant coefficient.
    """
    bound = len(tv.t) + 1
    out: dict[int, Fraction] = {}
    for i in range(-bound, bound + 1):
        a = tv.value(i - 1) / 2 - tv.value(i) + tv.value(i + 1) / 2
        if i == 0:
            a += 1
        if a:
            out[i] = a
    return out


def genus_bound_check(g: int, p: int) -> bool:
    """Whether genus g is permitted for a lens space of order p: 2g - 1 <= p."""
    if g < 0 or p < 1:
        raise DomainError("need g >= 0 and p >= 1")
    return 2 * g - 1 <= p


def default_scan_radius(g: int) -> int:
    """Search radius 12g - 7 (the hyperbolic-surgery order bound)."""
    return 12 * g - 7


@dataclass(frozen=True)
class ScanHit:
    space: LensSpace  # canonical form
    representatives: tuple[LensSpace, ...]
    polys: tuple[AlexPoly, ...]


def scan_realizable(
    g: int, pmax: int | None = None, filters: FilterSet = FilterSet()
) -> list[ScanHit]:
    """Canonical lens spaces of order <= pmax admitting a candidate of degree g."""
    if g < 1:
        raise DomainError("scan needs g >= 1")
    if pmax is None:
        pmax = default_scan_radius(g)
    if pmax < 1:
        raise DomainError("scan needs pmax >= 1")
    hits: dict[LensSpace, tuple[set[LensSpace], dict[tuple, AlexPoly]]] = {}
    for p in range(max(2 * g - 1, 2), pmax + 1):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            space = LensSpace(p, q)
            polys = [
                c.poly for c in candidate_polynomials(space, filters)
                if c.poly.degree == g
            ]
            if not polys:
                continue
            key = space.canonical()
            reps, bag = hits.setdefault(key, (set(), {}))
            reps.add(space)
            for poly in polys:
                bag[poly.coeffs] = poly
    return [
        ScanHit(k, tuple(sorted(reps)), tuple(bag[c] for c in sorted(bag)))
        for k, (reps, bag) in sorted(hits.items())
    ]


@dataclass(frozen=True)
class Obstruction:
    statement: str
    hypotheses: tuple[str, ...]


@dataclass(frozen=True)
class ObstructionReport:
    genus: int
    degree: int
    obstructions: tuple[Obstruction, ...]


def obstruction_report(poly: AlexPoly, g: int) -> ObstructionReport:
    """Surgery obstructions for a knot of Seifert genus g with polynomial poly.

    All obstructions fire exactly when deg < g; the 1/n clause needs g > 1 too.
    """
    deg = poly.degree
    if g < deg:
        raise DomainError(f"genus {g} below polynomial degree {deg}")
    entries: list[Obstruction] = []
    if deg < g:
        gap = f"polynomial degree {deg} < Seifert genus {g}"
        entries.append(
            Obstruction(
                "no integral surgery yields a lens space",
                (gap, "an integral lens-space surgery forces degree = genus"),
            )
        )
        entries.append(
            Obstruction(
                "no positively-oriented Seifert fibered surgery for any slope r >= 0",
                (gap, "such a filling forces degree = genus as well"),
            )
        )
        if g > 1:
            entries.append(
                Obstruction(
                    "no 1/n surgery is Seifert fibered (either orientation)",
                    (gap, f"Seifert genus {g} > 1"),
                )
            )
    return ObstructionReport(g, deg, tuple(entries))
