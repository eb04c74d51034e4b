"""Correspondences, t-vectors, torsion conversions, candidate polynomials."""

import random
from fractions import Fraction
from math import gcd

import pytest

from lenslab.errors import DomainError
from lenslab.alexobstruct import (
    ONE,
    TREFOIL,
    AlexPoly,
    Correspondence,
    TorsionSeq,
    alex_from_torsion,
    candidate_polynomials,
    default_scan_radius,
    enumerate_correspondences,
    genus_bound_check,
    literal_reconstruction,
    obstruction_report,
    scan_realizable,
    t_vector,
    torsion_from_alex,
)
from lenslab.lensdi import LensSpace, conj_label, d_rec

T25 = AlexPoly(((0, 1), (1, -1), (2, 1)))  # (2,5) torus knot


def test_torsion_from_alex_examples():
    assert torsion_from_alex(ONE).values == ()
    assert torsion_from_alex(TREFOIL).values == ((0, 1),)
    assert torsion_from_alex(T25).values == ((0, 1), (1, 1))


def test_alex_from_torsion_examples():
    assert alex_from_torsion(TorsionSeq(())) == ONE
    assert alex_from_torsion(TorsionSeq(((0, 1),))) == TREFOIL
    assert alex_from_torsion(TorsionSeq(((0, 1), (1, 1)))) == T25


def random_admissible_poly(rng: random.Random) -> AlexPoly:
    degree = rng.randrange(1, 9)
    data = {degree: rng.choice([-3, -2, -1, 1, 2, 3])}
    for i in range(1, degree):
        data[i] = rng.randrange(-3, 4)
    data[0] = 1 - 2 * sum(data.values())
    return AlexPoly.from_dict(data)


def test_torsion_round_trip_randomized():
    rng = random.Random(4021)
    for _ in range(300):
        poly = random_admissible_poly(rng)
        assert alex_from_torsion(torsion_from_alex(poly)) == poly


def test_enumerate_correspondences_examples():
    found = {(c.c, c.u) for c in enumerate_correspondences(LensSpace(2, 1))}
    assert found == {(0, 1), (1, 1)}

    sigmas = {(c.c, c.u) for c in enumerate_correspondences(LensSpace(9, 7))}
    assert (3, 4) in sigmas

    trivial = enumerate_correspondences(LensSpace(1, 1))
    assert len(trivial) == 1 and trivial[0](5) == 0


def test_correspondence_equivariance_hand_check():
    sigma = Correspondence(LensSpace(9, 7), 3, 4)
    assert sigma.is_equivariant()
    for i in range(9):
        assert sigma(-i) == conj_label(LensSpace(9, 7), sigma(i))


def test_t_vector_examples():
    space = LensSpace(7, 1)
    identity = Correspondence(space, 0, 1)
    assert all(x == 0 for x in t_vector(space, identity).t)

    space = LensSpace(9, 7)
    tv = t_vector(space, Correspondence(space, 3, 4))
    assert tv.t == (Fraction(-2), Fraction(-2), Fraction(0), Fraction(0), Fraction(0))

    tv2 = t_vector(space, Correspondence(space, 3, 5))
    assert tv2.t[1] == d_rec(LensSpace(9, 1), 1) - d_rec(space, 8) == Fraction(-2)


def test_t_vector_symmetry_exhaustive():
    for p in range(1, 26):
        for q in range(1, p + 1):
            if gcd(p, q) != 1:
                continue
            space = LensSpace(p, q)
            base = LensSpace(p, 1)
            for sigma in enumerate_correspondences(space):
                tv = t_vector(space, sigma)
                for i in range(p // 2 + 1):
                    mirrored = d_rec(base, (-i) % p) - d_rec(space, sigma(-i))
                    assert mirrored == tv.t[i]


def test_candidate_polynomials_examples():
    cands = candidate_polynomials(LensSpace(9, 7))
    polys = {c.poly for c in cands}
    assert T25 in polys
    witness = next(c for c in cands if c.poly == T25)
    assert (witness.sigma.c, witness.sigma.u) in {(3, 4), (3, 5)}

    assert ONE in {c.poly for c in candidate_polynomials(LensSpace(7, 1))}
    assert TREFOIL in {c.poly for c in candidate_polynomials(LensSpace(5, 4))}


def test_identity_baseline():
    for p in range(1, 21):
        polys = {c.poly for c in candidate_polynomials(LensSpace(p, 1))}
        assert ONE in polys


def test_small_p_dichotomy():
    for p in range(2, 9):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            polys = {c.poly for c in candidate_polynomials(LensSpace(p, q))}
            assert polys <= {ONE, TREFOIL}, (p, q, polys)


def test_degree_bound_internal():
    for p in range(2, 26):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            for cand in candidate_polynomials(LensSpace(p, q)):
                assert genus_bound_check(cand.poly.degree, p)


def test_genus_bound_check_examples():
    assert genus_bound_check(2, 9)
    assert not genus_bound_check(5, 8)
    assert genus_bound_check(0, 1)


def test_scan_realizable_genus_two():
    hits = scan_realizable(2, 17)
    assert [h.space for h in hits] == [LensSpace(9, 4), LensSpace(11, 3)]
    assert LensSpace(9, 7) in hits[0].representatives
    assert all(p.degree == 2 for h in hits for p in h.polys)


def test_scan_radius_default():
    assert default_scan_radius(2) == 17
    assert default_scan_radius(5) == 53


def test_literal_formula_flips_nonconstant_signs():
    space = LensSpace(9, 7)
    tv = t_vector(space, Correspondence(space, 3, 4))
    literal = literal_reconstruction(tv)
    # normative a_1 = -1, a_2 = +1; the display formula negates them
    assert literal[1] == 1 and literal[-1] == 1
    assert literal[2] == -1
    assert literal[0] == 1


def test_obstruction_report_examples():
    report = obstruction_report(ONE, 1)
    statements = [o.statement for o in report.obstructions]
    assert len(statements) == 2  # g = 1 drops the 1/n clause
    assert any("lens space" in s for s in statements)

    assert obstruction_report(TREFOIL, 1).obstructions == ()

    report = obstruction_report(ONE, 2)
    assert len(report.obstructions) == 3
    assert all(o.hypotheses for o in report.obstructions)

    with pytest.raises(DomainError):
        obstruction_report(T25, 1)
