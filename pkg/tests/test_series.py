"""Truncated U-series over GF(2) and the rational-exponent group ring."""

import random
from fractions import Fraction

import pytest

from lenslab.errors import DomainError
from lenslab.f2homalg.series import (
    GF2,
    GroupRingElem,
    USeries,
    surgery_series,
    tau_series,
    twisted_genus1_series,
)


def gf2_series(rng: random.Random, n: int) -> USeries:
    return USeries.make(GF2, n, {k: rng.randrange(2) for k in range(n + 1)})


def test_tau_series_examples():
    assert str(tau_series(6)) == "1 + U + U^3 + U^6"
    assert str(tau_series(0)) == "1"
    assert tau_series(6).is_invertible()


def test_tau_series_21():
    series = tau_series(21)
    assert [k for k, _ in series.coeffs] == [0, 1, 3, 6, 10, 15, 21]
    assert series.is_invertible()
    assert series * series.inverse() == USeries.one(GF2, 21)


def test_surgery_series_examples():
    assert surgery_series(2, 0, 10) == USeries.zero(GF2, 10)
    assert surgery_series(2, 1, 10) == USeries.one(GF2, 10)
    series = surgery_series(3, 1, 10)
    assert series.coeff(0) == 1
    assert series.is_invertible()


def test_surgery_series_vanishes_at_zero_label():
    for p in range(1, 12):
        assert surgery_series(p, 0, 40) == USeries.zero(GF2, 40)


def test_surgery_series_domain():
    with pytest.raises(DomainError):
        surgery_series(3, 3, 10)
    with pytest.raises(DomainError):
        surgery_series(0, 0, 10)


def test_twisted_series_examples():
    series = twisted_genus1_series(1)
    mu = GroupRingElem.mu
    assert series.coeff(0) == mu(1) + mu(-1)
    assert series.coeff(1) == mu(3) + mu(-3)
    assert series.is_invertible()  # nonzero constant term in the field of fractions
    assert twisted_genus1_series(0).coeff(0) == mu(1) + mu(-1)
    assert bool(mu(1) + mu(-1))


def test_group_ring_axioms():
    mu = GroupRingElem.mu
    assert mu(Fraction(1, 2)) * mu(Fraction(1, 3)) == mu(Fraction(5, 6))
    assert mu(2) + mu(2) == GroupRingElem.zero()
    assert not GroupRingElem.zero()
    assert (mu(1) + mu(-1)) * (mu(1) + mu(-1)) == mu(2) + mu(-2)
    assert mu(5).is_unit()
    assert not (mu(1) + mu(2)).is_unit()


def test_series_ring_axioms_randomized():
    rng = random.Random(31)
    for _ in range(100):
        n = rng.randrange(0, 12)
        a, b, c = (gf2_series(rng, n) for _ in range(3))
        assert a * b == b * a
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c


def test_invertibility_iff_constant_term():
    rng = random.Random(77)
    for _ in range(100):
        series = gf2_series(rng, rng.randrange(0, 10))
        assert series.is_invertible() == (series.coeff(0) == 1)
        if series.is_invertible():
            n = series.truncation
            assert series * series.inverse() == USeries.one(GF2, n)


def test_mismatched_rings_rejected():
    with pytest.raises(DomainError):
        tau_series(5) + tau_series(6)
    with pytest.raises(DomainError):
        tau_series(5) * twisted_genus1_series(5)
    with pytest.raises(DomainError):
        twisted_genus1_series(5).inverse()
