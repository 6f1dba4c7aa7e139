from math import gcd

import pytest

from cclab.families import (
    FamilyKind,
    FamilySpec,
    family_extremal_positive,
    family_m0,
    family_nonzero_m,
    family_pair,
    family_triple,
    first_k,
    generate,
    in_nonzero_m_region,
)
from cclab.model import DomainError, gcd_condition, residual_m
from cclab.sequences import modulus_M_star, positive_bound, sylvester_u


def test_m0_examples():
    assert family_m0(3, 1, 3) == (-3, 4, 13)
    assert family_m0(3, 1, 2) == (-2, 3, 7)
    with pytest.raises(DomainError):
        family_m0(2, 1, 4)


def test_pair_examples():
    assert family_pair(3, 5) == (-5, 8)
    assert family_pair(1, 3) == (-3, 4)
    assert family_pair(-2, 4) == (-4, 2)
    assert residual_m(1, -2, (-4, 2)) == 0
    with pytest.raises(DomainError):
        family_pair(3, 4)


def test_triple_examples():
    assert family_triple(1, 2) == (-2, 3, 7)
    assert family_triple(3, 7) == (-7, 8, 59)
    with pytest.raises(DomainError):
        family_triple(2, 5)


def test_extremal_examples():
    assert family_extremal_positive(1, 1, 3) == (2, 3, 5)
    assert family_extremal_positive(1, 1, 4) == (2, 3, 7, 41)
    assert family_extremal_positive(2, 1, 2) == (3, 5)
    assert residual_m(2, 1, (3, 5)) == 1
    with pytest.raises(DomainError):
        family_extremal_positive(1, 1, 2)


def test_nonzero_m_examples():
    assert family_nonzero_m(5, 1, 3, 7) == (1, -7, 12)
    assert residual_m(1, 5, (1, -7, 12)) == 1
    for k in (2, 5, -9):
        t = family_nonzero_m(1, 2, 3, k)
        assert sorted(t) == sorted((1, 1, k))
        assert residual_m(1, 1, t) == 2
    with pytest.raises(DomainError):
        family_nonzero_m(2, 2, 3, 5)


def test_region():
    assert in_nonzero_m_region(7, 0, 2)
    assert in_nonzero_m_region(1, 2, 3)
    assert not in_nonzero_m_region(2, 2, 3)
    assert in_nonzero_m_region(1, -2, 3)
    assert not in_nonzero_m_region(-1, -2, 3)
    assert in_nonzero_m_region(-1, -3, 4)


def test_sweep_residual_zero_and_distinct():
    for s in [v for v in range(-7, 8) if v]:
        for n in range(3, 7):
            seen = set()
            for k in range(2, 201):
                try:
                    t = family_m0(n, s, k)
                except DomainError:
                    continue
                assert residual_m(1, s, t) == 0
                assert min(abs(v) for v in t) >= 2
                assert sum(v < 0 for v in t) == 1
                seen.add(t)
            assert len(seen) >= 190


def test_nonzero_m_sweep():
    for s in [v for v in range(-7, 8) if v]:
        for n in range(2, 7):
            for m in range(-n, n + 1):
                if not in_nonzero_m_region(s, m, n):
                    with pytest.raises(DomainError):
                        family_nonzero_m(s, m, n, abs(s) + 2)
                    continue
                seen = set()
                for k in range(abs(s) + 2, abs(s) + 40):
                    t = family_nonzero_m(s, m, n, k)
                    assert len(t) == n
                    assert residual_m(1, s, t) == m
                    seen.add(t)
                assert len(seen) == 38


def test_coprime_scheduling():
    for s in [v for v in range(-7, 8) if v]:
        for n in range(3, 7):
            if gcd(s, modulus_M_star(n)) != 1:
                continue
            k = first_k(abs(s) + 2, abs(s), 1)
            for j in range(30):
                t = family_m0(n, s, k + j * abs(s))
                assert gcd_condition(t, s)
        if s % 2:
            k = first_k(abs(s) + 2, abs(s), 1)
            for j in range(30):
                assert gcd_condition(family_triple(s, k + j * abs(s)), s)


def test_extremal_attains_positive_bound():
    for r in (1, 2, 3):
        for s in (1, -1, 2, -2, 3, -3):
            if gcd(r, s) != 1:
                continue
            for n in range(2, 7):
                if sylvester_u(r, n) <= s * s or sylvester_u(r, n) - s - 1 < 2:
                    continue
                t = family_extremal_positive(r, s, n)
                assert residual_m(r, s, t) == 1
                assert t[-1] == positive_bound(r, s, n)


def test_family_spec():
    spec = FamilySpec(FamilyKind.PAIR, s=3, n=2, k_start=5, k_step=3)
    assert list(spec.generate(2)) == [(-5, 8), (-8, 11)]
    assert spec.describe()["kind"] == "pair"
    with pytest.raises(DomainError):
        FamilySpec(FamilyKind.EXTREMAL_POSITIVE, s=1, n=3).instance(0)


def test_first_k():
    assert first_k(9, 7, 1) == 15
    assert first_k(4, 1, 0) == 4
    assert first_k(5, 3, 1) == 7


def test_generate_helper():
    assert generate("triple", 1, 1, 3, 2, 2) == [((-2, 3, 7), 0), ((-3, 4, 13), 0)]
    assert generate("extremal", 2, 1, 3, 0, 5) == [((3, 7, 41), 1)]
    assert generate("padded", 1, 3, 5, 5, 1, m=2) == [((1, 1, -5, 6, 33), 2)]
