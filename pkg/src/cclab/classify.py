"""Finite/infinite decisions for the Diophantine family and the congruence systems."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from math import gcd
from typing import Optional

from .families import FamilyKind, FamilySpec, first_k, in_nonzero_m_region
from .model import DomainError, check_params
from .sequences import modulus_M_star, positive_bound, signed_coarse_bound, signed_sharp_bound


class Status(Enum):
    INFINITE = "Infinite"
    FINITE = "Finite"


@dataclass(frozen=True)
class Verdict:
    status: Status
    theorem_tag: str
    bound: Optional[int] = None
    witness_family: Optional[FamilySpec] = None

    def __post_init__(self):
        if self.status is Status.FINITE and self.bound is None:
            raise ValueError("a finite verdict carries a bound")
        if self.status is Status.INFINITE and self.witness_family is None:
            raise ValueError("an infinite verdict carries a witness family")


def _check(r: int, s: int, n: int) -> None:
    check_params(r, s)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")


def _region_tag(s: int, m: int, n: int) -> str:
    if abs(m) <= n - 2:
        return "infinite: r = 1 and |m| <= n-2 (condition i)"
    if m == n - 1:
        return "infinite: r = 1, m = n-1 and s = 1 (condition ii)"
    return "infinite: r = 1, m = -(n-1) and s = (-1)^(n-1) (condition iii)"


def _diophantine_witness(s: int, m: int, n: int) -> FamilySpec:
    start = abs(s) + 2
    if m == 0 and n == 2:
        return FamilySpec(FamilyKind.PAIR, s=s, n=n, k_start=start)
    if m == 0:
        return FamilySpec(FamilyKind.M0_GENERAL, s=s, n=n, k_start=start)
    return FamilySpec(FamilyKind.PADDED_NONZERO_M, s=s, n=n, m=m, k_start=start)


def classify_diophantine(r: int, s: int, m: int, n: int) -> Verdict:
    """Solutions in nonzero integers of ``r*sum(1/x_i) - s/prod(x_i) = m``."""
    _check(r, s, n)
    if r == 1 and in_nonzero_m_region(s, m, n):
        return Verdict(Status.INFINITE, _region_tag(s, m, n), witness_family=_diophantine_witness(s, m, n))
    if r >= 2:
        tag = "finite: r >= 2" + (" (no solutions at all for m = 0)" if m == 0 else "")
    else:
        tag = "finite: r = 1 outside conditions i-iii"
    return Verdict(Status.FINITE, tag, bound=signed_sharp_bound(r, s, n))


def classify_hypersurface(r: int, s: int, m: int, n: int) -> Verdict:
    """As :func:`classify_diophantine`, with zero coordinates allowed.

    Points with a zero coordinate satisfy ``r * (product of the rest) = s``
    and so never exceed ``|s|``; the bound widens to cover them.
    """
    v = classify_diophantine(r, s, m, n)
    if v.status is Status.INFINITE:
        return v
    return Verdict(Status.FINITE, v.theorem_tag, bound=max(v.bound, abs(s)))


def congruence_witness(s: int, n: int) -> FamilySpec:
    """A family of signed congruence solutions with the gcd condition, r = 1.

    ``k`` runs through ``k == 1 (mod |s|)``, which keeps every product
    coprime to ``s``.
    """
    step = abs(s)
    start = first_k(abs(s) + 2, step, 1)
    if n == 2:
        return FamilySpec(FamilyKind.PAIR, s=s, n=n, k_start=start, k_step=step)
    if n == 3 and s % 2:
        return FamilySpec(FamilyKind.TRIPLE, s=s, n=n, k_start=start, k_step=step)
    if gcd(s, modulus_M_star(n)) == 1:
        return FamilySpec(FamilyKind.M0_GENERAL, s=s, n=n, k_start=start, k_step=step)
    # unit padding; odd n with even s spends one extra +1 coordinate (m = 1)
    m = 1 if n % 2 and s % 2 == 0 else 0
    return FamilySpec(FamilyKind.PADDED_NONZERO_M, s=s, n=n, m=m, k_start=start, k_step=step)


def classify_congruence(r: int, s: int, n: int, positive: bool) -> Verdict:
    _check(r, s, n)
    if positive:
        return Verdict(
            Status.FINITE,
            "finite: positive solutions with the gcd condition",
            bound=positive_bound(r, s, n),
        )
    if r == 1:
        return Verdict(
            Status.INFINITE,
            "infinite: signed solutions with r = 1",
            witness_family=congruence_witness(s, n),
        )
    return Verdict(Status.FINITE, "finite: signed solutions with r >= 2", bound=signed_coarse_bound(r, s, n))
