"""Domain records and exact verifiers for cyclic congruence systems.

Tuples are plain ``tuple[int, ...]``; reciprocal sums are ``Fraction``.
A cyclic system ``(r, s)`` of length ``n`` asks, for every coordinate,

    r * (q_1 * ... * q_n / q_i)  ==  s   (mod |q_i|)

and the associated Diophantine residual is

    m = r * (1/x_1 + ... + 1/x_n) - s / (x_1 * ... * x_n).
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod
from typing import Iterable, Optional, Sequence


class DomainError(ValueError):
    """Parameters or tuples outside the domain of an operation."""


def canonical_key(v: int) -> tuple[int, bool]:
    # |v| first, then + before -
    return (abs(v), v < 0)


def canonical(t: Iterable[int]) -> tuple[int, ...]:
    return tuple(sorted(t, key=canonical_key))


def require_nonzero(t: Sequence[int]) -> tuple[int, ...]:
    t = tuple(int(v) for v in t)
    if not t:
        raise DomainError("tuple must have at least one entry")
    if any(v == 0 for v in t):
        raise DomainError(f"tuple entries must be nonzero: {t}")
    return t


def check_params(r: int, s: int) -> None:
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    if s == 0:
        raise DomainError("s must be nonzero")
    if gcd(r, s) != 1:
        raise DomainError(f"gcd(r, s) must be 1, got gcd({r}, {s}) = {gcd(r, s)}")


@dataclass(frozen=True)
class CyclicSystem:
    r: int
    s: int
    n: int

    def __post_init__(self):
        check_params(self.r, self.s)
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")


@dataclass(frozen=True)
class DioInstance:
    r: int
    s: int
    m: int
    n: int

    def __post_init__(self):
        check_params(self.r, self.s)
        if self.n < 2:
            raise DomainError(f"n must be at least 2, got {self.n}")


def reciprocal_sum(t: Sequence[int]) -> Fraction:
    t = require_nonzero(t)
    # common denominator keeps this to one reduction
    p = prod(t)
    return Fraction(sum(p // v for v in t), p)


def residual_m(r: int, s: int, t: Sequence[int]) -> Fraction:
    """Exact value of ``r * sum(1/t_i) - s / prod(t_i)``."""
    t = require_nonzero(t)
    p = prod(t)
    return Fraction(r * sum(p // v for v in t) - s, p)


def check_cyclic(sys: CyclicSystem, q: Sequence[int]) -> bool:
    q = require_nonzero(q)
    if len(q) != sys.n:
        raise DomainError(f"expected {sys.n} entries, got {len(q)}")
    return cyclic_holds(sys.r, sys.s, q)


def cyclic_holds(r: int, s: int, q: Sequence[int]) -> bool:
    """Congruence check without the length contract of :func:`check_cyclic`."""
    p = prod(q)
    for v in q:
        mod = abs(v)
        if mod == 1:
            continue
        if (r * (p // v) - s) % mod:
            return False
    return True


def gcd_condition(q: Sequence[int], s: int) -> bool:
    return gcd(prod(q), s) == 1


def pairwise_coprime(q: Sequence[int]) -> bool:
    q = list(q)
    for i in range(len(q)):
        for j in range(i + 1, len(q)):
            if gcd(q[i], q[j]) != 1:
                return False
    return True


def is_nontrivial(q: Sequence[int]) -> bool:
    return sum(1 for v in q if abs(v) >= 2) >= 2


def to_diophantine(sys: CyclicSystem, q: Sequence[int]) -> Optional[int]:
    """The integer ``m`` attached to a congruence solution, or None.

    Under the gcd condition every congruence solution has an integral
    residual; None only shows up when that precondition is violated
    (for instance ``(5, 25)`` with ``(r, s) = (1, -20)``).
    """
    q = require_nonzero(q)
    if len(q) != sys.n:
        raise DomainError(f"expected {sys.n} entries, got {len(q)}")
    m = residual_m(sys.r, sys.s, q)
    if m.denominator != 1:
        return None
    return m.numerator


def to_congruence(inst: DioInstance, x: Sequence[int]) -> bool:
    x = require_nonzero(x)
    if len(x) != inst.n:
        raise DomainError(f"expected {inst.n} entries, got {len(x)}")
    if residual_m(inst.r, inst.s, x) != inst.m:
        raise DomainError(f"{x} does not solve the equation with m = {inst.m}")
    # an integral residual forces every congruence, gcd condition or not
    ok = cyclic_holds(inst.r, inst.s, x)
    assert ok, f"integral residual without congruence solution: {x}"
    return ok


def check_hypersurface(r: int, s: int, m: int, x: Sequence[int]) -> bool:
    """Cleared-denominator form ``r*sum_i prod_{j!=i} x_j - s == m*prod x``.

    Zero coordinates are allowed here. Away from zeros this agrees with an
    integral :func:`residual_m` equal to ``m``.
    """
    x = [int(v) for v in x]
    n = len(x)
    lhs = 0
    for i in range(n):
        lhs += prod(x[j] for j in range(n) if j != i)
    return r * lhs - s == m * prod(x)


def integral_residual(r: int, s: int, t: Sequence[int]) -> Optional[int]:
    m = residual_m(r, s, t)
    return m.numerator if m.denominator == 1 else None


@dataclass
class EquivalenceAudit:
    """Counts from an exhaustive sweep comparing the congruence and Diophantine forms."""

    r: int
    s: int
    n: int
    box: int
    tuples: int = 0
    congruence: int = 0
    diophantine: int = 0
    # (congruence and gcd) != (integral residual and gcd)
    equivalence_violations: int = 0
    # integral residual without the congruence system
    containment_violations: int = 0
    # congruence solution where gcd condition != pairwise coprime
    coprime_violations: int = 0
    # gcd(m * prod q, r) != 1 for a congruence solution with the gcd condition;
    # m * prod q is the cleared numerator
    m_coprime_violations: int = 0
    congruence_only: set = field(default_factory=set)

    @property
    def ok(self) -> bool:
        return not (
            self.equivalence_violations
            or self.containment_violations
            or self.coprime_violations
            or self.m_coprime_violations
        )


def audit_congruence_equivalence(r: int, s: int, n: int, box: int) -> EquivalenceAudit:
    """Check every ordered tuple with ``0 < |q_i| <= box``."""
    check_params(r, s)
    values = [v for a in range(1, box + 1) for v in (a, -a)]
    audit = EquivalenceAudit(r, s, n, box)
    for q in itertools.product(values, repeat=n):
        audit.tuples += 1
        p = prod(q)
        num = r * sum(p // v for v in q) - s
        integral = num % p == 0
        cyc = cyclic_holds(r, s, q)
        g = gcd(p, s) == 1
        audit.congruence += cyc
        audit.diophantine += integral
        if (cyc and g) != (integral and g):
            audit.equivalence_violations += 1
        if integral and not cyc:
            audit.containment_violations += 1
        if cyc and g != pairwise_coprime(q):
            audit.coprime_violations += 1
        if cyc and g and integral and gcd(num, r) != 1:
            audit.m_coprime_violations += 1
        if cyc and not integral:
            audit.congruence_only.add(canonical(q))
    return audit
