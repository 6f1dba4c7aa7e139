"""Explicit infinite families of solutions.

Each generator returns one tuple per parameter value ``k``; the tuples are
witnesses that a solution set is infinite and always re-verify through
:func:`cclab.model.residual_m`.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from .model import DomainError, canonical, residual_m
from .sequences import sylvester_terms, v_terms


class FamilyKind(Enum):
    M0_GENERAL = "m0"
    PAIR = "pair"
    TRIPLE = "triple"
    EXTREMAL_POSITIVE = "extremal"
    PADDED_NONZERO_M = "padded"


def family_m0(n: int, s: int, k: int) -> tuple[int, ...]:
    """``(-v_1(k), v_2(k), ..., v_{n-1}(k), v_n(k) + s - 1)``; residual 0 for r = 1."""
    if n < 3:
        raise DomainError("family_m0 needs n >= 3; use family_pair for n = 2")
    if s == 0:
        raise DomainError("s must be nonzero")
    if k < 2:
        raise DomainError(f"family_m0 needs k >= 2, got {k}")
    v = v_terms(k, n)
    last = v[-1] + s - 1
    if abs(last) < 2:
        raise DomainError(f"k={k}, s={s} gives last coordinate {last}")
    return (-v[0],) + v[1:-1] + (last,)


def family_pair(s: int, k: int) -> tuple[int, int]:
    if s == 0:
        raise DomainError("s must be nonzero")
    if k < abs(s) + 2:
        raise DomainError(f"family_pair needs k >= |s| + 2, got k={k}, s={s}")
    return (-k, k + s)


def family_triple(s: int, k: int) -> tuple[int, int, int]:
    if s % 2 == 0:
        raise DomainError(f"family_triple needs odd s, got {s}")
    if k < 2:
        raise DomainError(f"family_triple needs k >= 2, got {k}")
    last = k * (k + 1) + s
    if abs(last) < 2:
        raise DomainError(f"k={k}, s={s} gives last coordinate {last}")
    return (-k, k + 1, last)


def family_extremal_positive(r: int, s: int, n: int) -> tuple[int, ...]:
    """``(u_1(r), ..., u_{n-1}(r), u_n(r) - s - 1)``, a positive solution with m = 1."""
    if r < 1 or s == 0 or n < 2:
        raise DomainError(f"bad parameters r={r}, s={s}, n={n}")
    u = sylvester_terms(r, n)
    last = u[-1] - s - 1
    if last < 2:
        raise DomainError(f"last coordinate u_n(r) - s - 1 = {last} is below 2")
    return u[:-1] + (last,)


def in_nonzero_m_region(s: int, m: int, n: int) -> bool:
    return abs(m) <= n - 2 or (m == n - 1 and s == 1) or (m == -(n - 1) and s == (-1) ** (n - 1))


def family_nonzero_m(s: int, m: int, n: int, k: int) -> tuple[int, ...]:
    """A length-n solution with r = 1 and residual ``m``.

    ``|m|`` coordinates equal to ``sign(m)`` bring the residual to 0 (each
    flips s by that sign); ``(+1, -1)`` pairs then shrink the core to length
    2 or 3 (each flips s), where the pair family or the m = 0 family applies.
    A core of length 1 is free and takes the value ``k``.
    """
    if s == 0:
        raise DomainError("s must be nonzero")
    if n < 2:
        raise DomainError("n must be at least 2")
    if not in_nonzero_m_region(s, m, n):
        raise DomainError(f"(s={s}, m={m}, n={n}) has only finitely many solutions")
    sign = 1 if m > 0 else -1
    units = [sign] * abs(m)
    s_core = s * sign ** abs(m)
    core_n = n - abs(m)
    if core_n == 1:
        if k == 0:
            raise DomainError("k must be nonzero")
        assert s_core == 1
        core: tuple[int, ...] = (k,)
    else:
        while core_n > 3:
            units += [1, -1]
            s_core = -s_core
            core_n -= 2
        core = family_pair(s_core, k) if core_n == 2 else family_m0(3, s_core, k)
    return canonical(core + tuple(units))


@dataclass(frozen=True)
class FamilySpec:
    """A parametrised family: ``instance(j)`` uses ``k = k_start + j * k_step``."""

    kind: FamilyKind
    s: int
    n: int
    r: int = 1
    m: int = 0
    k_start: int = 0
    k_step: int = 1

    def k(self, j: int) -> int:
        return self.k_start + j * self.k_step

    def instance(self, j: int) -> tuple[int, ...]:
        k = self.k(j)
        if self.kind is FamilyKind.M0_GENERAL:
            return family_m0(self.n, self.s, k)
        if self.kind is FamilyKind.PAIR:
            return family_pair(self.s, k)
        if self.kind is FamilyKind.TRIPLE:
            return family_triple(self.s, k)
        if self.kind is FamilyKind.PADDED_NONZERO_M:
            return family_nonzero_m(self.s, self.m, self.n, k)
        raise DomainError("the extremal family has one member per (r, s, n)")

    def generate(self, count: int) -> Iterator[tuple[int, ...]]:
        for j in range(count):
            yield self.instance(j)

    def describe(self) -> dict:
        return {
            "kind": self.kind.value,
            "r": self.r,
            "s": self.s,
            "n": self.n,
            "m": self.m,
            "k_start": self.k_start,
            "k_step": self.k_step,
        }


def first_k(low: int, step: int, residue: int = 0) -> int:
    """Smallest k >= low with k == residue (mod step)."""
    if step <= 1:
        return low
    return low + (residue - low) % step


def generate(kind: str, r: int, s: int, n: int, k: int, count: int = 1, m: Optional[int] = None):
    """CLI helper: ``count`` consecutive members starting at parameter ``k``."""
    kind = FamilyKind(kind)
    out = []
    for j in range(count):
        kk = k + j
        if kind is FamilyKind.M0_GENERAL:
            t = family_m0(n, s, kk)
            mm = 0
        elif kind is FamilyKind.PAIR:
            t = family_pair(s, kk)
            mm = 0
        elif kind is FamilyKind.TRIPLE:
            t = family_triple(s, kk)
            mm = 0
        elif kind is FamilyKind.PADDED_NONZERO_M:
            mm = 0 if m is None else m
            t = family_nonzero_m(s, mm, n, kk)
        else:
            t = family_extremal_positive(r, s, n)
            mm = 1
        rr = r if kind is FamilyKind.EXTREMAL_POSITIVE else 1
        res = residual_m(rr, s, t)
        assert res == mm, (t, res, mm)
        out.append((tuple(t), mm))
        if kind is FamilyKind.EXTREMAL_POSITIVE:
            break
    return out
