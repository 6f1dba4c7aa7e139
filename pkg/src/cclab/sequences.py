"""Sylvester-type sequences and the closed-form size bounds built on them."""

from __future__ import annotations

from enum import Enum
from functools import lru_cache
from math import prod
from typing import Optional

from .model import DomainError


class BoundKind(Enum):
    POSITIVE_MAX = "PositiveMax"
    SIGNED_SHARP = "SignedSharp"
    SIGNED_COARSE = "SignedCoarse"


@lru_cache(maxsize=256)
def _u_terms(r: int, n: int) -> tuple[int, ...]:
    out = [r + 1]
    p = r + 1
    for _ in range(n - 1):
        out.append(r * p + 1)
        p *= out[-1]
    return tuple(out)


def sylvester_u(r: int, n: int) -> int:
    """u_1(r) = r + 1,  u_{n+1}(r) = r * u_1(r) ... u_n(r) + 1."""
    if r < 1 or n < 1:
        raise DomainError(f"sylvester_u needs r >= 1 and n >= 1, got r={r}, n={n}")
    return _u_terms(r, n)[-1]


def sylvester_terms(r: int, n: int) -> tuple[int, ...]:
    if r < 1 or n < 1:
        raise DomainError(f"sylvester_terms needs r >= 1 and n >= 1, got r={r}, n={n}")
    return _u_terms(r, n)


def v_terms(m: int, k: int) -> tuple[int, ...]:
    if m < 1 or k < 1:
        raise DomainError(f"v_seq needs m >= 1 and k >= 1, got m={m}, k={k}")
    out = [m]
    p = m
    for _ in range(k - 1):
        out.append(p + 1)
        p *= out[-1]
    return tuple(out)


def v_seq(m: int, k: int) -> int:
    """v_1(m) = m,  v_k(m) = v_1(m) ... v_{k-1}(m) + 1."""
    return v_terms(m, k)[-1]


def modulus_M_star(n: int) -> int:
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    return prod(sylvester_terms(1, n))


def minimal_M_known(n: int) -> Optional[int]:
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    return {2: 1, 3: 2}.get(n)


def _check(r: int, s: int, n: int) -> None:
    if r < 1:
        raise DomainError(f"r must be positive, got {r}")
    if s == 0:
        raise DomainError("s must be nonzero")
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")


def positive_bound(r: int, s: int, n: int) -> int:
    """Largest coordinate of a nontrivial positive solution with the gcd condition."""
    _check(r, s, n)
    base = sylvester_u(r, n) - s - 1
    return max(base, s * s) if s > 0 else max(base, -s)


def signed_sharp_bound(r: int, s: int, n: int) -> int:
    _check(r, s, n)
    c = prod((n + 2 - j) ** (2 ** (n - 1 - j)) for j in range(1, n))
    return r ** (2 ** (n - 1)) * c + abs(s)


def signed_coarse_bound(r: int, s: int, n: int) -> int:
    _check(r, s, n)
    return (r * (n + 1)) ** (2 ** (n - 1)) + abs(s)


def bound(kind: BoundKind, r: int, s: int, n: int) -> int:
    return {
        BoundKind.POSITIVE_MAX: positive_bound,
        BoundKind.SIGNED_SHARP: signed_sharp_bound,
        BoundKind.SIGNED_COARSE: signed_coarse_bound,
    }[kind](r, s, n)
