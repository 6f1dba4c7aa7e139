"""Bounded exhaustive enumerators for positive and signed solutions.

Every enumerator walks tuples in canonical order (``|x|`` non-decreasing,
``+`` before ``-`` on ties), fixes the first ``n - 1`` coordinates and
solves the last one exactly from

    x_n * (m*P - r*b) = r*P - s,    P = x_1...x_{n-1},  b = P * sum(1/x_i).

The brute-force :func:`oracle_enumerate` shares none of that machinery and
is the ground truth the enumerators are checked against.
"""

from __future__ import annotations

import itertools
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import ceil, floor, gcd, prod
from typing import Iterable, Optional, Sequence

from .model import (
    DomainError,
    canonical,
    canonical_key,
    check_params,
    cyclic_holds,
    gcd_condition,
    is_nontrivial,
    residual_m,
)
from .sequences import (
    positive_bound,
    signed_coarse_bound,
    signed_sharp_bound,
    sylvester_terms,
    sylvester_u,
)

# a degenerate (free last coordinate) prefix is expanded over at most this many values
MAX_FREE_EXPANSION = 1_000_000


class Positivity(Enum):
    POSITIVE = "positive"
    SIGNED = "signed"


@dataclass(frozen=True)
class SearchOptions:
    positivity: Positivity = Positivity.POSITIVE
    min_abs: int = 1
    require_gcd_condition: bool = False
    require_nontrivial: bool = False
    m_fixed: Optional[int] = None
    m_nonzero: bool = False
    hard_cap: Optional[int] = None

    def __post_init__(self):
        if self.min_abs < 1:
            raise DomainError(f"min_abs must be >= 1, got {self.min_abs}")
        if self.hard_cap is not None and self.hard_cap < self.min_abs:
            raise DomainError("hard_cap must be at least min_abs")
        if self.m_fixed is not None and self.m_nonzero and self.m_fixed == 0:
            raise DomainError("m = 0 contradicts the nonzero-m filter")

    def accepts_m(self, m: int) -> bool:
        if self.m_fixed is not None and m != self.m_fixed:
            return False
        if self.m_nonzero and m == 0:
            return False
        return True

    def accepts(self, t: Sequence[int], s: int) -> bool:
        if self.require_nontrivial and not is_nontrivial(t):
            return False
        if self.require_gcd_condition and not gcd_condition(t, s):
            return False
        return True


@dataclass
class SearchReport:
    kind: str
    r: int
    s: int
    n: int
    solutions: list[tuple[tuple[int, ...], int]]
    nodes_visited: int
    nodes_pruned: int
    bound_used: int
    complete: bool
    elapsed: float
    theorem_bound: int = 0
    # prefixes whose last coordinate is unconstrained (infinitely many solutions)
    degenerate_nodes: int = 0
    m_fixed: Optional[int] = None

    def tuples(self) -> list[tuple[int, ...]]:
        return [t for t, _ in self.solutions]


@dataclass
class _Stats:
    nodes: int = 0
    pruned: int = 0
    degenerate: int = 0

    def add(self, other: "_Stats") -> None:
        self.nodes += other.nodes
        self.pruned += other.pruned
        self.degenerate += other.degenerate


@dataclass(frozen=True)
class _Ctx:
    r: int
    s: int
    n: int
    bound: int
    opts: SearchOptions


@dataclass
class _Out:
    solutions: list = field(default_factory=list)
    stats: _Stats = field(default_factory=_Stats)


def _int_range(lo: Fraction, hi: Fraction) -> range:
    if lo > hi:
        lo, hi = hi, lo
    return range(ceil(lo), floor(hi) + 1)


# ---------------------------------------------------------------------------
# positive search


def general_positive_bound(r: int, s: int, n: int) -> int:
    """Coordinate bound for positive Diophantine solutions without side conditions.

    Covers every solution except those through a prefix with
    ``r * q_1...q_{n-1} == s``, whose last coordinate is free.
    """
    u = sylvester_u(r, n)
    return max(u - 2, s) if s > 0 else u - s - 1


def _positive_children(ctx: _Ctx, prefix: tuple[int, ...], P: int, b: int, stats: _Stats):
    r, s, n, B = ctx.r, ctx.s, ctx.n, ctx.bound
    opts = ctx.opts
    t = n - len(prefix)  # coordinates still to place, this one included
    lo = max(opts.min_abs, prefix[-1] if prefix else 1)
    neg_s = max(0, -s)
    q = lo
    while q <= B:
        if r * q > s:
            # every completion has m >= 1; stop once the residual cannot reach 1
            qt = q ** (t - 1)
            if r * b * q * qt + r * t * P * qt + neg_s < P * q * qt:
                stats.pruned += 1
                break
        if opts.require_gcd_condition and q > 1:
            if gcd(q, s) != 1 or gcd(q, P) != 1:
                stats.pruned += 1
                q += 1
                continue
        yield q
        q += 1


def _positive_last(ctx: _Ctx, prefix, P, b, out: _Out) -> None:
    r, s, B = ctx.r, ctx.s, ctx.bound
    opts = ctx.opts
    lo = max(opts.min_abs, prefix[-1])
    if lo > B:
        return
    N = r * P - s
    if N == 0:
        _free_last(ctx, prefix, P, b, range(lo, B + 1), out)
        return
    for m in _int_range(Fraction(r * b * lo + N, P * lo), Fraction(r * b * B + N, P * B)):
        if not opts.accepts_m(m):
            continue
        den = m * P - r * b
        if den == 0:
            continue
        q, rem = divmod(N, den)
        if rem or q < lo or q > B:
            continue
        _emit(ctx, prefix + (q,), m, out)


def _free_last(ctx: _Ctx, prefix, P, b, values: Iterable[int], out: _Out) -> None:
    # r*P == s: the residual does not depend on the last coordinate
    r = ctx.r
    if (r * b) % P:
        return
    m = r * b // P
    if not ctx.opts.accepts_m(m):
        return
    if len(values) > MAX_FREE_EXPANSION:
        raise DomainError(
            f"prefix {prefix} leaves the last coordinate free over {len(values)} values; lower the cap"
        )
    emitted = 0
    for v in values:
        emitted += _emit(ctx, prefix + (v,), m, out)
    if emitted:
        out.stats.degenerate += 1


def _emit(ctx: _Ctx, t: tuple[int, ...], m: int, out: _Out) -> int:
    if not ctx.opts.accepts(t, ctx.s):
        return 0
    assert residual_m(ctx.r, ctx.s, t) == m, (t, m)
    out.solutions.append((canonical(t), m))
    return 1


def _positive_explore(ctx: _Ctx, prefix, P, b, out: _Out) -> None:
    out.stats.nodes += 1
    if len(prefix) == ctx.n - 1:
        _positive_last(ctx, prefix, P, b, out)
        return
    for q in _positive_children(ctx, prefix, P, b, out.stats):
        _positive_explore(ctx, prefix + (q,), P * q, b * q + P, out)


def _positive_task(args) -> _Out:
    ctx, q = args
    out = _Out()
    _positive_explore(ctx, (q,), q, 1, out)
    return out


# ---------------------------------------------------------------------------
# signed search


def _signed_values(lo: int, hi: int, after: Optional[int]):
    # canonical order: 2, -2, 3, -3, ...; start no earlier than `after`
    for a in range(lo, hi + 1):
        for v in (a, -a):
            if after is not None and canonical_key(v) < canonical_key(after):
                continue
            yield v


def _degenerate_prefix(ctx: _Ctx, P: int, b: int, tail: int) -> bool:
    """Whether some completion has a vanishing partial residual.

    That happens when ``r * sum(prefix)`` is an admissible integer m and
    the remaining coordinates can satisfy the m = 0 equation scaled by
    ``r * P``; such prefixes may carry infinitely many solutions.
    """
    r, s = ctx.r, ctx.s
    if (r * b) % P:
        return False
    m = r * b // P
    if m == 0 or not ctx.opts.accepts_m(m):
        return False
    if tail == 1:
        return r * P == s
    return s % (r * P) == 0


def _signed_children(ctx: _Ctx, prefix, P, b, stats: _Stats):
    r, s, n, B = ctx.r, ctx.s, ctx.n, ctx.bound
    opts = ctx.opts
    i = len(prefix) + 1
    if i == 1:
        m_min = abs(opts.m_fixed) if opts.m_fixed is not None else 1
        chain = r * (n + 1) // m_min
    else:
        chain = r * abs(P) * (n - i + 2)
    hi = max(abs(s), chain)
    if prefix and _degenerate_prefix(ctx, P, b, n - len(prefix)):
        stats.degenerate += 1
        hi = B
    if hi < B:
        stats.pruned += 1
    else:
        hi = B
    lo = max(opts.min_abs, abs(prefix[-1]) if prefix else 1)
    for v in _signed_values(lo, hi, prefix[-1] if prefix else None):
        if opts.require_gcd_condition and (gcd(v, s) != 1 or gcd(v, P) != 1):
            stats.pruned += 1
            continue
        yield v


def _signed_last(ctx: _Ctx, prefix, P, b, out: _Out) -> None:
    r, s, B = ctx.r, ctx.s, ctx.bound
    opts = ctx.opts
    lo = max(opts.min_abs, abs(prefix[-1]))
    if lo > B:
        return
    N = r * P - s
    if N == 0:
        if _degenerate_prefix(ctx, P, b, 1):
            values = list(_signed_values(lo, B, prefix[-1]))
            _free_last(ctx, prefix, P, b, values, out)
        return
    c = Fraction(N, P * lo)
    centre = Fraction(r * b, P)
    if opts.m_fixed is not None:
        ms = [opts.m_fixed]
    else:
        ms = _int_range(centre - abs(c), centre + abs(c))
    last_key = canonical_key(prefix[-1])
    for m in ms:
        if not opts.accepts_m(m):
            continue
        den = m * P - r * b
        if den == 0:
            continue
        x, rem = divmod(N, den)
        if rem or abs(x) < lo or abs(x) > B or canonical_key(x) < last_key:
            continue
        _emit(ctx, prefix + (x,), m, out)


def _signed_explore(ctx: _Ctx, prefix, P, b, out: _Out) -> None:
    out.stats.nodes += 1
    if len(prefix) == ctx.n - 1:
        _signed_last(ctx, prefix, P, b, out)
        return
    for v in _signed_children(ctx, prefix, P, b, out.stats):
        _signed_explore(ctx, prefix + (v,), P * v, b * v + P, out)


def _signed_task(args) -> _Out:
    ctx, v = args
    out = _Out()
    _signed_explore(ctx, (v,), v, 1, out)
    return out


# ---------------------------------------------------------------------------
# split / merge


def _run_split(ctx: _Ctx, children, task, jobs: int) -> _Out:
    """Explore each top-level branch independently and merge the results.

    The root node and its pruning are counted here; the subtrees are
    counted by the tasks, so totals do not depend on ``jobs``.
    """
    root = _Out()
    root.stats.nodes += 1
    firsts = list(children(ctx, (), 1, 0, root.stats))
    args = [(ctx, v) for v in firsts]
    if jobs > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            parts = list(pool.map(task, args, chunksize=max(1, len(args) // (4 * jobs))))
    else:
        parts = [task(a) for a in args]
    for part in parts:
        root.solutions.extend(part.solutions)
        root.stats.add(part.stats)
    root.solutions = sorted(set(root.solutions), key=_solution_key)
    return root


def _solution_key(item):
    t, m = item
    return (len(t), [canonical_key(v) for v in t], m)


def enumerate_positive(r: int, s: int, n: int, opts: Optional[SearchOptions] = None, *, jobs: int = 1) -> SearchReport:
    """All positive solutions ``1 <= q_1 <= ... <= q_n`` with an integral residual.

    With both the gcd condition and nontriviality requested these are exactly
    the positive solutions of the cyclic congruence system, and the search box
    is :func:`positive_bound`. Otherwise the box is
    :func:`general_positive_bound`.
    """
    opts = opts or SearchOptions(require_gcd_condition=True, require_nontrivial=True)
    check_params(r, s)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if opts.positivity is not Positivity.POSITIVE:
        raise DomainError("enumerate_positive needs PositiveOnly options")
    if opts.require_gcd_condition and opts.require_nontrivial:
        theorem = positive_bound(r, s, n)
    else:
        theorem = general_positive_bound(r, s, n)
    B = theorem if opts.hard_cap is None else opts.hard_cap
    ctx = _Ctx(r, s, n, B, opts)
    t0 = time.perf_counter()
    out = _run_split(ctx, _positive_children, _positive_task, jobs)
    return SearchReport(
        kind="positive",
        r=r,
        s=s,
        n=n,
        solutions=out.solutions,
        nodes_visited=out.stats.nodes,
        nodes_pruned=out.stats.pruned,
        bound_used=B,
        complete=B >= theorem and out.stats.degenerate == 0,
        elapsed=time.perf_counter() - t0,
        theorem_bound=theorem,
        degenerate_nodes=out.stats.degenerate,
        m_fixed=opts.m_fixed,
    )


def enumerate_signed(r: int, s: int, n: int, opts: Optional[SearchOptions] = None, *, jobs: int = 1) -> SearchReport:
    """Signed solutions with every ``|x_i| >= min_abs >= 2`` and nonzero integral m."""
    opts = opts or SearchOptions(positivity=Positivity.SIGNED, min_abs=2, m_nonzero=True)
    check_params(r, s)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    if opts.positivity is not Positivity.SIGNED:
        raise DomainError("enumerate_signed needs Signed options")
    if opts.min_abs < 2:
        raise DomainError("enumerate_signed needs min_abs >= 2")
    if not opts.m_nonzero and (opts.m_fixed is None or opts.m_fixed == 0):
        raise DomainError("enumerate_signed needs a nonzero m filter")
    theorem = signed_sharp_bound(r, s, n)
    B = theorem if opts.hard_cap is None else opts.hard_cap
    ctx = _Ctx(r, s, n, B, opts)
    t0 = time.perf_counter()
    out = _run_split(ctx, _signed_children, _signed_task, jobs)
    return SearchReport(
        kind="signed",
        r=r,
        s=s,
        n=n,
        solutions=out.solutions,
        nodes_visited=out.stats.nodes,
        nodes_pruned=out.stats.pruned,
        bound_used=B,
        complete=B >= theorem and out.stats.degenerate == 0,
        elapsed=time.perf_counter() - t0,
        theorem_bound=theorem,
        degenerate_nodes=out.stats.degenerate,
        m_fixed=opts.m_fixed,
    )


# ---------------------------------------------------------------------------
# unit-coordinate reduction


def _unit_paddings(k: int):
    """Multisets of k values in {+1, -1}, as (count of -1, sign of product, sum)."""
    for neg in range(k + 1):
        yield neg, (-1) ** neg, (k - neg) - neg


def enumerate_signed_full(
    r: int,
    s: int,
    n: int,
    *,
    m: Optional[int] = None,
    require_gcd_condition: bool = False,
    hard_cap: Optional[int] = None,
    jobs: int = 1,
) -> SearchReport:
    """Every nonzero-integer solution, ``+-1`` coordinates included.

    Strips ``k`` unit coordinates with product ``sigma`` and sum ``E``; the
    core of length ``n - k`` then solves the same equation with
    ``s' = sigma * s`` and ``m' = m - r * E``. Cores of length >= 2 come
    from :func:`enumerate_signed`, length-1 cores from ``x | (r - s')``.
    With ``m`` None every integral m is collected.
    """
    check_params(r, s)
    if n < 2:
        raise DomainError(f"n must be at least 2, got {n}")
    t0 = time.perf_counter()
    found: set[tuple[tuple[int, ...], int]] = set()
    nodes = pruned = degenerate = 0
    # r = 1 admits infinite m = 0 cores, which a nonzero-m search never visits
    complete = not (m is None and r == 1)
    for k in range(n + 1):
        core_n = n - k
        for neg, sigma, E in _unit_paddings(k):
            units = (1,) * (k - neg) + (-1,) * neg
            s_core = sigma * s
            m_core = None if m is None else m - r * E
            cores: list[tuple[tuple[int, ...], int]] = []
            if core_n == 0:
                cores = [((), None)]
            elif core_n == 1:
                d = r - s_core
                if d == 0:
                    # x is free: r/x - s'/x == 0 for every x
                    if m_core in (None, 0):
                        degenerate += 1
                        complete = False
                    continue
                for a in _divisors(abs(d)):
                    if a < 2 or (hard_cap is not None and a > hard_cap):
                        continue
                    for x in (a, -a):
                        mc = d // x
                        if m_core is None or mc == m_core:
                            cores.append(((x,), mc))
            else:
                if m_core == 0:
                    if r == 1:
                        # m = 0 cores of length >= 2 exist in infinite families
                        degenerate += 1
                        complete = False
                    continue
                opts = SearchOptions(
                    positivity=Positivity.SIGNED,
                    min_abs=2,
                    m_fixed=m_core,
                    m_nonzero=m_core is None,
                    require_gcd_condition=require_gcd_condition,
                    hard_cap=hard_cap,
                )
                rep = enumerate_signed(r, s_core, core_n, opts, jobs=jobs)
                nodes += rep.nodes_visited
                pruned += rep.nodes_pruned
                degenerate += rep.degenerate_nodes
                complete = complete and rep.complete
                cores = rep.solutions
            for core, _ in cores:
                t = canonical(core + units)
                if require_gcd_condition and not gcd_condition(t, s):
                    continue
                res = residual_m(r, s, t)
                assert res.denominator == 1, t
                if m is not None and res != m:
                    continue
                found.add((t, res.numerator))
    theorem = signed_sharp_bound(r, s, n)
    return SearchReport(
        kind="signed-full",
        r=r,
        s=s,
        n=n,
        solutions=sorted(found, key=_solution_key),
        nodes_visited=nodes,
        nodes_pruned=pruned,
        bound_used=theorem if hard_cap is None else hard_cap,
        complete=complete,
        elapsed=time.perf_counter() - t0,
        theorem_bound=theorem,
        degenerate_nodes=degenerate,
        m_fixed=m,
    )


def enumerate_signed_congruence(r: int, s: int, n: int, *, jobs: int = 1) -> SearchReport:
    """All signed congruence solutions with the gcd condition, for ``r >= 2``."""
    check_params(r, s)
    if r < 2:
        raise DomainError("signed congruence solutions are finite only for r >= 2")
    rep = enumerate_signed_full(r, s, n, require_gcd_condition=True, jobs=jobs)
    for t, _ in rep.solutions:
        assert cyclic_holds(r, s, t), t
    rep.kind = "signed-congruence"
    rep.theorem_bound = signed_coarse_bound(r, s, n)
    rep.bound_used = rep.theorem_bound
    return rep


def _divisors(a: int) -> list[int]:
    out = []
    d = 1
    while d * d <= a:
        if a % d == 0:
            out.append(d)
            if d * d != a:
                out.append(a // d)
        d += 1
    return sorted(out)


# ---------------------------------------------------------------------------
# Kellogg-type bound


class KelloggHypothesisError(DomainError):
    """The p-list does not meet the hypotheses of the Kellogg-type bound."""


def verify_kellogg_bounds(r: int, p: Sequence[int]) -> tuple[Fraction, bool]:
    """Solve ``sum(1/p_i) + 1/alpha = 1/r`` and test the two Kellogg bounds.

    Returns ``(alpha, ok)`` where ok means both
    ``alpha <= u_{k+1}(r) - 1`` and
    ``p_1...p_k (alpha + 1) <= u_1(r)...u_{k+1}(r)`` hold.
    """
    p = [int(v) for v in p]
    if r < 1 or not p or any(v < 1 for v in p):
        raise KelloggHypothesisError("need r >= 1 and a nonempty list of positive integers")
    gap = Fraction(1, r) - sum(Fraction(1, v) for v in p)
    if gap <= 0:
        raise KelloggHypothesisError(f"sum of 1/p_i is not below 1/{r}")
    alpha = 1 / gap
    if alpha < max(p):
        raise KelloggHypothesisError(f"alpha = {alpha} is smaller than max(p) = {max(p)}")
    u = sylvester_terms(r, len(p) + 1)
    ok = alpha <= u[-1] - 1 and prod(p) * (alpha + 1) <= prod(u)
    return alpha, ok


# ---------------------------------------------------------------------------
# oracle


def oracle_enumerate(
    r: int,
    s: int,
    n: int,
    box,
    *,
    congruence: bool = False,
    require_gcd_condition: bool = False,
    require_nontrivial: bool = False,
    m: Optional[int] = None,
    m_nonzero: bool = False,
) -> list[tuple[tuple[int, ...], Fraction]]:
    """Test every tuple of the box, no pruning.

    ``box`` is either one iterable of values shared by all coordinates or a
    sequence of ``n`` per-coordinate iterables. The predicate is the
    congruence system when ``congruence`` is set, otherwise an integral
    residual. Returns ``(canonical tuple, residual)`` pairs, sorted.
    """
    boxes = list(box)
    if boxes and not isinstance(boxes[0], int):
        if len(boxes) != n:
            raise DomainError("per-coordinate box needs n ranges")
        per = [sorted({int(v) for v in b if v != 0}, key=canonical_key) for b in boxes]
        tuples = itertools.product(*per)
    else:
        values = sorted({int(v) for v in boxes if v != 0}, key=canonical_key)
        # every predicate is symmetric, so multisets cover the box
        tuples = itertools.combinations_with_replacement(values, n)
    found = {}
    for t in tuples:
        res = residual_m(r, s, t)
        if congruence:
            if not cyclic_holds(r, s, t):
                continue
        elif res.denominator != 1:
            continue
        if res.denominator == 1:
            if m is not None and res != m:
                continue
            if m_nonzero and res == 0:
                continue
        elif m is not None or m_nonzero:
            continue
        if require_gcd_condition and not gcd_condition(t, s):
            continue
        if require_nontrivial and not is_nontrivial(t):
            continue
        found[canonical(t)] = res
    return sorted(found.items(), key=lambda kv: [canonical_key(v) for v in kv[0]])


def oracle_solve_last(r: int, s: int, n: int, width: int, *, m: Optional[int] = None, min_abs: int = 1):
    """Every Diophantine solution with ``min_abs <= |x_i| <= width``.

    Exhausts all canonical prefixes of length ``n - 1`` without pruning and
    solves the last coordinate linearly, vectorised with numpy. Returns
    ``(solutions, free_prefixes)``; a free prefix leaves the last coordinate
    unconstrained. Needs ``r * width**n`` well inside int64.
    """
    import numpy as np

    if r * (width ** n) * 8 + abs(s) >= 2 ** 62:
        raise DomainError("box too wide for int64 arithmetic")
    vals = np.array([v for a in range(min_abs, width + 1) for v in (a, -a)], dtype=np.int64)
    keys = np.abs(vals) * 2 + (vals < 0)
    order = np.argsort(keys, kind="stable")
    vals, keys = vals[order], keys[order]
    solutions: set = set()
    free: list = []
    ms = None if m is None else np.int64(m)

    def prefixes(depth, start, pref):
        if depth == n - 2:
            yield pref, start
            return
        for idx in range(start, len(vals)):
            yield from prefixes(depth + 1, idx, pref + (int(vals[idx]),))

    for pref, start in prefixes(0, 0, ()):
        # last prefix coordinate vectorised over vals[start:]
        last = vals[start:]
        lkeys = keys[start:]
        P0 = prod(pref)
        b0 = P0 * sum(Fraction(1, v) for v in pref) if pref else Fraction(0)
        b0 = int(b0)
        P = P0 * last
        b = b0 * last + P0
        N = r * P - s
        if ms is None:
            # m must be integral: P*x | r*b*x + N, so enumerate x instead below
            _oracle_all_m(r, s, pref, last, lkeys, P, b, N, width, vals, keys, solutions, free)
            continue
        den = ms * P - r * b
        zero = den == 0
        for j in np.nonzero(zero & (N == 0))[0]:
            free.append(pref + (int(last[j]),))
        ok = ~zero
        den_ok = np.where(ok, den, 1)
        x = N // den_ok
        good = ok & (N % den_ok == 0) & (x != 0) & (np.abs(x) <= width) & (np.abs(x) >= min_abs)
        xkeys = np.abs(x) * 2 + (x < 0)
        good &= xkeys >= lkeys
        for j in np.nonzero(good)[0]:
            solutions.add((canonical(pref + (int(last[j]), int(x[j]))), int(m)))
    return sorted(solutions, key=_solution_key), free


def _oracle_all_m(r, s, pref, last, lkeys, P, b, N, width, vals, keys, solutions, free):
    # integral m forces x | N; scan the divisor candidates of each row directly
    for j in range(len(last)):
        Pj, bj, Nj = int(P[j]), int(b[j]), int(N[j])
        lk = int(lkeys[j])
        if Nj == 0:
            if (r * bj) % Pj == 0:
                free.append(pref + (int(last[j]),))
            continue
        cand = vals[(keys >= lk) & (Nj % vals == 0)]
        for x in cand.tolist():
            num = r * bj * x + Nj
            if num % (Pj * x) == 0:
                solutions.add((canonical(pref + (int(last[j]), x)), num // (Pj * x)))
