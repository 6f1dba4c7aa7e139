"""Acceptance criteria, one check per criterion.

Run under pytest (a summary line per criterion is printed at the end of the
session) or directly with ``python3 tests/test_acceptance.py``.
"""

from __future__ import annotations

import io
import itertools
import json
import time
from math import gcd

import pytest

from cclab.classify import Status, classify_diophantine
from cclab.cli import run
from cclab.families import family_extremal_positive, family_m0, family_pair, family_triple
from cclab.model import DomainError, residual_m
from cclab.search import (
    KelloggHypothesisError,
    SearchOptions,
    enumerate_positive,
    enumerate_signed,
    enumerate_signed_full,
    oracle_enumerate,
    oracle_solve_last,
    verify_kellogg_bounds,
)
from cclab.sequences import positive_bound, signed_sharp_bound, sylvester_terms, sylvester_u

RESULTS: list[str] = []

GIUGA = SearchOptions(require_gcd_condition=True, require_nontrivial=True)
GIUGA_MIN2 = SearchOptions(min_abs=2, require_gcd_condition=True, require_nontrivial=True)


def report(num: int, ok: bool, detail: str) -> bool:
    line = f"[{'PASS' if ok else 'FAIL'}] criterion {num}: {detail}"
    RESULTS.append(line)
    print(line)
    return ok


def cli_json(*argv: str) -> dict:
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), out=out, err=err)
    assert code == 0, err.getvalue()
    return json.loads(out.getvalue())


def criterion_1() -> bool:
    t0 = time.perf_counter()
    rep = enumerate_positive(1, 1, 2, GIUGA)
    dt = time.perf_counter() - t0
    ok = rep.solutions == [] and rep.complete and dt < 1
    return report(1, ok, f"Giuga n=2 -> {rep.tuples()} complete={rep.complete} in {dt:.3f}s")


def criterion_2() -> bool:
    t0 = time.perf_counter()
    rep = enumerate_positive(1, 1, 3, GIUGA)
    dt = time.perf_counter() - t0
    ok = rep.tuples() == [(2, 3, 5)] and rep.complete and dt < 1
    return report(2, ok, f"Giuga n=3 -> {rep.tuples()} in {dt:.3f}s")


def criterion_3() -> bool:
    t0 = time.perf_counter()
    rep = enumerate_positive(1, 1, 4, GIUGA_MIN2)
    dt = time.perf_counter() - t0
    B = positive_bound(1, 1, 4)
    oracle = oracle_enumerate(1, 1, 4, range(2, B + 1), congruence=True,
                              require_gcd_condition=True, require_nontrivial=True)
    got = rep.tuples()
    biggest = max(max(t) for t in got)
    ok = (
        (2, 3, 7, 41) in got
        and biggest == 41 == sylvester_u(1, 4) - 2
        and got == [t for t, _ in oracle]
        and rep.complete
        and dt < 60
    )
    return report(3, ok, f"Giuga n=4 -> {got}, max {biggest}, oracle agrees={got == [t for t, _ in oracle]}, {dt:.3f}s")


def criterion_4() -> bool:
    t0 = time.perf_counter()
    checked = 0
    ok = True
    for r in (1, 2):
        for s in (1, -1, 3, -3):
            if gcd(r, s) != 1:
                continue
            for n in range(2, 8):
                u = sylvester_u(r, n)
                if u <= s * s or u - s - 1 < 2:
                    continue
                t = family_extremal_positive(r, s, n)
                ok &= residual_m(r, s, t) == 1 and t[-1] == positive_bound(r, s, n)
                checked += 1
    dt = time.perf_counter() - t0
    ok = ok and checked > 0 and dt < 10
    return report(4, ok, f"extremal family attains positive_bound on {checked} (r,s,n) cases in {dt:.3f}s")


def criterion_5() -> bool:
    t0 = time.perf_counter()
    runs = 0
    violations = 0
    remark = False
    for r in (1, 2, 3):
        for s in (1, -1, 2, -2, 3, -3, -20):
            if gcd(r, s) != 1:
                continue
            for n in (2, 3):
                rec = cli_json("verify-lemma21", "-r", str(r), f"-s={s}", "-n", str(n), "--box", "30")
                res = rec["result"]
                runs += 1
                violations += (res["equivalence_violations"] + res["containment_violations"]
                               + res["coprime_violations"] + res["m_coprime_violations"])
                if (r, s, n) == (1, -20, 2):
                    remark = ["5", "25"] in res["congruence_only"]
    dt = time.perf_counter() - t0
    ok = violations == 0 and remark and dt < 300
    return report(5, ok, f"{runs} audits, {violations} violations, (5,25) congruence-only={remark}, {dt:.1f}s")


def criterion_6() -> bool:
    t0 = time.perf_counter()
    audited = failures = 0
    tight = set()
    for r in (1, 2, 3):
        for k in (1, 2, 3):
            for p in itertools.combinations_with_replacement(range(1, 51), k):
                try:
                    alpha, ok = verify_kellogg_bounds(r, p)
                except KelloggHypothesisError:
                    continue
                audited += 1
                failures += not ok
                if alpha == sylvester_u(r, k + 1) - 1:
                    tight.add((r, p))
    expected = set()
    for r in (1, 2, 3):
        for k in (1, 2, 3):
            u = sylvester_terms(r, k)
            if max(u) <= 50:
                expected.add((r, u))
    dt = time.perf_counter() - t0
    ok = audited > 0 and failures == 0 and expected <= tight and dt < 60
    return report(6, ok, f"{audited} p-lists, {failures} bound failures, "
                         f"tight at all {len(expected)} Sylvester prefixes={expected <= tight}, {dt:.1f}s")


def criterion_7() -> bool:
    t0 = time.perf_counter()
    total = 0
    ok = True
    for s in [v for v in range(-7, 8) if v]:
        builders = [("pair", 2, lambda k: family_pair(s, k), abs(s) + 2)]
        if s % 2:
            builders.append(("triple", 3, lambda k: family_triple(s, k), 2))
        for n in range(3, 7):
            builders.append(("m0", n, lambda k, n=n: family_m0(n, s, k), 2))
        for _, _, build, low in builders:
            seen = set()
            built = 0
            for k in range(low, 1001):
                try:
                    t = build(k)
                except DomainError:
                    continue
                ok &= residual_m(1, s, t) == 0
                seen.add(t)
                built += 1
            ok &= built > 900 and len(seen) == built
            total += built
    vals = [v for v in range(-25, 26) if v]
    parity = {s: oracle_enumerate(1, s, 3, vals, require_gcd_condition=True, m=0) for s in (2, 4)}
    dt = time.perf_counter() - t0
    ok = ok and all(v == [] for v in parity.values()) and dt < 60
    return report(7, ok, f"{total} family tuples re-verified and distinct; "
                         f"n=3 even-s gcd solutions in box 25: {sum(map(len, parity.values()))}; {dt:.1f}s")


def criterion_8() -> bool:
    t0 = time.perf_counter()
    rep = enumerate_signed(2, 1, 2)
    B = signed_sharp_bound(2, 1, 2)
    vals = [v for v in range(-2 * B, 2 * B + 1) if abs(v) >= 2]
    oracle = [(t, int(m)) for t, m in oracle_enumerate(2, 1, 2, vals, m_nonzero=True)]
    dt = time.perf_counter() - t0
    within = all(max(abs(v) for v in t) <= B for t in rep.tuples())
    ok = B == 13 and within and rep.solutions == oracle and rep.complete and dt < 60
    return report(8, ok, f"signed r=2,s=1,n=2 -> {rep.solutions}, bound {B}, oracle to {2 * B} agrees="
                         f"{rep.solutions == oracle}, {dt:.3f}s")


def in_region(r: int, s: int, m: int, n: int) -> bool:
    return r == 1 and (abs(m) <= n - 2 or (m == n - 1 and s == 1) or (m == -(n - 1) and s == (-1) ** (n - 1)))


def _oracle_finite(r: int, s: int, m: int, n: int, width: int):
    if n == 2:
        vals = [v for v in range(-width, width + 1) if v]
        return [(t, int(x)) for t, x in oracle_enumerate(r, s, 2, vals, m=m)], []
    return oracle_solve_last(r, s, n, width, m=m)


def criterion_9() -> bool:
    t0 = time.perf_counter()
    region_ok = True
    witnesses = finite_checked = 0
    finite_ok = True
    for n in (2, 3, 4):
        for r in (1, 2, 3):
            for s in range(-5, 6):
                if s == 0 or gcd(r, s) != 1:
                    continue
                for m in range(-(n + 1), n + 2):
                    v = classify_diophantine(r, s, m, n)
                    region_ok &= (v.status is Status.INFINITE) == in_region(r, s, m, n)
                    if v.status is Status.INFINITE:
                        w = v.witness_family
                        ts = list(w.generate(100))
                        region_ok &= len(set(ts)) == 100
                        region_ok &= all(len(t) == n and residual_m(1, s, t) == m for t in ts)
                        witnesses += 1
                    elif n <= 3:
                        rep = enumerate_signed_full(r, s, n, m=m)
                        # doubled box where affordable, otherwise the bound box itself
                        width = 2 * v.bound if n == 2 or r == 1 else v.bound
                        sols, free = _oracle_finite(r, s, m, n, width)
                        finite_ok &= rep.complete and not free and rep.solutions == sols
                        finite_ok &= all(max(abs(x) for x in t) <= v.bound for t, _ in sols)
                        finite_checked += 1
    dt = time.perf_counter() - t0
    ok = region_ok and finite_ok and dt < 600
    return report(9, ok, f"region exact={region_ok}, {witnesses} witnesses x100, "
                         f"{finite_checked} finite verdicts oracle-confirmed={finite_ok}, {dt:.1f}s")


def criterion_10() -> bool:
    giuga = ["enumerate", "--positive", "-r", "1", "-s", "1", "-n", "4", "--min-abs", "2",
             "--gcd-condition", "--nontrivial"]
    signed = ["enumerate", "--signed", "-r", "2", "-s", "1", "-n", "2", "--m-nonzero"]
    same = []
    for argv in (giuga, signed):
        outs = [json.dumps(cli_json(*argv, "--jobs", str(j))["solutions"]) for j in (1, 4)]
        same.append(outs[0] == outs[1] and outs[0] != "[]")
    ok = all(same)
    return report(10, ok, f"--jobs 1 vs 4 byte-identical: giuga={same[0]}, signed={same[1]}")


CRITERIA = [criterion_1, criterion_2, criterion_3, criterion_4, criterion_5,
            criterion_6, criterion_7, criterion_8, criterion_9, criterion_10]


@pytest.mark.parametrize("check", CRITERIA, ids=[f"criterion_{i}" for i in range(1, 11)])
def test_criterion(check):
    assert check()


if __name__ == "__main__":
    results = [c() for c in CRITERIA]
    print(f"{sum(results)}/{len(results)} criteria passed")
