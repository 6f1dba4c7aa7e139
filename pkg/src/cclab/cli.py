"""Command-line front end.

Every invocation writes one JSON object to stdout (or CSV for
``enumerate --format csv``); integers travel as decimal strings so values
beyond 2**53 survive a round trip. Diagnostics go to stderr.

Exit codes: 0 success, 1 domain/validation error, 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
import time
from fractions import Fraction
from typing import Optional, Sequence

from . import classify as cls
from . import families, search
from .model import (
    CyclicSystem,
    DomainError,
    audit_congruence_equivalence,
    canonical_key,
    check_cyclic,
    check_params,
    gcd_condition,
    is_nontrivial,
    pairwise_coprime,
    residual_m,
)
from .sequences import (
    positive_bound,
    signed_coarse_bound,
    signed_sharp_bound,
    sylvester_terms,
    v_terms,
)

SCHEMA_VERSION = "1"


def _int_list(text: str) -> list[int]:
    try:
        return [int(v) for v in text.replace(" ", "").split(",") if v]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _jobs_default() -> int:
    try:
        return max(1, int(os.environ.get("CCLAB_JOBS", "1")))
    except ValueError:
        return 1


def _frac(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def _solutions(items) -> list[dict]:
    return [{"tuple": [str(v) for v in t], "m": str(m)} for t, m in items]


def _record(command: str, params: dict, **rest) -> dict:
    rec = {
        "schema_version": SCHEMA_VERSION,
        "command": command,
        "params": {k: (str(v) if isinstance(v, int) and not isinstance(v, bool) else v) for k, v in params.items()},
        "solutions": rest.pop("solutions", []),
    }
    rec.update(rest)
    return rec


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="cclab", description="Cyclic congruence systems and unit-fraction equations.")
    sub = p.add_subparsers(dest="command", required=True)

    c = sub.add_parser("check", help="verify one tuple")
    c.add_argument("-r", type=int, required=True)
    c.add_argument("-s", type=int, required=True)
    c.add_argument("-q", type=_int_list, required=True, help="comma-separated; use -q=-2,3,7 for a leading minus")

    e = sub.add_parser("enumerate", help="bounded exhaustive search")
    g = e.add_mutually_exclusive_group()
    g.add_argument("--positive", action="store_true")
    g.add_argument("--signed", action="store_true")
    e.add_argument("-r", type=int, required=True)
    e.add_argument("-s", type=int, required=True)
    e.add_argument("-n", type=int, required=True)
    mg = e.add_mutually_exclusive_group()
    mg.add_argument("--m", type=int, dest="m")
    mg.add_argument("--m-nonzero", action="store_true")
    e.add_argument("--min-abs", type=int)
    e.add_argument("--gcd-condition", action="store_true")
    e.add_argument("--nontrivial", action="store_true")
    e.add_argument("--cap", type=int)
    e.add_argument("--jobs", type=int, default=_jobs_default())
    e.add_argument("--format", choices=["json", "csv"], default="json")

    k = sub.add_parser("classify", help="finite or infinite solution set")
    kg = k.add_mutually_exclusive_group()
    kg.add_argument("--congruence", action="store_true")
    kg.add_argument("--diophantine", action="store_true")
    kg.add_argument("--hypersurface", action="store_true")
    k.add_argument("-r", type=int, required=True)
    k.add_argument("-s", type=int, required=True)
    k.add_argument("-m", type=int)
    k.add_argument("-n", type=int, required=True)
    pg = k.add_mutually_exclusive_group()
    pg.add_argument("--positive", action="store_true")
    pg.add_argument("--signed", action="store_true")

    f = sub.add_parser("family", help="members of an explicit family")
    f.add_argument("--kind", choices=[kind.value for kind in families.FamilyKind], required=True)
    f.add_argument("-r", type=int, default=1)
    f.add_argument("-s", type=int, required=True)
    f.add_argument("-n", type=int, required=True)
    f.add_argument("-k", type=int, default=2)
    f.add_argument("-m", type=int, help="residual for --kind padded")
    f.add_argument("--count", type=int, default=1)

    b = sub.add_parser("bounds", help="size bounds and u_1..u_n")
    b.add_argument("-r", type=int, required=True)
    b.add_argument("-s", type=int, required=True)
    b.add_argument("-n", type=int, required=True)

    v = sub.add_parser("verify-lemma21", help="exhaustive congruence/Diophantine equivalence audit")
    v.add_argument("-r", type=int, required=True)
    v.add_argument("-s", type=int, required=True)
    v.add_argument("-n", type=int, required=True)
    v.add_argument("--box", type=int, required=True)

    q = sub.add_parser("seq", help="u_k(r) or v_k(m) terms")
    qg = q.add_mutually_exclusive_group(required=True)
    qg.add_argument("--u", type=int, metavar="R")
    qg.add_argument("--v", type=int, metavar="M")
    q.add_argument("--upto", type=int, required=True)
    return p


def cmd_check(a) -> dict:
    check_params(a.r, a.s)
    q = tuple(a.q)
    if len(q) < 2:
        raise DomainError("need at least two entries")
    res = residual_m(a.r, a.s, q)
    congruence = check_cyclic(CyclicSystem(a.r, a.s, len(q)), q)
    dioph = res.denominator == 1
    result = {
        "congruence": congruence,
        "residual": _frac(res),
        "diophantine": dioph,
        "gcd_condition": gcd_condition(q, a.s),
        "pairwise_coprime": pairwise_coprime(q),
        "nontrivial": is_nontrivial(q),
    }
    sols = _solutions([(q, res.numerator)]) if dioph else []
    return _record("check", {"r": a.r, "s": a.s, "q": [str(v) for v in q]}, solutions=sols, result=result)


def _report_record(a, rep: search.SearchReport, params: dict) -> dict:
    stats = {
        "nodes": rep.nodes_visited,
        "pruned": rep.nodes_pruned,
        "bound": str(rep.bound_used),
        "complete": rep.complete,
        "elapsed_ms": round(rep.elapsed * 1000, 3),
        "degenerate": rep.degenerate_nodes,
    }
    return _record("enumerate", params, solutions=_solutions(rep.solutions), stats=stats)


def run_enumerate(a) -> search.SearchReport:
    check_params(a.r, a.s)
    if a.n < 2:
        raise DomainError("n must be at least 2")
    if a.signed:
        min_abs = 2 if a.min_abs is None else a.min_abs
        if min_abs == 1:
            return search.enumerate_signed_full(
                a.r, a.s, a.n, m=a.m, require_gcd_condition=a.gcd_condition, hard_cap=a.cap, jobs=a.jobs
            )
        opts = search.SearchOptions(
            positivity=search.Positivity.SIGNED,
            min_abs=min_abs,
            require_gcd_condition=a.gcd_condition,
            require_nontrivial=a.nontrivial,
            m_fixed=a.m,
            m_nonzero=a.m is None,
            hard_cap=a.cap,
        )
        return search.enumerate_signed(a.r, a.s, a.n, opts, jobs=a.jobs)
    opts = search.SearchOptions(
        min_abs=1 if a.min_abs is None else a.min_abs,
        require_gcd_condition=a.gcd_condition,
        require_nontrivial=a.nontrivial,
        m_fixed=a.m,
        m_nonzero=a.m_nonzero,
        hard_cap=a.cap,
    )
    return search.enumerate_positive(a.r, a.s, a.n, opts, jobs=a.jobs)


def cmd_enumerate(a) -> dict:
    rep = run_enumerate(a)
    params = {
        "mode": "signed" if a.signed else "positive",
        "r": a.r,
        "s": a.s,
        "n": a.n,
        "m": "nonzero" if a.m is None and (a.m_nonzero or a.signed) else a.m,
        "min_abs": a.min_abs,
        "gcd_condition": a.gcd_condition,
        "nontrivial": a.nontrivial,
        "cap": a.cap,
    }
    return _report_record(a, rep, params)


def enumerate_csv(rep: search.SearchReport) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow([f"x{i}" for i in range(1, rep.n + 1)] + ["m"])
    for t, m in rep.solutions:
        w.writerow([str(v) for v in t] + [str(m)])
    return buf.getvalue()


def _verdict_dict(v: cls.Verdict) -> dict:
    return {
        "status": v.status.value,
        "bound": None if v.bound is None else str(v.bound),
        "theorem_tag": v.theorem_tag,
        "witness_family": None if v.witness_family is None else {
            k: (str(x) if isinstance(x, int) else x) for k, x in v.witness_family.describe().items()
        },
    }


def cmd_classify(a) -> dict:
    if a.congruence:
        v = cls.classify_congruence(a.r, a.s, a.n, positive=not a.signed)
        what = "congruence"
    else:
        if a.m is None:
            raise DomainError("-m is required for --diophantine and --hypersurface")
        if a.hypersurface:
            v = cls.classify_hypersurface(a.r, a.s, a.m, a.n)
            what = "hypersurface"
        else:
            v = cls.classify_diophantine(a.r, a.s, a.m, a.n)
            what = "diophantine"
    sols = []
    if v.witness_family is not None:
        w = v.witness_family
        sols = _solutions((t, w.m) for t in w.generate(3))
    params = {"form": what, "r": a.r, "s": a.s, "m": a.m, "n": a.n, "signed": bool(a.signed)}
    return _record("classify", params, solutions=sols, result=_verdict_dict(v))


def cmd_family(a) -> dict:
    if a.count < 1:
        raise DomainError("--count must be positive")
    items = families.generate(a.kind, a.r, a.s, a.n, a.k, a.count, m=a.m)
    params = {"kind": a.kind, "r": a.r, "s": a.s, "n": a.n, "k": a.k, "m": a.m, "count": a.count}
    return _record("family", params, solutions=_solutions(items))


def cmd_bounds(a) -> dict:
    check_params(a.r, a.s)
    if a.n < 2:
        raise DomainError("n must be at least 2")
    result = {
        "positive_bound": str(positive_bound(a.r, a.s, a.n)),
        "signed_sharp_bound": str(signed_sharp_bound(a.r, a.s, a.n)),
        "signed_coarse_bound": str(signed_coarse_bound(a.r, a.s, a.n)),
        "u": [str(x) for x in sylvester_terms(a.r, a.n)],
    }
    return _record("bounds", {"r": a.r, "s": a.s, "n": a.n}, result=result)


def cmd_verify_lemma21(a) -> dict:
    if a.n < 2 or a.box < 1:
        raise DomainError("need n >= 2 and box >= 1")
    t0 = time.perf_counter()
    audit = audit_congruence_equivalence(a.r, a.s, a.n, a.box)
    only = sorted(audit.congruence_only, key=lambda t: [canonical_key(v) for v in t])
    result = {
        "pass": audit.ok,
        "tuples": audit.tuples,
        "congruence_true": audit.congruence,
        "diophantine_true": audit.diophantine,
        "equivalence_violations": audit.equivalence_violations,
        "containment_violations": audit.containment_violations,
        "coprime_violations": audit.coprime_violations,
        "m_coprime_violations": audit.m_coprime_violations,
        "congruence_only": [[str(v) for v in t] for t in only],
    }
    stats = {"elapsed_ms": round((time.perf_counter() - t0) * 1000, 3)}
    return _record("verify-lemma21", {"r": a.r, "s": a.s, "n": a.n, "box": a.box}, result=result, stats=stats)


def cmd_seq(a) -> dict:
    if a.u is not None:
        terms = sylvester_terms(a.u, a.upto)
        params = {"u": a.u, "upto": a.upto}
    else:
        terms = v_terms(a.v, a.upto)
        params = {"v": a.v, "upto": a.upto}
    return _record("seq", params, result={"terms": [str(x) for x in terms]})


COMMANDS = {
    "check": cmd_check,
    "enumerate": cmd_enumerate,
    "classify": cmd_classify,
    "family": cmd_family,
    "bounds": cmd_bounds,
    "verify-lemma21": cmd_verify_lemma21,
    "seq": cmd_seq,
}


def run(argv: Optional[Sequence[str]] = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        a = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if a.command == "enumerate" and a.format == "csv":
            rep = run_enumerate(a)
            out.write(enumerate_csv(rep))
            print(
                f"# nodes={rep.nodes_visited} pruned={rep.nodes_pruned} bound={rep.bound_used} "
                f"complete={rep.complete} elapsed_ms={rep.elapsed * 1000:.3f}",
                file=err,
            )
            return 0
        rec = COMMANDS[a.command](a)
    except DomainError as exc:
        print(f"cclab: error: {exc}", file=err)
        return 1
    out.write(json.dumps(rec) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
