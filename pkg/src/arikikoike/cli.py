"""Command-line interface: schur / verify / tableaux / units subcommands.

Output is deterministic: identical (config, seed) pairs produce byte-identical
streams.  Structured output is JSON lines with a schema version field.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import math
import sys
from fractions import Fraction

from arikikoike.algebra import shared_spec
from arikikoike.combinat import (
    Multipartition,
    gamma_table,
    multipartitions,
    std_tableaux,
)
from arikikoike.ratfunc import EvalPoint, ParamSpec

SCHEMA_VERSION = 1

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2


class UsageError(Exception):
    pass


# ---------------------------------------------------------------------------
# Deterministic evaluation points
# ---------------------------------------------------------------------------

def _hash_fraction(seed: int, attempt: int, slot: int) -> Fraction:
    digest = hashlib.sha256(f"{seed}:{attempt}:{slot}".encode()).digest()
    # Small numerators keep exact arithmetic fast; both stay below 2^31.
    num = int.from_bytes(digest[:4], "big") % 65521 + 2
    den = int.from_bytes(digest[4:8], "big") % 251 + 1
    return Fraction(num, den)


def _admissible(q: Fraction, Q: tuple, n: int) -> bool:
    """Strong semisimplicity: no L_k spectrum collisions anywhere.

    Requires q not in {0, 1}, q^m != 1 for m <= 2n-2, Q_s != 0, and
    q^m Q_s != Q_t for s != t and |m| <= 2n-2.  This implies P_H != 0 and
    keeps every F_t denominator invertible.
    """
    if q in (0, 1):
        return False
    for m in range(1, max(2 * n - 1, 2)):
        if q**m == 1:
            return False
    if any(x == 0 for x in Q):
        return False
    r = len(Q)
    for s in range(r):
        for t in range(r):
            if s == t:
                continue
            for m in range(0, max(2 * n - 1, 1)):
                if q**m * Q[s] == Q[t]:
                    return False
    return True


def deterministic_point(r: int, n: int, seed: int) -> EvalPoint:
    """The first admissible rational point derived from the seed by hashing."""
    for attempt in range(10_000):
        q = _hash_fraction(seed, attempt, 0)
        Q = tuple(_hash_fraction(seed, attempt, s) for s in range(1, r + 1))
        if _admissible(q, Q, n):
            return EvalPoint(q, Q, semisimple=True)
    raise RuntimeError("no admissible evaluation point found (seed exhausted)")


# ---------------------------------------------------------------------------
# Parsing helpers
# ---------------------------------------------------------------------------

def parse_multipartition(text: str, r: int) -> Multipartition:
    """Parse '2,1|1|' (components split on '|', parts on ',')."""
    text = text.strip().strip("()")
    comps = text.split("|")
    if len(comps) != r:
        raise UsageError(
            f"--lambda has {len(comps)} components; expected r={r}"
        )
    out = []
    for comp in comps:
        comp = comp.strip()
        if not comp:
            out.append(())
            continue
        try:
            parts = tuple(int(p) for p in comp.split(",") if p.strip())
        except ValueError as exc:
            raise UsageError(f"bad partition {comp!r}: {exc}") from exc
        out.append(parts)
    try:
        return Multipartition(tuple(out))
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def parse_specialize(text: str, r: int) -> EvalPoint:
    """Parse 'q=1,Q1=-1,Q2=1' into an EvalPoint."""
    values = {}
    for item in text.split(","):
        if not item.strip():
            continue
        try:
            key, _, raw = item.partition("=")
            values[key.strip()] = Fraction(raw.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"bad specialization {item!r}: {exc}") from exc
    try:
        q = values.pop("q")
        Q = tuple(values.pop(f"Q{s}") for s in range(1, r + 1))
    except KeyError as exc:
        raise UsageError(f"--specialize is missing {exc.args[0]}") from exc
    if values:
        raise UsageError(f"unknown specialization keys {sorted(values)}")
    if q == 0:
        raise UsageError("q=0 is not allowed")
    return EvalPoint(q, Q)


# ---------------------------------------------------------------------------
# Emission
# ---------------------------------------------------------------------------

class Emitter:
    def __init__(self, fmt: str, out):
        self.fmt = fmt
        self.out = out

    def record(self, kind: str, payload: dict):
        if self.fmt == "jsonl":
            rec = {"schema": SCHEMA_VERSION, "kind": kind}
            rec.update(payload)
            self.out.write(json.dumps(rec, sort_keys=True) + "\n")
        else:
            fields = " ".join(f"{k}={v}" for k, v in payload.items())
            self.out.write(f"{kind}: {fields}\n")


# ---------------------------------------------------------------------------
# Commands
# ---------------------------------------------------------------------------

def _check_dim_cap(args):
    dim = args.r**args.n * math.factorial(args.n)
    if args.backend == "symbolic" and dim > args.max_dim:
        raise UsageError(
            f"symbolic run refused: dim {dim} exceeds --max-dim {args.max_dim}"
        )


def _build_spec(args):
    point = None
    if args.backend == "eval":
        point = deterministic_point(args.r, args.n, args.seed)
    return shared_spec(args.r, args.n, args.backend, point)


def _lambdas(args):
    lams = multipartitions(args.n, args.r)
    if args.lam:
        want = parse_multipartition(args.lam, args.r)
        lams = [lam for lam in lams if lam == want]
        if not lams:
            raise UsageError(f"lambda {args.lam!r} is not a multipartition of n={args.n}")
    return lams


def cmd_schur(args, emit: Emitter) -> int:
    from arikikoike.schur import METHODS, P_H, schur_report

    _check_dim_cap(args)
    methods = tuple(args.method) if args.method else METHODS
    for m in methods:
        if m not in METHODS:
            raise UsageError(f"unknown method {m!r}; choose from {METHODS}")

    point = None
    if args.specialize:
        point = parse_specialize(args.specialize, args.r)
        ps = ParamSpec(args.r)
        if P_H(ps, args.n).evaluate(point) == 0:
            if "trace" in methods:
                raise UsageError(
                    "specialization has P_H = 0 (not semisimple); the trace "
                    "method and matrix units are undefined there"
                )
            emit.record("warning", {"message": "P_H = 0 at this specialization"})

    spec = _build_spec(args)
    status = EXIT_OK
    for lam in _lambdas(args):
        rep = schur_report(spec, lam, methods)
        payload = rep.to_record()
        if point is not None:
            payload["specialized"] = {
                m: str(spec.scalar(v).evaluate(point)
                       if spec.backend == "symbolic" else v)
                for m, v in rep.values.items()
            }
        emit.record("schur", payload)
        if not rep.agree:
            status = EXIT_FAIL
    return status


def cmd_verify(args, emit: Emitter) -> int:
    from arikikoike.verify import SUITES, run_suite

    _check_dim_cap(args)
    suite = args.suite or "all"
    if suite != "all" and suite not in SUITES:
        raise UsageError(f"unknown suite {suite!r}; choose from {sorted(SUITES)} or 'all'")
    spec = _build_spec(args)
    counts = {"PASS": 0, "FAIL": 0, "SKIP": 0}
    status = EXIT_OK
    for res in run_suite(spec, suite):
        counts[res.status] += 1
        if res.status == "FAIL":
            status = EXIT_FAIL
        if res.status != "PASS" or args.verbose:
            emit.record("check", res.to_record())
    emit.record(
        "summary",
        {"suite": suite, "r": args.r, "n": args.n, "backend": args.backend,
         **{k.lower(): v for k, v in counts.items()}},
    )
    return status


def _gamma_values(lam, ps, point):
    """Gamma for every standard tableau; numeric (Fraction) on the eval
    backend, where the symbolic recursion would be far too slow for large
    shapes."""
    if point is None:
        return gamma_table(lam, ps)
    from arikikoike.combinat import down_step, mp_q_fact, std_tableaux

    q = point.q

    def res(t, i):
        a, b, s = t.position(i)
        return q ** (b - a) * point.Q[s - 1]

    closed = mp_q_fact(lam, ps).evaluate(point)
    for s in range(1, lam.r + 1):
        for tt in range(s + 1, lam.r + 1):
            for i, row in enumerate(lam.comps[s - 1], start=1):
                for j in range(1, row + 1):
                    closed = closed * (q ** (j - i) * point.Q[s - 1] - point.Q[tt - 1])
    out = {}
    for t in std_tableaux(lam):
        if t.d().is_identity():
            out[t] = closed
        else:
            s, i = down_step(t)
            rs, rt = res(s, i), res(t, i)
            out[t] = (q * rs - rt) * (rs - q * rt) / (rs - rt) ** 2 * out[s]
    return out


def cmd_tableaux(args, emit: Emitter) -> int:
    if not args.lam:
        raise UsageError("tableaux requires --lambda")
    lam = parse_multipartition(args.lam, args.r)
    if lam.size != args.n:
        raise UsageError(f"lambda {args.lam!r} has size {lam.size}, expected n={args.n}")
    ps = ParamSpec(args.r)
    point = None
    if args.backend == "eval":
        point = deterministic_point(args.r, args.n, args.seed)
    table = _gamma_values(lam, ps, point)
    from arikikoike.combinat import w_lambda

    emit.record("shape", {"lambda": str(lam), "w_lambda": w_lambda(lam).cycle_str(),
                          "count": len(table)})
    for t in std_tableaux(lam):
        if point is None:
            residues = [str(t.residue(k, ps)) for k in range(1, args.n + 1)]
        else:
            residues = [str(t.residue(k, ps).evaluate(point))
                        for k in range(1, args.n + 1)]
        emit.record(
            "tableau",
            {
                "t": str(t),
                "d": t.d().cycle_str(),
                "length": t.d().length,
                "residues": residues,
                "gamma": str(table[t]),
            },
        )
    return EXIT_OK


def cmd_units(args, emit: Emitter) -> int:
    from arikikoike.seminormal import matrix_units

    _check_dim_cap(args)
    if not args.lam:
        raise UsageError("units requires --lambda")
    lam = parse_multipartition(args.lam, args.r)
    if lam.size != args.n:
        raise UsageError(f"lambda {args.lam!r} has size {lam.size}, expected n={args.n}")
    spec = _build_spec(args)
    units = matrix_units(spec, lam)
    for (s, t) in sorted(units, key=lambda st: (str(st[0]), str(st[1]))):
        emit.record(
            "unit",
            {"s": str(s), "t": str(t), "terms": units[(s, t)].to_records()},
        )
    return EXIT_OK


# ---------------------------------------------------------------------------
# Entry point
# ---------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="arikikoike",
        description="Exact workbench for semisimple Ariki-Koike algebras",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name, fn in (
        ("schur", cmd_schur),
        ("verify", cmd_verify),
        ("tableaux", cmd_tableaux),
        ("units", cmd_units),
    ):
        p = sub.add_parser(name)
        p.set_defaults(fn=fn)
        p.add_argument("--r", type=int, required=True, help="number of parameters Q_s")
        p.add_argument("--n", type=int, required=True, help="degree (number of boxes)")
        p.add_argument("--lambda", dest="lam", default=None,
                       help="multipartition filter, e.g. '2,1|1|'")
        p.add_argument("--method", action="append", default=None,
                       help="Schur method(s): trace, gamma, hook, symbol")
        p.add_argument("--suite", default=None, help="verification suite name or 'all'")
        p.add_argument("--backend", choices=("symbolic", "eval"), default="symbolic")
        p.add_argument("--seed", type=int, default=0, help="seed for eval points")
        p.add_argument("--specialize", default=None,
                       help="rational specialization, e.g. 'q=1,Q1=-1,Q2=1'")
        p.add_argument("--format", dest="fmt", choices=("text", "jsonl"),
                       default="text")
        p.add_argument("--max-dim", type=int, default=200,
                       help="cap on r^n n! for symbolic runs")
        p.add_argument("--verbose", action="store_true",
                       help="emit passing checks too (verify)")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    if args.r < 1 or args.n < 0:
        print("error: need r >= 1 and n >= 0", file=sys.stderr)
        return EXIT_USAGE
    emit = Emitter(args.fmt, sys.stdout)
    try:
        return args.fn(args, emit)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
