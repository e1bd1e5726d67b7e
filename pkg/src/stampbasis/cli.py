"""stampbasis command line.

Exit codes: 0 ok, 2 usage, 3 search budget exceeded, 4 verification mismatch,
5 infeasible construction (or input that is not a basis), 6 malformed JSON.
Errors print one line to stderr: ``stampbasis: <reason>: <message>``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys

from . import descriptor as desc
from .config import SearchConfig
from .construct.formulas import kth_root_partial_sum
from .construct.represent import represent
from .construct.section3 import build_section3
from .construct.section4 import DEFAULT_PRIME_BUDGET, build_section4, crt_check
from .construct.thm44 import build_thm44
from .cyclic import big_n, h_of, wang_coppersmith_bounds
from .errors import (
    Infeasible,
    MalformedDescriptor,
    NotABasis,
    SearchTooLarge,
    StampBasisError,
    VerificationMismatch,
)
from .intbasis import enumerate_essential, verify_essential
from .segment import n_exact

EXIT_OK, EXIT_USAGE, EXIT_BUDGET, EXIT_MISMATCH, EXIT_INFEASIBLE, EXIT_MALFORMED = 0, 2, 3, 4, 5, 6

# reference limits printed under the ratio tables
REFERENCE = {
    "s": {1: 1.0, 2: 1.0, 3: (3 / 4) ** (1 / 3)},
    "S": {1: 1.0, 2: math.sqrt(2 / 3)},
    "R": {1: 1.0, 2: math.sqrt(2 / 3)},
}


class UsageError(StampBasisError):
    reason = "usage"


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


# ---------------------------------------------------------------- output


class Output:
    """A result: a JSON-able payload plus a table for the human/CSV views."""

    def __init__(self, payload, header=None, rows=None, notes=()):
        self.payload = payload
        self.header = header
        self.rows = rows
        self.notes = list(notes)

    def emit(self, fmt: str, stream) -> None:
        if fmt == "json":
            stream.write(json.dumps(desc._enc(self.payload), sort_keys=False) + "\n")
        elif fmt == "csv":
            writer = csv.writer(stream, lineterminator="\n")
            writer.writerow(self.header)
            writer.writerows([[_cell(v) for v in row] for row in self.rows])
        else:
            stream.write(_table(self.header, self.rows))
            for note in self.notes:
                stream.write(note + "\n")


def _cell(v) -> str:
    if v is None:
        return "-"
    if isinstance(v, float):
        return f"{v:.6g}"
    if isinstance(v, (list, tuple)):
        return " ".join(str(x) for x in v)
    return str(v)


def _table(header, rows) -> str:
    cells = [[_cell(v) for v in row] for row in rows]
    widths = [max([len(h)] + [len(r[i]) for r in cells]) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths))]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(r, widths)) for r in cells]
    return "\n".join(lines) + "\n"


def _record(rec) -> Output:
    payload = {"value": rec.value, "witness": list(rec.witness), "params": rec.params}
    header = list(rec.params) + ["value", "witness"]
    return Output(payload, header, [list(rec.params.values()) + [rec.value, rec.witness]])


# ---------------------------------------------------------------- commands


def _config(args) -> SearchConfig:
    return SearchConfig(budget=args.budget, workers=args.workers)


def cmd_n(args):
    return _record(n_exact(args.h, args.k, _config(args)))


def cmd_bign(args):
    return _record(big_n(args.h, args.k, _config(args)))


def cmd_hofn(args):
    rec = h_of(args.n, args.k, _config(args))
    lower, upper = wang_coppersmith_bounds(args.n, args.k)
    out = _record(rec)
    out.payload["bounds"] = [lower, upper]
    out.notes.append(f"bounds: {lower:.4f} <= h <= {upper:.4f}")
    return out


def _parse_range(text: str) -> tuple[int, int]:
    try:
        lo, hi = (int(x) for x in text.split(".."))
    except ValueError:
        raise UsageError(f"range must look like A..B, got {text!r}") from None
    if lo > hi or lo < 1:
        raise UsageError(f"empty or nonpositive range {text!r}")
    return lo, hi


def _safe(fn):
    try:
        return fn()
    except SearchTooLarge:
        return None


def cmd_ratios(args):
    lo, hi = _parse_range(args.range)
    k, cfg = args.k, _config(args)
    if args.table == "roots":
        header = ["n", "k", "sum", "comparator", "ratio"]
        rows = []
        n = lo
        while n <= hi:
            exact, comp = kth_root_partial_sum(max(n, 2), k)
            rows.append([n, k, exact, comp, exact / comp])
            n *= 10
        payload = [dict(zip(header, r)) for r in rows]
        return Output(payload, header, rows, ["ratio sum/comparator; its limit is 1"])

    header = ["param", "n", "s", "N", "S", "h", "R", "wc_lower", "wc_upper"]
    rows = []
    for v in range(lo, hi + 1):
        n = _safe(lambda: n_exact(v, k, cfg).value)
        N = _safe(lambda: big_n(v, k, cfg).value)
        h = _safe(lambda: h_of(v, k, cfg).value) if v >= k + 1 else None
        s = None if n is None else (n / v**k) ** (-1 / k) / k
        S = None if N is None else (N / v**k) ** (-1 / k) / k
        R = None if h is None else h / (k * v ** (1 / k))
        wc = wang_coppersmith_bounds(v, k) if v >= 2 else (None, None)
        rows.append([v, n, s, N, S, h, R, wc[0], wc[1]])
    notes = ["param is h for n, s, N, S and N for h, R and the wc bounds; '-' = over budget or undefined"]
    for key in ("s", "S", "R"):
        if k in REFERENCE[key]:
            notes.append(f"reference limit {key}({k}) = {REFERENCE[key][k]:.6f}")
    payload = {"k": k, "rows": [dict(zip(header, r)) for r in rows],
               "reference": {key: REFERENCE[key].get(k) for key in REFERENCE}}
    return Output(payload, header, rows, notes)


def _load(path: str) -> desc.BasisDescriptor:
    try:
        with open(path) as fh:
            text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return desc.BasisDescriptor.from_json(text)


def cmd_order(args):
    d = _load(args.file)
    key = "reach" if d.kind == "segment" else "order"
    value = desc.measure(d)[key]
    return Output({"kind": d.kind, key: value}, ["kind", key], [[d.kind, value]])


def cmd_essential(args):
    d = _load(args.file)
    if d.kind != "structured":
        raise UsageError("essential needs a structured descriptor")
    basis = d.basis()
    found = enumerate_essential(basis, args.size)
    rows, payload = [], []
    for e in found:
        cert = verify_essential(basis, e.members)
        rows.append([e.witness_prime, e.induced_gcd, e.size, cert.is_essential, e.members])
        payload.append({"prime": e.witness_prime, "gcd": e.induced_gcd, "size": e.size,
                        "verified": cert.is_essential, "members": list(e.members)})
    return Output(payload, ["prime", "gcd", "size", "verified", "members"], rows)


def _descriptor_output(d: desc.BasisDescriptor, extra: dict, header, row) -> Output:
    payload = d.to_dict()
    payload["plan"] = extra
    return Output(payload, header, [row])


def cmd_build(args):
    if args.which == "sec3":
        plan, basis = build_section3(args.h, args.k)
        d = desc.structured(basis, {"order": args.h, "essential_count": plan.s,
                                    "essential_sizes": [args.k] * plan.s})
        extra = {"s": plan.s, "P": plan.P, "F": list(plan.F), "f": list(plan.f), "g": list(plan.g)}
        return _descriptor_output(d, extra, ["h", "k", "s", "P", "|E|"],
                                  [args.h, args.k, plan.s, plan.P, len(basis.finite_part)])
    if args.which == "thm44":
        b = build_thm44(args.p, args.k, args.s)
        d = desc.cyclic(b.p, b.elements, {"order": b.order})
        extra = {"x": b.x, "t": b.t, "formula_offset": b.v_t,
                 "verified_offset": b.order - (b.k * b.x - b.k), "run_length": b.run_length()}
        return _descriptor_output(d, extra, ["p", "k", "x", "t", "order", "elements"],
                                  [b.p, b.k, b.x, b.t, b.order, b.elements])
    primes = None
    if args.primes:
        try:
            primes = [int(x) for x in args.primes.split(",")]
        except ValueError:
            raise UsageError(f"--primes must be a comma-separated list, got {args.primes!r}") from None
    plan, basis = build_section4(args.h, args.k, primes, args.prime_budget)
    chk = crt_check(plan)
    d = desc.structured(basis, {"order": args.h, "essential_count": plan.count,
                                "essential_sizes": [args.k] * plan.count})
    extra = {"primes": list(plan.primes), "orders": [c.order for c in plan.choices],
             "t": [c.t for c in plan.choices], "crt": [chk.order_mod_P, list(chk.per_prime)]}
    return _descriptor_output(d, extra, ["h", "k", "P", "primes", "orders"],
                              [args.h, args.k, plan.P, plan.primes, [c.order for c in plan.choices]])


def cmd_represent(args):
    plan = represent(args.h1, args.k, args.eps)
    payload = {"h1": plan.h1, "k": plan.k, "eps": plan.epsilon, "n": plan.n,
               "window": list(plan.window), "chosen": list(plan.chosen), "verified": plan.is_valid()}
    return Output(payload, ["h1", "k", "n", "window", "chosen"],
                  [[plan.h1, plan.k, plan.n, plan.window, plan.chosen]])


def cmd_verify(args):
    d = _load(args.file)
    actual = desc.verify(d)
    checked = sorted(set(d.claimed) & set(actual))
    rows = [[key, d.claimed[key], actual[key]] for key in checked]
    return Output({"ok": True, "checked": checked, "measured": actual},
                  ["field", "claimed", "computed"], rows, ["all claimed fields verified"])


def cmd_selftest(args):
    from .selftest import run_selftest

    results = run_selftest()
    rows = [[name, "PASS" if ok else "FAIL", detail] for name, ok, detail in results]
    out = Output([{"check": n, "ok": ok, "detail": d} for n, ok, d in results],
                 ["check", "result", "detail"], rows)
    out.failed = not all(ok for _, ok, _ in results)
    return out


# ---------------------------------------------------------------- parser


def build_parser() -> argparse.ArgumentParser:
    common = _Parser(add_help=False)
    fmt = common.add_mutually_exclusive_group()
    fmt.add_argument("--json", dest="fmt", action="store_const", const="json", help="emit JSON")
    fmt.add_argument("--csv", dest="fmt", action="store_const", const="csv", help="emit CSV")
    common.add_argument("--budget", type=int, default=None,
                        help="search budget (overrides STAMPBASIS_BUDGET)")
    common.add_argument("--workers", type=int, default=1, help="worker processes for searches")

    parser = _Parser(prog="stampbasis", description="Postage stamp numbers and structured integer bases.")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("n", parents=[common], help="exact n(h,k) with witness")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_n)

    p = sub.add_parser("bign", parents=[common], help="exact N(h,k) with witness")
    p.add_argument("--h", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_bign)

    p = sub.add_parser("hofn", parents=[common], help="exact h(N,k) with witness")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_hofn)

    p = sub.add_parser("ratios", parents=[common], help="s/S/R tables or prime root sums")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--range", required=True, help="A..B")
    p.add_argument("--table", choices=["stamps", "roots"], default="stamps")
    p.set_defaults(func=cmd_ratios)

    for name, func, helptext in (("order", cmd_order, "order or reach of a descriptor"),
                                 ("verify", cmd_verify, "recompute every claimed field")):
        p = sub.add_parser(name, parents=[common], help=helptext)
        p.add_argument("--file", required=True)
        p.set_defaults(func=func)

    p = sub.add_parser("essential", parents=[common], help="enumerate and verify essential subsets")
    p.add_argument("--file", required=True)
    p.add_argument("--size", type=int, default=None)
    p.set_defaults(func=cmd_essential)

    p = sub.add_parser("build", help="run a construction")
    bsub = p.add_subparsers(dest="which", required=True, parser_class=_Parser)
    b = bsub.add_parser("sec3", parents=[common], help="fixed h, many essential subsets")
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b = bsub.add_parser("thm44", parents=[common], help="basis of Z_p of order kx + s")
    b.add_argument("--p", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--s", type=int, default=0)
    b = bsub.add_parser("sec4", parents=[common], help="fixed k, essential subsets of size k")
    b.add_argument("--h", type=int, required=True)
    b.add_argument("--k", type=int, required=True)
    b.add_argument("--primes", default=None, help="comma-separated primes; automatic if omitted")
    b.add_argument("--prime-budget", type=int, default=DEFAULT_PRIME_BUDGET)
    p.set_defaults(func=cmd_build)

    p = sub.add_parser("represent", parents=[common], help="prime root-floor representation of h1")
    p.add_argument("--h1", type=int, required=True)
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--eps", type=float, default=0.1)
    p.set_defaults(func=cmd_represent)

    p = sub.add_parser("selftest", parents=[common], help="oracle and invariant checks")
    p.set_defaults(func=cmd_selftest)
    return parser


def _exit_code(exc: Exception) -> int:
    if isinstance(exc, UsageError):
        return EXIT_USAGE
    if isinstance(exc, SearchTooLarge):
        return EXIT_BUDGET
    if isinstance(exc, VerificationMismatch):
        return EXIT_MISMATCH
    if isinstance(exc, MalformedDescriptor):
        return EXIT_MALFORMED
    if isinstance(exc, (Infeasible, NotABasis)):
        return EXIT_INFEASIBLE
    return EXIT_USAGE


def main(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        args = build_parser().parse_args(argv)
        out = args.func(args)
        out.emit(args.fmt or "table", stdout)
        return EXIT_MISMATCH if getattr(out, "failed", False) else EXIT_OK
    except StampBasisError as exc:
        stderr.write(f"stampbasis: {exc.reason}: {exc}\n")
        return _exit_code(exc)
    except ValueError as exc:  # invalid parameter values from the library
        stderr.write(f"stampbasis: usage: {exc}\n")
        return EXIT_USAGE


def run(argv) -> tuple[int, str, str]:
    """Run in-process and capture (exit code, stdout, stderr)."""
    out, err = io.StringIO(), io.StringIO()
    code = main(argv, out, err)
    return code, out.getvalue(), err.getvalue()


if __name__ == "__main__":
    sys.exit(main())
