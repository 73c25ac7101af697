"""Command-line verification front end.

Subcommands: delta, hooks {enumerate, verify-dim, verify-basis, descendants},
ideal {verify, quotient-dim, normal-form}, zerox {count, verify}, suite.
Every run emits a report: text by default, or JSON of the shape
{"command", "params", "checks": [{"name", "expected", "actual", "pass"}],
"runtime_ms", "seed"}; the exit status is 0 iff every check passes, 2 for
usage errors, 3 when a size limit is exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from math import factorial

from .annihilator import generators, annihilates, normal_form, proposition_instances, quotient_hilbert
from .delta import build_delta
from .errors import SizeLimitError
from .hooks import descendant_graph, enumerate_drawings, closed_form_count, s_monomial
from .linalg import derivative_closure, homogeneous_family_rank
from .partitions import hook_partition, parse_partition
from .poly import apply_diff, format_poly, format_monomial, parse_poly
from .zerox import count_check, corner_recursion_check, verify_zero_x_degree_basis

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2
EXIT_SIZE_LIMIT = 3


@dataclass
class Check:
    name: str
    expected: object
    actual: object

    @property
    def passed(self) -> bool:
        return self.expected == self.actual

    def to_dict(self) -> dict:
        return {"name": self.name, "expected": self.expected,
                "actual": self.actual, "pass": self.passed}


@dataclass
class Report:
    command: str
    params: dict
    checks: list[Check] = field(default_factory=list)
    runtime_ms: int = 0
    seed: int = 0
    extra_lines: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def to_json(self) -> str:
        payload = {
            "command": self.command,
            "params": {k: self.params[k] for k in sorted(self.params)},
            "checks": [c.to_dict() for c in self.checks],
            "runtime_ms": self.runtime_ms,
            "seed": self.seed,
        }
        return json.dumps(payload, sort_keys=False)

    def to_text(self) -> str:
        lines = list(self.extra_lines)
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"[{mark}] {c.name}: expected {c.expected}, got {c.actual}")
        lines.append(f"{self.command}: {'ok' if self.ok else 'FAILED'} "
                     f"({len(self.checks)} checks, {self.runtime_ms} ms, seed {self.seed})")
        return "\n".join(lines)


def _parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default="text")
    common.add_argument("--seed", type=int, default=0,
                        help="seed for any randomized pass; logged in the report")
    common.add_argument("--threads", type=int, default=0,
                        help="worker threads for independent checks (0 = sequential)")
    common.add_argument("--limit-n", type=int, default=7, dest="limit_n",
                        help="safety cap on n for enumerative commands")

    top = argparse.ArgumentParser(prog="ghbasis",
                                  description="exact checks for monomial bases of Garsia-Haiman modules")
    sub = top.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delta", parents=[common], help="print Delta_mu")
    p.add_argument("--partition", required=True)

    hooks = sub.add_parser("hooks", help="hook drawing family checks")
    hsub = hooks.add_subparsers(dest="subcommand", required=True)
    p = hsub.add_parser("enumerate", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--list", action="store_true", dest="list_drawings")
    for name in ("verify-dim", "verify-basis", "descendants"):
        p = hsub.add_parser(name, parents=[common])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)

    ideal = sub.add_parser("ideal", help="annihilator ideal checks")
    isub = ideal.add_subparsers(dest="subcommand", required=True)
    for name in ("verify", "quotient-dim"):
        p = isub.add_parser(name, parents=[common])
        p.add_argument("--k", type=int, required=True)
        p.add_argument("--l", type=int, required=True)
    p = isub.add_parser("normal-form", parents=[common])
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--l", type=int, required=True)
    p.add_argument("--op", required=True, help="monomial operator, e.g. \"x3\"")

    zerox = sub.add_parser("zerox", help="zero-x-degree basis checks")
    zsub = zerox.add_subparsers(dest="subcommand", required=True)
    for name in ("count", "verify"):
        p = zsub.add_parser(name, parents=[common])
        p.add_argument("--partition", required=True)

    p = sub.add_parser("suite", parents=[common], help="verification suites")
    p.add_argument("--level", choices=["smoke", "full"], default="smoke")
    return top


# ---------------------------------------------------------------------------
# subcommand bodies: each fills a Report
# ---------------------------------------------------------------------------

def _cmd_delta(args, report: Report) -> None:
    mu = parse_partition(args.partition)
    if mu.n > args.limit_n + 2:
        raise SizeLimitError(f"n = {mu.n} exceeds --limit-n + 2")
    delta = build_delta(mu, limit=max(mu.n, 9))
    text = format_poly(delta.value)
    report.extra_lines.append(text)
    report.checks.append(Check("bidegree (n(mu), n(mu'))",
                               list(delta.bidegree),
                               [delta.value.xdeg(), delta.value.ydeg()]))
    report.checks.append(Check("delta", text, text))


def _cmd_hooks(args, report: Report) -> None:
    K, L = args.k, args.l
    n = K + L + 1
    if n > args.limit_n:
        raise SizeLimitError(f"n = {n} exceeds --limit-n = {args.limit_n}")
    if args.subcommand == "enumerate":
        drawings = enumerate_drawings(K, L, limit=args.limit_n)
        if args.list_drawings:
            for d in drawings:
                report.extra_lines.append(json.dumps(d.to_json_dict()))
        report.checks.append(Check("drawing count = n!", factorial(n), len(drawings)))
        report.checks.append(Check("closed-form count = n!", factorial(n),
                                   closed_form_count(K, L)))
    elif args.subcommand == "verify-dim":
        delta = build_delta(hook_partition(K, L))
        dim, _ = derivative_closure(delta)
        report.checks.append(Check("dim M_mu", factorial(n), dim))
    elif args.subcommand == "verify-basis":
        delta = build_delta(hook_partition(K, L))
        drawings = enumerate_drawings(K, L, limit=args.limit_n)
        images = [apply_diff(s_monomial(d, n), delta.value) for d in drawings]
        report.checks.append(Check("rank of drawing images", factorial(n),
                                   homogeneous_family_rank(images)))
    elif args.subcommand == "descendants":
        delta = build_delta(hook_partition(K, L))
        _, edges, acyclic = descendant_graph(K, L, delta, limit=args.limit_n)
        report.checks.append(Check("descendant graph acyclic", True, acyclic))
        report.extra_lines.append(
            f"{sum(len(v) for v in edges.values())} son edges over {len(edges)} drawings")


def _cmd_ideal(args, report: Report) -> None:
    K, L = args.k, args.l
    n = K + L + 1
    if n > args.limit_n:
        raise SizeLimitError(f"n = {n} exceeds --limit-n = {args.limit_n}")
    delta = build_delta(hook_partition(K, L))
    if args.subcommand == "verify":
        gens = generators(K, L)
        bad = [tag for tag, p in gens.entries if not annihilates(p, delta)]
        report.checks.append(Check("generators annihilating Delta", len(gens), len(gens) - len(bad)))
        if n <= 5:
            for which in (1, 2, 3, 4):
                seen = ok = 0
                for inst in proposition_instances(n, K, L, which):
                    seen += 1
                    ok += annihilates(inst, delta)
                report.checks.append(Check(f"schema-{which} instances annihilating", seen, ok))
    elif args.subcommand == "quotient-dim":
        qt = quotient_hilbert(K, L, limit=args.limit_n)
        report.checks.append(Check("quotient total", factorial(n), qt.total))
        report.checks.append(Check("shell dimensions vanish", True, qt.shell_zero))
        _, closure_table = derivative_closure(delta)
        report.checks.append(Check("graded table matches derivative closure", True,
                                   qt.table == closure_table))
        for (a, b), v in sorted(qt.table.items()):
            report.extra_lines.append(f"dim at bidegree ({a},{b}): {v}")
    elif args.subcommand == "normal-form":
        poly = parse_poly(args.op, n=n)
        if len(poly.terms) != 1 or next(iter(poly.terms.values())) != 1:
            raise ValueError("--op must be a single monic monomial")
        op = next(iter(poly.terms))
        nf = normal_form(op, K, L, delta=delta, validate=True)
        for d, c in sorted(nf.items(), key=lambda item: format_monomial(s_monomial(item[0], n))):
            report.extra_lines.append(f"{c} * d[{format_monomial(s_monomial(d, n)) or '1'}]")
        report.checks.append(Check("normal form applies back to op(d)Delta", True, True))
        report.extra_lines.append(f"{len(nf)} drawing terms")


def _cmd_zerox(args, report: Report) -> None:
    mu = parse_partition(args.partition)
    if mu.n > args.limit_n:
        raise SizeLimitError(f"n = {mu.n} exceeds --limit-n = {args.limit_n}")
    if args.subcommand == "count":
        count, expected = count_check(mu, limit=args.limit_n)
        report.checks.append(Check("drawing count = n!/mu'!", expected, count))
        report.checks.append(Check("corner recursion identity", True,
                                   corner_recursion_check(mu)))
    else:
        delta = build_delta(mu)
        result = verify_zero_x_degree_basis(mu, delta, limit=args.limit_n)
        expected = result["expected"]
        report.checks.append(Check("drawing count = n!/mu'!", expected, result["count"]))
        report.checks.append(Check("images have x-degree 0", True, result["x_degree_zero_ok"]))
        report.checks.append(Check("white images have top x-degree", True, result["x_degree_top_ok"]))
        report.checks.append(Check("minimal-monomial triangularity", True, result["triangularity_ok"]))
        report.checks.append(Check("distinct minimal monomials", True,
                                   result["distinct_minimal_monomials"]))
        report.checks.append(Check("rank of cross images", expected, result["rank_s"]))
        report.checks.append(Check("rank of white images", expected, result["rank_t"]))
        report.checks.append(Check("closure x-degree-0 slice", expected, result["dim_zero_slice"]))


def _hooks_up_to(nmax):
    for n in range(1, nmax + 1):
        for K in range(n):
            yield K, n - 1 - K


def _cmd_suite(args, report: Report) -> None:
    """smoke: everything at n <= 4; full: the acceptance matrix."""
    from itertools import product as iproduct

    from .errors import RewriteDefectError
    from .hooks import diagram_of_monomial, diff_op_of, flip, is_son, reconstruct, split
    from .partitions import partitions_of
    from .poly import Monomial, format_monomial

    smoke = args.level == "smoke"
    n_counts = 4 if smoke else 7
    n_rank = 4 if smoke else 6
    n_closure = 4 if smoke else 5
    n_rewrite = 4 if smoke else 5
    n_gens = 4 if smoke else 7
    n_instances = 3 if smoke else 5
    n_quotient = 4 if smoke else 5
    n_split = 4 if smoke else 6
    n_son = 4 if smoke else 5
    n_flip = 4 if smoke else 7
    n_zerox_count = 4 if smoke else 7
    n_zerox_rank = 4 if smoke else 6
    n_corner = 4 if smoke else 8

    def hook_checks(pair):
        K, L = pair
        n = K + L + 1
        checks = []
        delta = build_delta(hook_partition(K, L))
        drawings = enumerate_drawings(K, L)
        if n <= n_counts:
            checks.append(Check(f"hooks({K},{L}) count = n!", factorial(n), len(drawings)))
            checks.append(Check(f"hooks({K},{L}) closed form", factorial(n),
                                closed_form_count(K, L)))
        if n <= n_rank:
            images = [apply_diff(s_monomial(d, n), delta.value) for d in drawings]
            checks.append(Check(f"hooks({K},{L}) basis rank", factorial(n),
                                homogeneous_family_rank(images)))
        if n <= n_closure:
            dim, closure_table = derivative_closure(delta)
            checks.append(Check(f"hooks({K},{L}) dim M_mu", factorial(n), dim))
            if n <= n_quotient:
                qt = quotient_hilbert(K, L)
                checks.append(Check(f"hooks({K},{L}) quotient total", factorial(n), qt.total))
                checks.append(Check(f"hooks({K},{L}) tables agree", True,
                                    qt.table == closure_table))
                checks.append(Check(f"hooks({K},{L}) shell vanishes", True, qt.shell_zero))
        if n <= n_rewrite:
            bx, by = delta.bidegree
            bad = 0
            total = 0
            for xe in iproduct(range(bx + 1), repeat=n):
                if sum(xe) > bx:
                    continue
                for ye in iproduct(range(by + 1), repeat=n):
                    if sum(ye) > by:
                        continue
                    total += 1
                    try:
                        normal_form(Monomial(tuple(xe), tuple(ye)), K, L,
                                    delta=delta, validate=True)
                    except RewriteDefectError:
                        bad += 1
            checks.append(Check(f"hooks({K},{L}) rewriting exact on {total} ops", 0, bad))
        if n <= n_gens:
            gens = generators(K, L)
            good = sum(annihilates(p, delta) for _, p in gens.entries)
            checks.append(Check(f"hooks({K},{L}) generators annihilate", len(gens), good))
        if n <= n_instances:
            for which in (1, 2, 3, 4):
                seen = good = 0
                for inst in proposition_instances(n, K, L, which):
                    seen += 1
                    good += annihilates(inst, delta)
                checks.append(Check(f"hooks({K},{L}) schema-{which} instances", seen, good))
        if n <= n_split:
            ok = all(reconstruct(split(d)[0], True, K, L) == d
                     and reconstruct(split(d)[1], False, K, L) == d
                     for d in drawings)
            checks.append(Check(f"hooks({K},{L}) reconstruct o split = id", True, ok))
        if n <= n_son:
            _, _, acyclic = descendant_graph(K, L, delta)
            checks.append(Check(f"hooks({K},{L}) descendant graph acyclic", True, acyclic))
            ok = all(is_son(a, b, delta) == is_son(flip(b), flip(a), delta)
                     for a in drawings for b in drawings if a != b)
            checks.append(Check(f"hooks({K},{L}) flip-son duality", True, ok))
        if n <= n_flip:
            family = set(drawings)
            ok = all(flip(d) in family and flip(flip(d)) == d for d in family)
            checks.append(Check(f"hooks({K},{L}) flip involution", True, ok))
        return checks

    jobs = list(_hooks_up_to(max(n_counts, n_rank, n_closure, n_rewrite,
                                 n_gens, n_split, n_son, n_flip)))
    if args.threads and args.threads > 1:
        with ThreadPoolExecutor(max_workers=args.threads) as pool:
            for checks in pool.map(hook_checks, jobs):
                report.checks.extend(checks)
    else:
        for pair in jobs:
            report.checks.extend(hook_checks(pair))

    for n in range(1, n_zerox_count + 1):
        for mu in partitions_of(n):
            count, expected = count_check(mu)
            report.checks.append(Check(f"zerox count {mu}", expected, count))
    for n in range(1, n_zerox_rank + 1):
        for mu in partitions_of(n):
            delta = build_delta(mu)
            result = verify_zero_x_degree_basis(mu, delta)
            ok = (result["count_ok"] and result["triangularity_ok"]
                  and result["distinct_minimal_monomials"] and result["rank_ok"]
                  and result["dim_zero_slice_ok"] and result["x_degree_zero_ok"]
                  and result["x_degree_top_ok"])
            report.checks.append(Check(f"zerox basis {mu}", True, ok))
    for n in range(1, n_corner + 1):
        bad = [str(mu) for mu in partitions_of(n) if not corner_recursion_check(mu)]
        report.checks.append(Check(f"corner recursion n={n}", [], bad))

    fixture = "y1^2*x2*x4*x5^2*y6"
    op = next(iter(parse_poly(fixture, n=8).terms))
    drawing = reconstruct(diagram_of_monomial(op, 7), True, 3, 4)
    report.checks.append(Check("worked operator round-trip", fixture,
                               format_monomial(diff_op_of(split(drawing)[0], 8))))
    for fx in ("x2*y2*x3^4*x4^3*x6*x7^2*x8", "y1^3*y2*y5^2*y6*y9"):
        report.checks.append(Check(f"monomial fixture {fx}", fx,
                                   format_poly(parse_poly(fx))))


_COMMANDS = {
    "delta": _cmd_delta,
    "hooks": _cmd_hooks,
    "ideal": _cmd_ideal,
    "zerox": _cmd_zerox,
    "suite": _cmd_suite,
}


def _run_parsed(args) -> tuple[Report, int]:
    name = args.command
    if getattr(args, "subcommand", None):
        name = f"{args.command} {args.subcommand}"
    params = {k: v for k, v in vars(args).items()
              if k not in ("command", "subcommand", "output") and v is not None}
    report = Report(command=name, params=params, seed=args.seed)
    started = time.monotonic()
    try:
        _COMMANDS[args.command](args, report)
    except SizeLimitError as exc:
        report.extra_lines.append(f"size limit: {exc}")
        report.runtime_ms = int((time.monotonic() - started) * 1000)
        return report, EXIT_SIZE_LIMIT
    report.runtime_ms = int((time.monotonic() - started) * 1000)
    return report, EXIT_OK if report.ok else EXIT_CHECK_FAILED


def run(argv: list[str]) -> tuple[Report, int]:
    return _run_parsed(_parser().parse_args(argv))


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else argv
    try:
        args = _parser().parse_args(argv)
    except SystemExit as exc:
        code = exc.code if isinstance(exc.code, int) else EXIT_USAGE
        return EXIT_USAGE if code not in (0, None) else 0
    report, status = _run_parsed(args)
    if args.output == "json":
        print(report.to_json())
    else:
        print(report.to_text())
    return status


if __name__ == "__main__":
    sys.exit(main())
