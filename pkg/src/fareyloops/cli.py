"""Command-line front end.

Human mode mirrors the brace-list and bracket notation used throughout the
library so outputs can be diffed against printed tables; record mode emits
stable key=value lines for golden-file comparison.  Verify subcommands fan
out across a thread pool and merge per-unit reports in input order, so output
is deterministic for a fixed seed regardless of thread count.
"""

from __future__ import annotations

import argparse
import os
import re
import sys
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, replace
from typing import Optional, Sequence

from . import contfrac, cutting, gamma_paths, heights, loops, rationals
from .contfrac import CFExpansion, cf_from_rational, cf_of_surd, format_cf, parse_cf
from .rationals import Rational
from .surds import QuadSurd

THREADS_ENV = "FAREYLOOPS_THREADS"

_SURD_RE = re.compile(
    r"^\(\s*(-?\d+)\s*\+\s*sqrt\(\s*(\d+)\s*\)\s*\)\s*/\s*(-?\d+)$"
)
_SQRT_RE = re.compile(r"^sqrt\(\s*(\d+)\s*\)(?:\s*/\s*(\d+))?$")


@dataclass(frozen=True)
class Config:
    """Run parameters; all limits positive, seed fixes every random scan."""

    seed: int = 0
    threads: int = 1
    depth: Optional[int] = None
    q_max: int = 150
    count: int = 100
    mode: str = "human"

    def __post_init__(self):
        if self.threads < 1 or self.q_max < 1 or self.count < 1:
            raise ValueError("limits must be positive")
        if self.mode not in ("human", "record"):
            raise ValueError("mode must be human or record")


def load_config(path: str) -> dict:
    values: dict = {}
    with open(path, encoding="utf-8") as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ValueError(f"bad config line: {raw.rstrip()}")
            key, _, val = line.partition("=")
            values[key.strip()] = val.strip()
    return values


def parse_value(text: str):
    """Rational `p/q`, integer, surd `(P+sqrt(D))/Q` or `sqrt(D)[/Q]`, or `[...]`."""
    s = text.strip()
    if s.startswith("["):
        return parse_cf(s)
    m = _SURD_RE.match(s)
    if m:
        return QuadSurd(int(m.group(1)), int(m.group(3)), int(m.group(2)))
    m = _SQRT_RE.match(s)
    if m:
        return QuadSurd(0, int(m.group(2) or 1), int(m.group(1)))
    if "/" in s:
        num, _, den = s.partition("/")
        return Rational(int(num), int(den))
    return Rational(int(s))


def expansions_of(value) -> list[CFExpansion]:
    """All expansions the input denotes: both twins of a rational, or one."""
    if isinstance(value, CFExpansion):
        return [value]
    if isinstance(value, Rational):
        canonical, twin = cf_from_rational(value)
        if canonical == twin:
            return [canonical]
        return [canonical, twin]
    return [cf_of_surd(value)]


def _parse_range(text: str) -> tuple[int, int]:
    lo, _, hi = text.partition("..")
    if not hi:
        raise ValueError(f"range must look like a..b, got {text!r}")
    return int(lo), int(hi)


# ---------------------------------------------------------------------------
# subcommands


def cmd_cf(args, cfg: Config, out) -> int:
    value = parse_value(args.value)
    exps = expansions_of(value)
    if args.shift:
        exps = [contfrac.shift_cf(e, args.shift) for e in exps]
    if args.times > 1:
        exps = [contfrac.multiply_cf(e, args.times) for e in exps]
    for e in exps:
        print(format_cf(e), file=out)
    return 0


def cmd_semiconv(args, cfg: Config, out) -> int:
    e = expansions_of(parse_value(args.value))[0]
    if args.k is not None and args.m is not None:
        value = contfrac.semiconvergent(e, args.k, args.m)
        print(f"k={args.k} m={args.m} value={value}", file=out)
        return 0
    last = e.last_index if e.is_finite else (args.depth or cfg.depth or 8)
    for k in range(last):
        pivot = contfrac.convergent(e, k)
        for m in range(e.entry(k + 1) + 1):
            value = contfrac.semiconvergent(e, k, m)
            if m >= 1:
                # consecutive fan vertices differ by the pivot
                step = rationals.farey_difference(
                    value, contfrac.semiconvergent(e, k, m - 1)
                )
                assert step == pivot
            print(f"k={k} m={m} value={value} pivot={pivot}", file=out)
    return 0


def cmd_loopcheck(args, cfg: Config, out) -> int:
    e = expansions_of(parse_value(args.value))[0]
    verdict = loops.is_infinite_loop(e, args.mod, args.depth or cfg.depth)
    print(verdict.record(), file=out)
    if args.geometric:
        geo = cutting.loop_verdict_geometric(e, args.mod, args.depth or cfg.depth)
        print(f"geometric: {geo.record()}", file=out)
    return 0


def cmd_loop_exists(args, cfg: Config, out) -> int:
    lo, hi = _parse_range(args.n_range)
    for n in range(lo, hi + 1):
        print(f"n={n} loop_exists={1 if loops.loop_exists(n) else 0}", file=out)
    return 0


def cmd_loop_example(args, cfg: Config, out) -> int:
    e = loops.loop_example(args.mod)
    verdict = loops.is_infinite_loop(e, args.mod)
    print(format_cf(e), file=out)
    print(f"verdict={verdict.record()}", file=out)
    if args.scale_check:
        ok = loops.loop_scaling_check(e, args.mod, args.scale_check)
        print(f"scale_check k={args.scale_check} pass={1 if ok else 0}", file=out)
    return 0


def _format_vertex_round(i: int, verts) -> str:
    return f"V_{i} = {{" + ",".join(str(v) for v in verts) + "}"


def _format_denom_round(i: int, seq) -> str:
    return f"D_{i} = {{" + ",".join(str(d) for d in seq) + "}"


def cmd_gamma_path(args, cfg: Config, out) -> int:
    n = args.mod
    if args.denoms:
        run = gamma_paths.d_algorithm(n, args.max_iter)
        for i, seq in enumerate(run.rounds):
            print(_format_denom_round(i, seq), file=out)
    else:
        run = gamma_paths.v_algorithm(n, args.max_iter)
        for i, verts in enumerate(run.rounds):
            print(_format_vertex_round(i, verts), file=out)
    if run.terminated:
        print(f"terminated after {run.rounds_run} rounds", file=out)
    else:
        blocked = 1 if gamma_paths.nonterminating(n) else 0
        print(
            f"exceeded max_iter={run.rounds_run} (nonterminating={blocked})",
            file=out,
        )
    return 0


def cmd_cutseq(args, cfg: Config, out) -> int:
    e = expansions_of(parse_value(args.value))[0]
    depth = args.depth or cfg.depth
    word_depth = None if e.is_finite else (depth or 12)
    print(f"word: {cutting.eta_inverse(e, word_depth)}", file=out)
    edges = cutting.crossed_edges(e, depth if e.is_finite else (depth or 12))
    value = contfrac.cf_value(e)
    for edge in edges:
        assert edge.is_base or cutting.crosses_edge(value, edge)
        print(str(edge), file=out)
    if args.mod:
        walk = loops.sb_walk(e, args.mod, depth or 12)
        print("walk: " + " ".join(f"{l}:{r}" for l, r in walk), file=out)
    return 0


def cmd_spectrum(args, cfg: Config, out) -> int:
    e = expansions_of(parse_value(args.value))[0]
    result = heights.height_spectrum(e, args.p, args.L)
    for ell, b in result.entries:
        print(f"l={ell} B={'oo' if b == float('inf') else b}", file=out)
    if args.persistence:
        for m, ell in heights.persistence_scan(e, args.p, args.persistence, args.L):
            print(f"m={m} l={'-' if ell is None else ell}", file=out)
    return 0


def cmd_mp_bound(args, cfg: Config, out) -> int:
    e = expansions_of(parse_value(args.value))[0]
    upper = heights.mp_upper_bound(e, args.p, args.L)
    print(f"upper={upper}", file=out)
    partial = heights.mp_partial_lower_min(e, args.p, args.L)
    print(f"partial_lower_min={partial} (not a bound)", file=out)
    return 0


VERIFY_CHECKS = (
    "noloop",
    "infl",
    "pro2",
    "count-height",
    "defs-equivalence",
    "thma",
    "dual-pushforward",
)

_PM_DEFAULT = ((2, 1), (2, 2), (2, 3), (2, 4), (2, 5), (3, 1), (3, 2), (3, 3), (5, 1), (5, 2))
_COUNT_PM = ((2, 2), (2, 3), (3, 2), (2, 4), (5, 2))


def _merge_reports(parts: Sequence[heights.ScanReport]) -> heights.ScanReport:
    merged = heights.ScanReport(parts[0].check, parts[0].params)
    for part in parts:
        merged.total += part.total
        merged.violations += part.violations
        merged.skipped += part.skipped
        if merged.first_violation is None:
            merged.first_violation = part.first_violation
        merged.elapsed += part.elapsed
        merged.records.extend(part.records)
    return merged


def cmd_verify(args, cfg: Config, out) -> int:
    name = args.check
    seed = args.seed if args.seed is not None else cfg.seed
    count = args.count or cfg.count
    keep = cfg.mode == "record"

    def fan_out(units, worker, params):
        if cfg.threads > 1:
            with ThreadPoolExecutor(max_workers=cfg.threads) as pool:
                merged = _merge_reports(list(pool.map(worker, units)))
        else:
            merged = _merge_reports([worker(u) for u in units])
        merged.params = params
        return merged

    if name == "noloop":
        lo, hi = _parse_range(args.n_range or "4..25")
        report = fan_out(
            range(lo, hi + 1),
            lambda n: heights.run_noloop_scan([n], count, seed, keep),
            {"n": f"{lo}..{hi}", "count": count, "seed": seed},
        )
    elif name == "infl":
        report = fan_out(
            _PM_DEFAULT,
            lambda pm: heights.run_infl_scan([pm], count, seed, keep),
            {"pm": ",".join(f"{p}^{m}" for p, m in _PM_DEFAULT), "count": count, "seed": seed},
        )
    elif name == "pro2":
        lo, hi = _parse_range(args.n_range or "2..7")
        report = fan_out(
            range(lo, hi + 1),
            lambda n: heights.run_pro2_scan([n], count, seed, keep),
            {"n": f"{lo}..{hi}", "count": count, "seed": seed},
        )
    elif name == "count-height":
        report = fan_out(
            _COUNT_PM,
            lambda pm: heights.run_count_scan([pm], count, seed, L=args.L, keep_records=keep),
            {"pm": ",".join(f"{p}^{m}" for p, m in _COUNT_PM), "count": count, "seed": seed, "L": args.L},
        )
    elif name == "defs-equivalence":
        lo, hi = _parse_range(args.n_range or "2..12")
        report = heights.run_defs_equivalence_scan(args.q_max or cfg.q_max, lo, hi, keep)
    elif name == "thma":
        report = heights.run_thma_scan(count, max(count // 5, 1), seed, keep_records=keep)
    elif name == "dual-pushforward":
        report = heights.run_dual_pushforward_scan(count, seed, keep_records=keep)
    else:
        print(f"unknown check {name!r}", file=sys.stderr)
        return 2
    if keep:
        for rec in report.records:
            print(rec.line(), file=out)
    print(report.summary(), file=out)
    return 0 if report.passed else 1


# ---------------------------------------------------------------------------
# wiring

# every public library operation is exercised by at least one subcommand;
# test_cli checks this table against the package surface
COMMAND_OPERATIONS = {
    "cf": (
        contfrac.cf_from_rational,
        contfrac.cf_of_surd,
        contfrac.parse_cf,
        contfrac.format_cf,
        contfrac.shift_cf,
        contfrac.multiply_cf,
        contfrac.cf_value,
    ),
    "semiconv": (
        contfrac.semiconvergent,
        contfrac.convergent,
        contfrac.convergents,
        contfrac.cf_eval,
        rationals.farey_difference,
        rationals.farey_mediant,
    ),
    "loopcheck": (loops.is_infinite_loop, cutting.loop_verdict_geometric),
    "loop-exists": (loops.loop_exists, loops.loop_graph),
    "loop-example": (loops.loop_example, loops.loop_scaling_check),
    "gamma-path": (
        gamma_paths.v_algorithm,
        gamma_paths.d_algorithm,
        gamma_paths.nonterminating,
        rationals.is_gamma0_neighbor,
    ),
    "cutseq": (
        cutting.eta,
        cutting.eta_inverse,
        cutting.crossed_edges,
        cutting.crosses_edge,
        cutting.fan_chain,
        loops.sb_walk,
        rationals.is_farey_neighbor,
    ),
    "spectrum": (heights.height_spectrum, heights.persistence_scan, contfrac.height),
    "mp-bound": (heights.mp_upper_bound, heights.mp_partial_lower_min),
    "verify": (
        heights.check_noloop_bound,
        heights.check_infl,
        heights.check_pro2,
        heights.check_count_height,
        heights.run_noloop_scan,
        heights.run_infl_scan,
        heights.run_pro2_scan,
        heights.run_count_scan,
        heights.run_defs_equivalence_scan,
        heights.run_thma_scan,
        heights.run_dual_pushforward_scan,
        rationals.is_dual_neighbor,
    ),
}

COMMAND_HANDLERS = {
    "cf": cmd_cf,
    "semiconv": cmd_semiconv,
    "loopcheck": cmd_loopcheck,
    "loop-exists": cmd_loop_exists,
    "loop-example": cmd_loop_example,
    "gamma-path": cmd_gamma_path,
    "cutseq": cmd_cutseq,
    "spectrum": cmd_spectrum,
    "mp-bound": cmd_mp_bound,
    "verify": cmd_verify,
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="fareyloops",
        description="Exact continued-fraction and loop-mod-n computations",
    )
    parser.add_argument("--config", help="key = value defaults file")
    parser.add_argument("--format", choices=("human", "record"), default=None)
    parser.add_argument("--threads", type=int, default=None)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("cf", help="continued fraction expansion(s) of a value")
    p.add_argument("value")
    p.add_argument("--shift", type=int, default=0)
    p.add_argument("--times", type=int, default=1)

    p = sub.add_parser("semiconv", help="semi-convergents of a value")
    p.add_argument("value")
    p.add_argument("--k", type=int)
    p.add_argument("--m", type=int)
    p.add_argument("--depth", type=int)

    p = sub.add_parser("loopcheck", help="infinite-loop verdict mod n")
    p.add_argument("value")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--depth", type=int)
    p.add_argument("--geometric", action="store_true")

    p = sub.add_parser("loop-exists", help="existence of loops per modulus")
    p.add_argument("--n-range", required=True)

    p = sub.add_parser("loop-example", help="a validated loop expansion")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--scale-check", type=int)

    p = sub.add_parser("gamma-path", help="mediant-insertion rounds at level n")
    p.add_argument("--mod", type=int, required=True)
    p.add_argument("--max-iter", type=int, default=10)
    p.add_argument("--denoms", action="store_true")

    p = sub.add_parser("cutseq", help="letter word and crossed edges")
    p.add_argument("value")
    p.add_argument("--depth", type=int)
    p.add_argument("--mod", type=int)

    p = sub.add_parser("spectrum", help="heights under repeated prime scaling")
    p.add_argument("value")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-L", type=int, required=True)
    p.add_argument("--persistence", type=int)

    p = sub.add_parser("mp-bound", help="upper bound from the height spectrum")
    p.add_argument("value")
    p.add_argument("-p", type=int, required=True)
    p.add_argument("-L", type=int, required=True)

    p = sub.add_parser("verify", help="batch inequality scans")
    p.add_argument("check", choices=VERIFY_CHECKS)
    p.add_argument("--seed", type=int)
    p.add_argument("--count", type=int)
    p.add_argument("--n-range")
    p.add_argument("--q-max", type=int)
    p.add_argument("-L", type=int, default=20)

    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)

    cfg = Config()
    if args.config:
        raw = load_config(args.config)
        known = {
            "seed": int,
            "threads": int,
            "depth": int,
            "q_max": int,
            "count": int,
            "mode": str,
        }
        updates = {}
        for key, value in raw.items():
            if key not in known:
                raise SystemExit(f"unknown config key {key!r}")
            updates[key] = known[key](value)
        cfg = replace(cfg, **updates)
    env_threads = os.environ.get(THREADS_ENV)
    if env_threads:
        cfg = replace(cfg, threads=int(env_threads))
    if args.threads is not None:
        cfg = replace(cfg, threads=args.threads)
    if args.format is not None:
        cfg = replace(cfg, mode=args.format)

    try:
        return COMMAND_HANDLERS[args.command](args, cfg, out)
    except (ValueError, ZeroDivisionError, IndexError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
