"""Command-line front end.

Subcommands::

    copydetect eval        single parameter point
    copydetect sweep       CSV of effective efficiency over a parameter grid
    copydetect fig2        the eta=0.6 noiseless sweep over eps in [0.5, 1]
    copydetect montecarlo  exact vs sampled outcome distributions

Exit codes: 0 success, 1 usage error, 2 capability/domain error,
3 Monte Carlo consistency failure.
"""

from __future__ import annotations

import argparse
import math
import sys
from contextlib import contextmanager
from dataclasses import dataclass

import numpy as np

from .cascade import (
    MAX_EXACT_LEVELS,
    MAX_LEVELS,
    CapabilityError,
    SchemeConfig,
    fluctuation_bound,
    monte_carlo_patterns,
    pattern_bits,
    subtree_outcome_distribution,
    total_variation,
)
from .information import (
    DomainError,
    closed_form_effective_efficiency,
    effective_efficiency_limit,
    evaluate,
    improvement_threshold,
)
from .model import CopierParams, DetectorParams

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_MC_FAIL = 3

SWEEPABLE = ("eps", "eta", "xi", "mu", "p")

FIG2 = dict(eta=0.6, xi=0.0, mu=-1.0, p=0.5, levels=(0, 1, 2, 3), sweep="eps=0.5:1.0:0.005")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass(frozen=True)
class SweepSpec:
    name: str
    start: float
    stop: float
    step: float

    def __post_init__(self):
        if self.name not in SWEEPABLE:
            raise UsageError(f"--sweep: cannot sweep {self.name!r}; choose from {', '.join(SWEEPABLE)}")
        if not self.step > 0:
            raise UsageError(f"--sweep: step must be > 0, got {self.step}")
        if self.start > self.stop:
            raise UsageError(f"--sweep: start {self.start} exceeds stop {self.stop}")

    @classmethod
    def parse(cls, text: str) -> SweepSpec:
        try:
            name, rng = text.split("=", 1)
            start, stop, step = (float(v) for v in rng.split(":"))
        except ValueError:
            raise UsageError(f"--sweep: expected NAME=START:STOP:STEP, got {text!r}") from None
        return cls(name.strip(), start, stop, step)

    def grid(self) -> list[float]:
        # small slack so that e.g. (1.0 - 0.5) / 0.005 lands on 100, not 99.999...
        n = math.floor((self.stop - self.start) / self.step + 1e-9) + 1
        return [min(self.start + i * self.step, self.stop) for i in range(n)]


def _fmt(x: float) -> str:
    return f"{x:.10g}"


def _build_params(values: dict) -> tuple[CopierParams, DetectorParams]:
    checks = {"eta": (0, 1), "xi": (0, 1), "eps": (0, 1), "mu": (-1, 1), "p": (0, 1)}
    for name, (lo, hi) in checks.items():
        v = values[name]
        if not lo <= v <= hi:
            raise UsageError(f"--{name} must lie in [{lo}, {hi}], got {v}")
    if not 0 < values["p"] < 1:
        raise UsageError(f"--p must lie strictly inside (0, 1), got {values['p']}")
    return CopierParams(values["eps"], values["mu"]), DetectorParams(values["eta"], values["xi"])


def _check_levels(levels, limit=MAX_EXACT_LEVELS):
    for n in levels:
        if n < 0:
            raise UsageError(f"--levels must be non-negative, got {n}")
        if n > MAX_LEVELS:
            raise UsageError(f"--levels must be <= {MAX_LEVELS}, got {n}")
        if n > limit:
            raise CapabilityError(f"--levels {n} exceeds the exact-computation limit {limit}")


def _parse_levels(text: str) -> list[int]:
    try:
        levels = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise UsageError(f"--levels: expected comma-separated integers, got {text!r}") from None
    if not levels:
        raise UsageError("--levels: empty list")
    return levels


@contextmanager
def _output(path: str):
    if path in ("-", "stdout"):
        yield sys.stdout
    else:
        with open(path, "w", newline="") as fh:
            yield fh


def cmd_eval(args) -> int:
    values = vars(args)
    c, d = _build_params(values)
    levels = args.levels
    _check_levels([levels])
    res = evaluate(SchemeConfig(levels, args.p), c, d)
    out = sys.stdout
    print(f"mutual_information_bits: {_fmt(res.mutual_information_bits)}", file=out)
    print(f"eta_e: {_fmt(res.effective_efficiency)}", file=out)
    if d.xi == 0.0 and c.mu == -1.0:
        print(f"eta_e_closed_form: {_fmt(closed_form_effective_efficiency(c.eps, d.eta, levels))}", file=out)
    print(f"improvement_threshold: {_fmt(improvement_threshold(d.eta))}", file=out)
    return EXIT_OK


def sweep_rows(spec: SweepSpec, fixed: dict, levels: list[int]):
    """Yield CSV rows (as lists of floats) for ``spec`` over ``levels``."""
    _check_levels(levels)
    for x in spec.grid():
        values = dict(fixed, **{spec.name: x})
        c, d = _build_params(values)
        row = [x]
        for n in levels:
            row.append(evaluate(SchemeConfig(n, values["p"]), c, d).effective_efficiency)
        row.append(effective_efficiency_limit(c.eps))
        yield row


def write_sweep(fh, spec: SweepSpec, fixed: dict, levels: list[int]) -> None:
    header = [spec.name] + [f"eta_e_N{n}" for n in levels] + ["limit"]
    fh.write(",".join(header) + "\n")
    for row in sweep_rows(spec, fixed, levels):
        fh.write(",".join(_fmt(v) for v in row) + "\n")


def cmd_sweep(args) -> int:
    if args.sweep is None:
        raise UsageError("--sweep NAME=START:STOP:STEP is required")
    spec = SweepSpec.parse(args.sweep)
    fixed = {k: getattr(args, k) for k in SWEEPABLE}
    levels = _parse_levels(args.levels)
    with _output(args.output) as fh:
        write_sweep(fh, spec, fixed, levels)
    return EXIT_OK


def cmd_fig2(args) -> int:
    spec = SweepSpec.parse(FIG2["sweep"])
    fixed = dict(eps=1.0, eta=FIG2["eta"], xi=FIG2["xi"], mu=FIG2["mu"], p=FIG2["p"])
    with _output(args.output) as fh:
        write_sweep(fh, spec, fixed, list(FIG2["levels"]))
    return EXIT_OK


def cmd_montecarlo(args) -> int:
    c, d = _build_params(vars(args))
    levels = args.levels
    _check_levels([levels], limit=MAX_LEVELS if args.no_exact else MAX_EXACT_LEVELS)
    if args.trials < 1:
        raise UsageError(f"--trials must be >= 1, got {args.trials}")
    bit = 1 if args.input == "photon" else 0
    samples = monte_carlo_patterns(bit, levels, c, d, args.trials, args.seed)
    n_leaves = 1 << levels
    out = sys.stdout
    print(f"input: {args.input}  levels: {levels}  trials: {args.trials}  seed: {args.seed}", file=out)

    if args.no_exact:
        patterns, counts = np.unique(samples, return_counts=True)
        order = np.argsort(-counts, kind="stable")[: args.max_rows]
        print("pattern,empirical", file=out)
        for i in order:
            print(f"{pattern_bits(int(patterns[i]), n_leaves)},{_fmt(counts[i] / args.trials)}", file=out)
        print(f"distinct_patterns: {len(patterns)}", file=out)
        return EXIT_OK

    exact = subtree_outcome_distribution(bit, levels, c, d)
    empirical = np.bincount(samples.astype(np.int64), minlength=exact.size) / args.trials
    shown = np.flatnonzero((exact > 0) | (empirical > 0))[: args.max_rows]
    print("pattern,exact,empirical", file=out)
    for i in shown:
        print(f"{pattern_bits(int(i), n_leaves)},{_fmt(exact[i])},{_fmt(empirical[i])}", file=out)
    tv = total_variation(exact, empirical)
    bound = fluctuation_bound(levels, args.trials)
    print(f"tv_distance: {_fmt(tv)}", file=out)
    print(f"bound: {_fmt(bound)}", file=out)
    if tv > bound:
        print("FAIL: sampled distribution outside the fluctuation bound", file=out)
        return EXIT_MC_FAIL
    print("OK", file=out)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--eta", type=float, default=0.6, help="detector efficiency (default 0.6)")
    common.add_argument("--xi", type=float, default=0.0, help="detector dark-count parameter (default 0)")
    common.add_argument("--eps", type=float, default=1.0, help="copier success probability (default 1)")
    common.add_argument("--mu", type=float, default=-1.0, help="copier failure shape (default -1)")
    common.add_argument("--p", type=float, default=0.5, help="prior photon probability (default 0.5)")

    parser = _Parser(prog="copydetect", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("eval", parents=[common], help="evaluate one parameter point")
    p.add_argument("--levels", type=int, default=1, help="number of copier levels (default 1)")
    p.set_defaults(func=cmd_eval)

    p = sub.add_parser("sweep", parents=[common], help="sweep one parameter, write CSV")
    p.add_argument("--sweep", help="NAME=START:STOP:STEP with NAME in " + ",".join(SWEEPABLE))
    p.add_argument("--levels", default="0,1,2,3", help="comma-separated copier levels")
    p.add_argument("--output", default="stdout", help="output path or 'stdout'")
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("fig2", help="eta=0.6 noiseless sweep over eps, N=0..3 plus limit")
    p.add_argument("--output", default="stdout", help="output path or 'stdout'")
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("montecarlo", parents=[common], help="compare sampled and exact distributions")
    p.add_argument("--levels", type=int, default=1, help="number of copier levels (default 1)")
    p.add_argument("--input", choices=("photon", "vacuum"), default="photon")
    p.add_argument("--trials", type=int, default=100_000)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--no-exact", action="store_true", help="skip the exact comparison (allows levels 5)")
    p.add_argument("--max-rows", type=int, default=64, help="pattern rows to print")
    p.set_defaults(func=cmd_montecarlo)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"copydetect {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (CapabilityError, DomainError) as exc:
        print(f"copydetect {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


if __name__ == "__main__":
    sys.exit(main())
