"""Command-line interface: ``symgames <subcommand> ...``.

Exit status: 0 when the statistical verdict passes, 1 when it fails, 2 on
usage or I/O errors.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from ..core import format_set, load_game, parse_set
from ..errors import GameError, TooFewTrials
from ..sampling import KINDS, SamplerSpec
from ..solver import analyze
from .census import (
    ExperimentConfig,
    run_census,
    run_conditional,
    run_totally_mixed,
    tournament_census_exact,
    two_by_two_census,
)
from .report import FORMATS, rational_str, write_report
from .stats import evaluate_census

EXIT_PASS, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

DEFAULTS = {
    "dist": "odd-int",
    "n": None,
    "trials": 100_000,
    "seed": 1,
    "bound": 4,
    "half_width": "1",
    "base": "odd-int",
    "game": None,
    "workers": 1,
    "out": None,
    "format": None,
    "z_threshold": 4.0,
    "min_trials": 100,
    "set": None,
}


class UsageError(Exception):
    pass


def _add_sampler_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("--config", help="JSON file with defaults for any of these flags")
    p.add_argument("--dist", choices=KINDS, default=None)
    p.add_argument("--n", type=int, default=None, help="number of actions")
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--bound", type=int, default=None, help="odd-int: entries up to 2*B+1 in absolute value")
    p.add_argument("--half-width", dest="half_width", default=None, help="uniform: magnitude range [0, W]")
    p.add_argument("--base", choices=[k for k in KINDS if k != "symmetrized"], default=None,
                   help="base distribution for --dist symmetrized")
    p.add_argument("--game", default=None, help="game file for the constant distribution")
    p.add_argument("--workers", type=int, default=None)
    p.add_argument("--z-threshold", dest="z_threshold", type=float, default=None)
    p.add_argument("--min-trials", dest="min_trials", type=int, default=None)
    p.add_argument("--out", default=None, help="write a report file")
    p.add_argument("--format", choices=FORMATS, default=None)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="symgames", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="solve a game file")
    p.add_argument("game_file")
    p.add_argument("--report", choices=FORMATS, default="json")

    for name, text in (("census", "support histogram of random games"),
                       ("totally-mixed", "frequency of totally mixed optima")):
        _add_sampler_flags(sub.add_parser(name, help=text))

    p = sub.add_parser("conditional", help="support S given a totally mixed subgame on S")
    _add_sampler_flags(p)
    p.add_argument("--set", nargs="+", default=None,
                   help='bitmask, "{1,2,3}", or several action numbers')

    p = sub.add_parser("tournament-exact", help="solve every tournament on n actions")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=FORMATS, default=None)

    p = sub.add_parser("two-by-two", help="full-support frequency in random 2x2 zero-sum games")
    p.add_argument("--trials", type=int, default=1_000_000)
    p.add_argument("--seed", type=int, default=1)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--z-threshold", dest="z_threshold", type=float, default=4.0)
    p.add_argument("--out", default=None)
    p.add_argument("--format", choices=FORMATS, default=None)
    return parser


def _merged(args: argparse.Namespace) -> dict:
    opts = dict(DEFAULTS)
    if getattr(args, "config", None):
        try:
            with open(args.config, encoding="utf-8") as fh:
                loaded = json.load(fh)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from None
        for key, value in loaded.items():
            key = key.replace("-", "_")
            if key not in opts:
                raise UsageError(f"unknown config key {key!r}")
            opts[key] = value
    for key in opts:
        value = getattr(args, key, None)
        if value is not None:
            opts[key] = value
    return opts


def _parse_conditioning(value) -> int:
    if isinstance(value, int):
        return value
    if isinstance(value, str):
        value = [value]
    tokens = [t for t in value if t.strip()]
    if len(tokens) == 1:
        return parse_set(tokens[0])
    return parse_set("{" + ",".join(t.strip("{},") for t in tokens) + "}")


def _sampler(opts: dict) -> SamplerSpec:
    if opts["n"] is None:
        raise UsageError("--n is required")
    n = int(opts["n"])
    common = {"bound": int(opts["bound"]), "half_width": Fraction(str(opts["half_width"]))}

    def make(kind: str) -> SamplerSpec:
        if kind == "constant":
            if not opts["game"]:
                raise UsageError("the constant distribution needs --game FILE")
            return SamplerSpec("constant", n, game=load_game(opts["game"]), **common)
        return SamplerSpec(kind, n, **common)

    if opts["dist"] == "symmetrized":
        return SamplerSpec("symmetrized", n, base=make(opts["base"]), **common)
    return make(opts["dist"])


def _config(opts: dict, conditioning=None) -> ExperimentConfig:
    return ExperimentConfig(
        sampler=_sampler(opts),
        trials=int(opts["trials"]),
        seed=int(opts["seed"]),
        workers=int(opts["workers"]),
        conditioning=conditioning,
        z_threshold=float(opts["z_threshold"]),
        min_trials=int(opts["min_trials"]),
    )


def _fmt_of(opts: dict) -> str:
    if opts.get("format"):
        return opts["format"]
    out = opts.get("out") or ""
    return "json" if out.endswith(".json") else "csv"


def _maybe_write(report, opts: dict, config: dict | None = None) -> None:
    if opts.get("out"):
        write_report(report, opts["out"], _fmt_of(opts), config)
        print(f"report written to {opts['out']}")


def _print_frequency(res) -> None:
    lo, hi = res.ci
    print(f"{res.name}: {res.hits}/{res.trials} = {float(res.frequency):.6f}  "
          f"expected {float(res.expected):.6f}  z = {res.z:+.3f}  "
          f"ci [{lo:.6f}, {hi:.6f}]  {'PASS' if res.passed else 'FAIL'}")


def cmd_solve(args) -> int:
    G = load_game(args.game_file)
    r = analyze(G)
    payload = {
        "n": G.n,
        "strategy": [rational_str(x) for x in r.strategy],
        "support": format_set(sum(1 << i for i, x in enumerate(r.strategy) if x > 0)),
        "maximal_support": format_set(r.maximal_support),
        "maximal_support_bitmask": r.maximal_support,
        "unique": r.unique,
        "quasi_strict": r.quasi_strict,
        "value": rational_str(r.value),
    }
    if args.report == "json":
        print(json.dumps(payload, indent=2))
    else:
        print("key,value")
        for k, v in payload.items():
            v = " ".join(v) if isinstance(v, list) else v
            print(f"{k},{v}")
    return EXIT_PASS


def cmd_census(args) -> int:
    opts = _merged(args)
    config = _config(opts)
    hist = run_census(config)
    print(f"census: {config.sampler.to_dict()} trials={hist.trials} seed={config.seed} "
          f"degenerate={hist.degenerate}")
    try:
        report = evaluate_census(hist, z_threshold=config.z_threshold, min_trials=config.min_trials)
    except TooFewTrials:
        for S, c in hist.counts.items():
            print(f"{format_set(S):<16}{c:>10}")
        raise
    print(f"{'support':<16}{'count':>10}{'freq':>12}{'expected':>12}{'z':>9}")
    for r in report.rows:
        print(f"{format_set(r.support):<16}{r.count:>10}{float(r.frequency):>12.6f}"
              f"{float(r.expected):>12.6f}{r.z:>+9.3f}")
    print(f"chi2 = {report.chi2:.3f} (p = {report.chi2_pvalue:.4f}), even-support draws = "
          f"{report.even_violations}, degenerate rate = {report.degenerate_rate:.2e}")
    print("verdict: " + ("PASS" if report.passed else "FAIL: " + "; ".join(report.failures)))
    _maybe_write(report, opts, config.to_dict())
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_totally_mixed(args) -> int:
    opts = _merged(args)
    config = _config(opts)
    res = run_totally_mixed(config)
    print(f"totally-mixed: {config.sampler.to_dict()} seed={config.seed} degenerate={res.degenerate}")
    _print_frequency(res)
    _maybe_write(res, opts, config.to_dict())
    return EXIT_PASS if res.passed else EXIT_FAIL


def cmd_conditional(args) -> int:
    opts = _merged(args)
    if opts["set"] is None:
        raise UsageError("--set is required")
    S = _parse_conditioning(opts["set"])
    config = _config(opts, conditioning=S)
    res = run_conditional(config)
    print(f"conditional: S = {format_set(S)} {config.sampler.to_dict()} seed={config.seed}")
    _print_frequency(res.conditional)
    _print_frequency(res.conditioning)
    _maybe_write(res, opts, config.to_dict())
    return EXIT_PASS if res.passed else EXIT_FAIL


def cmd_tournament_exact(args) -> int:
    hist, report = tournament_census_exact(args.n)
    print(f"tournament-exact: n={args.n} games={hist.trials} non-unique={hist.degenerate}")
    for r in report.rows:
        print(f"{format_set(r.support):<16}{r.count:>10}  expected {r.expected * hist.trials}")
    print("by cardinality: " + ", ".join(f"|S|={k}: {c}" for k, c in hist.by_cardinality().items()))
    print("verdict: " + ("PASS" if report.passed else "FAIL: " + "; ".join(report.failures)))
    _maybe_write(report, vars(args), {"kind": "all-tournaments", "n": args.n})
    return EXIT_PASS if report.passed else EXIT_FAIL


def cmd_two_by_two(args) -> int:
    res = two_by_two_census(args.trials, args.seed, workers=args.workers, z_threshold=args.z_threshold)
    _print_frequency(res)
    _maybe_write(res, vars(args), {"trials": args.trials, "seed": args.seed})
    return EXIT_PASS if res.passed else EXIT_FAIL


COMMANDS = {
    "solve": cmd_solve,
    "census": cmd_census,
    "totally-mixed": cmd_totally_mixed,
    "conditional": cmd_conditional,
    "tournament-exact": cmd_tournament_exact,
    "two-by-two": cmd_two_by_two,
}


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return COMMANDS[args.command](args)
    except (UsageError, GameError, OSError) as exc:
        print(f"symgames {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
