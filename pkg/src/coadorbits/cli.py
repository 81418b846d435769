"""Command-line front end.

Subcommands: roots, chart, dim, decompose, dims, verify. Exit codes:
0 success, 1 usage or input error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from fractions import Fraction

from .basic import basic_map_to_json, decompose, achievable_dimensions, max_weyl_index
from .functionals import functional_from_json, orbit_dimension
from .oracle import (
    DEFAULT_SEED,
    SUITE_NAMES,
    SuiteConfig,
    UnknownSuiteError,
    run_suite,
)
from .orbits import (
    chart_equations_latex,
    chart_equations_text,
    chart_to_json,
    orbit_chart,
)
from .roots import (
    InvalidRootError,
    RankRangeError,
    RootSystemKind,
    get_system,
    parse_root,
    system_to_json,
)

USAGE_ERROR = 1
VERIFY_ERROR = 2


@dataclass(frozen=True)
class CliConfig:
    """Common knobs shared by the subcommands."""

    kind: str | None = None
    n: int | None = None
    format: str = "text"
    seed: int = DEFAULT_SEED
    out: str | None = None


def config_from_args(args: argparse.Namespace) -> CliConfig:
    return CliConfig(
        kind=getattr(args, "kind", None),
        n=getattr(args, "n", None),
        format=getattr(args, "format", "text"),
        seed=getattr(args, "seed", DEFAULT_SEED),
        out=getattr(args, "out", None),
    )


class _Parser(argparse.ArgumentParser):
    """argparse defaults to exit code 2 on usage errors; we reserve 2 for verify."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(USAGE_ERROR, f"{self.prog}: error: {message}\n")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    else:
        print(text)


def _add_common(parser, *, kind=False, n=False, fmt=True):
    if kind:
        parser.add_argument("--kind", required=True, choices=[k.value for k in RootSystemKind])
    if n:
        parser.add_argument("--n", required=True, type=int)
    if fmt:
        parser.add_argument("--format", default="text", choices=("text", "json", "latex"))
    parser.add_argument("--out", default=None, help="write output to this path")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="coadorbits", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("roots", help="list the positive roots")
    _add_common(p, kind=True, n=True)

    p = sub.add_parser("chart",
                       help="defining equations of an elementary orbit")
    _add_common(p, kind=True, n=True)
    p.add_argument("--alpha", required=True, help='root name, e.g. "e1-e4"')
    p.add_argument("--c", default="1", help='orbit level, a rational like "2" or "-3/5"')

    p = sub.add_parser("dim",
                       help="orbit dimension of a functional (JSON file)")
    p.add_argument("functional", help="path to a functional JSON file")
    _add_common(p)

    p = sub.add_parser("decompose",
                       help="unique basic subset and phi of a type-A functional")
    p.add_argument("functional", help="path to a functional JSON file")
    _add_common(p)

    p = sub.add_parser("dims",
                       help="achievable coadjoint-orbit dimensions in type A")
    p.add_argument("--n", required=True, type=int)
    _add_common(p)

    p = sub.add_parser("verify", help="run a verification suite")
    p.add_argument("--suite", required=True, choices=SUITE_NAMES)
    p.add_argument("--max-n", type=int, default=None)
    p.add_argument("--trials", type=int, default=None)
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.add_argument("--kind", default=None, choices=[k.value for k in RootSystemKind],
                   help="restrict the suite to one kind where that makes sense")
    _add_common(p)
    return parser


def _load_functional(path: str):
    with open(path, encoding="utf-8") as handle:
        return functional_from_json(json.load(handle))


def _cmd_roots(args, cfg: CliConfig) -> int:
    system = get_system(args.kind, args.n)
    if cfg.format == "json":
        _emit(json.dumps(system_to_json(system), sort_keys=True), cfg.out)
    elif cfg.format == "latex":
        _emit("\n".join(r.latex() for r in system.roots), cfg.out)
    else:
        _emit("\n".join(f"{k}: {r}" for k, r in enumerate(system.roots)), cfg.out)
    return 0


def _cmd_chart(args, cfg: CliConfig) -> int:
    alpha = parse_root(args.alpha)
    chart = orbit_chart(args.kind, args.n, alpha, Fraction(args.c))
    free = " ".join(str(r) for r in chart.data.singular)
    if cfg.format == "json":
        _emit(json.dumps(chart_to_json(chart), sort_keys=True), cfg.out)
    elif cfg.format == "latex":
        lines = chart_equations_latex(chart)
        lines.append(r"\text{free: } " + ", ".join(
            f"e_{{{r.latex()}}}" for r in chart.data.singular))
        _emit("\n".join(lines), cfg.out)
    else:
        lines = chart_equations_text(chart)
        lines.append(f"free: {free}" if free else "free: (none)")
        _emit("\n".join(lines), cfg.out)
    return 0


def _cmd_dim(args, cfg: CliConfig) -> int:
    f = _load_functional(args.functional)
    dim = orbit_dimension(f)
    if cfg.format == "json":
        _emit(json.dumps({"dimension": dim, "weyl_index": dim // 2}, sort_keys=True), cfg.out)
    else:
        _emit(str(dim), cfg.out)
    return 0


def _cmd_decompose(args, cfg: CliConfig) -> int:
    f = _load_functional(args.functional)
    result = decompose(f)
    if cfg.format == "json":
        _emit(json.dumps(basic_map_to_json(result.map), sort_keys=True), cfg.out)
    else:
        lines = ["roots: " + (" ".join(str(r) for r in result.subset.roots) or "(empty)")]
        lines.extend(f"phi[{r}] = {result.map.phi[r]}" for r in result.subset.roots)
        _emit("\n".join(lines), cfg.out)
    return 0


def _cmd_dims(args, cfg: CliConfig) -> int:
    dims = achievable_dimensions(args.n)
    indices = [d // 2 for d in dims]
    if cfg.format == "json":
        payload = {
            "n": args.n,
            "dims": dims,
            "weyl_indices": indices,
            "max_dimension": dims[-1],
            "max_weyl_index": max_weyl_index(args.n),
        }
        _emit(json.dumps(payload, sort_keys=True), cfg.out)
    else:
        lines = [" ".join(str(d) for d in dims), "m: " + " ".join(str(m) for m in indices)]
        _emit("\n".join(lines), cfg.out)
    return 0


def _cmd_verify(args, cfg: CliConfig) -> int:
    kinds = (RootSystemKind(args.kind),) if args.kind else None
    config = SuiteConfig(kinds=kinds, max_n=args.max_n, trials=args.trials, seed=cfg.seed)
    report = run_suite(args.suite, config)
    if cfg.format == "json":
        _emit(json.dumps(report.to_json(), sort_keys=True), cfg.out)
    else:
        lines = [f"suite {report.check_name}: {report.verdict.upper()} ({report.trials} checks)"]
        for failure in report.failures[:10]:
            lines.append(f"  failure: {failure}")
        if len(report.failures) > 10:
            lines.append(f"  ... and {len(report.failures) - 10} more")
        _emit("\n".join(lines), cfg.out)
    return 0 if report.passed else VERIFY_ERROR


_DISPATCH = {
    "roots": _cmd_roots,
    "chart": _cmd_chart,
    "dim": _cmd_dim,
    "decompose": _cmd_decompose,
    "dims": _cmd_dims,
    "verify": _cmd_verify,
}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return _DISPATCH[args.command](args, config_from_args(args))
    except (RankRangeError, InvalidRootError, UnknownSuiteError) as exc:
        print(f"coadorbits: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except (ValueError, ZeroDivisionError) as exc:
        print(f"coadorbits: error: {exc}", file=sys.stderr)
        return USAGE_ERROR
    except OSError as exc:
        print(f"coadorbits: error: {exc}", file=sys.stderr)
        return USAGE_ERROR


if __name__ == "__main__":
    sys.exit(main())
