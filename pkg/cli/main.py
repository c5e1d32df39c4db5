"""idforge command line: list, verify and eval."""

from __future__ import annotations

import argparse
import re
import sys
from collections.abc import Sequence
from dataclasses import dataclass, field
from fractions import Fraction

from catalog.registry import (
    TermBudgetExceeded,
    build_side,
    get_identity,
    list_identities,
    validate_params,
)
from catalog.schema import IdentityDescriptor, ParamKind, SchemaError, UnknownIdentityError
from config.grids import GrammarError, load_grid_config, parse_rational, parse_values
from config.settings import settings
from kernel.polynomial import KernelError, poly_eval
from models.data import Mode, Mutation, ParamValue, Side
from utils.helpers import get_logger, write_text
from verifier.report import ReportFormat, render
from verifier.suite import GridError, GridSpec, run_suite, suite_passed

log = get_logger(__name__)

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2

_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z0-9_]*$")


class UsageError(Exception):
    """Bad command-line input; reported on one line with exit code 2."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


@dataclass
class CliConfig:
    command: str
    identities: list[str] = field(default_factory=list)
    params: dict[str, list[ParamValue]] = field(default_factory=dict)
    mode: Mode = Mode.SYMBOLIC
    trials: int = 20
    seed: int = 0
    jobs: int = 1
    fmt: ReportFormat = ReportFormat.JSON
    output: str | None = None
    fail_fast: bool = False
    max_n: int | None = None
    timing: bool = True
    mutation: Mutation | None = None
    side: Side | None = None
    assignments: dict[str, Fraction] = field(default_factory=dict)


# ── Parsing ──────────────────────────────────────────────────────────────────


def _build_parser() -> _Parser:
    parser = _Parser(prog="idforge", description="Exact verification of binomial identities.")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("list", help="List catalog entries")

    verify = sub.add_parser("verify", help="Verify identities over a parameter grid")
    verify.add_argument("--identity", action="append", default=[], metavar="NAME")
    verify.add_argument("--all", action="store_true", help="Select every catalog entry")
    verify.add_argument("--param", action="append", default=[], metavar="NAME=VALUES")
    verify.add_argument("--mode", choices=[m.value for m in Mode], default=Mode.SYMBOLIC.value)
    verify.add_argument("--trials", type=int, default=settings.default_trials)
    verify.add_argument("--seed", type=int, default=settings.default_seed)
    verify.add_argument("--jobs", type=int, default=settings.default_jobs)
    verify.add_argument(
        "--format", dest="fmt", choices=[f.value for f in ReportFormat], default="json"
    )
    verify.add_argument("--output", metavar="PATH")
    verify.add_argument("--fail-fast", action="store_true")
    verify.add_argument("--max-n", type=int, metavar="K",
                        help="Cap scalar values at K and drop vectors with |n| > K")
    verify.add_argument("--no-timing", action="store_true", help="Report elapsed_ms as null")
    verify.add_argument("--mutate", choices=[m.value for m in Mutation], help=argparse.SUPPRESS)

    evaluate = sub.add_parser("eval", help="Expand or evaluate one side")
    evaluate.add_argument("--identity", required=True, metavar="NAME")
    evaluate.add_argument("--side", required=True, choices=[s.value for s in Side])
    evaluate.add_argument("--param", action="append", default=[], metavar="NAME=VALUE")
    evaluate.add_argument("--assign", action="append", default=[], metavar="VAR=p/q")
    return parser


def _split_binding(token: str) -> tuple[str, str]:
    name, sep, value = token.partition("=")
    name = name.strip()
    if not sep or not _NAME_RE.match(name):
        raise UsageError(f"malformed binding {token!r}")
    return name, value


def _parse_bindings(tokens: Sequence[str]) -> dict[str, list[ParamValue]]:
    bindings: dict[str, list[ParamValue]] = {}
    for token in tokens:
        name, text = _split_binding(token)
        if name in bindings:
            raise UsageError(f"parameter {name!r} bound twice")
        try:
            bindings[name] = parse_values(text)
        except GrammarError as exc:
            raise UsageError(f"{token}: {exc}") from None
    return bindings


def _resolve_identities(names: Sequence[str]) -> list[IdentityDescriptor]:
    descriptors = []
    for name in names:
        try:
            descriptors.append(get_identity(name))
        except UnknownIdentityError:
            raise UsageError(f"unknown identity {name!r}") from None
    return descriptors


def _check_bindings(
    descriptors: Sequence[IdentityDescriptor], bindings: dict[str, list[ParamValue]]
) -> None:
    """Every binding must be declared by a selected identity with a matching kind."""
    for name, values in bindings.items():
        specs = [s for d in descriptors for s in d.schema if s.name == name]
        if not specs:
            raise UsageError(f"parameter {name!r} is not declared by any selected identity")
        for spec in specs:
            want_vector = spec.kind is ParamKind.VECTOR
            if any(isinstance(v, tuple) != want_vector for v in values):
                kind = "vector" if want_vector else "scalar"
                raise UsageError(f"parameter {name!r} takes {kind} values")


def parse_args(argv: Sequence[str] | None = None) -> CliConfig:
    args = _build_parser().parse_args(argv)
    config = CliConfig(command=args.command)
    if args.command == "list":
        return config

    config.params = _parse_bindings(args.param)

    if args.command == "verify":
        names = [d.name for d in list_identities()] if args.all else list(args.identity)
        descriptors = _resolve_identities(names)
        _check_bindings(descriptors, config.params)
        if args.trials < 1:
            raise UsageError(f"--trials must be at least 1, got {args.trials}")
        if args.jobs < 1:
            raise UsageError(f"--jobs must be at least 1, got {args.jobs}")
        if args.max_n is not None and args.max_n < 0:
            raise UsageError(f"--max-n must be nonnegative, got {args.max_n}")
        config.identities = list(dict.fromkeys(names))
        config.mode = Mode(args.mode)
        config.trials, config.seed, config.jobs = args.trials, args.seed, args.jobs
        config.fmt = ReportFormat(args.fmt)
        config.output = args.output
        config.fail_fast = args.fail_fast
        config.max_n = args.max_n
        config.timing = not args.no_timing
        config.mutation = Mutation(args.mutate) if args.mutate else None
        return config

    descriptors = _resolve_identities([args.identity])
    _check_bindings(descriptors, config.params)
    for name, values in config.params.items():
        if len(values) != 1:
            raise UsageError(f"eval takes a single value for {name!r}")
    config.identities = [args.identity]
    config.side = Side(args.side)
    for token in args.assign:
        name, text = _split_binding(token)
        if name in config.assignments:
            raise UsageError(f"variable {name!r} assigned twice")
        try:
            config.assignments[name] = parse_rational(text)
        except GrammarError as exc:
            raise UsageError(f"{token}: {exc}") from None
    return config


# ── Commands ─────────────────────────────────────────────────────────────────


def cmd_list() -> str:
    lines = [
        "\t".join((d.name, d.schema_summary(), d.reference, d.flag.value))
        for d in list_identities()
    ]
    return "\n".join(lines) + "\n"


def _cap(values: Sequence[ParamValue], limit: int | None) -> tuple[ParamValue, ...]:
    if limit is None:
        return tuple(values)
    return tuple(v for v in values if (sum(v) if isinstance(v, tuple) else v) <= limit)


def build_grid(config: CliConfig) -> GridSpec:
    """Default grid ranges overridden by the command-line bindings."""
    defaults = load_grid_config().grids
    ranges = {}
    for name in config.identities:
        descriptor = get_identity(name)
        table = {}
        for spec in descriptor.schema:
            values = config.params.get(spec.name, defaults.get(name, {}).get(spec.name))
            if values is None:
                raise UsageError(f"no values for {spec.name!r} of {name}")
            table[spec.name] = _cap(values, config.max_n)
        ranges[name] = table
    return GridSpec(
        identities=tuple(config.identities),
        ranges=ranges,
        mode=config.mode,
        trials=config.trials,
        seed=config.seed,
        jobs=config.jobs,
        mutation=config.mutation,
        fail_fast=config.fail_fast,
    )


def cmd_verify(config: CliConfig) -> int:
    grid = build_grid(config)
    try:
        results = run_suite(grid)
    except GridError as exc:
        raise UsageError(str(exc)) from None

    text = render(results, config.seed, config.fmt, timing=config.timing)
    if config.output:
        try:
            write_text(config.output, text)
        except OSError as exc:
            raise UsageError(f"cannot write {config.output}: {exc.strerror or exc}") from None
    else:
        sys.stdout.write(text)
    return EXIT_OK if suite_passed(results) else EXIT_FAIL


def cmd_eval(config: CliConfig) -> str:
    descriptor = get_identity(config.identities[0])
    try:
        params = validate_params(
            descriptor, {name: values[0] for name, values in config.params.items()}
        )
    except SchemaError as exc:
        raise UsageError(str(exc)) from None

    side = build_side(descriptor, params, config.side)
    if not config.assignments:
        return str(side)

    variables = set(descriptor.variables(params))
    unknown = sorted(set(config.assignments) - variables)
    if unknown:
        raise UsageError(f"{descriptor.name} has no variable {unknown[0]!r}")
    missing = sorted(variables - set(config.assignments))
    if missing:
        raise UsageError(f"partial assignment: no value for {', '.join(missing)}")
    try:
        return str(poly_eval(side, config.assignments))
    except (ZeroDivisionError, KernelError) as exc:
        raise UsageError(f"cannot evaluate: {exc}") from None


def main(argv: Sequence[str] | None = None) -> int:
    try:
        config = parse_args(argv)
        if config.command == "list":
            sys.stdout.write(cmd_list())
            return EXIT_OK
        if config.command == "verify":
            return cmd_verify(config)
        sys.stdout.write(cmd_eval(config) + "\n")
        return EXIT_OK
    except UsageError as exc:
        print(f"idforge: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TermBudgetExceeded as exc:
        log.error("Aborted: %s", exc)
        return EXIT_FAIL


if __name__ == "__main__":
    sys.exit(main())
