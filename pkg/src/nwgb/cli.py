"""Command line: inspect diagrams, emit Fulton generators, synthesize union
bases, and run the verification suites.

Exit codes: 0 success, 1 a verification check failed, 2 usage or input
errors.  Data goes to stdout (or --out); verification reports go to stderr
so JSON output stays parseable.
"""

import argparse
import json
import sys
from dataclasses import dataclass, field

from .ideals import fulton_generators, generator_polynomials, load_spec, spec_to_json
from .groebner import (
    buchberger,
    ideals_equal,
    intersect_many,
    is_groebner,
    normal_form,
)
from .permutations import diagram_ascii, diagram_json, essential_set, parse_one_line, rank_matrix
from .polynomials import ANTIDIAGONAL, polynomial_text, polynomial_to_json
from .union import union_basis
from .verify import SUITES, ideal_of, run_suite

EXIT_OK = 0
EXIT_VERIFY = 1
EXIT_USAGE = 2


@dataclass
class RunConfig:
    """Everything one invocation needs, normalized from the parsed flags."""

    command: str
    paths: list[str] = field(default_factory=list)
    fmt: str = "text"
    verify_depth: str = "none"
    seed: int = 0
    max_oracle_n: int = 5
    out: str | None = None
    cases: int | None = None
    suite: str = ""
    permutation: str = ""


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nwgb",
        description="Groebner bases for unions of schemes given by northwest rank conditions",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "json"), default="text")
    common.add_argument("--out", default=None, help="write output to this path")
    sub = parser.add_subparsers(dest="command", required=True)

    p_diagram = sub.add_parser(
        "diagram", parents=[common], help="Rothe diagram, essential set and rank matrix"
    )
    p_diagram.add_argument("permutation", help='one-line notation, e.g. "2 1 4 3"')

    p_fulton = sub.add_parser(
        "fulton", parents=[common], help="Fulton generators of one spec file"
    )
    p_fulton.add_argument("spec", help="path to a spec JSON file")

    p_groebner = sub.add_parser(
        "groebner", parents=[common], help="reduced Groebner basis of one spec's ideal"
    )
    p_groebner.add_argument("spec", help="path to a spec JSON file")

    p_union = sub.add_parser(
        "union", parents=[common], help="Groebner basis of the intersection of the specs"
    )
    p_union.add_argument("specs", nargs="+", help="paths to spec JSON files")
    p_union.add_argument(
        "--verify",
        choices=("none", "membership", "full-oracle"),
        default="none",
        help="check the emitted basis against the oracle",
    )
    p_union.add_argument("--seed", type=int, default=0)
    p_union.add_argument(
        "--max-oracle-n",
        type=int,
        default=5,
        help="largest ambient size allowed under --verify=full-oracle",
    )

    p_verify = sub.add_parser("verify", parents=[common], help="run a property suite")
    p_verify.add_argument("suite", help=f"one of: all, {', '.join(sorted(SUITES))}")
    p_verify.add_argument("--seed", type=int, default=0)
    p_verify.add_argument("--cases", type=int, default=None)
    return parser


def _config(args: argparse.Namespace) -> RunConfig:
    paths = list(getattr(args, "specs", []) or [])
    if getattr(args, "spec", None):
        paths = [args.spec]
    return RunConfig(
        command=args.command,
        paths=paths,
        fmt=args.format,
        verify_depth=getattr(args, "verify", "none"),
        seed=getattr(args, "seed", 0),
        max_oracle_n=getattr(args, "max_oracle_n", 5),
        out=args.out,
        cases=getattr(args, "cases", None),
        suite=getattr(args, "suite", ""),
        permutation=getattr(args, "permutation", ""),
    )


def _emit(text: str, cfg: RunConfig):
    if cfg.out:
        with open(cfg.out, "w", encoding="utf-8") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_diagram(cfg: RunConfig) -> int:
    try:
        p = parse_one_line(cfg.permutation)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    if cfg.fmt == "json":
        _emit(json.dumps(diagram_json(p), indent=2) + "\n", cfg)
        return EXIT_OK
    lines = [diagram_ascii(p), ""]
    essentials = sorted(essential_set(p))
    if essentials:
        lines.append(
            "essential: "
            + "; ".join(f"({c.row},{c.col}) rank {r}" for c, r in essentials)
        )
    else:
        lines.append("essential: none")
    lines.append("rank matrix:")
    for row in rank_matrix(p).entries:
        lines.append(" ".join(str(v) for v in row))
    _emit("\n".join(lines) + "\n", cfg)
    return EXIT_OK


def _cmd_fulton(cfg: RunConfig) -> int:
    try:
        spec = load_spec(cfg.paths[0])
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    gens = fulton_generators(spec)
    if cfg.fmt == "json":
        payload = {
            "spec": spec_to_json(spec),
            "generators": [
                {
                    "rows": list(g.rows),
                    "cols": list(g.cols),
                    "condition": {
                        "i": g.source.row,
                        "j": g.source.col,
                        "r": g.source.max_rank,
                    },
                    "poly": polynomial_to_json(g.poly, ANTIDIAGONAL),
                }
                for g in gens
            ],
        }
        _emit(json.dumps(payload, indent=2) + "\n", cfg)
    else:
        _emit("".join(polynomial_text(g.poly, ANTIDIAGONAL) + "\n" for g in gens), cfg)
    return EXIT_OK


def _cmd_groebner(cfg: RunConfig) -> int:
    try:
        spec = load_spec(cfg.paths[0])
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    basis = buchberger(generator_polynomials(spec), ANTIDIAGONAL)
    if cfg.fmt == "json":
        payload = [polynomial_to_json(f, ANTIDIAGONAL) for f in basis]
        _emit(json.dumps(payload, indent=2) + "\n", cfg)
    else:
        _emit("".join(polynomial_text(f, ANTIDIAGONAL) + "\n" for f in basis), cfg)
    return EXIT_OK


def _cmd_union(cfg: RunConfig) -> int:
    try:
        specs = [load_spec(path) for path in cfg.paths]
        basis = union_basis(specs)
    except (OSError, ValueError, KeyError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    ambient = specs[0].ambient_n
    if cfg.verify_depth == "full-oracle" and ambient > cfg.max_oracle_n:
        print(
            f"error: ambient {ambient} exceeds the full-oracle guard "
            f"(--max-oracle-n={cfg.max_oracle_n})",
            file=sys.stderr,
        )
        return EXIT_USAGE
    if cfg.fmt == "json":
        _emit(json.dumps([g.to_json() for g in basis], indent=2) + "\n", cfg)
    else:
        _emit("".join(polynomial_text(g.poly, ANTIDIAGONAL) + "\n" for g in basis), cfg)
    if cfg.verify_depth == "none":
        return EXIT_OK

    failures = []
    polys = [g.poly for g in basis]
    for spec in specs:
        gb = buchberger(generator_polynomials(spec), ANTIDIAGONAL)
        for g in basis:
            if not normal_form(g.poly, gb, ANTIDIAGONAL).is_zero():
                failures.append(
                    f"{polynomial_text(g.poly)} is not in the ideal of {spec.label or 'spec'}"
                )
    print(
        f"membership: {len(basis) * len(specs)} checks, {len(failures)} failures",
        file=sys.stderr,
    )
    if cfg.verify_depth == "full-oracle":
        groebner_ok = is_groebner(polys, ANTIDIAGONAL)
        print(
            f"groebner criterion: {'ok' if groebner_ok else 'FAILED'}", file=sys.stderr
        )
        if not groebner_ok:
            failures.append("basis fails the Buchberger criterion")
        meet = intersect_many([ideal_of(s) for s in specs])
        equal_ok = ideals_equal(polys, meet, ANTIDIAGONAL)
        print(
            f"ideal equality vs oracle intersection: {'ok' if equal_ok else 'FAILED'}",
            file=sys.stderr,
        )
        if not equal_ok:
            failures.append("basis ideal differs from the oracle intersection")
    return EXIT_OK if not failures else EXIT_VERIFY


def _cmd_verify(cfg: RunConfig) -> int:
    names = sorted(SUITES) if cfg.suite == "all" else [cfg.suite]
    try:
        reports = [run_suite(name, seed=cfg.seed, cases=cfg.cases) for name in names]
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return EXIT_USAGE
    lines = [report.summary() for report in reports]
    for report in reports:
        lines.extend(f"  {detail}" for detail in report.failures)
    _emit("\n".join(lines) + "\n", cfg)
    return EXIT_OK if all(r.passed for r in reports) else EXIT_VERIFY


def main(argv=None) -> int:
    parser = _build_parser()
    cfg = _config(parser.parse_args(argv))
    handlers = {
        "diagram": _cmd_diagram,
        "fulton": _cmd_fulton,
        "groebner": _cmd_groebner,
        "union": _cmd_union,
        "verify": _cmd_verify,
    }
    return handlers[cfg.command](cfg)


def run():
    sys.exit(main())
