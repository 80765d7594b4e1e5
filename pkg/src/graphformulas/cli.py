"""Command line interface.

Exit codes: 0/1/2 for accepted/rejected/indeterminate (``check``, ``run``),
0 for success otherwise, 64 for usage errors, 65 for input that does not
parse or typecheck, 70 for internal errors.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .automaton import classify, configuration_graph, validate
from .dot import to_dot
from .errors import ContractError, GraphTypeError, SpecSyntaxError
from .formulas import classify_at, fcg, is_shallow_system, shallow_normal_form, validate_system
from .syntax import SpecFile, load, serialize, single_graph
from .translate import automaton_to_system, system_to_automaton

EX_USAGE, EX_DATAERR, EX_SOFTWARE = 64, 65, 70


class UsageError(Exception):
    pass


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def _read(path: str) -> SpecFile:
    try:
        return load(path)
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from None
    except SpecSyntaxError as exc:
        exc.args = (f"{path}:{exc}",)
        raise


def _system(path: str):
    spec = _read(path)
    if spec.system is None:
        raise SpecSyntaxError(f"{path}: no system block")
    return spec.system


def _automaton(path: str):
    spec = _read(path)
    if spec.automaton is None:
        raise SpecSyntaxError(f"{path}: no automaton block")
    return spec.automaton


def _graph(args):
    return single_graph(_read(args.graph), args.graph_name)


def _write(text: str, out: Optional[str]) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_check(args) -> int:
    f = _system(args.system)
    if args.var not in f.ranks:
        raise ContractError(f"unknown variable {args.var}")
    v = classify_at(f, args.var, _graph(args))
    print(v)
    return v.exit_code


def cmd_run(args) -> int:
    v = classify(_automaton(args.automaton), _graph(args))
    print(v)
    return v.exit_code


def cmd_translate(args) -> int:
    if args.direction == "a2f":
        if not args.automaton:
            raise UsageError("translate a2f needs --automaton")
        f, x0 = automaton_to_system(_automaton(args.automaton))
        text = f"# accepting variable: {x0}\n" + serialize(SpecFile(alphabet=f.alphabet, system=f))
    else:
        if not args.system or not args.var:
            raise UsageError("translate f2a needs --system and --var")
        f = _system(args.system)
        if not is_shallow_system(f):
            f = shallow_normal_form(f)
        a = system_to_automaton(f, args.var)
        text = serialize(SpecFile(alphabet=a.alphabet, automaton=a))
    _write(text, args.output)
    return 0


def cmd_normalize(args) -> int:
    f = shallow_normal_form(_system(args.system))
    _write(serialize(SpecFile(alphabet=f.alphabet, system=f)), args.output)
    return 0


def cmd_dot(args) -> int:
    g = _graph(args)
    if args.kind == "fcg":
        if not args.system or not args.var:
            raise UsageError("dot fcg needs --system and --var")
        f = _system(args.system)
        if args.var not in f.ranks:
            raise ContractError(f"unknown variable {args.var}")
        e = fcg(f, args.var, g)
        name = f"FCG {args.var}"
    else:
        if not args.automaton:
            raise UsageError("dot cg needs --automaton")
        e = configuration_graph(_automaton(args.automaton), g)
        name = "CG"
    _write(to_dot(e, name=name), args.output)
    return 0


def cmd_validate(args) -> int:
    spec = _read(args.file)
    problems = []
    if spec.system is not None:
        problems += validate_system(spec.system)
    if spec.automaton is not None:
        problems += validate(spec.automaton)
    for p in problems:
        print(p, file=sys.stderr)
    if problems:
        return EX_DATAERR
    parts = [f"{len(spec.graphs)} graph(s)", f"{len(spec.expressions)} expression(s)"]
    if spec.system is not None:
        parts.append(f"system with {len(spec.system.ranks)} variable(s)")
    if spec.automaton is not None:
        parts.append(f"automaton with {len(spec.automaton.states)} state(s)")
    print("ok: " + ", ".join(parts))
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = _ArgumentParser(prog="graphformulas", description="Graph automata and formula systems.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def graph_args(sp):
        sp.add_argument("--graph", required=True, help="file with the input graph")
        sp.add_argument("--graph-name", help="graph to use if the file has several")

    sp = sub.add_parser("check", help="classify a graph with a formula system")
    sp.add_argument("--system", required=True)
    sp.add_argument("--var", required=True)
    graph_args(sp)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("run", help="classify a graph with an automaton")
    sp.add_argument("--automaton", required=True)
    graph_args(sp)
    sp.set_defaults(func=cmd_run)

    sp = sub.add_parser("translate", help="automaton to formula system (a2f) or back (f2a)")
    sp.add_argument("direction", choices=["a2f", "f2a"])
    sp.add_argument("--automaton")
    sp.add_argument("--system")
    sp.add_argument("--var")
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_translate)

    sp = sub.add_parser("normalize", help="shallow normal form of a formula system")
    sp.add_argument("--system", required=True)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_normalize)

    sp = sub.add_parser("dot", help="DOT for an FCG or a configuration graph")
    sp.add_argument("kind", choices=["fcg", "cg"])
    sp.add_argument("--system")
    sp.add_argument("--var")
    sp.add_argument("--automaton")
    graph_args(sp)
    sp.add_argument("-o", "--output")
    sp.set_defaults(func=cmd_dot)

    sp = sub.add_parser("validate", help="parse and typecheck a spec file")
    sp.add_argument("file")
    sp.set_defaults(func=cmd_validate)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"graphformulas: {exc}", file=sys.stderr)
        return EX_USAGE
    except (SpecSyntaxError, GraphTypeError, ContractError) as exc:
        print(f"graphformulas: {exc}", file=sys.stderr)
        return EX_DATAERR
    except Exception as exc:  # noqa: BLE001 - report, don't crash with a traceback
        print(f"graphformulas: internal error: {exc!r}", file=sys.stderr)
        return EX_SOFTWARE


if __name__ == "__main__":
    sys.exit(main())
