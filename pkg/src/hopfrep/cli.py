"""Command-line front end.

Subcommands map one-to-one onto the library: ``axioms``, ``normalize``,
``reduce``, ``rep-ideal``, ``lie-rep-ideal``, ``rep-count``, ``cotangent``
and ``invariance``.  Output is deterministic (no timestamps, fixed
ordering); ``--format json`` is the stable machine contract, text is for
humans.  Exit codes: 0 success, 1 verification failure, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import IO, Sequence

from . import alggroups, groups, polyalg, prop_h, repvariety


class CliError(Exception):
    """Input error: bad flags, unparsable files, unknown specs."""


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # noqa: D102 - argparse hook
        raise CliError(message)


def _build_parser() -> _Parser:
    parser = _Parser(prog="hopfrep", description=__doc__)
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument("--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    sub.add_parser("axioms", help="verify the ten Hopf axioms in the word model")

    normalize = sub.add_parser("normalize", help="normalize a generator term")
    normalize.add_argument("--term", required=True)

    reduce_cmd = sub.add_parser("reduce", help="multilinear reduction of a word")
    reduce_cmd.add_argument("--n", type=int, required=True, help="number of letters")
    reduce_cmd.add_argument("--word", required=True, help="word in x1..xn syntax")

    rep = sub.add_parser("rep-ideal", help="representation ideal of a presented group")
    rep.add_argument("--group", required=True, help="path to presentation JSON")
    rep.add_argument("--target", required=True, help="gl:m | sl:m | torus:k | ga | JSON path")
    rep.add_argument("--groebner", action="store_true", help="also print a Groebner basis")
    rep.add_argument("--order", choices=polyalg.MONOMIAL_ORDERS, default=polyalg.GREVLEX)

    lie = sub.add_parser("lie-rep-ideal", help="Lie representation ideal")
    lie.add_argument("--source", required=True, help="path to Lie presentation JSON")
    lie.add_argument("--target", required=True, help="sl2 | abelian:d | JSON path")

    count = sub.add_parser("rep-count", help="enumerate homomorphisms into a finite group")
    count.add_argument("--group", required=True, help="path to presentation JSON")
    count.add_argument("--finite", required=True, help="cyclic:k | sym:k | JSON path")

    cot = sub.add_parser("cotangent", help="tangent dimension at the identity")
    cot.add_argument("--target", required=True)

    inv = sub.add_parser("invariance", help="conjugation invariance of a trace observable")
    inv.add_argument("--word", required=True, help="word in the group's generators")
    inv.add_argument("--group", required=True, help="path to presentation JSON")
    inv.add_argument("--target", required=True)
    return parser


def _emit(stream: IO[str], text: str) -> None:
    stream.write(text)
    if not text.endswith("\n"):
        stream.write("\n")


def _emit_json(stream: IO[str], payload) -> None:
    _emit(stream, json.dumps(payload, indent=2))


def _load_presentation(path: str) -> groups.GroupPresentation:
    try:
        return groups.GroupPresentation.from_json(path)
    except FileNotFoundError:
        raise CliError(f"no such file: {path}")
    except json.JSONDecodeError as err:
        raise CliError(f"{path}: line {err.lineno} column {err.colno}: {err.msg}")


def _cmd_axioms(args, out: IO[str]) -> int:
    checks = prop_h.verify_axioms()
    if args.format == "json":
        _emit_json(
            out,
            {
                "axioms": [
                    {"number": c.number, "name": c.name, "holds": c.holds}
                    for c in checks
                ],
                "all_hold": all(c.holds for c in checks),
            },
        )
    else:
        for c in checks:
            _emit(out, f"{'PASS' if c.holds else 'FAIL'} {c.number:>2} {c.name}")
    return 0 if all(c.holds for c in checks) else 1


def _cmd_normalize(args, out: IO[str]) -> int:
    term = prop_h.parse_term(args.term)
    morphism = prop_h.eval_term(term)
    if args.format == "json":
        _emit_json(
            out,
            {
                "dom": morphism.dom,
                "cod": morphism.cod,
                "words": [groups.format_word(w) for w in morphism.words],
            },
        )
    else:
        _emit(out, prop_h.format_hmorphism(morphism))
    return 0


def _cmd_reduce(args, out: IO[str]) -> int:
    if args.n < 0:
        raise CliError("--n must be non-negative")
    names = [f"x{i}" for i in range(1, args.n + 1)]
    word = groups.parse_word(args.word, names)
    morphism = prop_h.HMorphism(args.n, 1, (word,))
    reduced = prop_h.multilinear_reduce(prop_h.LinHom.of(morphism))
    if args.format == "json":
        _emit_json(
            out,
            {
                "n": args.n,
                "terms": [
                    {"coefficient": str(c), "word": groups.format_word(h.words[0])}
                    for h, c in reduced.terms
                ],
            },
        )
    else:
        _emit(out, prop_h.format_linhom(reduced))
    return 0


def _cmd_rep_ideal(args, out: IO[str]) -> int:
    presentation = repvariety.rep_ideal(
        _load_presentation(args.group), alggroups.make_group(args.target)
    )
    payload = presentation.to_json()
    basis = None
    if args.groebner:
        basis = polyalg.groebner(presentation.ideal, args.order)
        payload["groebner_order"] = args.order
        payload["groebner_basis"] = [str(g) for g in basis.basis]
    if args.format == "json":
        _emit_json(out, payload)
    else:
        _emit(out, "variables: " + " ".join(presentation.ring))
        for i, (g, source) in enumerate(
            zip(presentation.ideal.generators, presentation.provenance)
        ):
            _emit(out, f"g{i} [{source}]: {g}")
        if basis is not None:
            _emit(out, f"groebner ({args.order}):")
            for g in basis.basis:
                _emit(out, f"  {g}")
    return 0


def _cmd_lie_rep_ideal(args, out: IO[str]) -> int:
    try:
        source = alggroups.LiePresentation.from_json(args.source)
    except FileNotFoundError:
        raise CliError(f"no such file: {args.source}")
    except json.JSONDecodeError as err:
        raise CliError(f"{args.source}: line {err.lineno} column {err.colno}: {err.msg}")
    presentation = repvariety.lie_rep_ideal(source, alggroups.make_lie(args.target))
    if args.format == "json":
        _emit_json(out, presentation.to_json())
    else:
        _emit(out, "variables: " + " ".join(presentation.ring))
        for i, (g, source_tag) in enumerate(
            zip(presentation.ideal.generators, presentation.provenance)
        ):
            _emit(out, f"g{i} [{source_tag}]: {g}")
    return 0


def _cmd_rep_count(args, out: IO[str]) -> int:
    presentation = _load_presentation(args.group)
    target = groups.make_finite_group(args.finite)
    algebra = repvariety.finite_rep_algebra(presentation, target)
    if args.format == "json":
        _emit_json(
            out,
            {
                "count": algebra.dimension,
                "points": [list(p) for p in algebra.points],
                "point_names": [
                    [target.names[i] for i in p] for p in algebra.points
                ],
            },
        )
    else:
        _emit(out, str(algebra.dimension))
        for point in algebra.points:
            assignments = " ".join(
                f"{g}={target.names[i]}"
                for g, i in zip(presentation.generators, point)
            )
            _emit(out, assignments)
    return 0


def _cmd_cotangent(args, out: IO[str]) -> int:
    group = alggroups.make_group(args.target)
    data = alggroups.cotangent_at_identity(group)
    if args.format == "json":
        _emit_json(
            out,
            {
                "target": group.name,
                "dimension": data.dimension,
                "variables": list(data.variables),
                "kernel_basis": [[str(x) for x in v] for v in data.kernel_basis],
            },
        )
    else:
        _emit(out, f"dimension: {data.dimension}")
    return 0


def _cmd_invariance(args, out: IO[str]) -> int:
    presentation = _load_presentation(args.group)
    target = alggroups.make_group(args.target)
    word = groups.parse_word(args.word, presentation.generators)
    invariant = repvariety.check_trace_invariance(word, presentation, target)
    if args.format == "json":
        _emit_json(out, {"word": args.word, "invariant": invariant})
    else:
        _emit(out, f"invariant: {'true' if invariant else 'false'}")
    return 0 if invariant else 1


_COMMANDS = {
    "axioms": _cmd_axioms,
    "normalize": _cmd_normalize,
    "reduce": _cmd_reduce,
    "rep-ideal": _cmd_rep_ideal,
    "lie-rep-ideal": _cmd_lie_rep_ideal,
    "rep-count": _cmd_rep_count,
    "cotangent": _cmd_cotangent,
    "invariance": _cmd_invariance,
}


def run(argv: Sequence[str], out: IO[str] | None = None, err: IO[str] | None = None) -> int:
    """Parse argv, dispatch, and return the exit code (streams injectable for tests)."""
    out = out if out is not None else sys.stdout
    err = err if err is not None else sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(list(argv))
        if args.verbose:
            _emit(err, f"hopfrep: running {args.command}")
        return _COMMANDS[args.command](args, out)
    except CliError as exc:
        _emit(err, f"error: {exc}")
        return 2
    except (
        polyalg.PolynomialParseError,
        polyalg.RingMismatchError,
        polyalg.SubstitutionError,
        groups.WordParseError,
        groups.WordError,
        groups.GroupTableError,
        prop_h.TermSyntaxError,
        prop_h.ArityError,
        alggroups.GroupDataError,
        alggroups.MissingMatrixShapeError,
        alggroups.LieDataError,
        alggroups.LieParseError,
        repvariety.HomomorphismError,
        KeyError,
        ValueError,
    ) as exc:
        _emit(err, f"error: {exc}")
        return 2


def main() -> None:
    raise SystemExit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
