"""Command line front end.

One subcommand per library operation, each with --format text|json.  Exit
codes: 0 on success, 1 on domain errors (bad semigroup input, unmet
hypotheses, IO failures), 2 on usage errors (argparse handles those).
"""

from __future__ import annotations

import argparse
import json
import sys

from .census import (
    enumerate_records,
    record_to_doc,
    summarize,
    write_records,
)
from .core import gaps, make_semigroup, parse_generators
from .errors import NsgError
from .gluing import ci_tree, extra_degree, glue
from .presentations import minimal_presentation
from .star import (
    check_star_gluing,
    classify_exception,
    hypotheses_report,
    star_report,
)


def _generators_arg(text: str):
    try:
        return parse_generators(text)
    except ValueError as err:
        raise argparse.ArgumentTypeError(str(err)) from None


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _csv(values) -> str:
    return ",".join(str(v) for v in values)


def _emit(args, doc: dict, lines: list[str]) -> None:
    if args.format == "json":
        print(json.dumps(doc))
    else:
        width = max(len(label) for label, _ in (line.split(":", 1) for line in lines)) if lines else 0
        for line in lines:
            label, _, rest = line.partition(":")
            print(f"{label + ':':<{width + 2}}{rest.strip()}" if rest else line)


def _tabled(pairs: list[tuple[str, object]]) -> list[str]:
    return [f"{label}: {value}" for label, value in pairs]


def _cmd_info(args) -> int:
    s = make_semigroup(args.generators)
    gap_list = gaps(s)
    apery = s.apery.as_dict()
    doc = {
        "generators": list(s.generators),
        "multiplicity": s.multiplicity,
        "embedding_dim": s.embedding_dim,
        "frobenius": s.frobenius,
        "genus": s.genus,
        "gaps": gap_list,
        "apery": {str(r): w for r, w in apery.items()},
    }
    lines = _tabled(
        [
            ("generators", _csv(s.generators)),
            ("multiplicity", s.multiplicity),
            ("embedding_dim", s.embedding_dim),
            ("frobenius", s.frobenius),
            ("genus", s.genus),
            ("gaps", _csv(gap_list) or "none"),
            (f"apery mod {s.multiplicity}", " ".join(f"{r}:{w}" for r, w in apery.items())),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_presentation(args) -> int:
    s = make_semigroup(args.generators)
    pres = minimal_presentation(s)
    betti = sorted({rel.degree for rel in pres.relations})
    doc = {
        "generators": list(s.generators),
        "betti": betti,
        "relations": [
            {
                "left": list(rel.left.coords),
                "right": list(rel.right.coords),
                "degree": rel.degree,
            }
            for rel in pres.relations
        ],
        "degrees": list(pres.degrees),
    }
    if args.format == "json":
        print(json.dumps(doc))
        return 0
    print(f"generators: {_csv(s.generators)}")
    print(f"betti:      {_csv(betti) or 'none'}")
    print(f"degrees:    {_csv(pres.degrees) or 'none'}")
    print("relations:")
    if not pres.relations:
        print("  none")
    for rel in pres.relations:
        print(f"  {rel.left} = {rel.right}  @ {rel.degree}")
    return 0


def _cmd_glue(args) -> int:
    left = make_semigroup(args.left)
    right = make_semigroup(args.right)
    glued = glue(left, right, args.lam, args.mu)
    d = extra_degree(glued, left, right, args.lam, args.mu)
    identity = d + args.mu * left.frobenius + args.lam * right.frobenius
    doc = {
        "generators": list(glued.generators),
        "frobenius": glued.frobenius,
        "extra_degree": d,
        "mu": args.mu,
        "lambda": args.lam,
        "left_frobenius": left.frobenius,
        "right_frobenius": right.frobenius,
        "identity_holds": identity == glued.frobenius,
    }
    lines = _tabled(
        [
            ("glued", _csv(glued.generators)),
            ("frobenius", glued.frobenius),
            ("extra_degree", d),
            (
                "identity",
                f"F = d + mu*F(left) + lambda*F(right) = "
                f"{d} + {args.mu}*{left.frobenius} + {args.lam}*{right.frobenius} = {identity}",
            ),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_ci_tree(args) -> int:
    s = make_semigroup(args.generators)
    tree = ci_tree(s)
    if tree is None:
        doc = {"generators": list(s.generators), "ci": False}
        lines = _tabled(
            [("generators", _csv(s.generators)), ("ci", "no")]
        )
        _emit(args, doc, lines)
        return 0
    doc = {"generators": list(s.generators), "ci": True, "tree": tree.to_record()}
    lines = _tabled(
        [
            ("generators", _csv(s.generators)),
            ("ci", "yes"),
            ("tree", tree.to_text()),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_star(args) -> int:
    s = make_semigroup(args.generators)
    report = star_report(s)
    doc = {
        "generators": list(s.generators),
        "frobenius": report.frobenius,
        "d_max": report.d_max,
        "margin": report.margin,
        "star_verdict": report.verdict.value,
    }
    lines = _tabled(
        [
            ("generators", _csv(s.generators)),
            ("frobenius", report.frobenius),
            ("d_max", "none" if report.d_max is None else report.d_max),
            ("margin", "none" if report.margin is None else report.margin),
            ("verdict", report.verdict.value),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_classify(args) -> int:
    s = make_semigroup(args.generators)
    tag = classify_exception(s)
    doc = {"generators": list(s.generators), "exception": tag.value}
    lines = _tabled(
        [("generators", _csv(s.generators)), ("exception", tag.value)]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_inductive(args) -> int:
    left = make_semigroup(args.left)
    right = make_semigroup(args.right)
    report = check_star_gluing(left, right, args.lam, args.mu)
    doc = {
        "branch": report.branch.value,
        "generators": list(report.glued.generators),
        "frobenius": report.frobenius,
        "extra_degree": report.extra_degree,
        "degree_checks": [[d, ok] for d, ok in report.degree_checks],
        "passed": report.passed,
    }
    lines = _tabled(
        [
            ("branch", report.branch.value),
            ("glued", _csv(report.glued.generators)),
            ("frobenius", report.frobenius),
            ("extra_degree", report.extra_degree),
            (
                "degrees",
                " ".join(
                    f"{d}:{'ok' if ok else 'FAIL'}" for d, ok in report.degree_checks
                ),
            ),
            ("passed", "yes" if report.passed else "no"),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _cmd_hypotheses(args) -> int:
    s = make_semigroup(args.generators)
    report = hypotheses_report(s)
    doc = {
        "generators": list(s.generators),
        "embedding_dim": report.embedding_dim,
        "is_ci": report.is_ci,
        "star_verdict": report.star.verdict.value,
        "branch": report.branch,
        "holds": report.holds,
    }
    lines = _tabled(
        [
            ("generators", _csv(s.generators)),
            ("embedding_dim", report.embedding_dim),
            ("is_ci", "yes" if report.is_ci else "no"),
            ("star_verdict", report.star.verdict.value),
            ("branch", report.branch),
            ("holds", "yes" if report.holds else "no"),
        ]
    )
    _emit(args, doc, lines)
    return 0


def _record_line(record) -> str:
    return (
        f"{_csv(record.generators)} genus={record.genus} F={record.frobenius}"
        f" e={record.embedding_dim} ci={'yes' if record.is_ci else 'no'}"
        f" star={record.star.verdict.value} exception={record.exception.value}"
    )


def _cmd_enumerate(args) -> int:
    records = enumerate_records(args.max_genus, jobs=args.jobs)
    if args.out:
        count = write_records(records, args.out)
        print(f"wrote {count} records to {args.out}")
        return 0
    for record in records:
        if args.format == "json":
            print(json.dumps(record_to_doc(record)))
        else:
            print(_record_line(record))
    return 0


def _cmd_verify(args) -> int:
    records = enumerate_records(args.max_genus, jobs=args.jobs)
    summary = summarize(records, args.max_genus)
    if args.out:
        write_records(records, args.out)
    if args.format == "json":
        print(
            json.dumps(
                {
                    "bound": summary.bound,
                    "total": summary.total,
                    "ci_count": summary.ci_count,
                    "exceptions_found": [list(g) for g in summary.exceptions_found],
                    "counterexamples": [list(g) for g in summary.counterexamples],
                    "per_genus": list(summary.per_genus),
                }
            )
        )
        return 0
    print(f"verification up to genus {summary.bound}")
    print(f"total:           {summary.total}")
    print(f"ci:              {summary.ci_count}")
    exceptions = " | ".join(_csv(g) for g in summary.exceptions_found) or "none"
    print(f"exceptions:      {exceptions}")
    counter = " | ".join(_csv(g) for g in summary.counterexamples) or "none"
    print(f"counterexamples: {counter}")
    print(f"per_genus:       {' '.join(str(c) for c in summary.per_genus)}")
    if args.out:
        print(f"records written to {args.out}")
    return 0


def build_parser() -> argparse.ArgumentParser:
    shared = argparse.ArgumentParser(add_help=False)
    shared.add_argument(
        "--format", choices=("text", "json"), default="text", help="output format"
    )
    parser = argparse.ArgumentParser(
        prog="nsg", description="numerical semigroup toolkit"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def semigroup_command(name: str, handler, help_text: str):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument(
            "generators",
            type=_generators_arg,
            help="comma-separated generators, e.g. 4,6,9",
        )
        p.set_defaults(handler=handler)
        return p

    semigroup_command("info", _cmd_info, "generators, Frobenius number, genus, gaps, Apery set")
    semigroup_command("presentation", _cmd_presentation, "Betti elements and a minimal presentation")
    semigroup_command("ci-tree", _cmd_ci_tree, "recursive gluing certificate, if one exists")
    semigroup_command("star", _cmd_star, "star condition report")
    semigroup_command("classify", _cmd_classify, "exception taxonomy tag")
    semigroup_command("hypotheses", _cmd_hypotheses, "which hypothesis branch covers the semigroup ring")

    def gluing_command(name: str, handler, help_text: str):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument("left", type=_generators_arg, help="left semigroup generators")
        p.add_argument("right", type=_generators_arg, help="right semigroup generators")
        p.add_argument("--lambda", dest="lam", type=_positive_int, required=True,
                       help="non-generator element of the left semigroup")
        p.add_argument("--mu", type=_positive_int, required=True,
                       help="non-generator element of the right semigroup")
        p.set_defaults(handler=handler)
        return p

    gluing_command("glue", _cmd_glue, "glue two semigroups: mu*left + lambda*right")
    gluing_command("inductive", _cmd_inductive, "star condition check for one gluing")

    def census_command(name: str, handler, help_text: str):
        p = sub.add_parser(name, parents=[shared], help=help_text)
        p.add_argument("--max-genus", type=int, required=True, help="genus bound")
        p.add_argument("--jobs", type=_positive_int, default=1, help="worker processes")
        p.add_argument("--out", help="write records to this path")
        p.set_defaults(handler=handler)
        return p

    census_command("enumerate", _cmd_enumerate, "census records up to a genus bound")
    census_command("verify", _cmd_verify, "exhaustive star verification up to a genus bound")
    return parser


def run(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        code = exc.code
        return code if isinstance(code, int) else 0
    try:
        return args.handler(args)
    except NsgError as err:
        print(f"error: {err}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as err:
        print(f"error: {err}", file=sys.stderr)
        return 1


def main() -> None:
    sys.exit(run(sys.argv[1:]))
