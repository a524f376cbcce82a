"""Command-line surface for bolkit.

Commands
--------
bolkit check FILE                structural report for a .tbl file
bolkit construct SPEC -o FILE    build a table and write it out
bolkit classify FILE...          isomorphism classes of the given tables
bolkit enumerate-q9 [--classify] the 512-member nine-parameter family
bolkit oracle order8 [--budget N]  exhaustive order-8 left Bol search
bolkit verify-paper              run the whole claim suite
bolkit iso FILE1 FILE2           isomorphism between two tables

Construction spec grammar (the SPEC argument of ``construct``):

    q9 BBBBBBBBB            nine bits, e.g. "q9 000000000"
    exceptional
    named order12
    named order16cyclic
    named order16elem
    named order4n:N         N > 2
    named commutant:K       K > 2
    semidirect K=<grp> E=<grp> tau=<spec>

where <grp> is ``cyclic:N`` or ``elem2:M`` and <spec> is either
``trivial`` or a comma-separated list of 0-based indices into the
canonically sorted automorphism list of K (index 0 is the identity),
one per element of E in element order, starting with 0 for element 1.

Exit codes: 0 success, 1 verification/isomorphism failure, 2 input error.
"""

from __future__ import annotations

import argparse
import sys

from .errors import BadSpec, BolkitError
from .extensions import (
    GroupTable,
    TauMap,
    automorphism_group,
    build_named_example,
    build_semidirect,
    cyclic_group,
    elem_abelian_2,
)
from .gf2 import build_exceptional, build_q9, enumerate_q9
from .iso import classification_report, classify, find_isomorphism
from .loop_core import LoopTable, parse_table, render
from .oracle import oracle_order8
from .structure import structure_report
from .verify import VerificationSuite, report_lines


def _load(path: str) -> LoopTable:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_table(fh.read(), name=path)


def _parse_group(token: str) -> GroupTable:
    kind, _, num = token.partition(":")
    if not num.isdigit():
        raise BadSpec(f"bad group spec {token!r}")
    if kind == "cyclic":
        return cyclic_group(int(num))
    if kind == "elem2":
        return elem_abelian_2(int(num))
    raise BadSpec(f"unknown group kind {kind!r}")


def construct_from_spec(spec: str) -> LoopTable:
    words = spec.split()
    if not words:
        raise BadSpec("empty construction spec")
    head, rest = words[0], words[1:]
    if head == "q9":
        if len(rest) != 1 or len(rest[0]) != 9 or set(rest[0]) - {"0", "1"}:
            raise BadSpec("q9 expects nine bits, e.g. 'q9 000000000'")
        return build_q9(tuple(int(ch) for ch in rest[0]))
    if head == "exceptional":
        if rest:
            raise BadSpec("exceptional takes no arguments")
        return build_exceptional()
    if head == "named":
        if len(rest) != 1:
            raise BadSpec("named expects one name")
        name, _, arg = rest[0].partition(":")
        if name in ("order12", "order16cyclic", "order16elem"):
            if arg:
                raise BadSpec(f"{name} takes no parameter")
            return build_named_example(name)
        if name == "order4n":
            if not arg.isdigit():
                raise BadSpec("order4n:N needs an integer N")
            return build_named_example("order4n", n=int(arg))
        if name == "commutant":
            if not arg.isdigit():
                raise BadSpec("commutant:K needs an integer K")
            return build_named_example("commutant_order", k=int(arg))
        raise BadSpec(f"unknown named example {rest[0]!r}")
    if head == "semidirect":
        fields = dict(w.partition("=")[::2] for w in rest)
        if set(fields) != {"K", "E", "tau"}:
            raise BadSpec("semidirect needs K=, E=, tau=")
        K = _parse_group(fields["K"])
        E = _parse_group(fields["E"])
        auts = automorphism_group(K)
        if fields["tau"] == "trivial":
            indices = [0] * E.order
        else:
            try:
                indices = [int(t) for t in fields["tau"].split(",")]
            except ValueError:
                raise BadSpec("tau must be 'trivial' or comma-separated indices") from None
        if len(indices) != E.order:
            raise BadSpec(f"tau needs {E.order} indices, got {len(indices)}")
        if any(i < 0 or i >= len(auts) for i in indices):
            raise BadSpec(f"tau indices must be in 0..{len(auts) - 1}")
        tau = TauMap(E, K, tuple(auts[i] for i in indices))
        return build_semidirect(K, E, tau, name=f"semidirect({fields['K']},{fields['E']})")
    raise BadSpec(f"unknown construction {head!r}")


def cmd_check(args: argparse.Namespace) -> int:
    try:
        Q = _load(args.file)
    except (OSError, BolkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    sys.stdout.write(structure_report(Q))
    return 0


def cmd_construct(args: argparse.Namespace) -> int:
    try:
        Q = construct_from_spec(args.spec)
    except BolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    text = render(Q)
    if args.output == "-":
        sys.stdout.write(text)
    else:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        print(f"wrote {Q.name or 'table'} ({Q.order}x{Q.order}) to {args.output}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    loops = []
    for path in args.files:
        try:
            loops.append(_load(path))
        except (OSError, BolkitError) as exc:
            print(f"error: {path}: {exc}", file=sys.stderr)
            return 2
    classes = classify(loops)
    sys.stdout.write(classification_report(loops, classes))
    print(f"{len(loops)} tables in {len(classes)} isomorphism classes")
    return 0


def cmd_enumerate_q9(args: argparse.Namespace) -> int:
    loops = enumerate_q9()
    if args.classify:
        classes = classify(loops)
        sys.stdout.write(classification_report(loops, classes))
        print(f"{len(loops)} loops in {len(classes)} isomorphism classes")
    else:
        from .structure import commutant, involution_count, nuclei

        for Q in loops:
            print(
                f"{Q.name} commutant={len(commutant(Q))}"
                f" involutions={involution_count(Q)} rnuc={len(nuclei(Q).right)}"
            )
        print(f"{len(loops)} loops")
    return 0


def cmd_oracle(args: argparse.Namespace) -> int:
    if args.target != "order8":
        print(f"error: unknown oracle target {args.target!r}", file=sys.stderr)
        return 2
    try:
        rep = oracle_order8(budget=args.budget)
    except BolkitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    print(f"tables found: {rep.tables_found}")
    print(f"isomorphism classes: {rep.class_count}")
    print(f"associative classes: {rep.associative_classes}")
    print(f"nonassociative classes: {rep.nonassociative_classes}")
    print(f"all commutants are subloops: {'yes' if rep.all_commutants_subloops else 'NO'}")
    return 0 if rep.all_commutants_subloops else 1


def cmd_verify_paper(args: argparse.Namespace) -> int:
    suite = VerificationSuite(order8_budget=args.budget)
    results = suite.run()
    for line in report_lines(results, timings=args.timings):
        print(line)
    return 0 if all(r.passed for r in results) else 1


def cmd_iso(args: argparse.Namespace) -> int:
    try:
        Q1, Q2 = _load(args.file1), _load(args.file2)
    except (OSError, BolkitError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    phi = find_isomorphism(Q1, Q2)
    if phi is None:
        print("non-isomorphic")
        return 1
    print("isomorphic: " + " ".join(str(v) for v in phi))
    return 0


def main(argv: list[str] | None = None) -> int:
    parser = argparse.ArgumentParser(prog="bolkit", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="structural report for a table file")
    p.add_argument("file")
    p.set_defaults(fn=cmd_check)

    p = sub.add_parser("construct", help="build a table from a construction spec")
    p.add_argument("spec")
    p.add_argument("-o", "--output", default="-")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("classify", help="classify table files up to isomorphism")
    p.add_argument("files", nargs="+")
    p.set_defaults(fn=cmd_classify)

    p = sub.add_parser("enumerate-q9", help="enumerate the 512-member family")
    p.add_argument("--classify", action="store_true")
    p.set_defaults(fn=cmd_enumerate_q9)

    p = sub.add_parser("oracle", help="exhaustive searches")
    p.add_argument("target")
    p.add_argument("--budget", type=int, default=None)
    p.set_defaults(fn=cmd_oracle)

    p = sub.add_parser("verify-paper", help="run the full verification suite")
    p.add_argument("--budget", type=int, default=None, help="order-8 search budget")
    p.add_argument("--timings", action="store_true", help="append per-claim timings")
    p.set_defaults(fn=cmd_verify_paper)

    p = sub.add_parser("iso", help="find an isomorphism between two tables")
    p.add_argument("file1")
    p.add_argument("file2")
    p.set_defaults(fn=cmd_iso)

    args = parser.parse_args(argv)
    return args.fn(args)


if __name__ == "__main__":
    raise SystemExit(main())
