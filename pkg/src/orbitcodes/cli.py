"""Command-line surface.

Subcommands:

* classify: one row per conjugacy class of cyclic subgroups of GL_n(F_q).
* code: build a cyclic orbit code from block divisors and a base subspace,
  reporting parameters and both distance bounds as JSON/CSV/text.
* verify: run the property suites; exit 0 only if every hard check passes
  (documented-ambiguity findings are WARN lines and never fail a run).
* examples: reproduce the two small non-extendability counterexamples
  end to end, printing one PASS line per claim.

Exit codes: 0 success, 1 hard-assertion failure, 2 usage or parse error.
Identical arguments (including --seed) produce byte-identical output.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys

from .codes import (
    block_bound,
    block_bound_refined,
    block_structure,
    component_codes,
    min_distance,
    distance_distribution,
    orbit_code,
    subspace,
)
from .errors import ParseError
from .field import GF
from .groups import CyclicGroup, class_representatives, closure, conjugacy_witness
from .matrix import Mat
from .poly import factor
from .textio import format_mat, format_poly, parse_field, parse_mat, parse_poly
from .verify import SUITES, run_suites

_DEFAULT_MAX_BITS = 22


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="orbitcodes",
        description="cyclic orbit codes over small finite fields",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser) -> None:
        p.add_argument("--field", default="2", help='field designator "p" or "p^m"')
        p.add_argument("--modulus", default=None, help="modulus coefficients over F_p")
        p.add_argument("--out", default=None, help="write output to this path")

    p_classify = sub.add_parser("classify", help="conjugacy classes of cyclic subgroups")
    common(p_classify)
    p_classify.add_argument("--n", type=int, required=True, help="ambient dimension")
    p_classify.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p_classify.add_argument(
        "--max-bits",
        type=int,
        default=_DEFAULT_MAX_BITS,
        help="refuse when n*log2(q) exceeds this budget",
    )

    p_code = sub.add_parser("code", help="construct and analyze one orbit code")
    common(p_code)
    p_code.add_argument("--n", type=int, required=True)
    p_code.add_argument(
        "--divisors",
        required=True,
        help="semicolon-separated block polynomials, each a power of an irreducible",
    )
    p_code.add_argument("--subspace", required=True, help="basis matrix of the base point")
    p_code.add_argument("--format", choices=("json", "csv", "text"), default="json")

    p_verify = sub.add_parser("verify", help="run the property suites")
    common(p_verify)
    p_verify.add_argument("--suite", default="all", help=f"one of {', '.join(SUITES)}, or all")
    p_verify.add_argument("--trials", type=int, default=None)
    p_verify.add_argument("--seed", type=int, default=0)

    p_examples = sub.add_parser("examples", help="reproduce the two counterexamples")
    common(p_examples)
    return parser


def _emit(text: str, out_path: str | None) -> None:
    if out_path is None:
        sys.stdout.write(text)
    else:
        with open(out_path, "w") as handle:
            handle.write(text)


def _signature_rows(sig) -> list[list[int]]:
    return [[o, e, d] for o, e, d in sig.entries]


def cmd_classify(args: argparse.Namespace) -> int:
    field = parse_field(args.field, args.modulus)
    if args.n < 1:
        raise ParseError("--n must be a positive integer", 0)
    bits = args.n * (field.q.bit_length() - 1)
    if bits > args.max_bits:
        sys.stderr.write(
            f"refusing: n*log2(q) = {bits} exceeds the budget {args.max_bits}; "
            "raise --max-bits to force\n"
        )
        return 2
    reps = class_representatives(field, args.n)
    rows = [
        {
            "class": i,
            "group_order": rep.order,
            "signature": _signature_rows(rep.signature),
            "divisors": [
                {"p": format_poly(p), "e": e} for p, e in rep.rcf.divisors
            ],
            "generator": format_mat(rep.rcf.matrix),
        }
        for i, rep in enumerate(reps)
    ]
    if args.format == "json":
        text = json.dumps({"q": field.q, "n": args.n, "classes": rows}, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(["class", "group_order", "signature", "divisors", "generator"])
        for row in rows:
            writer.writerow(
                [
                    row["class"],
                    row["group_order"],
                    "|".join(f"{o}:{e}:{d}" for o, e, d in row["signature"]),
                    "|".join(f"{d['p']}^{d['e']}" for d in row["divisors"]),
                    row["generator"],
                ]
            )
        text = buf.getvalue()
    else:
        lines = [f"cyclic subgroup classes of GL_{args.n}(F_{field.q}): {len(rows)}"]
        for row in rows:
            sig = ", ".join(f"(ord={o}, e={e}, deg={d})" for o, e, d in row["signature"])
            divs = "; ".join(f"({d['p']})^{d['e']}" for d in row["divisors"])
            lines.append(
                f"  class {row['class']}: order {row['group_order']}, "
                f"signature [{sig}], divisors {divs}, generator {row['generator']}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_code(args: argparse.Namespace) -> int:
    field = parse_field(args.field, args.modulus)
    divisors = []
    for chunk in args.divisors.split(";"):
        poly = parse_poly(field, chunk).monic()
        parts = factor(poly)
        if len(parts) != 1:
            raise ParseError(
                f"divisor {chunk!r} is not a power of a single irreducible", 0
            )
        divisors.append(parts[0])
    degrees = sum(int(p.degree) * e for p, e in divisors)
    if degrees != args.n:
        raise ParseError(
            f"divisor degrees sum to {degrees}, but --n is {args.n}", 0
        )
    base = subspace(parse_mat(field, args.subspace))
    if base.n != args.n:
        raise ParseError(
            f"subspace lives in dimension {base.n}, but --n is {args.n}", 0
        )
    bs = block_structure(base, divisors)
    group = CyclicGroup(bs.generator)
    code = orbit_code(base, group)
    literal, lcm_card = block_bound(bs)
    refined = block_bound_refined(bs)
    dist = distance_distribution(code)
    components = []
    for blk, comp in zip(bs.blocks, component_codes(bs)):
        p, e = blk.divisor
        entry = {
            "block": blk.index,
            "p": format_poly(p),
            "e": e,
            "degree": blk.degree,
            "k": blk.k,
        }
        if comp is None:
            entry["cardinality"] = None
        else:
            entry["cardinality"] = len(comp)
            entry["min_distance"] = min_distance(comp) if len(comp) > 1 else None
        components.append(entry)
    report = {
        "q": field.q,
        "n": args.n,
        "k": base.k,
        "group_order": group.order,
        "cardinality": len(code),
        "min_distance": min_distance(code) if len(code) > 1 else None,
        "distance_distribution": list(dist),
        "bound_literal": literal,
        "bound_refined": refined,
        "lcm_cardinality": lcm_card,
        "components": components,
        "base_subspace": format_mat(base.basis),
        "generator": format_mat(bs.generator),
    }
    if args.format == "json":
        text = json.dumps(report, indent=2) + "\n"
    elif args.format == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        fields = [
            "q", "n", "k", "group_order", "cardinality", "min_distance",
            "distance_distribution", "bound_literal", "bound_refined",
            "lcm_cardinality",
        ]
        writer.writerow(fields)
        row = dict(report)
        row["distance_distribution"] = "|".join(str(v) for v in dist)
        writer.writerow([row[f] for f in fields])
        text = buf.getvalue()
    else:
        lines = [
            f"orbit code in Gr(q={field.q}, k={base.k}, n={args.n})",
            f"  group order {group.order}, cardinality {len(code)}",
            f"  min distance {report['min_distance']}, distribution {list(dist)}",
            f"  bounds: per-component {literal}, refined {refined}, "
            f"lcm cardinality {lcm_card}",
        ]
        for entry in components:
            lines.append(
                f"  block {entry['block']}: ({entry['p']})^{entry['e']} "
                f"degree {entry['degree']}, k_i={entry['k']}, "
                f"|C_i|={entry['cardinality']}"
            )
        text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    try:
        results = run_suites(names, seed=args.seed, trials=args.trials)
    except ValueError as exc:
        sys.stderr.write(f"{exc}\n")
        return 2
    lines = []
    failed = False
    for res in results:
        for finding in res.findings:
            lines.append(str(finding))
        status = "FAIL" if res.failed else "ok"
        failed = failed or res.failed
        lines.append(f"suite {res.suite}: {res.checks} checks, {status}")
    text = "\n".join(lines) + "\n"
    _emit(text, args.out)
    return 1 if failed else 0


def cmd_examples(args: argparse.Namespace) -> int:
    lines = []
    passed = True

    def claim(name: str, ok: bool, detail: str) -> None:
        nonlocal passed
        passed = passed and ok
        lines.append(f"{'PASS' if ok else 'FAIL'}: {name} ({detail})")

    f2 = parse_field("2")
    a = parse_mat(f2, "0,1,0;0,0,1;1,1,0")
    at = a.transpose()
    ga = CyclicGroup(a)
    claim("cyclic group order", ga.order == 7, f"|<A>| = {ga.order}")
    big = closure([a, at])
    expected = 1
    for i in range(3):
        expected *= 2**3 - 2**i
    claim(
        "pair closure is the full linear group",
        big.order == expected == 168,
        f"|<A, A^t>| = {big.order}, product formula {expected}",
    )
    claim(
        "equal divisors, non-conjugate groups",
        ga.order != big.order,
        f"{ga.order} != {big.order} denies conjugacy by cardinality",
    )

    f4 = parse_field("2^2")
    a4 = parse_mat(f4, "0,1,0;0,0,1;1,1,0")
    b1 = parse_mat(f4, "0,1,0;0,0,1;1,0,1")
    b2 = parse_mat(f4, "3,1,2;2,2,3;0,1,0")
    witness = conjugacy_witness(b1, b2)
    claim(
        "matrices conjugate over GF(4)",
        witness == 1,
        f"B1 ~ B2 with witness power {witness}",
    )
    g1 = closure([a4, b1])
    g2 = closure([a4, b2])
    claim(
        "conjugate generators, non-conjugate pairs",
        g1.order != g2.order,
        f"|<A,B1>| = {g1.order} != {g2.order} = |<A,B2>|",
    )

    _emit("\n".join(lines) + "\n", args.out)
    return 0 if passed else 1


_COMMANDS = {
    "classify": cmd_classify,
    "code": cmd_code,
    "verify": cmd_verify,
    "examples": cmd_examples,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return _COMMANDS[args.command](args)
    except ParseError as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return 2
    except ValueError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
