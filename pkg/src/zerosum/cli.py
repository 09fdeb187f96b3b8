"""Command-line front end.

Exit codes: 0 when every requested check holds, 1 on a counterexample or a
failed hypothesis, 2 on usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Sequence

from zerosum.davenport import davenport_search
from zerosum.dihedral import (
    DEFAULT_CLASSIFY_BUDGET,
    is_product_one_free,
    parse_dihedral,
    verify_classification,
)
from zerosum.errors import DomainError, InvariantViolation
from zerosum.groups import GroupSpec
from zerosum.normalizer import check_multiplicity_bound, find_normalizer
from zerosum.subsums import (
    interval_decompose,
    is_zero_sum_free,
    subsums_int,
    subsums_mod,
    theorem_hypotheses,
    verify_interval_theorem,
)
from zerosum.sweeps import SUITES, SweepConfig, dump_report, run_sweep
from zerosum.zn import ResidueSequence, format_sequence, parse_sequence, scale, sums

OK, FAIL, USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _emit(doc: dict, fmt: str) -> None:
    if fmt == "json":
        print(json.dumps(doc, indent=2, sort_keys=True))
        return
    for key, value in doc.items():
        if isinstance(value, (list, dict)):
            value = json.dumps(value, sort_keys=True)
        print(f"{key}: {value}")


def _k_for(S: ResidueSequence, k: int | None) -> int:
    return S.n - S.length if k is None else k


def cmd_verify_theorem(args: argparse.Namespace) -> int:
    S = parse_sequence(args.sequence)
    rep = verify_interval_theorem(S, _k_for(S, args.k))
    _emit(rep.to_dict(), args.format)
    return OK if rep.equality_holds and rep.corollary_holds else FAIL


def cmd_verify_bounds(args: argparse.Namespace) -> int:
    S = parse_sequence(args.sequence)
    rep = check_multiplicity_bound(S, _k_for(S, args.k))
    _emit({"sequence": format_sequence(S), **rep.to_dict()}, args.format)
    return OK if rep.holds else FAIL


def cmd_normalize(args: argparse.Namespace) -> int:
    S = parse_sequence(args.sequence)
    res = find_normalizer(S)
    _emit({"sequence": format_sequence(S), **res.to_dict(), "normalized": format_sequence(scale(S, res.g))}, args.format)
    return OK if res.achieves_bound else FAIL


def cmd_decompose(args: argparse.Namespace) -> int:
    S = parse_sequence(args.sequence)
    k = S.n - S.length
    failed = theorem_hypotheses(S, k)
    if failed:
        _emit({"sequence": format_sequence(S), "k": k, "t": args.t, "failed_hypotheses": failed}, args.format)
        print(f"hypothesis failed: {', '.join(failed)}", file=sys.stderr)
        return FAIL
    w = interval_decompose(S, args.t)
    body = ",".join(str(a) for a in w.subsequence.terms)
    _emit({"sequence": format_sequence(S), "t": args.t, "witness": body, "bar_sum": w.target}, args.format)
    return OK


def cmd_sums(args: argparse.Namespace) -> int:
    S = parse_sequence(args.sequence)
    sigma_mod, sigma_bar = sums(S)
    _emit(
        {
            "sequence": format_sequence(S),
            "sigma_mod": sigma_mod,
            "sigma_bar": sigma_bar,
            "subsums_mod": sorted(subsums_mod(S).members),
            "subsums_int": sorted(subsums_int(S).members),
            "zero_sum_free": is_zero_sum_free(S),
        },
        args.format,
    )
    return OK


def cmd_dihedral_classify(args: argparse.Namespace) -> int:
    rep = verify_classification(args.n, budget=max(args.n, DEFAULT_CLASSIFY_BUDGET) if args.force else DEFAULT_CLASSIFY_BUDGET)
    _emit(rep.to_dict(), args.format)
    return OK if rep.matches_family else FAIL


def cmd_dihedral_free(args: argparse.Namespace) -> int:
    S = parse_dihedral(args.sequence)
    free, witness = is_product_one_free(S)
    doc = {"sequence": str(S), "product_one_free": free}
    if witness is not None:
        doc["witness"] = [str(e) for e in witness.ordered_terms]
        doc["witness_pretty"] = str(witness)
    _emit(doc, args.format)
    return OK if free else FAIL


def cmd_davenport(args: argparse.Namespace) -> int:
    G = GroupSpec.from_name(args.group)
    max_len = args.max_len if args.max_len is not None else G.order + 1
    res = davenport_search(G, max_len)
    _emit(res.to_dict(G), args.format)
    return OK if res.exact else FAIL


def cmd_sweep(args: argparse.Namespace) -> int:
    cfg = SweepConfig(
        max_n=args.max_n, jobs=args.jobs, seed=args.seed, samples=args.samples, output_format=args.format
    )
    report = run_sweep(args.suite, cfg, timing=not args.no_timing)
    if args.format == "json":
        print(dump_report(report))
    else:
        print(f"suite: {report['suite']}")
        print(f"config: {json.dumps(report['config'], sort_keys=True)}")
        print(f"counts: {json.dumps(report['counts'], sort_keys=True)}")
        print(f"counterexamples: {len(report['counterexamples'])}")
        for c in report["counterexamples"]:
            print(f"  {json.dumps(c, sort_keys=True)}")
        if report["elapsed_ms"] is not None:
            print(f"elapsed_ms: {report['elapsed_ms']}")
    return FAIL if report["counterexamples"] else OK


def _positive(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"expected a positive integer, got {text}")
    return value


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=("text", "json"), default="text")

    p = argparse.ArgumentParser(prog="zerosum", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    verify = sub.add_parser("verify", help="check a theorem on one sequence")
    vsub = verify.add_subparsers(dest="check", required=True)
    vt = vsub.add_parser("theorem", parents=[fmt], help="interval theorem and corollary")
    vt.add_argument("sequence", help="e.g. 'n=7: 1,1,1,2'")
    vt.add_argument("--k", type=int, help="defaults to n - |S|")
    vt.set_defaults(func=cmd_verify_theorem)
    vb = vsub.add_parser("bounds", parents=[fmt], help="multiplicity lower bound")
    vb.add_argument("sequence")
    vb.add_argument("--k", type=int, help="defaults to n - |S|")
    vb.set_defaults(func=cmd_verify_bounds)

    norm = sub.add_parser("normalize", parents=[fmt], help="find the unit minimizing the bar-sum")
    norm.add_argument("sequence")
    norm.set_defaults(func=cmd_normalize)

    dec = sub.add_parser("decompose", parents=[fmt], help="witness subsequence for a target")
    dec.add_argument("sequence")
    dec.add_argument("--t", type=_positive, required=True)
    dec.set_defaults(func=cmd_decompose)

    sm = sub.add_parser("sums", parents=[fmt], help="sum and subsequence-sum sets")
    sm.add_argument("sequence")
    sm.set_defaults(func=cmd_sums)

    dih = sub.add_parser("dihedral", help="dihedral group queries")
    dsub = dih.add_subparsers(dest="check", required=True)
    dc = dsub.add_parser("classify", parents=[fmt], help="enumerate length-n product-one free sequences")
    dc.add_argument("--n", type=int, required=True)
    dc.add_argument("--force", action="store_true", help=f"allow n > {DEFAULT_CLASSIFY_BUDGET}")
    dc.set_defaults(func=cmd_dihedral_classify)
    df = dsub.add_parser("free", parents=[fmt], help="product-one freeness of one sequence")
    df.add_argument("sequence", help="e.g. 'D n=3: s0,s1,s2'")
    df.set_defaults(func=cmd_dihedral_free)

    dav = sub.add_parser("davenport", parents=[fmt], help="small Davenport constant by search")
    dav.add_argument("group", help="cyclic:<n>, sum:<n1>x<n2>[x...], dihedral:<n>")
    dav.add_argument("--max-len", type=_positive)
    dav.set_defaults(func=cmd_davenport)

    sw = sub.add_parser("sweep", parents=[fmt], help="exhaustive verification suite")
    sw.add_argument("suite", choices=SUITES)
    sw.add_argument("--max-n", type=int, default=12)
    sw.add_argument("--jobs", type=_positive, default=1)
    sw.add_argument("--seed", type=int, default=0)
    sw.add_argument("--samples", type=int, default=1000, help="random witness checks (interval-theorem)")
    sw.add_argument("--no-timing", action="store_true", help="report elapsed_ms as null")
    sw.set_defaults(func=cmd_sweep)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"internal error: {exc}", file=sys.stderr)
        return FAIL
    except DomainError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return USAGE


if __name__ == "__main__":
    sys.exit(main())
