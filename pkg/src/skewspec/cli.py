"""Command-line interface.

Exit codes: 0 success, 1 a property-violation finding, 2 input error.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from pathlib import Path

from . import exact_linalg as la
from .census import (
    _analyze_class,
    census_shard,
    export_records,
    find_mates,
    merge_entries,
    read_entries,
    record_to_json,
    run_census,
    write_entries,
)
from .characterization import (
    certificate_lemma_audit,
    fn_membership,
    snf_structure_check,
    wdgss_criterion,
)
from .errors import (
    InputError,
    NotControllableError,
    NotCospectralMateError,
    SkewSpecError,
    UnsupportedError,
)
from .graph_core import (
    MAX_ENUM_ORDER,
    canonical_form,
    enumerate_codes,
    is_isomorphic,
    parse_graph,
    transpose,
)
from .reproduce import example_checks
from .spectral import generalized_cospectral, recover_q, walk_matrix

EXIT_OK, EXIT_FINDING, EXIT_INPUT = 0, 1, 2


def _read_graph(path: str):
    text = sys.stdin.read() if path == "-" else Path(path).read_text()
    return parse_graph(text)


def _table(rows, out) -> None:
    width = max(len(k) for k, _ in rows)
    for k, v in rows:
        print(f"{k:<{width}}  {v}", file=out)


def _emit(args, text: str) -> None:
    if args.out:
        Path(args.out).write_text(text)
    else:
        sys.stdout.write(text)


def cmd_analyze(args) -> int:
    g = _read_graph(args.graph)
    rep = fn_membership(g)
    if args.structured:
        canon = canonical_form(g)
        if g.n <= MAX_ENUM_ORDER:
            members = list(find_mates(g).members)
        else:
            members = [] if canonical_form(transpose(g)) == canon else [canonical_form(transpose(g))]
            print("warning: n > 6, mate list limited to the transpose class", file=sys.stderr)
        record, _, _ = _analyze_class(canon, sorted([canon, *members]))
        _emit(args, record_to_json(record) + "\n")
        return EXIT_FINDING if record.flagged else EXIT_OK
    rows = [
        ("n", g.n),
        ("arcs", len(g.arcs)),
        ("canonical form", canonical_form(g)),
        ("det W", rep.det_walk),
        ("controllable", rep.det_walk != 0),
    ]
    if rep.det_walk == 0:
        rows.append(("verdict", "not controllable; criteria inapplicable"))
        _table(rows, sys.stdout)
        return EXIT_OK
    wd = wdgss_criterion(g, rep)
    rows += [
        ("factorization", str(rep.factorization)),
        ("reduced det", rep.reduced),
        ("in F_n", rep.is_member),
        ("odd primes", ", ".join(map(str, rep.odd_primes)) or "-"),
        ("k", rep.k),
        ("mate bound", rep.bound if rep.is_member else "n/a (not in F_n)"),
        ("SNF of W^T", la.invariant_factors(la.transpose(walk_matrix(g)))),
        ("rank_2 W", la.rank_mod_p(walk_matrix(g), 2)),
        ("self-transpose", wd.self_transpose),
        ("WDGSS", "WDGSS by criterion" if wd.verdict == "wdgss_by_criterion" else "criterion not applicable"),
    ]
    status = EXIT_OK
    if rep.is_member:
        ok = snf_structure_check(g, rep)
        rows.append(("SNF structure check", "pass" if ok else "FAIL"))
        status = EXIT_OK if ok else EXIT_FINDING
    _table(rows, sys.stdout)
    return status


def cmd_mates(args) -> int:
    g = _read_graph(args.graph)
    report = find_mates(g)
    rows = [("representative", report.representative), ("mate classes", len(report.members))]
    for i, m in enumerate(report.members):
        lv = report.certificates[i].level if report.certificates else "-"
        rows.append((f"  mate {i + 1}", f"{m}  level {lv}"))
    if report.audits:
        rows.append(("lemma audits", "pass" if report.audits_passed else "FAIL"))
    _table(rows, sys.stdout)
    return EXIT_OK if report.audits_passed else EXIT_FINDING


def cmd_qmat(args) -> int:
    d, c = _read_graph(args.source), _read_graph(args.target)
    if d.n != c.n or not generalized_cospectral(d, c):
        print("error: graphs are not generalized cospectral", file=sys.stderr)
        return EXIT_INPUT
    try:
        cert = recover_q(d, c)
    except NotControllableError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except NotCospectralMateError as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_FINDING
    cells = [[str(x) for x in row] for row in cert.q]
    width = max(len(x) for row in cells for x in row)
    print("Q =")
    for row in cells:
        print("  " + " ".join(x.rjust(width) for x in row))
    print(f"level {cert.level}")
    if fn_membership(d).is_member:
        audit = certificate_lemma_audit(cert)
        for chk in audit.checks:
            print(f"  {'pass' if chk.passed else 'FAIL'}  {chk.name} {chk.detail}".rstrip())
        return EXIT_OK if audit.passed else EXIT_FINDING
    return EXIT_OK


def cmd_iso(args) -> int:
    a, b = _read_graph(args.a), _read_graph(args.b)
    sigma = is_isomorphic(a, b)
    if sigma is None:
        print("not isomorphic")
    else:
        print("isomorphic: " + " ".join(map(str, sigma)))
    return EXIT_OK


def cmd_canon(args) -> int:
    print(canonical_form(_read_graph(args.graph)))
    return EXIT_OK


def cmd_census(args) -> int:
    if args.merge:
        entries = []
        for path in args.merge:
            with open(path) as fh:
                entries.extend(read_entries(fh))
        result = merge_entries(args.n, entries)
    elif args.shard is not None:
        entries = census_shard(args.n, args.shards, args.shard, args.checkpoint_dir, args.resume)
        if args.out:
            with open(args.out, "w") as fh:
                write_entries(entries, fh)
        else:
            write_entries(entries, sys.stdout)
        span = enumerate_codes(args.n, args.shards, args.shard)
        print(f"shard {args.shard}/{args.shards}: {len(span)} graphs processed, "
              f"{len(entries)} classes", file=sys.stderr)
        return EXIT_OK
    else:
        result = run_census(args.n, args.shards, args.threads, args.checkpoint_dir, args.resume)
    if args.out:
        export_records(result.records, args.out)
    elif args.structured:
        export_records(result.records, sys.stdout)
    in_fn = sum(r.in_fn for r in result.records)
    graphs = 3 ** (args.n * (args.n - 1) // 2)
    summary = [
        ("graphs processed", graphs),
        ("isomorphism classes", len(result.records)),
        ("controllable classes", sum(r.controllable for r in result.records)),
        ("F_n classes", in_fn),
        ("certificates", sum(len(v) for v in result.certificates.values())),
        ("bound violations", len(result.violations)),
        ("flagged records", len(result.flagged)),
    ]
    _table(summary, sys.stderr if args.structured and not args.out else sys.stdout)
    return EXIT_FINDING if result.flagged else EXIT_OK


def cmd_verify_paper(args) -> int:
    checks = example_checks(exhaustive=args.exhaustive)
    if args.structured:
        for c in checks:
            print(json.dumps({"name": c.name, "passed": c.passed,
                              "expected": repr(c.expected), "computed": repr(c.computed)}))
    else:
        width = max(len(c.name) for c in checks)
        for c in checks:
            line = f"{'PASS' if c.passed else 'FAIL'}  {c.name:<{width}}"
            if not c.passed:
                line += f"  expected {c.expected!r}, computed {c.computed!r}"
            print(line.rstrip())
    return EXIT_OK if all(c.passed for c in checks) else EXIT_FINDING


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--structured", action="store_true", help="machine-readable output")
    common.add_argument("--threads", type=int, default=1, help="worker processes")
    common.add_argument("--out", help="write output to this path")

    p = argparse.ArgumentParser(prog="skewspec", description=__doc__)
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("analyze", parents=[common], help="F_n membership, bound and WDGSS verdict")
    s.add_argument("graph")
    s.set_defaults(func=cmd_analyze)

    s = sub.add_parser("mates", parents=[common], help="exhaustive mate search (n <= 6)")
    s.add_argument("graph")
    s.set_defaults(func=cmd_mates)

    s = sub.add_parser("qmat", parents=[common], help="recover Q = W(D) W(C)^-1 and audit it")
    s.add_argument("source")
    s.add_argument("target")
    s.set_defaults(func=cmd_qmat)

    s = sub.add_parser("iso", parents=[common], help="isomorphism test with witness")
    s.add_argument("a")
    s.add_argument("b")
    s.set_defaults(func=cmd_iso)

    s = sub.add_parser("canon", parents=[common], help="canonical compact form")
    s.add_argument("graph")
    s.set_defaults(func=cmd_canon)

    s = sub.add_parser("census", parents=[common], help="exhaustive census of order n")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--shards", type=int, default=1)
    s.add_argument("--shard", type=int, help="run only phase 1 of this shard")
    s.add_argument("--resume", action="store_true", help="continue from checkpoints")
    s.add_argument("--checkpoint-dir", help="directory for per-shard checkpoints")
    s.add_argument("--merge", nargs="+", metavar="FILE", help="merge phase-1 shard files")
    s.set_defaults(func=cmd_census)

    s = sub.add_parser("verify-paper", parents=[common], help="reproduce the worked examples")
    s.add_argument("--exhaustive", action="store_true",
                   help="also search all 6-vertex graphs for mates of example 2")
    s.set_defaults(func=cmd_verify_paper)
    return p


def _validate(args) -> None:
    if args.threads < 1:
        raise InputError("--threads must be >= 1")
    if args.command == "census":
        if args.shards < 1:
            raise InputError("--shards must be >= 1")
        if args.shard is not None and not 0 <= args.shard < args.shards:
            raise InputError(f"--shard must be in 0..{args.shards - 1}")
        if args.resume and not args.checkpoint_dir:
            raise InputError("--resume needs --checkpoint-dir")


def main(argv=None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s %(message)s")
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        _validate(args)
        return args.func(args)
    except (InputError, UnsupportedError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except SkewSpecError as exc:
        print(f"finding: {exc}", file=sys.stderr)
        return EXIT_FINDING


if __name__ == "__main__":
    sys.exit(main())
