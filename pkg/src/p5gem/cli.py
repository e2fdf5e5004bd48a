"""Command-line front end: ``p5gem enumerate | check | verify | certify | sample-hstar``.

Exit codes: 0 success, 1 a semantic check failed, 2 usage or I/O error.
"""

from __future__ import annotations

import argparse
import json
import logging
import os
import sys
import time
from pathlib import Path

from .certifier import MAX_K, CatalogMissing, certify, load_catalogs, verify_certificate
from .criticality import is_vertex_critical
from .enumeration import enumerate_critical, verify_list
from .formats import Graph6Error, RunReport, file_digest, g6_encode, read_catalog, write_catalog
from .special import BASES, is_p5_gem_free, sample_hstar_detailed

log = logging.getLogger("p5gem")

EXIT_OK, EXIT_FAIL, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _parse_bases(text: str) -> list[int]:
    try:
        bases = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad base list {text!r}")
    if not bases or any(b not in BASES for b in bases):
        raise argparse.ArgumentTypeError("bases must be a comma list drawn from 1..10")
    return bases


def _writable(path: Path) -> None:
    parent = path.resolve().parent
    if not parent.is_dir() or not os.access(parent, os.W_OK):
        raise UsageError(f"cannot write to {path}")


def _readable(path: Path) -> None:
    if not path.is_file():
        raise UsageError(f"cannot read {path}")


def cmd_enumerate(args) -> int:
    if args.k < 3:
        raise UsageError("enumerate needs --k >= 3")
    out = Path(args.out or f"critical_k{args.k}.g6")
    report_path = Path(args.report or f"{out}.report.json")
    checkpoint = Path(args.checkpoint or f"{out}.checkpoint")
    for p in (out, report_path, checkpoint):
        _writable(p)

    def progress(base, counts):
        log.info("G%d progress: %s", base, counts)

    catalog = enumerate_critical(
        args.k,
        bases=args.bases,
        workers=args.workers,
        checkpoint_path=checkpoint,
        checkpoint_every=args.checkpoint_every,
        resume=args.resume,
        progress=progress,
    )
    write_catalog(catalog.graphs, out)
    report = catalog.report
    report.parameters.pop("workers", None)
    report.outputs = {out.name: file_digest(out)}
    report.write(report_path)
    checkpoint.unlink(missing_ok=True)
    log.info("%d graphs written to %s (%.1fs)", len(catalog.entries), out, report.wall_time)
    print(f"{len(catalog.entries)} {args.k}-vertex-critical graphs -> {out}")
    return EXIT_OK


def cmd_check(args) -> int:
    src = Path(args.input)
    _readable(src)
    graphs = read_catalog(src)
    t0 = time.perf_counter()
    report = RunReport("check", parameters={"k": args.k, "input": src.name})
    for line, G in enumerate(graphs, start=1):
        crit = is_vertex_critical(G, args.k)
        hit = is_p5_gem_free(G)
        entry = {"line": line, "g6": g6_encode(G), "n": G.n, "p5_gem_free": hit is None,
                 "criticality": crit.to_dict()}
        if hit is not None:
            entry["pattern"] = {"name": hit[0], "map": list(hit[1])}
            report.issues.append({"line": line, "problem": f"contains induced {hit[0]}"})
        if not crit.verdict:
            report.issues.append({"line": line, "problem": f"not {args.k}-vertex-critical"})
        report.results.append(entry)
    report.counts = {"lines": len(graphs), "failing": len({i["line"] for i in report.issues})}
    report.wall_time = round(time.perf_counter() - t0, 3)
    _emit(report, args.report)
    for issue in report.issues:
        print(f"line {issue['line']}: {issue['problem']}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_verify(args) -> int:
    src = Path(args.input)
    _readable(src)
    report = verify_list(args.k, src)
    _emit(report, args.report)
    for issue in report.issues:
        where = f"line {issue['line']}" if issue["line"] else "list"
        print(f"{where}: {issue['problem']}", file=sys.stderr)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_certify(args) -> int:
    if not 1 <= args.k <= MAX_K:
        raise UsageError(f"certify needs 1 <= --k <= {MAX_K}")
    src = Path(args.input)
    _readable(src)
    if args.catalog_dir is not None and not Path(args.catalog_dir).is_dir():
        raise UsageError(f"catalog directory {args.catalog_dir} not found")
    catalogs = load_catalogs(args.catalog_dir)
    if args.k + 1 not in catalogs:
        raise CatalogMissing(f"no {args.k + 1}-vertex-critical catalog available")
    graphs = read_catalog(src)
    t0 = time.perf_counter()
    report = RunReport("certify", parameters={"k": args.k, "input": src.name})
    for line, G in enumerate(graphs, start=1):
        cert = certify(G, args.k, catalogs)
        ok, reason = verify_certificate(G, args.k, cert, catalogs)
        entry = {"line": line, "g6": g6_encode(G), "certificate": cert.to_dict(), "verified": ok}
        if not ok:
            report.issues.append({"line": line, "problem": f"certificate rejected: {reason}"})
        report.results.append(entry)
    kinds = [r["certificate"]["kind"] for r in report.results]
    report.counts = {kind: kinds.count(kind) for kind in sorted(set(kinds))}
    report.wall_time = round(time.perf_counter() - t0, 3)
    _emit(report, args.out)
    return EXIT_OK if report.ok else EXIT_FAIL


def cmd_sample_hstar(args) -> int:
    out = Path(args.out)
    _writable(out)
    graphs = []
    for i in range(args.count):
        sample = sample_hstar_detailed(args.budget, args.seed + i)
        log.info("seed %d: n=%d, %d rejections", args.seed + i, sample.graph.n, sample.rejections)
        graphs.append(sample.graph)
    write_catalog(graphs, out)
    print(f"{len(graphs)} H* samples -> {out}")
    return EXIT_OK


def _emit(report: RunReport, path) -> None:
    if path is None or path == "-":
        sys.stdout.write(report.to_json())
    else:
        _writable(Path(path))
        report.write(path)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="p5gem", description=__doc__.splitlines()[0])
    p.add_argument("--verbose", action="store_true", help="log progress to stderr")
    sub = p.add_subparsers(dest="command", required=True)

    e = sub.add_parser("enumerate", help="list all k-vertex-critical (P5, gem)-free graphs")
    e.add_argument("--k", type=int, required=True)
    e.add_argument("--bases", type=_parse_bases, default=None, help="comma list of base graphs (default: 1..10)")
    e.add_argument("--out", default=None, help="graph6 catalog (default: critical_k<k>.g6)")
    e.add_argument("--report", default=None, help="JSON run report (default: <out>.report.json)")
    e.add_argument("--workers", type=int, default=os.cpu_count() or 1)
    e.add_argument("--checkpoint", default=None, help="checkpoint file (default: <out>.checkpoint)")
    e.add_argument("--checkpoint-every", type=int, default=1000)
    e.add_argument("--resume", action="store_true", help="continue from the checkpoint file")
    e.set_defaults(func=cmd_enumerate)

    c = sub.add_parser("check", help="test every graph in a file for k-criticality and (P5, gem)-freeness")
    c.add_argument("input")
    c.add_argument("--k", type=int, required=True)
    c.add_argument("--report", default=None, help="JSON report path (default: stdout)")
    c.set_defaults(func=cmd_check)

    v = sub.add_parser("verify", help="check a catalog file against the complete list for k")
    v.add_argument("input")
    v.add_argument("--k", type=int, required=True)
    v.add_argument("--report", default=None)
    v.set_defaults(func=cmd_verify)

    f = sub.add_parser("certify", help="k-colouring or critical-subgraph certificate per input graph")
    f.add_argument("input")
    f.add_argument("--k", type=int, required=True)
    f.add_argument("--catalog-dir", default=None, help="directory of critical_k<j>.g6 files (default: bundled)")
    f.add_argument("--out", default=None, help="JSON certificates (default: stdout)")
    f.set_defaults(func=cmd_certify)

    s = sub.add_parser("sample-hstar", help="write seeded random (P5, gem)-free H* graphs")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--budget", type=int, default=12)
    s.add_argument("--count", type=int, default=1)
    s.add_argument("--out", required=True)
    s.set_defaults(func=cmd_sample_hstar)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(asctime)s %(name)s %(message)s", stream=sys.stderr)
    try:
        return args.func(args)
    except (UsageError, CatalogMissing, OSError) as exc:
        print(f"p5gem: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except Graph6Error as exc:
        print(f"p5gem: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except KeyboardInterrupt:
        print("p5gem: interrupted; rerun with --resume to continue", file=sys.stderr)
        return 130


if __name__ == "__main__":
    sys.exit(main())
