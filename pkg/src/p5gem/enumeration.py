"""Exhaustive search for k-vertex-critical clique expansions of the base graphs."""

from __future__ import annotations

import logging
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import islice, product
from pathlib import Path
from typing import Callable, Iterable, Iterator

from .criticality import CriticalityReport, block_similar_pair, is_vertex_critical
from .formats import RunReport, catalog_key, g6_encode, read_catalog
from .graph import Graph, automorphisms, canonical_form, find_induced
from .special import BASES, ExpansionSpec, base_graph, clique_expansion, is_p5_gem_free

log = logging.getLogger(__name__)

COUNT_FIELDS = ("generated", "pruned_clique", "pruned_similar", "tested", "found")


@lru_cache(maxsize=None)
def _base_automorphisms(base: int) -> tuple[tuple[int, ...], ...]:
    return tuple(automorphisms(base_graph(base)))


def is_orbit_representative(t: tuple[int, ...], perms: Iterable[tuple[int, ...]]) -> bool:
    """True iff t is lexicographically least among its images ``t'[p[j]] = t[j]``."""
    n = len(t)
    for p in perms:
        img = [0] * n
        for j in range(n):
            img[p[j]] = t[j]
        if tuple(img) < t:
            return False
    return True


def enumerate_tuples(base: int, k: int, start_after: tuple[int, ...] | None = None) -> Iterator[tuple[int, ...]]:
    """Orbit representatives of {1..k-2}^|V(G_base)| under Aut(G_base), in lexicographic order."""
    if base not in BASES:
        raise ValueError(f"base must be in 1..10, got {base}")
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    perms = _base_automorphisms(base)[1:]
    n = base_graph(base).n
    for t in product(range(1, k - 1), repeat=n):
        if start_after is not None and t <= start_after:
            continue
        if is_orbit_representative(t, perms):
            yield t


@dataclass
class Candidate:
    """Result of pushing one tuple through the pipeline."""

    spec: ExpansionSpec
    status: str  # one of COUNT_FIELDS[1:3], "tested"
    report: CriticalityReport | None = None


def classify(spec: ExpansionSpec, k: int) -> Candidate:
    """Clique-order filter, then block-level similar-cliques rule, then the full test."""
    if spec.omega() >= k:
        return Candidate(spec, "pruned_clique")
    if block_similar_pair(spec) is not None:
        return Candidate(spec, "pruned_similar")
    report = is_vertex_critical(clique_expansion(spec), k)
    return Candidate(spec, "tested", report)


def _run_chunk(args: tuple[int, int, list[tuple[int, ...]]]) -> tuple[dict, list[tuple[int, ...]]]:
    base, k, tuples = args
    counts = dict.fromkeys(COUNT_FIELDS, 0)
    found = []
    for t in tuples:
        c = classify(ExpansionSpec(base, t), k)
        counts["generated"] += 1
        counts[c.status] += 1
        if c.report is not None and c.report.verdict:
            counts["found"] += 1
            found.append(t)
    return counts, found


def _chunks(it: Iterator, size: int) -> Iterator[list]:
    while True:
        block = list(islice(it, size))
        if not block:
            return
        yield block


# --- checkpoints -------------------------------------------------------------

CHECKPOINT_HEADER = "# p5gem enumeration checkpoint v1"


@dataclass
class Checkpoint:
    """Resume state: per-base counts, the last fully processed tuple, and hits so far.

    Text format, one record per line::

        # p5gem enumeration checkpoint v1
        k <k>
        base <i> <done|last tuple as a,b,c> generated=.. pruned_clique=.. pruned_similar=.. tested=.. found=..
        found <i> <tuple as a,b,c>
    """

    k: int
    progress: dict[int, tuple[int, ...] | None] = field(default_factory=dict)
    done: set[int] = field(default_factory=set)
    counts: dict[int, dict[str, int]] = field(default_factory=dict)
    found: list[tuple[int, tuple[int, ...]]] = field(default_factory=list)

    def dumps(self) -> str:
        lines = [CHECKPOINT_HEADER, f"k {self.k}"]
        for base in sorted(set(self.counts) | self.done):
            if base in self.done:
                pos = "done"
            else:
                last = self.progress.get(base)
                pos = ",".join(map(str, last)) if last else "-"
            c = self.counts.get(base, dict.fromkeys(COUNT_FIELDS, 0))
            fields = " ".join(f"{name}={c[name]}" for name in COUNT_FIELDS)
            lines.append(f"base {base} {pos} {fields}")
        for base, t in self.found:
            lines.append(f"found {base} {','.join(map(str, t))}")
        return "\n".join(lines) + "\n"

    def save(self, path: str | os.PathLike) -> None:
        tmp = Path(str(path) + ".tmp")
        tmp.write_text(self.dumps(), encoding="ascii", newline="\n")
        os.replace(tmp, path)

    @classmethod
    def load(cls, path: str | os.PathLike) -> "Checkpoint":
        lines = Path(path).read_text(encoding="ascii").splitlines()
        if not lines or lines[0] != CHECKPOINT_HEADER:
            raise ValueError(f"{path}: not a checkpoint file")
        cp = None
        for lineno, line in enumerate(lines[1:], start=2):
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "k":
                cp = cls(int(parts[1]))
            elif parts[0] == "base" and cp is not None:
                base = int(parts[1])
                if parts[2] == "done":
                    cp.done.add(base)
                elif parts[2] != "-":
                    cp.progress[base] = tuple(int(x) for x in parts[2].split(","))
                cp.counts[base] = {kv.split("=")[0]: int(kv.split("=")[1]) for kv in parts[3:]}
            elif parts[0] == "found" and cp is not None:
                cp.found.append((int(parts[1]), tuple(int(x) for x in parts[2].split(","))))
            else:
                raise ValueError(f"{path}:{lineno}: unrecognised record {line!r}")
        if cp is None:
            raise ValueError(f"{path}: missing k record")
        return cp


# --- catalogs ----------------------------------------------------------------


@dataclass
class CatalogEntry:
    source: ExpansionSpec | None  # None for K_k
    graph: Graph
    g6: str
    report: CriticalityReport | None = None

    @property
    def label(self) -> str:
        return self.source.label() if self.source is not None else f"K{self.graph.n}"


@dataclass
class Catalog:
    k: int
    entries: list[CatalogEntry]
    report: RunReport | None = None

    @property
    def graphs(self) -> list[Graph]:
        return [e.graph for e in self.entries]


def enumerate_critical(
    k: int,
    bases: Iterable[int] | None = None,
    workers: int = 1,
    chunk_size: int = 256,
    checkpoint_path: str | os.PathLike | None = None,
    checkpoint_every: int = 1000,
    resume: bool = False,
    progress: Callable[[int, dict], None] | None = None,
) -> Catalog:
    """All k-vertex-critical graphs among K_k and clique expansions of the chosen bases.

    Results do not depend on ``workers`` or on interruption and resume.
    """
    if k < 3:
        raise ValueError(f"k must be >= 3, got {k}")
    bases = sorted(set(bases)) if bases is not None else list(BASES)
    for b in bases:
        if b not in BASES:
            raise ValueError(f"base must be in 1..10, got {b}")
    t0 = time.perf_counter()
    cp = Checkpoint(k)
    if resume and checkpoint_path is not None and Path(checkpoint_path).exists():
        cp = Checkpoint.load(checkpoint_path)
        if cp.k != k:
            raise ValueError(f"checkpoint is for k={cp.k}, not k={k}")
    pool = ProcessPoolExecutor(max_workers=workers) if workers > 1 else None
    try:
        for base in bases:
            if base in cp.done:
                continue
            counts = cp.counts.setdefault(base, dict.fromkeys(COUNT_FIELDS, 0))
            tuples = enumerate_tuples(base, k, start_after=cp.progress.get(base))
            jobs = ((base, k, chunk) for chunk in _chunks(tuples, chunk_size))
            since = 0
            for batch in _chunks(jobs, max(1, workers) * 4):
                results = pool.map(_run_chunk, batch) if pool else map(_run_chunk, batch)
                for job, (chunk_counts, found) in zip(batch, results):
                    for name in COUNT_FIELDS:
                        counts[name] += chunk_counts[name]
                    cp.found.extend((base, t) for t in found)
                    cp.progress[base] = job[2][-1]
                    since += chunk_counts["generated"]
                if since >= checkpoint_every:
                    since = 0
                    if checkpoint_path is not None:
                        cp.save(checkpoint_path)
                    if progress is not None:
                        progress(base, dict(counts))
            cp.done.add(base)
            cp.progress.pop(base, None)
            if checkpoint_path is not None:
                cp.save(checkpoint_path)
            log.info("G%d: %s", base, counts)
    finally:
        if pool is not None:
            pool.shutdown()
    catalog = _assemble(k, bases, cp)
    report = RunReport(
        "enumerate",
        parameters={"k": k, "bases": bases, "max_entry": k - 2, "workers": workers,
                    "checkpoint_every": checkpoint_every},
        counts={str(b): cp.counts[b] for b in bases},
        results=[e.label for e in catalog.entries],
        wall_time=round(time.perf_counter() - t0, 3),
    )
    report.check_counts()
    catalog.report = report
    return catalog


def _assemble(k: int, bases: list[int], cp: Checkpoint) -> Catalog:
    entries = [CatalogEntry(None, Graph.complete(k), g6_encode(Graph.complete(k)))]
    seen = {canonical_form(entries[0].graph): entries[0]}
    for base, t in sorted(cp.found):
        if base not in bases:
            continue
        spec = ExpansionSpec(base, t)
        G = clique_expansion(spec)
        key = canonical_form(G)
        if key in seen:
            log.info("%s isomorphic to %s, dropped", spec.label(), seen[key].label)
            continue
        entry = CatalogEntry(spec, G, g6_encode(G), is_vertex_critical(G, k))
        seen[key] = entry
        entries.append(entry)
    entries.sort(key=lambda e: catalog_key(e.graph))
    return Catalog(k, entries)


def reference_set(k: int) -> dict[bytes, str]:
    """Canonical forms of the known complete list for k, labelled for reporting.

    Uses the published tuples for k = 6, 7 and a fresh enumeration otherwise.
    """
    from .reference import REFERENCE_TUPLES

    out = {}
    if k in REFERENCE_TUPLES:
        for base, sizes in REFERENCE_TUPLES[k]:
            if base == 0:
                G, label = Graph.complete(k), f"K{k}"
            else:
                spec = ExpansionSpec(base, sizes)
                G, label = clique_expansion(spec), spec.label()
            out[canonical_form(G)] = label
    else:
        for e in enumerate_critical(k).entries:
            out[canonical_form(e.graph)] = e.label
    return out


def verify_list(k: int, path: str | os.PathLike) -> RunReport:
    """Re-check a catalog file: (P5, gem)-freeness, k-criticality, no duplicates, completeness."""
    t0 = time.perf_counter()
    graphs = read_catalog(path)
    report = RunReport("verify", parameters={"k": k, "path": str(path)})
    seen: dict[bytes, int] = {}
    for line, G in enumerate(graphs, start=1):
        entry = {"line": line, "g6": g6_encode(G), "n": G.n}
        hit = is_p5_gem_free(G)
        if hit is not None:
            report.issues.append({"line": line, "problem": f"contains induced {hit[0]}"})
        crit = is_vertex_critical(G, k)
        entry["critical"] = crit.verdict
        if not crit.verdict:
            report.issues.append({"line": line, "problem": f"not {k}-vertex-critical"})
        key = canonical_form(G)
        if key in seen:
            report.issues.append({"line": line, "problem": f"isomorphic to line {seen[key]}"})
        else:
            seen[key] = line
        report.results.append(entry)
    expected = reference_set(k)
    for key, label in expected.items():
        if key not in seen:
            report.issues.append({"line": None, "problem": f"missing {label}"})
    for key, line in seen.items():
        if key not in expected:
            report.issues.append({"line": line, "problem": "not in the reference list"})
    report.counts = {"lines": len(graphs), "expected": len(expected), "issues": len(report.issues)}
    report.wall_time = round(time.perf_counter() - t0, 3)
    return report


def equivalent_by_embedding(G: Graph, H: Graph) -> bool:
    """Isomorphism test independent of canonical forms: induced embeddings both ways."""
    return G.n == H.n and G.m == H.m and find_induced(G, H) is not None
