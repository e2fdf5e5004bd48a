"""graph6 encoding, catalog files and JSON run reports."""

from __future__ import annotations

import hashlib
import json
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterable

import numpy as np

from .graph import Graph

G6_HEADER = ">>graph6<<"
G6_MAX_N = 258047


class Graph6Error(ValueError):
    """Malformed graph6 text. ``offset`` is the 0-based byte position at fault."""

    def __init__(self, message: str, offset: int, line: int | None = None):
        self.offset = offset
        self.line = line
        where = f"line {line}, " if line is not None else ""
        super().__init__(f"{where}byte {offset}: {message}")


def _encode_n(n: int) -> str:
    if n < 0 or n > G6_MAX_N:
        raise ValueError(f"graph6 supports 0 <= n <= {G6_MAX_N}, got {n}")
    if n <= 62:
        return chr(n + 63)
    return chr(126) + "".join(chr(((n >> s) & 63) + 63) for s in (12, 6, 0))


def g6_encode(G: Graph) -> str:
    """Standard graph6 string for G (no header, no newline)."""
    n = G.n
    head = _encode_n(n)
    # column-major upper triangle: x(0,1), x(0,2), x(1,2), x(0,3), ...
    # tril_indices walks (j, i) row-major with i < j, i.e. column-major over the upper triangle
    j, i = np.tril_indices(n, -1)
    bits = G.adj[i, j].astype(np.uint8)
    pad = (-len(bits)) % 6
    if pad:
        bits = np.concatenate([bits, np.zeros(pad, dtype=np.uint8)])
    groups = bits.reshape(-1, 6)
    values = groups @ np.array([32, 16, 8, 4, 2, 1], dtype=np.int64)
    return head + "".join(chr(int(v) + 63) for v in values)


def g6_decode(s: str | bytes, line: int | None = None) -> Graph:
    """Inverse of :func:`g6_encode`; raises :class:`Graph6Error` on malformed input."""
    if isinstance(s, bytes):
        s = s.decode("ascii", errors="replace")
    s = s.rstrip("\r\n")
    base = 0
    if s.startswith(G6_HEADER):
        base = len(G6_HEADER)
        s = s[base:]
    if not s:
        raise Graph6Error("empty graph6 string", base, line)
    data = []
    for i, ch in enumerate(s):
        o = ord(ch)
        if not 63 <= o <= 126:
            raise Graph6Error(f"character {ch!r} outside range 63..126", base + i, line)
        data.append(o - 63)
    if data[0] != 63:
        n, pos = data[0], 1
    elif len(data) >= 2 and data[1] == 63:
        if len(data) < 8:
            raise Graph6Error("truncated 8-byte vertex count", base + len(data), line)
        n = 0
        for d in data[2:8]:
            n = (n << 6) | d
        pos = 8
    else:
        if len(data) < 4:
            raise Graph6Error("truncated 4-byte vertex count", base + len(data), line)
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        pos = 4
        if n < 63:
            raise Graph6Error(f"vertex count {n} must use the short form", base + 1, line)
    if n > G6_MAX_N:
        raise Graph6Error(f"vertex count {n} exceeds supported {G6_MAX_N}", base, line)
    nbits = n * (n - 1) // 2
    need = (nbits + 5) // 6
    body = data[pos:]
    if len(body) != need:
        off = base + pos + min(len(body), need)
        raise Graph6Error(f"expected {need} edge characters, found {len(body)}", off, line)
    if need:
        arr = np.array(body, dtype=np.uint8)[:, None]
        bits = ((arr >> np.array([5, 4, 3, 2, 1, 0], dtype=np.uint8)) & 1).reshape(-1)
        if np.any(bits[nbits:]):
            raise Graph6Error("nonzero padding bits", base + pos + need - 1, line)
        bits = bits[:nbits]
    else:
        bits = np.zeros(0, dtype=np.uint8)
    adj = np.zeros((n, n), dtype=np.uint8)
    j, i = np.tril_indices(n, -1)
    adj[i, j] = bits
    adj[j, i] = bits
    return Graph(adj)


def catalog_key(G: Graph) -> tuple[int, str]:
    """Sort key for published catalogs: vertex count, then graph6 text."""
    return (G.n, g6_encode(G))


def sort_catalog(graphs: Iterable[Graph]) -> list[Graph]:
    return sorted(graphs, key=catalog_key)


def write_catalog(graphs: Iterable[Graph], path: str | os.PathLike) -> None:
    """Write one graph6 line per graph, LF-terminated, in the given order."""
    text = "".join(g6_encode(G) + "\n" for G in graphs)
    Path(path).write_text(text, encoding="ascii", newline="\n")


def read_catalog(path: str | os.PathLike) -> list[Graph]:
    """Read a graph6 catalog; errors carry the 1-based line number. Blank lines are skipped."""
    graphs = []
    with open(path, "r", encoding="ascii", errors="replace", newline="") as fh:
        for lineno, raw in enumerate(fh, start=1):
            text = raw.rstrip("\r\n")
            if not text.strip():
                continue
            graphs.append(g6_decode(text, line=lineno))
    return graphs


def file_digest(path: str | os.PathLike) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


@dataclass
class RunReport:
    """Counts and metadata for one enumeration, check or verification run.

    Per-base count fields: ``generated`` orbit representatives, ``pruned_clique``
    (clique number too large), ``pruned_similar`` (dominated block),
    ``tested`` (full criticality test) and ``found``. The invariant
    ``generated == pruned_clique + pruned_similar + tested`` holds per base.
    """

    command: str
    parameters: dict = field(default_factory=dict)
    counts: dict = field(default_factory=dict)
    results: list = field(default_factory=list)
    issues: list = field(default_factory=list)
    wall_time: float = 0.0
    outputs: dict = field(default_factory=dict)

    FIELD_ORDER = ("command", "parameters", "counts", "results", "issues", "wall_time", "outputs")

    @property
    def ok(self) -> bool:
        return not self.issues

    def check_counts(self) -> None:
        for base, c in self.counts.items():
            pruned = c["pruned_clique"] + c["pruned_similar"]
            if c["generated"] != pruned + c["tested"] or c["found"] > c["tested"]:
                raise AssertionError(f"inconsistent counts for base {base}: {c}")

    def to_dict(self) -> dict:
        return {name: getattr(self, name) for name in self.FIELD_ORDER}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def write(self, path: str | os.PathLike) -> None:
        Path(path).write_text(self.to_json(), encoding="utf-8", newline="\n")

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        data = json.loads(text)
        return cls(**{name: data[name] for name in cls.FIELD_ORDER if name in data})
