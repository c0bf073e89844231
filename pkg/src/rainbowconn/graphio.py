"""Graph file formats.

Graph files are DIMACS-flavoured text: comment lines start with ``c``, the
first other line is ``p <n> <m>``, then exactly ``m`` lines ``e <u> <v>`` with
1-based endpoints.  graph6 is the standard 6-bit printable encoding.
"""
from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, TextIO

from .graph_core import Graph


class GraphFormatError(ValueError):
    pass


def parse_graph_text(text: str) -> Graph:
    n = m = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        if n is None:
            if parts[0] != "p" or len(parts) != 3:
                raise GraphFormatError(f"line {lineno}: expected 'p <n> <m>'")
            try:
                n, m = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphFormatError(f"line {lineno}: bad problem line") from None
            continue
        if parts[0] != "e" or len(parts) != 3:
            raise GraphFormatError(f"line {lineno}: expected 'e <u> <v>'")
        try:
            u, v = int(parts[1]), int(parts[2])
        except ValueError:
            raise GraphFormatError(f"line {lineno}: bad edge line") from None
        if not (1 <= u <= n and 1 <= v <= n):
            raise GraphFormatError(f"line {lineno}: vertex out of range 1..{n}")
        edges.append((u - 1, v - 1))
    if n is None:
        raise GraphFormatError("missing 'p <n> <m>' line")
    if len(edges) != m:
        raise GraphFormatError(f"header announces {m} edges, found {len(edges)}")
    return Graph(n, edges)


def format_graph(G: Graph, comments: Iterable[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"p {G.n} {G.m}")
    lines.extend(f"e {u + 1} {v + 1}" for u, v in G.edges)
    return "\n".join(lines) + "\n"


def read_graph(path: str | Path) -> Graph:
    return parse_graph_text(Path(path).read_text())


def write_graph(G: Graph, path: str | Path, comments: Iterable[str] = ()) -> None:
    Path(path).write_text(format_graph(G, comments))


# ---------------------------------------------------------------------------
# graph6


def _n_to_g6(n: int) -> list[int]:
    if n < 63:
        return [n]
    if n < 258048:
        return [63, (n >> 12) & 63, (n >> 6) & 63, n & 63]
    return [63, 63] + [(n >> s) & 63 for s in (30, 24, 18, 12, 6, 0)]


def to_graph6(G: Graph) -> str:
    bits = []
    for j in range(1, G.n):
        for i in range(j):
            bits.append(1 if G.has_edge(i, j) else 0)
    while len(bits) % 6:
        bits.append(0)
    data = _n_to_g6(G.n)
    for k in range(0, len(bits), 6):
        x = 0
        for b in bits[k:k + 6]:
            x = (x << 1) | b
        data.append(x)
    return "".join(chr(x + 63) for x in data)


def from_graph6(line: str) -> Graph:
    s = line.strip()
    if s.startswith(">>graph6<<"):
        s = s[len(">>graph6<<"):]
    data = [ord(ch) - 63 for ch in s]
    if not data or any(x < 0 or x > 63 for x in data):
        raise GraphFormatError(f"invalid graph6 string {line!r}")
    if data[0] < 63:
        n, rest = data[0], data[1:]
    elif len(data) > 1 and data[1] < 63:
        n = (data[1] << 12) | (data[2] << 6) | data[3]
        rest = data[4:]
    else:
        n = 0
        for x in data[2:8]:
            n = (n << 6) | x
        rest = data[8:]
    need = (n * (n - 1) // 2 + 5) // 6
    if len(rest) != need:
        raise GraphFormatError(f"graph6 string has {len(rest)} data bytes, expected {need}")
    bits = []
    for x in rest:
        bits.extend((x >> s) & 1 for s in range(5, -1, -1))
    edges = []
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                edges.append((i, j))
            k += 1
    return Graph(n, edges)


def iter_graph6(stream: TextIO) -> Iterator[Graph]:
    for line in stream:
        if line.strip():
            yield from_graph6(line)


def load_graph(path: str | Path, fmt: str = "auto") -> Graph:
    """Read one graph; ``fmt`` is ``dimacs``, ``g6`` or ``auto``."""
    text = Path(path).read_text()
    if fmt == "auto":
        first = next((ln.strip() for ln in text.splitlines() if ln.strip()), "")
        fmt = "dimacs" if first[:1] in ("p", "c") else "g6"
    if fmt == "g6":
        lines = [ln for ln in text.splitlines() if ln.strip()]
        if len(lines) != 1:
            raise GraphFormatError(f"expected exactly one graph6 line, found {len(lines)}")
        return from_graph6(lines[0])
    if fmt == "dimacs":
        return parse_graph_text(text)
    raise GraphFormatError(f"unknown graph format {fmt!r}")
