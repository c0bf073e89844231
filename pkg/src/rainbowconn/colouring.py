"""Colouring certificates and the six rainbow-connectivity verifiers.

A verifier is the ground truth for every other part of the package: solver
witnesses, family constructions and gadget proof colourings are all run
through :func:`check_connectivity` before they are trusted.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass
from pathlib import Path
from typing import Mapping, Sequence

from .graph_core import UNREACHABLE, Edge, Graph, norm_edge


class ColouringError(ValueError):
    pass


class KindMismatch(ColouringError):
    pass


class NotAPath(ColouringError):
    pass


class Kind(enum.Enum):
    RC = "rc"
    SRC = "src"
    RVC = "rvc"
    SRVC = "srvc"
    TRC = "trc"
    STRC = "strc"

    @property
    def colours_edges(self) -> bool:
        return self in (Kind.RC, Kind.SRC, Kind.TRC, Kind.STRC)

    @property
    def colours_vertices(self) -> bool:
        return self in (Kind.RVC, Kind.SRVC, Kind.TRC, Kind.STRC)

    @property
    def coloured_elements(self) -> str:
        if self.colours_edges and self.colours_vertices:
            return "both"
        return "edges" if self.colours_edges else "vertices"

    @property
    def strong(self) -> bool:
        return self in (Kind.SRC, Kind.SRVC, Kind.STRC)

    @property
    def weak(self) -> "Kind":
        return {Kind.SRC: Kind.RC, Kind.SRVC: Kind.RVC, Kind.STRC: Kind.TRC}.get(self, self)

    @property
    def strengthened(self) -> "Kind":
        return {Kind.RC: Kind.SRC, Kind.RVC: Kind.SRVC, Kind.TRC: Kind.STRC}.get(self, self)

    def length_cap(self, k: int) -> int:
        """Longest path (in edges) that can be rainbow with ``k`` colours."""
        if self.coloured_elements == "edges":
            return k
        if self.coloured_elements == "vertices":
            return k + 1
        return (k + 1) // 2

    def elements_on(self, length: int) -> int:
        """Number of coloured elements on a path with ``length`` edges."""
        inner = max(length - 1, 0)
        if self.coloured_elements == "edges":
            return length
        if self.coloured_elements == "vertices":
            return inner
        return length + inner

    @classmethod
    def parse(cls, name: str) -> "Kind":
        try:
            return cls(name.strip().lower())
        except ValueError:
            raise ValueError(f"unknown parameter {name!r}; expected one of rc, src, rvc, srvc, trc, strc") from None

    def __str__(self) -> str:
        return self.name


ALL_KINDS = (Kind.RC, Kind.SRC, Kind.RVC, Kind.SRVC, Kind.TRC, Kind.STRC)


@dataclass(frozen=True)
class Colouring:
    """Palette size ``k`` plus colour maps over edges and/or vertices.

    Colours are ``1..k``.  With ``k == 0`` the maps are present but empty.
    """

    k: int
    edge_colour: Mapping[Edge, int] | None = None
    vertex_colour: Mapping[int, int] | None = None

    def __post_init__(self):
        if self.k < 0:
            raise ColouringError("palette size must be non-negative")
        if self.edge_colour is not None:
            object.__setattr__(self, "edge_colour", {norm_edge(*e): int(c) for e, c in self.edge_colour.items()})
        if self.vertex_colour is not None:
            object.__setattr__(self, "vertex_colour", {int(v): int(c) for v, c in self.vertex_colour.items()})
        for c in self._all_colours():
            if not (1 <= c <= self.k):
                raise ColouringError(f"colour {c} outside palette 1..{self.k}")

    def _all_colours(self):
        if self.edge_colour:
            yield from self.edge_colour.values()
        if self.vertex_colour:
            yield from self.vertex_colour.values()

    @classmethod
    def for_graph(
        cls,
        G: Graph,
        kind: Kind,
        k: int,
        edge_colours: Sequence[int] | None = None,
        vertex_colours: Sequence[int] | None = None,
    ) -> "Colouring":
        """Build from per-edge-id / per-vertex sequences; absent classes default to colour 1."""
        ec = vc = None
        if kind.colours_edges:
            if k == 0:
                ec = {}
            else:
                seq = edge_colours if edge_colours is not None else [1] * G.m
                ec = {e: seq[i] for i, e in enumerate(G.edges)}
        if kind.colours_vertices:
            if k == 0:
                vc = {}
            else:
                seq = vertex_colours if vertex_colours is not None else [1] * G.n
                vc = {v: seq[v] for v in range(G.n)}
        return cls(k, ec, vc)

    def permuted(self, perm: Mapping[int, int]) -> "Colouring":
        """Rename colours via the bijection ``perm`` on ``1..k``."""
        ec = None if self.edge_colour is None else {e: perm[c] for e, c in self.edge_colour.items()}
        vc = None if self.vertex_colour is None else {v: perm[c] for v, c in self.vertex_colour.items()}
        return Colouring(self.k, ec, vc)

    def recolour(self, element, colour: int, k: int | None = None) -> "Colouring":
        """Copy with one element (edge tuple or vertex int) recoloured."""
        k = self.k if k is None else k
        ec = None if self.edge_colour is None else dict(self.edge_colour)
        vc = None if self.vertex_colour is None else dict(self.vertex_colour)
        if isinstance(element, tuple):
            ec[norm_edge(*element)] = colour
        else:
            vc[element] = colour
        return Colouring(k, ec, vc)

    def used_colours(self) -> set[int]:
        return set(self._all_colours())


@dataclass(frozen=True)
class Violation:
    u: int
    v: int
    witness_paths_checked: int = 0


def validate(G: Graph, col: Colouring, kind: Kind) -> None:
    """Raise :class:`KindMismatch` unless ``col`` colours exactly ``kind``'s elements."""
    if kind.colours_edges != (col.edge_colour is not None):
        raise KindMismatch(f"{kind} {'needs' if kind.colours_edges else 'forbids'} an edge colouring")
    if kind.colours_vertices != (col.vertex_colour is not None):
        raise KindMismatch(f"{kind} {'needs' if kind.colours_vertices else 'forbids'} a vertex colouring")
    if col.edge_colour is not None:
        if col.k == 0:
            if col.edge_colour:
                raise KindMismatch("palette is empty but edges are coloured")
        elif set(col.edge_colour) != set(G.edges):
            raise KindMismatch("edge colouring does not match the graph's edge set")
    if col.vertex_colour is not None:
        if col.k == 0:
            if col.vertex_colour:
                raise KindMismatch("palette is empty but vertices are coloured")
        elif set(col.vertex_colour) != set(range(G.n)):
            raise KindMismatch("vertex colouring does not match the graph's vertex set")


def _element_colours(G: Graph, path: Sequence[int], col: Colouring, kind: Kind) -> list[int]:
    out = []
    if kind.colours_edges:
        ec = col.edge_colour
        out.extend(ec.get(norm_edge(a, b), 0) for a, b in zip(path, path[1:]))
    if kind.colours_vertices:
        vc = col.vertex_colour
        out.extend(vc.get(x, 0) for x in path[1:-1])
    return out


def path_is_rainbow(G: Graph, path: Sequence[int], col: Colouring, kind: Kind) -> bool:
    path = list(path)
    if not path or len(set(path)) != len(path):
        raise NotAPath(f"{path} is not a simple vertex sequence")
    for a, b in zip(path, path[1:]):
        if not G.has_edge(a, b):
            raise NotAPath(f"({a}, {b}) is not an edge")
    cols = _element_colours(G, path, col, kind)
    if 0 in cols:
        # uncoloured element (only possible with an empty palette)
        return False
    return len(set(cols)) == len(cols)


class _PairChecker:
    """Per-pair rainbow path search with colour-repeat pruning."""

    def __init__(self, G: Graph, col: Colouring, kind: Kind):
        validate(G, col, kind)
        self.G = G
        self.kind = kind
        self.k = col.k
        self.dist = G.dist
        self.use_e = kind.colours_edges
        self.use_v = kind.colours_vertices
        if self.use_e:
            ec = col.edge_colour
            self.nbr_colour = [[ec.get(norm_edge(x, y), 0) for y in G.adj[x]] for x in range(G.n)]
        if self.use_v:
            vc = col.vertex_colour
            self.vcol = [vc.get(x, 0) for x in range(G.n)]
        self.checked = 0

    def pair_ok(self, u: int, v: int) -> bool:
        if u == v:
            return True
        d = int(self.dist[u, v])
        if d == UNREACHABLE:
            return False
        if self.kind.strong:
            return self._search(u, v, d, geodesic=True)
        cap = self.kind.length_cap(self.k)
        for length in range(d, cap + 1):
            if self._search(u, v, length, geodesic=False):
                return True
        return False

    def _search(self, u: int, v: int, length: int, geodesic: bool) -> bool:
        adj = self.G.adj
        dv = self.dist[v]
        use_e, use_v = self.use_e, self.use_v
        nbr_colour = self.nbr_colour if use_e else None
        vcol = self.vcol if use_v else None
        used: set[int] = set()
        on_path = {u}

        def rec(x: int, remaining: int) -> bool:
            if remaining == 0:
                self.checked += 1
                return x == v
            for i, y in enumerate(adj[x]):
                if geodesic:
                    if dv[y] != remaining - 1:
                        continue
                else:
                    if y in on_path or dv[y] > remaining - 1 or (y == v and remaining != 1):
                        continue
                added = []
                ok = True
                if use_e:
                    c = nbr_colour[x][i]
                    if c == 0 or c in used:
                        ok = False
                    else:
                        used.add(c)
                        added.append(c)
                if ok and use_v and y != v:
                    c = vcol[y]
                    if c == 0 or c in used:
                        ok = False
                    else:
                        used.add(c)
                        added.append(c)
                if ok:
                    on_path.add(y)
                    found = rec(y, remaining - 1)
                    on_path.discard(y)
                    if found:
                        return True
                else:
                    self.checked += 1
                for c in added:
                    used.discard(c)
            return False

        return rec(u, length)


def find_violation(G: Graph, col: Colouring, kind: Kind) -> Violation | None:
    """Lexicographically least pair without a rainbow connection, or ``None``."""
    checker = _PairChecker(G, col, kind)
    for u in range(G.n):
        for v in range(u + 1, G.n):
            before = checker.checked
            if not checker.pair_ok(u, v):
                return Violation(u, v, checker.checked - before)
    return None


def check_connectivity(G: Graph, col: Colouring, kind: Kind) -> bool:
    return find_violation(G, col, kind) is None


def pair_connected(G: Graph, col: Colouring, kind: Kind, u: int, v: int) -> bool:
    return _PairChecker(G, col, kind).pair_ok(u, v)


# ---------------------------------------------------------------------------
# colouring files: "k <k>", "v <id> <c>", "e <u> <v> <c>", 1-based ids


def format_colouring(col: Colouring, comments: Sequence[str] = ()) -> str:
    lines = [f"c {c}" for c in comments]
    lines.append(f"k {col.k}")
    if col.vertex_colour:
        lines.extend(f"v {v + 1} {c}" for v, c in sorted(col.vertex_colour.items()))
    if col.edge_colour:
        lines.extend(f"e {u + 1} {v + 1} {c}" for (u, v), c in sorted(col.edge_colour.items()))
    return "\n".join(lines) + "\n"


def parse_colouring(text: str, G: Graph, kind: Kind) -> Colouring:
    k = None
    ec: dict[Edge, int] = {}
    vc: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("c"):
            continue
        parts = line.split()
        try:
            nums = [int(x) for x in parts[1:]]
        except ValueError:
            raise ColouringError(f"line {lineno}: non-integer field") from None
        if parts[0] == "k" and len(nums) == 1:
            k = nums[0]
        elif parts[0] == "v" and len(nums) == 2:
            v, c = nums
            if not (1 <= v <= G.n):
                raise KindMismatch(f"line {lineno}: unknown vertex {v}")
            vc[v - 1] = c
        elif parts[0] == "e" and len(nums) == 3:
            u, v, c = nums
            if not (1 <= u <= G.n and 1 <= v <= G.n) or not G.has_edge(u - 1, v - 1):
                raise KindMismatch(f"line {lineno}: unknown edge {u} {v}")
            ec[norm_edge(u - 1, v - 1)] = c
        else:
            raise ColouringError(f"line {lineno}: unrecognised record {line!r}")
    if k is None:
        raise ColouringError("missing 'k <palette-size>' header")
    if ec and not kind.colours_edges:
        raise KindMismatch(f"{kind} colours no edges but the file colours edges")
    if vc and not kind.colours_vertices:
        raise KindMismatch(f"{kind} colours no vertices but the file colours vertices")
    col = Colouring(k, ec if kind.colours_edges else None, vc if kind.colours_vertices else None)
    validate(G, col, kind)
    return col


def read_colouring(path: str | Path, G: Graph, kind: Kind) -> Colouring:
    return parse_colouring(Path(path).read_text(), G, kind)


def write_colouring(col: Colouring, path: str | Path, comments: Sequence[str] = ()) -> None:
    Path(path).write_text(format_colouring(col, comments))
