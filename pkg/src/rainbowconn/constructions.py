"""Gadget graphs, their hand-made colourings, and the realizability oracle.

Every gadget comes back as a :class:`ConstructionBundle`.  The bundled
colourings are run through the verifier when the bundle is built, so a bundle
that exists is a bundle whose certificates pass (unless it is explicitly
marked as too large to check).
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Sequence

from .colouring import Colouring, Kind, find_violation
from .graph_core import Graph, complete_graph, cycle_graph, expand_vertex, norm_edge, path_graph, star_graph

THEOREM_MODE_MAX_N = 100_000
DESK_VERIFY_MAX_ORDER = 5_000


class OutOfRange(ValueError):
    pass


class ConstructionSelfCheckFailed(RuntimeError):
    pass


@dataclass(frozen=True)
class ConstructionDescriptor:
    name: str
    params: tuple[tuple[str, int], ...] = ()

    @classmethod
    def of(cls, name: str, **params) -> "ConstructionDescriptor":
        return cls(name, tuple(sorted((k, int(v)) for k, v in params.items() if v is not None)))

    def get(self, key: str, default=None):
        return dict(self.params).get(key, default)

    def __str__(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params)
        return f"{self.name}({args})"


@dataclass
class ConstructionBundle:
    descriptor: ConstructionDescriptor
    graph: Graph
    named_vertices: dict[str, object] = field(default_factory=dict)
    proof_colourings: dict[tuple[str, Kind], Colouring] = field(default_factory=dict)
    # True = verified, None = skipped as too large to check
    verified: dict[tuple[str, Kind], bool | None] = field(default_factory=dict)
    graphs: dict[str, Graph] = field(default_factory=dict)
    flags: dict[str, object] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def colouring(self, label: str, kind: Kind) -> Colouring:
        return self.proof_colourings[(label, kind)]


def _colouring(G: Graph, kind: Kind, k: int, edge: dict | None = None, vertex: dict | None = None,
               default: int = 1) -> Colouring:
    ec = vc = None
    if kind.colours_edges:
        edge = {norm_edge(*e): c for e, c in (edge or {}).items()}
        ec = {e: edge.get(e, default) for e in G.edges}
    if kind.colours_vertices:
        vertex = vertex or {}
        vc = {v: vertex.get(v, default) for v in range(G.n)}
    return Colouring(k, ec, vc)


def _self_check(bundle: ConstructionBundle, graph_key: str | None = None) -> None:
    G = bundle.graphs.get(graph_key, bundle.graph) if graph_key else bundle.graph
    if G.n > DESK_VERIFY_MAX_ORDER:
        for key in bundle.proof_colourings:
            bundle.verified[key] = None
        bundle.notes.append(f"order {G.n} is not desk-verifiable; colourings generated but not checked")
        return
    for (label, kind), col in bundle.proof_colourings.items():
        bad = find_violation(G, col, kind)
        if bad is not None:
            raise ConstructionSelfCheckFailed(
                f"{bundle.descriptor}: colouring {label} fails as {kind} with {col.k} colours "
                f"on pair ({bad.u}, {bad.v})"
            )
        bundle.verified[(label, kind)] = True


# ---------------------------------------------------------------------------
# clique with attached v/w vertices: rvc stays 3 while srvc grows


def build_fb(b: int) -> ConstructionBundle:
    if b < 3:
        raise OutOfRange("F_b needs b >= 3")
    N = 2 * b
    u = list(range(N))
    v = list(range(N, 2 * N))
    w = list(range(2 * N, 3 * N))
    edges = [(u[i], u[j]) for i in range(N) for j in range(i + 1, N)]
    for i in range(N):
        prev = (i - 1) % N
        edges += [(u[i], v[i]), (u[i], v[prev]), (u[i], w[i]), (w[i], v[i]), (w[i], v[prev])]
    G = Graph(3 * N, edges)
    # names are 1-based: u[i] is u_{i+1}
    f = {u[i]: 1 if (i + 1) % 2 else 2 for i in range(N)}
    g = {u[i]: (i + 2) // 2 for i in range(N)}
    bundle = ConstructionBundle(
        ConstructionDescriptor.of("Fb", b=b), G, {"U": u, "V": v, "W": w},
        {("f", Kind.RVC): _colouring(G, Kind.RVC, 3, vertex=f, default=3),
         ("g", Kind.SRVC): _colouring(G, Kind.SRVC, b, vertex=g, default=1)},
    )
    return bundle


# ---------------------------------------------------------------------------
# two-route gadget: rvc = a from the diameter, srvc = b from pair vectors


def fab_order_parameter(a: int, b: int) -> int:
    return 2 * (b - 1) * (b - a + 2)


def build_fab(a: int, b: int) -> ConstructionBundle:
    if not 4 <= a <= b:
        raise OutOfRange("F_{a,b} needs 4 <= a <= b")
    n = fab_order_parameter(a, b)
    hub = 0
    chain = list(range(1, a - 1))              # u_0 .. u_{a-3}
    base = a - 1
    V = list(range(base, base + n))
    W = list(range(base + n, base + 2 * n))
    X = list(range(base + 2 * n, base + 3 * n))
    end = chain[-1]
    edges = list(zip(chain, chain[1:]))
    for i in range(n):
        edges += [(hub, W[i]), (W[i], V[i]), (end, X[i]), (X[i], V[i])]
    for i in range(0, n, 2):                   # 1-based odd l pairs with l+1
        edges += [(V[i], V[i + 1]), (W[i], W[i + 1]), (X[i], X[i + 1])]
    G = Graph(3 * n + a - 1, edges)

    c = {chain[j]: j for j in range(1, a - 2)}
    for i in range(n):
        odd = (i + 1) % 2 == 1
        c[X[i]] = a - 2 if odd else a - 1
        c[W[i]] = a - 1 if odd else a - 2

    g = {chain[j]: j for j in range(1, a - 2)}
    vectors = itertools.product(range(a - 2, b), range(1, b))
    for i, (p, q) in zip(range(0, n, 2), vectors):
        for t in (i, i + 1):
            g[X[t]] = p
            g[W[t]] = q
    return ConstructionBundle(
        ConstructionDescriptor.of("Fab", a=a, b=b), G,
        {"u": hub, "U": chain, "V": V, "W": W, "X": X, "n": n},
        {("c", Kind.RVC): _colouring(G, Kind.RVC, a, vertex=c, default=a),
         ("g", Kind.SRVC): _colouring(G, Kind.SRVC, b, vertex=g, default=b)},
    )


# ---------------------------------------------------------------------------
# multipartite core with pendants: trc = a, strc = b


def gabm_theorem_m(b: int) -> int:
    """Least ``m >= 2`` with ``(b-1)^(m-1) > (b-2)^m``."""
    m = 2
    while (b - 1) ** (m - 1) <= (b - 2) ** m:
        m += 1
    return m


def gabm_parts(a: int, b: int, m: int, n: int, lazy: bool = False):
    """Graph, roles and the two colourings, with no parameter checks.

    Returns ``(G, roles, colourings)``; the STRC colouring is omitted when
    there are fewer than ``n`` distinct vectors.
    """
    U = list(range(m))
    V = list(range(m, m + n))
    W = list(range(m + n, m + n + a - 1))
    edges = [(U[i], U[j]) for i in range(m) for j in range(i + 1, m)]
    edges += [(x, y) for x in U for y in V]
    edges += [(U[0], w) for w in W]
    G = Graph(m + n + a - 1, edges, lazy=lazy)

    f_e = {(U[0], W[l]): l + 1 for l in range(a - 1)}
    f_e.update({(U[0], y): 1 for y in V})
    f_e.update({(U[i], y): 2 for i in range(1, m) for y in V})
    f_e.update({(U[i], U[j]): 4 for i in range(m) for j in range(i + 1, m)})
    cols = {("f", Kind.TRC): _colouring(G, Kind.TRC, a, edge=f_e, vertex={U[0]: a}, default=3)}

    if (b - 1) ** (m - 1) >= n:
        g_e = {(U[0], W[l]): l + 1 for l in range(a - 1)}
        for y, vec in zip(V, itertools.product(range(1, b), repeat=m - 1)):
            for i, digit in enumerate(vec):
                g_e[(U[i + 1], y)] = digit
        cols[("g", Kind.STRC)] = _colouring(G, Kind.STRC, b, edge=g_e, vertex={U[0]: a}, default=b)
    return G, {"U": U, "V": V, "W": W, "centre": U[0]}, cols


def build_gabm(a: int, b: int, m: int | None = None, n: int | None = None) -> ConstructionBundle:
    """Theorem mode when ``n`` is omitted, surrogate mode with an explicit ``n``."""
    if a < 5 or b <= a:
        raise OutOfRange("G_{a,b,m} needs a >= 5 and b > a")
    theorem_mode = n is None
    if m is None:
        if not theorem_mode:
            raise OutOfRange("surrogate mode needs m")
        m = gabm_theorem_m(b)
    if m < 2:
        raise OutOfRange("G_{a,b,m} needs m >= 2")
    if theorem_mode:
        n = (b - 2) ** m + 1
        if n > THEOREM_MODE_MAX_N:
            raise OutOfRange(f"theorem-mode n={n} exceeds {THEOREM_MODE_MAX_N}")
    if n < 2:
        raise OutOfRange("G_{a,b,m} needs n >= 2")
    big = m + n + a - 1 > DESK_VERIFY_MAX_ORDER
    G, roles, cols = gabm_parts(a, b, m, n, lazy=big)
    flags = {
        "theorem_mode": theorem_mode,
        "vectors_suffice": (b - 1) ** (m - 1) >= n,
        "m_large_enough": (b - 1) ** (m - 1) > (b - 2) ** m,
        "n_matches_theorem": n == (b - 2) ** m + 1,
    }
    bundle = ConstructionBundle(ConstructionDescriptor.of("Gabm", a=a, b=b, m=m, n=n), G, roles, cols, flags=flags)
    if not flags["vectors_suffice"]:
        bundle.notes.append(f"only {(b - 1) ** (m - 1)} vectors for {n} vertices; colouring g omitted")
    return bundle


# ---------------------------------------------------------------------------
# comparison graphs


def build_gs(s: int) -> ConstructionBundle:
    """``s`` triangles ``u_i v_i w_i`` with a clique on the ``u_i``."""
    if s < 2:
        raise OutOfRange("G_s needs s >= 2")
    u, v, w = list(range(s)), list(range(s, 2 * s)), list(range(2 * s, 3 * s))
    edges = [(u[i], u[j]) for i in range(s) for j in range(i + 1, s)]
    for i in range(s):
        edges += [(u[i], v[i]), (u[i], w[i]), (v[i], w[i])]
    return ConstructionBundle(ConstructionDescriptor.of("Gs", s=s), Graph(3 * s, edges), {"U": u, "V": v, "W": w})


def build_hs(s: int) -> ConstructionBundle:
    if s < 2:
        raise OutOfRange("H_s needs s >= 2")
    base = build_gs(s)
    u, v, w = base.named_vertices["U"], base.named_vertices["V"], base.named_vertices["W"]
    z = list(range(3 * s, 4 * s))
    edges = list(base.graph.edges)
    for i in range(s):
        edges += [(u[i], z[i]), (u[(i + 1) % s], z[i]), (v[i], z[i]), (w[i], z[(i + 4) % s])]
    return ConstructionBundle(ConstructionDescriptor.of("Hs", s=s), Graph(4 * s, edges),
                              {"U": u, "V": v, "W": w, "Z": z})


def build_broom(s: int, t: int) -> ConstructionBundle:
    """Star with ``s`` leaves whose centre starts a path of length ``t``."""
    if s < 1 or t < 1:
        raise OutOfRange("broom needs s >= 1 and t >= 1")
    edges = [(0, i) for i in range(1, s + 1)]
    handle = [0] + list(range(s + 1, s + t + 1))
    edges += list(zip(handle, handle[1:]))
    return ConstructionBundle(ConstructionDescriptor.of("broom", s=s, t=t), Graph(1 + s + t, edges),
                              {"centre": 0, "leaves": list(range(1, s + 1)), "handle": handle})


def build_c5_expansion(r: int) -> ConstructionBundle:
    """Five-cycle with vertex 0 blown up into a clique of order ``r``."""
    if r < 1:
        raise OutOfRange("clique order must be >= 1")
    G = expand_vertex(cycle_graph(5), 0, complete_graph(r))
    return ConstructionBundle(ConstructionDescriptor.of("c5_expansion", r=r), G,
                              {"clique": list(range(4, 4 + r)), "cycle_rest": [0, 1, 2, 3]})


# ---------------------------------------------------------------------------
# spanning-subgraph pairs where a strong parameter drops when an edge is removed
#
# Each drawing was decoded by splitting every straight segment at the marked
# points lying on it.  Vertex names below are the drawing coordinates.


def _from_coords(coords: Sequence[tuple[float, float]], segments, dotted):
    idx = {p: i for i, p in enumerate(coords)}
    edges = [(idx[a], idx[b]) for a, b in segments]
    H = Graph(len(coords), edges)
    G = H.with_edges([(idx[dotted[0]], idx[dotted[1]])])
    return idx, H, G


def build_figure1a() -> ConstructionBundle:
    A, B = (-6, 0), (-4, 0)
    M = [(-5, 1), (-5, 0.33), (-5, -0.33), (-5, -1)]
    pa, pb = [(-7, 1), (-7, -1)], [(-3, 1), (-3, -1)]
    coords = [A, B, *M, *pa, *pb]
    # long diagonals pass through a centre, so they split into pendant + middle edge
    segs = [(A, pa[0]), (A, M[3]), (A, pa[1]), (A, M[0]), (A, M[1]), (A, M[2]),
            (B, pb[0]), (B, M[3]), (B, pb[1]), (B, M[0]), (B, M[1]), (B, M[2])]
    idx, H, G = _from_coords(coords, segs, (A, B))
    colour = {
        (A, pa[0]): 1, (A, pa[1]): 2, (A, M[0]): 3, (A, M[3]): 4, (A, M[1]): 4, (A, M[2]): 3,
        (B, M[0]): 1, (B, M[3]): 2, (B, M[1]): 1, (B, M[2]): 2, (B, pb[0]): 3, (B, pb[1]): 4,
    }
    col = _colouring(H, Kind.SRC, 4, edge={(idx[a], idx[b]): c for (a, b), c in colour.items()})
    return ConstructionBundle(
        ConstructionDescriptor.of("figure1a"), H,
        {"centres": [idx[A], idx[B]], "middles": [idx[p] for p in M],
         "pendants": [idx[p] for p in pa + pb], "dotted_edge": (idx[A], idx[B])},
        {("figure", Kind.SRC): col}, graphs={"H": H, "G": G},
    )


def build_figure1b() -> ConstructionBundle:
    L, R = (-1.5, 0), (1.5, 0)
    la, lb, lpa, lpb = (-2, 0.5), (-2, -0.5), (-2.5, 1), (-2.5, -1)
    ra, rb, rpa, rpb = (2, 0.5), (2, -0.5), (2.5, 1), (2.5, -1)
    ys = [1, 0.33, -0.33, -1]
    left = [(-0.5, y) for y in ys]
    right = [(0.5, y) for y in ys]
    x = right[3]
    coords = [lpa, la, lpb, lb, L, *left, *right, R, ra, rpa, rb, rpb]
    # the long diagonals split at the arm vertex and at the centre
    segs = [(lpb, lb), (lb, L), (L, left[0]), (lpa, la), (la, L), (L, left[3]),
            (rpb, rb), (rb, R), (R, right[0]), (rpa, ra), (ra, R), (R, right[3]),
            (L, left[1]), (L, left[2]), (R, right[1]), (R, right[2])]
    segs += list(zip(left, right))
    idx, H, G = _from_coords(coords, segs, (L, x))
    colour = {la: 1, lb: 2, ra: 3, rb: 4, L: 5, R: 6,
              left[0]: 3, left[1]: 4, left[2]: 3, left[3]: 4,
              right[0]: 1, right[1]: 1, right[2]: 2, right[3]: 2}
    col = _colouring(H, Kind.SRVC, 6, vertex={idx[p]: c for p, c in colour.items()})
    return ConstructionBundle(
        ConstructionDescriptor.of("figure1b"), H,
        {"centres": [idx[L], idx[R]], "arms": [idx[p] for p in (la, lb, ra, rb)],
         "pendants": [idx[p] for p in (lpa, lpb, rpa, rpb)],
         "left_middles": [idx[p] for p in left], "right_middles": [idx[p] for p in right],
         "x": idx[x], "dotted_edge": (idx[L], idx[x])},
        {("figure", Kind.SRVC): col}, graphs={"H": H, "G": G},
    )


def build_figure1c() -> ConstructionBundle:
    A, B = (4, 0), (6, 0)
    M = [(5, 1), (5, 0.33), (5, -0.33), (5, -1)]
    sa, sb = [(3.5, 0.5), (3.5, -0.5)], [(6.5, 0.5), (6.5, -0.5)]
    pa, pb = [(3, 1), (3, -1)], [(7, 1), (7, -1)]
    coords = [A, B, *M, *sa, *sb, *pa, *pb]
    segs = [(pa[0], sa[0]), (sa[0], A), (A, M[3]), (pa[1], sa[1]), (sa[1], A), (A, M[0]),
            (pb[0], sb[0]), (sb[0], B), (B, M[3]), (pb[1], sb[1]), (sb[1], B), (B, M[0]),
            (A, M[1]), (A, M[2]), (B, M[1]), (B, M[2])]
    idx, H, G = _from_coords(coords, segs, (A, B))
    vcol = {sa[0]: 1, sa[1]: 2, sb[0]: 3, sb[1]: 4, A: 5, B: 6, M[0]: 1, M[1]: 1, M[2]: 2, M[3]: 2}
    ecol = {(sa[0], A): 7, (sa[1], A): 8, (pa[0], sa[0]): 11, (pa[1], sa[1]): 12,
            (B, sb[0]): 9, (B, sb[1]): 10, (sb[0], pb[0]): 13, (sb[1], pb[1]): 14,
            (A, M[0]): 9, (A, M[3]): 10, (A, M[1]): 10, (A, M[2]): 9,
            (B, M[0]): 7, (B, M[3]): 8, (B, M[1]): 7, (B, M[2]): 8}
    col = _colouring(H, Kind.STRC, 14,
                     edge={(idx[a], idx[b]): c for (a, b), c in ecol.items()},
                     vertex={idx[p]: c for p, c in vcol.items()})
    return ConstructionBundle(
        ConstructionDescriptor.of("figure1c"), H,
        {"centres": [idx[A], idx[B]], "middles": [idx[p] for p in M],
         "subdivisions": [idx[p] for p in sa + sb], "pendants": [idx[p] for p in pa + pb],
         "dotted_edge": (idx[A], idx[B])},
        {("figure", Kind.STRC): col}, graphs={"H": H, "G": G},
    )


_BUILDERS = {
    "Fb": (build_fb, ("b",)),
    "Fab": (build_fab, ("a", "b")),
    "Gabm": (build_gabm, ("a", "b", "m", "n")),
    "Gs": (build_gs, ("s",)),
    "Hs": (build_hs, ("s",)),
    "broom": (build_broom, ("s", "t")),
    "c5_expansion": (build_c5_expansion, ("r",)),
    "figure1a": (build_figure1a, ()),
    "figure1b": (build_figure1b, ()),
    "figure1c": (build_figure1c, ()),
}
CONSTRUCTION_NAMES = tuple(_BUILDERS)


def make_construction(desc: ConstructionDescriptor, verify: bool = True) -> ConstructionBundle:
    """Build a gadget; with ``verify`` every bundled colouring is checked."""
    try:
        builder, names = _BUILDERS[desc.name]
    except KeyError:
        raise OutOfRange(f"unknown construction {desc.name!r}") from None
    given = dict(desc.params)
    extra = set(given) - set(names)
    if extra:
        raise OutOfRange(f"{desc.name} takes no parameter(s) {sorted(extra)}")
    optional = {"m", "n"} if desc.name == "Gabm" else set()
    missing = [k for k in names if k not in given and k not in optional]
    if missing:
        raise OutOfRange(f"{desc.name} needs parameter(s) {missing}")
    bundle = builder(**{k: given[k] for k in names if k in given})
    if verify:
        _self_check(bundle)
    return bundle


# ---------------------------------------------------------------------------
# which (a, b) pairs occur as (weak, strong) values


@dataclass(frozen=True)
class Infeasible:
    a: int
    b: int
    pair: str
    clause: str

    def __bool__(self) -> bool:
        return False


@dataclass
class Realization:
    a: int
    b: int
    pair: str
    graph: Graph
    construction: str
    bundle: ConstructionBundle | None = None


PAIRS = ("rc_src", "rvc_srvc", "trc_strc")


def admissible(a: int, b: int, pair: str) -> tuple[bool, str]:
    """Characterisation lookup: ``(ok, clause)``; ``clause`` names the rule used."""
    if pair not in PAIRS:
        raise ValueError(f"pair must be one of {PAIRS}")
    if a < 1 or b < 1:
        return False, "positive_values"
    if a > b:
        return False, "weak_at_most_strong"
    if pair in ("rc_src", "rvc_srvc"):
        if a in (1, 2):
            return (a == b), ("equal_small" if a == b else f"weak_{a}_forces_strong_{a}")
        return True, "three_le_a_le_b"
    if a == 2 or b == 2:
        return False, "value_2_impossible"
    if a in (1, 3, 4):
        return (a == b), ("equal_small" if a == b else f"weak_{a}_forces_strong_{a}")
    return True, "five_le_a_le_b"


def realizability_witness(a: int, b: int, pair: str) -> Realization | Infeasible:
    ok, clause = admissible(a, b, pair)
    if not ok:
        return Infeasible(a, b, pair, clause)
    if pair == "rc_src":
        raise NotImplementedError("rc/src pairs are answered by admissible() only")
    if pair == "rvc_srvc":
        if a == b:
            return Realization(a, b, pair, path_graph(a + 2), f"path of length {a + 1}")
        bundle = make_construction(ConstructionDescriptor.of("Fb", b=b)) if a == 3 else \
            make_construction(ConstructionDescriptor.of("Fab", a=a, b=b))
        return Realization(a, b, pair, bundle.graph, str(bundle.descriptor), bundle)
    if a == b == 1:
        return Realization(a, b, pair, complete_graph(2), "K_2")
    if a == b:
        return Realization(a, b, pair, star_graph(a - 1), f"star of order {a}")
    bundle = make_construction(ConstructionDescriptor.of("Gabm", a=a, b=b))
    return Realization(a, b, pair, bundle.graph, str(bundle.descriptor), bundle)


# ---------------------------------------------------------------------------
# comparison catalogue


@dataclass(frozen=True)
class Claim:
    kind: Kind
    relation: str          # "==", "<=", ">="
    value: int
    checkable: bool        # False: established elsewhere, only structure is checked here


@dataclass
class ComparisonExample:
    name: str
    graph: Graph
    claims: list[Claim]
    structure: dict[str, int] = field(default_factory=dict)


def comparison_examples(s: int, t: int = 1, clique: int | None = None) -> list[ComparisonExample]:
    """Graphs separating the strong total parameter from its companions."""
    if s < 2:
        raise OutOfRange("comparison examples need s >= 2")
    if not 1 <= t < s:
        raise OutOfRange("broom needs 1 <= t < s")
    r = s if clique is None else clique
    c5 = build_c5_expansion(r).graph
    gs = build_gs(s).graph
    hs = build_hs(s).graph
    br = build_broom(s, t).graph
    external = s >= 13
    return [
        ComparisonExample("c5_expansion", c5, [
            Claim(Kind.RC, "==", 3, True), Claim(Kind.TRC, "==", 3, True),
            Claim(Kind.SRC, "==", 3, True), Claim(Kind.STRC, "==", 3, True)],
            {"n": 4 + r, "m": 3 + r * (r - 1) // 2 + 2 * r}),
        ComparisonExample("Gs", gs, [
            Claim(Kind.RC, "<=", 4, False), Claim(Kind.RVC, "==", s, False), Claim(Kind.TRC, "==", s, False)]
            if external else [],
            {"n": 3 * s, "m": 3 * s + s * (s - 1) // 2}),
        ComparisonExample("Hs", hs, [
            Claim(Kind.STRC, "==", s, False), Claim(Kind.SRVC, "==", s, False)] if external else [],
            {"n": 4 * s, "m": 7 * s + s * (s - 1) // 2}),
        ComparisonExample("broom", br, [
            Claim(Kind.STRC, ">=", s, True), Claim(Kind.TRC, ">=", s, True),
            Claim(Kind.SRVC, "==", t, True), Claim(Kind.RVC, "==", t, True)],
            {"n": 1 + s + t, "q": t}),
    ]
