"""Command-line interface: compute, verify, gen, tables, scan.

Exit codes: 0 success, 1 verification failed or violation found,
2 input error, 3 budget exceeded.
"""
from __future__ import annotations

import argparse
import shlex
import sys
from dataclasses import dataclass, field
from pathlib import Path

from .colouring import ALL_KINDS, ColouringError, Kind, find_violation, read_colouring, write_colouring
from .constructions import CONSTRUCTION_NAMES, ConstructionDescriptor, ConstructionSelfCheckFailed, make_construction
from .constructions import OutOfRange as ConstructionOutOfRange
from .exact import Budget, Status, compute_all
from .families import FamilyDescriptor, OutOfRange, cycle_table_rows, family_graph, family_witness, formula_rows
from .graph_core import GraphError, NotConnected, path_graph, star_graph
from .graphio import GraphFormatError, load_graph, write_graph

EXIT_OK, EXIT_FAIL, EXIT_INPUT, EXIT_BUDGET = 0, 1, 2, 3


# ---------------------------------------------------------------------------
# line-oriented report


@dataclass
class RunReport:
    command: str
    lines: list[dict[str, str]] = field(default_factory=list)
    exit_code: int = EXIT_OK

    def add(self, **fields) -> None:
        self.lines.append({k: str(v) for k, v in fields.items()})

    def format(self) -> str:
        out = [f"command: {self.command}"]
        for rec in self.lines:
            out.append(" ".join(f"{k}={_quote(v)}" for k, v in rec.items()))
        out.append(f"exit={self.exit_code}")
        return "\n".join(out) + "\n"


def _quote(v: str) -> str:
    return shlex.quote(v) if (not v or any(c.isspace() or c in "'\"" for c in v)) else v


def parse_report(text: str) -> RunReport:
    lines = text.splitlines()
    if not lines or not lines[0].startswith("command: "):
        raise ValueError("report must start with a command line")
    if not lines[-1].startswith("exit="):
        raise ValueError("report must end with an exit line")
    rep = RunReport(lines[0][len("command: "):], exit_code=int(lines[-1][len("exit="):]))
    for line in lines[1:-1]:
        rec = {}
        for tok in shlex.split(line):
            key, _, val = tok.partition("=")
            rec[key] = val
        rep.lines.append(rec)
    return rep


class InputError(Exception):
    pass


def _load(path: str, fmt: str):
    try:
        return load_graph(path, fmt)
    except (OSError, GraphFormatError, GraphError) as exc:
        raise InputError(str(exc)) from exc


def _kinds(names: list[str] | None) -> list[Kind]:
    if not names or "all" in names:
        return list(ALL_KINDS)
    try:
        return [Kind.parse(x) for name in names for x in name.split(",") if x]
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def _budget(args) -> Budget:
    return Budget(max_ms=args.max_ms, max_nodes=args.max_nodes)


# ---------------------------------------------------------------------------
# commands


def cmd_compute(args, rep: RunReport) -> None:
    G = _load(args.graph, args.format)
    if not G.is_connected():
        raise InputError("graph is not connected")
    kinds = _kinds(args.param)
    results = compute_all(G, kinds, _budget(args), canonical=args.canonical)
    if args.emit_witness:
        Path(args.emit_witness).mkdir(parents=True, exist_ok=True)
    for kind, res in results.items():
        value = res.value if res.value is not None else "-"
        rep.add(param=kind.name, value=value, status=res.status.value, lower=res.lower, upper=res.upper,
                nodes=res.nodes, ms=f"{res.elapsed_ms:.1f}")
        if res.status is not Status.EXACT:
            rep.exit_code = EXIT_BUDGET
        elif args.emit_witness:
            write_colouring(res.witness, Path(args.emit_witness) / f"{kind.value}.col",
                            comments=[f"{kind.name} witness, palette {res.value}"])


def cmd_verify(args, rep: RunReport) -> None:
    G = _load(args.graph, args.format)
    if not G.is_connected():
        raise InputError("graph is not connected")
    kind = _kinds([args.param])[0]
    try:
        col = read_colouring(args.colouring, G, kind)
    except (OSError, ColouringError) as exc:
        raise InputError(str(exc)) from exc
    bad = find_violation(G, col, kind)
    if bad is None:
        rep.add(verified="yes", param=kind.name, palette=col.k)
    else:
        rep.add(verified="no", param=kind.name, palette=col.k, u=bad.u + 1, v=bad.v + 1)
        rep.exit_code = EXIT_FAIL


def _family_descriptor(args) -> FamilyDescriptor:
    fam = args.family
    needed = {"complete_bipartite": ("m", "n"), "complete_multipartite": ("sizes",)}.get(fam, ("n",))
    missing = [f"--{x}" for x in needed if getattr(args, x) is None]
    if missing:
        raise InputError(f"{fam} needs {' '.join(missing)}")
    try:
        if fam == "cycle":
            return FamilyDescriptor.cycle(args.n)
        if fam == "wheel":
            return FamilyDescriptor.wheel(args.n)
        if fam == "complete":
            return FamilyDescriptor.complete(args.n)
        if fam == "complete_bipartite":
            return FamilyDescriptor.complete_bipartite(args.m, args.n)
        if fam == "complete_multipartite":
            return FamilyDescriptor.complete_multipartite(*(int(x) for x in args.sizes.split(",")))
        if fam == "path":
            G = path_graph(args.n)
        elif fam == "star":
            G = star_graph(args.n - 1)
        else:
            raise InputError(f"unknown family {fam!r}")
        return FamilyDescriptor.tree(G.n, G.edges)
    except (TypeError, AttributeError, ValueError) as exc:
        raise InputError(f"bad parameters for {fam}: {exc}") from exc


def _ranges(vertices) -> str:
    """1-based vertex list with runs collapsed, e.g. ``1..4,7``."""
    parts = []
    vs = [v + 1 for v in vertices]
    i = 0
    while i < len(vs):
        j = i
        while j + 1 < len(vs) and vs[j + 1] == vs[j] + 1:
            j += 1
        parts.append(str(vs[i]) if j - i < 2 else f"{vs[i]}..{vs[j]}")
        if j - i == 1:
            parts.append(str(vs[j]))
        i = j + 1
    return ",".join(parts)


def _sibling(path: Path, tag: str) -> Path:
    return path.with_name(f"{path.stem}_{tag}{path.suffix}")


def cmd_gen(args, rep: RunReport) -> None:
    if bool(args.family) == bool(args.construction):
        raise InputError("give exactly one of --family or --construction")
    out = Path(args.output) if args.output else None
    coldir = Path(args.colourings) if args.colourings else None
    if coldir:
        coldir.mkdir(parents=True, exist_ok=True)
    if args.family:
        desc = _family_descriptor(args)
        try:
            G = family_graph(desc)
        except (OutOfRange, GraphError) as exc:
            raise InputError(str(exc)) from exc
        rep.add(graph=str(desc), n=G.n, m=G.m)
        if out:
            write_graph(G, out, comments=[str(desc)])
        if coldir:
            for kind in ALL_KINDS:
                col = family_witness(desc, kind, _budget(args))
                write_colouring(col, coldir / f"witness_{kind.value}.col", comments=[f"{desc} {kind.name}"])
                rep.add(colouring=f"witness_{kind.value}.col", param=kind.name, palette=col.k)
        return

    params = {k: getattr(args, k) for k in ("a", "b", "m", "n", "s", "t", "r") if getattr(args, k) is not None}
    desc = ConstructionDescriptor.of(args.construction, **params)
    try:
        bundle = make_construction(desc)
    except (ConstructionOutOfRange, ConstructionSelfCheckFailed) as exc:
        raise InputError(str(exc)) from exc
    G = bundle.graph
    rep.add(graph=str(desc), n=G.n, m=G.m)
    for role, val in bundle.named_vertices.items():
        if role == "dotted_edge":
            shown = f"{val[0] + 1}-{val[1] + 1}"
        elif isinstance(val, (list, tuple, range)):
            shown = _ranges(val)
        else:
            shown = str(val + 1)
        rep.add(role=role, vertices=shown)
    for note in bundle.notes:
        rep.add(note=note)
    if out:
        write_graph(G, out, comments=[str(desc)])
        for tag, H in bundle.graphs.items():
            if H is not G:
                write_graph(H, _sibling(out, tag), comments=[f"{desc} {tag}"])
                rep.add(extra_graph=_sibling(out, tag).name, n=H.n, m=H.m)
    for (label, kind), col in bundle.proof_colourings.items():
        status = {True: "verified", None: "not-desk-verifiable"}[bundle.verified.get((label, kind))]
        rep.add(colouring=f"{label}_{kind.value}.col", param=kind.name, palette=col.k, check=status)
        if coldir:
            write_colouring(col, coldir / f"{label}_{kind.value}.col", comments=[f"{desc} {label} {kind.name}"])


def tables_text() -> str:
    lines = []
    for name, row in cycle_table_rows():
        lines.append(name + " " + " ".join(f"{n}:{v}" for n, v in row))
    lines.append("")
    lines.append("family,param,n,...,value")
    for name, row in cycle_table_rows():
        for n, v in row:
            lines.append(f"cycle,{name},{n},{v}")
    for fam, param, ps, v in formula_rows():
        lines.append(",".join([fam, param, *map(str, ps), str(v)]))
    return "\n".join(lines) + "\n"


def cmd_scan(args, rep: RunReport) -> None:
    from .scan import find_nonmonotone_pair, graph6_source, scan_conjecture, scan_invariants

    source = graph6_source(args.graph6) if args.graph6 else None
    budget = _budget(args)
    if args.nonmonotone:
        kind = _kinds([args.nonmonotone])[0]
        if not kind.strong:
            raise InputError("--nonmonotone takes src, srvc or strc")
        res = find_nonmonotone_pair(kind, args.max_n, budget, source)
        if res.pair:
            p = res.pair
            rep.add(found="yes", param=kind.name, value_G=p.value_G, value_H=p.value_H,
                    G=";".join(f"{a + 1}-{b + 1}" for a, b in p.G.edges), n=p.G.n)
        else:
            rep.add(found="no", param=kind.name, graphs=res.graphs_checked, incomplete=res.incomplete)
        rep.exit_code = EXIT_BUDGET if res.incomplete and not res.pair else EXIT_OK
        return
    if args.conjecture and not args.invariants:
        report = scan_conjecture(source, args.max_n, budget)
    else:
        report = scan_invariants(source, args.max_n, budget)
    for v in report.violations:
        rep.add(violation=v.rule, n=v.graph.n, edges=";".join(f"{a + 1}-{b + 1}" for a, b in v.graph.edges),
                detail=v.detail)
    rep.add(graphs=report.graphs_checked, classes=report.classes_computed, violations=len(report.violations),
            incomplete=report.incomplete, ms=f"{report.elapsed_ms:.0f}")
    if report.violations:
        rep.exit_code = EXIT_FAIL
    elif report.incomplete:
        rep.exit_code = EXIT_BUDGET


# ---------------------------------------------------------------------------
# argument parsing


def _add_budget(p: argparse.ArgumentParser) -> None:
    p.add_argument("--max-ms", type=float, default=60_000.0, help="wall-clock budget per parameter")
    p.add_argument("--max-nodes", type=int, default=10**8, help="search-node budget per parameter")
    p.add_argument("--threads", type=int, default=None, help="accepted for compatibility; search is sequential")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rainbowconn", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="exact parameter values with witnesses")
    p.add_argument("graph")
    p.add_argument("--param", action="append", help="rc, src, rvc, srvc, trc, strc or all (repeatable)")
    p.add_argument("--format", default="auto", choices=["auto", "dimacs", "g6"])
    p.add_argument("--canonical", action=argparse.BooleanOptionalAction, default=True)
    p.add_argument("--emit-witness", metavar="DIR")
    _add_budget(p)

    p = sub.add_parser("verify", help="check a colouring file")
    p.add_argument("graph")
    p.add_argument("colouring")
    p.add_argument("--param", required=True)
    p.add_argument("--format", default="auto", choices=["auto", "dimacs", "g6"])

    p = sub.add_parser("gen", help="write a family graph or a gadget")
    p.add_argument("--family", choices=["cycle", "wheel", "complete", "complete_bipartite",
                                        "complete_multipartite", "path", "star"])
    p.add_argument("--construction", choices=CONSTRUCTION_NAMES)
    for name in ("a", "b", "m", "n", "s", "t", "r"):
        p.add_argument(f"--{name}", type=int)
    p.add_argument("--sizes", help="class sizes for complete_multipartite, e.g. 1,1,4")
    p.add_argument("-o", "--output")
    p.add_argument("--colourings", metavar="DIR")
    _add_budget(p)

    sub.add_parser("tables", help="print the cycle tables and family formulas")

    p = sub.add_parser("scan", help="exhaustive checks over small graphs")
    p.add_argument("--invariants", action="store_true")
    p.add_argument("--conjecture", action="store_true")
    p.add_argument("--nonmonotone", metavar="PARAM")
    p.add_argument("--max-n", type=int, default=5)
    p.add_argument("--graph6", metavar="FILE", help="read graphs from a graph6 file instead")
    _add_budget(p)
    return parser


COMMANDS = {"compute": cmd_compute, "verify": cmd_verify, "gen": cmd_gen, "scan": cmd_scan}


def run(argv: list[str] | None = None, out=None) -> RunReport | None:
    """Run one command; returns the report (``None`` for ``tables``)."""
    out = out or sys.stdout
    argv = list(sys.argv[1:] if argv is None else argv)
    args = build_parser().parse_args(argv)
    if args.command == "tables":
        out.write(tables_text())
        return None
    rep = RunReport(" ".join(shlex.quote(a) for a in argv))
    try:
        COMMANDS[args.command](args, rep)
    except (InputError, NotConnected) as exc:
        rep.add(error=str(exc))
        rep.exit_code = EXIT_INPUT
    out.write(rep.format())
    return rep


def main(argv: list[str] | None = None) -> int:
    try:
        rep = run(argv)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code not in (0, None) else 0
    return EXIT_OK if rep is None else rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
