"""Compare the compiled and pure-Python search kernels on identical instances.

Each instance is compiled once; both backends then search the same arrays and
must agree on the verdict and the colour vector.

    python3 benchmarks/bench_kernel.py [--repeat 3]
"""
from __future__ import annotations

import argparse
import time

from rainbowconn.colouring import Kind
from rainbowconn.constructions import ConstructionDescriptor, make_construction
from rainbowconn.graph_core import cycle_graph
from rainbowconn.kernel import available_backends, run_search
from rainbowconn.problem import compile_problem

NODE_LIMIT = 10**8


def instances():
    fig = make_construction(ConstructionDescriptor.of("figure1a"))
    fig3 = make_construction(ConstructionDescriptor.of("figure1c"))
    yield "C11 srvc k=5 (infeasible)", cycle_graph(11), Kind.SRVC, 5
    yield "C11 srvc k=6", cycle_graph(11), Kind.SRVC, 6
    yield "C12 trc k=10 (infeasible)", cycle_graph(12), Kind.TRC, 10
    yield "C12 trc k=11", cycle_graph(12), Kind.TRC, 11
    yield "G1 src k=4 (infeasible)", fig.graphs["G"], Kind.SRC, 4
    yield "G3 strc k=15", fig3.graphs["G"], Kind.STRC, 15


def bench(repeat: int = 3) -> list[tuple[str, str, float, int, int]]:
    rows = []
    for name, G, kind, k in instances():
        prob = compile_problem(G, kind, k)
        outcomes = {}
        for backend in available_backends():
            best = float("inf")
            for _ in range(repeat):
                t0 = time.perf_counter()
                status, colours, nodes = run_search(prob.ep_ptr, prob.ep_idx, prob.path_pair, prob.pair_alive,
                                                    prob.n_seeds, k, NODE_LIMIT, None, backend=backend)
                best = min(best, time.perf_counter() - t0)
            outcomes[backend] = (status, None if colours is None else list(colours), nodes)
            rows.append((name, backend, best * 1000, nodes, status))
        if len(set(map(repr, outcomes.values()))) != 1:
            raise AssertionError(f"backends disagree on {name}: {outcomes}")
    return rows


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    rows = bench(args.repeat)
    print(f"{'instance':30s} {'backend':8s} {'ms':>10s} {'nodes':>9s}")
    base = {}
    for name, backend, ms, nodes, _ in rows:
        base.setdefault(name, {})[backend] = ms
        print(f"{name:30s} {backend:8s} {ms:10.2f} {nodes:9d}")
    if "cython" in available_backends():
        print()
        for name, t in base.items():
            print(f"{name:30s} speedup {t['python'] / max(t['cython'], 1e-6):6.1f}x")


if __name__ == "__main__":
    main()
