"""Time each search kernel on the compiled and pure-Python backends.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Both backends run on identical inputs and their results are compared before
any timing is reported.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import timeit

from sgh import kernels
from sgh.core import NEG, POS, SignedGraph, C11
from sgh.hom import find_homomorphism, random_sp_signed_graph
from sgh.tube import build_twisted_tube


def dense_graph(n, seed):
    rng = random.Random(seed)
    edges = [(rng.randrange(v), v, rng.choice((POS, NEG))) for v in range(1, n)]
    edges += [(u, v, rng.choice((POS, NEG))) for u in range(n) for v in range(u + 1, n) if rng.random() < 0.2]
    return SignedGraph(n, edges)


def cases():
    tt10 = build_twisted_tube(10)
    rnd = dense_graph(80, 1)
    t10, tr = tt10.arc_table(), rnd.arc_table()
    plain = list(kernels.layered_bfs(t10, [0] * len(t10.signs), 1, 0, kernels.backends()[-1]))
    srcs = [random_sp_signed_graph(12, s, (5, C11)) for s in range(20)]
    tt5 = build_twisted_tube(5)
    return {
        "walk_girths TT(10)": lambda b: kernels.closed_walk_girths(t10, b),
        "walk_girths random n=80": lambda b: kernels.closed_walk_girths(tr, b),
        "signed BFS TT(10), all sources": lambda b: [
            list(kernels.layered_bfs(t10, t10.signs, 2, s, b)) for s in range(tt10.n)
        ],
        "negative 10-cycle partners of (0,0)": lambda b: list(
            kernels.negative_cycle_partners(t10, 0, 10, plain, b)
        ),
        "hom search 20 graphs -> TT(5)": lambda b: [
            find_homomorphism(s, tt5, use_filter=False, backend=b) for s in srcs
        ],
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true", help="machine-readable output")
    args = ap.parse_args(argv)

    backends = kernels.backends()
    if len(backends) < 2:
        print("compiled kernels not built; only the pure-Python backend is available", file=sys.stderr)
    rows = []
    for name, fn in cases().items():
        results = [fn(b) for b in backends]
        if any(r != results[0] for r in results[1:]):
            print(f"backends disagree on {name}", file=sys.stderr)
            return 1
        times = {}
        for b in backends:
            times[b.BACKEND] = min(timeit.repeat(lambda: fn(b), number=1, repeat=args.repeat))
        rows.append({"case": name, "seconds": times})

    if args.json:
        print(json.dumps(rows, indent=2))
        return 0
    names = [b.BACKEND for b in backends]
    width = max(len(r["case"]) for r in rows)
    head = f"{'case':<{width}}  " + "  ".join(f"{n:>10}" for n in names)
    if len(names) > 1:
        head += "  speedup"
    print(head)
    for r in rows:
        line = f"{r['case']:<{width}}  " + "  ".join(f"{r['seconds'][n] * 1e3:>8.2f}ms" for n in names)
        if len(names) > 1:
            line += f"  {r['seconds']['python'] / r['seconds'][names[0]]:>6.1f}x"
        print(line)
    return 0


if __name__ == "__main__":
    sys.exit(main())
