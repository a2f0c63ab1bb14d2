"""Time the compiled kernels against the pure-Python ones on generated graphs.

    python3 benchmarks/bench_kernels.py [--sizes 16,20,24] [--seeds 5] [--repeat 3]
"""

from __future__ import annotations

import argparse
import json
import random
import time

from clawdom import _kernels
from clawdom.generators import random_line_graph, random_unit_interval


def _graphs(sizes, seeds):
    for n in sizes:
        for seed in range(seeds):
            rng = random.Random(seed)
            yield "line_graph", n, random_line_graph(n, rng)
            yield "unit_interval", n, random_unit_interval(n, rng)


def _time(fn, repeat):
    best = float("inf")
    out = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return best, out


def run(sizes, seeds, repeat):
    jobs = {
        "dominating_search": lambda g: _kernels.dominating_search(g.closed_masks, g.n, g.n),
        "induced_path_8": lambda g: _kernels.induced_path(g.closed_masks, g.n, 8),
        "induced_cycle_6": lambda g: _kernels.induced_cycle(g.closed_masks, g.n, 6),
    }
    totals = {}
    for family, n, g in _graphs(sizes, seeds):
        for name, job in jobs.items():
            results = {}
            for backend in _kernels.available():
                _kernels.use_backend(backend)
                t, out = _time(lambda: job(g), repeat)
                results[backend] = out
                key = (name, n, backend)
                totals[key] = totals.get(key, 0.0) + t
            if len(results) == 2:
                a, b = results.values()
                # both backends must agree on existence and, for the search, on size
                assert (a is None) == (b is None), (name, family, n)
                if name == "dominating_search":
                    assert len(a) == len(b), (family, n)
    _kernels.use_backend(_kernels.available()[0])
    rows = []
    for (name, n, backend), t in sorted(totals.items()):
        rows.append({"kernel": name, "n": n, "backend": backend, "seconds": round(t, 6)})
    return rows


def main() -> None:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--sizes", default="16,20,24")
    p.add_argument("--seeds", type=int, default=5)
    p.add_argument("--repeat", type=int, default=3)
    args = p.parse_args()
    sizes = [int(s) for s in args.sizes.split(",")]
    rows = run(sizes, args.seeds, args.repeat)
    print(json.dumps({"backends": _kernels.available(), "rows": rows}, indent=1))
    by = {}
    for r in rows:
        by.setdefault((r["kernel"], r["n"]), {})[r["backend"]] = r["seconds"]
    for (kernel, n), t in sorted(by.items()):
        if "compiled" in t and "python" in t and t["compiled"] > 0:
            print(f"{kernel:18s} n={n:3d} speedup x{t['python'] / t['compiled']:.1f}")


if __name__ == "__main__":
    main()
