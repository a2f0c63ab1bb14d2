"""Benchmark harness: structural solve against the exhaustive oracle per generated instance."""

from __future__ import annotations

import json
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass
from typing import Iterable, Optional, Union

from clawdom.driver import solve
from clawdom.exact import mds_exact
from clawdom.generators import gen_family

SKIPPED = "skipped"
ORACLE_CUTOFF = 24


@dataclass(frozen=True)
class BenchRow:
    family: str
    n: int
    seed: int
    solve_s: float
    oracle_s: Union[float, str]
    gamma: int
    oracle_gamma: Optional[int]
    branch: str


def _row(family: str, n: int, seed: int, oracle_cutoff: int) -> BenchRow:
    g, _ = gen_family(family, n=n, seed=seed)
    t0 = time.perf_counter()
    sol = solve(g)
    solve_s = time.perf_counter() - t0
    oracle_s: Union[float, str] = SKIPPED
    oracle_gamma = None
    if g.n <= oracle_cutoff:
        t0 = time.perf_counter()
        oracle_gamma = len(mds_exact(g))
        oracle_s = round(time.perf_counter() - t0, 6)
    return BenchRow(family, g.n, seed, round(solve_s, 6), oracle_s, sol.gamma, oracle_gamma,
                    ",".join(sorted(set(sol.branches))))


def run_bench(
    sizes: Iterable[int],
    seeds: Iterable[int],
    families: Iterable[str] = ("line_graph",),
    oracle_cutoff: int = ORACLE_CUTOFF,
    workers: int = 1,
) -> list[BenchRow]:
    """One row per (family, size, seed) in that order, whatever ``workers`` is.

    The oracle is only run when the generated graph has at most
    ``oracle_cutoff`` vertices; larger rows carry ``"skipped"`` instead.
    """
    jobs = [(f, n, s) for f in families for n in sizes for s in seeds]
    if workers > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            rows = list(pool.map(_row, *zip(*jobs), [oracle_cutoff] * len(jobs)))
    else:
        rows = [_row(f, n, s, oracle_cutoff) for f, n, s in jobs]
    return rows


def format_report(rows: list[BenchRow]) -> bytes:
    return (json.dumps({"rows": [asdict(r) for r in rows]}) + "\n").encode("utf-8")
