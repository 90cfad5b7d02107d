"""Wall-time and operation-count benchmark of synthesis, per kernel backend."""

from __future__ import annotations

import statistics
import time
from dataclasses import dataclass

from . import kernels
from .synthesis import random_operator, synthesize_with_stats


@dataclass(frozen=True)
class BenchRow:
    backend: str
    cs_count: int
    reps: int
    mean_s: float
    stdev_s: float
    ring_ops: int


def run(counts, reps: int = 3, backends=None, seed: int = 0) -> list[BenchRow]:
    """Time synthesize on one seeded operator per CS-count, ``reps`` times each."""
    available = kernels.backends()
    names = list(backends or available)
    for name in names:
        if name not in available:
            raise ValueError(f"backend {name!r} is not available")
    ops_ = {n: random_operator(n, seed + n) for n in counts}
    rows = []
    for name in names:
        with kernels.use_backend(name):
            for n in counts:
                u, nf = ops_[n]
                times, ops = [], 0
                for _ in range(reps):
                    t0 = time.perf_counter()
                    got, st = synthesize_with_stats(u)
                    times.append(time.perf_counter() - t0)
                    ops = st.ring_ops
                    if got != nf:
                        raise AssertionError(f"{name} backend synthesized a different word at CS-count {n}")
                sd = statistics.stdev(times) if len(times) > 1 else 0.0
                rows.append(BenchRow(name, n, reps, statistics.fmean(times), sd, ops))
    return rows


def format_rows(rows: list[BenchRow]) -> str:
    lines = [f"{'backend':<8} {'cs-count':>8} {'reps':>4} {'mean (s)':>10} {'stdev (s)':>10} {'ring ops':>10}"]
    for r in rows:
        lines.append(f"{r.backend:<8} {r.cs_count:>8} {r.reps:>4} {r.mean_s:>10.4f} {r.stdev_s:>10.4f} {r.ring_ops:>10}")
    by = {(r.backend, r.cs_count): r.mean_s for r in rows}
    if any(b == "cython" for b, _ in by) and any(b == "python" for b, _ in by):
        for n in sorted({n for _, n in by}):
            if ("cython", n) in by and ("python", n) in by and by[("cython", n)] > 0:
                lines.append(f"speedup at {n}: {by[('python', n)] / by[('cython', n)]:.2f}x")
    return "\n".join(lines)


if __name__ == "__main__":
    print(format_rows(run([10, 100, 1000, 10000], reps=3)))
