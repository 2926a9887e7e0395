"""Time the compiled kernels against the pure-Python fallback.

    python benchmarks/bench_backends.py [--repeat 3] [--seed 7]

Each kernel runs on the same inputs under both backends; outputs are
compared before any timing is reported.
"""
from __future__ import annotations

import argparse
import time

from wellcov.generators import GenSpec, SplitMix64, generate
from wellcov.kernels import available_backends
from wellcov.mvc_enum import minimum_vertex_cover


def _cases(seed: int):
    rng = SplitMix64(seed)
    mis = [generate(GenSpec("gnp", n=n, p=p, seed=rng.next_u64())).masks
           for n, p in ((40, 0.2), (50, 0.25), (60, 0.3))]
    scans = []
    for n, k in ((400, 16), (600, 18), (1000, 20)):
        g = generate(GenSpec("clique-fringe", n=n, k=k, seed=rng.next_u64()))
        cover = sorted(minimum_vertex_cover(g))
        index = {v: i for i, v in enumerate(cover)}
        adj_c = [sum(1 << index[w] for w in g.neighbors(v) if w in index) for v in cover]
        types = [sum(1 << index[w] for w in g.neighbors(u)) for u in g.vertices if u not in index]
        scans.append((adj_c, types))
    degen = [generate(GenSpec("gnp", n=n, p=p, seed=rng.next_u64())).masks
             for n, p in ((32, 0.2), (40, 0.25), (48, 0.3))]
    return [
        ("mis_extremes", [(m, 10**7) for m in mis]),
        ("partition_scan", [(a, t, False, False) for a, t in scans]),
        ("degen_search", [(m, False) for m in degen]),
    ]


def _time(fn, args, repeat):
    best, out = float("inf"), None
    for _ in range(repeat):
        start = time.perf_counter()
        out = fn(*args)
        best = min(best, time.perf_counter() - start)
    return best, out


def main(argv=None) -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=3)
    ap.add_argument("--seed", type=int, default=7)
    args = ap.parse_args(argv)

    backends = available_backends()
    if "cython" not in backends:
        print("compiled extension not built; only the Python backend is available")
    names = sorted(backends)
    print(f"{'kernel':16} {'case':>4} " + " ".join(f"{b + ' s':>12}" for b in names) + "   speedup")
    for kernel, cases in _cases(args.seed):
        for i, case in enumerate(cases):
            times, outs = {}, {}
            for b in names:
                times[b], outs[b] = _time(getattr(backends[b], kernel), case, args.repeat)
            if len({repr(o) for o in outs.values()}) != 1:
                print(f"{kernel} case {i}: backends disagree")
                return 1
            speed = f"{times['python'] / times['cython']:8.1f}x" if "cython" in times else ""
            cols = " ".join(f"{times[b]:12.4f}" for b in names)
            print(f"{kernel:16} {i:>4} {cols}   {speed}")
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
