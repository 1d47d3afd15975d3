"""Benchmark: compiled kernel backend against the pure-Python reference.

Two workloads dominate real use: breadth-first enumeration of Cayley-graph
balls (right_multiply on the hot path) and bulk length evaluation (classify
plus the weight sum).  Run as

    python benchmarks/bench_kernels.py [--radius N] [--repeat N]
"""

import argparse
import random
import time

from thompson_f.kernels import ALL_BACKENDS


def bfs(impl, radius):
    seen = {("0", "0")}
    frontier = [("0", "0")]
    for _ in range(radius):
        nxt = []
        for neg, pos in frontier:
            for g in range(4):
                res = impl.right_multiply(neg, pos, g)
                if res not in seen:
                    seen.add(res)
                    nxt.append(res)
        frontier = nxt
    return len(seen)


def batch_lengths(impl, elements):
    total = 0
    for neg, pos in elements:
        total += impl.fordham_length(neg, pos)
    return total


def batch_multiply(impl, pairs):
    out = None
    for a, b in pairs:
        out = impl.multiply(a[0], a[1], b[0], b[1])
    return out


def timed(fn, *args, repeat=3):
    best = float("inf")
    result = None
    for _ in range(repeat):
        t0 = time.perf_counter()
        result = fn(*args)
        best = min(best, time.perf_counter() - t0)
    return best, result


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--radius", type=int, default=8, help="BFS ball radius")
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()

    rng = random.Random(7)
    ref = ALL_BACKENDS["pure"]

    # corpus: every element of a moderate ball
    seen = {("0", "0")}
    frontier = [("0", "0")]
    for _ in range(7):
        nxt = []
        for neg, pos in frontier:
            for g in range(4):
                res = ref.right_multiply(neg, pos, g)
                if res not in seen:
                    seen.add(res)
                    nxt.append(res)
        frontier = nxt
    elements = sorted(seen)
    pairs = [(rng.choice(elements), rng.choice(elements)) for _ in range(20000)]

    print(f"backends: {', '.join(ALL_BACKENDS)}")
    if "cython" not in ALL_BACKENDS:
        print("compiled backend not available; run pip install -e . first")

    results = {}
    for name, impl in ALL_BACKENDS.items():
        t_bfs, n = timed(bfs, impl, args.radius, repeat=args.repeat)
        t_len, s = timed(batch_lengths, impl, elements, repeat=args.repeat)
        t_mul, _ = timed(batch_multiply, impl, pairs, repeat=args.repeat)
        results[name] = (t_bfs, t_len, t_mul)
        print(
            f"{name:>7}: bfs(radius={args.radius}, {n} elts) {t_bfs:8.3f}s | "
            f"lengths({len(elements)} elts, sum={s}) {t_len:8.3f}s | "
            f"multiply({len(pairs)} products) {t_mul:8.3f}s"
        )

    if len(results) == 2:
        p, c = results["pure"], results["cython"]
        print(
            f"speedup: bfs {p[0] / c[0]:.1f}x | lengths {p[1] / c[1]:.1f}x | "
            f"multiply {p[2] / c[2]:.1f}x"
        )


if __name__ == "__main__":
    main()
