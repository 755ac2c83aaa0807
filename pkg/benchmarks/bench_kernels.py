"""Compare the compiled and pure-Python window kernels.

    python benchmarks/bench_kernels.py [--width 4096] [--repeat 5]

Each workload runs the oracle's scans over random maps at the given
window width; timings are the best of ``--repeat`` runs.
"""

import argparse
import random
import timeit

from pbindex._kernels import _fallback
from pbindex.generators import random_near_bijection, random_partial_bijection

try:
    from pbindex._kernels import _speedups
except ImportError:
    _speedups = None


def workloads(k, maps, nears, width):
    tables = []

    def fill():
        tables.clear()
        for f in maps:
            keys = [a for a, _ in f.exceptions]
            vals = [b for _, b in f.exceptions]
            tables.append(k.fill_table(f.shift, f.holes.elements, keys, vals, width))

    def recount():
        for f, t in zip(maps, tables):
            len(k.absent_positions(t)) - len(k.image_gaps(t, width + f.shift))

    def compose():
        for a, b in zip(tables, tables[1:]):
            # b's values can exceed len(a) by the shift; trim to stay in range
            k.compose_tables(a, b[: width - 16])

    def monoset():
        for f in nears:
            t = k.fill_table(f.shift, (), range(f.T), f.prefix, width)
            k.shared_value_points(t)

    fill()
    return {"fill_table": fill, "index_recount": recount, "compose_tables": compose, "monoset_scan": monoset}


def main():
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--width", type=int, default=4096)
    parser.add_argument("--maps", type=int, default=200)
    parser.add_argument("--repeat", type=int, default=5)
    args = parser.parse_args()

    rng = random.Random(0)
    maps = [random_partial_bijection(rng) for _ in range(args.maps)]
    nears = [random_near_bijection(rng) for _ in range(args.maps)]

    backends = {"python": _fallback}
    if _speedups is not None:
        backends["cython"] = _speedups
    else:
        print("compiled kernels not built; timing the pure-Python backend only")

    times = {}
    for name, mod in backends.items():
        for label, fn in workloads(mod, maps, nears, args.width).items():
            times[name, label] = min(timeit.repeat(fn, number=1, repeat=args.repeat))

    labels = ["fill_table", "index_recount", "compose_tables", "monoset_scan"]
    print(f"{args.maps} maps, window {args.width}, best of {args.repeat}")
    print(f"{'kernel':<16}{'python (s)':>12}{'cython (s)':>12}{'speedup':>10}")
    for label in labels:
        py = times["python", label]
        cy = times.get(("cython", label))
        if cy is None:
            print(f"{label:<16}{py:>12.4f}{'-':>12}{'-':>10}")
        else:
            print(f"{label:<16}{py:>12.4f}{cy:>12.4f}{py / cy:>9.1f}x")


if __name__ == "__main__":
    main()
