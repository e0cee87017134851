"""Time the compiled kernels against the pure-Python ones.

    python3 benchmarks/bench_kernels.py [--repeat 5] [--json]

Each workload is the one the library actually runs: the level-set filter
over a full grid, the batched braid transition used by the operator oracle,
domino insertion of random biwords and signature reduction.
"""

import argparse
import itertools
import json
import random
import timeit

import numpy as np

from dcrystal._kernels import available_backends
from dcrystal.burge import _nw_pairs, _se_pairs
from dcrystal.paths import top_path_index_sets
from dcrystal.pbw import random_upper
from dcrystal.roots import path_to_last_letter, reduced_word_i0


def workloads():
    rng = random.Random(7)

    grid = np.array(list(itertools.product(range(3), repeat=10)), dtype=np.int64)
    level = np.zeros((grid.shape[0], 20), dtype=np.int64)
    level[:, :10] = grid
    flat, offsets = top_path_index_sets(5)

    full4 = np.array(list(itertools.product(range(3), repeat=12)), dtype=np.int64)
    moves = [tuple(mv) for mv in path_to_last_letter(reduced_word_i0(4), 4, 4)]
    round_trip = moves + moves[::-1]  # each braid move is an involution

    data6 = [random_upper(6, 3, rng) for _ in range(300)]
    se_pairs = [_se_pairs(c) for c in data6]
    nw_pairs = [_nw_pairs(c) for c in data6]

    sigs = []
    for _ in range(2000):
        k = rng.randint(4, 20)
        sigs.append(([rng.choice((1, -1)) for _ in range(k)],
                     [rng.randint(0, 5) for _ in range(k)]))

    def level_filter(mod):
        mod.max_subset_sum_batch(level, flat, offsets)

    def transit(mod):
        mod.transit_batch(full4, round_trip)

    def insertion(mod):
        for pairs in se_pairs:
            mod.domino_insert(pairs)
        for pairs in nw_pairs:
            mod.domino_insert(pairs)

    def signatures(mod):
        for signs, counts in sigs:
            mod.reduce_runs(signs, counts)

    def single_max(mod):
        vals = tuple(int(x) for x in level[12345])
        for _ in range(2000):
            mod.max_subset_sum(vals, flat, offsets)

    return {
        "level_filter_n5_59049": level_filter,
        "transit_batch_n4_531441": transit,
        "domino_insert_n6_x600": insertion,
        "reduce_runs_x2000": signatures,
        "max_subset_sum_x2000": single_max,
    }


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--repeat", type=int, default=5)
    ap.add_argument("--json", action="store_true")
    args = ap.parse_args(argv)

    backends = available_backends()
    results = {}
    for name, fn in workloads().items():
        row = {}
        for bname, mod in sorted(backends.items()):
            times = timeit.repeat(lambda: fn(mod), number=1, repeat=args.repeat)
            row[bname] = min(times)
        if "cython" in row:
            row["speedup"] = row["python"] / row["cython"]
        results[name] = row

    if args.json:
        print(json.dumps(results, indent=2, sort_keys=True))
        return
    if "cython" not in backends:
        print("compiled kernels not built; timing the Python backend only")
    print("%-26s %12s %12s %9s" % ("workload", "python [s]", "cython [s]", "speedup"))
    for name, row in results.items():
        print("%-26s %12.4f %12s %9s" % (
            name, row["python"],
            "%.4f" % row["cython"] if "cython" in row else "-",
            "%.1fx" % row["speedup"] if "speedup" in row else "-"))


if __name__ == "__main__":
    main()
