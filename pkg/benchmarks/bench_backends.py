"""Compare the numba and numpy word kernels on braid evaluations.

Run as a script:

    python3 benchmarks/bench_backends.py --n 6 --length 60 --repeat 5
"""

import argparse
import random
import time

from braidrep import _backend
from braidrep.presentations import evaluate
from braidrep.representations import artin_rep
from braidrep.words import random_word


def run_once(asgn, words):
    t0 = time.perf_counter()
    for u in words:
        evaluate(asgn, u)
    return time.perf_counter() - t0


def main():
    parser = argparse.ArgumentParser(description=__doc__)
    parser.add_argument("--n", type=int, default=6)
    parser.add_argument("--length", type=int, default=60)
    parser.add_argument("--words", type=int, default=40)
    parser.add_argument("--repeat", type=int, default=5)
    parser.add_argument("--seed", type=int, default=11)
    args = parser.parse_args()

    asgn = artin_rep(args.n)
    rng = random.Random(args.seed)
    words = [
        random_word(asgn.source.alphabet, args.length, rng) for _ in range(args.words)
    ]

    names = ["numpy"]
    if _backend.HAS_NUMBA:
        names.insert(0, "numba")
    else:
        print("numba unavailable, timing numpy only")

    for name in names:
        _backend.set_backend(name)
        run_once(asgn, words[:2])  # warm caches and jit compilation
        best = min(run_once(asgn, words) for _ in range(args.repeat))
        print(
            "%-6s best of %d: %8.1f ms  (%d words, length %d, n=%d)"
            % (name, args.repeat, best * 1e3, args.words, args.length, args.n)
        )


if __name__ == "__main__":
    main()
