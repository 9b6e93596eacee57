"""Compare the compiled kernels with the pure-Python fallback.

    python benchmarks/bench_kernels.py [--instances N] [--seed S]
"""

import argparse
import random
import time

from parikh import _pykernels

try:
    from parikh import _speedups
except ImportError:
    _speedups = None


def membership_instances(n, rng):
    out = []
    for _ in range(n):
        d = rng.randint(2, 4)
        periods = []
        while len(periods) < 4:
            p = tuple(rng.randint(0, 3) for _ in range(d))
            if any(p):
                periods.append(p)
        base = tuple(rng.randint(0, 3) for _ in range(d))
        target = tuple(rng.randint(20, 60) for _ in range(d))
        out.append((base, tuple(periods), target))
    return out


def closure_instances(n, rng):
    out = []
    for _ in range(n):
        members = [(rng.randrange(40), rng.getrandbits(40)) for _ in range(30)]
        out.append((rng.getrandbits(40) | 1, [1 << r for r, _ in members], [m | 1 << r for r, m in members]))
    return out


def timed(fn, cases):
    start = time.perf_counter()
    results = [fn(*c) for c in cases]
    return time.perf_counter() - start, results


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--instances", type=int, default=2000)
    ap.add_argument("--seed", type=int, default=0)
    args = ap.parse_args(argv)
    rng = random.Random(args.seed)

    suites = [
        ("linear_member", membership_instances(args.instances, rng)),
        ("closure_covers", closure_instances(args.instances, rng)),
    ]
    print(f"{'kernel':<16}{'python s':>10}{'compiled s':>12}{'speedup':>9}")
    for name, cases in suites:
        py_time, py_res = timed(getattr(_pykernels, name), cases)
        if _speedups is None:
            print(f"{name:<16}{py_time:>10.3f}{'n/a':>12}{'':>9}")
            continue
        c_time, c_res = timed(getattr(_speedups, name), cases)
        if c_res != py_res:
            raise SystemExit(f"{name}: backends disagree")
        print(f"{name:<16}{py_time:>10.3f}{c_time:>12.3f}{py_time / c_time:>8.1f}x")


if __name__ == "__main__":
    main()
