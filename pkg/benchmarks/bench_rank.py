"""Compare the compiled elimination kernel with the pure-Python fallback.

Times the exact nullity of A(n,k) - eI for every eigenvalue e of A(n,k)
with both backends, checks that they agree, and prints one row per graph.

    python benchmarks/bench_rank.py
    python benchmarks/bench_rank.py --cases 6,4 20,2 --repeat 3
"""
import argparse
import sys
import time

from arrspec import build_graph, spectrum
from arrspec.elimination import HAVE_EXTENSION
from arrspec.oracle import exact_multiplicity

DEFAULT_CASES = ["7,3", "8,3", "6,4", "20,2", "15,2", "400,1"]


def time_backend(g, values, backend, repeat):
    best = float("inf")
    result = None
    for _ in range(repeat):
        start = time.perf_counter()
        result = {e: exact_multiplicity(g, e, backend=backend) for e in values}
        best = min(best, time.perf_counter() - start)
    return best, result


def main(argv=None):
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--cases", nargs="+", default=DEFAULT_CASES, help="n,k pairs")
    parser.add_argument("--repeat", type=int, default=1)
    args = parser.parse_args(argv)

    if not HAVE_EXTENSION:
        print("compiled kernel not built; only the Python backend is available", file=sys.stderr)

    print(f"{'graph':>10} {'|V|':>6} {'#e':>4} {'python s':>10} {'compiled s':>11} {'speedup':>8}")
    for case in args.cases:
        n, k = (int(x) for x in case.split(","))
        g = build_graph(n, k)
        values = list(spectrum(n, k).as_dict())
        t_py, r_py = time_backend(g, values, "python", args.repeat)
        if HAVE_EXTENSION:
            t_c, r_c = time_backend(g, values, "compiled", args.repeat)
            if r_c != r_py:
                raise SystemExit(f"backends disagree on A({n},{k}): {r_c} vs {r_py}")
            speed = f"{t_py / t_c:7.1f}x"
            t_c_text = f"{t_c:11.3f}"
        else:
            speed, t_c_text = "      -", f"{'-':>11}"
        print(f"{f'A({n},{k})':>10} {g.vertex_count:>6} {len(values):>4} {t_py:>10.3f} {t_c_text} {speed}")


if __name__ == "__main__":
    main()
