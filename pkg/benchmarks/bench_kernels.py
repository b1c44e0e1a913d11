"""Time the numba kernels against the numpy fallback.

    python3 benchmarks/bench_kernels.py [--n 12 14 16] [--repeat 3]

Both backends are called directly, so SS3_DISABLE_NUMBA does not matter here.
Results are also checked for agreement.
"""

import argparse
import time

from ss3 import _kernels as K
from ss3.field import make_ctx


def best_of(fn, repeat):
    out, best = None, float("inf")
    for _ in range(repeat):
        t0 = time.perf_counter()
        out = fn()
        best = min(best, time.perf_counter() - t0)
    return out, best


def cases(ctx):
    coeffs, exps = [1, 3, 1, 5], [9, 3, 1, 0]
    masks = [ctx.tmask, ctx.tmask ^ 1]
    yield (
        "count_trace_zero",
        lambda: K._np_count_trace_zero(coeffs, exps, ctx.tmask, ctx.modulus, ctx.n),
        lambda: K._nb_count_trace_zero(*K._arrays(coeffs, exps), ctx.tmask, ctx.modulus, ctx.n),
    )
    yield (
        "count_cubic_in_image",
        lambda: K._np_count_cubic_in_image(3, 7, K.np.asarray(masks), ctx.modulus, ctx.n),
        lambda: K._nb_count_cubic_in_image(3, 7, K.np.asarray(masks), ctx.modulus, ctx.n),
    )
    if ctx.n <= 12:
        yield (
            "fermat_count",
            lambda: K._np_fermat_count(ctx.modulus, ctx.n),
            lambda: K._nb_fermat(ctx.modulus, ctx.n),
        )


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--n", type=int, nargs="+", default=[10, 12, 14, 16])
    ap.add_argument("--repeat", type=int, default=3)
    args = ap.parse_args()
    if not K.USE_NUMBA:
        raise SystemExit("numba is unavailable or disabled; nothing to compare")

    print(f"{'kernel':<22}{'n':>4}{'numpy [s]':>12}{'numba [s]':>12}{'speedup':>10}")
    for n in args.n:
        ctx = make_ctx(n)
        for name, np_fn, nb_fn in cases(ctx):
            nb_fn()  # compile outside the timing
            a, t_np = best_of(np_fn, args.repeat)
            b, t_nb = best_of(nb_fn, args.repeat)
            assert int(a) == int(b), (name, n, a, b)
            print(f"{name:<22}{n:>4}{t_np:>12.4f}{t_nb:>12.4f}{t_np / t_nb:>9.1f}x")


if __name__ == "__main__":
    main()
