"""Acceptance criteria 1-10, one PASS/FAIL line each.

Under pytest the lines appear in a summary section at the end of the run;
``python3 tests/test_acceptance.py`` prints them directly.
"""

import itertools
import random
import time

import pytest

from ss3 import auxgeom as ag
from ss3.elliptic import ASModel, classify, frobenius_trace, naive_count, sweep_normal_models, traces
from ss3.field import make_ctx, make_tower
from ss3.quartic import Quartic, naive_weil_poly, weil_poly
from ss3.synthesis import NotAttainable, construct_for_weil, contains_jacobian, enumerate_classes, predicted_set
from ss3.synthesis.census import census
from ss3.synthesis.construct import construct_config, extreme_weil
from ss3.synthesis.types import attained, realizations

_printed = []


@pytest.fixture
def report(request):
    def _report(num, title, ok, detail, t0):
        line = f"[{'PASS' if ok else 'FAIL'}] {num:>2}. {title}: {detail} ({time.perf_counter() - t0:.1f}s)"
        request.config._acceptance_lines.append(line)
        _printed.append(line)
        assert ok, line

    return _report


# 1 ----------------------------------------------------------------------------------------


def test_01_elliptic_tables(report):
    t0 = time.perf_counter()
    bad = []
    for n in range(1, 9):
        res = sweep_normal_models(make_ctx(n))
        want = 7 if n % 2 == 0 else 3
        if res.n_mismatches or len(res.classes) != want or sorted(set(res.classes.values())) != traces(n):
            bad.append(n)
    report(1, "elliptic tables n=1..8", not bad, f"failing n: {bad}" if bad else "all normal models agree", t0)


# 2 ----------------------------------------------------------------------------------------


def test_02_pinned_counts(report):
    t0 = time.perf_counter()
    H = ASModel(1, 1, 0)
    E1 = ASModel(1, 0, 0)
    got = [
        (classify(make_ctx(1), H).label, naive_count(make_ctx(1), H)),
        (classify(make_ctx(2), E1).label, naive_count(make_ctx(2), E1)),
        (classify(make_ctx(4), E1).label, naive_count(make_ctx(4), E1), frobenius_trace("E1", 4)),
    ]
    ok = got == [("H", 5), ("E1", 9), ("E1", 9, -8)]
    report(2, "pinned counts", ok, f"{got}", t0)


# 3 ----------------------------------------------------------------------------------------


def _w_is_n_listed(ctx, A, B):
    n = ctx.n
    sub = lambda x, m: ctx.frob(x, m) == x  # noqa: E731
    return {
        1: True,
        2: sub(A ^ B, 1),
        3: B == 0,
        4: B == ctx.sqr(A),
        6: B == 0 and sub(A, 3),
    }[n]


def _law_holds(ctx, an):
    q = ctx.q
    if not an.Qvanishes:
        return an.count == q + 1
    dev = ag.predicted_deviation(ctx, an.w)
    return dev is not None and abs(an.count - (q + 1)) == dev


def _brute_d(ctx, A, B, C):
    return 1 + 2 * sum(
        1
        for x in ctx.elements()
        if ctx.trace(ctx.mul(A, ctx.pow(x, 9)) ^ ctx.mul(B, ctx.pow(x, 3)) ^ ctx.mul(C, x)) == 0
    )


def test_03_d_curves(report):
    t0 = time.perf_counter()
    failures = []
    rng = random.Random(2)
    for n in (1, 2, 3, 4, 6):
        ctx = make_ctx(n)
        for A in ctx.nonzero():
            for B in ctx.elements():
                an = ag.analyze_D(ctx, ag.DCurveParams(A, B))
                if not _law_holds(ctx, an) or (an.w == n) != _w_is_n_listed(ctx, A, B):
                    failures.append((n, A, B, "law/list"))
                if n % 2 == 0 and an.w == n and an.count != 2 * ctx.q + 1:
                    failures.append((n, A, B, "2q+1"))
        for _ in range(200):
            A, B, C = ctx.random_element(rng, True), ctx.random_element(rng), ctx.random_element(rng)
            an = ag.analyze_D(ctx, ag.DCurveParams(A, B, C))
            if not _law_holds(ctx, an) or an.count != _brute_d(ctx, A, B, C):
                failures.append((n, A, B, C))
    report(3, "D_ABC count law and w=n list", not failures, f"{len(failures)} failures", t0)


# 4 ----------------------------------------------------------------------------------------


def _inv_cubes_triple(K, rng):
    for _ in range(10000):
        r, s = K.random_element(rng, True), K.random_element(rng, True)
        u = K.pow(r, -3) ^ K.pow(s, -3)
        root = K.cube_root(u) if u else None
        if root is not None:
            return r, s, K.inv(root)
    return None


def test_04_parametrizations(report):
    t0 = time.perf_counter()
    rng = random.Random(4)
    failures = []
    notes = []
    for n in (2, 4, 6, 8, 12, 16):
        ctx = make_ctx(n)
        # (c) has no instance over GF(4) and GF(16); its identities are checked over k3 there
        K = ctx if _inv_cubes_triple(ctx, random.Random(0)) else make_tower(n).ext(3)
        if K is not ctx:
            notes.append(f"q={ctx.q}: (c) over GF(2^{K.n})")
        for _ in range(1000):
            a, b, c, a2, b2, c2, mu = (ctx.random_element(rng) for _ in range(7))
            if ctx.mul(b2, c) != ctx.mul(b, c2):
                x, y = ag.param_pencil(ctx, a, b, c, a2, b2, c2, mu)
                lhs, rhs = ag.pencil_sides(ctx, a, b, c, a2, b2, c2, x, y)
                if lhs != rhs:
                    failures.append((n, "a"))
            r = ctx.random_element(rng, True)
            s = ctx.random_element(rng, True)
            if r != s:
                t = r ^ s
                lam = ctx.random_element(rng)
                x, y, z = ag.param_sum_zero(ctx, r, s, t, lam)
                vals = {ag.sum_zero_common_value(ctx, u, p) for u, p in ((x, r), (y, s), (z, t))}
                if len(vals) != 1 or ag.cubic_sum(ctx, r, s, t, x, y, z) != ag.cubic_sum_closed(ctx, r, s, t, lam):
                    failures.append((n, "b"))
            r, s, t = _inv_cubes_triple(K, rng)
            lam = K.random_element(rng)
            x, y, z = ag.param_inv_cubes(K, r, s, t, lam)
            vals = {ag.inv_cubes_common_value(K, u, p) for u, p in ((x, r), (y, s), (z, t))}
            if len(vals) != 1 or ag.as_sum(K, x, y, z) != ag.as_sum_closed(K, r, s, t, lam):
                failures.append((n, "c"))
    detail = f"{len(failures)} failures in 6x1000 instances" + (f"; {', '.join(notes)}" if notes else "")
    report(4, "parametrization identities", not failures, detail, t0)


# 5 ----------------------------------------------------------------------------------------


def test_05_fermat(report):
    t0 = time.perf_counter()
    rows = []
    for n in range(1, 7):
        ctx = make_ctx(n)
        rows.append((ctx.q, ag.fermat_surface_count(ctx), ag.fermat_surface_bruteforce(ctx)))
    ok = all(a == b for _, a, b in rows) and all(a == 0 for q, a, _ in rows if q in (2, 4, 16))
    report(5, "Fermat surface counts", ok, ", ".join(f"q={q}:{a}" for q, a, _ in rows), t0)


# 6 ----------------------------------------------------------------------------------------


def test_06_oracle_equivalence(report):
    t0 = time.perf_counter()
    mismatches = 0
    checked = 0
    for n in (1, 2):
        ctx = make_ctx(n)
        for g in ctx.nonzero():
            for f, d, e in itertools.product(ctx.elements(), repeat=3):
                C = Quartic(d, e, f, g)
                checked += 1
                mismatches += weil_poly(ctx, C) != naive_weil_poly(ctx, C)
    rng = random.Random(6)
    for n in (3, 4):
        ctx = make_ctx(n)
        for _ in range(1000):
            C = Quartic(*(ctx.random_element(rng) for _ in range(3)), ctx.random_element(rng, True))
            checked += 1
            mismatches += weil_poly(ctx, C) != naive_weil_poly(ctx, C)
    report(6, "weil_poly vs naive oracle", mismatches == 0, f"{mismatches} mismatches in {checked} quartics", t0)


# 7 ----------------------------------------------------------------------------------------


def test_07_census(report):
    t0 = time.perf_counter()
    diffs = {}
    for n in (1, 2, 3, 4):
        got, want = census(n).realized(), predicted_set(n)
        if got != want:
            diffs[1 << n] = (len(want - got), len(got - want))
    report(7, "census = predicted set, q<=16", not diffs, f"diffs (missing, unexpected): {diffs}" if diffs else "exact", t0)


# 8 ----------------------------------------------------------------------------------------


def test_08_constructor_roundtrip(report):
    t0 = time.perf_counter()
    failures = []
    witnesses64 = []
    for n in (5, 6, 7, 8):
        ctx = make_ctx(n)
        for spec, w in enumerate_classes(n):
            want = contains_jacobian(spec).attainable
            res = construct_for_weil(ctx, w)
            if want != (not isinstance(res, NotAttainable)):
                failures.append((n, w))
            elif want and n == 6:
                witnesses64.append((res, w))
    # one witness per class is too few for 50 distinct checks; add every attainable realization
    ctx = make_ctx(6)
    pool = {C: w for C, w in witnesses64}
    for _, w in witnesses64:
        for tag, config in realizations(w, 6):
            if attained(tag, config, 6):
                pool.setdefault(construct_config(ctx, tag, config), w)
    spot = random.Random(8).sample(sorted(pool.items(), key=str), min(50, len(pool)))
    bad_spot = sum(naive_weil_poly(ctx, C) != w for C, w in spot)
    ok = not failures and bad_spot == 0 and len(spot) == 50
    detail = f"{len(failures)} failures; q=64 naive spot checks: {bad_spot} bad of {len(spot)}"
    report(8, "constructor round-trip q=32..256", ok, detail, t0)


# 9 ----------------------------------------------------------------------------------------


def test_09_maximal_minimal(report):
    t0 = time.perf_counter()
    want = {2: (False, False), 4: (False, False), 6: (True, False), 8: (True, True), 10: (True, True)}
    got = {}
    counts = {}
    for n in want:
        ctx = make_ctx(n)
        flags = []
        for maximal in (True, False):
            target = extreme_weil(ctx, maximal)
            res = construct_for_weil(ctx, target)
            flags.append(not isinstance(res, NotAttainable))
            if flags[-1]:
                counts[(ctx.q, "max" if maximal else "min")] = ctx.q + 1 + weil_poly(ctx, res).a1
        got[n] = tuple(flags)
    # at q <= 16 the census confirms the absence independently
    for n in (2, 4):
        ctx = make_ctx(n)
        realized = census(n).realized()
        got[n] = tuple(f or extreme_weil(ctx, m) in realized for f, m in zip(got[n], (True, False)))
    ok = (
        got == want
        and counts.get((64, "max")) == 113
        and counts.get((256, "max")) == 353
        and counts.get((256, "min")) == 161
    )
    detail = ", ".join(f"q={1 << n}:{'max' if a else '-'}/{'min' if b else '-'}" for n, (a, b) in got.items())
    report(9, "maximal/minimal existence", ok, f"{detail}; N1 {counts}", t0)


# 10 ---------------------------------------------------------------------------------------


def test_10_twist_symmetry(report):
    t0 = time.perf_counter()
    broken = []
    for n in (7, 8, 9, 10):
        for spec, w in enumerate_classes(n):
            if contains_jacobian(spec).attainable != contains_jacobian(spec.twisted()).attainable:
                broken.append((1 << n, str(w)))
    report(10, "twist symmetry q=128..1024", not broken, f"{len(broken)} asymmetric classes", t0)


if __name__ == "__main__":
    import sys

    class _Cfg:
        _acceptance_lines = []

    class _Req:
        config = _Cfg()

    failed = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_") and callable(fn):
            try:
                fn(report.__wrapped__(_Req()))
            except AssertionError:
                failed += 1
            print(_printed[-1], flush=True)
    sys.exit(1 if failed else 0)
