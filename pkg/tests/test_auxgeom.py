import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ss3 import auxgeom as ag
from ss3.field import make_ctx


def in_subfield(ctx, x, m):
    return ctx.frob(x, m) == x


def w_equals_n_listed(ctx, A, B):
    """The (A, B) with C = 0 for which the kernel W is all of k."""
    n = ctx.n
    if n == 1:
        return True
    if n == 2:
        return in_subfield(ctx, A ^ B, 1)
    if n == 3:
        return B == 0
    if n == 4:
        return B == ctx.sqr(A)
    if n == 6:
        return B == 0 and in_subfield(ctx, A, 3)
    return False


def random_sum_zero(ctx, rng):
    while True:
        r, s = ctx.random_element(rng, True), ctx.random_element(rng, True)
        if r != s:
            return r, s, r ^ s


def random_inv_cubes(ctx, rng, tries=2000):
    """r, s, t nonzero with r^-3 + s^-3 + t^-3 = 0, or None when none was found."""
    for _ in range(tries):
        r, s = ctx.random_element(rng, True), ctx.random_element(rng, True)
        u = ctx.pow(r, -3) ^ ctx.pow(s, -3)
        if u == 0:
            continue
        root = ctx.cube_root(u)
        if root is not None:
            return r, s, ctx.inv(root)
    return None


# -- parametrizations ------------------------------------------------------------------


@pytest.mark.parametrize("n", [2, 3, 4, 6, 8])
def test_pencil(n):
    ctx = make_ctx(n)
    rng = random.Random(n)
    done = 0
    while done < 100:
        a, b, c, a2, b2, c2 = (ctx.random_element(rng) for _ in range(6))
        if ctx.mul(b2, c) == ctx.mul(b, c2):
            with pytest.raises(ag.DegenerateError):
                ag.param_pencil(ctx, a, b, c, a2, b2, c2, 1)
            continue
        mu = ctx.random_element(rng)
        x, y = ag.param_pencil(ctx, a, b, c, a2, b2, c2, mu)
        lhs, rhs = ag.pencil_sides(ctx, a, b, c, a2, b2, c2, x, y)
        assert lhs == rhs
        done += 1


@pytest.mark.parametrize("n", [2, 3, 4, 5, 8, 12])
def test_sum_zero(n):
    ctx = make_ctx(n)
    rng = random.Random(n)
    for _ in range(100):
        r, s, t = random_sum_zero(ctx, rng)
        lam = ctx.random_element(rng)
        x, y, z = ag.param_sum_zero(ctx, r, s, t, lam)
        v = ag.sum_zero_common_value(ctx, x, r)
        assert v == ag.sum_zero_common_value(ctx, y, s) == ag.sum_zero_common_value(ctx, z, t)
        cs = ag.cubic_sum(ctx, r, s, t, x, y, z)
        assert cs == ag.cubic_sum_closed(ctx, r, s, t, lam)
        A, B = ag.sum_zero_trace_coefficients(ctx, r, s, t)
        assert ctx.trace(cs) == ctx.trace(ctx.mul(A, ctx.pow(lam, 9)) ^ ctx.mul(B, ctx.pow(lam, 3)))


@pytest.mark.parametrize("n", [3, 5, 6, 8, 12])
def test_inv_cubes(n):
    ctx = make_ctx(n)
    rng = random.Random(n)
    for _ in range(100):
        r, s, t = random_inv_cubes(ctx, rng)
        lam = ctx.random_element(rng)
        x, y, z = ag.param_inv_cubes(ctx, r, s, t, lam)
        v = ag.inv_cubes_common_value(ctx, x, r)
        assert v == ag.inv_cubes_common_value(ctx, y, s) == ag.inv_cubes_common_value(ctx, z, t)
        total = ag.as_sum(ctx, x, y, z)
        assert total == ag.as_sum_closed(ctx, r, s, t, lam)
        A, B, C, D = ag.inv_cubes_trace_coefficients(ctx, r, s, t)
        lin = ctx.mul(A, ctx.pow(lam, 9)) ^ ctx.mul(B, ctx.pow(lam, 3)) ^ ctx.mul(C, lam) ^ D
        assert ctx.trace(total) == ctx.trace(lin)


@pytest.mark.parametrize("n", [2, 4])
def test_inv_cubes_has_no_instances_over_f4_f16(n):
    ctx = make_ctx(n)
    cubes = {ctx.pow(x, 3) for x in ctx.nonzero()}
    assert not any(u ^ v in cubes for u in cubes for v in cubes if u != v)


def test_degenerate_inputs():
    ctx = make_ctx(4)
    with pytest.raises(ag.DegenerateError):
        ag.param_sum_zero(ctx, 1, 2, 4, 0)
    with pytest.raises(ag.DegenerateError):
        ag.param_inv_cubes(ctx, 1, 1, 1, 0)
    with pytest.raises(ag.DegenerateError):
        ag.DCurveParams(0, 1)


# -- the curves D_ABC -------------------------------------------------------------------


def brute_d_count(ctx, A, B, C, D=0):
    count = 1
    for x in ctx.elements():
        v = ctx.mul(A, ctx.pow(x, 9)) ^ ctx.mul(B, ctx.pow(x, 3)) ^ ctx.mul(C, x) ^ D
        count += 0 if ctx.trace(v) else 2
    return count


def check_law(ctx, an):
    q = ctx.q
    if an.Qvanishes:
        dev = ag.predicted_deviation(ctx, an.w)
        assert dev is not None
        assert abs(an.count - (q + 1)) == dev
    else:
        assert an.count == q + 1


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_d_curves_all_ab(n):
    ctx = make_ctx(n)
    for A in ctx.nonzero():
        for B in ctx.elements():
            an = ag.analyze_D(ctx, ag.DCurveParams(A, B))
            assert an.count == brute_d_count(ctx, A, B, 0)
            check_law(ctx, an)
            assert (an.w == n) == w_equals_n_listed(ctx, A, B)
            if n % 2 == 0 and an.w == n:
                assert an.count == 2 * ctx.q + 1


@given(st.sampled_from([1, 2, 3, 4, 5, 6]), st.data())
def test_d_curves_random_abc(n, data):
    ctx = make_ctx(n)
    A = data.draw(st.integers(1, ctx.q - 1))
    B, C = (data.draw(st.integers(0, ctx.q - 1)) for _ in range(2))
    an = ag.analyze_D(ctx, ag.DCurveParams(A, B, C))
    assert an.count == brute_d_count(ctx, A, B, C)
    check_law(ctx, an)


def test_spec_examples():
    an = ag.analyze_D(make_ctx(2), ag.DCurveParams(1, 1))
    assert an.to_json() == {"w": 2, "Qvanishes": True, "count": 9, "sign": 1}
    assert ag.analyze_D(make_ctx(3), ag.DCurveParams(1, 0)).w == 3
    assert ag.search_lambda(make_ctx(1), 1, 0, 1, 1, 0) is None


@given(st.sampled_from([2, 3, 4, 5, 6, 8]), st.data())
def test_search_lambda_is_least(n, data):
    ctx = make_ctx(n)
    A = data.draw(st.integers(1, ctx.q - 1))
    B, C, D = (data.draw(st.integers(0, ctx.q - 1)) for _ in range(3))
    eps = data.draw(st.integers(0, 1))
    hits = [
        x
        for x in ctx.elements()
        if ctx.trace(ctx.mul(A, ctx.pow(x, 9)) ^ ctx.mul(B, ctx.pow(x, 3)) ^ ctx.mul(C, x) ^ D) == eps
    ]
    assert ag.search_lambda(ctx, A, B, C, D, eps) == (hits[0] if hits else None)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_fermat_surface(n):
    ctx = make_ctx(n)
    assert ag.fermat_surface_count(ctx) == ag.fermat_surface_bruteforce(ctx)
    if n in (1, 2, 4):
        assert ag.fermat_surface_count(ctx) == 0
