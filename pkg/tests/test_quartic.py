import itertools
import random

import pytest
from hypothesis import given
from hypothesis import strategies as st

from ss3.field import make_ctx, make_tower
from ss3.quartic import (
    CUBIC,
    QUADRATIC,
    SPLIT,
    Quartic,
    QuarticError,
    ScaleError,
    WeilPoly,
    is_maximal,
    kernel_dimension,
    maximal_count,
    naive_weil_poly,
    point_counts,
    type_of,
    weil_from_counts,
    weil_poly,
)


def brute_counts(ctx, C):
    """Affine points by double enumeration over k, k2, k3 plus one point at infinity."""
    tower = make_tower(ctx.n)
    out = []
    for m in (1, 2, 3):
        K = tower.ext(m)
        d, e, f, g = (tower.embed(v, m) for v in (C.d, C.e, C.f, C.g))
        lhs = {}
        for y in K.elements():
            v = K.pow(y, 4) ^ K.mul(f, K.sqr(y)) ^ K.mul(g, y)
            lhs[v] = lhs.get(v, 0) + 1
        total = 1
        for x in K.elements():
            total += lhs.get(K.pow(x, 3) ^ K.mul(d, K.sqr(x)) ^ e, 0)
        out.append(total)
    return out


def all_quartics(ctx):
    for g in ctx.nonzero():
        for f, d, e in itertools.product(ctx.elements(), repeat=3):
            yield Quartic(d, e, f, g)


def test_f2_example():
    ctx = make_ctx(1)
    C = Quartic(0, 0, 1, 1)
    assert type_of(ctx, C).tag == CUBIC
    wp = weil_poly(ctx, C)
    assert wp == WeilPoly(0, 0, 0, 2)
    assert str(wp) == "x^6 + 8"
    assert wp.point_counts(1) == [3]
    assert naive_weil_poly(ctx, C) == wp


def test_serialization_roundtrip():
    ctx = make_ctx(6)
    C = Quartic(3, 0x2A, 0, 0x3F)
    assert C.to_json(ctx) == {"d": "3", "e": "2a", "f": "0", "g": "3f", "n": 6}
    assert Quartic.from_json(ctx, C.to_json(ctx)) == C
    with pytest.raises(QuarticError):
        Quartic(0, 0, 0, 0)


@pytest.mark.parametrize("n", [1, 2])
def test_counting_oracle_against_brute_force(n):
    ctx = make_ctx(n)
    for C in all_quartics(ctx):
        assert point_counts(ctx, C) == brute_counts(ctx, C)


@pytest.mark.parametrize("n", [1, 2])
def test_weil_poly_equals_oracle_everywhere(n):
    ctx = make_ctx(n)
    seen = {SPLIT: 0, QUADRATIC: 0, CUBIC: 0}
    for C in all_quartics(ctx):
        seen[type_of(ctx, C).tag] += 1
        assert weil_poly(ctx, C) == naive_weil_poly(ctx, C)
    assert all(seen[t] for t in (QUADRATIC, CUBIC))


@given(st.sampled_from([3, 4, 5]), st.data())
def test_weil_poly_equals_oracle_random(n, data):
    ctx = make_ctx(n)
    g = data.draw(st.integers(1, ctx.q - 1))
    d, e, f = (data.draw(st.integers(0, ctx.q - 1)) for _ in range(3))
    C = Quartic(d, e, f, g)
    assert weil_poly(ctx, C) == naive_weil_poly(ctx, C)


@given(st.sampled_from([1, 2, 3, 4, 5, 6]), st.data())
def test_type_matches_root_count(n, data):
    ctx = make_ctx(n)
    f = data.draw(st.integers(0, ctx.q - 1))
    g = data.draw(st.integers(1, ctx.q - 1))
    roots = [y for y in ctx.nonzero() if ctx.pow(y, 4) ^ ctx.mul(f, ctx.sqr(y)) ^ ctx.mul(g, y) == 0]
    tag = {3: SPLIT, 1: QUADRATIC, 0: CUBIC}[len(roots)]
    assert type_of(ctx, Quartic(0, 0, f, g)).tag == tag
    assert kernel_dimension(ctx, f, g) == {SPLIT: 2, QUADRATIC: 1, CUBIC: 0}[tag]


@given(st.integers(-20, 20), st.integers(-50, 50), st.integers(-200, 200), st.sampled_from([2, 4, 8]))
def test_newton_roundtrip(a1, a2, a3, q):
    wp = WeilPoly(a1, a2, a3, q)
    assert weil_from_counts(wp.point_counts(3), q) == wp
    assert wp.twisted().twisted() == wp


def test_from_factors_checks_functional_equation():
    wp = WeilPoly.from_factors([[1, 2, 4], [1, 0, 4], [1, -2, 4]], 4)
    assert wp.point_counts(1) == [5]
    with pytest.raises(QuarticError):
        WeilPoly.from_coefficients([1, 1, 0, 0, 0, 0, 1], 4)


def test_scale_guard():
    with pytest.raises(ScaleError):
        point_counts(make_ctx(12), Quartic(0, 0, 0, 1))


def test_maximal_count_and_random_curves_are_rarely_maximal():
    ctx = make_ctx(8)
    assert maximal_count(ctx) == 353
    rng = random.Random(0)
    for _ in range(20):
        C = Quartic(*(ctx.random_element(rng) for _ in range(3)), ctx.random_element(rng, True))
        wp = weil_poly(ctx, C)
        assert abs(wp.a1) <= 6 * 16
        assert is_maximal(ctx, C) == (wp.a1 == 96)
