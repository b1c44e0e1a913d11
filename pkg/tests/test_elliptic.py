import pytest
from hypothesis import given
from hypothesis import strategies as st

from ss3.elliptic import (
    ASModel,
    EllipticError,
    change_of_variables,
    classify,
    frobenius_trace,
    isogeny_labels,
    naive_count,
    normalize,
    sweep_normal_models,
    traces,
    twist,
    twist_label,
)
from ss3.field import make_ctx


@st.composite
def models(draw, degrees=(1, 2, 3, 4, 5, 6, 7, 8, 10, 12)):
    n = draw(st.sampled_from(degrees))
    q = 1 << n
    return make_ctx(n), ASModel(draw(st.integers(1, q - 1)), draw(st.integers(0, q - 1)), draw(st.integers(0, q - 1)))


def test_f2_example():
    ctx = make_ctx(1)
    E = ASModel(1, 1, 0)
    cls = classify(ctx, E)
    assert cls.label == "H"
    assert frobenius_trace(cls, 1) == 2
    assert naive_count(ctx, E) == 5


@pytest.mark.parametrize("n,count", [(2, 9), (4, 9)])
def test_e1_counts(n, count):
    ctx = make_ctx(n)
    E = ASModel(1, 0, 0)
    assert classify(ctx, E).label == "E1"
    assert naive_count(ctx, E) == count


def test_trace_tables():
    assert traces(2) == [-4, -2, 0, 2, 4]
    assert frobenius_trace("E1", 4) == -8 and frobenius_trace("E1'", 4) == 8
    assert traces(1) == [-2, 0, 2]
    assert traces(3) == [-4, 0, 4]
    # H has trace +sqrt(2q) exactly when n = +-1 mod 8
    assert frobenius_trace("H", 7) == 16 and frobenius_trace("H", 3) == -4
    with pytest.raises(EllipticError):
        frobenius_trace("H", 4)


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_sweep_small(n):
    ctx = make_ctx(n)
    res = sweep_normal_models(ctx)
    assert res.n_mismatches == 0
    assert len(res.classes) == (7 if n % 2 == 0 else 3)
    assert sorted(set(res.classes.values())) == traces(n)


@given(models())
def test_classification_matches_count(data):
    ctx, E = data
    assert naive_count(ctx, E) == ctx.q + 1 + frobenius_trace(classify(ctx, E), ctx.n)


@given(models())
def test_twist_negates_trace(data):
    ctx, E = data
    t = frobenius_trace(classify(ctx, E), ctx.n)
    tw = classify(ctx, twist(ctx, E))
    assert frobenius_trace(tw, ctx.n) == -t
    assert tw.label == twist_label(classify(ctx, E).label, ctx.n)


@given(models(), st.data())
def test_isomorphism_invariance(data, draw):
    ctx, E = data
    u = draw.draw(st.integers(1, ctx.q - 1))
    v = draw.draw(st.integers(0, ctx.q - 1))
    t = draw.draw(st.integers(0, ctx.q - 1))
    E2 = change_of_variables(ctx, E, u, v, t)
    assert naive_count(ctx, E2) == naive_count(ctx, E)
    assert classify(ctx, E2) == classify(ctx, E)


@given(models(degrees=(2, 3, 4, 5, 6)), st.data())
def test_normalize_general_models(data, draw):
    ctx, _ = data
    a3 = draw.draw(st.integers(1, ctx.q - 1))
    a2, a4, a6 = (draw.draw(st.integers(0, ctx.q - 1)) for _ in range(3))
    E = normalize(ctx, a3, a2, a4, a6)
    assert E.c in (0, ctx.c0)
    # count y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6 directly
    count = 1
    for x in ctx.elements():
        rhs = ctx.pow(x, 3) ^ ctx.mul(a2, ctx.sqr(x)) ^ ctx.mul(a4, x) ^ a6
        z = ctx.div(rhs, ctx.sqr(a3))
        count += 0 if ctx.trace(z) else 2
    assert naive_count(ctx, E) == count


def test_twist_labels():
    assert twist_label("Enc", 4) == "Enc'"
    assert twist_label("E0", 4) == "E0"
    assert twist_label("E1", 3) == "E1"
    assert twist_label("H", 3) == "H'"
    assert set(isogeny_labels(2)) == {"E1", "E1'", "Enc", "Enc'", "E0"}
