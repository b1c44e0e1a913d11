"""Genus-0 parametrizations, the curves y^2 + y = Ax^9 + Bx^3 + Cx (+ D), and
the Fermat surface x^3 + y^3 + z^3 = 0.

The parametrizations are polynomial identities valid over any field
containing the inputs; callers pass whichever FieldCtx the data lives in.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ss3 import _kernels, gf2
from ss3.elliptic import frobenius_trace
from ss3.field import FieldCtx


class DegenerateError(ValueError):
    pass


def param_pencil(ctx: FieldCtx, a, b, c, a2, b2, c2, mu):
    """A point (x, y) of a + b x + c^4 x^4 = a2 + b2 y + c2^4 y^4 with parameter mu."""
    mul = ctx.mul
    den = mul(b2, c) ^ mul(b, c2)
    if den == 0:
        raise DegenerateError("b'c = bc': the pencil is degenerate")
    inv = ctx.inv(den)
    common = a ^ a2 ^ ctx.pow(mu, 4)
    x = mul(mul(c2, common) ^ mul(b2, mu), inv)
    y = mul(mul(c, common) ^ mul(b, mu), inv)
    return x, y


def pencil_sides(ctx: FieldCtx, a, b, c, a2, b2, c2, x, y):
    """Both sides of the pencil equation at (x, y)."""
    mul = ctx.mul
    lhs = a ^ mul(b, x) ^ mul(ctx.pow(c, 4), ctx.pow(x, 4))
    rhs = a2 ^ mul(b2, y) ^ mul(ctx.pow(c2, 4), ctx.pow(y, 4))
    return lhs, rhs


def _check_sum_zero(r, s, t):
    if r == 0 or s == 0 or t == 0 or r ^ s ^ t:
        raise DegenerateError("need nonzero r, s, t with r + s + t = 0")


def param_sum_zero(ctx: FieldCtx, r: int, s: int, t: int, lam: int) -> tuple[int, int, int]:
    """Point of x + x^4 r^8 = y + y^4 s^8 = z + z^4 t^8 (r + s + t = 0)."""
    _check_sum_zero(r, s, t)
    mul, pw = ctx.mul, ctx.pow
    rst = mul(mul(r, s), t)
    pre = pw(rst, -2)
    l4, l16 = pw(lam, 4), pw(lam, 16)

    def coord(p, p_prev, p_next):
        # p = r: uses r^-2 t^4 + r s; cyclic in (r, s, t)
        inner = mul(rst, lam) ^ mul(mul(pw(p, -2), pw(p_prev, 4)) ^ mul(p, p_next), l4) ^ mul(pw(p, -2), l16)
        return mul(pre, inner)

    return coord(r, t, s), coord(s, r, t), coord(t, s, r)


def sum_zero_common_value(ctx: FieldCtx, x: int, r: int) -> int:
    """x + x^4 r^8, the common value of the three coordinates."""
    return x ^ ctx.mul(ctx.pow(x, 4), ctx.pow(r, 8))


def cubic_sum(ctx: FieldCtx, r, s, t, x, y, z) -> int:
    """x^3 r^8 + y^3 s^8 + z^3 t^8."""
    pw, mul = ctx.pow, ctx.mul
    return mul(pw(x, 3), pw(r, 8)) ^ mul(pw(y, 3), pw(s, 8)) ^ mul(pw(z, 3), pw(t, 8))


def cubic_sum_closed(ctx: FieldCtx, r, s, t, lam) -> int:
    _check_sum_zero(r, s, t)
    pw, mul = ctx.pow, ctx.mul
    rst = mul(mul(r, s), t)
    cyc = mul(pw(r, 7), s) ^ mul(pw(s, 7), t) ^ mul(pw(t, 7), r)
    return (
        mul(pw(rst, -4), pw(lam, 36))
        ^ mul(pw(rst, -2), pw(lam, 18))
        ^ mul(mul(pw(rst, -4), cyc), pw(lam, 12))
        ^ mul(pw(rst, -1), pw(lam, 9))
    )


def sum_zero_trace_coefficients(ctx: FieldCtx, r, s, t) -> tuple[int, int]:
    """(A, B) with Tr(cubic_sum) = Tr(A l^9 + B l^3) along the parametrization.

    The inputs must be such that A and B land in ctx (r, s, t in k, or a
    Galois-stable triple whose symmetric functions are then read in k).
    """
    pw, mul = ctx.pow, ctx.mul
    rst = mul(mul(r, s), t)
    cyc = mul(pw(r, 7), s) ^ mul(pw(s, 7), t) ^ mul(pw(t, 7), r)
    A = ctx.inv(rst)
    B = mul(A, ctx.sqrt(ctx.sqrt(cyc)))
    return A, B


def _check_inv_cubes(ctx, r, s, t):
    if r == 0 or s == 0 or t == 0:
        raise DegenerateError("r, s, t must be nonzero")
    if ctx.pow(r, -3) ^ ctx.pow(s, -3) ^ ctx.pow(t, -3):
        raise DegenerateError("need r^-3 + s^-3 + t^-3 = 0")


def param_inv_cubes(ctx: FieldCtx, r: int, s: int, t: int, lam: int) -> tuple[int, int, int]:
    """Point of r^16(1+x+x^4) = s^16(1+y+y^4) = t^16(1+z+z^4)."""
    _check_inv_cubes(ctx, r, s, t)
    pw, mul = ctx.pow, ctx.mul
    R = mul(mul(r, s), t)
    S = ctx.inv(r) ^ ctx.inv(s) ^ ctx.inv(t)
    S8 = pw(S, 8)
    twelve = pw(r, 12) ^ pw(s, 12) ^ pw(t, 12)
    l4, l16 = pw(lam, 4), pw(lam, 16)
    R36 = pw(R, -36)

    def coord(p, p_next, p_prev):
        # p = r: (st)^6, r^-9 (st)^3, r^-18 s^-6 + t^-24
        other = mul(p_next, p_prev)
        inner = (
            mul(S8, twelve ^ pw(other, 6))
            ^ mul(mul(pw(p, -9), pw(other, 3)), lam)
            ^ mul(mul(pw(p, -18), pw(p_next, -6)) ^ pw(p_prev, -24), l4)
            ^ mul(R36, l16)
        )
        return mul(pw(p, -4), inner)

    return coord(r, s, t), coord(s, t, r), coord(t, r, s)


def inv_cubes_common_value(ctx: FieldCtx, x: int, r: int) -> int:
    """r^16 (1 + x + x^4)."""
    return ctx.mul(ctx.pow(r, 16), 1 ^ x ^ ctx.pow(x, 4))


def as_sum(ctx: FieldCtx, x, y, z) -> int:
    """x^3 + x + y^3 + y + z^3 + z."""
    pw = ctx.pow
    return pw(x, 3) ^ x ^ pw(y, 3) ^ y ^ pw(z, 3) ^ z


def _rst(ctx, r, s, t):
    pw, mul = ctx.pow, ctx.mul
    R = mul(mul(r, s), t)
    S = ctx.inv(r) ^ ctx.inv(s) ^ ctx.inv(t)
    T = (
        mul(pw(r, -6), pw(s, -42))
        ^ mul(pw(s, -6), pw(t, -42))
        ^ mul(pw(t, -6), pw(r, -42))
    )
    return R, S, T


def as_sum_closed(ctx: FieldCtx, r, s, t, lam) -> int:
    _check_inv_cubes(ctx, r, s, t)
    pw, mul = ctx.pow, ctx.mul
    R, S, T = _rst(ctx, r, s, t)
    terms = [
        mul(pw(R, -84), pw(lam, 36)),
        mul(mul(pw(R, -72), pw(S, 8)), pw(lam, 32)),
        mul(pw(R, -42), pw(lam, 18)),
        mul(mul(pw(R, -36), pw(S, 4)), pw(lam, 16)),
        mul(mul(pw(R, -12), T), pw(lam, 12)),
        mul(pw(R, -21), pw(lam, 9)),
        mul(mul(pw(S, 8), T), pw(lam, 8)),
        mul(mul(pw(R, 12), pw(S, 64)), pw(lam, 4)),
        mul(pw(R, 24), pw(S, 72)),
    ]
    out = 0
    for term in terms:
        out ^= term
    return out


def inv_cubes_trace_coefficients(ctx: FieldCtx, r, s, t) -> tuple[int, int, int, int]:
    """(A, B, C, D) with Tr(as_sum) = Tr(A l^9 + B l^3 + C l + D)."""
    pw, mul, sq = ctx.pow, ctx.mul, ctx.sqrt
    R, S, T = _rst(ctx, r, s, t)
    T4 = sq(sq(T))
    T8 = sq(T4)
    A = pw(R, -21)
    B = mul(pw(R, -3), T4)
    C = mul(S, T8) ^ mul(pw(R, 3), pw(S, 16))
    D = mul(pw(R, 24), pw(S, 72))
    return A, B, C, D


# -- the curves D_ABC --------------------------------------------------------------


@dataclass(frozen=True)
class DCurveParams:
    A: int
    B: int
    C: int = 0
    D: int = 0

    def __post_init__(self):
        if self.A == 0:
            raise DegenerateError("A must be nonzero")


@dataclass(frozen=True)
class DCurveAnalysis:
    w: int
    W: tuple[int, ...]
    Qvanishes: bool
    count: int
    sign: int  # sign of count - (q + 1); 0 when they are equal

    def to_json(self) -> dict:
        return {"w": self.w, "Qvanishes": self.Qvanishes, "count": self.count, "sign": self.sign}


class LemmaViolation(AssertionError):
    pass


def d_curve_count(ctx: FieldCtx, p: DCurveParams) -> int:
    """|D(k)| by enumeration; the point at infinity is unique (odd degree 9)."""
    zeros = _kernels.count_trace_zero([p.A, p.B, p.C, p.D], [9, 3, 1, 0], ctx.tmask, ctx.modulus, ctx.n)
    return 1 + 2 * zeros


def analyze_D(ctx: FieldCtx, p: DCurveParams) -> DCurveAnalysis:
    """Kernel W of A^8x^64 + B^8x^16 + B^4x^4 + Ax, the form Q on W, and |D_ABC(k)|.

    The D coefficient is ignored for W and Q; the count includes it.
    """
    A, B, C = p.A, p.B, p.C
    mul, pw = ctx.mul, ctx.pow
    A8, B8, B4 = pw(A, 8), pw(B, 8), pw(B, 4)

    def P(x):
        return mul(A8, pw(x, 64)) ^ mul(B8, pw(x, 16)) ^ mul(B4, pw(x, 4)) ^ mul(A, x)

    W = ctx.linear_map(P).kernel()

    def Q(x):
        return ctx.trace(mul(A, pw(x, 9)) ^ mul(B, pw(x, 3)) ^ mul(C, x))

    values = [Q(x) for x in W]
    # Q must be linear on W
    elements = gf2.span(W) if len(W) <= 16 else None
    if elements is not None:
        for idx, x in enumerate(elements):
            expect = 0
            for j, wj in enumerate(W):
                if idx >> j & 1:
                    expect ^= values[j]
            if Q(x) != expect:
                raise LemmaViolation(f"Q is not linear on W at {x:#x}")
    qvanishes = not any(values)
    count = d_curve_count(ctx, p)
    q = ctx.q
    sign = (count > q + 1) - (count < q + 1)
    return DCurveAnalysis(len(W), tuple(W), qvanishes, count, sign)


def predicted_deviation(ctx: FieldCtx, w: int) -> int | None:
    """sqrt(2^w q) when it is an integer."""
    e = w + ctx.n
    return 1 << (e // 2) if e % 2 == 0 else None


def search_lambda(ctx: FieldCtx, A: int, B: int, C: int, D: int, eps: int) -> int | None:
    """Least l in k with Tr(A l^9 + B l^3 + C l + D) = eps."""
    vals = _kernels.trace_values([A, B, C, D], [9, 3, 1, 0], ctx.tmask, ctx.modulus, ctx.n)
    hits = (vals == eps).nonzero()[0]
    return int(hits[0]) if hits.size else None


def fermat_surface_count(ctx: FieldCtx) -> int:
    """Points of x^3 + y^3 + z^3 = 0 with xyz != 0, from |E_1(k)|."""
    e1 = ctx.q + 1 + frobenius_trace("E1", ctx.n)
    mu = 3 if ctx.n % 2 == 0 else 1
    return (ctx.q - 1) * (e1 - 3 * mu)


def fermat_surface_bruteforce(ctx: FieldCtx) -> int:
    return _kernels.fermat_count(ctx.modulus, ctx.n)


def sqrt_int(v: int) -> int | None:
    r = math.isqrt(v)
    return r if r * r == v else None
