"""Supersingular plane quartics Y^4 + fY^2 + gY = X^3 + dX^2 + e over GF(2^n).

The linearized polynomial R(Y) = Y^4 + fY^2 + gY has a 2-dimensional
kernel over the field where it splits; the quartic's type records how much
of that kernel is already rational over k. Each nonzero root theta gives an
elliptic quotient in normal form (a, ad, ae) with a = (theta/g)^2, and the
Jacobian is isogenous to the product of the three quotients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ss3 import _kernels
from ss3.elliptic import ASModel, IsomClass, cubic_coefficient, frobenius_trace
from ss3.field import ExtensionTower, FieldCtx, make_tower

SPLIT, QUADRATIC, CUBIC = "Split", "Quadratic", "Cubic"

NAIVE_MAX_N = 8  # counting over k3 then means 2^24 x-values


class QuarticError(ValueError):
    pass


class ScaleError(RuntimeError):
    pass


@dataclass(frozen=True)
class Quartic:
    d: int
    e: int
    f: int
    g: int

    def __post_init__(self):
        if self.g == 0:
            raise QuarticError("g must be nonzero")

    def to_json(self, ctx: FieldCtx) -> dict:
        h = ctx.to_hex
        return {"d": h(self.d), "e": h(self.e), "f": h(self.f), "g": h(self.g), "n": ctx.n}

    @classmethod
    def from_json(cls, ctx: FieldCtx, obj: dict) -> "Quartic":
        return cls(*(ctx.from_hex(obj[k]) for k in ("d", "e", "f", "g")))


@dataclass(frozen=True)
class QuarticType:
    """Type tag plus the nonzero roots of R, each in its field of definition.

    Split: three roots in k. Quadratic: (theta in k, theta' in k2, theta''
    in k2) with theta' the least non-rational root. Cubic: the Frobenius
    orbit (theta, theta^q, theta^q^2) in k3 starting from the least root.
    """

    tag: str
    roots: tuple[int, ...]
    degrees: tuple[int, ...]


@dataclass(frozen=True)
class WeilPoly:
    """x^6 + a1 x^5 + a2 x^4 + a3 x^3 + q a2 x^2 + q^2 a1 x + q^3."""

    a1: int
    a2: int
    a3: int
    q: int

    def coefficients(self) -> list[int]:
        """Integer coefficients from x^6 down to x^0."""
        q = self.q
        return [1, self.a1, self.a2, self.a3, q * self.a2, q * q * self.a1, q**3]

    @classmethod
    def from_coefficients(cls, coeffs: list[int], q: int) -> "WeilPoly":
        if len(coeffs) != 7 or coeffs[0] != 1:
            raise QuarticError("expected a monic sextic")
        wp = cls(coeffs[1], coeffs[2], coeffs[3], q)
        if wp.coefficients() != list(coeffs):
            raise QuarticError("coefficients do not satisfy the functional equation")
        return wp

    @classmethod
    def from_factors(cls, factors: list[list[int]], q: int) -> "WeilPoly":
        out = [1]
        for f in factors:
            out = poly_mul(out, f)
        return cls.from_coefficients(out, q)

    def twisted(self) -> "WeilPoly":
        """The polynomial f(-x)."""
        return WeilPoly(-self.a1, self.a2, -self.a3, self.q)

    def power_sums(self, m: int = 3) -> list[int]:
        """p_i = sum of i-th powers of the roots, i = 1..m (Newton's identities)."""
        c = self.coefficients()
        e = [1] + [(-1) ** i * c[i] for i in range(1, 7)]
        p = []
        for i in range(1, m + 1):
            s = (-1) ** (i - 1) * i * e[i] if i <= 6 else 0
            for j in range(1, i):
                if j <= 6:
                    s += (-1) ** (j - 1) * e[j] * p[i - j - 1]
            p.append(s)
        return p

    def point_counts(self, m: int = 3) -> list[int]:
        """|C(F_{q^i})| for i = 1..m of a curve with this Weil polynomial."""
        return [self.q**i + 1 - p for i, p in enumerate(self.power_sums(m), start=1)]

    def to_json(self) -> dict:
        return {"a1": self.a1, "a2": self.a2, "a3": self.a3, "q": self.q}

    def __str__(self) -> str:
        return poly_str(self.coefficients())


def poly_mul(a: list[int], b: list[int]) -> list[int]:
    """Product of integer polynomials, coefficients from the leading term down."""
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        for j, y in enumerate(b):
            out[i + j] += x * y
    return out


def poly_str(coeffs: list[int]) -> str:
    deg = len(coeffs) - 1
    parts = []
    for i, c in enumerate(coeffs):
        p = deg - i
        if c == 0:
            continue
        mono = "" if p == 0 else ("x" if p == 1 else f"x^{p}")
        mag = abs(c)
        body = mono if (mag == 1 and mono) else (f"{mag}{mono}" if mono else str(mag))
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
    for sign, body in parts[1:]:
        s += f" {sign} {body}"
    return s


def weil_from_elliptic_traces(traces: list[int], q: int) -> WeilPoly:
    return WeilPoly.from_factors([[1, t, q] for t in traces], q)


def weil_quadratic(s: int, t: int, q: int) -> WeilPoly:
    """(x^2 + s x + q)(x^4 + t x^2 + q^2)."""
    return WeilPoly.from_factors([[1, s, q], [1, 0, t, 0, q * q]], q)


def weil_cubic(t: int, q: int) -> WeilPoly:
    return WeilPoly(0, 0, t, q)


# -- type and quotients ---------------------------------------------------------------


def _tower(ctx: FieldCtx) -> ExtensionTower:
    tower = make_tower(ctx.n)
    if tower.base != ctx:
        raise QuarticError("context does not match the default tower for this degree")
    return tower


def _r_kernel(K: FieldCtx, f: int, g: int) -> list[int]:
    return K.linear_map(lambda y: K.sqr(K.sqr(y)) ^ K.mul(f, K.sqr(y)) ^ K.mul(g, y)).kernel()


def kernel_dimension(ctx: FieldCtx, f: int, g: int) -> int:
    """dim over F2 of the k-rational roots of Y^4 + fY^2 + gY."""
    return len(_r_kernel(ctx, f, g))


def type_tag(ctx: FieldCtx, f: int, g: int) -> str:
    return {2: SPLIT, 1: QUADRATIC, 0: CUBIC}[kernel_dimension(ctx, f, g)]


def type_of(ctx: FieldCtx, C: Quartic) -> QuarticType:
    return _type_of_fg(ctx, C.f, C.g)


def _type_of_fg(ctx: FieldCtx, f: int, g: int) -> QuarticType:
    if g == 0:
        raise QuarticError("g must be nonzero")
    ker = _r_kernel(ctx, f, g)
    if len(ker) == 2:
        r = sorted([ker[0], ker[1], ker[0] ^ ker[1]])
        return QuarticType(SPLIT, tuple(r), (1, 1, 1))
    tower = _tower(ctx)
    if len(ker) == 1:
        K = tower.ext2
        kk = _r_kernel(K, tower.embed(f, 2), tower.embed(g, 2))
        theta = ker[0]
        emb = tower.embed(theta, 2)
        others = sorted(v for v in (kk[0], kk[1], kk[0] ^ kk[1]) if v != emb)
        return QuarticType(QUADRATIC, (theta, others[0], others[1]), (1, 2, 2))
    K = tower.ext3
    kk = _r_kernel(K, tower.embed(f, 3), tower.embed(g, 3))
    theta = min((kk[0], kk[1], kk[0] ^ kk[1]))
    return QuarticType(CUBIC, tuple(tower.conjugates(theta, 3)), (3, 3, 3))


def quotient_a(K: FieldCtx, theta: int, g: int) -> int:
    """a_theta = (theta / g)^2 computed in K (g already embedded)."""
    return K.sqr(K.div(theta, g))


def elliptic_quotients(ctx: FieldCtx, C: Quartic, qt: QuarticType | None = None) -> list[tuple[ASModel, int]]:
    """(a, ad, ae) for each nonzero root, with the degree of its field over k."""
    qt = qt or type_of(ctx, C)
    tower = make_tower(ctx.n) if qt.tag != SPLIT else None
    out = []
    for theta, m in zip(qt.roots, qt.degrees):
        if m == 1:
            K = ctx
            d, e, g = C.d, C.e, C.g
        else:
            K = tower.ext(m)
            d, e, g = (tower.embed(v, m) for v in (C.d, C.e, C.g))
        a = quotient_a(K, theta, g)
        out.append((ASModel(a, K.mul(a, d), K.mul(a, e)), m))
    return out


def quotient_classes(ctx: FieldCtx, C: Quartic, qt: QuarticType | None = None) -> list[tuple[IsomClass, int]]:
    """Isomorphism class of each quotient over its field of definition."""
    qt = qt or type_of(ctx, C)
    tower = make_tower(ctx.n) if qt.tag != SPLIT else None
    out = []
    for E, m in elliptic_quotients(ctx, C, qt):
        K = ctx if m == 1 else tower.ext(m)
        out.append((cubic_coefficient(K, E.a).classify(E.b, E.c), m))
    return out


def weil_poly(ctx: FieldCtx, C: Quartic, qt: QuarticType | None = None) -> WeilPoly:
    """Weil polynomial of Jac(C) from the quotient classes."""
    qt = qt or type_of(ctx, C)
    classes = quotient_classes(ctx, C, qt)
    return weil_from_classes(qt.tag, [cls for cls, _ in classes], ctx.n)


def weil_from_classes(tag: str, classes: list, n: int) -> WeilPoly:
    """Weil polynomial for a quartic of type ``tag`` whose quotients lie in ``classes``.

    Labels may be IsomClass objects or strings; for the quadratic type the
    first entry is the k-quotient and the second a k2-quotient, for the cubic
    type the first entry is a k3-quotient.
    """
    q = 1 << n
    if tag == SPLIT:
        return weil_from_elliptic_traces([frobenius_trace(c, n) for c in classes], q)
    if tag == QUADRATIC:
        return weil_quadratic(frobenius_trace(classes[0], n), frobenius_trace(classes[1], 2 * n), q)
    return weil_cubic(frobenius_trace(classes[0], 3 * n), q)


# -- naive oracle ---------------------------------------------------------------------


def _count_over(K: FieldCtx, d: int, e: int, f: int, g: int) -> int:
    lmap = K.linear_map(lambda y: K.sqr(K.sqr(y)) ^ K.mul(f, K.sqr(y)) ^ K.mul(g, y))
    fibre = 1 << len(lmap.kernel())
    masks = lmap.image_annihilator(K.n)
    return 1 + fibre * _kernels.count_cubic_in_image(d, e, masks, K.modulus, K.n)


def point_counts(ctx: FieldCtx, C: Quartic, max_n: int = NAIVE_MAX_N) -> list[int]:
    """|C(k)|, |C(k2)|, |C(k3)| by enumerating X (one point at infinity)."""
    if ctx.n > max_n:
        raise ScaleError(f"naive counting over GF(2^{3 * ctx.n}) exceeds the scale guard")
    tower = _tower(ctx)
    out = []
    for m in (1, 2, 3):
        K = tower.ext(m)
        d, e, f, g = (tower.embed(v, m) for v in (C.d, C.e, C.f, C.g))
        out.append(_count_over(K, d, e, f, g))
    return out


def weil_from_counts(counts: list[int], q: int) -> WeilPoly:
    """Newton's identities on p_i = q^i + 1 - N_i."""
    p1, p2, p3 = (q**i + 1 - N for i, N in enumerate(counts, start=1))
    e1 = p1
    e2, r2 = divmod(e1 * p1 - p2, 2)
    e3, r3 = divmod(p3 - e1 * p2 + e2 * p1, 3)
    if r2 or r3:
        raise QuarticError("point counts are inconsistent with a genus-3 curve")
    return WeilPoly(-e1, e2, -e3, q)


def naive_weil_poly(ctx: FieldCtx, C: Quartic, max_n: int = NAIVE_MAX_N) -> WeilPoly:
    return weil_from_counts(point_counts(ctx, C, max_n), ctx.q)


# -- maximal / minimal ----------------------------------------------------------------


def _extreme_count(ctx: FieldCtx, sign: int) -> int:
    if ctx.n % 2:
        raise QuarticError("maximality is only defined here for square q")
    return ctx.q + 1 + sign * 6 * math.isqrt(ctx.q)


def maximal_count(ctx: FieldCtx) -> int:
    return _extreme_count(ctx, 1)


def minimal_count(ctx: FieldCtx) -> int:
    return _extreme_count(ctx, -1)


def is_maximal(ctx: FieldCtx, C: Quartic) -> bool:
    return ctx.q + 1 + weil_poly(ctx, C).a1 == maximal_count(ctx)


def is_minimal(ctx: FieldCtx, C: Quartic) -> bool:
    return ctx.q + 1 + weil_poly(ctx, C).a1 == minimal_count(ctx)
