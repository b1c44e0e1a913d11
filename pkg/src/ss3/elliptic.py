"""Supersingular elliptic curves over GF(2^n) in Artin-Schreier form.

A normal model is y^2 + y = a x^3 + b x^2 + c with a != 0. All of these
curves have j-invariant 0. Frobenius polynomials are written x^2 + t x + q,
so a curve has q + 1 + t rational points.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

from ss3 import _kernels
from ss3.field import FieldCtx

SQUARE_LABELS = ("E1", "E1'", "Ea", "Ea'", "E0")
NONSQUARE_LABELS = ("E1", "H", "H'")

_TWIST = {"E1": "E1'", "E1'": "E1", "Ea": "Ea'", "Ea'": "Ea", "E0": "E0", "H": "H'", "H'": "H"}
# E_nc is the isogeny-class name for E_a with a a non-cube
_ALIASES = {"Enc": "Ea", "Enc'": "Ea'"}


class EllipticError(ValueError):
    pass


@dataclass(frozen=True)
class ASModel:
    a: int
    b: int
    c: int

    def __post_init__(self):
        if self.a == 0:
            raise EllipticError("a must be nonzero")

    def to_json(self, ctx: FieldCtx) -> dict:
        return {"a": ctx.to_hex(self.a), "b": ctx.to_hex(self.b), "c": ctx.to_hex(self.c), "n": ctx.n}


@dataclass(frozen=True)
class IsomClass:
    label: str
    coset: int | None = None  # a^((q-1)/3) for the E_a classes

    def to_json(self, ctx: FieldCtx | None = None) -> dict:
        out = {"label": self.label}
        if self.coset is not None:
            out["coset"] = format(self.coset, "x")
        return out


def twist_label(label: str, n: int) -> str:
    if n % 2 and label == "E1":
        return "E1"
    if label in _ALIASES:
        return {"Enc": "Enc'", "Enc'": "Enc"}[label]
    return _TWIST[label]


def frobenius_trace(label: str | IsomClass, n: int) -> int:
    """The t of x^2 + t x + q for the class ``label`` over GF(2^n)."""
    if isinstance(label, IsomClass):
        label = label.label
    label = _ALIASES.get(label, label)
    if n % 2 == 0:
        if label not in SQUARE_LABELS:
            raise EllipticError(f"{label} is not a class over GF(2^{n})")
        root = 1 << (n // 2)
        sign = -1 if (n // 2) % 2 else 1
        return {
            "E1": -sign * 2 * root,
            "E1'": sign * 2 * root,
            "Ea": sign * root,
            "Ea'": -sign * root,
            "E0": 0,
        }[label]
    if label not in NONSQUARE_LABELS:
        raise EllipticError(f"{label} is not a class over GF(2^{n})")
    root2q = 1 << ((n + 1) // 2)
    sign = -1 if ((n * n - 1) // 8) % 2 else 1
    return {"E1": 0, "H": sign * root2q, "H'": -sign * root2q}[label]


def isogeny_labels(n: int) -> tuple[str, ...]:
    """One label per k-isogeny class (Enc standing for both E_a cosets)."""
    if n % 2 == 0:
        return ("E1", "E1'", "Enc", "Enc'", "E0")
    return NONSQUARE_LABELS


def traces(n: int) -> list[int]:
    """All Frobenius traces of supersingular elliptic curves over GF(2^n)."""
    return sorted({frobenius_trace(lab, n) for lab in isogeny_labels(n)})


def label_for_trace(t: int, n: int) -> str:
    for lab in isogeny_labels(n):
        if frobenius_trace(lab, n) == t:
            return lab
    raise EllipticError(f"no supersingular class with trace {t} over GF(2^{n})")


def normalize(ctx: FieldCtx, a3: int, a2: int, a4: int, a6: int) -> ASModel:
    """Normal model of y^2 + a3 y = x^3 + a2 x^2 + a4 x + a6, with c in {0, c0}."""
    if a3 == 0:
        raise EllipticError("a3 = 0 is not supersingular")
    s = ctx.inv(ctx.sqr(a3))
    alpha = ctx.mul(s, a4)
    b = ctx.mul(s, a2) ^ ctx.sqr(alpha)
    c = ctx.mul(s, a6)
    return ASModel(s, b, 0 if ctx.trace(c) == 0 else ctx.c0)


def twist(ctx: FieldCtx, E: ASModel) -> ASModel:
    return ASModel(E.a, E.b, E.c ^ ctx.c0)


class CubicCoefficient:
    """Classification data depending only on the x^3 coefficient a.

    Classifying many models that share ``a`` then costs one linear solve
    and a few multiplications each.
    """

    def __init__(self, ctx: FieldCtx, a: int):
        if a == 0:
            raise EllipticError("a must be nonzero")
        self.ctx = ctx
        self.a = a
        self.even = ctx.n % 2 == 0
        self.cube = ctx.is_cube(a)
        self.coset = ctx.cube_coset(a)
        if self.cube:
            u = ctx.cube_root(a)
            self.u_inv2 = ctx.inv(ctx.sqr(u))
        if self.even:
            a2 = ctx.sqr(a)
            # v -> a v + a^2 v^4
            self.lmap = ctx.linear_map(lambda v: ctx.mul(a, v) ^ ctx.mul(a2, ctx.sqr(ctx.sqr(v))))
        else:
            # v -> v + v^4
            self.lmap = ctx.linear_map(lambda v: v ^ ctx.sqr(ctx.sqr(v)))

    def twist_bit(self, b: int, c: int) -> int | None:
        """The trace bit separating a class from its twist, None for E0 / odd E1."""
        ctx = self.ctx
        if self.even:
            if self.cube and not ctx.in_as2(ctx.mul(b, self.u_inv2)):
                return None
            v = self.lmap.solve(b)
            return ctx.trace(c ^ ctx.mul(self.a, ctx.mul(v, ctx.sqr(v))))
        z = ctx.mul(b, self.u_inv2)
        if ctx.trace(z) == 0:
            return None
        v = self.lmap.solve(z ^ 1)
        return ctx.trace(c ^ ctx.mul(v, ctx.sqr(v)) ^ v)

    def label(self, bit: int | None) -> str:
        """Isomorphism label for a given twist bit (None: the untwistable class)."""
        if self.even:
            if bit is None:
                return "E0"
            if self.cube:
                return "E1'" if bit else "E1"
            return "Ea'" if bit else "Ea"
        if bit is None:
            return "E1"
        return "H'" if bit else "H"

    def classify(self, b: int, c: int) -> IsomClass:
        lab = self.label(self.twist_bit(b, c))
        return IsomClass(lab, self.coset if lab in ("Ea", "Ea'") else None)

    def trace(self, b: int, c: int) -> int:
        return frobenius_trace(self.classify(b, c), self.ctx.n)


@functools.lru_cache(maxsize=1 << 16)
def cubic_coefficient(ctx: FieldCtx, a: int) -> CubicCoefficient:
    return CubicCoefficient(ctx, a)


def classify(ctx: FieldCtx, E: ASModel) -> IsomClass:
    """Isomorphism class of a normal model (c need not be reduced)."""
    return cubic_coefficient(ctx, E.a).classify(E.b, E.c)


def trace_of(ctx: FieldCtx, E: ASModel) -> int:
    return frobenius_trace(classify(ctx, E), ctx.n)


def naive_count(ctx: FieldCtx, E: ASModel) -> int:
    """|E(k)| by enumerating x: two points per x with Tr(ax^3+bx^2+c) = 0, plus infinity."""
    zeros = _kernels.count_trace_zero([E.a, E.b, E.c], [3, 2, 0], ctx.tmask, ctx.modulus, ctx.n)
    return 1 + 2 * zeros


@dataclass
class SweepResult:
    models: int
    classes: dict  # (label, coset) -> trace
    mismatches: list  # (a, b, c, count, trace), at most 20 kept
    n_mismatches: int

    def to_json(self, ctx: FieldCtx) -> dict:
        return {
            "models": self.models,
            "classes": len(self.classes),
            "expected_classes": 7 if ctx.n % 2 == 0 else 3,
            "traces": sorted(set(self.classes.values())),
            "mismatches": [
                {"a": ctx.to_hex(a), "b": ctx.to_hex(b), "c": ctx.to_hex(c), "count": N, "t": t}
                for a, b, c, N, t in self.mismatches
            ],
        }


def sweep_normal_models(ctx: FieldCtx) -> SweepResult:
    """Classify every normal model (c in {0, c0}) and compare with its naive count."""
    res = SweepResult(0, {}, [], 0)
    for a in ctx.nonzero():
        cc = cubic_coefficient(ctx, a)
        for b in ctx.elements():
            for c in (0, ctx.c0):
                cls = cc.classify(b, c)
                t = frobenius_trace(cls, ctx.n)
                res.classes[(cls.label, cls.coset)] = t
                N = naive_count(ctx, ASModel(a, b, c))
                res.models += 1
                if N != ctx.q + 1 + t:
                    res.n_mismatches += 1
                    if len(res.mismatches) < 20:
                        res.mismatches.append((a, b, c, N, t))
    return res


def change_of_variables(ctx: FieldCtx, E: ASModel, u: int, v: int, t: int) -> ASModel:
    """The model obtained through (x, y) -> (u(x + v), y + a v^2 x + t)."""
    a, b, c = E.a, E.b, E.c
    ui = ctx.inv(u)
    v2 = ctx.sqr(v)
    a2 = ctx.sqr(a)
    new_a = ctx.mul(ctx.pow(ui, 3), a)
    new_b = ctx.mul(ctx.sqr(ui), b ^ ctx.mul(a2, ctx.sqr(v2)) ^ ctx.mul(a, v))
    new_c = c ^ ctx.mul(a2, ctx.mul(v2, ctx.sqr(v2))) ^ ctx.mul(b, v2) ^ t ^ ctx.sqr(t)
    return ASModel(new_a, new_b, new_c)
