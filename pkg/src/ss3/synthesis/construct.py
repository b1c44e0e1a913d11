"""Explicit quartics whose Jacobian lies in a prescribed isogeny class.

Every constructor first consults the type-level attainability tables, then
searches deterministically for quotient data (a-set, d, e) and verifies the
result with ``weil_poly`` before returning it. The search order is
canonical, so witnesses are reproducible.

Cubic-type targets try the explicit families first: a root of x^3 + j,
x^3 + jx + 1 or x^3 + x^2 + jx + j + 1, with d found from a genus-0
parametrization and the least parameter giving the required trace.
Quadratic and split targets scan a-data and d, then pick e by duality to
set the twist bits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from ss3 import auxgeom, gf2
from ss3.elliptic import cubic_coefficient, isogeny_labels
from ss3.field import FieldCtx, make_tower
from ss3.quartic import CUBIC, QUADRATIC, SPLIT, Quartic, WeilPoly, weil_poly
from ss3.synthesis import types
from ss3.synthesis.catalog import contains_jacobian, lookup
from ss3.synthesis.census import Quotient, flip_image


@dataclass(frozen=True)
class NotAttainable:
    reason: str

    def to_json(self) -> dict:
        return {"attainable": False, "reason": self.reason}


class ConstructionError(RuntimeError):
    """A search or verification step contradicted the attainability tables."""


# -- quartic from quotient data -----------------------------------------------------------


def quartic_from_data(ctx: FieldCtx, aset: tuple[int, int, int], m: int, d: int, e: int) -> Quartic:
    """The quartic whose quotients have a-coefficients ``aset`` (in k_m), with given d, e.

    theta_i = g sqrt(a_i); the product of the theta_i is g, which fixes g^2,
    and f is the second symmetric function of the theta_i.
    """
    if any(a == 0 for a in aset) or aset[0] ^ aset[1] ^ aset[2]:
        raise ValueError("need three nonzero a-values adding up to zero")
    tower = make_tower(ctx.n) if m > 1 else None
    K = ctx if m == 1 else tower.ext(m)
    s1, s2, s3 = (K.sqrt(a) for a in aset)
    g2 = K.inv(K.mul(K.mul(s1, s2), s3))
    g = K.sqrt(g2)
    f = K.mul(g2, K.mul(s1, s2) ^ K.mul(s1, s3) ^ K.mul(s2, s3))
    if m > 1:
        if not (tower.in_base(f, m) and tower.in_base(g, m)):
            raise ValueError("a-set is not Galois stable")
        f, g = tower.unembed(f, m), tower.unembed(g, m)
    return Quartic(d, e, f, g)


# -- shared search over d and e -----------------------------------------------------------


def _config(tag: str, labels) -> tuple[str, ...]:
    return tuple(sorted(labels)) if tag == SPLIT else tuple(labels)


def _e_solver(ctx: FieldCtx, quots: list[Quotient]):
    cols = [sum(((qu.mask >> j) & 1) << i for i, qu in enumerate(quots)) for j in range(ctx.n)]
    return gf2.LinearMap(cols)


def _search_d(ctx: FieldCtx, tag: str, quots: list[Quotient], target: tuple[str, ...]):
    """Least d (then least flip pattern) realizing ``target``; returns (d, e) or None."""
    flips = flip_image([qu.mask for qu in quots], ctx.n)
    for d in range(ctx.q):
        bits = [qu.base_bit(d) for qu in quots]
        for v in flips:
            labels = [qu.label(None if b is None else b ^ fl) for qu, b, fl in zip(quots, bits, v)]
            if _config(tag, labels) == target:
                vec = sum(bit << i for i, bit in enumerate(v))
                e = _e_solver(ctx, quots).solve(vec)
                return d, e
    return None


def _label_kind(label: str) -> str:
    """'nc' for the non-cube classes, 'c' otherwise (square degree only)."""
    return "nc" if label in ("Enc", "Enc'") else "c"


def _verify(ctx: FieldCtx, C: Quartic, tag: str, target: tuple[str, ...]) -> Quartic:
    want = types.config_weil(tag, target, ctx.n)
    got = weil_poly(ctx, C)
    if got != want:
        raise ConstructionError(f"constructed quartic has {got}, expected {want}")
    return C


# -- split ------------------------------------------------------------------------------------


def construct_split(ctx: FieldCtx, target) -> Quartic | NotAttainable:
    n, q = ctx.n, ctx.q
    target = tuple(sorted(target))
    if sorted(set(target) - set(isogeny_labels(n))):
        raise ValueError(f"unknown labels in {target}")
    if not types.split_attained(target, n):
        return NotAttainable("split:type-table")
    want_nc = sum(_label_kind(x) == "nc" for x in target) if n % 2 == 0 else None
    ident = lambda x: x  # noqa: E731
    for a1 in range(1, q):
        for a2 in range(a1 + 1, q):
            a3 = a1 ^ a2
            if a3 <= a2:
                continue
            aset = (a1, a2, a3)
            if want_nc is not None and sum(not ctx.is_cube(a) for a in aset) != want_nc:
                continue
            quots = [Quotient(ctx, ctx, a, ident) for a in aset]
            hit = _search_d(ctx, SPLIT, quots, target)
            if hit:
                return _verify(ctx, quartic_from_data(ctx, aset, 1, *hit), SPLIT, target)
    raise ConstructionError(f"no split quartic found for {target} over GF({q})")


# -- quadratic --------------------------------------------------------------------------------


def construct_quadratic_type(ctx: FieldCtx, pair) -> Quartic | NotAttainable:
    n = ctx.n
    pair = tuple(pair)
    if pair[0] not in isogeny_labels(n) or pair[1] not in isogeny_labels(2 * n):
        raise ValueError(f"unknown labels in {pair}")
    if not types.quadratic_attained(pair, n):
        return NotAttainable("quadratic:type-table")
    tower = make_tower(n)
    K2 = tower.ext2
    emb2 = lambda x: tower.embed(x, 2)  # noqa: E731
    ident = lambda x: x  # noqa: E731
    want_e = _label_kind(pair[0]) if n % 2 == 0 else None
    want_f = _label_kind(pair[1])
    for ap in range(1, K2.q):
        if tower.in_base(ap, 2):
            continue
        conj = K2.frob(ap, n)
        if conj < ap:
            continue
        if (_label_kind_of(K2, ap) != want_f) or (want_e is not None and _label_kind_of(ctx, tower.rel_trace(ap, 2)) != want_e):
            continue
        a = tower.rel_trace(ap, 2)
        quots = [Quotient(ctx, ctx, a, ident), Quotient(ctx, K2, ap, emb2)]
        hit = _search_d(ctx, QUADRATIC, quots, pair)
        if hit:
            aset = (emb2(a), ap, conj)
            return _verify(ctx, quartic_from_data(ctx, aset, 2, *hit), QUADRATIC, pair)
    raise ConstructionError(f"no quadratic-type quartic found for {pair} over GF({ctx.q})")


def _label_kind_of(K: FieldCtx, a: int) -> str:
    return "c" if K.is_cube(a) else "nc"


# -- cubic ------------------------------------------------------------------------------------


def _guided_cubic(ctx: FieldCtx, label: str):
    """Explicit-family construction; returns (aset in k3, d) or None."""
    n = ctx.n
    tower = make_tower(n)
    K3 = tower.ext3
    for j in range(ctx.q):
        if n % 2 == 0:
            if label in ("Enc", "Enc'"):
                if j == 0 or ctx.is_cube(j):
                    continue
                coeffs = (j, 0, 0)  # x^3 + j
            else:
                coeffs = (1, j, 0)  # x^3 + jx + 1
        else:
            coeffs = (j ^ 1, j, 1)  # x^3 + x^2 + jx + (j + 1)
        roots = _irreducible_roots(ctx, coeffs)
        if not roots:
            continue
        if n % 2 == 0:
            a = roots[0]
            aset = tuple(tower.conjugates(a, 3))
            if label in ("E1", "Enc"):
                return aset, 0
            if label == "E0":
                d = _d_for_E0(ctx, a)
                if d is not None:
                    return aset, d
                continue
            # twisted classes: d = x + x^4 a with Tr_{k3}(x^3 a) = 1
            r = K3.sqrt(K3.sqrt(K3.sqrt(a)))
            r, s, t = tower.conjugates(r, 3)
            A, B = (tower.unembed(v, 3) for v in auxgeom.sum_zero_trace_coefficients(K3, r, s, t))
            lam = auxgeom.search_lambda(ctx, A, B, 0, 0, 1)
            if lam is None:
                continue
            x, _, _ = auxgeom.param_sum_zero(K3, r, s, t, tower.embed(lam, 3))
            d = tower.unembed(auxgeom.sum_zero_common_value(K3, x, r), 3)
            return aset, d
        u = roots[0]
        aset = tuple(K3.pow(c, 3) for c in tower.conjugates(u, 3))
        if label == "E1":
            return aset, 0
        eps = 0 if label == "H" else 1
        r = K3.inv(u)
        for _ in range(4):
            r = K3.sqrt(r)
        r, s, t = tower.conjugates(r, 3)
        A, B, C, D = (tower.unembed(v, 3) for v in auxgeom.inv_cubes_trace_coefficients(K3, r, s, t))
        lam = auxgeom.search_lambda(ctx, A, B, C, D, eps)
        if lam is None:
            continue
        x, _, _ = auxgeom.param_inv_cubes(K3, r, s, t, tower.embed(lam, 3))
        d = tower.unembed(K3.mul(K3.inv(u), 1 ^ x ^ K3.pow(x, 4)), 3)
        return aset, d
    return None


def _d_for_E0(ctx: FieldCtx, a: int):
    tower = make_tower(ctx.n)
    K3 = tower.ext3
    cc = cubic_coefficient(K3, a)
    for d in range(ctx.q):
        if cc.twist_bit(K3.mul(a, tower.embed(d, 3)), 0) is None:
            return d
    return None


def _irreducible_roots(ctx: FieldCtx, coeffs) -> list[int]:
    """Frobenius orbit (least root first) in k3 of the monic cubic with k-coefficients
    (c0, c1, c2), or [] when the cubic has a root in k."""
    c0, c1, c2 = coeffs
    if any(ctx.poly_eval([c0, c1, c2, 1], x) == 0 for x in range(ctx.q)):
        return []
    tower = make_tower(ctx.n)
    K = tower.ext3
    h = [tower.embed(c, 3) for c in coeffs] + [1]
    # trace splitting: gcd(h, Tr(delta Y) mod h) separates the roots for some basis delta
    for i in range(K.n):
        w = [0, 1 << i]
        acc = list(w)
        for _ in range(K.n - 1):
            w = _poly_mod(_poly_sqr(w, K), h, K)
            acc = _poly_add(acc, w)
        gcd = _poly_gcd(acc, h, K)
        if 1 <= len(gcd) - 1 <= 2:
            roots = _small_roots(gcd, K) + _small_roots(_poly_divexact(h, gcd, K), K)
            return tower.conjugates(min(roots), 3)
    raise ConstructionError("failed to split a cubic over the cubic extension")


def _small_roots(p: list[int], K: FieldCtx) -> list[int]:
    p = _monic(p, K)
    deg = len(p) - 1
    if deg == 1:
        return [p[0]]
    # degree 2: y^2 + b y + c with b != 0 -> y = b z, z^2 + z = c / b^2
    c, b = p[0], p[1]
    if b == 0:
        return [K.sqrt(c)]
    z = K.solve_as(K.div(c, K.sqr(b)))
    if z is None:
        raise ConstructionError("quadratic factor has no roots")
    r = K.mul(b, z)
    return [r, r ^ b]


def _monic(p, K):
    lead = K.inv(p[-1])
    return [K.mul(c, lead) for c in p]


def _trim(p):
    while len(p) > 1 and p[-1] == 0:
        p = p[:-1]
    return p


def _poly_add(a, b):
    n = max(len(a), len(b))
    return _trim([(a[i] if i < len(a) else 0) ^ (b[i] if i < len(b) else 0) for i in range(n)])


def _poly_sqr(a, K):
    out = [0] * (2 * len(a) - 1)
    for i, c in enumerate(a):
        out[2 * i] = K.sqr(c)
    return out


def _poly_mod(a, m, K):
    a = _trim(list(a))
    m = _monic(m, K)
    dm = len(m) - 1
    while len(a) - 1 >= dm and any(a):
        c = a[-1]
        shift = len(a) - 1 - dm
        for i, mc in enumerate(m):
            a[shift + i] ^= K.mul(c, mc)
        a = _trim(a)
        if len(a) - 1 < dm:
            break
    return a


def _poly_gcd(a, b, K):
    a, b = _trim(list(a)), _trim(list(b))
    while any(b):
        a, b = b, _poly_mod(a, b, K)
    return _monic(a, K) if any(a) else a


def _poly_divexact(a, b, K):
    a = list(a)
    b = _monic(b, K)
    db = len(b) - 1
    out = [0] * (len(a) - db)
    for i in range(len(a) - 1, db - 1, -1):
        c = a[i]
        if c:
            out[i - db] = c
            for j, bc in enumerate(b):
                a[i - db + j] ^= K.mul(c, bc)
    return _trim(out)


def _scan_cubic(ctx: FieldCtx, label: str):
    """Fallback: a over the trace-zero subspace of k3, d over k."""
    tower = make_tower(ctx.n)
    K3 = tower.ext3
    n = ctx.n
    emb3 = lambda x: tower.embed(x, 3)  # noqa: E731
    lmap = K3.linear_map(lambda y: y ^ K3.frob(y, n) ^ K3.frob(y, 2 * n))
    for a in sorted(gf2.span(lmap.kernel()))[1:]:
        qu = Quotient(ctx, K3, a, emb3)
        for d in range(ctx.q):
            if qu.label(qu.base_bit(d)) == label:
                return tuple(tower.conjugates(a, 3)), d
    return None


def construct_cubic_type(ctx: FieldCtx, label: str, *, guided: bool = True) -> Quartic | NotAttainable:
    n = ctx.n
    if label not in isogeny_labels(3 * n):
        raise ValueError(f"{label} is not a class over the cubic extension")
    if not types.cubic_attained(label, n):
        return NotAttainable("cubic:type-table")
    found = _guided_cubic(ctx, label) if guided else None
    if found is not None:
        C = quartic_from_data(ctx, found[0], 3, found[1], 0)
        if weil_poly(ctx, C) == types.config_weil(CUBIC, (label,), n):
            return C
    found = _scan_cubic(ctx, label)
    if found is None:
        raise ConstructionError(f"no cubic-type quartic found for {label} over GF({ctx.q})")
    return _verify(ctx, quartic_from_data(ctx, found[0], 3, found[1], 0), CUBIC, (label,))


# -- dispatcher -------------------------------------------------------------------------------


def construct_config(ctx: FieldCtx, tag: str, config) -> Quartic | NotAttainable:
    if tag == SPLIT:
        return construct_split(ctx, config)
    if tag == QUADRATIC:
        return construct_quadratic_type(ctx, config)
    return construct_cubic_type(ctx, config[0])


def construct_for_weil(ctx: FieldCtx, target: WeilPoly) -> Quartic | NotAttainable:
    n = ctx.n
    if target.q != ctx.q:
        raise ValueError(f"target is over GF({target.q}), context is GF({ctx.q})")
    spec = lookup(n, target)
    verdict = contains_jacobian(spec)
    options = [(tag, c) for tag, c in types.realizations(target, n) if types.attained(tag, c, n)]
    if not verdict.attainable:
        if options:
            raise ConstructionError(f"{target}: type tables attain {options[0]} but the class is excluded")
        return NotAttainable(verdict.reason)
    if not options:
        raise ConstructionError(f"{target}: class should contain a Jacobian but no quartic type attains it")
    tag, config = options[0]
    C = construct_config(ctx, tag, config)
    if isinstance(C, NotAttainable) or weil_poly(ctx, C) != target:
        raise ConstructionError(f"construction for {target} failed verification")
    return C


def extreme_weil(ctx: FieldCtx, maximal: bool) -> WeilPoly:
    if ctx.n % 2:
        raise ValueError("maximal and minimal curves are defined here for square q only")
    t = (2 if maximal else -2) * math.isqrt(ctx.q)
    return WeilPoly.from_factors([[1, t, ctx.q]] * 3, ctx.q)
