"""Exhaustive census of the quartics Y^4 + fY^2 + gY = X^3 + dX^2 + e over GF(2^n).

Everything except e is handled one (f, g, d) at a time: the type and the
quotient coefficients a_i depend on (f, g) only, and e changes each
quotient's twist bit by the linear functional e -> Tr(a_i e). The image of
e -> (flip bits) is a subspace V, and each of its vectors is hit by exactly
q/|V| values of e.
"""

from __future__ import annotations

import functools
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from ss3 import gf2
from ss3.elliptic import cubic_coefficient
from ss3.field import FieldCtx, make_ctx, make_tower
from ss3.quartic import (
    QUADRATIC,
    SPLIT,
    Quartic,
    ScaleError,
    WeilPoly,
    _type_of_fg,
    naive_weil_poly,
    quotient_a,
)
from ss3.synthesis.types import config_weil, isogeny_label

DEFAULT_MAX_N = 4


@dataclass
class CensusResult:
    n: int
    weil: Counter = field(default_factory=Counter)  # WeilPoly -> number of quartics
    configs: Counter = field(default_factory=Counter)  # (tag, config) -> number of quartics
    total: int = 0

    def merge(self, other: "CensusResult") -> None:
        self.weil.update(other.weil)
        self.configs.update(other.configs)
        self.total += other.total

    def realized(self) -> set[WeilPoly]:
        return set(self.weil)

    def realized_configs(self, tag: str | None = None) -> set:
        return {c for (t, c) in self.configs if tag is None or t == tag}


@functools.lru_cache(maxsize=None)
def _weil_of(tag: str, config: tuple[str, ...], n: int) -> WeilPoly:
    return config_weil(tag, config, n)


class Quotient:
    """One elliptic quotient of all quartics with a given (f, g)."""

    def __init__(self, ctx: FieldCtx, K: FieldCtx, a: int, embed):
        self.K = K
        self.a = a
        self.cc = cubic_coefficient(K, a)
        self.embed = embed
        # flip functional: bit j is Tr_K(a * embed(x^j))
        self.mask = 0
        for j in range(ctx.n):
            if K.trace(K.mul(a, embed(1 << j))):
                self.mask |= 1 << j

    def base_bit(self, d: int) -> int | None:
        return self.cc.twist_bit(self.K.mul(self.a, self.embed(d)), 0)

    def label(self, bit: int | None) -> str:
        return isogeny_label(self.cc.label(bit))


def _fg_quotients(ctx: FieldCtx, f: int, g: int):
    qt = _type_of_fg(ctx, f, g)
    if qt.tag == SPLIT:
        ids = lambda x: x  # noqa: E731
        return qt.tag, [Quotient(ctx, ctx, quotient_a(ctx, th, g), ids) for th in qt.roots]
    tower = make_tower(ctx.n)
    quots = []
    # one representative per Galois orbit: theta in k and theta' for quadratic, theta for cubic
    picks = [(qt.roots[0], qt.degrees[0])]
    if qt.tag == QUADRATIC:
        picks.append((qt.roots[1], 2))
    for theta, m in picks:
        K = tower.ext(m)
        emb = functools.partial(tower.embed, m=m) if m > 1 else (lambda x: x)
        quots.append(Quotient(ctx, K, quotient_a(K, theta, emb(g)), emb))
    return qt.tag, quots


def flip_image(masks: list[int], n: int) -> list[tuple[int, ...]]:
    """All flip vectors (Tr(a_i e))_i as e runs over k."""
    cols = []
    for j in range(n):
        cols.append(sum(((m >> j) & 1) << i for i, m in enumerate(masks)))
    image_basis = gf2.LinearMap(cols).image_basis()
    return [tuple((v >> i) & 1 for i in range(len(masks))) for v in gf2.span(image_basis)]


def _config(tag: str, labels: list[str]) -> tuple[str, ...]:
    return tuple(sorted(labels)) if tag == SPLIT else tuple(labels)


def census_slice(n: int, gs: list[int]) -> CensusResult:
    """Census restricted to the given values of g."""
    ctx = make_ctx(n)
    q = ctx.q
    res = CensusResult(n)
    for g in gs:
        for f in range(q):
            tag, quots = _fg_quotients(ctx, f, g)
            flips = flip_image([qu.mask for qu in quots], n)
            mult = q // len(flips)
            for d in range(q):
                bits = [qu.base_bit(d) for qu in quots]
                for v in flips:
                    labels = [
                        qu.label(None if b is None else b ^ fl) for qu, b, fl in zip(quots, bits, v)
                    ]
                    config = _config(tag, labels)
                    res.configs[(tag, config)] += mult
                    res.weil[_weil_of(tag, config, n)] += mult
            res.total += q * q
    return res


def census_oracle_slice(n: int, gs: list[int]) -> CensusResult:
    """Census through naive point counting (no quotients involved)."""
    ctx = make_ctx(n)
    q = ctx.q
    res = CensusResult(n)
    for g in gs:
        for f in range(q):
            for d in range(q):
                for e in range(q):
                    res.weil[naive_weil_poly(ctx, Quartic(d, e, f, g))] += 1
                    res.total += 1
    return res


def _check_scale(n: int, max_n: int) -> None:
    if n > max_n:
        raise ScaleError(f"census over GF(2^{n}) exceeds the scale guard (max n = {max_n})")


def census(n: int, *, oracle: bool = False, jobs: int = 1, max_n: int = DEFAULT_MAX_N) -> CensusResult:
    _check_scale(n, max_n)
    q = 1 << n
    worker = census_oracle_slice if oracle else census_slice
    gs = list(range(1, q))
    if jobs <= 1:
        return worker(n, gs)
    chunks = [gs[i::jobs] for i in range(jobs)]
    out = CensusResult(n)
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for part in pool.map(worker, [n] * len(chunks), chunks):
            out.merge(part)
    return out
