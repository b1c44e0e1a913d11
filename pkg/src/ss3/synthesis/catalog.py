"""Isogeny classes of supersingular abelian threefolds over GF(2^n) and
which of them contain the Jacobian of a plane quartic.

The exception lists below are data: each entry is a literal polynomial or
trace pattern. The census in ``ss3.synthesis.census`` checks them against
exhaustive enumeration at small q.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field

from ss3.elliptic import traces as elliptic_traces
from ss3.quartic import Quartic, WeilPoly

SIMPLE = "Simple"
ELL_X_SURFACE = "EllTimesSurface"
TRIPLE = "TripleSplit"


class CatalogError(ValueError):
    pass


def _q(n: int) -> int:
    return 1 << n


def _sqrt_q(n: int) -> int:
    """sqrt(q) for n even, sqrt(2q) for n odd."""
    return 1 << ((n + 1) // 2)


def surface_pairs(n: int) -> list[tuple[int, int]]:
    """(s, t) of the k-simple supersingular surfaces x^4 + s x^3 + t x^2 + q s x + q^2."""
    q = _q(n)
    r = _sqrt_q(n)
    if n % 2 == 0:
        return [(0, 0), (0, -q), (r, q), (-r, q)]
    return [(0, -2 * q), (0, q), (0, -q), (r, q), (-r, q)]


@dataclass(frozen=True)
class IsogenyClassSpec:
    """A supersingular threefold isogeny class.

    payload is the sign of x^3 for Simple, (s, (s', t')) for an elliptic
    curve times a surface, and a sorted trace triple for TripleSplit.
    """

    shape: str
    payload: object
    n: int

    def weil(self) -> WeilPoly:
        q = _q(self.n)
        if self.shape == SIMPLE:
            root = math.isqrt(q**3)
            return WeilPoly(0, 0, self.payload * root, q)
        if self.shape == ELL_X_SURFACE:
            s, (s2, t2) = self.payload
            return WeilPoly.from_factors([[1, s, q], [1, s2, t2, q * s2, q * q]], q)
        return WeilPoly.from_factors([[1, t, q] for t in self.payload], q)

    def twisted(self) -> "IsogenyClassSpec":
        """The class of f(-x)."""
        if self.shape == SIMPLE:
            return IsogenyClassSpec(SIMPLE, -self.payload, self.n)
        if self.shape == ELL_X_SURFACE:
            s, (s2, t2) = self.payload
            return IsogenyClassSpec(ELL_X_SURFACE, (-s, (-s2, t2)), self.n)
        return IsogenyClassSpec(TRIPLE, tuple(sorted(-t for t in self.payload)), self.n)

    def to_json(self) -> dict:
        if self.shape == SIMPLE:
            payload = {"sign": self.payload}
        elif self.shape == ELL_X_SURFACE:
            s, (s2, t2) = self.payload
            payload = {"s": s, "surface": [s2, t2]}
        else:
            payload = {"traces": list(self.payload)}
        return {"shape": self.shape, **payload}


@dataclass(frozen=True)
class AttainabilityVerdict:
    attainable: bool
    reason: str
    witness: Quartic | None = field(default=None, compare=False)

    def to_json(self, ctx=None) -> dict:
        out = {"attainable": self.attainable, "reason": self.reason}
        if self.witness is not None and ctx is not None:
            out["witness"] = self.witness.to_json(ctx)
        return out


def enumerate_classes(n: int) -> list[tuple[IsogenyClassSpec, WeilPoly]]:
    """Every supersingular threefold isogeny class over GF(2^n), without repeats."""
    q = _q(n)
    ts = elliptic_traces(n)
    specs: list[IsogenyClassSpec] = []
    if n % 2 == 0:
        specs += [IsogenyClassSpec(SIMPLE, sign, n) for sign in (1, -1)]
    specs += [IsogenyClassSpec(ELL_X_SURFACE, (s, pair), n) for s in ts for pair in surface_pairs(n)]
    specs += [IsogenyClassSpec(TRIPLE, tri, n) for tri in itertools.combinations_with_replacement(ts, 3)]
    out = [(spec, spec.weil()) for spec in specs]
    if len({w for _, w in out}) != len(out):
        raise CatalogError(f"repeated Weil polynomial in the catalog for q={q}")
    return out


def lookup(n: int, wp: WeilPoly) -> IsogenyClassSpec:
    for spec, w in enumerate_classes(n):
        if w == wp:
            return spec
    raise CatalogError(f"{wp} is not a supersingular threefold class over GF(2^{n})")


# -- exception data ---------------------------------------------------------------------
# Elliptic x surface: (s, (s', t')) entries excluded for particular q.

_ELL_SURFACE_EXCEPTIONS: dict[int, list[tuple[int, tuple[int, int]]]] = {
    4: [(0, (0, 0)), (4, (0, 0)), (-4, (0, 0)), (4, (0, -4))],
    8: [(4, (0, -16))],
    2: [(2, (0, -2)), (-2, (0, 2)), (2, (-2, 2))],
}

# Triples of elliptic traces excluded for particular q > 4.
_TRIPLE_EXCEPTIONS: dict[int, list[tuple[int, int, int]]] = {
    64: [(-16, -16, -16)],
    16: [(-8, 0, 0), (0, 8, 8), (-8, -8, 0), (8, 8, 8), (-8, -8, -8), (-8, 8, 8), (-4, 8, 8), (-8, -8, -4)],
    8: [(-4, -4, -4)],
}

# Triples attained over GF(4) besides those containing both 2 and -2.
_TRIPLE_Q4_EXTRA = [(0, 2, 2), (-2, -2, 0), (2, 2, 4), (-2, -2, 4), (0, 0, 2), (-4, -2, 4)]


def contains_jacobian(spec: IsogenyClassSpec) -> AttainabilityVerdict:
    n = spec.n
    q = _q(n)
    if spec.shape == SIMPLE:
        if n % 2:
            raise CatalogError("no simple supersingular threefolds for non-square q")
        return AttainabilityVerdict(True, "simple:always")
    if spec.shape == ELL_X_SURFACE:
        s, (s2, t2) = spec.payload
        if (s2, t2) not in surface_pairs(n):
            raise CatalogError(f"({s2}, {t2}) is not a simple surface class for q={q}")
        r = _sqrt_q(n)
        if n % 2 == 0 and s2 != 0 and t2 == q:
            return AttainabilityVerdict(False, "ell-surface:square-q:surface(+-sqrt q, q)")
        if n % 2 == 1 and s2 != 0:
            eps = 1 if s2 > 0 else -1
            if s in (0, eps * r):
                return AttainabilityVerdict(False, "ell-surface:nonsquare-q:matched-sign")
        if q == 2 and (s2, t2) == (0, -4):
            return AttainabilityVerdict(False, "ell-surface:q=2:surface(0,-2q)")
        if (s, (s2, t2)) in _ELL_SURFACE_EXCEPTIONS.get(q, []):
            return AttainabilityVerdict(False, f"ell-surface:q={q}:listed")
        return AttainabilityVerdict(True, "ell-surface:generic")
    tri = tuple(sorted(spec.payload))
    if q == 2:
        return AttainabilityVerdict(False, "triple:q=2:none")
    if q == 4:
        if 2 in tri and -2 in tri:
            return AttainabilityVerdict(True, "triple:q=4:divisible")
        if tri in _TRIPLE_Q4_EXTRA:
            return AttainabilityVerdict(True, "triple:q=4:listed")
        return AttainabilityVerdict(False, "triple:q=4:not-listed")
    if tri in [tuple(sorted(t)) for t in _TRIPLE_EXCEPTIONS.get(q, [])]:
        return AttainabilityVerdict(False, f"triple:q={q}:listed")
    return AttainabilityVerdict(True, "triple:generic")


def predicted_set(n: int) -> set[WeilPoly]:
    return {w for spec, w in enumerate_classes(n) if contains_jacobian(spec).attainable}
