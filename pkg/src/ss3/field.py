"""Binary fields GF(2^n), their quadratic and cubic extensions.

Elements are ints in [0, 2^n): bit i is the coefficient of x^i in the
polynomial basis over the context's modulus. Contexts are immutable and
safe to share between workers; nothing in this module mutates them after
construction.
"""

from __future__ import annotations

import functools
import os
import random
from collections.abc import Iterable

from ss3 import gf2
from ss3.gf2 import LinearMap

DEFAULT_MAX_N = 24
HARD_MAX_N = 31  # products must fit in int64 for the vector kernels
_TABLE_MAX_N = 16

MODULI_ENV = "SS3_MODULI_FILE"


class FieldError(ValueError):
    pass


def _factor(m: int) -> list[int]:
    primes = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            primes.append(p)
            while m % p == 0:
                m //= p
        p += 1 if p == 2 else 2
    if m > 1:
        primes.append(m)
    return primes


class FieldCtx:
    """The field GF(2^n) = GF(2)[x]/(modulus).

    ``c0`` is the least element of absolute trace 1; it represents the
    nontrivial class of k / AS(k).
    """

    def __init__(self, n: int, modulus: int):
        if not 1 <= n <= HARD_MAX_N:
            raise FieldError(f"degree {n} outside 1..{HARD_MAX_N}")
        if gf2.degree(modulus) != n or not gf2.is_irreducible(modulus):
            raise FieldError(f"{modulus:#x} is not an irreducible polynomial of degree {n}")
        self.n = n
        self.modulus = modulus
        self.q = 1 << n
        self.mask = self.q - 1
        self._exp = self._log = None
        if n <= _TABLE_MAX_N:
            self._build_tables()
        self.tmask = sum(self._trace_slow(1 << i) << i for i in range(n))
        # least x with odd overlap with the trace mask
        self.c0 = self.tmask & -self.tmask
        self._as_map = LinearMap.from_function(lambda y: self.sqr(y) ^ y, n)
        self._cube_data = self._cube_setup() if n % 2 == 0 else None

    def __repr__(self) -> str:
        return f"FieldCtx(n={self.n}, modulus={self.modulus:#x})"

    def __eq__(self, other) -> bool:
        return isinstance(other, FieldCtx) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self) -> int:
        return hash((self.n, self.modulus))

    def to_json(self) -> dict:
        return {"n": self.n, "modulus": format(self.modulus, "x")}

    # -- arithmetic ---------------------------------------------------------

    def _build_tables(self) -> None:
        q = self.q
        order = q - 1
        primes = _factor(order) if order > 1 else []
        gen = None
        for cand in range(1, q):
            if all(self._pow_slow(cand, order // p) != 1 for p in primes):
                gen = cand
                break
        exp = [0] * (2 * order + 1)
        log = [0] * q
        x = 1
        for i in range(order):
            exp[i] = x
            log[x] = i
            x = self._mul_slow(x, gen)
        for i in range(order, 2 * order + 1):
            exp[i] = exp[i - order]
        self._exp, self._log = exp, log

    def _mul_slow(self, a: int, b: int) -> int:
        return gf2.pmod(gf2.pmul(a, b), self.modulus)

    def _pow_slow(self, a: int, e: int) -> int:
        r = 1
        while e:
            if e & 1:
                r = self._mul_slow(r, a)
            a = self._mul_slow(a, a)
            e >>= 1
        return r

    def mul(self, a: int, b: int) -> int:
        if self._exp is not None:
            if a == 0 or b == 0:
                return 0
            return self._exp[self._log[a] + self._log[b]]
        return gf2.pmod(gf2.pmul(a, b), self.modulus)

    def sqr(self, a: int) -> int:
        return self.mul(a, a)

    def pow(self, a: int, e: int) -> int:
        if a == 0:
            if e < 0:
                raise ZeroDivisionError("0 has no inverse")
            return 1 if e == 0 else 0
        e %= self.q - 1
        if self._exp is not None:
            return self._exp[(self._log[a] * e) % (self.q - 1)]
        r = 1
        while e:
            if e & 1:
                r = self.mul(r, a)
            a = self.mul(a, a)
            e >>= 1
        return r

    def inv(self, a: int) -> int:
        if a == 0:
            raise ZeroDivisionError("inversion of zero")
        if self._exp is not None:
            return self._exp[(self.q - 1 - self._log[a]) % (self.q - 1)]
        return self.pow(a, self.q - 2)

    def div(self, a: int, b: int) -> int:
        return self.mul(a, self.inv(b))

    def sqrt(self, a: int) -> int:
        """The unique square root a^(q/2)."""
        for _ in range(self.n - 1):
            a = self.sqr(a)
        return a

    def frob(self, a: int, k: int = 1) -> int:
        """a^(2^k)."""
        for _ in range(k % self.n):
            a = self.sqr(a)
        return a

    def poly_eval(self, coeffs: Iterable[int], x: int) -> int:
        """Evaluate sum coeffs[i] x^i (coefficients low to high) by Horner."""
        acc = 0
        for c in reversed(list(coeffs)):
            acc = self.mul(acc, x) ^ c
        return acc

    def eval_f2_poly(self, p: int, x: int) -> int:
        """Evaluate a GF(2)[x] polynomial (bit vector) at x."""
        return self.poly_eval([(p >> i) & 1 for i in range(p.bit_length())], x)

    # -- traces and Artin-Schreier --------------------------------------------

    def _trace_slow(self, a: int) -> int:
        acc = 0
        for _ in range(self.n):
            acc ^= a
            a = self.sqr(a)
        return acc

    def trace(self, a: int) -> int:
        """Absolute trace to GF(2), as 0 or 1."""
        return gf2.parity(a & self.tmask)

    def trace_to_f4(self, a: int) -> int:
        """Trace to the subfield GF(4); the result is an element of k."""
        if self.n % 2:
            raise FieldError("GF(4) is not a subfield when n is odd")
        acc = 0
        for _ in range(self.n // 2):
            acc ^= a
            a = self.sqr(self.sqr(a))
        return acc

    def in_as(self, a: int) -> bool:
        """a lies in AS(k) = {y + y^2}."""
        return self.trace(a) == 0

    def in_as2(self, a: int) -> bool:
        """a lies in AS^2(k) = {y + y^4} (n even)."""
        return self.trace_to_f4(a) == 0

    def solve_as(self, z: int) -> int | None:
        """Least y with y^2 + y = z, or None when Tr(z) = 1."""
        y = self._as_map.solve(z)
        if y is None:
            return None
        return min(y, y ^ 1)

    def linear_map(self, fn) -> LinearMap:
        """Matrix of a GF(2)-linear function k -> k."""
        return LinearMap.from_function(fn, self.n)

    # -- cubes ----------------------------------------------------------------

    def is_cube(self, a: int) -> bool:
        """0 counts as a cube (with root 0)."""
        if a == 0 or self.n % 2:
            return True
        return self.pow(a, (self.q - 1) // 3) == 1

    def cube_coset(self, a: int) -> int:
        """a^((q-1)/3): identifies the class of a in k*/(k*)^3 (1 for cubes)."""
        if self.n % 2:
            return 1
        return self.pow(a, (self.q - 1) // 3)

    def _cube_setup(self):
        order = self.q - 1
        s, t = 0, order
        while t % 3 == 0:
            s += 1
            t //= 3
        z = next(x for x in range(2, self.q) if not self.is_cube(x))
        h = self.pow(z, t)
        omega = self.pow(h, 3 ** (s - 1))
        return s, t, h, omega

    def cube_root(self, a: int) -> int | None:
        """Least cube root of a, or None if a is not a cube."""
        if a == 0:
            return 0
        q = self.q
        if self.n % 2:
            return self.pow(a, (2 * q - 1) // 3)
        if not self.is_cube(a):
            return None
        s, t, h, omega = self._cube_data
        # discrete log of a^t in the cyclic 3-Sylow subgroup generated by h
        target = self.pow(a, t)
        k = 0
        hinv = self.inv(h)
        for i in range(s):
            probe = self.pow(self.mul(target, self.pow(hinv, k)), 3 ** (s - 1 - i))
            if probe == 1:
                digit = 0
            elif probe == omega:
                digit = 1
            else:
                digit = 2
            k += digit * 3**i
        assert k % 3 == 0
        b = self.pow(h, k // 3)
        alpha = t % 3
        beta = (1 - t * alpha) // 3
        y = self.mul(self.pow(b, alpha), self.pow(a, beta))
        roots = [y, self.mul(y, omega), self.mul(y, self.mul(omega, omega))]
        assert all(self.mul(r, self.sqr(r)) == a for r in roots)
        return min(roots)

    # -- enumeration and serialization ------------------------------------------

    def elements(self) -> range:
        return range(self.q)

    def nonzero(self) -> range:
        return range(1, self.q)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> int:
        if nonzero:
            return rng.randrange(1, self.q)
        return rng.randrange(self.q)

    def to_hex(self, a: int) -> str:
        return format(a, "x")

    def from_hex(self, s: str) -> int:
        v = int(s, 16)
        if not 0 <= v < self.q:
            raise FieldError(f"{s} is not an element of GF(2^{self.n})")
        return v


@functools.lru_cache(maxsize=None)
def _moduli_overrides(path: str | None) -> dict[int, int]:
    if not path:
        return {}
    table = {}
    with open(path) as fh:
        for line in fh:
            line = line.split("#", 1)[0].strip()
            if not line:
                continue
            try:
                deg, hexval = line.split(":")
                table[int(deg)] = int(hexval, 16)
            except ValueError:
                raise FieldError(f"{path}: expected 'degree: hex modulus' lines, got {line!r}") from None
    return table


def default_modulus(n: int) -> int:
    override = _moduli_overrides(os.environ.get(MODULI_ENV)).get(n)
    if override is not None:
        return override
    return _least_irreducible(n)


@functools.lru_cache(maxsize=None)
def _least_irreducible(n: int) -> int:
    return gf2.least_irreducible(n)


@functools.lru_cache(maxsize=None)
def _ctx(n: int, modulus: int) -> FieldCtx:
    return FieldCtx(n, modulus)


def make_ctx(n: int, max_n: int = DEFAULT_MAX_N) -> FieldCtx:
    """The field GF(2^n) with the default modulus."""
    if not isinstance(n, int) or not 1 <= n <= min(max_n, HARD_MAX_N):
        raise FieldError(f"n={n} outside the supported range 1..{min(max_n, HARD_MAX_N)}")
    return _ctx(n, default_modulus(n))


def solve_linearized(ctx: FieldCtx, terms: list[tuple[int, int]], b: int) -> list[int]:
    """All v in k with sum c * v^(2^k) == b over terms (c, k), sorted."""

    def apply(v):
        acc = 0
        for c, k in terms:
            acc ^= ctx.mul(c, ctx.frob(v, k))
        return acc

    lmap = ctx.linear_map(apply)
    v0 = lmap.solve(b)
    if v0 is None:
        return []
    return sorted(v0 ^ w for w in gf2.span(lmap.kernel()))


class ExtensionTower:
    """k together with k2 = GF(q^2) and k3 = GF(q^3) and embeddings of k.

    The embedding sends the generator x of k to the least root of k's
    modulus inside the subfield of K fixed by x -> x^q.
    """

    def __init__(self, base: FieldCtx):
        self.base = base
        n = base.n
        self.ext2 = _ctx(2 * n, default_modulus(2 * n))
        self.ext3 = _ctx(3 * n, default_modulus(3 * n))
        self._embed = {}
        self._unembed = {}
        for m, ext in ((2, self.ext2), (3, self.ext3)):
            images = self._embedding_images(ext)
            self._embed[m] = images
            self._unembed[m] = LinearMap(images)

    def _embedding_images(self, ext: FieldCtx) -> list[int]:
        n = self.base.n
        fixed = LinearMap.from_function(lambda y: ext.frob(y, n) ^ y, ext.n).kernel()
        roots = [y for y in gf2.span(fixed) if ext.eval_f2_poly(self.base.modulus, y) == 0]
        gamma = min(roots)
        images = [1]
        for _ in range(1, n):
            images.append(ext.mul(images[-1], gamma))
        return images

    def ext(self, m: int) -> FieldCtx:
        return {1: self.base, 2: self.ext2, 3: self.ext3}[m]

    def embed(self, x: int, m: int) -> int:
        if m == 1:
            return x
        images = self._embed[m]
        out = 0
        i = 0
        while x:
            if x & 1:
                out ^= images[i]
            x >>= 1
            i += 1
        return out

    def unembed(self, y: int, m: int) -> int:
        """Inverse of embed on its image."""
        if m == 1:
            return y
        x = self._unembed[m].solve(y)
        if x is None:
            raise FieldError(f"{y:#x} does not lie in the embedded copy of k")
        return x

    def in_base(self, y: int, m: int) -> bool:
        return m == 1 or self._unembed[m].in_image(y)

    def conjugates(self, y: int, m: int) -> list[int]:
        """y, y^q, ... over k (m of them)."""
        ext = self.ext(m)
        out = [y]
        for _ in range(m - 1):
            out.append(ext.frob(out[-1], self.base.n))
        return out

    def rel_trace(self, y: int, m: int) -> int:
        """Tr_{k_m/k}(y), returned as an element of k."""
        acc = 0
        for c in self.conjugates(y, m):
            acc ^= c
        return self.unembed(acc, m)

    def rel_norm(self, y: int, m: int) -> int:
        ext = self.ext(m)
        acc = 1
        for c in self.conjugates(y, m):
            acc = ext.mul(acc, c)
        return self.unembed(acc, m)


@functools.lru_cache(maxsize=None)
def make_tower(n: int) -> ExtensionTower:
    return ExtensionTower(make_ctx(n))

