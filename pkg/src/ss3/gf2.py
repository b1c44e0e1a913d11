"""Polynomials over GF(2) and linear algebra on GF(2)-vector spaces.

Polynomials and vectors are both plain ints: bit i holds the coefficient
of x^i (or the i-th coordinate). A linear map on GF(2)^n is given by the
list of images of the basis vectors 1 << i.
"""

from __future__ import annotations


def degree(a: int) -> int:
    """Degree of polynomial a; -1 for the zero polynomial."""
    return a.bit_length() - 1


def pmul(a: int, b: int) -> int:
    """Carry-less product of two polynomials."""
    if a < b:
        a, b = b, a
    c = 0
    while b:
        if b & 1:
            c ^= a
        a <<= 1
        b >>= 1
    return c


def pmod(a: int, m: int) -> int:
    if m == 0:
        raise ZeroDivisionError("reduction modulo the zero polynomial")
    dm = degree(m)
    da = degree(a)
    while da >= dm:
        a ^= m << (da - dm)
        da = degree(a)
    return a


def pgcd(a: int, b: int) -> int:
    while b:
        a, b = b, pmod(a, b)
    return a


def pmulmod(a: int, b: int, m: int) -> int:
    return pmod(pmul(a, b), m)


def is_irreducible(f: int) -> bool:
    """Ben-Or test: f of degree n is irreducible iff gcd(f, x^(2^i) - x) = 1
    for 1 <= i <= n/2."""
    n = degree(f)
    if n < 1:
        return False
    if n == 1:
        return True
    if not f & 1:
        return False
    x = 0b10
    h = x
    for _ in range(n // 2):
        h = pmulmod(h, h, f)
        if pgcd(f, h ^ x) != 1:
            return False
    return True


def least_irreducible(n: int) -> int:
    """Least irreducible polynomial of degree n with nonzero constant term.

    For n = 1 this is x + 1: the polynomial x is excluded so that every
    modulus has x invertible.
    """
    for f in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(f):
            return f
    raise ValueError(f"no irreducible polynomial of degree {n}")  # unreachable


def parity(v: int) -> int:
    return bin(v).count("1") & 1


class LinearMap:
    """A GF(2)-linear map GF(2)^n -> GF(2)^m given by column images.

    The echelon form built at construction time makes ``solve`` and
    membership tests O(n) bit operations.
    """

    __slots__ = ("cols", "n", "_pivots", "_kernel")

    def __init__(self, cols: list[int]):
        self.cols = list(cols)
        self.n = len(self.cols)
        pivots: dict[int, tuple[int, int]] = {}
        kernel = []
        for i, col in enumerate(self.cols):
            v, c = col, 1 << i
            while v:
                hb = v.bit_length() - 1
                piv = pivots.get(hb)
                if piv is None:
                    break
                v ^= piv[0]
                c ^= piv[1]
            if v:
                pivots[v.bit_length() - 1] = (v, c)
            else:
                kernel.append(c)
        self._pivots = pivots
        self._kernel = kernel

    @classmethod
    def from_function(cls, fn, n: int) -> "LinearMap":
        return cls([fn(1 << i) for i in range(n)])

    def __call__(self, v: int) -> int:
        out = 0
        cols = self.cols
        i = 0
        while v:
            if v & 1:
                out ^= cols[i]
            v >>= 1
            i += 1
        return out

    @property
    def rank(self) -> int:
        return len(self._pivots)

    def image_basis(self) -> list[int]:
        return [v for v, _ in self._pivots.values()]

    def kernel(self) -> list[int]:
        """A basis of the kernel."""
        return list(self._kernel)

    def solve(self, b: int) -> int | None:
        """Some x with self(x) == b, or None when b is not in the image."""
        x = 0
        pivots = self._pivots
        while b:
            piv = pivots.get(b.bit_length() - 1)
            if piv is None:
                return None
            b ^= piv[0]
            x ^= piv[1]
        return x

    def in_image(self, b: int) -> bool:
        pivots = self._pivots
        while b:
            piv = pivots.get(b.bit_length() - 1)
            if piv is None:
                return False
            b ^= piv[0]
        return True

    def image_annihilator(self, m: int) -> list[int]:
        """Masks y_j with parity(y_j & v) == 0 for all v in the image.

        b lies in the image iff every mask has even overlap with b.
        """
        rows = transpose(self.cols, m)
        return LinearMap(rows).kernel()


def transpose(cols: list[int], m: int) -> list[int]:
    """Transpose an m x len(cols) bit matrix given by columns."""
    rows = []
    for j in range(m):
        r = 0
        for i, c in enumerate(cols):
            if (c >> j) & 1:
                r |= 1 << i
        rows.append(r)
    return rows


def span(basis: list[int]) -> list[int]:
    """All 2^len(basis) elements; entry i sums basis[j] over the set bits j of i."""
    out = [0]
    for b in basis:
        out += [v ^ b for v in out]
    return out
