"""Hot loops over whole fields: point counts and trace sweeps.

Each kernel has a numba implementation and a chunked pure-numpy one with
identical results. Numba is used when it imports and SS3_DISABLE_NUMBA is
unset (or "0"); ``BACKEND`` records the choice. Field elements are int64,
so the degree must stay below 32.
"""

from __future__ import annotations

import os

import numpy as np

_CHUNK = 1 << 18


def _want_numba() -> bool:
    if os.environ.get("SS3_DISABLE_NUMBA", "0") not in ("", "0"):
        return False
    try:
        import numba  # noqa: F401
    except ImportError:
        return False
    return True


# -- numpy path -------------------------------------------------------------------


def np_mul(a, b, modulus: int, n: int):
    """Elementwise product in GF(2^n); either argument may be a scalar."""
    a = np.asarray(a, dtype=np.int64)
    if np.isscalar(b) or np.ndim(b) == 0:
        b = int(b)
        r = np.zeros(np.broadcast(a).shape, dtype=np.int64)
        a = a.copy()
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            a ^= ((a >> n) & 1) * modulus
        return r
    b = np.asarray(b, dtype=np.int64).copy()
    a, b = np.broadcast_arrays(a, b)
    a = a.copy()
    b = b.copy()
    r = np.zeros(a.shape, dtype=np.int64)
    for _ in range(n):
        r ^= a * (b & 1)
        b >>= 1
        a <<= 1
        a ^= ((a >> n) & 1) * modulus
    return r


def np_pow(a, e: int, modulus: int, n: int):
    a = np.asarray(a, dtype=np.int64)
    r = np.ones(a.shape, dtype=np.int64)
    while e:
        if e & 1:
            r = np_mul(r, a, modulus, n)
        a = np_mul(a, a, modulus, n)
        e >>= 1
    return r


def np_parity(v):
    return (np.bitwise_count(v) & 1).astype(np.int64)


def _np_poly_values(x, coeffs, exps, modulus, n):
    acc = np.zeros(x.shape, dtype=np.int64)
    for c, e in zip(coeffs, exps):
        if c == 0:
            continue
        acc ^= np_mul(np_pow(x, int(e), modulus, n), int(c), modulus, n)
    return acc


def _np_trace_values(coeffs, exps, tmask, modulus, n):
    out = np.empty(1 << n, dtype=np.int8)
    for lo in range(0, 1 << n, _CHUNK):
        x = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.int64)
        out[lo : lo + x.size] = np_parity(_np_poly_values(x, coeffs, exps, modulus, n) & tmask)
    return out


def _np_count_trace_zero(coeffs, exps, tmask, modulus, n):
    return int((_np_trace_values(coeffs, exps, tmask, modulus, n) == 0).sum())


def _np_count_cubic_in_image(d, e, masks, modulus, n):
    total = 0
    for lo in range(0, 1 << n, _CHUNK):
        x = np.arange(lo, min(lo + _CHUNK, 1 << n), dtype=np.int64)
        x2 = np_mul(x, x, modulus, n)
        rhs = np_mul(x2, x, modulus, n) ^ np_mul(x2, d, modulus, n) ^ e
        ok = np.ones(x.shape, dtype=bool)
        for m in masks:
            ok &= np_parity(rhs & m) == 0
        total += int(ok.sum())
    return total


def _np_fermat_count(modulus, n):
    q = 1 << n
    x = np.arange(1, q, dtype=np.int64)
    cubes = np_pow(x, 3, modulus, n)
    hits = np.bincount(cubes, minlength=q)
    hits[0] = 0
    total = 0
    for c in cubes:
        total += int(hits[cubes ^ c].sum())
    return total


# -- numba path -------------------------------------------------------------------


def _build_numba():
    from numba import njit

    @njit(cache=True)
    def mul(a, b, modulus, n):
        r = 0
        while b:
            if b & 1:
                r ^= a
            b >>= 1
            a <<= 1
            if (a >> n) & 1:
                a ^= modulus
        return r

    @njit(cache=True)
    def power(a, e, modulus, n):
        r = 1
        while e:
            if e & 1:
                r = mul(r, a, modulus, n)
            a = mul(a, a, modulus, n)
            e >>= 1
        return r

    @njit(cache=True)
    def parity(v):
        v ^= v >> 32
        v ^= v >> 16
        v ^= v >> 8
        v ^= v >> 4
        v ^= v >> 2
        v ^= v >> 1
        return v & 1

    @njit(cache=True)
    def poly_value(x, coeffs, exps, modulus, n):
        acc = 0
        for i in range(coeffs.shape[0]):
            if coeffs[i] != 0:
                acc ^= mul(power(x, exps[i], modulus, n), coeffs[i], modulus, n)
        return acc

    @njit(cache=True)
    def trace_values(coeffs, exps, tmask, modulus, n):
        q = 1 << n
        out = np.empty(q, dtype=np.int8)
        for x in range(q):
            out[x] = parity(poly_value(x, coeffs, exps, modulus, n) & tmask)
        return out

    @njit(cache=True)
    def count_trace_zero(coeffs, exps, tmask, modulus, n):
        q = 1 << n
        total = 0
        for x in range(q):
            if parity(poly_value(x, coeffs, exps, modulus, n) & tmask) == 0:
                total += 1
        return total

    @njit(cache=True)
    def count_cubic_in_image(d, e, masks, modulus, n):
        q = 1 << n
        total = 0
        for x in range(q):
            x2 = mul(x, x, modulus, n)
            rhs = mul(x2, x, modulus, n) ^ mul(x2, d, modulus, n) ^ e
            ok = True
            for j in range(masks.shape[0]):
                if parity(rhs & masks[j]):
                    ok = False
                    break
            if ok:
                total += 1
        return total

    @njit(cache=True)
    def fermat_count(modulus, n):
        q = 1 << n
        cubes = np.empty(q, dtype=np.int64)
        hits = np.zeros(q, dtype=np.int64)
        for x in range(1, q):
            c = power(x, 3, modulus, n)
            cubes[x] = c
            hits[c] += 1
        total = 0
        for x in range(1, q):
            for y in range(1, q):
                s = cubes[x] ^ cubes[y]
                if s != 0:
                    total += hits[s]
        return total

    return trace_values, count_trace_zero, count_cubic_in_image, fermat_count


USE_NUMBA = _want_numba()
BACKEND = "numba" if USE_NUMBA else "numpy"

if USE_NUMBA:
    _nb_trace_values, _nb_count_trace_zero, _nb_count_cubic_in_image, _nb_fermat = _build_numba()


def _arrays(coeffs, exps):
    return np.asarray(coeffs, dtype=np.int64), np.asarray(exps, dtype=np.int64)


def trace_values(coeffs, exps, tmask: int, modulus: int, n: int) -> np.ndarray:
    """Tr(sum c_i x^e_i) for every x in GF(2^n), indexed by x."""
    if USE_NUMBA:
        return _nb_trace_values(*_arrays(coeffs, exps), tmask, modulus, n)
    return _np_trace_values(coeffs, exps, tmask, modulus, n)


def count_trace_zero(coeffs, exps, tmask: int, modulus: int, n: int) -> int:
    """#{x in GF(2^n) : Tr(sum c_i x^e_i) = 0}."""
    if USE_NUMBA:
        return int(_nb_count_trace_zero(*_arrays(coeffs, exps), tmask, modulus, n))
    return _np_count_trace_zero(coeffs, exps, tmask, modulus, n)


def count_cubic_in_image(d: int, e: int, masks, modulus: int, n: int) -> int:
    """#{x : x^3 + d x^2 + e has even overlap with every mask}."""
    masks = np.asarray(list(masks), dtype=np.int64)
    if USE_NUMBA:
        return int(_nb_count_cubic_in_image(d, e, masks, modulus, n))
    return _np_count_cubic_in_image(d, e, masks, modulus, n)


def fermat_count(modulus: int, n: int) -> int:
    """#{(x, y, z) in (k*)^3 : x^3 + y^3 + z^3 = 0} by direct enumeration."""
    if USE_NUMBA:
        return int(_nb_fermat(modulus, n))
    return _np_fermat_count(modulus, n)
