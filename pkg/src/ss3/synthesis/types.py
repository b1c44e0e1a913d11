"""Which quotient configurations occur for each quartic type.

A configuration is a tuple of isogeny labels: one label over k3 for the
cubic type, a pair (label over k, label over k2) for the quadratic type,
and a sorted triple of labels over k for split quartics. The non-cube
classes E_a, E_a' are written Enc, Enc'.
"""

from __future__ import annotations

import itertools

from ss3.elliptic import frobenius_trace, isogeny_labels, twist_label
from ss3.quartic import CUBIC, QUADRATIC, SPLIT, WeilPoly, weil_from_classes

_ISOG = {"Ea": "Enc", "Ea'": "Enc'"}


def isogeny_label(label: str) -> str:
    return _ISOG.get(label, label)


def _sorted(labels) -> tuple[str, ...]:
    return tuple(sorted(labels))


def bitwists(triple, n: int) -> set[tuple[str, ...]]:
    """The triple together with all triples obtained by twisting exactly two members."""
    out = {_sorted(triple)}
    for i, j in itertools.combinations(range(3), 2):
        t = list(triple)
        t[i] = twist_label(t[i], n)
        t[j] = twist_label(t[j], n)
        out.add(_sorted(t))
    return out


def cubic_attained(label: str, n: int) -> bool:
    if n == 2 and label == "E1'":
        return False
    if n == 1 and label == "H":
        return False
    return True


_Q16_PAIRS = {("E1", "E1'"), ("E1'", "E1")}
_Q8_PAIRS = {("H", "E1"), ("H'", "E1'")}
_Q4_PAIRS = {("E1", "Enc'"), ("E1'", "Enc"), ("Enc", "E1'"), ("Enc'", "E1")}
_Q4_CUBIC_LIKE = {"E0", "E1", "E1'"}
_Q2_ATTAINED = {("E1", "Enc"), ("E1", "Enc'"), ("H", "Enc'"), ("H'", "Enc")}


def quadratic_attained(pair: tuple[str, str], n: int) -> bool:
    E, F = pair
    if n == 4:
        return pair not in _Q16_PAIRS
    if n == 3:
        return pair not in _Q8_PAIRS
    if n == 2:
        if E in _Q4_CUBIC_LIKE and F in _Q4_CUBIC_LIKE:
            return False
        return pair not in _Q4_PAIRS
    if n == 1:
        return pair in _Q2_ATTAINED
    return True


def split_attained(triple, n: int) -> bool:
    t = _sorted(triple)
    if n == 1:
        return False
    if n == 6:
        return t not in bitwists(("E1", "E1", "E1'"), n)
    if n == 4:
        if t in bitwists(("E1", "E1", "Enc'"), n):
            return False
        return not all(x in _Q4_CUBIC_LIKE for x in t)
    if n == 3:
        return t not in bitwists(("H", "H", "H"), n)
    if n == 2:
        return t in bitwists(("E0", "Enc", "Enc"), n) | bitwists(("E1", "Enc", "Enc"), n)
    return True


def attained(tag: str, config: tuple[str, ...], n: int) -> bool:
    if tag == SPLIT:
        return split_attained(config, n)
    if tag == QUADRATIC:
        return quadratic_attained(config, n)
    return cubic_attained(config[0], n)


def configurations(tag: str, n: int) -> list[tuple[str, ...]]:
    if tag == SPLIT:
        return [tuple(c) for c in itertools.combinations_with_replacement(sorted(isogeny_labels(n)), 3)]
    if tag == QUADRATIC:
        return [(E, F) for E in isogeny_labels(n) for F in isogeny_labels(2 * n)]
    return [(X,) for X in isogeny_labels(3 * n)]


def config_weil(tag: str, config: tuple[str, ...], n: int) -> WeilPoly:
    return weil_from_classes(tag, list(config), n)


def realizations(wp: WeilPoly, n: int) -> list[tuple[str, tuple[str, ...]]]:
    """All (type, configuration) with this Weil polynomial, split first, then quadratic, then cubic."""
    out = []
    for tag in (SPLIT, QUADRATIC, CUBIC):
        for config in configurations(tag, n):
            if config_weil(tag, config, n) == wp:
                out.append((tag, config))
    return out


def trace_triple(config, n: int) -> tuple[int, ...]:
    return tuple(sorted(frobenius_trace(x, n) for x in config))
