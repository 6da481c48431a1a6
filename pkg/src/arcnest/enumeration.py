"""Generating functions for PTR-admissible objects and brute-force oracles.

Markers: ``x`` closers of the first OCOC sub-block, ``y`` openers of the
second sub-block, ``z`` connecting arcs, ``p`` fixed points, ``s`` size.
Each class is a sequence construction ``1 / (1 - B)`` over its indecomposable
blocks ``B``.
"""

from __future__ import annotations

import os
from dataclasses import dataclass
from math import comb, factorial

from .diagram import Arc, ArcDiagram, ObjectClass, from_blocks, from_permutation
from .series import TruncatedSeries
from .stats import max_crossing, max_nesting
from .structure import is_admissible

# -- block series ------------------------------------------------------------


def _ococ_core(n, k, j):
    return factorial(n) * comb(n + k, k) * factorial(k) * comb(n + j, j) * factorial(j)


def _opener_choice(n, k):
    # k proper closers plus a transitory's closer; the transitory may not close itself
    return comb(n + k, k) * factorial(k) * k + comb(n + k, k + 1) * factorial(k + 1)


def _triples(budget, k0=1, j0=1):
    """(n, k, j) with n >= 1, k >= k0, j >= j0 and 2(n+k+j) <= budget."""
    for n in range(1, budget // 2 + 1):
        for k in range(k0, budget // 2 - n + 1):
            for j in range(j0, budget // 2 - n - k + 1):
                yield n, k, j


def series_O(N: int) -> TruncatedSeries:
    """Type OC partial matchings with ``l`` fixed points strictly inside."""
    terms = {}
    for n in range(1, N // 2 + 1):
        for l in range(0, N - 2 * n + 1):
            terms[(0, 0, n, l, 2 * n + l)] = factorial(n) * comb(2 * n - 2 + l, l)
    return TruncatedSeries(N, terms)


def series_T(N: int) -> TruncatedSeries:
    terms = {}
    for n, k, j in _triples(N):
        base = _ococ_core(n, k, j)
        size = 2 * (n + k + j)
        for l in range(0, N - size + 1):
            terms[(k, j, n, l, size + l)] = base * comb(2 * (n + k + j - 1) + l, l)
    return TruncatedSeries(N, terms)


def _ps(N):
    return TruncatedSeries.monomial(N, p=1, s=1)


def _sum_n_factorial(N, weight=lambda n: 1):
    return TruncatedSeries(N, {(0, 0, n, 0, 2 * n): factorial(n) * weight(n)
                               for n in range(1, N // 2 + 1)})


def seq_matchings(N: int) -> list[int]:
    f = (_ps(N) + series_O(N) + series_T(N)).geometric()
    return f.sequence()


def series_O_E(N: int) -> TruncatedSeries:
    return (TruncatedSeries.one(N) + _ps(N)) * _sum_n_factorial(N)


def _ococ_sum(N, k0, j0, weight=_ococ_core):
    terms = {}
    for n, k, j in _triples(N, k0, j0):
        terms[(k, j, n, 0, 2 * (n + k + j))] = weight(n, k, j)
    return TruncatedSeries(N, terms)


def series_T_E(N: int) -> TruncatedSeries:
    ps = _ps(N)
    return (_ococ_sum(N, 1, 1)
            + 2 * ps * _ococ_sum(N, 0, 1)
            + ps * ps * _ococ_sum(N, 0, 0))


def seq_enhanced_matchings(N: int) -> list[int]:
    f = (_ps(N) + series_O_E(N) + series_T_E(N)).geometric()
    return f.sequence()


def series_O_S(N: int) -> TruncatedSeries:
    return series_O(N)


def series_T_S(N: int) -> TruncatedSeries:
    """OCOC partitions: the middle closer-opener switch is proper or a transitory."""
    terms = {}
    for n, k, j in _triples(N + 1):
        base = _ococ_core(n, k, j)
        size = 2 * (n + k + j)
        g = 2 * (n + k + j - 1)
        for l in range(0, N - size + 2):
            if size + l <= N:
                key = (k, j, n, l, size + l)
                terms[key] = terms.get(key, 0) + base * comb(g + l, l)
            key = (k, j, n, l, size + l - 1)
            terms[key] = terms.get(key, 0) + base * comb(g + l - 1, l)
    return TruncatedSeries(N, terms)


def series_N_S(N: int) -> TruncatedSeries:
    """Indecomposable admissible partitions: chains of OC/OCOC blocks glued
    at transitories, plus a lone fixed point.

    Computed as ``ps + s * Q / (1 - Q)`` with ``Q = (O_S + T_S) / s``.
    """
    blocks = series_O_S(N + 1) + series_T_S(N + 1)
    q = blocks.shift_s(-1).truncate(N)
    chains = (q.geometric() - 1).shift_s(1).truncate(N)
    return _ps(N) + chains


def seq_set_partitions(N: int) -> list[int]:
    return series_N_S(N).geometric().sequence()


def series_O_SE(N: int) -> TruncatedSeries:
    s = TruncatedSeries.monomial(N, s=1)
    return (1 + s) * _sum_n_factorial(N) + s * _sum_n_factorial(N, weight=lambda n: n)


def series_T_SE(N: int) -> TruncatedSeries:
    s = TruncatedSeries.monomial(N, s=1)
    s2 = s * s
    with_t = lambda n, k, j: factorial(n) * _opener_choice(n, k) * comb(n + j, j) * factorial(j)
    two_t = lambda n, k, j: factorial(n) * _opener_choice(n, k) * _opener_choice(n, j)
    return (_ococ_sum(N, 1, 1)
            + 2 * s * _ococ_sum(N, 0, 1)
            + s2 * _ococ_sum(N, 0, 0)
            + 2 * s * _ococ_sum(N, 0, 1, with_t)
            + 2 * s2 * _ococ_sum(N, 0, 0, with_t)
            + s2 * _ococ_sum(N, 0, 0, two_t))


def seq_enhanced_set_partitions(N: int) -> list[int]:
    s = TruncatedSeries.monomial(N, s=1)
    return (s + series_O_SE(N) + series_T_SE(N)).geometric().sequence()


@dataclass(frozen=True)
class SequenceResult:
    cls: ObjectClass
    enhanced: bool
    terms: tuple[int, ...]


def sequence(cls: ObjectClass, enhanced: bool, terms: int) -> SequenceResult:
    """First ``terms`` counts (sizes 0..terms-1) of admissible objects."""
    if terms < 1:
        raise ValueError("need at least one term")
    N = terms - 1
    if cls is ObjectClass.MATCHING:
        seq = seq_enhanced_matchings(N) if enhanced else seq_matchings(N)
    elif cls is ObjectClass.SET_PARTITION:
        seq = seq_enhanced_set_partitions(N) if enhanced else seq_set_partitions(N)
    else:
        raise ValueError("no generating function for permutations; use brute_force_count")
    return SequenceResult(cls, enhanced, tuple(seq))


# -- exhaustive enumeration --------------------------------------------------


def _limit(max_n):
    if max_n is None:
        max_n = int(os.environ.get("ARCNEST_MAX_N", "10"))
    return max_n


def involutions(n: int):
    """All partial matchings of ``1..n`` as lists of arcs."""
    def rec(free):
        if not free:
            yield []
            return
        v, rest = free[0], free[1:]
        yield from rec(rest)
        for i, w in enumerate(rest):
            for tail in rec(rest[:i] + rest[i + 1:]):
                yield [Arc(v, w)] + tail
    yield from rec(list(range(1, n + 1)))


def set_partitions(n: int):
    """All set partitions of ``1..n`` as lists of blocks."""
    def rec(v, blocks):
        if v > n:
            yield [list(b) for b in blocks]
            return
        for b in blocks:
            b.append(v)
            yield from rec(v + 1, blocks)
            b.pop()
        blocks.append([v])
        yield from rec(v + 1, blocks)
        blocks.pop()
    yield from rec(1, [])


def objects(cls: ObjectClass, n: int, perfect: bool = False):
    """Every diagram of size ``n`` in ``cls``."""
    from itertools import permutations
    if cls is ObjectClass.MATCHING:
        for arcs in involutions(n):
            if not perfect or 2 * len(arcs) == n:
                yield ArcDiagram(n, arcs)
    elif cls is ObjectClass.SET_PARTITION:
        for blocks in set_partitions(n):
            yield from_blocks(n, blocks)
    else:
        for sigma in permutations(range(1, n + 1)):
            yield from_permutation(sigma)


def brute_force_count(cls: ObjectClass, enhanced: bool, n: int, max_n: int | None = None) -> int:
    """Number of admissible objects of size ``n``, by exhaustive search."""
    if n > _limit(max_n):
        raise ValueError(f"n={n} exceeds the exhaustive-search cap {_limit(max_n)} (ARCNEST_MAX_N)")
    return sum(is_admissible(cls, d, enhanced).admissible for d in objects(cls, n))


def joint_table(cls: ObjectClass, n: int, admissible_only: bool = False,
                enhanced: bool | None = None, perfect: bool | None = None,
                max_n: int | None = None) -> list[list[int]]:
    """``table[i][j]`` = number of objects with ``cr = i`` and ``ne = j``.

    Matchings default to perfect matchings on ``n`` points.
    """
    if n > _limit(max_n):
        raise ValueError(f"n={n} exceeds the exhaustive-search cap {_limit(max_n)} (ARCNEST_MAX_N)")
    if perfect is None:
        perfect = cls is ObjectClass.MATCHING
    counts = {}
    for d in objects(cls, n, perfect):
        if admissible_only and not is_admissible(cls, d, enhanced).admissible:
            continue
        key = (max_crossing(cls, d, enhanced), max_nesting(cls, d, enhanced))
        counts[key] = counts.get(key, 0) + 1
    size = max((max(k) for k in counts), default=0) + 1
    table = [[0] * size for _ in range(size)]
    for (i, j), c in counts.items():
        table[i][j] = c
    if admissible_only and any(table[i][j] != table[j][i] for i in range(size) for j in range(size)):
        raise AssertionError(f"joint table of admissible {cls.name} at n={n} is not symmetric")
    return table
