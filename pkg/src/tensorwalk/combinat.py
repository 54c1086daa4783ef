"""Exhaustive enumeration oracles.

Set partitions with crossing conditions, inversion sequences avoiding weakly
decreasing triples, height-2 tableau walks in the Young lattice, and
rectangular three-row tableaux.  These are deliberately naive; they exist to
cross-check the walk and recurrence engines.
"""
from __future__ import annotations

import os
from bisect import bisect_left
from collections import Counter
from functools import lru_cache
from itertools import product
from math import factorial

DEFAULT_MAX_N = 12
DEFAULT_MAX_M = 4
MAX_TABLEAU_N = 14


class EnumerationTooLarge(ValueError):
    pass


def max_n() -> int:
    """Enumeration guard; the TENSORWALK_MAX_N environment variable raises it."""
    raw = os.environ.get("TENSORWALK_MAX_N")
    return int(raw) if raw else DEFAULT_MAX_N


def _guard(n: int, limit: int | None = None) -> None:
    limit = max_n() if limit is None else limit
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > limit:
        raise EnumerationTooLarge(f"n = {n} exceeds the enumeration guard {limit} "
                                  "(set TENSORWALK_MAX_N to raise it)")


# -- set partitions --------------------------------------------------------------

def set_partitions(n: int):
    """Yield restricted growth strings of length n (block labels, first occurrence in order)."""
    if n == 0:
        yield ()
        return
    rgs = [0] * n

    def rec(i: int, top: int):
        if i == n:
            yield tuple(rgs)
            return
        for b in range(top + 2):
            rgs[i] = b
            yield from rec(i + 1, max(top, b))

    rgs[0] = 0
    yield from rec(1, 0)


def blocks_of(rgs) -> list[list[int]]:
    blocks: list[list[int]] = []
    for i, b in enumerate(rgs, start=1):
        if b == len(blocks):
            blocks.append([])
        blocks[b].append(i)
    return blocks


def arcs_of(rgs) -> list[tuple[int, int]]:
    """Standard representation: arcs join numerically adjacent elements of a block."""
    last: dict[int, int] = {}
    arcs = []
    for i, b in enumerate(rgs, start=1):
        if b in last:
            arcs.append((last[b], i))
        last[b] = i
    return arcs


def _lis(seq) -> int:
    tails: list[int] = []
    for v in seq:
        k = bisect_left(tails, v)
        if k == len(tails):
            tails.append(v)
        else:
            tails[k] = v
    return len(tails)


def max_crossing(arcs, enhanced: bool = False) -> int:
    """Largest k with a k-crossing (i_1<..<i_k < j_1<..<j_k; <= j_1 when enhanced)."""
    arcs = sorted(arcs)
    best = 0
    for i0, j0 in arcs:
        # later arcs in the crossing start after i0, no later than j0, and end after j0
        ends = [j for i, j in arcs if i0 < i and (i <= j0 if enhanced else i < j0) and j > j0]
        best = max(best, 1 + _lis(ends))
    return best


@lru_cache(maxsize=None)
def _partition_stats(n: int) -> Counter:
    stats: Counter = Counter()
    for rgs in set_partitions(n):
        arcs = arcs_of(rgs)
        sizes = Counter(rgs)
        has_singleton = any(v == 1 for v in sizes.values())
        stats[has_singleton, max_crossing(arcs), max_crossing(arcs, enhanced=True)] += 1
    return stats


def count_set_partitions(n: int, forbid_singletons: bool = False,
                         max_crossing: int | None = None,
                         max_enhanced_crossing: int | None = None) -> int:
    """Partitions of [n] with no singleton (if asked), no k-crossing for
    k = max_crossing and no enhanced k-crossing for k = max_enhanced_crossing."""
    _guard(n)
    total = 0
    for (single, cross, enh), count in _partition_stats(n).items():
        if forbid_singletons and single:
            continue
        if max_crossing is not None and cross >= max_crossing:
            continue
        if max_enhanced_crossing is not None and enh >= max_enhanced_crossing:
            continue
        total += count
    return total


# -- inversion sequences ------------------------------------------------------------

def count_inversion_sequences(n: int, forbid_wdec3: bool = False, forbid_fixed: bool = False) -> int:
    """Sequences 1 <= x_i <= i, optionally with no x_i >= x_j >= x_k (i<j<k) and no x_i = i."""
    _guard(n)

    def rec(i: int, top: int, pair: int) -> int:
        # top: largest entry so far; pair: largest x_j ending a weakly decreasing pair
        if i > n:
            return 1
        total = 0
        for x in range(1, i + 1):
            if forbid_fixed and x == i:
                continue
            if forbid_wdec3 and x <= pair:
                continue
            total += rec(i + 1, max(top, x), max(pair, x) if top >= x else pair)
        return total

    return rec(1, 0, 0)


# -- tableau walks in the Young lattice ------------------------------------------------

TABLEAU_KINDS = ("hesitating", "vacillating")


def _add(shape: tuple, row: int, height: int):
    if row >= height:
        return None
    s = list(shape) + [0] * (height - len(shape))
    if row > 0 and s[row] + 1 > s[row - 1]:
        return None
    s[row] += 1
    return tuple(s)


def _remove(shape: tuple, row: int, height: int):
    s = list(shape) + [0] * (height - len(shape))
    if s[row] == 0 or (row + 1 < height and s[row] - 1 < s[row + 1]):
        return None
    s[row] -= 1
    return tuple(s)


def _moves(kind: str, remove_first: bool) -> list[tuple]:
    """Pairs of elementary moves; None means do nothing."""
    pairs = [(None, "add"), ("remove", None)]
    if kind == "vacillating":
        pairs.append((None, None))
    pairs.append(("remove", "add") if kind == "vacillating" and remove_first else ("add", "remove"))
    return pairs


def _apply(op, shape: tuple, height: int):
    """All (row, result) for one elementary move."""
    if op is None:
        return [(None, shape)]
    fn = _add if op == "add" else _remove
    out = []
    for row in range(height):
        res = fn(shape, row, height)
        if res is not None:
            out.append((row, res))
    return out


def _successors(shape: tuple, height: int, kind: str, remove_first: bool, exclude_row1_zero: bool):
    for first, second in _moves(kind, remove_first):
        for r1, mid in _apply(first, shape, height):
            for r2, end in _apply(second, mid, height):
                # add then remove in the first row
                if exclude_row1_zero and (first, second) == ("add", "remove") and r1 == r2 == 0:
                    continue
                yield end


def tableau_endpoint_counts(kind: str, n: int, height: int = 2, exclude_row1_zero: bool = False,
                            remove_first: bool = False) -> dict[tuple, int]:
    """Number of n-step tableau walks from the empty shape, by final shape.

    Shapes are tuples of length ``height``.  Vacillating steps add before they
    remove unless ``remove_first`` is set.
    """
    if kind not in TABLEAU_KINDS:
        raise ValueError(f"unknown tableau kind {kind!r}")
    if height < 1:
        raise ValueError(f"unsupported height {height}")
    _guard(n, max(MAX_TABLEAU_N, max_n()))
    layer = {(0,) * height: 1}
    for _ in range(n):
        nxt: Counter = Counter()
        for shape, c in layer.items():
            for end in _successors(shape, height, kind, remove_first, exclude_row1_zero):
                nxt[end] += c
        layer = dict(nxt)
    return layer


def count_tableau_walks(kind: str, n: int, height: int = 2, shape=(), exclude_row1_zero: bool = False,
                        remove_first: bool = False) -> int:
    shape = tuple(shape) + (0,) * (height - len(tuple(shape)))
    if len(shape) > height:
        raise ValueError(f"shape {shape} has more than {height} rows")
    counts = tableau_endpoint_counts(kind, n, height, exclude_row1_zero, remove_first)
    return counts.get(shape, 0)


# -- rectangular tableaux ---------------------------------------------------------------

def _check_content(m: int, content) -> tuple[int, ...]:
    content = tuple(int(c) for c in content)
    if any(c < 0 for c in content):
        raise ValueError("content entries must be nonnegative")
    if sum(content) != 3 * m:
        raise ValueError(f"content {content} has size {sum(content)}, expected {3 * m}")
    return content


def count_rect_tableaux(m: int, content) -> int:
    """Fillings of shape (m, m, m) with rows strictly and columns weakly increasing.

    Entries equal to v occupy a vertical strip, so this counts chains of
    partitions inside the rectangle growing by strips of the given sizes.
    """
    content = _check_content(m, content)
    layer = {(0, 0, 0): 1}
    for size in content:
        nxt: Counter = Counter()
        for lam, c in layer.items():
            for rows in product((0, 1), repeat=3):
                if sum(rows) != size:
                    continue
                mu = tuple(a + b for a, b in zip(lam, rows))
                if mu[0] <= m and mu[0] >= mu[1] >= mu[2]:
                    nxt[mu] += c
        layer = dict(nxt)
    return layer.get((m, m, m), 0)


def count_rect_tableaux_brute(m: int, content) -> int:
    """Cell-by-cell filling of the m x 3 rectangle; slow, guarded at m <= 4."""
    content = _check_content(m, content)
    if m > DEFAULT_MAX_M:
        raise EnumerationTooLarge(f"m = {m} exceeds the brute-force guard {DEFAULT_MAX_M}")
    cells = [(r, c) for r in range(3) for c in range(m)]
    grid: dict[tuple[int, int], int] = {}
    left = list(content)

    def rec(k: int) -> int:
        if k == len(cells):
            return 1
        r, c = cells[k]
        total = 0
        for v, avail in enumerate(left):
            if not avail:
                continue
            if c > 0 and grid[r, c - 1] >= v:
                continue
            if r > 0 and grid[r - 1, c] > v:
                continue
            left[v] -= 1
            grid[r, c] = v
            total += rec(k + 1)
            left[v] += 1
            del grid[r, c]
        return total

    return rec(0)


def multinomial(*parts: int) -> int:
    out = factorial(sum(parts))
    for p in parts:
        out //= factorial(p)
    return out


QUADRANT_VARIANTS = ("s0", "s1a", "s1b", "s2")


def quadrant_sum(variant: str, n: int) -> int:
    """The multinomial-weighted tableau sums for S_0, S_1 (two forms) and S_2.

    s0:  a ones, b twos, a + b = n.
    s1a: a zeros, b ones, c twos, a + b + c = n.
    s1b: a ones, b twos, c threes, a + b + c = n.
    s2:  a zeros, b ones, c twos, d threes, a + b + c + d = n.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    total = 0
    if variant == "s0":
        for a in range(n + 1):
            b = n - a
            if (a + 2 * b) % 3 == 0:
                total += multinomial(a, b) * count_rect_tableaux((a + 2 * b) // 3, [1] * a + [2] * b)
    elif variant == "s1a":
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                if (b + 2 * c) % 3 == 0:
                    total += multinomial(a, b, c) * count_rect_tableaux((b + 2 * c) // 3, [1] * b + [2] * c)
    elif variant == "s1b":
        for a in range(n + 1):
            for b in range(n - a + 1):
                c = n - a - b
                size = a + 2 * b + 3 * c
                if size % 3 == 0:
                    total += multinomial(a, b, c) * count_rect_tableaux(size // 3, [1] * a + [2] * b + [3] * c)
    elif variant == "s2":
        for a in range(n + 1):
            for b in range(n - a + 1):
                for c in range(n - a - b + 1):
                    d = n - a - b - c
                    size = b + 2 * c + 3 * d
                    if size % 3 == 0:
                        total += multinomial(a, b, c, d) * count_rect_tableaux(
                            size // 3, [1] * b + [2] * c + [3] * d)
    else:
        raise ValueError(f"unknown variant {variant!r}")
    return total
