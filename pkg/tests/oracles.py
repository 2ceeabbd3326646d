"""Independent oracles for expected values frozen into the test suite.

Everything here deliberately avoids the package's own construction code
paths: enumeration is a filter over the raw integer product, composability
is checked by walking sources/targets, so agreement with the library is
evidence rather than tautology.
"""

from __future__ import annotations

import itertools


def ok_wtuple(head, pairs) -> bool:
    """The cell constraints, expressed as one flat predicate."""
    above = head
    for i, j in pairs:
        if j > i:
            return False
        if i == j:
            if above != 0:
                return False
        elif above >= i - j:
            return False
        above = i
    return True


def brute_wcells(level: int, bound: int):
    """All valid (head, spine) tuples with entries <= bound, by filtering
    the full cartesian product.  Returns a sorted list of plain tuples
    (ints at level 0)."""
    if level == 0:
        return list(range(bound + 1))
    entries = range(bound + 1)
    out = []
    for head in entries:
        for flat in itertools.product(entries, repeat=2 * level):
            pairs = tuple((flat[2 * k], flat[2 * k + 1]) for k in range(level))
            if ok_wtuple(head, pairs):
                out.append((head, pairs))
    out.sort()
    return out


def brute_composable_pairs(cells, p, source, target, level_of):
    """All ordered pairs (a, c) with s^(l-p)(c) == t^(l-p)(a), found by
    actually iterating the boundary maps.  ``cells`` must share one level."""
    def walk(cell, step, depth):
        for _ in range(depth):
            cell = step(cell)
        return cell

    out = []
    for a in cells:
        l = level_of(a)
        for c in cells:
            if level_of(c) != l:
                continue
            k = l - p
            if walk(a, target, k) == walk(c, source, k):
                out.append((a, c))
    return out


def random_wcell(rng, level: int, bound: int):
    """A uniform-ish random valid cell, built bottom-up so every choice
    range is already legal.  Returns (head, spine) with spine top-down."""
    if level == 0:
        return rng.randint(0, bound)
    i = rng.randint(0, bound)
    j = rng.randint(0, i)
    pairs = [(i, j)]
    for _ in range(level - 1):
        i_top, j_top = pairs[0]
        nxt = 0 if i_top == j_top else rng.randint(0, min(i_top - j_top - 1, bound))
        pairs.insert(0, (nxt, rng.randint(0, nxt)))
    i_top, j_top = pairs[0]
    head = 0 if i_top == j_top else rng.randint(0, min(i_top - j_top - 1, bound))
    return head, tuple(pairs)


def random_composable_wpair(rng, level: int, p: int, bound: int):
    """A random pair ((head, spine), (head, spine)) composable at depth p:
    the outer cell is regrown above p over the inner cell's lower spine."""
    head_a, spine_a = random_wcell(rng, level, bound)
    top = level - 1 - p
    i_p = spine_a[top][1]  # outer's i at level p must meet inner's j
    j_p = rng.randint(0, i_p)
    pairs = [(i_p, j_p)] + list(spine_a[top + 1 :])
    for _ in range(top):
        i_top, j_top = pairs[0]
        nxt = 0 if i_top == j_top else rng.randint(0, min(i_top - j_top - 1, bound))
        pairs.insert(0, (nxt, rng.randint(0, nxt)))
    i_top, j_top = pairs[0]
    head_c = 0 if i_top == j_top else rng.randint(0, min(i_top - j_top - 1, bound))
    return (head_a, spine_a), (head_c, tuple(pairs))
