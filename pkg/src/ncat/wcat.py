"""The index-tuple category W.

A level-l cell is a head entry together with a spine of (i, j) pairs, one
pair per level below l, stored top-down: spine[0] sits at level l-1,
spine[-1] at level 0.  Level-0 cells are bare non-negative integers.

Constraints on (head, spine), writing next(k) for the entry directly above
level k (the head for the top pair, i_{k+1} otherwise):

  * every entry is a non-negative integer,
  * j_k <= i_k at every level,
  * next(k) <  i_k - j_k   when i_k > j_k,
  * next(k) == 0           when i_k == j_k   (the degenerate case; this
    relaxation is what lets identity cells exist at all).

Composition at depth p adds heads and all entries above p, splices the
pair at p, and requires everything below p to agree literally.  All the
category laws hold for W with literal equality of cells.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstraintViolation, InvalidArguments, NoSource, NotComposable

__all__ = [
    "WCell",
    "w_make",
    "w_source",
    "w_target",
    "w_identity",
    "w_compose",
    "w_composable",
    "w_enumerate",
    "w_render",
    "WCategory",
]


@dataclass(frozen=True, slots=True)
class WCell:
    """A level >= 1 cell: head entry plus top-down spine of (i, j) pairs."""

    head: int
    spine: tuple[tuple[int, int], ...]

    @property
    def level(self) -> int:
        return len(self.spine)

    def __str__(self) -> str:
        return w_render(self)

    def __repr__(self) -> str:
        return f"WCell({self.head}, {list(self.spine)})"


def _as_entry(value, where):
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConstraintViolation(f"{where} must be an integer, got {value!r}")
    if value < 0:
        raise ConstraintViolation(f"{where} must be non-negative, got {value}")
    return value


def w_make(head: int, spine) -> WCell:
    """Validate (head, spine) and build the cell; spine is top-down.

    Raises ConstraintViolation naming the offending level otherwise.
    """
    pairs = []
    for pos, pair in enumerate(spine):
        if len(pair) != 2:
            raise ConstraintViolation(f"spine entry {pos} is not a pair")
        pairs.append(tuple(pair))
    level = len(pairs)
    if level == 0:
        raise ConstraintViolation("spine must be non-empty; level-0 cells are bare integers")
    _as_entry(head, "head")
    for pos, (i, j) in enumerate(pairs):
        k = level - 1 - pos  # the level this pair sits at
        _as_entry(i, f"i_{k}")
        _as_entry(j, f"j_{k}")
        if j > i:
            raise ConstraintViolation(f"j_{k}={j} exceeds i_{k}={i}", level=k)
        above = head if pos == 0 else pairs[pos - 1][0]
        if i == j:
            if above != 0:
                raise ConstraintViolation(
                    f"entry above a degenerate pair (i_{k}=j_{k}={i}) must be 0, got {above}",
                    level=k,
                )
        elif above >= i - j:
            raise ConstraintViolation(
                f"entry above level {k} must be < i_{k}-j_{k}={i - j}, got {above}",
                level=k,
            )
    return WCell(head, tuple(pairs))


def _require_cell(q) -> WCell:
    if not isinstance(q, WCell):
        raise InvalidArguments(f"expected a WCell, got {q!r}")
    return q


def w_source(q: WCell):
    """Drop the head, promote i_{l-1}.  At level 1 this is a bare integer."""
    if isinstance(q, int):
        raise NoSource("level-0 cells have no source")
    _require_cell(q)
    i, _ = q.spine[0]
    if q.level == 1:
        return i
    return WCell(i, q.spine[1:])


def w_target(q: WCell):
    """Drop the head, promote j_{l-1}.  At level 1 this is a bare integer."""
    if isinstance(q, int):
        raise NoSource("level-0 cells have no target")
    _require_cell(q)
    _, j = q.spine[0]
    if q.level == 1:
        return j
    return WCell(j, q.spine[1:])


def w_identity(q) -> WCell:
    """Head becomes a degenerate pair under a fresh 0 head."""
    if isinstance(q, bool):
        raise InvalidArguments("expected a cell, got a bool")
    if isinstance(q, int):
        _as_entry(q, "cell")
        return WCell(0, ((q, q),))
    _require_cell(q)
    return WCell(0, ((q.head, q.head),) + q.spine)


def w_composable(p: int, q, r) -> bool:
    """True iff ``r o_p q`` is defined (q inner, r outer)."""
    try:
        _check_composable(p, q, r)
    except NotComposable:
        return False
    return True


def _check_composable(p: int, q: WCell, r: WCell) -> None:
    _require_cell(q)
    _require_cell(r)
    l = q.level
    if r.level != l:
        raise InvalidArguments(f"levels differ: {l} vs {r.level}")
    if not 0 <= p < l:
        raise InvalidArguments(f"depth p={p} out of range for level {l}")
    top = l - 1 - p
    if q.spine[top][1] != r.spine[top][0]:
        raise NotComposable(p, f"j_p of inner is {q.spine[top][1]}, i_p of outer is {r.spine[top][0]}")
    if q.spine[top + 1 :] != r.spine[top + 1 :]:
        raise NotComposable(p, "spines below p differ")


def w_compose(p: int, q: WCell, r: WCell) -> WCell:
    """The composite ``r o_p q``: heads and entries above p add, the pairs
    at p splice to (i_p of q, j_p of r), everything below p is shared.

    The result always satisfies the cell constraints again: above any
    non-degenerate level both strict bounds add, and a degenerate level
    forces both summands above it to be 0.
    """
    _check_composable(p, q, r)
    l = q.level
    top = l - 1 - p
    head = q.head + r.head
    spine = [
        (q.spine[pos][0] + r.spine[pos][0], q.spine[pos][1] + r.spine[pos][1])
        for pos in range(top)
    ]
    spine.append((q.spine[top][0], r.spine[top][1]))
    spine.extend(q.spine[top + 1 :])
    return w_make(head, spine)


def w_enumerate(level: int, bound: int) -> list:
    """All cells of the given level with every entry <= bound, sorted
    lexicographically by (head, spine).  Level 0 gives bare integers.
    """
    if level < 0 or bound < 0:
        raise InvalidArguments("level and bound must be non-negative")
    if level == 0:
        return list(range(bound + 1))
    out = []
    for below in w_enumerate(level - 1, bound):
        if isinstance(below, int):
            i, rest = below, ()
        else:
            i, rest = below.head, below.spine
        for j in range(min(i, bound) + 1):
            if i == j:
                out.append(WCell(0, ((i, j),) + rest))
            else:
                for head in range(min(i - j - 1, bound) + 1):
                    out.append(WCell(head, ((i, j),) + rest))
    out.sort(key=lambda c: (c.head, c.spine))
    return out


def w_render(q) -> str:
    """Text form ``(h, [i_{l-1} .. i_0 ; j_{l-1} .. j_0])``; plain digits at level 0."""
    if isinstance(q, int):
        return str(q)
    _require_cell(q)
    front = " ".join(str(i) for i, _ in q.spine)
    back = " ".join(str(j) for _, j in q.spine)
    return f"({q.head}, [{front} ; {back}])"


class WCategory:
    """W packaged behind the generic category interface used by the
    axiom engine.  ``bound`` caps the entries that cells() enumerates.
    """

    name = "w"

    def __init__(self, max_level: int = 3, bound: int = 3):
        self.max_level = max_level
        self.bound = bound

    def cells(self, level: int) -> list:
        if level > self.max_level:
            return []
        return w_enumerate(level, self.bound)

    def level_of(self, cell) -> int:
        return 0 if isinstance(cell, int) else cell.level

    def source(self, cell):
        return w_source(cell)

    def target(self, cell):
        return w_target(cell)

    def identity(self, cell):
        return w_identity(cell)

    def compose(self, p, a, c):
        return w_compose(p, a, c)

    def normalize(self, cell):
        return cell  # W's laws hold literally

    def render(self, cell) -> str:
        return w_render(cell)
