"""The Morse category X over a flow-data document.

Cells are critical points remembered by *label*:

  Atom(id)    a registered critical point,
  Pt(u)       the single point of a diagonal (identity) moduli space over u,
  Seq(...)    a broken configuration glued from >= 2 pieces.

An XCell is a head label plus a spine of (source, target) label pairs,
top-down, recording which moduli space tower the point lives over.  The
category is almost strict: the laws hold after normalizing labels with a
small confluent rewrite system (see normalize).

x_cells enumerates a level: the registered points of every declared
moduli space at that level, plus one synthesized diagonal cell for each
cell one level down whose home component is a single point — registered
points on positive-dimensional spaces and base points get no diagonal
cell.  Composites (Seq-headed cells) are only enumerated on request,
by closing under composition.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass

from .errors import InvalidArguments, NoSource, NotComposable
from .flowdata import FlowData

__all__ = [
    "Atom",
    "Pt",
    "Seq",
    "Label",
    "normalize",
    "point_like",
    "render_label",
    "label_key",
    "XCell",
    "x_cells",
    "x_source",
    "x_target",
    "x_identity",
    "x_compose",
    "x_composable",
    "x_composable_pairs",
    "x_render",
    "XCategory",
]


@dataclass(frozen=True, slots=True)
class Atom:
    id: str

    def __str__(self) -> str:
        return self.id


@dataclass(frozen=True, slots=True)
class Pt:
    of: "Label"

    def __str__(self) -> str:
        return f"pt({self.of})"


@dataclass(frozen=True, slots=True)
class Seq:
    parts: "tuple[Label, ...]"

    def __post_init__(self):
        if len(self.parts) < 2:
            raise InvalidArguments("a glued label needs at least two parts")

    def __str__(self) -> str:
        return "(" + ", ".join(str(p) for p in self.parts) + ")"


Label = "Atom | Pt | Seq"


def render_label(x) -> str:
    return str(x)


def label_key(x):
    """Total order on labels: atoms, then diagonals, then gluings."""
    if isinstance(x, Atom):
        return (0, x.id)
    if isinstance(x, Pt):
        return (1, label_key(x.of))
    return (2, tuple(label_key(p) for p in x.parts))


def point_like(x, fd: "FlowData | None") -> bool:
    """Structurally index-0: every constituent is either a diagonal point
    or a registered point whose home component is zero-dimensional."""
    if isinstance(x, Pt):
        return True
    if isinstance(x, Atom):
        if fd is None:
            return False
        home = fd.home_of(x.id)
        return home is not None and home.dim == 0
    return all(point_like(p, fd) for p in x.parts)


def normalize(x, fd: "FlowData | None" = None):
    """Canonical form of a label under four reductions:

      (1) gluings flatten:            Seq(.., Seq(a, b), ..) -> Seq(.., a, b, ..)
      (2) diagonal pieces are absorbed by real neighbours:
                                      Seq(.., Pt(u), m, ..) -> Seq(.., m, ..)
      (3) a gluing of diagonals is a diagonal of the gluing:
                                      Seq(Pt(u), Pt(v))     -> Pt(Seq(u, v))
      (4) an immediately repeated point-like block collapses:
                                      Seq(.., B, B, ..)     -> Seq(.., B, ..)

    (4) carries the side condition that the block is point_like — which is
    exactly when the repetition came from gluing along a diagonal — and
    that keeps every rewrite index-neutral.  On labels that arise from
    composing cells over a document the system is confluent; the pipeline
    below applies the rules in one fixed order and reaches the same form
    as any other exhaustive strategy (tested with randomized rewriting).
    """
    if isinstance(x, Atom):
        return x
    if isinstance(x, Pt):
        return Pt(normalize(x.of, fd))
    parts = [normalize(p, fd) for p in x.parts]
    while True:
        before = list(parts)
        # (1) flatten
        flat = []
        for p in parts:
            flat.extend(p.parts) if isinstance(p, Seq) else flat.append(p)
        parts = flat
        # (4) collapse repeated point-like blocks, shortest-leftmost first
        changed = True
        while changed:
            changed = False
            for k in range(1, len(parts) // 2 + 1):
                for i in range(len(parts) - 2 * k + 1):
                    block = parts[i : i + k]
                    if parts[i + k : i + 2 * k] == block and all(
                        point_like(p, fd) for p in block
                    ):
                        del parts[i + k : i + 2 * k]
                        changed = True
                        break
                if changed:
                    break
        # (2) absorb diagonal pieces when a real piece remains
        if any(isinstance(p, Pt) for p in parts) and any(
            not isinstance(p, Pt) for p in parts
        ):
            parts = [p for p in parts if not isinstance(p, Pt)]
        if parts == before:
            break
    if len(parts) == 1:
        return parts[0]
    if all(isinstance(p, Pt) for p in parts):
        # (3); the collapse above already removed equal neighbours
        return Pt(normalize(Seq(tuple(p.of for p in parts)), fd))
    return Seq(tuple(parts))


@dataclass(frozen=True, slots=True)
class XCell:
    """head label over a top-down spine of (source, target) label pairs."""

    head: "Atom | Pt | Seq"
    spine: tuple

    @property
    def level(self) -> int:
        return len(self.spine)

    def key(self):
        return (
            label_key(self.head),
            tuple((label_key(s), label_key(t)) for s, t in self.spine),
        )

    def __str__(self) -> str:
        return x_render(self)


def x_render(cell: XCell) -> str:
    if cell.level == 0:
        return str(cell.head)
    pairs = ", ".join(f"{s}->{t}" for s, t in cell.spine)
    return f"({cell.head}; {pairs})"


def x_source(cell: XCell) -> XCell:
    if cell.level == 0:
        raise NoSource("level-0 cells have no source")
    return XCell(cell.spine[0][0], cell.spine[1:])


def x_target(cell: XCell) -> XCell:
    if cell.level == 0:
        raise NoSource("level-0 cells have no target")
    return XCell(cell.spine[0][1], cell.spine[1:])


def x_identity(cell: XCell) -> XCell:
    """The unique point of the diagonal space over the cell."""
    return XCell(Pt(cell.head), ((cell.head, cell.head),) + cell.spine)


def _check_x_composable(p: int, a: XCell, c: XCell) -> None:
    l = a.level
    if c.level != l:
        raise InvalidArguments(f"levels differ: {l} vs {c.level}")
    if not 0 <= p < l:
        raise InvalidArguments(f"depth p={p} out of range for level {l}")
    sa, sc = a, c
    for _ in range(l - p):
        sa, sc = x_target(sa), x_source(sc)
    if sa != sc:
        raise NotComposable(p, f"t-chain {sa} != s-chain {sc}")


def x_composable(p: int, a: XCell, c: XCell) -> bool:
    try:
        _check_x_composable(p, a, c)
    except NotComposable:
        return False
    return True


def x_compose(fd: FlowData, p: int, a: XCell, c: XCell) -> XCell:
    """The glued cell ``c o_p a``: labels above depth p pair up and
    normalize, the pair at p splices, everything below is shared."""
    _check_x_composable(p, a, c)
    l = a.level
    top = l - 1 - p

    def glue(u, v):
        return normalize(Seq((u, v)), fd)

    head = glue(a.head, c.head)
    spine = [
        (glue(a.spine[k][0], c.spine[k][0]), glue(a.spine[k][1], c.spine[k][1]))
        for k in range(top)
    ]
    spine.append((a.spine[top][0], c.spine[top][1]))
    spine.extend(a.spine[top + 1 :])
    return XCell(head, tuple(spine))


def _base_cells(fd: FlowData) -> list:
    return [XCell(Atom(pt.id), ()) for pt in sorted(fd.base_points(), key=lambda p: p.id)]


def _spine_of(fd: FlowData, space) -> tuple:
    pair = (Atom(space.source), Atom(space.target))
    if space.level == 1:
        return (pair,)
    return (pair,) + _spine_of(fd, fd.home_of(space.source))


def _singleton_home(fd: FlowData, cell: XCell) -> bool:
    """Whether the cell's home component is a single point, so the
    diagonal over it is itself a (synthesized) zero-dimensional space."""
    if isinstance(cell.head, Pt):
        return True  # diagonals of diagonals stay singletons
    if isinstance(cell.head, Atom):
        home = fd.home_of(cell.head.id)
        return home is not None and home.dim == 0
    return False


def x_cells(fd: FlowData, level: int, include_composites: bool = False) -> list:
    """All cells at the given level, sorted.  Above the document's
    max_level there are none (the diagonal tower is not materialized);
    a warning says so."""
    if level < 0:
        raise InvalidArguments("level must be non-negative")
    if level > fd.max_level:
        warnings.warn(
            f"no cells above level {fd.max_level} in {fd.name!r}", stacklevel=2
        )
        return []
    if level == 0:
        cells = _base_cells(fd)
    else:
        cells = [
            XCell(Atom(pid), _spine_of(fd, sp))
            for sp in sorted(fd.spaces_at_level(level), key=lambda s: s.key)
            for pid in sorted(sp.points)
        ]
        cells += [
            x_identity(b)
            for b in x_cells(fd, level - 1)
            if _singleton_home(fd, b)
        ]
        cells.sort(key=XCell.key)
    if include_composites:
        cells = _close_under_composition(fd, level, cells)
    return cells


def _close_under_composition(fd: FlowData, level: int, cells: list) -> list:
    pool = set(cells)
    frontier = list(cells)
    while frontier:
        fresh = []
        for p in range(level):
            for a in sorted(pool, key=XCell.key):
                for c in sorted(pool, key=XCell.key):
                    if x_composable(p, a, c):
                        out = x_compose(fd, p, a, c)
                        if out not in pool:
                            pool.add(out)
                            fresh.append(out)
        frontier = fresh
    return sorted(pool, key=XCell.key)


def x_composable_pairs(fd: FlowData, level: int, p: int, include_composites: bool = False) -> list:
    """Ordered pairs (inner, outer) among the level's cells, ready for
    x_compose at depth p."""
    cells = x_cells(fd, level, include_composites)
    return [(a, c) for a in cells for c in cells if x_composable(p, a, c)]


class XCategory:
    """X behind the generic category interface.  With
    include_composites=True, cells() also carries every composite, which
    is what the axiom engine needs to test laws on glued cells."""

    name = "x"

    def __init__(self, fd: FlowData, include_composites: bool = False):
        self.fd = fd
        self.max_level = fd.max_level
        self.include_composites = include_composites

    def cells(self, level: int) -> list:
        return x_cells(self.fd, level, self.include_composites)

    def level_of(self, cell) -> int:
        return cell.level

    def source(self, cell):
        return x_source(cell)

    def target(self, cell):
        return x_target(cell)

    def identity(self, cell):
        return x_identity(cell)

    def compose(self, p, a, c):
        return x_compose(self.fd, p, a, c)

    def normalize(self, cell):
        n = lambda lab: normalize(lab, self.fd)
        return XCell(n(cell.head), tuple((n(s), n(t)) for s, t in cell.spine))

    def render(self, cell) -> str:
        return x_render(cell)
