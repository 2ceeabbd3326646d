"""The dimension-tuple category V.

A V cell is a tower of vector spaces and hom spaces remembered only by
dimension, so its data is exactly a W cell; VCell is a semantic wrapper
that keeps the two apart in signatures and rendering.  Equality is
equality of the underlying dimension data.  All operations delegate.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import InvalidArguments
from .wcat import (
    WCell,
    w_compose,
    w_enumerate,
    w_identity,
    w_render,
    w_source,
    w_target,
)

__all__ = [
    "VCell",
    "v_from_w",
    "v_to_w",
    "v_source",
    "v_target",
    "v_identity",
    "v_compose",
    "v_render",
    "VCategory",
]


@dataclass(frozen=True, slots=True)
class VCell:
    """dims is a WCell, or a bare int for level-0 cells."""

    dims: "WCell | int"

    @property
    def level(self) -> int:
        return 0 if isinstance(self.dims, int) else self.dims.level

    def __str__(self) -> str:
        return v_render(self)


def v_from_w(q) -> VCell:
    if not isinstance(q, (WCell, int)) or isinstance(q, bool):
        raise InvalidArguments(f"expected a W cell, got {q!r}")
    return VCell(q)


def v_to_w(v: VCell):
    if not isinstance(v, VCell):
        raise InvalidArguments(f"expected a VCell, got {v!r}")
    return v.dims


def v_source(v: VCell) -> VCell:
    return VCell(w_source(v.dims))


def v_target(v: VCell) -> VCell:
    return VCell(w_target(v.dims))


def v_identity(v: VCell) -> VCell:
    return VCell(w_identity(v.dims))


def v_compose(p: int, a: VCell, c: VCell) -> VCell:
    return VCell(w_compose(p, v_to_w(a), v_to_w(c)))


def v_render(v: VCell) -> str:
    """``R^h`` at level 0, else ``(R^h, Hom(R^i, R^j), ...)`` top-down."""
    if isinstance(v.dims, int):
        return f"R^{v.dims}"
    homs = ", ".join(f"Hom(R^{i},R^{j})" for i, j in v.dims.spine)
    return f"(R^{v.dims.head}, {homs})"


class VCategory:
    """V behind the generic category interface; cells() enumerates via W."""

    name = "v"

    def __init__(self, max_level: int = 3, bound: int = 3):
        self.max_level = max_level
        self.bound = bound

    def cells(self, level: int) -> list:
        if level > self.max_level:
            return []
        return [VCell(q) for q in w_enumerate(level, self.bound)]

    def level_of(self, cell) -> int:
        return cell.level

    def source(self, cell):
        return v_source(cell)

    def target(self, cell):
        return v_target(cell)

    def identity(self, cell):
        return v_identity(cell)

    def compose(self, p, a, c):
        return v_compose(p, a, c)

    def normalize(self, cell):
        return cell

    def render(self, cell) -> str:
        return v_render(cell)
