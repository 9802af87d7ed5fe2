"""Partitions in a bounding rectangle, TASEP state words and boundary paths.

A state word uses ``'1'`` for a particle and ``'0'`` for a hole.  Reading the
word left to right draws the boundary path from the north-east corner of a
``k x cols`` rectangle: a particle is a south step, a hole a west step.  Row
``i`` of the shape then has as many boxes as there are holes to the right of
the ``i``-th particle.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterator, Sequence

from .polyring import BivarPoly, monomial

__all__ = [
    "Shape",
    "SOUTH",
    "WEST",
    "parse_shape",
    "parse_state",
    "state_to_shape",
    "shape_to_state",
    "boundary_path",
    "boundary_weight",
    "shapes_in_rectangle",
    "shapes_with_semiperimeter",
    "all_states",
]

SOUTH = "S"
WEST = "W"


@dataclass(frozen=True)
class Shape:
    """Partition ``parts`` inside a ``len(parts) x cols`` rectangle.

    Trailing zero parts are kept: they stand for trailing particles of the
    state, and the rectangle they span contributes to the tableau weight.
    """

    parts: tuple[int, ...]
    cols: int

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if self.cols < 0:
            raise ValueError(f"negative column count {self.cols}")
        for i, p in enumerate(parts):
            if p < 0:
                raise ValueError(f"negative part {p}")
            if p > self.cols:
                raise ValueError(f"part {p} exceeds the {self.cols} columns")
            if i and p > parts[i - 1]:
                raise ValueError(f"parts are not weakly decreasing: {parts}")

    @property
    def k(self) -> int:
        return len(self.parts)

    @property
    def n(self) -> int:
        """Semi-perimeter of the bounding rectangle (lattice size)."""
        return len(self.parts) + self.cols

    @property
    def size(self) -> int:
        return sum(self.parts)

    def part(self, i: int) -> int:
        """1-based part lookup with ``part(k + 1) == 0``."""
        if 1 <= i <= len(self.parts):
            return self.parts[i - 1]
        if i == len(self.parts) + 1:
            return 0
        raise IndexError(i)

    def column_height(self, c: int) -> int:
        """Number of boxes in column ``c`` (1-based)."""
        return sum(1 for p in self.parts if p >= c)

    def cells(self) -> list[tuple[int, int]]:
        """All boxes ``(row, col)``, 1-based, in column-major order."""
        return [
            (r, c)
            for c in range(1, (self.parts[0] if self.parts else 0) + 1)
            for r in range(1, self.column_height(c) + 1)
        ]

    def suffix(self, start: int) -> "Shape":
        """Rows ``start..k`` (1-based) as a shape in the same column range."""
        return Shape(self.parts[start - 1:], self.cols)

    def __str__(self) -> str:
        return f"{','.join(map(str, self.parts))}/{self.cols}"


def parse_shape(text: str) -> Shape:
    """Parse ``"3,2,2,0,0/4"``.  An empty part list (``"/3"``) is allowed."""
    try:
        body, cols = text.strip().split("/")
        parts = tuple(int(p) for p in body.split(",") if p.strip() != "")
        return Shape(parts, int(cols))
    except ValueError as exc:
        raise ValueError(f"bad shape {text!r}: {exc}") from exc


def parse_state(text: str) -> str:
    text = text.strip()
    if set(text) - {"0", "1"}:
        raise ValueError(f"state word must be over '0'/'1', got {text!r}")
    return text


def state_to_shape(word: str) -> Shape:
    parse_state(word)
    holes_right = word.count("0")
    parts = []
    for ch in word:
        if ch == "1":
            parts.append(holes_right)
        else:
            holes_right -= 1
    return Shape(tuple(parts), word.count("0"))


def shape_to_state(shape: Shape) -> str:
    return "".join("1" if s == SOUTH else "0" for s in boundary_path(shape))


def boundary_path(shape: Shape) -> str:
    """South/west steps of the border from the NE corner to the SW corner."""
    steps = []
    x = shape.cols
    for p in shape.parts:
        steps.append(WEST * (x - p))
        steps.append(SOUTH)
        x = p
    steps.append(WEST * x)
    return "".join(steps)


def boundary_weight(shape: Shape) -> BivarPoly:
    return monomial(shape.k, shape.cols)


def shapes_in_rectangle(k: int, cols: int) -> Iterator[Shape]:
    """Every shape with exactly ``k`` parts and ``cols`` columns."""
    def rec(prefix: list[int], bound: int):
        if len(prefix) == k:
            yield Shape(tuple(prefix), cols)
            return
        for p in range(bound, -1, -1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], cols)


def shapes_with_semiperimeter(n: int) -> Iterator[Shape]:
    for k in range(n + 1):
        yield from shapes_in_rectangle(k, n - k)


def all_states(n: int) -> list[str]:
    return ["".join(w) for w in product("01", repeat=n)]


def partitions_bounded(rows: int, max_part: int, min_part: int = 0) -> Iterator[tuple[int, ...]]:
    """Weakly decreasing tuples of length ``rows`` with entries in ``[min_part, max_part]``."""
    def rec(prefix: list[int], bound: int):
        if len(prefix) == rows:
            yield tuple(prefix)
            return
        for p in range(bound, min_part - 1, -1):
            prefix.append(p)
            yield from rec(prefix, p)
            prefix.pop()

    yield from rec([], max_part)


def is_partition(parts: Sequence[int]) -> bool:
    return all(p >= 0 for p in parts) and all(
        parts[i] >= parts[i + 1] for i in range(len(parts) - 1)
    )
