"""Weighted Catalan paths and their bijection with condensed tableaux.

A path runs from the north-east to the south-west corner of the bounding
rectangle with south and west unit steps and never crosses the boundary path
``L`` of the shape.  Coordinates: ``x`` counts columns from the west edge,
``y`` counts rows from the top.  A path is determined by ``C_r``, the
``x``-position of its south step in row ``r``; it is valid iff
``lam_r >= C_1 >= C_2 >= ... >= C_k >= 0`` (the ``C_r >= C_{r+1}`` part is
Narayana's "Rule 1").

Edge labels are forced by position: a south step on the west boundary gets
1, any other south step beta; a west step on ``L`` gets 1, any other west
step alpha.

The bijection goes through a modified tableau, in which every alpha sits at
the bottom of its column and the betas occupy consecutive top rows, one per
row, moving west as they go down.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, Sequence

from .polyring import BivarPoly, monomial
from .shapes import SOUTH, WEST, Shape, parse_shape
from .tableaux import ALPHA, BETA, CondensedTableau, Violation, _freeze

__all__ = [
    "WeightedPath",
    "ModifiedTableau",
    "path_weight",
    "label_steps",
    "south_positions",
    "steps_from_positions",
    "satisfies_rule1",
    "to_modified",
    "modified_to_condensed",
    "path_to_modified",
    "path_from_modified",
    "tableau_to_path",
    "path_to_tableau",
    "enumerate_paths",
    "parse_path",
]


def south_positions(shape: Shape, steps: str) -> list[int]:
    """``C_r`` for each row, checking step counts and the constraint by ``L``."""
    if steps.count(SOUTH) != shape.k or steps.count(WEST) != shape.cols:
        raise ValueError(
            f"path needs {shape.k} south and {shape.cols} west steps, got {steps!r}"
        )
    x, y = shape.cols, 0
    cs = []
    for s in steps:
        if s == WEST:
            x -= 1
        elif s == SOUTH:
            y += 1
            if x > shape.part(y):
                raise ValueError(f"south step at x={x} in row {y} crosses the boundary")
            cs.append(x)
        else:
            raise ValueError(f"unknown step {s!r}")
    return cs


def steps_from_positions(shape: Shape, cs: Sequence[int]) -> str:
    out = []
    x = shape.cols
    for c in cs:
        out.append(WEST * (x - c) + SOUTH)
        x = c
    out.append(WEST * x)
    return "".join(out)


def satisfies_rule1(cs: Sequence[int]) -> bool:
    """No south step lies west of the south step in the row below it."""
    return all(cs[j] >= cs[j + 1] for j in range(len(cs) - 1))


def label_steps(shape: Shape, steps: str) -> tuple[str, ...]:
    """Positional labels ``"a"``, ``"b"`` or ``"1"`` for each step."""
    south_positions(shape, steps)
    labels = []
    x, y = shape.cols, 0
    for s in steps:
        if s == SOUTH:
            labels.append("1" if x == 0 else BETA)
            y += 1
        else:
            # segment [x-1, x] at height y lies on L iff x > lam_{y+1}
            labels.append("1" if x > shape.part(y + 1) else ALPHA)
            x -= 1
    return tuple(labels)


@dataclass(frozen=True)
class WeightedPath:
    shape: Shape
    steps: str
    labels: tuple = field(default=None)

    def __post_init__(self):
        expected = label_steps(self.shape, self.steps)
        if self.labels is None:
            object.__setattr__(self, "labels", expected)
        elif tuple(self.labels) != expected:
            raise ValueError(f"labels {self.labels} disagree with positions {expected}")

    @property
    def south_positions(self) -> list[int]:
        return south_positions(self.shape, self.steps)

    def weight(self) -> BivarPoly:
        return path_weight(self)

    def __str__(self) -> str:
        return f"{self.steps}@{self.shape}"


def parse_path(text: str) -> WeightedPath:
    steps, shape = text.strip().split("@")
    return WeightedPath(parse_shape(shape), steps.strip())


def path_weight(path: WeightedPath) -> BivarPoly:
    return monomial(path.labels.count(ALPHA), path.labels.count(BETA))


@dataclass(frozen=True)
class ModifiedTableau:
    shape: Shape
    filling: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.filling, Mapping):
            object.__setattr__(self, "filling", _freeze(self.filling))

    @property
    def cells(self) -> dict[tuple[int, int], str]:
        return dict(self.filling)

    def column(self, c: int, symbol: str) -> list[int]:
        return sorted(r for (r, cc), s in self.filling if cc == c and s == symbol)

    def violations(self) -> list[Violation]:
        """Every failed property (i)-(v), as ``Violation(cell, rule)``."""
        shape, cells = self.shape, self.cells
        out = []
        beta_rows: dict[int, list[int]] = {}
        for (r, c), s in self.filling:
            if s == BETA:
                beta_rows.setdefault(r, []).append(c)
        for r, cs in sorted(beta_rows.items()):
            if len(cs) > 1:
                out.append(Violation((r, cs[1]), "i"))
        rows = sorted(beta_rows)
        if rows != list(range(1, len(rows) + 1)):
            out.append(Violation((rows[-1], beta_rows[rows[-1]][0]), "ii"))
        betas = sorted((r, c) for (r, c), s in self.filling if s == BETA)
        for r1, c1 in betas:
            for r2, c2 in betas:
                if r2 > r1 and c2 > c1:
                    out.append(Violation((r2, c2), "iii"))
        for (r, c), s in self.filling:
            if s == ALPHA and any(bc > c for bc in beta_rows.get(r, [])):
                out.append(Violation((r, c), "iv"))
        width = shape.parts[0] if shape.parts else 0
        for c in range(1, width + 1):
            h = shape.column_height(c)
            s = cells.get((h, c), "")
            permissible = not s and not any(bc > c for bc in beta_rows.get(h, []))
            if permissible:
                out.append(Violation((h, c), "v"))
        return out

    def boxes_below_betas(self, c: int) -> int:
        """Boxes of column ``c`` below every beta in columns ``>= c``."""
        placed = sum(1 for (r, cc), s in self.filling if s == BETA and cc >= c)
        return self.shape.column_height(c) - placed


def to_modified(t: CondensedTableau) -> ModifiedTableau:
    """Drop each alpha to the foot of its column; lift betas right to left."""
    shape = t.shape
    cells = t.cells
    width = shape.parts[0] if shape.parts else 0
    filling = {}
    next_row = 1
    for c in range(width, 0, -1):
        h = shape.column_height(c)
        col = [cells.get((r, c), "") for r in range(1, h + 1)]
        if ALPHA in col:
            filling[(h, c)] = ALPHA
        for _ in range(col.count(BETA)):
            if next_row > h:
                raise ValueError(f"betas of column {c} do not fit; is the tableau valid?")
            filling[(next_row, c)] = BETA
            next_row += 1
    return ModifiedTableau(shape, filling)


def path_from_modified(m: ModifiedTableau) -> WeightedPath:
    """South step east of each beta, then a west step per column."""
    shape = m.shape
    cs = [0] * shape.k
    for (r, c), s in m.filling:
        if s == BETA:
            cs[r - 1] = c
    return WeightedPath(shape, steps_from_positions(shape, cs))


def path_to_modified(p: WeightedPath) -> ModifiedTableau:
    shape = p.shape
    filling = {}
    for r, c in enumerate(p.south_positions, start=1):
        if c > 0:
            filling[(r, c)] = BETA
    x = shape.cols
    for step, label in zip(p.steps, p.labels):
        if step == WEST:
            if label == ALPHA:
                filling[(shape.column_height(x), x)] = ALPHA
            x -= 1
    return ModifiedTableau(shape, filling)


def modified_to_condensed(m: ModifiedTableau) -> CondensedTableau:
    """Drop betas to the lowest free rows column by column, then place alphas."""
    shape = m.shape
    width = shape.parts[0] if shape.parts else 0
    taken: set[int] = set()
    filling = {}
    for c in range(width, 0, -1):
        h = shape.column_height(c)
        free = [r for r in range(h, 0, -1) if r not in taken]
        nb = len(m.column(c, BETA))
        has_alpha = bool(m.column(c, ALPHA))
        if nb + has_alpha > len(free):
            raise ValueError(f"column {c} needs more free rows than it has")
        for r in free[:nb]:
            filling[(r, c)] = BETA
            taken.add(r)
        if has_alpha:
            filling[(free[nb], c)] = ALPHA
    return CondensedTableau(shape, filling)


def tableau_to_path(t: CondensedTableau) -> WeightedPath:
    return path_from_modified(to_modified(t))


def path_to_tableau(p: WeightedPath) -> CondensedTableau:
    return modified_to_condensed(path_to_modified(p))


def _position_sequences(shape: Shape) -> Iterator[list[int]]:
    k = shape.k

    def rec(prefix: list[int], bound: int):
        r = len(prefix)
        if r == k:
            yield list(prefix)
            return
        for c in range(min(bound, shape.parts[r]) + 1):
            prefix.append(c)
            yield from rec(prefix, c)
            prefix.pop()

    yield from rec([], shape.cols)


def enumerate_paths(shape: Shape) -> list[WeightedPath]:
    """All paths constrained by ``shape``, sorted by step string (``S < W``)."""
    paths = [WeightedPath(shape, steps_from_positions(shape, cs)) for cs in _position_sequences(shape)]
    paths.sort(key=lambda p: p.steps)
    return paths
