"""Staircase and condensed Catalan tableaux.

Cells are addressed ``(row, col)``, 1-based, row 1 on top.  A filling maps
cells to ``"a"`` (alpha) or ``"b"`` (beta); empty cells are simply absent.

The rules a filling must obey (shared by both tableau kinds):

* (ii)  every box west of a beta in its row is empty;
* (iii) every box north of an alpha in its column is empty;
* (iv)  a box with neither an alpha below it in its column nor a beta to
  its right in its row is non-empty.

Staircase tableaux additionally require (i): every diagonal box is filled.

The enumerators here are deliberately naive brute-force searches over
``{empty, a, b}`` per cell.  They are the ground truth that the determinant
and closed-form code is tested against, so they must not share logic with it.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Mapping, NamedTuple

from .polyring import BivarPoly, monomial
from .shapes import Shape, boundary_weight, parse_shape

__all__ = [
    "ALPHA",
    "BETA",
    "EMPTY",
    "Violation",
    "CondensedTableau",
    "StaircaseTableau",
    "OracleBoundError",
    "validate",
    "validate_staircase",
    "weight",
    "enumerate_tableaux",
    "enumerate_staircase",
    "staircase_to_condensed",
    "ORACLE_MAX_SEMIPERIMETER",
]

ALPHA = "a"
BETA = "b"
EMPTY = ""
SYMBOL_ORDER = {EMPTY: 0, ALPHA: 1, BETA: 2}

ORACLE_MAX_SEMIPERIMETER = 12


class OracleBoundError(ValueError):
    pass


class Violation(NamedTuple):
    cell: tuple[int, int]
    rule: str

    def __str__(self) -> str:
        return f"rule ({self.rule}) violated at cell {self.cell}"


def _freeze(filling: Mapping[tuple[int, int], str]) -> tuple:
    return tuple(sorted((cell, s) for cell, s in filling.items() if s))


@dataclass(frozen=True)
class CondensedTableau:
    shape: Shape
    filling: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.filling, Mapping):
            object.__setattr__(self, "filling", _freeze(self.filling))
        cells = set(self.shape.cells())
        for cell, s in self.filling:
            if cell not in cells:
                raise ValueError(f"cell {cell} lies outside shape {self.shape}")
            if s not in (ALPHA, BETA):
                raise ValueError(f"unknown symbol {s!r}")

    @property
    def cells(self) -> dict[tuple[int, int], str]:
        return dict(self.filling)

    def get(self, r: int, c: int) -> str:
        return self.cells.get((r, c), EMPTY)

    def counts(self) -> tuple[int, int]:
        """Number of alphas and betas in the filling."""
        a = sum(1 for _, s in self.filling if s == ALPHA)
        return a, len(self.filling) - a

    def filling_weight(self) -> BivarPoly:
        return monomial(*self.counts())

    def weight(self) -> BivarPoly:
        return weight(self)

    @property
    def type(self) -> str:
        from .shapes import shape_to_state

        return shape_to_state(self.shape)

    def sort_key(self) -> tuple:
        cells = self.cells
        return tuple(SYMBOL_ORDER[cells.get(cell, EMPTY)] for cell in self.shape.cells())

    def to_json(self) -> dict:
        return {
            "shape": str(self.shape),
            "cells": [{"r": r, "c": c, "s": s} for (r, c), s in self.filling],
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "CondensedTableau":
        shape = parse_shape(obj["shape"])
        return cls(shape, {(int(t["r"]), int(t["c"])): t["s"] for t in obj["cells"]})

    def render(self) -> str:
        """Rows of the diagram, ``.`` for an empty box."""
        cells = self.cells
        lines = []
        for r, p in enumerate(self.shape.parts, start=1):
            lines.append(" ".join(cells.get((r, c), ".") for c in range(1, p + 1)))
        return "\n".join(lines)


def _check_rules(
    cells: Mapping[tuple[int, int], str],
    row_len,
    col_height,
    rows: int,
) -> Violation | None:
    for r in range(1, rows + 1):
        for c in range(1, row_len(r) + 1):
            s = cells.get((r, c), EMPTY)
            beta_right = any(cells.get((r, c2)) == BETA for c2 in range(c + 1, row_len(r) + 1))
            alpha_below = any(
                cells.get((r2, c)) == ALPHA for r2 in range(r + 1, col_height(c) + 1)
            )
            if s and beta_right:
                return Violation((r, c), "ii")
            if s and alpha_below:
                return Violation((r, c), "iii")
            if not s and not beta_right and not alpha_below:
                return Violation((r, c), "iv")
    return None


def validate(t: CondensedTableau) -> Violation | None:
    """Return ``None`` for a valid condensed tableau, else the first violation.

    Cells are scanned row by row, top to bottom and left to right.  A filled
    box west of a beta is reported as rule (ii), a filled box north of an
    alpha as rule (iii).
    """
    shape = t.shape
    return _check_rules(t.cells, shape.part, shape.column_height, shape.k)


def is_valid(t: CondensedTableau) -> bool:
    return validate(t) is None


def weight(t: CondensedTableau) -> BivarPoly:
    """``alpha^(k+j) beta^(cols+l)`` for ``j`` alphas and ``l`` betas."""
    return boundary_weight(t.shape) * t.filling_weight()


def _search(order: list[tuple[int, int]], forced_nonempty=frozenset()) -> Iterator[dict]:
    """Depth-first search over ``{empty, a, b}`` for every cell in ``order``.

    ``order`` must visit each cell after every cell east of it in its row
    and every cell south of it in its column, so each rule can be tested as
    soon as a box is decided.
    """
    cells: dict[tuple[int, int], str] = {}
    # per-row "beta seen to the east", per-column "alpha seen to the south"
    beta_rows: dict[int, int] = {}
    alpha_cols: dict[int, int] = {}

    def rec(i: int):
        if i == len(order):
            yield dict(cells)
            return
        r, c = order[i]
        blocked = beta_rows.get(r, 0) > 0 or alpha_cols.get(c, 0) > 0
        for s in (EMPTY, ALPHA, BETA):
            if s and blocked:
                continue  # rules (ii)/(iii)
            if not s and not blocked:
                continue  # rule (iv)
            if not s and (r, c) in forced_nonempty:
                continue  # rule (i)
            if s:
                cells[(r, c)] = s
            if s == BETA:
                beta_rows[r] = beta_rows.get(r, 0) + 1
            elif s == ALPHA:
                alpha_cols[c] = alpha_cols.get(c, 0) + 1
            yield from rec(i + 1)
            if s == BETA:
                beta_rows[r] -= 1
            elif s == ALPHA:
                alpha_cols[c] -= 1
            cells.pop((r, c), None)

    yield from rec(0)


def enumerate_tableaux(shape: Shape) -> list[CondensedTableau]:
    """All valid fillings of ``shape``.

    Sorted by the filling read in column-major order with
    ``empty < alpha < beta``.
    """
    if shape.n > ORACLE_MAX_SEMIPERIMETER:
        raise OracleBoundError(
            f"semi-perimeter {shape.n} exceeds the oracle bound {ORACLE_MAX_SEMIPERIMETER}"
        )
    width = shape.parts[0] if shape.parts else 0
    order = [
        (r, c)
        for c in range(width, 0, -1)
        for r in range(shape.column_height(c), 0, -1)
    ]
    out = [CondensedTableau(shape, f) for f in _search(order)]
    out.sort(key=CondensedTableau.sort_key)
    return out


# staircase tableaux


@dataclass(frozen=True)
class StaircaseTableau:
    """Filling of the staircase ``(n, n-1, ..., 1)``; row ``i`` has ``n-i+1`` boxes."""

    n: int
    filling: tuple = field(default=())

    def __post_init__(self):
        if isinstance(self.filling, Mapping):
            object.__setattr__(self, "filling", _freeze(self.filling))
        for (r, c), s in self.filling:
            if not (1 <= r <= self.n and 1 <= c <= self.n - r + 1):
                raise ValueError(f"cell {(r, c)} outside the size-{self.n} staircase")
            if s not in (ALPHA, BETA):
                raise ValueError(f"unknown symbol {s!r}")

    @property
    def cells(self) -> dict[tuple[int, int], str]:
        return dict(self.filling)

    def row_len(self, r: int) -> int:
        return self.n - r + 1

    def col_height(self, c: int) -> int:
        return self.n - c + 1

    def diagonal(self) -> list[str]:
        cells = self.cells
        return [cells.get((r, self.n - r + 1), EMPTY) for r in range(1, self.n + 1)]

    @property
    def type(self) -> str:
        return "".join("1" if s == ALPHA else "0" for s in self.diagonal())

    def weight(self) -> BivarPoly:
        a = sum(1 for _, s in self.filling if s == ALPHA)
        return monomial(a, len(self.filling) - a)

    def sort_key(self) -> tuple:
        cells = self.cells
        return tuple(
            SYMBOL_ORDER[cells.get((r, c), EMPTY)]
            for c in range(1, self.n + 1)
            for r in range(1, self.col_height(c) + 1)
        )


def validate_staircase(t: StaircaseTableau) -> Violation | None:
    cells = t.cells
    for r in range(1, t.n + 1):
        if (r, t.n - r + 1) not in cells:
            return Violation((r, t.n - r + 1), "i")
    return _check_rules(cells, t.row_len, t.col_height, t.n)


def enumerate_staircase(n: int) -> list[StaircaseTableau]:
    if n > ORACLE_MAX_SEMIPERIMETER:
        raise OracleBoundError(f"size {n} exceeds the oracle bound {ORACLE_MAX_SEMIPERIMETER}")
    order = [(r, c) for c in range(n, 0, -1) for r in range(n - c + 1, 0, -1)]
    diag = frozenset((r, n - r + 1) for r in range(1, n + 1))
    out = [StaircaseTableau(n, f) for f in _search(order, diag)]
    out.sort(key=StaircaseTableau.sort_key)
    return out


def staircase_to_condensed(t: StaircaseTableau) -> CondensedTableau:
    """Delete beta-ended rows and alpha-ended columns, then close up the gaps."""
    bad = validate_staircase(t)
    if bad is not None:
        raise ValueError(f"invalid staircase tableau: {bad}")
    n, cells = t.n, t.cells
    diag = t.diagonal()
    kept_rows = [r for r in range(1, n + 1) if diag[r - 1] == ALPHA]
    # the bottom box of column c is the diagonal box of row n - c + 1
    kept_cols = [c for c in range(1, n + 1) if diag[n - c] == BETA]
    col_index = {c: i for i, c in enumerate(kept_cols, start=1)}
    parts = []
    filling = {}
    for new_r, r in enumerate(kept_rows, start=1):
        row_cols = [c for c in kept_cols if c <= t.row_len(r)]
        parts.append(len(row_cols))
        for c in row_cols:
            s = cells.get((r, c), EMPTY)
            if s:
                filling[(new_r, col_index[c])] = s
    shape = Shape(tuple(parts), len(kept_cols))
    return CondensedTableau(shape, filling)
