"""Extended remainder diagrams: an interior partition plus green/yellow cells.

Each coloured cell sits at the end of its (possibly empty) row of the
interior and stands for one non-zero remainder of the original partition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import NamedTuple

from .partitions import (
    DomainError,
    Partition,
    check_remainder_vector,
    column_positions,
    conjugate,
    reduce,
    remainder_sequence,
    row_positions,
    weak_descents,
)

GREEN = "G"
YELLOW = "Y"


class ColouredCell(NamedTuple):
    row: int
    col: int
    colour: str


def _row_length(interior, row: int) -> int:
    return interior[row - 1] if row <= len(interior) else 0


@dataclass(frozen=True)
class RemainderDiagram:
    interior: Partition = field(default_factory=Partition)
    cells: tuple[ColouredCell, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "interior", Partition(self.interior))
        cells = tuple(ColouredCell(int(r), int(c), str(col)) for r, c, col in self.cells)
        object.__setattr__(self, "cells", tuple(sorted(cells)))

    @property
    def rows(self) -> tuple[int, ...]:
        return tuple(c.row for c in self.cells)

    @property
    def greens(self) -> tuple[ColouredCell, ...]:
        return tuple(c for c in self.cells if c.colour == GREEN)

    @property
    def yellows(self) -> tuple[ColouredCell, ...]:
        return tuple(c for c in self.cells if c.colour == YELLOW)

    def n_rows(self) -> int:
        return max([len(self.interior)] + [c.row for c in self.cells])

    def n_cols(self) -> int:
        first = self.interior[0] if self.interior else 0
        return max([first] + [c.col for c in self.cells])

    def render(self) -> str:
        """ASCII form: ``#`` interior, ``G`` green, ``Y`` yellow; one line per row."""
        marks = {c.row: c.colour for c in self.cells}
        return "\n".join(
            "#" * _row_length(self.interior, i) + marks.get(i, "")
            for i in range(1, self.n_rows() + 1)
        )

    def to_dict(self) -> dict:
        return {
            "interior": list(self.interior),
            "cells": [{"row": c.row, "col": c.col, "colour": c.colour} for c in self.cells],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "RemainderDiagram":
        cells = [(c["row"], c["col"], c["colour"]) for c in data.get("cells", [])]
        return cls(Partition(data["interior"]), tuple(cells))


def from_partition(p, s: int) -> RemainderDiagram:
    """Remainder diagram of ``p``: the s-reduction plus one coloured cell per remainder.

    The cell for the j-th remainder (j >= 2) is yellow exactly when the
    previous remainder sits in the row directly above and is at least as
    large; every other cell is green.
    """
    p = Partition(p)
    rv = remainder_sequence(p, s)
    rows = row_positions(p, s)
    cols = column_positions(p, s)
    cells = []
    for j, (row, col) in enumerate(zip(rows, cols)):
        yellow = j > 0 and rows[j - 1] == row - 1 and rv[j - 1] >= rv[j]
        cells.append(ColouredCell(row, col, YELLOW if yellow else GREEN))
    return RemainderDiagram(reduce(p, s), tuple(cells))


def diagram_problems(d: RemainderDiagram) -> list[str]:
    """Reasons why ``d`` is not a valid remainder diagram (empty when valid)."""
    problems = []
    nu = d.interior
    rows = d.rows
    if len(set(rows)) != len(rows):
        problems.append("more than one coloured cell in a row")
    coloured_rows = set(rows)
    for c in d.cells:
        if c.row < 1 or c.colour not in (GREEN, YELLOW):
            problems.append(f"malformed cell {tuple(c)}")
            continue
        if c.col != _row_length(nu, c.row) + 1:
            problems.append(f"cell {tuple(c)} is not at the end of its row")
            continue
        if c.colour == GREEN:
            if c.row > 1 and _row_length(nu, c.row - 1) < c.col:
                problems.append(f"green cell {tuple(c)} is not an outer corner")
        else:
            if c.row == 1:
                problems.append(f"yellow cell {tuple(c)} in the top row")
            elif c.row - 1 not in coloured_rows:
                problems.append(f"yellow cell {tuple(c)} without a coloured cell above")
    return problems


def validate(d: RemainderDiagram) -> bool:
    return not diagram_problems(d)


def _require_valid(d: RemainderDiagram) -> None:
    problems = diagram_problems(d)
    if problems:
        raise DomainError("invalid remainder diagram: " + "; ".join(problems))


def compatible(d: RemainderDiagram, rv) -> bool:
    """At every weak descent the later cell is yellow iff the rows are adjacent."""
    rv = tuple(rv)
    if len(rv) != len(d.cells):
        raise DomainError(f"{len(d.cells)} coloured cells but remainder vector {rv}")
    cells = d.cells
    for k in weak_descents(rv):
        prev, cur = cells[k - 1], cells[k]
        if (cur.colour == YELLOW) != (prev.row == cur.row - 1):
            return False
    return True


def diagram_r(d: RemainderDiagram) -> int:
    _require_valid(d)
    return d.n_rows() - len(d.cells)


def diagram_c(d: RemainderDiagram) -> int:
    _require_valid(d)
    return d.n_cols() - len(d.greens)


def conjugate_diagram(d: RemainderDiagram) -> RemainderDiagram:
    if d.yellows:
        raise DomainError("only yellow-free diagrams can be conjugated")
    _require_valid(d)
    cells = tuple(ColouredCell(c.col, c.row, GREEN) for c in d.cells)
    return RemainderDiagram(conjugate(d.interior), cells)


def reinsert(d: RemainderDiagram, rv, s: int) -> Partition:
    """Blow up the interior by ``s`` and add the remainders to the coloured rows in order."""
    rv = check_remainder_vector(rv, s)
    if len(rv) != len(d.cells):
        raise DomainError(f"{len(d.cells)} coloured cells but remainder vector {rv}")
    _require_valid(d)
    parts = [s * _row_length(d.interior, i) for i in range(1, d.n_rows() + 1)]
    for c, rho in zip(d.cells, rv):
        parts[c.row - 1] += rho
    try:
        return Partition(parts)
    except DomainError:
        raise DomainError(
            f"diagram and remainder vector {rv} do not give a partition: {parts}"
        ) from None
