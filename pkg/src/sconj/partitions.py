"""Integer partitions, Ferrers-diagram geometry and the statistics r_s / c_s.

Cells use 1-indexed ``(row, col)`` matrix coordinates in the English
convention: row 1 is the top (longest) row.
"""

from __future__ import annotations

from typing import Iterable, NamedTuple


class DomainError(ValueError):
    """An argument lies outside the domain of the operation."""


class InvariantError(RuntimeError):
    """An internal invariant of an algorithm was violated."""


class Cell(NamedTuple):
    row: int
    col: int


class Partition(tuple):
    """Immutable weakly decreasing tuple of positive integers."""

    __slots__ = ()

    def __new__(cls, parts: Iterable[int] = ()):
        if isinstance(parts, Partition):
            return parts
        parts = tuple(int(x) for x in parts)
        for i, x in enumerate(parts):
            if x < 1:
                raise DomainError(f"parts must be positive, got {parts}")
            if i and parts[i - 1] < x:
                raise DomainError(f"parts must be weakly decreasing, got {parts}")
        return super().__new__(cls, parts)

    def __repr__(self):
        return f"Partition({list(self)})"

    @property
    def size(self) -> int:
        return sum(self)

    @property
    def length(self) -> int:
        return len(self)

    def cells(self):
        """All cells in row-major order."""
        return [Cell(i, j) for i, part in enumerate(self, 1) for j in range(1, part + 1)]

    def __contains__(self, item):
        if isinstance(item, tuple) and len(item) == 2 and not isinstance(item, Partition):
            i, j = item
            return 1 <= i <= len(self) and 1 <= j <= self[i - 1]
        return tuple.__contains__(self, item)


def parse_partition(text: str) -> Partition:
    """Parse the comma-separated CLI form; the empty string is the empty partition."""
    text = text.strip()
    if not text:
        return Partition()
    try:
        parts = [int(x) for x in text.split(",")]
    except ValueError:
        raise DomainError(f"not a comma-separated list of integers: {text!r}") from None
    return Partition(parts)


def format_partition(p) -> str:
    return ",".join(str(x) for x in p)


def _check_cell(p: Partition, z) -> Cell:
    z = Cell(*z)
    if z not in p:
        raise DomainError(f"cell {tuple(z)} is not in {list(p)}")
    return z


def arm(p, z) -> int:
    p = Partition(p)
    z = _check_cell(p, z)
    return p[z.row - 1] - z.col


def leg(p, z) -> int:
    p = Partition(p)
    z = _check_cell(p, z)
    return sum(1 for part in p[z.row:] if part >= z.col)


def hook(p, z) -> int:
    return arm(p, z) + leg(p, z) + 1


def conjugate(p) -> Partition:
    p = Partition(p)
    if not p:
        return p
    return Partition(sum(1 for part in p if part >= j) for j in range(1, p[0] + 1))


def _check_s(s: int) -> None:
    if s < 1:
        raise DomainError(f"s must be a positive integer, got {s}")


def s_cells(p, s: int) -> list[Cell]:
    """Cells with leg 0 whose arm + 1 is divisible by ``s``, row-major."""
    p = Partition(p)
    _check_s(s)
    out = []
    for i, part in enumerate(p, 1):
        below = p[i] if i < len(p) else 0
        # leg 0 exactly for the columns beyond the next row
        for j in range(below + 1, part + 1):
            if (part - j + 1) % s == 0:
                out.append(Cell(i, j))
    return out


def r_stat(p, s: int) -> int:
    """Number of parts divisible by ``s``."""
    _check_s(s)
    return sum(1 for part in Partition(p) if part % s == 0)


def c_stat(p, s: int) -> int:
    """Number of ``s``-cells."""
    p = Partition(p)
    _check_s(s)
    total = 0
    for i, part in enumerate(p):
        below = p[i + 1] if i + 1 < len(p) else 0
        # arms part-j for j in (below, part]: count arm+1 in [1, part-below] divisible by s
        total += (part - below) // s
    return total


def remainder_sequence(p, s: int) -> tuple[int, ...]:
    _check_s(s)
    return tuple(part % s for part in Partition(p) if part % s)


def row_positions(p, s: int) -> tuple[int, ...]:
    _check_s(s)
    return tuple(i for i, part in enumerate(Partition(p), 1) if part % s)


def column_positions(p, s: int) -> tuple[int, ...]:
    p = Partition(p)
    return tuple(-(-p[i - 1] // s) for i in row_positions(p, s))


def delta(p, s: int) -> Partition:
    """Delete the last non-zero remainder's cells from its row."""
    p = Partition(p)
    rows = row_positions(p, s)
    if not rows:
        raise DomainError(f"{list(p)} has empty remainder sequence modulo {s}")
    g = rows[-1]
    parts = list(p)
    parts[g - 1] -= parts[g - 1] % s
    return Partition(x for x in parts if x)


def reduce(p, s: int) -> Partition:
    """The s-reduction: floor-divide every part by ``s``, dropping zeros."""
    _check_s(s)
    return Partition(x // s for x in Partition(p) if x >= s)


def blow_up(p, s: int) -> Partition:
    _check_s(s)
    return Partition(s * x for x in Partition(p))


def weak_descents(rv) -> list[int]:
    rv = tuple(rv)
    return [j for j in range(1, len(rv)) if rv[j - 1] >= rv[j]]


def wmaj(rv) -> int:
    """Weak major index: the sum of the weak-descent positions."""
    return sum(weak_descents(rv))


def check_remainder_vector(rv, s: int) -> tuple[int, ...]:
    rv = tuple(int(x) for x in rv)
    for x in rv:
        if not 1 <= x <= s - 1:
            raise DomainError(f"remainder entries must lie in [1, {s - 1}], got {rv}")
    return rv


def bf_stat(p, alpha: int, beta: int) -> int:
    """Count cells with ``alpha*leg == beta*(arm+1)`` and hook divisible by ``alpha+beta``."""
    if alpha < 1 or beta < 0:
        raise DomainError(f"need alpha >= 1 and beta >= 0, got ({alpha}, {beta})")
    p = Partition(p)
    conj = conjugate(p)
    count = 0
    for i, part in enumerate(p, 1):
        for j in range(1, part + 1):
            a = part - j
            lg = conj[j - 1] - i
            if alpha * lg == beta * (a + 1) and (a + lg + 1) % (alpha + beta) == 0:
                count += 1
    return count


def is_core(p, s: int) -> bool:
    _check_s(s)
    p = Partition(p)
    conj = conjugate(p)
    return all(
        (part - j + conj[j - 1] - i + 1) % s
        for i, part in enumerate(p, 1)
        for j in range(1, part + 1)
    )
