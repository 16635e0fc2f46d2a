"""The involution swapping r_s and c_s while fixing the remainder sequence.

The general map runs in three stages: remove the yellow cells of the
remainder diagram (``reduce_yellow``), conjugate the resulting yellow-free
diagram, undo the yellow removal against the same remainder vector
(``unreduce_yellow``) and finally put the remainders back (``reinsert``).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagram import (
    GREEN,
    YELLOW,
    ColouredCell,
    RemainderDiagram,
    compatible,
    conjugate_diagram,
    diagram_problems,
    from_partition,
    reinsert,
)
from .partitions import (
    DomainError,
    InvariantError,
    Partition,
    blow_up,
    c_stat,
    conjugate,
    r_stat,
    reduce,
    remainder_sequence,
    weak_descents,
)


@dataclass(frozen=True)
class TraceStep:
    descent: int
    case: str  # "A" or "B"
    diagram_after: RemainderDiagram


@dataclass(frozen=True)
class ReductionTrace:
    steps: tuple[TraceStep, ...] = ()

    def __iter__(self):
        return iter(self.steps)

    def __len__(self):
        return len(self.steps)

    @property
    def cases(self) -> tuple[str, ...]:
        return tuple(step.case for step in self.steps)

    @property
    def descents(self) -> tuple[int, ...]:
        return tuple(step.descent for step in self.steps)

    def render(self, initial: RemainderDiagram | None = None) -> str:
        blocks = []
        if initial is not None:
            blocks.append(initial.render())
        for step in self.steps:
            blocks.append(f"-- descent {step.descent}, case {step.case} --\n" + step.diagram_after.render())
        return "\n".join(blocks)


def conj_empty(p, s: int) -> Partition:
    """Conjugate the s-reduction and blow it up again (empty remainder sequence only)."""
    p = Partition(p)
    if remainder_sequence(p, s):
        raise DomainError(f"{list(p)} has a non-empty remainder sequence modulo {s}")
    return blow_up(conjugate(reduce(p, s)), s)


def map_strict(p, s: int) -> Partition:
    """The involution on partitions whose remainder sequence strictly increases."""
    p = Partition(p)
    rv = remainder_sequence(p, s)
    if any(a >= b for a, b in zip(rv, rv[1:])):
        raise DomainError(f"remainder sequence {rv} is not strictly increasing")
    return reinsert(conjugate_diagram(from_partition(p, s)), rv, s)


class _State:
    """Mutable working copy of a diagram: interior row lengths plus cells."""

    def __init__(self, d: RemainderDiagram):
        self.nu = list(d.interior)
        self.cells = [list(c) for c in d.cells]

    def length(self, row):
        return self.nu[row - 1] if row <= len(self.nu) else 0

    def grow(self, row):
        while len(self.nu) < row:
            self.nu.append(0)
        self.nu[row - 1] += 1

    def shrink(self, row):
        if self.length(row) < 1:
            raise DomainError(f"row {row} of the interior is empty")
        self.nu[row - 1] -= 1
        while self.nu and self.nu[-1] == 0:
            self.nu.pop()

    def freeze(self):
        if any(a < b for a, b in zip(self.nu, self.nu[1:])):
            raise DomainError(f"interior {self.nu} is not a partition")
        d = RemainderDiagram(Partition(self.nu), tuple(tuple(c) for c in self.cells))
        if len(set(d.rows)) != len(d.rows):
            raise DomainError("two coloured cells in one row")
        return d


def _check_step(d: RemainderDiagram, exc=InvariantError):
    problems = diagram_problems(d)
    if problems:
        raise exc("invalid intermediate diagram: " + "; ".join(problems))


def reduce_yellow(d: RemainderDiagram, rv) -> tuple[RemainderDiagram, ReductionTrace]:
    """Turn a diagram compatible with ``rv`` into a yellow-free one.

    Descents of ``rv`` are handled in increasing order.  At descent ``k`` the
    k topmost coloured cells (all green by then) are absorbed into the
    interior and reappear as green cells one row lower.  If the next cell is
    yellow it is dropped first and a green cell is added to the top row
    afterwards.
    """
    rv = tuple(rv)
    problems = diagram_problems(d)
    if problems:
        raise DomainError("invalid remainder diagram: " + "; ".join(problems))
    if not compatible(d, rv):
        raise DomainError(f"diagram is not compatible with {rv}")

    state = _State(d)
    steps = []
    for k in weak_descents(rv):
        cells = state.cells
        top, target = cells[:k], cells[k]
        for row, col, colour in top:
            if colour != GREEN or col != state.length(row) + 1:
                raise InvariantError(f"cell {(row, col, colour)} cannot be absorbed")
            if row > 1 and state.length(row - 1) < col:
                raise InvariantError(f"cell {(row, col)} is not an outer corner")
        case = "A" if target[2] == GREEN else "B"
        adjacent = top[-1][0] == target[0] - 1
        if adjacent != (case == "B"):
            raise InvariantError(f"descent {k}: case {case} with rows {top[-1][0]}, {target[0]}")

        for row, _, _ in top:
            state.grow(row)
        moved = [[row + 1, state.length(row + 1) + 1, GREEN] for row, _, _ in top]
        rest = cells[k:] if case == "A" else cells[k + 1:]
        if case == "B":
            moved.insert(0, [1, state.length(1) + 1, GREEN])
        state.cells = moved + rest
        after = state.freeze()
        _check_step(after)
        steps.append(TraceStep(k, case, after))

    out = state.freeze()
    if out.yellows:
        raise InvariantError("yellow cells survived the reduction")
    return out, ReductionTrace(tuple(steps))


def unreduce_yellow_trace(d: RemainderDiagram, rv) -> tuple[RemainderDiagram, ReductionTrace]:
    """Inverse of :func:`reduce_yellow`, returning the intermediate diagrams too."""
    rv = tuple(rv)
    if d.yellows:
        raise DomainError("expected a yellow-free diagram")
    if len(rv) != len(d.cells):
        raise DomainError(f"{len(d.cells)} coloured cells but remainder vector {rv}")
    _check_step(d, DomainError)

    state = _State(d)
    steps = []
    for k in reversed(weak_descents(rv)):
        cells = state.cells
        case = "B" if cells and cells[0][0] == 1 else "A"
        if case == "B":
            cells = cells[1:]
        top = cells[:k]
        # one cell leaves the end of the row above each moved green
        for row, _, _ in top:
            state.shrink(row - 1)
        moved = [[row - 1, state.length(row - 1) + 1, GREEN] for row, _, _ in top]
        if case == "B":
            row, col, _ = top[-1]
            moved.append([row, col, YELLOW])
        state.cells = moved + cells[k:]
        after = state.freeze()
        _check_step(after, DomainError)
        steps.append(TraceStep(k, case, after))

    out = state.freeze()
    if not compatible(out, rv):
        raise DomainError(f"result is not compatible with {rv}")
    return out, ReductionTrace(tuple(steps))


def unreduce_yellow(d: RemainderDiagram, rv) -> RemainderDiagram:
    return unreduce_yellow_trace(d, rv)[0]


@dataclass(frozen=True)
class InvolutionTrace:
    initial: RemainderDiagram
    reduction: ReductionTrace
    reduced: RemainderDiagram
    conjugated: RemainderDiagram
    unreduction: ReductionTrace
    final: RemainderDiagram
    output: Partition

    def render(self) -> str:
        return "\n\n".join([
            "remainder diagram:\n" + self.initial.render(),
            "remove yellow cells:\n" + (self.reduction.render() or "(nothing to do)"),
            "conjugate:\n" + self.conjugated.render(),
            "restore yellow cells:\n" + (self.unreduction.render() or "(nothing to do)"),
            "output: " + ",".join(map(str, self.output)),
        ])


def involute_trace(p, s: int) -> InvolutionTrace:
    p = Partition(p)
    rv = remainder_sequence(p, s)
    initial = from_partition(p, s)
    reduced, forward = reduce_yellow(initial, rv)
    conj = conjugate_diagram(reduced)
    final, backward = unreduce_yellow_trace(conj, rv)
    out = reinsert(final, rv, s)
    return InvolutionTrace(initial, forward, reduced, conj, backward, final, out)


def involute(p, s: int, check: bool = False) -> Partition:
    """Image of ``p`` under the involution; ``check`` verifies every guarantee."""
    p = Partition(p)
    out = involute_trace(p, s).output
    if check:
        rv = remainder_sequence(p, s)
        failures = []
        if out.size != p.size:
            failures.append("size changed")
        if remainder_sequence(out, s) != rv:
            failures.append("remainder sequence changed")
        if (r_stat(out, s), c_stat(out, s)) != (c_stat(p, s), r_stat(p, s)):
            failures.append("statistics not swapped")
        if involute_trace(out, s).output != p:
            failures.append("not an involution")
        if failures:
            raise InvariantError(f"involute({list(p)}, {s}) -> {list(out)}: " + ", ".join(failures))
    return out
