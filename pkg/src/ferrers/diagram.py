"""Ferrers diagrams, their conjugates, and the associated bipartite graphs.

All row and column indices are 1-based: rows are numbered top-down and
columns left to right.  Square ``(a, b)`` belongs to the diagram iff
``b <= row_lengths[a - 1]``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Iterator, List, NamedTuple, Sequence, Tuple

from .errors import RejectedInput

Square = Tuple[int, int]


class Vertex(NamedTuple):
    """A vertex of a Ferrers graph: a row (``kind == "r"``) or a column (``"c"``)."""

    kind: str
    index: int

    @property
    def is_row(self) -> bool:
        return self.kind == "r"

    def __str__(self) -> str:
        return f"{self.kind}{self.index}"


def row(index: int) -> Vertex:
    return Vertex("r", index)


def col(index: int) -> Vertex:
    return Vertex("c", index)


@dataclass(frozen=True)
class FerrersDiagram:
    """An integer partition viewed as a board of squares.

    ``row_lengths`` is weakly decreasing with all parts positive.  The
    conjugate partition is derived on construction and stored as
    ``col_lengths``.
    """

    row_lengths: Tuple[int, ...]
    col_lengths: Tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        lengths = tuple(self.row_lengths)
        if not lengths:
            raise RejectedInput("a Ferrers diagram needs at least one row")
        for part in lengths:
            if isinstance(part, bool) or not isinstance(part, int):
                raise RejectedInput(f"row length {part!r} is not an integer")
            if part < 1:
                raise RejectedInput(f"row length {part} is not positive")
        for a in range(1, len(lengths)):
            if lengths[a] > lengths[a - 1]:
                raise RejectedInput(
                    "row lengths must be weakly decreasing, got "
                    + ",".join(map(str, lengths))
                )
        object.__setattr__(self, "row_lengths", lengths)
        object.__setattr__(self, "col_lengths", _conjugate_lengths(lengths))

    @property
    def m(self) -> int:
        """Number of rows."""
        return len(self.row_lengths)

    @property
    def n(self) -> int:
        """Number of columns."""
        return self.row_lengths[0]

    @property
    def size(self) -> int:
        return sum(self.row_lengths)

    @property
    def is_square(self) -> bool:
        return self.m == self.n

    def row_length(self, a: int) -> int:
        return self.row_lengths[a - 1]

    def col_length(self, b: int) -> int:
        return self.col_lengths[b - 1]

    def __contains__(self, square) -> bool:
        a, b = square
        return 1 <= a <= self.m and 1 <= b <= self.row_lengths[a - 1]

    def __str__(self) -> str:
        return ",".join(map(str, self.row_lengths))


def _conjugate_lengths(lengths: Sequence[int]) -> Tuple[int, ...]:
    return tuple(sum(1 for part in lengths if part >= b) for b in range(1, lengths[0] + 1))


def from_row_lengths(lengths: Sequence[int]) -> FerrersDiagram:
    """Build a diagram from its row lengths, rejecting anything that is not a partition."""
    return FerrersDiagram(tuple(lengths))


def conjugate(d: FerrersDiagram) -> FerrersDiagram:
    """Transpose the diagram: rows become columns."""
    return FerrersDiagram(d.col_lengths)


def contains(d: FerrersDiagram, a: int, b: int) -> bool:
    """Whether square ``(a, b)`` lies in the diagram.

    Indices outside ``1..m`` x ``1..n`` raise :class:`RejectedInput`.
    """
    if not 1 <= a <= d.m:
        raise RejectedInput(f"row {a} out of range 1..{d.m}")
    if not 1 <= b <= d.n:
        raise RejectedInput(f"column {b} out of range 1..{d.n}")
    return b <= d.row_lengths[a - 1]


def edges(d: FerrersDiagram) -> List[Square]:
    """All squares of the diagram in row-major order; each is an edge row a -- column b."""
    return [(a, b) for a in range(1, d.m + 1) for b in range(1, d.row_lengths[a - 1] + 1)]


def vertices(d: FerrersDiagram) -> List[Vertex]:
    return [row(a) for a in range(1, d.m + 1)] + [col(b) for b in range(1, d.n + 1)]


@dataclass(frozen=True)
class IndexSubset:
    """Retained original row and column indices, each strictly increasing."""

    rows: Tuple[int, ...]
    cols: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "rows", tuple(self.rows))
        object.__setattr__(self, "cols", tuple(self.cols))
        for name, seq in (("rows", self.rows), ("cols", self.cols)):
            if not seq:
                raise RejectedInput(f"retained {name} must be nonempty")
            if any(seq[i] >= seq[i + 1] for i in range(len(seq) - 1)):
                raise RejectedInput(f"retained {name} must be strictly increasing")


@dataclass(frozen=True)
class Subdiagram:
    """An induced subdiagram together with original <-> local index maps."""

    diagram: FerrersDiagram
    rows: Tuple[int, ...]  # local row i (1-based) is original row rows[i - 1]
    cols: Tuple[int, ...]

    @property
    def row_to_local(self) -> Dict[int, int]:
        return {orig: i for i, orig in enumerate(self.rows, 1)}

    @property
    def col_to_local(self) -> Dict[int, int]:
        return {orig: i for i, orig in enumerate(self.cols, 1)}

    def orig_row(self, local: int) -> int:
        return self.rows[local - 1]

    def orig_col(self, local: int) -> int:
        return self.cols[local - 1]


def induced_subdiagram(d: FerrersDiagram, subset: IndexSubset) -> Subdiagram:
    """Restrict ``d`` to the retained rows and columns.

    Local row ``i`` has length equal to the number of retained columns
    inside original row ``subset.rows[i - 1]``.  Every retained row and
    every retained column must keep at least one square.
    """
    for a in subset.rows:
        if not 1 <= a <= d.m:
            raise RejectedInput(f"retained row {a} out of range 1..{d.m}")
    for b in subset.cols:
        if not 1 <= b <= d.n:
            raise RejectedInput(f"retained column {b} out of range 1..{d.n}")

    lengths = []
    for a in subset.rows:
        length = sum(1 for b in subset.cols if b <= d.row_length(a))
        if length == 0:
            raise RejectedInput(f"retained row {a} has no retained column inside the diagram")
        lengths.append(length)
    if lengths[0] < len(subset.cols):
        lost = subset.cols[lengths[0]]
        raise RejectedInput(f"retained column {lost} has no retained row inside the diagram")

    sub = FerrersDiagram(tuple(lengths))
    # retained lines of a down-closed board always give a partition again
    assert all(lengths[i] >= lengths[i + 1] for i in range(len(lengths) - 1))
    return Subdiagram(sub, subset.rows, subset.cols)


def partitions(total: int, largest: int | None = None) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``total`` in reverse lexicographic order."""
    if largest is None:
        largest = total
    if total == 0:
        yield ()
        return
    for first in range(min(total, largest), 0, -1):
        for rest in partitions(total - first, first):
            yield (first,) + rest


def diagrams_up_to(max_cells: int) -> Iterator[FerrersDiagram]:
    """Every Ferrers diagram with between 1 and ``max_cells`` squares."""
    for total in range(1, max_cells + 1):
        for lengths in partitions(total):
            yield FerrersDiagram(lengths)


def square_diagrams(n: int) -> Iterator[FerrersDiagram]:
    """Diagrams with exactly ``n`` rows whose first row has length ``n``."""

    def tails(count, largest):
        if count == 0:
            yield ()
            return
        for part in range(largest, 0, -1):
            for rest in tails(count - 1, part):
                yield (part,) + rest

    for rest in tails(n - 1, n):
        yield FerrersDiagram((n,) + rest)
