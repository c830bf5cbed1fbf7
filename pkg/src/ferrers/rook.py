"""Full n-rook placements on square Ferrers diagrams."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Dict, Iterable, List, Tuple

from .diagram import FerrersDiagram, Square
from .errors import RejectedInput


@dataclass(frozen=True)
class Diagnosis:
    ok: bool
    reason: str = ""

    def __bool__(self) -> bool:
        return self.ok


VALID = Diagnosis(True)


@dataclass(frozen=True)
class RookPlacement:
    """A set of squares, stored sorted by row."""

    squares: Tuple[Square, ...]

    def __post_init__(self):
        object.__setattr__(self, "squares", tuple(sorted(tuple(s) for s in self.squares)))

    @classmethod
    def from_columns(cls, columns: Iterable[int]) -> "RookPlacement":
        """Placement putting the rook of row ``a`` in column ``columns[a - 1]``."""
        return cls(tuple((a, b) for a, b in enumerate(columns, 1)))

    def col_of_row(self) -> Dict[int, int]:
        return {a: b for a, b in self.squares}

    def row_of_col(self) -> Dict[int, int]:
        return {b: a for a, b in self.squares}

    def transpose(self) -> "RookPlacement":
        return RookPlacement(tuple((b, a) for a, b in self.squares))

    def __iter__(self):
        return iter(self.squares)

    def __len__(self) -> int:
        return len(self.squares)


def _require_square(d: FerrersDiagram) -> None:
    if d.m != d.n:
        raise RejectedInput(
            f"n-rook placements need as many rows as columns; shape {d} has {d.m} rows, {d.n} columns"
        )


def enumerate_rook_placements(d: FerrersDiagram) -> List[RookPlacement]:
    """All n-rook placements on a square diagram.

    Rows are filled from the shortest (row ``m``) upwards, so dead ends are
    found early.  The result is ordered lexicographically by the column of
    row ``m``, then row ``m - 1``, and so on.
    """
    _require_square(d)
    m = d.m
    chosen = [0] * (m + 1)
    used = [False] * (d.n + 1)
    found: List[RookPlacement] = []

    def place(a):
        if a == 0:
            found.append(RookPlacement.from_columns(chosen[1:]))
            return
        for b in range(1, d.row_length(a) + 1):
            if not used[b]:
                used[b] = True
                chosen[a] = b
                place(a - 1)
                used[b] = False

    place(m)
    return found


def count_rook_placements(d: FerrersDiagram) -> int:
    return len(enumerate_rook_placements(d))


def validate_placement(d: FerrersDiagram, p: RookPlacement) -> Diagnosis:
    """Check that ``p`` puts exactly one rook in each row of ``d``, in distinct columns, inside ``d``."""
    seen_rows = set()
    seen_cols = set()
    for a, b in p.squares:
        if not 1 <= a <= d.m:
            return Diagnosis(False, f"row {a} out of range 1..{d.m}")
        if a in seen_rows:
            return Diagnosis(False, f"row {a} holds more than one rook")
        if b in seen_cols:
            return Diagnosis(False, f"column {b} holds more than one rook")
        if (a, b) not in d:
            return Diagnosis(False, f"square ({a},{b}) is outside the diagram")
        seen_rows.add(a)
        seen_cols.add(b)
    for a in range(1, d.m + 1):
        if a not in seen_rows:
            return Diagnosis(False, f"row {a} has no rook")
    if d.m != d.n:
        return Diagnosis(False, f"diagram {d} is not square")
    return VALID
