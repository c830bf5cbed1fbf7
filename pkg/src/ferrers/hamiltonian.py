"""Hamiltonian paths of a square Ferrers graph and pairs of n-rook placements.

A path is stored from its row end: ``a1 b1 a2 b2 ... an bn`` with the
``a`` vertices rows and the ``b`` vertices columns.  The forward map marks
an A in ``(a_i, b_{i-1})`` (or in the first A-free column when
``b_{i-1}`` is taken) and a B in ``(a_i, b_i)``; the inverse peels the
marks off in the same order.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, List, Sequence, Tuple

from .diagram import FerrersDiagram, Vertex, col, conjugate, row
from .errors import InvariantViolation, RejectedInput
from .rook import VALID, Diagnosis, RookPlacement, validate_placement


@dataclass(frozen=True)
class HamiltonianPath:
    vertices: Tuple[Vertex, ...]

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(Vertex(*v) for v in self.vertices))

    @classmethod
    def from_sequences(cls, rows: Sequence[int], cols: Sequence[int]) -> "HamiltonianPath":
        """Interleave ``rows`` (a_i) and ``cols`` (b_i) into ``a1 b1 a2 b2 ...``."""
        if len(rows) != len(cols):
            raise RejectedInput("a row-end-first path needs equally many rows and columns")
        vs: List[Vertex] = []
        for a, b in zip(rows, cols):
            vs += [row(a), col(b)]
        return cls(tuple(vs))

    @property
    def rows(self) -> Tuple[int, ...]:
        return tuple(v.index for v in self.vertices[0::2])

    @property
    def cols(self) -> Tuple[int, ...]:
        return tuple(v.index for v in self.vertices[1::2])

    def reversed(self) -> "HamiltonianPath":
        return HamiltonianPath(self.vertices[::-1])

    def __len__(self) -> int:
        return len(self.vertices)

    def __str__(self) -> str:
        return " ".join(map(str, self.vertices))


def validate_path(d: FerrersDiagram, p: HamiltonianPath) -> Diagnosis:
    """Check that ``p`` is a row-end-first Hamiltonian path of the square diagram ``d``."""
    if d.m != d.n:
        return Diagnosis(False, f"diagram {d} is not square")
    vs = p.vertices
    if len(vs) != 2 * d.n:
        return Diagnosis(False, f"path has {len(vs)} vertices, expected {2 * d.n}")
    for i, v in enumerate(vs):
        want = "r" if i % 2 == 0 else "c"
        if v.kind != want:
            return Diagnosis(False, f"vertex {i + 1} ({v}) should be a {'row' if want == 'r' else 'column'}")
        bound = d.m if v.is_row else d.n
        if not 1 <= v.index <= bound:
            return Diagnosis(False, f"vertex {v} out of range")
    seen = set()
    for v in vs:
        if v in seen:
            return Diagnosis(False, f"vertex {v} visited twice")
        seen.add(v)
    for u, v in zip(vs, vs[1:]):
        a, b = (u.index, v.index) if u.is_row else (v.index, u.index)
        if (a, b) not in d:
            return Diagnosis(False, f"edge {u}-{v} is not a square of the diagram")
    return VALID


def _check_path(d: FerrersDiagram, p: HamiltonianPath) -> None:
    diag = validate_path(d, p)
    if not diag:
        raise RejectedInput(f"invalid Hamiltonian path: {diag.reason}")


def _check_placement(d: FerrersDiagram, p: RookPlacement, label: str) -> None:
    diag = validate_placement(d, p)
    if not diag:
        raise RejectedInput(f"invalid placement {label}: {diag.reason}")


def path_to_rook_pair(d: FerrersDiagram, p: HamiltonianPath) -> Tuple[RookPlacement, RookPlacement]:
    """Encode a Hamiltonian path as an ordered pair ``(A, B)`` of n-rook placements."""
    _check_path(d, p)
    n = d.n
    a_seq, b_seq = p.rows, p.cols
    a_col = {}  # column -> row holding its A
    a_marks = []
    b_marks = []
    prev_b = 1
    for a, b in zip(a_seq, b_seq):
        target = prev_b
        if target in a_col:
            target = next(c for c in range(1, n + 1) if c not in a_col)
            # the first free column must also be the next one after b_{i-1}
            if target <= prev_b:
                raise InvariantViolation(
                    f"fallback column {target} does not follow column {prev_b}"
                )
        if (a, target) not in d:
            raise InvariantViolation(f"A mark ({a},{target}) falls outside the diagram")
        a_col[target] = a
        a_marks.append((a, target))
        b_marks.append((a, b))
        prev_b = b
    return RookPlacement(tuple(a_marks)), RookPlacement(tuple(b_marks))


def rook_pair_to_path(d: FerrersDiagram, A: RookPlacement, B: RookPlacement) -> HamiltonianPath:
    """Decode an ordered pair of n-rook placements back into a Hamiltonian path."""
    if d.m != d.n:
        raise RejectedInput(f"shape {d} is not square")
    _check_placement(d, A, "A")
    _check_placement(d, B, "B")
    remaining_a = A.row_of_col()
    b_of_row = B.col_of_row()
    rows, cols = [], []
    prev_b = 1
    for _ in range(d.n):
        c = prev_b if prev_b in remaining_a else min(remaining_a)
        a = remaining_a.pop(c)
        b = b_of_row.pop(a)
        rows.append(a)
        cols.append(b)
        prev_b = b
    path = HamiltonianPath.from_sequences(rows, cols)
    diag = validate_path(d, path)
    if not diag:
        raise InvariantViolation(f"decoded path is not Hamiltonian: {diag.reason}")
    return path


def swap_ab_path(d: FerrersDiagram, p: HamiltonianPath) -> HamiltonianPath:
    """The path obtained by exchanging the roles of the A and B placements."""
    A, B = path_to_rook_pair(d, p)
    return rook_pair_to_path(d, B, A)


def transpose_path(d: FerrersDiagram, p: HamiltonianPath) -> HamiltonianPath:
    """Relabel rows as columns and vice versa, giving a path on ``conjugate(d)``.

    The relabelled sequence starts at a column, so it is reversed to put the
    row end first again.
    """
    _check_path(d, p)
    swapped = [Vertex("c" if v.is_row else "r", v.index) for v in p.vertices]
    out = HamiltonianPath(tuple(reversed(swapped)))
    diag = validate_path(conjugate(d), out)
    if not diag:
        raise InvariantViolation(f"transposed path invalid on conjugate: {diag.reason}")
    return out


def canonical(vertices: Iterable[Vertex]) -> HamiltonianPath:
    """Orient an undirected path: row end first if it has one, else the smaller orientation."""
    vs = tuple(vertices)
    rev = vs[::-1]
    if vs[0].is_row != rev[0].is_row:
        return HamiltonianPath(vs if vs[0].is_row else rev)

    def key(seq):
        return [(0 if v.is_row else 1, v.index) for v in seq]

    return HamiltonianPath(min(vs, rev, key=key))
