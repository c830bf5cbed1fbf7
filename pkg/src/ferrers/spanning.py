"""Spanning trees of a Ferrers graph and their R/C configuration encoding.

A configuration places one R in every row but the first and one C in every
column but the first (plus a fixed X at ``(1, 1)``).  Conversion to a tree
runs in two stages: rows without a C and columns without an R are pruned,
each contributing the edge under its own mark; what survives is a square
core whose R's and C's are two rook placements, decoded into the path that
links column 1 to row 1.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from math import prod
from typing import Dict, Iterator, List, Mapping, Optional, Tuple

from .diagram import FerrersDiagram, IndexSubset, Square, Vertex, col, induced_subdiagram, row
from .errors import InvariantViolation, RejectedInput
from .hamiltonian import HamiltonianPath, path_to_rook_pair, rook_pair_to_path
from .rook import VALID, Diagnosis, RookPlacement, validate_placement


@dataclass(frozen=True)
class RCConfiguration:
    """R marks ``(row, col)`` for rows ``2..m`` and C marks ``(row, col)`` for columns ``2..n``."""

    r_marks: Tuple[Square, ...] = ()
    c_marks: Tuple[Square, ...] = ()

    def __post_init__(self):
        r = tuple(sorted(tuple(s) for s in self.r_marks))
        c = tuple(sorted((tuple(s) for s in self.c_marks), key=lambda s: (s[1], s[0])))
        object.__setattr__(self, "r_marks", r)
        object.__setattr__(self, "c_marks", c)

    @classmethod
    def from_maps(cls, r: Mapping[int, int], c: Mapping[int, int]) -> "RCConfiguration":
        """``r`` maps row -> column of its R; ``c`` maps column -> row of its C."""
        return cls(tuple(r.items()), tuple((a, b) for b, a in c.items()))

    @property
    def r_map(self) -> Dict[int, int]:
        return {a: b for a, b in self.r_marks}

    @property
    def c_map(self) -> Dict[int, int]:
        return {b: a for a, b in self.c_marks}


@dataclass(frozen=True)
class SpanningTree:
    edges: Tuple[Square, ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple(sorted(tuple(e) for e in self.edges)))

    def __iter__(self):
        return iter(self.edges)

    def __len__(self) -> int:
        return len(self.edges)


@dataclass(frozen=True)
class WeightVector:
    """Row weights ``x`` and column weights ``y``; edge ``(a, b)`` weighs ``x[a] * y[b]``."""

    x: Tuple[int, ...]
    y: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "x", tuple(self.x))
        object.__setattr__(self, "y", tuple(self.y))

    @classmethod
    def ones(cls, d: FerrersDiagram) -> "WeightVector":
        return cls((1,) * d.m, (1,) * d.n)

    def check(self, d: FerrersDiagram) -> None:
        if len(self.x) != d.m:
            raise RejectedInput(f"expected {d.m} row weights, got {len(self.x)}")
        if len(self.y) != d.n:
            raise RejectedInput(f"expected {d.n} column weights, got {len(self.y)}")
        for v in self.x + self.y:
            if isinstance(v, bool) or not isinstance(v, int):
                raise RejectedInput(f"weight {v!r} is not an integer")

    def edge(self, a: int, b: int) -> int:
        return self.x[a - 1] * self.y[b - 1]


# -- validation --------------------------------------------------------------


def validate_config(d: FerrersDiagram, cfg: RCConfiguration) -> Diagnosis:
    rows = [a for a, _ in cfg.r_marks]
    if rows != list(range(2, d.m + 1)):
        return Diagnosis(False, f"R marks must cover rows 2..{d.m} exactly once, got rows {rows}")
    cols = [b for _, b in cfg.c_marks]
    if cols != list(range(2, d.n + 1)):
        return Diagnosis(False, f"C marks must cover columns 2..{d.n} exactly once, got columns {cols}")
    for a, b in cfg.r_marks + cfg.c_marks:
        if (a, b) not in d:
            return Diagnosis(False, f"mark at ({a},{b}) is outside the diagram")
    return VALID


def validate_tree(d: FerrersDiagram, t: SpanningTree) -> Diagnosis:
    want = d.m + d.n - 1
    if len(t.edges) != want:
        return Diagnosis(False, f"a spanning tree has {want} edges, got {len(t.edges)}")
    if len(set(t.edges)) != len(t.edges):
        return Diagnosis(False, "repeated edge")
    for a, b in t.edges:
        if (a, b) not in d:
            return Diagnosis(False, f"edge ({a},{b}) is not a square of the diagram")
    parent = {}

    def find(v):
        while parent.get(v, v) != v:
            v = parent[v]
        return v

    for a, b in t.edges:
        ra, rb = find(row(a)), find(col(b))
        if ra == rb:
            return Diagnosis(False, f"edge ({a},{b}) closes a cycle")
        parent[ra] = rb
    # m + n - 1 acyclic edges on m + n vertices form a tree
    return VALID


def _check(diag: Diagnosis, what: str) -> None:
    if not diag:
        raise RejectedInput(f"invalid {what}: {diag.reason}")


# -- the bijection -----------------------------------------------------------


def config_to_tree(
    d: FerrersDiagram, cfg: RCConfiguration, rng: Optional[random.Random] = None
) -> SpanningTree:
    """Convert an R/C configuration into its spanning tree.

    Without ``rng`` pruning scans rows ``2..m`` then columns ``2..n`` and
    removes the first prunable line each pass.  With ``rng`` a random
    prunable line is removed each time; the result must not change.
    """
    _check(validate_config(d, cfg), "configuration")
    r = cfg.r_map
    c = cfg.c_map
    live_rows = set(range(2, d.m + 1))
    live_cols = set(range(2, d.n + 1))
    c_in_row = {a: 0 for a in range(1, d.m + 1)}
    r_in_col = {b: 0 for b in range(1, d.n + 1)}
    for a, b in r.items():
        r_in_col[b] += 1
    for b, a in c.items():
        c_in_row[a] += 1

    out: List[Square] = []
    while True:
        if rng is None:
            pick = next((("r", a) for a in sorted(live_rows) if c_in_row[a] == 0), None)
            if pick is None:
                pick = next((("c", b) for b in sorted(live_cols) if r_in_col[b] == 0), None)
        else:
            options = [("r", a) for a in sorted(live_rows) if c_in_row[a] == 0]
            options += [("c", b) for b in sorted(live_cols) if r_in_col[b] == 0]
            pick = rng.choice(options) if options else None
        if pick is None:
            break
        kind, i = pick
        if kind == "r":
            live_rows.remove(i)
            out.append((i, r[i]))
            r_in_col[r[i]] -= 1
        else:
            live_cols.remove(i)
            out.append((c[i], i))
            c_in_row[c[i]] -= 1

    out += _core_edges(d, sorted(live_rows), sorted(live_cols), r, c)
    return SpanningTree(tuple(out))


def _core_edges(d, core_rows, core_cols, r, c) -> List[Square]:
    if len(core_rows) != len(core_cols):
        raise InvariantViolation(
            f"irreducible core has {len(core_rows)} rows but {len(core_cols)} columns"
        )
    if not core_rows:
        return [(1, 1)]
    row_set, col_set = set(core_rows), set(core_cols)
    for a in core_rows:
        if r[a] not in col_set:
            raise InvariantViolation(f"core row {a} has its R outside the core columns")
    for b in core_cols:
        if c[b] not in row_set:
            raise InvariantViolation(f"core column {b} has its C outside the core rows")

    try:
        sub = induced_subdiagram(d, IndexSubset(tuple(core_rows), tuple(core_cols)))
    except RejectedInput as exc:
        raise InvariantViolation(f"irreducible core is not a diagram: {exc}") from exc
    rl, cl = sub.row_to_local, sub.col_to_local
    A = RookPlacement(tuple((rl[a], cl[r[a]]) for a in core_rows))
    B = RookPlacement(tuple((rl[c[b]], cl[b]) for b in core_cols))
    for label, p in (("R", A), ("C", B)):
        diag = validate_placement(sub.diagram, p)
        if not diag:
            raise InvariantViolation(f"core {label} marks are not a rook placement: {diag.reason}")

    path = rook_pair_to_path(sub.diagram, A, B)
    a_seq = [sub.orig_row(i) for i in path.rows]
    b_seq = [sub.orig_col(j) for j in path.cols]
    edges = [(a_seq[0], 1)]
    for i, (a, b) in enumerate(zip(a_seq, b_seq)):
        edges.append((a, b))
        if i + 1 < len(a_seq):
            edges.append((a_seq[i + 1], b))
    edges.append((1, b_seq[-1]))
    return edges


def tree_to_config(
    d: FerrersDiagram, t: SpanningTree, rng: Optional[random.Random] = None
) -> RCConfiguration:
    """Convert a spanning tree into its R/C configuration (inverse of :func:`config_to_tree`).

    Leaves other than row 1 and column 1 are stripped one at a time, each
    recording its edge as an R (row leaf) or C (column leaf).  The default
    order takes columns before rows, highest index first; ``rng`` picks a
    random leaf instead.
    """
    _check(validate_tree(d, t), "spanning tree")
    adj: Dict[Vertex, set] = {}
    for a, b in t.edges:
        adj.setdefault(row(a), set()).add(col(b))
        adj.setdefault(col(b), set()).add(row(a))
    root_r, root_c = row(1), col(1)
    r: Dict[int, int] = {}
    c: Dict[int, int] = {}

    def leaves():
        return [v for v, nb in adj.items() if len(nb) == 1 and v not in (root_r, root_c)]

    def priority(v):
        return (0 if v.is_row else 1, v.index)

    while True:
        cand = leaves()
        if not cand:
            break
        v = rng.choice(sorted(cand, key=priority)) if rng is not None else max(cand, key=priority)
        (u,) = adj.pop(v)
        adj[u].remove(v)
        if v.is_row:
            r[v.index] = u.index
        else:
            c[v.index] = u.index

    # what is left is a path from column 1 to row 1
    walk = [root_c]
    prev = None
    while walk[-1] != root_r:
        nxt = [u for u in adj[walk[-1]] if u != prev]
        if len(nxt) != 1:
            raise InvariantViolation("leaf stripping did not leave a path from column 1 to row 1")
        prev = walk[-1]
        walk.append(nxt[0])
    interior = walk[1:-1]
    if interior:
        core_rows = sorted(v.index for v in interior if v.is_row)
        core_cols = sorted(v.index for v in interior if not v.is_row)
        sub = induced_subdiagram(d, IndexSubset(tuple(core_rows), tuple(core_cols)))
        rl, cl = sub.row_to_local, sub.col_to_local
        local = HamiltonianPath(
            tuple(Vertex(v.kind, rl[v.index] if v.is_row else cl[v.index]) for v in interior)
        )
        A, B = path_to_rook_pair(sub.diagram, local)
        for a, b in A:
            r[sub.orig_row(a)] = sub.orig_col(b)
        for a, b in B:
            c[sub.orig_col(b)] = sub.orig_row(a)
    cfg = RCConfiguration.from_maps(r, c)
    diag = validate_config(d, cfg)
    if not diag:
        raise InvariantViolation(f"decoded configuration invalid: {diag.reason}")
    return cfg


# -- counting and weights ----------------------------------------------------


def count_spanning_trees_formula(d: FerrersDiagram) -> int:
    """Product of all row lengths but the first times all column lengths but the first."""
    return prod(d.row_lengths[1:]) * prod(d.col_lengths[1:])


def weighted_tree_sum_formula(d: FerrersDiagram, w: WeightVector) -> int:
    """Sum over spanning trees of the product of edge weights, in closed form."""
    w.check(d)
    px = list(itertools.accumulate(w.x))  # px[k - 1] = x_1 + ... + x_k
    py = list(itertools.accumulate(w.y))
    total = prod(w.x) * prod(w.y)
    for length in d.row_lengths[1:]:
        total *= py[length - 1]
    for length in d.col_lengths[1:]:
        total *= px[length - 1]
    return total


def tree_weight(d: FerrersDiagram, t: SpanningTree, w: WeightVector) -> int:
    _check(validate_tree(d, t), "spanning tree")
    w.check(d)
    return prod(w.edge(a, b) for a, b in t.edges)


def config_weight(d: FerrersDiagram, cfg: RCConfiguration, w: WeightVector) -> int:
    """X at (1, 1) times every R and C square, each weighted as an edge."""
    _check(validate_config(d, cfg), "configuration")
    w.check(d)
    return w.edge(1, 1) * prod(w.edge(a, b) for a, b in cfg.r_marks + cfg.c_marks)


def enumerate_configs(d: FerrersDiagram) -> Iterator[RCConfiguration]:
    """Stream every configuration, ordered by R columns (row 2 first) then C rows (column 2 first)."""
    r_choices = [range(1, d.row_length(a) + 1) for a in range(2, d.m + 1)]
    c_choices = [range(1, d.col_length(b) + 1) for b in range(2, d.n + 1)]
    for r_cols in itertools.product(*r_choices):
        r_marks = tuple(zip(range(2, d.m + 1), r_cols))
        for c_rows in itertools.product(*c_choices):
            yield RCConfiguration(r_marks, tuple(zip(c_rows, range(2, d.n + 1))))


def random_config(d: FerrersDiagram, rng: random.Random) -> RCConfiguration:
    r = {a: rng.randint(1, d.row_length(a)) for a in range(2, d.m + 1)}
    c = {b: rng.randint(1, d.col_length(b)) for b in range(2, d.n + 1)}
    return RCConfiguration.from_maps(r, c)
