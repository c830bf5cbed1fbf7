"""Text serialization used on the command line.

shape      ``6,5,5,2``
path       ``r5 c2 r4 c3 r2 c1 r3 c4 r1 c5``
placement  ``5,1;4,2;2,3;3,4;1,5``
config     ``R=2,3;3,2;4,2;C=4,2;2,3;1,4;3,5;1,6``
tree       ``1,3;1,4;1,6;2,2``
weights    ``1,2,3``

Whitespace is ignored when parsing.  All indices are 1-based.
"""

from __future__ import annotations

import re
from typing import Iterable, List, Optional, Sequence, Tuple

from .diagram import FerrersDiagram, Square, Vertex
from .errors import RejectedInput
from .hamiltonian import HamiltonianPath
from .rook import RookPlacement
from .spanning import RCConfiguration, SpanningTree

_WS = re.compile(r"\s+")
_TOKEN = re.compile(r"([rc])(\d+)")


def _strip(text: str) -> str:
    return _WS.sub("", text)


def _ints(text: str, what: str) -> List[int]:
    text = _strip(text)
    if not text:
        raise RejectedInput(f"empty {what}")
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise RejectedInput(f"malformed {what}: {text!r}") from None


def parse_shape(text: str) -> FerrersDiagram:
    return FerrersDiagram(tuple(_ints(text, "shape")))


def format_shape(d: FerrersDiagram) -> str:
    return ",".join(map(str, d.row_lengths))


def parse_weights(text: str) -> Tuple[int, ...]:
    return tuple(_ints(text, "weights"))


def format_weights(values: Iterable[int]) -> str:
    return ",".join(map(str, values))


def parse_path(text: str) -> HamiltonianPath:
    compact = _strip(text).lower()
    if not compact:
        raise RejectedInput("empty path")
    tokens = _TOKEN.findall(compact)
    if "".join(k + i for k, i in tokens) != compact:
        raise RejectedInput(f"malformed path: {text!r}")
    return HamiltonianPath(tuple(Vertex(k, int(i)) for k, i in tokens))


def format_path(p: HamiltonianPath) -> str:
    return str(p)


def _parse_pairs(text: str, what: str) -> List[Square]:
    text = _strip(text)
    if not text:
        return []
    pairs = []
    for chunk in text.split(";"):
        parts = chunk.split(",")
        if len(parts) != 2:
            raise RejectedInput(f"malformed {what} entry {chunk!r}")
        try:
            pairs.append((int(parts[0]), int(parts[1])))
        except ValueError:
            raise RejectedInput(f"malformed {what} entry {chunk!r}") from None
    return pairs


def _format_pairs(pairs: Iterable[Square]) -> str:
    return ";".join(f"{a},{b}" for a, b in pairs)


def parse_placement(text: str) -> RookPlacement:
    return RookPlacement(tuple(_parse_pairs(text, "placement")))


def format_placement(p: RookPlacement, row_order: Optional[Sequence[int]] = None) -> str:
    """Squares sorted by row, or listed in ``row_order`` when given."""
    if row_order is None:
        return _format_pairs(p.squares)
    by_row = p.col_of_row()
    return _format_pairs((a, by_row[a]) for a in row_order)


def parse_config(text: str) -> RCConfiguration:
    compact = _strip(text)
    m = re.fullmatch(r"R=(.*?);?C=(.*)", compact)
    if m is None:
        raise RejectedInput(f"malformed configuration {text!r}; expected 'R=...;C=...'")
    r = _parse_pairs(m.group(1), "R mark")
    c = _parse_pairs(m.group(2), "C mark")
    return RCConfiguration(tuple(r), tuple(c))


def format_config(cfg: RCConfiguration) -> str:
    """R marks by row, C marks by column."""
    return f"R={_format_pairs(cfg.r_marks)};C={_format_pairs(cfg.c_marks)}"


def parse_tree(text: str) -> SpanningTree:
    pairs = _parse_pairs(text, "tree edge")
    if not pairs:
        raise RejectedInput("empty tree")
    return SpanningTree(tuple(pairs))


def format_tree(t: SpanningTree) -> str:
    return _format_pairs(t.edges)
