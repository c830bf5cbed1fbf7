import pytest
from hypothesis import given, settings

from ferrers.diagram import FerrersDiagram, conjugate
from ferrers.errors import RejectedInput
from ferrers.formats import parse_path
from ferrers.hamiltonian import (
    HamiltonianPath,
    path_to_rook_pair,
    rook_pair_to_path,
    swap_ab_path,
    transpose_path,
    validate_path,
)
from ferrers.oracles import enumerate_hamiltonian_paths
from ferrers.rook import RookPlacement

from strategies import square_diagrams

FIG2 = FerrersDiagram((5, 4, 4, 3, 2))
FIG2_PATH = parse_path("r5 c2 r4 c3 r2 c1 r3 c4 r1 c5")


def placement(*squares):
    return RookPlacement(squares)


def test_figure_path_to_rooks():
    A, B = path_to_rook_pair(FIG2, FIG2_PATH)
    assert A == placement((5, 1), (4, 2), (2, 3), (3, 4), (1, 5))
    assert B == placement((5, 2), (4, 3), (2, 1), (3, 4), (1, 5))


def test_figure_rooks_to_path():
    A = placement((5, 1), (4, 2), (2, 3), (3, 4), (1, 5))
    B = placement((5, 2), (4, 3), (2, 1), (3, 4), (1, 5))
    assert rook_pair_to_path(FIG2, A, B) == FIG2_PATH


def test_single_square():
    d = FerrersDiagram((1,))
    p = parse_path("r1 c1")
    assert path_to_rook_pair(d, p) == (placement((1, 1)), placement((1, 1)))
    assert rook_pair_to_path(d, placement((1, 1)), placement((1, 1))) == p


def test_two_by_two_by_hand():
    d = FerrersDiagram((2, 2))
    # b0 = 1: A at (1,1), B at (1,1); then A at (2,1) is taken, first free column is 2
    assert path_to_rook_pair(d, parse_path("r1 c1 r2 c2")) == (
        placement((1, 1), (2, 2)),
        placement((1, 1), (2, 2)),
    )
    got = rook_pair_to_path(d, placement((1, 2), (2, 1)), placement((1, 1), (2, 2)))
    assert got == parse_path("r2 c2 r1 c1")


def test_swap_examples():
    d = FerrersDiagram((1,))
    assert swap_ab_path(d, parse_path("r1 c1")) == parse_path("r1 c1")
    s = swap_ab_path(FIG2, FIG2_PATH)
    assert validate_path(FIG2, s)
    assert swap_ab_path(FIG2, s) == FIG2_PATH


def test_transpose_examples():
    assert transpose_path(FerrersDiagram((1,)), parse_path("r1 c1")) == parse_path("r1 c1")
    d = FerrersDiagram((2, 2))
    assert transpose_path(d, parse_path("r1 c1 r2 c2")) == parse_path("r2 c2 r1 c1")
    t = transpose_path(FIG2, FIG2_PATH)
    assert transpose_path(conjugate(FIG2), t) == FIG2_PATH


def test_validate_path_examples():
    assert validate_path(FIG2, FIG2_PATH)
    bad_edge = validate_path(FerrersDiagram((2, 1)), parse_path("r1 c2 r2 c1"))
    assert not bad_edge
    repeated = validate_path(FerrersDiagram((2, 2)), parse_path("r1 c1 r1 c2"))
    assert not repeated and "twice" in repeated.reason
    assert not validate_path(FerrersDiagram((2, 2)), parse_path("c1 r1 c2 r2"))
    assert not validate_path(FerrersDiagram((2, 2)), parse_path("r1 c1"))


def test_invalid_inputs_rejected():
    with pytest.raises(RejectedInput):
        path_to_rook_pair(FerrersDiagram((2, 2)), parse_path("r1 c1 r1 c2"))
    with pytest.raises(RejectedInput):
        rook_pair_to_path(FerrersDiagram((2, 2)), placement((1, 1), (2, 1)), placement((1, 1), (2, 2)))
    with pytest.raises(RejectedInput):
        rook_pair_to_path(FerrersDiagram((2, 1)), placement((1, 1)), placement((1, 1)))


def test_from_sequences_requires_balance():
    with pytest.raises(RejectedInput):
        HamiltonianPath.from_sequences([1, 2], [1])


@settings(max_examples=40, deadline=None)
@given(square_diagrams(max_n=4))
def test_round_trips(d):
    for p in enumerate_hamiltonian_paths(d):
        A, B = path_to_rook_pair(d, p)
        assert rook_pair_to_path(d, A, B) == p
        assert rook_pair_to_path(d, B, A) == swap_ab_path(d, p)
