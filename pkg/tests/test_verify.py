"""The sweep must catch a broken step in either bijection."""

import pytest

from ferrers import hamiltonian, spanning
from ferrers.verify import run_verification

original_forward = hamiltonian.path_to_rook_pair
original_backward = hamiltonian.rook_pair_to_path
original_to_tree = spanning.config_to_tree
original_to_config = spanning.tree_to_config


def test_clean_build_passes():
    report = run_verification(10, 42)
    assert report.passed, report.failure
    assert report.checks["hamiltonian bijection"] > 0
    assert report.checks["shape condition"] > 0
    assert not report.skipped


def forward_swapped(d, p):
    A, B = original_forward(d, p)
    return B, A


def backward_ignores_previous_column(d, A, B):
    # always take the first column holding an A, skipping the b_{i-1} rule
    remaining = A.row_of_col()
    b_of_row = B.col_of_row()
    rows, cols = [], []
    for _ in range(d.n):
        a = remaining.pop(min(remaining))
        rows.append(a)
        cols.append(b_of_row.pop(a))
    return hamiltonian.HamiltonianPath.from_sequences(rows, cols)


def to_tree_drops_core_attachment(d, cfg, rng=None):
    t = original_to_tree(d, cfg, rng)
    edges = list(t.edges)
    if len(edges) > 2 and (1, 1) not in edges:
        edges[-1] = (1, 1)
    return spanning.SpanningTree(tuple(edges))


def to_config_shifts_first_r(d, t, rng=None):
    cfg = original_to_config(d, t, rng)
    r = cfg.r_map
    if r and r[2] > 1:
        r[2] -= 1
    return spanning.RCConfiguration.from_maps(r, cfg.c_map)


@pytest.mark.parametrize(
    "module,name,mutant",
    [
        (hamiltonian, "path_to_rook_pair", forward_swapped),
        (hamiltonian, "rook_pair_to_path", backward_ignores_previous_column),
        (spanning, "config_to_tree", to_tree_drops_core_attachment),
        (spanning, "tree_to_config", to_config_shifts_first_r),
    ],
)
def test_mutations_are_caught(monkeypatch, module, name, mutant):
    monkeypatch.setattr(module, name, mutant)
    report = run_verification(10, 42)
    assert not report.passed


def test_resource_cap_skips_with_warning(caplog):
    report = run_verification(6, 0, cap=5)
    assert report.passed
    assert report.skipped
    assert "skipping shape" in caplog.text


def test_rejects_nonpositive_max_cells():
    with pytest.raises(ValueError):
        run_verification(0, 0)
