"""Batch self-check: run every bijection and counting identity over small diagrams.

Functions are looked up through their modules at call time so a test can
monkeypatch a single step and watch the sweep fail.
"""

from __future__ import annotations

import logging
import random
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, List, Optional

from . import hamiltonian, oracles, rook, spanning
from .diagram import FerrersDiagram, conjugate, diagrams_up_to
from .errors import ResourceLimit

log = logging.getLogger(__name__)

DEFAULT_CAP = 20_000


class CheckFailed(Exception):
    pass


@dataclass
class Report:
    checks: Counter = field(default_factory=Counter)
    skipped: List[str] = field(default_factory=list)
    failure: Optional[str] = None
    error: Optional[Exception] = None

    @property
    def passed(self) -> bool:
        return self.failure is None


def _expect(cond: bool, msg: Callable[[], str]) -> None:
    if not cond:
        raise CheckFailed(msg())


def check_spanning_counts(d: FerrersDiagram, cap: int = DEFAULT_CAP) -> List[tuple]:
    formula = spanning.count_spanning_trees_formula(d)
    det = oracles.kirchhoff_count(d)
    trees = oracles.enumerate_spanning_trees(d, cap=cap)
    _expect(
        formula == det == len(trees),
        lambda: f"shape {d}: formula {formula}, kirchhoff {det}, enumeration {len(trees)}",
    )
    return trees


def check_spanning_bijection(d: FerrersDiagram, trees: List[tuple]) -> dict:
    """Both compositions are identities and the image is exactly the tree set."""
    image = {}
    for cfg in spanning.enumerate_configs(d):
        t = spanning.config_to_tree(d, cfg)
        _expect(t.edges not in image, lambda: f"shape {d}: two configurations give tree {t.edges}")
        image[t.edges] = cfg
        back = spanning.tree_to_config(d, t)
        _expect(back == cfg, lambda: f"shape {d}: config {cfg} -> tree -> {back}")
    _expect(
        set(image) == set(trees),
        lambda: f"shape {d}: configuration images differ from enumerated trees",
    )
    for edges_ in trees:
        t = spanning.SpanningTree(edges_)
        again = spanning.config_to_tree(d, spanning.tree_to_config(d, t))
        _expect(again == t, lambda: f"shape {d}: tree {edges_} -> config -> {again.edges}")
    return image


def check_order_independence(d: FerrersDiagram, rng: random.Random, trials: int) -> None:
    for _ in range(trials):
        cfg = spanning.random_config(d, rng)
        seed = rng.randrange(2**32)
        t = spanning.config_to_tree(d, cfg)
        shuffled = spanning.config_to_tree(d, cfg, rng=random.Random(seed))
        _expect(shuffled == t, lambda: f"shape {d}: pruning order changed tree for {cfg} (seed {seed})")
        back = spanning.tree_to_config(d, t, rng=random.Random(seed))
        _expect(back == cfg, lambda: f"shape {d}: leaf order changed config for {t.edges} (seed {seed})")


def random_weights(d: FerrersDiagram, rng: random.Random, low: int = 1, high: int = 5):
    x = tuple(rng.randint(low, high) for _ in range(d.m))
    y = tuple(rng.randint(low, high) for _ in range(d.n))
    return spanning.WeightVector(x, y)


def check_weights(d: FerrersDiagram, image: dict, w) -> None:
    total = 0
    for edges_, cfg in image.items():
        t = spanning.SpanningTree(edges_)
        tw = spanning.tree_weight(d, t, w)
        cw = spanning.config_weight(d, cfg, w)
        _expect(tw == cw, lambda: f"shape {d}, weights {w}: tree {edges_} weighs {tw}, config {cw}")
        total += tw
    formula = spanning.weighted_tree_sum_formula(d, w)
    det = oracles.weighted_kirchhoff(d, w)
    _expect(
        formula == det == total,
        lambda: f"shape {d}, weights {w}: formula {formula}, kirchhoff {det}, tree sum {total}",
    )


def check_hamiltonian(d: FerrersDiagram) -> None:
    """Count identity, both round trips, and both involutions on a square diagram."""
    placements = rook.enumerate_rook_placements(d)
    paths = oracles.enumerate_hamiltonian_paths(d)
    _expect(
        len(paths) == len(placements) ** 2,
        lambda: f"shape {d}: {len(paths)} Hamiltonian paths but {len(placements)} rook placements",
    )
    pairs = set()
    conj = conjugate(d)
    for p in paths:
        A, B = hamiltonian.path_to_rook_pair(d, p)
        pairs.add((A, B))
        back = hamiltonian.rook_pair_to_path(d, A, B)
        _expect(back == p, lambda: f"shape {d}: path {p} -> pair -> {back}")

        s = hamiltonian.swap_ab_path(d, p)
        _expect(bool(hamiltonian.validate_path(d, s)), lambda: f"shape {d}: swap of {p} invalid: {s}")
        ss = hamiltonian.swap_ab_path(d, s)
        _expect(ss == p, lambda: f"shape {d}: swap twice on {p} gives {ss}")

        t = hamiltonian.transpose_path(d, p)
        _expect(bool(hamiltonian.validate_path(conj, t)), lambda: f"shape {d}: transpose of {p} invalid")
        tt = hamiltonian.transpose_path(conj, t)
        _expect(tt == p, lambda: f"shape {d}: transpose twice on {p} gives {tt}")
    _expect(
        len(pairs) == len(paths),
        lambda: f"shape {d}: path_to_rook_pair is not injective",
    )
    for A in placements:
        for B in placements:
            p = hamiltonian.rook_pair_to_path(d, A, B)
            again = hamiltonian.path_to_rook_pair(d, p)
            _expect(again == (A, B), lambda: f"shape {d}: pair {A},{B} -> path {p} -> {again}")


def check_no_hamiltonian(d: FerrersDiagram) -> None:
    paths = oracles.enumerate_hamiltonian_paths(d)
    _expect(not paths, lambda: f"shape {d}: |m-n| >= 2 yet found path {paths[0]}")


def run_verification(
    max_cells: int,
    seed: int,
    *,
    cap: int = DEFAULT_CAP,
    order_trials: int = 3,
    weight_trials: int = 2,
) -> Report:
    """Sweep every diagram with at most ``max_cells`` squares and stop at the first failure."""
    if max_cells < 1:
        raise ValueError("max_cells must be at least 1")
    rng = random.Random(seed)
    report = Report()
    for d in diagrams_up_to(max_cells):
        try:
            _verify_one(d, rng, cap, order_trials, weight_trials, report)
        except CheckFailed as exc:
            report.failure = str(exc)
            return report
        except ResourceLimit as exc:
            log.warning("skipping shape %s: %s", d, exc)
            report.skipped.append(f"{d}: {exc}")
        except Exception as exc:
            report.failure = f"shape {d}: {type(exc).__name__}: {exc}"
            report.error = exc
            return report
    return report


def _verify_one(d, rng, cap, order_trials, weight_trials, report) -> None:
    if spanning.count_spanning_trees_formula(d) > cap:
        raise ResourceLimit(f"more than {cap} spanning trees")
    trees = check_spanning_counts(d, cap)
    report.checks["spanning counts"] += 1
    image = check_spanning_bijection(d, trees)
    report.checks["spanning bijection"] += 1
    check_order_independence(d, rng, order_trials)
    report.checks["order independence"] += order_trials
    for _ in range(weight_trials):
        check_weights(d, image, random_weights(d, rng))
        report.checks["weight preservation"] += 1
    if d.is_square:
        if rook.count_rook_placements(d) ** 2 > cap:
            raise ResourceLimit(f"more than {cap} Hamiltonian paths")
        check_hamiltonian(d)
        report.checks["hamiltonian bijection"] += 1
    elif abs(d.m - d.n) >= 2:
        check_no_hamiltonian(d)
        report.checks["shape condition"] += 1
