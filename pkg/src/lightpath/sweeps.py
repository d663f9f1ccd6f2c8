"""Graph families and cross-check sweeps (device vs. brute-force oracle)."""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from itertools import product

import numpy as np

from .delay_system import REFERENCE_MINIMAL_SYSTEMS, minimal_system, verify_minimality
from .errors import ResourceLimitError
from .graph import Digraph
from .sim import DeviceConfig, OracleReport, verify_against_oracle

__all__ = [
    "EXHAUSTIVE_LIMIT",
    "all_digraphs",
    "random_digraphs",
    "SweepResult",
    "oracle_sweep",
    "reference_rows",
    "minimality_rows",
]

EXHAUSTIVE_LIMIT = 4  # 2**20 graphs at n=5 is out of desk range


def all_digraphs(n: int, start: int = 0, stop: int | None = None) -> Iterator[Digraph]:
    """Every arc subset on n nodes (``2**(n*(n-1))`` graphs), fixed start/stop."""
    if n > EXHAUSTIVE_LIMIT:
        raise ResourceLimitError(
            f"exhaustive sweep over n={n} would need 2**{n * (n - 1)} graphs"
        )
    stop = n - 1 if stop is None else stop
    pairs = [(u, v) for u in range(n) for v in range(n) if u != v]
    for mask in product((False, True), repeat=len(pairs)):
        yield Digraph(n, (p for p, keep in zip(pairs, mask) if keep), start, stop)


def random_digraphs(
    count: int, n_min: int = 5, n_max: int = 8, seed: int = 0
) -> Iterator[Digraph]:
    """Random digraphs with start 0 and stop n-1; arc density varies per graph."""
    rng = np.random.default_rng(seed)
    for _ in range(count):
        n = int(rng.integers(n_min, n_max + 1))
        density = rng.uniform(0.15, 0.85)
        keep = rng.random((n, n)) < density
        arcs = [(u, v) for u in range(n) for v in range(n) if u != v and keep[u, v]]
        yield Digraph(n, arcs, 0, n - 1)


@dataclass
class SweepResult:
    total: int = 0
    matched: int = 0
    yes: int = 0
    failures: list[tuple[Digraph, OracleReport]] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.total == self.matched

    def __str__(self) -> str:
        return f"{self.matched}/{self.total} match"


def oracle_sweep(graphs: Iterable[Digraph], arc_delay: int = 0) -> SweepResult:
    """Run each graph with ``general_system(n)`` and compare against the oracle."""
    result = SweepResult()
    for g in graphs:
        report = verify_against_oracle(g, DeviceConfig.general(g, arc_delay=arc_delay))
        result.total += 1
        result.yes += report.oracle_decision
        if report.match:
            result.matched += 1
        else:
            result.failures.append((g, report))
    return result


def reference_rows() -> list[tuple[int, tuple[int, ...], tuple[int, ...] | None]]:
    """``(n, expected, found)`` for each published minimal system, searching up to ``2**n - 1``."""
    rows = []
    for n, expected in REFERENCE_MINIMAL_SYSTEMS.items():
        found = minimal_system(n, (1 << n) - 1)
        rows.append((n, expected, found.delays if found else None))
    return rows


def minimality_rows(n_max: int) -> list[tuple[int, int]]:
    """``(n, smallest achievable largest delay)`` for n = 1..n_max."""
    return [(n, verify_minimality(n)) for n in range(1, n_max + 1)]
