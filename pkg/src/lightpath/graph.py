"""Directed graphs with a start and a stop node, plus an exhaustive
Hamiltonian-path oracle.

Edge-list text format::

    # comment
    n start stop
    u v
    u v
    ...

Nodes are ``0..n-1``.  ``#`` starts a comment, blank lines are ignored.
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field
from functools import cached_property
from typing import IO, Union

from .errors import GraphFormatError

__all__ = [
    "Digraph",
    "Path",
    "parse_graph",
    "format_graph",
    "hamiltonian_paths",
    "iter_hamiltonian_paths",
    "has_hamiltonian_path",
    "is_hamiltonian_path",
    "complete_digraph",
    "linear_digraph",
]

Path = tuple[int, ...]


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]
    start: int
    stop: int
    _succ: tuple[tuple[int, ...], ...] = field(init=False, repr=False, compare=False)

    def __init__(self, n: int, arcs: Iterable[tuple[int, int]], start: int, stop: int):
        if n < 1:
            raise ValueError(f"graph needs at least one node, got n={n}")
        for name, node in (("start", start), ("stop", stop)):
            if not 0 <= node < n:
                raise ValueError(f"{name} node {node} out of range 0..{n - 1}")
        if start == stop and n > 1:
            raise ValueError("start and stop must differ when n > 1")
        arc_list = [(int(u), int(v)) for u, v in arcs]
        seen: set[tuple[int, int]] = set()
        for u, v in arc_list:
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"arc ({u}, {v}) has an endpoint out of range 0..{n - 1}")
            if u == v:
                raise ValueError(f"self-loop at node {u}")
            if (u, v) in seen:
                raise ValueError(f"duplicate arc ({u}, {v})")
            seen.add((u, v))
        succ: list[list[int]] = [[] for _ in range(n)]
        for u, v in sorted(seen):
            succ[u].append(v)
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", frozenset(seen))
        object.__setattr__(self, "start", start)
        object.__setattr__(self, "stop", stop)
        object.__setattr__(self, "_succ", tuple(tuple(s) for s in succ))

    def successors(self, u: int) -> tuple[int, ...]:
        """Out-neighbours of ``u`` in ascending order."""
        return self._succ[u]

    def out_degree(self, u: int) -> int:
        return len(self._succ[u])

    @cached_property
    def sorted_arcs(self) -> list[tuple[int, int]]:
        return sorted(self.arcs)

    def relabel(self, perm: dict[int, int] | list[int]) -> "Digraph":
        """Copy of the graph with node ``u`` renamed ``perm[u]``."""
        return Digraph(
            self.n,
            ((perm[u], perm[v]) for u, v in self.arcs),
            perm[self.start],
            perm[self.stop],
        )


def _tokens(lineno: int, line: str, expected: int) -> list[int]:
    parts = line.split()
    if len(parts) != expected:
        raise GraphFormatError(
            f"expected {expected} integers, found {len(parts)} fields", lineno
        )
    values = []
    for tok in parts:
        try:
            values.append(int(tok, 10))
        except ValueError:
            raise GraphFormatError(f"not a decimal integer: {tok!r}", lineno) from None
    return values


def parse_graph(source: Union[str, IO[str]]) -> Digraph:
    """Parse edge-list text (a string or a readable text stream)."""
    text = source if isinstance(source, str) else source.read()
    header: list[int] | None = None
    arcs: list[tuple[int, int]] = []
    seen: dict[tuple[int, int], int] = {}
    n = start = stop = 0
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if header is None:
            header = _tokens(lineno, line, 3)
            n, start, stop = header
            if n < 1:
                raise GraphFormatError(f"node count must be >= 1, got {n}", lineno)
            for name, node in (("start", start), ("stop", stop)):
                if not 0 <= node < n:
                    raise GraphFormatError(
                        f"{name} node {node} out of range 0..{n - 1}", lineno
                    )
            if start == stop and n > 1:
                raise GraphFormatError("start and stop must differ when n > 1", lineno)
            continue
        u, v = _tokens(lineno, line, 2)
        for node in (u, v):
            if not 0 <= node < n:
                raise GraphFormatError(f"node {node} out of range 0..{n - 1}", lineno)
        if u == v:
            raise GraphFormatError(f"self-loop at node {u}", lineno)
        if (u, v) in seen:
            raise GraphFormatError(
                f"duplicate arc ({u}, {v}), first given on line {seen[(u, v)]}", lineno
            )
        seen[(u, v)] = lineno
        arcs.append((u, v))
    if header is None:
        raise GraphFormatError("missing 'n start stop' header line")
    return Digraph(n, arcs, start, stop)


def format_graph(g: Digraph, comment: str | None = None) -> str:
    """Inverse of :func:`parse_graph`; arcs are written in sorted order."""
    lines = []
    if comment:
        lines.extend(f"# {c}" for c in comment.splitlines())
    lines.append(f"{g.n} {g.start} {g.stop}")
    lines.extend(f"{u} {v}" for u, v in g.sorted_arcs)
    return "\n".join(lines) + "\n"


def iter_hamiltonian_paths(g: Digraph) -> Iterator[Path]:
    """Yield start-to-stop paths through all nodes, in lexicographic order."""
    if g.n == 1:
        yield (g.start,)
        return
    visited = [False] * g.n
    path = [g.start]
    visited[g.start] = True

    def dfs(u: int) -> Iterator[Path]:
        if len(path) == g.n:
            if u == g.stop:
                yield tuple(path)
            return
        for v in g.successors(u):
            if visited[v]:
                continue
            # stop may only be the last node
            if v == g.stop and len(path) != g.n - 1:
                continue
            visited[v] = True
            path.append(v)
            yield from dfs(v)
            path.pop()
            visited[v] = False

    yield from dfs(g.start)


def hamiltonian_paths(g: Digraph) -> list[Path]:
    return list(iter_hamiltonian_paths(g))


def has_hamiltonian_path(g: Digraph) -> bool:
    return next(iter_hamiltonian_paths(g), None) is not None


def is_hamiltonian_path(g: Digraph, nodes: Iterable[int]) -> bool:
    """Check a candidate node sequence against the graph."""
    seq = tuple(nodes)
    return (
        len(seq) == g.n
        and len(set(seq)) == g.n
        and seq[0] == g.start
        and seq[-1] == g.stop
        and all((u, v) in g.arcs for u, v in zip(seq, seq[1:]))
    )


def complete_digraph(n: int, start: int = 0, stop: int | None = None) -> Digraph:
    """All ``n*(n-1)`` arcs; stop defaults to the last node."""
    stop = n - 1 if stop is None else stop
    return Digraph(n, ((u, v) for u in range(n) for v in range(n) if u != v), start, stop)


def linear_digraph(n: int) -> Digraph:
    """Chain ``0 -> 1 -> ... -> n-1`` from node 0 to node n-1."""
    return Digraph(n, ((i, i + 1) for i in range(n - 1)), 0, n - 1)
