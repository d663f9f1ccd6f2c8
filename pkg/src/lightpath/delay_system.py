"""Delay labelling systems.

A delay system is a set of positive integer node delays ``d_1 < ... < d_n``
whose total ``sum(d)`` can be written as ``sum(a_i * d_i)`` with nonnegative
integer coefficients only when every ``a_i == 1``.  A walk through the device
that ends exactly at that total must therefore have visited every node once.

Public API
----------

general_system(n)              the exponential family 2**n - 2**(n-i)
representation_count(s, t)     number of coefficient vectors reaching t
is_valid_system(s)             unique-representation check of the total
minimal_system(n, max_bound)   backtracking search for the smallest system
verify_minimality(n)           exhaustive minimum of the largest delay
target_time(s, arc_delay)      arrival moment of a Hamiltonian ray
"""

from __future__ import annotations

from collections.abc import Iterable, Sequence
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .errors import ResourceLimitError

__all__ = [
    "N_MAX",
    "DEFAULT_TABLE_CAP",
    "DEFAULT_MINIMALITY_LIMIT",
    "DelaySystem",
    "CoefficientVector",
    "general_system",
    "representation_count",
    "is_valid_system",
    "minimal_system",
    "verify_minimality",
    "target_time",
    "REFERENCE_MINIMAL_SYSTEMS",
]

# Python integers never overflow; the bound only keeps requests sane.
N_MAX = 1024
DEFAULT_TABLE_CAP = 10**8
DEFAULT_MINIMALITY_LIMIT = 6

# Published minimal systems for n = 1..6 (search targets for the backtracking).
REFERENCE_MINIMAL_SYSTEMS: dict[int, tuple[int, ...]] = {
    1: (1,),
    2: (2, 3),
    3: (4, 6, 7),
    4: (8, 12, 14, 15),
    5: (16, 24, 28, 30, 31),
    6: (32, 48, 56, 60, 62, 63),
}


@dataclass(frozen=True)
class DelaySystem:
    """Strictly ascending positive delays, in abstract time units."""

    delays: tuple[int, ...]

    def __init__(self, delays: Iterable[int]):
        values = tuple(int(d) for d in delays)
        if not values:
            raise ValueError("a delay system needs at least one delay")
        if values[0] < 1:
            raise ValueError(f"delays must be >= 1, got {values[0]}")
        for a, b in zip(values, values[1:]):
            if b <= a:
                raise ValueError(f"delays must be strictly ascending: {a} then {b}")
        object.__setattr__(self, "delays", values)

    @property
    def size(self) -> int:
        return len(self.delays)

    @property
    def total(self) -> int:
        return sum(self.delays)

    @property
    def largest(self) -> int:
        return self.delays[-1]

    def __len__(self) -> int:
        return len(self.delays)

    def __iter__(self):
        return iter(self.delays)

    def __str__(self) -> str:
        return " ".join(str(d) for d in self.delays)

    @classmethod
    def parse(cls, line: str) -> "DelaySystem":
        """Read the one-line form written by ``str()``."""
        return cls(int(tok) for tok in line.split())


@dataclass(frozen=True)
class CoefficientVector:
    """Visit counts ``a_i >= 0``, one per delay position."""

    coeffs: tuple[int, ...]

    def __init__(self, coeffs: Iterable[int]):
        values = tuple(int(a) for a in coeffs)
        if any(a < 0 for a in values):
            raise ValueError("coefficients must be nonnegative")
        object.__setattr__(self, "coeffs", values)

    def dot(self, system: DelaySystem) -> int:
        if len(self.coeffs) != system.size:
            raise ValueError(
                f"coefficient vector has length {len(self.coeffs)}, "
                f"system has {system.size} delays"
            )
        return sum(a * d for a, d in zip(self.coeffs, system.delays))

    def is_all_ones(self) -> bool:
        return all(a == 1 for a in self.coeffs)


def _check_n(n: int) -> None:
    if not 1 <= n <= N_MAX:
        raise ValueError(f"n must be in 1..{N_MAX}, got {n}")


def general_system(n: int) -> DelaySystem:
    """Return ``{2**n - 2**(n-i) : i = 1..n}``; its total is ``(n-1)*2**n + 1``.

    The members are exactly the n-bit numbers whose binary digits are
    nonincreasing (a run of ones followed by zeros), e.g. ``4, 6, 7`` for n=3.
    """
    _check_n(n)
    top = 1 << n
    return DelaySystem(top - (1 << (n - i)) for i in range(1, n + 1))


def _strided_cumsum(ways: np.ndarray, step: int) -> np.ndarray:
    # ways'[t] = ways[t] + ways[t - step] + ways[t - 2*step] + ...
    size = ways.shape[0]
    rows = -(-size // step)
    buf = np.zeros(rows * step, dtype=ways.dtype)
    buf[:size] = ways
    return buf.reshape(rows, step).cumsum(axis=0).reshape(-1)[:size]


def _count_table(delays: Sequence[int], limit: int) -> np.ndarray:
    """Exact representation counts for every value ``0..limit``.

    Works in int64 while a float64 shadow shows the counts stay well clear of
    overflow, and switches to Python integers (object arrays) otherwise.
    """
    ways = np.zeros(limit + 1, dtype=np.int64)
    ways[0] = 1
    for d in delays:
        if d > limit:
            continue
        if ways.dtype != object:
            shadow = _strided_cumsum(ways.astype(np.float64), d)
            if shadow.max() >= 2.0**61:
                ways = ways.astype(object)
        ways = _strided_cumsum(ways, d)
    return ways


def representation_count(
    system: DelaySystem | Sequence[int], target: int, *, cap: int = DEFAULT_TABLE_CAP
) -> int:
    """Count coefficient vectors ``a >= 0`` with ``sum(a_i * d_i) == target``.

    Counts are over ordered coefficient vectors, one coefficient per delay
    position.  The dynamic programme needs a table of ``target + 1`` entries;
    a :class:`ResourceLimitError` is raised when that exceeds ``cap``.
    """
    delays = system.delays if isinstance(system, DelaySystem) else tuple(system)
    if target < 0:
        raise ValueError(f"target must be >= 0, got {target}")
    if any(d < 1 for d in delays):
        raise ValueError("delays must be positive")
    if target + 1 > cap:
        raise ResourceLimitError(
            f"representation table of {target + 1} entries exceeds cap {cap}"
        )
    return int(_count_table(delays, target)[target])


def is_valid_system(system: DelaySystem, *, cap: int = DEFAULT_TABLE_CAP) -> bool:
    """True iff the all-ones vector is the only representation of the total."""
    return representation_count(system, system.total, cap=cap) == 1


def _saturated_step(ways: np.ndarray, d: int) -> np.ndarray:
    # Counts clipped at 2 are enough to tell "unique" from "not unique".
    return np.minimum(_strided_cumsum(ways, d), 2)


def _search_largest(n: int, largest: int) -> Optional[tuple[int, ...]]:
    """Lexicographically first valid system of size n whose largest delay is ``largest``.

    Validity is hereditary (a bad subset makes the whole set bad), so every
    prefix of the ascending sequence, joined with ``largest``, is checked as
    it is extended.
    """
    if n == 1:
        return (largest,)
    limit = n * largest
    base = np.zeros(limit + 1, dtype=np.int64)
    base[0] = 1
    # Members dividing the largest delay would give {x, largest} two representations.
    allowed = [c for c in range(1, largest) if largest % c]
    chosen: list[int] = []

    def extend(ways: np.ndarray, start: int, total: int) -> Optional[tuple[int, ...]]:
        slots = n - 1 - len(chosen)
        if slots == 0:
            final = _saturated_step(ways, largest)
            if final[total + largest] == 1:
                return tuple(chosen) + (largest,)
            return None
        for idx in range(start, len(allowed) - slots + 1):
            c = allowed[idx]
            nxt = _saturated_step(ways, c)
            # prefix + {largest} is a subset of the final system, so it must be valid too
            if _saturated_step(nxt, largest)[total + c + largest] != 1:
                continue
            chosen.append(c)
            found = extend(nxt, idx + 1, total + c)
            chosen.pop()
            if found is not None:
                return found
        return None

    return extend(base, 0, 0)


def minimal_system(n: int, max_bound: int) -> Optional[DelaySystem]:
    """Smallest-largest-delay valid system of size n with all delays <= ``max_bound``.

    Ties are broken by the lexicographically smallest ascending sequence.
    Returns ``None`` when nothing valid fits under the bound.  The search is
    exponential; keep n small (about 8 at most).
    """
    _check_n(n)
    if max_bound < 1:
        raise ValueError(f"max_bound must be >= 1, got {max_bound}")
    for largest in range(n, max_bound + 1):
        found = _search_largest(n, largest)
        if found is not None:
            return DelaySystem(found)
    return None


def verify_minimality(n: int, *, limit: int = DEFAULT_MINIMALITY_LIMIT) -> int:
    """Return the smallest achievable largest delay over all valid size-n systems.

    The general system bounds the answer by ``2**n - 1``, so the search below
    that bound is exhaustive.
    """
    _check_n(n)
    if n > limit:
        raise ResourceLimitError(
            f"exhaustive minimality search for n={n} exceeds the limit n<={limit}"
        )
    found = minimal_system(n, (1 << n) - 1)
    assert found is not None, "general system must be found within its own bound"
    return found.largest


def target_time(system: DelaySystem, arc_delay: int = 0) -> int:
    """Arrival moment of a Hamiltonian ray: node total plus ``n - 1`` arc traversals."""
    if arc_delay < 0:
        raise ValueError(f"arc_delay must be >= 0, got {arc_delay}")
    return system.total + (system.size - 1) * arc_delay
