"""Physical sizing: delay units to fibre lengths and detection times.

One delay unit is the distance light covers in the medium during one
resolvable detector interval.  All quantities are SI (seconds, metres).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Literal

import numpy as np

from .delay_system import DelaySystem, N_MAX, general_system

__all__ = [
    "SPEED_FRACTION_FIBER",
    "SPEED_FRACTION_SLOW_LIGHT",
    "PhysicalParams",
    "unit_length_m",
    "cable_lengths_m",
    "max_nodes",
    "nearest_fit_nodes",
    "solution_time_s",
    "SizingReport",
    "sizing_report",
]

SPEED_FRACTION_FIBER = 0.6
SPEED_FRACTION_SLOW_LIGHT = 1e-7

TimingMode = Literal["largest-delay", "total-sum"]


@dataclass(frozen=True)
class PhysicalParams:
    time_resolution_s: float = 1e-12
    light_speed_m_s: float = 3e8
    speed_fraction: float = 1.0

    def __post_init__(self):
        if not self.time_resolution_s > 0:
            raise ValueError("time_resolution_s must be positive")
        if not self.light_speed_m_s > 0:
            raise ValueError("light_speed_m_s must be positive")
        if not 0 < self.speed_fraction <= 1:
            raise ValueError("speed_fraction must be in (0, 1]")


def unit_length_m(params: PhysicalParams) -> float:
    return params.light_speed_m_s * params.speed_fraction * params.time_resolution_s


def cable_lengths_m(system: DelaySystem, params: PhysicalParams) -> np.ndarray:
    """Fibre length for each delay, same order as ``system.delays``."""
    return np.array(system.delays, dtype=np.float64) * unit_length_m(params)


def max_nodes(params: PhysicalParams, max_cable_m: float) -> int:
    """Largest n with ``2**n * unit_length <= max_cable_m`` (0 if n=1 already fails).

    Uses ``2**n`` as the proxy for the largest delay, as the sizing equation does.
    """
    if not max_cable_m > 0:
        raise ValueError("max_cable_m must be positive")
    unit = unit_length_m(params)
    ratio = max_cable_m / unit
    if ratio < 2:
        return 0
    n = int(math.floor(math.log2(ratio)))
    # log2 may land one off at exact powers of two
    while n + 1 <= N_MAX and math.ldexp(unit, n + 1) <= max_cable_m:
        n += 1
    while n > 0 and math.ldexp(unit, n) > max_cable_m:
        n -= 1
    return n


def nearest_fit_nodes(params: PhysicalParams, max_cable_m: float) -> int:
    """Nearest-integer solution of ``2**n * unit_length == max_cable_m``.

    This is the "about N nodes" reading; it may exceed :func:`max_nodes` by one
    because the rounded n can overshoot the cable budget.
    """
    if not max_cable_m > 0:
        raise ValueError("max_cable_m must be positive")
    return max(0, round(math.log2(max_cable_m / unit_length_m(params))))


def solution_time_s(
    n: int, params: PhysicalParams, mode: TimingMode = "largest-delay"
) -> float:
    """Detection time for an n-node instance.

    ``largest-delay`` counts ``2**n - 1`` units (the longest single cable);
    ``total-sum`` counts ``(n-1)*2**n + 1`` units, the actual arrival moment
    of a Hamiltonian ray with zero arc delay.
    """
    if not 1 <= n <= N_MAX:
        raise ValueError(f"n must be in 1..{N_MAX}, got {n}")
    if mode == "largest-delay":
        units = (1 << n) - 1
    elif mode == "total-sum":
        units = (n - 1) * (1 << n) + 1
    else:
        raise ValueError(f"unknown timing mode {mode!r}")
    return units * params.time_resolution_s


@dataclass(frozen=True)
class SizingReport:
    params: PhysicalParams
    unit_length_m: float
    n: int | None = None
    delays: tuple[int, ...] = ()
    cable_lengths_m: tuple[float, ...] = ()
    time_largest_s: float | None = None
    time_total_s: float | None = None
    max_cable_m: float | None = None
    max_nodes_nearest: int | None = None
    max_nodes_exact: int | None = None

    def as_dict(self) -> dict:
        return {
            "time_resolution_s": self.params.time_resolution_s,
            "light_speed_m_s": self.params.light_speed_m_s,
            "speed_fraction": self.params.speed_fraction,
            "unit_length_m": self.unit_length_m,
            "n": self.n,
            "delays": list(self.delays),
            "cable_lengths_m": list(self.cable_lengths_m),
            "largest_cable_m": self.cable_lengths_m[-1] if self.cable_lengths_m else None,
            "solution_time_largest_delay_s": self.time_largest_s,
            "solution_time_total_sum_s": self.time_total_s,
            "max_cable_m": self.max_cable_m,
            "max_nodes_nearest": self.max_nodes_nearest,
            "max_nodes_exact": self.max_nodes_exact,
        }


def sizing_report(
    n: int | None = None,
    params: PhysicalParams | None = None,
    max_cable_m: float | None = None,
) -> SizingReport:
    """Collect every sizing figure for an n-node general system and/or a cable budget."""
    params = params or PhysicalParams()
    fields: dict = {"params": params, "unit_length_m": unit_length_m(params)}
    if n is not None:
        system = general_system(n)
        fields.update(
            n=n,
            delays=system.delays,
            cable_lengths_m=tuple(float(x) for x in cable_lengths_m(system, params)),
            time_largest_s=solution_time_s(n, params, "largest-delay"),
            time_total_s=solution_time_s(n, params, "total-sum"),
        )
    if max_cable_m is not None:
        fields.update(
            max_cable_m=max_cable_m,
            max_nodes_nearest=nearest_fit_nodes(params, max_cable_m),
            max_nodes_exact=max_nodes(params, max_cable_m),
        )
    return SizingReport(**fields)
