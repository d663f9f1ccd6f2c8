"""Event-driven model of the optical device.

A unit-intensity front enters the start node at time 0.  Each node holds the
front for its delay, then splits it evenly over its out-arcs; each arc adds the
uniform arc delay.  Fronts that meet at the same node at the same moment are
merged (intensities summed, walk counts summed), which keeps the state space
at most ``n * (horizon + 1)`` even though the number of walks grows
exponentially.  The stop node taps every front that matures there and still
forwards it to its successors.

The device answers YES when something arrives at the stop node exactly at
the detection signature (sum of node delays plus ``n - 1`` arc delays).
"""

from __future__ import annotations

import heapq
import math
from collections.abc import Iterator
from dataclasses import dataclass, field
from typing import NamedTuple, Optional

from .delay_system import DelaySystem, general_system
from .errors import ConfigurationError, ResourceLimitError
from .graph import Digraph, Path, hamiltonian_paths

__all__ = [
    "DEFAULT_EVENT_BUDGET",
    "DelayAssignment",
    "DeviceConfig",
    "RayFront",
    "SpectrumEntry",
    "Spectrum",
    "Decision",
    "OracleReport",
    "assign_delays",
    "custom_assignment",
    "arc_labelled_system",
    "find_zero_delay_cycle",
    "propagate",
    "simulate",
    "decide",
    "verify_against_oracle",
    "iter_detected_walks",
    "walk_spectrum",
    "format_intensity",
]

DEFAULT_EVENT_BUDGET = 10**7


@dataclass(frozen=True)
class DelayAssignment:
    """Per-node delays indexed by node.

    Assignments derived from a delay system have every delay >= 1.  Custom
    assignments (``custom=True``) may use zero, e.g. a linear graph that only
    needs its arc delays.
    """

    node_delays: tuple[int, ...]
    custom: bool = False

    def __post_init__(self):
        delays = tuple(int(d) for d in self.node_delays)
        object.__setattr__(self, "node_delays", delays)
        if not delays:
            raise ValueError("assignment needs at least one node delay")
        if any(d < 0 for d in delays):
            raise ValueError("node delays must be >= 0")
        if not self.custom and any(d == 0 for d in delays):
            raise ValueError("zero node delays are only allowed in a custom assignment")

    def __len__(self) -> int:
        return len(self.node_delays)

    @property
    def total(self) -> int:
        return sum(self.node_delays)


def assign_delays(g: Digraph, system: DelaySystem) -> DelayAssignment:
    """Node ``i`` gets the ``i``-th smallest delay of ``system``."""
    if system.size != g.n:
        raise ValueError(f"system has {system.size} delays but the graph has {g.n} nodes")
    return DelayAssignment(system.delays)


def custom_assignment(delays) -> DelayAssignment:
    return DelayAssignment(tuple(delays), custom=True)


def arc_labelled_system(n: int) -> tuple[DelaySystem, int]:
    """Node delays and a uniform arc delay drawn from one (n+1)-element system.

    The smallest member of ``general_system(n + 1)`` becomes the arc delay and
    the remaining ``n`` members label the nodes; for n=4 this gives arcs of 16
    and nodes 24, 28, 30, 31.  Uniqueness of the combined signature is not
    guaranteed; check it with :func:`verify_against_oracle`.
    """
    full = general_system(n + 1)
    return DelaySystem(full.delays[1:]), full.delays[0]


@dataclass(frozen=True)
class DeviceConfig:
    """Everything the device needs besides the graph.

    ``target`` defaults to the detection signature and ``horizon`` to
    ``target``: fronts later than the signature cannot change the answer.
    """

    assignment: DelayAssignment
    arc_delay: int = 0
    target: Optional[int] = None
    horizon: Optional[int] = None
    event_budget: int = DEFAULT_EVENT_BUDGET
    detector_threshold: float = 0.0

    def __post_init__(self):
        if self.arc_delay < 0:
            raise ValueError(f"arc_delay must be >= 0, got {self.arc_delay}")
        if self.target is None:
            n = len(self.assignment)
            object.__setattr__(
                self, "target", self.assignment.total + (n - 1) * self.arc_delay
            )
        if self.horizon is None:
            object.__setattr__(self, "horizon", self.target)
        if self.horizon < self.target:
            raise ValueError(f"horizon {self.horizon} is before target {self.target}")
        if self.event_budget < 1:
            raise ValueError("event_budget must be >= 1")
        if not self.detector_threshold >= 0:
            raise ValueError("detector_threshold must be >= 0")

    @classmethod
    def from_system(cls, g: Digraph, system: DelaySystem, **kwargs) -> "DeviceConfig":
        return cls(assign_delays(g, system), **kwargs)

    @classmethod
    def general(cls, g: Digraph, **kwargs) -> "DeviceConfig":
        """Configuration using ``general_system(g.n)``."""
        return cls.from_system(g, general_system(g.n), **kwargs)


class RayFront(NamedTuple):
    node: int
    time: int
    intensity: float
    count: int


class SpectrumEntry(NamedTuple):
    time: int
    intensity: float
    count: int


def format_intensity(x: float) -> str:
    """12 significant digits, always showing a decimal point."""
    s = f"{x:.12g}"
    if not any(c in s for c in ".eEn"):
        s += ".0"
    return s


@dataclass(frozen=True)
class Spectrum:
    """Arrivals registered at the stop node, ascending in time.

    ``suppressed`` holds arrivals that fell below the detector threshold; they
    are not part of ``entries`` and cannot produce a YES.
    """

    entries: tuple[SpectrumEntry, ...]
    target: int
    decision: bool
    hamiltonian_count: int
    suppressed: tuple[SpectrumEntry, ...] = ()
    events_processed: int = 0

    @property
    def answer(self) -> str:
        return "YES" if self.decision else "NO"

    def entry_at(self, time: int) -> Optional[SpectrumEntry]:
        for e in self.entries:
            if e.time == time:
                return e
        return None

    def suppressed_at(self, time: int) -> Optional[SpectrumEntry]:
        for e in self.suppressed:
            if e.time == time:
                return e
        return None

    @property
    def total_intensity(self) -> float:
        return math.fsum(e.intensity for e in self.entries)

    def to_text(self) -> str:
        lines = [f"target {self.target}", f"decision {self.answer}"]
        lines.extend(
            f"{e.time} {format_intensity(e.intensity)} {e.count}" for e in self.entries
        )
        return "\n".join(lines) + "\n"

    @classmethod
    def from_text(cls, text: str) -> "Spectrum":
        """Read :meth:`to_text` output (intensities only to 12 digits)."""
        target = None
        decision = None
        entries = []
        for line in text.splitlines():
            parts = line.split()
            if not parts:
                continue
            if parts[0] == "target":
                target = int(parts[1])
            elif parts[0] == "decision":
                decision = parts[1] == "YES"
            else:
                entries.append(SpectrumEntry(int(parts[0]), float(parts[1]), int(parts[2])))
        if target is None or decision is None:
            raise ValueError("spectrum text needs 'target' and 'decision' header lines")
        hit = next((e for e in entries if e.time == target), None)
        return cls(tuple(entries), target, decision, hit.count if hit else 0)


def find_zero_delay_cycle(g: Digraph, config: DeviceConfig) -> Optional[list[int]]:
    """Return the nodes of a directed cycle with zero total delay, if any.

    Such a cycle would let a front circulate forever without time advancing.
    """
    if config.arc_delay > 0:
        return None
    delays = config.assignment.node_delays
    zero = [d == 0 for d in delays]
    color = [0] * g.n  # 0 new, 1 on stack, 2 done
    for root in range(g.n):
        if not zero[root] or color[root]:
            continue
        stack = [(root, iter(g.successors(root)))]
        trail = [root]
        color[root] = 1
        while stack:
            u, it = stack[-1]
            for v in it:
                if not zero[v]:
                    continue
                if color[v] == 1:
                    return trail[trail.index(v):]
                if color[v] == 0:
                    color[v] = 1
                    trail.append(v)
                    stack.append((v, iter(g.successors(v))))
                    break
            else:
                color[u] = 2
                stack.pop()
                trail.pop()
    return None


def _validate(g: Digraph, config: DeviceConfig) -> None:
    if len(config.assignment) != g.n:
        raise ConfigurationError(
            f"assignment has {len(config.assignment)} delays but the graph has {g.n} nodes"
        )
    cycle = find_zero_delay_cycle(g, config)
    if cycle is not None:
        shown = " -> ".join(str(v) for v in cycle + cycle[:1])
        raise ConfigurationError(f"zero-delay cycle {shown}: a front would never advance")


def _zero_time_order(g: Digraph, config: DeviceConfig) -> list[int]:
    """Rank nodes so a zero-time hop u -> v always has rank[u] < rank[v]."""
    delays = config.assignment.node_delays
    if config.arc_delay > 0 or all(delays):
        return list(range(g.n))
    indeg = [0] * g.n
    for u, v in g.arcs:
        if delays[v] == 0:
            indeg[v] += 1
    ready = [u for u in range(g.n) if indeg[u] == 0]
    heapq.heapify(ready)
    rank = [0] * g.n
    pos = 0
    while ready:
        u = heapq.heappop(ready)
        rank[u] = pos
        pos += 1
        for v in g.successors(u):
            if delays[v] == 0:
                indeg[v] -= 1
                if indeg[v] == 0:
                    heapq.heappush(ready, v)
    return rank


def _build_spectrum(
    arrivals: list[SpectrumEntry], config: DeviceConfig, events: int
) -> Spectrum:
    kept = tuple(e for e in arrivals if e.intensity >= config.detector_threshold)
    dropped = tuple(e for e in arrivals if e.intensity < config.detector_threshold)
    hit = next((e for e in kept if e.time == config.target), None)
    return Spectrum(
        entries=kept,
        target=config.target,
        decision=hit is not None,
        hamiltonian_count=hit.count if hit else 0,
        suppressed=dropped,
        events_processed=events,
    )


def propagate(g: Digraph, config: DeviceConfig) -> Iterator[RayFront]:
    """Yield every coalesced front as it leaves its node, in time order.

    Raises :class:`ResourceLimitError` once more than ``config.event_budget``
    fronts have been processed.
    """
    _validate(g, config)
    delays = config.assignment.node_delays
    arc = config.arc_delay
    horizon = config.horizon
    rank = _zero_time_order(g, config)

    pending: dict[tuple[int, int], list] = {}
    queue: list[tuple[int, int, int]] = []
    t0 = delays[g.start]
    if t0 <= horizon:
        pending[(g.start, t0)] = [1.0, 1]
        queue.append((t0, rank[g.start], g.start))

    processed = 0
    while queue:
        t, _, u = heapq.heappop(queue)
        intensity, count = pending.pop((u, t))
        processed += 1
        if processed > config.event_budget:
            raise ResourceLimitError(
                f"event budget {config.event_budget} exhausted after "
                f"{processed - 1} coalesced events (t={t})"
            )
        yield RayFront(u, t, intensity, count)
        succ = g.successors(u)
        if not succ:
            continue
        share = intensity / len(succ)
        for v in succ:
            tv = t + arc + delays[v]
            if tv > horizon:
                continue
            slot = pending.get((v, tv))
            if slot is None:
                pending[(v, tv)] = [share, count]
                heapq.heappush(queue, (tv, rank[v], v))
            else:
                slot[0] += share
                slot[1] += count


def simulate(g: Digraph, config: DeviceConfig) -> Spectrum:
    """Run the device and record what the stop node's detector sees."""
    arrivals: list[SpectrumEntry] = []
    processed = 0
    for front in propagate(g, config):
        processed += 1
        if front.node == g.stop:
            arrivals.append(SpectrumEntry(front.time, front.intensity, front.count))
    return _build_spectrum(arrivals, config, processed)


class Decision(NamedTuple):
    answer: bool
    count: int

    def __str__(self) -> str:
        return f"YES {self.count}" if self.answer else "NO 0"


def decide(g: Digraph, config: DeviceConfig) -> Decision:
    spectrum = simulate(g, config)
    return Decision(spectrum.decision, spectrum.hamiltonian_count)


@dataclass
class OracleReport:
    """Device answer next to the brute-force answer.

    ``kind`` is ``"match"``, ``"undetectable"`` (the signature arrived but was
    below the detector threshold), ``"collision"`` (non-Hamiltonian rays reach
    the signature through node+arc delays) or ``"mismatch"``.
    """

    sim_decision: bool
    sim_count: int
    oracle_decision: bool
    oracle_count: int
    arc_delay: int
    target: int
    offending_entry: Optional[SpectrumEntry] = None
    oracle_paths: list[Path] = field(default_factory=list)
    kind: str = "match"

    @property
    def match(self) -> bool:
        return (self.sim_decision, self.sim_count) == (self.oracle_decision, self.oracle_count)

    def summary(self) -> str:
        sim = f"YES {self.sim_count}" if self.sim_decision else "NO 0"
        orc = f"YES {self.oracle_count}" if self.oracle_decision else "NO 0"
        if self.match:
            return f"oracle: match ({orc})"
        line = f"oracle: {self.kind} (device {sim}, oracle {orc})"
        if self.offending_entry is not None:
            e = self.offending_entry
            line += f"; entry at t={e.time}: intensity {format_intensity(e.intensity)}, count {e.count}"
        return line


def verify_against_oracle(g: Digraph, config: DeviceConfig) -> OracleReport:
    spectrum = simulate(g, config)
    paths = hamiltonian_paths(g)
    report = OracleReport(
        sim_decision=spectrum.decision,
        sim_count=spectrum.hamiltonian_count,
        oracle_decision=bool(paths),
        oracle_count=len(paths),
        arc_delay=config.arc_delay,
        target=config.target,
        oracle_paths=paths,
    )
    if report.match:
        return report
    hidden = spectrum.suppressed_at(config.target)
    if hidden is not None and (True, hidden.count) == (bool(paths), len(paths)):
        report.kind = "undetectable"
        report.offending_entry = hidden
    else:
        report.kind = "collision" if config.arc_delay > 0 else "mismatch"
        report.offending_entry = spectrum.entry_at(config.target) or hidden
    return report


def iter_detected_walks(
    g: Digraph, config: DeviceConfig
) -> Iterator[tuple[tuple[int, ...], int, float]]:
    """Enumerate every walk, one at a time, that reaches the stop node.

    Yields ``(nodes, time, intensity)`` for each walk from the start node whose
    last node is the stop node and whose arrival is within the horizon.  No
    merging: this is the exponential reference the event simulation is
    checked against.
    """
    _validate(g, config)
    delays = config.assignment.node_delays
    arc = config.arc_delay
    horizon = config.horizon
    t0 = delays[g.start]
    if t0 > horizon:
        return
    stack: list[tuple[tuple[int, ...], int, float]] = [((g.start,), t0, 1.0)]
    while stack:
        nodes, t, intensity = stack.pop()
        u = nodes[-1]
        if u == g.stop:
            yield nodes, t, intensity
        succ = g.successors(u)
        if not succ:
            continue
        share = intensity / len(succ)
        for v in reversed(succ):
            tv = t + arc + delays[v]
            if tv <= horizon:
                stack.append((nodes + (v,), tv, share))


def walk_spectrum(g: Digraph, config: DeviceConfig) -> Spectrum:
    """Spectrum assembled from :func:`iter_detected_walks` without coalescing."""
    by_time: dict[int, list] = {}
    walks = 0
    for _, t, intensity in iter_detected_walks(g, config):
        walks += 1
        slot = by_time.setdefault(t, [[], 0])
        slot[0].append(intensity)
        slot[1] += 1
    arrivals = [
        SpectrumEntry(t, math.fsum(by_time[t][0]), by_time[t][1]) for t in sorted(by_time)
    ]
    return _build_spectrum(arrivals, config, walks)
