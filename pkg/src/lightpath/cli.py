"""Command-line front end.

Subcommands: delays, solve, spectrum, size, verify, oracle.

Exit codes: 0 YES / pass, 1 NO, 2 error, 3 oracle mismatch or failed check.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from .delay_system import (
    REFERENCE_MINIMAL_SYSTEMS,
    DelaySystem,
    general_system,
    is_valid_system,
    minimal_system,
)
from .errors import LightpathError
from .graph import Digraph, hamiltonian_paths, parse_graph
from .physics import PhysicalParams, sizing_report
from .sim import (
    DEFAULT_EVENT_BUDGET,
    DeviceConfig,
    Spectrum,
    SpectrumEntry,
    assign_delays,
    custom_assignment,
    format_intensity,
    simulate,
    verify_against_oracle,
)
from .sweeps import all_digraphs, minimality_rows, oracle_sweep, random_digraphs, reference_rows

EXIT_YES = 0
EXIT_NO = 1
EXIT_ERROR = 2
EXIT_MISMATCH = 3

MINIMAL_SEARCH_LIMIT = 8


def _fmt(x: float) -> str:
    return f"{x:.12g}"


# -- structured output ---------------------------------------------------


def _entry_dict(e: SpectrumEntry) -> dict:
    return {"time": e.time, "intensity": e.intensity, "count": e.count}


def spectrum_to_json(spectrum: Spectrum) -> str:
    payload = {
        "target": spectrum.target,
        "decision": spectrum.answer,
        "hamiltonian_count": spectrum.hamiltonian_count,
        "entries": [_entry_dict(e) for e in spectrum.entries],
        "suppressed": [_entry_dict(e) for e in spectrum.suppressed],
        "events_processed": spectrum.events_processed,
    }
    return json.dumps(payload, indent=2)


def spectrum_from_json(text: str) -> Spectrum:
    data = json.loads(text)

    def entries(key):
        return tuple(
            SpectrumEntry(int(e["time"]), float(e["intensity"]), int(e["count"]))
            for e in data.get(key, [])
        )

    return Spectrum(
        entries=entries("entries"),
        target=int(data["target"]),
        decision=data["decision"] == "YES",
        hamiltonian_count=int(data["hamiltonian_count"]),
        suppressed=entries("suppressed"),
        events_processed=int(data.get("events_processed", 0)),
    )


# -- helpers ---------------------------------------------------------------


def _read_graph(source: str) -> Digraph:
    if source == "-":
        return parse_graph(sys.stdin)
    with open(source, encoding="utf-8") as fh:
        return parse_graph(fh)


def _parse_delay_list(text: str) -> list[int]:
    try:
        return [int(tok) for tok in text.split(",") if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(
            f"expected comma-separated integers, got {text!r}"
        ) from None


def _system_for(n: int, choice: str) -> DelaySystem:
    if choice == "general":
        return general_system(n)
    if n > MINIMAL_SEARCH_LIMIT:
        raise LightpathError(
            f"minimal-system search is limited to n <= {MINIMAL_SEARCH_LIMIT}, got n={n}"
        )
    found = minimal_system(n, (1 << n) - 1)
    assert found is not None
    return found


def _device_config(g: Digraph, args) -> DeviceConfig:
    if args.custom_delays is not None:
        if len(args.custom_delays) != g.n:
            raise LightpathError(
                f"--custom-delays lists {len(args.custom_delays)} values, graph has {g.n} nodes"
            )
        assignment = custom_assignment(args.custom_delays)
    else:
        assignment = assign_delays(g, _system_for(g.n, args.system))
    return DeviceConfig(
        assignment,
        arc_delay=args.arc_delay,
        horizon=args.horizon,
        event_budget=args.event_budget,
        detector_threshold=args.threshold,
    )


def _undetected_note(spectrum: Spectrum) -> Optional[str]:
    hidden = spectrum.suppressed_at(spectrum.target)
    if hidden is None:
        return None
    return (
        f"detector: arrival at t={hidden.time} (intensity "
        f"{format_intensity(hidden.intensity)}, count {hidden.count}) is below the "
        "threshold; NO here is a detectability limit, not a logical NO"
    )


# -- commands ----------------------------------------------------------------


def cmd_delays(args) -> int:
    n = args.n
    if args.system == "minimal":
        if n > MINIMAL_SEARCH_LIMIT:
            raise LightpathError(
                f"minimal-system search is limited to n <= {MINIMAL_SEARCH_LIMIT}, got n={n}"
            )
        bound = args.max_bound if args.max_bound is not None else (1 << n) - 1
        system = minimal_system(n, bound)
        if system is None:
            print(f"none: no valid {n}-element system with largest delay <= {bound}")
            return EXIT_NO
    else:
        system = general_system(n)
    valid = is_valid_system(system)
    reference = REFERENCE_MINIMAL_SYSTEMS.get(n) if args.system == "minimal" else None
    if args.format == "structured":
        payload = {
            "n": n,
            "mode": args.system,
            "delays": list(system.delays),
            "total": system.total,
            "valid": valid,
        }
        if reference is not None:
            payload["reference_match"] = system.delays == reference
        print(json.dumps(payload, indent=2))
    else:
        print(system)
        print(f"total {system.total}")
        print(f"valid {'yes' if valid else 'no'}")
        if reference is not None:
            status = "match" if system.delays == reference else "MISMATCH"
            print(f"reference {status}")
    return EXIT_YES if valid else EXIT_MISMATCH


def cmd_solve(args) -> int:
    g = _read_graph(args.graph)
    config = _device_config(g, args)
    spectrum = simulate(g, config)
    print(f"YES {spectrum.hamiltonian_count}" if spectrum.decision else "NO 0")
    note = _undetected_note(spectrum)
    if note:
        print(note)
    if args.check_oracle:
        report = verify_against_oracle(g, config)
        print(report.summary())
        if not report.match:
            return EXIT_MISMATCH
    return EXIT_YES if spectrum.decision else EXIT_NO


def cmd_spectrum(args) -> int:
    g = _read_graph(args.graph)
    config = _device_config(g, args)
    spectrum = simulate(g, config)
    if args.format == "structured":
        print(spectrum_to_json(spectrum))
    else:
        sys.stdout.write(spectrum.to_text())
        note = _undetected_note(spectrum)
        if note:
            print(f"# {note}")
    if args.check_oracle:
        report = verify_against_oracle(g, config)
        print(("# " if args.format == "text" else "") + report.summary(), file=sys.stderr)
        if not report.match:
            return EXIT_MISMATCH
    return EXIT_YES if spectrum.decision else EXIT_NO


def cmd_size(args) -> int:
    params = PhysicalParams(args.resolution, args.light_speed, args.speed_fraction)
    report = sizing_report(args.n, params, args.max_cable)
    if args.format == "structured":
        print(json.dumps(report.as_dict(), indent=2))
        return EXIT_YES
    print(f"unit length (m): {_fmt(report.unit_length_m)}")
    if report.n is not None:
        print(f"n: {report.n}")
        print("delays (units): " + " ".join(str(d) for d in report.delays))
        print("cable lengths (m): " + " ".join(_fmt(x) for x in report.cable_lengths_m))
        print(f"largest cable (m): {_fmt(report.cable_lengths_m[-1])}")
        print(f"solution time, largest delay (s): {_fmt(report.time_largest_s)}")
        print(f"solution time, total sum (s): {_fmt(report.time_total_s)}")
    if report.max_cable_m is not None:
        print(f"max cable (m): {_fmt(report.max_cable_m)}")
        print(
            f"max nodes (nearest 2^n fit): {report.max_nodes_nearest} "
            f"(exact check: {report.max_nodes_exact})"
        )
    return EXIT_YES


def cmd_verify(args) -> int:
    chosen = any(
        x is not None for x in (args.exhaustive, args.random, args.minimality)
    ) or args.table1
    exhaustive = args.exhaustive if chosen else 4
    random_count = args.random if chosen else 500
    minimality = args.minimality if chosen else 5
    table1 = args.table1 or not chosen

    ok = True
    if exhaustive is not None:
        result = oracle_sweep(all_digraphs(exhaustive))
        print(f"exhaustive n={exhaustive}: {result}")
        ok &= result.ok
    if random_count is not None:
        result = oracle_sweep(random_digraphs(random_count, 5, 8, seed=args.seed))
        print(f"random n=5..8 (seed {args.seed}): {result}")
        ok &= result.ok
    if table1:
        rows = reference_rows()
        good = sum(found == expected for _, expected, found in rows)
        print(f"minimal systems: {good}/{len(rows)} rows match")
        ok &= good == len(rows)
    if minimality is not None:
        for n, smallest in minimality_rows(minimality):
            expected = (1 << n) - 1
            flag = "=" if smallest == expected else "!="
            print(f"n={n}: min max-delay = {smallest} {flag} 2^{n}-1")
            ok &= smallest == expected
    return EXIT_YES if ok else EXIT_MISMATCH


def cmd_oracle(args) -> int:
    g = _read_graph(args.graph)
    paths = hamiltonian_paths(g)
    if args.format == "structured":
        print(json.dumps({"count": len(paths), "paths": [list(p) for p in paths]}, indent=2))
    else:
        print(f"{'YES' if paths else 'NO'} {len(paths)}")
        for p in paths:
            print(" ".join(str(v) for v in p))
    return EXIT_YES if paths else EXIT_NO


# -- parser ------------------------------------------------------------------


def _add_device_flags(p: argparse.ArgumentParser) -> None:
    p.add_argument("graph", help="edge-list file, or '-' for standard input")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--system", choices=("general", "minimal"), default="general")
    group.add_argument("--custom-delays", type=_parse_delay_list, metavar="D0,D1,...")
    p.add_argument("--arc-delay", type=int, default=0)
    p.add_argument("--threshold", type=float, default=0.0, help="detector threshold")
    p.add_argument("--event-budget", type=int, default=DEFAULT_EVENT_BUDGET)
    p.add_argument("--horizon", type=int, default=None)
    p.add_argument("--check-oracle", action="store_true")


def _add_format(p: argparse.ArgumentParser) -> None:
    p.add_argument("--format", choices=("text", "structured"), default="text")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lightpath",
        description="Delay-labelled optical device for the directed Hamiltonian path problem.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("delays", help="generate a delay system")
    p.add_argument("n", type=int)
    p.add_argument("mode", nargs="?", choices=("general", "minimal"), default=None)
    p.add_argument("--system", choices=("general", "minimal"), default="general")
    p.add_argument("--max-bound", type=int, default=None)
    _add_format(p)
    p.set_defaults(func=cmd_delays)

    p = sub.add_parser("solve", help="YES/NO decision from the simulated device")
    _add_device_flags(p)
    p.set_defaults(func=cmd_solve, format="text")

    p = sub.add_parser("spectrum", help="arrival spectrum at the stop node")
    _add_device_flags(p)
    _add_format(p)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("size", help="physical cable and timing sizes")
    p.add_argument("n", type=int, nargs="?", default=None)
    p.add_argument("--resolution", type=float, default=1e-12, help="seconds")
    p.add_argument("--light-speed", type=float, default=3e8, help="m/s")
    p.add_argument("--speed-fraction", type=float, default=1.0)
    p.add_argument("--max-cable", type=float, default=None, help="metres")
    _add_format(p)
    p.set_defaults(func=cmd_size)

    p = sub.add_parser("verify", help="device-vs-oracle and delay-system checks")
    p.add_argument("--exhaustive", type=int, default=None, metavar="N")
    p.add_argument("--random", type=int, default=None, metavar="COUNT")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--table1", action="store_true", help="check published minimal systems")
    p.add_argument("--minimality", type=int, default=None, metavar="N")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("oracle", help="list Hamiltonian paths by brute force")
    p.add_argument("graph")
    _add_format(p)
    p.set_defaults(func=cmd_oracle)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "delays" and args.mode is not None:
        args.system = args.mode
    try:
        return args.func(args)
    except (LightpathError, ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
