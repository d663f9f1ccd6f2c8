"""Simulator for a delay-labelled optical device that decides whether a
directed graph has a Hamiltonian path from a start node to a stop node."""

from importlib.resources import files as _files

from .delay_system import (
    CoefficientVector,
    DelaySystem,
    general_system,
    is_valid_system,
    minimal_system,
    representation_count,
    target_time,
    verify_minimality,
)
from .errors import ConfigurationError, GraphFormatError, LightpathError, ResourceLimitError
from .graph import (
    Digraph,
    complete_digraph,
    has_hamiltonian_path,
    hamiltonian_paths,
    linear_digraph,
    parse_graph,
)
from .physics import (
    PhysicalParams,
    cable_lengths_m,
    max_nodes,
    nearest_fit_nodes,
    solution_time_s,
    unit_length_m,
)
from .sim import (
    DelayAssignment,
    DeviceConfig,
    Spectrum,
    assign_delays,
    custom_assignment,
    decide,
    simulate,
    verify_against_oracle,
)

__version__ = "0.1.0"


def example_graph(name: str) -> Digraph:
    """Load a bundled graph: ``fig4``, ``linear7``, ``single-node`` or ``no-arcs-2node``."""
    return parse_graph(_files(__name__).joinpath("data", f"{name}.graph").read_text())


def example_graph_path(name: str) -> str:
    return str(_files(__name__).joinpath("data", f"{name}.graph"))
