"""
Attenuation, graph-specific labellings and arc-delay collisions
===============================================================
"""

import math

from lightpath.graph import Digraph, complete_digraph, linear_digraph
from lightpath.sim import (
    DeviceConfig,
    arc_labelled_system,
    custom_assignment,
    simulate,
    verify_against_oracle,
)

# On a complete digraph every node splits into n-1 rays, so a Hamiltonian ray
# ends up with (n-1)**-(n-1) of the source intensity.
for n in range(3, 9):
    g = complete_digraph(n)
    hit = simulate(g, DeviceConfig.general(g)).entry_at(DeviceConfig.general(g).target)
    print(f"K_{n}: {hit.count} paths, per-path intensity {hit.intensity / hit.count:.3e}"
          f" = {(n - 1)}^-{n - 1} ({(n - 1) ** -(n - 1):.3e})")

# A linear graph needs no node delays at all: only the arc delays count.
g = linear_digraph(7)
print(simulate(g, DeviceConfig(custom_assignment([0] * 7), arc_delay=1)).to_text())

# Node delays plus a uniform arc delay: the 4-node split of the 5-node system.
nodes, arc = arc_labelled_system(4)
print("node delays", nodes, "arc delay", arc)

# Uniqueness is not automatic once arc delays enter.  Here a walk that goes
# round the 0-1 cycle twice arrives with the Hamiltonian signature although
# the graph has no Hamiltonian path.
g = Digraph(5, [(0, 1), (0, 4), (1, 0), (2, 4), (4, 3)], 0, 4)
print(verify_against_oracle(g, DeviceConfig.general(g, arc_delay=2)).summary())
print(verify_against_oracle(g, DeviceConfig.general(g, arc_delay=0)).summary())
