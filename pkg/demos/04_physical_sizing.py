"""
Physical sizing
===============

One delay unit is the fibre length light covers during one resolvable
detector interval (1 ps -> 0.3 mm in vacuum).
"""

from lightpath.delay_system import general_system
from lightpath.physics import (
    SPEED_FRACTION_FIBER,
    SPEED_FRACTION_SLOW_LIGHT,
    PhysicalParams,
    cable_lengths_m,
    max_nodes,
    nearest_fit_nodes,
    solution_time_s,
    unit_length_m,
)

vacuum = PhysicalParams()
print("unit length:", unit_length_m(vacuum), "m")
print("5-node cables (m):", cable_lengths_m(general_system(5), vacuum))

for label, cable in [("1 light-second", 3e8), ("300 km", 3e5)]:
    print(f"{label}: about {nearest_fit_nodes(vacuum, cable)} nodes, "
          f"{max_nodes(vacuum, cable)} fit exactly")

print("largest cable for n=40:", cable_lengths_m(general_system(40), vacuum)[-1], "m")

for n in (10, 20, 26, 30):
    print(f"n={n}: {solution_time_s(n, vacuum):.3e} s (largest delay), "
          f"{solution_time_s(n, vacuum, 'total-sum'):.3e} s (Hamiltonian arrival)")

for label, frac in [("fibre", SPEED_FRACTION_FIBER), ("slow light", SPEED_FRACTION_SLOW_LIGHT)]:
    p = PhysicalParams(speed_fraction=frac)
    print(f"{label}: unit {unit_length_m(p):.3e} m, 300 km -> {max_nodes(p, 3e5)} nodes")
