"""
Delay labelling systems
=======================

Every node of the device delays light by a fixed amount.  The delays must be
chosen so that the sum of all of them can only be reached by visiting each
node exactly once.
"""

from lightpath.delay_system import (
    DelaySystem,
    general_system,
    is_valid_system,
    minimal_system,
    representation_count,
)

# The general family: 2**n - 2**(n-i).  In binary these are runs of ones
# followed by zeros.
for n in range(1, 7):
    s = general_system(n)
    bits = " ".join(format(d, f"0{n}b") for d in s)
    print(f"n={n}: {str(s):<24} total={s.total:<4} binary: {bits}")

# Validity means the total has exactly one representation.  {1, 2} fails:
# 3 = 1 + 2 = 1 + 1 + 1.
for delays in [(1, 2), (2, 3), (4, 6, 7), (3, 5, 6)]:
    s = DelaySystem(delays)
    print(delays, "representations of total:", representation_count(s, s.total),
          "valid" if is_valid_system(s) else "invalid")

# The backtracking search finds the system with the smallest largest delay.
# For n <= 6 it rediscovers the general family.
for n in range(1, 6):
    print(n, minimal_system(n, 2**n - 1))

# Nothing valid exists below 2**n - 1:
print("n=4, largest <= 14:", minimal_system(4, 14))
