"""
Constructing and checking a ceil(n/2) rainbow coloring
======================================================

construct_coloring returns a coloring together with a trace of the rules
that produced it. Every intermediate stage is checked as it is built, and
the final coloring is checked again before it is returned.
"""

import random
from math import ceil

from rainbowrc import construct_coloring, is_rainbow_connected
from rainbowrc.oracle import random_two_connected

rng = random.Random(3)
g = random_two_connected(11, rng)
coloring, trace = construct_coloring(g)

print(f"n={g.n}, m={g.m}, route={trace.route}")
print(f"colors used: {coloring.K} (bound {ceil(g.n / 2)})")
for step in trace.steps:
    print(f"  {step.rule:<14} ear={step.ear} new={step.new_colors}")

report = is_rainbow_connected(g, coloring)
print("rainbow connected:", report.rainbow_connected)
