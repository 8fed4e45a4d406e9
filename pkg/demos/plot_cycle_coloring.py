"""
Coloring a cycle with half as many colors as vertices
=====================================================

A cycle on m vertices needs ceil(m/2) colors, and the half-period
coloring reaches that. On an even cycle the only pairs forced onto
full-length rainbow paths are the antipodal ones.
"""

from rainbowrc import color_cycle, exact_rc, is_noncomplete
from rainbowrc.graph import Graph

for m in (5, 6, 8):
    g = Graph.from_edges(m, [(i, (i + 1) % m) for i in range(m)])
    coloring = color_cycle(m)
    report = is_noncomplete(g, coloring)
    print(f"C{m}: colors={coloring.K} exact rc={exact_rc(g).rc}")
    print("   exceptional pairs:", report.exceptional_pairs)
