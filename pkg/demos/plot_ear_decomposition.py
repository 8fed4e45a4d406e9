"""
Nonincreasing ear decompositions
================================

Every 2-connected graph with an even cycle can be grown from that cycle by
repeatedly gluing on a longest available ear. The theta graph below is the
smallest case that is not Hamiltonian.
"""

from rainbowrc import ear_decomposition, parse_edge_list

theta = parse_edge_list("""
5 6
0 2
2 1
1 3
3 0
0 4
4 1
""")
dec = ear_decomposition(theta)
print("base cycle:", dec.base.vertices)
for ear in dec.ears:
    print("ear", ear.vertices, "length", ear.length)
print("stage orders:", dec.stage_orders, " t =", dec.t)

# the decomposition serializes to a small JSON record
print(dec.to_json())
