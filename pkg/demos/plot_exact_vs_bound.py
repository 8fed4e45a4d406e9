"""
Exact rainbow connection number against the bound
=================================================

On small graphs the exact value is cheap to compute, so we can see how much
slack the ceil(n/2) bound leaves across every 2-connected graph on 6 vertices.
"""

from collections import Counter
from math import ceil

from rainbowrc import build_corpus, exact_rc

corpus = build_corpus("enumerate", 6, 2)
gaps = Counter(ceil(g.n / 2) - exact_rc(g).rc for g in corpus)
print(f"{len(corpus)} graphs on 6 vertices")
for gap, count in sorted(gaps.items()):
    print(f"  bound minus rc = {gap}: {count} graphs")
