"""
Measuring the 3-connected case
==============================

For k-connected graphs one may ask whether rc(G) stays below ceil(n/k).
The scan only measures this: each record reports the exact value, the
bound, and whether the bound held.
"""

from rainbowrc import conjecture_scan
from rainbowrc.oracle import enumerated_corpus

corpus = enumerated_corpus(6, 3, n_min=4)
report = conjecture_scan(3, 6, corpus)
print(f"{len(report.records)} graphs, {len(report.violations)} over the bound, "
      f"{len(report.unknowns)} unknown")
print(report.to_jsonl().splitlines()[0])
