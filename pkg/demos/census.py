"""
How many cospectral graphs come from a partial transpose?
=========================================================

Enumerate every graph up to isomorphism, group by exact Q-polynomial and
search each grouped graph for a labelling whose transpose is a
non-isomorphic cospectral mate.  Six vertices take well under a second;
pass a larger order on the command line to wait longer (7 takes tens
of seconds, 8 is capped at m <= 9 here).
"""

import sys

from qspectral import aggregate_ratio, compare_with_reference, survey_table, table_tsv

n = int(sys.argv[1]) if len(sys.argv) > 1 else 6
rows = survey_table(n, max_m=9 if n == 8 else None)
print(table_tsv(rows), end="")
print("aggregate ratio:", aggregate_ratio(rows), "=", round(float(aggregate_ratio(rows)), 4))

for c in compare_with_reference(n, rows):
    if c.ok:
        continue
    published = c.expected if c.expected is not None else "no row"
    print(f"m={c.m}: computed {c.computed}, published {published}")
