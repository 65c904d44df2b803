"""Reference counts M1(n), M2(n) and the limit of their ratio.

Run:  python demos/03_cost_tables.py
"""
from overpartition.metrics import (
    PUBLISHED_TABLES,
    format_table,
    limit_ratio,
    m2_closed_form_4n,
    m2_instrumented,
    ratio_table,
)

r = m2_instrumented(11)
print(f"M1(11) = {r.m1}, M2(11) = {r.m2} ({r.m2_linear_part} linear + {r.m2_step_part} in the last step)")

for residue in (1, 2, 3, 0):
    rows = ratio_table(residue, [row[0] for row in PUBLISHED_TABLES[residue]])
    print(f"\nn = {residue} (mod 4)")
    print(format_table(rows))

print("\nclosed form M2(4m) for m = 1..5:", [m2_closed_form_4n(m) for m in range(1, 6)])

print(f"\nlimit 1/8 + sqrt(1/8) = {limit_ratio():.6f}")
for n in (10**3, 10**4, 10**5, 4 * 10**5):
    print(f"  M2/M1 at n = {n}: {float(m2_instrumented(n).ratio):.6f}")
