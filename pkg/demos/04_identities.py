"""Odd-part overpartitions and the identities tying them to p̄.

Run:  python demos/04_identities.py
"""
from overpartition import oracle
from overpartition.kernel import OddSeriesView, check_convolution, linear_table, theorem_value

table = linear_table(100)
view = OddSeriesView(table)

print("p̄ₒ(0..15) from p̄:", [view[m] for m in range(16)])
print("p̄ₒ(0..15) from DP:", oracle.overpartition_table(15, odd_only=True))

print("p̄(n) = sum p̄(k) p̄ₒ(n-2k) for n <= 100:", all(check_convolution(table, n) for n in range(101)))
print("two-sided j-sum reproduces p̄(n) for n <= 100:", all(theorem_value(table, n) == table[n] for n in range(101)))
