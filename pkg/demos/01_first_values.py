"""First overpartition values, three ways.

Run:  python demos/01_first_values.py
"""
from overpartition import oracle
from overpartition.kernel import hybrid_compute, linear_table

# The eight overpartitions of 3, listed by brute force.
for parts in oracle.list_overpartitions(3):
    print(oracle.format_overpartition(parts))

# Linear recurrence: every value up to n.
table = linear_table(15)
print("linear :", table.values)

# Generating-function oracles agree.
print("DP     :", oracle.overpartition_table(15))
print("theta  :", oracle.theta_prefix(15).inverse().coeffs)

# p̄(11) needs only p̄(0..5) with the half-index step.
print("p̄(11) =", hybrid_compute(11))
