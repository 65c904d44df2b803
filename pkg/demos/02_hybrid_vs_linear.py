"""Timing the hybrid method against the linear recurrence.

The hybrid driver fills p̄(0..n/2) and finishes with one nonlinear step; the
linear recurrence has to walk all the way to n.

Run:  python demos/02_hybrid_vs_linear.py [n]
"""
import sys
import time

from overpartition.kernel import hybrid_compute, linear_table
from overpartition.plan import ComputePlan

n = int(sys.argv[1]) if len(sys.argv) > 1 else 50_000

start = time.perf_counter()
h = hybrid_compute(n)
t_hybrid = time.perf_counter() - start

start = time.perf_counter()
lin = linear_table(n)[n]
t_linear = time.perf_counter() - start

print(f"n = {n}: {len(str(h))} digits, equal = {h == lin}")
print(f"hybrid {t_hybrid:.3f}s   linear {t_linear:.3f}s")

# Splitting the nonlinear step over worker processes does not change the value.
pooled = hybrid_compute(n, ComputePlan(workers=4, process_threshold=0))
print("4 worker processes agree:", pooled == h)
