"""
Counting full exceptional sequences
===================================

The enumerator finds the largest size of a weak exceptional sequence and
counts every sequence of that size. We compare it with closed forms for
three families.
"""

import time

from nakaseq import FamilyParams, enumerate_sequences, predicted_count, predicted_size

# %%
# Constant Kupisch series n gives n^n sequences. Series n-1 gives only n,
# but of size 2n-2. Series 2 alternates with the parity of n.
for family in ("selfinj-nn", "selfinj-n1n", "lambda2"):
    lo = 3 if family == "selfinj-n1n" else 2
    for n in range(lo, 7):
        p = FamilyParams(family, n)
        t0 = time.perf_counter()
        res = enumerate_sequences(p.algebra(), p.mode)
        dt = time.perf_counter() - t0
        print(f"{family:12} n={n}: size {res.max_size} (expect {predicted_size(p)}), "
              f"count {res.count} (expect {predicted_count(p)}), {dt:.3f}s")

# %%
# For hereditary type A the count is the number of labelled trees on m+1 nodes.
for m in range(1, 6):
    p = FamilyParams("hereditary-a", m)
    print(m, enumerate_sequences(p.algebra(), "standard").count, predicted_count(p))
