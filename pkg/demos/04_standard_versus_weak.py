"""
Standard versus weak
====================

A weak exceptional module only needs Ext^1(M, M) to vanish. A standard one
needs every Ext^r to vanish. Periodic modules are never standard. This demo
also shows that being aperiodic and short does not suffice.
"""

from nakaseq import (
    Indec,
    enumerate_sequences,
    ext_dim,
    is_periodic,
    is_standard_exceptional,
    parse_algebra_spec,
    validate_sequence,
)

A = parse_algebra_spec("cyclic:3,3,2")
standard = [str(M) for M in A.indecomposables() if is_standard_exceptional(A, M)]
print("standard modules:", standard)

# %%
# The sequence below is weak exceptional but not standard, and neither of its
# three-term pieces is standard: third extensions get in the way.
seq = [Indec(2, 1), Indec(1, 2), Indec(3, 2), Indec(3, 1)]
print(validate_sequence(A, "weak", seq))
for part in (seq[:3], seq[1:]):
    print(validate_sequence(A, "standard", part))
print("Ext^2(S3, S2) =", ext_dim(A, Indec(3, 1), Indec(2, 1), 2))
print("Ext^3((1,2), S2) =", ext_dim(A, Indec(1, 2), Indec(2, 1), 3))

# %%
# Maximal sizes differ sharply between the two notions.
for mode in ("weak", "standard"):
    res = enumerate_sequences(A, mode)
    print(mode, res.max_size, res.count)

# %%
# Over cyclic:4,3,3,2 the simple S2 is aperiodic of length one yet has
# projective dimension three and a nonzero Ext^3 with itself.
B = parse_algebra_spec("cyclic:4,3,3,2")
S2 = Indec(2, 1)
print("periodic:", is_periodic(B, S2), "standard:", is_standard_exceptional(B, S2))
print([ext_dim(B, S2, S2, r) for r in range(1, 5)])
