"""
Nakayama algebras and their modules
===================================

An algebra is fixed by its Kupisch series. Each indecomposable module is a
pair (top, length), and its composition factors are read off by walking the
arrows from the top.
"""

from nakaseq import Indec, describe_module, gamma, omega_orbit, parse_algebra_spec, selfinjective

# %%
# A cyclic algebra with three vertices. Projectives have lengths 3, 3, 2.
A = parse_algebra_spec("cyclic:3,3,2")
print(A.spec(), "with", len(A.indecomposables()), "indecomposables")
for M in A.indecomposables():
    info = describe_module(A, M)
    print(f"  {M}: socle {info.socle}, projective={info.is_projective}")

# %%
# Syzygies are bottom segments of projective covers. Some orbits die out and
# some cycle forever.
for M in (Indec(2, 1), Indec(1, 1)):
    orbit = omega_orbit(A, M)
    print(M, "->", [str(X) for X in orbit.chain], orbit.terminal)

# %%
# Over a selfinjective algebra the modules sit on a strip lattice.
L = selfinjective(4, 3)
print({str(M): tuple(gamma(L, M)) for M in L.indecomposables()})
