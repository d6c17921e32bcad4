"""
Where Hom and Ext live
======================

For a selfinjective algebra, the modules X with a nonzero map from M form one
region of the lattice. The modules receiving a nonzero extension from M form
another. We draw both for a length-one module and check them pointwise.
"""

from nakaseq import Indec, ext1_dim, ext_region_contains, hom_dim, hom_region_contains, selfinjective
from nakaseq.render import render_ascii, render_svg

A = selfinjective(5, 4)
M = Indec(2, 2)

# %%
# ``H`` is the Hom region, ``E`` the Ext region, ``B`` both, ``o`` is M itself.
print(render_ascii(A, M))

# %%
# The pictures are not hand drawn: they agree with the dimensions everywhere.
agree = all(
    hom_region_contains(A, M, X) == (hom_dim(A, M, X) > 0)
    and ext_region_contains(A, M, X) == (ext1_dim(A, M, X) > 0)
    for X in A.indecomposables()
)
print("regions agree with dimensions:", agree)

# %%
# The same picture as SVG, suitable for a browser.
svg = render_svg(A, M)
print(svg.splitlines()[0], "...", len(svg), "bytes")
