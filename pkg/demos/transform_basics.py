"""
Characters, the transform, and the radical on two tiny algebras
===============================================================

The dual numbers C[eps]/(eps^2) have a single character and a
one-dimensional radical; the parity algebra C[t]/(t^2 - 1) splits into
two characters and has no radical at all.  This script builds both from
structure constants and walks through what the transform sees.
"""

import numpy as np

from gelfand import characters, is_nilpotent, polynomial_quotient, radical

# The quotient constructor takes the non-leading coefficients of the
# monic relation, so [0, 0] means t^2 = 0 and [1, 0] means t^2 = -1.
dual = polynomial_quotient([0, 0])
parity = polynomial_quotient([-1, 0])

for name, algebra in [("dual numbers", dual), ("parity", parity)]:
    space = characters(algebra)
    rad = radical(algebra, space)
    print(f"{name}: dim {algebra.dim}, "
          f"{len(space)} character(s), radical dim {rad.dim}")
    for phi in space:
        print("  character values on (1, t):", np.round(phi.values, 12))

# On the dual numbers the transform cannot see eps: phi(eps) = 0 because
# phi(eps)^2 = phi(eps^2) = 0.  The element is nilpotent with exponent 2.
space = characters(dual)
eps = dual.basis_element(1)
print("transform of eps:", characters(dual).transform(eps))
flag, exponent = is_nilpotent(dual, eps)
print(f"eps nilpotent: {flag}, witness exponent {exponent}")

# On the parity algebra nothing is invisible: the transform is injective
# and an element vanishes exactly when both characters kill it.
t = parity.basis_element(1)
print("transform of t in the parity algebra:", characters(parity).transform(t))
