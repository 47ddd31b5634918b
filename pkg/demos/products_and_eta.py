"""Products of irreducible characters and their constituent counts.

The count of distinct constituents of a product is the quantity the whole
verification harness revolves around; this walks the two counterexample
fixtures and one family where products stay close to irreducible.
"""

from charprod import catalog
from charprod.charops import decompose, inner_product
from charprod.chartab import dixon_table

# Squaring the 2-dimensional character of D8 spreads over every linear one.
d8 = catalog.builtin("dihedral8")
t8 = dixon_table(d8)
chi = t8.irreducibles[4]
dec = decompose(chi * chi, t8)
print("D8, chi of degree 2:")
print("  chi^2 constituents:", dec.to_json(t8)["constituents"])
print("  eta =", dec.eta)
print()

# SL(2,3) shows why the square theorem needs a p-group: [chi^2, chi] = 2.
sl = catalog.builtin("sl23")
ts = dixon_table(sl)
chi3 = next(c for c, d in zip(ts.irreducibles, ts.degrees) if d == 3)
print("SL(2,3), chi of degree 3:")
print("  [chi^2, chi] =", inner_product(chi3 * chi3, chi3, characters=True))
print()

# In the extraspecial group of order 27 most products have a single
# constituent; only chi * conj(chi) spreads out, and then over all linears.
h3 = catalog.builtin("heisenberg3")
th = dixon_table(h3)
nonlinear = [i for i, d in enumerate(th.degrees) if d == 3]
for i in nonlinear:
    for j in nonlinear:
        dec = decompose(th.irreducibles[i] * th.irreducibles[j], th)
        print(f"  chi_{i} * chi_{j}: eta = {dec.eta}")
