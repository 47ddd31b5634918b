"""Centers, kernels, vanishing-off subgroups, restriction and induction.

Subgroups come back as explicit element sets; restriction and induction run
through class fusion and satisfy Frobenius reciprocity exactly.
"""

from charprod import catalog
from charprod.charops import (
    InducedContext,
    center_of,
    decompose,
    induce,
    inner_product,
    kernel_of,
    restrict,
    stabilizer_and_orbit,
    vanishing_off,
)
from charprod.chartab import dixon_table
from charprod.structure import normal_lattice, normals_of_index, quotient

d8 = catalog.builtin("dihedral8")
t = dixon_table(d8)
chi = t.irreducibles[4]

print("D8, chi of degree 2:")
print("  Z(chi) order:", center_of(chi).order)
print("  V(chi) order:", vanishing_off(chi).order)
print("  Ker(chi bar chi) order:", kernel_of(chi * chi.conj()).order)
print()

# Restriction to the center and induction back up.
ctx = InducedContext.build(d8, center_of(chi))
down = restrict(chi, ctx)
print("  chi restricted to the center:", [v.to_text() for v in down.values])
for k, lam in enumerate(ctx.table.irreducibles):
    up = induce(lam, ctx)
    lhs = inner_product(up, chi)
    rhs = inner_product(lam, down)
    assert lhs == rhs  # Frobenius reciprocity, exactly
    print(f"  [lambda_{k}^G, chi] = [lambda_{k}, chi|Z] = {lhs}")
print()

# The rotation subgroup carries a conjugation orbit of linear characters.
rot = d8.subgroup([d8.element_index(d8.generators[0])])
ctx4 = InducedContext.build(d8, rot)
faithful = next(l for l in ctx4.table.irreducibles if kernel_of(l).order == 1)
stab, orbit = stabilizer_and_orbit(faithful, ctx4)
print(f"faithful linear of the C4: stabilizer order {stab.order}, orbit size {len(orbit)}")
print()

# The normal lattice and a quotient, with characters inflated back.
lat = normal_lattice(d8, t)
print("normal subgroup orders:", [m.order for m in lat.members])
print("index-2 normals:", len(normals_of_index(lat, 2)))
qm = quotient(d8, lat.members[1])
qt = dixon_table(qm.quotient)
print(f"D8 / center has order {qm.quotient.order} and exponent {qm.quotient.exponent}")
for tau in qt.irreducibles:
    lifted = qm.inflate(tau)
    assert decompose(lifted, t).eta == 1
print("every inflated quotient character is irreducible upstairs")
