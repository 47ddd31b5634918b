"""The constructive side of the square theorem: monomial witnesses.

For an odd-order group every irreducible chi comes with a subgroup H and a
linear alpha such that alpha^G = chi and (alpha^2)^G is irreducible.  The
search descends through centers, chief factors and Clifford correspondents,
and the result is re-verified by explicit induction.
"""

from charprod import catalog
from charprod.charops import InducedContext, induce, inner_product
from charprod.chartab import dixon_table
from charprod.perm import parse_permutation
from charprod.verify import monomial_witness_search

group = catalog.builtin("wreath3")
table = dixon_table(group)
print(f"wreath3: order {group.order}, degrees {table.degrees}")
print()

for i, degree in enumerate(table.degrees):
    witness = monomial_witness_search(group, i, table=table)
    steps = " -> ".join(
        f"{s['step']}({s.get('stabilizer_order', s.get('quotient_order'))})"
        for s in witness.chain
    ) or "already linear"
    print(f"chi_{i} (degree {degree}): H of index {witness.subgroup_index}; {steps}")

# Re-verify one witness end to end from its serialized form.
witness = monomial_witness_search(group, 16, table=table)
gens = []
for text in witness.subgroup_generators:
    p = parse_permutation(text, degree=group.degree)
    gens.append(group.element_index(p))
sub = group.subgroup(gens)
ctx = InducedContext.build(group, sub)
alpha = next(
    lam for lam in ctx.table.irreducibles
    if [v.to_json() for v in lam.values] == witness.alpha_values
)
assert induce(alpha, ctx) == table.irreducibles[16]
square = induce(alpha * alpha, ctx)
assert inner_product(square, square, characters=True) == 1
print()
print("chi_16 witness re-verified: alpha^G = chi and (alpha^2)^G irreducible")
