"""Hall algebras of the three built-in finitary proto-abelian categories.

Run:  python3 demos/02_hall_algebras.py
"""

from hallalg.groups import cyclic_group, trivial_group
from hallalg.hall import (check_associativity, divided_powers_iso_check,
                          hall_constants, hall_product, hall_product_via_span)
from hallalg.protoab import AbelianPGroups, F1FreeG, VectFq

# Vector spaces over F_2: the plane contains three lines, so
# [line].[line] = 3 [plane].
vect = VectFq(2, 2)
t = hall_constants(vect)
print("vect-F2:", hall_product(t, {1: 1}, {1: 1}))

# The same product through the degree-2 flag groupoid (chop both halves of
# a flag, push along the total object) agrees with the subobject count.
print("via span:", hall_product_via_span(vect, 2, {1: 1}, {1: 1}))

# Abelian 2-groups: extensions of Z/2 by Z/2 split into Z/4 (one subgroup
# chain) and the Klein group (three).
ab = hall_constants(AbelianPGroups(2, 16))
print("ab-2-groups:", hall_product(ab, {(1,): 1}, {(1,): 1}))
ok, _ = check_associativity(ab)
print("Steinitz associativity up to order 16:", ok)

# Free F_1[G]-modules: the product is the binomial coefficient and does not
# depend on G at all -- the ring of divided powers.
for G in (trivial_group(), cyclic_group(2)):
    ok, _ = divided_powers_iso_check(G, 6)
    print(f"divided powers over F_1[{G.name}]:", ok)
f1 = hall_constants(F1FreeG(trivial_group(), 6))
print("delta_2 . delta_3 =", hall_product(f1, {2: 1}, {3: 1}))
