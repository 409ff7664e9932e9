"""Groupoid cardinality and the pull-push calculus on iso-class functions.

Run:  python3 demos/01_pull_push_calculus.py
"""

from hallalg.groupoid import (GroupHomFunctor, SpanFn, b_group, cardinality,
                              pi0, point_inclusion, pushforward_fn,
                              two_fiber_product)
from hallalg.groups import cyclic_group, symmetric_group, symmetric_subgroup

# Groupoid cardinality weights each component by 1/#Aut.
BZ2 = b_group(cyclic_group(2))
print("|B(Z/2)| =", cardinality(BZ2))             # 1/2

S3 = symmetric_group(3)
S2 = symmetric_subgroup(S3, 2)
BS3, BS2 = b_group(S3), b_group(S2)

# The 2-fiber of BH -> BG over the point is the action groupoid G//H:
# here six objects falling into [S3:S2] = 3 components with trivial Aut.
incl = GroupHomFunctor(BS2, BS3)
fiber = two_fiber_product(incl, point_inclusion(BS3, 0))
print("fiber objects:", fiber.n_objects)
for comp in pi0(fiber):
    print("  component rep", comp.rep, "size", comp.size,
          "Aut order", comp.aut_order)

# Pushing the constant function 1 forward along BH -> BG integrates over
# that fiber: the index [G:H].
print("f_!(1) on B(S3):", pushforward_fn(incl, SpanFn.const(BS2, 1)).values)

# A non-injective homomorphism picks up the kernel in the denominator:
# index of the image divided by the kernel size.
BZ4 = b_group(cyclic_group(4))
surj = GroupHomFunctor(BZ4, BZ2, hom=lambda x: x % 2)
print("f_!(1) along B(Z/4) -> B(Z/2):",
      pushforward_fn(surj, SpanFn.const(BZ4, 1)).values)   # 1/2
