"""Schur-Weyl counting identities for wreath products.

Run:  python3 demos/07_schur_weyl_counts.py
"""

from hallalg.groups import cyclic_group, trivial_group
from hallalg.schurweyl import (check_sum_of_squares, check_total_dimension,
                               schur_weyl_report)

# degree n = 2 tensors of a rank-1 free module: the antisymmetric label
# dies (one kernel flag), mirroring the collapse of the exterior square in
# one variable.
rep = schur_weyl_report(trivial_group(), 2, 1)
for row in rep.rows:
    print(row)
print("verdicts:", rep.to_json()["verdicts"])

# with d >= n every label survives
rep2 = schur_weyl_report(trivial_group(), 2, 2)
print("\nn <= d kernels:", [r["kernel"] for r in rep2.rows])

# the two global identities, exactly
print("\nsum of squares (Z/3, n=2, d=2):",
      check_sum_of_squares(cyclic_group(3), 2, 2))
print("total dimension (Z/2, n=2, d=2):",
      check_total_dimension(cyclic_group(2), 2, 2))
