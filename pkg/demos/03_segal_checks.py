"""Simplicial identities, 2-Segal squares and unitality, with a mutation
that the checker catches.

Run:  python3 demos/03_segal_checks.py
"""

from hallalg.groups import symmetric_group, symmetric_subgroup, trivial_group
from hallalg.protoab import F1FreeG
from hallalg.waldhausen import (check_2segal_degree3, check_pointed,
                                check_simplicial_identities, hecke_waldhausen,
                                mutation_corpus, s_construction)

# The Hecke-Waldhausen groupoid of S_2 <= S_3, truncated at degree 3.
S3 = symmetric_group(3)
X = hecke_waldhausen(S3, symmetric_subgroup(S3, 2), depth=3)
print("levels:", [g.n_objects for g in X.levels])
print("simplicial identities:", check_simplicial_identities(X).ok)
print("2-Segal at degree 3:  ", check_2segal_degree3(X).ok)
print("unital squares:       ", check_pointed(X).ok)

# The S-construction of free F_1-modules of rank <= 2 passes the same gauntlet.
Y = s_construction(F1FreeG(trivial_group(), 2), depth=3)
print("flag construction:    ", check_2segal_degree3(Y).ok,
      check_pointed(Y).ok)

# Damage the top level and the checker answers with a concrete witness.
for name, mutated, kind in mutation_corpus(X):
    verdict = (check_2segal_degree3(mutated) if kind == "segal"
               else check_pointed(mutated))
    print(f"mutation {name:14s} -> pass={verdict.ok}, "
          f"witness={verdict.witnesses[0]['kind']}")
