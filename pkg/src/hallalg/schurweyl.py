"""Counting layer of the Schur-Weyl duality for wreath products.

For abelian G, rank-d free modules and degree n: the polynomial
representation attached to a label lam has dimension
prod_gamma s_{lam(gamma)}(1^d) and vanishes exactly when some lam(gamma)
has more than d rows.  Three exact identities are verified:

  sum_lam (dim R_lam)^2          = multiset(d^2 |G|, n)
  sum_lam dim X_lam . dim R_lam  = (d |G|)^n
  n <= d  =>  no R_lam vanishes

together with the homogeneous-polynomial-function dimension
multiset(d^2 |G^ab|, n), where the abelianization is computed by commutator
closure so the count also makes sense for nonabelian G.
"""

from dataclasses import dataclass, field

from . import UsageError

from .exactmath.partitions import PartitionMap, multiset_number, partition_maps
from .exactmath.tableaux import schur_eval_ones
from .groups import FiniteGroup
from .wreath.chmap import irreducible_dimension


def dim_poly_fns(G: FiniteGroup, d: int, n: int) -> int:
    """dim of degree-n homogeneous polynomial functions on the G-linear
    endomorphisms of a rank-d free module: multiset(d^2 |G^ab|, n)."""
    return multiset_number(d * d * G.abelianization_order(), n)


def dim_R(lam: PartitionMap, d: int) -> int:
    """prod_gamma s_{lam(gamma)}(1^d); zero iff some part has > d rows."""
    out = 1
    for _, part in lam.items():
        out *= schur_eval_ones(part, d)
    return out


def _require_abelian(G):
    if not G.is_abelian():
        raise UsageError("the duality checks need an abelian group")


def check_sum_of_squares(G: FiniteGroup, n: int, d: int):
    """sum over labels of (dim R)^2 against multiset(d^2 |G|, n)."""
    _require_abelian(G)
    labels = partition_maps(n, tuple(range(G.order)))
    lhs = sum(dim_R(lam, d) ** 2 for lam in labels)
    rhs = multiset_number(d * d * G.order, n)
    return lhs == rhs, {"lhs": lhs, "rhs": rhs}


def check_total_dimension(G: FiniteGroup, n: int, d: int):
    """sum dim X_lam . dim R_lam against (d |G|)^n; wreath dimensions are
    the identity evaluation of the induced-character construction."""
    _require_abelian(G)
    labels = partition_maps(n, tuple(range(G.order)))
    lhs = sum(irreducible_dimension(G, lam) * dim_R(lam, d)
              for lam in labels)
    rhs = (d * G.order) ** n
    return lhs == rhs, {"lhs": lhs, "rhs": rhs}


@dataclass
class SchurWeylReport:
    group: str
    n: int
    d: int
    rows: list = field(default_factory=list)
    sum_of_squares: bool = False
    total_dimension: bool = False
    kernel_free_when_n_le_d: bool = True
    nonzero_count_matches: bool = False

    @property
    def ok(self):
        return (self.sum_of_squares and self.total_dimension
                and self.kernel_free_when_n_le_d
                and self.nonzero_count_matches)

    def to_json(self):
        return {
            "group": self.group, "n": self.n, "d": self.d,
            "rows": self.rows,
            "verdicts": {
                "sum_of_squares": self.sum_of_squares,
                "total_dimension": self.total_dimension,
                "kernel_free_when_n_le_d": self.kernel_free_when_n_le_d,
                "nonzero_count_matches": self.nonzero_count_matches,
            },
            "pass": self.ok,
        }


def schur_weyl_report(G: FiniteGroup, n: int, d: int) -> SchurWeylReport:
    _require_abelian(G)
    labels = partition_maps(n, tuple(range(G.order)))
    rep = SchurWeylReport(G.name, n, d)
    kernel_count = 0
    for lam in labels:
        dr = dim_R(lam, d)
        dx = irreducible_dimension(G, lam)
        kernel = dr == 0
        kernel_count += kernel
        max_rows = max((len(p) for _, p in lam.items()), default=0)
        assert kernel == (max_rows > d), "kernel criterion"
        rep.rows.append({"label": lam.to_json(), "dim_X": dx, "dim_R": dr,
                         "kernel": kernel})
    rep.sum_of_squares = check_sum_of_squares(G, n, d)[0]
    rep.total_dimension = check_total_dimension(G, n, d)[0]
    rep.kernel_free_when_n_le_d = (n > d) or (kernel_count == 0)
    rep.nonzero_count_matches = (
        sum(1 for r in rep.rows if not r["kernel"])
        == len(labels) - kernel_count)
    return rep
