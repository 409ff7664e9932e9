"""Irreducible characters of G wr S_n for abelian G, the induction product,
and the characteristic map into products of Schur functions.

For a partition-valued map lam on the dual of G, the irreducible X_lam is
induced from the block subgroup prod_gamma (G wr S_{m_gamma}): on a block
the twisted character is (g, sigma) -> prod_i gamma(g_i) . chi^{lam(gamma)}
(cycle type of sigma).  Tables are certified by exact row and column
orthogonality plus completeness of the label set.

ch sends X_lam to S_lam = prod_gamma s_{lam(gamma)}; on K_0 it intertwines
the induction product with the componentwise Littlewood-Richardson product,
which is what the acceptance suite verifies.
"""

from fractions import Fraction
from functools import cache
from math import factorial

from .. import UsageError
from ..exactmath.cyclotomic import Cyc
from ..exactmath.partitions import PartitionMap, partition_maps
from ..exactmath.symfunc import MultiSymElem
from ..exactmath.tableaux import standard_tableaux_count
from ..groups import FiniteGroup, perm_cycles
from .characters import abelian_dual, murnaghan_nakayama
from .wreathgroup import (DEFAULT_WREATH_BUDGET, class_label_representative,
                          wreath_class_label, wreath_product)


def irreducible_dimension(G: FiniteGroup, lam: PartitionMap) -> int:
    """dim X_lam = multinomial(n; block sizes) * prod f^{lam(gamma)} (the
    induced character evaluated at the identity)."""
    n = lam.total
    dim = factorial(n)
    for _, part in lam.items():
        dim //= factorial(sum(part))
    for _, part in lam.items():
        dim *= standard_tableaux_count(part)
    return dim


class WreathCharacterTable:
    """Exact character table of G wr S_n, G abelian."""

    def __init__(self, G: FiniteGroup, n: int,
                 budget: int = DEFAULT_WREATH_BUDGET):
        if not G.is_abelian():
            raise UsageError("wreath character tables need abelian G "
                             "(linear characters)")
        self.G, self.n = G, n
        self.e = G.exponent()
        self.W = wreath_product(G, n, budget=budget)
        self.dual = abelian_dual(G)
        k = G.order

        self.class_labels = partition_maps(n, tuple(range(k)))
        self.class_pos = {l: i for i, l in enumerate(self.class_labels)}
        self.class_reps = [class_label_representative(G, n, l)
                           for l in self.class_labels]
        self.class_sizes = [0] * len(self.class_labels)
        self._label_of_element = {}
        for w in self.W.elements:
            lab = wreath_class_label(G, w)
            self._label_of_element[w] = lab
            self.class_sizes[self.class_pos[lab]] += 1
        assert all(s > 0 for s in self.class_sizes), \
            "class labels are not exhaustive"

        self.irr_labels = partition_maps(n, tuple(range(k)))
        self.irr_pos = {l: i for i, l in enumerate(self.irr_labels)}
        self.values = [self._induced_character(lam)
                       for lam in self.irr_labels]

    # -- construction ---------------------------------------------------------

    def _blocks(self, lam: PartitionMap):
        blocks = []
        pos = 0
        for gamma_idx, part in lam.items():
            m = sum(part)
            blocks.append((gamma_idx, part, range(pos, pos + m)))
            pos += m
        return blocks

    def _base_value(self, lam, w):
        """Exponent-coefficient pairs of the block character at w, or None
        if w does not lie in the block subgroup."""
        base, sigma = w
        expo = 0
        mn = 1
        for gamma_idx, part, block in self._blocks(lam):
            if not part:
                continue
            cyc_lengths = []
            for cyc in perm_cycles(sigma):
                if cyc[0] in block:
                    if not all(i in block for i in cyc):
                        return None
                    cyc_lengths.append(len(cyc))
            vec = self.dual[gamma_idx]
            for i in block:
                expo = (expo + vec[self.G.index[base[i]]]) % max(self.e, 1)
            mn *= murnaghan_nakayama(part,
                                     tuple(sorted(cyc_lengths, reverse=True)))
            if mn == 0:
                return (0, 0)
        return (expo, mn)

    def _induced_character(self, lam: PartitionMap):
        """chi_lam(w) = (1/|W_lam|) sum_t chidot_sub(t w t^-1), per class."""
        W, G = self.W, self.G
        sub_order = G.order ** self.n
        for _, part, _ in self._blocks(lam):
            sub_order *= factorial(sum(part))
        out = []
        for rep in self.class_reps:
            acc = {}
            for t in W.elements:
                conj = W.op(W.op(t, rep), W.inv(t))
                bv = self._base_value(lam, conj)
                if bv is None:
                    continue
                expo, coeff = bv
                if coeff:
                    acc[expo] = acc.get(expo, 0) + coeff
            val = Cyc.zero(self.e) if self.e > 1 else Cyc.zero(1)
            for expo, coeff in acc.items():
                val = val + Cyc.zeta(self.e, expo) * coeff if self.e > 1 \
                    else val + Cyc.rational(coeff)
            out.append(val / sub_order)
        return out

    # -- queries ----------------------------------------------------------------

    def value(self, lam: PartitionMap, w) -> Cyc:
        row = self.values[self.irr_pos[lam]]
        return row[self.class_pos[self._label_of_element[w]]]

    def dimension(self, lam: PartitionMap) -> int:
        v = self.values[self.irr_pos[lam]][
            self.class_pos[wreath_class_label(self.G, self.W.identity)]]
        assert v.is_rational()
        d = v.rational_value()
        assert d.denominator == 1
        return int(d)

    def inner(self, row_i: int, row_j: int) -> Fraction:
        """Class-weighted inner product <chi_i, chi_j>."""
        tot = Cyc.zero(max(self.e, 1))
        for c, size in enumerate(self.class_sizes):
            tot = tot + (self.values[row_i][c]
                         * self.values[row_j][c].conj()) * size
        tot = tot / self.W.order
        assert tot.is_rational(), "inner product must be rational"
        return tot.rational_value()

    def check_orthogonality(self):
        nrows = len(self.irr_labels)
        for i in range(nrows):
            for j in range(i, nrows):
                want = Fraction(1 if i == j else 0)
                if self.inner(i, j) != want:
                    return False, ("row", i, j)
        ncols = len(self.class_labels)
        for c in range(ncols):
            for c2 in range(c, ncols):
                tot = Cyc.zero(max(self.e, 1))
                for i in range(nrows):
                    tot = tot + self.values[i][c] * self.values[i][c2].conj()
                want = (Fraction(self.W.order, self.class_sizes[c])
                        if c == c2 else Fraction(0))
                if not tot.is_rational() or tot.rational_value() != want:
                    return False, ("column", c, c2)
        dims2 = sum(self.dimension(l) ** 2 for l in self.irr_labels)
        if dims2 != self.W.order:
            return False, ("sum of squares", dims2, self.W.order)
        return True, None

    def decompose(self, values_by_class) -> dict:
        """Coordinates of a class function in the irreducible basis;
        raises on non-integer multiplicities."""
        out = {}
        for i, lam in enumerate(self.irr_labels):
            tot = Cyc.zero(max(self.e, 1))
            for c, size in enumerate(self.class_sizes):
                tot = tot + (values_by_class[c]
                             * self.values[i][c].conj()) * size
            tot = tot / self.W.order
            if not tot.is_rational() or tot.rational_value().denominator != 1:
                raise UsageError("class function is not an integral "
                                 "combination of irreducibles")
            m = int(tot.rational_value())
            if m:
                out[lam] = m
        return out

    def to_json(self):
        return {
            "group": f"{self.G.name} wr S_{self.n}",
            "order": self.W.order,
            "class_labels": [l.to_json() for l in self.class_labels],
            "class_sizes": self.class_sizes,
            "irreducible_labels": [l.to_json() for l in self.irr_labels],
            "conductor": self.e,
            "values": [[v.to_string() for v in row] for row in self.values],
        }


@cache
def character_table(G: FiniteGroup, n: int,
                    budget: int = DEFAULT_WREATH_BUDGET):
    return WreathCharacterTable(G, n, budget=budget)


def wreath_character(G: FiniteGroup, lam: PartitionMap,
                     budget: int = DEFAULT_WREATH_BUDGET) -> dict:
    """The character of X_lam as a map class label -> Cyc."""
    tab = character_table(G, lam.total, budget)
    row = tab.values[tab.irr_pos[lam]]
    return dict(zip(tab.class_labels, row))


def induction_product(G: FiniteGroup, lam: PartitionMap, mu: PartitionMap,
                      budget: int = DEFAULT_WREATH_BUDGET) -> dict:
    """Decomposition of Ind_{G wr (S_n x S_m)}^{G wr S_{n+m}}
    (X_lam boxtimes X_mu) by Frobenius reciprocity:
    <Ind chi, chi_nu> = <chi, Res chi_nu>."""
    n, m = lam.total, mu.total
    big = character_table(G, n + m, budget)
    small_n = character_table(G, n, budget)
    small_m = character_table(G, m, budget)
    Wn, Wm, W = small_n.W, small_m.W, big.W

    sub = []
    for (base, sigma) in W.elements:
        if all(sigma[i] < n for i in range(n)):
            sub.append((base, sigma))
    e = max(big.e, 1)

    out = {}
    for nu in big.irr_labels:
        tot = Cyc.zero(e)
        for (base, sigma) in sub:
            wn = (base[:n], sigma[:n])
            wm = (tuple(base[n:]),
                  tuple(sigma[i] - n for i in range(n, n + m)))
            val = (small_n.value(lam, wn) * small_m.value(mu, wm)
                   * big.value(nu, (base, sigma)).conj())
            tot = tot + val
        tot = tot / len(sub)
        assert tot.is_rational(), "multiplicity must be rational"
        q = tot.rational_value()
        assert q.denominator == 1 and q >= 0, "multiplicity must be in N"
        if q:
            out[nu] = int(q)
    return out


def ch(G: FiniteGroup, x_basis: dict) -> MultiSymElem:
    """Linear extension of X_lam -> S_lam = prod s_{lam(gamma)}."""
    labels = None
    coords = {}
    for lam, c in x_basis.items():
        if labels is None:
            labels = lam.labels
        assert lam.labels == labels, "mixed label sets"
        coords[lam] = c
    if labels is None:
        labels = tuple(range(G.order))
    return MultiSymElem(labels, coords)


def ch_ring_hom_check(G: FiniteGroup, max_total: int,
                      budget: int = DEFAULT_WREATH_BUDGET):
    """ch(Ind(X_lam boxtimes X_mu)) = S_lam . S_mu for all label pairs with
    total size <= max_total; returns (ok, failures)."""
    from ..exactmath.symfunc import multisym_mul
    k = G.order
    failures = []
    for n in range(0, max_total + 1):
        for m in range(0, max_total + 1 - n):
            for lam in partition_maps(n, tuple(range(k))):
                for mu in partition_maps(m, tuple(range(k))):
                    ind = induction_product(G, lam, mu, budget)
                    lhs = ch(G, ind)
                    rhs = multisym_mul(MultiSymElem.basis(lam),
                                       MultiSymElem.basis(mu))
                    if lhs != rhs:
                        failures.append({"lam": lam.to_json(),
                                         "mu": mu.to_json(),
                                         "lhs": lhs.to_json(),
                                         "rhs": rhs.to_json()})
    return (not failures), failures
