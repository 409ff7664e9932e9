"""Symmetric-function elements in the Schur basis, single- and multi-alphabet.

SymElem is a finitely supported Q-combination of Schur functions s_lambda.
MultiSymElem is the same over a finite label set X, with basis elements
S_lambda = prod_x s_lambda(x); products expand componentwise through
Littlewood-Richardson coefficients.
"""

from fractions import Fraction
from itertools import product as iproduct

from .littlewood import littlewood_richardson, schur_product
from .partitions import PartitionMap, check_partition, partitions_of


def _clean(d):
    return {k: v for k, v in d.items() if v}


class SymElem:
    """Finitely supported map Partition -> Fraction, Schur coordinates."""

    __slots__ = ("coords",)

    def __init__(self, coords=()):
        self.coords = _clean({check_partition(k): Fraction(v)
                              for k, v in dict(coords).items()})

    @classmethod
    def schur(cls, lam):
        return cls({tuple(lam): 1})

    def __add__(self, other):
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return SymElem(out)

    def __sub__(self, other):
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) - v
        return SymElem(out)

    def scale(self, c):
        return SymElem({k: v * Fraction(c) for k, v in self.coords.items()})

    def __mul__(self, other):
        out = {}
        for lam, a in self.coords.items():
            for mu, b in other.coords.items():
                for nu, c in schur_product(lam, mu).items():
                    out[nu] = out.get(nu, Fraction(0)) + a * b * c
        return SymElem(out)

    def __eq__(self, other):
        return isinstance(other, SymElem) and self.coords == other.coords

    def __repr__(self):
        if not self.coords:
            return "SymElem(0)"
        terms = [f"{v}*s{list(k)}" for k, v in sorted(self.coords.items())]
        return "SymElem(" + " + ".join(terms) + ")"


class MultiSymElem:
    """Finitely supported map PartitionMap -> Fraction; all keys share one
    label set."""

    __slots__ = ("labels", "coords")

    def __init__(self, labels, coords=()):
        self.labels = tuple(labels)
        self.coords = {}
        for k, v in dict(coords).items():
            assert isinstance(k, PartitionMap) and k.labels == self.labels, \
                "mismatched index sets"
            v = Fraction(v)
            if v:
                self.coords[k] = v

    @classmethod
    def basis(cls, pmap: PartitionMap):
        return cls(pmap.labels, {pmap: 1})

    @classmethod
    def unit(cls, labels):
        labels = tuple(labels)
        empty = PartitionMap(labels, ((),) * len(labels))
        return cls(labels, {empty: 1})

    def __add__(self, other):
        assert self.labels == other.labels, "mismatched index sets"
        out = dict(self.coords)
        for k, v in other.coords.items():
            out[k] = out.get(k, Fraction(0)) + v
        return MultiSymElem(self.labels, out)

    def __sub__(self, other):
        return self + other.scale(-1)

    def scale(self, c):
        return MultiSymElem(self.labels,
                            {k: v * Fraction(c) for k, v in self.coords.items()})

    def __eq__(self, other):
        return (isinstance(other, MultiSymElem)
                and self.labels == other.labels and self.coords == other.coords)

    def __repr__(self):
        if not self.coords:
            return "MultiSymElem(0)"
        terms = [f"{v}*S{k!r}" for k, v in
                 sorted(self.coords.items(), key=lambda kv: kv[0].sort_key())]
        return "MultiSymElem(" + " + ".join(terms) + ")"

    def to_json(self):
        items = sorted(self.coords.items(), key=lambda kv: kv[0].sort_key())
        return [[k.to_json(), str(v)] for k, v in items]


def _basis_product(a: PartitionMap, b: PartitionMap) -> dict[PartitionMap, int]:
    """S_a * S_b = sum_nu (prod_x c^{nu(x)}_{a(x) b(x)}) S_nu."""
    labels = a.labels
    per_label = []
    for lam, mu in zip(a.parts, b.parts):
        opts = []
        for nu in partitions_of(sum(lam) + sum(mu)):
            c = littlewood_richardson(lam, mu, nu)
            if c:
                opts.append((nu, c))
        per_label.append(opts)
    out = {}
    for combo in iproduct(*per_label):
        coeff = 1
        for _, c in combo:
            coeff *= c
        key = PartitionMap(labels, tuple(nu for nu, _ in combo))
        out[key] = out.get(key, 0) + coeff
    return out


def multisym_mul(a: MultiSymElem, b: MultiSymElem) -> MultiSymElem:
    """Bilinear extension of the componentwise LR product."""
    if a.labels != b.labels:
        raise ValueError("mismatched index sets: %r vs %r" % (a.labels, b.labels))
    out = {}
    for ka, va in a.coords.items():
        for kb, vb in b.coords.items():
            for knu, c in _basis_product(ka, kb).items():
                out[knu] = out.get(knu, Fraction(0)) + va * vb * c
    return MultiSymElem(a.labels, out)
