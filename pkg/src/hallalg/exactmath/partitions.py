"""Integer partitions and partition-valued maps with a fixed total size.

Partitions are plain tuples of weakly decreasing positive ints; the empty
partition is ().  The canonical order on partitions of equal size is
decreasing lexicographic, so all emitted tables are byte-stable.
"""

from functools import cache
from math import comb, prod

Partition = tuple  # weakly decreasing tuple of positive ints


def is_partition(t) -> bool:
    return (isinstance(t, tuple)
            and all(isinstance(p, int) and p > 0 for p in t)
            and all(t[i] >= t[i + 1] for i in range(len(t) - 1)))


def check_partition(t) -> Partition:
    t = tuple(t)
    assert is_partition(t), f"not a partition: {t!r}"
    return t


def partition_size(t) -> int:
    return sum(t)


def conjugate(t: Partition) -> Partition:
    if not t:
        return ()
    return tuple(sum(1 for p in t if p > i) for i in range(t[0]))


def multiset_number(m: int, n: int) -> int:
    """Number of multisets of cardinality n drawn from m symbols: C(m+n-1, n)."""
    assert m >= 0 and n >= 0
    if n == 0:
        return 1
    if m == 0:
        return 0
    return comb(m + n - 1, n)


@cache
def partitions_of(n: int) -> tuple[Partition, ...]:
    """All partitions of n in decreasing lexicographic order."""
    assert n >= 0
    if n == 0:
        return ((),)
    out = []
    for first in range(n, 0, -1):
        for rest in partitions_of(n - first):
            if not rest or rest[0] <= first:
                out.append((first,) + rest)
    return tuple(out)


def partition_count(n: int) -> int:
    return len(partitions_of(n))


class PartitionMap:
    """A partition-valued map on a finite ordered label set.

    The label order is fixed at construction and is part of the identity;
    total size is the sum of the sizes of the assigned partitions.
    """

    __slots__ = ("labels", "parts", "_hash")

    def __init__(self, labels, parts):
        self.labels = tuple(labels)
        self.parts = tuple(check_partition(p) for p in parts)
        assert len(self.labels) == len(self.parts)
        assert len(set(self.labels)) == len(self.labels), "duplicate labels"
        self._hash = hash((self.labels, self.parts))

    @property
    def total(self) -> int:
        return sum(sum(p) for p in self.parts)

    def __getitem__(self, label):
        return self.parts[self.labels.index(label)]

    def items(self):
        return zip(self.labels, self.parts)

    def __eq__(self, other):
        return (isinstance(other, PartitionMap)
                and self.labels == other.labels and self.parts == other.parts)

    def __hash__(self):
        return self._hash

    def __repr__(self):
        inner = ", ".join(f"{l}:{list(p)}" for l, p in self.items())
        return "{" + inner + "}"

    def sort_key(self):
        return self.parts

    def to_json(self):
        return {str(l): list(p) for l, p in self.items() if p}

    @classmethod
    def from_json(cls, obj, labels):
        parts = [tuple(obj.get(str(l), ())) for l in labels]
        return cls(labels, parts)


def compositions(n: int, k: int):
    """Weak compositions of n into k parts, first part largest first."""
    if k == 0:
        if n == 0:
            yield ()
        return
    for first in range(n, -1, -1):
        for rest in compositions(n - first, k - 1):
            yield (first,) + rest


def partition_maps(n: int, labels) -> list[PartitionMap]:
    """All partition-valued maps on `labels` of total size n, canonical order."""
    labels = tuple(labels)
    assert n >= 0
    if n > 0 and not labels:
        return []
    out = []
    for comp in compositions(n, len(labels)):
        pools = [partitions_of(c) for c in comp]
        stack = [()]
        for pool in pools:
            stack = [s + (p,) for s in stack for p in pool]
        out.extend(PartitionMap(labels, s) for s in stack)
    return out


def partition_maps_count(n: int, k: int) -> int:
    """|P_n(X)| for |X| = k, by the composition formula."""
    return sum(prod(partition_count(c) for c in comp)
               for comp in compositions(n, k))
