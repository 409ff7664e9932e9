import random

import pytest

from hallalg.exactmath.partitions import PartitionMap, partition_maps
from hallalg.exactmath.symfunc import MultiSymElem, SymElem, multisym_mul


def test_symelem_ring_ops():
    s1 = SymElem.schur((1,))
    s2 = SymElem.schur((2,))
    s11 = SymElem.schur((1, 1))
    assert s1 * s1 == s2 + s11
    assert (s1 + s2) * s1 == s1 * s1 + s2 * s1
    assert s1 * SymElem.schur(()) == s1


def test_multisym_examples():
    a = MultiSymElem.basis(PartitionMap(("a",), ((1,),)))
    sq = multisym_mul(a, a)
    assert sq == MultiSymElem(("a",), {
        PartitionMap(("a",), ((2,),)): 1,
        PartitionMap(("a",), ((1, 1),)): 1})
    assert multisym_mul(MultiSymElem.unit(("a",)), a) == a
    x = MultiSymElem.basis(PartitionMap(("a", "b"), ((1,), ())))
    y = MultiSymElem.basis(PartitionMap(("a", "b"), ((), (1,))))
    assert multisym_mul(x, y) == \
        MultiSymElem.basis(PartitionMap(("a", "b"), ((1,), (1,))))


def test_multisym_mismatched_labels():
    a = MultiSymElem.basis(PartitionMap(("a",), ((1,),)))
    b = MultiSymElem.basis(PartitionMap(("b",), ((1,),)))
    with pytest.raises(ValueError):
        multisym_mul(a, b)


def test_multisym_associative_commutative_sampled():
    # <= 50 random triples, total size <= 4 per factor, two labels
    rng = random.Random(7)
    pool = []
    for n in range(0, 5):
        pool.extend(partition_maps(n, ("a", "b")))
    triples = [(rng.choice(pool), rng.choice(pool), rng.choice(pool))
               for _ in range(50)]
    for la, lb, lc in triples:
        a = MultiSymElem.basis(la)
        b = MultiSymElem.basis(lb)
        c = MultiSymElem.basis(lc)
        assert multisym_mul(a, b) == multisym_mul(b, a)
        assert multisym_mul(multisym_mul(a, b), c) == \
            multisym_mul(a, multisym_mul(b, c))


def test_serialization():
    a = MultiSymElem.basis(PartitionMap(("a", "b"), ((2, 1), ())))
    js = a.to_json()
    assert js == [[{"a": [2, 1]}, "1"]]
