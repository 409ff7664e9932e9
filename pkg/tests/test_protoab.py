from collections import Counter
from math import comb, factorial

import pytest

from hallalg.groups import cyclic_group, trivial_group
from hallalg.protoab import AbelianPGroups, F1FreeG, VectFq, make_instance


@pytest.fixture(scope="module")
def vf2():
    return VectFq(2, 2)


@pytest.fixture(scope="module")
def ab2():
    return AbelianPGroups(2, 16)


def gaussian_binomial_brute(q, m, l):
    """Count dim-l subspaces of F_q^m by brute force over spanning sets."""
    inst = VectFq(q, m)
    return sum(1 for u in inst.subobjects(m)
               if len(u) == q ** l)


def test_vect_iso_classes(vf2):
    assert vf2.iso_classes() == [0, 1, 2]
    assert vf2.zero_key() == 0
    assert [vf2.size_of(c) for c in vf2.iso_classes()] == [0, 1, 2]


def test_vect_aut_orders(vf2):
    assert vf2.aut_order(2) == 6          # |GL_2(F_2)| by enumeration
    assert vf2.aut_order(0) == 1
    assert VectFq(3, 2).aut_order(2) == 48


def test_vect_subobject_counts(vf2):
    assert vf2.subobjects_with_type(2, 1, 1) == 3
    assert vf2.subobjects_with_type(2, 0, 2) == 1
    assert vf2.subobjects_with_type(2, 2, 0) == 1
    # L = 0 forces N ~ M
    assert vf2.subobjects_with_type(2, 0, 1) == 0


def test_vect_gaussian_binomials():
    for q in (2, 3):
        inst = VectFq(q, 2)
        for m in range(3):
            for l in range(m + 1):
                want = gaussian_binomial_brute(q, m, l)
                got = inst.subobjects_with_type(
                    m, l, m - l)
                assert got == want


def test_count_ses_identity_vect(vf2):
    for l in vf2.iso_classes():
        for m in vf2.iso_classes():
            for n in vf2.iso_classes():
                assert vf2.count_ses(l, m, n) == \
                    vf2.subobjects_with_type(m, l, n) * \
                    vf2.aut_order(l) * vf2.aut_order(n)


def test_ses_examples(vf2, ab2):
    assert vf2.count_ses(1, 2, 1) == 3
    assert vf2.count_ses(0, 2, 2) == vf2.aut_order(2)
    f1 = F1FreeG(trivial_group(), 2)
    assert f1.count_ses(1, 2, 1) == 2


def test_f1_aut_orders():
    for G in (trivial_group(), cyclic_group(2), cyclic_group(3)):
        inst = F1FreeG(G, 3)
        for n in range(4):
            assert inst.aut_order(n) == G.order ** n * factorial(n)
            assert len(inst.isos(n, n)) == inst.aut_order(n)


def test_f1_subobjects_binomial():
    inst = F1FreeG(cyclic_group(2), 4)
    for m in range(5):
        for l in range(m + 1):
            assert inst.subobjects_with_type(m, l, m - l) == comb(m, l)
            # wedge decompositions are symmetric
            assert inst.subobjects_with_type(m, l, m - l) == \
                inst.subobjects_with_type(m, m - l, l)


def test_f1_ses_identity():
    inst = F1FreeG(cyclic_group(2), 3)
    for l in range(3):
        for m in range(3):
            for n in range(3):
                assert inst.count_ses(l, m, n) == \
                    inst.subobjects_with_type(m, l, n) * \
                    inst.aut_order(l) * inst.aut_order(n)


def test_total_subobject_count(vf2, ab2):
    # sum over (L, N) of typed counts equals the total subobject count
    for inst, keys in ((vf2, vf2.iso_classes()),
                       (ab2, [(), (1,), (2,), (1, 1), (2, 1)])):
        for m in keys:
            total = sum(inst.subobjects_with_type(m, l, n)
                        for l in keys for n in keys)
            assert total == inst.total_subobjects(m)


def test_abelian_p_iso_classes(ab2):
    got = set(ab2.iso_classes())
    assert got == {(), (1,), (2,), (1, 1), (3,), (2, 1), (1, 1, 1),
                   (4,), (3, 1), (2, 2), (2, 1, 1), (1, 1, 1, 1)}


def test_abelian_p_subgroup_counts(ab2):
    assert ab2.subobjects_with_type((2,), (1,), (1,)) == 1
    assert ab2.subobjects_with_type((1, 1), (1,), (1,)) == 3
    # Z/4 x Z/2 has 8 subgroups
    assert ab2.total_subobjects((2, 1)) == 8
    types = Counter(ab2.classify_sub((2, 1), u)
                    for u in ab2.subobjects((2, 1)))
    assert types == Counter({(): 1, (1,): 3, (2,): 2, (1, 1): 1, (2, 1): 1})


def test_abelian_p_quotient_classification(ab2):
    order2 = [u for u in ab2.subobjects((2, 1))
              if ab2.classify_sub((2, 1), u) == (1,)]
    quots = sorted(ab2.classify_quot((2, 1), u) for u in order2)
    assert quots == [(1, 1), (2,), (2,)]


def test_abelian_p_aut_orders(ab2):
    assert ab2.aut_order((1, 1)) == 6
    assert ab2.aut_order((2,)) == 2
    assert ab2.aut_order((2, 1)) == 8
    assert ab2.aut_order(()) == 1


def test_abelian_p_ses_identity(ab2):
    small = [(), (1,), (2,), (1, 1)]
    for l in small:
        for m in small + [(2, 1)]:
            for n in small:
                assert ab2.count_ses(l, m, n) == \
                    ab2.subobjects_with_type(m, l, n) * \
                    ab2.aut_order(l) * ab2.aut_order(n)


def test_make_instance():
    from hallalg import UsageError
    assert make_instance("vect-fq", q=2, bound=2).family == "vect-fq"
    assert make_instance("f1-free", group="cyclic:2", bound=3).family == \
        "f1-free"
    assert make_instance("ab-p-groups", p=2, bound=8).family == "ab-p-groups"
    with pytest.raises(UsageError):
        make_instance("vect-fq", bound=2)
    with pytest.raises(UsageError):
        make_instance("unknown", bound=2)
