from hypothesis import given, strategies as st

from hallalg.exactmath.partitions import (PartitionMap, compositions,
                                          conjugate, multiset_number,
                                          partition_maps,
                                          partition_maps_count, partitions_of)


def brute_multisets(m, n):
    """Enumerate weakly increasing n-tuples from m symbols."""
    if n == 0:
        return 1
    count = 0
    stack = [(0, 0)]
    while stack:
        lo, depth = stack.pop()
        if depth == n:
            count += 1
            continue
        for v in range(lo, m):
            stack.append((v, depth + 1))
    return count


def test_multiset_number_against_enumeration():
    for m in range(0, 6):
        for n in range(0, 5):
            assert multiset_number(m, n) == brute_multisets(m, n)


def test_multiset_edge_cases():
    assert multiset_number(4, 2) == 10
    assert multiset_number(9, 0) == 1
    assert multiset_number(0, 3) == 0
    assert multiset_number(1, 5) == 1


def test_partitions_of_counts_and_order():
    assert partitions_of(0) == ((),)
    assert partitions_of(1) == ((1,),)
    assert len(partitions_of(4)) == 5
    # decreasing lexicographic
    p4 = partitions_of(4)
    assert list(p4) == sorted(p4, reverse=True)
    # brute force count: stars-and-bars style recursion
    def brute(n, maxpart):
        if n == 0:
            return 1
        return sum(brute(n - k, k) for k in range(1, min(n, maxpart) + 1))
    for n in range(9):
        assert len(partitions_of(n)) == brute(n, n)


@given(st.integers(min_value=0, max_value=12))
def test_partitions_are_weakly_decreasing(n):
    for p in partitions_of(n):
        assert sum(p) == n
        assert all(p[i] >= p[i + 1] for i in range(len(p) - 1))


def test_conjugate_involution():
    for n in range(7):
        for p in partitions_of(n):
            assert conjugate(conjugate(p)) == p


def test_partition_maps_examples():
    maps = partition_maps(2, ("a", "b"))
    assert len(maps) == 5
    assert partition_maps(0, ("a",)) == [PartitionMap(("a",), ((),))]
    assert partition_maps(1, ("a",)) == [PartitionMap(("a",), ((1,),))]
    assert partition_maps(3, ()) == []


def test_partition_maps_count_formula():
    for n in range(5):
        for k in range(1, 4):
            assert len(partition_maps(n, tuple(range(k)))) == \
                partition_maps_count(n, k)


def test_partition_map_json_roundtrip():
    pm = PartitionMap(("a", "b"), ((2, 1), ()))
    assert pm.total == 3
    assert PartitionMap.from_json(pm.to_json(), ("a", "b")) == pm


def test_compositions_cover():
    assert list(compositions(2, 2)) == [(2, 0), (1, 1), (0, 2)]
    assert list(compositions(0, 0)) == [()]
