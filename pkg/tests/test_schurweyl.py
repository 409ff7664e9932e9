import pytest

from hallalg.exactmath.partitions import PartitionMap, partition_maps
from hallalg.groups import (cyclic_group, klein_group, symmetric_group,
                            trivial_group)
from hallalg.schurweyl import (check_sum_of_squares, check_total_dimension,
                               dim_R, dim_poly_fns, schur_weyl_report)


def test_dim_poly_fns_examples():
    t = trivial_group()
    assert dim_poly_fns(t, 1, 2) == 1
    assert dim_poly_fns(t, 2, 2) == 10
    assert dim_poly_fns(cyclic_group(2), 1, 1) == 2
    # one variable for trivial G, d = 1: always 1
    for n in range(6):
        assert dim_poly_fns(t, 1, n) == 1
    # abelianization handles nonabelian input
    assert dim_poly_fns(symmetric_group(3), 1, 1) == 2


def test_dim_R_examples():
    assert dim_R(PartitionMap((0,), ((2,),)), 2) == 3
    assert dim_R(PartitionMap((0,), ((1, 1),)), 1) == 0
    assert dim_R(PartitionMap((0, 1), ((1,), (1,))), 1) == 1


def test_dim_R_monotone_in_d():
    for n in range(4):
        for lam in partition_maps(n, (0, 1)):
            for d in range(1, 4):
                assert dim_R(lam, d) <= dim_R(lam, d + 1)


def test_sum_of_squares_examples():
    ok, d = check_sum_of_squares(trivial_group(), 2, 2)
    assert ok and d == {"lhs": 10, "rhs": 10}
    ok, d = check_sum_of_squares(cyclic_group(2), 1, 1)
    assert ok and d["lhs"] == 2
    ok, d = check_sum_of_squares(cyclic_group(3), 2, 2)
    assert ok and d["rhs"] == 78


def test_total_dimension_examples():
    ok, d = check_total_dimension(trivial_group(), 2, 2)
    assert ok and d["lhs"] == 4
    ok, d = check_total_dimension(cyclic_group(2), 1, 1)
    assert ok and d["lhs"] == 2
    ok, d = check_total_dimension(cyclic_group(2), 2, 2)
    assert ok and d["lhs"] == 16


@pytest.mark.parametrize("G", [trivial_group(), cyclic_group(2),
                               cyclic_group(3), klein_group()])
def test_identities_grid(G):
    for n in range(0, 5):
        for d in range(1, 4):
            assert check_sum_of_squares(G, n, d)[0], (G.name, n, d)
            assert check_total_dimension(G, n, d)[0], (G.name, n, d)


def test_report_kernel_flags():
    r = schur_weyl_report(trivial_group(), 2, 1)
    kern = [row for row in r.rows if row["kernel"]]
    assert len(kern) == 1 and kern[0]["label"] == {"0": [1, 1]}
    assert r.ok
    r2 = schur_weyl_report(trivial_group(), 2, 2)
    assert not any(row["kernel"] for row in r2.rows)
    assert r2.ok
    r3 = schur_weyl_report(cyclic_group(2), 3, 1)
    for row in r3.rows:
        lam = PartitionMap.from_json(row["label"], (0, 1))
        assert row["kernel"] == any(len(p) > 1 for p in lam.parts)
    assert r3.ok


def test_kernel_free_when_n_le_d():
    for G in (trivial_group(), cyclic_group(2)):
        for d in range(1, 4):
            for n in range(0, d + 1):
                r = schur_weyl_report(G, n, d)
                assert not any(row["kernel"] for row in r.rows), (n, d)


def test_report_json():
    js = schur_weyl_report(cyclic_group(2), 2, 2).to_json()
    assert js["pass"] is True
    assert set(js["verdicts"]) == {"sum_of_squares", "total_dimension",
                                   "kernel_free_when_n_le_d",
                                   "nonzero_count_matches"}
