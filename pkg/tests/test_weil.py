"""Truncated Weil algebra cohomology and the derived dimension tables."""

from vfcoho import MismatchError, haefliger_dims, partition, vey_basis, weil_betti
from vfcoho.weil import (max_degree, monomial_degree, monomial_text,
                         paper_dimension_tables, weil_basis,
                         weil_differential, wtilde_dims)


def brute_force_partitions(m):
    """Count partitions by direct enumeration, independent of the recurrence."""

    def count(remaining, largest):
        if remaining == 0:
            return 1
        return sum(count(remaining - part, part)
                   for part in range(min(remaining, largest), 0, -1))

    return count(m, m)


def test_partition_matches_direct_enumeration():
    for m in range(13):
        assert partition(m) == brute_force_partitions(m)


def test_partition_golden(golden):
    assert [partition(m) for m in range(1, 9)] == golden["partition_1_to_8"]


def test_weil_differential_squares_to_zero():
    for n in (1, 2, 3):
        for q in range(max_degree(n) + 1):
            for mono in weil_basis(n, q):
                acc = {}
                for c1, m1 in weil_differential(mono, n):
                    for c2, m2 in weil_differential(m1, n):
                        acc[m2] = acc.get(m2, 0) + c1 * c2
                assert all(v == 0 for v in acc.values()), mono


def test_weil_differential_raises_degree_by_one():
    for n in (1, 2):
        for q in range(max_degree(n)):
            for mono in weil_basis(n, q):
                for _, image in weil_differential(mono, n):
                    assert monomial_degree(image) == q + 1


def test_betti_golden_tables(golden):
    for n in (1, 2, 3):
        expected = {int(q): d for q, d in golden["weil_betti"][str(n)].items()}
        got = {q: d for q, d in enumerate(weil_betti(n)) if d}
        assert got == expected


def test_betti_vanishing_window():
    # H^q = 0 for 0 < q <= 2N and again at q = 2N+2 (when the algebra
    # reaches that degree at all)
    for n in (1, 2, 3):
        betti = weil_betti(n)
        assert betti[0] == 1
        assert all(betti[q] == 0 for q in range(1, 2 * n + 1))
        if 2 * n + 2 < len(betti):
            assert betti[2 * n + 2] == 0
        assert betti[2 * n + 1] == partition(n + 1) - 1


def test_vey_basis_counts_match_betti():
    # the unit class in degree zero is implicit; vey_basis lists the rest
    for n in (1, 2, 3):
        betti = weil_betti(n)
        assert not vey_basis(n, 0) and betti[0] == 1
        for q, expected in enumerate(betti):
            if q:
                assert len(vey_basis(n, q)) == expected


def test_vey_basis_degrees_and_text(golden):
    for mono in vey_basis(2):
        assert monomial_degree(mono) <= max_degree(2)
    assert sorted(monomial_text(m) for m in vey_basis(2, 5)) == \
        golden["vey_degree5_n2"]


def test_wtilde_golden(golden):
    assert wtilde_dims(2) == {int(k): v for k, v in golden["wtilde_2"].items()}


def test_haefliger_tables(golden):
    for n in (2, 3, 4):
        expected = {int(k): v for k, v in golden["haefliger"][str(n)].items()}
        assert haefliger_dims(n) == expected


def test_haefliger_formula_rows():
    # leading entries match the closed forms p(N+1)-1 and N*(p(N+1)-1)
    for n in (2, 3, 4):
        table = haefliger_dims(n)
        assert table[n + 1] == partition(n + 1) - 1
        assert table[n + 2] == n * (partition(n + 1) - 1)


def test_haefliger_validates_betti_input():
    import pytest

    with pytest.raises(MismatchError):
        haefliger_dims(2, betti_of_m=[1, 2])


def test_paper_dimension_rows_present():
    rows = {r["space"]: r["dim"] for r in paper_dimension_tables(3)}
    assert rows["H^2(V, forms[1] mod exact)"] == 3
    assert rows["H^2(V, forms[0])"] == 6
    rows2 = {r["space"]: r["dim"] for r in paper_dimension_tables(2)}
    assert rows2["H^2(V, forms[1] mod exact)"] == 2
    assert all(r["source"] == "cited" for r in paper_dimension_tables(2))
