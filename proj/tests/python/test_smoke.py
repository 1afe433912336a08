"""Smoke tests for the python bindings."""

import pytest

import guchar


def test_polynomial_coefficients():
    # -chi_2(GU(n,q)) = q + 1 for every n
    assert guchar.chi_gu(1, 2) == [1, 1]
    assert guchar.chi_gu(5, 2) == [1, 1]
    # level 1 collapses to the delta sequence
    assert guchar.chi_gu(1, 1) == [1]
    assert guchar.chi_gu(4, 1) == []


def test_reference_values():
    assert guchar.chi_gu_at(6, 4, 2) == 866295
    assert guchar.chi_gu_at(2, 8, 2) == 2390391
    assert guchar.chi_gu_at(6, 10, 2) == 80864415095481249942195
    assert guchar.chi_gu_at(6, 8, 3) == 26472493990104785747968
    assert guchar.chi_gu_at(6, 8, 4) == 277880845297817532881328125


def test_sign_relation():
    # -chi_r(GU(n,q)) = (-1)^(nr) chi_r(GL(n,-q))
    for n in range(1, 5):
        for r in range(1, 5):
            gu = guchar.chi_gu(n, r)
            gl = guchar.chi_gl(n, r)
            flipped = [(-1) ** (n * r + k) * c for k, c in enumerate(gl)]
            assert gu == flipped


def test_p_primary():
    assert guchar.p_primary(2, 9, 2, 6) == [1, 2, -6, -14, 10, 34, 10]
    assert guchar.p_primary(3, 262144, 2, 5) == [1, 1, -13, -13, 78, 78]
    assert guchar.p_primary(2, -3, 2, 4) == [1, 2, -2, -6, -2]


def test_group_order_and_oracles():
    assert guchar.gu_order(3, 2) == 648
    assert guchar.gu_order(2, 3) == 96
    assert guchar.chi_gu_bruteforce(2, 2, 3) == 36
    assert guchar.chi_gu_bruteforce(2, 2, 3) == guchar.chi_gu_at(2, 3, 2)
    assert guchar.chi_gu_p_primary_bruteforce(1, 3, 2, 2) == 4
    with pytest.raises(guchar.OracleBudgetExceeded):
        guchar.chi_gu_bruteforce(3, 2, 2, budget=100)


def test_counting():
    assert guchar.count_polys(2, 3, "selfdual") == 12
    assert guchar.count_polys(2, 3, "irreducible-selfdual") == 2
    assert guchar.count_qregular_classes(2, 2) == 6
    assert guchar.selfdual_monic_count(3) == [0, 0, 1, 1]
    with pytest.raises(ValueError):
        guchar.count_polys(2, 3, "nonsense")


def test_class_types():
    types = guchar.class_types(2)
    assert len(types) == 3
    assert {"minus": [(1, 1, 2)], "plus": []} in [
        {"minus": list(map(tuple, t["minus"])), "plus": list(map(tuple, t["plus"]))}
        for t in types
    ]


def test_verify():
    checks = guchar.verify(n_max=4, r_max=3, order=6)
    assert len(checks) == 10
    assert all(c["pass"] for c in checks)
    names = {c["name"] for c in checks}
    assert "pipeline-agreement" in names
    assert "master-identity" in names
