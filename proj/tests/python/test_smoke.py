import pytest

import icegt


def test_product_formula():
    assert [icegt.count_20v(range(1, n + 1)) for n in range(1, 6)] == [1, 4, 60, 3328, 678912]
    assert icegt.count_20v([1, 2, 3, 4], method="explicit") == 3328
    assert icegt.eval_df_formula(5) == 678912
    assert icegt.eval_free_boundary_formula(5, 4) == 678912


def test_weighted_counts_agree():
    k = [2, 3, 4, 6]
    assert icegt.weighted_count_m6v(k) == icegt.count_20v(k) == icegt.weighted_count_triangles(k) == 7760
    assert icegt.count_triangles([1, 2, 3]) == 26


def test_patterns():
    assert icegt.omega_fsa([[5], [5, 6], [4, 6, 6], [4, 4, 6, 9], [2, 4, 5, 8, 9]]) == 2**13
    assert icegt.fiber_sum([[2], [2, 3], [2, 3, 3], [1, 2, 3, 4]]) == 32


def test_suites():
    assert icegt.verify_ybe()
    assert "lemma510" in icegt.suite_names()
    r = icegt.run_suite("thm11", quick=True)
    assert r["pass"] and r["failed"] == 0


def test_listing_and_sampling():
    recs = icegt.list_m6v([1, 2])
    assert sorted(r["ic"] for r in recs) == [0, 0, 1]
    draws = icegt.sample([[2], [2, 3], [2, 3, 3], [1, 2, 3, 4]], count=5, seed=42)
    assert [d["index"] for d in draws] == list(range(5))
    assert draws == icegt.sample([[2], [2, 3], [2, 3, 3], [1, 2, 3, 4]], count=5, seed=42)
    assert {d["prob"] for d in draws} <= {"1/8", "1/4"}


def test_cli_and_errors():
    code, out, _ = icegt.run_cli(["formula", "df", "--n", "3"])
    assert code == 0 and out.strip() == "60"
    code, _, err = icegt.run_cli(["count", "20v", "--k", "2,1"])
    assert code == 3 and "increasing" in err
    with pytest.raises(ValueError):
        icegt.count_20v([3, 3])
