import numpy as np
import pytest

from intmat_lab import properties
from intmat_lab.budgets import BudgetExceededError
from intmat_lab.counting import (
    CountRecord,
    brute_force_count,
    count_integer_eig_2x2,
    count_integer_eig_any_n,
    count_lambda_eig_2x2,
    count_real_eig_2x2,
    count_singular_2x2,
    count_solutions_linearforms,
    growth_probe,
    lambda_eig_counts_2x2,
    product_distribution,
)
from intmat_lab.linalg import LinearForm

from _oracles import count_integer_eig_3x3_scan, sweep_2x2


class TestCountRecord:
    def test_probability(self):
        from fractions import Fraction

        r = CountRecord("singular", 2, 1, 33, 81)
        assert r.probability == Fraction(33, 81)
        assert r.probability_float == pytest.approx(33 / 81)

    def test_validation(self):
        with pytest.raises(ValueError):
            CountRecord("singular", 2, 1, 33, 80)
        with pytest.raises(ValueError):
            CountRecord("singular", 2, 1, 100, 81)


class TestProductDistribution:
    def test_k1_fixture(self):
        dist = product_distribution(1)
        assert dist.count(0) == 5
        assert dist.count(1) == 2
        assert dist.count(-1) == 2
        assert dist.count(2) == 0

    @pytest.mark.parametrize("k", [1, 2, 5, 9])
    def test_totals_and_symmetry(self, k):
        dist = product_distribution(k)
        assert dist.count(0) == 4 * k + 1
        assert sum(c for _, c in dist.items()) == (2 * k + 1) ** 2
        for m in range(1, k * k + 1):
            assert dist.count(m) == dist.count(-m)

    @pytest.mark.parametrize("k,shift", [(1, 1), (2, -3), (3, 2), (4, 7)])
    def test_shifted_against_enumeration(self, k, shift):
        dist = product_distribution(k, shift)
        expected = {}
        for x in range(-k, k + 1):
            for y in range(-k, k + 1):
                expected[(x - shift) * (y - shift)] = (
                    expected.get((x - shift) * (y - shift), 0) + 1
                )
        assert sum(c for _, c in dist.items()) == (2 * k + 1) ** 2
        for m, c in expected.items():
            assert dist.count(m) == c

    def test_memory_budget(self, monkeypatch):
        monkeypatch.setenv("INTMAT_BUDGET_MB", "1")
        with pytest.raises(BudgetExceededError):
            product_distribution(50_000)

    def test_invalid_k(self):
        with pytest.raises(ValueError):
            product_distribution(0)


class TestFastCountersAgainstBruteForce:
    @pytest.mark.parametrize("k", list(range(1, 11)))
    def test_named_counters(self, k):
        oracle = sweep_2x2(k)
        assert count_singular_2x2(k).count == oracle["singular"]
        assert count_integer_eig_2x2(k).count == oracle["integer_eig"]
        assert count_real_eig_2x2(k).count == oracle["real_eig"]

    @pytest.mark.parametrize("k", [1, 2, 3, 4])
    def test_lambda_counter(self, k):
        oracle = sweep_2x2(k)["lambda_counts"]
        fast = lambda_eig_counts_2x2(k)
        assert fast.tolist() == oracle.tolist()
        for lam in range(-2 * k, 2 * k + 1):
            assert count_lambda_eig_2x2(k, lam).count == oracle[lam + 2 * k]

    def test_small_fixtures(self):
        assert count_singular_2x2(1).count == 33
        assert count_integer_eig_2x2(1).count == 55
        assert count_real_eig_2x2(1).count == 67
        assert count_lambda_eig_2x2(1, 1).count == 27

    def test_lambda_outside_bound_is_free(self):
        record = count_lambda_eig_2x2(10**9, 3 * 10**9)
        assert record.count == 0

    def test_lambda_symmetry(self):
        for k in (3, 7):
            for lam in range(0, 2 * k + 1, 3):
                assert count_lambda_eig_2x2(k, lam).count == count_lambda_eig_2x2(k, -lam).count

    def test_lambda_zero_is_singular_count(self):
        for k in (2, 6, 11):
            assert count_lambda_eig_2x2(k, 0).count == count_singular_2x2(k).count

    def test_monotonicity(self):
        for k in (1, 4, 9):
            singular = count_singular_2x2(k).count
            integer = count_integer_eig_2x2(k).count
            real = count_real_eig_2x2(k).count
            assert singular <= integer <= real <= (2 * k + 1) ** 4

    def test_real_eig_converges(self):
        p = count_real_eig_2x2(100).probability_float
        assert abs(p - 49 / 72) / (49 / 72) < 0.01

    def test_k_caps(self):
        with pytest.raises(BudgetExceededError):
            count_integer_eig_2x2(2000)
        with pytest.raises(BudgetExceededError):
            count_singular_2x2(20_000)
        with pytest.raises(BudgetExceededError):
            count_real_eig_2x2(20_000)


class TestRepeatedEigenvalueDeficit:
    def test_deficit_identity(self):
        # sum over lambda of |members| counts two-distinct-eigenvalue matrices
        # twice and repeated-eigenvalue matrices once
        for k in (4, 8, 16):
            oracle = sweep_2x2(k)
            total_membership = int(lambda_eig_counts_2x2(k).sum())
            deficit = 2 * count_integer_eig_2x2(k).count - total_membership
            assert deficit == oracle["repeated"]
            assert deficit >= 0

    def test_repeated_eigenvalue_count_per_lambda_grows_subquadratically(self):
        # matrices with repeated eigenvalue 0: trace 0 and b*c = -a*a
        ks = [50, 100, 200, 400]
        counts = []
        for k in ks:
            dist = product_distribution(k)
            counts.append(sum(dist.count(-a * a) for a in range(-k, k + 1)))
        slope = np.polyfit(np.log(ks), np.log(counts), 1)[0]
        assert slope < 1.8


class TestLinearFormCounter:
    def test_identity_forms_match_singular(self):
        x = LinearForm(1, 0)
        assert count_solutions_linearforms(x, x, x, x, 1) == 33
        assert count_solutions_linearforms(x, x, x, x, 4) == count_singular_2x2(4).count

    def test_diagonal_lower_bound(self):
        k = 6
        f1, f2 = LinearForm(2, 3), LinearForm(1, -5)
        count = count_solutions_linearforms(f1, f2, f1, f2, k)
        assert count >= (2 * k + 1) ** 2

    def test_against_quadruple_loop(self):
        k = 2
        forms = (LinearForm(1, 6), LinearForm(2, -1), LinearForm(1, -6), LinearForm(3, 2))
        expected = 0
        for a in range(-k, k + 1):
            for b in range(-k, k + 1):
                for c in range(-k, k + 1):
                    for d in range(-k, k + 1):
                        if forms[0](a) * forms[1](b) == forms[2](c) * forms[3](d):
                            expected += 1
        assert count_solutions_linearforms(*forms, k) == expected

    def test_big_coefficients_use_exact_keys(self):
        k = 2
        big = 2**33
        forms = (LinearForm(big, 1), LinearForm(1, 0), LinearForm(big, 1), LinearForm(1, 0))
        expected = 0
        for a in range(-k, k + 1):
            for b in range(-k, k + 1):
                for c in range(-k, k + 1):
                    for d in range(-k, k + 1):
                        if (big * a + 1) * b == (big * c + 1) * d:
                            expected += 1
        assert count_solutions_linearforms(*forms, k) == expected


class TestBruteForce:
    def test_always_true_counts_everything(self):
        record = brute_force_count(3, 1, properties.always())
        assert record.count == record.total == 19683

    def test_budget(self):
        with pytest.raises(BudgetExceededError):
            brute_force_count(3, 10, properties.singular())

    def test_batch_equals_scalar_path(self):
        fast = brute_force_count(2, 2, properties.singular())
        scalar_only = properties.MatrixProperty(
            "singular", scalar=properties.singular().scalar, batch=None
        )
        slow = brute_force_count(2, 2, scalar_only)
        assert fast.count == slow.count

    def test_n3_singular_batch_equals_scalar(self):
        fast = brute_force_count(3, 1, properties.singular())
        scalar_only = properties.MatrixProperty(
            "singular", scalar=properties.singular().scalar, batch=None
        )
        assert fast.count == brute_force_count(3, 1, scalar_only).count


class TestIntegerEigAnyN:
    def test_n2_matches_fast_counter(self):
        assert count_integer_eig_any_n(2, 1).count == 55
        assert count_integer_eig_any_n(2, 3).count == count_integer_eig_2x2(3).count

    def test_n3_k1_against_scan_oracle(self):
        oracle = count_integer_eig_3x3_scan(1)
        record = count_integer_eig_any_n(3, 1)
        assert record.count == oracle == 14019
        assert record.total == 19683

    def test_dominates_singular(self):
        singular = brute_force_count(3, 1, properties.singular()).count
        assert count_integer_eig_any_n(3, 1).count >= singular


class TestGrowthProbe:
    def test_constant_counts(self):
        records = [CountRecord("always", 2, k, 500, (2 * k + 1) ** 4) for k in (2, 4, 8)]
        probe = growth_probe(records)
        assert abs(probe.exponent) < 1e-12

    def test_singular_exponent(self):
        records = [count_singular_2x2(k) for k in (100, 200, 400, 800)]
        probe = growth_probe(records)
        assert 2.0 <= probe.exponent <= 2.35
        assert probe.within(2.0)

    def test_integer_eig_exponent(self):
        records = [count_integer_eig_2x2(k) for k in (100, 200, 400, 800)]
        probe = growth_probe(records)
        assert 3.0 <= probe.exponent <= 3.35

    def test_validation(self):
        records = [count_singular_2x2(k) for k in (2, 3)]
        with pytest.raises(ValueError):
            growth_probe(records)
        mixed = [count_singular_2x2(2), count_singular_2x2(3), count_real_eig_2x2(4)]
        with pytest.raises(ValueError):
            growth_probe(mixed)
        unsorted_records = [count_singular_2x2(k) for k in (3, 2, 4)]
        with pytest.raises(ValueError):
            growth_probe(unsorted_records)
