import math

import pytest

from catalan_lab import (
    IdentityId,
    StatId,
    StatKind,
    binomial,
    brute_total,
    catalan,
    closed_total,
    dyck_count_by_ddu,
    dyck_count_by_ddu_udu,
    identity_check,
    narayana,
)
from catalan_lab.formulas import IDENTITY_FLOOR, PASCAL_ROW_LIMIT


def pascal_oracle(rows):
    """Independent Pascal triangle built by the plain recurrence."""
    table = [[1]]
    for n in range(1, rows + 1):
        prev = table[-1]
        table.append(
            [1] + [prev[i - 1] + prev[i] for i in range(1, n)] + [1]
        )
    return table


class TestBinomial:
    def test_small_values(self):
        assert binomial(4, 2) == 6
        assert binomial(5, -1) == 0
        assert binomial(3, 5) == 0
        assert binomial(-2, 0) == 0
        assert binomial(0, 0) == 1

    def test_central_binomial_n20(self):
        assert binomial(40, 20) == 137846528820

    def test_against_pascal_recurrence(self):
        table = pascal_oracle(60)
        for n in range(61):
            for k in range(n + 1):
                assert binomial(n, k) == table[n][k]

    def test_beyond_row_limit_falls_back(self):
        n = PASCAL_ROW_LIMIT + 7
        assert binomial(n, 3) == math.comb(n, 3)
        assert binomial(n, n + 1) == 0

    def test_concurrent_memo_growth(self):
        import threading

        from catalan_lab import formulas

        saved = list(formulas._rows)
        formulas._rows[:] = [[1]]
        errors = []

        def worker():
            try:
                for n in range(0, 300, 7):
                    if binomial(n, n // 2) != math.comb(n, n // 2):
                        errors.append(n)
            except Exception as exc:  # noqa: BLE001 - collected for the assert
                errors.append(repr(exc))

        threads = [threading.Thread(target=worker) for _ in range(12)]
        for t in threads:
            t.start()
        for t in threads:
            t.join()
        try:
            assert not errors, errors[:3]
            assert all(len(row) == i + 1 for i, row in enumerate(formulas._rows))
        finally:
            formulas._rows[:] = saved


class TestCatalanNarayana:
    def test_examples(self):
        assert catalan(0) == 1
        assert catalan(4) == 14
        assert narayana(4, 2) == 6

    def test_catalan_matches_definition(self):
        for n in range(50):
            assert catalan(n) == math.comb(2 * n, n) // (n + 1)
        with pytest.raises(ValueError):
            catalan(-1)

    def test_narayana_row_sums(self):
        for n in range(1, 13):
            assert sum(narayana(n, k) for k in range(1, n + 1)) == catalan(n)

    def test_narayana_symmetry(self):
        for n in range(1, 13):
            for k in range(1, n + 1):
                assert narayana(n, k) == narayana(n, n + 1 - k)

    def test_out_of_range_is_zero(self):
        assert narayana(4, 0) == 0
        assert narayana(4, 5) == 0
        assert narayana(0, 1) == 0


class TestClosedTotal:
    def test_anchor_values(self):
        assert closed_total(4, StatId(StatKind.SYM_VALLEY)) == 1
        assert closed_total(3, StatId(StatKind.AREA)) == 22
        assert closed_total(2, StatId(StatKind.SEMI)) == 7
        assert closed_total(4, StatId(StatKind.ELL_PEAK, 2)) == 1

    def test_row_formulas_spot_values(self):
        assert closed_total(2, StatId(StatKind.RUNS_DESC)) == 4
        assert closed_total(1, StatId(StatKind.RUNS_WEAK_ASC)) == 1
        assert closed_total(2, StatId(StatKind.RUNS_WEAK_ASC)) == 2
        assert closed_total(4, StatId(StatKind.SYM_PEAK)) == 5
        assert closed_total(4, StatId(StatKind.CORNER_HU)) == binomial(7, 2)
        assert closed_total(4, StatId(StatKind.CORNER_DH)) == binomial(6, 1)

    def test_all_ell_totals_sum_the_per_ell_rows(self):
        for n in range(1, 13):
            for kind in (StatKind.ELL_VALLEY, StatKind.ELL_PEAK, StatKind.SYM_PEAK):
                total = closed_total(n, StatId(kind))
                by_ell = sum(
                    closed_total(n, StatId(kind, ell)) for ell in range(1, n + 1)
                )
                assert total == by_ell

    def test_small_n_all_rows_zero_or_positive(self):
        for n in range(1, 5):
            for kind in StatKind:
                assert closed_total(n, StatId(kind)) >= 0

    def test_rejects_n_below_one(self):
        with pytest.raises(ValueError):
            closed_total(0, StatId(StatKind.AREA))


class TestStrataCounts:
    def test_anchor_values(self):
        assert dyck_count_by_ddu(4, 0) == 8
        assert dyck_count_by_ddu(4, 1) == 6
        assert dyck_count_by_ddu(4, 0) + dyck_count_by_ddu(4, 1) == 14
        assert dyck_count_by_ddu_udu(4, 1, 1) == 3
        assert dyck_count_by_ddu(1, 0) == 1

    def test_out_of_range_zero(self):
        assert dyck_count_by_ddu(4, 2) == 0
        assert dyck_count_by_ddu(4, -1) == 0
        assert dyck_count_by_ddu_udu(4, 0, 4) == 0
        assert dyck_count_by_ddu_udu(4, 0, -1) == 0

    def test_j_sum_matches_k_count(self):
        for n in range(1, 14):
            for k in range((n - 1) // 2 + 1):
                assert dyck_count_by_ddu(n, k) == sum(
                    dyck_count_by_ddu_udu(n, k, j) for j in range(n - 2 * k)
                )

    def test_k_sum_is_catalan(self):
        for n in range(1, 20):
            assert sum(
                dyck_count_by_ddu(n, k) for k in range((n - 1) // 2 + 1)
            ) == catalan(n)


class TestIdentities:
    def test_catalan_peak_sum_n4(self):
        res = identity_check(IdentityId.CATALAN_PEAK_SUM, 4)
        assert (res.lhs, res.rhs, res.holds) == (14, 14, True)

    def test_binomial_product_sum_n5_k1(self):
        res = identity_check(IdentityId.BINOMIAL_PRODUCT_SUM, 5, 1)
        assert res.lhs == res.rhs == binomial(4, 1) * binomial(3, 1) * 4 == 48

    def test_last_passage_sum_smallest(self):
        res = identity_check(IdentityId.LAST_PASSAGE_SUM, 2)
        assert (res.lhs, res.rhs) == (3, 3)

    @pytest.mark.parametrize("ident", list(IdentityId))
    def test_holds_on_sample_range(self, ident):
        floor = IDENTITY_FLOOR[ident]
        for n in range(floor, 60):
            if ident is IdentityId.BINOMIAL_PRODUCT_SUM:
                for k in range((n - 1) // 2 + 1):
                    assert identity_check(ident, n, k).holds, (ident, n, k)
            else:
                assert identity_check(ident, n).holds, (ident, n)

    @pytest.mark.parametrize("ident", list(IdentityId))
    def test_floor_enforced(self, ident):
        floor = IDENTITY_FLOOR[ident]
        if floor > 1:
            with pytest.raises(ValueError):
                identity_check(ident, floor - 1)

    def test_aux_k_rules(self):
        with pytest.raises(ValueError):
            identity_check(IdentityId.CATALAN_PEAK_SUM, 5, 1)
        with pytest.raises(ValueError):
            identity_check(IdentityId.BINOMIAL_PRODUCT_SUM, 5)
        with pytest.raises(ValueError):
            identity_check(IdentityId.BINOMIAL_PRODUCT_SUM, 5, 3)


class TestOracleAgreement:
    """Closed forms against the enumeration oracle at desk scale."""

    @pytest.mark.parametrize("n", range(1, 9))
    def test_every_row(self, n):
        for kind in StatKind:
            s = StatId(kind)
            assert closed_total(n, s) == brute_total(n, s), kind

    @pytest.mark.parametrize("n", range(1, 9))
    def test_per_ell_rows(self, n):
        for kind in (
            StatKind.SYM_VALLEY,
            StatKind.ELL_VALLEY,
            StatKind.SYM_PEAK,
            StatKind.ELL_PEAK,
        ):
            for ell in range(1, n + 1):
                s = StatId(kind, ell)
                assert closed_total(n, s) == brute_total(n, s), (kind, ell)
