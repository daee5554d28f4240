"""Acceptance gate: every criterion is exact equality, run at full scale.

Each test prints one PASS line on success; a failed assertion marks the
criterion failed. Timing budgets are asserted where stated.
"""

import random
import time

import scipy.stats

from catalan_lab import (
    D,
    U,
    StatId,
    StatKind,
    binomial,
    brute_total,
    catalan,
    closed_total,
    count_factor,
    ddu_udu_counts,
    dyck_count_by_ddu,
    dyck_count_by_ddu_udu,
    enumerate_catalan,
    enumerate_dyck,
    enumerate_lattice,
    narayana,
    path_to_word,
    random_dyck_path,
    stat_value,
    word_to_path,
)
from catalan_lab.cli import main
from catalan_lab.verify import (
    marked_set,
    negative_final_paths,
    verify_bijections,
    verify_distributions,
    verify_identities,
)

PATTERN_KINDS = (
    StatKind.SYM_VALLEY,
    StatKind.ELL_VALLEY,
    StatKind.SYM_PEAK,
    StatKind.ELL_PEAK,
)


def report(criterion, text):
    print(f"ACCEPTANCE {criterion}: PASS ({text})", flush=True)


def test_criterion_01_table_totals():
    """Every statistic row matches its closed form for 1 <= n <= 14."""
    start = time.perf_counter()
    for n in range(1, 15):
        for kind in StatKind:
            s = StatId(kind)
            assert brute_total(n, s) == closed_total(n, s), (n, kind)
        for kind in PATTERN_KINDS:
            for ell in range(1, n + 1):
                s = StatId(kind, ell)
                assert brute_total(n, s) == closed_total(n, s), (n, kind, ell)
    elapsed = time.perf_counter() - start
    # spot anchors
    assert brute_total(4, StatId(StatKind.SYM_VALLEY)) == 1
    assert brute_total(4, StatId(StatKind.SYM_PEAK)) == 5
    assert brute_total(2, StatId(StatKind.RUNS_DESC)) == 4
    assert brute_total(2, StatId(StatKind.SEMI)) == 7
    assert brute_total(3, StatId(StatKind.AREA)) == 22
    assert elapsed <= 60, f"table reproduction took {elapsed:.1f}s"
    report(1, f"all rows, n<=14, {elapsed:.1f}s")


def test_criterion_02_per_ell_formulas():
    """Per-ell valley and peak totals match their binomials for n <= 12."""
    for n in range(1, 13):
        for ell in range(1, n + 1):
            assert brute_total(n, StatId(StatKind.ELL_VALLEY, ell)) == binomial(
                2 * n - 2 * ell - 1, n - ell - 3
            ), ("ell-valley", n, ell)
            assert brute_total(n, StatId(StatKind.ELL_PEAK, ell)) == binomial(
                2 * n - 2 * ell - 1, n - ell - 2
            ), ("ell-peak", n, ell)
            assert brute_total(n, StatId(StatKind.SYM_PEAK, ell)) == binomial(
                2 * n - 2 * ell - 2, n - ell - 2
            ), ("sym-peak", n, ell)
    report(2, "ell-valley, ell-peak, sym-peak per ell, n<=12")


def test_criterion_03_identity_sweep():
    """All identities hold exactly for 1 <= n <= 300 within 10 seconds."""
    start = time.perf_counter()
    rpt = verify_identities(300)
    elapsed = time.perf_counter() - start
    assert rpt.passed, rpt.to_text()
    assert elapsed <= 10, f"identity sweep took {elapsed:.1f}s"
    report(3, f"{rpt.cases_run} checks to n=300, {elapsed:.1f}s")


def test_criterion_04_bijection_suite():
    """Exhaustive round trips and image checks for every constructive map."""
    for n in range(11):
        for w in enumerate_catalan(n):
            assert path_to_word(word_to_path(w)) == w
        for p in enumerate_dyck(n):
            assert word_to_path(path_to_word(p)) == p
    rpt = verify_bijections(8)
    assert rpt.passed, rpt.to_text()
    report(4, f"word/path to n=10 plus {rpt.cases_run} suite checks to n=8")


def test_criterion_05_marked_set_cardinalities():
    """Enumerated marked-set sizes equal their closed forms for n <= 8."""
    for n in range(1, 9):
        paths = list(enumerate_dyck(n))
        assert sum(count_factor(p, (U, U)) for p in paths) == binomial(
            2 * n - 1, n - 2
        )
        assert sum(count_factor(p, (D, D, U)) for p in paths) == binomial(
            2 * n - 2, n - 3
        )
        assert sum(count_factor(p, (U, D, U)) for p in paths) == binomial(
            2 * n - 2, n - 2
        )
        assert sum(count_factor(p, (U, U, D, D, U)) for p in paths) == binomial(
            2 * n - 4, n - 3
        )
        assert sum(
            count_factor(p, (U, U, D, D), terminal=False) for p in paths
        ) == binomial(2 * n - 3, n - 3)
        assert sum(
            count_factor(p, (U,) + (D,) * j + (U, U))
            for p in paths
            for j in range(2, 2 * n)
        ) == binomial(2 * n - 3, n - 4)
        assert len(marked_set(paths, (U,), min_end_height=2)) == n * catalan(n) - (
            catalan(n + 1) - catalan(n)
        )
        assert sum(
            1 for p in enumerate_lattice(2 * n - 2, 0) if p.min_height <= -2
        ) == binomial(2 * n - 2, n - 3)
        assert len(negative_final_paths(n)) == (4**n - binomial(2 * n, n)) // 2
    report(5, "nine marked-set families, n<=8")


def test_criterion_06_stratification():
    """Factor-profile histograms match the stratified counts for n <= 10."""
    for n in range(1, 11):
        hist: dict[tuple[int, int], int] = {}
        for p in enumerate_dyck(n):
            kj = ddu_udu_counts(p)
            hist[kj] = hist.get(kj, 0) + 1
        for k in range((n - 1) // 2 + 1):
            for j in range(n - 2 * k):
                assert hist.get((k, j), 0) == dyck_count_by_ddu_udu(n, k, j), (n, k, j)
            assert sum(v for (k_, _), v in hist.items() if k_ == k) == (
                dyck_count_by_ddu(n, k)
            )
        assert sum(
            dyck_count_by_ddu(n, k) for k in range((n - 1) // 2 + 1)
        ) == catalan(n)
        assert sum(hist.values()) == catalan(n)
    report(6, "(ddu, udu) strata, n<=10")


def test_criterion_07_narayana_distributions():
    """Run and peak statistics are Narayana distributed for n <= 10."""
    rpt = verify_distributions(10)
    assert rpt.passed, rpt.to_text()
    for n in (4, 7):
        hist: dict[int, int] = {}
        for w in enumerate_catalan(n):
            k = stat_value(w, StatId(StatKind.RUNS_ASC))
            hist[k] = hist.get(k, 0) + 1
        assert hist == {
            k: narayana(n, k) for k in range(1, n + 1) if narayana(n, k)
        }
    report(7, f"{rpt.cases_run} distribution checks, n<=10")


def test_criterion_08_oeis_bindings(capsys, tmp_path):
    """Emitted sequences match independently generated b-files on 10+ terms."""
    # reference values come from the enumeration side, not the closed forms
    references = {
        "A000346": (StatKind.AREA, None, 1),
        "A097613": (StatKind.SEMI, None, 1),
        "A051924": (StatKind.RUNS_DESC, None, 1),
        "A000984": (StatKind.RUNS_WEAK_ASC, None, 1),
        "A002054": (StatKind.CORNER_HU, None, 2),
        "A002694": (StatKind.CORNER_DH, None, 3),
        "A057552": (StatKind.SYM_PEAK, None, 3),
    }
    terms = 10
    for ident, (kind, ell, first_n) in references.items():
        lines = []
        for i in range(terms):
            value = brute_total(first_n + i, StatId(kind, ell))
            lines.append(f"{1 + i} {value}\n")
        bfile = tmp_path / f"b{ident[1:]}.txt"
        bfile.write_text("".join(lines))
        code = main(["oeis", ident, "--terms", str(terms), "--check", str(bfile)])
        out = capsys.readouterr().out
        assert code == 0, (ident, out)
    code = main(["oeis", "A000346", "--terms", "5"])
    out = capsys.readouterr().out
    assert [line.split()[1] for line in out.splitlines()] == [
        "1", "5", "22", "93", "386",
    ]
    code = main(["oeis", "A097613", "--terms", "3"])
    out = capsys.readouterr().out
    assert [line.split()[1] for line in out.splitlines()] == ["2", "7", "25"]
    report(8, f"7 sequences checked against {terms}-term oracle b-files")


def test_criterion_09_sampler_uniformity():
    """Chi-square uniformity over all of D_4 at significance 0.001."""
    cells = {p: 0 for p in enumerate_dyck(4)}
    assert len(cells) == 14
    rng = random.Random(20260808)
    draws = 100_000
    for _ in range(draws):
        cells[random_dyck_path(4, rng)] += 1
    counts = list(cells.values())
    assert sum(counts) == draws
    result = scipy.stats.chisquare(counts)
    assert result.pvalue > 0.001, f"chi-square p={result.pvalue:.5f}"
    # n=2: both paths within a 2% band of one half
    pair = {"UUDD": 0, "UDUD": 0}
    for _ in range(draws):
        pair[str(random_dyck_path(2, rng))] += 1
    for count in pair.values():
        assert abs(count / draws - 0.5) <= 0.02, pair
    # coverage at n=5: every path appears
    seen = set()
    for _ in range(draws):
        seen.add(random_dyck_path(5, rng))
    assert len(seen) == catalan(5) == 42
    report(9, f"chi-square p={result.pvalue:.3f} over 14 cells, full coverage at n=5")
