"""Exhaustive verification suites over small sizes.

Each suite enumerates an entire domain, recomputes both sides of a claim
(map image vs. characterization, enumerated total vs. closed form,
histogram vs. distribution), and reports mismatches. The command line
front end prints these reports; the test suite asserts they are clean.
"""

import itertools
import time
from collections.abc import Iterable, Sequence
from dataclasses import dataclass, field

from . import bijections as bij
from . import formulas
from .paths import (
    D,
    U,
    MarkedPath,
    Path,
    count_factor,
    ddu_udu_counts,
    enumerate_dyck,
    enumerate_lattice,
    factor_occurrences,
    is_dyck,
    reverse_complement,
    units,
)
from .words import (
    StatId,
    StatKind,
    asc_des_lev,
    brute_total,
    enumerate_catalan,
    path_to_word,
    stat_value,
    word_to_path,
)

SUITE_CAPS = {
    "bijections": 8,
    "transport": 9,
    "distributions": 10,
    "identities": 300,
}


@dataclass
class VerifyReport:
    suite: str
    cases_run: int = 0
    failures: list[tuple[str, object, object]] = field(default_factory=list)
    elapsed: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, description: str, expected, got) -> None:
        self.cases_run += 1
        if expected != got:
            self.failures.append((description, expected, got))

    def to_text(self) -> str:
        lines = [
            f"suite {self.suite}: {self.cases_run} checks, "
            f"{len(self.failures)} failures, {self.elapsed:.2f}s"
        ]
        for desc, expected, got in self.failures[:50]:
            lines.append(f"  FAIL {desc}: expected {expected}, got {got}")
        if len(self.failures) > 50:
            lines.append(f"  ... and {len(self.failures) - 50} more")
        return "\n".join(lines)


def marked_set(
    paths: Iterable[Path],
    pattern: Sequence[int],
    *,
    min_end_height: int | None = None,
    terminal: bool | None = None,
) -> list[MarkedPath]:
    """All marked occurrences of a factor across a family of paths."""
    pattern = tuple(pattern)
    out = []
    for p in paths:
        for i in factor_occurrences(
            p, pattern, min_end_height=min_end_height, terminal=terminal
        ):
            out.append(MarkedPath(p, i, len(pattern)))
    return out


def negative_final_paths(n: int) -> list[Path]:
    """All length-2n up/down paths with negative final height."""
    out = []
    for steps in itertools.product((U, D), repeat=2 * n):
        if sum(steps) < 0:
            out.append(Path(steps))
    return out


def _check_bijection(
    rpt: VerifyReport,
    label: str,
    domain: Sequence,
    images: Sequence[Path],
    expected_image: Iterable[Path],
    round_trip_errors: int,
) -> None:
    rpt.check(f"{label}: images distinct", len(images), len(set(images)))
    rpt.check(f"{label}: image set", set(expected_image), set(images))
    rpt.check(f"{label}: round trips", 0, round_trip_errors)
    rpt.check(f"{label}: domain size", len(domain), len(images))


def verify_bijections(n_max: int = 8) -> VerifyReport:
    rpt = VerifyReport("bijections")
    start = time.perf_counter()
    dyck = {n: list(enumerate_dyck(n)) for n in range(n_max + 1)}
    C = formulas.catalan
    B = formulas.binomial

    for n in range(n_max + 1):
        # reverse-complement is an involution fixing the Dyck class
        rc_bad = 0
        rc_images = set()
        for p in dyck[n]:
            q = reverse_complement(p)
            rc_images.add(q)
            if reverse_complement(q) != p or not is_dyck(q):
                rc_bad += 1
        rpt.check(f"reverse-complement involution on Dyck n={n}", 0, rc_bad)
        rpt.check(f"reverse-complement image n={n}", set(dyck[n]), rc_images)

    for n in range(n_max + 1):
        # word/path conversion round trips both ways
        errors = 0
        images = set()
        for w in enumerate_catalan(n):
            p = word_to_path(w)
            images.add(p)
            if path_to_word(p) != w:
                errors += 1
        for p in dyck[n]:
            if word_to_path(path_to_word(p)) != p:
                errors += 1
        rpt.check(f"word/path round trips n={n}", 0, errors)
        rpt.check(f"word/path image n={n}", set(dyck[n]), images)

    for n in range(1, n_max + 1):
        # balanced paths staying above level -2 match Dyck paths one size up
        domain = [
            p for p in enumerate_lattice(2 * n - 2, 0) if p.min_height >= -1
        ]
        images = []
        errors = 0
        for p in domain:
            q = bij.low_path_to_dyck(p)
            images.append(q)
            if bij.dyck_to_low_path(q) != p:
                errors += 1
        _check_bijection(rpt, f"low-path map n={n}", domain, images, dyck[n], errors)

    for m in range(1, n_max):
        # marking a unit corresponds to multi-unit paths one size up
        domain = [
            (p, idx) for p in dyck[m] for idx in range(1, len(units(p)) + 1)
        ]
        images = []
        errors = 0
        for p, idx in domain:
            q = bij.lift_marked_unit(p, idx)
            images.append(q)
            if bij.drop_marked_unit(q) != (p, idx):
                errors += 1
        expected = [q for q in dyck[m + 1] if len(units(q)) >= 2]
        _check_bijection(
            rpt, f"marked-unit lift m={m}", domain, images, expected, errors
        )
        rpt.check(
            f"marked-unit image count m={m}", C(m + 1) - C(m), len(expected)
        )

    for n in range(4, n_max + 1):
        # inserting the valley factor after high up steps hits every occurrence
        for ell in range(1, n - 2):
            m = n - ell - 1
            domain = marked_set(dyck[m], (U,), min_end_height=2)
            images = []
            errors = 0
            for mp in domain:
                out = bij.sym_valley_insert(mp, ell)
                images.append(out)
                back, ell_back = bij.sym_valley_remove(out)
                if back != mp or ell_back != ell:
                    errors += 1
            expected = marked_set(dyck[n], bij.sym_valley_pattern(ell))
            rpt.check(
                f"valley insert images distinct n={n} ell={ell}",
                len(images),
                len(set(images)),
            )
            rpt.check(
                f"valley insert image set n={n} ell={ell}",
                set(expected),
                set(images),
            )
            rpt.check(f"valley insert round trips n={n} ell={ell}", 0, errors)

    split_reverse_cases = [
        # label, pattern, filters, survivor, image endpoint, image filter
        ("uu", (U, U), {}, D, lambda n: (2 * n - 1, 1), lambda q: q.min_height < 0),
        ("udu", (U, D, U), {}, D, lambda n: (2 * n - 2, 0), lambda q: q.min_height < 0),
        ("ddu", (D, D, U), {}, D, lambda n: (2 * n - 2, -2), lambda q: q.min_height <= -3),
        ("uuddu", (U, U, D, D, U), {}, U, lambda n: (2 * n - 4, 2), lambda q: True),
        ("high-up", (U,), {"min_end_height": 2}, U, lambda n: (2 * n - 4, 2), lambda q: q.min_height < 0),
        ("high-down", (D,), {"min_end_height": 2}, D, lambda n: (2 * n - 4, -2), lambda q: q.min_height <= -4),
    ]
    for n in range(2, n_max + 1):
        for label, pattern, filters, survivor, endpoint, keep in split_reverse_cases:
            if label in ("high-up", "high-down"):
                base = dyck[n - 2]
            else:
                base = dyck[n]
            domain = marked_set(base, pattern, **filters)
            a, b = endpoint(n)
            if a < abs(b):
                rpt.check(f"split-reverse {label} n={n}: empty domain", 0, len(domain))
                continue
            images = []
            errors = 0
            for mp in domain:
                q = bij.split_reverse(mp, survivor)
                images.append(q)
                if bij.split_reverse_inverse(q, pattern, survivor) != mp:
                    errors += 1
            expected = [q for q in enumerate_lattice(a, b) if keep(q)]
            _check_bijection(
                rpt, f"split-reverse {label} n={n}", domain, images, expected, errors
            )

    for n in range(1, n_max + 1):
        # run-length vectors of UDU-free paths and the slot-fill covering
        by_k: dict[int, list[Path]] = {}
        for p in dyck[n]:
            k, j = ddu_udu_counts(p)
            if j == 0:
                by_k.setdefault(k, []).append(p)
        errors = 0
        for k, paths in by_k.items():
            for p in paths:
                pv = bij.peak_decompose(p)
                if bij.peak_rebuild(pv) != p or pv.k != k:
                    errors += 1
        rpt.check(f"peak vector round trips n={n}", 0, errors)
        for k in range((n - 1) // 2 + 1):
            hits: dict[Path, int] = {}
            for ys in _weak_compositions(n - k - 1, k + 1):
                for zs in _positive_compositions(n - k, k + 1):
                    pv = bij.peak_vector_from_slots(list(zip(ys, zs)))
                    hits_path = bij.peak_rebuild(pv)
                    hits[hits_path] = hits.get(hits_path, 0) + 1
            expected_paths = set(by_k.get(k, []))
            rpt.check(
                f"slot covering image n={n} k={k}", expected_paths, set(hits)
            )
            rpt.check(
                f"slot covering multiplicity n={n} k={k}",
                {p: k + 1 for p in expected_paths},
                hits,
            )

    for n in range(1, n_max + 1):
        # stripping UD factors inverts inserting them, and vice versa
        errors = 0
        for p in dyck[n]:
            pre, pos = bij.remove_ud(p)
            k_pre, j_pre = ddu_udu_counts(pre)
            k_p, j_p = ddu_udu_counts(p)
            if (
                j_pre != 0
                or k_pre != k_p
                or len(pos) != j_p
                or bij.insert_ud(pre, pos) != p
            ):
                errors += 1
        rpt.check(f"remove/insert UD round trips n={n}", 0, errors)
        forward_errors = 0
        seen: set[Path] = set()
        for j in range(n):
            m = n - j
            for pre in dyck[m]:
                if ddu_udu_counts(pre)[1] != 0:
                    continue
                for pos in itertools.combinations_with_replacement(range(m), j):
                    q = bij.insert_ud(pre, pos)
                    seen.add(q)
                    if bij.remove_ud(q) != (pre, tuple(sorted(pos))):
                        forward_errors += 1
        rpt.check(f"insert/remove UD round trips n={n}", 0, forward_errors)
        rpt.check(f"insert UD covers Dyck n={n}", set(dyck[n]), seen)

    for n in range(1, min(n_max, 8) + 1):
        # area marks against negative-ending paths of the same length
        domain = [
            bij.AreaMark(p, idx, j)
            for p in dyck[n]
            for idx, s in enumerate(p.steps)
            if s == U
            for j in range(p.height_profile[idx])
        ]
        images = []
        errors = 0
        for am in domain:
            q = bij.area_mark_encode(am)
            images.append(q)
            if bij.area_mark_decode(q) != am:
                errors += 1
        expected = negative_final_paths(n)
        _check_bijection(rpt, f"area map n={n}", domain, images, expected, errors)
        phi_total = sum(
            h for p in dyck[n] for s, h in zip(p.steps, p.height_profile) if s == U
        )
        rpt.check(
            f"up-step height total n={n}",
            (4**n - B(2 * n, n)) // 2,
            phi_total,
        )

    for a, b, level in [(6, 0, -1), (6, 0, -2), (7, 1, -1), (6, -2, -3), (8, 2, -1)]:
        # reflection principle: touching paths match the reflected endpoint class
        touching = []
        for p in enumerate_lattice(a, b):
            heights = (0,) + p.height_profile
            if level in heights:
                touching.append(p)
        errors = 0
        for p in touching:
            q = bij.reflect_after_touch(p, level)
            if (
                q.final_height != 2 * level - b
                or bij.reflect_after_touch(q, level) != p
            ):
                errors += 1
        rpt.check(f"reflection involution a={a} b={b} level={level}", 0, errors)
        rpt.check(
            f"reflection count a={a} b={b} level={level}",
            B(a, (a - (2 * level - b)) // 2),
            len(touching),
        )

    for n in range(2, n_max + 1):
        # last-passage classification partitions the endpoint class
        blocks: dict[tuple[str, int | None], int] = {}
        for lam in enumerate_lattice(2 * n - 1, 1):
            kind, i = bij.last_passage_class(lam)
            blocks[(kind, i)] = blocks.get((kind, i), 0) + 1
        expected_blocks: dict[tuple[str, int | None], int] = {("exceptional", None): 1}
        for i in range(1, n):
            expected_blocks[("through-two", i)] = B(2 * i, i - 1)
            expected_blocks[("through-minus-one", i)] = B(2 * i - 1, i)
        expected_blocks = {k: v for k, v in expected_blocks.items() if v}
        rpt.check(f"last-passage blocks n={n}", expected_blocks, blocks)

    for length in range(1, 6):
        # cycle lemma: exactly one rotation has all-positive partial sums
        for vals in itertools.product(range(-2, 3), repeat=length):
            if sum(vals) != 1:
                continue
            valid = []
            for r in range(1, length + 1):
                rot = vals[r - 1 :] + vals[: r - 1]
                s = 0
                ok = True
                for v in rot:
                    s += v
                    if s <= 0:
                        ok = False
                        break
                if ok:
                    valid.append(r)
            if valid != [bij.raney_shift(vals)]:
                rpt.check(f"raney uniqueness {vals}", [bij.raney_shift(vals)], valid)
        rpt.check(f"raney uniqueness scanned length {length}", True, True)

    for n in range(1, n_max + 1):
        # marked-set cardinalities against their closed forms
        paths = dyck[n]
        counts = {
            "uu": sum(count_factor(p, (U, U)) for p in paths),
            "ddu": sum(count_factor(p, (D, D, U)) for p in paths),
            "udu": sum(count_factor(p, (U, D, U)) for p in paths),
            "uuddu": sum(count_factor(p, (U, U, D, D, U)) for p in paths),
            "uudd non-terminal": sum(
                count_factor(p, (U, U, D, D), terminal=False) for p in paths
            ),
            "deep-valley": sum(
                count_factor(p, (U,) + (D,) * j + (U, U))
                for p in paths
                for j in range(2, 2 * n)
            ),
        }
        expected_counts = {
            "uu": B(2 * n - 1, n - 2),
            "ddu": B(2 * n - 2, n - 3),
            "udu": B(2 * n - 2, n - 2),
            "uuddu": B(2 * n - 4, n - 3),
            "uudd non-terminal": B(2 * n - 3, n - 3),
            "deep-valley": B(2 * n - 3, n - 4),
        }
        rpt.check(f"marked factor counts n={n}", expected_counts, counts)
        high_ups = len(marked_set(paths, (U,), min_end_height=2))
        rpt.check(
            f"high up marks n={n}", n * C(n) - (C(n + 1) - C(n)), high_ups
        )
        deep = sum(
            1 for p in enumerate_lattice(2 * n - 2, 0) if p.min_height <= -2
        )
        rpt.check(f"deep balanced paths n={n}", B(2 * n - 2, n - 3), deep)
        quadrant = sum(
            1 for p in enumerate_lattice(2 * n - 1, 1) if p.min_height >= 0
        )
        rpt.check(f"first-quadrant endpoint-1 paths n={n}", C(n), quadrant)
    for n in range(1, min(n_max, 8) + 1):
        rpt.check(
            f"negative-final path count n={n}",
            (4**n - B(2 * n, n)) // 2,
            len(negative_final_paths(n)),
        )

    rpt.elapsed = time.perf_counter() - start
    return rpt


def _weak_compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _weak_compositions(total - first, parts - 1):
            yield (first,) + rest


def _positive_compositions(total: int, parts: int):
    for comp in _weak_compositions(total - parts, parts):
        yield tuple(c + 1 for c in comp)


def verify_transport(n_max: int = 9) -> VerifyReport:
    """Word statistics against their factor counterparts on the path side."""
    rpt = VerifyReport("transport")
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        mismatches: dict[str, int] = {}

        def tally(name: str, expected, got) -> None:
            if expected != got:
                mismatches[name] = mismatches.get(name, 0) + 1

        for w in enumerate_catalan(n):
            p = word_to_path(w)
            asc, des, lev = asc_des_lev(w)
            tally("asc+des+lev", len(w) - 1, asc + des + lev)
            for ell in range(1, n + 1):
                tally(
                    f"sym-valley ell={ell}",
                    stat_value(w, StatId(StatKind.SYM_VALLEY, ell)),
                    count_factor(p, bij.sym_valley_pattern(ell)),
                )
            tally(
                "ell-valley 1",
                stat_value(w, StatId(StatKind.ELL_VALLEY, 1)),
                sum(
                    count_factor(p, (U,) + (D,) * j + (U, U))
                    for j in range(2, 2 * n)
                ),
            )
            tally(
                "sym-peak 1",
                stat_value(w, StatId(StatKind.SYM_PEAK, 1)),
                count_factor(p, (U, U, D, D, U)),
            )
            tally(
                "ell-peak 1",
                stat_value(w, StatId(StatKind.ELL_PEAK, 1)),
                count_factor(p, (U, U, D, D), terminal=False),
            )
            tally("descents as DDU", des, count_factor(p, (D, D, U)))
            tally(
                "runs of descents",
                stat_value(w, StatId(StatKind.RUNS_DESC)),
                1 + count_factor(p, (U, U)) + count_factor(p, (U, D, U)),
            )
            tally(
                "runs of weak ascents",
                stat_value(w, StatId(StatKind.RUNS_WEAK_ASC)),
                1 + des,
            )
            tally(
                "runs of ascents",
                stat_value(w, StatId(StatKind.RUNS_ASC)),
                1 + des + lev,
            )
            tally(
                "runs of weak descents",
                stat_value(w, StatId(StatKind.RUNS_WEAK_DESC)),
                1 + asc,
            )
            tally(
                "semi-perimeter",
                stat_value(w, StatId(StatKind.SEMI)),
                n + 1 + asc,
            )
            tally("hu corners", stat_value(w, StatId(StatKind.CORNER_HU)), asc)
            tally("dh corners", stat_value(w, StatId(StatKind.CORNER_DH)), des)
            tally(
                "area as up-step heights",
                stat_value(w, StatId(StatKind.AREA)),
                sum(h for s, h in zip(p.steps, p.height_profile) if s == U),
            )
        rpt.check(f"transport n={n}", {}, mismatches)
    for n in range(5, n_max + 1):
        # adding copies of the middle letter shifts ell without changing counts
        for ell in range(2, n - 3):
            if n - ell + 1 < 4:
                continue
            for kind in (StatKind.ELL_VALLEY, StatKind.ELL_PEAK, StatKind.SYM_PEAK, StatKind.SYM_VALLEY):
                rpt.check(
                    f"ell shift {kind.value} n={n} ell={ell}",
                    brute_total(n - ell + 1, StatId(kind, 1)),
                    brute_total(n, StatId(kind, ell)),
                )
    rpt.elapsed = time.perf_counter() - start
    return rpt


def verify_distributions(n_max: int = 10) -> VerifyReport:
    rpt = VerifyReport("distributions")
    start = time.perf_counter()
    for n in range(1, n_max + 1):
        runs_asc: dict[int, int] = {}
        runs_weak_desc: dict[int, int] = {}
        for w in enumerate_catalan(n):
            k = stat_value(w, StatId(StatKind.RUNS_ASC))
            runs_asc[k] = runs_asc.get(k, 0) + 1
            k = stat_value(w, StatId(StatKind.RUNS_WEAK_DESC))
            runs_weak_desc[k] = runs_weak_desc.get(k, 0) + 1
        narayana_row = {
            k: formulas.narayana(n, k)
            for k in range(1, n + 1)
            if formulas.narayana(n, k)
        }
        rpt.check(f"runs of ascents histogram n={n}", narayana_row, runs_asc)
        rpt.check(
            f"runs of weak descents histogram n={n}", narayana_row, runs_weak_desc
        )
        peaks: dict[int, int] = {}
        for p in enumerate_dyck(n):
            k = count_factor(p, (U, D))
            peaks[k] = peaks.get(k, 0) + 1
        rpt.check(f"peak histogram n={n}", narayana_row, peaks)
        rpt.check(
            f"narayana row sum n={n}",
            formulas.catalan(n),
            sum(narayana_row.values()),
        )
        rpt.check(
            f"narayana symmetry n={n}",
            [formulas.narayana(n, k) for k in range(1, n + 1)],
            [formulas.narayana(n, n + 1 - k) for k in range(1, n + 1)],
        )
    rpt.elapsed = time.perf_counter() - start
    return rpt


def verify_identities(n_max: int = 300) -> VerifyReport:
    rpt = VerifyReport("identities")
    start = time.perf_counter()
    for ident in formulas.IdentityId:
        floor = formulas.IDENTITY_FLOOR[ident]
        for n in range(floor, n_max + 1):
            if ident is formulas.IdentityId.BINOMIAL_PRODUCT_SUM:
                for k in range((n - 1) // 2 + 1):
                    res = formulas.identity_check(ident, n, k)
                    if not res.holds:
                        rpt.failures.append(
                            (f"{ident.value} n={n} k={k}", res.lhs, res.rhs)
                        )
                rpt.cases_run += 1
            else:
                res = formulas.identity_check(ident, n)
                rpt.check(f"{ident.value} n={n}", res.lhs, res.rhs)
    rpt.elapsed = time.perf_counter() - start
    return rpt


def run_suite(name: str, n_max: int | None = None) -> list[VerifyReport]:
    """Run one named suite, or all of them.

    Without ``n_max`` each suite runs at its cap. With ``n_max``, a single
    suite must stay at or below its cap; for ``all`` the bound is clipped to
    each suite's cap.
    """
    suites = {
        "bijections": verify_bijections,
        "transport": verify_transport,
        "distributions": verify_distributions,
        "identities": verify_identities,
    }
    if name == "all":
        return [
            fn(SUITE_CAPS[key] if n_max is None else min(n_max, SUITE_CAPS[key]))
            for key, fn in suites.items()
        ]
    if name not in suites:
        raise ValueError(f"unknown suite {name!r}")
    cap = SUITE_CAPS[name]
    limit = cap if n_max is None else n_max
    if limit > cap:
        raise ValueError(f"suite {name} caps at n_max={cap}, got {limit}")
    return [suites[name](limit)]
