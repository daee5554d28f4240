"""Catalan words and their statistics.

A Catalan word starts at 1 and never rises by more than one letter at a
time. The module enumerates words, converts between words and Dyck paths
(i-th up step ends at height of the i-th letter), evaluates every tracked
statistic on a single word, and computes exhaustive totals over all words
of a given length in one enumeration pass.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from enum import Enum
from functools import lru_cache

from .limits import check_ceiling
from .paths import D, U, Path, is_dyck


@dataclass(frozen=True)
class Word:
    """Immutable Catalan word stored as a tuple of positive letters."""

    letters: tuple[int, ...]

    def __post_init__(self):
        prev = 0
        for i, c in enumerate(self.letters):
            if c < 1:
                raise ValueError(f"letters must be positive, got {c} at {i}")
            if c > prev + 1:
                raise ValueError(
                    f"letter {c} at position {i} exceeds previous letter {prev} + 1"
                )
            prev = c

    @classmethod
    def from_string(cls, text: str) -> "Word":
        if not text:
            return cls(())
        if "." in text:
            return cls(tuple(int(part) for part in text.split(".")))
        return cls(tuple(int(ch) for ch in text))

    def __str__(self) -> str:
        if all(c <= 9 for c in self.letters):
            return "".join(str(c) for c in self.letters)
        return ".".join(str(c) for c in self.letters)

    def __repr__(self) -> str:
        return f"Word({str(self)!r})"

    def __len__(self) -> int:
        return len(self.letters)


class StatKind(Enum):
    SYM_VALLEY = "sym-valley"
    ELL_VALLEY = "ell-valley"
    SYM_PEAK = "sym-peak"
    ELL_PEAK = "ell-peak"
    RUNS_DESC = "runs-desc"
    RUNS_WEAK_ASC = "runs-weak-asc"
    RUNS_ASC = "runs-asc"
    RUNS_WEAK_DESC = "runs-weak-desc"
    CORNER_HU = "corner-hu"
    CORNER_DH = "corner-dh"
    SEMI = "semi"
    AREA = "area"


PATTERN_KINDS = frozenset(
    {StatKind.SYM_VALLEY, StatKind.ELL_VALLEY, StatKind.SYM_PEAK, StatKind.ELL_PEAK}
)


@dataclass(frozen=True)
class StatId:
    """A statistic selector: a kind plus, for pattern kinds, an optional ell.

    For the four pattern statistics an absent ell means the total over all
    ell >= 1. The other kinds take no ell.
    """

    kind: StatKind
    ell: int | None = None

    def __post_init__(self):
        if self.ell is not None:
            if self.kind not in PATTERN_KINDS:
                raise ValueError(f"{self.kind.value} does not take an ell")
            if self.ell < 1:
                raise ValueError(f"ell must be positive, got {self.ell}")

    @classmethod
    def parse(cls, text: str) -> "StatId":
        name, _, suffix = text.partition(":")
        try:
            kind = StatKind(name.strip())
        except ValueError:
            valid = ", ".join(k.value for k in StatKind)
            raise ValueError(f"unknown statistic {name!r}; expected one of {valid}")
        return cls(kind, int(suffix) if suffix else None)

    def __str__(self) -> str:
        if self.ell is None:
            return self.kind.value
        return f"{self.kind.value}:{self.ell}"


class BarStep(Enum):
    UP = "up"
    DOWN = "down"
    ACROSS = "across"


def enumerate_catalan(
    n: int,
    *,
    max_n: int | None = None,
    prefix: Sequence[int] = (),
) -> Iterator[Word]:
    """Yield all Catalan words of length n in numeric lexicographic order.

    ``prefix`` restricts the stream to words extending the given letters.
    """
    check_ceiling(n, max_n)
    prefix = tuple(prefix)
    Word(prefix)
    if len(prefix) > n:
        raise ValueError("prefix longer than the requested words")

    seq = list(prefix)

    def rec(last: int) -> Iterator[Word]:
        if len(seq) == n:
            yield Word(tuple(seq))
            return
        for c in range(1, last + 2):
            seq.append(c)
            yield from rec(c)
            seq.pop()

    return rec(seq[-1] if seq else 0)


def word_to_path(w: Word) -> Path:
    """The Dyck path whose i-th up step ends at height of the i-th letter."""
    steps: list[int] = []
    prev = 0
    for letter in w.letters:
        steps.extend([D] * (prev - letter + 1))
        steps.append(U)
        prev = letter
    steps.extend([D] * prev)
    return Path(tuple(steps))


def path_to_word(p: Path) -> Word:
    """Inverse of word_to_path: read off the heights of the up steps."""
    if not is_dyck(p):
        raise ValueError(f"expected a Dyck path, got {p!r}")
    return Word(tuple(h for s, h in zip(p.steps, p.height_profile) if s == U))


def asc_des_lev(w: Word) -> tuple[int, int, int]:
    """Counts of ascents, descents, and levels between adjacent letters."""
    asc = des = lev = 0
    for a, b in zip(w.letters, w.letters[1:]):
        if b > a:
            asc += 1
        elif b < a:
            des += 1
        else:
            lev += 1
    return asc, des, lev


def bargraph_path(w: Word) -> tuple[BarStep, ...]:
    """Boundary walk of the column diagram of ``w``, from (0,0) back to the axis.

    Each column contributes a vertical adjustment to its height followed by
    one across step; a final descent returns to height zero. No across step
    ever occurs at height zero because letters are positive.
    """
    if not w.letters:
        raise ValueError("the empty word has no column diagram")
    walk: list[BarStep] = []
    h = 0
    for c in w.letters:
        while h < c:
            walk.append(BarStep.UP)
            h += 1
        while h > c:
            walk.append(BarStep.DOWN)
            h -= 1
        walk.append(BarStep.ACROSS)
    walk.extend([BarStep.DOWN] * h)
    return tuple(walk)


def _walk_corners(walk: Sequence[BarStep]) -> tuple[int, int]:
    hu = dh = 0
    for a, b in zip(walk, walk[1:]):
        if a is BarStep.ACROSS and b is BarStep.UP:
            hu += 1
        elif a is BarStep.DOWN and b is BarStep.ACROSS:
            dh += 1
    return hu, dh


def _scan_patterns(w: Word, kind: StatKind, ell: int | None) -> int:
    """Count pattern occurrences by direct inspection of every start index.

    For each start there is at most one matching ell because the flanking
    letters terminate the middle run.
    """
    letters = w.letters
    n = len(letters)
    total = 0
    for i in range(n - 2):
        a = letters[i]
        mid = letters[i + 1]
        if kind is StatKind.SYM_VALLEY:
            if a <= 1 or mid != a - 1:
                continue
            want_end = a
        elif kind is StatKind.ELL_VALLEY:
            if mid >= a:
                continue
            want_end = mid + 1
        elif kind is StatKind.SYM_PEAK:
            if mid != a + 1:
                continue
            want_end = a
        else:  # ELL_PEAK
            if mid != a + 1:
                continue
            want_end = None  # any end letter <= a
        run = 1
        j = i + 2
        while j < n and letters[j] == mid:
            run += 1
            j += 1
        if j >= n:
            continue
        end = letters[j]
        if want_end is None:
            if end > a:
                continue
        elif end != want_end:
            continue
        if ell is None or ell == run:
            total += 1
    return total


def _count_runs(w: Word, kind: StatKind) -> int:
    """Number of maximal runs of the given comparison sense."""
    n = len(w.letters)
    if n == 0:
        return 0
    breaks = 0
    for a, b in zip(w.letters, w.letters[1:]):
        if kind is StatKind.RUNS_DESC:
            boundary = not b < a
        elif kind is StatKind.RUNS_WEAK_ASC:
            boundary = not b >= a
        elif kind is StatKind.RUNS_ASC:
            boundary = not b > a
        else:  # RUNS_WEAK_DESC
            boundary = not b <= a
        if boundary:
            breaks += 1
    return breaks + 1


def stat_value(w: Word, s: StatId) -> int:
    """Value of statistic ``s`` on a single word."""
    kind = s.kind
    if kind in PATTERN_KINDS:
        return _scan_patterns(w, kind, s.ell)
    if kind in (
        StatKind.RUNS_DESC,
        StatKind.RUNS_WEAK_ASC,
        StatKind.RUNS_ASC,
        StatKind.RUNS_WEAK_DESC,
    ):
        return _count_runs(w, kind)
    if kind is StatKind.CORNER_HU:
        if not w.letters:
            return 0
        return _walk_corners(bargraph_path(w))[0]
    if kind is StatKind.CORNER_DH:
        if not w.letters:
            return 0
        return _walk_corners(bargraph_path(w))[1]
    if kind is StatKind.SEMI:
        walk = bargraph_path(w)
        return len(w.letters) + sum(1 for step in walk if step is BarStep.UP)
    if kind is StatKind.AREA:
        return sum(w.letters)
    raise ValueError(f"unknown statistic {s!r}")


@dataclass
class SweepTotals:
    """Totals of every tracked statistic over all words of one length."""

    n: int
    words: int
    ascents: int
    descents: int
    area: int
    sym_valley: dict[int, int]
    ell_valley: dict[int, int]
    sym_peak: dict[int, int]
    ell_peak: dict[int, int]

    @property
    def levels(self) -> int:
        return (self.n - 1) * self.words - self.ascents - self.descents

    def __add__(self, other: "SweepTotals") -> "SweepTotals":
        if self.n != other.n:
            raise ValueError("cannot merge totals for different lengths")

        def merged(a: dict[int, int], b: dict[int, int]) -> dict[int, int]:
            out = dict(a)
            for key, v in b.items():
                out[key] = out.get(key, 0) + v
            return out

        return SweepTotals(
            self.n,
            self.words + other.words,
            self.ascents + other.ascents,
            self.descents + other.descents,
            self.area + other.area,
            merged(self.sym_valley, other.sym_valley),
            merged(self.ell_valley, other.ell_valley),
            merged(self.sym_peak, other.sym_peak),
            merged(self.ell_peak, other.ell_peak),
        )

    def total(self, s: StatId) -> int:
        kind = s.kind
        if kind in PATTERN_KINDS:
            table = {
                StatKind.SYM_VALLEY: self.sym_valley,
                StatKind.ELL_VALLEY: self.ell_valley,
                StatKind.SYM_PEAK: self.sym_peak,
                StatKind.ELL_PEAK: self.ell_peak,
            }[kind]
            if s.ell is None:
                return sum(table.values())
            return table.get(s.ell, 0)
        if kind is StatKind.RUNS_DESC:
            return self.words + self.ascents + self.levels
        if kind is StatKind.RUNS_WEAK_ASC:
            return self.words + self.descents
        if kind is StatKind.RUNS_ASC:
            return self.words + self.descents + self.levels
        if kind is StatKind.RUNS_WEAK_DESC:
            return self.words + self.ascents
        if kind is StatKind.CORNER_HU:
            return self.ascents
        if kind is StatKind.CORNER_DH:
            return self.descents
        if kind is StatKind.SEMI:
            return (self.n + 1) * self.words + self.ascents
        if kind is StatKind.AREA:
            return self.area
        raise ValueError(f"unknown statistic {s!r}")


def _bump(table: dict[int, int], key: int) -> None:
    table[key] = table.get(key, 0) + 1


def _unbump(table: dict[int, int], key: int) -> None:
    v = table[key] - 1
    if v:
        table[key] = v
    else:
        del table[key]


def sweep_totals(
    n: int,
    *,
    prefix: Sequence[int] = (),
    max_n: int | None = None,
) -> SweepTotals:
    """Totals of all statistics over words of length n by one exhaustive pass.

    The enumeration walks the prefix tree of Catalan words depth first,
    maintaining incremental pattern, ascent, descent, and area counters, so
    no word list is ever materialized. A nonempty ``prefix`` restricts the
    pass to words extending it; shard totals over a full prefix level add up
    to the unrestricted totals.
    """
    check_ceiling(n, max_n)
    if n < 1:
        raise ValueError(f"sweep_totals is defined for n >= 1, got {n}")

    seed = tuple(prefix) if prefix else (1,)
    Word(seed)
    if len(seed) > n:
        raise ValueError("prefix longer than the requested words")

    words = 0
    asc_t = des_t = area_t = 0
    sv_t: dict[int, int] = {}
    ev_t: dict[int, int] = {}
    sp_t: dict[int, int] = {}
    ep_t: dict[int, int] = {}
    # per-prefix occurrence counters, keyed by run length ell
    sv_c: dict[int, int] = {}
    ev_c: dict[int, int] = {}
    sp_c: dict[int, int] = {}
    ep_c: dict[int, int] = {}

    # seed the incremental state by scanning the starting prefix
    x = 0  # letter before the current equal run, 0 when absent
    b = seed[0]  # current run letter
    L = 1  # current run length
    asc = des = 0
    area = seed[0]
    for c in seed[1:]:
        if x == c and b == c - 1:
            _bump(sv_c, L)
        if x > b and c == b + 1:
            _bump(ev_c, L)
        if x == c and b == c + 1:
            _bump(sp_c, L)
        if x >= 1 and b == x + 1 and c <= x:
            _bump(ep_c, L)
        if c == b:
            L += 1
        else:
            if c > b:
                asc += 1
            else:
                des += 1
            x, b, L = b, c, 1
        area += c

    if len(seed) == n:
        return SweepTotals(
            n, 1, asc, des, area, dict(sv_c), dict(ev_c), dict(sp_c), dict(ep_c)
        )

    def rec(depth: int, x: int, b: int, L: int, asc: int, des: int, area: int) -> None:
        nonlocal words, asc_t, des_t, area_t
        if depth == n - 1:
            kids = b + 1
            # counts carried by the current prefix apply to every child word
            if sv_c:
                for key, v in sv_c.items():
                    sv_t[key] = sv_t.get(key, 0) + v * kids
            if ev_c:
                for key, v in ev_c.items():
                    ev_t[key] = ev_t.get(key, 0) + v * kids
            if sp_c:
                for key, v in sp_c.items():
                    sp_t[key] = sp_t.get(key, 0) + v * kids
            if ep_c:
                for key, v in ep_c.items():
                    ep_t[key] = ep_t.get(key, 0) + v * kids
            for c in range(1, kids + 1):
                words += 1
                area_t += area + c
                asc_t += asc + (1 if c > b else 0)
                des_t += des + (1 if c < b else 0)
                # occurrences completed by the final letter
                if x == c and b == c - 1:
                    sv_t[L] = sv_t.get(L, 0) + 1
                if x > b and c == b + 1:
                    ev_t[L] = ev_t.get(L, 0) + 1
                if x == c and b == c + 1:
                    sp_t[L] = sp_t.get(L, 0) + 1
                if x >= 1 and b == x + 1 and c <= x:
                    ep_t[L] = ep_t.get(L, 0) + 1
            return
        for c in range(1, b + 2):
            sv = x == c and b == c - 1
            ev = x > b and c == b + 1
            sp = x == c and b == c + 1
            ep = x >= 1 and b == x + 1 and c <= x
            if sv:
                _bump(sv_c, L)
            if ev:
                _bump(ev_c, L)
            if sp:
                _bump(sp_c, L)
            if ep:
                _bump(ep_c, L)
            if c == b:
                rec(depth + 1, x, b, L + 1, asc, des, area + c)
            elif c > b:
                rec(depth + 1, b, c, 1, asc + 1, des, area + c)
            else:
                rec(depth + 1, b, c, 1, asc, des + 1, area + c)
            if sv:
                _unbump(sv_c, L)
            if ev:
                _unbump(ev_c, L)
            if sp:
                _unbump(sp_c, L)
            if ep:
                _unbump(ep_c, L)

    rec(len(seed), x, b, L, asc, des, area)
    return SweepTotals(n, words, asc_t, des_t, area_t, sv_t, ev_t, sp_t, ep_t)


@lru_cache(maxsize=64)
def _sweep_cached(n: int, max_n: int | None) -> SweepTotals:
    return sweep_totals(n, max_n=max_n)


def brute_total(n: int, s: StatId, *, max_n: int | None = None) -> int:
    """Total of statistic ``s`` over all words of length n, by full enumeration.

    Values agree with summing stat_value over enumerate_catalan(n); the pass
    is shared across statistics and cached per length.
    """
    check_ceiling(n, max_n)
    if n == 0:
        return sum(stat_value(w, s) for w in enumerate_catalan(0, max_n=max_n))
    return _sweep_cached(n, max_n).total(s)
