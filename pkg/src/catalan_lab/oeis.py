"""OEIS b-file emission and checking for the statistic total sequences.

A b-file is one "index value" pair per line. Each built-in binding records
the sequence id, the statistic whose totals it lists, the index at which
the emitted sequence starts, and the word length producing the first term.
Checking compares terms at equal indices over the shared index range;
there is no realignment by value searching.
"""

from collections.abc import Iterable
from dataclasses import dataclass

from .formulas import closed_total
from .words import StatId, StatKind


@dataclass(frozen=True)
class OeisBinding:
    id: str | None
    stat: StatId
    offset: int = 1
    first_n: int = 1

    def value(self, index: int) -> int:
        return closed_total(self.first_n + (index - self.offset), self.stat)

    def terms(self, count: int) -> list[tuple[int, int]]:
        if count < 1:
            raise ValueError(f"term count must be positive, got {count}")
        return [(i, self.value(i)) for i in range(self.offset, self.offset + count)]


BUILTIN_BINDINGS = {
    "A000346": OeisBinding("A000346", StatId(StatKind.AREA), offset=1, first_n=1),
    "A097613": OeisBinding("A097613", StatId(StatKind.SEMI), offset=1, first_n=1),
    "A051924": OeisBinding("A051924", StatId(StatKind.RUNS_DESC), offset=1, first_n=1),
    "A000984": OeisBinding(
        "A000984", StatId(StatKind.RUNS_WEAK_ASC), offset=1, first_n=1
    ),
    "A002054": OeisBinding("A002054", StatId(StatKind.CORNER_HU), offset=1, first_n=2),
    "A002694": OeisBinding("A002694", StatId(StatKind.CORNER_DH), offset=1, first_n=3),
    "A057552": OeisBinding("A057552", StatId(StatKind.SYM_PEAK), offset=1, first_n=3),
}


def format_bfile(terms: Iterable[tuple[int, int]]) -> str:
    return "".join(f"{i} {v}\n" for i, v in terms)


def parse_bfile(text: str) -> dict[int, int]:
    """Parse b-file text, skipping blank lines and # comments."""
    entries: dict[int, int] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise ValueError(f"line {lineno}: expected 'index value', got {raw!r}")
        try:
            index, value = int(parts[0]), int(parts[1])
        except ValueError:
            raise ValueError(f"line {lineno}: non-integer entry {raw!r}") from None
        if index in entries:
            raise ValueError(f"line {lineno}: duplicate index {index}")
        entries[index] = value
    return entries


def first_divergence(
    terms: Iterable[tuple[int, int]], reference: dict[int, int]
) -> tuple[int, int, int] | None:
    """First (index, reference value, computed value) mismatch on shared indices."""
    compared = 0
    for i, v in terms:
        if i in reference:
            compared += 1
            if reference[i] != v:
                return (i, reference[i], v)
    if compared == 0:
        raise ValueError("no overlapping indices between sequence and b-file")
    return None
