"""Lattice paths built from unit up and down steps.

A path is a finite sequence of steps ``U = (1,1)`` and ``D = (1,-1)``,
stored as a tuple of ``+1`` / ``-1``. Dyck paths are the paths that end on
the x-axis and never go below it. The module provides ordered enumeration
(lexicographic with U before D), the reverse-complement involution, factor
occurrence counting with the height and terminality filters needed for
marked-path sets, unit decomposition, and the (ddu, udu) factor profile.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property

from .limits import check_ceiling

U = 1
D = -1

_CHAR_TO_STEP = {"U": U, "u": U, "D": D, "d": D}
_STEP_TO_CHAR = {U: "U", D: "D"}


@dataclass(frozen=True)
class Path:
    """Immutable up/down step sequence with derived height data."""

    steps: tuple[int, ...]

    def __post_init__(self):
        for s in self.steps:
            if s != U and s != D:
                raise ValueError(f"steps must be +1 (U) or -1 (D), got {s!r}")

    @classmethod
    def from_string(cls, text: str) -> "Path":
        try:
            return cls(tuple(_CHAR_TO_STEP[ch] for ch in text))
        except KeyError as exc:
            raise ValueError(f"invalid step character {exc.args[0]!r}") from None

    @property
    def length(self) -> int:
        return len(self.steps)

    @cached_property
    def height_profile(self) -> tuple[int, ...]:
        """Heights after each step; the implicit starting height 0 is not included."""
        heights = []
        h = 0
        for s in self.steps:
            h += s
            heights.append(h)
        return tuple(heights)

    @property
    def final_height(self) -> int:
        return self.height_profile[-1] if self.steps else 0

    @cached_property
    def min_height(self) -> int:
        """Minimum over all prefix heights, including the starting 0."""
        return min((0,) + self.height_profile)

    def height_at(self, vertex: int) -> int:
        """Height at vertex ``vertex`` (0 = start, length = end)."""
        if vertex == 0:
            return 0
        return self.height_profile[vertex - 1]

    def __str__(self) -> str:
        return "".join(_STEP_TO_CHAR[s] for s in self.steps)

    def __repr__(self) -> str:
        return f"Path({str(self)!r})"

    def __len__(self) -> int:
        return len(self.steps)


EMPTY_PATH = Path(())


@dataclass(frozen=True)
class MarkedPath:
    """A path together with one marked contiguous factor."""

    path: Path
    mark_start: int
    mark_len: int

    def __post_init__(self):
        if self.mark_len < 1:
            raise ValueError(f"mark_len must be positive, got {self.mark_len}")
        if self.mark_start < 0 or self.mark_start + self.mark_len > self.path.length:
            raise ValueError(
                f"mark [{self.mark_start}, {self.mark_start + self.mark_len}) "
                f"out of range for path of length {self.path.length}"
            )

    @property
    def marked_factor(self) -> tuple[int, ...]:
        return self.path.steps[self.mark_start : self.mark_start + self.mark_len]


@dataclass(frozen=True)
class Endpoint:
    """A reachable endpoint (a, b): a steps ending at height b."""

    a: int
    b: int

    def __post_init__(self):
        if self.a < 0 or self.a < abs(self.b):
            raise ValueError(f"need a >= |b| >= 0, got ({self.a}, {self.b})")
        if (self.a - self.b) % 2 != 0:
            raise ValueError(f"a and b must have equal parity, got ({self.a}, {self.b})")

    @property
    def ups(self) -> int:
        return (self.a + self.b) // 2

    @property
    def downs(self) -> int:
        return (self.a - self.b) // 2


def is_dyck(p: Path) -> bool:
    """True when every prefix height is nonnegative and the path ends at 0."""
    h = 0
    for s in p.steps:
        h += s
        if h < 0:
            return False
    return h == 0


def _require_dyck(p: Path) -> None:
    if not is_dyck(p):
        raise ValueError(f"expected a Dyck path, got {p!r}")


def enumerate_dyck(
    n: int,
    *,
    max_n: int | None = None,
    prefix: Sequence[int] = (),
) -> Iterator[Path]:
    """Yield all Dyck paths of length 2n in lexicographic order (U < D).

    ``prefix`` restricts the stream to paths extending the given steps, which
    shards the enumeration for parallel consumption.
    """
    check_ceiling(n, max_n)
    prefix = tuple(prefix)
    if len(prefix) > 2 * n:
        raise ValueError("prefix longer than the requested paths")
    ups = prefix.count(U)
    h = 0
    for s in prefix:
        h += s
        if h < 0:
            raise ValueError("prefix dips below the x-axis")
    if ups > n or h > 2 * n - len(prefix):
        raise ValueError("prefix cannot extend to a Dyck path of this length")

    seq = list(prefix)

    def rec(ups: int, height: int) -> Iterator[Path]:
        if len(seq) == 2 * n:
            yield Path(tuple(seq))
            return
        if ups < n:
            seq.append(U)
            yield from rec(ups + 1, height + 1)
            seq.pop()
        if height > 0:
            seq.append(D)
            yield from rec(ups, height - 1)
            seq.pop()

    return rec(ups, h)


def enumerate_lattice(a: int, b: int, *, max_n: int | None = None) -> Iterator[Path]:
    """Yield all paths with ``a`` steps ending at height ``b``, lexicographically."""
    end = Endpoint(a, b)
    check_ceiling((a + 1) // 2, max_n)

    seq: list[int] = []

    def rec(ups: int, downs: int) -> Iterator[Path]:
        if len(seq) == a:
            yield Path(tuple(seq))
            return
        if ups < end.ups:
            seq.append(U)
            yield from rec(ups + 1, downs)
            seq.pop()
        if downs < end.downs:
            seq.append(D)
            yield from rec(ups, downs + 1)
            seq.pop()

    return rec(0, 0)


def reverse_complement(p: Path) -> Path:
    """Reverse the steps and swap U with D; an involution negating the endpoint."""
    return Path(tuple(-s for s in reversed(p.steps)))


def _final_run_start(p: Path) -> int:
    """Index where the trailing run of D steps begins (length(p) if none)."""
    i = p.length
    while i > 0 and p.steps[i - 1] == D:
        i -= 1
    return i


def factor_occurrences(
    p: Path,
    pattern: Path | Sequence[int],
    *,
    min_end_height: int | None = None,
    terminal: bool | None = None,
) -> list[int]:
    """Start indices of (possibly overlapping) occurrences of ``pattern``.

    ``min_end_height`` keeps occurrences whose final step ends at that height
    or above. ``terminal=True`` keeps occurrences whose D steps all belong to
    the trailing run of D steps; ``terminal=False`` keeps the rest.
    """
    pat = tuple(pattern.steps if isinstance(pattern, Path) else pattern)
    if not pat:
        raise ValueError("pattern must be nonempty")
    k = len(pat)
    hits = []
    profile = p.height_profile
    tail = _final_run_start(p) if terminal is not None else 0
    for i in range(p.length - k + 1):
        if p.steps[i : i + k] != pat:
            continue
        if min_end_height is not None and profile[i + k - 1] < min_end_height:
            continue
        if terminal is not None:
            last_d = max((j for j in range(k) if pat[j] == D), default=None)
            if last_d is None:
                is_term = True
            else:
                first_d = min(j for j in range(k) if pat[j] == D)
                is_term = i + first_d >= tail
            if is_term != terminal:
                continue
        hits.append(i)
    return hits


def count_factor(
    p: Path,
    pattern: Path | Sequence[int],
    *,
    min_end_height: int | None = None,
    terminal: bool | None = None,
) -> int:
    """Number of occurrences of ``pattern`` in ``p`` under the given filter."""
    return len(
        factor_occurrences(
            p, pattern, min_end_height=min_end_height, terminal=terminal
        )
    )


def units(p: Path) -> list[tuple[int, int]]:
    """Split a Dyck path into its units, returned as (start, stop) index pairs.

    A unit is a factor that leaves the x-axis with its first step and first
    returns to it with its last step.
    """
    _require_dyck(p)
    spans = []
    start = 0
    h = 0
    for i, s in enumerate(p.steps):
        h += s
        if h == 0:
            spans.append((start, i + 1))
            start = i + 1
    return spans


def ddu_udu_counts(p: Path) -> tuple[int, int]:
    """Occurrence counts (k, j) of the factors DDU and UDU in a Dyck path."""
    _require_dyck(p)
    k = count_factor(p, (D, D, U)) if p.length >= 3 else 0
    j = count_factor(p, (U, D, U)) if p.length >= 3 else 0
    return k, j
