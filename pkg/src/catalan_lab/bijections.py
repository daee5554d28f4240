"""Executable forms of the constructive path maps.

Every map here either has an explicit inverse in this module or an image
characterization that the verification suites check exhaustively at small
sizes. The maps are pure; the random sampler owns only the random source
handed to it.
"""

import random
from collections.abc import Sequence
from dataclasses import dataclass

from .paths import (
    D,
    U,
    MarkedPath,
    Path,
    ddu_udu_counts,
    is_dyck,
    units,
)


def _rc(steps: Sequence[int]) -> tuple[int, ...]:
    return tuple(-s for s in reversed(steps))


def _require_dyck(p: Path) -> None:
    if not is_dyck(p):
        raise ValueError(f"expected a Dyck path, got {p!r}")


def reflect_after_touch(p: Path, level: int) -> Path:
    """Complement every step after the first vertex at height ``level``.

    Reflecting the tail across the touched line negates its net height, so
    the result ends at 2*level - final_height(p). Applying the map twice
    returns the original path.
    """
    touch = None
    if level == 0:
        touch = 0
    else:
        for v, h in enumerate(p.height_profile, start=1):
            if h == level:
                touch = v
                break
    if touch is None:
        raise ValueError(f"path never touches level {level}")
    return Path(p.steps[:touch] + tuple(-s for s in p.steps[touch:]))


def split_reverse(mp: MarkedPath, survivor: int) -> Path:
    """Reverse-complement both sides of the mark around a single surviving step.

    Writing the path as ``pre + mark + post``, the image is
    ``rc(pre) + survivor + rc(post)`` where ``rc`` is reverse-complement.
    The same template realizes the marked-factor maps for UU, UDU, DDU,
    UUDDU, and the single-step high-mark maps.
    """
    if survivor not in (U, D):
        raise ValueError("survivor must be U or D")
    steps = mp.path.steps
    pre = steps[: mp.mark_start]
    post = steps[mp.mark_start + mp.mark_len :]
    return Path(_rc(pre) + (survivor,) + _rc(post))


def split_reverse_inverse(
    image: Path, pattern: Path | Sequence[int], survivor: int
) -> MarkedPath:
    """Invert split_reverse by locating the surviving step at the minimum.

    For a surviving up step the junction is the rightmost minimum vertex and
    the survivor starts there; for a surviving down step it is the leftmost
    minimum vertex and the survivor ends there. Both facts follow from the
    sections flanking the survivor being reverse-complements of a Dyck
    prefix and suffix.
    """
    if survivor not in (U, D):
        raise ValueError("survivor must be U or D")
    pat = tuple(pattern.steps if isinstance(pattern, Path) else pattern)
    heights = (0,) + image.height_profile
    low = min(heights)
    if survivor == U:
        vertex = max(v for v, h in enumerate(heights) if h == low)
        if vertex >= image.length or image.steps[vertex] != U:
            raise ValueError("no surviving up step at the rightmost minimum")
        pre_r = image.steps[:vertex]
        post_r = image.steps[vertex + 1 :]
    else:
        vertex = min(v for v, h in enumerate(heights) if h == low)
        if vertex < 1 or image.steps[vertex - 1] != D:
            raise ValueError("no surviving down step into the leftmost minimum")
        pre_r = image.steps[: vertex - 1]
        post_r = image.steps[vertex:]
    path = Path(_rc(pre_r) + pat + _rc(post_r))
    return MarkedPath(path, len(pre_r), len(pat))


def lift_marked_unit(dp: Path, unit_index: int) -> Path:
    """Send a Dyck path with one distinguished unit to a longer multi-unit path.

    With ``dp = head + unit + tail`` the image is ``U + head + D + unit + tail``,
    one size larger and containing at least two units.
    """
    spans = units(dp)
    if not 1 <= unit_index <= len(spans):
        raise ValueError(f"unit_index {unit_index} out of range 1..{len(spans)}")
    start = spans[unit_index - 1][0]
    return Path((U,) + dp.steps[:start] + (D,) + dp.steps[start:])


def drop_marked_unit(p: Path) -> tuple[Path, int]:
    """Inverse of lift_marked_unit; defined on multi-unit Dyck paths."""
    spans = units(p)
    if len(spans) < 2:
        raise ValueError("expected a Dyck path with at least two units")
    s0, e0 = spans[0]
    head = p.steps[s0 + 1 : e0 - 1]
    rest = p.steps[e0:]
    unit_index = len(units(Path(head))) + 1
    return Path(head + rest), unit_index


def sym_valley_pattern(ell: int) -> tuple[int, ...]:
    """The step factor U D (D U)^ell U marking a symmetric valley."""
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    return (U, D) + (D, U) * ell + (U,)


def sym_valley_insert(mp: MarkedPath, ell: int) -> MarkedPath:
    """Insert D (D U)^ell U after a marked up step of height two or more.

    The input is a Dyck path with one marked up step not of height one; the
    output marks the created factor U D (D U)^ell U of length 2*ell + 3.
    """
    if ell < 1:
        raise ValueError(f"ell must be positive, got {ell}")
    if mp.mark_len != 1 or mp.marked_factor != (U,):
        raise ValueError("the mark must cover a single up step")
    _require_dyck(mp.path)
    i = mp.mark_start
    if mp.path.height_profile[i] < 2:
        raise ValueError("marked up step must end at height two or more")
    inserted = (D,) + (D, U) * ell + (U,)
    steps = mp.path.steps[: i + 1] + inserted + mp.path.steps[i + 1 :]
    return MarkedPath(Path(steps), i, 2 * ell + 3)


def sym_valley_remove(mp: MarkedPath) -> tuple[MarkedPath, int]:
    """Inverse of sym_valley_insert; returns the high-mark path and ell."""
    if mp.mark_len < 5 or mp.mark_len % 2 == 0:
        raise ValueError("mark must cover a factor U D (D U)^ell U")
    ell = (mp.mark_len - 3) // 2
    if mp.marked_factor != sym_valley_pattern(ell):
        raise ValueError("marked factor is not U D (D U)^ell U")
    i = mp.mark_start
    steps = mp.path.steps[: i + 1] + mp.path.steps[i + mp.mark_len :]
    out = MarkedPath(Path(steps), i, 1)
    if out.path.height_profile[i] < 2:
        raise ValueError("underlying marked up step has height below two")
    return out, ell


def low_path_to_dyck(p: Path) -> Path:
    """Bijection from balanced paths staying at or above level -1 to Dyck paths.

    A path that never dips below the axis maps to U + path + D. Otherwise
    every dip is an isolated D U excursion; wrapping the segments between
    excursions as units gives a Dyck path one size larger with at least two
    units, which keeps the two branches disjoint.
    """
    if p.final_height != 0:
        raise ValueError("path must end at height 0")
    if p.min_height < -1:
        raise ValueError("path dips below level -1")
    if p.min_height >= 0:
        return Path((U,) + p.steps + (D,))
    segments: list[tuple[int, ...]] = []
    cur: list[int] = []
    h = 0
    i = 0
    while i < len(p.steps):
        if p.steps[i] == D and h == 0:
            segments.append(tuple(cur))
            cur = []
            i += 2  # the dip is D then immediately U
            continue
        cur.append(p.steps[i])
        h += p.steps[i]
        i += 1
    segments.append(tuple(cur))
    out: list[int] = []
    for seg in segments:
        out.append(U)
        out.extend(seg)
        out.append(D)
    return Path(tuple(out))


def dyck_to_low_path(dp: Path) -> Path:
    """Inverse of low_path_to_dyck, branching on the unit count."""
    _require_dyck(dp)
    if dp.length == 0:
        raise ValueError("expected a nonempty Dyck path")
    spans = units(dp)
    interiors = [dp.steps[s + 1 : e - 1] for s, e in spans]
    if len(spans) == 1:
        return Path(interiors[0])
    out = list(interiors[0])
    for seg in interiors[1:]:
        out.append(D)
        out.append(U)
        out.extend(seg)
    return Path(tuple(out))


def raney_shift(values: Sequence[int]) -> int:
    """The unique 1-based cyclic shift giving all-positive partial sums.

    Requires the values to sum to 1. The valid rotation starts right after
    the last position achieving the minimal prefix sum.
    """
    vals = list(values)
    if not vals:
        raise ValueError("sequence must be nonempty")
    total = sum(vals)
    if total != 1:
        raise ValueError(f"sequence must sum to 1, got {total}")
    best_j = 0
    best = 0
    s = 0
    for j in range(1, len(vals)):
        s += vals[j - 1]
        if s <= best:
            best = s
            best_j = j
    return best_j + 1


@dataclass(frozen=True)
class PeakVector:
    """Run-length pairs (a_i, b_i) describing a Dyck path with no UDU factor.

    The path is the concatenation of blocks U^(a_i + 1) D^(b_i + 1). All
    internal b_i are at least 1, the column sums agree, and every prefix has
    at least as many up-run steps as down-run steps.
    """

    pairs: tuple[tuple[int, int], ...]

    def __post_init__(self):
        if not self.pairs:
            raise ValueError("a peak vector has at least one pair")
        a_sum = b_sum = 0
        for idx, (a, b) in enumerate(self.pairs):
            last = idx == len(self.pairs) - 1
            if a < 0 or b < 0:
                raise ValueError(f"negative run length in pair {idx}: {(a, b)}")
            if not last and b < 1:
                raise ValueError(f"internal pair {idx} needs b >= 1, got {b}")
            a_sum += a
            b_sum += b
            if a_sum < b_sum:
                raise ValueError("prefix down runs exceed up runs")
        if a_sum != b_sum:
            raise ValueError(f"unbalanced run sums {a_sum} != {b_sum}")

    @property
    def k(self) -> int:
        return len(self.pairs) - 1

    @property
    def n(self) -> int:
        return sum(a for a, _ in self.pairs) + len(self.pairs)


def peak_decompose(p: Path) -> PeakVector:
    """Read off the run-length pairs of a UDU-free Dyck path."""
    _require_dyck(p)
    if p.length == 0:
        raise ValueError("expected a nonempty Dyck path")
    k, j = ddu_udu_counts(p)
    if j:
        raise ValueError("path contains a UDU factor")
    runs: list[tuple[int, int]] = []
    cur = p.steps[0]
    count = 0
    for s in p.steps:
        if s == cur:
            count += 1
        else:
            runs.append((cur, count))
            cur, count = s, 1
    runs.append((cur, count))
    pairs = tuple(
        (runs[i][1] - 1, runs[i + 1][1] - 1) for i in range(0, len(runs), 2)
    )
    pv = PeakVector(pairs)
    assert pv.k == k
    return pv


def peak_rebuild(pv: PeakVector) -> Path:
    """Inverse of peak_decompose."""
    out: list[int] = []
    for a, b in pv.pairs:
        out.extend([U] * (a + 1))
        out.extend([D] * (b + 1))
    return Path(tuple(out))


def peak_vector_from_slots(slots: Sequence[tuple[int, int]]) -> PeakVector:
    """Build a peak vector from slot fills via the cycle lemma.

    Each slot holds a nonnegative number of ups and a positive number of
    downs, with one more down than up overall. Rotating by the unique valid
    cyclic shift, removing one down from the first rotated slot, and
    reversing the order yields a valid peak vector. Every peak vector arises
    from exactly len(slots) distinct fills.
    """
    fills = [(int(y), int(z)) for y, z in slots]
    for y, z in fills:
        if y < 0:
            raise ValueError(f"slot ups must be nonnegative, got {y}")
        if z < 1:
            raise ValueError(f"slot downs must be positive, got {z}")
    deltas = [z - y for y, z in fills]
    r = raney_shift(deltas)  # validates the sum
    rot = fills[r - 1 :] + fills[: r - 1]
    shifted = [(rot[0][0], rot[0][1] - 1)] + rot[1:]
    return PeakVector(tuple(reversed(shifted)))


def insert_ud(precursor: Path, positions: Sequence[int]) -> Path:
    """Insert one U D factor directly before chosen up steps of a UDU-free path.

    ``positions`` is a multiset of 0-based up-step indices; repeats stack
    several U D factors at the same spot. The insertions create exactly one
    UDU occurrence each and leave the DDU count unchanged.
    """
    _require_dyck(precursor)
    if ddu_udu_counts(precursor)[1] != 0:
        raise ValueError("precursor must contain no UDU factor")
    ups = precursor.steps.count(U)
    counts: dict[int, int] = {}
    for pos in positions:
        if not 0 <= pos < ups:
            raise ValueError(f"position {pos} out of range 0..{ups - 1}")
        counts[pos] = counts.get(pos, 0) + 1
    out: list[int] = []
    seen = 0
    for s in precursor.steps:
        if s == U:
            out.extend((U, D) * counts.get(seen, 0))
            seen += 1
        out.append(s)
    return Path(tuple(out))


def remove_ud(p: Path) -> tuple[Path, tuple[int, ...]]:
    """Strip inserted U D factors; inverse of insert_ud.

    Repeatedly deletes the U D opening the leftmost UDU occurrence. Each
    deletion happens at or right of the previous one, so counting the up
    steps left of the deletion point indexes the insertion position in the
    final precursor.
    """
    _require_dyck(p)
    steps = list(p.steps)
    positions = []
    while True:
        target = None
        for i in range(len(steps) - 2):
            if steps[i] == U and steps[i + 1] == D and steps[i + 2] == U:
                target = i
                break
        if target is None:
            break
        positions.append(sum(1 for s in steps[:target] if s == U))
        del steps[target : target + 2]
    return Path(tuple(steps)), tuple(sorted(positions))


@dataclass(frozen=True)
class AreaMark:
    """A Dyck path with one marked up step and a choice below its height.

    ``up_index`` points at an up step ending at some height m; ``j`` ranges
    over 0..m-1. Counting all such triples totals the up-step heights.
    """

    path: Path
    up_index: int
    j: int

    def __post_init__(self):
        if not is_dyck(self.path):
            raise ValueError("area marks live on Dyck paths")
        if not 0 <= self.up_index < self.path.length:
            raise ValueError(f"up_index {self.up_index} out of range")
        if self.path.steps[self.up_index] != U:
            raise ValueError(f"step {self.up_index} is not an up step")
        if not 0 <= self.j <= self.height - 1:
            raise ValueError(f"need 0 <= j <= {self.height - 1}, got j={self.j}")

    @property
    def height(self) -> int:
        return self.path.height_profile[self.up_index]


def _descent_blocks(steps: tuple[int, ...], start_height: int) -> list[tuple[int, ...]]:
    """Split a path from start_height down to 0 at the first crossing of each level.

    Returns start_height + 1 blocks, each a Dyck factor at its level; the
    separating down steps are dropped.
    """
    blocks: list[tuple[int, ...]] = []
    cur: list[int] = []
    level = start_height
    h = start_height
    for s in steps:
        if s == D and h == level:
            blocks.append(tuple(cur))
            cur = []
            level -= 1
            h -= 1
            continue
        cur.append(s)
        h += s
    blocks.append(tuple(cur))
    if len(blocks) != start_height + 1 or h != 0:
        raise ValueError("section does not descend cleanly to the axis")
    return blocks


def area_mark_encode(am: AreaMark) -> Path:
    """Map an area mark to a path of the same length with negative endpoint.

    Splitting the path as head + U + blocks (the marked up step at height m,
    then the m+1 level blocks), the image chains the first j+1 blocks with
    down steps, inserts the reverse-complemented head between two down
    steps, and appends the reverse-complement of the remaining chained
    blocks. The endpoint lands at -2j - 2 and the minimum at -(m + j + 1).
    """
    steps = am.path.steps
    head = steps[: am.up_index]
    m = am.height
    blocks = _descent_blocks(steps[am.up_index + 1 :], m)
    out: list[int] = []
    out.extend(blocks[0])
    for i in range(1, am.j + 1):
        out.append(D)
        out.extend(blocks[i])
    out.append(D)
    out.extend(_rc(head))
    out.append(D)
    tail: list[int] = list(blocks[am.j + 1])
    for i in range(am.j + 2, m + 1):
        tail.append(D)
        tail.extend(blocks[i])
    out.extend(_rc(tail))
    return Path(tuple(out))


def area_mark_decode(image: Path) -> AreaMark:
    """Inverse of area_mark_encode.

    The endpoint height -2j - 2 fixes j, the minimum -(m + j + 1) fixes m,
    and the leftmost vertices at heights -j - 1 and -(m + j + 1) flank the
    reverse-complemented head section.
    """
    if image.length == 0 or image.length % 2:
        raise ValueError("image paths have positive even length")
    final = image.final_height
    if final >= 0 or final % 2:
        raise ValueError(f"image paths end at negative even height, got {final}")
    n = image.length // 2
    j = (-final - 2) // 2
    m = -image.min_height - j - 1
    if not 0 <= j < m <= n:
        raise ValueError("endpoint and minimum heights are inconsistent")
    heights = (0,) + image.height_profile
    a = next(v for v, h in enumerate(heights) if h == -j - 1)
    b = next(v for v, h in enumerate(heights) if h == image.min_height)
    if image.steps[a - 1] != D or image.steps[b - 1] != D:
        raise ValueError("split points are not down steps")
    head = _rc(image.steps[a : b - 1])
    chained = image.steps[: a - 1]
    tail = _rc(image.steps[b:])
    reconstructed = Path(head + (U,) + chained + (D,) + tail)
    am = AreaMark(reconstructed, len(head), j)
    if am.height != m:
        raise ValueError("reconstructed mark height mismatch")
    return am


def last_passage_class(lam: Path) -> tuple[str, int | None]:
    """Classify a path ending one above the axis by its last high or low passage.

    Returns ("exceptional", None) for the sawtooth U (D U)^(n-1), otherwise
    ("through-two", i) or ("through-minus-one", i) for the largest i such
    that the path passes through (2i, 2) or (2i - 1, -1).
    """
    if lam.length % 2 == 0 or lam.final_height != 1:
        raise ValueError("expected a path of odd length ending at height 1")
    n = (lam.length + 1) // 2
    if lam.steps == (U, D) * (n - 1) + (U,):
        return ("exceptional", None)
    heights = (0,) + lam.height_profile
    best: tuple[int, str] | None = None
    for i in range(1, n):
        # at most one of the two passages can happen for a given i
        if heights[2 * i] == 2:
            best = (i, "through-two")
        if heights[2 * i - 1] == -1:
            best = (i, "through-minus-one")
    if best is None:
        raise ValueError("path has no last passage and is not the sawtooth")
    return (best[1], best[0])


def random_dyck_path(n: int, rng: random.Random | None = None) -> Path:
    """Draw a uniformly random Dyck path of length 2n via the cycle lemma.

    Shuffles n up and n + 1 down steps, finds the unique rotation of the
    complemented sequence with all-positive partial sums, and drops its
    forced leading up step. Every Dyck path is hit by exactly 2n + 1
    arrangements, so the draw is uniform without rejection.
    """
    if n < 0:
        raise ValueError(f"size must be nonnegative, got {n}")
    if rng is None:
        rng = random.Random()
    arrangement = [U] * n + [D] * (n + 1)
    rng.shuffle(arrangement)
    complement = [-s for s in arrangement]
    r = raney_shift(complement)
    rotated = complement[r - 1 :] + complement[: r - 1]
    return Path(tuple(rotated[1:]))
