"""A tour of the constructive maps behind the counting formulas.

Each map turns a marked or constrained path into a member of a simpler
family whose size is a single binomial, and each one is invertible.
"""

from catalan_lab import (
    D,
    U,
    AreaMark,
    MarkedPath,
    Path,
    area_mark_decode,
    area_mark_encode,
    catalan,
    dyck_to_low_path,
    enumerate_dyck,
    enumerate_lattice,
    last_passage_class,
    lift_marked_unit,
    low_path_to_dyck,
    path_to_word,
    split_reverse,
    split_reverse_inverse,
    sym_valley_insert,
    units,
)

P = Path.from_string

# Split-reverse: cut at a marked factor, reverse-complement both sides,
# and keep one surviving step. Marked UU factors in Dyck paths map onto
# the paths one step short of balanced that dip below the axis.
mp = MarkedPath(P("UUDD"), 0, 2)
image = split_reverse(mp, D)
print(f"marked UU in {mp.path} -> {image} (dips to {image.min_height})")
print("inverse recovers the mark:", split_reverse_inverse(image, (U, U), D) == mp)
print()

# Inserting D (DU)^ell U after a high up step creates a marked symmetric
# valley; on the word side this is the factor a (a-1)^ell a.
seed = MarkedPath(P("UUDD"), 1, 1)
out = sym_valley_insert(seed, 1)
print(f"valley insertion: {seed.path} (mark step 1) -> {out.path}")
print("word with the symmetric valley:", path_to_word(out.path))
print()

# Balanced paths that never go below level -1 match Dyck paths one size up.
low = P("DUDU")
print(f"low path {low} -> Dyck {low_path_to_dyck(low)}")
print("round trip:", dyck_to_low_path(low_path_to_dyck(low)) == low)
domain = [p for p in enumerate_lattice(6, 0) if p.min_height >= -1]
print(f"|low paths of length 6| = {len(domain)} = C_4 = {catalan(4)}")
print()

# Marking a unit is the same as choosing a multi-unit path one size up.
print("unit marking from D_2:")
for p in enumerate_dyck(2):
    for idx in range(1, len(units(p)) + 1):
        print(f"  {p} unit {idx} -> {lift_marked_unit(p, idx)}")
print()

# The area map sends a marked up step plus a level choice to a path with
# negative endpoint; total area equals the number of such paths.
am = AreaMark(P("UUDD"), 1, 0)
lam = area_mark_encode(am)
print(f"area mark ({am.path}, step {am.up_index}, j={am.j}) -> {lam}")
print("decoded:", area_mark_decode(lam) == am)
print()

# Last-passage classification splits the endpoint-one class into blocks
# of binomial sizes.
print("last passages in P(5, 1):")
for lam in enumerate_lattice(5, 1):
    kind, i = last_passage_class(lam)
    print(f"  {lam}: {kind}" + (f" at i={i}" if i else ""))
