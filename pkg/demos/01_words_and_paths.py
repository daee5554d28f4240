"""Catalan words, Dyck paths, and the conversion between them.

A Catalan word starts at 1 and each letter is at most one more than its
predecessor. Sending the i-th letter to the height of the i-th up step
gives a Dyck path, and the correspondence is one to one.
"""

from catalan_lab import (
    Path,
    Word,
    catalan,
    enumerate_catalan,
    enumerate_dyck,
    path_to_word,
    reverse_complement,
    units,
    word_to_path,
)

# All 14 Catalan words of length 4, in numeric lexicographic order.
print("C_4 words:")
for w in enumerate_catalan(4):
    print(" ", w)
print("count:", catalan(4))
print()

# The same objects as Dyck paths, lexicographic with U before D.
print("D_3 paths:", ", ".join(str(p) for p in enumerate_dyck(3)))
print()

# The up-step-height correspondence, on the classic example 123321.
w = Word.from_string("123321")
p = word_to_path(w)
print(f"word {w} -> path {p}")
print(f"path {p} -> word {path_to_word(p)}")
print()

# Reverse-complement flips a path end to end and swaps step directions.
alpha = Path.from_string("UUDUUDDDDU")
print(f"reverse-complement of {alpha} is {reverse_complement(alpha)}")
print("applying it twice returns the original:",
      reverse_complement(reverse_complement(alpha)) == alpha)
print()

# Units are the returns to the x-axis.
q = Path.from_string("UDUUDD")
print(f"units of {q}:")
for s, e in units(q):
    print(f"  steps [{s}, {e}) = {Path(q.steps[s:e])}")
