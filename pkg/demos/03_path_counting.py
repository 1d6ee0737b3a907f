"""Counting normal-form path words: recurrence vs. exhaustive enumeration.

Each k-sequence defines a chain graph with two commuting edges per level
plus k_i wall edges.  The number of normal-form words ending in a wall
satisfies a pair of recurrences; enumerating the words directly gives an
independent check, and the mismatch count h - |word|, summed over all
words, is the defect that feeds the extension invariant.
"""

from cfkit import KSequence, defect_by_enumeration, enumerate_paths, path_counts

for entries in ((2,), (1, 1), (0, 2), (2, 1, 2)):
    k = KSequence(entries)
    counts = path_counts(k)
    print(f"k = {k}")
    print(f"  per-length counts {counts.per_length}   cumulative {counts.cumulative}")
    for f in range(k.h + 1):
        words = enumerate_paths(k, f)
        shown = ", ".join("".join(str(e) for e in w) or "(empty)" for w in words[:6])
        more = " ..." if len(words) > 6 else ""
        print(f"  length {f}: {len(words)} words: {shown}{more}")
        assert len(words) == counts.per_length[f]
    defect = defect_by_enumeration(k)
    print(f"  defect by enumeration {defect} = sum of earlier cumulative counts "
          f"{sum(counts.cumulative[:k.h])}")
    print()

print("The top cumulative count and the defect are always coprime; that pair")
print("(n, m) is exactly the invariant the correspondence demos work with.")
