"""Difference words as morphism images, and how dense a is inside each segment."""

from aronson.analysis import AVERAGE_DENSITY, density_profile
from aronson.registry import sequence_a
from aronson.words import A_THETA, Word, a_language_prefix, difference_word, iterate_segments

a = sequence_a(200)
w = difference_word(a)
print("differences of a:", "".join(map(str, list(w)[:40])))
print("runs:", w.runs[:8])
print("language agrees:", list(w) == a_language_prefix(len(w)))

it = iterate_segments(A_THETA, Word([1, 1, 1]))
for _ in range(4):
    print("segment", "".join(map(str, next(it))))

for k in (4, 8, 12):
    p = density_profile(sequence_a((12 << k) - 3), k)
    print(f"k={k:2} max {float(p.max_ratio):.5f} min {float(p.min_ratio):.5f} "
          f"mean {p.mean_ratio:.5f}")
print(f"limit of the mean {AVERAGE_DENSITY:.5f}")
