#
# Two statistics on partitions, for a modulus s:
#   r_s  counts parts divisible by s
#   c_s  counts cells with leg 0 whose arm + 1 is divisible by s
# Over all partitions of n they have the same distribution.
#

from collections import Counter

from sconj import c_stat, conjugate, partitions_of, r_stat, remainder_sequence, s_cells

p = (6, 4, 4, 1)
print("partition", p, "conjugate", conjugate(p))
for s in (1, 2, 3):
    print(f"s={s}  r={r_stat(p, s)}  c={c_stat(p, s)}  s-cells={s_cells(p, s)}")

# the remainders that are left when every part is reduced mod s
print("remainders mod 4 of (12,9,5,4,4,3,2):", remainder_sequence((12, 9, 5, 4, 4, 3, 2), 4))

n, s = 12, 3
parts = list(partitions_of(n))
print(f"\n{len(parts)} partitions of {n}, s={s}")
print("r distribution", sorted(Counter(r_stat(p, s) for p in parts).items()))
print("c distribution", sorted(Counter(c_stat(p, s) for p in parts).items()))
