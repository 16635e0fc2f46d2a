#
# The involution, step by step.  Yellow cells are pushed out of the
# diagram, the yellow-free diagram is transposed, and the yellow cells are
# put back.  The result has the same size and remainders, with r and c swapped.
#

from sconj import c_stat, involute, involute_trace, r_stat

p, s = (19, 16, 14, 12, 7, 5, 4, 3), 3
print(involute_trace(p, s).render())

q = involute(p, s)
print(f"\n(r, c): {(r_stat(p, s), c_stat(p, s))} -> {(r_stat(q, s), c_stat(q, s))}")
print("applied twice:", involute(q, s))

# the five partitions of 37 with remainders (2,1,1,2,1) and (r,c) = (2,3)
for p in [(15, 6, 5, 4, 4, 2, 1), (15, 8, 4, 4, 3, 2, 1), (14, 10, 4, 3, 3, 2, 1),
          (17, 6, 4, 4, 3, 2, 1), (14, 7, 7, 3, 3, 2, 1)]:
    print(p, "->", tuple(involute(p, 3)))
