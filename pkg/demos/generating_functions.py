#
# Generating functions.  For a fixed remainder vector and fixed (r, c) the
# partitions are counted by size with a closed-form polynomial in q, and the
# full series in q, R, C has a single-sum form.
#

from sconj import gf_closed, gf_sum_form, gf_symmetric, joint_distribution, qbinom

print("[4 choose 2]_q =", qbinom(4, 2))

f = gf_closed(3, (2, 1, 1, 2, 1), 2, 3)
print("\nclosed form:", f)
print("coefficient of q^37:", f.coefficient(q=37))
print("same as (r,c) = (3,2):", f == gf_closed(3, (2, 1, 1, 2, 1), 3, 2))
print("same as the q-multinomial form:", f == gf_symmetric(3, (2, 1, 1, 2, 1), 2, 3))

# compare with brute force
series = gf_sum_form(3, (2, 1), 21)
table = joint_distribution(21, 3)
print("\nn=21, s=3, remainders (2,1):")
for r in range(4):
    row = [(series.coefficient(q=21, R=r, C=c), table[((2, 1), r, c)]) for c in range(4)]
    print(f"  r={r}", "  ".join(f"{a}/{b}" for a, b in row))
