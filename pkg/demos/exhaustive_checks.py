#
# Exhaustive verification against brute-force enumeration.  Both reports
# should come back with no violations.
#

import time

from sconj import joint_distribution, verify_gf, verify_involution

start = time.perf_counter()
rep = verify_involution(16, [1, 2, 3, 4])
print(f"involution: {rep.checked} partitions checked, {len(rep.violations)} violations")

for s in (2, 3):
    rep = verify_gf(16, s)
    print(f"generating functions, s={s}: {rep.checked} checks, {len(rep.violations)} violations")
print(f"{time.perf_counter() - start:.1f}s")

print("\njoint distribution for n=6, s=2 as CSV:")
print(joint_distribution(6, 2).to_csv())
