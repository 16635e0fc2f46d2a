#
# Remainder diagrams.  Divide every part by s (rounding down) to get the
# interior, then put one coloured cell at the end of each row that had a
# non-zero remainder: G for green, Y for yellow.
#

from sconj import diagram_c, diagram_r, from_partition, reinsert, remainder_sequence

for p, s in [((17, 16, 14, 12, 8, 7), 4), ((19, 16, 14, 12, 7, 5, 4, 3), 3), ((1, 1, 1), 2)]:
    d = from_partition(p, s)
    print(f"{p} mod {s}, remainders {remainder_sequence(p, s)}")
    print(d.render())
    print(f"r from diagram = {diagram_r(d)}, c from diagram = {diagram_c(d)}")
    # blowing the interior back up and re-adding the remainders recovers p
    assert reinsert(d, remainder_sequence(p, s), s) == p
    print()
