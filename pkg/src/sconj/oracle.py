"""Brute-force enumeration: the ground truth the formulas and the involution are checked against."""

from __future__ import annotations

import csv
import io
import json
from collections import Counter
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

from .involution import involute
from .partitions import (
    Partition,
    conjugate,
    delta,
    r_stat,
    remainder_sequence,
)
from .qseries import bf_product, gf_closed, gf_sum_form


def _partitions_bounded(n: int, largest: int):
    if n == 0:
        yield ()
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_bounded(n - first, first):
            yield (first,) + rest


def partitions_of(n: int):
    """Every partition of ``n`` once, in reverse-lexicographic order."""
    for parts in _partitions_bounded(n, n):
        yield Partition(parts)


def partitions_with_first_part(n: int, first: int):
    for rest in _partitions_bounded(n - first, first):
        yield Partition((first,) + rest)


def partitions_with_rem(n: int, s: int, rv):
    rv = tuple(rv)
    for p in partitions_of(n):
        if remainder_sequence(p, s) == rv:
            yield p


def partition_count(n: int) -> int:
    """p(n) by Euler's pentagonal-number recurrence."""
    p = [1] + [0] * n
    for i in range(1, n + 1):
        total, k = 0, 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > i:
                break
            sign = 1 if k % 2 else -1
            total += sign * p[i - g1]
            g2 = k * (3 * k + 1) // 2
            if g2 <= i:
                total += sign * p[i - g2]
            k += 1
        p[i] = total
    return p[n]


def brute_c_stat(p, s: int) -> int:
    """c_s straight from the definition: scan every cell's arm and leg.

    Cell (i, j) has arm ``p_i - j`` and leg 0 exactly when row i + 1 is shorter than j.
    """
    p = Partition(p)
    below = p[1:] + (0,)
    return sum(
        1
        for part, nxt in zip(p, below)
        for j in range(1, part + 1)
        if nxt < j and (part - j + 1) % s == 0
    )


def delta_colours(p, s: int) -> tuple[str, ...]:
    """Colour of each remainder (top to bottom) by repeatedly deleting remainders.

    The i-th remainder from the bottom is green when that deletion raises
    c_s, yellow when c_s stays put; a remainder in the top row is green.
    """
    p = Partition(p)
    rows_with_rem = [i for i, x in enumerate(p, 1) if x % s]
    colours = []
    current = p
    for row in reversed(rows_with_rem):
        smaller = delta(current, s)
        grew = brute_c_stat(smaller, s) == brute_c_stat(current, s) + 1
        colours.append("G" if grew or row == 1 else "Y")
        current = smaller
    return tuple(reversed(colours))


@dataclass
class JointDistribution:
    """Counts of partitions of ``n`` by (remainder sequence, r_s, c_s)."""

    n: int
    s: int
    counts: dict = field(default_factory=dict)

    def __getitem__(self, key):
        rv, r, c = key
        return self.counts.get((tuple(rv), r, c), 0)

    def total(self) -> int:
        return sum(self.counts.values())

    def keys(self):
        return sorted(self.counts)

    def asymmetries(self) -> list[tuple]:
        return [
            (key, count, self[(key[0], key[2], key[1])])
            for key, count in sorted(self.counts.items())
            if self[(key[0], key[2], key[1])] != count
        ]

    def rows(self):
        for (rv, r, c), count in sorted(self.counts.items()):
            yield rv, r, c, count

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["rem", "r", "c", "count"])
        for rv, r, c, count in self.rows():
            writer.writerow(["-".join(map(str, rv)), r, c, count])
        return buf.getvalue()

    def to_json(self) -> str:
        return json.dumps({
            "n": self.n,
            "s": self.s,
            "entries": [
                {"rem": list(rv), "r": r, "c": c, "count": count}
                for rv, r, c, count in self.rows()
            ],
        })

    @classmethod
    def from_json(cls, text: str) -> "JointDistribution":
        data = json.loads(text)
        counts = {(tuple(e["rem"]), e["r"], e["c"]): e["count"] for e in data["entries"]}
        return cls(data["n"], data["s"], counts)


def _count_first_part(args):
    n, s, first = args
    counts = Counter()
    for p in partitions_with_first_part(n, first):
        counts[(remainder_sequence(p, s), r_stat(p, s), brute_c_stat(p, s))] += 1
    return counts


def joint_distribution(n: int, s: int, jobs: int = 1) -> JointDistribution:
    """Exact (rem, r, c) counts over all partitions of ``n``.

    With ``jobs > 1`` the work is split by largest part across processes;
    the merged result does not depend on ``jobs``.
    """
    if n == 0:
        return JointDistribution(0, s, {((), 0, 0): 1})
    tasks = [(n, s, first) for first in range(n, 0, -1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            parts = list(pool.map(_count_first_part, tasks))
    else:
        parts = [_count_first_part(t) for t in tasks]
    total = Counter()
    for c in parts:
        total.update(c)
    return JointDistribution(n, s, dict(sorted(total.items())))


@dataclass
class Report:
    name: str
    checked: int = 0
    violations: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def to_dict(self) -> dict:
        return {
            "suite": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "violations": self.violations,
        }


def _involution_check(args):
    n, s = args
    checked, bad = 0, []
    for p in partitions_of(n):
        checked += 1
        rv = remainder_sequence(p, s)
        try:
            out = involute(p, s)
            back = involute(out, s)
        except Exception as exc:  # a crash is a counterexample too
            bad.append({"s": s, "partition": list(p), "error": repr(exc)})
            continue
        problems = []
        if back != p:
            problems.append("not an involution")
        if out.size != p.size:
            problems.append("size changed")
        if remainder_sequence(out, s) != rv:
            problems.append("remainder sequence changed")
        if (r_stat(out, s), brute_c_stat(out, s)) != (brute_c_stat(p, s), r_stat(p, s)):
            problems.append("statistics not swapped")
        if s == 1 and out != conjugate(p):
            problems.append("differs from conjugation")
        if problems:
            bad.append({"s": s, "partition": list(p), "image": list(out), "problems": problems})
    return checked, bad


def verify_involution(max_n: int, s_list, jobs: int = 1) -> Report:
    report = Report("involution")
    tasks = [(n, s) for s in s_list for n in range(max_n + 1)]
    if jobs > 1:
        with ProcessPoolExecutor(jobs) as pool:
            results = list(pool.map(_involution_check, tasks))
    else:
        results = [_involution_check(t) for t in tasks]
    for checked, bad in results:
        report.checked += checked
        report.violations.extend(bad)
    return report


def verify_gf(max_n: int, s: int, jobs: int = 1, max_sum_form_length: int = 3) -> Report:
    """Compare the closed-form coefficients with enumerated counts.

    Also cross-checks the single-sum form (for remainder vectors of length
    at most ``max_sum_form_length``) and the marginal product formula.
    """
    report = Report("gf")
    sum_forms = {}
    marginal_r, marginal_c = Counter(), Counter()
    for n in range(max_n + 1):
        dist = joint_distribution(n, s, jobs)
        for (rv, r, c), count in dist.counts.items():
            report.checked += 1
            got = gf_closed(s, rv, r, c).coefficient(q=n)
            if got != count:
                report.violations.append(
                    {"n": n, "s": s, "rem": list(rv), "r": r, "c": c, "count": count, "formula": got}
                )
            if len(rv) <= max_sum_form_length:
                if rv not in sum_forms:
                    sum_forms[rv] = gf_sum_form(s, rv, max_n)
                got = sum_forms[rv].coefficient(q=n, R=r, C=c)
                if got != count:
                    report.violations.append(
                        {"n": n, "s": s, "rem": list(rv), "r": r, "c": c, "count": count, "sum_form": got}
                    )
            marginal_r[(n, r)] += count
            marginal_c[(n, c)] += count
    product = bf_product(s, max_n, max_n)
    for n in range(max_n + 1):
        for a in range(n + 1):
            report.checked += 1
            want = product.coefficient(t=a, q=n)
            if not want == marginal_r[(n, a)] == marginal_c[(n, a)]:
                report.violations.append(
                    {"n": n, "s": s, "t": a, "product": want,
                     "r_marginal": marginal_r[(n, a)], "c_marginal": marginal_c[(n, a)]}
                )
    return report
