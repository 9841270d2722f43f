"""Greedy row-removal schedules.

A matrix in R(m, n, k) has mk ones spread over n columns, so some column holds
at least r = ceil(mk/n) ones and the r rows through it share a one.  Their
volume is at most sqrt((r+k-1)(k-1)^(r-1)).  Removing them leaves a matrix in
R(m-r, n, k) and the argument repeats until no rows are left.
"""

from __future__ import annotations

import csv
import math
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction

from .logmag import LogMagnitude


@dataclass(frozen=True)
class RemovalSchedule:
    m: int
    n: int
    k: int
    q_sequence: tuple[int, ...]

    @property
    def r(self) -> int:
        """Size of the first removal, ceil(mk/n)."""
        return self.q_sequence[0]

    @property
    def counts(self) -> dict[int, int]:
        """a_i: how many groups of size i are removed, for i = r down to 1."""
        c = Counter(self.q_sequence)
        return {i: c.get(i, 0) for i in range(self.r, 0, -1)}

    @property
    def checkpoints(self) -> dict[int, int]:
        """m_i: rows left just before the groups of size i are removed; m_r = m, m_0 = 0."""
        out = {self.r: self.m}
        remaining = self.m
        for i in range(self.r, 0, -1):
            remaining -= i * self.counts[i]
            out[i - 1] = remaining
        return out

    def to_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "k": self.k,
            "r": self.r,
            "Q": list(self.q_sequence),
            "counts": {str(i): a for i, a in self.counts.items()},
            "log10_bound": round(schedule_bound(self).log10, 12),
        }


def make_schedule(m: int, n: int, k: int) -> RemovalSchedule:
    if m < 1 or not 1 <= k <= n:
        raise ValueError("need m >= 1 and 1 <= k <= n")
    seq = []
    rows = m
    while rows > 0:
        step = -(-rows * k // n)
        seq.append(step)
        rows -= step
    return RemovalSchedule(m, n, k, tuple(seq))


def group_volume_sq(q: int, k: int) -> int:
    """det of the q x q matrix with k on the diagonal and 1 elsewhere."""
    return (q + k - 1) * (k - 1) ** (q - 1)


def schedule_bound(s: RemovalSchedule) -> LogMagnitude:
    """Product over the schedule of sqrt((q+k-1)(k-1)^(q-1))."""
    ln = 0.0
    for q, a in Counter(s.q_sequence).items():
        ln += 0.5 * a * math.log(group_volume_sq(q, s.k))
    return LogMagnitude(ln)


def a_i_window(i: int, n: int, k: int) -> tuple[Fraction, Fraction]:
    """Open interval (n/(k(i-1)) - i/(i-1), n/(k(i-1)) + 1) containing a_{i-1}.

    Holds for every removal size below the first one.
    """
    if i < 2:
        raise ValueError("window is defined for i >= 2")
    centre = Fraction(n, k * (i - 1))
    return centre - Fraction(i, i - 1), centre + 1


def write_counts_csv(s: RemovalSchedule, fh) -> None:
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["i", "a_i"])
    for i, a in s.counts.items():
        w.writerow([i, a])
