"""Integer partition combinatorics.

Partitions are tuples of weakly decreasing positive integers without
trailing zeros; the empty tuple is the partition of 0.  Comparisons that
need a fixed length pad with zeros on the right.
"""

from __future__ import annotations

import math
from fractions import Fraction

Partition = tuple[int, ...]


def normalize(parts) -> Partition:
    """Strip trailing zeros and check that ``parts`` is weakly decreasing."""
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    for i, p in enumerate(parts):
        if p < 1 or (i and parts[i - 1] < p):
            raise ValueError(f"not a partition: {parts}")
    return parts


def weight(lam) -> int:
    """Sum of the parts."""
    return sum(lam)


def padded(lam, length: int) -> tuple[int, ...]:
    """The partition as an exponent tuple of the given length."""
    if len(lam) > length:
        raise ValueError(f"partition {lam} has more than {length} parts")
    return tuple(lam) + (0,) * (length - len(lam))


def partitions_of(n: int, max_parts: int) -> list[Partition]:
    """All partitions of ``n`` with at most ``max_parts`` parts.

    Output is graded reverse-lexicographic, e.g. (3), (2,1), (1,1,1).
    """
    if n < 0:
        raise ValueError("n must be >= 0")
    if max_parts < 1:
        raise ValueError("max_parts must be >= 1")
    out: list[Partition] = []

    def descend(remaining, largest, slots, prefix):
        if remaining == 0:
            out.append(tuple(prefix))
            return
        if slots == 0:
            return
        for part in range(min(remaining, largest), 0, -1):
            prefix.append(part)
            descend(remaining - part, part, slots - 1, prefix)
            prefix.pop()

    descend(n, n, max_parts, [])
    return out


def conjugate(lam) -> Partition:
    """Transpose of the diagram: column lengths become row lengths."""
    if not lam:
        return ()
    return tuple(sum(1 for p in lam if p > j) for j in range(lam[0]))


def standard_tableaux_count(lam) -> int:
    """Number of standard fillings of the diagram (hook length formula)."""
    lam = normalize(lam)
    n = weight(lam)
    conj = conjugate(lam)
    hooks = 1
    for i, row in enumerate(lam):
        for j in range(row):
            hooks *= (row - j) + (conj[j] - i) - 1
    count, rem = divmod(math.factorial(n), hooks)
    assert rem == 0, "hook product must divide n!"
    return count


def weyl_dimension(lam, d: int) -> int:
    """Number of semistandard fillings with entries in 1..d.

    Evaluates prod_{i<j} (lam_i - lam_j + j - i)/(j - i) with exact rational
    arithmetic.  Partitions with more than ``d`` parts are rejected rather
    than silently reported as zero-dimensional.
    """
    lam = normalize(lam)
    if len(lam) > d:
        raise ValueError(f"partition {lam} does not fit in {d} rows")
    rows = padded(lam, d)
    dim = Fraction(1)
    for i in range(d):
        for j in range(i + 1, d):
            dim *= Fraction(rows[i] - rows[j] + j - i, j - i)
    assert dim.denominator == 1
    return int(dim)


def contains(lam, mu) -> bool:
    """True when the diagram of ``mu`` fits inside the diagram of ``lam``."""
    length = max(len(lam), len(mu))
    lam_p, mu_p = padded(lam, length), padded(mu, length)
    return all(a >= b for a, b in zip(lam_p, mu_p))


def horizontal_strip(lam, mu) -> bool:
    """True when lam/mu is a horizontal strip: lam_1 >= mu_1 >= lam_2 >= ..."""
    length = max(len(lam), len(mu)) + 1
    lam_p, mu_p = padded(lam, length), padded(mu, length)
    return all(
        lam_p[i] >= mu_p[i] >= lam_p[i + 1] for i in range(length - 1)
    )
