"""Integer partitions, box operations, and Schur-module dimensions.

A partition is stored as a tuple of weakly decreasing nonnegative
integers with trailing zeros stripped, so ``Partition((2, 1, 0))`` and
``Partition((2, 1))`` are the same value.  Operations that care about a
surrounding box take the box dimensions (r rows, parts at most m)
explicitly rather than trusting padded lengths.
"""

from __future__ import annotations

import math
from itertools import accumulate

__all__ = [
    "BoxViolationError",
    "Partition",
    "complement_in_box",
    "dim_schur",
    "enumerate_in_box",
    "partitions_of",
]


class BoxViolationError(ValueError):
    """A partition does not fit inside the stated box."""


class Partition(tuple):
    """Weakly decreasing tuple of nonnegative integers."""

    def __new__(cls, parts=()):
        parts = tuple(parts)
        for p in parts:
            if not isinstance(p, int) or isinstance(p, bool) or p < 0:
                raise ValueError(f"parts must be nonnegative integers: {parts!r}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"parts must be weakly decreasing: {parts!r}")
        end = len(parts)
        while end > 0 and parts[end - 1] == 0:
            end -= 1
        return super().__new__(cls, parts[:end])

    @property
    def size(self) -> int:
        """Sum of the parts."""
        return sum(self)

    def padded(self, length: int) -> tuple[int, ...]:
        """The parts extended by zeros to the given length."""
        if length < len(self):
            raise ValueError(f"cannot pad {tuple(self)!r} down to length {length}")
        return tuple(self) + (0,) * (length - len(self))

    def contains(self, other) -> bool:
        """Componentwise containment of Young diagrams."""
        other = Partition(other)
        if len(other) > len(self):
            return False
        return all(a >= b for a, b in zip(self, other))

    def conjugate(self) -> "Partition":
        """Transpose of the Young diagram (column lengths)."""
        if not self:
            return Partition()
        return Partition(
            sum(1 for p in self if p > j) for j in range(self[0])
        )

    def fits_in_box(self, r: int, m: int) -> bool:
        """Whether the diagram has at most r rows and parts at most m."""
        return len(self) <= r and (not self or self[0] <= m)


def dim_schur(lam, n: int) -> int:
    """Dimension of the Schur module S_lam(V) for an n-dimensional V.

    Hook content formula: the product over cells (i, j) of (n + j - i)
    divided by the product of hook lengths.  Both products are integers
    and the division is exact, performed once at the end.  A diagram with
    more than n rows gives the zero module, so the dimension is 0.
    """
    lam = Partition(lam)
    if n < 0:
        raise ValueError(f"need n >= 0, got {n}")
    if len(lam) > n:
        return 0
    cols = lam.conjugate()
    num = 1
    den = 1
    for i, row in enumerate(lam):
        for j in range(row):
            num *= n + j - i
            den *= (row - j) + (cols[j] - i) - 1
    if num % den:
        raise ArithmeticError(f"hook content division not exact for {tuple(lam)!r}")
    return num // den


def complement_in_box(mu, r: int, m: int) -> Partition:
    """Complement (m - mu_r, ..., m - mu_1) of mu inside the r x m box."""
    mu = Partition(mu)
    if r < 0 or m < 0:
        raise ValueError(f"box dimensions must be nonnegative, got {r}x{m}")
    if not mu.fits_in_box(r, m):
        raise BoxViolationError(f"{tuple(mu)!r} does not fit in a {r}x{m} box")
    return Partition(m - p for p in reversed(mu.padded(r)))


def enumerate_in_box(r: int, m: int):
    """Yield every partition with at most r parts, each part at most m.

    The order is lexicographic on the r-padded part tuples, smallest
    first: (0,..,0), then (1,0,..,0), and so on up to the full box.
    Exactly binomial(r + m, r) partitions come out.
    """
    if r < 0 or m < 0:
        raise ValueError(f"box dimensions must be nonnegative, got {r}x{m}")

    def rec(prefix, slots, bound):
        if slots == 0:
            yield Partition(prefix)
            return
        for v in range(bound + 1):
            yield from rec(prefix + (v,), slots - 1, v)

    yield from rec((), r, m)


def box_count(r: int, m: int) -> int:
    """Number of partitions in the r x m box."""
    return math.comb(r + m, r)


def partitions_of(total: int, max_parts: int | None = None, max_part: int | None = None):
    """Yield all partitions of the given total, largest-first order.

    Optional caps on the number of parts and the largest part.
    """
    if total < 0:
        raise ValueError(f"cannot partition {total}")
    cap = total if max_part is None else min(max_part, total)
    slots = total if max_parts is None else max_parts

    def rec(prefix, remaining, bound, room):
        if remaining == 0:
            yield Partition(prefix)
            return
        if room == 0:
            return
        for v in range(min(bound, remaining), 0, -1):
            yield from rec(prefix + (v,), remaining - v, v, room - 1)

    yield from rec((), total, cap, slots)


def partial_sums(seq) -> tuple[int, ...]:
    """Running sums n_1, n_1+n_2, ... of an integer sequence."""
    return tuple(accumulate(seq))
