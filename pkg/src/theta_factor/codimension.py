"""Closed-form codimension and dimension formulas for the boundary strata."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .parabolic import FlagType
from .partitions import partial_sums

__all__ = [
    "StratumDatum",
    "complete_intersection_height",
    "double_det_dim",
    "gps_codim_bounds",
    "stability_gap",
    "quot_codim_bounds",
    "schubert_codim",
    "telescoping_check",
]


@dataclass(frozen=True)
class StratumDatum:
    """Incidence data: sub-rank r1, flag multiplicities n, and a split m of r1.

    m_j counts the dimensions of the sub-space falling into the j-th
    graded piece, so 0 <= m_j <= n_j and the m_j sum to r1.
    """

    r1: int
    n: tuple
    m: tuple

    def __post_init__(self):
        object.__setattr__(self, "n", FlagType(self.n))
        m = tuple(self.m)
        for x in m:
            if not isinstance(x, int) or isinstance(x, bool) or x < 0:
                raise ValueError(f"m entries must be nonnegative integers: {m!r}")
        object.__setattr__(self, "m", m)
        if len(self.n) != len(m):
            raise ValueError(f"n and m must have equal length: {len(self.n)} != {len(m)}")
        if any(a > b for a, b in zip(m, self.n)):
            raise ValueError(f"need m <= n componentwise: m={m!r}, n={tuple(self.n)!r}")
        if not isinstance(self.r1, int) or isinstance(self.r1, bool) or self.r1 < 1:
            raise ValueError(f"r1 must be a positive integer, got {self.r1!r}")
        if sum(m) != self.r1:
            raise ValueError(f"m must sum to r1={self.r1}, got {sum(m)}")


def schubert_codim(datum: StratumDatum) -> int:
    """Codimension of the locus of flags meeting a fixed r1-space as m says.

    Sum over j of (n_j - m_j) * (r1 - (m_1 + ... + m_j)).
    """
    spent = partial_sums(datum.m)
    return sum(
        (n_j - m_j) * (datum.r1 - used)
        for n_j, m_j, used in zip(datum.n, datum.m, spent)
    )


def stability_gap(n, m, a) -> Fraction:
    """Left side minus right side of the weighted stability comparison.

    n_j are positive multiplicities, 0 <= m_j <= n_j, and a_j are strictly
    increasing rationals in (0, 1].  The gap
        sum(m) * sum(n - m) + sum(m) * sum(n_j a_j)
      - sum_j (m_1 + ... + m_j)(n_j - m_j) - sum(n) * sum(m_j a_j)
    is nonnegative, and strictly positive whenever 0 < sum(m) < sum(n)
    and there are at least two blocks.  With a single block the two
    sides coincide for every m, so the gap is identically zero there.
    """
    n = tuple(n)
    m = tuple(m)
    a = tuple(Fraction(x) for x in a)
    if not (len(n) == len(m) == len(a)):
        raise ValueError("n, m, a must have equal length")
    if not n:
        raise ValueError("need at least one flag piece")
    for x in n:
        if not isinstance(x, int) or isinstance(x, bool) or x < 1:
            raise ValueError(f"n entries must be positive integers: {n!r}")
    for x, cap in zip(m, n):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x <= cap:
            raise ValueError(f"need 0 <= m <= n componentwise: m={m!r}, n={n!r}")
    if a[0] <= 0 or a[-1] > 1:
        raise ValueError(f"weights must lie in (0, 1]: {a!r}")
    if any(x >= y for x, y in zip(a, a[1:])):
        raise ValueError(f"weights must be strictly increasing: {a!r}")

    total_m = sum(m)
    total_n = sum(n)
    lhs = total_m * (total_n - total_m) + total_m * sum(
        n_j * a_j for n_j, a_j in zip(n, a)
    )
    spent = partial_sums(m)
    rhs = sum(
        used * (n_j - m_j) for used, n_j, m_j in zip(spent, n, m)
    ) + total_n * sum(m_j * a_j for m_j, a_j in zip(m, a))
    return lhs - rhs


def quot_codim_bounds(r: int, g_tilde: int, has_parabolic: bool):
    """Codimension lower bounds on the rank-r quot-scheme strata.

    Returns (semistable minus stable, full minus semistable): the first is
    (r-1)(g_tilde-1)+1 with marked points and (r-1)(g_tilde-1) without;
    the second is (r-1)(g_tilde-1)+1 either way.  Bounds only; attainment
    is not claimed.
    """
    base = (r - 1) * (g_tilde - 1)
    ss_minus_s = base + 1 if has_parabolic else base
    return ss_minus_s, base + 1


def gps_codim_bounds(r: int, g_tilde: int, has_parabolic: bool):
    """Codimension lower bounds for the generalized-parabolic strata.

    Returns (complement of the semistable locus, nonstable locus): the
    first is (r-1)*g_tilde+1; the second drops the +1 when there are no
    marked points.  Bounds only; attainment is not claimed.
    """
    base = (r - 1) * g_tilde
    nonstable = base + 1 if has_parabolic else base
    return base + 1, nonstable


def double_det_dim(a: int, b: int, p: int, q: int, r: int) -> int:
    """Dimension a(r+p) + b(r+q) - a^2 - b^2 - ab of a double determinantal variety.

    Matrix pairs (X, Y) of shapes p x r and r x q with XY = 0, rank X <= a,
    rank Y <= b; requires 0 <= a <= min(p, r), 0 <= b <= min(q, r), a+b <= r.
    """
    for name, value in (("a", a), ("b", b), ("p", p), ("q", q), ("r", r)):
        if not isinstance(value, int) or isinstance(value, bool) or value < 0:
            raise ValueError(f"{name} must be a nonnegative integer, got {value!r}")
    if a > min(p, r):
        raise ValueError(f"need a <= min(p, r): a={a}, p={p}, r={r}")
    if b > min(q, r):
        raise ValueError(f"need b <= min(q, r): b={b}, q={q}, r={r}")
    if a + b > r:
        raise ValueError(f"need a + b <= r: a={a}, b={b}, r={r}")
    return a * (r + p) + b * (r + q) - a * a - b * b - a * b


def complete_intersection_height(r: int, r_i: int) -> int:
    """Height r_i(r - r_i) of the ideal cutting the variety of the pair (r_i, r - r_i).

    Cross-checked against the ambient dimension r*r_i + r*(r - r_i) = r^2
    minus double_det_dim at a = p = r_i, b = q = r - r_i.
    """
    if not isinstance(r, int) or not isinstance(r_i, int) or not 0 <= r_i <= r:
        raise ValueError(f"need 0 <= r_i <= r, got r_i={r_i!r}, r={r!r}")
    height = r_i * (r - r_i)
    ambient = r * r
    variety = double_det_dim(r_i, r - r_i, r_i, r - r_i, r)
    if height != ambient - variety:
        raise ArithmeticError(
            f"height {height} does not reconcile with ambient {ambient} - dim {variety}"
        )
    return height


def telescoping_check(flag: FlagType) -> bool:
    """Evaluate r(n_{l+1} - r) + sum_i r_i (n_i + n_{i+1}) exactly.

    Always true; kept as a regression guard on the r_i / n_i bookkeeping.
    """
    flag = FlagType(flag)
    r = flag.rank
    sums = flag.partial_sums()
    value = r * (flag[-1] - r) + sum(
        sums[i] * (flag[i] + flag[i + 1]) for i in range(len(flag) - 1)
    )
    return value == 0
