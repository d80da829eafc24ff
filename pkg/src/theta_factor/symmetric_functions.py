"""Skew Schur expansion and Littlewood-Richardson coefficients.

Two deliberately separate routes are kept side by side: lr_coefficient
counts lattice-word tableaux directly, while skew_schur_expand evaluates
the Jacobi-Trudi determinant in the h-basis and converts to Schur terms
through horizontal-strip (Kostka) counts.  Tests insist the two agree.
"""

from __future__ import annotations

import json
from functools import lru_cache
from itertools import permutations

from .partitions import Partition, partitions_of

__all__ = [
    "ContainmentError",
    "SchurExpansion",
    "lr_coefficient",
    "rectangular_lr_is_delta",
    "skew_schur_expand",
]


class ContainmentError(ValueError):
    """The inner shape of a skew diagram sticks out of the outer one."""


class SchurExpansion:
    """A finite sum of Schur terms: partition -> positive multiplicity."""

    __slots__ = ("_terms",)

    def __init__(self, terms):
        clean = {}
        for key in sorted(Partition(p) for p in terms):
            coeff = terms[key]
            if not isinstance(coeff, int) or isinstance(coeff, bool) or coeff < 1:
                raise ValueError(f"multiplicity of {tuple(key)!r} must be a positive integer")
            clean[key] = coeff
        self._terms = clean

    @property
    def terms(self) -> dict:
        return dict(self._terms)

    def coefficient(self, p) -> int:
        return self._terms.get(Partition(p), 0)

    def items(self):
        return self._terms.items()

    def __iter__(self):
        return iter(self._terms)

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if isinstance(other, SchurExpansion):
            return self._terms == other._terms
        if isinstance(other, dict):
            return self._terms == {Partition(k): v for k, v in other.items()}
        return NotImplemented

    def __repr__(self):
        inner = ", ".join(f"{tuple(k)!r}: {v}" for k, v in self._terms.items())
        return f"SchurExpansion({{{inner}}})"

    def to_json_dict(self) -> dict:
        """Keys are JSON arrays of parts, e.g. {"[2,1]": 1}."""
        return {
            json.dumps(list(k), separators=(",", ":")): v
            for k, v in self._terms.items()
        }


def lr_coefficient(mu, nu, lam) -> int:
    """Littlewood-Richardson coefficient N of (mu, nu; lam).

    Counts fillings of the skew shape lam/mu with content nu whose rows
    weakly increase, columns strictly increase, and whose reverse reading
    word (right to left, top to bottom) is a lattice word.  Returns 0 on
    degree mismatch or when mu is not contained in lam.
    """
    mu, nu, lam = Partition(mu), Partition(nu), Partition(lam)
    if mu.size + nu.size != lam.size:
        return 0
    if not lam.contains(mu):
        return 0
    if nu.size == 0:
        return 1
    # the content of a lattice filling is always contained in the shape
    if not lam.contains(nu):
        return 0

    rows = len(lam)
    lamp = lam.padded(rows)
    mup = mu.padded(rows)
    k = len(nu)
    cells = [(i, j) for i in range(rows) for j in range(lamp[i] - 1, mup[i] - 1, -1)]
    remaining = list(nu)
    counts = [0] * (k + 1)
    grid = {}

    def place(idx):
        if idx == len(cells):
            return 1
        i, j = cells[idx]
        right = grid.get((i, j + 1))
        above = grid.get((i - 1, j)) if i > 0 else None
        lo = 1 if above is None else above + 1
        hi = k if right is None else right
        total = 0
        for v in range(lo, hi + 1):
            if remaining[v - 1] == 0:
                continue
            if v > 1 and counts[v] >= counts[v - 1]:
                continue
            counts[v] += 1
            remaining[v - 1] -= 1
            grid[(i, j)] = v
            total += place(idx + 1)
            counts[v] -= 1
            remaining[v - 1] += 1
        grid.pop((i, j), None)
        return total

    return place(0)


def _strip_extensions(cur, outer, size):
    """Shapes reachable from cur by adding a horizontal strip of the given size.

    All shapes are tuples padded to len(outer); no two added cells may
    share a column, which caps row i at the previous row's old length.
    """
    length = len(outer)

    def rec(i, acc, left):
        if i == length:
            if left == 0:
                yield tuple(acc)
            return
        cap = outer[i] if i == 0 else min(outer[i], cur[i - 1])
        hi = min(cap, cur[i] + left)
        for v in range(cur[i], hi + 1):
            acc.append(v)
            yield from rec(i + 1, acc, left - (v - cur[i]))
            acc.pop()

    yield from rec(0, [], size)


@lru_cache(maxsize=None)
def _kostka(nu, alpha) -> int:
    """Number of semistandard tableaux of shape nu and content alpha.

    Counted as chains of horizontal strips: step i grows the shape by
    alpha[i] cells with no two in one column.  Level-by-level dictionary
    of reachable shapes, so repeated subchains are shared.
    """
    nu = tuple(nu)
    alpha = tuple(alpha)
    if sum(alpha) != sum(nu):
        return 0
    length = len(nu)
    levels = {(0,) * length: 1}
    for s in alpha:
        grown = {}
        for cur, ways in levels.items():
            for ext in _strip_extensions(cur, nu, s):
                grown[ext] = grown.get(ext, 0) + ways
        if not grown:
            return 0
        levels = grown
    return levels.get(nu, 0)


def _perm_sign(w) -> int:
    inv = sum(1 for i in range(len(w)) for j in range(i + 1, len(w)) if w[i] > w[j])
    return -1 if inv % 2 else 1


def skew_schur_expand(lam, mu) -> SchurExpansion:
    """Expansion of the skew Schur function s_{lam/mu} in the Schur basis.

    Evaluates the Jacobi-Trudi determinant det(h_{lam_i - mu_j - i + j})
    by expanding over permutations, collecting equal h-products under one
    signed coefficient, then converts each h-product to Schur terms via
    Kostka numbers: the coefficient of s_nu is the signed sum of
    K(nu, degrees).  Partitions with more rows than the determinant size
    cannot receive a nonzero Kostka count (their first column would need
    more distinct entries than the content has), so the candidate list
    stops there.
    """
    lam = Partition(lam)
    mu = Partition(mu)
    if not lam.contains(mu):
        raise ContainmentError(f"{tuple(mu)!r} is not contained in {tuple(lam)!r}")
    n = max(len(lam), 1)
    lamp = lam.padded(n)
    mup = mu.padded(n)

    signed = {}
    for w in permutations(range(n)):
        degrees = []
        dead = False
        for i in range(n):
            t = lamp[i] - mup[w[i]] - i + w[i]
            if t < 0:
                dead = True
                break
            if t > 0:
                degrees.append(t)
        if dead:
            continue
        key = tuple(sorted(degrees, reverse=True))
        signed[key] = signed.get(key, 0) + _perm_sign(w)
    signed = {key: c for key, c in signed.items() if c}

    degree = lam.size - mu.size
    terms = {}
    for nu in partitions_of(degree, max_parts=n):
        coeff = sum(c * _kostka(tuple(nu.padded(n)), alpha) for alpha, c in signed.items())
        if coeff:
            terms[nu] = coeff
    return SchurExpansion(terms)


def rectangular_lr_is_delta(mu, r: int, m: int):
    """Check that against the r x m rectangle, mu pairs only with its complement.

    Returns (complement, 1) after verifying by direct tableau counts that
    the coefficient is 1 at the box complement of mu and 0 at every other
    partition of the complementary size.
    """
    from .partitions import complement_in_box

    mu = Partition(mu)
    comp = complement_in_box(mu, r, m)
    rect = Partition((m,) * r)
    degree = rect.size - mu.size
    for nu in partitions_of(degree):
        expected = 1 if nu == comp else 0
        got = lr_coefficient(mu, nu, rect)
        if got != expected:
            raise ArithmeticError(
                f"rectangle pairing failed at nu={tuple(nu)!r}: got {got}, expected {expected}"
            )
    return comp, 1
