"""Parabolic bookkeeping: flags, weights, marked points, and the level balance.

All validation happens when values are constructed, so the arithmetic
operations below never see malformed data.  Rationals are exact.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, replace
from fractions import Fraction

from .partitions import partial_sums

__all__ = [
    "FlagType",
    "MarkedPoint",
    "ModuliSpec",
    "WeightVector",
    "check_star",
    "gps_slope",
    "pardeg",
]


class FlagType(tuple):
    """Multiplicities (n_1, ..., n_{l+1}) of the graded pieces of a flag."""

    def __new__(cls, multiplicities):
        multiplicities = tuple(multiplicities)
        if not multiplicities:
            raise ValueError("a flag needs at least one piece")
        for n in multiplicities:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ValueError(f"flag multiplicities must be positive integers: {multiplicities!r}")
        return super().__new__(cls, multiplicities)

    @property
    def rank(self) -> int:
        return sum(self)

    @property
    def steps(self) -> int:
        """The number l of proper subspaces in the flag."""
        return len(self) - 1

    def partial_sums(self) -> tuple[int, ...]:
        """r_i = n_1 + ... + n_i for i = 1..l+1."""
        return partial_sums(self)


class WeightVector(tuple):
    """Strictly increasing nonnegative integer weights (a_1, ..., a_{l+1})."""

    def __new__(cls, weights):
        weights = tuple(weights)
        if not weights:
            raise ValueError("a weight vector needs at least one entry")
        for a in weights:
            if not isinstance(a, int) or isinstance(a, bool) or a < 0:
                raise ValueError(f"weights must be nonnegative integers: {weights!r}")
        if any(x >= y for x, y in zip(weights, weights[1:])):
            raise ValueError(f"weights must be strictly increasing: {weights!r}")
        return super().__new__(cls, weights)

    def differences(self) -> tuple[int, ...]:
        """d_i = a_{i+1} - a_i for i = 1..l."""
        return tuple(b - a for a, b in zip(self, self[1:]))


@dataclass(frozen=True)
class MarkedPoint:
    """A marked point: label, flag type, weights, and polarization weight."""

    label: str
    flag: FlagType
    weights: WeightVector
    alpha: int

    def __post_init__(self):
        object.__setattr__(self, "flag", FlagType(self.flag))
        object.__setattr__(self, "weights", WeightVector(self.weights))
        if not isinstance(self.label, str) or not self.label:
            raise ValueError("point label must be a nonempty string")
        if len(self.flag) != len(self.weights):
            raise ValueError(
                f"point {self.label!r}: flag length {len(self.flag)} != weight length {len(self.weights)}"
            )
        if not isinstance(self.alpha, int) or isinstance(self.alpha, bool) or self.alpha < 0:
            raise ValueError(f"point {self.label!r}: alpha must be a nonnegative integer")

    def star_term(self) -> int:
        """Sum of d_i * r_i over the flag steps."""
        r_i = self.flag.partial_sums()
        return sum(d * r for d, r in zip(self.weights.differences(), r_i))

    def to_json_dict(self) -> dict:
        return {
            "label": self.label,
            "flag": list(self.flag),
            "weights": list(self.weights),
            "alpha": self.alpha,
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "MarkedPoint":
        try:
            return cls(
                label=data["label"],
                flag=FlagType(data["flag"]),
                weights=WeightVector(data["weights"]),
                alpha=data["alpha"],
            )
        except KeyError as missing:
            raise ValueError(f"marked point is missing field {missing}") from None


@dataclass(frozen=True)
class ModuliSpec:
    """The data (genus, rank, degree, level, ell, marked points).

    The quantity n = degree + rank*(1 - genus) used by the balance
    condition is always derived, never stored.
    """

    genus: int
    rank: int
    degree: int
    level: int
    ell: int
    points: tuple = ()

    def __post_init__(self):
        if not isinstance(self.genus, int) or self.genus < 0:
            raise ValueError(f"genus must be a nonnegative integer, got {self.genus!r}")
        if not isinstance(self.rank, int) or self.rank < 1:
            raise ValueError(f"rank must be a positive integer, got {self.rank!r}")
        if not isinstance(self.degree, int) or isinstance(self.degree, bool):
            raise ValueError(f"degree must be an integer, got {self.degree!r}")
        if not isinstance(self.level, int) or self.level < 1:
            raise ValueError(f"level must be a positive integer, got {self.level!r}")
        if not isinstance(self.ell, int) or self.ell < 1:
            raise ValueError(f"ell must be a positive integer, got {self.ell!r}")
        object.__setattr__(self, "points", tuple(self.points))
        for pt in self.points:
            if not isinstance(pt, MarkedPoint):
                raise ValueError(f"points must be MarkedPoint values, got {pt!r}")
            if pt.flag.rank != self.rank:
                raise ValueError(
                    f"point {pt.label!r}: flag multiplicities sum to {pt.flag.rank}, rank is {self.rank}"
                )
            if pt.weights[-1] > self.level:
                raise ValueError(
                    f"point {pt.label!r}: weight {pt.weights[-1]} exceeds level {self.level}"
                )

    def derived_n(self) -> int:
        return self.degree + self.rank * (1 - self.genus)

    def with_points(self, extra) -> "ModuliSpec":
        return replace(self, points=self.points + tuple(extra))

    def to_json_dict(self) -> dict:
        return {
            "genus": self.genus,
            "rank": self.rank,
            "degree": self.degree,
            "level": self.level,
            "ell": self.ell,
            "points": [pt.to_json_dict() for pt in self.points],
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "ModuliSpec":
        if not isinstance(data, dict):
            raise ValueError("spec must be a JSON object")
        try:
            return cls(
                genus=data["genus"],
                rank=data["rank"],
                degree=data["degree"],
                level=data["level"],
                ell=data["ell"],
                points=tuple(
                    MarkedPoint.from_json_dict(p) for p in data.get("points", ())
                ),
            )
        except KeyError as missing:
            raise ValueError(f"spec is missing field {missing}") from None

    def canonical_json(self) -> str:
        return json.dumps(self.to_json_dict(), sort_keys=True, separators=(",", ":"))

    def sha256(self) -> str:
        return hashlib.sha256(self.canonical_json().encode()).hexdigest()


def check_star(spec: ModuliSpec):
    """Evaluate the level balance condition.

    lhs = sum over points of (sum_i d_i * r_i + rank * alpha) + rank * ell;
    rhs = level * (degree + rank * (1 - genus)).  Returns (lhs, rhs,
    lhs == rhs).  Malformed weight or flag data never reaches this point;
    it is rejected when the spec is built.
    """
    r = spec.rank
    lhs = r * spec.ell
    for pt in spec.points:
        lhs += pt.star_term() + r * pt.alpha
    rhs = spec.level * spec.derived_n()
    return lhs, rhs, lhs == rhs


def pardeg(degree: int, points, k: int) -> Fraction:
    """Parabolic degree: degree + (1/k) * sum over points of sum_i n_i * a_i."""
    if not isinstance(k, int) or k < 1:
        raise ValueError(f"level k must be a positive integer, got {k!r}")
    total = Fraction(degree)
    for pt in points:
        total += Fraction(sum(n * a for n, a in zip(pt.flag, pt.weights)), k)
    return total


def gps_slope(degree: int, q_dim: int, rank: int) -> Fraction:
    """Slope (degree - q_dim) / rank of a generalized parabolic sheaf."""
    if not isinstance(rank, int) or rank < 1:
        raise ValueError(f"rank must be a positive integer, got {rank!r}")
    if not isinstance(q_dim, int) or isinstance(q_dim, bool) or q_dim < 0:
        raise ValueError(f"quotient dimension must be a nonnegative integer, got {q_dim!r}")
    return Fraction(degree - q_dim, rank)
