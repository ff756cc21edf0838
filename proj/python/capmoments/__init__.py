"""Exact moment polynomials F(m, n) for zero-sum subset counts in F_p^d."""

from fractions import Fraction

from . import _core
from ._core import (
    ConsistencyError,
    ResourceLimitError,
    arbitrate_conventions,
    brute_force_moment,
    character,
    character_sum_a,
    connection_count,
    conventions,
    count_zero_sum_subsets,
    dim_specht,
    distribution,
    partitions,
)

__all__ = [
    "ConsistencyError",
    "Moment",
    "ResourceLimitError",
    "arbitrate_conventions",
    "brute_force_moment",
    "character",
    "character_sum_a",
    "connection_count",
    "conventions",
    "count_zero_sum_subsets",
    "dim_specht",
    "distribution",
    "moment",
    "partitions",
]


class Moment:
    """F(m, n) as exact coefficients in q, lowest degree first."""

    def __init__(self, raw):
        self.p = raw["p"]
        self.r = raw["r"]
        self.m = raw["m"]
        self.n = raw["n"]
        self.coeffs = [Fraction(int(num), int(den)) for num, den in raw["coeffs"]]
        self.text = raw["text"]
        self.ratio = raw["ratio"]
        self.ratio_latex = raw["ratio_latex"]

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def __call__(self, q):
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * q + c
        return acc

    def __eq__(self, other):
        return isinstance(other, Moment) and self.coeffs == other.coeffs

    def __repr__(self):
        return f"F({self.m},{self.n}) = {self.text}"


def moment(m, n, p=3, r=3, method="collapsed"):
    return Moment(_core.moment(m, n, p=p, r=r, method=method))
