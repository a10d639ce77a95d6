"""Counting non-negative subset sums of a list of rationals.

Independent of the lattice code: these functions only see a list of
numbers.  The empty subset is never counted, so ``n`` non-negative values
give ``2**n - 1``.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

import numpy as np

from ._exact import parse_values, scale_to_int, subset_sums, to_fraction

__all__ = [
    "RealMultiset",
    "count_nonneg_subsets_naive",
    "count_nonneg_subsets_mitm",
    "classify_signature",
    "NAIVE_MAX",
    "MITM_MAX",
]

NAIVE_MAX = 24
MITM_MAX = 48


@dataclass(frozen=True)
class RealMultiset:
    values: tuple

    def __post_init__(self):
        vals = tuple(to_fraction(v) for v in self.values)
        if not vals:
            raise ValueError("a multiset needs at least one value")
        object.__setattr__(self, "values", vals)

    @classmethod
    def parse(cls, text: str) -> "RealMultiset":
        return cls(tuple(parse_values(text)))

    @property
    def n(self) -> int:
        return len(self.values)

    @property
    def r(self) -> int:
        return sum(1 for v in self.values if v >= 0)

    @property
    def total(self) -> Fraction:
        return sum(self.values, Fraction(0))


def _as_multiset(m) -> RealMultiset:
    return m if isinstance(m, RealMultiset) else RealMultiset(tuple(m))


def count_nonneg_subsets_naive(m: RealMultiset | Iterable) -> int:
    """Enumerate every nonempty subset."""
    m = _as_multiset(m)
    if m.n > NAIVE_MAX:
        raise ValueError(f"naive count limited to n <= {NAIVE_MAX}, got {m.n}")
    sums = [0]
    for v in scale_to_int(m.values):
        sums += [s + v for s in sums]
    return sum(1 for s in sums[1:] if s >= 0)


def count_nonneg_subsets_mitm(m: RealMultiset | Iterable) -> int:
    """Meet in the middle: split the (descending) values in halves, sort
    the subset sums of one half and binary-search each sum of the other."""
    m = _as_multiset(m)
    if m.n > MITM_MAX:
        raise ValueError(f"meet-in-the-middle count limited to n <= {MITM_MAX}, got {m.n}")
    ints = sorted(scale_to_int(m.values), reverse=True)
    half = len(ints) // 2
    left = subset_sums(ints[:half])
    right = np.sort(subset_sums(ints[half:]))
    if left.dtype == object or right.dtype == object:
        rs = [int(x) for x in right]
        pairs = sum(len(rs) - bisect.bisect_left(rs, -int(x)) for x in left)
    else:
        pairs = int((len(right) - np.searchsorted(right, -left, side="left")).sum())
    return pairs - 1  # both halves empty


def classify_signature(m: RealMultiset | Iterable) -> dict:
    m = _as_multiset(m)
    return {"n": m.n, "r": m.r, "in_W": m.total >= 0}
