"""Weight functions on the extended index set and the boolean maps they induce.

A weight function gives every tilde index a non-negative value and every
bar index a negative value, with::

    f(r~) >= ... >= f(1~) >= 0 > f(1-) >= ... >= f((n-r)-)

and a non-negative total.  ``pos_values[i]`` is the value of tilde index
``i + 1`` and ``neg_values[j]`` the value of bar index ``j + 1``; so
``pos_values`` is non-decreasing and ``neg_values`` non-increasing.

Text and JSON forms list values the other way round on the positive side,
as a row ``f(r~), ..., f(1~) | f(1-), ..., f((n-r)-)``; see :meth:`WeightFunction.row`.

All arithmetic is exact (``fractions.Fraction``); a subset sum of exactly
zero counts as non-negative.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from ._exact import fraction_text, scale_to_int, subset_sums, to_fraction
from .boolmaps import BooleanMap, positive_count
from .lattice import LatticeString, Shape, ShapeError, lattice

__all__ = [
    "WeightFunction",
    "validate",
    "sigma",
    "sum_table",
    "induced_map",
    "alpha",
    "minimizer",
    "maximizer",
    "sample_random",
    "search_realizing",
    "gamma",
    "eta",
]


def gamma(shape: Shape) -> int:
    """Fewest non-negative nonempty subset sums over all weight functions."""
    return 1 << (shape.n - 1)


def eta(shape: Shape) -> int:
    """Most non-negative nonempty subset sums over all weight functions."""
    return (1 << shape.n) - (1 << shape.m)


@dataclass(frozen=True)
class WeightFunction:
    shape: Shape
    pos_values: tuple
    neg_values: tuple

    def __post_init__(self):
        pos = tuple(to_fraction(v) for v in self.pos_values)
        neg = tuple(to_fraction(v) for v in self.neg_values)
        if len(pos) != self.shape.r or len(neg) != self.shape.m:
            raise ShapeError(
                f"{self.shape} needs {self.shape.r} positive and {self.shape.m} "
                f"negative values, got {len(pos)} and {len(neg)}"
            )
        object.__setattr__(self, "pos_values", pos)
        object.__setattr__(self, "neg_values", neg)

    @classmethod
    def from_row(cls, pos_row: Sequence, neg_row: Sequence) -> "WeightFunction":
        """Build from ``f(r~), ..., f(1~)`` and ``f(1-), ..., f((n-r)-)``."""
        shape = Shape(len(pos_row) + len(neg_row), len(pos_row))
        return cls(shape, tuple(reversed(pos_row)), tuple(neg_row))

    def row(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        return tuple(reversed(self.pos_values)), self.neg_values

    @property
    def values(self) -> tuple[Fraction, ...]:
        return self.pos_values + self.neg_values

    def __str__(self):
        p, q = self.row()
        return ",".join(map(fraction_text, p)) + " | " + ",".join(map(fraction_text, q))

    def to_json(self) -> dict:
        p, q = self.row()
        return {"n": self.shape.n, "r": self.shape.r,
                "pos": [fraction_text(v) for v in p], "neg": [fraction_text(v) for v in q]}

    @classmethod
    def from_json(cls, data) -> "WeightFunction":
        if isinstance(data, str):
            data = json.loads(data)
        wf = cls.from_row(data["pos"], data["neg"])
        if "n" in data and "r" in data and (int(data["n"]), int(data["r"])) != (wf.shape.n, wf.shape.r):
            raise ShapeError(f"declared shape ({data['n']},{data['r']}) does not match the values")
        return wf


def validate(wf: WeightFunction) -> list[str]:
    """Violations of the ordering and total-sum conditions; empty when valid."""
    out = []
    pos, neg = wf.pos_values, wf.neg_values
    if pos and pos[0] < 0:
        out.append(f"f(1~) = {pos[0]} is negative")
    for i in range(1, len(pos)):
        if pos[i] < pos[i - 1]:
            out.append(f"f({i + 1}~) = {pos[i]} < f({i}~) = {pos[i - 1]}")
    if neg and neg[0] >= 0:
        out.append(f"f(1-) = {neg[0]} is not negative")
    for j in range(1, len(neg)):
        if neg[j] > neg[j - 1]:
            out.append(f"f({j + 1}-) = {neg[j]} > f({j}-) = {neg[j - 1]}")
    total = sum(wf.values, Fraction(0))
    if total < 0:
        out.append(f"total {total} is negative")
    return out


def sigma(wf: WeightFunction, w: LatticeString) -> Fraction:
    if w.shape != wf.shape:
        raise ShapeError(f"shape mismatch: {wf.shape} vs {w.shape}")
    total = Fraction(0)
    for i, v in enumerate(wf.pos_values):
        if w.pos >> i & 1:
            total += v
    for j, v in enumerate(wf.neg_values):
        if w.neg >> j & 1:
            total += v
    return total


def sum_table(wf: WeightFunction) -> np.ndarray:
    """Sum function over the canonical enumeration, scaled by a positive
    integer so that it is exact and integral."""
    lat = lattice(wf.shape)
    ints = scale_to_int(wf.values)
    ps = subset_sums(ints[: wf.shape.r])
    ns = subset_sums(ints[wf.shape.r:])
    return ps[lat.pos] + ns[lat.neg]


def induced_map(wf: WeightFunction) -> BooleanMap:
    """P exactly where the sum is non-negative, except at the all-padding string."""
    mask = sum_table(wf) >= 0
    mask[LatticeString(wf.shape, 0, 0).index] = False
    return BooleanMap(wf.shape, mask)


def alpha(wf: WeightFunction) -> int:
    """Number of nonempty index subsets with a non-negative sum."""
    return positive_count(induced_map(wf))


def minimizer(shape: Shape) -> WeightFunction:
    shape.require_negatives()
    r, m = shape.r, shape.m
    neg = [-1] * (m - 1) + [m * (1 - r) - 1]
    return WeightFunction(shape, (m,) * r, tuple(neg))


def maximizer(shape: Shape) -> WeightFunction:
    shape.require_negatives()
    return WeightFunction(shape, (1,) * shape.r, (Fraction(-1, shape.m),) * shape.m)


def sample_random(shape: Shape, seed) -> WeightFunction:
    """Random valid weight function, deterministic in ``seed``.

    Values are small rationals, so ties and exactly-zero sums are common.
    Candidates are drawn until the total is non-negative.
    """
    rng = random.Random(seed)
    r, m = shape.r, shape.m
    while True:
        den = rng.choice((1, 1, 2, 3, 4, 10))
        hi = rng.choice((3, 6, 20, 100))
        pos = sorted(Fraction(rng.randint(0, hi), den) for _ in range(r))
        # spread controls how heavy the negatives are relative to the positives
        spread = rng.randint(1, max(1, 2 * -(-m // r)))
        neg = sorted((-Fraction(rng.randint(1, hi), den * spread) for _ in range(m)), reverse=True)
        wf = WeightFunction(shape, tuple(pos), tuple(neg))
        if sum(wf.values, Fraction(0)) >= 0:
            return wf


def _perturb(wf: WeightFunction, rng: random.Random) -> WeightFunction | None:
    vals = list(wf.values)
    i = rng.randrange(len(vals))
    step = Fraction(rng.choice((1, 1, 2, 5)), rng.choice((1, 2, 4, 8)))
    vals[i] += step if rng.random() < 0.5 else -step
    r = wf.shape.r
    pos, neg = sorted(vals[:r]), sorted(vals[r:], reverse=True)
    cand = WeightFunction(wf.shape, tuple(pos), tuple(neg))
    return None if validate(cand) else cand


def search_realizing(shape: Shape, q: int, budget: int = 2000, seed=0) -> WeightFunction | None:
    """Look for a weight function with exactly ``q`` non-negative nonempty
    subset sums.

    Tries the two extremal functions, then random restarts each followed by
    a greedy local walk.  ``None`` only means nothing was found within
    ``budget`` evaluations.
    """
    shape.require_negatives()
    if not gamma(shape) <= q <= eta(shape):
        raise ValueError(f"q={q} outside [{gamma(shape)}, {eta(shape)}] for {shape}")
    for wf in (minimizer(shape), maximizer(shape)):
        if alpha(wf) == q:
            return wf
    rng = random.Random(seed)
    spent = 2
    while spent < budget:
        cur = sample_random(shape, rng.getrandbits(64))
        dist = abs(alpha(cur) - q)
        spent += 1
        for _ in range(50):
            if dist == 0 or spent >= budget:
                break
            cand = _perturb(cur, rng)
            if cand is None:
                continue
            d = abs(alpha(cand) - q)
            spent += 1
            if d <= dist:
                cur, dist = cand, d
        if dist == 0:
            return cur
    return None
