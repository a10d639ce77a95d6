"""Exact rational helpers shared by the counting code."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

# Largest magnitude for which int64 subset sums cannot overflow.
_INT64_SAFE = 2**62


def to_fraction(x) -> Fraction:
    """Exact conversion; strings may be decimals (``"0.9"``) or ``"p/q"``.

    Floats are converted through ``repr`` so ``0.9`` means nine tenths.
    """
    if isinstance(x, Fraction):
        return x
    if isinstance(x, float):
        return Fraction(repr(x))
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not a rational number: {x!r}") from exc
    return Fraction(x)


def parse_values(text: str) -> list[Fraction]:
    """Comma-separated decimal or ``p/q`` values."""
    if not text.strip():
        raise ValueError("empty value list")
    parts = [s.strip() for s in text.split(",")]
    if not all(parts):
        raise ValueError(f"empty entry in value list {text!r}")
    return [to_fraction(p) for p in parts]


def fraction_text(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


def scale_to_int(values: Iterable[Fraction]) -> list[int]:
    """Multiply by the common denominator; signs and order of all subset
    sums are preserved exactly."""
    values = [to_fraction(v) for v in values]
    d = math.lcm(*(v.denominator for v in values)) if values else 1
    return [v.numerator * (d // v.denominator) for v in values]


def int_array(ints: Sequence[int]) -> np.ndarray:
    """int64 array when every subset sum fits, otherwise a Python-int object array."""
    bound = sum(abs(i) for i in ints)
    return np.array(ints, dtype=np.int64 if bound < _INT64_SAFE else object)


def subset_sums(ints: Sequence[int]) -> np.ndarray:
    """All 2**k subset sums; entry ``b`` is the sum over the set bits of ``b``."""
    arr = int_array(ints)
    sums = np.zeros(1, dtype=arr.dtype)
    for v in arr:
        sums = np.concatenate((sums, sums + v))
    return sums
