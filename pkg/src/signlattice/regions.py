"""The six-region split of S(n, r) for 0 < r < n.

``S1`` holds the strings whose negative side contains the deepest bar index
``n - r``; ``S2`` holds the rest.  Each half is split again by the positive
side: full (``PLUS``), empty (``MINUS``) or anything in between (``PM``).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np

from .lattice import LatticeString, Shape, lattice

__all__ = [
    "Region",
    "classify",
    "region_mask",
    "special",
    "region_size",
    "LemmaReport",
    "check_lemma_properties",
]


class Region(enum.Enum):
    S1_PLUS = "S1+"
    S1_PM = "S1+-"
    S1_MINUS = "S1-"
    S2_PLUS = "S2+"
    S2_PM = "S2+-"
    S2_MINUS = "S2-"

    @property
    def half(self) -> int:
        return 1 if self.name.startswith("S1") else 2


def classify(w: LatticeString) -> Region:
    s = w.shape
    s.require_negatives()
    first = (w.neg >> (s.m - 1)) & 1
    if w.pos == s.pos_full:
        return Region.S1_PLUS if first else Region.S2_PLUS
    if w.pos == 0:
        return Region.S1_MINUS if first else Region.S2_MINUS
    return Region.S1_PM if first else Region.S2_PM


def region_mask(shape: Shape, region: Region) -> np.ndarray:
    """Boolean mask over the canonical enumeration selecting ``region``."""
    shape.require_negatives()
    lat = lattice(shape)
    in_s1 = ((lat.neg >> (shape.m - 1)) & 1).astype(bool)
    half = in_s1 if region.half == 1 else ~in_s1
    if region.name.endswith("PLUS"):
        side = lat.pos == shape.pos_full
    elif region.name.endswith("MINUS"):
        side = lat.pos == 0
    else:
        side = (lat.pos != 0) & (lat.pos != shape.pos_full)
    return half & side


def special(shape: Shape, name: str) -> LatticeString:
    """Named elements: ``theta`` (all padding), ``Theta`` (everything present),
    ``alpha`` (minimum of S2+-), ``b1`` (minimum of S1+-), ``t1`` (maximum of S1+-)."""
    shape.require_negatives()
    m = shape.m
    table = {
        "theta": (0, 0),
        "Theta": (shape.pos_full, shape.neg_full),
        "alpha": (1, (1 << (m - 1)) - 1),
        "b1": (1, shape.neg_full),
        "t1": (shape.pos_full ^ 1, 1 << (m - 1)),
    }
    try:
        pos, neg = table[name]
    except KeyError:
        raise ValueError(f"unknown special element {name!r}; choose from {sorted(table)}") from None
    return LatticeString(shape, pos, neg)


def region_size(shape: Shape, region: Region) -> int:
    shape.require_negatives()
    half = 1 << (shape.m - 1)
    if region in (Region.S1_PM, Region.S2_PM):
        return ((1 << shape.r) - 2) * half
    return half


@dataclass
class LemmaReport:
    shape: Shape
    results: dict[str, bool] = field(default_factory=dict)
    counterexamples: dict[str, list[str]] = field(default_factory=dict)

    @property
    def ok(self) -> bool:
        return all(self.results.values())

    def to_dict(self) -> dict:
        return {"n": self.shape.n, "r": self.shape.r, "results": self.results,
                "counterexamples": self.counterexamples}


def check_lemma_properties(shape: Shape, limit: int = 5) -> LemmaReport:
    """Exhaustively check the five region identities; up to ``limit``
    counterexamples are kept per failing item."""
    shape.require_negatives()
    lat = lattice(shape)
    R = {reg: region_mask(shape, reg) for reg in Region}
    theta, Theta = special(shape, "theta"), special(shape, "Theta")
    one = lambda w: lat.mask_of([w])  # noqa: E731

    checks = {
        # (bad elements) for each item; empty means the item holds
        "i": lat.upset(one(Theta)) ^ (R[Region.S1_PLUS] | R[Region.S2_PLUS]),
        "ii": lat.downset(one(theta)) ^ (R[Region.S1_MINUS] | R[Region.S2_MINUS]),
        "iii": lat.upset(R[Region.S2_PM]) & ~(R[Region.S2_PM] | R[Region.S2_PLUS]),
        "iv": lat.downset(R[Region.S1_PM]) & ~(R[Region.S1_PM] | R[Region.S1_MINUS]),
    }
    comp = np.zeros(len(lat), dtype=bool)
    comp[lat.complement_index[R[Region.S1_PM]]] = True
    checks["v"] = comp ^ R[Region.S2_PM]

    report = LemmaReport(shape)
    for item, bad in checks.items():
        report.results[item] = not bad.any()
        report.counterexamples[item] = [str(w) for w in lat.elements(bad)[:limit]]
    return report
