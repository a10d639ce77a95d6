"""Total boolean maps on S(n, r), their axioms, and bases.

A map is stored as a boolean array over the canonical enumeration: ``True``
means the value P, ``False`` means N.

The axioms checked by :func:`check_bm_axioms`:

* BM1: the map is order-preserving;
* BM2: whenever ``A(w)`` is N, ``A(w^c)`` is P;
* BM3: ``A(10..0|0..0) = P``, ``A(theta) = N`` and ``A(Theta) = P``.

A basis ``<Y+ | Y->`` is a pair of disjoint antichains; when it satisfies B1
to B3 it determines the map whose positives are ``up(Y+) | up(complement(Y-))``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable

import numpy as np

from .lattice import (
    LatticeString,
    Shape,
    ShapeError,
    lattice,
    parse_string,
    complement,
)

__all__ = [
    "BasisError",
    "BooleanMap",
    "Basis",
    "AxiomReport",
    "BasisReport",
    "check_bm_axioms",
    "positive_count",
    "check_basis",
    "map_from_basis",
]


class BasisError(ValueError):
    """Raised for a pair of sets that cannot be (or is not) a basis."""


class BooleanMap:
    def __init__(self, shape: Shape, mask):
        mask = np.asarray(mask, dtype=bool)
        if mask.shape != (shape.size,):
            raise ShapeError(f"mask of length {mask.shape} does not fit {shape}")
        self.shape = shape
        self.mask = mask
        self.mask.flags.writeable = False

    @classmethod
    def from_positives(cls, shape: Shape, positives: Iterable[LatticeString]) -> "BooleanMap":
        return cls(shape, lattice(shape).mask_of(positives))

    @classmethod
    def constant(cls, shape: Shape, value: bool) -> "BooleanMap":
        return cls(shape, np.full(shape.size, value, dtype=bool))

    def __call__(self, w: LatticeString) -> bool:
        if w.shape != self.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {w.shape}")
        return bool(self.mask[w.index])

    def __eq__(self, other):
        if not isinstance(other, BooleanMap):
            return NotImplemented
        return self.shape == other.shape and np.array_equal(self.mask, other.mask)

    def __hash__(self):
        return hash((self.shape, self.mask.tobytes()))

    def __repr__(self):
        return f"BooleanMap({self.shape}, positives={positive_count(self)})"

    @property
    def positives(self) -> set[LatticeString]:
        return set(lattice(self.shape).elements(self.mask))

    def differences(self, other: "BooleanMap") -> list[LatticeString]:
        if other.shape != self.shape:
            raise ShapeError(f"shape mismatch: {self.shape} vs {other.shape}")
        return lattice(self.shape).elements(self.mask != other.mask)

    def to_json(self) -> dict:
        return {"n": self.shape.n, "r": self.shape.r,
                "positives": sorted(str(w) for w in self.positives)}

    @classmethod
    def from_json(cls, data) -> "BooleanMap":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            shape = Shape(int(data["n"]), int(data["r"]))
            texts = data["positives"]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"not a boolean map document: {exc}") from exc
        return cls.from_positives(shape, (parse_string(shape, t) for t in texts))


def positive_count(A: BooleanMap) -> int:
    return int(np.count_nonzero(A.mask))


@dataclass
class AxiomReport:
    bm1: bool
    bm2: bool
    bm3: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.bm1 and self.bm2 and self.bm3


def check_bm_axioms(A: BooleanMap, limit: int = 10) -> AxiomReport:
    """BM1 is checked on cover pairs only, which suffices by transitivity."""
    shape = A.shape
    lat = lattice(shape)
    mask = A.mask
    violations = []

    lo, hi = lat.edges
    bad = np.flatnonzero(mask[lo] & ~mask[hi])
    for e in bad[:limit]:
        violations.append(f"BM1: {lat.element(lo[e])} is P but its cover {lat.element(hi[e])} is N")

    bad2 = np.flatnonzero(~mask & ~mask[lat.complement_index])
    for i in bad2[:limit]:
        violations.append(f"BM2: {lat.element(i)} and its complement are both N")

    anchors = [
        (LatticeString(shape, 1, 0), True),
        (LatticeString(shape, 0, 0), False),
        (LatticeString(shape, shape.pos_full, shape.neg_full), True),
    ]
    bm3 = True
    for w, want in anchors:
        if bool(mask[w.index]) != want:
            bm3 = False
            violations.append(f"BM3: {w} should be {'P' if want else 'N'}")
    return AxiomReport(len(bad) == 0, len(bad2) == 0, bm3, violations)


@dataclass(frozen=True)
class Basis:
    """Ordered pair of disjoint antichains ``<y_plus | y_minus>``."""

    y_plus: frozenset
    y_minus: frozenset

    def __post_init__(self):
        object.__setattr__(self, "y_plus", frozenset(self.y_plus))
        object.__setattr__(self, "y_minus", frozenset(self.y_minus))
        everything = self.y_plus | self.y_minus
        if not everything:
            raise BasisError("a basis needs at least one element")
        shapes = {w.shape for w in everything}
        if len(shapes) != 1:
            raise ShapeError(f"basis mixes shapes {sorted(shapes)}")
        if self.y_plus & self.y_minus:
            common = sorted(str(w) for w in self.y_plus & self.y_minus)
            raise BasisError(f"Y+ and Y- share {common}")
        lat = lattice(self.shape)
        for name, ys in (("Y+", self.y_plus), ("Y-", self.y_minus)):
            if not lat.is_antichain(lat.mask_of(ys)):
                raise BasisError(f"{name} is not an antichain")

    @property
    def shape(self) -> Shape:
        return next(iter(self.y_plus | self.y_minus)).shape

    def to_json(self) -> dict:
        return {"y_plus": sorted(map(str, self.y_plus)),
                "y_minus": sorted(map(str, self.y_minus))}

    @classmethod
    def from_json(cls, shape: Shape, data) -> "Basis":
        if isinstance(data, str):
            data = json.loads(data)
        return cls(frozenset(parse_string(shape, t) for t in data["y_plus"]),
                   frozenset(parse_string(shape, t) for t in data["y_minus"]))


@dataclass
class BasisReport:
    b1: bool
    b2: bool
    b3: bool
    violations: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.b1 and self.b2 and self.b3


def _basis_sets(b: Basis):
    lat = lattice(b.shape)
    yp = lat.mask_of(b.y_plus)
    ym = lat.mask_of(b.y_minus)
    ymc = lat.mask_of(complement(w) for w in b.y_minus)
    return lat, yp, ym, ymc


def check_basis(b: Basis, limit: int = 10) -> BasisReport:
    lat, yp, ym, ymc = _basis_sets(b)
    down_plus = lat.downset(yp)
    up_union = lat.upset(yp) | lat.upset(ymc)
    down_minus = lat.downset(ym)

    bad1 = down_plus & ymc
    bad2 = up_union & down_minus
    bad3 = ~(up_union | down_minus)
    violations = []
    for tag, bad in (("B1", bad1), ("B2", bad2), ("B3", bad3)):
        for w in lat.elements(bad)[:limit]:
            violations.append(f"{tag}: {w}")
    return BasisReport(not bad1.any(), not bad2.any(), not bad3.any(), violations)


def map_from_basis(b: Basis) -> BooleanMap:
    report = check_basis(b)
    if not report.ok:
        raise BasisError("invalid basis: " + "; ".join(report.violations[:3]))
    lat, yp, _, ymc = _basis_sets(b)
    return BooleanMap(b.shape, lat.upset(yp) | lat.upset(ymc))
