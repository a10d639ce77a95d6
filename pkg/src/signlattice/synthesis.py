"""Boolean maps in W+(n, r) with a prescribed number of positive values.

For every ``q`` between ``2**(n-1)`` and ``2**n - 2**(n-r)`` the map is
built from the minimizer map (all of S1+- negative) by switching on a
top-down slice of S1+-: write ``p = q - 2**(n-1)`` as the size of the top
``k + 1`` rank levels of S1+- plus ``s`` further elements from the next
level.  The accompanying basis splits the two boundary levels against the
chosen elements, and decides whether the minimum ``alpha`` of S2+- must be
added to ``Y+`` explicitly.

Levels are counted from the top of S1+-: level 0 is ``{t1}``, level ``R``
is ``{b1}``.  Inside a level elements keep the canonical enumeration order,
and the ``s`` chosen elements are the first ``s`` of their level.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from .boolmaps import (
    AxiomReport,
    Basis,
    BooleanMap,
    check_basis,
    check_bm_axioms,
    map_from_basis,
    positive_count,
)
from .lattice import LatticeString, Shape, ShapeError, complement, lattice
from .regions import Region, region_mask, special
from .weights import eta, gamma, induced_map, maximizer, minimizer

__all__ = [
    "LevelDecomposition",
    "rank_levels",
    "decompose",
    "synthesize_map",
    "synthesize_basis",
    "SynthesisReport",
    "verify_synthesis",
]


def _check_q(shape: Shape, q: int) -> None:
    shape.require_negatives()
    lo, hi = gamma(shape), eta(shape)
    if not lo <= q <= hi:
        raise ValueError(f"q={q} outside the valid interval [{lo}, {hi}] for {shape}")


@dataclass
class LevelDecomposition:
    shape: Shape
    R: int
    levels: list[list[LatticeString]]
    betas: list[int]
    p: int | None = None
    k: int | None = None
    s: int | None = None
    v_chosen: list[LatticeString] = field(default_factory=list)
    # (w_1..w_t above some chosen v, the rest of level k)
    t_split: tuple[list[LatticeString], list[LatticeString]] = ((), ())
    # (z_1..z_mz not below the unchosen v's, the rest of level k+2)
    z_split: tuple[list[LatticeString], list[LatticeString]] = ((), ())

    @property
    def m_z(self) -> int:
        return len(self.z_split[0])

    @property
    def t_plus(self) -> list[LatticeString]:
        return list(self.v_chosen) + list(self.t_split[1])

    @property
    def t_minus(self) -> list[LatticeString]:
        chosen = set(self.v_chosen)
        rest = [v for v in self.levels[self.k + 1] if v not in chosen]
        return rest + list(self.z_split[0])

    @property
    def case(self) -> str:
        """``"a1"`` when alpha already lies above T+, ``"a2"`` otherwise."""
        lat = lattice(self.shape)
        up = lat.upset(lat.mask_of(self.t_plus))
        return "a1" if up[special(self.shape, "alpha").index] else "a2"

    def to_json(self) -> dict:
        out = {"R": self.R, "betas": list(self.betas), "p": self.p, "k": self.k, "s": self.s}
        if self.k is not None:
            out["case"] = self.case
            out["v_chosen"] = [str(v) for v in self.v_chosen]
        return out


def rank_levels(shape: Shape) -> LevelDecomposition:
    """Rank levels of S1+-, top-down, heights taken inside S1+- itself."""
    shape.require_negatives()
    if shape.r == 1:
        raise ShapeError("S1+- is empty for r = 1; the minimizer already covers that case")
    R, levels = _levels(shape)
    return LevelDecomposition(shape, R, [list(lv) for lv in levels], [len(lv) for lv in levels])


@lru_cache(maxsize=64)
def _levels(shape: Shape) -> tuple[int, tuple[tuple[LatticeString, ...], ...]]:
    lat = lattice(shape)
    inside = region_mask(shape, Region.S1_PM)
    lo, hi = lat.edges
    keep = inside[lo] & inside[hi]
    lo, hi = lo[keep], hi[keep]  # already sorted by rank of the lower end

    # longest chain from b1 within the induced cover graph
    height = np.full(len(lat), -1, dtype=np.int64)
    height[special(shape, "b1").index] = 0
    for e in range(len(lo)):
        if height[lo[e]] >= 0 and height[lo[e]] + 1 > height[hi[e]]:
            height[hi[e]] = height[lo[e]] + 1
    R = int(height[special(shape, "t1").index])
    levels = [lat.elements(inside & (height == R - i)) for i in range(R + 1)]
    if sum(map(len, levels)) != int(inside.sum()):
        raise AssertionError("S1+- is not connected to b1 through covers")
    return R, tuple(tuple(lv) for lv in levels)


def decompose(shape: Shape, q: int, v_chosen=None) -> LevelDecomposition:
    """Greedy split ``p = |levels 0..k| + s`` with ``0 <= s < beta[k+1]``.

    ``v_chosen`` overrides the default choice (the first ``s`` elements of
    level ``k+1``) with any ``s``-subset of that level.
    Raises ``ValueError`` for the boundary values of ``p``.
    """
    _check_q(shape, q)
    p = q - gamma(shape)
    total = eta(shape) - gamma(shape)
    if p == 0 or p == total:
        raise ValueError(f"p={p} is a boundary value; use the extremal construction")
    dec = rank_levels(shape)
    prefix = np.cumsum(dec.betas)
    k = int(np.searchsorted(prefix, p, side="right")) - 1
    s = p - int(prefix[k])
    level = dec.levels[k + 1]
    if v_chosen is None:
        chosen = level[:s]
    else:
        chosen = sorted(set(v_chosen), key=lambda w: w.index)
        if len(chosen) != s or not set(chosen) <= set(level):
            raise ValueError(f"v_chosen must be {s} distinct elements of level {k + 1}")

    lat = lattice(shape)
    above = lat.upset(lat.mask_of(chosen))
    t_hit = [w for w in dec.levels[k] if above[w.index]]
    t_rest = [w for w in dec.levels[k] if not above[w.index]]
    unchosen = [v for v in level if v not in set(chosen)]
    below = lat.downset(lat.mask_of(unchosen))
    nxt = dec.levels[k + 2] if k + 2 <= dec.R else []
    z_free = [z for z in nxt if not below[z.index]]
    z_below = [z for z in nxt if below[z.index]]

    dec.p, dec.k, dec.s = p, k, s
    dec.v_chosen = list(chosen)
    dec.t_split = (t_hit, t_rest)
    dec.z_split = (z_free, z_below)
    return dec


def _base_positive(shape: Shape) -> np.ndarray:
    return (region_mask(shape, Region.S2_PM) | region_mask(shape, Region.S1_PLUS)
            | region_mask(shape, Region.S2_PLUS))


def _top_slice(dec: LevelDecomposition) -> np.ndarray:
    """Levels ``0..k`` plus the chosen elements of level ``k+1``."""
    lat = lattice(dec.shape)
    mask = lat.mask_of(w for lv in dec.levels[: dec.k + 1] for w in lv)
    mask[[v.index for v in dec.v_chosen]] = True
    return mask


def synthesize_map(shape: Shape, q: int, v_chosen=None) -> BooleanMap:
    _check_q(shape, q)
    p = q - gamma(shape)
    if shape.r == 1 or p == 0:
        return induced_map(minimizer(shape))
    if q == eta(shape):
        return induced_map(maximizer(shape))
    dec = decompose(shape, q, v_chosen)
    return BooleanMap(shape, _base_positive(shape) | _top_slice(dec))


def synthesize_basis(shape: Shape, q: int, v_chosen=None) -> Basis | None:
    """Basis generating :func:`synthesize_map`; ``None`` for the boundary
    values of ``q`` (and for ``r = 1``), where no basis is constructed."""
    _check_q(shape, q)
    if shape.r == 1 or q in (gamma(shape), eta(shape)):
        return None
    dec = decompose(shape, q, v_chosen)
    theta = special(shape, "theta")
    y_plus = set(dec.t_plus)
    if dec.case == "a2":
        y_plus.add(special(shape, "alpha"))
    return Basis(frozenset(y_plus), frozenset(dec.t_minus) | {theta})


@dataclass
class SynthesisReport:
    shape: Shape
    q: int
    count: int
    axioms: AxiomReport
    case: str
    basis_checks: dict[str, bool] = field(default_factory=dict)
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return self.count == self.q and self.axioms.ok and all(self.basis_checks.values())

    def to_json(self) -> dict:
        return {
            "n": self.shape.n, "r": self.shape.r, "q": self.q, "count": self.count,
            "case": self.case, "bm1": self.axioms.bm1, "bm2": self.axioms.bm2,
            "bm3": self.axioms.bm3, "basis": self.basis_checks, "ok": self.ok,
            "problems": self.problems + self.axioms.violations,
        }


def verify_synthesis(shape: Shape, q: int) -> SynthesisReport:
    A = synthesize_map(shape, q)
    report = SynthesisReport(shape, q, positive_count(A), check_bm_axioms(A), "extremal")
    if report.count != q:
        report.problems.append(f"map has {report.count} positives, expected {q}")
    basis = synthesize_basis(shape, q)
    if basis is None:
        return report

    dec = decompose(shape, q)
    report.case = dec.case
    lat = lattice(shape)
    b = check_basis(basis)
    report.basis_checks.update(b1=b.b1, b2=b.b2, b3=b.b3)
    report.problems += b.violations

    yp = lat.mask_of(basis.y_plus)
    ymc = lat.mask_of(complement(w) for w in basis.y_minus)
    ym = lat.mask_of(basis.y_minus)
    positive_side = _base_positive(shape) | _top_slice(dec)
    levels_mask = lat.mask_of(w for lv in dec.levels[dec.k + 2:] for w in lv)
    unchosen = lat.mask_of(v for v in dec.levels[dec.k + 1] if v not in set(dec.v_chosen))
    negative_side = (levels_mask | unchosen | region_mask(shape, Region.S1_MINUS)
                     | region_mask(shape, Region.S2_MINUS))
    first = np.array_equal(lat.upset(yp) | lat.upset(ymc), positive_side)
    second = np.array_equal(lat.downset(ym), negative_side)
    report.basis_checks.update(first_identity=first, second_identity=second)
    if not (first and second):
        report.problems.append("set identities for the basis do not hold")

    if b.ok:
        same = map_from_basis(basis) == A
    else:
        same = False
    report.basis_checks["map_from_basis"] = same
    if not same:
        report.problems.append("map generated by the basis differs from the synthesized map")
    return report
