"""The lattice S(n, r) of signed-index strings.

An element is a pair of index subsets: the tilde indices ``1..r`` that are
present (``pos``) and the bar indices ``1..n-r`` that are present (``neg``).
Both sides are stored as bit masks, bit ``i-1`` standing for index ``i``.

Written out, the positive side lists the present tilde indices in
descending order followed by ``0`` padding, and the negative side lists
``0`` padding followed by the present bar indices in ascending order, so
``(pos={1,3,4}, neg={1,3})`` in S(7, 4) is ``4310|013``.

The order compares the two padded sequences componentwise under
``bar(n-r) < ... < bar(1) < 0 < tilde(1) < ... < tilde(r)``.  Mapping
``tilde(i) -> i``, ``0 -> 0`` and ``bar(j) -> -j`` turns this into plain
integer comparison, which is what :func:`sequence` returns.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cached_property, lru_cache
from typing import Iterable

import numpy as np

__all__ = [
    "N_MAX",
    "ShapeError",
    "ParseError",
    "Shape",
    "LatticeString",
    "Lattice",
    "lattice",
    "make_string",
    "render_string",
    "parse_string",
    "sequence",
    "leq",
    "meet",
    "join",
    "complement",
    "to_subset",
    "enumerate_strings",
    "covers",
    "rank",
    "bottom",
    "top",
    "upset",
    "downset",
    "is_antichain",
]

#: Largest n for which operations touching all 2**n elements are allowed.
N_MAX = 24


class ShapeError(ValueError):
    """Raised for an invalid (n, r) pair or mismatched shapes."""


class ParseError(ValueError):
    """Raised when a string does not describe an element of S(n, r)."""


@dataclass(frozen=True, order=True)
class Shape:
    n: int
    r: int

    def __post_init__(self):
        if not (isinstance(self.n, int) and isinstance(self.r, int)):
            raise ShapeError(f"n and r must be integers, got {self.n!r}, {self.r!r}")
        if not 1 <= self.r <= self.n:
            raise ShapeError(f"need 1 <= r <= n, got n={self.n}, r={self.r}")

    @property
    def m(self) -> int:
        """Number of negative indices, n - r."""
        return self.n - self.r

    @property
    def size(self) -> int:
        return 1 << self.n

    @property
    def pos_full(self) -> int:
        return (1 << self.r) - 1

    @property
    def neg_full(self) -> int:
        return (1 << self.m) - 1

    def require_negatives(self) -> None:
        if self.r == self.n:
            raise ShapeError(f"operation needs 0 < r < n, got n={self.n}, r={self.r}")

    def check_enumerable(self, n_max: int | None = None) -> None:
        limit = N_MAX if n_max is None else n_max
        if self.n > limit:
            raise ShapeError(f"n={self.n} exceeds the enumeration limit {limit}")

    def __str__(self):
        return f"({self.n},{self.r})"


def _mask(indices: Iterable[int], bound: int, side: str) -> int:
    mask = 0
    for i in indices:
        if not isinstance(i, (int, np.integer)) or not 1 <= i <= bound:
            raise ShapeError(f"{side} index {i!r} outside 1..{bound}")
        mask |= 1 << (int(i) - 1)
    return mask


def _bits(mask: int) -> list[int]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return out


@dataclass(frozen=True)
class LatticeString:
    """An element of S(n, r), stored as two bit masks."""

    shape: Shape
    pos: int
    neg: int

    def __post_init__(self):
        if not 0 <= self.pos <= self.shape.pos_full:
            raise ShapeError(f"positive mask {self.pos} out of range for {self.shape}")
        if not 0 <= self.neg <= self.shape.neg_full:
            raise ShapeError(f"negative mask {self.neg} out of range for {self.shape}")

    @property
    def pos_set(self) -> frozenset[int]:
        return frozenset(_bits(self.pos))

    @property
    def neg_set(self) -> frozenset[int]:
        return frozenset(_bits(self.neg))

    @property
    def code(self) -> int:
        """Single integer ``pos << (n - r) | neg``; the canonical order sorts it descending."""
        return (self.pos << self.shape.m) | self.neg

    @property
    def index(self) -> int:
        """Position in :func:`enumerate_strings`."""
        return self.shape.size - 1 - self.code

    def __str__(self):
        return render_string(self)

    def __repr__(self):
        return f"LatticeString({self.shape.n},{self.shape.r},{render_string(self)!r})"


def make_string(shape: Shape, pos_set: Iterable[int] = (), neg_set: Iterable[int] = ()) -> LatticeString:
    return LatticeString(shape, _mask(pos_set, shape.r, "positive"), _mask(neg_set, shape.m, "negative"))


def _from_code(shape: Shape, code: int) -> LatticeString:
    return LatticeString(shape, code >> shape.m, code & shape.neg_full)


def _sides(w: LatticeString) -> tuple[list[int], list[int]]:
    """Padded symbols of each side as non-negative integers (0 is the padding)."""
    r, m = w.shape.r, w.shape.m
    pos = sorted(_bits(w.pos), reverse=True)
    neg = _bits(w.neg)
    return pos + [0] * (r - len(pos)), [0] * (m - len(neg)) + neg


def render_string(w: LatticeString) -> str:
    left, right = _sides(w)
    if max(w.shape.r, w.shape.m) <= 9:
        return "".join(map(str, left)) + "|" + "".join(map(str, right))
    return ",".join(map(str, left)) + "|" + ",".join(map(str, right))


_SIDE_RE = re.compile(r"^[0-9,\s]*$")


def _tokens(side: str, general: bool) -> list[int]:
    side = side.strip()
    if not side:
        return []
    if general:
        parts = [p.strip() for p in side.split(",")]
        if any(not p.isdigit() for p in parts):
            raise ParseError(f"malformed side {side!r}")
        return [int(p) for p in parts]
    if not side.isdigit():
        raise ParseError(f"malformed side {side!r}")
    return [int(c) for c in side]


def parse_string(shape: Shape, text: str) -> LatticeString:
    """Inverse of :func:`render_string`; accepts either text format."""
    if text.count("|") != 1:
        raise ParseError(f"expected exactly one '|' in {text!r}")
    left, right = text.split("|")
    if not (_SIDE_RE.match(left) and _SIDE_RE.match(right)):
        raise ParseError(f"malformed string {text!r}")
    general = "," in text
    pos_syms, neg_syms = _tokens(left, general), _tokens(right, general)
    if len(pos_syms) != shape.r or len(neg_syms) != shape.m:
        raise ParseError(
            f"{text!r} has sides of length {len(pos_syms)} and {len(neg_syms)}, "
            f"{shape} needs {shape.r} and {shape.m}"
        )
    for syms, bound, name in ((pos_syms, shape.r, "positive"), (neg_syms, shape.m, "negative")):
        nonzero = [s for s in syms if s]
        if len(set(nonzero)) != len(nonzero):
            raise ParseError(f"repeated nonzero symbol on the {name} side of {text!r}")
        if any(s > bound for s in nonzero):
            raise ParseError(f"{name} symbol out of range 1..{bound} in {text!r}")
    k = sum(1 for s in pos_syms if s)
    if pos_syms[:k] != sorted(pos_syms[:k], reverse=True) or any(pos_syms[k:]):
        raise ParseError(f"positive side of {text!r} must be descending, then zeros")
    k = sum(1 for s in neg_syms if not s)
    if any(neg_syms[:k]) or neg_syms[k:] != sorted(neg_syms[k:]):
        raise ParseError(f"negative side of {text!r} must be zeros, then ascending")
    return make_string(shape, [s for s in pos_syms if s], [s for s in neg_syms if s])


def sequence(w: LatticeString) -> tuple[int, ...]:
    """Padded symbol sequence with ``tilde(i) -> i``, ``0 -> 0``, ``bar(j) -> -j``."""
    left, right = _sides(w)
    return tuple(left) + tuple(-j for j in right)


def _from_sequence(shape: Shape, seq: Iterable[int]) -> LatticeString:
    seq = list(seq)
    return make_string(shape, [s for s in seq[: shape.r] if s], [-s for s in seq[shape.r:] if s])


def _same_shape(*ws: LatticeString) -> Shape:
    shape = ws[0].shape
    for w in ws[1:]:
        if w.shape != shape:
            raise ShapeError(f"shape mismatch: {shape} vs {w.shape}")
    return shape


def leq(v: LatticeString, w: LatticeString) -> bool:
    _same_shape(v, w)
    return all(a <= b for a, b in zip(sequence(v), sequence(w)))


def meet(v: LatticeString, w: LatticeString) -> LatticeString:
    shape = _same_shape(v, w)
    return _from_sequence(shape, map(min, sequence(v), sequence(w)))


def join(v: LatticeString, w: LatticeString) -> LatticeString:
    shape = _same_shape(v, w)
    return _from_sequence(shape, map(max, sequence(v), sequence(w)))


def complement(w: LatticeString) -> LatticeString:
    s = w.shape
    return LatticeString(s, s.pos_full ^ w.pos, s.neg_full ^ w.neg)


def to_subset(w: LatticeString) -> frozenset[tuple[str, int]]:
    """The subset of I(n, r); tilde indices as ``("+", i)``, bar indices as ``("-", j)``."""
    return frozenset([("+", i) for i in _bits(w.pos)] + [("-", j) for j in _bits(w.neg)])


def rank(w: LatticeString) -> int:
    absent = w.shape.neg_full ^ w.neg
    return sum(_bits(w.pos)) + sum(_bits(absent))


def bottom(shape: Shape) -> LatticeString:
    return LatticeString(shape, 0, shape.neg_full)


def top(shape: Shape) -> LatticeString:
    return LatticeString(shape, shape.pos_full, 0)


def _cover_moves(shape: Shape) -> list[tuple[str, int, int, int]]:
    """Single-step moves as (side, required, forbidden, toggle) bit patterns.

    A move applies when all ``required`` bits are set and no ``forbidden``
    bit is set; applying it XORs ``toggle`` into that side.
    """
    moves = [("pos", 0, 1, 1)]  # 0 -> tilde 1
    for i in range(1, shape.r):  # tilde i -> tilde i+1
        lo, hi = 1 << (i - 1), 1 << i
        moves.append(("pos", lo, hi, lo | hi))
    if shape.m:
        moves.append(("neg", 1, 0, 1))  # bar 1 -> 0
    for j in range(2, shape.m + 1):  # bar j -> bar j-1
        hi, lo = 1 << (j - 1), 1 << (j - 2)
        moves.append(("neg", hi, lo, hi | lo))
    return moves


def covers(w: LatticeString) -> list[LatticeString]:
    """Elements covering ``w``, in canonical order."""
    out = []
    for side, req, forb, tog in _cover_moves(w.shape):
        bits = w.pos if side == "pos" else w.neg
        if bits & req == req and not bits & forb:
            if side == "pos":
                out.append(LatticeString(w.shape, w.pos ^ tog, w.neg))
            else:
                out.append(LatticeString(w.shape, w.pos, w.neg ^ tog))
    return sorted(out, key=lambda u: u.index)


class Lattice:
    """Dense view of S(n, r): every element addressed by its canonical index.

    Index ``i`` holds the element with code ``2**n - 1 - i``, so index 0 is
    the element with all tilde indices present and no bar index, i.e. the top.
    Subsets of the lattice are boolean numpy arrays of length ``2**n``.
    """

    def __init__(self, shape: Shape, n_max: int | None = None):
        shape.check_enumerable(n_max)
        self.shape = shape
        codes = np.arange(shape.size - 1, -1, -1, dtype=np.int64)
        self.codes = codes
        self.pos = codes >> shape.m
        self.neg = codes & shape.neg_full

    def __len__(self):
        return self.shape.size

    def __iter__(self):
        return (self.element(i) for i in range(len(self)))

    def element(self, i: int) -> LatticeString:
        return _from_code(self.shape, self.shape.size - 1 - int(i))

    def elements(self, mask: np.ndarray) -> list[LatticeString]:
        return [self.element(i) for i in np.flatnonzero(mask)]

    def mask_of(self, ws: Iterable[LatticeString]) -> np.ndarray:
        mask = np.zeros(len(self), dtype=bool)
        for w in ws:
            if w.shape != self.shape:
                raise ShapeError(f"shape mismatch: {self.shape} vs {w.shape}")
            mask[w.index] = True
        return mask

    def index_of_code(self, codes: np.ndarray) -> np.ndarray:
        return self.shape.size - 1 - codes

    @cached_property
    def rank(self) -> np.ndarray:
        """Rank of every element from the closed form (sum of present tilde
        indices plus sum of absent bar indices)."""
        out = np.zeros(len(self), dtype=np.int64)
        for i in range(1, self.shape.r + 1):
            out += i * ((self.pos >> (i - 1)) & 1)
        for j in range(1, self.shape.m + 1):
            out += j * (1 - ((self.neg >> (j - 1)) & 1))
        return out

    @cached_property
    def edges(self) -> tuple[np.ndarray, np.ndarray]:
        """Cover pairs ``(lower, upper)`` as index arrays, sorted by the lower
        element's rank and then by index."""
        los, his = [], []
        m = self.shape.m
        for side, req, forb, tog in _cover_moves(self.shape):
            bits = self.pos if side == "pos" else self.neg
            ok = ((bits & req) == req) & ((bits & forb) == 0)
            src = np.flatnonzero(ok)
            delta = tog << m if side == "pos" else tog
            los.append(src)
            his.append(self.index_of_code(self.codes[src] ^ delta))
        lo = np.concatenate(los)
        hi = np.concatenate(his)
        order = np.lexsort((hi, lo, self.rank[lo]))
        return lo[order], hi[order]

    @cached_property
    def _levels(self) -> list[slice]:
        lo, _ = self.edges
        ranks = self.rank[lo]
        bounds = np.flatnonzero(np.diff(ranks)) + 1
        starts = np.concatenate(([0], bounds))
        stops = np.concatenate((bounds, [len(lo)]))
        return [slice(a, b) for a, b in zip(starts, stops)]

    @cached_property
    def complement_index(self) -> np.ndarray:
        """``complement_index[i]`` is the index of the complement of element i."""
        return self.index_of_code(self.codes ^ (self.shape.size - 1))

    def upset(self, mask: np.ndarray) -> np.ndarray:
        """Smallest up-set containing the masked elements."""
        out = np.array(mask, dtype=bool, copy=True)
        lo, hi = self.edges
        for sl in self._levels:
            l, h = lo[sl], hi[sl]
            out[h[out[l]]] = True
        return out

    def downset(self, mask: np.ndarray) -> np.ndarray:
        out = np.array(mask, dtype=bool, copy=True)
        lo, hi = self.edges
        for sl in reversed(self._levels):
            l, h = lo[sl], hi[sl]
            out[l[out[h]]] = True
        return out

    def is_antichain(self, mask: np.ndarray) -> bool:
        # An antichain meets the strict up-set of itself nowhere.
        lo, hi = self.edges
        above = np.zeros(len(self), dtype=bool)
        above[hi[mask[lo]]] = True
        return not (self.upset(above) & mask).any()


@lru_cache(maxsize=64)
def lattice(shape: Shape) -> Lattice:
    """Cached :class:`Lattice` for ``shape`` (respects :data:`N_MAX`)."""
    return Lattice(shape)


def enumerate_strings(shape: Shape) -> list[LatticeString]:
    """All 2**n elements, ordered by descending positive mask, then descending
    negative mask."""
    shape.check_enumerable()
    return [_from_code(shape, c) for c in range(shape.size - 1, -1, -1)]


def _common_shape(zs) -> Shape | None:
    zs = list(zs)
    return _same_shape(*zs) if zs else None


def upset(zs: Iterable[LatticeString], shape: Shape | None = None) -> set[LatticeString]:
    zs = list(zs)
    shape = _common_shape(zs) or shape
    if shape is None:
        return set()
    lat = lattice(shape)
    return set(lat.elements(lat.upset(lat.mask_of(zs))))


def downset(zs: Iterable[LatticeString], shape: Shape | None = None) -> set[LatticeString]:
    zs = list(zs)
    shape = _common_shape(zs) or shape
    if shape is None:
        return set()
    lat = lattice(shape)
    return set(lat.elements(lat.downset(lat.mask_of(zs))))


def is_antichain(zs: Iterable[LatticeString]) -> bool:
    zs = list(set(zs))
    _common_shape(zs)
    return not any(leq(a, b) for a in zs for b in zs if a != b)
