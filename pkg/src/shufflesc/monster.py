"""Tableau dynamics of the shuffle of two full-transition automata.

The determinized shuffle of two automata with m and n states has states that
are subsets of {0..m-1} x {0..n-1}; we call such a subset an m x n tableau.
When every pair of transformations is available as a letter, a letter
(f, g) sends a tableau E to {(f(i), j)} | {(i, g(j))} over the cells (i, j)
of E.  This module explores that state space: reachability from {(0, 0)}
with minimal depths, the count of valid tableaux, and the exact number of
pairwise-distinguishable reachable states over all choices of final sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Iterator, Mapping, NamedTuple, Optional

from .automata import Dfa, Transformation
from .errors import SizeGuardError


class MonsterLetter(NamedTuple):
    """One letter of the common alphabet: a transformation for each side."""

    left: Transformation
    right: Transformation


@dataclass(frozen=True)
class Tableau:
    """A subset of {0..m-1} x {0..n-1}; cell (i, j) means row i, column j."""

    m: int
    n: int
    cells: frozenset

    def __post_init__(self):
        cells = frozenset((int(i), int(j)) for i, j in self.cells)
        object.__setattr__(self, "cells", cells)
        if any(not (0 <= i < self.m and 0 <= j < self.n) for i, j in cells):
            raise ValueError(f"cell out of {self.m}x{self.n} range: {sorted(cells)}")

    @property
    def mask(self) -> int:
        """Row-major bitmask; the canonical integer key of a tableau."""
        acc = 0
        for i, j in self.cells:
            acc |= 1 << (i * self.n + j)
        return acc

    @classmethod
    def from_mask(cls, m: int, n: int, mask: int) -> "Tableau":
        cells = set()
        while mask:
            low = mask & -mask
            pos = low.bit_length() - 1
            cells.add(divmod(pos, n))
            mask ^= low
        return cls(m, n, cells)

    def occupied_rows(self) -> tuple:
        return tuple(sorted({i for i, _ in self.cells}))

    def occupied_cols(self) -> tuple:
        return tuple(sorted({j for _, j in self.cells}))

    def row_support(self, i: int) -> frozenset:
        return frozenset(j for r, j in self.cells if r == i)

    def col_support(self, j: int) -> frozenset:
        return frozenset(i for i, c in self.cells if c == j)

    def render(self) -> str:
        """m lines of n characters, '×' for a marked cell and '.' otherwise."""
        return "\n".join(
            "".join("×" if (i, j) in self.cells else "." for j in range(self.n))
            for i in range(self.m)
        )

    def to_json(self, depth: Optional[int] = None) -> dict:
        obj = {"m": self.m, "n": self.n, "cells": sorted(map(list, self.cells))}
        if depth is not None:
            obj["depth"] = depth
        return obj

    @classmethod
    def from_json(cls, obj: Mapping) -> "Tableau":
        return cls(obj["m"], obj["n"], {tuple(c) for c in obj["cells"]})

    def __repr__(self):
        return f"Tableau({self.m}, {self.n}, {sorted(self.cells)})"


def tableau_step(t: Tableau, letter: MonsterLetter) -> Tableau:
    """Image of a tableau under one letter: rows moved by f plus columns
    moved by g, merged."""
    f, g = letter
    if f.size != t.m or g.size != t.n:
        raise ValueError(
            f"letter sizes ({f.size}, {g.size}) do not match tableau ({t.m}, {t.n})"
        )
    cells = {(f(i), j) for i, j in t.cells} | {(i, g(j)) for i, j in t.cells}
    return Tableau(t.m, t.n, cells)


def is_valid_tableau(t: Tableau) -> bool:
    """True when some cell lies in row 0 and some cell lies in column 0."""
    return any(i == 0 for i, _ in t.cells) and any(j == 0 for _, j in t.cells)


def f_bound(m: int, n: int) -> int:
    """Number of valid m x n tableaux, an upper bound for the shuffle state
    complexity: 2^(mn-1) + 2^((m-1)(n-1)) (2^(m-1)-1) (2^(n-1)-1)."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    return (1 << (m * n - 1)) + (
        (1 << ((m - 1) * (n - 1))) * ((1 << (m - 1)) - 1) * ((1 << (n - 1)) - 1)
    )


def all_valid_tableaux(m: int, n: int, max_cells: int = 20) -> Iterator[Tableau]:
    """All valid tableaux, in increasing mask order.  Enumerates 2^(mn) masks."""
    if m * n > max_cells:
        raise SizeGuardError(
            f"enumerating 2^{m * n} tableaux exceeds the guard of 2^{max_cells}; "
            "raise max_cells to override"
        )
    row0 = (1 << n) - 1
    col0 = 0
    for i in range(m):
        col0 |= 1 << (i * n)
    for mask in range(1, 1 << (m * n)):
        if mask & row0 and mask & col0:
            yield Tableau.from_mask(m, n, mask)


@dataclass(frozen=True)
class ReachResult:
    """Reachable tableaux of the m x n shuffle state space with the minimal
    number of steps needed to reach each of them from {(0, 0)}."""

    m: int
    n: int
    depths: Mapping[Tableau, int]
    complete: bool

    @property
    def count(self) -> int:
        return len(self.depths)

    def tableaux(self) -> list[Tableau]:
        """Sorted by (depth, mask); a canonical listing order."""
        return sorted(self.depths, key=lambda t: (self.depths[t], t.mask))

    def depth_histogram(self) -> dict[int, int]:
        hist: dict[int, int] = {}
        for d in self.depths.values():
            hist[d] = hist.get(d, 0) + 1
        return dict(sorted(hist.items()))

    def saturation_depth(self) -> int:
        return max(self.depths.values(), default=0)

    def __contains__(self, t: Tableau) -> bool:
        return t in self.depths


def _expand_mask(mask: int, m: int, n: int) -> tuple[list[int], list[int]]:
    """Distinct row-image masks and column-image masks of one tableau.

    Only maps on the occupied rows (resp. columns) matter, and maps with the
    same image mask coincide, so the choices are folded one occupied line at
    a time with deduplication: never worse than enumerating the maps, and
    exponentially better on grids with many occupied lines mapping to few
    distinct patterns.
    """
    full_n = (1 << n) - 1
    row_slices = [(mask >> (i * n)) & full_n for i in range(m)]
    row_slices = [s for s in row_slices if s]
    # each occupied column's cells, held as a mask at column position 0
    col_slices: dict[int, int] = {}
    mm = mask
    while mm:
        low = mm & -mm
        pos = low.bit_length() - 1
        i, j = divmod(pos, n)
        col_slices[j] = col_slices.get(j, 0) | (1 << (i * n))
        mm ^= low

    row_variants = {0}
    for s in row_slices:
        placements = {s << (t * n) for t in range(m)}
        row_variants = {acc | p for acc in row_variants for p in placements}
    col_variants = {0}
    for s in col_slices.values():
        placements = {s << t for t in range(n)}
        col_variants = {acc | p for acc in col_variants for p in placements}
    return sorted(row_variants), sorted(col_variants)


def reachable_tableaux(
    m: int,
    n: int,
    depth_limit: Optional[int] = None,
    max_cells: int = 16,
) -> ReachResult:
    """Breadth-first closure of {(0, 0)} under all letters.

    Stops after `depth_limit` levels if given; the result is then flagged
    incomplete when unexplored frontier remained.  The default guard refuses
    grids beyond 16 cells (the 6 x 6 case alone has 2^36 tableaux).
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    if m * n > max_cells:
        raise SizeGuardError(
            f"{m}x{n} grid exceeds the {max_cells}-cell guard; "
            "raise max_cells to override"
        )
    depths = {1: 0}  # mask of {(0, 0)} is 1
    frontier = [1]
    depth = 0
    complete = True
    while frontier:
        if depth_limit is not None and depth >= depth_limit:
            complete = False
            break
        depth += 1
        nxt = []
        for mask in frontier:
            row_variants, col_variants = _expand_mask(mask, m, n)
            for rv in row_variants:
                for cv in col_variants:
                    s = rv | cv
                    if s not in depths:
                        depths[s] = depth
                        nxt.append(s)
        frontier = sorted(nxt)
    return ReachResult(
        m,
        n,
        {Tableau.from_mask(m, n, mask): d for mask, d in depths.items()},
        complete,
    )


def distinguishing_letters(m: int, n: int) -> list[MonsterLetter]:
    """The classical three-letter distinguishing alphabet.

    a cycles the rows and sends every column to 0; b sends every row to 0 and
    cycles the columns; c maps row 0 to 1 and all other rows to 0 (a Kronecker
    delta) and sends every column to n-1.  The bare components are read as
    constant maps named by their value ("C-const" reading); under that reading
    some choice of final sets separates every pair of reachable tableaux
    (checked exhaustively at small sizes in the test suite).
    """
    if m < 2 or n < 2:
        raise ValueError("distinguishing letters need m, n >= 2")
    a = MonsterLetter(
        Transformation.cycle(m, range(m)), Transformation.constant(n, 0)
    )
    b = MonsterLetter(
        Transformation.constant(m, 0), Transformation.cycle(n, range(n))
    )
    c = MonsterLetter(
        Transformation([1] + [0] * (m - 1)), Transformation.constant(n, n - 1)
    )
    return [a, b, c]


@dataclass(frozen=True)
class ScResult:
    """Exact shuffle state complexity at (m, n) with every maximizing pair of
    final sets and the size of the reachable tableau space."""

    m: int
    n: int
    value: int
    maximizers: tuple
    reachable_count: int

    def witness(self) -> tuple[frozenset, frozenset]:
        return self.maximizers[0]


def _transition_columns(masks, index, m, n, letters=None):
    """Successor-index columns of the reachable set, one per letter action.

    Letters acting identically on every reachable state are collapsed; the
    returned columns are what partition refinement needs.
    """
    full_n = (1 << n) - 1
    S = len(masks)

    def rowvar(f):
        out = [0] * S
        for si, mask in enumerate(masks):
            acc = 0
            for i in range(m):
                s = (mask >> (i * n)) & full_n
                if s:
                    acc |= s << (f[i] * n)
            out[si] = acc
        return out

    def colvar(g):
        out = [0] * S
        for si, mask in enumerate(masks):
            acc = 0
            mm = mask
            while mm:
                low = mm & -mm
                pos = low.bit_length() - 1
                i, j = divmod(pos, n)
                acc |= 1 << (i * n + g[j])
                mm ^= low
            out[si] = acc
        return out

    if letters is None:
        fs = list(product(range(m), repeat=m))
        gs = list(product(range(n), repeat=n))
        rvs = {f: rowvar(f) for f in fs}
        cvs = {g: colvar(g) for g in gs}
        pairs = ((f, g) for f in fs for g in gs)
    else:
        pairs = [(tuple(l.left.images), tuple(l.right.images)) for l in letters]
        rvs = {f: rowvar(f) for f, _ in pairs}
        cvs = {g: colvar(g) for _, g in pairs}
    columns = {}
    for f, g in pairs:
        rv, cv = rvs[f], cvs[g]
        col = tuple(index[rv[s] | cv[s]] for s in range(S))
        columns[col] = None
    return list(columns)


def _refine(columns, initial_codes):
    """Moore refinement: split classes by successor classes until stable.
    Returns the final class code of every state."""
    codes = initial_codes
    count = len(set(codes))
    S = len(codes)
    while True:
        sigs: dict = {}
        new = [0] * S
        for s in range(S):
            sig = (codes[s],) + tuple(codes[c[s]] for c in columns)
            new[s] = sigs.setdefault(sig, len(sigs))
        codes = new
        if len(sigs) == count:
            return codes
        count = len(sigs)


def count_distinguishable(
    m: int,
    n: int,
    letters: Iterable[MonsterLetter],
    reach: Optional[ReachResult] = None,
    max_cells: int = 12,
) -> ScResult:
    """Like state_complexity_shuffle but refining with a fixed letter set.

    Reachability is still computed over all letters; only the separating
    words are restricted to the given alphabet.
    """
    return _max_over_finals(m, n, list(letters), reach, max_cells)


def state_complexity_shuffle(
    m: int, n: int, reach: Optional[ReachResult] = None, max_cells: int = 12
) -> ScResult:
    """Exact state complexity of the shuffle at (m, n).

    Computes the reachable tableaux once (finality plays no role there), then
    for every pair of final sets (F1, F2) counts the classes of Moore
    refinement where a tableau is accepting iff it meets F1 x F2.  The value
    is the maximum class count; all maximizing pairs are reported.  Pairs
    with an empty side make every state equivalent and are skipped.
    """
    return _max_over_finals(m, n, None, reach, max_cells)


def _max_over_finals(m, n, letters, reach, max_cells):
    if m * n > max_cells:
        raise SizeGuardError(
            f"state-complexity search on a {m}x{n} grid exceeds the "
            f"{max_cells}-cell guard; raise max_cells to override"
        )
    if reach is None:
        reach = reachable_tableaux(m, n, max_cells=max_cells)
    masks = sorted(t.mask for t in reach.depths)
    index = {mask: i for i, mask in enumerate(masks)}
    columns = _transition_columns(masks, index, m, n, letters)

    best = 0
    arg: list[tuple[frozenset, frozenset]] = []
    for f1_bits in range(1, 1 << m):
        for f2_bits in range(1, 1 << n):
            fmask = 0
            for i in range(m):
                if f1_bits >> i & 1:
                    for j in range(n):
                        if f2_bits >> j & 1:
                            fmask |= 1 << (i * n + j)
            codes = _refine(columns, [int(bool(mk & fmask)) for mk in masks])
            classes = len(set(codes))
            pair = (
                frozenset(i for i in range(m) if f1_bits >> i & 1),
                frozenset(j for j in range(n) if f2_bits >> j & 1),
            )
            if classes > best:
                best, arg = classes, [pair]
            elif classes == best:
                arg.append(pair)
    return ScResult(m, n, best, tuple(arg), reach.count)


def monster_dfa(size: int, finals: Iterable[int], letters: Iterable[MonsterLetter], side: str) -> Dfa:
    """One side of a pair of full-transition automata, restricted to the
    given letters.  `side` selects which component of each letter acts."""
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    letters = list(letters)
    delta = {}
    for q in range(size):
        for letter in letters:
            t = letter.left if side == "left" else letter.right
            if t.size != size:
                raise ValueError(f"letter {letter} does not act on {size} states")
            delta[(q, letter)] = t(q)
    return Dfa(size, tuple(letters), 0, frozenset(finals), delta)
