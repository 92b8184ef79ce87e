"""Set-vector calculus for paths in the shuffle state space.

A path from {(0, 0)} in the tableau automaton can be encoded by a pair of
vectors of disjoint sets: walk the path and let each step stamp fresh
integers recording where every cell came from.  After k steps the stamps
partition {1..2^k}; the left vector reads the partition off the rows and the
right vector off the columns.  The projection back to a tableau keeps the
pairs (i, j) whose row set meets whose column set.

The vectors that arise this way are exactly the graded families generated
from [{1}, {}, ...] by the one-step successor operations below, and they are
characterized by a hereditary half-block condition (`is_rvalid` /
`is_lvalid`).  This module implements the calculus, the graded generation,
the tableau projection, and explicit constructions hitting notable target
tableaux (permutation tableaux, the full tableau, single-cell erasure).
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from itertools import product
from typing import Iterable, Mapping, Optional, Sequence

from .automata import Transformation
from .errors import SizeGuardError
from .monster import MonsterLetter, Tableau


class SetVector:
    """An ordered vector of pairwise-disjoint finite sets of positive integers."""

    __slots__ = ("parts",)

    def __init__(self, parts: Iterable[Iterable[int]]):
        parts = tuple(frozenset(int(x) for x in p) for p in parts)
        total = 0
        seen: set = set()
        for p in parts:
            if any(x < 1 for x in p):
                raise ValueError("set-vector elements must be positive integers")
            total += len(p)
            seen |= p
        if total != len(seen):
            raise ValueError(f"parts are not pairwise disjoint: {self._fmt(parts)}")
        self.parts = parts

    @classmethod
    def base(cls, length: int) -> "SetVector":
        """[{1}, {}, ..., {}], the grade-0 vector every path starts from."""
        if length < 1:
            raise ValueError("length must be at least 1")
        return cls([{1}] + [set()] * (length - 1))

    @property
    def support(self) -> frozenset:
        return frozenset().union(*self.parts) if self.parts else frozenset()

    @property
    def max_element(self) -> int:
        return max(self.support, default=0)

    def nonempty_count(self) -> int:
        return sum(1 for p in self.parts if p)

    def grade(self) -> int:
        """k such that the union of the parts is exactly {1..2^k}."""
        sup = self.support
        k = max(len(sup).bit_length() - 1, 0)
        if sup != frozenset(range(1, (1 << k) + 1)):
            raise ValueError(f"support {sorted(sup)} is not of the form {{1..2^k}}")
        return k

    def key(self) -> tuple:
        """Canonical hashable form: elements sorted inside each part."""
        return tuple(tuple(sorted(p)) for p in self.parts)

    @staticmethod
    def _fmt(parts) -> str:
        return "[" + ",".join("{" + ",".join(map(str, sorted(p))) + "}" for p in parts) + "]"

    @classmethod
    def parse(cls, text: str) -> "SetVector":
        """Inverse of str(): e.g. '[{1,4},{2,7},{3,5,6,8}]'."""
        text = text.strip()
        if not (text.startswith("[") and text.endswith("]")):
            raise ValueError(f"not a set-vector literal: {text!r}")
        body = text[1:-1]
        if body and re.fullmatch(r"\s*\{[^{}]*\}(\s*,\s*\{[^{}]*\})*\s*", body) is None:
            raise ValueError(f"not a set-vector literal: {text!r}")
        parts = re.findall(r"\{([^{}]*)\}", body)
        return cls([[int(x) for x in p.split(",") if x.strip()] for p in parts])

    def to_lists(self) -> list[list[int]]:
        return [sorted(p) for p in self.parts]

    def __len__(self):
        return len(self.parts)

    def __getitem__(self, i):
        return self.parts[i]

    def __iter__(self):
        return iter(self.parts)

    def __eq__(self, other):
        return isinstance(other, SetVector) and self.parts == other.parts

    def __hash__(self):
        return hash(self.key())

    def __repr__(self):
        return self._fmt(self.parts)


def act(v: SetVector, h: Transformation) -> SetVector:
    """Move the parts along h: entry j of the result is the union of the
    parts whose index maps to j."""
    if h.size != len(v):
        raise ValueError(f"transformation size {h.size} != vector length {len(v)}")
    out = [set() for _ in range(len(v))]
    for q, part in enumerate(v):
        if part:
            out[h(q)] |= part
    return SetVector(out)


def shift_up(v: SetVector) -> SetVector:
    """Add r = max element to every element."""
    r = v.max_element
    if r == 0:
        raise ValueError("cannot shift an all-empty vector")
    return SetVector([{x + r for x in p} for p in v])


def union_vec(v1: SetVector, v2: SetVector) -> SetVector:
    """Entrywise union; the operands must not share elements across parts."""
    if len(v1) != len(v2):
        raise ValueError(f"length mismatch: {len(v1)} != {len(v2)}")
    return SetVector([a | b for a, b in zip(v1, v2)])


def succ_right(p: SetVector, g: Transformation) -> SetVector:
    """One right-side step: P | (P.g)^up, raising the grade by one."""
    return union_vec(p, shift_up(act(p, g)))


def succ_left(lam: SetVector, f: Transformation) -> SetVector:
    """One left-side step: (L.f) | L^up.  The left side moves the existing
    low block and shifts the unmoved vector into the fresh high block; the
    right side does the opposite."""
    return union_vec(act(lam, f), shift_up(lam))


def succ_elem(v: SetVector, t: Transformation, side: str = "right") -> SetVector:
    if side == "right":
        return succ_right(v, t)
    if side == "left":
        return succ_left(v, t)
    raise ValueError("side must be 'left' or 'right'")


def mirror(v: SetVector, k: Optional[int] = None) -> SetVector:
    """Replace every element x of a grade-k vector by 2^k + 1 - x.

    An involution exchanging the left-valid and right-valid families.
    """
    if k is None:
        k = v.grade()
    top = (1 << k) + 1
    if v.support and max(v.support) > top - 1:
        raise ValueError(f"vector is not of grade {k}")
    return SetVector([{top - x for x in p} for p in v])


def is_rvalid(v: SetVector, k: int) -> bool:
    """Right validity at grade k.

    The parts must partition {1..2^k}, 1 must lie in the first part, and for
    every k' < k: elements of {1..2^k'} sharing a part must still share a
    part after adding 2^k'.  The condition is hereditary because each step
    appends a shifted copy of the moved previous vector on the right.
    """
    sup = v.support
    if sup != frozenset(range(1, (1 << k) + 1)):
        return False
    if 1 not in v[0]:
        return False
    part_of = {x: i for i, p in enumerate(v) for x in p}
    for kp in range(k):
        h = 1 << kp
        for p in v:
            low = [x for x in p if x <= h]
            if len(low) >= 2:
                targets = {part_of[x + h] for x in low}
                if len(targets) > 1:
                    return False
    return True


def is_lvalid(v: SetVector, k: int) -> bool:
    """Left validity at grade k: the mirror image must be right-valid."""
    sup = v.support
    if sup != frozenset(range(1, (1 << k) + 1)):
        return False
    return is_rvalid(mirror(v, k), k)


def generate_graded(
    n: int, k: int, side: str = "right", max_count: int = 2_000_000
) -> list[SetVector]:
    """The full grade-k family of valid vectors of length n, sorted canonically.

    Generated by iterating the one-step successor over every map on the
    occupied parts, starting from the base vector; maps that agree on the
    occupied parts give the same successor, so only those are enumerated.
    """
    if side not in ("left", "right"):
        raise ValueError("side must be 'left' or 'right'")
    if n < 1 or k < 0:
        raise ValueError("need n >= 1 and k >= 0")
    level = {SetVector.base(n)}
    for _ in range(k):
        nxt = set()
        for p in level:
            occupied = [i for i, part in enumerate(p) if part]
            for images in product(range(n), repeat=len(occupied)):
                g = list(range(n))
                for i, target in zip(occupied, images):
                    g[i] = target
                nxt.add(succ_right(p, Transformation(g)))
                if len(nxt) > max_count:
                    raise SizeGuardError(
                        f"grade-{k} family of length-{n} vectors exceeds "
                        f"{max_count} elements; raise max_count to override"
                    )
        level = nxt
    if side == "left":
        level = {mirror(v, k) for v in level}
    return sorted(level, key=SetVector.key)


@dataclass(frozen=True)
class UPair:
    """A pair (left, right) of valid vectors of equal grade.

    Such pairs are in bijection with the useful paths out of {(0, 0)} in the
    tableau automaton; the projection `s_projection` recovers the endpoint.
    Construction validates both sides, so a UPair is valid by construction.
    """

    left: SetVector
    right: SetVector

    def __post_init__(self):
        k = self.left.grade()
        if self.right.grade() != k:
            raise ValueError("left and right grades differ")
        if not is_lvalid(self.left, k):
            raise ValueError(f"left vector is not {k}-Lvalid: {self.left}")
        if not is_rvalid(self.right, k):
            raise ValueError(f"right vector is not {k}-Rvalid: {self.right}")

    @property
    def grade(self) -> int:
        return self.left.grade()

    def to_json(self) -> dict:
        return {
            "k": self.grade,
            "left": self.left.to_lists(),
            "right": self.right.to_lists(),
        }

    @classmethod
    def from_json(cls, obj: Mapping) -> "UPair":
        return cls(SetVector(obj["left"]), SetVector(obj["right"]))

    def __repr__(self):
        return f"UPair({self.left}, {self.right})"


def p_of_path(
    m: int, n: int, path: Sequence[MonsterLetter | tuple[Transformation, Transformation]]
) -> UPair:
    """Fold a path of letters into its pair of vectors.

    The empty path gives the base pair; each letter (f, g) updates the pair
    to ((L.f) | L^up, P | (P.g)^up).  Only the restriction of a letter to
    the occupied parts matters, so a path and its useful restriction give
    the same pair.
    """
    lam, rho = SetVector.base(m), SetVector.base(n)
    for f, g in path:
        lam = succ_left(lam, f)
        rho = succ_right(rho, g)
    return UPair(lam, rho)


def s_projection(u: UPair) -> Tableau:
    """Tableau of the nonempty intersections: cell (i, j) iff left[i] meets
    right[j]."""
    cells = {
        (i, j)
        for i, li in enumerate(u.left)
        for j, rj in enumerate(u.right)
        if li & rj
    }
    return Tableau(len(u.left), len(u.right), cells)


def pair_of_settableau(
    cells: Mapping[tuple[int, int], Iterable[int]], m: int, n: int
) -> UPair:
    """Pair of vectors of a tableau whose cells carry disjoint sets covering
    {1..2^k}: row i unions to left[i], column j unions to right[j]."""
    lam = [set() for _ in range(m)]
    rho = [set() for _ in range(n)]
    total = 0
    for (i, j), content in cells.items():
        content = set(content)
        total += len(content)
        lam[i] |= content
        rho[j] |= content
    if total != len(set().union(*lam)):
        raise ValueError("cell contents are not pairwise disjoint")
    return UPair(SetVector(lam), SetVector(rho))


def settableau_of_pair(u: UPair) -> dict[tuple[int, int], frozenset]:
    """Inverse of pair_of_settableau: cell (i, j) holds left[i] & right[j]."""
    out = {}
    for i, li in enumerate(u.left):
        for j, rj in enumerate(u.right):
            common = li & rj
            if common:
                out[(i, j)] = common
    return out


# --- explicit witnesses -----------------------------------------------------


def _permutation_family(n: int, k: int) -> tuple[list[frozenset], frozenset, frozenset]:
    """Partition of {1..2^k} into n parts for permutation tableaux with a
    moved first row (2^(k-1) < n <= 2^k), together with the parts anchoring
    the left and right first entries.

    Every part is either a singleton or a pair at distance 2^(k-1), so the
    half-block closure is vacuous and any arrangement anchored correctly is
    valid.
    """
    h = 1 << (k - 1)
    top = 1 << k
    if n == top:
        family = [frozenset({x}) for x in range(1, top + 1)]
        return family, frozenset({top}), frozenset({1})
    if n == top - 1:
        family = [frozenset({1, h + 1})] + [
            frozenset({x}) for x in range(2, top + 1) if x != h + 1
        ]
        return family, frozenset({top}), frozenset({1, h + 1})
    q = h - n // 2 if n % 2 == 0 else h - (n - 1) // 2
    low_pairs = [frozenset({i, h + i}) for i in range(1, q + 1)]
    high_count = q if n % 2 == 0 else q - 1
    high_pairs = [frozenset({h - j, top - j}) for j in range(high_count)]
    if n % 2 == 0:
        singles = [frozenset({x}) for x in range(q + 1, h - q + 1)]
        singles += [frozenset({x}) for x in range(h + q + 1, top - q + 1)]
    else:
        singles = [frozenset({x}) for x in range(q + 1, h - q + 2)]
        singles += [frozenset({x}) for x in range(h + q + 1, top - q + 2)]
    family = low_pairs + high_pairs + singles
    return family, frozenset({h, top}), frozenset({1, h + 1})


def witness_permutation(sigma: Transformation, n: Optional[int] = None) -> UPair:
    """A pair projecting onto the permutation tableau {(i, sigma(i))}.

    The grade is the least possible: ceil(log2(n+1)) when sigma fixes 0 (at
    that grade the first entries of both sides must share an element, which
    all-singleton partitions cannot achieve), and ceil(log2(n)) otherwise.
    Free slots are filled deterministically in increasing index order;
    correctness is asserted through the projection, not the fill.
    """
    if not sigma.is_permutation():
        raise ValueError(f"{sigma!r} is not a permutation")
    if n is None:
        n = sigma.size
    if n != sigma.size:
        raise ValueError(f"permutation size {sigma.size} != n = {n}")
    if n == 1:
        return UPair(SetVector.base(1), SetVector.base(1))

    if sigma(0) == 0:
        k = n.bit_length()  # 2^(k-1) <= n < 2^k
        top = 1 << k
        pairs = [frozenset({i, top + 1 - i}) for i in range(1, top - n + 1)]
        singles = [frozenset({j}) for j in range(top - n + 1, n + 1)]
        family = pairs + singles
        lam = SetVector([family[sigma(i)] for i in range(n)])
        rho = SetVector(family)
    else:
        k = (n - 1).bit_length()  # 2^(k-1) < n <= 2^k
        family, lam0, rho0 = _permutation_family(n, k)
        inv = sigma.inverse()
        left: list = [None] * n
        left[0] = lam0
        left[inv(0)] = rho0
        remaining = iter(p for p in family if p not in (lam0, rho0))
        for i in range(n):
            if left[i] is None:
                left[i] = next(remaining)
        right: list = [None] * n
        for i in range(n):
            right[sigma(i)] = left[i]
        lam, rho = SetVector(left), SetVector(right)

    pair = UPair(lam, rho)
    target = Tableau(n, n, {(i, sigma(i)) for i in range(n)})
    assert s_projection(pair) == target
    return pair


def witness_full(m: int, n: int) -> UPair:
    """A pair projecting onto the full m x n tableau.

    Right side: consecutive dyadic blocks [1..2^k], (2^k..2^(k+1)], ... with
    2^(k-1) < m <= 2^k.  Left side: a full-column pair at grade k, then the
    same doubling steps as the right side (identity on the rows), which
    replicates each left part with period 2^k.  Grade k + n - 1.
    """
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    k = (m - 1).bit_length()  # 2^(k-1) < m <= 2^k
    top = 1 << k
    base_left = [frozenset({top - i}) for i in range(m - 1)]
    base_left.append(frozenset(range(1, top - m + 2)))
    reps = 1 << (n - 1)
    lam = SetVector(
        [{x + top * a for x in part for a in range(reps)} for part in base_left]
    )
    rho = SetVector(
        [range(1, top + 1)]
        + [
            range((top << (j - 1)) + 1, (top << j) + 1)
            for j in range(1, n)
        ]
    )
    return UPair(lam, rho)


def erase_cell_letter(e: Tableau, i1: int, j1: int, i2: int, j2: int) -> MonsterLetter:
    """Letter removing exactly the cell (i1, j1) from e.

    Requires the support of row i1 to sit inside that of row i2 and likewise
    column j1 inside column j2, with i1 != i2 and j1 != j2.  The letter sends
    i1 to i2 and j1 to j2, fixing everything else: row i1 collapses into row
    i2 (already present there) while the column copy preserves every other
    cell, so only (i1, j1) disappears.
    """
    if i1 == i2 or j1 == j2:
        raise ValueError("need i1 != i2 and j1 != j2")
    for idx in (i1, i2):
        if not 0 <= idx < e.m:
            raise ValueError(f"row {idx} out of range")
    for idx in (j1, j2):
        if not 0 <= idx < e.n:
            raise ValueError(f"column {idx} out of range")
    if not e.row_support(i1) <= e.row_support(i2):
        raise ValueError(f"row {i1} support not contained in row {i2} support")
    if not e.col_support(j1) <= e.col_support(j2):
        raise ValueError(f"column {j1} support not contained in column {j2} support")
    return MonsterLetter(
        Transformation.from_map(e.m, {i1: i2}),
        Transformation.from_map(e.n, {j1: j2}),
    )


def is_dense(e: Tableau) -> bool:
    """Dense tableaux: row-support containment forces row equality and
    column-support containment forces column equality.

    The empty tableau is excluded: it is unreachable and every containment
    over it is degenerate.
    """
    if not e.cells:
        return False
    rows = [e.row_support(i) for i in range(e.m)]
    for a in range(e.m):
        for b in range(e.m):
            if a != b and rows[a] <= rows[b]:
                return False
    cols = [e.col_support(j) for j in range(e.n)]
    for a in range(e.n):
        for b in range(e.n):
            if a != b and cols[a] <= cols[b]:
                return False
    return True


def enumerate_dense(m: int, n: int, max_cells: int = 20) -> list[Tableau]:
    """All dense m x n tableaux in increasing mask order (2^(mn) scan)."""
    if m * n > max_cells:
        raise SizeGuardError(
            f"enumerating 2^{m * n} tableaux exceeds the guard of 2^{max_cells}; "
            "raise max_cells to override"
        )
    out = []
    for mask in range(1, 1 << (m * n)):
        t = Tableau.from_mask(m, n, mask)
        if is_dense(t):
            out.append(t)
    return out
