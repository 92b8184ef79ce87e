"""Exact enumeration of the graded vector families.

Counting vectors by grade reduces to powers of an integer matrix: entry
(i, j) of S_n counts, for any valid length-n vector with i nonempty parts,
the distinct one-step successors with j nonempty parts.  The first row of
(S_n)^k therefore grades the whole family reachable from the base vector.
S_n factors entrywise into a Stirling-type part (independent of n) and a
falling-factorial part, the grand totals follow a closed form in the powers
1^1, 2^2, ..., n^n, and the Stirling part has a bivariate generating
function expressible through the Lambert W series.  Everything here is exact:
arbitrary-precision integers and rationals, no floating point.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import product
from math import comb, factorial
from typing import Iterable, Mapping, Optional

from .automata import Transformation
from .errors import SizeGuardError
from .upair import SetVector, succ_right


@lru_cache(maxsize=None)
def stirling2(a: int, b: int) -> int:
    """Stirling number of the second kind: partitions of an a-set into b
    nonempty blocks."""
    if a < 0 or b < 0:
        raise ValueError("arguments must be nonnegative")
    if a == b:
        return 1
    if b == 0 or b > a:
        return 0
    return b * stirling2(a - 1, b) + stirling2(a - 1, b - 1)


@lru_cache(maxsize=None)
def r_stirling2(np: int, kp: int, r: int) -> int:
    """r-Stirling number: partitions of {1..np} into kp nonempty blocks with
    the first r elements in pairwise distinct blocks."""
    if np < 0 or kp < 0 or r < 0:
        raise ValueError("arguments must be nonnegative")
    if np < r:
        return 0
    if np == r:
        return 1 if kp == r else 0
    if kp == 0:
        return 0
    return kp * r_stirling2(np - 1, kp, r) + r_stirling2(np - 1, kp - 1, r)


def succ_count(n: int, l: int, d: int) -> int:
    """Number of distinct one-step successors with l + d nonempty parts of a
    valid length-n vector with l nonempty parts:

        d! C(n-l, d) * sum over a of C(l, a) l^(l-a) S2(a, d).

    Choosing which d empty slots open up gives the binomial prefactor; the
    inner sum counts maps on the occupied slots by how many of them leave.
    """
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}, n={n}")
    if d < 0:
        raise ValueError("d must be nonnegative")
    return (
        factorial(d)
        * comb(n - l, d)
        * sum(comb(l, a) * l ** (l - a) * stirling2(a, d) for a in range(d, l + 1))
    )


def canonical_vector(l: int, n: Optional[int] = None) -> SetVector:
    """A specific valid vector with l nonempty parts (grade max(l-1, 0)):
    [{1}, {2}, ..., {l-1}, {l..2^(l-1)}], padded with empty parts to length n."""
    if l < 1:
        raise ValueError("l must be at least 1")
    if n is None:
        n = l
    if n < l:
        raise ValueError("n must be at least l")
    if l == 1:
        parts: list = [{1}]
    else:
        parts = [{i} for i in range(1, l)]
        parts.append(set(range(l, (1 << (l - 1)) + 1)))
    return SetVector(parts + [set()] * (n - l))


def successor_vectors(
    n: int, l: int, max_maps: int = 2_000_000
) -> dict[int, list[SetVector]]:
    """All distinct one-step successors of the canonical l-part vector,
    bucketed by their count of nonempty parts.

    Enumerates every map on the l occupied slots (n^l of them), the
    brute-force ground truth against which succ_count is checked.
    """
    if n ** l > max_maps:
        raise SizeGuardError(
            f"{n}^{l} maps exceed the guard of {max_maps}; raise max_maps to override"
        )
    p = canonical_vector(l, n)
    results = set()
    for images in product(range(n), repeat=l):
        g = list(range(n))
        g[:l] = images
        results.add(succ_right(p, Transformation(g)))
    buckets: dict[int, list[SetVector]] = {}
    for v in results:
        buckets.setdefault(v.nonempty_count(), []).append(v)
    return {key: sorted(vs, key=SetVector.key) for key, vs in sorted(buckets.items())}


def succ_count_oracle(n: int, l: int, d: int, max_maps: int = 2_000_000) -> int:
    """Brute-force value of succ_count by explicit successor enumeration."""
    return len(successor_vectors(n, l, max_maps).get(l + d, ()))


# --- exact matrices ---------------------------------------------------------


class ExactMatrix:
    """Dense matrix over exact scalars (int or Fraction)."""

    __slots__ = ("rows",)

    def __init__(self, rows: Iterable[Iterable]):
        rows = tuple(tuple(r) for r in rows)
        if rows and any(len(r) != len(rows[0]) for r in rows):
            raise ValueError("ragged rows")
        self.rows = rows

    @property
    def nrows(self) -> int:
        return len(self.rows)

    @property
    def ncols(self) -> int:
        return len(self.rows[0]) if self.rows else 0

    @classmethod
    def identity(cls, n: int) -> "ExactMatrix":
        return cls([[int(i == j) for j in range(n)] for i in range(n)])

    def __getitem__(self, i):
        return self.rows[i]

    def __iter__(self):
        return iter(self.rows)

    def __eq__(self, other):
        return isinstance(other, ExactMatrix) and self.rows == other.rows

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        if self.ncols != other.nrows:
            raise ValueError("dimension mismatch")
        cols = list(zip(*other.rows))
        return ExactMatrix(
            [[sum(a * b for a, b in zip(row, col)) for col in cols] for row in self.rows]
        )

    def row_sum(self, i: int):
        return sum(self.rows[i])

    def to_lists(self) -> list[list]:
        return [list(r) for r in self.rows]

    def __repr__(self):
        return f"ExactMatrix({self.to_lists()})"


def matrix_power(m: ExactMatrix, k: int) -> ExactMatrix:
    """m^k by repeated squaring; k = 0 gives the identity."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    if m.nrows != m.ncols:
        raise ValueError("matrix must be square")
    result = ExactMatrix.identity(m.nrows)
    base = m
    while k:
        if k & 1:
            result = result @ base
        base = base @ base
        k >>= 1
    return result


def hadamard(m: ExactMatrix, n: ExactMatrix) -> ExactMatrix:
    """Entrywise product."""
    if (m.nrows, m.ncols) != (n.nrows, n.ncols):
        raise ValueError("dimension mismatch")
    return ExactMatrix(
        [[a * b for a, b in zip(ra, rb)] for ra, rb in zip(m.rows, n.rows)]
    )


@lru_cache(maxsize=None)
def matrix_S(n: int) -> ExactMatrix:
    """The n x n successor-count matrix: entry (i, j), 1-indexed, is
    succ_count(n, i, j - i).  Upper triangular with diagonal 1^1 ... n^n."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return ExactMatrix(
        [
            [succ_count(n, i, j - i) if j >= i else 0 for j in range(1, n + 1)]
            for i in range(1, n + 1)
        ]
    )


def _b_entry(i: int, j: int) -> int:
    if i < 1 or j < i or j > 2 * i:
        return 0
    return sum(comb(i, t) * i ** (i - t) * stirling2(t, j - i) for t in range(j - i, i + 1))


def matrix_B(rows: int, cols: Optional[int] = None) -> ExactMatrix:
    """Top-left block of the n-independent factor: entry (i, j), 1-indexed,
    is sum over t of C(i, t) i^(i-t) S2(t, j-i), equal to the r-Stirling
    number {2i over j} with the first i elements separated."""
    if cols is None:
        cols = rows
    return ExactMatrix(
        [[_b_entry(i, j) for j in range(1, cols + 1)] for i in range(1, rows + 1)]
    )


def matrix_A(n: int, size: Optional[int] = None) -> ExactMatrix:
    """Arrangement-count factor: entry (i, j), 1-indexed, is
    (j-i)! C(n-i, j-i), i.e. ordered (j-i)-subsets of an (n-i)-set; zero by
    convention outside 1 <= i <= j <= n."""
    if size is None:
        size = n

    def entry(i, j):
        if j < i or j > n or i > n:
            return 0
        return factorial(j - i) * comb(n - i, j - i)

    return ExactMatrix(
        [[entry(i, j) for j in range(1, size + 1)] for i in range(1, size + 1)]
    )


def graded_count(n: int, k: int, l: int) -> int:
    """Number of grade-k vectors of length n with exactly l nonempty parts:
    entry (1, l) of (S_n)^k."""
    if not 1 <= l <= n:
        raise ValueError(f"need 1 <= l <= n, got l={l}")
    return matrix_power(matrix_S(n), k)[0][l - 1]


def r_total(n: int, k: int) -> int:
    """Total number of grade-k vectors of length n: first row sum of (S_n)^k."""
    return matrix_power(matrix_S(n), k).row_sum(0)


def u_total(m: int, n: int, k: int) -> int:
    """Number of grade-k pairs: the two sides are independent, so the count
    is the product of the side totals."""
    return r_total(m, k) * r_total(n, k)


# --- closed forms -----------------------------------------------------------


def _solve_exact(a: list[list[Fraction]], b: list[Fraction]) -> list[Fraction]:
    """Gaussian elimination over Fractions; raises on a singular system."""
    size = len(b)
    m = [[Fraction(x) for x in row] + [Fraction(y)] for row, y in zip(a, b)]
    for c in range(size):
        pivot = next((r for r in range(c, size) if m[r][c] != 0), None)
        if pivot is None:
            raise ValueError("singular system")
        m[c], m[pivot] = m[pivot], m[c]
        inv = 1 / m[c][c]
        m[c] = [x * inv for x in m[c]]
        for r in range(size):
            if r != c and m[r][c]:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return [m[r][size] for r in range(size)]


def closed_form_coeffs(n: int) -> list[Fraction]:
    """Rationals a_1..a_n with r_total(n, k) = sum of a_i (i^i)^k for all k.

    The totals satisfy a linear recurrence with the distinct characteristic
    roots 1^1, ..., n^n (the diagonal of S_n), so the coefficients solve a
    Vandermonde-type system built from k = 0..n-1; the result reproduces all
    higher k exactly.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    a = [[Fraction((i ** i) ** k) for i in range(1, n + 1)] for k in range(n)]
    b = [Fraction(r_total(n, k)) for k in range(n)]
    return _solve_exact(a, b)


def lower_bound_ie(m: int, n: int) -> int:
    """Inclusion-exclusion count of the tableaux containing a full row and a
    full column, all of which are reachable: a lower bound for the shuffle
    state complexity, strictly above 2^((m-1)(n-1)) for m, n >= 2."""
    if m < 1 or n < 1:
        raise ValueError("m and n must be at least 1")
    return sum(
        (-1) ** (k + l) * comb(m, k) * comb(n, l) * (1 << ((m - k) * (n - l)))
        for k in range(1, m + 1)
        for l in range(1, n + 1)
    )


# --- truncated bivariate series ---------------------------------------------


class TruncatedSeries:
    """Bivariate power series over exact rationals, truncated to the
    rectangle x-degree <= max_x, y-degree <= max_y.

    The grading variable is y: the block of y-degree i is a polynomial in x
    of degree between i and 2i, so a rectangle with max_x = 2 max_y holds
    complete blocks.
    """

    __slots__ = ("max_x", "max_y", "coeffs")

    def __init__(self, max_x: int, max_y: int, coeffs: Optional[Mapping] = None):
        self.max_x = max_x
        self.max_y = max_y
        self.coeffs: dict[tuple[int, int], Fraction] = {}
        if coeffs:
            for (ex, ey), c in coeffs.items():
                c = Fraction(c)
                if c and ex <= max_x and ey <= max_y:
                    self.coeffs[(ex, ey)] = c

    def coefficient(self, ex: int, ey: int) -> Fraction:
        return self.coeffs.get((ex, ey), Fraction(0))

    def y_block(self, ey: int) -> list[Fraction]:
        """Coefficients of y^ey as a dense list indexed by x-degree."""
        return [self.coefficient(ex, ey) for ex in range(self.max_x + 1)]

    def _same_box(self, other: "TruncatedSeries"):
        if (self.max_x, self.max_y) != (other.max_x, other.max_y):
            raise ValueError("truncation rectangles differ")

    def __add__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        self._same_box(other)
        out = dict(self.coeffs)
        for key, c in other.coeffs.items():
            out[key] = out.get(key, Fraction(0)) + c
        return TruncatedSeries(self.max_x, self.max_y, out)

    def __neg__(self) -> "TruncatedSeries":
        return TruncatedSeries(
            self.max_x, self.max_y, {k: -c for k, c in self.coeffs.items()}
        )

    def __sub__(self, other: "TruncatedSeries") -> "TruncatedSeries":
        return self + (-other)

    def __mul__(self, other) -> "TruncatedSeries":
        if not isinstance(other, TruncatedSeries):
            return TruncatedSeries(
                self.max_x,
                self.max_y,
                {k: c * Fraction(other) for k, c in self.coeffs.items()},
            )
        self._same_box(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (x1, y1), c1 in self.coeffs.items():
            for (x2, y2), c2 in other.coeffs.items():
                ex, ey = x1 + x2, y1 + y2
                if ex <= self.max_x and ey <= self.max_y:
                    key = (ex, ey)
                    out[key] = out.get(key, Fraction(0)) + c1 * c2
        return TruncatedSeries(self.max_x, self.max_y, out)

    __rmul__ = __mul__

    def exp(self) -> "TruncatedSeries":
        """exp of a series with zero constant term and no y-degree-0 part
        (so the power sum terminates within the truncation box)."""
        if any(ey == 0 for (_, ey) in self.coeffs):
            raise ValueError("exp needs every term to carry a positive y-degree")
        result = TruncatedSeries(self.max_x, self.max_y, {(0, 0): Fraction(1)})
        power = TruncatedSeries(self.max_x, self.max_y, {(0, 0): Fraction(1)})
        for t in range(1, self.max_y + 1):
            power = power * self
            result = result + power * Fraction(1, factorial(t))
        return result

    def __eq__(self, other):
        return (
            isinstance(other, TruncatedSeries)
            and (self.max_x, self.max_y) == (other.max_x, other.max_y)
            and self.coeffs == other.coeffs
        )

    def __repr__(self):
        terms = sorted(self.coeffs.items(), key=lambda kv: (kv[0][1], kv[0][0]))
        body = " + ".join(f"{c}*x^{ex}*y^{ey}" for (ex, ey), c in terms[:12])
        more = " + ..." if len(terms) > 12 else ""
        return f"TruncatedSeries({body}{more})"


def series_direct(d: int, max_blocks_guard: int = 64) -> TruncatedSeries:
    """The double generating function of the Stirling-type factor, assembled
    termwise: sum over i, j of {2i over j}_i x^j y^i / i!, complete through
    the y^d block (x-degree up to 2d)."""
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > max_blocks_guard:
        raise SizeGuardError(f"d = {d} exceeds the guard of {max_blocks_guard}")
    coeffs = {(0, 0): Fraction(1)}
    for i in range(1, d + 1):
        for j in range(i, 2 * i + 1):
            coeffs[(j, i)] = Fraction(r_stirling2(2 * i, j, i), factorial(i))
    return TruncatedSeries(2 * d, d, coeffs)


def _lambert_w_xy(d: int) -> dict[int, Fraction]:
    """Diagonal coefficients of W(-x y): term i is c_i (x y)^i with
    c_i = (-i)^(i-1) (-1)^i / i!, from the Lambert W series
    W(z) = sum (-i)^(i-1) z^i / i!."""
    return {
        i: Fraction((-i) ** (i - 1) * (-1) ** i, factorial(i)) for i in range(1, d + 1)
    }


def series_closed(d: int, max_blocks_guard: int = 64) -> TruncatedSeries:
    """The same generating function from its closed form

        exp(-(W(-x y)/y + x)) / (1 + W(-x y)).

    W(-x y)/y has the single y-degree-0 term -x, cancelled exactly by the +x,
    so the exponent argument and the reciprocal expansion both live in
    positive y-degrees and the truncated algebra is exact blockwise.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    if d > max_blocks_guard:
        raise SizeGuardError(f"d = {d} exceeds the guard of {max_blocks_guard}")
    max_x, max_y = 2 * d, d
    w_diag = _lambert_w_xy(d + 1)

    # -(W(-xy)/y + x): the i-th W term contributes at (x^i, y^(i-1)).
    arg = {}
    for i, c in w_diag.items():
        if i == 1:
            continue  # the -x term, cancelled by +x
        if i - 1 <= max_y and i <= max_x:
            arg[(i, i - 1)] = -c
    exponent = TruncatedSeries(max_x, max_y, arg)
    numerator = exponent.exp()

    # 1 / (1 + W(-xy)) via the geometric series in -W(-xy).
    w = TruncatedSeries(
        max_x, max_y, {(i, i): c for i, c in w_diag.items() if i <= max_y}
    )
    one = TruncatedSeries(max_x, max_y, {(0, 0): Fraction(1)})
    inv = one
    power = one
    for _ in range(max_y):
        power = power * (-w)
        inv = inv + power
    return numerator * inv
