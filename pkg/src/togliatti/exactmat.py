"""Exact linear algebra over Q and Z.

Everything here works on Python integers and :class:`fractions.Fraction`;
there is no floating point anywhere.  Rank and nullspace use fraction-free
elimination so intermediate entries stay integral (they are minors of the
input), which keeps the large evaluation matrices of the lattice module
cheap.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, lcm
from typing import Iterable, Sequence

Number = int | Fraction


@dataclass(frozen=True)
class Matrix:
    """Dense row-major matrix of exact numbers (``int`` or ``Fraction``).

    The column count is stored explicitly so that matrices with zero rows
    keep their shape.
    """

    rows: int
    cols: int
    entries: tuple[tuple[Number, ...], ...]

    def __post_init__(self):
        if len(self.entries) != self.rows or any(len(r) != self.cols for r in self.entries):
            raise ValueError("entries do not match the declared shape")

    @classmethod
    def from_rows(cls, rows: Iterable[Sequence[Number]], cols: int | None = None) -> "Matrix":
        entries = tuple(tuple(r) for r in rows)
        if cols is None:
            if not entries:
                raise ValueError("cols is required for a matrix without rows")
            cols = len(entries[0])
        return cls(len(entries), cols, entries)

    @classmethod
    def zeros(cls, rows: int, cols: int) -> "Matrix":
        return cls(rows, cols, tuple((0,) * cols for _ in range(rows)))

    @classmethod
    def identity(cls, size: int) -> "Matrix":
        return cls(size, size, tuple(tuple(int(i == j) for j in range(size)) for i in range(size)))

    @classmethod
    def diagonal(cls, values: Sequence[Number]) -> "Matrix":
        k = len(values)
        return cls(k, k, tuple(tuple(values[i] if i == j else 0 for j in range(k)) for i in range(k)))

    def __getitem__(self, ij: tuple[int, int]) -> Number:
        i, j = ij
        return self.entries[i][j]

    def __iter__(self):
        return iter(self.entries)

    @property
    def shape(self) -> tuple[int, int]:
        return self.rows, self.cols

    @property
    def T(self) -> "Matrix":
        return Matrix(self.cols, self.rows, tuple(zip(*self.entries)) if self.rows else tuple(() for _ in range(self.cols)))

    def __matmul__(self, other: "Matrix") -> "Matrix":
        if self.cols != other.rows:
            raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
        cols = other.T.entries
        return Matrix(
            self.rows,
            other.cols,
            tuple(tuple(sum(a * b for a, b in zip(r, c)) for c in cols) for r in self.entries),
        )

    def apply(self, vector: Sequence[Number]) -> tuple[Number, ...]:
        """Matrix-vector product ``M @ v``."""
        if len(vector) != self.cols:
            raise ValueError("vector length does not match column count")
        return tuple(sum(a * b for a, b in zip(r, vector)) for r in self.entries)

    def is_integral(self) -> bool:
        return all(isinstance(x, int) or x.denominator == 1 for r in self.entries for x in r)

    def tolist(self) -> list[list[Number]]:
        return [list(r) for r in self.entries]


def as_matrix(m: Matrix | Sequence[Sequence[Number]], cols: int | None = None) -> Matrix:
    if isinstance(m, Matrix):
        return m
    return Matrix.from_rows(m, cols)


def _integral_rows(m: Matrix) -> list[list[int]]:
    # Row scaling does not change rank or row space.
    out = []
    for row in m.entries:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        out.append([int(x * den) for x in row])
    return out


def _fraction_free_gauss_jordan(rows: list[list[int]], ncols: int, full: bool):
    """In-place fraction-free elimination.

    With ``full`` the rows above each pivot are cleared too, giving a
    scaled reduced echelon form in which every pivot entry equals the last
    pivot.  Returns (rank, pivot columns).  All divisions are exact.
    """
    nr = len(rows)
    prev = 1
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nr:
            break
        p = next((i for i in range(r, nr) if rows[i][c]), None)
        if p is None:
            continue
        rows[r], rows[p] = rows[p], rows[r]
        prow = rows[r]
        pc = prow[c]
        targets = range(nr) if full else range(r + 1, nr)
        for i in targets:
            if i == r:
                continue
            row = rows[i]
            f = row[c]
            if f:
                rows[i] = [(pc * a - f * b) // prev for a, b in zip(row, prow)]
            elif pc != prev:
                rows[i] = [(pc * a) // prev for a in row]
        prev = pc
        pivots.append(c)
        r += 1
    return r, pivots


def rank(m: Matrix | Sequence[Sequence[Number]]) -> int:
    """Exact rank via Bareiss elimination."""
    m = as_matrix(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    rows = _integral_rows(m)
    # Eliminating along the shorter side is cheaper.
    if m.rows > m.cols:
        rows = [list(c) for c in zip(*rows)]
        ncols = m.rows
    else:
        ncols = m.cols
    r, _ = _fraction_free_gauss_jordan(rows, ncols, full=False)
    return r


def rref(m: Matrix | Sequence[Sequence[Number]]) -> tuple[Matrix, list[int]]:
    """Reduced row echelon form (nonzero rows only) and pivot columns."""
    m = as_matrix(m)
    if m.rows == 0:
        return Matrix(0, m.cols, ()), []
    rows = _integral_rows(m)
    r, pivots = _fraction_free_gauss_jordan(rows, m.cols, full=True)
    reduced = []
    for i in range(r):
        p = rows[i][pivots[i]]
        reduced.append(tuple(Fraction(x, p) for x in rows[i]))
    return Matrix(r, m.cols, tuple(reduced)), pivots


def nullspace_basis(m: Matrix | Sequence[Sequence[Number]]) -> list[tuple[Fraction, ...]]:
    """Basis of ``{v : M v = 0}``, itself in reduced echelon form.

    One vector per free column; the vectors are ordered so that stacking
    them gives a matrix in reduced echelon form (leading 1 in the free
    column, zeros in the other free columns).
    """
    m = as_matrix(m)
    red, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for f in free:
        v = [Fraction(0)] * m.cols
        v[f] = Fraction(1)
        for i, p in enumerate(pivots):
            v[p] = -red.entries[i][f]
        basis.append(tuple(v))
    # Leading entries may sit in pivot columns; re-reduce for a canonical basis.
    if not basis:
        return []
    normalized, _ = rref(Matrix.from_rows(basis))
    return list(normalized.entries)


def nullity(m: Matrix | Sequence[Sequence[Number]]) -> int:
    m = as_matrix(m)
    return m.cols - rank(m)


def determinant(m: Matrix | Sequence[Sequence[Number]]) -> Number:
    """Exact determinant of a square matrix (Bareiss)."""
    m = as_matrix(m)
    if m.rows != m.cols:
        raise ValueError("determinant of a non-square matrix")
    n = m.rows
    if n == 0:
        return 1
    scale = Fraction(1)
    rows = []
    for row in m.entries:
        den = 1
        for x in row:
            if isinstance(x, Fraction):
                den = lcm(den, x.denominator)
        scale /= den
        rows.append([int(x * den) for x in row])
    sign = 1
    prev = 1
    for c in range(n - 1):
        p = next((i for i in range(c, n) if rows[i][c]), None)
        if p is None:
            return 0
        if p != c:
            rows[c], rows[p] = rows[p], rows[c]
            sign = -sign
        pc = rows[c][c]
        for i in range(c + 1, n):
            rows[i] = [(pc * rows[i][j] - rows[i][c] * rows[c][j]) // prev for j in range(n)]
        prev = pc
    det = sign * rows[n - 1][n - 1] * scale
    return int(det) if det.denominator == 1 else det


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with x*a + y*b = g = gcd(a, b) >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, a, b = a // b, b, a % b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _int_rows(m: Matrix) -> list[list[int]]:
    if not m.is_integral():
        raise ValueError("integer matrix expected")
    return [[int(x) for x in r] for r in m.entries]


def hermite_normal_form(a: Matrix | Sequence[Sequence[int]]) -> tuple[Matrix, Matrix]:
    """Row-style Hermite normal form: returns (H, U) with ``H = U @ A``.

    ``U`` is unimodular; ``H`` is in echelon form with positive pivots,
    entries above each pivot reduced into ``[0, pivot)`` and zero rows at
    the bottom.
    """
    a = as_matrix(a)
    m, n = a.shape
    h = _int_rows(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)]

    def combine(r1, r2, x, y, z, w):
        for mat in (h, u):
            s, t = mat[r1], mat[r2]
            mat[r1] = [x * p + y * q for p, q in zip(s, t)]
            mat[r2] = [z * p + w * q for p, q in zip(s, t)]

    row = 0
    for col in range(n):
        if row == m:
            break
        for i in range(row + 1, m):
            b = h[i][col]
            if b == 0:
                continue
            top = h[row][col]
            g, x, y = _xgcd(top, b)
            combine(row, i, x, y, -b // g, top // g)
        piv = h[row][col]
        if piv == 0:
            continue
        if piv < 0:
            h[row] = [-v for v in h[row]]
            u[row] = [-v for v in u[row]]
            piv = -piv
        for i in range(row):
            q = h[i][col] // piv
            if q:
                h[i] = [p - q * s for p, s in zip(h[i], h[row])]
                u[i] = [p - q * s for p, s in zip(u[i], u[row])]
        row += 1
    return Matrix.from_rows(h, n), Matrix.from_rows(u, m)


def smith_normal_form(a: Matrix | Sequence[Sequence[int]]) -> tuple[Matrix, Matrix, Matrix]:
    """Smith normal form: returns (S, U, V) with ``S = U @ A @ V``.

    ``S`` is diagonal with nonnegative entries d_1 | d_2 | ... (zeros last);
    ``U`` and ``V`` are unimodular.
    """
    a = as_matrix(a)
    m, n = a.shape
    s = _int_rows(a)
    u = [[int(i == j) for j in range(m)] for i in range(m)]
    v = [[int(i == j) for j in range(n)] for i in range(n)]

    def swap_rows(i, j):
        s[i], s[j] = s[j], s[i]
        u[i], u[j] = u[j], u[i]

    def swap_cols(i, j):
        for mat in (s, v):
            for row in mat:
                row[i], row[j] = row[j], row[i]

    def add_row(dst, src, q):  # row_dst += q * row_src
        s[dst] = [x + q * y for x, y in zip(s[dst], s[src])]
        u[dst] = [x + q * y for x, y in zip(u[dst], u[src])]

    def add_col(dst, src, q):  # col_dst += q * col_src
        for mat in (s, v):
            for row in mat:
                row[dst] += q * row[src]

    for t in range(min(m, n)):
        best = None
        for i in range(t, m):
            for j in range(t, n):
                if s[i][j] and (best is None or abs(s[i][j]) < abs(s[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        swap_rows(t, best[0])
        swap_cols(t, best[1])
        while True:
            changed = False
            for i in range(t + 1, m):
                if s[i][t]:
                    add_row(i, t, -(s[i][t] // s[t][t]))
                    if s[i][t]:
                        swap_rows(t, i)
                        changed = True
            for j in range(t + 1, n):
                if s[t][j]:
                    add_col(j, t, -(s[t][j] // s[t][t]))
                    if s[t][j]:
                        swap_cols(t, j)
                        changed = True
            if changed:
                continue
            piv = s[t][t]
            bad = next(
                ((i, j) for i in range(t + 1, m) for j in range(t + 1, n) if s[i][j] % piv),
                None,
            )
            if bad is None:
                break
            add_row(t, bad[0], 1)
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
    return Matrix.from_rows(s, n), Matrix.from_rows(u, m), Matrix.from_rows(v, n)


def invariant_factors(a: Matrix | Sequence[Sequence[int]]) -> list[int]:
    """Nonzero diagonal entries of the Smith normal form."""
    s, _, _ = smith_normal_form(a)
    return [s[i, i] for i in range(min(s.shape)) if s[i, i]]


def is_saturated(a: Matrix | Sequence[Sequence[int]]) -> bool:
    """True iff the lattice spanned by the rows equals Z^n intersected with their real span."""
    a = as_matrix(a)
    if a.rows == 0:
        return True
    return all(f == 1 for f in invariant_factors(a))


def content(values: Iterable[int]) -> int:
    g = 0
    for x in values:
        g = gcd(g, x)
    return g
