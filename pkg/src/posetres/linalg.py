"""Exact dense linear algebra over the rationals and prime fields.

Everything downstream (homology ranks, resolution checks) depends on these
being bit-exact, so there is no floating point anywhere.  Rational work is
done in scaled integer arithmetic during elimination and only converted to
Fraction at the very end; GF(p) rows are plain ints reduced mod p.
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from math import gcd


class NotInSpan(Exception):
    """Target vector is not a linear combination of the given basis."""


def _is_prime(n):
    # deterministic Miller-Rabin; bases 2,3,5,7 decide primality below 3.2e9,
    # which covers the allowed characteristic range (<= 2^31 - 1)
    if n < 2:
        return False
    for p in (2, 3, 5, 7):
        if n % p == 0:
            return n == p
    d, s = n - 1, 0
    while d % 2 == 0:
        d //= 2
        s += 1
    for a in (2, 3, 5, 7):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(s - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """Ground field: kind is "rationals" or "prime_field"."""

    kind: str
    characteristic: int = 0

    def __post_init__(self):
        if self.kind == "rationals":
            if self.characteristic != 0:
                raise ValueError("rationals have characteristic 0")
        elif self.kind == "prime_field":
            p = self.characteristic
            if not (2 <= p <= 2**31 - 1 and _is_prime(p)):
                raise ValueError(f"characteristic must be a prime <= 2^31-1, got {p}")
        else:
            raise ValueError(f"unknown field kind {self.kind!r}")

    @staticmethod
    def rationals():
        return FieldSpec("rationals", 0)

    @staticmethod
    def gf(p):
        return FieldSpec("prime_field", p)

    @staticmethod
    def parse(text):
        """Accepts "q", "Q", "gf:<p>" / "gf(p)" style names."""
        t = text.strip().lower()
        if t in ("q", "qq", "rationals", "0"):
            return FieldSpec.rationals()
        for prefix in ("gf:", "gf", "f"):
            if t.startswith(prefix):
                body = t[len(prefix):].strip("()")
                if body.isdigit():
                    return FieldSpec.gf(int(body))
        raise ValueError(f"cannot parse field {text!r}; use q or gf:<p>")

    # --- element helpers (scalars are Fraction for Q, int in [0,p) for GF(p))

    @property
    def zero(self):
        return Fraction(0) if self.characteristic == 0 else 0

    @property
    def one(self):
        return Fraction(1) if self.characteristic == 0 else 1

    def of_int(self, n):
        if self.characteristic == 0:
            return Fraction(n)
        return n % self.characteristic

    def add(self, a, b):
        return a + b if self.characteristic == 0 else (a + b) % self.characteristic

    def sub(self, a, b):
        return a - b if self.characteristic == 0 else (a - b) % self.characteristic

    def mul(self, a, b):
        return a * b if self.characteristic == 0 else (a * b) % self.characteristic

    def neg(self, a):
        return -a if self.characteristic == 0 else (-a) % self.characteristic

    def inv(self, a):
        if self.characteristic == 0:
            if a == 0:
                raise ZeroDivisionError("inverse of zero")
            return 1 / Fraction(a)
        if a % self.characteristic == 0:
            raise ZeroDivisionError("inverse of zero")
        return pow(a, self.characteristic - 2, self.characteristic)

    def __str__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"


QQ = FieldSpec.rationals()
GF2 = FieldSpec.gf(2)
GF3 = FieldSpec.gf(3)


@dataclass(frozen=True)
class Matrix:
    """Dense matrix; entries row-major, canonical form per field."""

    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self):
        if len(self.entries) != self.rows * self.cols:
            raise ValueError("entry count does not match shape")

    @staticmethod
    def from_rows(rowlists, field, cols=None):
        rowlists = [list(r) for r in rowlists]
        if rowlists:
            cols = len(rowlists[0])
            if any(len(r) != cols for r in rowlists):
                raise ValueError("ragged rows")
        elif cols is None:
            cols = 0
        ent = tuple(field.of_int(x) if isinstance(x, int) else x
                    for row in rowlists for x in row)
        return Matrix(len(rowlists), cols, ent, field)

    @staticmethod
    def zeros(rows, cols, field):
        return Matrix(rows, cols, (field.zero,) * (rows * cols), field)

    @staticmethod
    def identity(n, field):
        z, o = field.zero, field.one
        ent = tuple(o if i == j else z for i in range(n) for j in range(n))
        return Matrix(n, n, ent, field)

    def entry(self, i, j):
        return self.entries[i * self.cols + j]

    def row_list(self, i):
        return list(self.entries[i * self.cols:(i + 1) * self.cols])

    def to_rows(self):
        return [self.row_list(i) for i in range(self.rows)]

    def column(self, j):
        return [self.entries[i * self.cols + j] for i in range(self.rows)]

    def transpose(self):
        ent = tuple(self.entries[i * self.cols + j]
                    for j in range(self.cols) for i in range(self.rows))
        return Matrix(self.cols, self.rows, ent, self.field)

    def matvec(self, v):
        if len(v) != self.cols:
            raise ValueError("vector length mismatch")
        f = self.field
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = f.zero
            for j, x in enumerate(v):
                if x:
                    acc = f.add(acc, f.mul(self.entries[base + j], x))
            out.append(acc)
        return out

    def matmul(self, other):
        if self.cols != other.rows:
            raise ValueError("inner dimension mismatch")
        f = self.field
        orows = other.to_rows()
        out = []
        for i in range(self.rows):
            base = i * self.cols
            acc = [f.zero] * other.cols
            for k in range(self.cols):
                a = self.entries[base + k]
                if a:
                    rk = orows[k]
                    acc = [f.add(x, f.mul(a, y)) for x, y in zip(acc, rk)]
            out.extend(acc)
        return Matrix(self.rows, other.cols, tuple(out), f)

    def hstack(self, other):
        if self.rows != other.rows or self.field != other.field:
            raise ValueError("row count or field mismatch")
        rows = [self.row_list(i) + other.row_list(i) for i in range(self.rows)]
        return Matrix.from_rows(rows, self.field, cols=self.cols + other.cols)

    def is_zero(self):
        z = self.field.zero
        return all(x == z for x in self.entries)


@dataclass(frozen=True)
class RrefResult:
    matrix: Matrix
    pivots: tuple
    rank: int


def _strip_gcd(row):
    g = reduce(gcd, row, 0)
    if g > 1:
        return [x // g for x in row]
    return row


def _forward_int(rows, pivot_limit):
    """Fraction-free forward elimination on integer rows, in place.

    Returns the pivot column list.  Rows may end up rescaled (by pivot
    cross-multiplication and gcd stripping), which preserves row space.
    """
    nr = len(rows)
    nc = len(rows[0]) if nr else 0
    limit = nc if pivot_limit is None else min(pivot_limit, nc)
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, nr):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        prow = rows[r]
        pc = prow[c]
        for i in range(r + 1, nr):
            f = rows[i][c]
            if f:
                ri = rows[i]
                rows[i] = _strip_gcd([pc * a - f * b for a, b in zip(ri, prow)])
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return pivots


def _rows_to_int(m):
    """Scale each row of a rational matrix to integers (per-row denominators)."""
    out = []
    for i in range(m.rows):
        row = m.row_list(i)
        den = 1
        for x in row:
            d = x.denominator
            den = den * d // gcd(den, d)
        out.append([int(x.numerator) * (den // x.denominator) for x in row])
    return out


def _rref_rat(m, pivot_limit=None):
    rows = _rows_to_int(m)
    pivots = _forward_int(rows, pivot_limit)
    # Jordan phase: clear above each pivot, still in integers
    for k in reversed(range(len(pivots))):
        c = pivots[k]
        prow = rows[k]
        pc = prow[c]
        for i in range(k):
            f = rows[i][c]
            if f:
                rows[i] = _strip_gcd([pc * a - f * b for a, b in zip(rows[i], prow)])
    out = []
    for k, row in enumerate(rows):
        if k < len(pivots):
            pv = row[pivots[k]]
            out.append([Fraction(x, pv) for x in row])
        else:
            # with a pivot_limit, residual rows may be nonzero past the limit;
            # without one, forward elimination left them exactly zero
            out.append([Fraction(x) for x in row])
    return out, pivots


def _rref_prime(m, pivot_limit=None):
    p = m.field.characteristic
    rows = [m.row_list(i) for i in range(m.rows)]
    nr, nc = m.rows, m.cols
    limit = nc if pivot_limit is None else min(pivot_limit, nc)
    pivots = []
    r = 0
    for c in range(limit):
        pr = None
        for i in range(r, nr):
            if rows[i][c]:
                pr = i
                break
        if pr is None:
            continue
        rows[r], rows[pr] = rows[pr], rows[r]
        inv = pow(rows[r][c], p - 2, p)
        rows[r] = [x * inv % p for x in rows[r]]
        prow = rows[r]
        for i in range(nr):
            if i != r and rows[i][c]:
                f = rows[i][c]
                ri = rows[i]
                rows[i] = [(a - f * b) % p for a, b in zip(ri, prow)]
        pivots.append(c)
        r += 1
        if r == nr:
            break
    return rows, pivots


def rref(m, pivot_limit=None):
    """Reduced row echelon form; deterministic leftmost-pivot strategy.

    pivot_limit restricts pivot search to the first so-many columns, which
    is how augmented solves avoid pivoting in the right-hand block.
    """
    if m.field.characteristic == 0:
        rows, pivots = _rref_rat(m, pivot_limit)
    else:
        rows, pivots = _rref_prime(m, pivot_limit)
    mat = Matrix.from_rows(rows, m.field, cols=m.cols)
    return RrefResult(mat, tuple(pivots), len(pivots))


def rank(m):
    """Rank only; forward elimination, no normalization pass."""
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.characteristic == 0:
        rows = _rows_to_int(m)
        return len(_forward_int(rows, None))
    _, pivots = _rref_prime(m)
    return len(pivots)


def pivot_columns(m, block=None):
    """Pivot columns of m (forward elimination), cheaper than full rref.

    With block=(a, b) only reports pivots with column index in [a, b).
    """
    if m.field.characteristic == 0:
        rows = _rows_to_int(m)
        pivots = _forward_int(rows, None)
    else:
        _, pivots = _rref_prime(m)
    if block is None:
        return list(pivots)
    a, b = block
    return [c for c in pivots if a <= c < b]


def nullspace_basis(m):
    """Basis of the right kernel, ordered by free-column index."""
    res = rref(m)
    pivset = set(res.pivots)
    free = [c for c in range(m.cols) if c not in pivset]
    f = m.field
    basis = []
    R = res.matrix
    for fc in free:
        v = [f.zero] * m.cols
        v[fc] = f.one
        for i, pc in enumerate(res.pivots):
            x = R.entry(i, fc)
            if x:
                v[pc] = f.neg(x)
        basis.append(v)
    return basis


def solve_in_span(basis, target, field=None):
    """Coefficients c with sum(c_i * basis_i) = target, else NotInSpan.

    field defaults to the rationals; pass a prime FieldSpec when the scalars
    are GF(p) residues (plain ints are ambiguous between the two).
    """
    f = field if field is not None else QQ
    n = len(target)
    for v in basis:
        if len(v) != n:
            raise ValueError("vector length mismatch")
    if not basis:
        if any(x for x in target):
            raise NotInSpan("empty basis cannot reach nonzero target")
        return []
    k = len(basis)
    rows = [[basis[j][i] for j in range(k)] + [target[i]] for i in range(n)]
    m = Matrix.from_rows(rows, f, cols=k + 1)
    res = rref(m, pivot_limit=k)
    coeffs = [f.zero] * k
    for i, pc in enumerate(res.pivots):
        coeffs[pc] = res.matrix.entry(i, k)
    # consistency: rows beyond the pivots must not demand anything
    for i in range(res.rank, n):
        if res.matrix.entry(i, k):
            raise NotInSpan("target outside span")
    return coeffs


class LinearSolver:
    """Repeated solves A c = t against a fixed column list.

    Stores the elimination operator E with E·A = R (R the rref of A), so each
    solve is one mat-vec plus a consistency scan.
    """

    def __init__(self, columns, n, fieldspec):
        self.field = fieldspec
        self.n = n
        self.k = len(columns)
        rows = [[columns[j][i] for j in range(self.k)] for i in range(n)]
        aug = [rows[i] + [fieldspec.one if j == i else fieldspec.zero
                          for j in range(n)] for i in range(n)]
        m = Matrix.from_rows(aug, fieldspec, cols=self.k + n)
        res = rref(m, pivot_limit=self.k)
        self.pivots = res.pivots
        self.rank = res.rank
        R = res.matrix
        self.elim_rows = [R.row_list(i)[self.k:] for i in range(n)]

    def solve(self, target):
        f = self.field
        if len(target) != self.n:
            raise ValueError("target length mismatch")
        u = []
        for row in self.elim_rows:
            acc = f.zero
            for a, t in zip(row, target):
                if a and t:
                    acc = f.add(acc, f.mul(a, t))
            u.append(acc)
        for i in range(self.rank, self.n):
            if u[i]:
                raise NotInSpan("target outside span")
        coeffs = [f.zero] * self.k
        for i, pc in enumerate(self.pivots):
            coeffs[pc] = u[i]
        return coeffs
