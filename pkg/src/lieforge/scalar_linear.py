"""Exact scalars and dense exact linear algebra.

Scalars are arbitrary-precision rationals (``fractions.Fraction``, always in
lowest terms with positive denominator) or Gaussian rationals.  Everything in
this module is exact; there is no floating point and no tolerance anywhere.
"""

from __future__ import annotations

from fractions import Fraction

__all__ = [
    "Scalar",
    "Q",
    "GaussScalar",
    "GAUSS_I",
    "Matrix",
    "SpanSolver",
    "solve_in_span",
    "rank",
    "LieforgeError",
    "DimensionMismatchError",
    "SingularMatrixError",
    "PreconditionError",
    "scalar_to_str",
    "scalar_from_str",
]


class LieforgeError(Exception):
    """Base class for all errors raised by this package."""


class DimensionMismatchError(LieforgeError):
    pass


class PreconditionError(LieforgeError):
    """An operation was called on inputs violating its stated precondition.

    Kept distinct from a failing verification: a failed check is a result,
    a violated precondition is a usage error.
    """

    def __init__(self, message, details=None):
        super().__init__(message)
        self.details = details


class SingularMatrixError(LieforgeError):
    """Inversion failed; ``kernel`` holds a nonzero kernel vector as witness."""

    def __init__(self, message, kernel):
        super().__init__(message)
        self.kernel = kernel


Scalar = Fraction


def Q(num, den=1):
    """Exact rational scalar."""
    return Fraction(num, den)


_ZERO = Fraction(0)
_ONE = Fraction(1)


class GaussScalar:
    """Gaussian rational re + im*i with exact rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re=0, im=0):
        self.re = Fraction(re)
        self.im = Fraction(im)

    def __repr__(self):
        return "GaussScalar(%r, %r)" % (self.re, self.im)

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def __eq__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return self.re == other.re and self.im == other.im

    def __hash__(self):
        if not self.im:
            return hash(self.re)
        return hash((self.re, self.im))

    def __neg__(self):
        return GaussScalar(-self.re, -self.im)

    def __add__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar(other.re - self.re, other.im - self.im)

    def __mul__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return GaussScalar(
            self.re * other.re - self.im * other.im,
            self.re * other.im + self.im * other.re,
        )

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        n = other.re * other.re + other.im * other.im
        if not n:
            raise ZeroDivisionError("division by zero GaussScalar")
        return GaussScalar(
            (self.re * other.re + self.im * other.im) / n,
            (self.im * other.re - self.re * other.im) / n,
        )

    def __rtruediv__(self, other):
        other = _as_gauss(other)
        if other is NotImplemented:
            return NotImplemented
        return other / self

    def conjugate(self):
        return GaussScalar(self.re, -self.im)


def _as_gauss(x):
    if isinstance(x, GaussScalar):
        return x
    if isinstance(x, (int, Fraction)):
        return GaussScalar(x)
    return NotImplemented


GAUSS_I = GaussScalar(0, 1)


def scalar_to_str(s):
    """Serialize a scalar: "p/q" with the /q omitted when q is 1.

    Gaussian scalars serialize as "p/q+r/s*i" (the sign of the imaginary
    part folds into r).
    """
    if isinstance(s, GaussScalar):
        return "%s+%s*i" % (s.re, s.im)
    return str(Fraction(s))


def scalar_from_str(text):
    """Parse the output of :func:`scalar_to_str`."""
    text = text.strip()
    if text.endswith("*i"):
        body = text[:-2]
        # split on the '+' that separates the parts, not a sign
        k = body.rfind("+", 1)
        if k <= 0:
            raise ValueError("bad GaussScalar literal: %r" % text)
        return GaussScalar(Fraction(body[:k]), Fraction(body[k + 1 :]))
    return Fraction(text)


class Matrix:
    """Dense exact matrix with Fraction or GaussScalar entries, row major."""

    __slots__ = ("rows", "cols", "data")

    def __init__(self, data):
        data = [list(r) for r in data]
        self.rows = len(data)
        self.cols = len(data[0]) if data else 0
        for r in data:
            if len(r) != self.cols:
                raise DimensionMismatchError("ragged rows in matrix")
        self.data = data

    @classmethod
    def zeros(cls, rows, cols=None):
        cols = rows if cols is None else cols
        return cls([[_ZERO] * cols for _ in range(rows)])

    @classmethod
    def identity(cls, n):
        m = cls.zeros(n, n)
        for i in range(n):
            m.data[i][i] = _ONE
        return m

    @classmethod
    def from_columns(cls, columns):
        if not columns:
            return cls([])
        n = len(columns[0])
        for c in columns:
            if len(c) != n:
                raise DimensionMismatchError("columns of unequal length")
        return cls([[columns[j][i] for j in range(len(columns))] for i in range(n)])

    def column(self, j):
        return [self.data[i][j] for i in range(self.rows)]

    def copy(self):
        return Matrix([row[:] for row in self.data])

    def transpose(self):
        return Matrix([[self.data[i][j] for i in range(self.rows)] for j in range(self.cols)])

    def __eq__(self, other):
        if not isinstance(other, Matrix):
            return NotImplemented
        return (
            self.rows == other.rows
            and self.cols == other.cols
            and all(a == b for ra, rb in zip(self.data, other.data) for a, b in zip(ra, rb))
        )

    def __hash__(self):
        return hash(tuple(tuple(r) for r in self.data))

    def __repr__(self):
        return "Matrix(%r)" % (self.data,)

    def is_zero(self):
        return all(not e for row in self.data for e in row)

    def __neg__(self):
        return Matrix([[-e for e in row] for row in self.data])

    def __add__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("matrix shapes differ")
        return Matrix(
            [[a + b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def __sub__(self, other):
        if self.rows != other.rows or self.cols != other.cols:
            raise DimensionMismatchError("matrix shapes differ")
        return Matrix(
            [[a - b for a, b in zip(ra, rb)] for ra, rb in zip(self.data, other.data)]
        )

    def scale(self, s):
        return Matrix([[s * e for e in row] for row in self.data])

    def __mul__(self, other):
        if isinstance(other, Matrix):
            if self.cols != other.rows:
                raise DimensionMismatchError(
                    "cannot multiply %dx%d by %dx%d"
                    % (self.rows, self.cols, other.rows, other.cols)
                )
            od = other.data
            out = []
            for row in self.data:
                acc = [_ZERO] * other.cols
                for k, a in enumerate(row):
                    if not a:
                        continue
                    orow = od[k]
                    for j, b in enumerate(orow):
                        if b:
                            acc[j] = acc[j] + a * b
                out.append(acc)
            return Matrix(out)
        return self.scale(other)

    def matvec(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length does not match columns")
        out = []
        for row in self.data:
            s = _ZERO
            for a, v in zip(row, vec):
                if a and v:
                    s = s + a * v
            out.append(s)
        return out

    def to_sparse(self):
        """Dict (row, col) -> nonzero entry."""
        return {
            (i, j): e
            for i, row in enumerate(self.data)
            for j, e in enumerate(row)
            if e
        }

    def invert(self):
        """Exact inverse by Gauss-Jordan elimination.

        Raises SingularMatrixError carrying a kernel vector when singular.
        """
        if self.rows != self.cols:
            raise DimensionMismatchError("only square matrices invert")
        n = self.rows
        a = [row[:] for row in self.data]
        inv = [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        # record the elimination so a kernel witness can be reconstructed
        for col in range(n):
            piv = None
            for r in range(col, n):
                if a[r][col]:
                    piv = r
                    break
            if piv is None:
                raise SingularMatrixError(
                    "matrix is singular", kernel=self._kernel_vector(a, col)
                )
            if piv != col:
                a[col], a[piv] = a[piv], a[col]
                inv[col], inv[piv] = inv[piv], inv[col]
            f = a[col][col]
            if f != 1:
                a[col] = [e / f for e in a[col]]
                inv[col] = [e / f for e in inv[col]]
            for r in range(n):
                if r == col:
                    continue
                f = a[r][col]
                if f:
                    a[r] = [e - f * p for e, p in zip(a[r], a[col])]
                    inv[r] = [e - f * p for e, p in zip(inv[r], inv[col])]
        return Matrix(inv)

    def _kernel_vector(self, echelon, dead_col):
        # echelon[:dead_col] is reduced with unit pivots on the diagonal;
        # column dead_col has no pivot, so back-substitution gives a kernel
        # vector of the original matrix with 1 in the dead coordinate.
        v = [_ZERO] * self.cols
        v[dead_col] = _ONE
        for r in range(dead_col - 1, -1, -1):
            v[r] = -echelon[r][dead_col]
        # normalize so the first nonzero coordinate is 1
        for e in v:
            if e:
                return [x / e for x in v]
        return v

    def rank(self):
        solver = SpanSolver(self.rows)
        for j in range(self.cols):
            solver.add({i: e for i, e in enumerate(self.column(j)) if e})
        return solver.rank


class SpanSolver:
    """Incremental exact echelon form over sparse column vectors.

    Supports membership tests against the span of the vectors added so far
    and recovers exact coefficient combinations.  Vectors are dicts mapping
    coordinate index to a nonzero scalar.
    """

    def __init__(self, dim):
        self.dim = dim
        self.rank = 0
        self.count = 0
        # pivot coordinate -> (reduced vector, combination over the inputs)
        self._pivots = {}

    def _reduce(self, vec):
        vec = dict(vec)
        combo = {}
        pivots = self._pivots
        while vec:
            p = min(vec)
            hit = pivots.get(p)
            if hit is None:
                return vec, combo, p
            pvec, pcombo = hit
            f = vec[p] / pvec[p]
            for k, val in pvec.items():
                s = vec.get(k, _ZERO) - f * val
                if s:
                    vec[k] = s
                elif k in vec:
                    del vec[k]
            for k, val in pcombo.items():
                s = combo.get(k, _ZERO) - f * val
                if s:
                    combo[k] = s
                elif k in combo:
                    del combo[k]
        return vec, combo, None

    def add(self, vec):
        """Add a vector to the span; returns True when it enlarged the span."""
        for k in vec:
            if k >= self.dim or k < 0:
                raise DimensionMismatchError("coordinate outside ambient dimension")
        idx = self.count
        self.count += 1
        residue, combo, p = self._reduce(vec)
        if p is None:
            return False
        combo[idx] = combo.get(idx, _ZERO) + _ONE
        # invariant: residue = sum_j combo[j] * input_j
        self._pivots[p] = (residue, combo)
        self.rank += 1
        return True

    def solve(self, vec):
        """Coefficients over the added vectors expressing vec, or None."""
        _, combo, p = self._reduce(vec)
        if p is not None:
            return None
        return {k: -v for k, v in combo.items()}

    def contains(self, vec):
        _, _, p = self._reduce(vec)
        return p is None


def _dense_to_sparse(vec):
    return {i: e for i, e in enumerate(vec) if e}


def solve_in_span(vectors, target):
    """Express target in the span of the given column vectors.

    Returns the coefficient list (one per input vector) or None when the
    target lies outside the span.  All columns must share one dimension.
    """
    vectors = [list(v) for v in vectors]
    target = list(target)
    n = len(target)
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatchError("columns of unequal length")
    solver = SpanSolver(n)
    for v in vectors:
        solver.add(_dense_to_sparse(v))
    combo = solver.solve(_dense_to_sparse(target))
    if combo is None:
        return None
    return [combo.get(j, _ZERO) for j in range(len(vectors))]


def rank(vectors):
    """Rank of the spanned subspace, by exact elimination."""
    vectors = [list(v) for v in vectors]
    if not vectors:
        return 0
    n = len(vectors[0])
    for v in vectors:
        if len(v) != n:
            raise DimensionMismatchError("columns of unequal length")
    solver = SpanSolver(n)
    for v in vectors:
        solver.add(_dense_to_sparse(v))
    return solver.rank
