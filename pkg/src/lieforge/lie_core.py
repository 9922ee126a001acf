"""Structure-constant Lie algebras and the exact tensor checks.

An algebra is a labeled basis plus an antisymmetric structure-constant
table.  Every check sweeps basis tuples, collects witnesses for failures
and returns a :class:`Certificate`; a check passes exactly when its
witness list is empty.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from fractions import Fraction

from .scalar_linear import (
    DimensionMismatchError,
    GaussScalar,
    Matrix,
    PreconditionError,
    SingularMatrixError,
    SpanSolver,
    scalar_to_str,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)

MAX_WITNESSES = 16


@dataclass(frozen=True)
class Witness:
    indices: tuple
    defect: tuple

    def to_json(self):
        return {
            "indices": list(self.indices),
            "defect": [scalar_to_str(c) for c in self.defect],
        }


@dataclass
class Certificate:
    """Verdict of one named check on one target.

    ``witnesses`` holds at most MAX_WITNESSES entries; ``total_failures``
    counts every failing tuple.  ``passed`` is true iff nothing failed.
    """

    check_name: str
    target: str
    passed: bool
    witnesses: list
    total_failures: int
    elapsed_ms: float
    notes: dict = field(default_factory=dict)

    def to_json(self):
        d = {
            "check": self.check_name,
            "target": self.target,
            "pass": self.passed,
            "witnesses": [w.to_json() for w in self.witnesses],
            "total_failures": self.total_failures,
            "elapsed_ms": self.elapsed_ms,
        }
        if self.notes:
            d["notes"] = self.notes
        return d


class _Sweep:
    """Witness accumulator shared by all check implementations."""

    def __init__(self, check_name, target):
        self.check_name = check_name
        self.target = target
        self.witnesses = []
        self.total = 0
        self.t0 = time.perf_counter()

    def fail(self, indices, defect):
        self.total += 1
        if len(self.witnesses) < MAX_WITNESSES:
            self.witnesses.append(Witness(tuple(indices), tuple(defect)))

    def done(self, notes=None, passed=None):
        if passed is None:
            passed = self.total == 0
        return Certificate(
            check_name=self.check_name,
            target=self.target,
            passed=passed,
            witnesses=self.witnesses,
            total_failures=self.total,
            elapsed_ms=(time.perf_counter() - self.t0) * 1000.0,
            notes=notes or {},
        )


def _sparse(vec):
    if isinstance(vec, dict):
        return vec
    return {i: e for i, e in enumerate(vec) if e}


def _dense(vec, dim):
    out = [_ZERO] * dim
    for k, v in vec.items():
        out[k] = v
    return out


def _acc(target, vec, factor=_ONE):
    for k, v in vec.items():
        s = target.get(k, _ZERO) + factor * v
        if s:
            target[k] = s
        elif k in target:
            del target[k]


class LieAlgebra:
    """Lie algebra given by dimension, labels and structure constants.

    The table maps an ordered basis pair (i, j) with i < j to a sparse
    coefficient dict; the bracket extends antisymmetrically and bilinearly.
    Jacobi is verified on construction unless explicitly deferred (builders
    whose output satisfies it identically defer the sweep).
    """

    def __init__(self, labels, table, field="rational", check=True, name="algebra"):
        self.labels = list(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise PreconditionError("basis labels must be unique")
        self.field = field
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        tab = {}
        for (i, j), coeffs in table.items():
            if not (0 <= i < j < self.dim):
                raise PreconditionError(
                    "structure constants must be given for ordered pairs i < j"
                )
            cd = {k: v for k, v in _sparse(coeffs).items() if v}
            for k in cd:
                if not 0 <= k < self.dim:
                    raise DimensionMismatchError("coefficient index out of range")
            if cd:
                tab[(i, j)] = cd
        self.table = tab
        if check:
            cert = check_jacobi(self)
            if not cert.passed:
                w = cert.witnesses[0]
                raise PreconditionError(
                    "Jacobi identity fails at basis triple %s" % (w.indices,),
                    details=cert,
                )

    def index(self, label):
        try:
            return self._index[label]
        except KeyError:
            raise KeyError("no basis element labeled %r in %s" % (label, self.name))

    def basis_vector(self, i):
        v = [_ZERO] * self.dim
        v[i] = _ONE
        return v

    def vector_from_labels(self, coeffs):
        """Dense vector from a {label: coefficient} mapping."""
        v = [_ZERO] * self.dim
        for lab, c in coeffs.items():
            v[self.index(lab)] = Fraction(c) if not isinstance(c, GaussScalar) else c
        return v

    def bracket_basis(self, i, j):
        """Sparse [b_i, b_j]."""
        if i == j:
            return {}
        if i < j:
            return self.table.get((i, j), {})
        neg = self.table.get((j, i))
        if not neg:
            return {}
        return {k: -v for k, v in neg.items()}

    def bracket_sparse(self, u, v):
        out = {}
        table = self.table
        for i, a in u.items():
            for j, b in v.items():
                if i == j:
                    continue
                if i < j:
                    coeffs = table.get((i, j))
                    f = a * b
                else:
                    coeffs = table.get((j, i))
                    f = -(a * b)
                if not coeffs:
                    continue
                for k, c in coeffs.items():
                    s = out.get(k, _ZERO) + f * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def bracket(self, x, y):
        """Bilinear antisymmetric extension of the structure constants."""
        if len(x) != self.dim or len(y) != self.dim:
            raise DimensionMismatchError("vectors must have length %d" % self.dim)
        return _dense(self.bracket_sparse(_sparse(x), _sparse(y)), self.dim)

    def ad(self, i):
        """Adjoint map of the i-th basis element."""
        cols = [self.bracket_basis(i, j) for j in range(self.dim)]
        return LinearMap.from_sparse_columns(self.dim, self.dim, cols)

    def adjoint_connection(self):
        return Connection(self, [self.ad(i) for i in range(self.dim)])

    def same_constants(self, other):
        """Equality of structure-constant tables (labels ignored)."""
        return self.dim == other.dim and self.table == other.table

    def relabeled(self, labels, name=None):
        return LieAlgebra(
            labels, self.table, field=self.field, check=False, name=name or self.name
        )

    def __repr__(self):
        return "LieAlgebra(%s, dim=%d)" % (self.name, self.dim)


class LinearMap:
    """Exact linear map, stored dense with cached sparse columns."""

    def __init__(self, matrix):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        self.matrix = matrix
        self._cols = None

    @classmethod
    def from_sparse_columns(cls, rows, cols, sparse_cols):
        data = [[_ZERO] * cols for _ in range(rows)]
        for j, col in enumerate(sparse_cols):
            for i, v in col.items():
                data[i][j] = v
        m = cls(Matrix(data))
        m._cols = [dict(c) for c in sparse_cols]
        return m

    @classmethod
    def zero(cls, rows, cols=None):
        return cls(Matrix.zeros(rows, cols))

    @classmethod
    def identity(cls, n):
        return cls(Matrix.identity(n))

    @property
    def rows(self):
        return self.matrix.rows

    @property
    def cols(self):
        return self.matrix.cols

    def sparse_columns(self):
        if self._cols is None:
            self._cols = [
                {i: e for i, e in enumerate(self.matrix.column(j)) if e}
                for j in range(self.cols)
            ]
        return self._cols

    def apply_sparse(self, vec):
        cols = self.sparse_columns()
        out = {}
        for j, a in vec.items():
            _acc(out, cols[j], a)
        return out

    def apply(self, vec):
        if len(vec) != self.cols:
            raise DimensionMismatchError("vector length does not match map domain")
        return _dense(self.apply_sparse(_sparse(vec)), self.rows)

    def compose(self, other):
        """self after other."""
        if self.cols != other.rows:
            raise DimensionMismatchError("composition shape mismatch")
        cols = [self.apply_sparse(c) for c in other.sparse_columns()]
        return LinearMap.from_sparse_columns(self.rows, other.cols, cols)

    def __add__(self, other):
        return LinearMap(self.matrix + other.matrix)

    def __sub__(self, other):
        return LinearMap(self.matrix - other.matrix)

    def __neg__(self):
        return LinearMap(-self.matrix)

    def scale(self, s):
        return LinearMap(self.matrix.scale(s))

    def __eq__(self, other):
        if not isinstance(other, LinearMap):
            return NotImplemented
        return self.matrix == other.matrix

    def __hash__(self):
        return hash(self.matrix)

    def transpose(self):
        return LinearMap(self.matrix.transpose())

    def is_identity(self):
        return self.rows == self.cols and self.matrix == Matrix.identity(self.rows)

    def squares_to_minus_identity(self):
        if self.rows != self.cols:
            return False
        sq = self.compose(self)
        return sq.matrix == Matrix.identity(self.rows).scale(Fraction(-1))

    def __repr__(self):
        return "LinearMap(%dx%d)" % (self.rows, self.cols)


class AlmostComplex(LinearMap):
    """Endomorphism whose square is minus the identity (verified)."""

    def __init__(self, matrix):
        if isinstance(matrix, LinearMap):
            matrix = matrix.matrix
        super().__init__(matrix)
        if self.rows != self.cols:
            raise PreconditionError("almost complex structure must be square")
        if not self.squares_to_minus_identity():
            raise PreconditionError("map squared is not minus the identity")

    @classmethod
    def from_pairs(cls, dim, pairs):
        """Signed-permutation structure taking a to b and b to -a for each (a, b)."""
        cols = [None] * dim
        for a, b in pairs:
            if cols[a] is not None or cols[b] is not None:
                raise PreconditionError("pairing touches an index twice")
            cols[a] = {b: _ONE}
            cols[b] = {a: -_ONE}
        missing = [i for i, c in enumerate(cols) if c is None]
        if missing:
            raise PreconditionError("pairing leaves indices %s unmatched" % missing)
        return cls(LinearMap.from_sparse_columns(dim, dim, cols).matrix)


class Connection:
    """Basis-indexed family of linear maps on a module.

    Entry i is the operator attached to the i-th basis element; the family
    extends linearly in the subscript.  The same object models a
    representation of the algebra and a connection on it.
    """

    def __init__(self, algebra, maps):
        self.algebra = algebra
        if len(maps) != algebra.dim:
            raise DimensionMismatchError("need one map per basis element")
        maps = [m if isinstance(m, LinearMap) else LinearMap(m) for m in maps]
        md = maps[0].rows if maps else 0
        for m in maps:
            if m.rows != md or m.cols != md:
                raise DimensionMismatchError("connection maps must be square and equal size")
        self.maps = maps
        self.module_dim = md

    def __getitem__(self, i):
        return self.maps[i]

    def at(self, x):
        """Operator at an arbitrary algebra vector (linear in the subscript)."""
        x = _sparse(x)
        cols = [dict() for _ in range(self.module_dim)]
        for i, c in x.items():
            mcols = self.maps[i].sparse_columns()
            for j in range(self.module_dim):
                _acc(cols[j], mcols[j], c)
        return LinearMap.from_sparse_columns(self.module_dim, self.module_dim, cols)

    def apply_sparse(self, x, v):
        """Sparse evaluation of the operator at x applied to module vector v."""
        x = _sparse(x)
        out = {}
        for i, c in x.items():
            _acc(out, self.maps[i].apply_sparse(v), c)
        return out

    def dual(self):
        """Contragredient family: each operator becomes minus its transpose."""
        return Connection(self.algebra, [-m.transpose() for m in self.maps])

    def __repr__(self):
        return "Connection(%s, module_dim=%d)" % (self.algebra.name, self.module_dim)


class BilinearForm:
    """Bilinear form with an exactly enforced symmetry kind."""

    SYMMETRIC = "symmetric"
    SKEW = "skew"

    def __init__(self, matrix, kind):
        if not isinstance(matrix, Matrix):
            matrix = Matrix(matrix)
        if matrix.rows != matrix.cols:
            raise PreconditionError("bilinear form matrix must be square")
        if kind not in (self.SYMMETRIC, self.SKEW):
            raise PreconditionError("kind must be 'symmetric' or 'skew'")
        t = matrix.transpose()
        if kind == self.SYMMETRIC and t != matrix:
            raise PreconditionError("matrix is not symmetric")
        if kind == self.SKEW and t != -matrix:
            raise PreconditionError("matrix is not skew")
        self.matrix = matrix
        self.kind = kind
        self.dim = matrix.rows

    def value(self, x, y):
        xs, ys = _sparse(x), _sparse(y)
        s = _ZERO
        data = self.matrix.data
        for i, a in xs.items():
            row = data[i]
            for j, b in ys.items():
                e = row[j]
                if e:
                    s = s + a * e * b
        return s

    def value_basis(self, i, j):
        return self.matrix.data[i][j]

    def __repr__(self):
        return "BilinearForm(%s, dim=%d)" % (self.kind, self.dim)


# ---------------------------------------------------------------------------
# checks


def check_jacobi(L, target=None):
    """Cyclic Jacobi sum over all basis triples i < j < k."""
    sweep = _Sweep("jacobi", target or L.name)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            bij = L.table.get((i, j), {})
            for k in range(j + 1, n):
                acc = dict(L.bracket_sparse({i: _ONE}, L.bracket_basis(j, k)))
                _acc(acc, L.bracket_sparse({j: _ONE}, L.bracket_basis(k, i)))
                _acc(acc, L.bracket_sparse({k: _ONE}, bij))
                if acc:
                    sweep.fail((i, j, k), _dense(acc, n))
    return sweep.done()


def _require_almost_complex(L, J):
    if J.rows != L.dim or J.cols != L.dim:
        raise DimensionMismatchError("endomorphism does not match algebra dimension")
    if not J.squares_to_minus_identity():
        raise PreconditionError("map squared is not minus the identity")


def nijenhuis_sparse(L, J, u, v):
    out = dict(J.apply_sparse(L.bracket_sparse(u, v)))
    Ju = J.apply_sparse(u)
    Jv = J.apply_sparse(v)
    _acc(out, L.bracket_sparse(Ju, v), -_ONE)
    _acc(out, L.bracket_sparse(u, Jv), -_ONE)
    _acc(out, J.apply_sparse(L.bracket_sparse(Ju, Jv)), -_ONE)
    return out


def nijenhuis(L, J, x, y):
    """Torsion of the almost complex structure at the pair (x, y)."""
    if len(x) != L.dim or len(y) != L.dim:
        raise DimensionMismatchError("vectors must have length %d" % L.dim)
    return _dense(nijenhuis_sparse(L, J, _sparse(x), _sparse(y)), L.dim)


def check_integrable(L, J, split=None, target=None):
    """Vanishing of the structure torsion on basis pairs.

    With ``split`` given (a half basis u whose union with Ju spans the
    algebra, verified here), only pairs inside the half basis are swept;
    that suffices because vanishing there forces identical vanishing.
    """
    _require_almost_complex(L, J)
    sweep = _Sweep("integrable", target or L.name)
    n = L.dim
    if split is None:
        cols = J.sparse_columns()
        for i in range(n):
            for j in range(i + 1, n):
                acc = dict(J.apply_sparse(L.bracket_basis(i, j)))
                _acc(acc, L.bracket_sparse(cols[i], {j: _ONE}), -_ONE)
                _acc(acc, L.bracket_sparse({i: _ONE}, cols[j]), -_ONE)
                _acc(acc, J.apply_sparse(L.bracket_sparse(cols[i], cols[j])), -_ONE)
                if acc:
                    sweep.fail((i, j), _dense(acc, n))
        return sweep.done()

    vectors = [_sparse(v) for v in split]
    solver = SpanSolver(n)
    for v in vectors:
        solver.add(dict(v))
    for v in vectors:
        solver.add(J.apply_sparse(v))
    if solver.rank != n:
        raise PreconditionError(
            "half basis and its image span a %d-dimensional subspace of a "
            "%d-dimensional algebra" % (solver.rank, n)
        )
    for a in range(len(vectors)):
        for b in range(a + 1, len(vectors)):
            acc = nijenhuis_sparse(L, J, vectors[a], vectors[b])
            if acc:
                sweep.fail((a, b), _dense(acc, n))
    return sweep.done(notes={"split": True})


def check_complex_lie(L, J, target=None):
    """Bi-invariance: every adjoint operator commutes with the structure."""
    _require_almost_complex(L, J)
    sweep = _Sweep("complex_lie", target or L.name)
    n = L.dim
    cols = J.sparse_columns()
    for i in range(n):
        for j in range(n):
            # ad(b_i) J b_j - J ad(b_i) b_j
            acc = dict(L.bracket_sparse({i: _ONE}, cols[j]))
            _acc(acc, J.apply_sparse(L.bracket_basis(i, j)), -_ONE)
            if acc:
                sweep.fail((i, j), _dense(acc, n))
    return sweep.done()


def check_abelian_complex(L, J, target=None):
    """Whether both eigenspaces in the complexification are abelian."""
    from .constructions import complexify, holomorphic_eigenbasis

    _require_almost_complex(L, J)
    sweep = _Sweep("abelian_complex", target or L.name)
    LC = complexify(L)
    plus, minus = holomorphic_eigenbasis(L, J)
    for name, vecs in (("eigen_plus", plus), ("eigen_minus", minus)):
        for a in range(len(vecs)):
            for b in range(a + 1, len(vecs)):
                acc = LC.bracket_sparse(vecs[a], vecs[b])
                if acc:
                    sweep.fail((name, a, b), _dense(acc, LC.dim))
    return sweep.done()


def check_representation(rho, target=None):
    """Defect of rho([b_i, b_j]) against the operator commutator.

    This is simultaneously the flatness test for connections.
    """
    L = rho.algebra
    sweep = _Sweep("representation", target or L.name)
    n, m = L.dim, rho.module_dim
    for i in range(n):
        mi = rho.maps[i]
        for j in range(i + 1, n):
            mj = rho.maps[j]
            expected = rho.at(L.bracket_basis(i, j))
            ecols = expected.sparse_columns()
            icols = mi.sparse_columns()
            jcols = mj.sparse_columns()
            for k in range(m):
                acc = dict(mi.apply_sparse(jcols[k]))
                _acc(acc, mj.apply_sparse(icols[k]), -_ONE)
                _acc(acc, ecols[k], -_ONE)
                if acc:
                    sweep.fail((i, j, k), _dense(acc, m))
    return sweep.done()


def torsion(conn, i, j):
    """Deviation of the connection from reproducing the bracket at (i, j)."""
    L = conn.algebra
    if conn.module_dim != L.dim:
        raise DimensionMismatchError("torsion needs a connection on the algebra itself")
    acc = dict(conn.maps[i].apply_sparse({j: _ONE}))
    _acc(acc, conn.maps[j].apply_sparse({i: _ONE}), -_ONE)
    _acc(acc, L.bracket_basis(i, j), -_ONE)
    return _dense(acc, L.dim)


def check_torsion_free(conn, target=None):
    L = conn.algebra
    if conn.module_dim != L.dim:
        raise DimensionMismatchError("torsion needs a connection on the algebra itself")
    sweep = _Sweep("torsion_free", target or L.name)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            t = torsion(conn, i, j)
            if any(t):
                sweep.fail((i, j), t)
    return sweep.done()


def _differential_on_triple(L, form, i, j, k):
    s = _ZERO
    for x, (y, z) in ((i, (j, k)), (j, (k, i)), (k, (i, j))):
        for l, c in L.bracket_basis(y, z).items():
            e = form.value_basis(x, l)
            if e:
                s = s + c * e
    return s


def check_closed(L, form, target=None):
    """Vanishing of the Chevalley-Eilenberg differential on basis triples."""
    if form.kind != BilinearForm.SKEW:
        raise PreconditionError("closedness applies to skew forms")
    if form.dim != L.dim:
        raise DimensionMismatchError("form does not match algebra dimension")
    sweep = _Sweep("closed", target or L.name)
    n = L.dim
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j + 1, n):
                d = _differential_on_triple(L, form, i, j, k)
                if d:
                    sweep.fail((i, j, k), (d,))
    return sweep.done()


def check_symplectic(L, form, target=None):
    """Closed and nondegenerate."""
    cert = check_closed(L, form, target=target)
    cert.check_name = "symplectic"
    notes = dict(cert.notes)
    notes["closed"] = cert.total_failures == 0
    try:
        form.matrix.invert()
        notes["nondegenerate"] = True
    except SingularMatrixError as exc:
        notes["nondegenerate"] = False
        cert.witnesses = list(cert.witnesses)
        cert.witnesses.append(Witness(("kernel",), tuple(exc.kernel)))
        cert.total_failures += 1
    cert.passed = cert.total_failures == 0
    cert.notes = notes
    return cert


def check_parallel(conn, tensor, target=None):
    """Vanishing covariant derivative of an endomorphism or a bilinear form."""
    sweep = _Sweep("parallel", target or conn.algebra.name)
    m = conn.module_dim
    if isinstance(tensor, LinearMap):
        if tensor.rows != m or tensor.cols != m:
            raise DimensionMismatchError("endomorphism does not match the module")
        tcols = tensor.sparse_columns()
        for i, op in enumerate(conn.maps):
            ocols = op.sparse_columns()
            for k in range(m):
                acc = dict(op.apply_sparse(tcols[k]))
                _acc(acc, tensor.apply_sparse(ocols[k]), -_ONE)
                if acc:
                    sweep.fail((i, k), _dense(acc, m))
        return sweep.done()
    if isinstance(tensor, BilinearForm):
        if tensor.dim != m:
            raise DimensionMismatchError("form does not match the module")
        for i, op in enumerate(conn.maps):
            ocols = op.sparse_columns()
            for j in range(m):
                cj = ocols[j]
                for k in range(j, m):
                    s = _ZERO
                    for l, c in cj.items():
                        e = tensor.value_basis(l, k)
                        if e:
                            s = s + c * e
                    for l, c in ocols[k].items():
                        e = tensor.value_basis(j, l)
                        if e:
                            s = s + c * e
                    if s:
                        sweep.fail((i, j, k), (s,))
        return sweep.done()
    raise PreconditionError("parallel check expects a LinearMap or a BilinearForm")


def check_metric(conn, form, target=None):
    """Whether the connection is the Levi-Civita connection of a flat metric.

    Requires compatibility with the form plus torsion-freeness and flatness;
    the certificate notes report each sub-check separately.
    """
    if form.kind != BilinearForm.SYMMETRIC:
        raise PreconditionError("metric check needs a symmetric form")
    try:
        form.matrix.invert()
    except SingularMatrixError:
        raise PreconditionError("metric check needs an invertible form")
    sweep = _Sweep("metric", target or conn.algebra.name)
    compat = check_parallel(conn, form)
    tf = check_torsion_free(conn)
    flat = check_representation(conn)
    notes = {
        "compatible": compat.passed,
        "torsion_free": tf.passed,
        "flat": flat.passed,
    }
    for sub in (compat, tf, flat):
        for w in sub.witnesses:
            sweep.fail(w.indices, w.defect)
        sweep.total += sub.total_failures - len(sub.witnesses)
    return sweep.done(notes=notes)


def check_product_structure(L, E, target=None):
    """Eigenspace decomposition of an involution into subalgebras.

    Passes when both eigenspaces are closed under the bracket; the notes
    report whether each is an ideal, whether the minus part is abelian and
    whether the splitting is degenerate.
    """
    if E.rows != L.dim or E.cols != L.dim:
        raise DimensionMismatchError("endomorphism does not match algebra dimension")
    if not E.compose(E).is_identity():
        raise PreconditionError("map squared is not the identity")
    sweep = _Sweep("product_structure", target or L.name)
    n = L.dim
    spaces = {}
    for sign, key in ((_ONE, "plus"), (-_ONE, "minus")):
        solver = SpanSolver(n)
        basis = []
        # kernel of (E - sign id) = column span of (E + sign id)
        shifted = [dict(c) for c in E.sparse_columns()]
        for j in range(n):
            col = dict(shifted[j])
            _acc(col, {j: sign})
            if solver.add(col):
                basis.append(col)
        spaces[key] = basis
    notes = {
        "dim_plus": len(spaces["plus"]),
        "dim_minus": len(spaces["minus"]),
        "degenerate": not spaces["plus"] or not spaces["minus"],
    }
    for key in ("plus", "minus"):
        basis = spaces[key]
        solver = SpanSolver(n)
        for v in basis:
            solver.add(dict(v))
        closed = True
        for a in range(len(basis)):
            for b in range(a + 1, len(basis)):
                w = L.bracket_sparse(basis[a], basis[b])
                if w and not solver.contains(w):
                    closed = False
                    sweep.fail((key, a, b), _dense(w, n))
        ideal = closed
        if closed:
            for i in range(n):
                for b, v in enumerate(basis):
                    w = L.bracket_sparse({i: _ONE}, v)
                    if w and not solver.contains(w):
                        ideal = False
                        break
                if not ideal:
                    break
        notes["%s_closed" % key] = closed
        notes["%s_ideal" % key] = ideal
    abelian = True
    basis = spaces["minus"]
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            if L.bracket_sparse(basis[a], basis[b]):
                abelian = False
                break
        if not abelian:
            break
    notes["minus_abelian"] = abelian
    return sweep.done(notes=notes)
