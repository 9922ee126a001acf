"""Functorial builders for new algebras from old.

Semidirect products, tangent and cotangent algebras, central extensions,
complexification and eigenspace splits, ingestion of matrix realizations,
affinization of associative algebras and contraction families.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar_linear import (
    DimensionMismatchError,
    GaussScalar,
    Matrix,
    PreconditionError,
    SpanSolver,
)
from .lie_core import (
    AlmostComplex,
    BilinearForm,
    Connection,
    LieAlgebra,
    LinearMap,
    check_representation,
    _sparse,
    _acc,
    _Sweep,
    _dense,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


class NotClosedError(PreconditionError):
    """A commutator left the span of the proposed basis."""

    def __init__(self, message, pair):
        super().__init__(message)
        self.pair = pair


class AssociativeAlgebra:
    """Associative algebra as a basis-indexed product table.

    ``table[(i, j)]`` holds the sparse coefficients of the product of the
    i-th and j-th basis elements; missing pairs multiply to zero.
    Associativity is verified on all basis triples at construction.
    """

    def __init__(self, labels, table, name="assoc"):
        self.labels = list(labels)
        self.dim = len(self.labels)
        if len(set(self.labels)) != self.dim:
            raise PreconditionError("basis labels must be unique")
        self.name = name
        self._index = {lab: i for i, lab in enumerate(self.labels)}
        self.table = {
            pair: {k: v for k, v in _sparse(coeffs).items() if v}
            for pair, coeffs in table.items()
            if any(_sparse(coeffs).values())
        }
        bad = self._associativity_defect()
        if bad is not None:
            raise PreconditionError(
                "product table is not associative at triple %s" % (bad,)
            )

    def index(self, label):
        return self._index[label]

    def product_basis(self, i, j):
        return self.table.get((i, j), {})

    def product_sparse(self, u, v):
        out = {}
        for i, a in u.items():
            for j, b in v.items():
                coeffs = self.table.get((i, j))
                if not coeffs:
                    continue
                f = a * b
                for k, c in coeffs.items():
                    s = out.get(k, _ZERO) + f * c
                    if s:
                        out[k] = s
                    elif k in out:
                        del out[k]
        return out

    def _associativity_defect(self):
        n = self.dim
        for i in range(n):
            for j in range(n):
                ij = self.product_basis(i, j)
                for k in range(n):
                    left = self.product_sparse(ij, {k: _ONE})
                    right = self.product_sparse({i: _ONE}, self.product_basis(j, k))
                    if left != right:
                        return (i, j, k)
        return None

    def left_multiplication(self, i):
        cols = [self.product_basis(i, j) for j in range(self.dim)]
        return LinearMap.from_sparse_columns(self.dim, self.dim, cols)


def semidirect(g, rho, module_labels=None, name=None, check_rep=True):
    """Semidirect product of g with an abelian module along a representation.

    The module sits after g in the basis; its part is an abelian ideal and
    the projection onto g is a homomorphism by construction.
    """
    m = rho.module_dim
    if rho.algebra is not g and rho.algebra.dim != g.dim:
        raise DimensionMismatchError("representation does not live on the given algebra")
    if check_rep:
        cert = check_representation(rho)
        if not cert.passed:
            raise PreconditionError(
                "the given family is not a representation", details=cert
            )
    if module_labels is None:
        module_labels = ["v%d" % (a + 1) for a in range(m)]
    if len(module_labels) != m:
        raise DimensionMismatchError("need one label per module basis vector")
    taken = set(g.labels)
    fixed = []
    for lab in module_labels:
        while lab in taken:
            lab += "'"
        taken.add(lab)
        fixed.append(lab)
    module_labels = fixed
    n = g.dim
    table = {}
    for (i, j), coeffs in g.table.items():
        table[(i, j)] = dict(coeffs)
    for i in range(n):
        cols = rho.maps[i].sparse_columns()
        for a in range(m):
            col = cols[a]
            if col:
                table[(i, n + a)] = {n + k: v for k, v in col.items()}
    return LieAlgebra(
        list(g.labels) + list(module_labels),
        table,
        field=g.field,
        check=False,
        name=name or ("%s|x" % g.name),
    )


def tangent(g, conn, name=None, check_rep=True):
    """Tangent algebra: semidirect product with a copy of the underlying space."""
    if conn.module_dim != g.dim:
        raise DimensionMismatchError("tangent construction needs a connection on g itself")
    return semidirect(
        g,
        conn,
        module_labels=[lab + "_a" for lab in g.labels],
        name=name or ("T(%s)" % g.name),
        check_rep=check_rep,
    )


def cotangent(g, conn, name=None, check_rep=True):
    """Cotangent algebra along the contragredient family, with its pairing form.

    Returns the algebra together with the canonical skew pairing between the
    two copies in the (basis, dual basis) frame.
    """
    if conn.module_dim != g.dim:
        raise DimensionMismatchError("cotangent construction needs a connection on g itself")
    dual = conn.dual()
    alg = semidirect(
        g,
        dual,
        module_labels=["α%d" % (i + 1) for i in range(g.dim)],
        name=name or ("T*(%s)" % g.name),
        check_rep=check_rep,
    )
    n = g.dim
    data = [[_ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        data[i][n + i] = -_ONE
        data[n + i][i] = _ONE
    omega = BilinearForm(Matrix(data), BilinearForm.SKEW)
    return alg, omega


def central_extension(g, label="z", name=None):
    """Trivial central extension; the new central generator is appended last."""
    if label in g.labels:
        raise PreconditionError("label %r already used in the algebra" % label)
    table = {pair: dict(coeffs) for pair, coeffs in g.table.items()}
    return LieAlgebra(
        list(g.labels) + [label],
        table,
        field=g.field,
        check=False,
        name=name or ("Rz+%s" % g.name),
    )


def complexify(L):
    """The same table over Gaussian rationals."""
    if L.field == "gaussian":
        return L
    table = {
        pair: {k: GaussScalar(v) for k, v in coeffs.items()}
        for pair, coeffs in L.table.items()
    }
    return LieAlgebra(
        list(L.labels), table, field="gaussian", check=False, name=L.name + "^C"
    )


def holomorphic_eigenbasis(L, J):
    """Spanning sets of the +i and -i eigenspaces inside the complexification."""
    mi = GaussScalar(0, -1)
    pi = GaussScalar(0, 1)
    cols = J.sparse_columns()
    plus, minus = [], []
    for k in range(L.dim):
        vp = {k: GaussScalar(1)}
        vm = {k: GaussScalar(1)}
        for r, c in cols[k].items():
            _acc(vp, {r: GaussScalar(c)}, mi)
            _acc(vm, {r: GaussScalar(c)}, pi)
        plus.append(vp)
        minus.append(vm)
    return plus, minus


def eigenspace_split(L, J):
    """Eigenspace bases in the complexification plus bracket-closure verdicts.

    Each certificate passes iff the corresponding span stays closed under
    the complexified bracket (rank test after adjoining brackets).
    """
    if not J.squares_to_minus_identity():
        raise PreconditionError("map squared is not minus the identity")
    LC = complexify(L)
    plus, minus = holomorphic_eigenbasis(L, J)
    certs = []
    for tag, vecs in (("eigenspace_plus", plus), ("eigenspace_minus", minus)):
        sweep = _Sweep(tag, L.name)
        solver = SpanSolver(L.dim)
        for v in vecs:
            solver.add(dict(v))
        for a in range(len(vecs)):
            for b in range(a + 1, len(vecs)):
                w = LC.bracket_sparse(vecs[a], vecs[b])
                if w and not solver.contains(w):
                    sweep.fail((a, b), _dense(w, L.dim))
        certs.append(sweep.done())
    return plus, minus, tuple(certs)


def from_matrix_basis(mats, labels=None, name="matrix_algebra"):
    """Structure constants extracted from a list of basis matrices.

    The commutator of any two inputs must lie in their span; the matrices
    must be linearly independent.  The realization is returned alongside
    the algebra for oracle cross-checks.  Commutators of matrices satisfy
    the Jacobi identity identically, so the construction sweep is skipped.
    """
    mats = [m if isinstance(m, Matrix) else Matrix(m) for m in mats]
    if not mats:
        return LieAlgebra([], {}, check=False, name=name), []
    rows, cols = mats[0].rows, mats[0].cols
    if rows != cols:
        raise PreconditionError("matrix realization needs square matrices")
    for m in mats:
        if m.rows != rows or m.cols != cols:
            raise DimensionMismatchError("realization matrices of unequal shape")
    if labels is None:
        labels = ["m%d" % (i + 1) for i in range(len(mats))]
    flat = []
    for m in mats:
        flat.append({r * cols + c: v for (r, c), v in m.to_sparse().items()})
    solver = SpanSolver(rows * cols)
    for i, f in enumerate(flat):
        if not solver.add(dict(f)):
            raise PreconditionError(
                "realization matrices are dependent at position %d" % i
            )
    sparse_mats = [m.to_sparse() for m in mats]
    table = {}
    n = len(mats)
    for i in range(n):
        a = sparse_mats[i]
        for j in range(i + 1, n):
            b = sparse_mats[j]
            comm = {}
            for (r, k), x in a.items():
                for (k2, c), y in b.items():
                    if k == k2:
                        key = r * cols + c
                        s = comm.get(key, _ZERO) + x * y
                        if s:
                            comm[key] = s
                        elif key in comm:
                            del comm[key]
            for (r, k), y in b.items():
                for (k2, c), x in a.items():
                    if k == k2:
                        key = r * cols + c
                        s = comm.get(key, _ZERO) - y * x
                        if s:
                            comm[key] = s
                        elif key in comm:
                            del comm[key]
            if not comm:
                continue
            combo = solver.solve(comm)
            if combo is None:
                raise NotClosedError(
                    "commutator of basis matrices %d and %d leaves the span" % (i, j),
                    pair=(i, j),
                )
            table[(i, j)] = combo
    alg = LieAlgebra(labels, table, check=False, name=name)
    return alg, mats


def aff_algebra(A, name=None):
    """Affinization of an associative algebra.

    Doubles the underlying space; the first copy brackets by commutators and
    acts on the second by left multiplication.  Returns the algebra, its
    canonical block structure and the flat torsion-free left-multiplication
    connection.
    """
    n = A.dim
    labels = ["%s" % lab for lab in A.labels] + ["%s_t" % lab for lab in A.labels]
    table = {}
    for i in range(n):
        for j in range(i + 1, n):
            comm = dict(A.product_basis(i, j))
            _acc(comm, A.product_basis(j, i), -_ONE)
            if comm:
                table[(i, j)] = comm
        for j in range(n):
            act = A.product_basis(i, j)
            if act:
                table[(i, n + j)] = {n + k: v for k, v in act.items()}
    alg = LieAlgebra(labels, table, check=False, name=name or ("aff(%s)" % A.name))
    k_cols = [None] * (2 * n)
    for i in range(n):
        k_cols[i] = {n + i: -_ONE}
        k_cols[n + i] = {i: _ONE}
    K = AlmostComplex(
        LinearMap.from_sparse_columns(2 * n, 2 * n, k_cols).matrix
    )
    conns = []
    for i in range(n):
        lm = A.left_multiplication(i).sparse_columns()
        cols = [dict(lm[j]) for j in range(n)]
        cols += [{k + n: v for k, v in lm[j].items()} for j in range(n)]
        conns.append(LinearMap.from_sparse_columns(2 * n, 2 * n, cols))
    for i in range(n):
        conns.append(LinearMap.zero(2 * n))
    nabla = Connection(alg, conns)
    return alg, K, nabla


class ContractionFamily:
    """One-parameter scaling degeneration over a reductive splitting.

    The bracket of two complement elements is scaled by the square of the
    parameter; brackets touching the subalgebra are unchanged.  Every
    sampled value yields a table that must pass the Jacobi sweep (enforced
    at construction of the sampled algebra).
    """

    def __init__(self, base, subalgebra, complement):
        self.base = base
        self.h = tuple(subalgebra)
        self.m = tuple(complement)
        hs = set(self.h)
        ms = set(self.m)
        if hs & ms or hs | ms != set(range(base.dim)):
            raise PreconditionError("index sets must partition the basis")
        for i in self.h:
            for j in self.h:
                if i < j:
                    if any(k in ms for k in base.table.get((i, j), {})):
                        raise PreconditionError("subalgebra indices are not closed")
        for i in self.h:
            for a in self.m:
                lo, hi = min(i, a), max(i, a)
                if any(k in hs for k in base.table.get((lo, hi), {})):
                    raise PreconditionError(
                        "complement is not reductive: bracket leaves the complement"
                    )

    def at(self, t):
        """Sampled algebra at a rational parameter value."""
        t = Fraction(t)
        t2 = t * t
        ms = set(self.m)
        table = {}
        for (i, j), coeffs in self.base.table.items():
            if i in ms and j in ms:
                if t2:
                    scaled = {k: t2 * v for k, v in coeffs.items()}
                    table[(i, j)] = scaled
            else:
                table[(i, j)] = dict(coeffs)
        return LieAlgebra(
            self.base.labels,
            table,
            field=self.base.field,
            check=True,
            name="%s@t=%s" % (self.base.name, t),
        )


def iw_contraction(base, subalgebra, complement):
    """Contraction family for a reductive splitting of the basis."""
    return ContractionFamily(base, subalgebra, complement)


def matrices_from_json(data):
    """Matrix realization from a JSON list of row-major rational matrices.

    Entries may be integers or "p/q" strings; floats are rejected to keep
    everything exact.  Feed the result to :func:`from_matrix_basis`.
    """
    import json

    if isinstance(data, (str, bytes)):
        data = json.loads(data)
    mats = []
    for m in data:
        rows = []
        for row in m:
            out = []
            for e in row:
                if isinstance(e, float):
                    raise PreconditionError(
                        "floating point entry %r in matrix import" % e
                    )
                out.append(Fraction(e) if isinstance(e, int) else Fraction(str(e)))
            rows.append(out)
        mats.append(Matrix(rows))
    return mats
