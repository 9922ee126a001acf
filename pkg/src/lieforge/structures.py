"""Certified assemblies on semidirect products and tangent algebras.

Block complex structures and their compatibility conditions, the
equivalence between torsion-freeness and integrability of the canonical
tangent structure (verified as a biconditional of two independent sweeps,
never short-circuited), hypercomplex pairs, Clifford towers, transferred
symplectic forms and pseudo-Kahler verification.
"""

from __future__ import annotations

from fractions import Fraction

from .scalar_linear import (
    DimensionMismatchError,
    Matrix,
    PreconditionError,
    SingularMatrixError,
    SpanSolver,
)
from .lie_core import (
    AlmostComplex,
    BilinearForm,
    Connection,
    LieAlgebra,
    LinearMap,
    _Sweep,
    _acc,
    _dense,
    _sparse,
    check_integrable,
    check_parallel,
    check_representation,
    check_symplectic,
    check_torsion_free,
)
from .constructions import tangent

_ZERO = Fraction(0)
_ONE = Fraction(1)


def block_complex_structure(J, I, sign=1):
    """Block diagonal structure (Jx, sign * Iv) on a semidirect product."""
    if sign not in (1, -1):
        raise PreconditionError("sign must be +1 or -1")
    n, m = J.rows, I.rows
    cols = [dict(c) for c in J.sparse_columns()]
    for c in I.sparse_columns():
        shifted = {n + k: (v if sign == 1 else -v) for k, v in c.items()}
        cols.append(shifted)
    return AlmostComplex(LinearMap.from_sparse_columns(n + m, n + m, cols).matrix)


def dual_structure(J):
    """Induced structure on the dual space, minus the transpose."""
    return AlmostComplex(-J.matrix.transpose())


def _span_of(dim, vectors):
    solver = SpanSolver(dim)
    for v in vectors:
        solver.add(dict(_sparse(v)))
    return solver


def check_action_compatibility(g, rho, J, I, split, target=None):
    """The two conditions letting a structure on g extend to g acting on (v, I).

    Condition one: operators of the first part commute with the module
    structure.  Condition two: for x in the second part the operator of Jx
    composed with the module structure equals the operator of x.  The notes
    record the mixed-pair identity used in the proof of integrability and
    whether the second part is zero (which licenses the sign-flipped block
    structure as well).
    """
    n, m = g.dim, rho.module_dim
    part0 = [_sparse(v) for v in split.part0]
    part1 = [_sparse(v) for v in split.part1]
    s0 = _span_of(n, part0)
    s1 = _span_of(n, part1)
    if s0.rank + s1.rank != n or _span_of(n, part0 + part1).rank != n:
        raise PreconditionError("decomposition parts must be disjoint and spanning")
    for name, vecs, solver in (("part0", part0, s0), ("part1", part1, s1)):
        for v in vecs:
            if not solver.contains(J.apply_sparse(v)):
                raise PreconditionError("%s is not stable under the structure" % name)
    sweep = _Sweep("action_compatibility", target or g.name)
    icols = I.sparse_columns()
    for a, u in enumerate(part0):
        op = rho.at(u)
        ocols = op.sparse_columns()
        for k in range(m):
            acc = dict(op.apply_sparse(icols[k]))
            _acc(acc, I.apply_sparse(ocols[k]), -_ONE)
            if acc:
                sweep.fail(("part0", a, k), _dense(acc, m))
    for a, u in enumerate(part1):
        op = rho.at(u)
        opj = rho.at(J.apply_sparse(u))
        ocols = op.sparse_columns()
        for k in range(m):
            acc = dict(opj.apply_sparse(icols[k]))
            _acc(acc, ocols[k], -_ONE)
            if acc:
                sweep.fail(("part1", a, k), _dense(acc, m))
    identity_failures = 0
    jcols_g = J.sparse_columns()
    for i in range(n):
        op = rho.at({i: _ONE})
        opj = rho.at(jcols_g[i])
        for k in range(m):
            ek = {k: _ONE}
            lhs = dict(I.apply_sparse(op.apply_sparse(ek)))
            _acc(lhs, op.apply_sparse(I.apply_sparse(ek)), -_ONE)
            iv = I.apply_sparse(ek)
            rhs = dict(I.apply_sparse(opj.apply_sparse(iv)))
            _acc(rhs, opj.apply_sparse(I.apply_sparse(iv)), -_ONE)
            _acc(lhs, rhs, -_ONE)
            if lhs:
                identity_failures += 1
    notes = {
        "g1_zero": s1.rank == 0,
        "mixed_identity_failures": identity_failures,
    }
    return sweep.done(notes=notes)


def canonical_complex_structure(t_algebra):
    """The swap structure (x, y) -> (y, -x) on a doubled algebra."""
    if t_algebra.dim % 2:
        raise PreconditionError("doubled algebra must have even dimension")
    m = t_algebra.dim // 2
    return AlmostComplex.from_pairs(t_algebra.dim, [(m + i, i) for i in range(m)])


def check_torsion_integrability_equivalence(g, conn, target=None):
    """Torsion-freeness of the connection against integrability of the swap
    structure on the tangent algebra, each computed by its own full sweep.

    The certificate passes when the two verdicts agree, in either truth
    value; both verdicts are recorded.
    """
    rep = check_representation(conn)
    if not rep.passed:
        raise PreconditionError("connection is not flat", details=rep)
    talg = tangent(g, conn, check_rep=False)
    K = canonical_complex_structure(talg)
    left = check_integrable(talg, K, target="K on %s" % talg.name)
    right = check_torsion_free(conn, target=g.name)
    sweep = _Sweep("torsion_integrability_equivalence", target or g.name)
    if left.passed != right.passed:
        sweep.fail(("verdicts",), (Fraction(int(left.passed)), Fraction(int(right.passed))))
    return sweep.done(
        notes={"k_integrable": left.passed, "torsion_free": right.passed}
    )


def reconstruct_connection(u, K, part, target=None):
    """Recover the flat torsion-free connection behind an adapted structure.

    ``part`` lists the basis indices of a subalgebra g with K g an ideal;
    the connection is minus the K-conjugated adjoint action restricted to
    g.  The certificate covers flatness, torsion-freeness, abelianity of
    K g and the structure-constant match between u and the doubled algebra.
    """
    part = list(part)
    p = len(part)
    n = u.dim
    if 2 * p != n:
        raise PreconditionError("the subalgebra must span half the dimensions")
    cert_int = check_integrable(u, K)
    if not cert_int.passed:
        raise PreconditionError("structure is not integrable", details=cert_int)
    pset = set(part)
    for ai, i in enumerate(part):
        for j in part[ai + 1 :]:
            w = u.bracket_basis(min(i, j), max(i, j))
            if any(k not in pset for k in w):
                raise PreconditionError("the given indices do not span a subalgebra")
    kcols = K.sparse_columns()
    kg = [dict(kcols[i]) for i in part]
    span_kg = _span_of(n, kg)
    if span_kg.rank != p or _span_of(n, kg + [{i: _ONE} for i in part]).rank != n:
        raise PreconditionError("image of the subalgebra does not complement it")
    for j in range(n):
        for w in kg:
            if not span_kg.contains(u.bracket_sparse({j: _ONE}, w)):
                raise PreconditionError("image of the subalgebra is not an ideal")

    pos = {i: a for a, i in enumerate(part)}
    sub_table = {}
    for ai, i in enumerate(part):
        for bj in range(ai + 1, p):
            j = part[bj]
            w = u.bracket_basis(min(i, j), max(i, j))
            if i > j:
                w = {k: -v for k, v in w.items()}
            if w:
                sub_table[(ai, bj)] = {pos[k]: v for k, v in w.items()}
    sub = LieAlgebra(
        [u.labels[i] for i in part], sub_table, check=False, name="%s|sub" % u.name
    )

    maps = []
    for i in part:
        cols = []
        for j in part:
            w = u.bracket_sparse({i: _ONE}, kcols[j])
            w = K.apply_sparse(w)
            col = {}
            for k, v in w.items():
                if k not in pset:
                    raise PreconditionError(
                        "conjugated adjoint action leaves the subalgebra"
                    )
                col[pos[k]] = -v
            cols.append(col)
        maps.append(LinearMap.from_sparse_columns(p, p, cols))
    conn = Connection(sub, maps)

    sweep = _Sweep("reconstruct", target or u.name)
    flat = check_representation(conn)
    tf = check_torsion_free(conn)
    abelian = True
    for a in range(p):
        for b in range(a + 1, p):
            if u.bracket_sparse(kg[a], kg[b]):
                abelian = False
                sweep.fail(("k_image", a, b), _dense(u.bracket_sparse(kg[a], kg[b]), n))
    talg = tangent(sub, conn, check_rep=False)
    frame = [{i: _ONE} for i in part] + kg
    for a in range(2 * p):
        for b in range(a + 1, 2 * p):
            lhs = u.bracket_sparse(frame[a], frame[b])
            rhs = {}
            for k, v in talg.bracket_basis(a, b).items():
                _acc(rhs, frame[k], v)
            _acc(lhs, rhs, -_ONE)
            if lhs:
                sweep.fail(("iso", a, b), _dense(lhs, n))
    if not flat.passed:
        w = flat.witnesses[0]
        sweep.fail(("flat",) + w.indices, w.defect)
    if not tf.passed:
        w = tf.witnesses[0]
        sweep.fail(("torsion",) + w.indices, w.defect)
    notes = {
        "flat": flat.passed,
        "torsion_free": tf.passed,
        "k_image_abelian": abelian,
    }
    return sub, conn, sweep.done(notes=notes)


def lifted_connection(conn, t_algebra=None):
    """Connection on the tangent algebra acting through the base subscript."""
    g = conn.algebra
    if t_algebra is None:
        t_algebra = tangent(g, conn, check_rep=False)
    n = g.dim
    maps = []
    for i in range(n):
        base = conn.maps[i].sparse_columns()
        cols = [dict(c) for c in base]
        cols += [{k + n: v for k, v in c.items()} for c in base]
        maps.append(LinearMap.from_sparse_columns(2 * n, 2 * n, cols))
    for i in range(n):
        maps.append(LinearMap.zero(2 * n))
    return Connection(t_algebra, maps)


class CliffordFamily:
    """Pairwise anticommuting structures generating a Clifford-type algebra.

    ``generated_rank`` is the dimension of the associative span of all
    products of the members; equality with 2^m certifies the family since
    any proper quotient of the rank-m Clifford algebra is smaller.
    """

    def __init__(self, algebra, maps):
        self.algebra = algebra
        self.maps = [m if isinstance(m, AlmostComplex) else AlmostComplex(m) for m in maps]
        self._rank = None

    def __len__(self):
        return len(self.maps)

    @property
    def generated_rank(self):
        if self._rank is None:
            self._rank = self._compute_rank()
        return self._rank

    def _flatten(self, lm):
        out = {}
        for j, col in enumerate(lm.sparse_columns()):
            for i, v in col.items():
                out[i * lm.cols + j] = v
        return out

    def _compute_rank(self):
        d = self.algebra.dim
        solver = SpanSolver(d * d)
        ident = LinearMap.identity(d)
        solver.add(self._flatten(ident))
        frontier = [ident]
        while frontier:
            fresh = []
            for elem in frontier:
                for J in self.maps:
                    prod = elem.compose(J)
                    if solver.add(self._flatten(prod)):
                        fresh.append(prod)
            frontier = fresh
        return solver.rank

    def certify(self, conn=None, target=None):
        """Anticommutation, integrability, rank and optional parallelism."""
        sweep = _Sweep("clifford_family", target or self.algebra.name)
        d = self.algebra.dim
        minus_two = Matrix.identity(d).scale(Fraction(-2))
        for a in range(len(self.maps)):
            for b in range(a, len(self.maps)):
                anti = (
                    self.maps[a].compose(self.maps[b]).matrix
                    + self.maps[b].compose(self.maps[a]).matrix
                )
                want = minus_two if a == b else Matrix.zeros(d)
                if anti != want:
                    sweep.fail(("anticommute", a, b), (Fraction(1),))
        integrable = []
        for a, J in enumerate(self.maps):
            c = check_integrable(self.algebra, J)
            integrable.append(c.passed)
            if not c.passed:
                w = c.witnesses[0]
                sweep.fail(("integrable", a) + w.indices, w.defect)
        parallel = []
        if conn is not None:
            for a, J in enumerate(self.maps):
                c = check_parallel(conn, J)
                parallel.append(c.passed)
                if not c.passed:
                    w = c.witnesses[0]
                    sweep.fail(("parallel", a) + w.indices, w.defect)
        rank = self.generated_rank
        expected = 2 ** len(self.maps)
        if rank != expected:
            sweep.fail(("generated_rank",), (Fraction(rank), Fraction(expected)))
        notes = {
            "generated_rank": rank,
            "expected_rank": expected,
            "integrable": integrable,
        }
        if conn is not None:
            notes["parallel"] = parallel
        return sweep.done(notes=notes)


def clifford_tower(g, conn, m, name=None):
    """Iterated tangent doubling carrying one new structure per level.

    Earlier structures ride up by the sign-flipped block lift (same block
    pattern as the lifted connection but with the second copy negated,
    which is what makes the members anticommute).
    """
    if m < 1:
        raise PreconditionError("tower needs m >= 1")
    rep = check_representation(conn)
    if not rep.passed:
        raise PreconditionError("connection is not flat", details=rep)
    tf = check_torsion_free(conn)
    if not tf.passed:
        raise PreconditionError("connection has torsion", details=tf)
    alg, cur = g, conn
    members = []
    for level in range(m):
        talg = tangent(alg, cur, check_rep=False)
        lifted = []
        for A in members:
            n = A.rows
            cols = [dict(c) for c in A.sparse_columns()]
            cols += [
                {k + n: -v for k, v in c.items()} for c in A.sparse_columns()
            ]
            lifted.append(LinearMap.from_sparse_columns(2 * n, 2 * n, cols))
        members = lifted + [canonical_complex_structure(talg)]
        cur = lifted_connection(cur, talg)
        alg = talg
    if name:
        alg.name = name
    return alg, cur, CliffordFamily(alg, members)


def hypercomplex_pair(g, conn, J, target=None):
    """Anticommuting pair on the tangent algebra of a parallel structure.

    Requires the connection flat and torsion-free with the given structure
    parallel.  Returns the two-member family, the lifted connection and a
    certificate; the lifted connection is the unique torsion-free
    connection parallelizing the pair, recorded in the notes.
    """
    rep = check_representation(conn)
    if not rep.passed:
        raise PreconditionError("connection is not flat", details=rep)
    tf = check_torsion_free(conn)
    if not tf.passed:
        raise PreconditionError("connection has torsion", details=tf)
    par = check_parallel(conn, J)
    if not par.passed:
        raise PreconditionError("structure is not parallel", details=par)
    talg = tangent(g, conn, check_rep=False)
    j_minus = block_complex_structure(J, J, sign=-1)
    K = canonical_complex_structure(talg)
    lifted = lifted_connection(conn, talg)
    family = CliffordFamily(talg, [j_minus, K])
    sweep = _Sweep("hypercomplex", target or g.name)
    checks = {
        "j_minus_integrable": check_integrable(talg, j_minus).passed,
        "k_integrable": check_integrable(talg, K).passed,
        "anticommute": (
            j_minus.compose(K).matrix + K.compose(j_minus).matrix
        ).is_zero(),
        "j_minus_parallel": check_parallel(lifted, j_minus).passed,
        "k_parallel": check_parallel(lifted, K).passed,
        "lift_flat": check_representation(lifted).passed,
        "lift_torsion_free": check_torsion_free(lifted).passed,
    }
    for key, ok in checks.items():
        if not ok:
            sweep.fail((key,), (Fraction(1),))
    notes = dict(checks)
    notes["obata"] = (
        "lifted connection is torsion-free and parallelizes both members, "
        "hence coincides with the Obata connection by uniqueness"
    )
    return family, lifted, sweep.done(notes=notes)


def check_self_dual(conn, psi, target=None):
    """Whether psi intertwines the family with its contragredient."""
    try:
        psi.matrix.invert()
    except SingularMatrixError as exc:
        raise PreconditionError("duality map is singular", details=exc.kernel)
    n = conn.module_dim
    if psi.rows != n or psi.cols != n:
        raise DimensionMismatchError("duality map does not match the module")
    sweep = _Sweep("self_dual", target or conn.algebra.name)
    dual = conn.dual()
    for i in range(conn.algebra.dim):
        lhs = psi.compose(conn.maps[i])
        rhs = dual.maps[i].compose(psi)
        for k in range(n):
            acc = dict(lhs.sparse_columns()[k])
            _acc(acc, rhs.sparse_columns()[k], -_ONE)
            if acc:
                sweep.fail((i, k), _dense(acc, n))
    return sweep.done()


def symplectic_from_duality(conn, psi):
    """Skew pairing of the two tangent copies through a duality map.

    Always skew, nondegenerate exactly when the map is invertible; closed
    precisely when the map is self-dual and the connection torsion-free.
    """
    n = conn.module_dim
    if psi.rows != n or psi.cols != n:
        raise DimensionMismatchError("duality map does not match the module")
    data = [[_ZERO] * (2 * n) for _ in range(2 * n)]
    pm = psi.matrix.data
    for i in range(n):
        for j in range(n):
            v = pm[i][j]
            if v:
                data[i][n + j] = -v
                data[n + j][i] = v
    return BilinearForm(Matrix(data), BilinearForm.SKEW)


def levi_civita(g, B):
    """Unique torsion-free metric connection from the algebraic Koszul formula.

    Flatness is not guaranteed and must be checked separately.
    """
    if B.kind != BilinearForm.SYMMETRIC:
        raise PreconditionError("metric must be symmetric")
    try:
        binv = B.matrix.invert()
    except SingularMatrixError:
        raise PreconditionError("metric must be invertible")
    n = g.dim
    half = Fraction(1, 2)
    maps = []
    for i in range(n):
        cols = []
        for j in range(n):
            rhs = []
            bij = g.bracket_basis(i, j)
            for k in range(n):
                s = _ZERO
                for l, c in bij.items():
                    e = B.value_basis(l, k)
                    if e:
                        s = s + c * e
                for l, c in g.bracket_basis(j, k).items():
                    e = B.value_basis(l, i)
                    if e:
                        s = s - c * e
                for l, c in g.bracket_basis(k, i).items():
                    e = B.value_basis(l, j)
                    if e:
                        s = s + c * e
                rhs.append(half * s)
            col = binv.matvec(rhs)
            cols.append({k: v for k, v in enumerate(col) if v})
        maps.append(LinearMap.from_sparse_columns(n, n, cols))
    return Connection(g, maps)


def _diagonal_lift(B):
    n = B.dim
    data = [[_ZERO] * (2 * n) for _ in range(2 * n)]
    for i in range(n):
        for j in range(n):
            v = B.value_basis(i, j)
            if v:
                data[i][j] = v
                data[n + i][n + j] = v
    return BilinearForm(Matrix(data), BilinearForm.SYMMETRIC)


def check_pseudo_kahler(g, B, target=None):
    """Full verification of the tangent-algebra pseudo-Kahler structure.

    Builds the Levi-Civita connection of the flat metric, the tangent
    algebra with its swap structure, the musical duality map and the
    transferred form, then checks every compatibility exactly.  Sub-check
    verdicts are itemized in the notes.
    """
    sweep = _Sweep("pseudo_kahler", target or g.name)
    conn = levi_civita(g, B)
    flat = check_representation(conn)
    tf = check_torsion_free(conn)
    notes = {"flat": flat.passed, "torsion_free": tf.passed}
    if not (flat.passed and tf.passed):
        notes["precondition"] = "metric is not flat"
        for sub in (flat, tf):
            for w in sub.witnesses[:2]:
                sweep.fail(w.indices, w.defect)
        cert = sweep.done(notes=notes)
        cert.passed = False
        return cert
    psi = LinearMap(B.matrix)
    sd = check_self_dual(conn, psi)
    notes["self_dual"] = sd.passed
    talg = tangent(g, conn, check_rep=False)
    K = canonical_complex_structure(talg)
    omega = symplectic_from_duality(conn, psi)
    symp = check_symplectic(talg, omega)
    notes["omega_symplectic"] = symp.passed
    lifted = lifted_connection(conn, talg)
    par = check_parallel(lifted, omega)
    notes["omega_parallel"] = par.passed
    G = _diagonal_lift(B)
    pairing = K.matrix.transpose() * G.matrix
    notes["pairing_matches_omega"] = pairing == omega.matrix
    notes["k_integrable"] = check_integrable(talg, K).passed
    notes["metric_parallel"] = check_parallel(lifted, G).passed
    for key in (
        "self_dual",
        "omega_symplectic",
        "omega_parallel",
        "pairing_matches_omega",
        "k_integrable",
        "metric_parallel",
    ):
        if not notes[key]:
            sweep.fail((key,), (Fraction(1),))
    return sweep.done(notes=notes)


def check_holomorphic(dom, cod, iota, J_dom, J_cod, target=None):
    """Injective homomorphism intertwining the two structures."""
    if iota.cols != dom.dim or iota.rows != cod.dim:
        raise DimensionMismatchError("map shape does not match the algebras")
    cols = iota.sparse_columns()
    if _span_of(cod.dim, cols).rank != dom.dim:
        raise PreconditionError("map is not injective")
    sweep = _Sweep("holomorphic", target or ("%s->%s" % (dom.name, cod.name)))
    for i in range(dom.dim):
        for j in range(i + 1, dom.dim):
            acc = dict(iota.apply_sparse(dom.bracket_basis(i, j)))
            _acc(acc, cod.bracket_sparse(cols[i], cols[j]), -_ONE)
            if acc:
                sweep.fail(("hom", i, j), _dense(acc, cod.dim))
    jd = J_dom.sparse_columns()
    for i in range(dom.dim):
        acc = dict(iota.apply_sparse(jd[i]))
        _acc(acc, J_cod.apply_sparse(cols[i]), -_ONE)
        if acc:
            sweep.fail(("structure", i), _dense(acc, cod.dim))
    return sweep.done()


def clifford_metric_conjecture(g, B, m=2):
    """Exploratory harness for metrics on higher tower levels.

    Lifts the metric diagonally level by level and reports, for every
    family member, whether the induced pairing is skew, closed and
    parallel.  Nothing here is asserted; the certificates record the
    evidence for the candidate lift.
    """
    conn = levi_civita(g, B)
    rep = check_representation(conn)
    tf = check_torsion_free(conn)
    if not (rep.passed and tf.passed):
        raise PreconditionError("metric is not flat")
    alg, lifted, family = clifford_tower(g, conn, m)
    G = B
    for _ in range(m):
        G = _diagonal_lift(G)
    certs = []
    for idx, J in enumerate(family.maps):
        sweep = _Sweep("clifford_metric_candidate", "%s[J%d]" % (alg.name, idx + 1))
        pairing = J.matrix.transpose() * G.matrix
        skew = pairing == -(pairing.transpose())
        notes = {"pairing_skew": skew}
        if skew:
            omega = BilinearForm(pairing, BilinearForm.SKEW)
            notes["closed"] = check_symplectic(alg, omega).passed
            notes["parallel"] = check_parallel(lifted, omega).passed
        for key, ok in notes.items():
            if not ok:
                sweep.fail((key,), (Fraction(1),))
        certs.append(sweep.done(notes=notes))
    return certs
