"""Independent brute-force oracles used to freeze expected values.

Everything here is deliberately naive: dense lists, triple loops, no reuse
of the library's sparse code paths.  Tests compare library output against
these.
"""

from fractions import Fraction


def dense_constants(L):
    """Structure constants as a dense dim^3 array c[i][j][k]."""
    n = L.dim
    c = [[[Fraction(0)] * n for _ in range(n)] for _ in range(n)]
    for (i, j), coeffs in L.table.items():
        for k, v in coeffs.items():
            c[i][j][k] = v
            c[j][i][k] = -v
    return c


def naive_bracket(c, x, y):
    n = len(c)
    out = [Fraction(0)] * n
    for i in range(n):
        if not x[i]:
            continue
        for j in range(n):
            if not y[j]:
                continue
            for k in range(n):
                out[k] += x[i] * y[j] * c[i][j][k]
    return out


def naive_matvec(m, v):
    return [sum((row[j] * v[j] for j in range(len(v))), Fraction(0)) for row in m]


def naive_nijenhuis(L, jmat, x, y):
    """J[x,y] - [Jx,y] - [x,Jy] - J[Jx,Jy] with dense arithmetic."""
    c = dense_constants(L)
    jx, jy = naive_matvec(jmat, x), naive_matvec(jmat, y)
    t1 = naive_matvec(jmat, naive_bracket(c, x, y))
    t2 = naive_bracket(c, jx, y)
    t3 = naive_bracket(c, x, jy)
    t4 = naive_matvec(jmat, naive_bracket(c, jx, jy))
    return [a - b - d - e for a, b, d, e in zip(t1, t2, t3, t4)]


def naive_jacobi_defect(L, i, j, k):
    c = dense_constants(L)
    n = L.dim
    e = lambda a: [Fraction(1) if t == a else Fraction(0) for t in range(n)]
    s1 = naive_bracket(c, e(i), naive_bracket(c, e(j), e(k)))
    s2 = naive_bracket(c, e(j), naive_bracket(c, e(k), e(i)))
    s3 = naive_bracket(c, e(k), naive_bracket(c, e(i), e(j)))
    return [a + b + d for a, b, d in zip(s1, s2, s3)]


def naive_differential(L, omega, i, j, k):
    """omega(b_i, [b_j, b_k]) + omega(b_j, [b_k, b_i]) + omega(b_k, [b_i, b_j])."""
    c = dense_constants(L)
    n = L.dim
    e = lambda a: [Fraction(1) if t == a else Fraction(0) for t in range(n)]

    def val(x, y):
        return sum(
            (x[a] * omega[a][b] * y[b] for a in range(n) for b in range(n)),
            Fraction(0),
        )

    return (
        val(e(i), naive_bracket(c, e(j), e(k)))
        + val(e(j), naive_bracket(c, e(k), e(i)))
        + val(e(k), naive_bracket(c, e(i), e(j)))
    )


def naive_commutator(a, b):
    n = len(a)
    ab = [
        [sum((a[i][k] * b[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]
    ba = [
        [sum((b[i][k] * a[k][j] for k in range(n)), Fraction(0)) for j in range(n)]
        for i in range(n)
    ]
    return [[ab[i][j] - ba[i][j] for j in range(n)] for i in range(n)]


def naive_rank(rows):
    """Row rank by fraction Gaussian elimination on copies."""
    m = [list(r) for r in rows]
    rank = 0
    cols = len(m[0]) if m else 0
    row = 0
    for col in range(cols):
        piv = None
        for r in range(row, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[row], m[piv] = m[piv], m[row]
        f = m[row][col]
        m[row] = [e / f for e in m[row]]
        for r in range(len(m)):
            if r != row and m[r][col]:
                g = m[r][col]
                m[r] = [e - g * p for e, p in zip(m[r], m[row])]
        row += 1
        rank += 1
    return rank
