from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from lieforge.scalar_linear import (
    DimensionMismatchError,
    GaussScalar,
    Matrix,
    Q,
    SingularMatrixError,
    SpanSolver,
    rank,
    scalar_from_str,
    scalar_to_str,
    solve_in_span,
)

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=20)
gaussians = st.builds(GaussScalar, rationals, rationals)


@given(gaussians, gaussians, gaussians)
@settings(max_examples=200, deadline=None)
def test_gauss_field_laws(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a + b == b + a
    assert a * b == b * a
    if b:
        assert (a / b) * b == a
    if a:
        assert a * (GaussScalar(1) / a) == GaussScalar(1)


@given(rationals, rationals, rationals)
@settings(max_examples=100, deadline=None)
def test_rational_field_laws(a, b, c):
    assert (a + b) * c == a * c + b * c
    if c:
        assert (a / c) * c == a


def test_gauss_embeds_rationals():
    assert GaussScalar(Fraction(2, 3)) == Fraction(2, 3)
    assert GaussScalar(1, 0) * Fraction(1, 2) == GaussScalar(Fraction(1, 2))
    assert Fraction(1) + GaussScalar(0, 1) == GaussScalar(1, 1)


def test_scalar_serialization():
    assert scalar_to_str(Q(3, 5)) == "3/5"
    assert scalar_to_str(Q(7)) == "7"
    assert scalar_to_str(Q(-2, 4)) == "-1/2"
    assert scalar_from_str("3/5") == Q(3, 5)
    assert scalar_from_str("-7") == Q(-7)


def test_gauss_serialization_roundtrip():
    vals = [
        GaussScalar(Fraction(1, 2), Fraction(-3, 4)),
        GaussScalar(-1, 2),
        GaussScalar(0, 0),
        GaussScalar(Fraction(0), Fraction(5, 7)),
    ]
    for v in vals:
        assert scalar_from_str(scalar_to_str(v)) == v
    assert scalar_to_str(GaussScalar(Fraction(1, 2), Fraction(3, 4))) == "1/2+3/4*i"


def test_solve_in_span_standard_basis():
    e1, e2 = [Q(1), Q(0)], [Q(0), Q(1)]
    assert solve_in_span([e1, e2], [Q(3), Q(5)]) == [Q(3), Q(5)]


def test_solve_in_span_scalar_multiple():
    assert solve_in_span([[Q(1), Q(1)]], [Q(2), Q(2)]) == [Q(2)]


def test_solve_in_span_outside():
    assert solve_in_span([[Q(1), Q(0)]], [Q(0), Q(1)]) is None


def test_solve_in_span_dimension_mismatch():
    with pytest.raises(DimensionMismatchError):
        solve_in_span([[Q(1), Q(0)]], [Q(1)])


def test_rank_examples():
    assert rank([[Q(1), Q(0)], [Q(0), Q(1)]]) == 2
    assert rank([[Q(1), Q(2)], [Q(2), Q(4)]]) == 1
    assert rank([]) == 0


def test_rank_invariance_under_scaling_and_permutation():
    vecs = [[Q(1), Q(2), Q(0)], [Q(0), Q(1), Q(1)], [Q(1), Q(3), Q(1)]]
    r = rank(vecs)
    scaled = [[Q(5) * e for e in v] for v in vecs]
    assert rank(scaled) == r
    assert rank(list(reversed(vecs))) == r


def test_invert_identity():
    m = Matrix.identity(3)
    assert m.invert() == m


def test_invert_rotation():
    m = Matrix([[Q(0), Q(-1)], [Q(1), Q(0)]])
    assert m.invert() == Matrix([[Q(0), Q(1)], [Q(-1), Q(0)]])


def test_invert_singular_kernel_witness():
    m = Matrix([[Q(1), Q(1)], [Q(2), Q(2)]])
    with pytest.raises(SingularMatrixError) as exc:
        m.invert()
    assert exc.value.kernel == [Q(1), Q(-1)]
    # the witness really is in the kernel
    assert m.matvec(exc.value.kernel) == [Q(0), Q(0)]


def test_invert_times_original_is_identity():
    import random

    rng = random.Random(7)
    for _ in range(10):
        n = rng.randint(1, 4)
        m = Matrix([[Q(rng.randint(-5, 5)) for _ in range(n)] for _ in range(n)])
        try:
            inv = m.invert()
        except SingularMatrixError:
            continue
        assert inv * m == Matrix.identity(n)
        assert m * inv == Matrix.identity(n)


def test_matrix_shape_errors():
    with pytest.raises(DimensionMismatchError):
        Matrix([[Q(1)], [Q(1), Q(2)]])
    with pytest.raises(DimensionMismatchError):
        Matrix([[Q(1)]]) * Matrix([[Q(1), Q(2)], [Q(3), Q(4)]])


def test_span_solver_gaussian_scalars():
    i = GaussScalar(0, 1)
    solver = SpanSolver(2)
    solver.add({0: GaussScalar(1), 1: i})
    combo = solver.solve({0: i, 1: GaussScalar(-1)})
    assert combo is not None
    assert combo[0] == i
    assert not solver.contains({0: GaussScalar(1)})


def test_gauss_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        GaussScalar(1) / GaussScalar(0)
