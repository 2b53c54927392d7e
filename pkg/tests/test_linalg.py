from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from nilgca.linalg import (
    DimensionError,
    Matrix,
    Subspace,
    det,
    inverse,
    kernel,
    rref,
    solve_affine,
    vector,
    vis_zero,
    vunit,
)
from nilgca.scalars import GaussianRational, I, ONE, ZERO

small_scalars = st.builds(
    GaussianRational,
    st.fractions(min_value=-3, max_value=3, max_denominator=4),
    st.fractions(min_value=-2, max_value=2, max_denominator=2),
)


def small_matrices(max_dim=4):
    return st.integers(1, max_dim).flatmap(
        lambda r: st.integers(1, max_dim).flatmap(
            lambda c: st.lists(
                st.lists(small_scalars, min_size=c, max_size=c),
                min_size=r, max_size=r,
            ).map(Matrix)
        )
    )


def test_rref_identity():
    m = Matrix.identity(2)
    result = rref(m)
    assert result.matrix == m
    assert result.rank == 2


def test_rref_zero():
    m = Matrix.zeros(3, 2)
    result = rref(m)
    assert result.matrix == m
    assert result.rank == 0


def test_rref_dependent_complex_rows():
    # second row is i * first row, eliminated by hand
    m = Matrix([[1, I], [I, -1]])
    result = rref(m)
    assert result.matrix == Matrix([[1, I], [0, 0]])
    assert result.rank == 1
    assert result.pivots == (0,)


@settings(max_examples=60)
@given(small_matrices())
def test_rref_idempotent(m):
    once = rref(m).matrix
    assert rref(once).matrix == once


@settings(max_examples=40)
@given(small_matrices(), st.randoms(use_true_random=False))
def test_rank_invariant_under_row_permutation(m, rng):
    rows = list(m.entries)
    rng.shuffle(rows)
    assert rref(Matrix(rows, cols=m.cols)).rank == rref(m).rank


def test_kernel_zero_map():
    assert kernel(Matrix.zeros(2, 3)) == Subspace.full(3)


def test_kernel_invertible_map():
    assert kernel(Matrix([[1, 1], [0, 1]])) == Subspace.zero(2)


@settings(max_examples=60)
@given(small_matrices())
def test_kernel_vectors_annihilate(m):
    for v in kernel(m).basis.entries:
        assert vis_zero(m.apply(v))
    assert kernel(m).dim == m.cols - rref(m).rank


def test_subspace_sum_intersection_examples():
    e1 = Subspace.from_vectors(3, [vunit(3, 0)])
    e2 = Subspace.from_vectors(3, [vunit(3, 1)])
    assert (e1 + e2) == Subspace.from_vectors(3, [vunit(3, 0), vunit(3, 1)])
    assert e1.intersect(e1) == e1
    assert e1.intersect(e2) == Subspace.zero(3)


def test_subspace_conjugate():
    s = Subspace.from_vectors(2, [vector([1, -1 * I])])
    assert s.conjugate() == Subspace.from_vectors(2, [vector([1, I])])
    assert not s.is_real()
    assert (s + s.conjugate()).is_real()


def test_subspace_ambient_mismatch():
    with pytest.raises(DimensionError):
        Subspace.full(2) + Subspace.full(3)


def test_membership_and_coordinates():
    s = Subspace.from_vectors(3, [vector([1, 0, 1]), vector([0, 1, 0])])
    assert s.contains(vector([2, 3, 2]))
    assert not s.contains(vector([1, 0, 0]))
    coords = s.coordinates(vector([2, 3, 2]))
    assert coords is not None
    rebuilt = [ZERO, ZERO, ZERO]
    for c, row in zip(coords, s.basis.entries):
        rebuilt = [r + c * x for r, x in zip(rebuilt, row)]
    assert tuple(rebuilt) == vector([2, 3, 2])


def test_complement_spans_everything():
    s = Subspace.from_vectors(4, [vector([1, 2, 0, 0]), vector([0, 0, 1, 5])])
    c = s.complement()
    assert (s + c) == Subspace.full(4)
    assert s.intersect(c) == Subspace.zero(4)


@settings(max_examples=40, deadline=None)
@given(small_matrices(3), small_matrices(3))
def test_dimension_formula(a, b):
    n = max(a.cols, b.cols)
    pad_a = [row + (ZERO,) * (n - a.cols) for row in a.entries]
    pad_b = [row + (ZERO,) * (n - b.cols) for row in b.entries]
    sa = Subspace.from_vectors(n, pad_a)
    sb = Subspace.from_vectors(n, pad_b)
    assert sa.dim + sb.dim == (sa + sb).dim + sa.intersect(sb).dim


def test_solve_affine_identity():
    sol = solve_affine(Matrix.identity(3), vector([1, 2, 3]))
    assert sol.feasible
    assert sol.particular == vector([1, 2, 3])
    assert sol.kernel.dim == 0


def test_solve_affine_certified_infeasible():
    sol = solve_affine(Matrix.zeros(2, 2), vector([1, 0]))
    assert not sol.feasible
    assert sol.rank_a == 0 and sol.rank_aug == 1
    assert sol.replay_certificate(Matrix.zeros(2, 2), vector([1, 0]))


@settings(max_examples=40, deadline=None)
@given(small_matrices(3), st.lists(small_scalars, min_size=1, max_size=3))
def test_solve_affine_consistency(a, b):
    b = tuple(b[:a.rows]) + (ZERO,) * max(0, a.rows - len(b))
    sol = solve_affine(a, b)
    if sol.feasible:
        assert a.apply(sol.particular) == tuple(b)
        for v in sol.kernel.basis.entries:
            assert vis_zero(a.apply(v))
    else:
        assert sol.rank_a < sol.rank_aug


def test_det_and_inverse():
    m = Matrix([[1, 2], [3, 4]])
    assert det(m) == GaussianRational(-2)
    assert m @ inverse(m) == Matrix.identity(2)
    with pytest.raises(ZeroDivisionError):
        inverse(Matrix([[1, 2], [2, 4]]))


def test_matrix_shape_edges():
    empty = Matrix.zeros(0, 5)
    assert empty.cols == 5
    assert empty.transpose().rows == 5 and empty.transpose().cols == 0
    assert kernel(empty) == Subspace.full(5)
