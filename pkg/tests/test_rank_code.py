import itertools

import numpy as np
import pytest

from grasscodes.algebra import GLOrderQuery, MatrixFp
from grasscodes.errors import EmptyCodeError, FieldMismatchError, ShapeMismatchError
from grasscodes.rank_code import (
    code_basis,
    code_from_matrix_set,
    random_linear_subcode,
    rank_distance,
    rank_distribution,
    rank_weight_sum,
    verify_delta_equals_omega,
)
from grasscodes.reference_codes import LEFT_IDEAL_F2, LEFT_IDEAL_F3
from grasscodes.ring import RingDescriptor, Side, enumerate_nontrivial_idempotents, principal_ideal


def test_rank_distance(mat):
    A = mat(2, [[0, 1], [0, 0]])
    B = mat(2, [[0, 0], [0, 1]])
    assert rank_distance(A, A) == 0
    # the difference [[0,1],[0,1]] has rank 1
    assert rank_distance(A, B) == 1
    assert rank_distance(mat(2, [[1, 0], [0, 1]]), mat(2, [[0, 0], [0, 0]])) == 2


def test_rank_distance_rejects_mismatch(mat):
    with pytest.raises(ShapeMismatchError):
        rank_distance(mat(2, [[1, 0]]), mat(2, [[1], [0]]))
    with pytest.raises(FieldMismatchError):
        rank_distance(mat(2, [[1]]), mat(3, [[1]]))


def test_rank_distance_is_a_metric(m2f2):
    elements = m2f2.elements()
    for A, B in itertools.product(elements, repeat=2):
        assert rank_distance(A, B) == rank_distance(B, A)
        assert (rank_distance(A, B) == 0) == (A == B)
    for A, B, C in itertools.product(elements, repeat=3):
        assert rank_distance(A, C) <= rank_distance(A, B) + rank_distance(B, C)


@pytest.mark.parametrize('reference', [LEFT_IDEAL_F2, LEFT_IDEAL_F3])
def test_listed_ideal_parameters(reference):
    code = code_from_matrix_set(reference.element_matrices())
    assert code.params == '[2x2, 2, 1]'
    assert (code.k, code.l, code.rho, code.delta, code.omega) == (2, 2, 2, 1, 1)
    assert code.linear
    assert len(code_basis(code)) == 2


def test_two_element_code(mat):
    code = code_from_matrix_set([mat(2, [[0, 0], [0, 0]]), mat(2, [[1, 0], [0, 1]])])
    assert (code.delta, code.omega, code.rho) == (2, 2, 1)
    report = verify_delta_equals_omega(code)
    assert report.applicable and report.equal


def test_nonlinear_code_is_not_applicable(mat):
    code = code_from_matrix_set([mat(2, [[1, 0], [0, 1]]), mat(2, [[0, 1], [0, 0]])])
    assert not code.linear
    assert code.rho is None
    report = verify_delta_equals_omega(code)
    assert not report.applicable
    assert report.equal is None


def test_single_element_code(mat):
    code = code_from_matrix_set([mat(2, [[0, 0], [0, 0]])])
    assert code.delta is None and code.omega is None
    assert code.rho == 0
    assert not verify_delta_equals_omega(code).applicable


def test_code_from_matrix_set_rejects(mat):
    with pytest.raises(EmptyCodeError):
        code_from_matrix_set([])
    with pytest.raises(ShapeMismatchError):
        code_from_matrix_set([mat(2, [[1, 0], [0, 1]]), mat(2, [[1, 0]])])
    with pytest.raises(FieldMismatchError):
        code_from_matrix_set([mat(2, [[1]]), mat(3, [[1]])])


def test_witnesses(mat):
    code = code_from_matrix_set(LEFT_IDEAL_F2.element_matrices())
    A, B = code.delta_witness
    assert rank_distance(A, B) == code.delta
    assert A < B
    assert code.omega_witness == mat(2, [[0, 0], [0, 1]])


@pytest.mark.parametrize('p', [2, 3, 5])
def test_delta_equals_omega_on_ideals(p):
    descriptor = RingDescriptor(p)
    for a in enumerate_nontrivial_idempotents(descriptor):
        for side in Side:
            code = code_from_matrix_set(principal_ideal(a, side, descriptor).elements)
            report = verify_delta_equals_omega(code)
            assert report.applicable and report.equal
            assert code.delta == 1


@pytest.mark.parametrize('p', [2, 3])
def test_delta_equals_omega_on_random_subcodes(p):
    descriptor = RingDescriptor(p)
    rng = np.random.default_rng(7)
    for _ in range(25):
        code = random_linear_subcode(descriptor, rng)
        assert code.linear
        report = verify_delta_equals_omega(code)
        if report.applicable:
            assert report.equal


# ==================== RANK DISTRIBUTION ====================

@pytest.mark.parametrize('q, counts, exhaustive', [
    (2, (1, 9, 6), True),
    (3, (1, 32, 48), True),
    (4, (1, 75, 180), False),
    (5, (1, 144, 480), True),
])
def test_rank_distribution(q, counts, exhaustive):
    distribution = rank_distribution(GLOrderQuery(q))
    assert distribution.counts == counts
    assert distribution.exhaustive is exhaustive
    assert sum(distribution.counts) == q**4
    assert distribution.A2 == (q**2 - 1) * (q**2 - q)


@pytest.mark.parametrize('q', [2, 3, 5])
def test_rank_weight_sum(q):
    ranks = RingDescriptor(q).rank_table
    assert rank_weight_sum(q) == int(ranks.sum())


def test_matrix_code_accepts_rectangular(f3):
    code = code_from_matrix_set([MatrixFp([[0, 0, 0]], f3), MatrixFp([[1, 2, 0]], f3), MatrixFp([[2, 1, 0]], f3)])
    assert (code.k, code.l, code.rho, code.delta) == (1, 3, 1, 1)
