import itertools
from unittest import mock

import numpy as np
import pytest

from grasscodes.algebra import MatrixFp
from grasscodes.errors import InvalidParameterError, NotIdempotentError
from grasscodes.lifting import distance_transport, lift, lift_code, unlift, verify_idempotent_ideal_lift
from grasscodes.rank_code import code_from_matrix_set
from grasscodes.reference_codes import LEFT_IDEAL_F2, LEFT_IDEAL_F3, RIGHT_IDEAL_F2
from grasscodes.ring import RingDescriptor, Side, enumerate_nontrivial_idempotents
from grasscodes.subspace import GrassmannParameters, Subspace, rowspace


@pytest.mark.parametrize('p, rows, lifted', [
    (2, [[0, 1], [0, 0]], [[1, 0, 0, 1], [0, 1, 0, 0]]),
    (2, [[0, 0], [0, 0]], [[1, 0, 0, 0], [0, 1, 0, 0]]),
    (3, [[0, 2], [0, 1]], [[1, 0, 0, 2], [0, 1, 0, 1]]),
])
def test_lift(mat, p, rows, lifted):
    assert lift(mat(p, rows)).tolist() == lifted


def test_unlift_inverts_lift(m2f3):
    for A in m2f3.elements()[::7]:
        assert unlift(rowspace(lift(A)), 2) == A


def test_unlift_rejects_other_subspaces(f2):
    with pytest.raises(InvalidParameterError):
        unlift(Subspace.from_rows([(0, 0, 1, 0), (0, 0, 0, 1)], f2), 2)


@pytest.mark.parametrize('reference, expected', [
    (LEFT_IDEAL_F2, '(4,4,2,2)_2'),
    (RIGHT_IDEAL_F2, '(4,4,2,2)_2'),
    (LEFT_IDEAL_F3, '(4,9,2,2)_3'),
])
def test_listed_lifts(reference, expected):
    lifted = lift_code(code_from_matrix_set(reference.element_matrices()))
    assert str(lifted.measured) == expected
    assert lifted.claimed == lifted.measured
    assert lifted.theorem_ok is True
    assert {U.vectors() for U in lifted.codewords} == reference.expected_subspaces()


def test_left_and_right_lifts_differ():
    left = lift_code(code_from_matrix_set(LEFT_IDEAL_F2.element_matrices()))
    right = lift_code(code_from_matrix_set(RIGHT_IDEAL_F2.element_matrices()))
    assert left.measured == right.measured
    assert set(left.codewords) != set(right.codewords)


def test_nonlinear_source_claims_nothing(mat):
    code = code_from_matrix_set([mat(2, [[1, 0], [0, 1]]), mat(2, [[0, 1], [0, 0]])])
    lifted = lift_code(code)
    assert lifted.claimed is None
    assert lifted.theorem_ok is None
    assert lifted.measured.M == 2


def test_rectangular_lift(f3, mat):
    code = code_from_matrix_set([mat(3, [[0, 0, 0]]), mat(3, [[1, 2, 0]]), mat(3, [[2, 1, 0]])])
    lifted = lift_code(code)
    assert lifted.measured == GrassmannParameters(n=4, M=3, d=2, k=1, q=3)


@pytest.mark.parametrize('p', [2, 3, pytest.param(5, marks=pytest.mark.slow)])
def test_every_idempotent_ideal_lifts(p):
    descriptor = RingDescriptor(p)
    expected = GrassmannParameters(n=4, M=p**2, d=2, k=2, q=p)
    lifted = 0
    for a in enumerate_nontrivial_idempotents(descriptor):
        for side in Side:
            assert verify_idempotent_ideal_lift(p, a, side, descriptor).measured == expected
            lifted += 1
    assert lifted == 2 * p * (p + 1)


def test_lift_needs_an_idempotent(mat):
    with pytest.raises(NotIdempotentError):
        verify_idempotent_ideal_lift(2, mat(2, [[0, 1], [0, 0]]), 'left')
    with pytest.raises(NotIdempotentError):
        verify_idempotent_ideal_lift(2, mat(2, [[1, 0], [0, 1]]), 'left')


def test_distance_transport_on_m2f2(m2f2):
    assert distance_transport(itertools.product(m2f2.elements(), repeat=2)) is None


def test_distance_transport_on_random_pairs(m2f3):
    rng = np.random.default_rng(3)
    pairs = [(m2f3.element(a), m2f3.element(b)) for a, b in rng.integers(0, 81, size=(500, 2))]
    assert distance_transport(pairs) is None


def test_distance_transport_reports_counterexample(mat):
    def without_identity(A):
        return MatrixFp(np.hstack([np.zeros((A.rows, A.rows), dtype=np.int64), A.data]), A.field)

    A = mat(2, [[0, 0], [0, 0]])
    B = mat(2, [[1, 0], [0, 1]])
    with mock.patch('grasscodes.lifting.lift', without_identity):
        assert distance_transport([(A, A), (A, B)]) == (A, B)
