from fractions import Fraction

import pytest

from grasscodes.algebra import MatrixFp
from grasscodes.errors import InvalidParameterError, ZeroGeneratorError
from grasscodes.ring import FieldRing, RingDescriptor, Side
from grasscodes.weights import (
    WeightFunction,
    average_value,
    egalitarian_check,
    full_ring_gamma,
    gammas_coincide,
    hamming_weight,
    homogeneity_profile,
    homogeneous_check,
    ideal_gamma,
    is_weight,
    rank_weight,
    unit_invariance_check,
)


@pytest.fixture(scope='module')
def w2(m2f2):
    return rank_weight(m2f2)


@pytest.mark.parametrize('p', [2, 3])
def test_rank_is_a_weight(p):
    assert is_weight(rank_weight(RingDescriptor(p))).is_weight


def test_axiom_failures():
    ring = FieldRing(5)
    constant = WeightFunction.from_function('constant', ring, lambda code: 1)
    report = is_weight(constant)
    assert (report.is_weight, report.failed_axiom) == (False, 'i')

    identity = WeightFunction.from_function('value', ring, lambda code: code)
    report = is_weight(identity)
    assert (report.is_weight, report.failed_axiom, report.witness) == (False, 'iii', ('1',))


def test_evaluate(w2, mat):
    assert w2.evaluate(mat(2, [[0, 1], [0, 1]])) == 1
    assert w2.evaluate(mat(2, [[1, 0], [0, 1]])) == 2
    assert w2.evaluate(0) == 0


# ==================== AVERAGE VALUES ====================

def test_average_value_of_the_whole_ring(w2, f2):
    report = average_value(w2, MatrixFp.identity(2, f2))
    assert report.cardinality == 16
    assert report.weight_sum == 21
    assert report.gamma == Fraction(21, 16)


def test_average_value_of_a_minimal_ideal(w2, mat):
    for side in Side:
        report = average_value(w2, mat(2, [[0, 0], [0, 1]]), side)
        assert report.cardinality == 4
        assert report.gamma == Fraction(3, 4)


def test_average_value_needs_nonzero_generator(w2, mat):
    with pytest.raises(ZeroGeneratorError):
        average_value(w2, mat(2, [[0, 0], [0, 0]]))


@pytest.mark.parametrize('p', [2, 3, 5])
def test_closed_forms(p, mat):
    w = rank_weight(RingDescriptor(p))
    assert average_value(w, mat(p, [[1, 0], [0, 1]])).gamma == full_ring_gamma(p)
    assert average_value(w, mat(p, [[1, 1], [0, 0]])).gamma == ideal_gamma(p)
    assert full_ring_gamma(p) != ideal_gamma(p)
    assert not gammas_coincide(p)


def test_closed_form_values():
    assert full_ring_gamma(2) == Fraction(21, 16)
    assert ideal_gamma(2) == Fraction(3, 4)
    assert full_ring_gamma(3) == Fraction(128, 81)
    assert ideal_gamma(3) == Fraction(8, 9)


# ==================== CONDITIONS (E) AND (H) ====================

def test_rank_weight_is_not_egalitarian(w2, m2f2):
    report = egalitarian_check(w2, Side.LEFT)
    assert not report.egalitarian
    assert report.gamma is None and report.normalized is None
    assert [m2f2.label(c) for c in report.witnesses] == ['1 0 0 1', '0 0 0 1']
    # three lines and the whole ring
    assert len(report.values) == 4
    assert sorted({v.gamma for v in report.values}) == [Fraction(3, 4), Fraction(21, 16)]


@pytest.mark.parametrize('p', [2, 3, pytest.param(5, marks=pytest.mark.slow)])
@pytest.mark.parametrize('side', list(Side))
def test_rank_weight_witnesses(p, side):
    ring = RingDescriptor(p)
    report = egalitarian_check(rank_weight(ring), side)
    assert not report.egalitarian
    whole, line = report.witnesses
    assert [ring.label(whole), ring.label(line)] == ['1 0 0 1', '0 0 0 1']
    assert report.gammas[whole] == full_ring_gamma(p)
    assert report.gammas[line] == ideal_gamma(p)


def test_rank_weight_homogeneity(w2):
    for side in Side:
        report = homogeneous_check(w2, side)
        assert report.H
        assert not report.E
        assert not report.homogeneous
    assert not homogeneity_profile(w2).homogeneous


def test_hamming_weight_on_a_field_is_homogeneous():
    w = hamming_weight(FieldRing(5))
    assert is_weight(w).is_weight
    report = egalitarian_check(w)
    assert report.egalitarian
    assert report.gamma == Fraction(4, 5)
    assert report.normalized is False
    assert homogeneity_profile(w).homogeneous


def test_normalized_flag():
    ring = FieldRing(3)
    # weight 3/2 on nonzero elements averages to 1 over F_3
    w = WeightFunction.from_function('scaled', ring, lambda code: Fraction(3, 2) if code else 0)
    report = egalitarian_check(w)
    assert report.egalitarian and report.gamma == 1 and report.normalized


# ==================== UNIT INVARIANCE ====================

@pytest.mark.parametrize('p', [2, 3])
def test_unit_invariance(p):
    report = unit_invariance_check(p, sides=(Side.LEFT, Side.RIGHT))
    assert report.holds
    units = (p**2 - 1) * (p**2 - p)
    assert report.pairs_checked == 2 * units * p**4


def test_unit_invariance_limit():
    with pytest.raises(InvalidParameterError):
        unit_invariance_check(7)
