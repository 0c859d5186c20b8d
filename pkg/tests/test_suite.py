from unittest import mock

import pytest

from grasscodes.config import TestingConfig
from grasscodes.errors import InvalidParameterError
from grasscodes.suite import CHECKS, FAULTS, injected_fault, run_suite
from grasscodes.subspace import gaussian_coefficient


@pytest.fixture(scope='module')
def report_p2():
    return run_suite(2, seed=2024, app_config=TestingConfig)


def test_suite_passes_for_p2(report_p2):
    assert report_p2.ok, [(c.name, c.detail) for c in report_p2.failures]
    assert [c.name for c in report_p2.checks] == [name for name, _ in CHECKS]


def test_suite_details(report_p2):
    details = {c.name: c.detail for c in report_p2.checks}
    assert details['idempotents'].startswith('6 nontrivial idempotents, 3 distinct left and 3 distinct right')
    assert details['ideal lifts'] == '12 one-sided ideals lift to (4,4,2,2)_2'
    assert '21/16' in details['average values'] and '3/4' in details['average values']
    assert details['rank distribution'] == '(A0, A1, A2) = (1, 9, 6)'
    assert 'largest 5' in details['trivial intersection']
    assert 'Delta=2, d=1' in details['reference codes']


@pytest.mark.slow
def test_suite_passes_for_p3():
    report = run_suite(3, app_config=TestingConfig)
    assert report.ok, [(c.name, c.detail) for c in report.failures]
    details = {c.name: c.detail for c in report.checks}
    assert details['ideal lifts'] == '24 one-sided ideals lift to (4,9,2,2)_3'


def test_seed_is_recorded():
    assert run_suite(2, app_config=TestingConfig).seed == TestingConfig.DEFAULT_SEED


@pytest.mark.parametrize('fault, failing', [
    ('gl-order', 'rank distribution'),
    ('gaussian', 'gaussian coefficients'),
    ('lift', 'ideal lifts'),
    ('full-ring-gamma', 'average values'),
])
def test_injected_fault_fails_the_suite(fault, failing):
    report = run_suite(2, app_config=TestingConfig, fault=fault)
    assert not report.ok
    assert failing in {c.name for c in report.failures}


def test_fault_is_removed_afterwards():
    with injected_fault('gaussian'):
        import grasscodes.subspace
        assert grasscodes.subspace.gaussian_coefficient(4, 2, 2) == 36
    assert gaussian_coefficient(4, 2, 2) == 35
    assert sorted(FAULTS) == ['full-ring-gamma', 'gaussian', 'gl-order', 'lift']


def test_unknown_fault():
    with pytest.raises(InvalidParameterError):
        with injected_fault('nope'):
            pass


def test_unexpected_error_fails_only_its_check():
    with mock.patch('grasscodes.subspace.gaussian_coefficient', side_effect=ValueError('boom')):
        report = run_suite(2, app_config=TestingConfig)
    assert [c.name for c in report.checks] == [name for name, _ in CHECKS]
    details = {c.name: c.detail for c in report.failures}
    assert details['gaussian coefficients'] == 'ValueError: boom'
    assert 'idempotents' not in details
