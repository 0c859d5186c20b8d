import json

from grasscodes.utils.codefiles import parse_subspace_code, read_file

IDEAL_FILE = """\
ideal side=left generator=0,0,0,1
rankcode 2 2 2
2 2 2
0 0
0 0
2 2 2
0 0
0 1
2 2 2
0 1
0 0
2 2 2
0 1
0 1
"""


def run_json(runner, cli, *args):
    result = runner.invoke(cli, ['--format', 'json', *args])
    assert result.exit_code == 0, result.output
    return json.loads(result.stdout)


# ==================== REPORTS ====================

def test_gaussian(runner, cli):
    result = runner.invoke(cli, ['gaussian', '4', '2', '2'])
    assert result.exit_code == 0
    assert '35' in result.stdout
    assert run_json(runner, cli, 'gaussian', '3', '1', '3') == {'n': 3, 'k': 1, 'q': 3, 'value': 13}


def test_distribution(runner, cli):
    record = run_json(runner, cli, 'distribution', '3')
    assert list(record) == ['q', 'A0', 'A1', 'A2', 'exhaustive']
    assert (record['A0'], record['A1'], record['A2']) == (1, 32, 48)
    result = runner.invoke(cli, ['distribution', '2'])
    assert result.exit_code == 0
    assert 'A0' in result.stdout and '9' in result.stdout


def test_gl_order(runner, cli):
    assert run_json(runner, cli, 'gl-order', '4')['order'] == 180
    assert run_json(runner, cli, 'gl-order', '2', '--n', '3')['order'] == 168


def test_weights_report(runner, cli):
    record = run_json(runner, cli, 'weights-report', '2')
    assert record['full_ring_gamma'] == {'num': 21, 'den': 16}
    assert record['ideal_gamma'] == {'num': 3, 'den': 4}
    assert record['is_weight'] is True
    assert record['homogeneous'] is False
    assert record['unit_invariant'] is True
    left, right = record['sides']
    assert (left['side'], right['side']) == ('left', 'right')
    assert (left['E'], left['H']) == (False, True)
    assert left['witnesses'] == ['1 0 0 1', '0 0 0 1']
    gammas = {(g['cardinality'], g['gamma_num'], g['gamma_den']) for g in left['gamma_values']}
    assert gammas == {(4, 3, 4), (16, 21, 16)}


def test_weights_report_table(runner, cli):
    result = runner.invoke(cli, ['weights-report', '2'])
    assert result.exit_code == 0
    assert '21/16' in result.stdout
    assert '3/4' in result.stdout


# ==================== CONSTRUCTION ====================

def test_idempotents(runner, cli):
    record = run_json(runner, cli, 'idempotents', '2')
    assert record['idempotent_count'] == 6
    assert record['canonical_count'] == 3
    assert (record['distinct_left_ideals'], record['distinct_right_ideals']) == (3, 3)
    assert all(i['left_ideal_size'] == 4 for i in record['idempotents'])


def test_ideal_prints_code_file(runner, cli):
    result = runner.invoke(cli, ['ideal', '2', 'left', '0', '0', '0', '1'])
    assert result.exit_code == 0
    assert result.stdout == IDEAL_FILE


def test_ideal_rankcode_info_and_lift(runner, cli, tmp_path):
    ideal_path = tmp_path / 'ideal.txt'
    lifted_path = tmp_path / 'lifted.txt'
    result = runner.invoke(cli, ['ideal', '2', 'right', '0', '0', '0', '1', '-o', str(ideal_path)])
    assert result.exit_code == 0

    info = run_json(runner, cli, 'rankcode-info', str(ideal_path))
    assert (info['delta'], info['omega'], info['rho'], info['linear']) == (1, 1, 2, True)
    assert info['delta_equals_omega'] is True
    assert info['witnesses']['omega_element'] == [0, 0, 0, 1]

    lifted = run_json(runner, cli, 'lift', str(ideal_path), '-o', str(lifted_path))
    assert lifted['source'] == {'k': 2, 'l': 2, 'rho': 2, 'delta': 1}
    assert lifted['lifted'] == {'n': 4, 'M': 4, 'd': 2, 'k': 2, 'q': 2}
    assert lifted['theorem_ok'] is True
    assert len(parse_subspace_code(read_file(str(lifted_path))).subspaces) == 4


def test_lift_table(runner, cli, tmp_path):
    path = tmp_path / 'ideal.txt'
    path.write_text(IDEAL_FILE)
    result = runner.invoke(cli, ['lift', str(path)])
    assert result.exit_code == 0
    assert '(4,4,2,2)_2' in result.stdout


# ==================== VERIFY ====================

def test_verify_2(runner, cli):
    result = runner.invoke(cli, ['verify', '2'])
    assert result.exit_code == 0, result.output
    assert '(4,4,2,2)_2 OK' in result.stdout
    assert 'all' in result.stdout.splitlines()[-1]


def test_verify_json(runner, cli):
    record = run_json(runner, cli, 'verify', '2', '--seed', '5')
    assert record['ok'] is True
    assert record['seed'] == 5
    assert all(c['ok'] for c in record['checks'])


def test_verify_with_injected_fault(runner, cli):
    result = runner.invoke(cli, ['verify', '2', '--inject-fault', 'gl-order'])
    assert result.exit_code == 1
    assert 'FAIL' in result.stdout


def test_inject_fault_is_hidden(runner, cli):
    result = runner.invoke(cli, ['verify', '--help'])
    assert '--seed' in result.stdout
    assert '--inject-fault' not in result.stdout


# ==================== ERRORS ====================

def test_malformed_file(runner, cli, tmp_path):
    path = tmp_path / 'bad.txt'
    path.write_text('rankcode 2 2 2\n2 2 2\n0 0\n0 7\n')
    result = runner.invoke(cli, ['rankcode-info', str(path)])
    assert result.exit_code == 3
    assert 'line 4' in result.stderr


def test_missing_file(runner, cli, tmp_path):
    result = runner.invoke(cli, ['lift', str(tmp_path / 'missing.txt')])
    assert result.exit_code == 3


def test_budget_exceeded(runner, cli):
    result = runner.invoke(cli, ['idempotents', '11'])
    assert result.exit_code == 4
    assert 'GRASSCODES_RING_BUDGET' in result.stderr


def test_invalid_parameters(runner, cli):
    assert runner.invoke(cli, ['distribution', '6']).exit_code == 5
    assert runner.invoke(cli, ['idempotents', '4']).exit_code == 5
    assert runner.invoke(cli, ['gaussian', '2', '3', '2']).exit_code == 5


def test_usage_error(runner, cli):
    assert runner.invoke(cli, ['gaussian', '4']).exit_code == 2
    assert runner.invoke(cli, ['ideal', '2', 'up', '0', '0', '0', '1']).exit_code == 2


def test_config_option(runner, cli):
    result = runner.invoke(cli, ['--config', 'testing', '--format', 'json', 'gl-order', '3'])
    assert result.exit_code == 0
    assert json.loads(result.stdout)['order'] == 48
