# -*- coding: utf-8 -*-
# (c) Copyright 2024 markov-gap-bounds developers

from __future__ import absolute_import, division, print_function

import csv
import json

import pytest
from click.testing import CliRunner

from markov_gap_bounds.cli import EXIT_OK, EXIT_PRECONDITION, EXIT_USAGE, cli, main
from markov_gap_bounds.version import version

TWO_STATE = {'size': 2, 'rows': [[0.5, 0.5], [0.25, 0.75]]}


@pytest.fixture
def invoke(tmp_path):
    """
    Run the command line tool with ``--output`` pointing to a file and
    return the exit code and the file content.
    """
    runner = CliRunner()

    def run(*args, **kwargs):
        output = tmp_path / 'output.txt'
        if output.exists():
            output.unlink()
        result = runner.invoke(cli, list(kwargs.get('pre', [])) + list(args) + ['--output', str(output)])
        text = output.read_text() if output.exists() else ''
        return result, text
    return run


def _write_json(tmp_path, name, data):
    path = tmp_path / name
    path.write_text(json.dumps(data))
    return str(path)


@pytest.mark.parametrize("value", [
    dict({'args': ['--family', 'hypercube', '--norm', 'W', '--n-slots', '4'], 'delta0': 1. / 15.}),
    dict({'args': ['--family', 'hypercube', '--norm', 'L', '--n-slots', '4'], 'delta0': 1. / 16.}),
    dict({'args': ['--family', 'doeblin', '--beta', '0.5'], 'delta0': 1. / 3.}),
    dict({'args': ['--family', 'bernoulli', '--lambda', '0.618'], 'delta0': 1. / 7.}),
    dict({'args': ['--family', 'custom', '--c-const', '1', '--theta', '0.5'], 'delta0': 1. / 3.}),
    dict({'args': ['--family', 'custom', '--delta0', '0.25'], 'delta0': 0.25}),
])
def test_gap(invoke, value):
    """
    Test if the gap command prints the certificate as JSON.
    """
    result, text = invoke('gap', *value.get('args'))
    assert result.exit_code == EXIT_OK
    assert json.loads(text)['delta0'] == pytest.approx(value.get('delta0'), abs=1e-12)


def test_gap_from_kernel(invoke, tmp_path):
    """
    Test if a kernel file gives the gap of its maximal minorization, beta = 0.75.
    """
    kernel = _write_json(tmp_path, 'kernel.json', TWO_STATE)
    result, text = invoke('gap', '--family', 'doeblin', '--kernel', kernel)
    assert result.exit_code == EXIT_OK
    assert json.loads(text)['delta0'] == pytest.approx(0.6)


@pytest.mark.parametrize("value", [
    dict({'args': ['gap', '--family', 'hypercube'], 'flag': '--n-slots'}),
    dict({'args': ['gap', '--family', 'custom', '--theta', '0.5'], 'flag': '--c-const'}),
    dict({'args': ['bound', '--theorem', 'A', '--n', '10', '--a', '0.1'], 'flag': '--delta0'}),
    dict({'args': ['bound', '--theorem', 'A', '--delta0', '0.5', '--norm', '1'], 'flag': '--n'}),
    dict({'args': ['plan', '--delta0', '0.5', '--norm', '1', '--a', '0.1'], 'flag': '--p'}),
    dict({'args': ['simulate', '--family', 'hypercube', '--n', '10'], 'flag': '--seed'}),
    dict({'args': ['verify', '--quick'], 'flag': '--seed'}),
])
def test_usage_errors(value):
    """
    Test if a missing flag exits with 1 and names the flag.
    """
    result = CliRunner().invoke(cli, value.get('args'))
    assert result.exit_code == EXIT_USAGE
    assert value.get('flag') in result.output


def test_domain_error_exits_with_usage_code(invoke):
    """
    Test if an argument outside its domain exits with 1.
    """
    result, _ = invoke('gap', '--family', 'doeblin', '--beta', '1.5')
    assert result.exit_code == EXIT_USAGE
    assert 'Error' in result.output


def test_bound_theorem_a(invoke):
    """
    Test the two-regime bound at delta0 = 1/2, |phi| = 1, n = 200, a = 0.1.
    """
    result, text = invoke('bound', '--theorem', 'A', '--delta0', '0.5', '--norm', '1', '--n', '200', '--a', '0.1')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert data['raw'] == pytest.approx(2.328, abs=1e-3)
    assert data['clipped'] == 1.
    assert data['regime'] == 'gaussian'
    assert data['valid'] is True
    assert data['threshold_n'] == 119


def test_bound_violated_preconditions(invoke):
    """
    Test if violated preconditions exit with 2, print the codes and still write the value.
    """
    result, text = invoke('bound', '--theorem', 'doeblin', '--beta', '0.5', '--n', '100', '--a', '0.2')
    assert result.exit_code == EXIT_PRECONDITION
    assert 'N_TOO_SMALL' in result.output
    data = json.loads(text)
    assert data['valid'] is False
    assert 'N_TOO_SMALL' in data['violated_preconditions']


@pytest.mark.parametrize("value", [
    dict({'args': ['--theorem', 'B', '--delta0', '0.5', '--norm', '1', '--u', '1', '--n', '1000', '--a', '0.01']}),
    dict({'args': ['--theorem', 'bv', '--ell', '2', '--norm', '2', '--n', '480', '--a', '0.02']}),
])
def test_bound_other_theorems(invoke, value):
    """
    Test if the variance-aware and bounded variation bounds are available.
    """
    result, text = invoke('bound', *value.get('args'))
    assert result.exit_code in (EXIT_OK, EXIT_PRECONDITION)
    assert json.loads(text)['raw'] > 0.


def test_plan(invoke):
    """
    Test the required sample size for delta0 = 1/2, |phi| = 1, a = 0.1, p = 0.05.
    """
    result, text = invoke('plan', '--delta0', '0.5', '--norm', '1', '--a', '0.1', '--p', '0.05')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert data['n'] == 11756
    assert (data['exact_n'], data['simplified_n']) == (119, 120)


def test_plan_infeasible(invoke):
    """
    Test if a = 0 cannot be planned and exits with 2.
    """
    result, _ = invoke('plan', '--delta0', '0.5', '--norm', '1', '--a', '0', '--p', '0.05')
    assert result.exit_code == EXIT_PRECONDITION


def test_config_defaults(invoke, tmp_path):
    """
    Test if a config file supplies flag defaults and explicit flags win.
    """
    config = _write_json(tmp_path, 'config.json', {'plan': {'delta0': 0.5, 'norm': 1, 'a': 0.1, 'p': 0.05}})
    result, text = invoke('plan', pre=['--config', config])
    assert result.exit_code == EXIT_OK
    assert json.loads(text)['n'] == 11756
    result, text = invoke('plan', '--p', '0.5', pre=['--config', config])
    assert result.exit_code == EXIT_OK
    assert json.loads(text)['n'] < 11756


def test_config_invalid(tmp_path):
    """
    Test if unknown subcommands in the config file are usage errors.
    """
    config = _write_json(tmp_path, 'config.json', {'unknown': {}})
    assert main(['--config', config, 'plan']) == EXIT_USAGE


def test_simulate_hypercube_csv(invoke):
    """
    Test if the CSV output depends on the seed only, not on the thread count.
    """
    args = ['simulate', '--family', 'hypercube', '--n-slots', '3', '--n', '40', '--replicas', '600', '--seed', '7']
    result, first = invoke(*args)
    assert result.exit_code == EXIT_OK
    rows = list(csv.reader(first.splitlines()))
    assert tuple(rows[0]) == ('a', 'p_hat', 'wilson_upper', 'bound_raw', 'bound_clipped', 'regime')
    assert len(rows) == 11
    _, second = invoke(*args)
    _, threaded = invoke(*args, pre=['--threads', '3'])
    assert first == second == threaded
    _, other_seed = invoke(*(args[:-1] + ['8']))
    assert other_seed != first


def test_simulate_doeblin_json(invoke, tmp_path):
    """
    Test the JSON form of a Doeblin deviation curve on an explicit a-grid.
    """
    kernel = _write_json(tmp_path, 'kernel.json', TWO_STATE)
    result, text = invoke('simulate', '--family', 'doeblin', '--kernel', kernel, '--values', '1,-1', '--n', '200',
                          '--replicas', '50', '--seed', '1', '--a', '0.1', '--a', '0.2', '--format', 'json')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert data['family'] == 'doeblin'
    assert data['reference'] == pytest.approx(-1. / 3.)
    assert [row['a'] for row in data['rows']] == [0.1, 0.2]
    assert 'estimate' not in data


def test_simulate_bernoulli_json(invoke):
    """
    Test if the Bernoulli curve reports the integral estimate.
    """
    result, text = invoke('simulate', '--family', 'bernoulli', '--lambda', '0.618', '--observable', 'sign',
                          '--n', '40', '--replicas', '20', '--seed', '1', '--reference', '0', '--format', 'json')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert abs(data['estimate']) <= 1.
    assert data['reference'] == 0.


def test_simulate_bernoulli_vanishing_observable(invoke):
    """
    Test if an indicator above the attractor gives a zero estimate and zero bounds.
    """
    result, text = invoke('simulate', '--family', 'bernoulli', '--lambda', '0.618', '--threshold', '100',
                          '--n', '40', '--replicas', '20', '--seed', '1', '--format', 'json')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert data['estimate'] == 0.
    assert len(data['rows']) == 10
    assert all(row['bound_raw'] == 0. and row['p_hat'] == 0. for row in data['rows'])


@pytest.mark.parametrize("args", [
    ['--family', 'bernoulli', '--lambda', '0.618', '--observable', 'rho'],
    ['--family', 'hypercube', '--n-slots', '3', '--observable', 'sign'],
    ['--family', 'doeblin', '--values', '1,-1'],
])
def test_simulate_bad_flags(invoke, args):
    """
    Test if observables of another family and missing family flags are usage errors.
    """
    result, _ = invoke('simulate', '--n', '10', '--replicas', '2', '--seed', '1', *args)
    assert result.exit_code == EXIT_USAGE


def test_hist(invoke):
    """
    Test if the histogram CSV has one row per bin and total mass 1.
    """
    result, text = invoke('hist', '--lambda', '0.618', '--seed', '3', '--bins', '20', '--runs', '2',
                          '--points', '1000')
    assert result.exit_code == EXIT_OK
    rows = list(csv.reader(text.splitlines()))
    assert tuple(rows[0]) == ('bin_left', 'bin_right', 'mass')
    assert len(rows) == 21
    assert sum(float(row[2]) for row in rows[1:]) == pytest.approx(1., abs=1e-9)


def test_hist_ratio_close_to_one(invoke):
    """
    Test if a ratio without a certified block length is still histogrammed.
    """
    result, text = invoke('hist', '--lambda', '0.99', '--seed', '3', '--bins', '10', '--runs', '1',
                          '--points', '1000')
    assert result.exit_code == EXIT_OK
    assert len(list(csv.reader(text.splitlines()))) == 11


def test_verify_quick(invoke):
    """
    Test if the quick property suites pass with exit code 0.
    """
    result, text = invoke('verify', '--quick', '--seed', '5')
    assert result.exit_code == EXIT_OK
    data = json.loads(text)
    assert data['passed'] is True
    assert len(data['suites']) == 9


def test_version():
    """
    Test if --version prints the package version.
    """
    result = CliRunner().invoke(cli, ['--version'])
    assert result.exit_code == EXIT_OK
    assert version in result.output


def test_main_returns_exit_code():
    """
    Test if main() returns the exit code instead of exiting.
    """
    assert main(['gap', '--family', 'custom', '--delta0', '0.5']) == EXIT_OK
    assert main(['gap', '--family', 'custom']) == EXIT_USAGE
