#!/usr/bin/env python
# -*- coding: utf-8 -*-
import json
from click.testing import CliRunner
import pytest
from hardylab.cli import (
    EXIT_CONFIG,
    EXIT_IO,
    cli,
    resolve_family,
    run
)
from hardylab.config import RunConfig
from hardylab.version import __version__
from hardylab.zoo import Family, UnknownFamilyException


@pytest.fixture(scope='module', name='runner')
def runner_fix() -> CliRunner:
    """
    Get a CLI runner.

    :return: the runner
    """
    return CliRunner()


def _report(runner: CliRunner, tmp_path, *args) -> dict:
    out = tmp_path / 'report.json'
    result = runner.invoke(cli, list(args) + ['--out', str(out)])
    assert result.exit_code == 0, result.output
    return json.loads(out.read_text(encoding='utf-8'))


@pytest.mark.parametrize('tag,family,derivative', [
    ('lpr', Family.LPR_PHI, False),
    ('koebe-deriv', Family.KOEBE_DILATED, True),
    ('starlike-extremal', Family.STARLIKE_EXTREMAL, False),
    ('sector-deriv', Family.SECTOR, True)
])
def test_resolve_family(tag, family, derivative):
    """
    Arrange/Act: Resolve a family tag given on the command line.
    Assert: The family and the derivative flag come back.

    :param tag: the tag
    :param family: the expected family
    :param derivative: the expected flag
    """
    assert resolve_family(tag) == (family, derivative)


def test_resolve_unknown_family():
    """
    Arrange/Act: Resolve a tag that names no family.
    Assert: The call raises `UnknownFamilyException`.
    """
    with pytest.raises(UnknownFamilyException):
        resolve_family('grunsky')


def test_version(runner: CliRunner):
    """
    Arrange/Act: Ask for the version.
    Assert: The output names it.

    :param runner: the CLI runner
    """
    result = runner.invoke(cli, ['--version'])
    assert result.exit_code == 0
    assert __version__ in result.output


def test_coeffs_of_lpr(runner: CliRunner, tmp_path):
    """
    Arrange/Act: List the coefficients of the lacunary map.
    Assert: `a2 = 1/4`, and the document carries its schema version.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'coeffs', '--family', 'lpr',
                  '--order', '16')
    assert doc['schema_version'] == '1.0'
    assert doc['command'] == 'coeffs'
    assert doc['function']['family'] == 'lpr_phi'
    assert len(doc['coefficients']) == 17
    assert doc['coefficients'][2]['re'] == pytest.approx(0.25)


def test_coeffs_are_deterministic(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Write the same report twice.
    Assert: The files are byte-identical.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    texts = []
    for name in ('a.json', 'b.json'):
        out = tmp_path / name
        result = runner.invoke(cli, ['coeffs', '--family', 'sector',
                                     '--alpha', '0.5', '--out', str(out)])
        assert result.exit_code == 0
        texts.append(out.read_bytes())
    assert texts[0] == texts[1]


def test_coeffs_csv(runner: CliRunner, tmp_path):
    """
    Arrange/Act: List coefficients as CSV.
    Assert: The header and row count are right.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    out = tmp_path / 'coeffs.csv'
    result = runner.invoke(cli, ['coeffs', '--family', 'koebe', '--order',
                                 '8', '--format', 'csv', '--out', str(out)])
    assert result.exit_code == 0
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'n,re,im,abs'
    assert len(lines) == 10
    assert lines[3].startswith('2,2,0')


def test_build_koebe(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Build the Koebe function.
    Assert: `a2 = 2`, `a3 = 3` and the evaluators are closed forms.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'build', '--family', 'koebe')
    assert doc['a2'] == pytest.approx([2.0, 0.0])
    assert doc['a3'] == pytest.approx([3.0, 0.0])
    assert doc['evaluators']['f'] == 'closed_form'


@pytest.mark.parametrize('fmt', ['json', 'csv'])
def test_build_at_order_two(runner: CliRunner, tmp_path, fmt):
    """
    Arrange/Act: Build a sector map truncated at `z^2`.
    Assert: The command succeeds and reports `a2` but no `a3`.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    :param fmt: the report format
    """
    out = tmp_path / f'build.{fmt}'
    result = runner.invoke(cli, ['build', '--family', 'sector', '--alpha',
                                 '0.5', '--order', '2', '--format', fmt,
                                 '--out', str(out)])
    assert result.exit_code == 0, result.output
    if fmt == 'json':
        doc = json.loads(out.read_text(encoding='utf-8'))
        assert doc['a2'] == pytest.approx([0.5, 0.0])
        assert doc['a3'] is None
    else:
        header, row = out.read_text(encoding='utf-8').splitlines()
        cells = dict(zip(header.split(','), row.split(',')))
        assert float(cells['a2_re']) == pytest.approx(0.5)
        assert cells['a3_re'] == cells['a3_im'] == ''


def test_means_of_identity_like_map(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Get the means of the half-plane map at two radii.
    Assert: The profile holds both radii, increasing.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'means', '--family', 'half_plane',
                  '--p', '2', '--radii', '0.5,0.75')
    profile = doc['profile']
    assert profile['radii'] == [0.5, 0.75]
    assert profile['values'][0] < profile['values'][1]


def test_exponent_of_sector_derivative(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Estimate the critical exponent of `s_0.5'`.
    Assert: It is `1/(1 + 1/2) = 2/3`.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'exponent', '--family', 'sector-deriv',
                  '--alpha', '0.5')
    assert doc['derivative'] is True
    assert doc['estimate']['p_star'] == pytest.approx(2.0 / 3.0, rel=0.05)


def test_exponent_at_fixed_p(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Fit the blow-up rate of the Koebe function at `p = 1`.
    Assert: It is `1`.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'exponent', '--family', 'koebe',
                  '--p', '1')
    assert doc['estimate']['gamma'] == pytest.approx(1.0, abs=0.05)
    assert doc['estimate']['p_star'] is None


def test_geometry_with_pole(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Examine the geometry of the half-plane map and its pole.
    Assert: The lower order and both angles at infinity are right.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'geometry', '--family', 'half_plane',
                  '--pole')
    assert doc['lower_order']['beta'] == pytest.approx(1.0, abs=1e-6)
    assert doc['radial_A_limit'] == pytest.approx(1.0, abs=1e-6)
    assert doc['half_tangents']['delta'] == pytest.approx(3.14159, abs=1e-3)


def test_geometry_slit_tip(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Examine the two-slit starlike map with `a2 = 2`.
    Assert: The slit tip is `-1/4`.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'geometry', '--family',
                  'starlike_extremal', '--alpha', '2')
    assert doc['slit_tip'] == pytest.approx([-0.25, 0.0], abs=1e-12)


def test_report_omega(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Emit the sweep of the admissible set as CSV.
    Assert: It has a header and three rows per radius.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    out = tmp_path / 'omega.csv'
    result = runner.invoke(cli, ['report', '--table', 'omega', '--format',
                                 'csv', '--out', str(out)])
    assert result.exit_code == 0
    lines = out.read_text(encoding='utf-8').splitlines()
    assert lines[0] == 'r,eps,eps0,a2'
    assert len(lines) == 1 + 150


def test_report_trace(runner: CliRunner, tmp_path):
    """
    Arrange/Act: Trace the Koebe function along the positive axis.
    Assert: One row per radius.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    doc = _report(runner, tmp_path, 'report', '--table', 'trace',
                  '--family', 'koebe', '--radii', '0.25,0.5')
    assert doc['table'] == 'trace'
    assert doc['trace']['radii'] == [0.25, 0.5]
    assert len(doc['trace']['moduli']) == 2


@pytest.mark.parametrize('args', [
    ['coeffs'],
    ['coeffs', '--family', 'bieberbach'],
    ['coeffs', '--family', 'sector', '--alpha', '2'],
    ['coeffs', '--family', 'sector', '--alpha', '0.5', '--order', '1'],
    ['build', '--family', 'sector', '--alpha', '0.5', '--order', '1'],
    ['build', '--family', 'lpr_composition', '--r', '0.9', '--eps', '0.2'],
    ['build', '--family', 'convex_from_measure', '--measure', '[oops'],
    ['means', '--family', 'koebe', '--p', '-1'],
    ['means', '--family', 'koebe', '--radii', '0.5,1.5']
])
def test_bad_configuration(runner: CliRunner, tmp_path, args):
    """
    Arrange/Act: Run a command with a bad configuration.
    Assert: The exit status is 2 and no report is written.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    :param args: the arguments
    """
    out = tmp_path / 'never.json'
    result = runner.invoke(cli, args + ['--out', str(out)])
    assert result.exit_code == EXIT_CONFIG
    assert not out.exists()


def test_unwritable_report(runner: CliRunner, tmp_path):
    """
    Arrange: Point the report at a directory that doesn't exist.
    Act: Run a command.
    Assert: The exit status is 3.

    :param runner: the CLI runner
    :param tmp_path: a temporary directory
    """
    out = tmp_path / 'missing' / 'report.json'
    result = runner.invoke(cli, ['coeffs', '--family', 'koebe', '--out',
                                 str(out)])
    assert result.exit_code == EXIT_IO


def test_run_without_click(tmp_path):
    """
    Arrange: Configure a run directly.
    Act: Run it.
    Assert: The status is 0 and the report is written.

    :param tmp_path: a temporary directory
    """
    out = tmp_path / 'build.json'
    status = run(RunConfig(command='build', family='sector',
                           params={'alpha': 0.25}, out=str(out)))
    assert status == 0
    assert json.loads(out.read_text(encoding='utf-8'))['a2'][0] == \
        pytest.approx(0.25)
