import json
import os

import pytest

from conftest import sample_path
from vecfit import __version__
from vecfit.cli import EXIT_DOMAIN, EXIT_OK, EXIT_USAGE, main
from vecfit.raster.frames_io import list_frames
from vecfit.svg_core.document import parse_svg


def json_errors(text):
    return [json.loads(line) for line in text.splitlines() if line.startswith('{')]


def test_no_subcommand_is_a_usage_error(capsys):
    assert main([]) == EXIT_USAGE
    assert 'usage' in capsys.readouterr().err


def test_missing_required_option_is_a_usage_error():
    assert main(['fit', '--svg', str(sample_path('triangle'))]) == EXIT_USAGE


def test_version(capsys):
    assert main(['--version']) == EXIT_OK
    assert __version__ in capsys.readouterr().out


def test_unreadable_svg_is_a_usage_error(tmp_path):
    code = main(['recolor', '--in', str(tmp_path / 'missing.svg'), '--out', str(tmp_path / 'o.svg'),
                 '--map', str(tmp_path / 'm.json')])
    assert code == EXIT_USAGE


@pytest.mark.parametrize("before", [True, False])
def test_malformed_config_reports_the_field(tmp_path, capsys, before):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'iterations': -5}))
    shared = ['--json-errors', '--config', str(config)]
    command = ['recolor', '--in', str(sample_path('triangle')), '--out', str(tmp_path / 'o.svg'),
               '--map', str(tmp_path / 'm.json')]
    code = main(shared + command if before else command + shared)
    assert code == EXIT_DOMAIN
    errors = json_errors(capsys.readouterr().err)
    assert errors[-1]['error'] == 'ConfigError'
    assert errors[-1]['field'] == 'iterations'


def test_unsupported_svg_is_a_domain_error(tmp_path, capsys):
    svg = tmp_path / 'text.svg'
    svg.write_text('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 10 10"><text>oi</text></svg>')
    code = main(['recolor', '--in', str(svg), '--out', str(tmp_path / 'o.svg'),
                 '--map', str(tmp_path / 'm.json'), '--json-errors'])
    assert code == EXIT_DOMAIN
    assert json_errors(capsys.readouterr().err)[-1]['element'] == 'text'


def test_recolor_writes_document_and_map(tmp_path):
    out, color_map = tmp_path / 'recolored.svg', tmp_path / 'map.json'
    code = main(['recolor', '--in', str(sample_path('figure')), '--out', str(out), '--map', str(color_map)])
    assert code == EXIT_OK
    doc = parse_svg(out.read_text())
    assert doc.n_paths == 4
    assert all(p.fill != p.original_fill for p in doc.paths)
    assert sorted(json.loads(color_map.read_text())) == ['0', '1', '2', '3']


def test_synth_fit_export_eval_reorder(tmp_path, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    svg = str(sample_path('ball_bar'))
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'resolution': 32, 'keyframes': 3,
                                'groups': [{'group_id': 'ball', 'tx': 4}]}))
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'activation_cadence': 2, 'checkpoint_every': 2}))
    frames = str(tmp_path / 'frames')
    color_map = str(tmp_path / 'map.json')
    small = ['--keyframes', '3', '--resolution', '32']

    code = main(['synth', '--svg', svg, '--spec', str(spec), '--out', frames,
                 '--truth', str(tmp_path / 'truth.json')])
    assert code == EXIT_OK
    assert len(list_frames(frames)) == 3

    fitted = tmp_path / 'fitted.svg'
    checkpoint = str(tmp_path / 'fitted.json')
    log = tmp_path / 'loss.jsonl'
    code = main(['fit', '--svg', svg, '--frames', frames, '--out', str(fitted), '--config', str(config),
                 '--map', color_map, '--log', str(log), '--iterations', '8'] + small)
    assert code == EXIT_OK
    assert os.path.exists(checkpoint)
    assert fitted.read_text().count('<animate') == 2
    assert len(log.read_text().splitlines()) == 8
    assert json.loads((tmp_path / 'fitted.json').read_text())['fit']['iterations'] == 8

    animated = tmp_path / 'animated.svg'
    code = main(['export', '--svg', svg, '--ckpt', checkpoint, '--out', str(animated), '--map', color_map,
                 '--frames-out', str(tmp_path / 'out'), '--size', '32', '--dur', '3.0'])
    assert code == EXIT_OK
    assert animated.read_text().count('<animate') == 2
    assert 'dur="3s"' in animated.read_text() or 'dur="3.0s"' in animated.read_text()
    assert len(list_frames(str(tmp_path / 'out'))) == 3

    report = tmp_path / 'report.json'
    code = main(['eval', '--svg', svg, '--ckpt', checkpoint, '--frames', frames,
                 '--truth', str(tmp_path / 'truth.json'), '--out', str(report)] + small)
    assert code == EXIT_OK
    data = json.loads(report.read_text())
    assert len(data['iou']) == 3
    assert set(data['translation_error']) == {'ball', 'bar'}
    assert data['wall_clock'] > 0
    assert data['iterations_per_second'] > 0

    reordered = tmp_path / 'reordered.svg'
    code = main(['reorder', '--svg', svg, '--frames', frames, '--map', color_map,
                 '--out', str(reordered)] + small)
    assert code == EXIT_OK
    assert parse_svg(reordered.read_text()).n_paths == 2


def test_fit_to_json_writes_only_the_checkpoint(tmp_path, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    svg = str(sample_path('triangle'))
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'resolution': 24, 'keyframes': 2}))
    frames = str(tmp_path / 'frames')
    assert main(['synth', '--svg', svg, '--spec', str(spec), '--out', frames]) == EXIT_OK
    checkpoint = tmp_path / 'only.json'
    code = main(['fit', '--svg', svg, '--frames', frames, '--out', str(checkpoint), '--no-recolor',
                 '--init', 'none', '--iterations', '0', '--keyframes', '2', '--resolution', '24'])
    assert code == EXIT_OK
    assert checkpoint.exists()
    assert sorted(p.name for p in tmp_path.iterdir()) == ['frames', 'only.json', 'spec.json']


def test_eval_prints_json_without_output(tmp_path, capsys, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    svg = str(sample_path('triangle'))
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'resolution': 24, 'keyframes': 2}))
    frames = str(tmp_path / 'frames')
    truth = str(tmp_path / 'truth.json')
    assert main(['synth', '--svg', svg, '--spec', str(spec), '--out', frames, '--truth', truth]) == EXIT_OK
    capsys.readouterr()
    assert main(['eval', '--svg', svg, '--ckpt', truth, '--frames', frames]) == EXIT_OK
    data = json.loads(capsys.readouterr().out)
    assert data['iou'] == [1.0, 1.0]
    assert data['wall_clock'] is None


@pytest.mark.parametrize("argv", [
    ['reorder', '--svg', 'x.svg', '--out', 'y.svg'],
    ['export', '--svg', 'x.svg'],
    ['recolor', 'x.svg', '-o', 'y.svg'],
    ['fit', '--svg', 'x.svg', '--frames', 'f', '--out', 'y.svg', '--init', 'random'],
])
def test_argument_errors(argv):
    assert main(argv) == EXIT_USAGE
