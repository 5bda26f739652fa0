import json

import numpy as np
import pytest

from conftest import load_sample, sample_path
from vecfit.cli import EXIT_OK, main
from vecfit.fitter import fit
from vecfit.harness import eval_fit, synth_target
from vecfit.item_loaders.config_loaders import load_fit_config, load_synthetic_spec
from vecfit.objective import build_adjacency, incoherence
from vecfit.palette import assign_palette, recolor
from vecfit.raster.frames_io import resize_frame
from vecfit.raster.render import pixel_points, render


def palette_targets(doc, spec):
    """Quadros sintéticos nas cores da paleta, como o fit os espera."""
    source = recolor(doc, assign_palette(doc))
    frames, truth = synth_target(source, load_synthetic_spec(spec))
    return frames, truth


@pytest.fixture
def single_thread(monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')


@pytest.mark.parametrize("name", ["ball_bar", "figure", "donut"])
def test_render_is_resolution_consistent(name, rng):
    doc = load_sample(name)
    for _ in range(3):
        shift = rng.uniform(-10, 10, size=2)
        points = [p + shift for p in pixel_points(doc, 1.0)]
        small = render(doc, [p * 0.64 for p in points], 64, 64, 0.7)
        large = render(doc, [p * 1.28 for p in points], 128, 128, 0.7)
        downsampled = resize_frame(large, 64, 64)
        assert np.abs(downsampled.rgb - small.rgb).mean() <= 0.02


@pytest.mark.slow
def test_recovers_a_translated_group(single_thread):
    doc = load_sample('ball_bar')
    # 20% da largura do raster de 128 px ao longo de 8 keyframes
    frames, _ = palette_targets(doc, {'resolution': 128, 'keyframes': 8,
                                      'groups': [{'group_id': 'ball', 'tx': 25.6}]})
    config = load_fit_config({'resolution': 128, 'keyframes': 8, 'iterations': 1000})
    result = fit(doc, frames, config)
    report = eval_fit(result.doc, result.params, frames)
    assert min(report.iou) >= 0.9


@pytest.mark.slow
def test_spatial_term_keeps_offsets_coherent(single_thread):
    doc = load_sample('figure')
    spec = {'resolution': 128, 'keyframes': 8,
            'groups': [{'group_id': 'arm', 'rotation_deg': 30}],
            'paths': [{'path_index': 2, 'amplitude': 3}]}
    frames, _ = palette_targets(doc, spec)
    base = {'resolution': 128, 'keyframes': 8, 'iterations': 1000}

    full = fit(doc, frames, load_fit_config(base))
    report = eval_fit(full.doc, full.params, frames)
    assert min(report.iou) >= 0.85

    ablated = fit(doc, frames, load_fit_config(dict(base, weights={'lambda_spatial': 0.0})))
    adj = build_adjacency(full.doc)
    assert incoherence(ablated.params.offsets, adj) > incoherence(full.params.offsets, adj)


@pytest.mark.slow
def test_iteration_time_budget(single_thread):
    doc = load_sample('figure')
    frames, _ = palette_targets(doc, {'resolution': 128, 'keyframes': 8,
                                      'groups': [{'group_id': 'arm', 'tx': 10}]})
    config = load_fit_config({'resolution': 128, 'keyframes': 8, 'iterations': 60,
                              'activation_cadence': 5})
    result = fit(doc, frames, config)
    assert result.seconds / len(result.history) <= 0.5


def _pipeline(workdir, svg, spec):
    frames = str(workdir / 'frames')
    checkpoint = workdir / 'fit.json'
    animated = workdir / 'anim.svg'
    report = workdir / 'report.json'
    assert main(['synth', '--svg', svg, '--spec', spec, '--out', frames,
                 '--truth', str(workdir / 'truth.json')]) == EXIT_OK
    assert main(['fit', '--svg', svg, '--frames', frames, '--out', str(animated), '--ckpt', str(checkpoint),
                 '--iterations', '200', '--keyframes', '4', '--resolution', '64']) == EXIT_OK
    assert main(['eval', '--svg', svg, '--ckpt', str(checkpoint), '--frames', frames,
                 '--truth', str(workdir / 'truth.json'), '--out', str(report),
                 '--keyframes', '4', '--resolution', '64']) == EXIT_OK
    saved = json.loads(checkpoint.read_text())
    timing = saved.pop('fit')
    assert timing['iterations'] == 200
    evaluation = json.loads(report.read_text())
    for key in ('wall_clock', 'iterations_per_second'):
        assert evaluation.pop(key) > 0
    return saved, animated.read_bytes(), evaluation


@pytest.mark.slow
def test_two_runs_are_identical(tmp_path, single_thread):
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'resolution': 64, 'keyframes': 4,
                                'groups': [{'group_id': 'ball', 'tx': 8, 'rotation_deg': 10}]}))
    runs = []
    for name in ('a', 'b'):
        workdir = tmp_path / name
        workdir.mkdir()
        runs.append(_pipeline(workdir, str(sample_path('ball_bar')), str(spec)))
    assert runs[0][0] == runs[1][0]
    assert runs[0][1] == runs[1][1]
    assert runs[0][2] == runs[1][2]
