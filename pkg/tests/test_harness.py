import json
import math

import numpy as np
import pytest

from vecfit.exceptions import ConfigError, DimensionMismatch
from vecfit.export import render_keyframe
from vecfit.harness import eval_fit, iou, synth_target, synthetic_params, write_eval_report
from vecfit.harness.evaluate import motion_errors
from vecfit.harness.synth import program_phase
from vecfit.item_loaders.config_loaders import load_synthetic_spec
from vecfit.motion import MotionLayout, init_params
from vecfit.raster.frames_io import list_frames


def spec_for(**data):
    base = {'resolution': 50, 'keyframes': 5}
    base.update(data)
    return load_synthetic_spec(base)


def test_program_phase():
    assert program_phase('ramp', 0, 5) == 0.0
    assert program_phase('ramp', 4, 5) == 1.0
    assert program_phase('sine', 1, 5) == pytest.approx(1.0)
    assert program_phase('sine', 4, 5) == pytest.approx(0.0, abs=1e-12)
    assert program_phase('ramp', 0, 1) == 0.0
    with pytest.raises(ConfigError):
        program_phase('zigzag', 1, 5)


def test_zero_amplitude_is_the_static_render(ball_bar_doc):
    spec = spec_for(groups=[{'group_id': 'ball'}], paths=[{'path_index': 1, 'amplitude': 0}])
    frames, params = synth_target(ball_bar_doc, spec)
    assert not params.homographies.any() and not params.offsets.any()
    static = render_keyframe(ball_bar_doc, init_params(ball_bar_doc, 1, 50), 0, 50, keep_fills=True)
    for frame in frames:
        np.testing.assert_array_equal(frame.rgb, static.rgb)


def test_ramp_program(ball_bar_doc):
    spec = spec_for(groups=[{'group_id': 'ball', 'tx': 20, 'rotation_deg': 90, 'log_scale': 0.1}])
    params = synthetic_params(ball_bar_doc, spec)
    g = ball_bar_doc.group_index('ball')
    np.testing.assert_allclose(params.homographies[:, g, 0], [0, 5, 10, 15, 20])
    assert params.homographies[4, g, 2] == pytest.approx(math.pi / 2)
    assert params.homographies[2, g, 3] == params.homographies[2, g, 4] == pytest.approx(0.05)
    assert not params.homographies[:, ball_bar_doc.group_index('bar')].any()


def test_offset_program_bends_the_path(ball_bar_doc):
    spec = spec_for(paths=[{'path_index': 1, 'amplitude': 4, 'cycles': 0.25}])
    params = synthetic_params(ball_bar_doc, spec)
    offsets = ball_bar_doc.path_offsets()
    bar = params.offsets[:, offsets[1]:offsets[2]]
    assert not bar[0].any()
    assert not bar[..., 0].any()
    assert np.abs(bar[4, :, 1]).max() == pytest.approx(4.0)
    assert not params.offsets[:, offsets[0]:offsets[1]].any()


def test_unknown_targets_in_programs(ball_bar_doc):
    with pytest.raises(ConfigError) as info:
        synthetic_params(ball_bar_doc, spec_for(groups=[{'group_id': 'nope'}]))
    assert info.value.field == 'groups.0.group_id'
    with pytest.raises(ConfigError):
        synthetic_params(ball_bar_doc, spec_for(paths=[{'path_index': 7}]))


def test_noise_is_seeded_and_bounded(ball_bar_doc):
    spec = spec_for(groups=[{'group_id': 'ball', 'tx': 5}], noise=0.05, seed=3)
    a, _ = synth_target(ball_bar_doc, spec)
    b, _ = synth_target(ball_bar_doc, spec)
    clean, _ = synth_target(ball_bar_doc, spec_for(groups=[{'group_id': 'ball', 'tx': 5}]))
    np.testing.assert_array_equal(a[2].rgb, b[2].rgb)
    assert np.abs(a[2].rgb - clean[2].rgb).max() <= 0.05 + 1e-12
    assert np.abs(a[2].rgb - clean[2].rgb).max() > 0


def test_synth_writes_frames(tmp_path, ball_bar_doc):
    synth_target(ball_bar_doc, spec_for(groups=[{'group_id': 'bar', 'ty': -5}]), outdir=str(tmp_path))
    assert len(list_frames(str(tmp_path))) == 5


def test_iou():
    a = np.zeros((4, 4), dtype=bool)
    b = np.zeros((4, 4), dtype=bool)
    assert iou(a, b) == 1.0
    a[:2] = True
    b[1:3] = True
    assert iou(a, b) == pytest.approx(1 / 3)
    assert iou(a, b) == iou(b, a)
    assert iou(a, ~a) == 0.0


def test_eval_of_truth_is_perfect(ball_bar_doc, tmp_path):
    spec = spec_for(groups=[{'group_id': 'ball', 'tx': 10, 'rotation_deg': 20}])
    frames, truth = synth_target(ball_bar_doc, spec)
    report = eval_fit(ball_bar_doc, truth, frames, truth, seconds=2.0, iterations=10)
    assert report.mse == [0.0] * 5
    assert report.iou == [1.0] * 5
    assert report.translation_error == {'ball': 0.0, 'bar': 0.0}
    assert report.rotation_error == {'ball': 0.0, 'bar': 0.0}
    assert report.iterations_per_second == 5.0

    path = tmp_path / 'report.json'
    write_eval_report(str(path), report)
    assert json.loads(path.read_text())['iou'] == [1.0] * 5


def test_eval_measures_motion_error(ball_bar_doc):
    spec = spec_for(groups=[{'group_id': 'ball', 'tx': 10}])
    frames, truth = synth_target(ball_bar_doc, spec)
    still = init_params(ball_bar_doc, 5, 50)
    report = eval_fit(ball_bar_doc, still, frames, truth)
    # 0, 2.5, 5, 7.5 e 10 px: média 5
    assert report.translation_error['ball'] == pytest.approx(5.0)
    assert report.translation_error['bar'] == pytest.approx(0.0)
    assert report.iou[0] == 1.0 and report.iou[4] < 1.0


def test_eval_dimension_checks(ball_bar_doc):
    frames, truth = synth_target(ball_bar_doc, spec_for())
    with pytest.raises(DimensionMismatch):
        eval_fit(ball_bar_doc, truth, frames[:3])
    with pytest.raises(DimensionMismatch):
        eval_fit(ball_bar_doc, truth, [np.ones((20, 50, 3))] * 5)


def test_motion_error_counts_point_offsets(ball_bar_doc):
    truth = init_params(ball_bar_doc, 3, 50)
    truth.homographies[:, 0, 0] = 6.0
    layout = MotionLayout.from_document(ball_bar_doc, truth.pixels_per_unit)
    ball = layout.group_points[0]

    carried = init_params(ball_bar_doc, 3, 50)
    carried.offsets[:, ball, 0] = 6.0
    translation, _ = motion_errors(ball_bar_doc, carried, truth, truth.pixels_per_unit)
    assert translation['ball'] == pytest.approx(0.0, abs=1e-9)

    halfway = init_params(ball_bar_doc, 3, 50)
    halfway.offsets[:, ball, 0] = 3.0
    translation, _ = motion_errors(ball_bar_doc, halfway, truth, truth.pixels_per_unit)
    assert translation['ball'] == pytest.approx(3.0)
    assert translation['bar'] == pytest.approx(0.0, abs=1e-9)
