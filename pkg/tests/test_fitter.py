import numpy as np
import pytest

from vecfit.exceptions import ConfigError, DimensionMismatch, NonFiniteGradient
from vecfit.fitter import (
    AdamState,
    Fitter,
    activate_keyframe,
    adam_step,
    candidate_select,
    fit,
    get_initializer,
    probe_translation,
    progressive_schedule,
    select_keyframes,
    thread_count,
)
from vecfit.items import FitConfig
from vecfit.motion import ParamGrads, init_params
from vecfit.raster.render import pixel_points, render


def test_default_schedule():
    plan = progressive_schedule(FitConfig(keyframes=15, activation_cadence=100, iterations=2000))
    assert plan.activation_iteration(0) == 0
    assert plan.activation_iteration(1) == 0
    assert plan.activation_iteration(2) == 100
    assert plan.activation_iteration(14) == 1300
    assert plan.last_activation == 1300
    assert plan.joint_iterations == 700
    assert plan.active_at(0) == [0, 1]
    assert plan.active_at(250) == [0, 1, 2, 3]
    assert plan.active_at(1999) == list(range(15))
    assert plan.sharpen_from == 1800
    assert plan.softness_at(1799, 0.7, 0.35) == 0.7
    assert plan.softness_at(1800, 0.7, 0.35) == 0.35


def test_schedule_without_iterations_activates_nothing():
    plan = progressive_schedule(FitConfig(keyframes=15, iterations=0))
    assert plan.iterations == 0
    assert plan.events() == []


def test_schedule_rejects_too_few_iterations():
    with pytest.raises(ConfigError) as info:
        progressive_schedule(FitConfig(keyframes=15, activation_cadence=100, iterations=1000))
    assert info.value.field == 'iterations'


def test_schedule_without_progressive_activates_everything_at_once():
    plan = progressive_schedule(FitConfig(keyframes=4, iterations=10, progressive=False))
    assert plan.active_at(0) == [0, 1, 2, 3]


def test_select_keyframes():
    assert select_keyframes(30, 4) == [0, 10, 19, 29]
    assert select_keyframes(5, 1) == [0]
    with pytest.raises(ConfigError):
        select_keyframes(3, 4)


def test_activate_keyframe_copies_previous(figure_doc):
    params = init_params(figure_doc, keyframes=3, resolution=32)
    params.homographies[1] = 0.3
    params.offsets[1] = -1.0
    state = AdamState.zeros(params)
    state.m_offsets[2] = 5.0
    state.keyframe_steps[2] = 7
    activate_keyframe(params, 2, state)
    np.testing.assert_array_equal(params.homographies[2], params.homographies[1])
    np.testing.assert_array_equal(params.offsets[2], params.offsets[1])
    assert not state.m_offsets[2].any()
    assert state.keyframe_steps[2] == 0


def test_adam_first_step_moves_by_learning_rate(figure_doc):
    params = init_params(figure_doc, keyframes=3, resolution=32)
    grads = ParamGrads.zeros(params)
    grads.homographies += 1.0
    grads.offsets -= 2.0
    state = AdamState.zeros(params)
    adam_step(params, grads, state, active=[0, 1], lr_homography=1e-3, lr_offsets=1e-1)
    np.testing.assert_allclose(params.homographies[1], -1e-3, rtol=1e-5)
    np.testing.assert_allclose(params.offsets[1], 1e-1, rtol=1e-5)
    # keyframe 0 é fixo e o 2 ainda não foi ativado
    assert not params.homographies[0].any() and not params.offsets[0].any()
    assert not params.homographies[2].any() and not params.offsets[2].any()
    assert state.keyframe_steps.tolist() == [0, 1, 0]


def test_adam_rejects_non_finite_gradients(figure_doc):
    params = init_params(figure_doc, keyframes=2, resolution=32)
    grads = ParamGrads.zeros(params)
    grads.offsets[1, 3, 1] = np.nan
    with pytest.raises(NonFiniteGradient) as info:
        adam_step(params, grads, AdamState.zeros(params), active=[0, 1])
    assert info.value.block == 'offsets[1]'
    assert info.value.index == [3, 1]
    assert not params.offsets.any()


def _square_mask(x, y, size=6, shape=(32, 32)):
    mask = np.zeros(shape, dtype=bool)
    mask[y:y + size, x:x + size] = True
    return mask


def test_probe_translation_finds_shift():
    assert probe_translation(_square_mask(10, 10), _square_mask(12, 6), radius=6) == (2, -4)


def test_probe_translation_edge_cases():
    empty = np.zeros((32, 32), dtype=bool)
    assert probe_translation(empty, _square_mask(3, 3), radius=4) == (0, 0)
    assert probe_translation(_square_mask(5, 5), _square_mask(5, 5), radius=4) == (0, 0)
    # sem sobreposição dentro do raio
    assert probe_translation(_square_mask(0, 0, 2), _square_mask(20, 20, 2), radius=4) == (0, 0)


def test_probe_translation_ties_prefer_smallest_then_first():
    source = np.zeros((16, 16), dtype=bool)
    source[8, 8] = True
    target = np.zeros((16, 16), dtype=bool)
    target[8, 6] = target[8, 10] = True
    assert probe_translation(source, target, radius=4) == (-2, 0)


def test_candidate_select(square_doc):
    points = pixel_points(square_doc, 0.32)
    moved = points[0] + [2.0, 0.0]
    target = render(square_doc, [moved], 32, 32, 0.7)
    assert candidate_select(0, [points[0], moved], points, square_doc, target, None, 32, 32, 0.7) == 1
    assert candidate_select(0, [moved, moved.copy()], points, square_doc, target, None, 32, 32, 0.7) == 0
    assert candidate_select(0, [points[0]], points, square_doc, target, None, 32, 32, 0.7) == 0


def test_thread_count(monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '3')
    assert thread_count() == 3
    assert thread_count(FitConfig(threads=2)) == 2
    for bad in ('0', 'abc'):
        monkeypatch.setenv('VECFIT_THREADS', bad)
        with pytest.raises(ConfigError):
            thread_count()
    monkeypatch.delenv('VECFIT_THREADS')
    assert thread_count() >= 1


def test_unknown_initializer():
    with pytest.raises(ConfigError):
        get_initializer('magic')


def _shifted_square_frames(doc, shift):
    rest = pixel_points(doc, 0.32)
    return [render(doc, rest, 32, 32, 0.7), render(doc, [rest[0] + shift], 32, 32, 0.7)]


def test_probe_initializer_recovers_translation(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0])
    config = FitConfig(resolution=32, keyframes=2, iterations=20, activation_cadence=10, recolor=False)
    fitter = Fitter(square_doc, frames, config)
    fitter.activate(1)
    np.testing.assert_allclose(fitter.params.homographies[1, 0, :2], [2.0, 0.0])
    np.testing.assert_allclose(fitter.params.offsets[1], 0.0, atol=1e-9)


def test_copy_forward_initializer_keeps_previous_pose(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0])
    config = FitConfig(resolution=32, keyframes=2, iterations=20, activation_cadence=10, recolor=False,
                       initializer='none')
    fitter = Fitter(square_doc, frames, config)
    fitter.activate(1)
    assert not fitter.params.homographies[1].any()


def test_short_fit_keeps_rest_keyframe(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0])
    config = FitConfig(resolution=32, keyframes=2, iterations=12, activation_cadence=5, recolor=False)
    result = fit(square_doc, frames, config)
    assert len(result.history) == 12
    assert result.history[0].active_keyframes == [0, 1]
    assert result.best_loss is not None
    assert not result.params.homographies[0].any()
    assert not result.params.offsets[0].any()
    assert abs(result.params.homographies[1, 0, 0] - 2.0) < 0.5


def test_fit_without_iterations_returns_rest_pose(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0])
    result = fit(square_doc, frames, FitConfig(resolution=32, keyframes=2, iterations=0))
    assert result.history == []
    assert not result.params.homographies.any()
    assert result.recolor_map is not None


def test_fit_records_its_duration(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0])
    config = FitConfig(resolution=32, keyframes=2, iterations=6, activation_cadence=3, recolor=False)
    result = fit(square_doc, frames, config)
    assert result.params.fit['iterations'] == 6
    assert result.params.fit['seconds'] > 0
    assert result.params.to_dict()['fit'] == result.params.fit


def test_resume_with_other_keyframe_count(square_doc, monkeypatch):
    monkeypatch.setenv('VECFIT_THREADS', '1')
    frames = _shifted_square_frames(square_doc, [2.0, 0.0]) * 2
    saved = init_params(square_doc, 3, 32)
    config = FitConfig(resolution=32, keyframes=2, iterations=4, activation_cadence=2, recolor=False)
    with pytest.raises(DimensionMismatch) as info:
        Fitter(square_doc, frames, config, resume=saved)
    assert info.value.to_dict()['expected'] == 2
    assert info.value.to_dict()['actual'] == 3
