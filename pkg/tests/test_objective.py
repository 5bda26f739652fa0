import numpy as np
import pytest

from vecfit.exceptions import DimensionMismatch
from vecfit.items import LossWeights
from vecfit.motion import MotionLayout, ParamGrads, init_params
from vecfit.objective import (
    AdjacencySet,
    LossPart,
    Objective,
    build_adjacency,
    build_smooth_joints,
    incoherence,
    loss_g1,
    loss_mse,
    loss_sdf,
    loss_spatial,
    total_loss,
)
from vecfit.raster.image_ops import distance_transform, foreground_mask
from vecfit.raster.render import RasterFrame, pixel_points, render


def test_mse_of_identical_frames_is_zero(rng):
    frames = [RasterFrame(rng.random((6, 5, 3))) for _ in range(2)]
    value, grads = loss_mse(frames, frames)
    assert value == 0.0
    assert all(not g.any() for g in grads)


def test_mse_gradient_matches_finite_differences(rng):
    rendered = rng.random((6, 5, 3))
    target = rng.random((6, 5, 3))
    _, grads = loss_mse([rendered], [target])
    direction = rng.normal(size=rendered.shape)
    eps = 1e-6
    plus = loss_mse([rendered + eps * direction], [target])[0]
    minus = loss_mse([rendered - eps * direction], [target])[0]
    assert float((grads[0] * direction).sum()) == pytest.approx((plus - minus) / (2 * eps), rel=1e-6)


def test_mse_dimension_checks(rng):
    with pytest.raises(DimensionMismatch):
        loss_mse([rng.random((4, 4, 3))], [])
    with pytest.raises(DimensionMismatch):
        loss_mse([rng.random((4, 4, 3))], [rng.random((4, 5, 3))])


def test_adjacency_is_cyclic_within_subpaths(triangle_doc, donut_doc):
    adj = build_adjacency(triangle_doc)
    assert len(adj.pairs) == 9
    assert (adj.weights > 0).all() and (adj.weights <= 1).all()
    assert [0, 1] in adj.pairs.tolist() and [8, 0] in adj.pairs.tolist()
    donut = build_adjacency(donut_doc)
    assert len(donut.pairs) == 24
    assert [11, 12] not in donut.pairs.tolist()


def test_spatial_null_cases(triangle_doc, rng):
    adj = build_adjacency(triangle_doc)
    assert loss_spatial(np.zeros((3, 9, 2)), adj)[0] == 0.0
    shifted = np.broadcast_to(rng.normal(size=(3, 1, 2)), (3, 9, 2))
    value, grad = loss_spatial(shifted, adj)
    assert value == pytest.approx(0.0, abs=1e-20)
    assert np.abs(grad).max() < 1e-12
    assert loss_spatial(np.zeros((0, 9, 2)), adj)[0] == 0.0


def test_spatial_gradient_matches_finite_differences(rng):
    adj = AdjacencySet(np.array([[0, 1], [1, 2], [2, 0]]), np.array([1.0, 0.5, 0.25]))
    offsets = rng.normal(size=(2, 3, 2))
    value, grad = loss_spatial(offsets, adj)
    assert value == incoherence(offsets, adj)
    direction = rng.normal(size=offsets.shape)
    eps = 1e-6
    fd = (loss_spatial(offsets + eps * direction, adj)[0] - loss_spatial(offsets - eps * direction, adj)[0]) / (2 * eps)
    assert float((grad * direction).sum()) == pytest.approx(fd, rel=1e-6)


def test_smooth_joints_skip_corners(triangle_doc, ball_bar_doc):
    assert len(build_smooth_joints(triangle_doc)) == 0
    joints = build_smooth_joints(ball_bar_doc)
    # os quatro vértices do círculo; o retângulo só tem cantos
    assert len(joints) == 4
    assert (joints.joints[:, 1] % 3 == 0).all()


def test_g1_is_zero_at_rest_and_matches_finite_differences(ball_bar_doc, rng):
    joints = build_smooth_joints(ball_bar_doc)
    rest = np.concatenate([p.points for p in ball_bar_doc.paths])[None]
    assert loss_g1(rest, joints)[0] == pytest.approx(0.0, abs=1e-12)

    points = rest + rng.normal(scale=0.5, size=rest.shape)
    _, grad = loss_g1(points, joints)
    direction = rng.normal(size=points.shape)
    eps = 1e-6
    fd = (loss_g1(points + eps * direction, joints)[0] - loss_g1(points - eps * direction, joints)[0]) / (2 * eps)
    assert float((grad * direction).sum()) == pytest.approx(fd, rel=1e-5, abs=1e-10)


def test_sdf_penalizes_points_outside_the_mask():
    bits = np.zeros((20, 20), dtype=bool)
    bits[5:15, 5:15] = True
    sdfs = [distance_transform(bits)]
    inside = np.array([[[10.0, 10.0], [6.0, 14.0]]])
    outside = np.array([[[10.0, 10.0], [19.5, 10.5]]])
    assert loss_sdf(inside, sdfs)[0] == 0.0
    value, grad = loss_sdf(outside, sdfs)
    assert value > 0
    # o gradiente empurra o ponto de fora de volta para a máscara
    assert grad[0, 1, 0] > 0
    assert not grad[0, 0].any()


def test_sdf_needs_one_map_per_keyframe():
    with pytest.raises(DimensionMismatch):
        loss_sdf(np.zeros((2, 3, 2)), [distance_transform(np.ones((4, 4), dtype=bool))])


def test_total_loss_is_linear_in_weights(figure_doc):
    params = init_params(figure_doc, keyframes=1, resolution=16)
    grads = ParamGrads.zeros(params)
    grads.offsets += 1.0
    parts = {
        'mse': LossPart(0.2, grads),
        'spatial': LossPart(0.3, grads),
        'g1': LossPart(0.05, grads),
        'sdf': LossPart(1.5, grads),
    }
    weights = LossWeights(lambda_mse=2.0, lambda_spatial=1.0, lambda_g1=4.0, lambda_sdf=0.5)
    doubled = LossWeights(lambda_mse=4.0, lambda_spatial=2.0, lambda_g1=8.0, lambda_sdf=1.0)
    total, combined = total_loss(parts, weights)
    assert total == pytest.approx(0.4 + 0.3 + 0.2 + 0.75)
    np.testing.assert_allclose(combined.offsets, 7.5)
    total2, combined2 = total_loss(parts, doubled)
    assert total2 == pytest.approx(2 * total)
    np.testing.assert_allclose(combined2.offsets, 15.0)
    zero = LossWeights(lambda_mse=0.0, lambda_spatial=0.0, lambda_g1=0.0, lambda_sdf=0.0)
    assert total_loss(parts, zero)[0] == 0.0


def _objective(doc, weights, threads=1):
    params = init_params(doc, keyframes=2, resolution=32)
    width, height = params.size
    rest = pixel_points(doc, params.pixels_per_unit)
    moved = [rest[0] + [3.0, 1.0], rest[1]]
    targets = [render(doc, rest, width, height, 0.7), render(doc, moved, width, height, 0.7)]
    sdfs = [distance_transform(foreground_mask(t)) for t in targets]
    layout = MotionLayout.from_document(doc, params.pixels_per_unit)
    return Objective(doc, layout, targets, sdfs, weights, threads=threads), params


def test_objective_rest_pose_matches_rest_target(ball_bar_doc):
    objective, params = _objective(ball_bar_doc, LossWeights())
    report, grads = objective.evaluate(params, [0], softness=0.7)
    assert report.mse == 0.0
    assert report.spatial == 0.0
    assert report.active_keyframes == [0]
    # o keyframe 0 é fixo: nenhum gradiente
    assert grads.norm() == 0.0


def test_objective_gradient_matches_finite_differences(ball_bar_doc, rng):
    objective, params = _objective(ball_bar_doc, LossWeights(lambda_sdf=0.0))
    params.homographies[1] = rng.normal(scale=0.02, size=params.homographies[1].shape)
    params.homographies[1, :, 6:] = 0.0
    params.offsets[1] = rng.normal(scale=0.2, size=params.offsets[1].shape)
    objective.freeze_plans(params, [0, 1], softness=0.7)
    report, grads = objective.evaluate(params, [0, 1], softness=0.7)
    assert report.total > 0
    assert set(report.grad_norms) == {'mse', 'spatial', 'g1', 'sdf', 'total'}

    d_h = rng.normal(size=params.homographies[1].shape)
    d_h[:, 6:] = 0.0
    d_off = rng.normal(size=params.offsets[1].shape)
    eps = 1e-5

    def value(sign):
        p = params.copy()
        p.homographies[1] += sign * eps * d_h
        p.offsets[1] += sign * eps * d_off
        return objective.evaluate(p, [0, 1], softness=0.7)[0].total

    fd = (value(1) - value(-1)) / (2 * eps)
    analytic = float((grads.homographies[1] * d_h).sum() + (grads.offsets[1] * d_off).sum())
    assert abs(analytic - fd) <= 5e-2 * abs(fd) + 1e-6


def test_objective_threads_do_not_change_the_sum(ball_bar_doc, rng):
    serial, params = _objective(ball_bar_doc, LossWeights())
    threaded, _ = _objective(ball_bar_doc, LossWeights(), threads=2)
    params.offsets[1] = rng.normal(scale=0.2, size=params.offsets[1].shape)
    a, ga = serial.evaluate(params, [0, 1])
    b, gb = threaded.evaluate(params, [0, 1])
    assert a.total == b.total
    np.testing.assert_array_equal(ga.offsets, gb.offsets)
    np.testing.assert_array_equal(ga.homographies, gb.homographies)
