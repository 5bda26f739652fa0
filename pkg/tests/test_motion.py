import numpy as np
import pytest

from vecfit.exceptions import ConfigError, DegenerateProjection, DimensionMismatch
from vecfit.motion import (
    MotionLayout,
    MotionParams,
    apply_motion,
    compose_homography,
    deform_backward,
    deform_keyframe,
    homography_jacobian,
    init_params,
    load_params,
    motion_backward,
    offsets_for_pose,
    raster_size,
    save_params,
)
from vecfit.svg_core.document import parse_svg


def _project(matrix, point):
    x = matrix @ np.array([point[0], point[1], 1.0])
    return x[:2] / x[2]


def test_zero_parameters_are_identity():
    np.testing.assert_allclose(compose_homography(np.zeros(8), [12.0, 7.0]), np.eye(3), atol=1e-15)


def test_rotation_is_about_the_center():
    h = np.zeros(8)
    h[2] = np.pi / 2
    matrix = compose_homography(h, [10.0, 0.0])
    np.testing.assert_allclose(_project(matrix, [10.0, 0.0]), [10.0, 0.0], atol=1e-12)
    np.testing.assert_allclose(_project(matrix, [11.0, 0.0]), [10.0, 1.0], atol=1e-12)


def test_log_scale_and_translation():
    h = np.zeros(8)
    h[0], h[1], h[3] = 5.0, -2.0, np.log(2.0)
    matrix = compose_homography(h, [0.0, 0.0])
    np.testing.assert_allclose(_project(matrix, [3.0, 4.0]), [11.0, 2.0], atol=1e-12)


def test_jacobian_matches_finite_differences(rng):
    h = rng.normal(scale=0.1, size=8)
    h[6:] *= 0.01
    c = rng.normal(scale=10.0, size=2)
    matrix, dh, dc = homography_jacobian(h, c)
    np.testing.assert_allclose(matrix, compose_homography(h, c), atol=1e-12)
    eps = 1e-6
    for p in range(8):
        step = np.zeros(8)
        step[p] = eps
        fd = (compose_homography(h + step, c) - compose_homography(h - step, c)) / (2 * eps)
        np.testing.assert_allclose(dh[p], fd, atol=1e-6)
    for p in range(2):
        step = np.zeros(2)
        step[p] = eps
        fd = (compose_homography(h, c + step) - compose_homography(h, c - step)) / (2 * eps)
        np.testing.assert_allclose(dc[p], fd, atol=1e-6)


def test_strict_projection_rejects_points_behind_camera():
    h = np.zeros(8)
    h[6] = -1.0
    matrix = compose_homography(h, [0.0, 0.0])
    rest = np.array([[0.5, 0.0], [2.0, 0.0]])
    with pytest.raises(DegenerateProjection) as info:
        apply_motion(rest, np.zeros_like(rest), matrix, strict=True, point_offset=10)
    assert info.value.details['point_index'] == 11


def test_lenient_projection_clamps_w():
    h = np.zeros(8)
    h[6] = -1.0
    matrix = compose_homography(h, [0.0, 0.0])
    rest = np.array([[2.0, 0.0]])
    points, cache = apply_motion(rest, np.zeros_like(rest), matrix, strict=False)
    assert np.isfinite(points).all()
    assert cache.w[0] == pytest.approx(1e-6)


def test_motion_backward_matches_finite_differences(rng):
    h = rng.normal(scale=0.05, size=8)
    h[6:] *= 0.001
    matrix = compose_homography(h, [20.0, 20.0])
    rest = rng.uniform(0, 40, size=(6, 2))
    delta = rng.normal(size=(6, 2))
    upstream = rng.normal(size=(6, 2))
    _, cache = apply_motion(rest, delta, matrix)
    g_delta, g_matrix = motion_backward(upstream, cache)

    eps = 1e-6
    direction = rng.normal(size=(6, 2))
    plus, _ = apply_motion(rest, delta + eps * direction, matrix)
    minus, _ = apply_motion(rest, delta - eps * direction, matrix)
    fd = float((upstream * (plus - minus)).sum()) / (2 * eps)
    assert float((g_delta * direction).sum()) == pytest.approx(fd, rel=1e-5, abs=1e-8)

    m_direction = rng.normal(size=(3, 3))
    plus, _ = apply_motion(rest, delta, matrix + eps * m_direction)
    minus, _ = apply_motion(rest, delta, matrix - eps * m_direction)
    fd = float((upstream * (plus - minus)).sum()) / (2 * eps)
    assert float((g_matrix * m_direction).sum()) == pytest.approx(fd, rel=1e-5, abs=1e-8)


def test_deform_backward_matches_finite_differences(figure_doc, rng):
    params = init_params(figure_doc, keyframes=2, resolution=64)
    params.homographies[1] = rng.normal(scale=0.05, size=params.homographies[1].shape)
    params.homographies[1, :, 6:] *= 0.001
    params.offsets[1] = rng.normal(scale=0.3, size=params.offsets[1].shape)
    layout = MotionLayout.from_document(figure_doc, params.pixels_per_unit)
    upstream = rng.normal(size=layout.rest.shape)

    _, caches = deform_keyframe(params, layout, 1)
    g_h, g_c, g_off = deform_backward(params, layout, 1, caches, upstream)

    def value(p):
        points, _ = deform_keyframe(p, layout, 1)
        return float((points * upstream).sum())

    eps = 1e-6
    d_h = rng.normal(size=g_h.shape)
    d_c = rng.normal(size=g_c.shape)
    d_off = rng.normal(size=g_off.shape)
    plus, minus = params.copy(), params.copy()
    plus.homographies[1] += eps * d_h
    minus.homographies[1] -= eps * d_h
    plus.centers += eps * d_c
    minus.centers -= eps * d_c
    plus.offsets[1] += eps * d_off
    minus.offsets[1] -= eps * d_off
    fd = (value(plus) - value(minus)) / (2 * eps)
    analytic = float((g_h * d_h).sum() + (g_c * d_c).sum() + (g_off * d_off).sum())
    assert analytic == pytest.approx(fd, rel=1e-5, abs=1e-6)


def test_rest_pose_reproduces_document(figure_doc):
    params = init_params(figure_doc, keyframes=3, resolution=50)
    layout = MotionLayout.from_document(figure_doc, params.pixels_per_unit)
    points, _ = deform_keyframe(params, layout, 2)
    expected = np.concatenate([p.points for p in figure_doc.paths]) * 0.5
    np.testing.assert_allclose(points, expected, atol=1e-12)


def test_offsets_for_pose_hits_target(rng):
    h = rng.normal(scale=0.1, size=8)
    h[6:] *= 0.001
    matrix = compose_homography(h, [5.0, 5.0])
    rest = rng.uniform(0, 10, size=(5, 2))
    target = rng.uniform(0, 10, size=(5, 2))
    delta = offsets_for_pose(matrix, rest, target)
    points, _ = apply_motion(rest, delta, matrix)
    np.testing.assert_allclose(points, target, atol=1e-9)


def test_init_params(figure_doc):
    params = init_params(figure_doc, keyframes=4, resolution=200)
    assert params.keyframes == 4
    assert params.n_groups == len(figure_doc.groups)
    assert params.n_points == figure_doc.n_points
    assert params.pixels_per_unit == 2.0
    assert params.size == (200, 200)
    np.testing.assert_allclose(params.centers[0], np.array(figure_doc.groups[0].centroid) * 2.0)
    with pytest.raises(ConfigError):
        init_params(figure_doc, keyframes=0)


def test_raster_size_keeps_aspect():
    doc = parse_svg('<svg xmlns="http://www.w3.org/2000/svg" viewBox="0 0 100 50">'
                    '<rect width="5" height="5" fill="red"/></svg>')
    assert raster_size(doc, 64) == (64, 32)


def test_check_layout_mismatch(figure_doc, triangle_doc):
    params = init_params(triangle_doc, keyframes=1)
    layout = MotionLayout.from_document(figure_doc, 1.0)
    with pytest.raises(DimensionMismatch):
        params.check_layout(layout, len(figure_doc.groups))


def test_params_file_round_trip(tmp_path, figure_doc, rng):
    params = init_params(figure_doc, keyframes=3, resolution=64)
    params.homographies += rng.normal(size=params.homographies.shape)
    params.offsets += rng.normal(size=params.offsets.shape)
    path = tmp_path / "params.json"
    save_params(path, params)
    loaded = load_params(path)
    np.testing.assert_array_equal(loaded.homographies, params.homographies)
    np.testing.assert_array_equal(loaded.offsets, params.offsets)
    np.testing.assert_array_equal(loaded.centers, params.centers)
    assert loaded.size == params.size


def test_bad_checkpoint_is_config_error(tmp_path):
    path = tmp_path / "bad.json"
    path.write_text("[1, 2")
    with pytest.raises(ConfigError):
        load_params(path)
    with pytest.raises(ConfigError):
        MotionParams.from_dict({"centers": []})
