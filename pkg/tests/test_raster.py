import numpy as np
import pytest
from PIL import Image

from vecfit.exceptions import DimensionMismatch, FrameIOError
from vecfit.raster.flatten import flatten, flatten_cubic, outline_area
from vecfit.raster.frames_io import (
    frame_name,
    list_frames,
    read_frame,
    read_frames,
    read_mask,
    resize_frame,
    write_frame,
    write_frames_to,
    write_mask,
)
from vecfit.raster.image_ops import (
    ForegroundMask,
    blur_kernel,
    clean_target,
    distance_transform,
    foreground_mask,
    gaussian_blur,
    gaussian_blur_adjoint,
    sample_sdf,
)
from vecfit.raster.render import (
    RasterFrame,
    _edge_windows,
    backward,
    band_width,
    coverage,
    pixel_points,
    render,
    render_with_tape,
    signed_distance,
    winding_numbers,
)


def test_flatten_straight_cubic_needs_no_subdivision():
    line = np.array([[0, 0], [1, 0], [2, 0], [3, 0]], dtype=float)
    np.testing.assert_array_equal(flatten_cubic(line), [0.0, 1.0])


def test_flatten_degenerate_cubic_is_one_vertex():
    point = np.ones((4, 2))
    assert len(flatten_cubic(point)) == 1


def test_flatten_respects_tolerance(donut_doc):
    coarse = flatten(donut_doc.paths[0], tol=1.0)
    fine = flatten(donut_doc.paths[0], tol=0.01)
    assert len(fine.vertices) > len(coarse.vertices)
    assert len(fine.loops) == 2


def test_flatten_weights_reproduce_vertices(figure_doc):
    path = figure_doc.paths[1]
    outline = flatten(path)
    rebuilt = np.einsum('vk,vkd->vd', outline.weights, path.points[outline.indices])
    np.testing.assert_allclose(rebuilt, outline.vertices, atol=1e-12)


def test_outline_area(square_doc, donut_doc):
    assert outline_area(square_doc.paths[0]) == pytest.approx(1600.0)
    ring = np.pi * (35 ** 2 - 18 ** 2)
    assert outline_area(donut_doc.paths[0], tol=0.01) == pytest.approx(ring, rel=0.01)


def test_coverage_saturates_outside_band():
    softness = 0.7
    band = band_width(softness)
    alpha, dalpha = coverage(np.array([-band - 1, -band, 0.0, band, band + 1]), softness)
    assert alpha[0] == 1.0 and alpha[1] == 1.0
    assert alpha[3] == 0.0 and alpha[4] == 0.0
    assert alpha[2] == pytest.approx(0.5)
    assert dalpha[0] == 0.0 and dalpha[4] == 0.0
    assert dalpha[2] < 0


def _brute_signed_distance(vertices, starts, ends, width, height):
    ys, xs = np.mgrid[0:height, 0:width] + 0.5
    px, py = xs.ravel(), ys.ravel()
    a, b = vertices[starts], vertices[ends]
    ab = b - a
    len2 = np.maximum((ab ** 2).sum(axis=1), 1e-18)
    t = np.clip(((px[:, None] - a[:, 0]) * ab[:, 0] + (py[:, None] - a[:, 1]) * ab[:, 1]) / len2, 0, 1)
    dist = np.hypot(px[:, None] - a[:, 0] - t * ab[:, 0], py[:, None] - a[:, 1] - t * ab[:, 1]).min(axis=1)
    winding = np.zeros(len(px), dtype=int)
    for (ax, ay), (bx, by) in zip(a, b):
        cross = (bx - ax) * (py - ay) - (px - ax) * (by - ay)
        winding += ((ay <= py) & (by > py) & (cross > 0)).astype(int)
        winding -= ((by <= py) & (ay > py) & (cross < 0)).astype(int)
    return np.where(winding != 0, -dist, dist).reshape(height, width)


@pytest.mark.parametrize("name", ["donut", "concave", "figure"])
def test_banded_distance_matches_full_evaluation(name, monkeypatch):
    from conftest import load_sample
    import importlib
    render_module = importlib.import_module('vecfit.raster.render')
    doc = load_sample(name)
    band = band_width(0.7)
    for path in doc.paths:
        outline = flatten(path, np.array(path.points) * 0.64)
        starts, ends = outline.edges()
        expected = _brute_signed_distance(outline.vertices, starts, ends, 64, 64)
        # blocos minúsculos cruzam fronteiras de bloco no meio das arestas
        for chunk in (1 << 20, 7):
            monkeypatch.setattr(render_module, 'CHUNK_ELEMENTS', chunk)
            sd, *_, sign = signed_distance(outline.vertices, starts, ends, (0, 64, 0, 64), band)
            clear = np.abs(expected) > 1e-6
            np.testing.assert_array_equal(sign[clear], np.where(expected[clear] < 0, -1.0, 1.0))
            near = np.abs(expected) < band
            np.testing.assert_allclose(sd[near], expected[near], atol=1e-9)
            assert np.all(np.abs(sd[~near]) >= band - 1e-9)
            alpha, _ = coverage(sd, 0.7)
            np.testing.assert_allclose(alpha, coverage(expected, 0.7)[0], atol=1e-9)


def test_winding_numbers_of_donut_hole(donut_doc):
    outline = flatten(donut_doc.paths[0])
    starts, ends = outline.edges()
    winding = winding_numbers(outline.vertices, starts, ends, 0, 0, 100, 100)
    assert winding[50, 50] == 0
    assert winding[50, 24] != 0
    assert winding[2, 2] == 0


def test_distance_work_follows_the_outline_not_the_box():
    ring = np.linspace(0, 2 * np.pi, 400, endpoint=False)
    vertices = np.stack([200 + 180 * np.cos(ring), 200 + 180 * np.sin(ring)], axis=1)
    starts = np.arange(400)
    ends = np.roll(starts, -1)
    c0, wx, r0, wy = _edge_windows(vertices[starts], vertices[ends], band_width(0.7), 0, 0, 400, 400)
    pairs = int((wx * wy).sum())
    assert pairs < 0.01 * 400 * 400 * 400


def test_render_square(square_doc):
    frame = render(square_doc, pixel_points(square_doc, 1.0), 100, 100, 0.5)
    fill = np.array(square_doc.paths[0].fill)
    np.testing.assert_array_equal(frame.rgb[50, 50], fill)
    np.testing.assert_array_equal(frame.rgb[5, 5], [1.0, 1.0, 1.0])
    assert frame.width == 100 and frame.height == 100


def test_render_hole_stays_white(donut_doc):
    frame = render(donut_doc, pixel_points(donut_doc, 1.0), 100, 100, 0.5)
    np.testing.assert_array_equal(frame.rgb[50, 50], [1.0, 1.0, 1.0])
    np.testing.assert_array_equal(frame.rgb[50, 24], donut_doc.paths[0].fill)


def test_render_concave_notch_is_empty(concave_doc):
    frame = render(concave_doc, pixel_points(concave_doc, 1.0), 100, 100, 0.5)
    np.testing.assert_array_equal(frame.rgb[25, 50], [1.0, 1.0, 1.0])
    np.testing.assert_array_equal(frame.rgb[50, 25], concave_doc.paths[0].fill)


def test_painter_order_decides_overlap(ball_bar_doc):
    points = pixel_points(ball_bar_doc, 1.0)
    moved = [points[0] + [30.0, 0.0], points[1]]
    bar_on_top = render(ball_bar_doc, moved, 100, 100, 0.5)
    ball_on_top = render(ball_bar_doc.with_painter_order((1, 0)), moved, 100, 100, 0.5)
    np.testing.assert_array_equal(bar_on_top.rgb[50, 50], ball_bar_doc.paths[1].fill)
    np.testing.assert_array_equal(ball_on_top.rgb[50, 50], ball_bar_doc.paths[0].fill)


def test_render_only_subset(ball_bar_doc):
    frame = render(ball_bar_doc, pixel_points(ball_bar_doc, 1.0), 100, 100, 0.5, only=[0])
    np.testing.assert_array_equal(frame.rgb[50, 50], [1.0, 1.0, 1.0])
    np.testing.assert_array_equal(frame.rgb[50, 20], ball_bar_doc.paths[0].fill)


def _objective(doc, points, upstream, plans):
    frame = render(doc, points, 32, 32, 0.7, plans=plans)
    return float((frame.rgb * upstream).sum())


@pytest.mark.parametrize("name", ["triangle", "ball_bar", "donut"])
def test_backward_matches_finite_differences(name, rng):
    from conftest import load_sample
    doc = load_sample(name)
    points = pixel_points(doc, 0.32)
    upstream = rng.normal(size=(32, 32, 3))
    _, tape = render_with_tape(doc, points, 32, 32, 0.7)
    grads = backward(tape, upstream)
    direction = [rng.normal(size=p.shape) for p in points]

    eps = 1e-4
    plus = [p + eps * d for p, d in zip(points, direction)]
    minus = [p - eps * d for p, d in zip(points, direction)]
    fd = (_objective(doc, plus, upstream, tape.plans) - _objective(doc, minus, upstream, tape.plans)) / (2 * eps)
    analytic = sum(float((g * d).sum()) for g, d in zip(grads, direction))
    assert abs(analytic - fd) <= 5e-2 * abs(fd) + 1e-4


def test_translation_gradient_sign(square_doc):
    points = pixel_points(square_doc, 0.32)
    # andar para a direita escurece as colunas à direita do quadrado
    upstream = np.zeros((32, 32, 3))
    upstream[:, 23:, :] = 1.0
    _, tape = render_with_tape(square_doc, points, 32, 32, 0.7)
    grads = backward(tape, upstream)
    assert grads[0][:, 0].sum() < 0


def test_blur_kernel():
    w = blur_kernel()
    assert len(w) == 5
    assert w.sum() == pytest.approx(1.0)
    assert w[2] == w.max()


def test_blur_adjoint_is_exact_transpose(rng):
    x = rng.normal(size=(7, 9, 3))
    y = rng.normal(size=(7, 9, 3))
    lhs = float((gaussian_blur(x) * y).sum())
    rhs = float((x * gaussian_blur_adjoint(y)).sum())
    assert lhs == pytest.approx(rhs, abs=1e-10)


def test_blur_keeps_constant_image():
    frame = RasterFrame.white(6, 4)
    np.testing.assert_allclose(gaussian_blur(frame).rgb, 1.0)


def test_foreground_mask_threshold():
    rgb = np.ones((1, 3, 3))
    rgb[0, 1] = [0.97, 1.0, 1.0]
    rgb[0, 2] = [0.99, 0.99, 0.99]
    mask = foreground_mask(RasterFrame(rgb), 0.98)
    assert mask.bits.tolist() == [[False, True, False]]
    assert mask.area == 1


def test_clean_target_dilates_by_one_pixel():
    rgb = np.full((7, 7, 3), 0.5)
    bits = np.zeros((7, 7), dtype=bool)
    bits[3, 3] = True
    cleaned = clean_target(RasterFrame(rgb), ForegroundMask(bits)).rgb
    assert (cleaned[2:5, 2:5] == 0.5).all()
    assert cleaned[0, 0, 0] == 1.0
    assert cleaned[3, 5, 0] == 1.0


def test_clean_target_shape_mismatch():
    with pytest.raises(DimensionMismatch):
        clean_target(RasterFrame(np.ones((4, 4, 3))), ForegroundMask(np.zeros((3, 4), dtype=bool)))


def test_distance_transform_is_zero_inside_and_next_to_mask():
    bits = np.zeros((9, 9), dtype=bool)
    bits[4, 4] = True
    sdf = distance_transform(ForegroundMask(bits))
    assert sdf.dist[4, 4] == 0.0
    assert sdf.dist[4, 5] == 0.0
    assert sdf.dist[4, 8] == pytest.approx(3.0)


def test_distance_transform_empty_mask_is_zero():
    sdf = distance_transform(ForegroundMask(np.zeros((4, 5), dtype=bool)))
    assert sdf.dist.shape == (4, 5)
    assert not sdf.dist.any()


def test_sample_sdf_at_pixel_centers_and_outside():
    bits = np.zeros((9, 9), dtype=bool)
    bits[4, 4] = True
    sdf = distance_transform(bits)
    values, grads = sample_sdf(sdf, np.array([[8.5, 4.5], [100.0, 4.5], [4.5, 4.5]]))
    assert values[0] == pytest.approx(3.0)
    assert values[1] == pytest.approx(3.0)
    assert values[2] == 0.0
    assert grads[0, 0] > 0


def test_frame_round_trip_is_8bit(tmp_path):
    rgb = np.linspace(0, 1, 4 * 5 * 3).reshape(4, 5, 3)
    path = tmp_path / frame_name(0)
    write_frame(path, RasterFrame(rgb))
    again = read_frame(path)
    assert np.abs(again.rgb - rgb).max() <= 0.5 / 255 + 1e-12


def test_read_frame_composites_alpha_over_white(tmp_path):
    data = np.zeros((2, 2, 4), dtype=np.uint8)
    data[0, 0] = [0, 0, 0, 255]
    path = tmp_path / "rgba.png"
    Image.fromarray(data).save(path)
    frame = read_frame(path)
    np.testing.assert_array_equal(frame.rgb[0, 0], [0, 0, 0])
    np.testing.assert_array_equal(frame.rgb[1, 1], [1, 1, 1])


def test_list_frames_sorted_numerically(tmp_path):
    frames = [RasterFrame.white(3, 2) for _ in range(3)]
    write_frames_to(tmp_path, frames)
    (tmp_path / "notes.txt").write_text("x")
    names = [p.rsplit('/', 1)[-1] for p in list_frames(tmp_path)]
    assert names == ['frame_0000.png', 'frame_0001.png', 'frame_0002.png']
    assert len(read_frames(tmp_path, 6, 4)) == 3


def test_list_frames_errors(tmp_path):
    with pytest.raises(FrameIOError):
        list_frames(tmp_path / "missing")
    with pytest.raises(FrameIOError):
        list_frames(tmp_path)


def test_mask_round_trip(tmp_path):
    bits = np.array([[True, False], [False, True]])
    write_mask(tmp_path / "m.png", bits)
    assert read_mask(tmp_path / "m.png").bits.tolist() == bits.tolist()


def test_resize_frame_box_filter():
    rgb = np.zeros((4, 4, 3))
    rgb[:, 2:] = 1.0
    small = resize_frame(RasterFrame(rgb), 2, 2)
    np.testing.assert_allclose(small.rgb[:, 0], 0.0)
    np.testing.assert_allclose(small.rgb[:, 1], 1.0)
