import re

import numpy as np
import pytest
from lxml import etree

from vecfit.exceptions import DegenerateProjection, DimensionMismatch
from vecfit.export import (
    bake_keyframes,
    default_duration,
    key_times,
    keyframe_points,
    render_keyframe,
    strip_animations,
    write_animated_svg,
    write_frames,
)
from vecfit.motion import init_params
from vecfit.palette import assign_palette, recolor
from vecfit.raster.frames_io import list_frames, read_frame
from vecfit.raster.render import pixel_points, render
from vecfit.svg_core.document import SVG_NS, parse_svg

NUMBER = re.compile(r'[-+]?(\d+\.?\d*|\.\d+)(e[-+]?\d+)?')


def skeleton(d):
    return NUMBER.sub('#', d)


def moving_params(doc, rng, keyframes=4):
    params = init_params(doc, keyframes=keyframes, resolution=100)
    for k in range(1, keyframes):
        params.homographies[k, :, 0] = 3.0 * k
        params.homographies[k, :, 2] = 0.05 * k
        params.offsets[k] = rng.normal(scale=0.5, size=params.offsets[k].shape)
    return params


def animates(text):
    root = etree.fromstring(text.encode('utf-8'))
    return root.findall(f'.//{{{SVG_NS}}}animate')


def test_key_times_and_duration():
    assert key_times(1) == [0.0]
    assert key_times(5) == [0.0, 0.25, 0.5, 0.75, 1.0]
    assert default_duration(15) == 3.0


def test_rest_keyframe_uses_document_points(figure_doc, rng):
    params = moving_params(figure_doc, rng)
    for got, path in zip(keyframe_points(figure_doc, params, 0), figure_doc.paths):
        np.testing.assert_array_equal(got, path.points)


def test_animated_svg_is_well_formed(figure_doc, rng):
    params = moving_params(figure_doc, rng)
    text = write_animated_svg(bake_keyframes(figure_doc, params), figure_doc)
    found = animates(text)
    assert len(found) == figure_doc.n_paths
    for animate in found:
        assert animate.get('attributeName') == 'd'
        assert animate.get('dur') == '0.8s'
        assert animate.get('repeatCount') == 'indefinite'
        assert animate.get('keyTimes') == '0;0.333333;0.666667;1'
        assert len(animate.get('values').split(';')) == 4


def test_keyframe_values_share_one_skeleton(figure_doc, rng):
    baked = bake_keyframes(figure_doc, moving_params(figure_doc, rng))
    for values in baked.d:
        assert len({skeleton(d) for d in values}) == 1
        assert len(set(values)) > 1


def test_first_keyframe_reparses_to_the_document(figure_doc, rng):
    params = moving_params(figure_doc, rng)
    text = write_animated_svg(bake_keyframes(figure_doc, params), figure_doc)
    again = parse_svg(strip_animations(text))
    assert again.n_paths == figure_doc.n_paths
    assert [g.id for g in again.groups] == [g.id for g in figure_doc.groups]
    for a, b in zip(again.paths, figure_doc.paths):
        np.testing.assert_allclose(a.points, b.points, atol=1e-4)
        assert a.fill == pytest.approx(b.fill, abs=0.5 / 255)


def test_export_restores_original_colors(figure_doc, rng):
    recolor_map = assign_palette(figure_doc)
    recolored = recolor(figure_doc, recolor_map)
    params = moving_params(recolored, rng)
    baked = bake_keyframes(recolored, params, recolor_map)
    assert baked.fills == [p.original_fill for p in figure_doc.paths]
    text = write_animated_svg(baked, recolored)
    assert 'data-vecfit-original' not in text


def test_single_keyframe_has_no_animation(triangle_doc):
    params = init_params(triangle_doc, keyframes=1, resolution=100)
    text = write_animated_svg(bake_keyframes(triangle_doc, params), triangle_doc)
    assert animates(text) == []


def test_bake_rejects_foreign_params(figure_doc, triangle_doc):
    with pytest.raises(DimensionMismatch):
        bake_keyframes(figure_doc, init_params(triangle_doc, keyframes=2))


def test_bake_rejects_degenerate_projection(triangle_doc):
    params = init_params(triangle_doc, keyframes=2, resolution=100)
    params.homographies[1, 0, 6] = -1.0
    with pytest.raises(DegenerateProjection):
        bake_keyframes(triangle_doc, params)


def test_render_keyframe_zero_matches_static_render(ball_bar_doc, rng):
    params = moving_params(ball_bar_doc, rng)
    frame = render_keyframe(ball_bar_doc, params, 0, 50, softness=0.25)
    expected = render(ball_bar_doc, pixel_points(ball_bar_doc, 0.5), 50, 50, 0.25, tol=0.01)
    np.testing.assert_array_equal(frame.rgb, expected.rgb)


def test_write_frames(tmp_path, ball_bar_doc, rng):
    params = moving_params(ball_bar_doc, rng, keyframes=3)
    paths = write_frames(ball_bar_doc, params, 40, None, str(tmp_path / 'out'))
    assert len(paths) == 3
    assert list_frames(str(tmp_path / 'out')) == paths
    frame = read_frame(paths[0])
    assert (frame.width, frame.height) == (40, 40)
