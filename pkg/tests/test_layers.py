import numpy as np
import pytest

from vecfit import settings
from vecfit.exceptions import DimensionMismatch, FrameIOError, PaletteRequired
from vecfit.layers import (
    UNASSIGNED,
    GroupMaskSequence,
    OcclusionScores,
    classify_pixels,
    exclusive_ratios,
    group_masks_from_palette,
    load_group_masks,
    occlusion_score,
    occlusion_scores,
    reorder,
)
from vecfit.palette import assign_palette, recolor
from vecfit.raster.frames_io import frame_name, write_mask
from vecfit.raster.render import pixel_points, render

BALL_X = [0, 10, 25, 40, 50]


def _square(x):
    mask = np.zeros((20, 60), dtype=bool)
    mask[5:15, x:x + 10] = True
    return mask


def _bar():
    mask = np.zeros((20, 60), dtype=bool)
    mask[:, 28:32] = True
    return mask


def _sequence(front):
    balls, bars = [], []
    for x in BALL_X:
        ball, bar = _square(x), _bar()
        if front == 'bar':
            ball &= ~bar
        else:
            bar &= ~ball
        balls.append(ball)
        bars.append(bar)
    return GroupMaskSequence(masks={0: balls, 1: bars}, baselines={0: 100, 1: 80})


def test_exclusive_ratios_track_lost_area():
    ratios = exclusive_ratios(_sequence('bar'))
    assert ratios[1] == [1.0] * 5
    assert ratios[0][2] == pytest.approx(0.6)
    assert ratios[0][0] == 1.0


def test_occlusion_score_sign():
    seq = _sequence('bar')
    assert occlusion_score(seq, 1, 0) == pytest.approx(0.4)
    assert occlusion_score(seq, 0, 1) == pytest.approx(-0.4)
    scores = occlusion_scores(seq)
    assert scores.edges() == [(1, 0)]


def test_front_group_stays_on_top(ball_bar_doc):
    assert reorder(ball_bar_doc, occlusion_scores(_sequence('bar'))) == (0, 1)


def test_ball_in_front_moves_to_the_top(ball_bar_doc):
    scores = occlusion_scores(_sequence('ball'))
    assert scores.scores[(0, 1)] == pytest.approx(0.5)
    assert reorder(ball_bar_doc, scores) == (1, 0)


def test_groups_that_never_meet_have_no_score(ball_bar_doc):
    seq = GroupMaskSequence(masks={0: [_square(0)] * 3, 1: [_bar()] * 3}, baselines={0: 100, 1: 80})
    scores = occlusion_scores(seq)
    assert scores.scores[(0, 1)] is None
    assert scores.edges() == []
    assert reorder(ball_bar_doc, scores) == (0, 1)


def test_groups_without_baseline_do_not_participate():
    seq = GroupMaskSequence(masks={0: [_square(25)], 1: [_bar()]}, baselines={0: 0, 1: 80})
    assert seq.participating() == [1]
    assert occlusion_scores(seq).scores == {}


def test_reorder_follows_edges(figure_doc):
    # tronco na frente da perna: a perna passa a ser pintada antes
    scores = OcclusionScores(scores={(0, 2): 0.3, (2, 0): -0.3})
    assert reorder(figure_doc, scores) == (2, 3, 0, 1)


def test_reorder_keeps_order_on_cycles(figure_doc):
    scores = OcclusionScores(scores={(0, 1): 0.3, (1, 2): 0.3, (2, 0): 0.3})
    assert reorder(figure_doc, scores) == figure_doc.painter_order


def test_small_scores_are_ignored(figure_doc):
    scores = OcclusionScores(scores={(0, 2): 0.01, (2, 0): -0.01})
    assert scores.edges() == []
    assert reorder(figure_doc, scores) == figure_doc.painter_order


def test_classify_pixels(ball_bar_doc):
    recolor_map = assign_palette(ball_bar_doc)
    recolored = recolor(ball_bar_doc, recolor_map)
    frame = render(recolored, pixel_points(recolored, 1.0), 100, 100, settings.EXPORT_SOFTNESS)
    labels = classify_pixels(frame, recolor_map)
    assert labels[50, 20] == 0
    assert labels[50, 50] == 1
    assert labels[5, 5] == UNASSIGNED
    with pytest.raises(PaletteRequired):
        classify_pixels(frame, None)


def _palette_frames(doc, recolor_map, shifts):
    recolored = recolor(doc, recolor_map)
    rest = pixel_points(recolored, 1.0)
    return [render(recolored, [rest[0] + [dx, 0.0], rest[1]], 100, 100, settings.EXPORT_SOFTNESS)
            for dx in shifts]


@pytest.mark.parametrize("painted_order,expected", [((0, 1), (0, 1)), ((1, 0), (1, 0))])
def test_reorder_from_palette_frames(ball_bar_doc, painted_order, expected):
    recolor_map = assign_palette(ball_bar_doc)
    frames = _palette_frames(ball_bar_doc.with_painter_order(painted_order), recolor_map, range(0, 70, 10))
    seq = group_masks_from_palette(frames, recolor_map, recolor(ball_bar_doc, recolor_map))
    assert seq.frames == 7
    assert reorder(ball_bar_doc, occlusion_scores(seq)) == expected


def test_static_palette_frames_keep_order(ball_bar_doc):
    recolor_map = assign_palette(ball_bar_doc)
    frames = _palette_frames(ball_bar_doc, recolor_map, [0] * 4)
    seq = group_masks_from_palette(frames, recolor_map, recolor(ball_bar_doc, recolor_map))
    scores = occlusion_scores(seq)
    assert scores.edges() == []
    assert reorder(ball_bar_doc, scores) == (0, 1)


def test_palette_masks_need_a_palette(ball_bar_doc):
    with pytest.raises(PaletteRequired):
        group_masks_from_palette([np.ones((4, 4, 3))], None, ball_bar_doc)


def _write_mask(path, mask):
    path.parent.mkdir(parents=True, exist_ok=True)
    write_mask(path, mask)


def test_load_group_masks(tmp_path, ball_bar_doc):
    for t in range(3):
        _write_mask(tmp_path / 'ball' / frame_name(t), _square(10 * t)[:, :40])
        _write_mask(tmp_path / 'bar' / frame_name(t), _bar()[:, :40])
    seq = load_group_masks(str(tmp_path), ball_bar_doc)
    assert seq.frames == 3
    assert seq.baselines == {0: 100, 1: 80}


def test_load_group_masks_errors(tmp_path, ball_bar_doc):
    (tmp_path / 'ball').mkdir()
    with pytest.raises(FrameIOError):
        load_group_masks(str(tmp_path), ball_bar_doc)

    other = tmp_path / 'other'
    _write_mask(other / 'ball' / frame_name(0), _square(0))
    _write_mask(other / 'bar' / frame_name(0), _bar())
    _write_mask(other / 'bar' / frame_name(1), _bar())
    with pytest.raises(DimensionMismatch):
        load_group_masks(str(other), ball_bar_doc)
