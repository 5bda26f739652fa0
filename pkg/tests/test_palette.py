import json

import numpy as np
import pytest

from conftest import svg
from vecfit import settings
from vecfit.exceptions import ConfigError, MissingAssignment
from vecfit.palette import (
    FALLBACK,
    HSV_FALLBACK,
    PACKING,
    PackingEntry,
    RecolorMap,
    assign_palette,
    hsv_fallback,
    lcg_permutation,
    load_recolor_map,
    packing_centers,
    packing_table,
    recolor,
    restore_colors,
    save_recolor_map,
    validate_entry,
)
from vecfit.svg_core.colors import to_hex
from vecfit.svg_core.document import parse_svg


def _min_distance(colors):
    diff = colors[:, None, :] - colors[None, :, :]
    dist = np.sqrt((diff ** 2).sum(axis=-1))
    dist[np.diag_indices(len(colors))] = np.inf
    return dist.min()


def random_document(rng, n_paths):
    rects = []
    for i in range(n_paths):
        x, y = rng.uniform(0, 80, size=2)
        w, h = rng.uniform(2, 20, size=2)
        color = to_hex(rng.random(3))
        rects.append(f'<rect x="{x:.3f}" y="{y:.3f}" width="{w:.3f}" height="{h:.3f}" fill="{color}"/>')
    return parse_svg(svg(''.join(rects)))


def test_single_color_is_cube_center():
    r, centers = packing_centers(1)
    assert r == 0.5
    np.testing.assert_array_equal(centers, [[0.5, 0.5, 0.5]])


@pytest.mark.parametrize("k", [2, 3, 4, 5, 8, 12])
def test_packing_separation(k):
    r, centers = packing_centers(k)
    assert centers.shape == (k, 3)
    assert _min_distance(centers) >= 2 * r - 1e-9
    assert centers.min() >= r - 1e-9 and centers.max() <= 1 - r + 1e-9


def test_whole_packing_table_is_separated():
    table = packing_table()
    assert sorted(table) == list(range(1, settings.PACKING_K_MAX + 1))
    for k, entry in table.items():
        assert entry.k == k
        if k > 1:
            assert _min_distance(entry.centers) >= 2 * entry.radius - 1e-9


@pytest.mark.parametrize("k, radius", [
    (2, 0.3169872981),
    (3, 0.2928932188),
    (4, 0.2928932188),
    (5, 0.2639320225),
    (6, 0.2573593129),
    (8, 0.25),
    (9, 0.2320508075),
    (14, 0.2071067811),
    (27, 1 / 6),
])
def test_packing_reaches_known_optimum(k, radius):
    assert packing_centers(k)[0] >= radius - 1e-9


def test_packing_radius_shrinks():
    radii = [entry.radius for _, entry in sorted(packing_table().items())]
    assert all(a >= b - 1e-12 for a, b in zip(radii, radii[1:]))


def test_packing_entry_with_overlap_is_rejected():
    centers = np.array([[0.3, 0.3, 0.3], [0.5, 0.5, 0.5]])
    with pytest.raises(ConfigError) as info:
        validate_entry(PackingEntry(k=2, radius=0.3, centers=centers))
    assert info.value.to_dict()['field'] == 'packing'


def test_packing_above_table_falls_back():
    assert packing_centers(settings.PACKING_K_MAX + 1) is FALLBACK
    colors = hsv_fallback(settings.PACKING_K_MAX + 1)
    assert len({tuple(c) for c in colors}) == len(colors)


def test_packing_rejects_non_positive_k():
    with pytest.raises(ConfigError):
        packing_centers(0)


def test_lcg_permutation_is_deterministic_permutation():
    perm = lcg_permutation(10, seed=7)
    assert sorted(perm) == list(range(10))
    assert perm == lcg_permutation(10, seed=7)
    assert lcg_permutation(10, seed=8) != perm


def test_assign_palette_distinct_and_by_area(figure_doc):
    recolor_map = assign_palette(figure_doc)
    assert recolor_map.source == PACKING
    assert len(recolor_map) == figure_doc.n_paths
    _, colors = recolor_map.assigned_colors()
    assert _min_distance(colors) >= 2 * recolor_map.radius - 1e-9
    r, centers = packing_centers(figure_doc.n_paths)
    perm = lcg_permutation(figure_doc.n_paths, settings.SHUFFLE_SEED)
    # o tronco (maior área) recebe o primeiro centro embaralhado
    np.testing.assert_array_equal(recolor_map.assignments[0][1], centers[perm[0]])


def test_assign_palette_is_deterministic(figure_doc):
    assert assign_palette(figure_doc, seed=3).assignments == assign_palette(figure_doc, seed=3).assignments


def test_excluded_fill_keeps_its_color(figure_doc):
    recolor_map = assign_palette(figure_doc, exclude_fills=['#e9c46a'])
    assert 1 not in recolor_map
    recolored = recolor(figure_doc, recolor_map)
    assert recolored.paths[1].fill == figure_doc.paths[1].fill


def test_hsv_fallback_above_table():
    rng = np.random.default_rng(5)
    doc = random_document(rng, settings.PACKING_K_MAX + 2)
    recolor_map = assign_palette(doc)
    assert recolor_map.source == HSV_FALLBACK
    assert recolor_map.match_radius() > 0


def test_recolor_then_restore_is_identity():
    rng = np.random.default_rng(2024)
    for _ in range(100):
        doc = random_document(rng, int(rng.integers(1, 9)))
        recolor_map = assign_palette(doc, seed=int(rng.integers(0, 1000)))
        restored = restore_colors(recolor(doc, recolor_map), recolor_map)
        assert [p.fill for p in restored.paths] == [p.fill for p in doc.paths]


def test_restore_detects_missing_assignment(ball_bar_doc):
    recolored = ball_bar_doc.recolored({0: (0.1, 0.2, 0.3), 1: (0.5, 0.5, 0.5)})
    partial = RecolorMap(assignments={0: (ball_bar_doc.paths[0].fill, (0.1, 0.2, 0.3))})
    with pytest.raises(MissingAssignment) as info:
        restore_colors(recolored, partial)
    assert info.value.path_index == 1


def test_map_file_round_trip(tmp_path, figure_doc):
    recolor_map = assign_palette(figure_doc)
    path = tmp_path / "map.json"
    save_recolor_map(path, recolor_map)
    data = json.loads(path.read_text())
    assert data["0"]["original"] == to_hex(figure_doc.paths[0].fill)
    loaded = load_recolor_map(path)
    assert loaded.assignments == recolor_map.assignments
    assert loaded.radius == recolor_map.radius


def test_map_file_errors(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(ConfigError):
        load_recolor_map(bad)
    bad.write_text('{"x": {"original": "#000000", "assigned": "#ffffff"}}')
    with pytest.raises(ConfigError):
        load_recolor_map(bad)
