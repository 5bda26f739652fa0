"""Parametrização de movimento em dois níveis.

Por grupo e keyframe: homografia de 8 parâmetros [tx, ty, theta, sx, sy,
shear, p1, p2] composta em torno de um centro aprendido por grupo. Por
caminho e keyframe: deslocamentos Δ de cada ponto de controle. Tudo em
pixels do raster de ajuste (pontos do documento × pixels_per_unit).
"""
import json
from dataclasses import dataclass, field

import numpy as np

from vecfit import settings
from vecfit.exceptions import ConfigError, DegenerateProjection, DimensionMismatch
from vecfit.log import get_logger

logger = get_logger(__name__)

PARAM_NAMES = ('tx', 'ty', 'theta', 'sx', 'sy', 'shear', 'p1', 'p2')
W_MIN = 1e-6


def _translation(x, y):
    return np.array([[1.0, 0.0, x], [0.0, 1.0, y], [0.0, 0.0, 1.0]])


def _unit(i, j):
    e = np.zeros((3, 3))
    e[i, j] = 1.0
    return e


def _factors(h, c):
    tx, ty, theta, sx, sy, shear, p1, p2 = (float(v) for v in h)
    cos, sin = np.cos(theta), np.sin(theta)
    persp = np.array([[1.0, 0.0, 0.0], [0.0, 1.0, 0.0], [p1, p2, 1.0]])
    rot = np.array([[cos, -sin, 0.0], [sin, cos, 0.0], [0.0, 0.0, 1.0]])
    shear_m = np.array([[1.0, shear, 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
    scale = np.diag([np.exp(sx), np.exp(sy), 1.0])
    return [persp, _translation(tx, ty), _translation(c[0], c[1]), rot, shear_m, scale,
            _translation(-c[0], -c[1])]


def compose_homography(h, c):
    """H = P·T·T_c·R·Sh·S·T_−c (aplicada a vetores coluna)."""
    out = np.eye(3)
    for factor in _factors(h, c):
        out = out @ factor
    return out


def homography_jacobian(h, c):
    """H e suas derivadas (8, 3, 3) em relação a h e (2, 3, 3) em relação a c."""
    factors = _factors(h, c)
    n = len(factors)
    prefix = [np.eye(3)]
    for f in factors:
        prefix.append(prefix[-1] @ f)
    suffix = [np.eye(3)] * (n + 1)
    for i in range(n - 1, -1, -1):
        suffix[i] = factors[i] @ suffix[i + 1]

    def around(i, d_factor):
        return prefix[i] @ d_factor @ suffix[i + 1]

    theta, sx, sy = float(h[2]), float(h[3]), float(h[4])
    cos, sin = np.cos(theta), np.sin(theta)
    d_rot = np.array([[-sin, -cos, 0.0], [cos, -sin, 0.0], [0.0, 0.0, 0.0]])
    dh = np.stack([
        around(1, _unit(0, 2)),
        around(1, _unit(1, 2)),
        around(3, d_rot),
        around(5, np.diag([np.exp(sx), 0.0, 0.0])),
        around(5, np.diag([0.0, np.exp(sy), 0.0])),
        around(4, _unit(0, 1)),
        around(0, _unit(2, 0)),
        around(0, _unit(2, 1)),
    ])
    dc = np.stack([
        around(2, _unit(0, 2)) - around(6, _unit(0, 2)),
        around(2, _unit(1, 2)) - around(6, _unit(1, 2)),
    ])
    return prefix[-1], dh, dc


@dataclass
class ProjectionCache:
    homogeneous: np.ndarray
    w: np.ndarray
    projected: np.ndarray
    matrix: np.ndarray


def apply_motion(rest, delta, matrix, strict=True, point_offset=0):
    """x̂ = π(H·[x⁰ + Δ, 1]ᵀ).

    strict: w ≤ 1e-6 levanta DegenerateProjection; caso contrário w é
    limitado em 1e-6 e o gradiente passa pelo valor limitado.
    """
    rest = np.asarray(rest, dtype=float).reshape(-1, 2)
    moved = rest + np.asarray(delta, dtype=float).reshape(-1, 2)
    homogeneous = np.concatenate([moved, np.ones((len(moved), 1))], axis=1)
    projected = homogeneous @ matrix.T
    w = projected[:, 2]
    bad = np.flatnonzero(w <= W_MIN)
    if len(bad):
        if strict:
            i = int(bad[0])
            raise DegenerateProjection(
                f'Projeção degenerada no ponto {point_offset + i} (w={w[i]:.3g})',
                point_index=point_offset + i, w=float(w[i]))
        w = np.maximum(w, W_MIN)
    points = projected[:, :2] / w[:, None]
    return points, ProjectionCache(homogeneous, w, projected, matrix)


def motion_backward(upstream, cache):
    """Gradientes (em Δ, em H) a partir do gradiente nos pontos deformados."""
    g = np.asarray(upstream, dtype=float).reshape(-1, 2)
    w = cache.w
    u = cache.projected[:, 0]
    v = cache.projected[:, 1]
    g_projected = np.stack([g[:, 0] / w, g[:, 1] / w, -(g[:, 0] * u + g[:, 1] * v) / (w * w)], axis=1)
    g_matrix = g_projected.T @ cache.homogeneous
    g_delta = (g_projected @ cache.matrix)[:, :2]
    return g_delta, g_matrix


@dataclass
class MotionLayout:
    """Tabelas ponto → caminho / grupo derivadas do documento."""

    path_offsets: np.ndarray
    path_groups: np.ndarray
    group_points: list
    rest: np.ndarray

    @classmethod
    def from_document(cls, doc, pixels_per_unit):
        offsets = doc.path_offsets()
        owner = doc.group_of_path()
        group_points = []
        for g in range(len(doc.groups)):
            ranges = [np.arange(offsets[i], offsets[i + 1]) for i in doc.groups[g].path_indices]
            group_points.append(np.concatenate(ranges) if ranges else np.zeros(0, dtype=int))
        rest = np.concatenate([p.points for p in doc.paths], axis=0) * pixels_per_unit \
            if doc.paths else np.zeros((0, 2))
        return cls(path_offsets=offsets, path_groups=owner, group_points=group_points, rest=rest)

    @property
    def n_points(self):
        return len(self.rest)

    def path_slice(self, i):
        return slice(int(self.path_offsets[i]), int(self.path_offsets[i + 1]))

    def split(self, flat):
        return [flat[self.path_slice(i)] for i in range(len(self.path_offsets) - 1)]


@dataclass
class MotionParams:
    homographies: np.ndarray
    centers: np.ndarray
    offsets: np.ndarray
    global_center: np.ndarray
    pixels_per_unit: float = 1.0
    size: tuple = (settings.RESOLUTION, settings.RESOLUTION)
    # iterações e segundos do ajuste que produziu estes parâmetros
    fit: dict = field(default_factory=dict)

    @property
    def keyframes(self):
        return self.homographies.shape[0]

    @property
    def n_groups(self):
        return self.homographies.shape[1]

    @property
    def n_points(self):
        return self.offsets.shape[1]

    def copy(self):
        return MotionParams(
            homographies=self.homographies.copy(),
            centers=self.centers.copy(),
            offsets=self.offsets.copy(),
            global_center=self.global_center.copy(),
            pixels_per_unit=self.pixels_per_unit,
            size=tuple(self.size),
            fit=dict(self.fit),
        )

    def matrix(self, k, g):
        return compose_homography(self.homographies[k, g], self.centers[g])

    def check_layout(self, layout, n_groups):
        if self.offsets.shape[1] != layout.n_points or self.n_groups != n_groups:
            raise DimensionMismatch(
                'Parâmetros de movimento incompatíveis com o documento',
                expected=[n_groups, layout.n_points],
                actual=[self.n_groups, self.offsets.shape[1]],
            )

    def to_dict(self):
        data = {
            'centers': self.centers.tolist(),
            'global_center': self.global_center.tolist(),
            'pixels_per_unit': float(self.pixels_per_unit),
            'size': [int(self.size[0]), int(self.size[1])],
            'keyframes': [
                {'groups': self.homographies[k].tolist(), 'offsets': self.offsets[k].tolist()}
                for k in range(self.keyframes)
            ],
        }
        if self.fit:
            data['fit'] = dict(self.fit)
        return data

    @classmethod
    def from_dict(cls, data):
        try:
            frames = data['keyframes']
            centers = np.array(data['centers'], dtype=float).reshape(-1, 2)
            n_groups = len(centers)
            homographies = np.array([f['groups'] for f in frames], dtype=float).reshape(len(frames), n_groups, 8)
            offsets = np.array([f['offsets'] for f in frames], dtype=float)
            offsets = offsets.reshape(len(frames), -1, 2)
            size = data.get('size', [settings.RESOLUTION, settings.RESOLUTION])
            return cls(
                homographies=homographies,
                centers=centers,
                offsets=offsets,
                global_center=np.array(data.get('global_center', [0.0, 0.0]), dtype=float),
                pixels_per_unit=float(data.get('pixels_per_unit', 1.0)),
                size=(int(size[0]), int(size[1])),
                fit=dict(data.get('fit') or {}),
            )
        except (KeyError, TypeError, ValueError) as e:
            raise ConfigError(f'Checkpoint inválido: {e}', field='keyframes') from e


def save_params(path, params):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(params.to_dict(), f)


def load_params(path):
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f'Checkpoint não é JSON válido: {e}', field='checkpoint') from e
    return MotionParams.from_dict(data)


def raster_size(doc, resolution):
    """(largura, altura) em pixels: a largura do canvas vira `resolution`."""
    height = max(1, int(round(resolution * doc.canvas_height / doc.canvas_width)))
    return int(resolution), height


def init_params(doc, keyframes, resolution=settings.RESOLUTION):
    """Pose de repouso: homografias nulas, Δ = 0, centros nos centróides das caixas."""
    if keyframes < 1:
        raise ConfigError('keyframes deve ser ≥ 1', field='keyframes')
    ppu = resolution / doc.canvas_width
    n_groups = len(doc.groups)
    centers = np.array([g.centroid for g in doc.groups], dtype=float).reshape(-1, 2) * ppu
    return MotionParams(
        homographies=np.zeros((keyframes, n_groups, 8)),
        centers=centers,
        offsets=np.zeros((keyframes, doc.n_points, 2)),
        global_center=np.array([doc.canvas_width / 2.0, doc.canvas_height / 2.0]) * ppu,
        pixels_per_unit=ppu,
        size=raster_size(doc, resolution),
    )


@dataclass
class ParamGrads:
    homographies: np.ndarray
    centers: np.ndarray
    offsets: np.ndarray

    @classmethod
    def zeros(cls, params):
        return cls(np.zeros_like(params.homographies), np.zeros_like(params.centers),
                   np.zeros_like(params.offsets))

    def __add__(self, other):
        return ParamGrads(self.homographies + other.homographies, self.centers + other.centers,
                          self.offsets + other.offsets)

    def scaled(self, factor):
        return ParamGrads(self.homographies * factor, self.centers * factor, self.offsets * factor)

    def norm(self):
        return float(np.sqrt((self.homographies ** 2).sum() + (self.centers ** 2).sum()
                             + (self.offsets ** 2).sum()))


def deform_keyframe(params, layout, k, strict=False):
    """Pontos deformados (N, 2) do keyframe k e os caches por grupo."""
    out = np.zeros_like(layout.rest)
    caches = []
    for g, idx in enumerate(layout.group_points):
        if len(idx) == 0:
            caches.append(None)
            continue
        matrix = params.matrix(k, g)
        points, cache = apply_motion(layout.rest[idx], params.offsets[k, idx], matrix, strict=strict,
                                     point_offset=int(idx[0]))
        out[idx] = points
        caches.append(cache)
    return out, caches


def deform_backward(params, layout, k, caches, upstream):
    """Gradientes (homografias (G, 8), centros (G, 2), offsets (N, 2)) de um keyframe."""
    g_h = np.zeros((params.n_groups, 8))
    g_c = np.zeros((params.n_groups, 2))
    g_off = np.zeros((layout.n_points, 2))
    for g, idx in enumerate(layout.group_points):
        cache = caches[g]
        if cache is None:
            continue
        g_delta, g_matrix = motion_backward(upstream[idx], cache)
        g_off[idx] = g_delta
        _, dh, dc = homography_jacobian(params.homographies[k, g], params.centers[g])
        g_h[g] = np.einsum('pij,ij->p', dh, g_matrix)
        g_c[g] = np.einsum('pij,ij->p', dc, g_matrix)
    return g_h, g_c, g_off


def offsets_for_pose(matrix, rest, target):
    """Δ tal que π(H·[x⁰ + Δ, 1]ᵀ) = target (pontos em pixels)."""
    target = np.asarray(target, dtype=float).reshape(-1, 2)
    homogeneous = np.concatenate([target, np.ones((len(target), 1))], axis=1)
    back = homogeneous @ np.linalg.inv(matrix).T
    w = back[:, 2:3]
    w = np.where(np.abs(w) < W_MIN, W_MIN, w)
    return back[:, :2] / w - rest
