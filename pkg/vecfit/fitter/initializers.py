"""Inicializadores de keyframe e seleção conservadora de candidatos.

Um inicializador recebe o InitContext de um keyframe recém-ativado (já com
os parâmetros copiados do anterior) e devolve uma Proposal: translações
por grupo e, por caminho, poses candidatas em pixels. candidate_select
decide por caminho pelo erro mascarado contra o quadro-alvo.
"""
from dataclasses import dataclass, field

import numpy as np
from scipy.signal import fftconvolve

from vecfit import settings
from vecfit.exceptions import ConfigError
from vecfit.log import get_logger
from vecfit.motion import apply_motion, compose_homography
from vecfit.raster.image_ops import foreground_mask
from vecfit.raster.render import render

logger = get_logger(__name__)

COPY_FORWARD = 'copy'
GROUP_PROBE = 'group_probe'
PATH_PROBE = 'path_probe'


@dataclass
class InitContext:
    doc: object
    layout: object
    params: object
    k: int
    target: np.ndarray
    width: int
    height: int
    group_masks: list = None
    path_masks: list = None
    softness: float = settings.SOFTNESS
    white_thresh: float = settings.WHITE_THRESH
    radius: int = 0
    stride: int = settings.PROBE_STRIDE
    history: list = field(default_factory=list)

    def current_points(self):
        """Pontos deformados por caminho no keyframe k (parâmetros copiados)."""
        out = np.zeros_like(self.layout.rest)
        for g, idx in enumerate(self.layout.group_points):
            if len(idx):
                out[idx], _ = apply_motion(self.layout.rest[idx], self.params.offsets[self.k, idx],
                                           self.params.matrix(self.k, g), strict=False)
        return self.layout.split(out)


@dataclass
class Proposal:
    group_shifts: dict = field(default_factory=dict)
    path_shifts: dict = field(default_factory=dict)


def probe_translation(source, target, radius, stride=settings.PROBE_STRIDE):
    """Translação inteira (dx, dy) em [−R, R]² (múltiplos de stride) de maior sobreposição.

    Empates preferem o menor deslocamento; máscara vazia → (0, 0).
    """
    source = np.asarray(source, dtype=float)
    target = np.asarray(target, dtype=float)
    if not source.any() or not target.any():
        return 0, 0
    h, w = source.shape
    corr = np.rint(fftconvolve(target, source[::-1, ::-1], mode='full'))
    steps = [s for s in range(-int(radius), int(radius) + 1) if s % stride == 0]
    best = None
    for dy in steps:
        for dx in steps:
            iy, ix = h - 1 + dy, w - 1 + dx
            if not (0 <= iy < corr.shape[0] and 0 <= ix < corr.shape[1]):
                continue
            key = (-corr[iy, ix], dx * dx + dy * dy, dy, dx)
            if best is None or key < best[0]:
                best = (key, dx, dy)
    if best is None or best[0][0] == 0:
        return 0, 0
    return best[1], best[2]


def _isolated_mask(ctx, points, indices):
    frame = render(ctx.doc, points, ctx.width, ctx.height, ctx.softness, only=indices)
    return foreground_mask(frame, ctx.white_thresh).bits


class NoInitializer:
    """Apenas copia o keyframe anterior."""

    name = 'none'

    def __call__(self, ctx):
        return Proposal()


class TranslationProbeInitializer:
    """Busca em grade da translação que melhor alinha cada grupo (e cada caminho) à sua máscara."""

    name = 'probe'

    def __call__(self, ctx):
        points = ctx.current_points()
        proposal = Proposal()
        target_fg = foreground_mask(ctx.target, ctx.white_thresh).bits
        for g, group in enumerate(ctx.doc.groups):
            indices = list(group.path_indices)
            source = _isolated_mask(ctx, points, indices)
            target = ctx.group_masks[g] if ctx.group_masks is not None else target_fg
            proposal.group_shifts[g] = probe_translation(source, target, ctx.radius, ctx.stride)
            if ctx.path_masks is None:
                continue
            for i in indices:
                source = _isolated_mask(ctx, points, [i])
                proposal.path_shifts[i] = probe_translation(source, ctx.path_masks[i], ctx.radius, ctx.stride)
        logger.info(f'Sonda no keyframe {ctx.k}: {proposal.group_shifts}')
        return proposal


INITIALIZERS = {
    'probe': TranslationProbeInitializer,
    'none': NoInitializer,
}


def get_initializer(name):
    if callable(name) and not isinstance(name, str):
        return name
    try:
        return INITIALIZERS[name]()
    except KeyError:
        raise ConfigError(f"inicializador desconhecido: {name}", field='initializer') from None


def candidate_select(path, candidates, points, doc, target, mask, width, height,
                     softness=settings.SOFTNESS, white_thresh=settings.WHITE_THRESH):
    """Índice do candidato de menor erro quadrático médio mascarado.

    Cada candidato é uma pose (n, 2) em pixels do caminho `path`; o resto
    da cena fica em `points`. A máscara de avaliação é a união do suporte
    renderizado do caminho com `mask`. Empates ficam com o primeiro
    (cópia do keyframe anterior).
    """
    if len(candidates) == 1:
        return 0
    target = target.rgb if hasattr(target, 'rgb') else np.asarray(target, dtype=float)
    target_mask = np.zeros(target.shape[:2], dtype=bool) if mask is None else np.asarray(mask, dtype=bool)
    best_index, best_error = 0, None
    for n, pose in enumerate(candidates):
        scene = list(points)
        scene[path] = pose
        frame = render(doc, scene, width, height, softness)
        support = foreground_mask(render(doc, scene, width, height, softness, only=[path]), white_thresh).bits
        region = support | target_mask
        if region.any():
            error = float(((frame.rgb[region] - target[region]) ** 2).mean())
        else:
            error = 0.0
        if best_error is None or error < best_error - 1e-12:
            best_index, best_error = n, error
    return best_index


def shifted_homography(h, dx, dy):
    out = np.array(h, dtype=float)
    out[0] += dx
    out[1] += dy
    return out


def group_pose(ctx, g, h, indices):
    """Pontos (por caminho) do grupo sob a homografia h com os offsets atuais."""
    matrix = compose_homography(h, ctx.params.centers[g])
    poses = {}
    for i in indices:
        sl = ctx.layout.path_slice(i)
        poses[i], _ = apply_motion(ctx.layout.rest[sl], ctx.params.offsets[ctx.k, sl], matrix, strict=False)
    return poses
