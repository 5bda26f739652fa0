"""Alvos sintéticos com movimento conhecido: o oráculo dos testes de recuperação."""
import math

import numpy as np

from vecfit import settings
from vecfit.exceptions import ConfigError
from vecfit.export import render_keyframe
from vecfit.log import get_logger
from vecfit.motion import init_params
from vecfit.raster.frames_io import write_frames_to
from vecfit.raster.render import RasterFrame

logger = get_logger(__name__)


def program_phase(shape, k, keyframes):
    """Fração da amplitude atingida no keyframe k; vale 0 em k = 0."""
    if keyframes == 1:
        return 0.0
    t = k / (keyframes - 1)
    if shape == 'ramp':
        return t
    if shape == 'sine':
        return math.sin(2.0 * math.pi * t)
    raise ConfigError(f"forma de programa desconhecida: {shape}", field='shape')


def _group_programs(doc, params, programs):
    for n, program in enumerate(programs):
        try:
            g = doc.group_index(program.group_id)
        except KeyError:
            raise ConfigError(f"grupo inexistente: '{program.group_id}'", field=f'groups.{n}.group_id') from None
        for k in range(params.keyframes):
            phase = program_phase(program.shape, k, params.keyframes)
            h = params.homographies[k, g]
            h[0] = program.tx * phase
            h[1] = program.ty * phase
            h[2] = math.radians(program.rotation_deg) * phase
            h[3] = program.log_scale * phase
            h[4] = program.log_scale * phase


def _offset_programs(doc, params, programs):
    """Curva cada caminho em y com uma senoide ao longo de x, crescendo em rampa."""
    offsets = doc.path_offsets()
    for n, program in enumerate(programs):
        i = program.path_index
        if not 0 <= i < doc.n_paths:
            raise ConfigError(f"caminho inexistente: {i}", field=f'paths.{n}.path_index')
        rest = np.asarray(doc.paths[i].points)
        span = np.ptp(rest[:, 0]) or 1.0
        s = (rest[:, 0] - rest[:, 0].min()) / span
        bend = np.sin(2.0 * math.pi * program.cycles * s)
        for k in range(params.keyframes):
            phase = program_phase('ramp', k, params.keyframes)
            params.offsets[k, offsets[i]:offsets[i + 1], 1] += program.amplitude * phase * bend


def synthetic_params(doc, spec):
    """MotionParams exatos do programa (pixels do raster de resolução spec.resolution)."""
    params = init_params(doc, spec.keyframes, spec.resolution)
    _group_programs(doc, params, spec.groups)
    _offset_programs(doc, params, spec.paths)
    if not np.all(np.isfinite(params.homographies)) or not np.all(np.isfinite(params.offsets)):
        raise ConfigError('programa sintético produziu parâmetros não finitos', field='groups')
    return params


def add_noise(frame, noise, rng):
    if noise <= 0:
        return frame
    rgb = frame.rgb + rng.uniform(-noise, noise, size=frame.rgb.shape)
    return RasterFrame(np.clip(rgb, 0.0, 1.0))


def synth_target(doc, spec, outdir=None, softness=settings.EXPORT_SOFTNESS):
    """Renderiza a sequência sintética e devolve (quadros, parâmetros verdadeiros).

    Os quadros usam as cores atuais do documento; para alvos em cores de
    paleta passe o documento já recolorido.
    """
    params = synthetic_params(doc, spec)
    rng = np.random.default_rng(spec.seed)
    frames = []
    for k in range(spec.keyframes):
        frame = render_keyframe(doc, params, k, spec.resolution, softness=softness, keep_fills=True)
        frames.append(add_noise(frame, spec.noise, rng))
    if outdir is not None:
        write_frames_to(outdir, frames)
        logger.info(f'{len(frames)} quadros sintéticos gravados em {outdir}')
    return frames, params
