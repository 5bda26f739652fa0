"""Avaliação de um ajuste contra os quadros-alvo e, se houver, a verdade sintética."""
import json
import math

import numpy as np
from itemadapter import ItemAdapter

from vecfit import settings
from vecfit.exceptions import DimensionMismatch
from vecfit.export import render_keyframe
from vecfit.fitter.engine import select_keyframes
from vecfit.items import EvalReport
from vecfit.log import get_logger
from vecfit.motion import MotionLayout, apply_motion
from vecfit.raster.image_ops import foreground_mask
from vecfit.raster.render import RasterFrame

logger = get_logger(__name__)


def iou(a, b):
    """Interseção sobre união de duas máscaras; duas máscaras vazias valem 1.0."""
    a = a.bits if hasattr(a, 'bits') else np.asarray(a, dtype=bool)
    b = b.bits if hasattr(b, 'bits') else np.asarray(b, dtype=bool)
    union = np.logical_or(a, b).sum()
    if union == 0:
        return 1.0
    return float(np.logical_and(a, b).sum() / union)


def pixel_mse(a, b):
    return float(np.mean((a.rgb - b.rgb) ** 2))


def group_position(params, doc, k, g, layout=None):
    """Posição do grupo g no keyframe k (user units): média dos seus pontos deformados.

    Soma a homografia e os deslocamentos por ponto, de modo que um grupo
    levado só pelos Δ também conta como transladado.
    """
    if layout is None:
        layout = MotionLayout.from_document(doc, params.pixels_per_unit)
    idx = layout.group_points[g]
    points, _ = apply_motion(layout.rest[idx], params.offsets[k, idx], params.matrix(k, g), strict=False)
    return points.mean(axis=0) / params.pixels_per_unit


def _wrap_degrees(angle):
    return (angle + 180.0) % 360.0 - 180.0


def motion_errors(doc, params, truth, pixels_per_unit):
    """Erros médios por grupo: translação (px do alvo) e rotação (graus)."""
    if truth.homographies.shape != params.homographies.shape:
        raise DimensionMismatch('Parâmetros verdadeiros incompatíveis com o ajuste',
                                expected=list(params.homographies.shape),
                                actual=list(truth.homographies.shape))
    fitted = MotionLayout.from_document(doc, params.pixels_per_unit)
    expected = MotionLayout.from_document(doc, truth.pixels_per_unit)
    translation, rotation = {}, {}
    for g, group in enumerate(doc.groups):
        t_err, r_err = [], []
        for k in range(params.keyframes):
            delta = group_position(params, doc, k, g, fitted) - group_position(truth, doc, k, g, expected)
            t_err.append(float(np.hypot(*delta)) * pixels_per_unit)
            angle = math.degrees(params.homographies[k, g, 2] - truth.homographies[k, g, 2])
            r_err.append(abs(_wrap_degrees(angle)))
        translation[group.id] = float(np.mean(t_err))
        rotation[group.id] = float(np.mean(r_err))
    return translation, rotation


def eval_fit(doc, params, frames, truth=None, white_thresh=settings.WHITE_THRESH,
             softness=settings.EXPORT_SOFTNESS, seconds=None, iterations=None):
    """Renderiza o ajuste em cada keyframe e o compara com os quadros correspondentes.

    `doc` deve estar nas mesmas cores dos alvos (o documento recolorido
    quando o ajuste usou paleta).
    """
    frames = [f if isinstance(f, RasterFrame) else RasterFrame(f) for f in frames]
    if len(frames) < params.keyframes:
        raise DimensionMismatch('Menos quadros que keyframes', expected=params.keyframes, actual=len(frames))
    chosen = select_keyframes(len(frames), params.keyframes)
    width, height = frames[0].width, frames[0].height
    expected_height = max(1, int(round(width * doc.canvas_height / doc.canvas_width)))
    if height != expected_height:
        raise DimensionMismatch('Proporção dos quadros difere da do documento',
                                expected=[width, expected_height], actual=[width, height])

    report = EvalReport(wall_clock=seconds)
    for k, index in enumerate(chosen):
        target = frames[index]
        if (target.width, target.height) != (width, height):
            raise DimensionMismatch('Quadros com tamanhos diferentes', expected=[width, height],
                                    actual=[target.width, target.height])
        rendered = render_keyframe(doc, params, k, width, height, softness=softness, keep_fills=True)
        report.mse.append(pixel_mse(rendered, target))
        report.iou.append(iou(foreground_mask(rendered, white_thresh), foreground_mask(target, white_thresh)))

    if truth is not None:
        report.translation_error, report.rotation_error = motion_errors(
            doc, params, truth, width / doc.canvas_width)
    if seconds and iterations is not None:
        report.iterations_per_second = iterations / seconds
    logger.info(f'Avaliação: IoU mínimo {min(report.iou):.3f}, MSE máximo {max(report.mse):.3g}')
    return report


def write_eval_report(path, report):
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(ItemAdapter(report).asdict(), f, indent=2, sort_keys=True)
    logger.info(f'Relatório de avaliação gravado em {path}')
