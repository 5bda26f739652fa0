"""Exportação: geometria por keyframe, SVG animado (SMIL) e quadros PNG."""
import os
from dataclasses import dataclass, field, replace

import numpy as np
from lxml import etree

from vecfit import settings
from vecfit.exceptions import FrameIOError
from vecfit.log import get_logger
from vecfit.motion import MotionLayout, deform_keyframe
from vecfit.palette import restore_colors
from vecfit.raster.frames_io import frame_name, write_frame
from vecfit.raster.render import render
from vecfit.svg_core.document import SVG_NS, path_element, painter_runs, svg_root
from vecfit.svg_core.path_data import format_number, format_path_data

logger = get_logger(__name__)


@dataclass
class BakedAnimation:
    """points[k][i]: pontos (user units) do caminho i no keyframe k; d[i][k]: o atributo d."""

    points: list
    d: list
    fills: list
    duration: float
    key_times: list = field(default_factory=list)

    @property
    def keyframes(self):
        return len(self.points)


def key_times(keyframes):
    if keyframes == 1:
        return [0.0]
    return [k / (keyframes - 1) for k in range(keyframes)]


def default_duration(keyframes):
    return keyframes / settings.KEYFRAMES_PER_SECOND


def _is_rest(params, k):
    return not np.any(params.homographies[k]) and not np.any(params.offsets[k])


def keyframe_points(doc, params, k, layout=None):
    """Pontos em user units de cada caminho no keyframe k (projeção estrita)."""
    if _is_rest(params, k):
        return [np.array(p.points) for p in doc.paths]
    layout = layout or MotionLayout.from_document(doc, params.pixels_per_unit)
    points, _ = deform_keyframe(params, layout, k, strict=True)
    return [p / params.pixels_per_unit for p in layout.split(points)]


def export_fills(doc, recolor_map=None):
    if recolor_map is not None:
        return [p.fill for p in restore_colors(doc, recolor_map).paths]
    return [p.original_fill for p in doc.paths]


def bake_keyframes(doc, params, recolor_map=None, decimals=settings.COORD_DECIMALS, duration=None):
    """Aplica o movimento a todos os pontos de todos os keyframes e escreve os d."""
    layout = MotionLayout.from_document(doc, params.pixels_per_unit)
    params.check_layout(layout, len(doc.groups))
    points = [keyframe_points(doc, params, k, layout) for k in range(params.keyframes)]
    d = [
        [format_path_data(points[k][i], path.subpath_sizes, decimals) for k in range(params.keyframes)]
        for i, path in enumerate(doc.paths)
    ]
    return BakedAnimation(
        points=points,
        d=d,
        fills=export_fills(doc, recolor_map),
        duration=duration if duration is not None else default_duration(params.keyframes),
        key_times=key_times(params.keyframes),
    )


def write_animated_svg(baked, doc, duration=None, repeat='indefinite'):
    """SVG com um <animate attributeName="d"> por caminho, na ordem de pintura."""
    duration = duration if duration is not None else baked.duration
    out_doc = doc.with_paths([replace(p, fill=f, original_fill=f) for p, f in zip(doc.paths, baked.fills)])
    root = svg_root(out_doc)
    times = ';'.join(format_number(t, 6) for t in baked.key_times)
    for g, indices in painter_runs(out_doc):
        group_element = etree.SubElement(root, f'{{{SVG_NS}}}g')
        group_element.set('id', out_doc.groups[g].id)
        for index in indices:
            values = baked.d[index]
            element = path_element(group_element, out_doc.paths[index], index, d=values[0])
            if baked.keyframes > 1:
                animate = etree.SubElement(element, f'{{{SVG_NS}}}animate')
                animate.set('attributeName', 'd')
                animate.set('dur', f'{format_number(duration, 6)}s')
                animate.set('repeatCount', str(repeat))
                animate.set('calcMode', 'linear')
                animate.set('keyTimes', times)
                animate.set('values', ';'.join(values))
    return etree.tostring(root, pretty_print=True, encoding='unicode')


def strip_animations(text):
    """Remove os elementos <animate> (o resultado volta a ser um SVG estático)."""
    root = etree.fromstring(text.encode('utf-8') if isinstance(text, str) else text)
    for element in root.xpath('//*[local-name()="animate"]'):
        element.getparent().remove(element)
    return etree.tostring(root, encoding='unicode')


def render_keyframe(doc, params, k, width, height=None, recolor_map=None, softness=settings.EXPORT_SOFTNESS,
                    keep_fills=False):
    """Renderiza o keyframe k em width x height; keep_fills usa as cores atuais do documento."""
    height = height or max(1, int(round(width * doc.canvas_height / doc.canvas_width)))
    scale = width / doc.canvas_width
    if keep_fills:
        colored = doc
    else:
        colored = doc.recolored({i: f for i, f in enumerate(export_fills(doc, recolor_map))})
    points = [p * scale for p in keyframe_points(doc, params, k)]
    return render(colored, points, width, height, softness, tol=settings.EXPORT_FLATTEN_TOL)


def write_frames(doc, params, width, height, outdir, recolor_map=None, softness=settings.EXPORT_SOFTNESS):
    """Um PNG frame_%04d.png por keyframe, renderizado com bordas quase duras."""
    try:
        os.makedirs(outdir, exist_ok=True)
    except OSError as e:
        raise FrameIOError(f'Não foi possível criar o diretório: {e}', path=outdir) from e
    paths = []
    for k in range(params.keyframes):
        frame = render_keyframe(doc, params, k, width, height, recolor_map, softness)
        path = os.path.join(outdir, frame_name(k))
        write_frame(path, frame)
        paths.append(path)
    logger.info(f'{len(paths)} quadros gravados em {outdir}')
    return paths
