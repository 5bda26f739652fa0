"""Reordenação de camadas a partir da evidência das máscaras por grupo.

Para cada par de grupos que se sobrepõem compara-se a fração de área
exclusiva que cada um mantém ao longo do vídeo: quem perde área durante a
sobreposição está atrás. As arestas "i na frente de j" alimentam uma
ordenação topológica (Kahn) dos grupos.
"""
import heapq
import os
from dataclasses import dataclass, field

import numpy as np
from scipy import ndimage

from vecfit import settings
from vecfit.exceptions import DimensionMismatch, FrameIOError, PaletteRequired
from vecfit.log import get_logger
from vecfit.raster.frames_io import frame_name, read_mask
from vecfit.raster.render import pixel_points, render

logger = get_logger(__name__)

UNASSIGNED = -1


@dataclass
class GroupMaskSequence:
    """masks[g] = lista de T máscaras booleanas; baselines[g] = área A_g⁰."""

    masks: dict = field(default_factory=dict)
    baselines: dict = field(default_factory=dict)

    @property
    def frames(self):
        return len(next(iter(self.masks.values()))) if self.masks else 0

    def participating(self):
        return [g for g in sorted(self.masks) if self.baselines.get(g, 0) > 0]


@dataclass
class OcclusionScores:
    scores: dict = field(default_factory=dict)
    eps: float = settings.OCCLUSION_EPS

    def edges(self):
        """Pares (frente, trás) com evidência acima de eps."""
        out = []
        for (i, j), s in sorted(self.scores.items()):
            if s is not None and s > self.eps:
                out.append((i, j))
        return out


def _frame_pixels(frame):
    return frame.rgb if hasattr(frame, 'rgb') else np.asarray(frame, dtype=float)


def classify_pixels(frame, recolor_map, white_thresh=settings.WHITE_THRESH):
    """Rótulo por pixel: índice do caminho de cor mais próxima, ou -1."""
    if recolor_map is None or len(recolor_map) == 0:
        raise PaletteRequired('Classificação por cor requer um documento recolorido (ou máscaras do usuário)')
    data = _frame_pixels(frame)
    h, w = data.shape[:2]
    indices, colors = recolor_map.assigned_colors()
    pixels = data.reshape(-1, 3)
    dist2 = ((pixels ** 2).sum(axis=1)[:, None] - 2.0 * pixels @ colors.T
             + (colors ** 2).sum(axis=1)[None, :])
    nearest = np.argmin(dist2, axis=1)
    best = np.sqrt(np.maximum(dist2[np.arange(len(pixels)), nearest], 0.0))
    radius = recolor_map.match_radius()
    labels = np.where(best <= radius, np.array(indices)[nearest], UNASSIGNED)
    labels = np.where(pixels.min(axis=1) < white_thresh, labels, UNASSIGNED)
    return labels.reshape(h, w)


def path_masks(labels, n_paths):
    return [labels == i for i in range(n_paths)]


def group_masks_for_labels(labels, doc):
    out = []
    for group in doc.groups:
        out.append(np.isin(labels, list(group.path_indices)))
    return out


def open_mask(mask):
    """Abertura 3x3: remove franjas de antisserrilhado com 1 pixel de largura."""
    return ndimage.binary_opening(mask, structure=np.ones((3, 3), dtype=bool))


def isolated_group_area(doc, g, width, height, recolor_map, softness=settings.EXPORT_SOFTNESS,
                        white_thresh=settings.WHITE_THRESH):
    """Área (pixels) do grupo renderizado sozinho na pose de repouso, classificado como os quadros."""
    ppu = width / doc.canvas_width
    frame = render(doc, pixel_points(doc, ppu), width, height, softness, only=doc.groups[g].path_indices)
    labels = classify_pixels(frame, recolor_map, white_thresh)
    return int(open_mask(np.isin(labels, list(doc.groups[g].path_indices))).sum())


def group_masks_from_palette(frames, recolor_map, doc, white_thresh=settings.WHITE_THRESH,
                             baseline='render'):
    """Máscaras por grupo a partir da cor de paleta mais próxima de cada pixel."""
    if recolor_map is None or len(recolor_map) == 0:
        raise PaletteRequired('Documento sem recoloração: forneça --masks ou use a paleta')
    seq = GroupMaskSequence(masks={g: [] for g in range(len(doc.groups))})
    shape = None
    for frame in frames:
        data = _frame_pixels(frame)
        if shape is not None and data.shape[:2] != shape:
            raise DimensionMismatch('Quadros com dimensões diferentes', expected=list(shape),
                                    actual=list(data.shape[:2]))
        shape = data.shape[:2]
        labels = classify_pixels(data, recolor_map, white_thresh)
        for g, mask in enumerate(group_masks_for_labels(labels, doc)):
            seq.masks[g].append(open_mask(mask))

    for g in seq.masks:
        if baseline == 'render' and shape is not None:
            seq.baselines[g] = isolated_group_area(doc, g, shape[1], shape[0], recolor_map,
                                                  white_thresh=white_thresh)
        else:
            seq.baselines[g] = int(seq.masks[g][0].sum()) if seq.masks[g] else 0
    return seq


def load_group_masks(maskdir, doc):
    """Máscaras do usuário em maskdir/<group_id>/frame_%04d.png; A_g⁰ do quadro 0."""
    seq = GroupMaskSequence()
    for g, group in enumerate(doc.groups):
        directory = os.path.join(maskdir, group.id)
        if not os.path.isdir(directory):
            logger.warning(f"Sem máscaras para o grupo '{group.id}' em {maskdir}")
            continue
        masks = []
        t = 0
        while os.path.exists(os.path.join(directory, frame_name(t))):
            masks.append(read_mask(os.path.join(directory, frame_name(t))).bits)
            t += 1
        if not masks:
            raise FrameIOError(f"Diretório de máscaras vazio para '{group.id}'", path=directory)
        seq.masks[g] = masks
        seq.baselines[g] = int(masks[0].sum())
    lengths = {len(m) for m in seq.masks.values()}
    if len(lengths) > 1:
        raise DimensionMismatch('Grupos com números de máscaras diferentes', expected=min(lengths),
                                actual=max(lengths))
    return seq


def _bbox(mask):
    ys, xs = np.nonzero(mask)
    if len(xs) == 0:
        return None
    return xs.min(), ys.min(), xs.max(), ys.max()


def _bbox_intersection(a, b):
    if a is None or b is None:
        return 0
    w = min(a[2], b[2]) - max(a[0], b[0]) + 1
    h = min(a[3], b[3]) - max(a[1], b[1]) + 1
    return int(w * h) if w > 0 and h > 0 else 0


def exclusive_ratios(seq):
    """R_g(t) = área exclusiva / A_g⁰, contra todos os outros grupos."""
    groups = seq.participating()
    ratios = {g: [] for g in groups}
    for t in range(seq.frames):
        counts = sum(seq.masks[g][t].astype(np.int32) for g in seq.masks)
        for g in groups:
            exclusive = seq.masks[g][t] & (counts == 1)
            ratios[g].append(exclusive.sum() / seq.baselines[g])
    return ratios


def occlusion_score(seq, i, j, ratios=None):
    """s(i, j) = Σ_t w·(R_i − R_j) / Σ_t w; None quando as caixas nunca se cruzam."""
    ratios = ratios or exclusive_ratios(seq)
    num = 0.0
    den = 0
    for t in range(seq.frames):
        w = _bbox_intersection(_bbox(seq.masks[i][t]), _bbox(seq.masks[j][t]))
        if w:
            num += w * (ratios[i][t] - ratios[j][t])
            den += w
    if den == 0:
        return None
    return num / den


def occlusion_scores(seq, eps=settings.OCCLUSION_EPS):
    groups = seq.participating()
    ratios = exclusive_ratios(seq)
    scores = {}
    for a in range(len(groups)):
        for b in range(a + 1, len(groups)):
            i, j = groups[a], groups[b]
            s = occlusion_score(seq, i, j, ratios)
            scores[(i, j)] = s
            scores[(j, i)] = None if s is None else -s
    return OcclusionScores(scores=scores, eps=eps)


def group_paint_order(doc):
    """Grupos na ordem de pintura original (pela primeira aparição)."""
    owner = doc.group_of_path()
    seen = []
    for index in doc.painter_order:
        g = int(owner[index])
        if g not in seen:
            seen.append(g)
    return seen


def reorder(doc, scores):
    """Nova ordem de pintura: Kahn sobre 'trás antes da frente', empates pela ordem original."""
    original = group_paint_order(doc)
    rank = {g: r for r, g in enumerate(original)}
    edges = scores.edges()
    if not edges:
        return tuple(doc.painter_order)

    successors = {g: set() for g in original}
    indegree = {g: 0 for g in original}
    for front, back in edges:
        if front not in successors or back not in successors or front in successors[back]:
            continue
        successors[back].add(front)
        indegree[front] += 1

    heap = [(rank[g], g) for g in original if indegree[g] == 0]
    heapq.heapify(heap)
    sorted_groups = []
    while heap:
        _, g = heapq.heappop(heap)
        sorted_groups.append(g)
        for nxt in sorted(successors[g], key=rank.get):
            indegree[nxt] -= 1
            if indegree[nxt] == 0:
                heapq.heappush(heap, (rank[nxt], nxt))

    if len(sorted_groups) < len(original):
        logger.warning('Grafo de oclusão cíclico; mantendo a ordem original das camadas.')
        return tuple(doc.painter_order)
    if sorted_groups == original:
        return tuple(doc.painter_order)

    owner = doc.group_of_path()
    order = []
    for g in sorted_groups:
        order.extend(i for i in doc.painter_order if owner[i] == g)
    logger.info(f'Nova ordem de grupos: {[doc.groups[g].id for g in sorted_groups]}')
    return tuple(order)
