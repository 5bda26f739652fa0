"""Paleta por empacotamento de esferas no cubo RGB e restauração das cores originais.

Cada caminho recolorível recebe o centro de uma esfera de raio r de um
empacotamento de K esferas iguais em [0,1]³, de modo que duas cores
atribuídas distam ao menos 2r. Os empacotamentos vêm prontos de
vecfit.packing_table e são conferidos ao carregar; acima de PACKING_K_MAX
usa-se HSV.
"""
import colorsys
import json
from dataclasses import dataclass, field
from functools import lru_cache

import numpy as np

from vecfit import settings
from vecfit.exceptions import ConfigError, MissingAssignment
from vecfit.log import get_logger
from vecfit.packing_table import PACKINGS
from vecfit.raster.flatten import outline_area
from vecfit.svg_core.colors import parse_color, to_hex

logger = get_logger(__name__)

PACKING = 'packing'
HSV_FALLBACK = 'hsv_fallback'

# marcador devolvido por packing_centers acima da tabela
FALLBACK = None

LCG_A = 1664525
LCG_C = 1013904223
LCG_MOD = 2 ** 32


@dataclass(frozen=True)
class PackingEntry:
    k: int
    radius: float
    centers: np.ndarray


@dataclass
class RecolorMap:
    """path index -> (rgb original, rgb atribuído)."""

    assignments: dict = field(default_factory=dict)
    source: str = PACKING
    radius: float = None

    def __len__(self):
        return len(self.assignments)

    def __contains__(self, index):
        return index in self.assignments

    def assigned_colors(self):
        indices = sorted(self.assignments)
        return indices, np.array([self.assignments[i][1] for i in indices], dtype=float).reshape(-1, 3)

    def match_radius(self):
        """Distância máxima para classificar um pixel numa cor da paleta."""
        if self.source == PACKING and self.radius is not None:
            return self.radius
        _, colors = self.assigned_colors()
        if len(colors) < 2:
            return 0.5
        diff = colors[:, None, :] - colors[None, :, :]
        dist = np.sqrt((diff ** 2).sum(axis=-1))
        dist[np.diag_indices(len(colors))] = np.inf
        return 0.5 * float(dist.min())


def _min_distance(points):
    diff = points[:, None, :] - points[None, :, :]
    dist = np.sqrt((diff ** 2).sum(axis=-1))
    dist[np.diag_indices(len(points))] = np.inf
    return float(dist.min())


def validate_entry(entry):
    """Confere a entrada contra o próprio raio: separação ≥ 2r e centros dentro do cubo."""
    r = entry.radius
    c = entry.centers
    if len(c) != entry.k:
        raise ConfigError(f"entrada K={entry.k} com {len(c)} centros", field='packing')
    if np.any(c < r - 1e-9) or np.any(c > 1.0 - r + 1e-9):
        raise ConfigError(f"entrada K={entry.k}: centro fora do cubo encolhido", field='packing')
    if entry.k > 1 and _min_distance(c) < 2.0 * r - 1e-9:
        raise ConfigError(f"entrada K={entry.k}: esferas sobrepostas", field='packing')
    return entry


@lru_cache(maxsize=None)
def _packing_entry(k):
    radius, centers = PACKINGS[k]
    centers = np.array(centers, dtype=float).reshape(-1, 3)
    centers.flags.writeable = False
    return validate_entry(PackingEntry(k=k, radius=float(radius), centers=centers))


def packing_centers(k):
    """(r, centros) do empacotamento de K esferas, ou FALLBACK acima da tabela."""
    if k < 1:
        raise ConfigError(f"K deve ser positivo, recebido {k}", field='K')
    if k > settings.PACKING_K_MAX:
        return FALLBACK
    entry = _packing_entry(int(k))
    return entry.radius, np.array(entry.centers)


def packing_table():
    return {k: _packing_entry(k) for k in range(1, settings.PACKING_K_MAX + 1)}


def hsv_fallback(k):
    """K cores com matiz i/K, saturação 1 e valor alternando 1.0 / 0.6."""
    colors = [colorsys.hsv_to_rgb(i / k, 1.0, 1.0 if i % 2 == 0 else 0.6) for i in range(k)]
    return np.array(colors, dtype=float).reshape(-1, 3)


def lcg_permutation(n, seed=settings.SHUFFLE_SEED):
    """Fisher–Yates dirigido por um gerador congruencial linear de 32 bits."""
    perm = list(range(n))
    state = int(seed) % LCG_MOD
    for i in range(n - 1, 0, -1):
        state = (LCG_A * state + LCG_C) % LCG_MOD
        j = state % (i + 1)
        perm[i], perm[j] = perm[j], perm[i]
    return perm


def _excluded(fill, exclude_fills):
    for text in exclude_fills:
        color = parse_color(text)
        if color is not None and np.allclose(fill, color, atol=0.5 / 255.0):
            return True
    return False


def recolorable_paths(doc, exclude_fills=()):
    return [i for i, path in enumerate(doc.paths) if not _excluded(path.original_fill, exclude_fills)]


def assign_palette(doc, seed=settings.SHUFFLE_SEED, exclude_fills=()):
    """Distribui as cores da paleta: caminhos maiores recebem os primeiros centros embaralhados."""
    indices = recolorable_paths(doc, exclude_fills)
    if not indices:
        logger.warning('Nenhum caminho recolorível; mapa de cores vazio.')
        return RecolorMap()

    areas = {i: outline_area(doc.paths[i], tol=settings.FLATTEN_TOL) for i in indices}
    order = sorted(indices, key=lambda i: (-areas[i], i))
    k = len(order)

    packed = packing_centers(k)
    if packed is FALLBACK:
        colors, source, radius = hsv_fallback(k), HSV_FALLBACK, None
        logger.info(f'K={k} acima da tabela; usando paleta HSV.')
    else:
        radius, colors = packed
        source = PACKING

    perm = lcg_permutation(k, seed)
    assignments = {}
    for rank, index in enumerate(order):
        assigned = tuple(float(c) for c in colors[perm[rank]])
        assignments[index] = (tuple(doc.paths[index].original_fill), assigned)
    logger.info(f'Paleta atribuída a {k} caminhos ({source}).')
    return RecolorMap(assignments=assignments, source=source, radius=radius)


def recolor(doc, recolor_map):
    """Aplica as cores atribuídas mantendo original_fill."""
    return doc.recolored({i: assigned for i, (_, assigned) in recolor_map.assignments.items()})


def restore_colors(doc, recolor_map):
    """Devolve cada caminho recolorido à sua cor original."""
    fills = {}
    for i, path in enumerate(doc.paths):
        if i in recolor_map.assignments:
            fills[i] = recolor_map.assignments[i][0]
        elif path.fill != path.original_fill:
            raise MissingAssignment(f'Caminho {i} recolorido ausente do mapa de cores', path_index=i)
    return doc.recolored(fills)


def save_recolor_map(path, recolor_map):
    data = {}
    for index in sorted(recolor_map.assignments):
        original, assigned = recolor_map.assignments[index]
        data[str(index)] = {
            'original': to_hex(original),
            'assigned': to_hex(assigned),
            'original_rgb': list(original),
            'assigned_rgb': list(assigned),
            'source': recolor_map.source,
            'radius': recolor_map.radius,
        }
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(data, f, indent=2)
    logger.info(f'Mapa de cores gravado em {path}')


def _entry_rgb(entry, exact_key, hex_key, index):
    if exact_key in entry:
        return tuple(float(c) for c in entry[exact_key])
    if hex_key in entry:
        return parse_color(entry[hex_key])
    raise ConfigError(f"entrada {index} do mapa sem '{hex_key}'", field=f'{index}.{hex_key}')


def load_recolor_map(path):
    try:
        with open(path, encoding='utf-8') as f:
            data = json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f'Mapa de cores inválido: {e}', field='map') from e
    if not isinstance(data, dict):
        raise ConfigError('Mapa de cores deve ser um objeto JSON', field='map')

    assignments = {}
    source, radius = PACKING, None
    for key, entry in data.items():
        try:
            index = int(key)
        except ValueError:
            raise ConfigError(f"índice de caminho inválido: {key}", field=key) from None
        if not isinstance(entry, dict):
            raise ConfigError(f"entrada {key} do mapa deve ser um objeto", field=key)
        assignments[index] = (_entry_rgb(entry, 'original_rgb', 'original', key),
                              _entry_rgb(entry, 'assigned_rgb', 'assigned', key))
        source = entry.get('source', source)
        radius = entry.get('radius', radius)
    return RecolorMap(assignments=assignments, source=source, radius=radius)
