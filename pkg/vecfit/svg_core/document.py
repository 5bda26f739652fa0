"""Modelo geométrico canônico do SVG: leitura, escrita e vetor de parâmetros.

Cada caminho guarda seus pontos de controle numa única matriz (n, 2) na
ordem âncora, alça de saída, alça de entrada do próximo segmento:
um subcaminho fechado de m segmentos ocupa 3m linhas consecutivas.
"""
import math
from dataclasses import dataclass, field, replace

import numpy as np
from lxml import etree
from parsel import Selector

from vecfit.exceptions import MalformedDocument, MalformedPath, UnsupportedFeature, VecfitError
from vecfit.item_loaders.shape_loaders import load_shape, parse_length, parse_number_list, parse_style
from vecfit.log import get_logger
from vecfit.svg_core.colors import exact_rgb_text, is_exact_hex, parse_color, parse_exact_rgb, to_hex
from vecfit.svg_core.path_data import format_path_data, parse_transform, shape_to_subpaths, transform_subpaths

logger = get_logger(__name__)

SVG_NS = "http://www.w3.org/2000/svg"

SHAPE_TAGS = ('path', 'rect', 'circle', 'ellipse', 'polygon', 'polyline', 'line')
IGNORED_TAGS = ('title', 'desc', 'metadata')
UNSUPPORTED_TAGS = (
    'linearGradient', 'radialGradient', 'clipPath', 'mask', 'pattern', 'text', 'tspan',
    'image', 'use', 'style', 'filter', 'symbol', 'marker', 'foreignObject', 'switch', 'a',
)
INHERITED_ATTRIBUTES = ('fill', 'stroke', 'stroke-width', 'fill-rule', 'opacity', 'fill-opacity')

ANCHOR = 'anchor'
HANDLE = 'handle'


def _frozen(array):
    array = np.array(array, dtype=float)
    array.flags.writeable = False
    return array


@dataclass(frozen=True)
class PathGeometry:
    points: np.ndarray
    subpath_sizes: tuple
    fill: tuple
    original_fill: tuple
    path_id: str = None

    def __post_init__(self):
        object.__setattr__(self, 'points', _frozen(self.points).reshape(-1, 2))
        object.__setattr__(self, 'subpath_sizes', tuple(int(s) for s in self.subpath_sizes))
        object.__setattr__(self, 'fill', tuple(float(c) for c in self.fill))
        object.__setattr__(self, 'original_fill', tuple(float(c) for c in self.original_fill))
        if len(self.points) != 3 * sum(self.subpath_sizes):
            raise VecfitError("número de pontos incompatível com os subcaminhos")

    @property
    def n_points(self):
        return len(self.points)

    def subpath_offsets(self):
        offsets = []
        start = 0
        for size in self.subpath_sizes:
            offsets.append(start)
            start += 3 * size
        return offsets

    def segment_indices(self):
        """Índices locais (4,) de cada segmento cúbico, subcaminho a subcaminho."""
        indices = []
        for start, size in zip(self.subpath_offsets(), self.subpath_sizes):
            n = 3 * size
            for j in range(size):
                indices.append([start + 3 * j, start + 3 * j + 1, start + 3 * j + 2, start + (3 * j + 3) % n])
        return np.array(indices, dtype=int).reshape(-1, 4)

    def segments(self, points=None):
        points = self.points if points is None else points
        return points[self.segment_indices()]

    def with_points(self, points):
        return replace(self, points=points)


@dataclass(frozen=True)
class Group:
    id: str
    path_indices: tuple
    centroid: np.ndarray = field(default=None)

    def __post_init__(self):
        object.__setattr__(self, 'path_indices', tuple(int(i) for i in self.path_indices))
        if self.centroid is not None:
            object.__setattr__(self, 'centroid', _frozen(self.centroid))
        if not self.path_indices:
            raise VecfitError(f"grupo '{self.id}' sem caminhos")


@dataclass(frozen=True)
class ControlPointIndex:
    path: int
    role: str
    flat_index: int


@dataclass(frozen=True)
class SvgDocument:
    canvas_width: float
    canvas_height: float
    paths: tuple
    groups: tuple
    painter_order: tuple

    def __post_init__(self):
        object.__setattr__(self, 'paths', tuple(self.paths))
        object.__setattr__(self, 'groups', tuple(self.groups))
        object.__setattr__(self, 'painter_order', tuple(int(i) for i in self.painter_order))
        if not (self.canvas_width > 0 and self.canvas_height > 0):
            raise VecfitError("dimensões do canvas devem ser positivas")
        n = len(self.paths)
        if sorted(self.painter_order) != list(range(n)):
            raise VecfitError("painter_order não é uma permutação dos caminhos")
        owners = [i for g in self.groups for i in g.path_indices]
        if sorted(owners) != list(range(n)):
            raise VecfitError("cada caminho deve pertencer a exatamente um grupo")

    @property
    def n_paths(self):
        return len(self.paths)

    @property
    def n_points(self):
        return sum(p.n_points for p in self.paths)

    def path_offsets(self):
        """Índice do primeiro ponto de cada caminho no vetor achatado."""
        offsets = np.zeros(len(self.paths) + 1, dtype=int)
        for i, path in enumerate(self.paths):
            offsets[i + 1] = offsets[i] + path.n_points
        return offsets

    def group_of_path(self):
        owner = np.zeros(len(self.paths), dtype=int)
        for g, group in enumerate(self.groups):
            owner[list(group.path_indices)] = g
        return owner

    def group_index(self, group_id):
        for g, group in enumerate(self.groups):
            if group.id == group_id:
                return g
        raise KeyError(group_id)

    def recolored(self, fills):
        """Novo documento com as cores dadas (dict índice -> rgb); original_fill preservado."""
        paths = [replace(p, fill=fills[i]) if i in fills else p for i, p in enumerate(self.paths)]
        return replace(self, paths=tuple(paths))

    def with_painter_order(self, order):
        return replace(self, painter_order=tuple(order))

    def with_paths(self, paths):
        return replace(self, paths=tuple(paths))


def cubic_bbox(segment):
    """Caixa exata de uma cúbica a partir das raízes da derivada."""
    p0, p1, p2, p3 = segment
    ts = [0.0, 1.0]
    for axis in range(2):
        a = -p0[axis] + 3 * p1[axis] - 3 * p2[axis] + p3[axis]
        b = 2 * (p0[axis] - 2 * p1[axis] + p2[axis])
        c = p1[axis] - p0[axis]
        if abs(a) < 1e-12:
            if abs(b) > 1e-12:
                ts.append(-c / b)
            continue
        disc = b * b - 4 * a * c
        if disc >= 0:
            root = math.sqrt(disc)
            ts.extend([(-b + root) / (2 * a), (-b - root) / (2 * a)])
    ts = np.array([t for t in ts if 0.0 <= t <= 1.0])
    mt = 1.0 - ts
    curve = (np.outer(mt ** 3, p0) + np.outer(3 * mt ** 2 * ts, p1)
             + np.outer(3 * mt * ts ** 2, p2) + np.outer(ts ** 3, p3))
    return curve.min(axis=0), curve.max(axis=0)


def group_centroid(paths):
    lows, highs = [], []
    for path in paths:
        for segment in path.segments():
            lo, hi = cubic_bbox(segment)
            lows.append(lo)
            highs.append(hi)
    return (np.min(lows, axis=0) + np.max(highs, axis=0)) / 2.0


def canonical_points(subpaths):
    """Converte subcaminhos de cúbicas (4, 2) na matriz canônica de pontos."""
    rows = []
    sizes = []
    for segments in subpaths:
        for segment in segments:
            rows.extend([segment[0], segment[1], segment[2]])
        sizes.append(len(segments))
    return np.array(rows, dtype=float).reshape(-1, 2), tuple(sizes)


def build_document(canvas_width, canvas_height, paths, group_members, painter_order):
    """Monta o documento calculando os centróides de cada grupo."""
    groups = [
        Group(id=group_id, path_indices=sorted(members),
              centroid=group_centroid([paths[i] for i in members]))
        for group_id, members in group_members
    ]
    groups.sort(key=lambda g: min(g.path_indices))
    return SvgDocument(canvas_width, canvas_height, tuple(paths), tuple(groups), tuple(painter_order))


class SvgDocumentParser:
    """Lê o subconjunto suportado de SVG e produz um SvgDocument."""

    def __init__(self, strict=True):
        self.strict = strict

    def parse(self, text):
        if isinstance(text, bytes):
            text = text.decode('utf-8')
        try:
            etree.fromstring(text.encode('utf-8'))
        except etree.XMLSyntaxError as e:
            raise MalformedDocument(f"XML malformado: {e}") from e

        selector = Selector(text=text, type='xml')
        selector.remove_namespaces()
        root = selector.xpath('/*')[0]
        if self._tag(root) != 'svg':
            raise MalformedDocument("elemento raiz deve ser <svg>")

        canvas_width, canvas_height, base = self._canvas(root)

        self._entries = []
        self._group_ids = {}
        self._group_count = 0
        for child in root.xpath('./*'):
            tag = self._tag(child)
            if tag == 'g':
                self.parse_group(child, base)
            elif tag in SHAPE_TAGS:
                self.parse_shape(child, tag, base, group_id=None, inherited={})
            elif tag == 'defs':
                self.check_defs(child)
            elif tag in IGNORED_TAGS:
                continue
            else:
                raise UnsupportedFeature(f"elemento não suportado: <{tag}>", element=tag)

        document = self._assemble(canvas_width, canvas_height)
        logger.info(f"SVG lido: {document.n_paths} caminhos em {len(document.groups)} grupos.")
        return document

    def _tag(self, selector):
        tag = selector.root.tag
        return tag.split('}', 1)[-1] if isinstance(tag, str) else None

    def _canvas(self, root):
        view_box = root.xpath('@viewBox').get()
        if view_box:
            values = parse_number_list(view_box)
            if len(values) != 4:
                raise MalformedDocument(f"viewBox inválido: {view_box}")
            min_x, min_y, width, height = values
            base = np.array([[1.0, 0.0, -min_x], [0.0, 1.0, -min_y], [0.0, 0.0, 1.0]])
        else:
            width_text = root.xpath('@width').get()
            height_text = root.xpath('@height').get()
            if width_text is None or height_text is None:
                raise MalformedDocument("<svg> precisa de viewBox ou width/height")
            width = parse_length(width_text.strip())
            height = parse_length(height_text.strip())
            base = np.eye(3)
        if width <= 0 or height <= 0:
            raise MalformedDocument("dimensões do canvas devem ser positivas")
        return float(width), float(height), base

    def check_defs(self, defs):
        for child in defs.xpath('./*'):
            tag = self._tag(child)
            raise UnsupportedFeature(f"elemento não suportado em <defs>: <{tag}>", element=tag)

    def parse_group(self, group, base):
        group_id = group.xpath('@id').get()
        if group_id is None:
            group_id = f"g{self._group_count}"
        self._group_count += 1
        self._group_ids[group_id] = True

        inherited = {}
        for attribute in INHERITED_ATTRIBUTES:
            value = group.xpath(f'@{attribute}').get()
            if value is not None:
                inherited[attribute] = value
        style = group.xpath('@style').get()
        if style:
            for name, value in parse_style(style).items():
                if name in INHERITED_ATTRIBUTES:
                    inherited[name] = value

        matrix = base @ parse_transform(group.xpath('@transform').get())
        for child in group.xpath('./*'):
            tag = self._tag(child)
            if tag == 'g':
                raise UnsupportedFeature(f"grupos aninhados não são suportados (em '{group_id}')", element='g')
            if tag in SHAPE_TAGS:
                self.parse_shape(child, tag, matrix, group_id=group_id, inherited=inherited)
            elif tag in IGNORED_TAGS:
                continue
            else:
                raise UnsupportedFeature(f"elemento não suportado: <{tag}>", element=tag)

    def _reject(self, message, element):
        if self.strict:
            raise UnsupportedFeature(message, element=element)
        logger.warning(f"{message} (ignorado: strict_parse desativado)")

    def parse_shape(self, selector, tag, matrix, group_id, inherited):
        try:
            item = load_shape(selector, tag, inherited)
        except ValueError as e:
            cause = e.__cause__
            if isinstance(cause, VecfitError):
                raise cause
            raise UnsupportedFeature(f"atributo inválido em <{tag}>: {e}", element=tag) from e

        if item.stroke not in (None, 'none'):
            self._reject(f"<{tag}> com stroke '{item.stroke}'", tag)
        if item.fill_rule == 'evenodd':
            self._reject(f"<{tag}> com fill-rule evenodd", tag)
        for name, value in (('opacity', item.opacity), ('fill-opacity', item.fill_opacity)):
            if value is not None and value != 1.0:
                self._reject(f"<{tag}> com {name}={value}", tag)

        fill = parse_color(item.fill) if item.fill is not None else (0.0, 0.0, 0.0)
        if fill is None:
            self._reject(f"<{tag}> sem preenchimento (fill=none)", tag)
            return
        if item.data_fill:
            fill = parse_exact_rgb(item.data_fill)
        original = parse_exact_rgb(item.data_original) if item.data_original else fill

        try:
            subpaths = shape_to_subpaths(item)
        except MalformedPath:
            logger.error(f"Erro ao ler o atributo d de <{tag}> '{item.element_id}'", exc_info=True)
            raise
        subpaths = transform_subpaths(subpaths, matrix @ parse_transform(item.transform))
        if not subpaths:
            logger.warning(f"<{tag}> '{item.element_id}' sem geometria; ignorado.")
            return
        points, sizes = canonical_points(subpaths)
        path = PathGeometry(points=points, subpath_sizes=sizes, fill=fill, original_fill=original,
                            path_id=item.element_id)
        self._entries.append((path, group_id, item.data_index))

    def _assemble(self, canvas_width, canvas_height):
        entries = self._entries
        n = len(entries)
        indices = [e[2] for e in entries]
        if n and all(i is not None for i in indices) and sorted(indices) == list(range(n)):
            document_index = indices
        else:
            document_index = list(range(n))

        paths = [None] * n
        painter_order = []
        members = {}
        order = []
        for (path, group_id, _), index in zip(entries, document_index):
            paths[index] = path
            painter_order.append(index)
            if group_id is None:
                group_id = path.path_id or f"path{index}"
                if group_id in members or group_id in self._group_ids:
                    group_id = f"{group_id}_{index}"
            if group_id not in members:
                members[group_id] = []
                order.append(group_id)
            members[group_id].append(index)
        return build_document(canvas_width, canvas_height, paths,
                              [(g, members[g]) for g in order], painter_order)


def parse_svg(text, strict=True):
    """Converte texto SVG num SvgDocument canônico."""
    return SvgDocumentParser(strict=strict).parse(text)


def path_element(parent, path, index, decimals=None, d=None):
    element = etree.SubElement(parent, f'{{{SVG_NS}}}path')
    if path.path_id:
        element.set('id', path.path_id)
    element.set('d', d if d is not None else format_path_data(path.points, path.subpath_sizes, decimals))
    element.set('fill', to_hex(path.fill))
    element.set('data-vecfit-index', str(index))
    if not is_exact_hex(path.fill):
        element.set('data-vecfit-fill', exact_rgb_text(path.fill))
    if path.original_fill != path.fill:
        element.set('data-vecfit-original', exact_rgb_text(path.original_fill))
    return element


def svg_root(doc):
    root = etree.Element(f'{{{SVG_NS}}}svg', nsmap={None: SVG_NS})
    root.set('viewBox', f"0 0 {_num(doc.canvas_width)} {_num(doc.canvas_height)}")
    root.set('width', _num(doc.canvas_width))
    root.set('height', _num(doc.canvas_height))
    return root


def _num(value):
    text = repr(float(value))
    return text[:-2] if text.endswith('.0') else text


def painter_runs(doc):
    """Agrupa a ordem de pintura em trechos consecutivos do mesmo grupo."""
    owner = doc.group_of_path()
    runs = []
    for index in doc.painter_order:
        g = owner[index]
        if runs and runs[-1][0] == g:
            runs[-1][1].append(index)
        else:
            runs.append((g, [index]))
    return runs


def serialize_static(doc):
    """Escreve o documento como SVG estático, na ordem de pintura."""
    root = svg_root(doc)
    for g, indices in painter_runs(doc):
        group_element = etree.SubElement(root, f'{{{SVG_NS}}}g')
        group_element.set('id', doc.groups[g].id)
        for index in indices:
            path_element(group_element, doc.paths[index], index)
    return etree.tostring(root, pretty_print=True, encoding='unicode')


def flatten_params(doc):
    """Vetor (N, 2) de todos os pontos de controle e a tabela de índices."""
    table = []
    chunks = []
    flat = 0
    for p, path in enumerate(doc.paths):
        chunks.append(path.points)
        for local in range(path.n_points):
            role = ANCHOR if local % 3 == 0 else HANDLE
            table.append(ControlPointIndex(path=p, role=role, flat_index=flat))
            flat += 1
    points = np.concatenate(chunks, axis=0) if chunks else np.zeros((0, 2))
    return np.array(points, dtype=float), table


def unflatten_params(doc, points):
    """Inverso de flatten_params: devolve o documento com os pontos dados."""
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    if len(points) != doc.n_points:
        raise VecfitError(f"esperados {doc.n_points} pontos, recebidos {len(points)}")
    offsets = doc.path_offsets()
    paths = [path.with_points(points[offsets[i]:offsets[i + 1]]) for i, path in enumerate(doc.paths)]
    return doc.with_paths(paths)
