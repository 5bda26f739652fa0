"""Gramática do atributo d, transformações e conversão de formas em cúbicas.

Toda geometria sai daqui como lista de subcaminhos fechados, cada um uma
lista de segmentos cúbicos (4, 2) em coordenadas absolutas.
"""
import math
import re

import numpy as np

from vecfit.exceptions import MalformedPath, UnsupportedFeature

# constante do quarto de círculo em cúbica
KAPPA = 4.0 * (math.sqrt(2.0) - 1.0) / 3.0

ARC_MAX_DEVIATION = 0.01

_NUMBER_RE = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")
_COMMANDS = set("MmLlHhVvCcSsQqTtAaZz")
_PARAM_COUNT = {'M': 2, 'L': 2, 'H': 1, 'V': 1, 'C': 6, 'S': 4, 'Q': 4, 'T': 2, 'A': 7, 'Z': 0}


def line_to_cubic(a, b):
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    return np.array([a, a + (b - a) / 3.0, a + 2.0 * (b - a) / 3.0, b])


def quad_to_cubic(p0, q, p3):
    p0 = np.asarray(p0, dtype=float)
    q = np.asarray(q, dtype=float)
    p3 = np.asarray(p3, dtype=float)
    return np.array([p0, p0 + 2.0 / 3.0 * (q - p0), p3 + 2.0 / 3.0 * (q - p3), p3])


class _PathScanner:

    def __init__(self, d):
        self.d = d
        self.pos = 0

    def _skip(self):
        while self.pos < len(self.d) and (self.d[self.pos].isspace() or self.d[self.pos] == ','):
            self.pos += 1

    def at_end(self):
        self._skip()
        return self.pos >= len(self.d)

    def next_is_command(self):
        self._skip()
        return self.pos < len(self.d) and self.d[self.pos] in _COMMANDS

    def command(self):
        self._skip()
        ch = self.d[self.pos]
        if ch not in _COMMANDS:
            raise MalformedPath(f"comando esperado em {self.pos}: {ch!r}", d=self.d, position=self.pos)
        self.pos += 1
        return ch

    def number(self):
        self._skip()
        match = _NUMBER_RE.match(self.d, self.pos)
        if not match:
            raise MalformedPath(f"número esperado na posição {self.pos}", d=self.d, position=self.pos)
        self.pos = match.end()
        return float(match.group())

    def flag(self):
        self._skip()
        if self.pos >= len(self.d) or self.d[self.pos] not in '01':
            raise MalformedPath(f"flag de arco esperada na posição {self.pos}", d=self.d, position=self.pos)
        value = self.d[self.pos] == '1'
        self.pos += 1
        return value


def arc_to_cubics(p0, rx, ry, rotation_deg, large, sweep, p1, max_deviation=ARC_MAX_DEVIATION):
    """Aproxima um arco elíptico por cúbicas com desvio radial ≤ max_deviation."""
    p0 = np.asarray(p0, dtype=float)
    p1 = np.asarray(p1, dtype=float)
    rx, ry = abs(rx), abs(ry)
    if not (rx and ry):
        return [line_to_cubic(p0, p1)]
    if np.array_equal(p0, p1):
        return []

    phi = math.radians(rotation_deg % 360.0)
    cos_phi, sin_phi = math.cos(phi), math.sin(phi)

    # conversão de extremos para centro (notas de implementação do SVG)
    dx2 = (p0[0] - p1[0]) / 2.0
    dy2 = (p0[1] - p1[1]) / 2.0
    x1p = cos_phi * dx2 + sin_phi * dy2
    y1p = -sin_phi * dx2 + cos_phi * dy2

    lam = (x1p / rx) ** 2 + (y1p / ry) ** 2
    if lam > 1.0:
        scale = math.sqrt(lam)
        rx *= scale
        ry *= scale

    num = rx * rx * ry * ry - rx * rx * y1p * y1p - ry * ry * x1p * x1p
    den = rx * rx * y1p * y1p + ry * ry * x1p * x1p
    coef = math.sqrt(max(0.0, num / den)) if den else 0.0
    if large == sweep:
        coef = -coef
    cxp = coef * rx * y1p / ry
    cyp = -coef * ry * x1p / rx
    cx = cos_phi * cxp - sin_phi * cyp + (p0[0] + p1[0]) / 2.0
    cy = sin_phi * cxp + cos_phi * cyp + (p0[1] + p1[1]) / 2.0

    def angle(ux, uy, vx, vy):
        return math.atan2(ux * vy - uy * vx, ux * vx + uy * vy)

    theta1 = angle(1.0, 0.0, (x1p - cxp) / rx, (y1p - cyp) / ry)
    dtheta = angle((x1p - cxp) / rx, (y1p - cyp) / ry, (-x1p - cxp) / rx, (-y1p - cyp) / ry)
    if not sweep and dtheta > 0:
        dtheta -= 2.0 * math.pi
    elif sweep and dtheta < 0:
        dtheta += 2.0 * math.pi

    n = max(1, math.ceil(abs(dtheta) / (math.pi / 2.0) - 1e-9))
    r_max = max(rx, ry)
    while r_max * 2.7e-4 * (abs(dtheta) / n / (math.pi / 2.0)) ** 6 > max_deviation:
        n += 1

    step = dtheta / n
    k = 4.0 / 3.0 * math.tan(step / 4.0)

    def point(t):
        ct, st = math.cos(t), math.sin(t)
        return np.array([
            cx + rx * ct * cos_phi - ry * st * sin_phi,
            cy + rx * ct * sin_phi + ry * st * cos_phi,
        ])

    def derivative(t):
        ct, st = math.cos(t), math.sin(t)
        return np.array([
            -rx * st * cos_phi - ry * ct * sin_phi,
            -rx * st * sin_phi + ry * ct * cos_phi,
        ])

    segments = []
    t = theta1
    start = p0
    for i in range(n):
        t_next = t + step
        end = p1 if i == n - 1 else point(t_next)
        segments.append(np.array([
            start,
            start + k * derivative(t),
            end - k * derivative(t_next),
            end,
        ]))
        start = end
        t = t_next
    return segments


def _close(segments, start):
    if not segments:
        return None
    end = segments[-1][3]
    if not np.array_equal(end, start):
        segments.append(line_to_cubic(end, start))
    return segments


def parse_path_data(d):
    """Interpreta um atributo d e devolve subcaminhos fechados de cúbicas."""
    scanner = _PathScanner(d or '')
    subpaths = []
    segments = []
    current = np.zeros(2)
    start = np.zeros(2)
    last_control = None
    last_command = None
    command = None

    if scanner.at_end():
        return subpaths

    while not scanner.at_end():
        if scanner.next_is_command():
            command = scanner.command()
        elif command is None:
            raise MalformedPath("d deve começar com um comando", d=d, position=scanner.pos)
        elif command in 'Zz':
            raise MalformedPath("parâmetros após Z", d=d, position=scanner.pos)
        elif command == 'M':
            command = 'L'
        elif command == 'm':
            command = 'l'

        upper = command.upper()
        relative = command.islower()
        if last_command is None and upper != 'M':
            raise MalformedPath("d deve começar com M", d=d, position=scanner.pos)

        if upper == 'Z':
            closed = _close(segments, start)
            if closed:
                subpaths.append(closed)
            segments = []
            current = start.copy()
            last_control = None
            last_command = 'Z'
            continue

        args = []
        for i in range(_PARAM_COUNT[upper]):
            if upper == 'A' and i in (3, 4):
                args.append(scanner.flag())
            else:
                args.append(scanner.number())

        origin = current if relative else np.zeros(2)

        if upper == 'M':
            closed = _close(segments, start)
            if closed:
                subpaths.append(closed)
            segments = []
            current = origin + np.array(args)
            start = current.copy()
            last_control = None
        elif upper == 'L':
            target = origin + np.array(args)
            segments.append(line_to_cubic(current, target))
            current = target
            last_control = None
        elif upper == 'H':
            target = np.array([args[0] + (current[0] if relative else 0.0), current[1]])
            segments.append(line_to_cubic(current, target))
            current = target
            last_control = None
        elif upper == 'V':
            target = np.array([current[0], args[0] + (current[1] if relative else 0.0)])
            segments.append(line_to_cubic(current, target))
            current = target
            last_control = None
        elif upper == 'C':
            c1 = origin + np.array(args[0:2])
            c2 = origin + np.array(args[2:4])
            target = origin + np.array(args[4:6])
            segments.append(np.array([current, c1, c2, target]))
            last_control = ('C', c2)
            current = target
        elif upper == 'S':
            if last_control is not None and last_control[0] == 'C':
                c1 = 2.0 * current - last_control[1]
            else:
                c1 = current.copy()
            c2 = origin + np.array(args[0:2])
            target = origin + np.array(args[2:4])
            segments.append(np.array([current, c1, c2, target]))
            last_control = ('C', c2)
            current = target
        elif upper == 'Q':
            q = origin + np.array(args[0:2])
            target = origin + np.array(args[2:4])
            segments.append(quad_to_cubic(current, q, target))
            last_control = ('Q', q)
            current = target
        elif upper == 'T':
            if last_control is not None and last_control[0] == 'Q':
                q = 2.0 * current - last_control[1]
            else:
                q = current.copy()
            target = origin + np.array(args[0:2])
            segments.append(quad_to_cubic(current, q, target))
            last_control = ('Q', q)
            current = target
        elif upper == 'A':
            target = origin + np.array(args[5:7])
            segments.extend(arc_to_cubics(current, args[0], args[1], args[2], args[3], args[4], target))
            current = target
            last_control = None
        last_command = upper

    closed = _close(segments, start)
    if closed:
        subpaths.append(closed)
    return subpaths


def parse_transform(text):
    """Converte o atributo transform numa matriz afim 3x3."""
    matrix = np.eye(3)
    if not text:
        return matrix
    pattern = re.compile(r"(matrix|translate|scale|rotate|skewX|skewY)\s*\(([^)]*)\)")
    consumed = 0
    for match in pattern.finditer(text):
        if text[consumed:match.start()].strip(' ,\t\n'):
            raise UnsupportedFeature(f"transform inválido: {text}", element='transform')
        consumed = match.end()
        name = match.group(1)
        values = [float(v) for v in _NUMBER_RE.findall(match.group(2))]
        if name == 'matrix' and len(values) == 6:
            a, b, c, d, e, f = values
            step = np.array([[a, c, e], [b, d, f], [0.0, 0.0, 1.0]])
        elif name == 'translate' and len(values) in (1, 2):
            tx = values[0]
            ty = values[1] if len(values) == 2 else 0.0
            step = np.array([[1.0, 0.0, tx], [0.0, 1.0, ty], [0.0, 0.0, 1.0]])
        elif name == 'scale' and len(values) in (1, 2):
            sx = values[0]
            sy = values[1] if len(values) == 2 else sx
            step = np.diag([sx, sy, 1.0])
        elif name == 'rotate' and len(values) in (1, 3):
            angle = math.radians(values[0])
            c, s = math.cos(angle), math.sin(angle)
            step = np.array([[c, -s, 0.0], [s, c, 0.0], [0.0, 0.0, 1.0]])
            if len(values) == 3:
                cx, cy = values[1], values[2]
                step = (np.array([[1.0, 0.0, cx], [0.0, 1.0, cy], [0.0, 0.0, 1.0]]) @ step
                        @ np.array([[1.0, 0.0, -cx], [0.0, 1.0, -cy], [0.0, 0.0, 1.0]]))
        elif name == 'skewX' and len(values) == 1:
            step = np.array([[1.0, math.tan(math.radians(values[0])), 0.0], [0.0, 1.0, 0.0], [0.0, 0.0, 1.0]])
        elif name == 'skewY' and len(values) == 1:
            step = np.array([[1.0, 0.0, 0.0], [math.tan(math.radians(values[0])), 1.0, 0.0], [0.0, 0.0, 1.0]])
        else:
            raise UnsupportedFeature(f"transform inválido: {match.group(0)}", element='transform')
        matrix = matrix @ step
    if text[consumed:].strip(' ,\t\n'):
        raise UnsupportedFeature(f"transform inválido: {text}", element='transform')
    return matrix


def transform_subpaths(subpaths, matrix):
    if np.array_equal(matrix, np.eye(3)):
        return subpaths
    linear = matrix[:2, :2]
    offset = matrix[:2, 2]
    return [[seg @ linear.T + offset for seg in segments] for segments in subpaths]


def _polyline(points, close=True):
    segments = [line_to_cubic(points[i], points[i + 1]) for i in range(len(points) - 1)]
    if close:
        return _close(segments, np.asarray(points[0], dtype=float))
    return segments


def _ellipse(cx, cy, rx, ry):
    k = KAPPA
    right = np.array([cx + rx, cy])
    bottom = np.array([cx, cy + ry])
    left = np.array([cx - rx, cy])
    top = np.array([cx, cy - ry])
    return [[
        np.array([right, [cx + rx, cy + k * ry], [cx + k * rx, cy + ry], bottom]),
        np.array([bottom, [cx - k * rx, cy + ry], [cx - rx, cy + k * ry], left]),
        np.array([left, [cx - rx, cy - k * ry], [cx - k * rx, cy - ry], top]),
        np.array([top, [cx + k * rx, cy - ry], [cx + rx, cy - k * ry], right]),
    ]]


def _rect(x, y, w, h, rx, ry):
    if rx is None and ry is None:
        rx = ry = 0.0
    elif rx is None:
        rx = ry
    elif ry is None:
        ry = rx
    rx = min(abs(rx), w / 2.0)
    ry = min(abs(ry), h / 2.0)
    if rx == 0.0 or ry == 0.0:
        corners = [(x, y), (x + w, y), (x + w, y + h), (x, y + h)]
        return [_polyline([np.array(c, dtype=float) for c in corners])]

    k = KAPPA
    segments = []

    def line(a, b):
        segments.append(line_to_cubic(a, b))

    def corner(a, c1, c2, b):
        segments.append(np.array([a, c1, c2, b], dtype=float))

    p = [
        (x + rx, y), (x + w - rx, y),
        (x + w, y + ry), (x + w, y + h - ry),
        (x + w - rx, y + h), (x + rx, y + h),
        (x, y + h - ry), (x, y + ry),
    ]
    line(p[0], p[1])
    corner(p[1], (x + w - rx + k * rx, y), (x + w, y + ry - k * ry), p[2])
    line(p[2], p[3])
    corner(p[3], (x + w, y + h - ry + k * ry), (x + w - rx + k * rx, y + h), p[4])
    line(p[4], p[5])
    corner(p[5], (x + rx - k * rx, y + h), (x, y + h - ry + k * ry), p[6])
    line(p[6], p[7])
    corner(p[7], (x, y + ry - k * ry), (x + rx - k * rx, y), p[0])
    return [segments]


def shape_to_subpaths(item):
    """Converte um ShapeItem em subcaminhos cúbicos fechados (sem transform)."""
    tag = item.tag
    if tag == 'path':
        return parse_path_data(item.d)
    if tag == 'rect':
        w = item.width or 0.0
        h = item.height or 0.0
        if w <= 0.0 or h <= 0.0:
            return []
        return _rect(item.x or 0.0, item.y or 0.0, w, h, item.rx, item.ry)
    if tag == 'circle':
        r = item.r or 0.0
        if r <= 0.0:
            return []
        return _ellipse(item.cx or 0.0, item.cy or 0.0, r, r)
    if tag == 'ellipse':
        rx, ry = item.rx or 0.0, item.ry or 0.0
        if rx <= 0.0 or ry <= 0.0:
            return []
        return _ellipse(item.cx or 0.0, item.cy or 0.0, rx, ry)
    if tag in ('polygon', 'polyline'):
        values = item.points or []
        if len(values) % 2:
            raise MalformedPath(f"<{tag}> com número ímpar de coordenadas")
        points = [np.array(values[i:i + 2], dtype=float) for i in range(0, len(values), 2)]
        if len(points) < 2:
            return []
        closed = _polyline(points)
        return [closed] if closed else []
    if tag == 'line':
        a = np.array([item.x1 or 0.0, item.y1 or 0.0])
        b = np.array([item.x2 or 0.0, item.y2 or 0.0])
        return [[line_to_cubic(a, b), line_to_cubic(b, a)]]
    raise UnsupportedFeature(f"elemento não suportado: <{tag}>", element=tag)


def format_number(value, decimals=None):
    """Formata uma coordenada; sem casas fixas usa repr (ida e volta exata)."""
    value = float(value)
    if decimals is None:
        text = repr(value)
        if text.endswith('.0'):
            text = text[:-2]
    else:
        text = f"{round(value, decimals):.{decimals}f}".rstrip('0').rstrip('.')
    if text in ('-0', ''):
        text = '0'
    return text


def format_path_data(points, subpath_sizes, decimals=None):
    """Escreve pontos canônicos (âncora, alça+, alça-) como 'M ... C ... Z'."""
    parts = []
    offset = 0
    for size in subpath_sizes:
        loop = points[offset:offset + 3 * size]
        offset += 3 * size
        a0 = loop[0]
        parts.append(f"M{format_number(a0[0], decimals)} {format_number(a0[1], decimals)}")
        for j in range(size):
            c1 = loop[3 * j + 1]
            c2 = loop[3 * j + 2]
            end = loop[(3 * j + 3) % (3 * size)]
            coords = ' '.join(format_number(v, decimals) for v in (c1[0], c1[1], c2[0], c2[1], end[0], end[1]))
            parts.append(f"C{coords}")
        parts.append("Z")
    return ' '.join(parts)
