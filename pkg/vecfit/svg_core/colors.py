import re

from vecfit.exceptions import UnsupportedFeature

NAMED_COLORS = {
    'black': '#000000', 'white': '#ffffff', 'red': '#ff0000', 'green': '#008000',
    'blue': '#0000ff', 'yellow': '#ffff00', 'cyan': '#00ffff', 'aqua': '#00ffff',
    'magenta': '#ff00ff', 'fuchsia': '#ff00ff', 'gray': '#808080', 'grey': '#808080',
    'silver': '#c0c0c0', 'maroon': '#800000', 'olive': '#808000', 'lime': '#00ff00',
    'teal': '#008080', 'navy': '#000080', 'purple': '#800080', 'orange': '#ffa500',
    'brown': '#a52a2a', 'pink': '#ffc0cb', 'gold': '#ffd700',
}

_RGB_RE = re.compile(r"rgb\(\s*([^,\s]+)\s*,?\s*([^,\s]+)\s*,?\s*([^,\s)]+)\s*\)")


def _channel(text):
    if text.endswith('%'):
        return min(1.0, max(0.0, float(text[:-1]) / 100.0))
    return min(1.0, max(0.0, float(text) / 255.0))


def parse_color(text):
    """Converte uma cor SVG sólida em (r, g, b) no intervalo [0, 1].

    Devolve None para 'none'; pinturas url(...) não são suportadas.
    """
    value = text.strip().lower()
    if value == 'none':
        return None
    if value.startswith('url('):
        raise UnsupportedFeature(f"pintura não sólida: {text}", element='fill')
    value = NAMED_COLORS.get(value, value)
    if value.startswith('#'):
        digits = value[1:]
        if len(digits) == 3:
            digits = ''.join(c * 2 for c in digits)
        if len(digits) != 6:
            raise UnsupportedFeature(f"cor inválida: {text}", element='fill')
        return tuple(int(digits[i:i + 2], 16) / 255.0 for i in (0, 2, 4))
    match = _RGB_RE.fullmatch(value)
    if match:
        return tuple(_channel(g) for g in match.groups())
    raise UnsupportedFeature(f"cor não suportada: {text}", element='fill')


def parse_exact_rgb(text):
    """Lê o triplo exato 'r,g,b' gravado em data-vecfit-fill."""
    values = tuple(float(v) for v in text.split(','))
    if len(values) != 3:
        raise UnsupportedFeature(f"triplo de cor inválido: {text}", element='data-vecfit-fill')
    return values


def to_hex(rgb):
    return '#' + ''.join(f"{int(round(min(1.0, max(0.0, c)) * 255)):02x}" for c in rgb)


def is_exact_hex(rgb):
    return all(round(c * 255) / 255.0 == c for c in rgb)


def exact_rgb_text(rgb):
    return ','.join(repr(float(c)) for c in rgb)
