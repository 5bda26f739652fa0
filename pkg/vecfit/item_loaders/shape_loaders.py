import re

from itemloaders import ItemLoader
from itemloaders.processors import Identity, MapCompose, TakeFirst

from vecfit.items import ShapeItem

NUMBER_RE = re.compile(r"[-+]?(?:\d+\.?\d*|\.\d+)(?:[eE][-+]?\d+)?")


def clean_string(text):
    return text.strip().replace('\n', ' ').replace('\r', ' ')


def parse_length(text):
    """Converte um comprimento SVG em float; só unidades de usuário e px."""
    if text.endswith('px'):
        text = text[:-2].strip()
    if text.endswith('%'):
        raise ValueError(f"comprimento percentual não suportado: {text}")
    return float(text)


def parse_number_list(text):
    return [float(v) for v in NUMBER_RE.findall(text)]


def parse_index(text):
    return int(text)


def parse_style(text):
    """Lê declarações 'prop: valor' de um atributo style."""
    declarations = {}
    for part in text.split(';'):
        if ':' not in part:
            continue
        name, value = part.split(':', 1)
        declarations[name.strip().lower()] = value.strip()
    return declarations


class ShapeLoader(ItemLoader):
    default_item_class = ShapeItem

    default_input_processor = MapCompose(clean_string)
    default_output_processor = TakeFirst()

    x_in = MapCompose(clean_string, parse_length)
    y_in = MapCompose(clean_string, parse_length)
    width_in = MapCompose(clean_string, parse_length)
    height_in = MapCompose(clean_string, parse_length)
    rx_in = MapCompose(clean_string, parse_length)
    ry_in = MapCompose(clean_string, parse_length)
    cx_in = MapCompose(clean_string, parse_length)
    cy_in = MapCompose(clean_string, parse_length)
    r_in = MapCompose(clean_string, parse_length)
    x1_in = MapCompose(clean_string, parse_length)
    y1_in = MapCompose(clean_string, parse_length)
    x2_in = MapCompose(clean_string, parse_length)
    y2_in = MapCompose(clean_string, parse_length)
    stroke_width_in = MapCompose(clean_string, parse_length)
    opacity_in = MapCompose(clean_string, float)
    fill_opacity_in = MapCompose(clean_string, float)
    data_index_in = MapCompose(clean_string, parse_index)

    points_in = MapCompose(clean_string, parse_number_list)
    points_out = Identity()

    # mantém o texto cru: a gramática de d é validada em svg_core.path_data
    d_in = MapCompose(str.strip)


# atributo SVG -> campo do ShapeItem
SHAPE_ATTRIBUTES = {
    'id': 'element_id',
    'd': 'd',
    'x': 'x',
    'y': 'y',
    'width': 'width',
    'height': 'height',
    'rx': 'rx',
    'ry': 'ry',
    'cx': 'cx',
    'cy': 'cy',
    'r': 'r',
    'x1': 'x1',
    'y1': 'y1',
    'x2': 'x2',
    'y2': 'y2',
    'points': 'points',
    'fill': 'fill',
    'stroke': 'stroke',
    'stroke-width': 'stroke_width',
    'fill-rule': 'fill_rule',
    'opacity': 'opacity',
    'fill-opacity': 'fill_opacity',
    'transform': 'transform',
    'data-vecfit-index': 'data_index',
    'data-vecfit-fill': 'data_fill',
    'data-vecfit-original': 'data_original',
}

# propriedades aceitas dentro de style=""
STYLE_PROPERTIES = ('fill', 'stroke', 'stroke-width', 'fill-rule', 'opacity', 'fill-opacity')


def load_shape(selector, tag, inherited=None):
    """Preenche um ShapeItem a partir do seletor parsel de um elemento.

    Declarações de style têm precedência sobre atributos de apresentação,
    que por sua vez têm precedência sobre os valores herdados do <g>.
    """
    loader = ShapeLoader(item=ShapeItem(), selector=selector)
    loader.add_value('tag', tag)

    style = selector.xpath('@style').get()
    if style:
        declarations = parse_style(style)
        for name in STYLE_PROPERTIES:
            if name in declarations:
                loader.add_value(SHAPE_ATTRIBUTES[name], declarations[name])

    for attribute, field_name in SHAPE_ATTRIBUTES.items():
        loader.add_xpath(field_name, f'@{attribute}')

    for attribute, value in (inherited or {}).items():
        loader.add_value(SHAPE_ATTRIBUTES[attribute], value)

    return loader.load_item()
