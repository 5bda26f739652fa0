from vecfit.svg_core.document import (
    ANCHOR,
    HANDLE,
    ControlPointIndex,
    Group,
    PathGeometry,
    SvgDocument,
    flatten_params,
    parse_svg,
    serialize_static,
    unflatten_params,
)

__all__ = [
    'ANCHOR', 'HANDLE', 'ControlPointIndex', 'Group', 'PathGeometry', 'SvgDocument',
    'flatten_params', 'parse_svg', 'serialize_static', 'unflatten_params',
]
