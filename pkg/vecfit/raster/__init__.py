from vecfit.raster.flatten import FlattenedOutline, flatten, flatten_cubic, make_plan, outline_area
from vecfit.raster.image_ops import (
    ForegroundMask,
    SdfMap,
    clean_target,
    distance_transform,
    foreground_mask,
    gaussian_blur,
    gaussian_blur_adjoint,
    sample_sdf,
)
from vecfit.raster.render import RasterFrame, RenderTape, backward, pixel_points, render, render_backward, render_with_tape

__all__ = [
    'FlattenedOutline', 'flatten', 'flatten_cubic', 'make_plan', 'outline_area',
    'ForegroundMask', 'SdfMap', 'clean_target', 'distance_transform', 'foreground_mask',
    'gaussian_blur', 'gaussian_blur_adjoint', 'sample_sdf',
    'RasterFrame', 'RenderTape', 'backward', 'pixel_points', 'render', 'render_backward', 'render_with_tape',
]
