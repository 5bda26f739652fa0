from dataclasses import dataclass

import numpy as np
from scipy import ndimage

from vecfit import settings
from vecfit.exceptions import DimensionMismatch
from vecfit.log import get_logger
from vecfit.raster.render import RasterFrame

logger = get_logger(__name__)


@dataclass
class ForegroundMask:
    bits: np.ndarray

    def __post_init__(self):
        self.bits = np.asarray(self.bits, dtype=bool)

    @property
    def height(self):
        return self.bits.shape[0]

    @property
    def width(self):
        return self.bits.shape[1]

    @property
    def area(self):
        return int(self.bits.sum())


@dataclass
class SdfMap:
    dist: np.ndarray

    @property
    def height(self):
        return self.dist.shape[0]

    @property
    def width(self):
        return self.dist.shape[1]


def _pixels(image):
    return image.rgb if isinstance(image, RasterFrame) else np.asarray(image, dtype=float)


def blur_kernel(radius=settings.BLUR_RADIUS, sigma=1.0):
    """Pesos 1D normalizados ∝ exp(−i²/2σ²), i em [−radius, radius]."""
    i = np.arange(-radius, radius + 1, dtype=float)
    w = np.exp(-(i ** 2) / (2.0 * sigma ** 2))
    return w / w.sum()


def gaussian_blur(image):
    """Desfoque gaussiano separável 5x5 com replicação das bordas.

    Aceita RasterFrame (e devolve RasterFrame) ou um array (H, W[, C]).
    """
    data = _pixels(image)
    w = blur_kernel()
    out = ndimage.correlate1d(data, w, axis=0, mode='nearest')
    out = ndimage.correlate1d(out, w, axis=1, mode='nearest')
    return RasterFrame(out) if isinstance(image, RasterFrame) else out


def _clamp_blur_adjoint_axis(data, w, axis):
    radius = len(w) // 2
    moved = np.moveaxis(data, axis, 0)
    n = moved.shape[0]
    pad = [(radius, radius)] + [(0, 0)] * (moved.ndim - 1)
    extended = ndimage.correlate1d(np.pad(moved, pad), w[::-1], axis=0, mode='constant')
    out = extended[radius:radius + n].copy()
    # leituras replicadas da borda voltam para o primeiro/último pixel
    out[0] += extended[:radius].sum(axis=0)
    out[-1] += extended[radius + n:].sum(axis=0)
    return np.moveaxis(out, 0, axis)


def gaussian_blur_adjoint(image):
    """Transposta exata de gaussian_blur (inclui a dobra das bordas replicadas)."""
    data = _pixels(image)
    w = blur_kernel()
    out = _clamp_blur_adjoint_axis(data, w, 1)
    out = _clamp_blur_adjoint_axis(out, w, 0)
    return RasterFrame(out) if isinstance(image, RasterFrame) else out


def foreground_mask(frame, white_thresh=settings.WHITE_THRESH):
    """Pixel é frente se o menor canal fica abaixo do limiar de branco."""
    data = _pixels(frame)
    return ForegroundMask(data.min(axis=-1) < white_thresh)


def clean_target(frame, mask):
    """Dilata a máscara em 1 pixel (3x3) e branqueia tudo fora dela."""
    data = _pixels(frame)
    if data.shape[:2] != mask.bits.shape:
        raise DimensionMismatch(
            'Máscara e quadro com dimensões diferentes',
            expected=list(data.shape[:2]),
            actual=list(mask.bits.shape),
        )
    keep = ndimage.binary_dilation(mask.bits, structure=np.ones((3, 3), dtype=bool))
    out = np.where(keep[..., None], data, 1.0)
    return RasterFrame(out)


def distance_transform(mask):
    """D(x) = max(0, EDT(fundo)(x) − 1), em pixels."""
    bits = mask.bits if isinstance(mask, ForegroundMask) else np.asarray(mask, dtype=bool)
    if not bits.any():
        logger.warning('Máscara vazia: mapa de distâncias nulo')
        return SdfMap(np.zeros(bits.shape))
    edt = ndimage.distance_transform_edt(~bits)
    return SdfMap(np.maximum(0.0, edt - 1.0))


def sample_sdf(sdf, points):
    """Amostragem bilinear de D em pontos contínuos (x, y) em pixels.

    Centros de pixel ficam em +0.5; fora da tela o valor é o da borda.
    O gradiente é a interpolação bilinear do campo de diferenças centrais.
    """
    dist = sdf.dist
    h, w = dist.shape
    points = np.asarray(points, dtype=float).reshape(-1, 2)
    u = np.clip(points[:, 0] - 0.5, 0.0, w - 1)
    v = np.clip(points[:, 1] - 0.5, 0.0, h - 1)
    x0 = np.minimum(np.floor(u).astype(int), max(w - 2, 0))
    y0 = np.minimum(np.floor(v).astype(int), max(h - 2, 0))
    x1 = np.minimum(x0 + 1, w - 1)
    y1 = np.minimum(y0 + 1, h - 1)
    fx = u - x0
    fy = v - y0

    def bilinear(field):
        return ((1 - fx) * (1 - fy) * field[y0, x0] + fx * (1 - fy) * field[y0, x1]
                + (1 - fx) * fy * field[y1, x0] + fx * fy * field[y1, x1])

    values = bilinear(dist)
    if h > 1 and w > 1:
        gy, gx = np.gradient(dist)
        grads = np.stack([bilinear(gx), bilinear(gy)], axis=1)
    else:
        grads = np.zeros_like(points)
    return values, grads


def box_downsample(image, factor):
    data = _pixels(image)
    h, w = data.shape[0] // factor, data.shape[1] // factor
    trimmed = data[:h * factor, :w * factor]
    return trimmed.reshape(h, factor, w, factor, -1).mean(axis=(1, 3))
