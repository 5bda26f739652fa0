"""Leitura e escrita de quadros e máscaras PNG de 8 bits."""
import os
import re

import numpy as np
from PIL import Image

from vecfit.exceptions import FrameIOError
from vecfit.log import get_logger
from vecfit.raster.image_ops import ForegroundMask
from vecfit.raster.render import RasterFrame

logger = get_logger(__name__)

FRAME_PATTERN = 'frame_{:04d}.png'
_FRAME_RE = re.compile(r'^frame_(\d+)\.png$')


def frame_name(index):
    return FRAME_PATTERN.format(index)


def to_bytes(rgb):
    return np.round(np.clip(rgb, 0.0, 1.0) * 255.0).astype(np.uint8)


def read_frame(path):
    """Lê um PNG RGB(A); o alfa é composto sobre branco."""
    try:
        with Image.open(path) as img:
            rgba = np.asarray(img.convert('RGBA'), dtype=float) / 255.0
    except OSError as e:
        raise FrameIOError(f'Falha ao ler quadro: {e}', path=str(path)) from e
    alpha = rgba[..., 3:4]
    return RasterFrame(rgba[..., :3] * alpha + (1.0 - alpha))


def write_frame(path, frame):
    data = frame.rgb if isinstance(frame, RasterFrame) else frame
    try:
        Image.fromarray(to_bytes(data)).save(path)
    except OSError as e:
        raise FrameIOError(f'Falha ao gravar quadro: {e}', path=str(path)) from e


def read_mask(path):
    """Máscara em tons de cinza: ≥128 é frente."""
    try:
        with Image.open(path) as img:
            gray = np.asarray(img.convert('L'))
    except OSError as e:
        raise FrameIOError(f'Falha ao ler máscara: {e}', path=str(path)) from e
    return ForegroundMask(gray >= 128)


def write_mask(path, mask):
    bits = mask.bits if isinstance(mask, ForegroundMask) else np.asarray(mask, dtype=bool)
    try:
        Image.fromarray(np.where(bits, 255, 0).astype(np.uint8)).save(path)
    except OSError as e:
        raise FrameIOError(f'Falha ao gravar máscara: {e}', path=str(path)) from e


def list_frames(directory):
    """Arquivos frame_NNNN.png do diretório, em ordem numérica."""
    if not os.path.isdir(directory):
        raise FrameIOError('Diretório de quadros não encontrado', path=str(directory))
    found = []
    for name in os.listdir(directory):
        match = _FRAME_RE.match(name)
        if match:
            found.append((int(match.group(1)), os.path.join(directory, name)))
    found.sort()
    if not found:
        raise FrameIOError('Nenhum quadro frame_NNNN.png encontrado', path=str(directory))
    return [path for _, path in found]


def resize_frame(frame, width, height):
    """Redimensiona com filtro de área (Pillow) quando o tamanho difere."""
    if frame.width == width and frame.height == height:
        return frame
    img = Image.fromarray(to_bytes(frame.rgb))
    resized = img.resize((int(width), int(height)), Image.BOX)
    return RasterFrame(np.asarray(resized, dtype=float) / 255.0)


def read_frames(directory, width=None, height=None):
    frames = [read_frame(path) for path in list_frames(directory)]
    if width is not None and height is not None:
        frames = [resize_frame(f, width, height) for f in frames]
    logger.info(f'{len(frames)} quadros lidos de {directory}')
    return frames


def write_frames_to(directory, frames):
    os.makedirs(directory, exist_ok=True)
    paths = []
    for k, frame in enumerate(frames):
        path = os.path.join(directory, frame_name(k))
        write_frame(path, frame)
        paths.append(path)
    return paths
