"""Rasterizador suave diferenciável.

Cobertura de cada caminho = logística da distância com sinal ao contorno
achatado (negativa dentro pela regra nonzero). Distâncias exatas só numa
faixa de ±B pixels em torno do contorno; fora dela a cobertura é 0 ou 1 e
o gradiente é nulo. Composição opaca em ordem de pintura sobre branco.
"""
from dataclasses import dataclass, field

import numpy as np

from vecfit import settings
from vecfit.raster.flatten import flatten

# limite de memória por bloco de pixels (pixels x arestas)
CHUNK_ELEMENTS = 1 << 20


@dataclass
class RasterFrame:
    rgb: np.ndarray

    def __post_init__(self):
        self.rgb = np.asarray(self.rgb, dtype=float)

    @property
    def height(self):
        return self.rgb.shape[0]

    @property
    def width(self):
        return self.rgb.shape[1]

    @classmethod
    def white(cls, width, height):
        return cls(np.ones((height, width, 3)))


@dataclass
class _PathTape:
    index: int
    region: tuple
    alpha: np.ndarray
    dalpha: np.ndarray
    sign: np.ndarray
    nearest: np.ndarray
    t: np.ndarray
    normal: np.ndarray
    below: np.ndarray
    fill: np.ndarray
    outline: object
    starts: np.ndarray
    ends: np.ndarray


@dataclass
class RenderTape:
    width: int
    height: int
    n_points: list
    entries: list = field(default_factory=list)
    plans: list = field(default_factory=list)


def band_width(softness):
    return 4.0 * softness + settings.BLUR_RADIUS


def pixel_points(doc, pixels_per_unit):
    """Pontos canônicos de cada caminho em coordenadas de pixel."""
    return [np.array(path.points) * pixels_per_unit for path in doc.paths]


def _sigmoid(z):
    return 0.5 * (1.0 + np.tanh(0.5 * z))


def winding_numbers(vertices, starts, ends, x0, y0, width, height):
    """Número de voltas (regra nonzero) nos centros de pixel da região, linha a linha.

    Cada aresta que cruza a linha y contribui ±1 para os pixels à esquerda
    do cruzamento (raio para +x); subida conta +1, descida −1.
    """
    a = vertices[starts]
    b = vertices[ends]
    ys = y0 + np.arange(height) + 0.5
    ay = a[:, 1, None]
    by = b[:, 1, None]
    up = (ay <= ys[None, :]) & (by > ys[None, :])
    down = (by <= ys[None, :]) & (ay > ys[None, :])
    e, r = np.nonzero(up | down)
    direction = np.where(up[e, r], 1, -1)
    xc = a[e, 0] + (ys[r] - a[e, 1]) * (b[e, 0] - a[e, 0]) / (b[e, 1] - a[e, 1])
    q = np.clip(np.ceil(xc - x0 - 0.5), 0, width).astype(int)
    diff = np.zeros((height, width + 1), dtype=int)
    np.add.at(diff, (r, np.zeros_like(r)), direction)
    np.add.at(diff, (r, q), -direction)
    return np.cumsum(diff, axis=1)[:, :width]


def _edge_windows(a, b, band, x0, y0, width, height):
    """Retângulo de pixels (relativo à região) a menos de `band` da caixa de cada aresta."""
    lo = np.minimum(a, b) - band
    hi = np.maximum(a, b) + band
    c0 = np.clip(np.ceil(lo[:, 0] - 0.5) - x0, 0, width).astype(int)
    c1 = np.clip(np.floor(hi[:, 0] - 0.5) + 1 - x0, 0, width).astype(int)
    r0 = np.clip(np.ceil(lo[:, 1] - 0.5) - y0, 0, height).astype(int)
    r1 = np.clip(np.floor(hi[:, 1] - 0.5) + 1 - y0, 0, height).astype(int)
    return c0, np.maximum(c1 - c0, 0), r0, np.maximum(r1 - r0, 0)


def signed_distance(vertices, starts, ends, region, band):
    """Distância com sinal dos centros de pixel da região à polilinha fechada.

    Só os pares (pixel, aresta) dentro da janela ±band de cada aresta são
    avaliados; pixels sem aresta a menos de `band` ficam com |sd| = 2·band
    e o sinal do número de voltas. Devolve (sd, aresta mais próxima, t
    nessa aresta, normal unitária, sinal), todos com a forma da região.
    """
    y0, y1, x0, x1 = region
    width, height = x1 - x0, y1 - y0
    sign = np.where(winding_numbers(vertices, starts, ends, x0, y0, width, height) != 0, -1.0, 1.0).ravel()
    n = width * height
    best = np.full(n, (2.0 * band) ** 2)
    nearest = np.zeros(n, dtype=int)
    t_out = np.zeros(n)
    normal = np.zeros((n, 2))

    a = vertices[starts]
    b = vertices[ends]
    ab = b - a
    len2 = np.einsum('ij,ij->i', ab, ab)
    safe = np.where(len2 > 1e-18, len2, 1.0)
    c0, wx, r0, wy = _edge_windows(a, b, band, x0, y0, width, height)
    counts = wx * wy
    bounds = np.cumsum(counts)

    lo_edge = 0
    while lo_edge < len(a):
        # arestas em blocos de até CHUNK_ELEMENTS pares (pelo menos uma)
        done = bounds[lo_edge - 1] if lo_edge else 0
        hi_edge = max(lo_edge + 1, int(np.searchsorted(bounds, done + CHUNK_ELEMENTS, side='right')))
        hi_edge = min(hi_edge, len(a))
        chunk = counts[lo_edge:hi_edge]
        if chunk.sum():
            edge = np.repeat(np.arange(lo_edge, hi_edge), chunk)
            local = np.arange(len(edge)) - np.repeat(np.cumsum(chunk) - chunk, chunk)
            col = c0[edge] + local % wx[edge]
            row = r0[edge] + local // wx[edge]
            pixel = row * width + col
            apx = x0 + col + 0.5 - a[edge, 0]
            apy = y0 + row + 0.5 - a[edge, 1]
            t = (apx * ab[edge, 0] + apy * ab[edge, 1]) / safe[edge]
            t = np.where(len2[edge] > 1e-18, np.clip(t, 0.0, 1.0), 0.0)
            dx = apx - t * ab[edge, 0]
            dy = apy - t * ab[edge, 1]
            dist2 = dx * dx + dy * dy

            order = np.lexsort((edge, dist2, pixel))
            sorted_pixels = pixel[order]
            first = order[np.r_[True, sorted_pixels[1:] != sorted_pixels[:-1]]]
            # blocos seguem a ordem das arestas: empate mantém a aresta anterior
            better = dist2[first] < best[pixel[first]]
            first = first[better]
            p = pixel[first]
            best[p] = dist2[first]
            nearest[p] = edge[first]
            t_out[p] = t[first]
            dist = np.sqrt(dist2[first])
            with np.errstate(invalid='ignore', divide='ignore'):
                normal[p, 0] = np.where(dist > 0, dx[first] / dist, 0.0)
                normal[p, 1] = np.where(dist > 0, dy[first] / dist, 0.0)
        lo_edge = hi_edge

    shape = (height, width)
    sd = sign * np.sqrt(best)
    return (sd.reshape(shape), nearest.reshape(shape), t_out.reshape(shape),
            normal.reshape(shape + (2,)), sign.reshape(shape))


def coverage(sd, softness):
    """Cobertura em [0, 1] e sua derivada em relação à distância com sinal."""
    band = band_width(softness)
    s0 = _sigmoid(-band / softness)
    norm = 1.0 - 2.0 * s0
    s = _sigmoid(-sd / softness)
    alpha = np.clip((s - s0) / norm, 0.0, 1.0)
    inband = np.abs(sd) < band
    alpha = np.where(sd <= -band, 1.0, np.where(sd >= band, 0.0, alpha))
    dalpha = np.where(inband, -s * (1.0 - s) / (softness * norm), 0.0)
    return alpha, dalpha


def _rasterize_path(index, path, points, width, height, softness, plan, tol):
    outline = flatten(path, points, tol, plan)
    if len(outline.vertices) == 0:
        return None, outline
    band = band_width(softness)
    lo = np.floor(outline.vertices.min(axis=0) - band).astype(int)
    hi = np.ceil(outline.vertices.max(axis=0) + band).astype(int)
    x0, y0 = max(0, lo[0]), max(0, lo[1])
    x1, y1 = min(width, hi[0]), min(height, hi[1])
    if x0 >= x1 or y0 >= y1:
        return None, outline

    region = (y0, y1, x0, x1)
    starts, ends = outline.edges()
    sd, nearest, t, normal, sign = signed_distance(outline.vertices, starts, ends, region, band)
    alpha, dalpha = coverage(sd, softness)
    entry = _PathTape(
        index=index,
        region=region,
        alpha=alpha,
        dalpha=dalpha,
        sign=sign,
        nearest=nearest,
        t=t,
        normal=normal,
        below=None,
        fill=np.array(path.fill, dtype=float),
        outline=outline,
        starts=starts,
        ends=ends,
    )
    return entry, outline


def render_with_tape(doc, points, width, height, softness=settings.SOFTNESS, plans=None,
                     tol=settings.FLATTEN_TOL, only=None):
    """Renderiza e guarda o estado necessário para o passo reverso."""
    width, height = int(width), int(height)
    out = np.ones((height, width, 3))
    tape = RenderTape(width=width, height=height, n_points=[len(p) for p in points])
    tape.plans = [None] * len(doc.paths)
    selected = None if only is None else set(only)

    for index in doc.painter_order:
        if selected is not None and index not in selected:
            continue
        plan = plans[index] if plans is not None else None
        entry, outline = _rasterize_path(index, doc.paths[index], points[index], width, height,
                                         softness, plan, tol)
        tape.plans[index] = outline.plan
        if entry is None:
            continue
        y0, y1, x0, x1 = entry.region
        region = out[y0:y1, x0:x1]
        entry.below = region.copy()
        a = entry.alpha[..., None]
        out[y0:y1, x0:x1] = a * entry.fill + (1.0 - a) * region
        tape.entries.append(entry)
    return RasterFrame(out), tape


def render(doc, points, width, height, softness=settings.SOFTNESS, plans=None,
           tol=settings.FLATTEN_TOL, only=None):
    """Renderiza o documento (pontos em pixels, um array por caminho)."""
    frame, _ = render_with_tape(doc, points, width, height, softness, plans, tol, only)
    return frame


def backward(tape, upstream):
    """Gradiente de Σ upstream ⊙ imagem em relação aos pontos de cada caminho."""
    upstream = np.asarray(upstream, dtype=float)
    grad_out = upstream.copy()
    grads = [np.zeros((n, 2)) for n in tape.n_points]

    for entry in reversed(tape.entries):
        y0, y1, x0, x1 = entry.region
        g_region = grad_out[y0:y1, x0:x1]
        g_alpha = np.einsum('ijc,ijc->ij', g_region, entry.fill - entry.below)
        grad_out[y0:y1, x0:x1] = g_region * (1.0 - entry.alpha[..., None])

        g_dist = g_alpha * entry.dalpha * entry.sign
        active = g_dist != 0.0
        if not np.any(active):
            continue
        g = g_dist[active]
        k = entry.nearest[active]
        t = entry.t[active]
        n = entry.normal[active]
        outline = entry.outline

        g_vertices = np.zeros_like(outline.vertices)
        np.add.at(g_vertices, entry.starts[k], -(g * (1.0 - t))[:, None] * n)
        np.add.at(g_vertices, entry.ends[k], -(g * t)[:, None] * n)

        contributions = outline.weights[..., None] * g_vertices[:, None, :]
        np.add.at(grads[entry.index], outline.indices.ravel(), contributions.reshape(-1, 2))
    return grads


def render_backward(doc, points, width, height, softness, upstream, plans=None,
                    tol=settings.FLATTEN_TOL):
    """Renderiza e retropropaga num único passo; devolve a lista de gradientes por caminho."""
    _, tape = render_with_tape(doc, points, width, height, softness, plans, tol)
    return backward(tape, upstream)
