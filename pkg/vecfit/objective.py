"""Termos de perda (MSE suavizado, coerência espacial, G¹ e SDF) e o total ponderado."""
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

import numpy as np

from vecfit import settings
from vecfit.exceptions import DimensionMismatch
from vecfit.items import LossReport, LossWeights
from vecfit.log import get_logger
from vecfit.motion import ParamGrads, deform_backward, deform_keyframe
from vecfit.raster.image_ops import gaussian_blur, gaussian_blur_adjoint, sample_sdf
from vecfit.raster.render import backward, render_with_tape

logger = get_logger(__name__)

TERMS = ('mse', 'spatial', 'g1', 'sdf')
MIN_TANGENT = 1e-8


@dataclass
class AdjacencySet:
    pairs: np.ndarray
    weights: np.ndarray


@dataclass
class SmoothJointSet:
    """Trincas (alça de entrada, âncora, alça de saída) em índices globais."""

    joints: np.ndarray

    def __len__(self):
        return len(self.joints)


@dataclass
class LossPart:
    value: float
    grads: ParamGrads


def _subpath_ranges(doc):
    offsets = doc.path_offsets()
    for i, path in enumerate(doc.paths):
        for start, size in zip(path.subpath_offsets(), path.subpath_sizes):
            yield int(offsets[i] + start), 3 * size


def build_adjacency(doc, sigma_fraction=settings.SPATIAL_SIGMA_FRACTION):
    """Pares consecutivos (cíclicos) dentro de cada subcaminho, com w = exp(−(d/σ_s)²)."""
    sigma = sigma_fraction * doc.canvas_width
    pairs = []
    for start, n in _subpath_ranges(doc):
        for local in range(n):
            a, b = start + local, start + (local + 1) % n
            if a != b:
                pairs.append((a, b))
    pairs = np.array(pairs, dtype=int).reshape(-1, 2)
    points = np.concatenate([p.points for p in doc.paths], axis=0) if doc.paths else np.zeros((0, 2))
    if len(pairs) == 0:
        return AdjacencySet(pairs, np.zeros(0))
    dist = np.linalg.norm(points[pairs[:, 0]] - points[pairs[:, 1]], axis=1)
    return AdjacencySet(pairs, np.exp(-(dist / sigma) ** 2))


def build_smooth_joints(doc, max_angle_deg=settings.G1_ANGLE_DEG):
    """Juntas cuja curva de tangente em repouso é ≤ max_angle_deg."""
    points = np.concatenate([p.points for p in doc.paths], axis=0) if doc.paths else np.zeros((0, 2))
    limit = np.cos(np.radians(max_angle_deg))
    joints = []
    for start, n in _subpath_ranges(doc):
        for j in range(0, n, 3):
            prev_h = start + (j - 1) % n
            anchor = start + j
            next_h = start + (j + 1) % n
            u = points[anchor] - points[prev_h]
            v = points[next_h] - points[anchor]
            nu, nv = np.linalg.norm(u), np.linalg.norm(v)
            if nu < MIN_TANGENT or nv < MIN_TANGENT:
                continue
            if np.dot(u, v) / (nu * nv) >= limit - 1e-12:
                joints.append((prev_h, anchor, next_h))
    return SmoothJointSet(np.array(joints, dtype=int).reshape(-1, 3))


def _frame(image):
    return image.rgb if hasattr(image, 'rgb') else np.asarray(image, dtype=float)


def mse_frame(rendered, target_blurred, n_active):
    """Termo de um quadro: valor (já dividido por n_active) e imagem de gradiente."""
    diff = gaussian_blur(_frame(rendered)) - target_blurred
    size = diff.size
    value = float((diff ** 2).sum()) / size / n_active
    upstream = gaussian_blur_adjoint(diff) * (2.0 / size / n_active)
    return value, upstream


def loss_mse(rendered, targets):
    """(1/K)·Σ_k ‖G(R_k) − G(I_k)‖² / (H·W·3) e os gradientes por quadro."""
    if len(rendered) != len(targets):
        raise DimensionMismatch('Número de quadros diferente', expected=len(targets), actual=len(rendered))
    n = len(rendered)
    if n == 0:
        return 0.0, []
    total = 0.0
    grads = []
    for r, t in zip(rendered, targets):
        r, t = _frame(r), _frame(t)
        if r.shape != t.shape:
            raise DimensionMismatch('Quadros com dimensões diferentes', expected=list(t.shape), actual=list(r.shape))
        value, upstream = mse_frame(r, gaussian_blur(t), n)
        total += value
        grads.append(upstream)
    return total, grads


def loss_spatial(offsets, adj):
    """(1/K)·Σ_k Σ_(i,j) w_ij·‖Δ_i − Δ_j‖²; gradiente com a forma de offsets."""
    offsets = np.asarray(offsets, dtype=float)
    grad = np.zeros_like(offsets)
    if offsets.shape[0] == 0 or len(adj.pairs) == 0:
        return 0.0, grad
    k = offsets.shape[0]
    i, j = adj.pairs[:, 0], adj.pairs[:, 1]
    diff = offsets[:, i] - offsets[:, j]
    w = adj.weights[None, :, None]
    value = float((w * diff ** 2).sum()) / k
    g = 2.0 * w * diff / k
    for kk in range(k):
        np.add.at(grad[kk], i, g[kk])
        np.add.at(grad[kk], j, -g[kk])
    return value, grad


def incoherence(offsets, adj):
    """Energia espacial sem peso λ, média sobre keyframes."""
    return loss_spatial(offsets, adj)[0]


def g1_frame(points, joints, scale):
    """Σ_j (1 − cos) · scale num keyframe e o gradiente nos pontos."""
    grad = np.zeros_like(points)
    if len(joints) == 0:
        return 0.0, grad
    p, a, n = joints.joints[:, 0], joints.joints[:, 1], joints.joints[:, 2]
    u = points[a] - points[p]
    v = points[n] - points[a]
    nu = np.linalg.norm(u, axis=1)
    nv = np.linalg.norm(v, axis=1)
    ok = (nu >= MIN_TANGENT) & (nv >= MIN_TANGENT)
    nu_s = np.where(ok, nu, 1.0)
    nv_s = np.where(ok, nv, 1.0)
    cos = np.where(ok, (u * v).sum(axis=1) / (nu_s * nv_s), 1.0)
    value = float((1.0 - cos).sum()) * scale

    d_cos_u = v / (nu_s * nv_s)[:, None] - cos[:, None] * u / (nu_s ** 2)[:, None]
    d_cos_v = u / (nu_s * nv_s)[:, None] - cos[:, None] * v / (nv_s ** 2)[:, None]
    gu = np.where(ok[:, None], -d_cos_u * scale, 0.0)
    gv = np.where(ok[:, None], -d_cos_v * scale, 0.0)
    np.add.at(grad, a, gu - gv)
    np.add.at(grad, p, -gu)
    np.add.at(grad, n, gv)
    return value, grad


def loss_g1(points, joints):
    """Média sobre keyframes e juntas suaves de 1 − cos(a − c⁻, c⁺ − a)."""
    points = np.asarray(points, dtype=float)
    grad = np.zeros_like(points)
    k = points.shape[0]
    if k == 0 or len(joints) == 0:
        return 0.0, grad
    scale = 1.0 / (k * len(joints))
    total = 0.0
    for kk in range(k):
        value, grad[kk] = g1_frame(points[kk], joints, scale)
        total += value
    return total, grad


def sdf_frame(points, sdf, tau, scale):
    grad = np.zeros_like(points)
    if len(points) == 0:
        return 0.0, grad
    values, field_grad = sample_sdf(sdf, points)
    excess = np.maximum(0.0, values - tau)
    value = float((excess ** 2).sum()) * scale
    grad = (2.0 * excess * scale)[:, None] * field_grad
    return value, grad


def loss_sdf(points, sdfs, tau=settings.SDF_TAU):
    """(1/K)·Σ_k (1/|P|)·Σ_i max(0, D_k(q_i) − τ)²."""
    points = np.asarray(points, dtype=float)
    grad = np.zeros_like(points)
    k = points.shape[0]
    if len(sdfs) != k:
        raise DimensionMismatch('Número de mapas SDF diferente', expected=k, actual=len(sdfs))
    if k == 0 or points.shape[1] == 0:
        return 0.0, grad
    scale = 1.0 / (k * points.shape[1])
    total = 0.0
    for kk in range(k):
        value, grad[kk] = sdf_frame(points[kk], sdfs[kk], tau, scale)
        total += value
    return total, grad


def total_loss(parts, weights):
    """λ_mse·L_mse + λ_spatial·L_spatial + λ_g1·L_G1 + λ_sdf·L_SDF e o gradiente combinado."""
    lambdas = {
        'mse': weights.lambda_mse,
        'spatial': weights.lambda_spatial,
        'g1': weights.lambda_g1,
        'sdf': weights.lambda_sdf,
    }
    total = 0.0
    grads = None
    for name in TERMS:
        part = parts.get(name)
        if part is None:
            continue
        total += lambdas[name] * part.value
        if part.grads is not None:
            scaled = part.grads.scaled(lambdas[name])
            grads = scaled if grads is None else grads + scaled
    return total, grads


class Objective:
    """Avalia a perda total e o gradiente sobre MotionParams para os keyframes ativos.

    Os alvos (limpos), seus borrões e os mapas SDF são calculados uma vez
    pelo chamador; cada keyframe é renderizado e retropropagado
    independentemente e as parcelas são somadas na ordem dos keyframes.
    """

    def __init__(self, doc, layout, targets, sdfs, weights=None, sdf_tau=settings.SDF_TAU,
                 flatten_tol=settings.FLATTEN_TOL, threads=1):
        self.doc = doc
        self.layout = layout
        self.targets = [_frame(t) for t in targets]
        self.blurred = [gaussian_blur(t) for t in self.targets]
        self.sdfs = list(sdfs)
        self.weights = weights or LossWeights()
        self.sdf_tau = sdf_tau
        self.flatten_tol = flatten_tol
        self.threads = max(1, int(threads or 1))
        self.adjacency = build_adjacency(doc)
        self.joints = build_smooth_joints(doc)
        self.plans = None

    @property
    def height(self):
        return self.targets[0].shape[0]

    @property
    def width(self):
        return self.targets[0].shape[1]

    def render_keyframe(self, params, k, softness, strict=False):
        points, _ = deform_keyframe(params, self.layout, k, strict=strict)
        frame, _ = render_with_tape(self.doc, self.layout.split(points), self.width, self.height,
                                    softness, self._plans(k), self.flatten_tol)
        return frame

    def _plans(self, k):
        return self.plans.get(k) if self.plans else None

    def freeze_plans(self, params, active, softness=settings.SOFTNESS):
        """Fixa o achatamento atual de cada keyframe (mesma topologia em avaliações seguintes)."""
        self.plans = {}
        for k in active:
            points, _ = deform_keyframe(params, self.layout, k, strict=False)
            _, tape = render_with_tape(self.doc, self.layout.split(points), self.width, self.height,
                                       softness, None, self.flatten_tol)
            self.plans[k] = tape.plans

    def _keyframe(self, params, k, n_active, softness, frozen):
        points, caches = deform_keyframe(params, self.layout, k, strict=False)
        per_path = self.layout.split(points)
        frame, tape = render_with_tape(self.doc, per_path, self.width, self.height, softness,
                                       self._plans(k), self.flatten_tol)
        mse, upstream = mse_frame(frame.rgb, self.blurred[k], n_active)

        n_joints = len(self.joints)
        g1_scale = 1.0 / (n_active * n_joints) if n_joints else 0.0
        g1, g1_points = g1_frame(points, self.joints, g1_scale)
        n_points = max(1, len(points))
        sdf, sdf_points = sdf_frame(points, self.sdfs[k], self.sdf_tau, 1.0 / (n_active * n_points))

        result = {'k': k, 'mse': mse, 'g1': g1, 'sdf': sdf}
        if k in frozen:
            return result
        mse_points = np.concatenate(backward(tape, upstream), axis=0) if per_path else points * 0.0
        for name, g_points in (('mse', mse_points), ('g1', g1_points), ('sdf', sdf_points)):
            result[name + '_grad'] = deform_backward(params, self.layout, k, caches, g_points)
        return result

    def evaluate(self, params, active, softness=settings.SOFTNESS, frozen=(0,)):
        """(LossReport, ParamGrads) da perda total nos keyframes ativos."""
        active = sorted(int(k) for k in active)
        n_active = len(active)
        frozen = set(frozen)
        if self.threads > 1 and n_active > 1:
            with ThreadPoolExecutor(max_workers=self.threads) as pool:
                results = list(pool.map(lambda k: self._keyframe(params, k, n_active, softness, frozen), active))
        else:
            results = [self._keyframe(params, k, n_active, softness, frozen) for k in active]

        parts = {name: LossPart(0.0, ParamGrads.zeros(params)) for name in ('mse', 'g1', 'sdf')}
        for result in results:
            k = result['k']
            for name in ('mse', 'g1', 'sdf'):
                part = parts[name]
                part.value += result[name]
                if name + '_grad' in result:
                    g_h, g_c, g_off = result[name + '_grad']
                    part.grads.homographies[k] += g_h
                    part.grads.centers += g_c
                    part.grads.offsets[k] += g_off

        spatial_value, spatial_grad = loss_spatial(params.offsets[active], self.adjacency)
        spatial = ParamGrads.zeros(params)
        spatial.offsets[active] = spatial_grad
        for k in frozen:
            if k < params.keyframes:
                spatial.offsets[k] = 0.0
        parts['spatial'] = LossPart(spatial_value, spatial)

        total, grads = total_loss(parts, self.weights)
        report = LossReport(
            active_keyframes=active,
            mse=parts['mse'].value,
            spatial=parts['spatial'].value,
            g1=parts['g1'].value,
            sdf=parts['sdf'].value,
            total=total,
            grad_norms={name: parts[name].grads.norm() for name in TERMS},
            softness=softness,
        )
        report.grad_norms['total'] = grads.norm()
        return report, grads
