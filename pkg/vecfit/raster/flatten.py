from dataclasses import dataclass

import numpy as np

from vecfit import settings

MAX_DEPTH = 16


def bernstein(u):
    """Pesos de Bernstein (n, 4) de uma cúbica nos parâmetros u."""
    u = np.asarray(u, dtype=float)
    mu = 1.0 - u
    return np.stack([mu ** 3, 3.0 * mu * mu * u, 3.0 * mu * u * u, u ** 3], axis=-1)


def _flatness(ctrl):
    p0, p1, p2, p3 = ctrl
    chord = p3 - p0
    length = np.hypot(chord[0], chord[1])
    if length < 1e-12:
        return max(np.hypot(*(p1 - p0)), np.hypot(*(p2 - p0)))
    d1 = abs(chord[0] * (p1[1] - p0[1]) - chord[1] * (p1[0] - p0[0])) / length
    d2 = abs(chord[0] * (p2[1] - p0[1]) - chord[1] * (p2[0] - p0[0])) / length
    return max(d1, d2)


def _split(ctrl):
    p0, p1, p2, p3 = ctrl
    p01 = (p0 + p1) / 2.0
    p12 = (p1 + p2) / 2.0
    p23 = (p2 + p3) / 2.0
    p012 = (p01 + p12) / 2.0
    p123 = (p12 + p23) / 2.0
    mid = (p012 + p123) / 2.0
    return np.array([p0, p01, p012, mid]), np.array([mid, p123, p23, p3])


def flatten_cubic(ctrl, tol=settings.FLATTEN_TOL):
    """Parâmetros u do achatamento por subdivisão de de Casteljau.

    Inclui 0 e 1; uma cúbica com os quatro pontos iguais vira um único vértice.
    """
    ctrl = np.asarray(ctrl, dtype=float)
    if np.all(ctrl == ctrl[0]):
        return np.zeros(1)
    us = [0.0]
    stack = [(ctrl, 0.0, 1.0, 0)]
    while stack:
        piece, u0, u1, depth = stack.pop()
        if depth >= MAX_DEPTH or _flatness(piece) <= tol:
            us.append(u1)
            continue
        left, right = _split(piece)
        um = (u0 + u1) / 2.0
        # direita primeiro: a pilha devolve a esquerda antes
        stack.append((right, um, u1, depth + 1))
        stack.append((left, u0, um, depth + 1))
    return np.array(us)


@dataclass
class FlattenedOutline:
    """Polilinha de um caminho com os pesos lineares de cada vértice.

    vertices[v] = Σ weights[v, k] · points[indices[v, k]]; loops guarda o
    intervalo de vértices de cada subcaminho fechado.
    """

    vertices: np.ndarray
    indices: np.ndarray
    weights: np.ndarray
    loops: list
    plan: list

    def edges(self):
        """Pares (início, fim) de vértices de todas as arestas fechadas."""
        starts = []
        ends = []
        for lo, hi in self.loops:
            idx = np.arange(lo, hi)
            starts.append(idx)
            ends.append(np.roll(idx, -1))
        if not starts:
            return np.zeros(0, dtype=int), np.zeros(0, dtype=int)
        return np.concatenate(starts), np.concatenate(ends)


def make_plan(path, points, tol=settings.FLATTEN_TOL):
    """Amostras u (sem o 1 final) de cada segmento, na geometria dada."""
    plan = []
    for ctrl in path.segments(points):
        us = flatten_cubic(ctrl, tol)
        plan.append(us[:-1] if len(us) > 1 else us)
    return plan


def flatten(path, points=None, tol=settings.FLATTEN_TOL, plan=None):
    """Achata um caminho (com pontos deformados opcionais) em polilinhas fechadas."""
    points = path.points if points is None else np.asarray(points, dtype=float)
    if plan is None:
        plan = make_plan(path, points, tol)
    segment_indices = path.segment_indices()

    vertices, indices, weights, loops = [], [], [], []
    seg = 0
    count = 0
    for size in path.subpath_sizes:
        start = count
        for _ in range(size):
            us = plan[seg]
            w = bernstein(us)
            idx = np.broadcast_to(segment_indices[seg], w.shape)
            vertices.append(w @ points[segment_indices[seg]])
            indices.append(idx)
            weights.append(w)
            count += len(us)
            seg += 1
        loops.append((start, count))

    if not vertices:
        empty = np.zeros((0, 2))
        return FlattenedOutline(empty, np.zeros((0, 4), dtype=int), np.zeros((0, 4)), [], plan)
    return FlattenedOutline(
        vertices=np.concatenate(vertices, axis=0),
        indices=np.concatenate(indices, axis=0).astype(int),
        weights=np.concatenate(weights, axis=0),
        loops=loops,
        plan=plan,
    )


def outline_area(path, points=None, tol=settings.FLATTEN_TOL):
    """Área preenchida pela fórmula do laço sobre o contorno achatado (regra nonzero)."""
    outline = flatten(path, points, tol)
    total = 0.0
    for lo, hi in outline.loops:
        v = outline.vertices[lo:hi]
        if len(v) < 3:
            continue
        x, y = v[:, 0], v[:, 1]
        total += 0.5 * float(np.dot(x, np.roll(y, -1)) - np.dot(y, np.roll(x, -1)))
    return abs(total)
