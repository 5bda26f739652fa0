"""Adam com correção de viés sobre os blocos de MotionParams.

Homografias e centros usam lr_homography; offsets usam lr_offsets. Cada
keyframe tem seu próprio contador de passos, zerado (com os momentos) na
ativação; os centros compartilhados usam o contador global.
"""
from dataclasses import dataclass

import numpy as np

from vecfit import settings
from vecfit.exceptions import NonFiniteGradient
from vecfit.log import get_logger

logger = get_logger(__name__)


@dataclass
class AdamState:
    m_homographies: np.ndarray
    v_homographies: np.ndarray
    m_centers: np.ndarray
    v_centers: np.ndarray
    m_offsets: np.ndarray
    v_offsets: np.ndarray
    keyframe_steps: np.ndarray
    step: int = 0

    @classmethod
    def zeros(cls, params):
        return cls(
            m_homographies=np.zeros_like(params.homographies),
            v_homographies=np.zeros_like(params.homographies),
            m_centers=np.zeros_like(params.centers),
            v_centers=np.zeros_like(params.centers),
            m_offsets=np.zeros_like(params.offsets),
            v_offsets=np.zeros_like(params.offsets),
            keyframe_steps=np.zeros(params.keyframes, dtype=int),
        )

    def reset_keyframe(self, k):
        self.m_homographies[k] = 0.0
        self.v_homographies[k] = 0.0
        self.m_offsets[k] = 0.0
        self.v_offsets[k] = 0.0
        self.keyframe_steps[k] = 0


def _check_finite(block, grad):
    bad = np.argwhere(~np.isfinite(grad))
    if len(bad):
        index = [int(i) for i in bad[0]]
        logger.error(f'Gradiente não finito em {block}{index}')
        raise NonFiniteGradient(f'Gradiente não finito em {block}{index}', block=block, index=index)


def _update(theta, g, m, v, t, lr, beta1, beta2, eps):
    m *= beta1
    m += (1.0 - beta1) * g
    v *= beta2
    v += (1.0 - beta2) * (g * g)
    m_hat = m / (1.0 - beta1 ** t)
    v_hat = v / (1.0 - beta2 ** t)
    theta -= lr * m_hat / (np.sqrt(v_hat) + eps)


def adam_step(params, grads, state, active, lr_homography=settings.LR_HOMOGRAPHY,
              lr_offsets=settings.LR_OFFSETS, beta1=settings.ADAM_BETA1, beta2=settings.ADAM_BETA2,
              eps=settings.ADAM_EPS, frozen=(0,)):
    """Atualiza params e state no lugar; keyframes congelados ou inativos ficam intactos."""
    trainable = [int(k) for k in sorted(active) if k not in frozen]
    for k in trainable:
        _check_finite(f'homographies[{k}]', grads.homographies[k])
        _check_finite(f'offsets[{k}]', grads.offsets[k])
    _check_finite('centers', grads.centers)

    state.step += 1
    _update(params.centers, grads.centers, state.m_centers, state.v_centers, state.step,
            lr_homography, beta1, beta2, eps)
    for k in trainable:
        state.keyframe_steps[k] += 1
        t = int(state.keyframe_steps[k])
        _update(params.homographies[k], grads.homographies[k], state.m_homographies[k],
                state.v_homographies[k], t, lr_homography, beta1, beta2, eps)
        _update(params.offsets[k], grads.offsets[k], state.m_offsets[k], state.v_offsets[k], t,
                lr_offsets, beta1, beta2, eps)
    return params, state
