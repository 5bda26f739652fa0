import math
from dataclasses import dataclass, field

from vecfit.exceptions import ConfigError


@dataclass
class SchedulePlan:
    """Plano de iterações: quando cada keyframe é ativado.

    activations mapeia iteração -> lista de keyframes ativados nela; o
    keyframe 0 está sempre ativo (e congelado).
    """

    iterations: int
    keyframes: int
    activations: dict = field(default_factory=dict)
    sharpen_from: int = None

    def activation_iteration(self, k):
        if k == 0:
            return 0
        for iteration, frames in self.activations.items():
            if k in frames:
                return iteration
        return None

    def active_at(self, iteration):
        active = [0]
        for start, frames in self.activations.items():
            if start <= iteration:
                active.extend(frames)
        return sorted(set(active))

    @property
    def last_activation(self):
        return max(self.activations) if self.activations else 0

    @property
    def joint_iterations(self):
        return self.iterations - self.last_activation if self.iterations else 0

    def events(self):
        return sorted(self.activations.items())

    def softness_at(self, iteration, softness, final_softness):
        if self.sharpen_from is not None and iteration >= self.sharpen_from:
            return final_softness
        return softness


def progressive_schedule(config):
    """Keyframes {0, 1} ativos na iteração 0; o keyframe k entra em (k − 1)·cadência."""
    iterations = int(config.iterations)
    keyframes = int(config.keyframes)
    cadence = int(config.activation_cadence)
    if iterations < 0:
        raise ConfigError('iterations não pode ser negativo', field='iterations')
    if keyframes < 1:
        raise ConfigError('keyframes deve ser ≥ 1', field='keyframes')
    if iterations == 0:
        return SchedulePlan(iterations=0, keyframes=keyframes)

    if not getattr(config, 'progressive', True):
        activations = {0: list(range(1, keyframes))} if keyframes > 1 else {}
    else:
        if cadence < 1:
            raise ConfigError('activation_cadence deve ser ≥ 1', field='activation_cadence')
        if keyframes * cadence > iterations:
            raise ConfigError(
                f'{iterations} iterações não bastam para ativar {keyframes} keyframes '
                f'a cada {cadence} iterações',
                field='iterations',
            )
        activations = {(k - 1) * cadence: [k] for k in range(1, keyframes)}

    sharpen = int(math.ceil(getattr(config, 'sharpen_fraction', 0.0) * iterations))
    return SchedulePlan(
        iterations=iterations,
        keyframes=keyframes,
        activations=activations,
        sharpen_from=iterations - sharpen if sharpen > 0 else None,
    )
