"""Laço de otimização: ativação progressiva, inicialização, Adam e melhor iterado."""
import os
import time
from dataclasses import dataclass, field

import numpy as np

from vecfit import settings
from vecfit.exceptions import ConfigError, DimensionMismatch
from vecfit.fitter.adam import AdamState, adam_step
from vecfit.fitter.initializers import (
    COPY_FORWARD,
    GROUP_PROBE,
    PATH_PROBE,
    InitContext,
    candidate_select,
    get_initializer,
    group_pose,
    shifted_homography,
)
from vecfit.fitter.schedule import progressive_schedule
from vecfit.items import FitConfig
from vecfit.layers import classify_pixels, group_masks_for_labels, path_masks
from vecfit.log import get_logger
from vecfit.motion import MotionLayout, init_params, offsets_for_pose
from vecfit.objective import Objective
from vecfit.palette import assign_palette, recolor
from vecfit.raster.frames_io import resize_frame
from vecfit.raster.image_ops import clean_target, distance_transform, foreground_mask
from vecfit.raster.render import RasterFrame

logger = get_logger(__name__)


@dataclass
class FitResult:
    params: object
    final_params: object
    history: list = field(default_factory=list)
    best_loss: float = None
    best_iteration: int = None
    seconds: float = 0.0
    recolor_map: object = None
    doc: object = None

    @property
    def iterations_per_second(self):
        return len(self.history) / self.seconds if self.seconds > 0 else None


def thread_count(config=None):
    """Threads do ajuste: config.threads, depois VECFIT_THREADS, depois os núcleos disponíveis."""
    if config is not None and config.threads:
        return int(config.threads)
    value = os.environ.get(settings.THREADS_ENV)
    if value is None or value == '':
        return os.cpu_count() or 1
    try:
        threads = int(value)
    except ValueError:
        threads = 0
    if threads < 1:
        raise ConfigError(f"{settings.THREADS_ENV} deve ser um inteiro positivo, recebido '{value}'",
                          field=settings.THREADS_ENV)
    return threads


def select_keyframes(n_frames, keyframes):
    """Índices uniformes sobre a sequência, com o quadro 0 sempre incluído."""
    if n_frames < keyframes:
        raise ConfigError(f'{n_frames} quadros para {keyframes} keyframes', field='keyframes')
    if keyframes == 1:
        return [0]
    return [int(i) for i in np.round(np.linspace(0, n_frames - 1, keyframes))]


def activate_keyframe(params, k_new, state=None):
    """Copia homografias e offsets de k_new − 1 para k_new; zera os momentos de Adam."""
    params.homographies[k_new] = params.homographies[k_new - 1]
    params.offsets[k_new] = params.offsets[k_new - 1]
    if state is not None:
        state.reset_keyframe(k_new)
    return params


@dataclass
class PreparedTargets:
    frames: list
    masks: list
    sdfs: list
    labels: list


def prepare_targets(frames, width, height, white_thresh, recolor_map=None):
    """Alvos limpos, máscaras, mapas SDF e rótulos de paleta por keyframe (uma vez)."""
    cleaned, masks, sdfs, labels = [], [], [], []
    for frame in frames:
        if not isinstance(frame, RasterFrame):
            frame = RasterFrame(frame)
        frame = resize_frame(frame, width, height)
        mask = foreground_mask(frame, white_thresh)
        target = clean_target(frame, mask)
        cleaned.append(target.rgb)
        masks.append(mask)
        sdfs.append(distance_transform(mask))
        labels.append(classify_pixels(target, recolor_map, white_thresh) if recolor_map else None)
    return PreparedTargets(cleaned, masks, sdfs, labels)


class Fitter:
    """Ajusta MotionParams de um documento a uma sequência de quadros-alvo."""

    def __init__(self, doc, frames, config=None, initializer=None, pipeline=None, checkpoint=None,
                 resume=None):
        self.config = config or FitConfig()
        self.source_doc = doc
        self.initializer = get_initializer(initializer if initializer is not None else self.config.initializer)
        self.pipeline = pipeline
        self.checkpoint = checkpoint
        self.resume = resume
        self.threads = thread_count(self.config)

        if self.config.recolor:
            self.recolor_map = assign_palette(doc, self.config.seed, self.config.exclude_fills)
            self.doc = recolor(doc, self.recolor_map)
        else:
            self.recolor_map = None
            self.doc = doc

        self.params = init_params(self.doc, self.config.keyframes, self.config.resolution)
        if resume is not None:
            if resume.keyframes != self.config.keyframes:
                raise DimensionMismatch(
                    f'Checkpoint tem {resume.keyframes} keyframes, a configuração pede {self.config.keyframes}',
                    expected=self.config.keyframes,
                    actual=resume.keyframes,
                )
            self.params = resume.copy()
        self.layout = MotionLayout.from_document(self.doc, self.params.pixels_per_unit)
        self.params.check_layout(self.layout, len(self.doc.groups))
        self.width, self.height = self.params.size

        chosen = select_keyframes(len(frames), self.config.keyframes)
        self.targets = prepare_targets([frames[i] for i in chosen], self.width, self.height,
                                       self.config.white_thresh, self.recolor_map)
        self.objective = Objective(self.doc, self.layout, self.targets.frames, self.targets.sdfs,
                                   self.config.weights, self.config.sdf_tau, self.config.flatten_tol,
                                   self.threads)
        self.state = AdamState.zeros(self.params)

    def _context(self, k):
        labels = self.targets.labels[k]
        group_masks = path_mask_list = None
        if labels is not None:
            group_masks = group_masks_for_labels(labels, self.doc)
            path_mask_list = path_masks(labels, self.doc.n_paths)
        return InitContext(
            doc=self.doc,
            layout=self.layout,
            params=self.params,
            k=k,
            target=self.targets.frames[k],
            width=self.width,
            height=self.height,
            group_masks=group_masks,
            path_masks=path_mask_list,
            softness=self.config.softness,
            white_thresh=self.config.white_thresh,
            radius=int(round(self.config.probe_radius_fraction * self.config.resolution)),
            stride=self.config.probe_stride,
        )

    def initialize_keyframe(self, k):
        """Roda o inicializador e escolhe, por caminho, a melhor pose candidata."""
        ctx = self._context(k)
        proposal = self.initializer(ctx)
        if not proposal.group_shifts and not proposal.path_shifts:
            return
        points = ctx.current_points()
        path_mask_list = ctx.path_masks

        for g, group in enumerate(self.doc.groups):
            indices = list(group.path_indices)
            h_copy = self.params.homographies[k, g].copy()
            dx, dy = proposal.group_shifts.get(g, (0, 0))
            h_probe = shifted_homography(h_copy, dx, dy)
            probe_poses = group_pose(ctx, g, h_probe, indices)

            choices = {}
            for i in indices:
                candidates = [(COPY_FORWARD, points[i])]
                if (dx, dy) != (0, 0):
                    candidates.append((GROUP_PROBE, probe_poses[i]))
                pdx, pdy = proposal.path_shifts.get(i, (0, 0))
                if (pdx, pdy) != (0, 0):
                    candidates.append((PATH_PROBE, points[i] + np.array([pdx, pdy], dtype=float)))
                mask = path_mask_list[i] if path_mask_list is not None else None
                best = candidate_select(i, [c[1] for c in candidates], points, self.doc, ctx.target, mask,
                                        self.width, self.height, ctx.softness, ctx.white_thresh)
                choices[i] = candidates[best]

            votes = sum(1 for name, _ in choices.values() if name == GROUP_PROBE)
            h_final = h_probe if (dx, dy) != (0, 0) and 2 * votes >= len(indices) else h_copy
            self.params.homographies[k, g] = h_final
            matrix = self.params.matrix(k, g)
            for i in indices:
                name, pose = choices[i]
                if name == COPY_FORWARD and h_final is h_copy:
                    continue
                sl = self.layout.path_slice(i)
                self.params.offsets[k, sl] = offsets_for_pose(matrix, self.layout.rest[sl], pose)
            logger.info(f"Keyframe {k}, grupo '{group.id}': "
                        f"{votes}/{len(indices)} caminhos escolheram a sonda {(dx, dy)}")

    def activate(self, k):
        activate_keyframe(self.params, k, self.state)
        logger.info(f'Keyframe {k} ativado (cópia do keyframe {k - 1}).')
        self.initialize_keyframe(k)

    def _step(self, active):
        return dict(
            active=active,
            lr_homography=self.config.lr_homography,
            lr_offsets=self.config.lr_offsets,
            beta1=self.config.adam_beta1,
            beta2=self.config.adam_beta2,
            eps=self.config.adam_eps,
        )

    def run(self):
        config = self.config
        plan = progressive_schedule(config)
        if self.resume is not None:
            plan.activations = {}
        history = []
        best_params, best_loss, best_iteration = None, None, None
        regime = None
        started = time.perf_counter()

        if self.checkpoint is not None:
            self.checkpoint.update(self.params)
        if self.pipeline is not None:
            self.pipeline.open_fit(self.doc.groups[0].id if self.doc.groups else 'vazio')

        try:
            for it in range(plan.iterations):
                for k in plan.activations.get(it, []):
                    self.activate(k)
                active = plan.active_at(it) if self.resume is None else list(range(self.params.keyframes))
                softness = plan.softness_at(it, config.softness, config.final_softness)

                report, grads = self.objective.evaluate(self.params, active, softness)
                report.iteration = it
                history.append(report)
                if self.pipeline is not None:
                    self.pipeline.process_report(report)

                if softness != regime:
                    regime = softness
                    best_params, best_loss, best_iteration = None, None, None
                joint = it >= plan.last_activation
                if joint and (it % config.checkpoint_every == 0 or it == plan.iterations - 1):
                    if best_loss is None or report.total < best_loss:
                        best_params, best_loss, best_iteration = self.params.copy(), report.total, it

                adam_step(self.params, grads, self.state, **self._step(active))
                if self.checkpoint is not None:
                    self.checkpoint.update(self.params)
        finally:
            if self.pipeline is not None:
                self.pipeline.close_fit(self.doc.groups[0].id if self.doc.groups else 'vazio')

        final = self.params
        chosen = final
        if plan.iterations > 0:
            active = list(range(final.keyframes))
            softness = plan.softness_at(plan.iterations - 1, config.softness, config.final_softness)
            final_report, _ = self.objective.evaluate(final, active, softness)
            if best_params is not None and best_loss < final_report.total:
                chosen = best_params
                logger.info(f'Usando o melhor iterado ({best_iteration}, perda {best_loss:.6g}).')
            else:
                best_loss, best_iteration = final_report.total, plan.iterations

        seconds = time.perf_counter() - started
        chosen.fit = {'iterations': len(history), 'seconds': seconds}
        if self.checkpoint is not None:
            self.checkpoint.update(chosen)
        logger.info(f'Ajuste concluído: {len(history)} iterações em {seconds:.1f}s.')
        return FitResult(
            params=chosen,
            final_params=final,
            history=history,
            best_loss=best_loss,
            best_iteration=best_iteration,
            seconds=seconds,
            recolor_map=self.recolor_map,
            doc=self.doc,
        )


def fit(doc, frames, config=None, initializer=None, pipeline=None, checkpoint=None, resume=None):
    """Ajusta o documento aos quadros e devolve um FitResult."""
    return Fitter(doc, frames, config, initializer, pipeline, checkpoint, resume).run()
