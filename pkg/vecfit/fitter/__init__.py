from vecfit.fitter.adam import AdamState, adam_step
from vecfit.fitter.engine import FitResult, Fitter, activate_keyframe, fit, select_keyframes, thread_count
from vecfit.fitter.initializers import (
    InitContext,
    NoInitializer,
    Proposal,
    TranslationProbeInitializer,
    candidate_select,
    get_initializer,
    probe_translation,
)
from vecfit.fitter.schedule import SchedulePlan, progressive_schedule

__all__ = [
    'AdamState', 'adam_step',
    'FitResult', 'Fitter', 'activate_keyframe', 'fit', 'select_keyframes', 'thread_count',
    'InitContext', 'NoInitializer', 'Proposal', 'TranslationProbeInitializer', 'candidate_select',
    'get_initializer', 'probe_translation',
    'SchedulePlan', 'progressive_schedule',
]
