from vecfit.harness.evaluate import eval_fit, iou, write_eval_report
from vecfit.harness.synth import synth_target, synthetic_params

__all__ = ['eval_fit', 'iou', 'write_eval_report', 'synth_target', 'synthetic_params']
