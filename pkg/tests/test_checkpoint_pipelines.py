import json
import os

import pytest

from vecfit.checkpoint_manager import CheckpointManager, partial_path
from vecfit.items import LossReport
from vecfit.motion import init_params, load_params
from vecfit.pipelines import REPORT_FIELDS, LossLogPipeline


def test_partial_path():
    assert partial_path('out/fit.json') == 'out/fit.partial.json'
    assert partial_path('out/fit') == 'out/fit.partial.json'


def test_clean_exit_writes_checkpoint(tmp_path, triangle_doc):
    path = str(tmp_path / 'runs' / 'fit.json')
    params = init_params(triangle_doc, keyframes=2, resolution=32)
    with CheckpointManager(path) as checkpoint:
        checkpoint.update(params)
    assert checkpoint.written == path
    assert load_params(path).keyframes == 2


def test_failure_writes_partial_checkpoint(tmp_path, triangle_doc):
    path = str(tmp_path / 'fit.json')
    params = init_params(triangle_doc, keyframes=2, resolution=32)
    with pytest.raises(RuntimeError):
        with CheckpointManager(path) as checkpoint:
            checkpoint.update(params)
            raise RuntimeError('interrompido')
    assert not os.path.exists(path)
    assert checkpoint.written == partial_path(path)
    assert load_params(partial_path(path)).keyframes == 2


def test_nothing_written_without_params(tmp_path):
    path = str(tmp_path / 'fit.json')
    with CheckpointManager(path) as checkpoint:
        pass
    assert checkpoint.written is None
    assert os.listdir(tmp_path) == []


def _report(iteration):
    return LossReport(iteration=iteration, active_keyframes=[0, 1], mse=0.5, total=1.5,
                      grad_norms={'total': 2.0})


def test_loss_log_writes_json_lines(tmp_path):
    path = str(tmp_path / 'loss.jsonl')
    pipeline = LossLogPipeline(path)
    pipeline.open_fit('bola')
    for it in range(3):
        assert pipeline.process_report(_report(it)).iteration == it
    pipeline.close_fit('bola')
    lines = [json.loads(line) for line in open(path, encoding='utf-8')]
    assert [line['iteration'] for line in lines] == [0, 1, 2]
    assert set(lines[0]) == set(REPORT_FIELDS)
    assert lines[0]['active_keyframes'] == [0, 1]


def test_loss_log_with_gradient_norms(tmp_path):
    path = str(tmp_path / 'loss.jsonl')
    pipeline = LossLogPipeline(path, extra_fields=True)
    pipeline.open_fit('bola')
    pipeline.process_report(_report(0))
    pipeline.close_fit('bola')
    line = json.loads(open(path, encoding='utf-8').readline())
    assert line['grad_norms'] == {'total': 2.0}
    assert line['softness'] == 0.7


def test_loss_log_without_file_only_counts():
    pipeline = LossLogPipeline()
    pipeline.open_fit('bola')
    pipeline.process_report(_report(0))
    pipeline.close_fit('bola')
    assert pipeline.count == 1
