import json

import pytest

from vecfit.exceptions import ConfigError
from vecfit.item_loaders.config_loaders import (
    load_fit_config,
    load_synthetic_spec,
    load_weights,
    read_fit_config,
    read_json,
    read_synthetic_spec,
)
from vecfit.items import FitConfig, GroupProgram, LossWeights


def test_empty_config_is_the_default():
    assert load_fit_config({}) == FitConfig()
    assert load_fit_config(None) == FitConfig()


def test_overrides_keep_other_defaults():
    config = load_fit_config({'iterations': 10, 'resolution': 64.0, 'weights': {'lambda_mse': 5},
                              'exclude_fills': ['#ffffff', 'black'], 'recolor': False})
    assert config.iterations == 10
    assert config.resolution == 64 and isinstance(config.resolution, int)
    assert config.weights == LossWeights(lambda_mse=5.0)
    assert config.exclude_fills == ['#ffffff', 'black']
    assert config.recolor is False
    assert config.keyframes == FitConfig().keyframes


@pytest.mark.parametrize("data,field", [
    ({'iterationz': 10}, 'iterationz'),
    ({'iterations': -1}, 'iterations'),
    ({'resolution': 1.5}, 'resolution'),
    ({'keyframes': True}, 'keyframes'),
    ({'recolor': 'yes'}, 'recolor'),
    ({'initializer': 'magic'}, 'initializer'),
    ({'white_thresh': 1.5}, 'white_thresh'),
    ({'adam_beta1': 1.0}, 'adam_beta1'),
    ({'softness': '0.7'}, 'softness'),
    ({'exclude_fills': ['url(#g)']}, 'exclude_fills'),
    ({'weights': {'lambda_mse': -1}}, 'weights.lambda_mse'),
    ({'weights': {'lambda_x': 1}}, 'weights.lambda_x'),
    ({'weights': [1, 2]}, 'weights'),
])
def test_invalid_config_names_the_field(data, field):
    with pytest.raises(ConfigError) as info:
        load_fit_config(data)
    assert info.value.field == field


def test_weights_accept_zero():
    assert load_weights({'lambda_sdf': 0}).lambda_sdf == 0.0


def test_synthetic_spec():
    spec = load_synthetic_spec({
        'resolution': 64,
        'keyframes': 6,
        'noise': 0.01,
        'groups': [{'group_id': 'ball', 'tx': 12, 'shape': 'sine'}],
        'paths': [{'path_index': 1, 'amplitude': 2}],
    })
    assert spec.resolution == 64 and spec.keyframes == 6
    assert spec.groups == [GroupProgram(group_id='ball', tx=12.0, shape='sine')]
    assert spec.paths[0].path_index == 1 and spec.paths[0].cycles == 1.0


@pytest.mark.parametrize("data,field", [
    ({'groups': [{'tx': 1}]}, 'groups.0.group_id'),
    ({'groups': [{'group_id': 'a', 'shape': 'zigzag'}]}, 'groups.0.shape'),
    ({'paths': [{'amplitude': 1}]}, 'paths.0.path_index'),
    ({'paths': [{'path_index': 0, 'cycles': 0}]}, 'paths.0.cycles'),
    ({'noise': -0.1}, 'noise'),
])
def test_invalid_synthetic_spec(data, field):
    with pytest.raises(ConfigError) as info:
        load_synthetic_spec(data)
    assert info.value.field == field


def test_read_json_errors(tmp_path):
    bad = tmp_path / 'bad.json'
    bad.write_text('{"iterations": ')
    with pytest.raises(ConfigError) as info:
        read_json(str(bad))
    assert info.value.field == 'config'
    with pytest.raises(ConfigError):
        read_json(str(tmp_path / 'missing.json'))


def test_read_files(tmp_path):
    config = tmp_path / 'config.json'
    config.write_text(json.dumps({'keyframes': 4}))
    assert read_fit_config(str(config)).keyframes == 4
    spec = tmp_path / 'spec.json'
    spec.write_text(json.dumps({'keyframes': 3, 'groups': [{'group_id': 'g'}]}))
    assert read_synthetic_spec(str(spec)).groups[0].group_id == 'g'
    spec.write_text('[')
    with pytest.raises(ConfigError) as info:
        read_synthetic_spec(str(spec))
    assert info.value.field == 'spec'
