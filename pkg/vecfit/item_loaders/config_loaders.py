import json
from dataclasses import fields

from itemloaders import ItemLoader
from itemloaders.processors import Identity, MapCompose, TakeFirst

from vecfit.exceptions import ConfigError
from vecfit.items import FitConfig, GroupProgram, LossWeights, OffsetProgram, SyntheticSpec
from vecfit.log import get_logger
from vecfit.svg_core.colors import parse_color

logger = get_logger(__name__)


def _number(value):
    if isinstance(value, bool) or not isinstance(value, (int, float)):
        raise ValueError(f"esperado número, recebido {value!r}")
    return value


def to_float(value):
    return float(_number(value))


def to_int(value):
    value = _number(value)
    if isinstance(value, float) and not value.is_integer():
        raise ValueError(f"esperado inteiro, recebido {value!r}")
    return int(value)


def positive(value):
    if value <= 0:
        raise ValueError(f"deve ser positivo, recebido {value!r}")
    return value


def non_negative(value):
    if value < 0:
        raise ValueError(f"não pode ser negativo, recebido {value!r}")
    return value


def unit_interval(value):
    if not 0 < value <= 1:
        raise ValueError(f"deve estar em (0, 1], recebido {value!r}")
    return value


def beta(value):
    if not 0 <= value < 1:
        raise ValueError(f"deve estar em [0, 1), recebido {value!r}")
    return value


def to_bool(value):
    if not isinstance(value, bool):
        raise ValueError(f"esperado booleano, recebido {value!r}")
    return value


def fill_text(value):
    if not isinstance(value, str):
        raise ValueError(f"esperada cor em texto, recebido {value!r}")
    parse_color(value)
    return value.strip()


def one_of(*choices):
    def check(value):
        if value not in choices:
            raise ValueError(f"valor {value!r} fora de {list(choices)}")
        return value
    return check


class LossWeightsLoader(ItemLoader):
    default_item_class = LossWeights

    default_input_processor = MapCompose(to_float, non_negative)
    default_output_processor = TakeFirst()


class FitConfigLoader(ItemLoader):
    default_item_class = FitConfig

    default_input_processor = MapCompose(to_float, positive)
    default_output_processor = TakeFirst()

    resolution_in = MapCompose(to_int, positive)
    keyframes_in = MapCompose(to_int, positive)
    iterations_in = MapCompose(to_int, non_negative)
    activation_cadence_in = MapCompose(to_int, positive)
    adam_beta1_in = MapCompose(to_float, beta)
    adam_beta2_in = MapCompose(to_float, beta)
    sharpen_fraction_in = MapCompose(to_float, non_negative)
    white_thresh_in = MapCompose(to_float, unit_interval)
    seed_in = MapCompose(to_int, non_negative)
    sdf_tau_in = MapCompose(to_float, non_negative)
    recolor_in = MapCompose(to_bool)
    progressive_in = MapCompose(to_bool)
    strict_parse_in = MapCompose(to_bool)
    initializer_in = MapCompose(one_of('probe', 'none'))
    checkpoint_every_in = MapCompose(to_int, positive)
    probe_radius_fraction_in = MapCompose(to_float, non_negative)
    probe_stride_in = MapCompose(to_int, positive)
    occlusion_eps_in = MapCompose(to_float, non_negative)
    threads_in = MapCompose(to_int, positive)

    # o valor já chega como LossWeights, montado por load_weights
    weights_in = Identity()

    exclude_fills_in = MapCompose(fill_text)
    exclude_fills_out = Identity()


class GroupProgramLoader(ItemLoader):
    default_item_class = GroupProgram

    default_input_processor = MapCompose(to_float)
    default_output_processor = TakeFirst()

    group_id_in = MapCompose(str)
    shape_in = MapCompose(one_of('ramp', 'sine'))


class OffsetProgramLoader(ItemLoader):
    default_item_class = OffsetProgram

    default_input_processor = MapCompose(to_float)
    default_output_processor = TakeFirst()

    path_index_in = MapCompose(to_int, non_negative)
    cycles_in = MapCompose(to_float, positive)


class SyntheticSpecLoader(ItemLoader):
    default_item_class = SyntheticSpec

    default_input_processor = MapCompose(to_float, non_negative)
    default_output_processor = TakeFirst()

    resolution_in = MapCompose(to_int, positive)
    keyframes_in = MapCompose(to_int, positive)
    seed_in = MapCompose(to_int, non_negative)

    groups_in = Identity()
    groups_out = Identity()
    paths_in = Identity()
    paths_out = Identity()


def _fill(loader, data, prefix=''):
    """Substitui campo a campo os padrões do item pelos valores de data."""
    known = {f.name for f in fields(loader.default_item_class)}
    if not isinstance(data, dict):
        where = prefix.rstrip('.')
        raise ConfigError(f"esperado objeto JSON em '{where or 'raiz'}'", field=where or None)
    for name, value in data.items():
        field_name = f'{prefix}{name}'
        if name not in known:
            raise ConfigError(f"campo desconhecido: '{field_name}'", field=field_name)
        try:
            loader.replace_value(name, value)
        except (ValueError, TypeError) as e:
            raise ConfigError(f"valor inválido para '{field_name}': {e}", field=field_name) from e
    return loader.load_item()


def load_weights(data):
    return _fill(LossWeightsLoader(item=LossWeights()), data, 'weights.')


def load_fit_config(data):
    """FitConfig a partir de um dict (JSON); campos ausentes ficam com os padrões."""
    data = dict(data or {})
    if 'weights' in data:
        data['weights'] = load_weights(data['weights'])
    return _fill(FitConfigLoader(item=FitConfig()), data)


def load_synthetic_spec(data):
    data = dict(data or {})
    if 'groups' in data:
        data['groups'] = [
            _fill(GroupProgramLoader(item=GroupProgram()), entry, f'groups.{n}.')
            for n, entry in enumerate(data['groups'])
        ]
    if 'paths' in data:
        data['paths'] = [
            _fill(OffsetProgramLoader(item=OffsetProgram()), entry, f'paths.{n}.')
            for n, entry in enumerate(data['paths'])
        ]
    spec = _fill(SyntheticSpecLoader(item=SyntheticSpec()), data)
    for n, program in enumerate(spec.groups):
        if program.group_id is None:
            raise ConfigError('programa de grupo sem group_id', field=f'groups.{n}.group_id')
    for n, program in enumerate(spec.paths):
        if program.path_index is None:
            raise ConfigError('programa de caminho sem path_index', field=f'paths.{n}.path_index')
    return spec


def read_json(path, field='config'):
    try:
        with open(path, encoding='utf-8') as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        raise ConfigError(f'JSON inválido em {path}: linha {e.lineno}, coluna {e.colno}', field=field) from e
    except OSError as e:
        raise ConfigError(f'Não foi possível ler {path}: {e}', field=field) from e


def read_fit_config(path):
    config = load_fit_config(read_json(path))
    logger.info(f'Configuração carregada de {path}')
    return config


def read_synthetic_spec(path):
    return load_synthetic_spec(read_json(path, field='spec'))
