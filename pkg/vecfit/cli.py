"""Linha de comando: recolor | fit | export | reorder | synth | eval.

Códigos de saída: 0 sucesso, 1 erro de uso, 2 erro de domínio.
"""
import argparse
import json
import os
import sys

from itemadapter import ItemAdapter

from vecfit import __version__, settings
from vecfit.checkpoint_manager import CheckpointManager
from vecfit.exceptions import ConfigError, UsageError, VecfitError
from vecfit.export import bake_keyframes, write_animated_svg, write_frames
from vecfit.fitter import fit
from vecfit.harness import eval_fit, synth_target, write_eval_report
from vecfit.item_loaders.config_loaders import load_fit_config, read_json, read_synthetic_spec
from vecfit.layers import group_masks_from_palette, load_group_masks, occlusion_scores, reorder
from vecfit.log import get_logger
from vecfit.motion import load_params, save_params
from vecfit.palette import assign_palette, load_recolor_map, recolor, save_recolor_map
from vecfit.pipelines import LossLogPipeline
from vecfit.raster.frames_io import read_frames
from vecfit.svg_core.document import parse_svg, serialize_static

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2


class ArgumentParser(argparse.ArgumentParser):
    """argparse que levanta UsageError em vez de encerrar o processo."""

    def error(self, message):
        raise UsageError(f'{self.prog}: {message}', usage=self.format_usage().strip())


def read_document(path, strict=True):
    try:
        with open(path, encoding='utf-8') as f:
            text = f.read()
    except OSError as e:
        raise UsageError(f'Não foi possível ler o SVG {path}: {e}') from e
    doc = parse_svg(text, strict=strict)
    logger.info(f'{path}: {doc.n_paths} caminhos, {len(doc.groups)} grupos, {doc.n_points} pontos')
    return doc


def write_text(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    os.makedirs(directory, exist_ok=True)
    with open(path, 'w', encoding='utf-8') as f:
        f.write(text)
    logger.info(f'Arquivo gravado: {path}')


def fit_config(args):
    """FitConfig do --config, com as opções da linha de comando por cima."""
    data = read_json(args.config) if args.config else {}
    if not isinstance(data, dict):
        raise ConfigError('a configuração deve ser um objeto JSON', field='config')
    overrides = {
        'iterations': getattr(args, 'iterations', None),
        'keyframes': getattr(args, 'keyframes', None),
        'resolution': getattr(args, 'resolution', None),
        'seed': getattr(args, 'seed', None),
        'threads': getattr(args, 'threads', None),
        'initializer': getattr(args, 'initializer', None),
    }
    data.update({k: v for k, v in overrides.items() if v is not None})
    if getattr(args, 'no_recolor', False):
        data['recolor'] = False
    if getattr(args, 'no_progressive', False):
        data['progressive'] = False
    return load_fit_config(data)


def palette_for(doc, args, config):
    """Mapa de cores: o de --map, ou o mesmo que o ajuste calcularia."""
    if getattr(args, 'map', None):
        return load_recolor_map(args.map)
    if config.recolor:
        return assign_palette(doc, config.seed, config.exclude_fills)
    return None


def cmd_recolor(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    recolor_map = assign_palette(doc, config.seed, config.exclude_fills)
    write_text(args.output, serialize_static(recolor(doc, recolor_map)))
    save_recolor_map(args.map, recolor_map)
    return EXIT_OK


def checkpoint_path(args):
    """Checkpoint do fit: --ckpt, ou o próprio --out quando é JSON, ou <out>.json."""
    if args.checkpoint:
        return args.checkpoint
    stem, ext = os.path.splitext(args.output)
    return args.output if ext.lower() == '.json' else f'{stem}.json'


def cmd_fit(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    frames = read_frames(args.frames)
    resume = load_params(args.resume) if args.resume else None
    pipeline = LossLogPipeline(args.log, extra_fields=args.log_grads)
    with CheckpointManager(checkpoint_path(args)) as checkpoint:
        result = fit(doc, frames, config, pipeline=pipeline, checkpoint=checkpoint, resume=resume)
    if result.recolor_map is not None and args.map:
        save_recolor_map(args.map, result.recolor_map)
    if args.output.lower().endswith('.svg'):
        baked = bake_keyframes(doc, result.params, result.recolor_map)
        write_text(args.output, write_animated_svg(baked, doc))
    logger.info(f'Melhor perda {result.best_loss:.6g} (iteração {result.best_iteration})'
                if result.best_loss is not None else 'Ajuste sem iterações.')
    return EXIT_OK


def cmd_export(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    params = load_params(args.checkpoint)
    recolor_map = load_recolor_map(args.map) if args.map else None
    baked = bake_keyframes(doc, params, recolor_map, duration=args.duration)
    write_text(args.output, write_animated_svg(baked, doc))
    if args.frames_out:
        size = args.size or settings.EXPORT_SIZE
        write_frames(doc, params, size, None, args.frames_out, recolor_map)
    return EXIT_OK


def cmd_reorder(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    if args.masks:
        seq = load_group_masks(args.masks, doc)
    elif not args.frames:
        raise UsageError('reorder: informe --frames ou --masks')
    else:
        frames = read_frames(args.frames)
        recolor_map = palette_for(doc, args, config)
        source = recolor(doc, recolor_map) if recolor_map is not None else doc
        seq = group_masks_from_palette(frames, recolor_map, source, config.white_thresh)
    scores = occlusion_scores(seq, args.eps if args.eps is not None else config.occlusion_eps)
    order = reorder(doc, scores)
    write_text(args.output, serialize_static(doc.with_painter_order(order)))
    return EXIT_OK


def cmd_synth(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    spec = read_synthetic_spec(args.spec)
    recolor_map = assign_palette(doc, config.seed, config.exclude_fills) if config.recolor else None
    if recolor_map is not None and args.map:
        save_recolor_map(args.map, recolor_map)
    source = recolor(doc, recolor_map) if recolor_map is not None else doc
    _, truth = synth_target(source, spec, outdir=args.output)
    if args.truth:
        save_params(args.truth, truth)
        logger.info(f'Parâmetros verdadeiros gravados em {args.truth}')
    return EXIT_OK


def cmd_eval(args):
    config = fit_config(args)
    doc = read_document(args.svg, config.strict_parse)
    params = load_params(args.checkpoint)
    truth = load_params(args.truth) if args.truth else None
    frames = read_frames(args.frames)
    recolor_map = palette_for(doc, args, config)
    source = recolor(doc, recolor_map) if recolor_map is not None else doc
    report = eval_fit(source, params, frames, truth, config.white_thresh,
                      seconds=params.fit.get('seconds'), iterations=params.fit.get('iterations'))
    if args.output:
        write_eval_report(args.output, report)
    else:
        print(json.dumps(ItemAdapter(report).asdict(), indent=2, sort_keys=True))
    return EXIT_OK


def _fit_options(parser):
    parser.add_argument('--iterations', type=int)
    parser.add_argument('--keyframes', type=int)
    parser.add_argument('--resolution', type=int)
    parser.add_argument('--seed', type=int, help='semente do embaralhamento da paleta')
    parser.add_argument('--no-recolor', action='store_true', help='ajusta nas cores originais')


def common_options():
    """Opções aceitas antes ou depois do subcomando."""
    parser = ArgumentParser(add_help=False)
    parser.add_argument('--config', default=argparse.SUPPRESS, help='arquivo JSON com campos de FitConfig')
    parser.add_argument('--json-errors', action='store_true', default=argparse.SUPPRESS,
                        help='erros como JSON em stderr')
    return parser


def build_parser():
    parser = ArgumentParser(prog='vecfit', description='Anima um SVG estático ajustando-o a quadros de vídeo.')
    parser.add_argument('--version', action='version', version=f'vecfit {__version__}')
    parser.add_argument('--config', help='arquivo JSON com campos de FitConfig')
    parser.add_argument('--json-errors', action='store_true', help='erros como JSON em stderr')
    sub = parser.add_subparsers(dest='command', parser_class=ArgumentParser)
    common = [common_options()]

    p = sub.add_parser('recolor', parents=common, help='atribui a paleta de empacotamento de esferas')
    p.add_argument('--in', dest='svg', required=True, help='SVG de entrada')
    p.add_argument('--out', dest='output', required=True, help='SVG recolorido')
    p.add_argument('--map', required=True, help='mapa de cores (JSON) a gravar')
    p.add_argument('--seed', type=int)
    p.set_defaults(handler=cmd_recolor)

    p = sub.add_parser('fit', parents=common, help='ajusta o movimento aos quadros-alvo')
    p.add_argument('--svg', required=True)
    p.add_argument('--frames', required=True, help='diretório com frame_%%04d.png')
    p.add_argument('--out', dest='output', required=True,
                   help='SVG animado (.svg) ou só o checkpoint (.json)')
    p.add_argument('--ckpt', dest='checkpoint', help='checkpoint JSON (padrão: <out>.json)')
    p.add_argument('--map', help='grava o mapa de cores usado')
    p.add_argument('--log', help='relatórios de perda em JSON lines')
    p.add_argument('--log-grads', action='store_true', help='inclui normas dos gradientes no log')
    p.add_argument('--resume', help='checkpoint inicial (refinamento conjunto)')
    p.add_argument('--threads', type=int)
    p.add_argument('--init', dest='initializer', choices=['probe', 'none'])
    p.add_argument('--no-progressive', action='store_true')
    _fit_options(p)
    p.set_defaults(handler=cmd_fit)

    p = sub.add_parser('export', parents=common, help='grava o SVG animado')
    p.add_argument('--svg', required=True)
    p.add_argument('--ckpt', dest='checkpoint', required=True)
    p.add_argument('--out', dest='output', required=True)
    p.add_argument('--map', help='mapa de cores para restaurar as cores originais')
    p.add_argument('--dur', dest='duration', type=float, help='segundos (padrão: keyframes / 5)')
    p.add_argument('--frames-out', help='também grava os keyframes como PNG')
    p.add_argument('--size', type=int, help=f'largura dos PNG (padrão {settings.EXPORT_SIZE})')
    p.set_defaults(handler=cmd_export)

    p = sub.add_parser('reorder', parents=common, help='reordena as camadas pelas oclusões observadas')
    p.add_argument('--svg', required=True)
    p.add_argument('--frames', help='quadros em cores de paleta')
    p.add_argument('--masks', help='máscaras por grupo: <dir>/<grupo>/frame_%%04d.png (no lugar dos quadros)')
    p.add_argument('--map', help='mapa de cores da recoloração')
    p.add_argument('--out', dest='output', required=True)
    p.add_argument('--eps', type=float)
    _fit_options(p)
    p.set_defaults(handler=cmd_reorder)

    p = sub.add_parser('synth', parents=common, help='gera quadros sintéticos com movimento conhecido')
    p.add_argument('--svg', required=True)
    p.add_argument('--spec', required=True, help='SyntheticSpec em JSON')
    p.add_argument('--out', dest='output', required=True, help='diretório dos quadros')
    p.add_argument('--truth', help='grava os parâmetros verdadeiros')
    p.add_argument('--map', help='mapa de cores da recoloração')
    _fit_options(p)
    p.set_defaults(handler=cmd_synth)

    p = sub.add_parser('eval', parents=common, help='compara um ajuste com os quadros-alvo')
    p.add_argument('--svg', required=True)
    p.add_argument('--ckpt', dest='checkpoint', required=True)
    p.add_argument('--frames', required=True)
    p.add_argument('--truth', help='parâmetros verdadeiros do synth')
    p.add_argument('--map', help='mapa de cores da recoloração')
    p.add_argument('--out', dest='output', help='relatório JSON (padrão: stdout)')
    _fit_options(p)
    p.set_defaults(handler=cmd_eval)

    return parser


def report_error(error, json_errors):
    if json_errors:
        sys.stderr.write(json.dumps(error.to_dict(), default=str) + '\n')
    else:
        logger.error(f'{type(error).__name__}: {error.message}')


def main(argv=None):
    argv = sys.argv[1:] if argv is None else list(argv)
    json_errors = '--json-errors' in argv
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        if args.command is None:
            raise UsageError('nenhum subcomando informado', usage=parser.format_usage().strip())
        return args.handler(args)
    except UsageError as e:
        sys.stderr.write(parser.format_usage())
        report_error(e, json_errors)
        return EXIT_USAGE
    except VecfitError as e:
        report_error(e, json_errors)
        return EXIT_DOMAIN
    except SystemExit as e:
        # --help e --version
        return e.code if isinstance(e.code, int) else EXIT_OK
