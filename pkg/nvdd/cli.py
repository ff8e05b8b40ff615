"""Command-line front end.

    nvdd anonymize --model I --n 5 --x 10 --y 20 --r 1000 --seed 7
    nvdd sweep --iterations 100 --out sweep.csv
    nvdd attack --model II --out attack.csv
    nvdd compare --out compare.csv
    nvdd render --model IIIa --n 7 --kappa 0.1 --out scene.svg

Exit codes: 0 on success, 2 on bad usage, 3 when the computation fails.
"""
import sys
import json
import argparse
import logging

from nvdd import utils
from nvdd.config import config, model_map, read_config_file
from nvdd.constants import constants
from nvdd.geometry import Point
from nvdd.metrics import cost_report
from nvdd.render import result_scene
from nvdd.sim import (run_sweep, run_attack_stats, run_comparison, comparison_rows,
                      write_records_csv, write_attack_csv)
from nvdd.wire import Query, encode_upstream, anonymize_query

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_FAILURE = 3

FORMATS = ('csv', 'json', 'svg', 'hex')
GRID_COMMANDS = ('sweep', 'attack', 'compare')
GRID_OPTIONS = ('model', 'n', 'r')

DEFAULTS = {
    'model': 'I',
    'n': 5,
    'r': constants.DEFAULT_R_VALUES[0],
    'iota': None,
    'kappa': None,
    'mu': constants.DEFAULT_MU,
    'seed': constants.DEFAULT_MASTER_SEED,
    'iterations': constants.DEFAULT_ITERATIONS,
    'x': 0.0,
    'y': 0.0,
    'uid': 0,
    'category': 0,
    'out': None,
    'format': None,
}


def _polygon_json(poly):
    return [[p.x, p.y] for p in poly]


def _write_text(args, text):
    if args.out:
        with open(args.out, 'w') as f:
            f.write(text)
        logger.info("Wrote %s", args.out)
    else:
        sys.stdout.write(text)


def _model_params(args):
    config.reset()
    config.set_model(args.model, n=args.n, r=args.r, iota=args.iota,
                     kappa=args.kappa or 0.0, mu=args.mu, rng_seed=args.seed)
    return config.get_model(), config.get_params()


def _anonymize(args):
    kind, params = _model_params(args)
    query = Query(args.uid, Point(args.x, args.y), args.r, args.category, iota=args.iota)
    return anonymize_query(query, kind, params)


def cmd_anonymize(args):
    anonymized, res = _anonymize(args)
    payload = encode_upstream(anonymized)
    if args.format == 'hex':
        _write_text(args, payload.hex() + '\n')
        return EXIT_OK
    if args.format == 'svg':
        _write_text(args, result_scene(res).to_string())
        return EXIT_OK
    report = cost_report(res)
    doc = {
        'model': res.kind.label,
        'n': res.n,
        'seed': [res.seed.x, res.seed.y],
        'trace': res.trace,
        'scale': res.scale,
        'd0': res.d0,
        'concealing': _polygon_json(res.concealing),
        'zone': _polygon_json(res.zone_scaled.polygon),
        'psi': report.psi,
        'gamma': report.gamma,
        'ratio': report.ratio,
        'upstream_bytes': report.upstream_bytes,
        'upstream_hex': payload.hex(),
    }
    _write_text(args, json.dumps(doc, indent=2, sort_keys=True) + '\n')
    return EXIT_OK


def cmd_render(args):
    _, res = _anonymize(args)
    _write_text(args, result_scene(res).to_string())
    return EXIT_OK


def _sweep_config(args, default_models):
    models = [model_map[args.model]] if args.model else default_models
    kwargs = {
        'models': models,
        'iterations': args.iterations,
        'master_seed': args.seed,
        'iota': args.iota,
        'mu': args.mu,
    }
    if args.n:
        kwargs['n_values'] = [args.n]
    if args.kappa is not None:
        kwargs['kappa_values'] = [args.kappa]
    if args.r:
        kwargs['r_values'] = [args.r]
    config.set_sweep(**kwargs)
    return config.get_sweep_config()


def _print_table(rows, fields):
    print(' '.join('{:>14}'.format(f) for f in fields))
    for row in rows:
        print(' '.join('{:>14}'.format(
            constants.CSV_FLOAT_FORMAT.format(row[f]) if isinstance(row[f], float) else row[f])
            for f in fields))


def _emit_csv(args, writer, items, rows, fields):
    if args.out:
        writer(items, args.out)
        _print_table(rows, fields)
    else:
        writer(items, sys.stdout)


def cmd_sweep(args):
    cfg = _sweep_config(args, None)
    records = run_sweep(cfg)
    _emit_csv(args, write_records_csv, records, [r.as_row() for r in records],
              constants.SWEEP_CSV_FIELDS)
    return EXIT_OK


def cmd_attack(args):
    cfg = _sweep_config(args, [model_map['II']])
    stats = run_attack_stats(cfg)
    _emit_csv(args, write_attack_csv, stats, [s.as_row() for s in stats],
              constants.ATTACK_CSV_FIELDS)
    return EXIT_OK


def cmd_compare(args):
    cfg = _sweep_config(args, [model_map['I']])
    pairs = run_comparison(cfg)
    _emit_csv(args, write_records_csv, pairs, [r.as_row() for r in comparison_rows(pairs)],
              constants.SWEEP_CSV_FIELDS)
    return EXIT_OK


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--model', choices=list(model_map.keys()))
    common.add_argument('--n', type=int)
    common.add_argument('--r', type=float)
    common.add_argument('--iota', type=float)
    common.add_argument('--kappa', type=float)
    common.add_argument('--mu', type=float)
    common.add_argument('--seed', type=int)
    common.add_argument('--iterations', type=int)
    common.add_argument('--x', type=float)
    common.add_argument('--y', type=float)
    common.add_argument('--uid', type=int)
    common.add_argument('--category', type=int)
    common.add_argument('--out')
    common.add_argument('--format', choices=FORMATS)
    common.add_argument('--config', help='key = value file supplying defaults for the flags')
    common.add_argument('--verbose', action='store_true')

    parser = argparse.ArgumentParser(prog='nvdd',
                                     description='Voronoi-Delaunay location anonymizer')
    sub = parser.add_subparsers(dest='command')
    sub.required = True
    for name, fn, help_text in (
            ('anonymize', cmd_anonymize, 'anonymize a single query'),
            ('sweep', cmd_sweep, 'Monte Carlo cost sweep'),
            ('attack', cmd_attack, 'centroid attack statistics'),
            ('compare', cmd_compare, 'n-VDD against n-CD'),
            ('render', cmd_render, 'SVG of one anonymization')):
        p = sub.add_parser(name, parents=[common], help=help_text)
        p.set_defaults(func=fn)
    return parser


def _fill_defaults(args):
    file_options = read_config_file(args.config) if args.config else {}
    grid = args.command in GRID_COMMANDS
    for key, value in DEFAULTS.items():
        if getattr(args, key) is None:
            if grid and key in GRID_OPTIONS:
                # leave the full grid unless narrowed
                value = None
            setattr(args, key, file_options.get(key, value))
    if args.model is not None and args.model not in model_map:
        raise ValueError("Unknown model {} in {}".format(args.model, args.config))
    if args.format is None:
        args.format = {'anonymize': 'json', 'render': 'svg'}.get(args.command, 'csv')


def main(argv=None):
    logging.basicConfig(format='%(message)s')
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code
    logging.getLogger().setLevel(logging.DEBUG if args.verbose else logging.INFO)
    logger.debug("Using %s worker threads", utils.get_threads())

    try:
        _fill_defaults(args)
        return args.func(args)
    except RuntimeError as e:
        logger.error("%s", e)
        return EXIT_FAILURE
    except ValueError as e:
        logger.error("%s", e)
        return EXIT_USAGE
    except (IOError, OSError) as e:
        logger.error("%s", e)
        return EXIT_FAILURE


if __name__ == '__main__':
    sys.exit(main())
