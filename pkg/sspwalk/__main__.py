import argparse
import functools
import json
import sys
from contextlib import redirect_stdout
from logging.config import dictConfig
from pathlib import Path

from sspwalk._cli import DirectoryType
from sspwalk._cli import PrimeType
from sspwalk._cli import RunConfig
from sspwalk._cli import argument
from sspwalk._cli import check_checkpoint
from sspwalk._cli import config_print_defaults
from sspwalk._cli import config_print_settings
from sspwalk._cli import load_curve_json
from sspwalk._cli import run_enumerate2
from sspwalk._cli import run_enumerate3
from sspwalk._cli import subcommand
from sspwalk._cli import verify_curve
from sspwalk._cli import write_diagnostic

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INTERNAL = 3

parser = argparse.ArgumentParser(
    prog="python -m sspwalk" if Path(sys.argv[0]).name == "__main__.py" else None,
    description="enumerate superspecial curves of genus 2 and 3 by walking the (2,...,2)-isogeny graph",
    epilog="#### [S]uper[S]pecial [P]rincipally polarized [WALK]s ####",
    formatter_class=argparse.RawDescriptionHelpFormatter,
)
subparsers = parser.add_subparsers(dest="cmd", title="sspwalk command")
subcommand = functools.partial(subcommand, parent=subparsers)
parser.add_argument('--version', action='store_true', help="print sspwalk version")


def main(commandline=None):
    """main command line argument handling"""
    args = parser.parse_args(commandline)

    if args.cmd is None:
        if args.version:
            from sspwalk import __version__
            print(f"{__version__}")
            return 0
        else:
            parser.print_help()
            return 1
    else:
        from sspwalk._config import settings
        from sspwalk.exceptions import SSPWalkError

        lvl = 'INFO'
        if settings.cli_force_log_level_error:
            lvl = 'ERROR'
        dictConfig({
            'version': 1,
            'disable_existing_loggers': False,
            'handlers': {
                'console': {
                    'level': 'DEBUG',
                    'class': 'logging.StreamHandler',
                },
            },
            "loggers": {
                'sspwalk': {
                    'level': lvl,
                    'handlers': ['console'],
                },
            },
        })
        try:
            return args.cmd_func(args)
        except SSPWalkError as err:
            fn = write_diagnostic(getattr(args, "out_dir", None), err)
            print(f"ERROR: {type(err).__name__}: {err}")
            if fn is not None:
                print(f"diagnostics written to {fn}")
            return EXIT_INTERNAL


_p_argument = argument('--p', type=PrimeType(), default=None, help="characteristic, a prime > 7")
_seed_argument = argument('--seed', type=int, default=None, help="seed of the random number generator")
_emit_argument = argument('--emit-invariants', action='store_true', help="include the full invariant tuples")


@subcommand(
    argument('-l', '--list', action='store_true', help="list the sspwalk config"),
    argument('--default', action='store_true', help="default instead of current config"),
    argument(
        '-o', '--output',
        action='store',
        type=DirectoryType(), dest='output',
        help="directory where configuration is written to"
    ),
    argument('--force', action='store_true', help="force overwrite existing config"),
    argument('--search-tree', action='store_true', help="list all locations searched for config"),
)
def config(args, subparser):
    """handle sspwalk configuration"""
    from sspwalk._config import SSPWALK_CONFIG_FILENAME
    from sspwalk._config import get_searchtree

    if not (args.list or args.search_tree):
        print(subparser.format_help())
        return 0

    if args.search_tree:
        print(f"sspwalk is scanning these dirs for '{SSPWALK_CONFIG_FILENAME}':")
        for idx, location in enumerate(get_searchtree()):
            print(f"{idx}.", location)
        return 0

    if args.default:
        config_print = config_print_defaults
    else:
        config_print = config_print_settings

    if args.output is None:
        config_print()
    else:
        out_fn = args.output / SSPWALK_CONFIG_FILENAME
        mode = "x" if not args.force else "w"
        # write to file
        try:
            with out_fn.open(mode) as f:
                with redirect_stdout(f):
                    config_print()
        except FileExistsError:
            print(f"ERROR: file {out_fn} exists! use --force to overwrite")
            return 1
    return 0


@subcommand(
    _p_argument,
    _emit_argument,
)
def enumerate2(args, subparser):
    """list the superspecial genus 2 curves"""
    if args.p is None:
        print(subparser.format_help())
        return EXIT_USAGE
    run_enumerate2(RunConfig.from_args(args))
    return EXIT_OK


@subcommand(
    _p_argument,
    argument('--threads', type=int, default=None, help="number of worker processes"),
    argument('--checkpoint', default=None, help="checkpoint file, resumed from if it exists"),
    argument('--checkpoint-every', type=int, default=None, help="nodes between checkpoint writes"),
    _seed_argument,
    argument('--stop-at-count', type=int, default=None, help="stop after this many Jacobian classes"),
    argument('--known-count', action='store_true', help="stop at the reference count for p"),
    _emit_argument,
    argument('--out-dir', type=DirectoryType(), default=None, help="write summary.json, curves.jsonl, counts.csv"),
)
def enumerate3(args, subparser):
    """list the superspecial genus 3 curves"""
    if args.p is None:
        print(subparser.format_help())
        return EXIT_USAGE
    if args.threads is not None and args.threads < 1:
        print("ERROR: --threads must be positive")
        return EXIT_USAGE
    if args.checkpoint_every is not None and args.checkpoint_every < 0:
        print("ERROR: --checkpoint-every must not be negative")
        return EXIT_USAGE

    if args.known_count:
        from sspwalk.enumeration import known_counts
        row = known_counts(args.p)
        if row is None:
            print(f"ERROR: no reference count for p={args.p}")
            return EXIT_USAGE
        args.stop_at_count = row[0] + row[1]

    config = RunConfig.from_args(args)
    if config.checkpoint_path is not None:
        try:
            check_checkpoint(config.checkpoint_path, args.p)
        except ValueError as err:
            print(f"ERROR: {err}")
            return EXIT_USAGE
    run_enumerate3(config)
    return EXIT_OK


@subcommand(
    _p_argument,
    _seed_argument,
    argument('--step-cap', type=int, default=None, help="maximum number of random steps"),
)
def find_hyp(args, subparser):
    """find one superspecial hyperelliptic genus 3 curve"""
    from sspwalk.enumeration import sweep_hyperelliptic

    if args.p is None:
        print(subparser.format_help())
        return EXIT_USAGE
    config = RunConfig.from_args(args)
    (p, model, method), = sweep_hyperelliptic([config.p], config.rng_seed, args.step_cap)
    print(f"method: {method}")
    print(model)
    print(json.dumps({"p": p, "method": method, "curve": model.to_json()}))
    return EXIT_OK


@subcommand(
    _p_argument,
    argument('--curve', default=None, help="curve json, inline or a path to a .json file"),
)
def verify(args, subparser):
    """check superspeciality of a curve"""
    if args.p is None or args.curve is None:
        print(subparser.format_help())
        return EXIT_USAGE
    try:
        data = load_curve_json(args.curve)
        verify_curve(data, args.p)
    except (ValueError, TypeError, KeyError) as err:
        # includes NotSmooth: a singular input curve is a usage error here
        print(f"ERROR: malformed curve: {err}")
        return EXIT_USAGE
    return EXIT_OK


@subcommand(
    argument('--g', type=int, choices=(2, 3), default=3, help="genus"),
    argument('-o', '--output', type=argparse.FileType('w'), default=None, help="write json to this file"),
)
def export_cosets(args, subparser):
    """export the coset representatives as json"""
    from sspwalk.symplectic import coset_reps
    from sspwalk.symplectic import cosets_to_json

    data = cosets_to_json(coset_reps(args.g))
    if args.output is None:
        print(json.dumps(data))
    else:
        with args.output as f:
            json.dump(data, f)
    return EXIT_OK


@subcommand(
    _p_argument,
)
def seeds(args, subparser):
    """export the supersingular elliptic seeds as json"""
    from sspwalk.field import PrimeField
    from sspwalk.seeds import seeds_to_json
    from sspwalk.seeds import supersingular_lambdas

    if args.p is None:
        print(subparser.format_help())
        return EXIT_USAGE
    print(json.dumps(seeds_to_json(supersingular_lambdas(PrimeField(args.p)))))
    return EXIT_OK


@subcommand(
    argument('--start', type=int, default=11, help="first prime"),
    argument('--stop', type=int, default=100, help="stop before this bound"),
    _seed_argument,
    argument('--step-cap', type=int, default=None, help="maximum number of random steps"),
)
def sweep(args, subparser):
    """find a superspecial hyperelliptic genus 3 curve for a range of primes"""
    from sspwalk.enumeration import sweep_hyperelliptic

    if args.start < 11 or args.stop <= args.start:
        print("ERROR: need 11 <= start < stop")
        return EXIT_USAGE
    config = RunConfig.from_args(args)
    for p, model, method in sweep_hyperelliptic(range(args.start, args.stop), config.rng_seed, args.step_cap):
        print(json.dumps({"p": p, "method": method, "curve": model.to_json()}))
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
