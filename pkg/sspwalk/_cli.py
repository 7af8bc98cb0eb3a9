import json
import lzma
import sys
from argparse import ArgumentTypeError
from functools import partial
from pathlib import Path
from typing import Any
from typing import Dict
from typing import NamedTuple
from typing import Optional

# -- argparse improvements ---------------------------------------------


def subcommand(*arguments, parent):
    """decorator helper for commandline"""
    def decorator(func):
        fn = func.__name__.rstrip('_').replace('_', '-')
        started_via_m = Path(sys.argv[0]).name == "__main__.py"
        subparser = parent.add_parser(
            name=fn,
            prog=f"python -m sspwalk {fn}" if started_via_m else f"sspwalk {fn}",
            help=func.__doc__,
        )
        for args, kwargs in arguments:
            subparser.add_argument(*args, **kwargs)
        subparser.set_defaults(cmd_func=partial(func, subparser=subparser))
        return func
    return decorator


def argument(*args, **kwargs):
    """argument helper for subcommand"""
    return args, kwargs


class DirectoryType:
    """Directory parsing for argparse"""
    def __call__(self, cmd_input: str):
        p = Path(cmd_input)
        if p.is_dir():
            return p
        raise ArgumentTypeError(f"'{cmd_input}' is not a directory")


class PrimeType:
    """prime > 7 parsing for argparse"""
    def __call__(self, cmd_input: str):
        from sspwalk.field import is_prime

        try:
            p = int(cmd_input)
        except ValueError:
            raise ArgumentTypeError(f"'{cmd_input}' is not an integer") from None
        if p <= 7 or not is_prime(p):
            raise ArgumentTypeError(f"'{cmd_input}' is not a prime > 7")
        return p


# -- config related commands -------------------------------------------

def config_print_settings():
    """print the current configuration"""
    from sspwalk import settings
    from sspwalk._config import to_toml

    print("# current sspwalk configuration")
    print("# =============================")
    print("# format: TOML")
    print(to_toml(settings))


def config_print_defaults():
    """print the default sspwalk configuration"""
    from importlib.resources import read_text

    from sspwalk._config import settings

    output = read_text(
        "sspwalk",
        ".sspwalk.defaults.toml",
        encoding=settings.ENCODING_FOR_DYNACONF
    )
    print(output)


# -- run configuration -------------------------------------------------

PRNG_NAME = "random.Random (Mersenne Twister)"


class RunConfig(NamedTuple):
    """command line flags merged over the settings"""
    p: Optional[int]
    command: str
    threads: int
    checkpoint_path: Optional[Path]
    checkpoint_every: int
    rng_seed: int
    stop_at_count: Optional[int]
    emit_invariants: bool
    out_dir: Optional[Path]

    @classmethod
    def from_args(cls, args) -> "RunConfig":
        from sspwalk import settings

        def pick(name, key=None):
            value = getattr(args, name, None)
            return settings[key or name] if value is None else value

        checkpoint = getattr(args, "checkpoint", None)
        return cls(
            p=getattr(args, "p", None),
            command=args.cmd,
            threads=int(pick("threads")),
            checkpoint_path=Path(checkpoint) if checkpoint else None,
            checkpoint_every=int(pick("checkpoint_every")),
            rng_seed=int(pick("seed", "rng_seed")),
            stop_at_count=getattr(args, "stop_at_count", None),
            emit_invariants=bool(getattr(args, "emit_invariants", False) or settings.emit_invariants),
            out_dir=getattr(args, "out_dir", None),
        )

    def header(self) -> Dict[str, Any]:
        from sspwalk._utils import FORMAT_VERSION
        from sspwalk.field import PrimeField

        return {
            "p": self.p,
            "nonresidue": PrimeField(self.p).nonresidue if self.p else None,
            "format_version": FORMAT_VERSION,
            "prng": PRNG_NAME,
            "rng_seed": self.rng_seed,
        }


def check_checkpoint(path: Path, p: int) -> None:
    """raise ValueError if an existing checkpoint can't be resumed"""
    from sspwalk._utils import check_format_version
    from sspwalk._utils import load_json_from_path

    if not path.exists():
        return
    try:
        data = load_json_from_path(path)
    except (OSError, ValueError, lzma.LZMAError) as err:
        raise ValueError(f"unreadable checkpoint {path}: {err}") from err
    if not isinstance(data, dict) or "format_version" not in data:
        raise ValueError(f"{path} is not a checkpoint")
    check_format_version(data["format_version"])
    if int(data.get("p", -1)) != p:
        raise ValueError(f"checkpoint {path} is for p={data.get('p')}")


def write_diagnostic(out_dir: Optional[Path], err: Exception) -> Optional[Path]:
    """dump a pipeline error and its null-point for post-mortem"""
    from sspwalk._utils import dump_json_atomic

    data: Dict[str, Any] = {
        "error": type(err).__name__,
        "message": str(err),
    }
    null_point = getattr(err, "null_point", None)
    if null_point is not None:
        data["p"] = null_point.field.p
        data["null_point"] = null_point.to_json()
    if out_dir is None:
        print(json.dumps(data), file=sys.stderr)
        return None
    fn = Path(out_dir) / "diagnostic.json"
    dump_json_atomic(fn, data)
    return fn


# -- enumeration related commands --------------------------------------

def run_enumerate3(config: RunConfig, batch_size=None, debug_checks=None):
    """run the genus 3 walk and write its artifacts"""
    from sspwalk.enumeration import enumerate_dim3

    result = enumerate_dim3(
        config.p,
        threads=config.threads,
        batch_size=batch_size,
        checkpoint=config.checkpoint_path,
        checkpoint_every=config.checkpoint_every,
        stop_at_count=config.stop_at_count,
        debug_checks=debug_checks,
    )
    summary = {"header": config.header()}
    summary.update(result.summary())

    if config.out_dir is not None:
        out = Path(config.out_dir)
        with out.joinpath("summary.json").open("w") as f:
            json.dump(summary, f, indent=2)
        with out.joinpath("curves.jsonl").open("w") as f:
            for line in result.iter_jsonl(config.emit_invariants):
                f.write(line + "\n")
        out.joinpath("counts.csv").write_text(result.counts_csv())
    print(json.dumps(summary))
    return result


def run_enumerate2(config: RunConfig):
    """list genus 2 classes as json lines"""
    from sspwalk.enumeration import enumerate_dim2
    from sspwalk.invariants import igusa

    classes = enumerate_dim2(config.p)
    for cls in sorted(classes, key=lambda c: c.key):
        data = {
            "key": cls.key,
            "model": cls.model.to_json(),
            "fingerprint": cls.fingerprint.to_json(),
            "theta": cls.theta.to_json(compact=True),
        }
        if config.emit_invariants:
            data["invariants"] = igusa(cls.model).to_json()
        print(json.dumps(data, sort_keys=True))
    return classes


def load_curve_json(curve: str) -> Dict[str, Any]:
    """parse a curve given inline or as a path to a json file"""
    from sspwalk._utils import load_json_from_path

    if Path(curve).suffix == ".json" and Path(curve).is_file():
        return load_json_from_path(curve)
    return json.loads(curve)


def verify_curve(data: Dict[str, Any], p: int) -> bool:
    """print the matrix of the curve and the verdict"""
    from sspwalk.field import PrimeField
    from sspwalk.verify import verify_json

    matrix = verify_json(data, PrimeField(p))
    name = "Hasse-Witt" if data.get("type") == "quartic" else "Cartier-Manin"
    print(f"{name} matrix:")
    print(matrix)
    superspecial = matrix.is_zero()
    print(f"superspecial: {str(superspecial).lower()}")
    return superspecial
