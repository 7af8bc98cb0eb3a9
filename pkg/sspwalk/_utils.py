import json
import lzma
import os
import sys
import tempfile
from functools import partial
from pathlib import Path
from typing import Any
from typing import Dict

from packaging.version import Version

__all__ = [
    'cached_property',
    'check_format_version',
    'dump_json_atomic',
    'load_json_from_path',
    'FORMAT_VERSION',
]

# version of the on-disk checkpoint / record format
FORMAT_VERSION = "1.0"


if sys.version_info >= (3, 8):
    from functools import cached_property as _cached_property

    # noinspection PyPep8Naming
    class cached_property(_cached_property):
        def __set__(self, obj, value):
            raise AttributeError(f"readonly attribute {self.attrname}")
else:
    # noinspection PyPep8Naming
    class cached_property:
        _NOCACHE = object()

        def __init__(self, fget):
            self.fget = fget
            self.attrname = None
            self.__doc__ = fget.__doc__

        def __set_name__(self, owner, name):
            self.attrname = name

        def __get__(self, obj, objtype=None):
            if obj is None:
                return self  # pragma: no cover
            cache = obj.__dict__
            val = cache.get(self.attrname, self._NOCACHE)
            if val is self._NOCACHE:
                val = cache[self.attrname] = self.fget(obj)
            return val

        def __set__(self, obj, value):
            raise AttributeError(f"readonly attribute {self.fget.__name__}")


def check_format_version(version: str) -> Version:
    """raise if a stored format version can't be read by this release"""
    stored = Version(str(version))
    current = Version(FORMAT_VERSION)
    if stored.major != current.major:
        raise ValueError(
            f"unsupported format version {stored}, this release reads {current.major}.x"
        )
    return stored


def load_json_from_path(path) -> Any:
    """read json, xz compressed if the name ends with ``.xz``"""
    path = Path(path)
    if not path.is_file():
        raise FileNotFoundError(str(path))

    if path.suffix == ".xz":
        ctx = partial(lzma.open, path, 'rt')
    else:
        ctx = partial(path.open, 'r')

    with ctx() as fobj:
        return json.load(fobj)


def dump_json_atomic(path, data: Dict[str, Any]) -> None:
    """write json (xz compressed for ``.xz`` names) so that a crash never
    leaves a truncated file behind
    """
    path = Path(path)
    fd, tmp = tempfile.mkstemp(dir=path.parent, prefix=f".{path.name}.", suffix=".tmp")
    try:
        if path.suffix == ".xz":
            os.close(fd)
            ctx = partial(lzma.open, tmp, "wt")
        else:
            ctx = partial(os.fdopen, fd, "w")
        with ctx() as f:
            json.dump(data, f)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise
