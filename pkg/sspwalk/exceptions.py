"""exceptions raised by the sspwalk pipeline

Every exception derives from :class:`SSPWalkError` and from the builtin
that describes it best, so ``except ValueError`` keeps working.
"""
from typing import Any
from typing import Optional

__all__ = [
    "SSPWalkError",
    "InvalidNullPoint",
    "MalformedNullPoint",
    "WrongType",
    "SingularOrCorrupt",
    "DegenerateConfiguration",
    "NotSmooth",
    "GaveUp",
    "ConnectivityError",
]


class SSPWalkError(Exception):
    """base class of all pipeline errors

    ``null_point`` optionally carries the offending squared theta
    null-point for post-mortem dumps.
    """

    def __init__(self, *args: Any, null_point: Optional[Any] = None) -> None:
        super().__init__(*args)
        self.null_point = null_point

    def __reduce__(self):
        # keep the null-point when raised inside a worker process
        return _rebuild, (type(self), self.args, self.null_point)


def _rebuild(cls, args, null_point):
    return cls(*args, null_point=null_point)


class InvalidNullPoint(SSPWalkError, ValueError):
    """the squared theta null-point can not come from an abelian variety"""


class MalformedNullPoint(SSPWalkError, ValueError):
    """a theta constant required as a denominator vanishes"""


class WrongType(SSPWalkError, ValueError):
    """the null-point has the wrong number of vanishing even entries"""


class SingularOrCorrupt(SSPWalkError, RuntimeError):
    """vanishing count outside of the classification table"""


class DegenerateConfiguration(SSPWalkError, ArithmeticError):
    """a linear system of the reconstruction is singular"""


class NotSmooth(SSPWalkError, ValueError):
    """the curve model is singular"""


class GaveUp(SSPWalkError, RuntimeError):
    """a random walk exceeded its step cap"""


class ConnectivityError(SSPWalkError, RuntimeError):
    """a graph walk ran out of nodes without finding any Jacobian"""
