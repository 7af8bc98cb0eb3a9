"""type of a principally polarized abelian variety from its null-point"""
from enum import Enum
from typing import Dict
from typing import NamedTuple
from typing import Tuple

from sspwalk.exceptions import SingularOrCorrupt
from sspwalk.theta import SquaredThetaNullPoint
from sspwalk.theta import even_indices

__all__ = [
    "VarietyKind",
    "VarietyType",
    "vanishing_count",
    "vanishing_indices",
]


class VarietyKind(str, Enum):
    PLANE_QUARTIC = "PlaneQuartic"
    HYPERELLIPTIC3 = "Hyperelliptic3"
    E_X_JAC2 = "E_x_Jac2"
    E_X_E_X_E = "E_x_E_x_E"
    JACOBIAN2 = "Jacobian2"
    E_X_E = "E_x_E"


_KINDS: Dict[Tuple[int, int], VarietyKind] = {
    (3, 0): VarietyKind.PLANE_QUARTIC,
    (3, 1): VarietyKind.HYPERELLIPTIC3,
    (3, 6): VarietyKind.E_X_JAC2,
    (3, 9): VarietyKind.E_X_E_X_E,
    (2, 0): VarietyKind.JACOBIAN2,
    (2, 1): VarietyKind.E_X_E,
}


class VarietyType(NamedTuple):
    g: int
    n_van: int
    kind: VarietyKind

    @property
    def is_jacobian(self) -> bool:
        return self.kind in (VarietyKind.PLANE_QUARTIC, VarietyKind.HYPERELLIPTIC3, VarietyKind.JACOBIAN2)


def vanishing_indices(theta: SquaredThetaNullPoint) -> Tuple[int, ...]:
    """even indices whose squared theta constant is zero"""
    return tuple(i for i in even_indices(theta.g) if not theta.values[i])


def vanishing_count(theta: SquaredThetaNullPoint) -> VarietyType:
    """classify by the number of vanishing even theta constants

    Raises
    ------
    SingularOrCorrupt
        if the count is not one of the admissible values for the genus
    """
    n_van = len(vanishing_indices(theta))
    try:
        kind = _KINDS[(theta.g, n_van)]
    except KeyError:
        raise SingularOrCorrupt(
            f"{n_van} vanishing even theta constants for g={theta.g}",
            null_point=theta,
        ) from None
    return VarietyType(theta.g, n_van, kind)
