"""curve equations from squared theta null-points

Hyperelliptic Jacobians are reconstructed in Rosenhain form
``y^2 = x (x - 1) prod (x - lambda_k)``, plane quartics via Weber's
bitangent construction. Both work on the squared constants ``s_i`` of a
normalized null-point; every needed square root is taken canonically.
"""
from typing import List
from typing import Optional
from typing import Sequence

from sspwalk._algebra import solve
from sspwalk._logging import get_logger
from sspwalk.classify import vanishing_indices
from sspwalk.curves import CurveModel
from sspwalk.curves import HyperellipticModel
from sspwalk.curves import QuarticModel
from sspwalk.curves import curve_from_json
from sspwalk.curves import quartic_discriminant
from sspwalk.exceptions import InvalidNullPoint
from sspwalk.exceptions import MalformedNullPoint
from sspwalk.exceptions import NotSmooth
from sspwalk.exceptions import WrongType
from sspwalk.field import FieldElement
from sspwalk.forms import Form
from sspwalk.symplectic import normalize_vanishing_to_61
from sspwalk.theta import SquaredThetaNullPoint

__all__ = [
    "CurveModel",
    "HyperellipticModel",
    "QuarticModel",
    "curve_from_json",
    "rosenhain_g2",
    "rosenhain_g3",
    "weber_quartic",
]

_log = get_logger(__name__)


# --- Rosenhain ------------------------------------------------------------

def _ratio(theta: SquaredThetaNullPoint, num: Sequence[int], den: Sequence[int]) -> FieldElement:
    s = theta.values
    d = theta.field.one
    for i in den:
        d = d * s[i]
    if not d:
        raise MalformedNullPoint(f"vanishing denominator among theta constants {tuple(den)}", null_point=theta)
    n = theta.field.one
    for i in num:
        n = n * s[i]
    return n / d


_ROSENHAIN_G3 = (
    ((42, 2), (5, 45)),
    ((42, 3), (4, 45)),
    ((27, 42), (45, 28)),
    ((2, 49), (54, 5)),
    ((3, 0), (7, 4)),
)

_ROSENHAIN_G2 = (
    ((0, 1), (3, 2)),
    ((1, 12), (2, 15)),
    ((0, 12), (3, 15)),
)


def rosenhain_g3(theta: SquaredThetaNullPoint) -> HyperellipticModel:
    """hyperelliptic genus 3 curve of a null-point with one vanishing even entry"""
    theta = normalize_vanishing_to_61(theta)
    lambdas = [_ratio(theta, num, den) for num, den in _ROSENHAIN_G3]
    try:
        return HyperellipticModel.from_lambdas(theta.field, lambdas)
    except NotSmooth as err:
        raise NotSmooth(str(err), null_point=theta) from None


def rosenhain_g2(theta: SquaredThetaNullPoint) -> HyperellipticModel:
    """genus 2 curve of a null-point without vanishing even entries"""
    if theta.g != 2:
        raise WrongType(f"expected a g=2 null-point, got g={theta.g}", null_point=theta)
    if vanishing_indices(theta):
        raise WrongType("genus 2 null-point is a product of elliptic curves", null_point=theta)
    lambdas = [_ratio(theta, num, den) for num, den in _ROSENHAIN_G2]
    try:
        return HyperellipticModel.from_lambdas(theta.field, lambdas)
    except NotSmooth as err:
        raise NotSmooth(str(err), null_point=theta) from None


# --- Weber ----------------------------------------------------------------

def _product(theta: SquaredThetaNullPoint, idx: Sequence[int]) -> FieldElement:
    out = theta.field.one
    for i in idx:
        out = out * theta.values[i]
    return out


# four-theta products recovered from the a_i1 and the squared relations,
# paired with the indices whose squares they must reproduce
_WEBER_PRODUCTS = (
    ("q1", (21, 28, 49, 56)),
    ("q2", (2, 28, 47, 49)),
    ("q3", (2, 21, 47, 56)),
    ("r1", (7, 14, 35, 42)),
    ("r2", (14, 16, 35, 61)),
    ("r3", (7, 16, 42, 61)),
)


def weber_quartic(
    theta: SquaredThetaNullPoint,
    signs: Optional[Sequence[int]] = None,
    check_smooth: bool = True,
) -> QuarticModel:
    """plane quartic of a g=3 null-point without vanishing even entries

    Parameters
    ----------
    theta:
        g=3 squared theta null-point with no vanishing even entry
    signs:
        optional three values in (1, -1) flipping the chosen roots a_i1
    check_smooth:
        verify the result has nonzero discriminant

    Raises
    ------
    WrongType
        if the null-point is not of plane quartic type
    InvalidNullPoint
        if a required square root is missing or the recovered theta
        products are inconsistent with the squares
    DegenerateConfiguration
        if one of the linear systems is singular
    NotSmooth
        if ``check_smooth`` and the quartic is singular
    """
    if theta.g != 3 or vanishing_indices(theta):
        raise WrongType("Weber reconstruction needs a g=3 null-point without vanishing even entries",
                        null_point=theta)
    field = theta.field
    s = theta.values

    # a_i1 from their squares
    a_sq = (
        _ratio(theta, (12, 5), (40, 33)),
        _ratio(theta, (27, 5), (40, 54)),
        _ratio(theta, (27, 12), (33, 54)),
    )
    a1: List[FieldElement] = []
    for k, sq in enumerate(a_sq):
        root = field.sqrt(sq)
        if root is None:
            raise InvalidNullPoint(f"a_{k + 1}1 squared is not a square", null_point=theta)
        if signs is not None and signs[k] < 0:
            root = -root
        a1.append(root)

    p1 = a1[0] * s[40] * s[33]
    p2 = a1[1] * s[40] * s[54]
    p3 = -a1[2] * s[33] * s[54]

    q1 = (
        _product(theta, (5, 21, 40, 56)) + _product(theta, (12, 28, 33, 49)) - _product(theta, (0, 16, 45, 61))
    ) / (p1 * 2)
    q2 = (
        _product(theta, (5, 28, 40, 49)) + _product(theta, (2, 27, 47, 54)) - _product(theta, (12, 21, 33, 56))
    ) / (p2 * 2)
    q3 = (
        _product(theta, (3, 20, 32, 55)) - _product(theta, (2, 21, 33, 54)) - _product(theta, (12, 27, 47, 56))
    ) / (p3 * 2)
    r1 = p1 - q1
    r2 = q2 - p2
    r3 = q3 - p3

    products = {"q1": q1, "q2": q2, "q3": q3, "r1": r1, "r2": r2, "r3": r3}
    for name, idx in _WEBER_PRODUCTS:
        value = products[name]
        if value * value != _product(theta, idx):
            raise InvalidNullPoint(f"theta product {name} is inconsistent with its squares", null_point=theta)

    # a[i][j] for i, j in 0..2
    a = [
        [a1[0], q1 / (s[49] * s[56]), r1 / (s[35] * s[42])],
        [a1[1], q2 / (s[49] * s[47]), r2 / (s[35] * s[61])],
        [a1[2], q3 / (s[56] * s[47]), r3 / (s[42] * s[61])],
    ]
    for row in a:
        if not all(row):
            raise MalformedNullPoint("vanishing Weber coefficient", null_point=theta)

    minus_one = -field.one
    lam = solve(field, [[a[i][j].inverse() for i in range(3)] for j in range(3)], [minus_one] * 3)
    k = solve(field, [[lam[i] * a[i][j] for i in range(3)] for j in range(3)], [minus_one] * 3)

    # xi_j = sum_v c[v][j] * x_v
    c = []
    for v in range(3):
        rows = [[field.one] * 3] + [[a[i][j].inverse() for j in range(3)] for i in range(3)]
        rhs = [minus_one] + [-(k[i] * a[i][v]) for i in range(3)]
        c.append(solve(field, rows, rhs))

    x, y, z = (Form.variable(field, 3, v) for v in range(3))
    xi = [
        Form.from_terms(field, 3, 1, {(1, 0, 0): c[0][j], (0, 1, 0): c[1][j], (0, 0, 1): c[2][j]})
        for j in range(3)
    ]
    lin = xi[0] * x + xi[1] * y - xi[2] * z
    quartic = lin * lin - (xi[0] * xi[1] * x * y).scale(4)
    model = QuarticModel.from_form(quartic)

    if check_smooth:
        if not quartic_discriminant(model):
            _log.debug(f"singular Weber quartic {model}")
            raise NotSmooth("reconstructed quartic is singular", null_point=theta)
    return model
