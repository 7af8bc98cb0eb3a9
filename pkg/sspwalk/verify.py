"""superspeciality oracles independent of the theta pipeline

A curve is superspecial iff its Cartier-Manin (hyperelliptic) or
Hasse-Witt (plane quartic) matrix vanishes. Both are read off from
coefficients of a power of the defining polynomial.
"""
from typing import Any
from typing import Dict
from typing import NamedTuple
from typing import Sequence
from typing import Tuple
from typing import Union

from sspwalk._algebra import poly_derivative
from sspwalk._algebra import poly_gcd
from sspwalk._algebra import poly_mul
from sspwalk._algebra import poly_trim
from sspwalk.curves import CurveModel
from sspwalk.curves import HyperellipticModel
from sspwalk.curves import QuarticModel
from sspwalk.curves import curve_from_json
from sspwalk.curves import quartic_discriminant
from sspwalk.exceptions import NotSmooth
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField
from sspwalk.forms import monomials

__all__ = [
    "CartierManinMatrix",
    "cartier_manin_hyperelliptic",
    "curve_from_json",
    "hasse_witt_quartic",
    "is_superspecial",
]

Exponent = Tuple[int, int, int]

# exponent vectors of the basis of H^1(O_C) of a smooth plane quartic
_QUARTIC_BASIS: Tuple[Exponent, ...] = ((2, 1, 1), (1, 2, 1), (1, 1, 2))


class CartierManinMatrix(NamedTuple):
    g: int
    entries: Tuple[Tuple[FieldElement, ...], ...]

    def is_zero(self) -> bool:
        return not any(v for row in self.entries for v in row)

    def to_json(self) -> Dict[str, Any]:
        return {"g": self.g, "entries": [[v.to_json() for v in row] for row in self.entries]}

    def __str__(self) -> str:
        return "\n".join("[" + ", ".join(str(v) for v in row) + "]" for row in self.entries)


def cartier_manin_hyperelliptic(
    f: Union[HyperellipticModel, Sequence[FieldElement]],
) -> CartierManinMatrix:
    """Cartier-Manin matrix of ``y^2 = f(x)``

    Entry (i, j) is the coefficient of ``x^(i p - j)`` in
    ``f^((p-1)/2)`` for ``1 <= i, j <= g``.

    Raises
    ------
    NotSmooth
        if f has a repeated root or a degree below 3
    """
    coeffs = poly_trim(list(f.coeffs if isinstance(f, HyperellipticModel) else f))
    if len(coeffs) < 4:
        raise NotSmooth("right hand side must have degree at least 3")
    if len(poly_gcd(coeffs, poly_derivative(coeffs))) > 1:
        raise NotSmooth("right hand side has a repeated root")
    field = coeffs[0].field
    p = field.p
    g = (len(coeffs) - 2) // 2

    power = [field.one]
    for _ in range((p - 1) // 2):
        power = poly_mul(power, coeffs)

    def coefficient(k: int) -> FieldElement:
        return power[k] if 0 <= k < len(power) else field.zero

    entries = tuple(
        tuple(coefficient(i * p - j) for j in range(1, g + 1))
        for i in range(1, g + 1)
    )
    return CartierManinMatrix(g, entries)


def hasse_witt_quartic(model: QuarticModel) -> CartierManinMatrix:
    """Hasse-Witt matrix of a smooth plane quartic

    Entry (u, v) over the basis exponents is the coefficient of
    ``x^(p u - v)`` in ``F^(p-1)``. Terms of the intermediate powers
    exceeding ``2p - 1`` in some variable can't reach any target and
    are dropped.

    Raises
    ------
    NotSmooth
        if the quartic is singular
    """
    if not quartic_discriminant(model):
        raise NotSmooth("plane quartic is singular")
    field = model.field
    p = field.p
    bound = 2 * p - 1
    terms = {e: c for e, c in zip(monomials(3, 4), model.coeffs) if c}

    power: Dict[Exponent, FieldElement] = {(0, 0, 0): field.one}
    for _ in range(p - 1):
        nxt: Dict[Exponent, FieldElement] = {}
        for e1, c1 in power.items():
            for e2, c2 in terms.items():
                e = (e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2])
                if e[0] > bound or e[1] > bound or e[2] > bound:
                    continue
                nxt[e] = nxt[e] + c1 * c2 if e in nxt else c1 * c2
        power = {e: c for e, c in nxt.items() if c}

    entries = tuple(
        tuple(
            power.get((p * u[0] - v[0], p * u[1] - v[1], p * u[2] - v[2]), field.zero)
            for v in _QUARTIC_BASIS
        )
        for u in _QUARTIC_BASIS
    )
    return CartierManinMatrix(3, entries)


def is_superspecial(model: CurveModel) -> bool:
    if isinstance(model, HyperellipticModel):
        return cartier_manin_hyperelliptic(model).is_zero()
    return hasse_witt_quartic(model).is_zero()


def verify_json(data: Dict[str, Any], field: PrimeField) -> CartierManinMatrix:
    """parse a curve and return its matrix"""
    model = curve_from_json(data, field)
    if isinstance(model, HyperellipticModel):
        return cartier_manin_hyperelliptic(model)
    return hasse_witt_quartic(model)
