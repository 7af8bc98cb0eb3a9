"""supersingular elliptic seeds and product null-points"""
from collections import OrderedDict
from math import comb
from typing import Any
from typing import Dict
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence

import numpy as np

from sspwalk._logging import get_logger
from sspwalk.exceptions import InvalidNullPoint
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField
from sspwalk.theta import SquaredThetaNullPoint

__all__ = [
    "EllipticSeed",
    "any_supersingular_lambda",
    "elliptic_theta",
    "hasse_polynomial",
    "j_invariant",
    "product_theta",
    "seeds_to_json",
    "supersingular_lambdas",
    "supersingular_roots",
]

_log = get_logger(__name__)

# elements of F_{p^2} evaluated per numpy round
_CHUNK = 1 << 16


class EllipticSeed(NamedTuple):
    """a supersingular Legendre curve ``y^2 = x (x - 1) (x - lam)``"""
    lam: FieldElement
    j: FieldElement
    theta: SquaredThetaNullPoint

    def to_json(self) -> Dict[str, Any]:
        return {
            "lambda": self.lam.to_json(),
            "j": self.j.to_json(),
            "theta": self.theta.to_json(),
        }


def hasse_polynomial(p: int) -> List[int]:
    """ascending coefficients of ``sum C(m, i)**2 x**i`` with ``m = (p-1)/2``"""
    m = (p - 1) // 2
    return [comb(m, i) ** 2 % p for i in range(m + 1)]


def _chunks(field: PrimeField) -> Iterator[np.ndarray]:
    p = field.p
    total = p * p
    for start in range(0, total, _CHUNK):
        flat = np.arange(start, min(start + _CHUNK, total), dtype=np.int64)
        # flat index c1 * p + c0 follows the canonical (c1, c0) order
        yield np.stack((flat % p, flat // p), axis=-1)


def _hasse_roots_in(field: PrimeField, xs: np.ndarray, coeffs: Sequence[int]) -> np.ndarray:
    acc = np.zeros_like(xs)
    for c in reversed(coeffs):
        acc = field.vmul(acc, xs)
        acc[..., 0] = (acc[..., 0] + c) % field.p
    return xs[~(acc.any(axis=-1))]


def supersingular_roots(field: PrimeField) -> List[FieldElement]:
    """all supersingular Legendre parameters, in canonical order"""
    coeffs = hasse_polynomial(field.p)
    roots: List[FieldElement] = []
    for xs in _chunks(field):
        roots.extend(field.from_array(_hasse_roots_in(field, xs, coeffs)))
    return roots


def any_supersingular_lambda(field: PrimeField) -> FieldElement:
    """the first supersingular Legendre parameter in canonical order"""
    coeffs = hasse_polynomial(field.p)
    for xs in _chunks(field):
        found = _hasse_roots_in(field, xs, coeffs)
        if len(found):
            return field.from_array(found[:1])[0]
    raise RuntimeError(f"no supersingular Legendre parameter over F_{field.p}^2")  # pragma: no cover


def j_invariant(lam: FieldElement) -> FieldElement:
    """``256 (lam^2 - lam + 1)^3 / (lam^2 (lam - 1)^2)``"""
    num = (lam * lam - lam + 1) ** 3 * 256
    den = (lam * (lam - 1)) ** 2
    return num / den


def elliptic_theta(lam: FieldElement) -> Optional[SquaredThetaNullPoint]:
    """squared theta null-point ``[sqrt(lam) : sqrt(lam - 1) : 1 : 0]``

    Returns None if one of the roots does not exist in F_{p^2}.
    """
    field = lam.field
    r0 = field.sqrt(lam)
    r1 = field.sqrt(lam - 1)
    if r0 is None or r1 is None:
        return None
    return SquaredThetaNullPoint.from_values(1, (r0, r1, field.one, field.zero))


def supersingular_lambdas(field: PrimeField) -> List[EllipticSeed]:
    """one seed per isomorphism class of supersingular elliptic curves

    The Legendre parameters are grouped by j-invariant; each class is
    represented by its first parameter with both ``lam`` and ``lam - 1``
    square in F_{p^2}.

    Raises
    ------
    InvalidNullPoint
        if some class has no such parameter
    """
    classes: "OrderedDict[FieldElement, List[FieldElement]]" = OrderedDict()
    for lam in supersingular_roots(field):
        classes.setdefault(j_invariant(lam), []).append(lam)

    seeds = []
    for j, lams in classes.items():
        for lam in lams:
            theta = elliptic_theta(lam)
            if theta is not None:
                seeds.append(EllipticSeed(lam, j, theta))
                break
        else:
            raise InvalidNullPoint(f"no Legendre parameter with rational theta constants for j={j}")
    _log.info(f"p={field.p}: {len(seeds)} supersingular j-invariants")
    return seeds


def product_theta(theta1: SquaredThetaNullPoint, theta2: SquaredThetaNullPoint) -> SquaredThetaNullPoint:
    """null-point of the product variety, characteristics interleaved"""
    g1, g2 = theta1.g, theta2.g
    g = g1 + g2
    if g not in (2, 3):
        raise ValueError(f"product genus must be 2 or 3, got {g}")
    field = theta1.field
    n1, n2 = 1 << g1, 1 << g2
    out = [field.zero] * 4 ** g
    for i1, v1 in enumerate(theta1.values):
        if not v1:
            continue
        b1, a1 = i1 % n1, i1 // n1
        for i2, v2 in enumerate(theta2.values):
            if not v2:
                continue
            b2, a2 = i2 % n2, i2 // n2
            b = b1 | (b2 << g1)
            a = a1 | (a2 << g1)
            out[b + (a << g)] = v1 * v2
    return SquaredThetaNullPoint.from_values(g, out)


def seeds_to_json(seeds: Sequence[EllipticSeed]) -> List[Dict[str, Any]]:
    return [seed.to_json() for seed in seeds]
