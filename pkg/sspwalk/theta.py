"""squared theta null-points and the (2,...,2)-isogeny step

A theta characteristic ``[a; b]`` with bit vectors ``a, b`` of length g is
packed into the integer ``i = sum(b_k 2**k) + sum(a_k 2**(g+k))``, i.e. the
b-bits are low and the a-bits high. The characteristic is even iff
``a . b`` is even.
"""
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Tuple

from sspwalk._logging import get_logger
from sspwalk.exceptions import InvalidNullPoint
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField

__all__ = [
    "FundamentalThetas",
    "SquaredThetaNullPoint",
    "check_product_relation",
    "even_indices",
    "index_decode",
    "index_encode",
    "is_even",
    "isogeny_step",
    "odd_indices",
    "recover_fundamental",
]

_log = get_logger(__name__)

GENERA = (1, 2, 3)

Bits = Tuple[int, ...]


def _check_genus(g: int) -> None:
    if g not in GENERA:
        raise ValueError(f"genus must be one of {GENERA}, got {g}")


def index_decode(i: int, g: int) -> Tuple[Bits, Bits]:
    """return the characteristic bit vectors (a, b) of index i"""
    _check_genus(g)
    if not 0 <= i < 4 ** g:
        raise ValueError(f"theta index {i} out of range for g={g}")
    b = tuple((i >> k) & 1 for k in range(g))
    a = tuple((i >> (g + k)) & 1 for k in range(g))
    return a, b


def index_encode(a: Sequence[int], b: Sequence[int]) -> int:
    """inverse of :func:`index_decode`"""
    g = len(a)
    _check_genus(g)
    if len(b) != g:
        raise ValueError("characteristic vectors must have equal length")
    i = 0
    for k in range(g):
        i |= (int(b[k]) & 1) << k
        i |= (int(a[k]) & 1) << (g + k)
    return i


def is_even(i: int, g: int) -> bool:
    a, b = index_decode(i, g)
    return sum(x * y for x, y in zip(a, b)) % 2 == 0


@lru_cache(maxsize=None)
def even_indices(g: int) -> Tuple[int, ...]:
    return tuple(i for i in range(4 ** g) if is_even(i, g))


@lru_cache(maxsize=None)
def odd_indices(g: int) -> Tuple[int, ...]:
    return tuple(i for i in range(4 ** g) if not is_even(i, g))


class SquaredThetaNullPoint(NamedTuple):
    """projective vector of the 4**g squared theta constants"""
    g: int
    values: Tuple[FieldElement, ...]

    @classmethod
    def from_values(cls, g: int, values: Sequence[FieldElement], normalize: bool = True) -> "SquaredThetaNullPoint":
        """validate and (by default) normalize a squared theta null-point

        Raises
        ------
        InvalidNullPoint
            if an odd entry is nonzero or all even entries vanish
        """
        _check_genus(g)
        values = tuple(values)
        if len(values) != 4 ** g:
            raise ValueError(f"expected {4 ** g} values for g={g}, got {len(values)}")
        theta = cls(g, values)
        for i in odd_indices(g):
            if values[i]:
                raise InvalidNullPoint(f"odd squared theta constant {i} does not vanish", null_point=theta)
        if not any(values[i] for i in even_indices(g)):
            raise InvalidNullPoint("all even squared theta constants vanish", null_point=theta)
        return theta.normalized() if normalize else theta

    @property
    def field(self) -> PrimeField:
        return self.values[0].field

    def normalized(self) -> "SquaredThetaNullPoint":
        """rescale so that the first nonzero even entry is 1"""
        pivot = next(self.values[i] for i in even_indices(self.g) if self.values[i])
        if pivot == 1:
            return self
        inv = pivot.inverse()
        return SquaredThetaNullPoint(self.g, tuple(v * inv for v in self.values))

    def even_values(self) -> Tuple[FieldElement, ...]:
        return tuple(self.values[i] for i in even_indices(self.g))

    def is_projectively_equal(self, other: "SquaredThetaNullPoint") -> bool:
        if self.g != other.g:
            return False
        return self.normalized().values == other.normalized().values

    def to_json(self, compact: bool = False) -> Dict[str, Any]:
        if compact:
            return {"g": self.g, "compact": True, "even": [v.to_json() for v in self.even_values()]}
        return {"g": self.g, "values": [v.to_json() for v in self.values]}

    @classmethod
    def from_json(cls, data: Dict[str, Any], field: PrimeField) -> "SquaredThetaNullPoint":
        g = int(data["g"])
        if data.get("compact"):
            values = [field.zero] * 4 ** g
            even = data["even"]
            if len(even) != len(even_indices(g)):
                raise ValueError("compact null-point has the wrong number of even entries")
            for i, v in zip(even_indices(g), even):
                values[i] = field.from_json(v)
        else:
            values = [field.from_json(v) for v in data["values"]]
        return cls.from_values(g, values)


class FundamentalThetas(NamedTuple):
    """the 2**g theta constants with zero upper characteristic"""
    g: int
    theta: Tuple[FieldElement, ...]


def _product_relation_terms(values: Sequence[FieldElement]):
    s = values
    lhs = s[0] * s[1] * s[2] * s[3] + s[4] * s[5] * s[6] * s[7] - s[32] * s[33] * s[34] * s[35]
    return lhs


def check_product_relation(theta: SquaredThetaNullPoint) -> bool:
    """squared form of the genus 3 product relation of the fundamental thetas

    Holds for every genuine g=3 null-point; vacuously true for others.
    """
    if theta.g != 3:
        return True
    s = theta.values
    prod = s[0]
    for j in range(1, 8):
        prod = prod * s[j]
    lhs = _product_relation_terms(s)
    return lhs * lhs == prod * 4


def recover_fundamental(
    theta: SquaredThetaNullPoint,
    signs: Optional[Sequence[int]] = None,
) -> FundamentalThetas:
    """recover the fundamental theta constants from their squares

    All squares are divided by the first nonzero one (the pivot), so the
    pivot theta is 1 and every other theta is the canonical square root
    of its ratio. For g=3 with no vanishing fundamental square the last
    theta is fixed by the product relation instead of a square root.

    Parameters
    ----------
    theta:
        squared theta null-point with g in (2, 3)
    signs:
        optional sequence of 2**g values in (1, -1) flipping the chosen roots

    Raises
    ------
    InvalidNullPoint
        if all fundamental squares vanish or are inconsistent
    """
    g = theta.g
    if g not in (2, 3):
        raise ValueError(f"fundamental thetas are only recovered for g in (2, 3), got {g}")
    field = theta.field
    n = 1 << g
    squares = theta.values[:n]
    pivot = next((j for j, v in enumerate(squares) if v), None)
    if pivot is None:
        raise InvalidNullPoint("all fundamental squared theta constants vanish", null_point=theta)
    inv = squares[pivot].inverse()

    roots = []
    for j, v in enumerate(squares):
        r = field.sqrt(v * inv)
        if r is None:
            raise InvalidNullPoint(f"squared theta constant {j} is not a square", null_point=theta)
        roots.append(r)
    if signs is not None:
        roots = [-r if s < 0 else r for r, s in zip(roots, signs)]

    if g == 3 and all(squares):
        normalized = [v * inv for v in theta.values]
        den = roots[0] * 2
        for j in range(1, 7):
            den = den * roots[j]
        theta7 = _product_relation_terms(normalized) / den
        if theta7 * theta7 != normalized[7]:
            raise InvalidNullPoint("fundamental thetas violate the product relation", null_point=theta)
        roots[7] = theta7

    return FundamentalThetas(g, tuple(roots))


def _popcount(x: int) -> int:
    return bin(x).count("1")


def isogeny_step(
    theta: SquaredThetaNullPoint,
    signs: Optional[Sequence[int]] = None,
) -> SquaredThetaNullPoint:
    """squared theta null-point of the codomain of the standard isogeny

    Duplication formula: for index i = (a, b)
    ``theta'_i^2 = sum_j (-1)^(a.j) theta_j theta_(j xor b)``
    (the global factor 2**-g is dropped). Odd entries vanish by the
    pairing j <-> j xor b; the result is validated and normalized.
    """
    fund = recover_fundamental(theta, signs)
    g = theta.g
    n = 1 << g
    th = fund.theta
    zero = theta.field.zero

    # products theta_j * theta_(j xor b) for each lower characteristic b
    products = [[th[j] * th[j ^ b] for j in range(n)] for b in range(n)]

    values = []
    for i in range(4 ** g):
        b, a = i & (n - 1), i >> g
        acc = zero
        row = products[b]
        for j in range(n):
            if _popcount(a & j) & 1:
                acc = acc - row[j]
            else:
                acc = acc + row[j]
        values.append(acc)
    return SquaredThetaNullPoint.from_values(g, values)
