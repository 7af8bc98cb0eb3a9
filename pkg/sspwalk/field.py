"""arithmetic in F_p and its quadratic extension F_{p^2}

The extension is modelled as ``F_p(t)`` with ``t**2 == nonresidue`` where
the nonresidue is the smallest positive quadratic nonresidue modulo p.
Elements are immutable :class:`FieldElement` tuples ``(c0, c1, field)``
representing ``c0 + c1*t``.

Besides scalar arithmetic the field offers a few vectorized helpers on
numpy ``int64`` arrays of shape ``(..., 2)`` holding ``(c0, c1)`` pairs.
They are used by the dense form arithmetic and require ``p < 2**31``.
"""
import random
import re
from typing import Any
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Tuple
from typing import Union

import numpy as np

from sspwalk._utils import cached_property

__all__ = [
    "FieldElement",
    "PrimeField",
    "is_prime",
    "legendre_symbol",
    "sqrt_mod_p",
]

# packed products of two reduced coordinates must fit into int64
VECTOR_PRIME_BOUND = 2 ** 31

_ELEMENT_STR = re.compile(r"^\s*(?P<c0>-?\d+)\s*(?:(?P<sign>[+-])\s*(?P<c1>\d+)\s*\*\s*t)?\s*$")


def is_prime(n: int) -> bool:
    """deterministic primality test by trial division"""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def legendre_symbol(a: int, p: int) -> int:
    """return 1, -1 or 0"""
    a %= p
    if a == 0:
        return 0
    return 1 if pow(a, (p - 1) // 2, p) == 1 else -1


def sqrt_mod_p(a: int, p: int) -> Optional[int]:
    """Tonelli-Shanks square root in F_p, None for nonresidues"""
    a %= p
    if a == 0:
        return 0
    if pow(a, (p - 1) // 2, p) != 1:
        return None
    if p % 4 == 3:
        return pow(a, (p + 1) // 4, p)

    # p - 1 = q * 2**s with q odd
    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while pow(z, (p - 1) // 2, p) != p - 1:
        z += 1

    m, c, t, r = s, pow(z, q, p), pow(a, q, p), pow(a, (q + 1) // 2, p)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = pow(c, 1 << (m - i - 1), p)
        m, c = i, b * b % p
        t, r = t * c % p, r * b % p
    return r


class FieldElement(NamedTuple):
    """an element ``c0 + c1*t`` of F_{p^2}

    Construct elements through their field, i.e. ``field(c0, c1)``,
    which reduces the coefficients.
    """
    c0: int
    c1: int
    field: "PrimeField"

    # --- comparison ---------------------------------------------------

    def __eq__(self, other: Any) -> bool:  # type: ignore[override]
        if isinstance(other, FieldElement):
            return (
                self.c0 == other.c0
                and self.c1 == other.c1
                and self.field.p == other.field.p
            )
        if isinstance(other, int):
            return self.c1 == 0 and self.c0 == other % self.field.p
        return NotImplemented

    def __ne__(self, other: Any) -> bool:  # type: ignore[override]
        eq = self.__eq__(other)
        return eq if eq is NotImplemented else not eq

    def __hash__(self) -> int:
        return hash((self.c0, self.c1, self.field.p))

    def __bool__(self) -> bool:
        return bool(self.c0 or self.c1)

    def sort_key(self) -> Tuple[int, int]:
        """key of the canonical total order on F_{p^2}"""
        return self.c1, self.c0

    # --- arithmetic ---------------------------------------------------

    def __add__(self, other: Union["FieldElement", int]) -> "FieldElement":
        f = self.field
        if isinstance(other, FieldElement):
            return FieldElement((self.c0 + other.c0) % f.p, (self.c1 + other.c1) % f.p, f)
        if isinstance(other, int):
            return FieldElement((self.c0 + other) % f.p, self.c1, f)
        return NotImplemented

    __radd__ = __add__

    def __neg__(self) -> "FieldElement":
        f = self.field
        return FieldElement(-self.c0 % f.p, -self.c1 % f.p, f)

    def __sub__(self, other: Union["FieldElement", int]) -> "FieldElement":
        f = self.field
        if isinstance(other, FieldElement):
            return FieldElement((self.c0 - other.c0) % f.p, (self.c1 - other.c1) % f.p, f)
        if isinstance(other, int):
            return FieldElement((self.c0 - other) % f.p, self.c1, f)
        return NotImplemented

    def __rsub__(self, other: int) -> "FieldElement":
        return (-self).__add__(other)

    def __mul__(self, other: Union["FieldElement", int]) -> "FieldElement":  # type: ignore[override]
        f = self.field
        p = f.p
        if isinstance(other, FieldElement):
            a0, a1, b0, b1 = self.c0, self.c1, other.c0, other.c1
            return FieldElement(
                (a0 * b0 + a1 * b1 * f.nonresidue) % p,
                (a0 * b1 + a1 * b0) % p,
                f,
            )
        if isinstance(other, int):
            return FieldElement(self.c0 * other % p, self.c1 * other % p, f)
        return NotImplemented

    __rmul__ = __mul__  # type: ignore[assignment]

    def norm(self) -> int:
        """the norm ``x * x**p`` as an element of F_p"""
        f = self.field
        return (self.c0 * self.c0 - f.nonresidue * self.c1 * self.c1) % f.p

    def conjugate(self) -> "FieldElement":
        """the frobenius image ``x**p``"""
        return FieldElement(self.c0, -self.c1 % self.field.p, self.field)

    def inverse(self) -> "FieldElement":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in F_p^2")
        p = self.field.p
        n_inv = pow(n, p - 2, p)
        return FieldElement(self.c0 * n_inv % p, -self.c1 * n_inv % p, self.field)

    def __truediv__(self, other: Union["FieldElement", int]) -> "FieldElement":
        if isinstance(other, int):
            other = self.field(other)
        if not isinstance(other, FieldElement):
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other: int) -> "FieldElement":
        return self.inverse() * other

    def __pow__(self, exponent: int) -> "FieldElement":  # type: ignore[override]
        if exponent < 0:
            return self.inverse().__pow__(-exponent)
        f = self.field
        p, n = f.p, f.nonresidue
        r0, r1 = 1, 0
        b0, b1 = self.c0, self.c1
        while exponent:
            if exponent & 1:
                r0, r1 = (r0 * b0 + r1 * b1 * n) % p, (r0 * b1 + r1 * b0) % p
            b0, b1 = (b0 * b0 + b1 * b1 * n) % p, (2 * b0 * b1) % p
            exponent >>= 1
        return FieldElement(r0, r1, f)

    def is_square(self) -> bool:
        return self.field.is_square(self)

    def sqrt(self) -> Optional["FieldElement"]:
        return self.field.sqrt(self)

    # --- serialization ------------------------------------------------

    def to_json(self) -> List[int]:
        return [self.c0, self.c1]

    def __str__(self) -> str:
        return f"{self.c0}+{self.c1}*t"

    def __repr__(self) -> str:
        return f"FieldElement({self}, p={self.field.p})"


class PrimeField:
    """the field F_{p^2} = F_p(t) for a prime p > 7"""

    def __init__(self, p: int) -> None:
        p = int(p)
        if p <= 7 or not is_prime(p):
            raise ValueError(f"p must be a prime > 7, got {p}")
        self.p = p
        self.nonresidue = next(n for n in range(2, p) if legendre_symbol(n, p) == -1)

    def __repr__(self) -> str:
        return f"PrimeField({self.p})"

    def __eq__(self, other: Any) -> bool:
        if isinstance(other, PrimeField):
            return self.p == other.p
        return NotImplemented

    def __hash__(self) -> int:
        return hash(("PrimeField", self.p))

    def __reduce__(self):
        return PrimeField, (self.p,)

    # --- constructors -------------------------------------------------

    def __call__(self, c0: Union[int, FieldElement] = 0, c1: int = 0) -> FieldElement:
        if isinstance(c0, FieldElement):
            return c0
        return FieldElement(int(c0) % self.p, int(c1) % self.p, self)

    @cached_property
    def zero(self) -> FieldElement:
        return FieldElement(0, 0, self)

    @cached_property
    def one(self) -> FieldElement:
        return FieldElement(1, 0, self)

    @cached_property
    def t(self) -> FieldElement:
        """the generator of the extension"""
        return FieldElement(0, 1, self)

    def from_json(self, value: Union[int, str, List[int], Tuple[int, int]]) -> FieldElement:
        """parse an int, a [c0, c1] pair or a "c0+c1*t" string"""
        if isinstance(value, bool):
            raise TypeError("booleans are not field elements")
        if isinstance(value, int):
            return self(value)
        if isinstance(value, str):
            m = _ELEMENT_STR.match(value)
            if not m:
                raise ValueError(f"can't parse field element {value!r}")
            c1 = int(m.group("c1") or 0)
            if m.group("sign") == "-":
                c1 = -c1
            return self(int(m.group("c0")), c1)
        c0, c1 = value
        return self(int(c0), int(c1))

    def elements(self) -> Iterator[FieldElement]:
        """iterate all p**2 elements in canonical order"""
        for c1 in range(self.p):
            for c0 in range(self.p):
                yield FieldElement(c0, c1, self)

    def random_element(self, rng: random.Random, nonzero: bool = False) -> FieldElement:
        while True:
            x = FieldElement(rng.randrange(self.p), rng.randrange(self.p), self)
            if x or not nonzero:
                return x

    # --- square roots -------------------------------------------------

    def is_square(self, x: FieldElement) -> bool:
        x = self(x)
        if not x:
            return True
        return legendre_symbol(x.norm(), self.p) == 1

    def sqrt(self, x: Union[FieldElement, int]) -> Optional[FieldElement]:
        """canonical square root or None if x is not a square

        Of the two roots r and -r the one with the lexicographically
        smaller (c1, c0) pair is returned.
        """
        x = self(x)
        p, n = self.p, self.nonresidue
        a, b = x.c0, x.c1
        if b == 0:
            r = sqrt_mod_p(a, p)
            if r is not None:
                root = FieldElement(r, 0, self)
            else:
                # a/n is a residue because a and n both are not
                s = sqrt_mod_p(a * pow(n, p - 2, p), p)
                assert s is not None
                root = FieldElement(0, s, self)
        else:
            # (c0 + c1 t)^2 = x  <=>  c0^2 = (a +- sqrt(norm)) / 2, c1 = b / (2 c0)
            s = sqrt_mod_p(x.norm(), p)
            if s is None:
                return None
            half = (p + 1) // 2
            for candidate in ((a + s) * half % p, (a - s) * half % p):
                c0 = sqrt_mod_p(candidate, p)
                if c0:
                    break
            else:
                return None  # pragma: no cover
            c1 = b * pow(2 * c0, p - 2, p) % p
            root = FieldElement(c0, c1, self)
        neg = -root
        return root if root.sort_key() <= neg.sort_key() else neg

    @cached_property
    def _fourth_root_of_unity(self) -> FieldElement:
        i = self.sqrt(self(-1))
        assert i is not None
        return i

    def fourth_root_of_unity(self) -> FieldElement:
        """a fixed element i with i**2 == -1"""
        return self._fourth_root_of_unity

    # --- vectorized helpers -------------------------------------------

    def array(self, values: Iterable[FieldElement]) -> np.ndarray:
        """pack field elements into an (n, 2) int64 array"""
        if self.p >= VECTOR_PRIME_BOUND:
            raise ValueError(f"vectorized arithmetic needs p < 2**31, got {self.p}")
        data = [(v.c0, v.c1) for v in values]
        return np.array(data, dtype=np.int64).reshape(len(data), 2)

    def from_array(self, arr: np.ndarray) -> List[FieldElement]:
        return [FieldElement(int(c0), int(c1), self) for c0, c1 in np.asarray(arr).reshape(-1, 2).tolist()]

    def vmul(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        """elementwise product of packed arrays (broadcasting)"""
        p = self.p
        x0, x1 = x[..., 0], x[..., 1]
        y0, y1 = y[..., 0], y[..., 1]
        # reduce every product before adding
        c0 = (x0 * y0 % p + (x1 * y1 % p) * self.nonresidue % p) % p
        c1 = (x0 * y1 % p + x1 * y0 % p) % p
        return np.stack((c0, c1), axis=-1)

    def vscale(self, x: np.ndarray, k: np.ndarray) -> np.ndarray:
        """multiply packed elements by reduced F_p integers"""
        return (x * (np.asarray(k, dtype=np.int64) % self.p)[..., None]) % self.p
