"""dense homogeneous forms over F_{p^2}

A form of degree d in n variables stores one packed ``(c0, c1)`` pair per
monomial in an int64 array of shape ``(N, 2)``. Monomials are ordered
graded lexicographically with ``x > y > z``; for binary forms index ``i``
is the monomial ``x**(d-i) * y**i``.

Products, derivatives and contractions are driven by cached index tables
so every operation is a handful of numpy calls.
"""
from functools import lru_cache
from math import factorial
from typing import Any
from typing import Dict
from typing import Iterator
from typing import List
from typing import Mapping
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from sspwalk.field import FieldElement
from sspwalk.field import PrimeField

__all__ = [
    "Form",
    "monomials",
    "monomial_index",
]

Exponent = Tuple[int, ...]


@lru_cache(maxsize=None)
def monomials(nvars: int, degree: int) -> Tuple[Exponent, ...]:
    """exponent vectors of a given degree in graded lex order"""
    if nvars == 1:
        return ((degree,),)
    out = []
    for e in range(degree, -1, -1):
        for rest in monomials(nvars - 1, degree - e):
            out.append((e,) + rest)
    return tuple(out)


@lru_cache(maxsize=None)
def monomial_index(nvars: int, degree: int) -> Dict[Exponent, int]:
    return {e: i for i, e in enumerate(monomials(nvars, degree))}


def multi_factorial(e: Exponent) -> int:
    out = 1
    for x in e:
        out *= factorial(x)
    return out


@lru_cache(maxsize=None)
def _product_table(nvars: int, d1: int, d2: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    index = monomial_index(nvars, d1 + d2)
    ia, ib, io = [], [], []
    for i, a in enumerate(monomials(nvars, d1)):
        for j, b in enumerate(monomials(nvars, d2)):
            ia.append(i)
            ib.append(j)
            io.append(index[tuple(x + y for x, y in zip(a, b))])
    return (
        np.array(ia, dtype=np.intp),
        np.array(ib, dtype=np.intp),
        np.array(io, dtype=np.intp),
    )


@lru_cache(maxsize=None)
def _derivative_table(nvars: int, degree: int, var: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray]:
    index = monomial_index(nvars, degree - 1)
    src, dst, factor = [], [], []
    for i, e in enumerate(monomials(nvars, degree)):
        if e[var]:
            lowered = list(e)
            lowered[var] -= 1
            src.append(i)
            dst.append(index[tuple(lowered)])
            factor.append(e[var])
    return (
        np.array(src, dtype=np.intp),
        np.array(dst, dtype=np.intp),
        np.array(factor, dtype=np.int64),
    )


@lru_cache(maxsize=None)
def _contraction_table(nvars: int, d_op: int, d_target: int) -> Tuple[np.ndarray, np.ndarray, np.ndarray, np.ndarray]:
    # x^alpha (d) applied to x^beta gives beta!/(beta-alpha)! x^(beta-alpha)
    index = monomial_index(nvars, d_target - d_op)
    ia, ib, io, coef = [], [], [], []
    for i, a in enumerate(monomials(nvars, d_op)):
        for j, b in enumerate(monomials(nvars, d_target)):
            rest = tuple(y - x for x, y in zip(a, b))
            if min(rest) < 0:
                continue
            ia.append(i)
            ib.append(j)
            io.append(index[rest])
            coef.append(multi_factorial(b) // multi_factorial(rest))
    return (
        np.array(ia, dtype=np.intp),
        np.array(ib, dtype=np.intp),
        np.array(io, dtype=np.intp),
        np.array(coef, dtype=np.int64),
    )


class Form:
    """a homogeneous polynomial of degree ``degree`` in ``nvars`` variables"""

    __slots__ = ("field", "nvars", "degree", "coeffs")

    def __init__(self, field: PrimeField, nvars: int, degree: int, coeffs: Any = None) -> None:
        if degree < 0:
            raise ValueError("degree must be nonnegative")
        size = len(monomials(nvars, degree))
        if coeffs is None:
            arr = np.zeros((size, 2), dtype=np.int64)
        else:
            arr = np.asarray(coeffs, dtype=np.int64).reshape(size, 2) % field.p
        self.field = field
        self.nvars = nvars
        self.degree = degree
        self.coeffs = arr

    @classmethod
    def from_terms(
        cls,
        field: PrimeField,
        nvars: int,
        degree: int,
        terms: Mapping[Exponent, Union[FieldElement, int]],
    ) -> "Form":
        form = cls(field, nvars, degree)
        index = monomial_index(nvars, degree)
        for exponent, c in terms.items():
            c = field(c)
            form.coeffs[index[tuple(exponent)]] += (c.c0, c.c1)
        form.coeffs %= field.p
        return form

    @classmethod
    def from_values(cls, field: PrimeField, nvars: int, degree: int, values: Sequence[FieldElement]) -> "Form":
        return cls(field, nvars, degree, field.array(field(v) for v in values))

    @classmethod
    def variable(cls, field: PrimeField, nvars: int, var: int) -> "Form":
        e = [0] * nvars
        e[var] = 1
        return cls.from_terms(field, nvars, 1, {tuple(e): 1})

    @classmethod
    def constant_form(cls, field: PrimeField, nvars: int, c: Union[FieldElement, int]) -> "Form":
        return cls.from_terms(field, nvars, 0, {(0,) * nvars: c})

    # --- access -------------------------------------------------------

    def values(self) -> List[FieldElement]:
        return self.field.from_array(self.coeffs)

    def coefficient(self, exponent: Exponent) -> FieldElement:
        c0, c1 = self.coeffs[monomial_index(self.nvars, self.degree)[tuple(exponent)]]
        return self.field(int(c0), int(c1))

    def terms(self) -> Iterator[Tuple[Exponent, FieldElement]]:
        for e, c in zip(monomials(self.nvars, self.degree), self.values()):
            if c:
                yield e, c

    def constant(self) -> FieldElement:
        if self.degree != 0:
            raise ValueError(f"form of degree {self.degree} is not a constant")
        return self.values()[0]

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def evaluate(self, point: Sequence[FieldElement]) -> FieldElement:
        out = self.field.zero
        for e, c in self.terms():
            term = c
            for x, k in zip(point, e):
                if k:
                    term = term * x ** k
            out = out + term
        return out

    def __eq__(self, other: Any) -> bool:
        if not isinstance(other, Form):
            return NotImplemented
        return (
            self.field == other.field
            and self.nvars == other.nvars
            and self.degree == other.degree
            and bool(np.array_equal(self.coeffs, other.coeffs))
        )

    __hash__ = None  # type: ignore[assignment]

    def __repr__(self) -> str:
        terms = " + ".join(f"({c})*{e}" for e, c in self.terms()) or "0"
        return f"Form(nvars={self.nvars}, degree={self.degree}: {terms})"

    # --- arithmetic ---------------------------------------------------

    def _check_compatible(self, other: "Form") -> None:
        if self.nvars != other.nvars or self.degree != other.degree:
            raise ValueError("forms must have the same number of variables and degree")

    def __add__(self, other: "Form") -> "Form":
        self._check_compatible(other)
        return Form(self.field, self.nvars, self.degree, self.coeffs + other.coeffs)

    def __sub__(self, other: "Form") -> "Form":
        self._check_compatible(other)
        return Form(self.field, self.nvars, self.degree, self.coeffs - other.coeffs)

    def __neg__(self) -> "Form":
        return Form(self.field, self.nvars, self.degree, -self.coeffs)

    def scale(self, c: Union[FieldElement, int]) -> "Form":
        c = self.field(c)
        packed = np.array([c.c0, c.c1], dtype=np.int64)
        return Form(self.field, self.nvars, self.degree, self.field.vmul(self.coeffs, packed))

    def __mul__(self, other: "Form") -> "Form":
        if self.nvars != other.nvars:
            raise ValueError("forms must have the same number of variables")
        ia, ib, io = _product_table(self.nvars, self.degree, other.degree)
        prod = self.field.vmul(self.coeffs[ia], other.coeffs[ib])
        degree = self.degree + other.degree
        out = np.zeros((len(monomials(self.nvars, degree)), 2), dtype=np.int64)
        np.add.at(out, io, prod)
        return Form(self.field, self.nvars, degree, out)

    def __pow__(self, exponent: int) -> "Form":
        out = Form.constant_form(self.field, self.nvars, 1)
        for _ in range(exponent):
            out = out * self
        return out

    def derivative(self, var: int, times: int = 1) -> "Form":
        """partial derivative with respect to variable ``var``"""
        form = self
        for _ in range(times):
            if form.degree == 0:
                return Form(self.field, self.nvars, 0)
            src, dst, factor = _derivative_table(form.nvars, form.degree, var)
            out = np.zeros((len(monomials(form.nvars, form.degree - 1)), 2), dtype=np.int64)
            out[dst] = self.field.vscale(form.coeffs[src], factor % self.field.p)
            form = Form(self.field, form.nvars, form.degree - 1, out)
        return form

    def contract(self, other: "Form") -> "Form":
        """apply this form as a differential operator to ``other``"""
        if self.nvars != other.nvars:
            raise ValueError("forms must have the same number of variables")
        if self.degree > other.degree:
            raise ValueError("operator degree exceeds the degree of the target form")
        ia, ib, io, coef = _contraction_table(self.nvars, self.degree, other.degree)
        prod = self.field.vmul(self.coeffs[ia], other.coeffs[ib])
        prod = self.field.vscale(prod, coef % self.field.p)
        degree = other.degree - self.degree
        out = np.zeros((len(monomials(self.nvars, degree)), 2), dtype=np.int64)
        np.add.at(out, io, prod)
        return Form(self.field, self.nvars, degree, out)

    def substitute(self, matrix: Sequence[Sequence[Union[FieldElement, int]]]) -> "Form":
        """the form ``f(M x)``, variable i replaced by sum_j M[i][j] x_j"""
        field, n = self.field, self.nvars
        linear = [
            Form.from_terms(
                field, n, 1,
                {tuple(int(k == j) for k in range(n)): matrix[i][j] for j in range(n)},
            )
            for i in range(n)
        ]
        powers: List[List[Form]] = []
        for lin in linear:
            chain = [Form.constant_form(field, n, 1)]
            for _ in range(self.degree):
                chain.append(chain[-1] * lin)
            powers.append(chain)

        out = Form(field, n, self.degree)
        for e, c in self.terms():
            term = Form.constant_form(field, n, c)
            for i, k in enumerate(e):
                term = term * powers[i][k]
            out = out + term
        return out
