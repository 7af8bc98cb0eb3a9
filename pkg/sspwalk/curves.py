"""plane and hyperelliptic curve models

The models only describe equations; they don't know where a curve came
from. Both the theta reconstruction and the superspeciality oracles
build on them.
"""
from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Sequence
from typing import Tuple
from typing import Union

import numpy as np

from sspwalk._algebra import det_array
from sspwalk._algebra import poly_derivative
from sspwalk._algebra import poly_gcd
from sspwalk._algebra import poly_mul
from sspwalk._algebra import poly_trim
from sspwalk._logging import get_logger
from sspwalk.exceptions import DegenerateConfiguration
from sspwalk.exceptions import NotSmooth
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField
from sspwalk.forms import Form
from sspwalk.forms import monomial_index
from sspwalk.forms import monomials

__all__ = [
    "CurveModel",
    "HyperellipticModel",
    "QuarticModel",
    "curve_from_json",
    "quartic_discriminant",
]

_log = get_logger(__name__)


class HyperellipticModel(NamedTuple):
    """the curve ``y^2 = f(x)`` with ascending coefficients of f"""
    g: int
    coeffs: Tuple[FieldElement, ...]
    lambdas: Tuple[FieldElement, ...] = ()

    @classmethod
    def from_coeffs(cls, field: PrimeField, coeffs: Sequence[Union[FieldElement, int]]) -> "HyperellipticModel":
        """model of an arbitrary right hand side, checked for smoothness

        Raises
        ------
        NotSmooth
            if f has a repeated root or a degree outside ``{2g+1, 2g+2}``
        """
        f = poly_trim([field(c) for c in coeffs])
        degree = len(f) - 1
        if degree < 3:
            raise NotSmooth(f"degree {degree} does not define a curve of positive genus")
        g = (degree - 1) // 2
        if g > 3:
            raise ValueError(f"genus {g} is not supported")
        if len(poly_gcd(f, poly_derivative(f))) > 1:
            raise NotSmooth("right hand side has a repeated root")
        return cls(g, tuple(f))

    @classmethod
    def from_lambdas(cls, field: PrimeField, lambdas: Sequence[Union[FieldElement, int]]) -> "HyperellipticModel":
        """Rosenhain model ``x (x - 1) prod (x - lambda_k)``"""
        lams = tuple(field(lam) for lam in lambdas)
        if len(lams) not in (1, 3, 5):
            raise ValueError(f"expected 1, 3 or 5 Rosenhain parameters, got {len(lams)}")
        for lam in lams:
            if lam == 0 or lam == 1:
                raise NotSmooth(f"Rosenhain parameter {lam} collides with a fixed branch point")
        if len(set(lams)) != len(lams):
            raise NotSmooth("Rosenhain parameters are not distinct")
        f = [field.zero, field.one]
        f = poly_mul(f, [-field.one, field.one])
        for lam in lams:
            f = poly_mul(f, [-lam, field.one])
        return cls((len(lams) + 1) // 2, tuple(f), lams)

    @property
    def field(self) -> PrimeField:
        return self.coeffs[0].field

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def binary_form(self) -> Form:
        """homogenization of f to a binary form of degree 2g+2"""
        n = 2 * self.g + 2
        terms = {(j, n - j): c for j, c in enumerate(self.coeffs) if c}
        return Form.from_terms(self.field, 2, n, terms)

    def to_json(self) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "type": "hyperelliptic",
            "g": self.g,
            "coeffs": [c.to_json() for c in self.coeffs],
        }
        if self.lambdas:
            data["lambdas"] = [lam.to_json() for lam in self.lambdas]
        return data

    def __str__(self) -> str:
        terms = [f"({c})*x^{i}" for i, c in enumerate(self.coeffs) if c]
        return "y^2 = " + " + ".join(reversed(terms))


class QuarticModel(NamedTuple):
    """a ternary quartic with coefficients in graded lex order ``x > y > z``"""
    coeffs: Tuple[FieldElement, ...]

    @classmethod
    def from_form(cls, form: Form) -> "QuarticModel":
        if form.nvars != 3 or form.degree != 4:
            raise ValueError("expected a ternary quartic")
        return cls(tuple(form.values()))

    @classmethod
    def from_coeffs(cls, field: PrimeField, coeffs: Sequence[Union[FieldElement, int]]) -> "QuarticModel":
        if len(coeffs) != 15:
            raise ValueError(f"a ternary quartic has 15 coefficients, got {len(coeffs)}")
        return cls(tuple(field(c) for c in coeffs))

    @property
    def field(self) -> PrimeField:
        return self.coeffs[0].field

    def form(self) -> Form:
        return Form.from_values(self.field, 3, 4, self.coeffs)

    def to_json(self) -> Dict[str, Any]:
        return {
            "type": "quartic",
            "monomials": [list(e) for e in monomials(3, 4)],
            "coeffs": [c.to_json() for c in self.coeffs],
        }

    def __str__(self) -> str:
        names = "xyz"
        terms = []
        for e, c in zip(monomials(3, 4), self.coeffs):
            if c:
                mono = "*".join(f"{names[k]}^{n}" for k, n in enumerate(e) if n)
                terms.append(f"({c})*{mono}")
        return " + ".join(terms) + " = 0"


CurveModel = Union[HyperellipticModel, QuarticModel]


def curve_from_json(data: Dict[str, Any], field: PrimeField) -> CurveModel:
    """parse the curve json written by the models' ``to_json``"""
    kind = data.get("type")
    if kind == "hyperelliptic":
        if data.get("lambdas") and "coeffs" not in data:
            return HyperellipticModel.from_lambdas(field, [field.from_json(v) for v in data["lambdas"]])
        model = HyperellipticModel.from_coeffs(field, [field.from_json(v) for v in data["coeffs"]])
        if data.get("lambdas"):
            model = model._replace(lambdas=tuple(field.from_json(v) for v in data["lambdas"]))
        return model
    elif kind == "quartic":
        return QuarticModel.from_coeffs(field, [field.from_json(v) for v in data["coeffs"]])
    else:
        raise ValueError(f"unknown curve type {kind!r}")


# --- discriminant -----------------------------------------------------------

def _quartic_form(model: Any) -> Form:
    form = model if isinstance(model, Form) else model.form()
    if form.nvars != 3 or form.degree != 4:
        raise ValueError("expected a ternary quartic")
    return form


def _macaulay(f: Form) -> Tuple[FieldElement, FieldElement]:
    """determinants of the Macaulay matrix of the partials and of its extraneous minor"""
    field = f.field
    partials = [f.derivative(i) for i in range(3)]
    cols = monomials(3, 7)
    index = monomial_index(3, 7)
    cubic = monomials(3, 3)
    mat = np.zeros((len(cols), len(cols), 2), dtype=np.int64)
    for r, m in enumerate(cols):
        v = 0 if m[0] >= 3 else (1 if m[1] >= 3 else 2)
        shift = list(m)
        shift[v] -= 3
        for e, c in zip(cubic, partials[v].coeffs):
            mat[r, index[tuple(s + x for s, x in zip(shift, e))]] = c
    # monomials divisible by two of x^3, y^3, z^3
    extraneous = [i for i, m in enumerate(cols) if sum(x >= 3 for x in m) >= 2]
    minor = det_array(field, mat[np.ix_(extraneous, extraneous)])
    return det_array(field, mat), minor


def _unipotent(t: int) -> List[List[int]]:
    upper = np.array([[1, t, t], [0, 1, t], [0, 0, 1]], dtype=np.int64)
    lower = np.array([[1, 0, 0], [t, 1, 0], [t, t, 1]], dtype=np.int64)
    return (upper @ lower).tolist()


def quartic_discriminant(model: Any) -> FieldElement:
    """discriminant of a plane quartic (up to a constant), zero iff singular

    Computed as the Macaulay resultant of the three partial derivatives.
    When the extraneous minor vanishes the form is moved by unimodular
    substitutions, which leave the discriminant unchanged.

    Raises
    ------
    DegenerateConfiguration
        if no substitution gives a usable Macaulay quotient
    """
    f = _quartic_form(model)
    candidate = f
    for t in range(9):
        if t:
            candidate = f.substitute(_unipotent(t))
        full, minor = _macaulay(candidate)
        if minor:
            return full / minor
        _log.debug(f"extraneous Macaulay minor vanishes, substituting with t={t + 1}")
    raise DegenerateConfiguration("no coordinate change gives a usable Macaulay matrix")
