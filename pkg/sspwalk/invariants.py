"""isomorphism invariants of curves and their canonical fingerprints

- genus 2: Igusa invariants J2..J10 of the binary sextic, via the
  Clebsch invariants built from transvectants
- genus 3 hyperelliptic: Shioda invariants J2..J10 of the binary octic
- plane quartics: Dixmier-Ohno invariants built from the contravariants
  sigma and psi, the Hessian and derived conics; I27 is the discriminant

Every family is defined up to nonzero constant factors per invariant,
which does not change the induced equivalence of curves.
"""
import hashlib
from functools import lru_cache
from itertools import permutations
from math import comb
from math import factorial
from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Sequence
from typing import Tuple

import numpy as np

from sspwalk._algebra import adjugate3
from sspwalk._algebra import det
from sspwalk._algebra import matmul
from sspwalk._algebra import poly_derivative
from sspwalk._algebra import poly_gcd
from sspwalk._algebra import poly_trim
from sspwalk._algebra import trace
from sspwalk.curves import _quartic_form
from sspwalk.curves import quartic_discriminant
from sspwalk.exceptions import NotSmooth
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField
from sspwalk.forms import Form
from sspwalk.forms import monomial_index
from sspwalk.forms import monomials
from sspwalk.forms import multi_factorial

__all__ = [
    "InvariantFingerprint",
    "WeightedTuple",
    "curve_invariants",
    "dixmier_ohno",
    "fingerprint",
    "igusa",
    "igusa_from_form",
    "quartic_discriminant",
    "shioda",
    "shioda_from_form",
    "transvectant",
]


IGUSA_WEIGHTS = (2, 4, 6, 8, 10)
SHIODA_WEIGHTS = (2, 3, 4, 5, 6, 7, 8, 9, 10)
DIXMIER_OHNO_WEIGHTS = (3, 6, 9, 9, 12, 12, 15, 15, 18, 18, 21, 21, 27)
DIXMIER_OHNO_NAMES = ("I3", "I6", "I9", "J9", "I12", "J12", "I15", "J15", "I18", "J18", "I21", "J21", "I27")


class WeightedTuple(NamedTuple):
    """a point of weighted projective space"""
    weights: Tuple[int, ...]
    values: Tuple[FieldElement, ...]

    def scaled(self, c: FieldElement) -> "WeightedTuple":
        """the equivalent tuple ``c**w_i * values[i]``"""
        return WeightedTuple(self.weights, tuple(v * c ** w for v, w in zip(self.values, self.weights)))

    def to_json(self) -> Dict[str, Any]:
        return {"weights": list(self.weights), "values": [v.to_json() for v in self.values]}


class InvariantFingerprint(NamedTuple):
    """weight zero normal form of a weighted tuple"""
    pivot: int
    normalized: Tuple[FieldElement, ...]

    def key(self) -> bytes:
        body = ";".join(f"{v.c0},{v.c1}" for v in self.normalized)
        return f"{self.pivot}|{body}".encode()

    def hexdigest(self) -> str:
        return hashlib.blake2b(self.key(), digest_size=16).hexdigest()

    def to_json(self) -> Dict[str, Any]:
        return {"pivot": self.pivot, "normalized": [v.to_json() for v in self.normalized]}

    @classmethod
    def from_json(cls, data: Dict[str, Any], field: PrimeField) -> "InvariantFingerprint":
        return cls(int(data["pivot"]), tuple(field.from_json(v) for v in data["normalized"]))


def _bezout(weights: Sequence[int]) -> Tuple[int, List[int]]:
    """gcd d of the weights and integers e with ``sum(e_i w_i) == d``"""
    d, coeffs = weights[0], [1]
    for w in weights[1:]:
        # extended euclid on (d, w)
        old_r, r, old_s, s, old_t, t = d, w, 1, 0, 0, 1
        while r:
            q = old_r // r
            old_r, r = r, old_r - q * r
            old_s, s = s, old_s - q * s
            old_t, t = t, old_t - q * t
        d = old_r
        coeffs = [c * old_s for c in coeffs] + [old_t]
    return d, coeffs


def fingerprint(t: WeightedTuple) -> InvariantFingerprint:
    """canonical representative of the weighted projective class of t

    With d the gcd of the weights on the support and ``sum(e_i w_i) = d``,
    ``L = prod(v_i**e_i)`` scales like ``c**d``, so ``v_i * L**(-w_i/d)``
    has weight zero. Two tuples are equivalent over the algebraic closure
    iff their fingerprints agree.
    """
    if len(t.weights) != len(t.values):
        raise ValueError("weights and values differ in length")
    support = [i for i, v in enumerate(t.values) if v]
    if not support:
        raise ValueError("can't fingerprint the all-zero tuple")
    d, exps = _bezout([t.weights[i] for i in support])
    field = t.values[support[0]].field
    lead = field.one
    for i, e in zip(support, exps):
        lead = lead * t.values[i] ** e
    normalized = tuple(
        v * lead ** (-(w // d)) if v else field.zero
        for v, w in zip(t.values, t.weights)
    )
    return InvariantFingerprint(support[0], normalized)


# --- binary forms -----------------------------------------------------------

def transvectant(f: Form, g: Form, k: int) -> Form:
    """the k-th transvectant ``(f, g)_k`` of two binary forms"""
    if f.nvars != 2 or g.nvars != 2:
        raise ValueError("transvectants are defined for binary forms")
    m, n = f.degree, g.degree
    if k > min(m, n):
        raise ValueError(f"transvectant order {k} exceeds the degrees {m}, {n}")
    field = f.field
    out = Form(field, 2, m + n - 2 * k)
    for i in range(k + 1):
        term = f.derivative(0, k - i).derivative(1, i) * g.derivative(0, i).derivative(1, k - i)
        out = out + term.scale(comb(k, i) * (-1) ** i)
    const = field(factorial(m - k) * factorial(n - k)) / field(factorial(m) * factorial(n))
    return out.scale(const)


def _check_binary_smooth(form: Form) -> None:
    n = form.degree
    f = poly_trim([form.coefficient((j, n - j)) for j in range(n + 1)])
    if len(f) - 1 < n - 1:
        raise NotSmooth("binary form has a multiple root at infinity")
    if len(poly_gcd(f, poly_derivative(f))) > 1:
        raise NotSmooth("binary form has a repeated root")


def igusa_from_form(f: Form) -> WeightedTuple:
    """Igusa invariants J2, J4, J6, J8, J10 of a binary sextic"""
    if f.nvars != 2 or f.degree != 6:
        raise ValueError("Igusa invariants need a binary sextic")
    _check_binary_smooth(f)
    field = f.field
    i = transvectant(f, f, 4)
    delta = transvectant(i, i, 2)
    y1 = transvectant(f, i, 4)
    y2 = transvectant(i, y1, 2)
    y3 = transvectant(i, y2, 2)
    a = transvectant(f, f, 6).constant()
    b = transvectant(i, i, 4).constant()
    c = transvectant(i, delta, 4).constant()
    d = transvectant(y3, y1, 2).constant()

    i2 = a * -120
    i4 = a * a * -720 + b * 6750
    i6 = a ** 3 * 8640 - a * b * 108000 + c * 202500
    i10 = (
        a ** 5 * -62208 + a ** 3 * b * 972000 + a * a * c * 1620000
        - a * b * b * 3037500 - b * c * 6075000 - d * 4556250
    )
    j2 = i2 / field(8)
    j4 = (j2 * j2 * 4 - i4) / field(96)
    j6 = (j2 ** 3 * 8 - j2 * j4 * 160 - i6) / field(576)
    j8 = (j2 * j6 - j4 * j4) / field(4)
    j10 = i10 / field(4096)
    return WeightedTuple(IGUSA_WEIGHTS, (j2, j4, j6, j8, j10))


def igusa(model) -> WeightedTuple:
    """Igusa invariants of a genus 2 hyperelliptic model"""
    if model.g != 2:
        raise ValueError(f"Igusa invariants need a genus 2 model, got g={model.g}")
    return igusa_from_form(model.binary_form())


def shioda_from_form(f: Form) -> WeightedTuple:
    """Shioda invariants J2..J10 of a binary octic"""
    if f.nvars != 2 or f.degree != 8:
        raise ValueError("Shioda invariants need a binary octic")
    _check_binary_smooth(f)
    g = transvectant(f, f, 4)
    k = transvectant(f, f, 6)
    h = transvectant(k, k, 2)
    m = transvectant(f, k, 4)
    n = transvectant(f, h, 4)
    p = transvectant(g, k, 4)
    q = transvectant(g, h, 4)
    values = (
        transvectant(f, f, 8),
        transvectant(f, g, 8),
        transvectant(k, k, 4),
        transvectant(m, k, 4),
        transvectant(k, h, 4),
        transvectant(m, h, 4),
        transvectant(p, h, 4),
        transvectant(n, h, 4),
        transvectant(q, h, 4),
    )
    return WeightedTuple(SHIODA_WEIGHTS, tuple(v.constant() for v in values))


def shioda(model) -> WeightedTuple:
    """Shioda invariants of a genus 3 hyperelliptic model"""
    if model.g != 3:
        raise ValueError(f"Shioda invariants need a genus 3 model, got g={model.g}")
    return shioda_from_form(model.binary_form())


# --- ternary quartics -------------------------------------------------------

# symbolic operators live in 12 variables: u (0-2) and the derivatives
# with respect to three copies X (3-5), Y (6-8), Z (9-11) of x
_SLOTS = {"X": 3, "Y": 6, "Z": 9}

SymbolicPoly = Dict[Tuple[int, ...], int]


def _sym_mul(a: SymbolicPoly, b: SymbolicPoly) -> SymbolicPoly:
    out: SymbolicPoly = {}
    for ea, ca in a.items():
        for eb, cb in b.items():
            e = tuple(x + y for x, y in zip(ea, eb))
            out[e] = out.get(e, 0) + ca * cb
    return {e: c for e, c in out.items() if c}


def _omega(first: str, second: str) -> SymbolicPoly:
    """the operator det(u, d/dfirst, d/dsecond)"""
    s, t = _SLOTS[first], _SLOTS[second]
    out: SymbolicPoly = {}
    for (i, j, k), sign in zip(permutations(range(3)), (1, -1, -1, 1, 1, -1)):
        e = [0] * 12
        e[i] += 1
        e[s + j] += 1
        e[t + k] += 1
        out[tuple(e)] = out.get(tuple(e), 0) + sign
    return out


def _sym_pow(a: SymbolicPoly, n: int) -> SymbolicPoly:
    out: SymbolicPoly = {(0,) * 12: 1}
    for _ in range(n):
        out = _sym_mul(out, a)
    return out


@lru_cache(maxsize=None)
def _contravariant_table(name: str) -> Tuple[int, Tuple[np.ndarray, ...], List[int]]:
    """operator applied to f(X) f(Y) [f(Z)] as index arrays

    Returns the u-degree, one index array per copy of f plus the target
    u-monomial array, and the integer coefficients.
    """
    if name == "sigma":
        op = _sym_pow(_omega("X", "Y"), 4)
        copies = ("X", "Y")
    elif name == "psi":
        op = _sym_mul(_sym_mul(_sym_pow(_omega("X", "Y"), 2), _sym_pow(_omega("Y", "Z"), 2)),
                      _sym_pow(_omega("Z", "X"), 2))
        copies = ("X", "Y", "Z")
    else:
        raise KeyError(name)
    degree = sum(next(iter(op))[:3])
    u_index = monomial_index(3, degree)
    f_index = monomial_index(3, 4)
    targets: List[int] = []
    factors: List[List[int]] = [[] for _ in copies]
    coeffs: List[int] = []
    for e, c in op.items():
        targets.append(u_index[e[:3]])
        for n, copy in enumerate(copies):
            sub = e[_SLOTS[copy]:_SLOTS[copy] + 3]
            factors[n].append(f_index[sub])
            # d^sub applied to the monomial x^sub gives sub!
            c *= multi_factorial(sub)
        coeffs.append(c)
    arrays = tuple(np.array(x, dtype=np.intp) for x in factors + [targets])
    return degree, arrays, coeffs


def _contravariant(name: str, f: Form) -> Form:
    field = f.field
    degree, arrays, coeffs = _contravariant_table(name)
    *sources, targets = arrays
    prod = f.coeffs[sources[0]]
    for src in sources[1:]:
        prod = field.vmul(prod, f.coeffs[src])
    prod = field.vscale(prod, np.array([c % field.p for c in coeffs], dtype=np.int64))
    out = np.zeros((len(monomials(3, degree)), 2), dtype=np.int64)
    np.add.at(out, targets, prod)
    return Form(field, 3, degree, out)


def _hessian_determinant(f: Form) -> Form:
    h = [[f.derivative(i).derivative(j) for j in range(3)] for i in range(3)]
    return (
        h[0][0] * (h[1][1] * h[2][2] - h[1][2] * h[2][1])
        - h[0][1] * (h[1][0] * h[2][2] - h[1][2] * h[2][0])
        + h[0][2] * (h[1][0] * h[2][1] - h[1][1] * h[2][0])
    )


def _conic_matrix(q: Form) -> List[List[FieldElement]]:
    half = q.field(2).inverse()
    m = [[q.field.zero] * 3 for _ in range(3)]
    for i in range(3):
        for j in range(3):
            e = [0, 0, 0]
            e[i] += 1
            e[j] += 1
            c = q.coefficient(tuple(e))
            m[i][j] = c if i == j else c * half
    return m


def dixmier_ohno(model: Any) -> WeightedTuple:
    """the 13 Dixmier-Ohno invariants of a smooth plane quartic

    Raises
    ------
    NotSmooth
        if the discriminant I27 vanishes
    """
    f = _quartic_form(model)
    i27 = quartic_discriminant(f)
    if not i27:
        raise NotSmooth("plane quartic is singular")

    sigma = _contravariant("sigma", f)
    psi = _contravariant("psi", f)
    he = _hessian_determinant(f)

    rho = f.contract(psi)
    tau = rho.contract(f)
    xi = sigma.contract(he)
    eta = xi.contract(sigma)

    i3 = sigma.contract(f).constant()
    i6 = psi.contract(he).constant()

    field = f.field
    m_rho, m_tau, m_xi, m_eta = (_conic_matrix(q) for q in (rho, tau, xi, eta))
    values = (
        i3,
        i6,
        trace(matmul(m_tau, m_rho)),
        trace(matmul(m_xi, m_rho)),
        det(field, m_rho),
        trace(matmul(m_tau, m_eta)),
        det(field, m_tau),
        det(field, m_xi),
        trace(matmul(adjugate3(m_tau), adjugate3(m_rho))),
        trace(matmul(adjugate3(m_xi), adjugate3(m_rho))),
        det(field, m_eta),
        trace(matmul(matmul(m_tau, m_eta), matmul(m_xi, m_rho))),
        i27,
    )
    return WeightedTuple(DIXMIER_OHNO_WEIGHTS, values)


def curve_invariants(model: Any) -> WeightedTuple:
    """the invariant family matching the model"""
    if hasattr(model, "binary_form"):
        if model.g == 2:
            return igusa(model)
        elif model.g == 3:
            return shioda(model)
        raise ValueError(f"no invariants for hyperelliptic genus {model.g}")
    return dixmier_ohno(model)


