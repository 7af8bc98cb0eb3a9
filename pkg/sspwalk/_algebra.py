"""exact linear algebra and univariate polynomials over F_{p^2}"""
from typing import List
from typing import Sequence

import numpy as np

from sspwalk.exceptions import DegenerateConfiguration
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField

__all__ = [
    "adjugate3",
    "det",
    "det_array",
    "matmul",
    "poly_derivative",
    "poly_divmod",
    "poly_gcd",
    "poly_mul",
    "poly_trim",
    "solve",
    "trace",
]

Matrix = List[List[FieldElement]]
Poly = List[FieldElement]


# --- dense matrices of field elements ------------------------------------

def solve(field: PrimeField, a: Sequence[Sequence[FieldElement]], b: Sequence[FieldElement]) -> List[FieldElement]:
    """solve ``a @ x == b`` for an m x n system with m >= n

    Gaussian elimination with first-nonzero pivoting. Rows beyond the
    n-th must reduce to zero, i.e. overdetermined systems have to be
    consistent.

    Raises
    ------
    DegenerateConfiguration
        if the columns are linearly dependent or the residual is nonzero
    """
    m, n = len(a), len(a[0])
    rows = [[field(v) for v in row] + [field(rhs)] for row, rhs in zip(a, b)]
    for col in range(n):
        piv = next((r for r in range(col, m) if rows[r][col]), None)
        if piv is None:
            raise DegenerateConfiguration(f"singular linear system (column {col})")
        rows[col], rows[piv] = rows[piv], rows[col]
        inv = rows[col][col].inverse()
        rows[col] = [v * inv for v in rows[col]]
        for r in range(m):
            factor = rows[r][col]
            if r != col and factor:
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    for r in range(n, m):
        if rows[r][n]:
            raise DegenerateConfiguration("overdetermined linear system has a nonzero residual")
    return [rows[i][n] for i in range(n)]


def det(field: PrimeField, a: Sequence[Sequence[FieldElement]]) -> FieldElement:
    """determinant by elimination"""
    rows = [[field(v) for v in row] for row in a]
    n = len(rows)
    result = field.one
    for col in range(n):
        piv = next((r for r in range(col, n) if rows[r][col]), None)
        if piv is None:
            return field.zero
        if piv != col:
            rows[col], rows[piv] = rows[piv], rows[col]
            result = -result
        pivot = rows[col][col]
        result = result * pivot
        inv = pivot.inverse()
        for r in range(col + 1, n):
            factor = rows[r][col] * inv
            if factor:
                rows[r] = [v - factor * w for v, w in zip(rows[r], rows[col])]
    return result


def matmul(a: Matrix, b: Matrix) -> Matrix:
    inner = range(len(b))
    return [
        [sum((a[i][k] * b[k][j] for k in inner), a[0][0].field.zero) for j in range(len(b[0]))]
        for i in range(len(a))
    ]


def trace(a: Matrix) -> FieldElement:
    return sum((a[i][i] for i in range(1, len(a))), a[0][0])


def adjugate3(a: Matrix) -> Matrix:
    """adjugate of a 3x3 matrix"""
    def minor(r, c):
        (r0, r1), (c0, c1) = [x for x in range(3) if x != r], [x for x in range(3) if x != c]
        return a[r0][c0] * a[r1][c1] - a[r0][c1] * a[r1][c0]

    return [
        [minor(c, r) if (r + c) % 2 == 0 else -minor(c, r) for c in range(3)]
        for r in range(3)
    ]


def det_array(field: PrimeField, m: np.ndarray) -> FieldElement:
    """determinant of a packed (n, n, 2) matrix"""
    m = np.array(m, dtype=np.int64, copy=True)
    n = m.shape[0]
    p = field.p
    result = field.one
    for col in range(n):
        nz = np.flatnonzero(m[col:, col, 0] | m[col:, col, 1])
        if nz.size == 0:
            return field.zero
        piv = col + int(nz[0])
        if piv != col:
            m[[col, piv]] = m[[piv, col]]
            result = -result
        pivot = field(int(m[col, col, 0]), int(m[col, col, 1]))
        result = result * pivot
        if col + 1 == n:
            break
        inv = field.array([pivot.inverse()])[0]
        factors = field.vmul(m[col + 1:, col], inv)
        update = field.vmul(factors[:, None, :], m[col, col:][None, :, :])
        m[col + 1:, col:] = (m[col + 1:, col:] - update) % p
    return result


# --- univariate polynomials, ascending coefficient lists ------------------

def poly_trim(f: Poly) -> Poly:
    f = list(f)
    while f and not f[-1]:
        f.pop()
    return f


def poly_mul(f: Poly, g: Poly) -> Poly:
    if not f or not g:
        return []
    zero = f[0].field.zero
    out = [zero] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if not a:
            continue
        for j, b in enumerate(g):
            out[i + j] = out[i + j] + a * b
    return poly_trim(out)


def poly_divmod(f: Poly, g: Poly):
    g = poly_trim(g)
    if not g:
        raise ZeroDivisionError("polynomial division by zero")
    r = poly_trim(f)
    if len(r) < len(g):
        return [], r
    lead_inv = g[-1].inverse()
    q = [g[0].field.zero] * (len(r) - len(g) + 1)
    while len(r) >= len(g):
        shift = len(r) - len(g)
        c = r[-1] * lead_inv
        q[shift] = c
        for i, b in enumerate(g):
            r[shift + i] = r[shift + i] - c * b
        r = poly_trim(r)
    return q, r


def poly_gcd(f: Poly, g: Poly) -> Poly:
    """monic gcd"""
    a, b = poly_trim(f), poly_trim(g)
    while b:
        _, r = poly_divmod(a, b)
        a, b = b, r
    if not a:
        return a
    inv = a[-1].inverse()
    return [c * inv for c in a]


def poly_derivative(f: Poly) -> Poly:
    return poly_trim([c * i for i, c in enumerate(f)][1:])
