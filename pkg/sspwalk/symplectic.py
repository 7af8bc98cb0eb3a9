"""symplectic matrices and their action on squared theta null-points

Matrices are ``2g x 2g`` integer matrices ``M = (alpha beta; gamma delta)``
with ``M E M^t == E`` where ``E = (0 1; -1 0)``. Two matrices define the
same edge of the isogeny graph iff they lie in the same right coset of
``Gamma_0(2)`` (lower-left block even), which is detected by the row
space of ``(gamma | delta)`` modulo 2.
"""
from collections import deque
from functools import lru_cache
from typing import Any
from typing import Dict
from typing import List
from typing import NamedTuple
from typing import Tuple

import numpy as np

from sspwalk._logging import get_logger
from sspwalk.exceptions import InvalidNullPoint
from sspwalk.exceptions import WrongType
from sspwalk.theta import SquaredThetaNullPoint
from sspwalk.theta import even_indices
from sspwalk.theta import index_decode
from sspwalk.theta import index_encode

__all__ = [
    "CosetTable",
    "SymplecticRep",
    "act",
    "are_equivalent",
    "compose",
    "coset_key",
    "coset_reps",
    "cosets_to_json",
    "inverse",
    "is_symplectic",
    "normalize_vanishing_to_61",
    "p_matrix",
]

_log = get_logger(__name__)

CosetKey = Tuple[Tuple[int, ...], ...]


class SymplecticRep(NamedTuple):
    """an integer symplectic matrix stored as a tuple of rows"""
    g: int
    entries: Tuple[Tuple[int, ...], ...]

    @classmethod
    def from_array(cls, arr: Any) -> "SymplecticRep":
        arr = np.asarray(arr, dtype=np.int64)
        n = arr.shape[0]
        if arr.shape != (n, n) or n % 2:
            raise ValueError(f"expected a square matrix of even size, got shape {arr.shape}")
        return cls(n // 2, tuple(tuple(int(x) for x in row) for row in arr))

    @classmethod
    def from_blocks(cls, alpha: Any, beta: Any, gamma: Any, delta: Any) -> "SymplecticRep":
        return cls.from_array(np.block([[alpha, beta], [gamma, delta]]))

    @classmethod
    def identity(cls, g: int) -> "SymplecticRep":
        return cls.from_array(np.eye(2 * g, dtype=np.int64))

    def as_array(self) -> np.ndarray:
        return np.array(self.entries, dtype=np.int64)

    @property
    def alpha(self) -> np.ndarray:
        return self.as_array()[:self.g, :self.g]

    @property
    def beta(self) -> np.ndarray:
        return self.as_array()[:self.g, self.g:]

    @property
    def gamma(self) -> np.ndarray:
        return self.as_array()[self.g:, :self.g]

    @property
    def delta(self) -> np.ndarray:
        return self.as_array()[self.g:, self.g:]


class CosetTable(NamedTuple):
    """one representative per coset of Gamma_0(2) in Sp_2g(Z)"""
    g: int
    reps: Tuple[SymplecticRep, ...]


def _standard_form(g: int) -> np.ndarray:
    one = np.eye(g, dtype=np.int64)
    zero = np.zeros((g, g), dtype=np.int64)
    return np.block([[zero, one], [-one, zero]])


def is_symplectic(m: SymplecticRep) -> bool:
    a = m.as_array()
    e = _standard_form(m.g)
    return bool(np.array_equal(a @ e @ a.T, e))


def inverse(m: SymplecticRep) -> SymplecticRep:
    """exact inverse ``(delta^t -beta^t; -gamma^t alpha^t)``"""
    return SymplecticRep.from_blocks(m.delta.T, -m.beta.T, -m.gamma.T, m.alpha.T)


def compose(m: SymplecticRep, n: SymplecticRep) -> SymplecticRep:
    """the product ``m @ n``"""
    if m.g != n.g:
        raise ValueError("can't compose matrices of different genus")
    return SymplecticRep.from_array(m.as_array() @ n.as_array())


def _rref_mod2(rows: np.ndarray) -> CosetKey:
    m = np.array(rows, dtype=np.int64) % 2
    nrows, ncols = m.shape
    r = 0
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if m[i, c]), None)
        if piv is None:
            continue
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        for i in range(nrows):
            if i != r and m[i, c]:
                m[i] ^= m[r]
        r += 1
        if r == nrows:
            break
    return tuple(tuple(int(x) for x in row) for row in m[:r])


def coset_key(m: SymplecticRep) -> CosetKey:
    """canonical basis of the lagrangian spanned by (gamma | delta) mod 2"""
    return _rref_mod2(m.as_array()[m.g:, :])


def are_equivalent(m: SymplecticRep, n: SymplecticRep) -> bool:
    """True if ``m @ n^-1`` lies in Gamma_0(2)"""
    prod = m.as_array() @ inverse(n).as_array()
    return not (prod[m.g:, :m.g] % 2).any()


def _generators(g: int) -> List[np.ndarray]:
    one = np.eye(g, dtype=np.int64)
    zero = np.zeros((g, g), dtype=np.int64)
    gens = [_standard_form(g)]
    symmetric = []
    for i in range(g):
        for j in range(i, g):
            s = np.zeros((g, g), dtype=np.int64)
            s[i, j] = s[j, i] = 1
            symmetric.append(s)
    for s in symmetric:
        gens.append(np.block([[one, s], [zero, one]]))
        gens.append(np.block([[one, zero], [s, one]]))
    for i in range(g):
        for j in range(g):
            if i == j:
                continue
            a = one.copy()
            a[i, j] = 1
            a_inv_t = one.copy()
            a_inv_t[j, i] = -1
            gens.append(np.block([[a, zero], [zero, a_inv_t]]))
    return gens


@lru_cache(maxsize=None)
def coset_reps(g: int) -> CosetTable:
    """representatives of Gamma_0(2) \\ Sp_2g(Z), identity first

    Built by a breadth first search over the right action of a generating
    set; each coset keeps the first matrix reaching it. Representatives
    are ordered by their coset key.
    """
    if g not in (2, 3):
        raise ValueError(f"coset tables exist for g in (2, 3), got {g}")
    gens = _generators(g)
    start = SymplecticRep.identity(g)
    found: Dict[CosetKey, SymplecticRep] = {coset_key(start): start}
    queue = deque([start])
    while queue:
        m = queue.popleft().as_array()
        for gen in gens:
            rep = SymplecticRep.from_array(m @ gen)
            key = coset_key(rep)
            if key not in found:
                found[key] = rep
                queue.append(rep)

    identity_key = coset_key(start)
    keys = sorted(found, key=lambda k: (k != identity_key, k))
    reps = tuple(found[k] for k in keys)
    _log.debug(f"built {len(reps)} coset representatives for g={g}")
    return CosetTable(g, reps)


@lru_cache(maxsize=4096)
def _action_table(m: SymplecticRep) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
    """index permutation and exponents of sqrt(-1) of the transformation formula"""
    g = m.g
    alpha, beta, gamma, delta = m.alpha, m.beta, m.gamma, m.delta
    diag_cd = np.diag(gamma @ delta.T)
    diag_ab = np.diag(alpha @ beta.T)
    targets, exponents = [], []
    for i in range(4 ** g):
        a, b = (np.array(x, dtype=np.int64) for x in index_decode(i, g))
        u = a @ delta.T - b @ gamma.T
        v = b @ alpha.T - a @ beta.T
        k = int(u @ (v + 2 * diag_ab) - a @ b)
        targets.append(index_encode((u + diag_cd) % 2, (v + diag_ab) % 2))
        exponents.append(k % 4)
    return tuple(targets), tuple(exponents)


def act(m: SymplecticRep, theta: SquaredThetaNullPoint) -> SquaredThetaNullPoint:
    """squared theta null-point of ``m . Omega`` from the one of ``Omega``"""
    if m.g != theta.g:
        raise ValueError(f"genus mismatch: matrix g={m.g}, null-point g={theta.g}")
    field = theta.field
    i = field.fourth_root_of_unity()
    powers = (field.one, i, -field.one, -i)
    targets, exponents = _action_table(m)
    out = [field.zero] * len(theta.values)
    for idx, value in enumerate(theta.values):
        if value:
            out[targets[idx]] = powers[exponents[idx]] * value
    return SquaredThetaNullPoint.from_values(theta.g, out)


# blocks (beta_i, gamma_i) for the even indices where the diagonal choice
# is not symplectic
_P_SPECIAL = {
    27: (((1, 1, 0), (1, 1, 0), (0, 0, 0)), ((1, -1, 0), (-1, 1, 0), (0, 0, 0))),
    31: (((1, 1, 1), (1, 1, 1), (1, 1, 1)), ((1, -1, 0), (-1, 1, 0), (0, 0, 0))),
    45: (((1, 0, 1), (0, 0, 0), (1, 0, 1)), ((1, 0, -1), (0, 0, 0), (-1, 0, 1))),
    47: (((1, 1, 1), (1, 1, 1), (1, 1, 1)), ((1, 0, -1), (0, 0, 0), (-1, 0, 1))),
    54: (((0, 0, 0), (0, 1, 1), (0, 1, 1)), ((0, 0, 0), (0, 1, -1), (0, -1, 1))),
    55: (((1, 1, 1), (1, 1, 1), (1, 1, 1)), ((0, 0, 0), (0, 1, -1), (0, -1, 1))),
    59: (((1, -1, 0), (-1, 1, 0), (0, 0, 0)), ((1, 1, 1), (1, 1, 1), (1, 1, 1))),
    61: (((1, 0, -1), (0, 0, 0), (-1, 0, 1)), ((1, 1, 1), (1, 1, 1), (1, 1, 1))),
    62: (((0, 0, 0), (0, 1, -1), (0, -1, 1)), ((1, 1, 1), (1, 1, 1), (1, 1, 1))),
}


@lru_cache(maxsize=None)
def p_matrix(i: int) -> SymplecticRep:
    """the matrix ``(1 beta_i; gamma_i 1)`` moving a vanishing index 0 to i"""
    if i not in even_indices(3):
        raise ValueError(f"{i} is not an even theta index for g=3")
    if i in _P_SPECIAL:
        beta, gamma = (np.array(x, dtype=np.int64) for x in _P_SPECIAL[i])
    else:
        a, b = index_decode(i, 3)
        beta = np.diag(np.array(b, dtype=np.int64))
        gamma = np.diag(np.array(a, dtype=np.int64))
    one = np.eye(3, dtype=np.int64)
    return SymplecticRep.from_blocks(one, beta, gamma, one)


def normalize_vanishing_to_61(theta: SquaredThetaNullPoint) -> SquaredThetaNullPoint:
    """move the unique vanishing even theta constant to index 61

    Raises
    ------
    WrongType
        unless ``theta`` is a g=3 null-point with exactly one vanishing
        even entry
    """
    if theta.g != 3:
        raise WrongType(f"expected a g=3 null-point, got g={theta.g}", null_point=theta)
    zeros = [i for i in even_indices(3) if not theta.values[i]]
    if len(zeros) != 1:
        raise WrongType(
            f"expected exactly one vanishing even theta constant, got {len(zeros)}",
            null_point=theta,
        )
    i, = zeros
    if i == 61:
        return theta
    m = compose(p_matrix(61), inverse(p_matrix(i)))
    out = act(m, theta)
    if out.values[61]:
        raise InvalidNullPoint(f"vanishing index {i} was not moved to 61", null_point=theta)
    return out


def cosets_to_json(table: CosetTable) -> Dict[str, Any]:
    return {
        "g": table.g,
        "count": len(table.reps),
        "reps": [[list(row) for row in rep.entries] for rep in table.reps],
    }
