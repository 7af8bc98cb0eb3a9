"""walks on the superspecial (2,...,2)-isogeny graphs

- :func:`enumerate_dim2` lists the genus 2 Jacobians, starting from the
  products of two supersingular elliptic curves
- :func:`enumerate_dim3` lists all superspecial genus 3 curves by a
  breadth first search over the 135 outgoing edges of every node
- :func:`find_hyperelliptic` returns a single superspecial hyperelliptic
  genus 3 curve, from a known family or by a random walk

"""
import csv
import io
import json
import multiprocessing
import random
import time
from functools import lru_cache
from itertools import combinations_with_replacement
from pathlib import Path
from typing import Any
from typing import Dict
from typing import Iterable
from typing import Iterator
from typing import List
from typing import NamedTuple
from typing import Optional
from typing import Sequence
from typing import Set
from typing import Tuple
from typing import Union

from sspwalk._logging import get_logger
from sspwalk._utils import FORMAT_VERSION
from sspwalk._utils import check_format_version
from sspwalk._utils import dump_json_atomic
from sspwalk._utils import load_json_from_path
from sspwalk.classify import VarietyKind
from sspwalk.classify import VarietyType
from sspwalk.classify import vanishing_count
from sspwalk.curves import CurveModel
from sspwalk.curves import HyperellipticModel
from sspwalk.curves import curve_from_json
from sspwalk.exceptions import ConnectivityError
from sspwalk.exceptions import GaveUp
from sspwalk.exceptions import SingularOrCorrupt
from sspwalk.field import FieldElement
from sspwalk.field import PrimeField
from sspwalk.field import is_prime
from sspwalk.invariants import InvariantFingerprint
from sspwalk.invariants import WeightedTuple
from sspwalk.invariants import dixmier_ohno
from sspwalk.invariants import fingerprint
from sspwalk.invariants import igusa
from sspwalk.invariants import shioda
from sspwalk.reconstruct import rosenhain_g2
from sspwalk.reconstruct import rosenhain_g3
from sspwalk.reconstruct import weber_quartic
from sspwalk.seeds import EllipticSeed
from sspwalk.seeds import any_supersingular_lambda
from sspwalk.seeds import elliptic_theta
from sspwalk.seeds import product_theta
from sspwalk.seeds import supersingular_lambdas
from sspwalk.symplectic import act
from sspwalk.symplectic import coset_reps
from sspwalk.theta import SquaredThetaNullPoint
from sspwalk.theta import check_product_relation
from sspwalk.theta import isogeny_step

__all__ = [
    "Counts",
    "EnumerationResult",
    "Genus2Class",
    "KNOWN_COUNTS",
    "NodeRecord",
    "check_closure",
    "enumerate_dim2",
    "enumerate_dim3",
    "find_hyperelliptic",
    "known_counts",
    "known_families",
    "sweep_hyperelliptic",
]

_log = get_logger(__name__)

FieldLike = Union[PrimeField, int]

# (#L1, #L2, #L3, #L4, total, compl) for 11 <= p < 100
KNOWN_COUNTS: Dict[int, Tuple[int, int, int, int, int, int]] = {
    11: (10, 1, 4, 4, 19, 7),
    13: (18, 1, 3, 1, 23, 5),
    17: (54, 2, 10, 4, 70, 24),
    19: (87, 4, 14, 4, 109, 48),
    23: (213, 9, 30, 10, 262, 70),
    29: (681, 10, 54, 10, 755, 249),
    31: (950, 27, 60, 10, 1047, 249),
    37: (2448, 35, 93, 10, 2586, 591),
    41: (4292, 54, 160, 20, 4526, 1754),
    43: (5567, 82, 180, 20, 5849, 2685),
    47: (9138, 125, 285, 35, 9583, 3277),
    53: (18032, 153, 390, 35, 18610, 6663),
    59: (33204, 299, 624, 56, 34183, 11964),
    61: (40259, 262, 565, 35, 41121, 13015),
    67: (69132, 451, 870, 56, 70509, 25780),
    71: (96717, 647, 1190, 84, 98638, 30861),
    73: (113778, 582, 1098, 56, 115514, 35823),
    79: (180273, 942, 1596, 84, 182895, 51592),
    83: (240755, 1136, 2080, 120, 244091, 70445),
    89: (362720, 1402, 2528, 120, 366770, 122626),
    97: (602062, 2002, 3200, 120, 607384, 208415),
}


def known_counts(p: int) -> Optional[Tuple[int, int, int, int, int, int]]:
    """reference row (#L1, #L2, #L3, #L4, total, compl) or None"""
    return KNOWN_COUNTS.get(int(p))


def _as_field(p: FieldLike) -> PrimeField:
    return p if isinstance(p, PrimeField) else PrimeField(p)


def _settings_default(name: str, value: Any) -> Any:
    if value is not None:
        return value
    from sspwalk import settings
    return settings[name]


def _j_key(j: FieldElement) -> str:
    return f"{j.c0}.{j.c1}"


# --- node records ------------------------------------------------------------

class NodeRecord(NamedTuple):
    """a vertex of the walk together with the data needed to replay it

    Jacobian nodes carry a model and a fingerprint, product nodes a key
    built from the identities of their factors.
    """
    theta: SquaredThetaNullPoint
    kind: VarietyType
    key: str
    model: Optional[CurveModel] = None
    fingerprint: Optional[InvariantFingerprint] = None
    invariants: Optional[WeightedTuple] = None
    discovery: Optional[Tuple[int, int]] = None

    @property
    def is_jacobian(self) -> bool:
        return self.kind.is_jacobian

    def to_json(self, emit_invariants: bool = False) -> Dict[str, Any]:
        data: Dict[str, Any] = {
            "kind": self.kind.kind.value,
            "n_van": self.kind.n_van,
            "key": self.key,
            "theta": self.theta.to_json(compact=True),
        }
        if self.model is not None:
            data["model"] = self.model.to_json()
        if self.fingerprint is not None:
            data["fingerprint"] = self.fingerprint.to_json()
        if self.discovery is not None:
            data["discovery"] = list(self.discovery)
        if emit_invariants and self.invariants is not None:
            data["invariants"] = self.invariants.to_json()
        return data

    @classmethod
    def from_json(cls, data: Dict[str, Any], field: PrimeField) -> "NodeRecord":
        theta = SquaredThetaNullPoint.from_json(data["theta"], field)
        model = curve_from_json(data["model"], field) if "model" in data else None
        fp = InvariantFingerprint.from_json(data["fingerprint"], field) if "fingerprint" in data else None
        invariants = None
        if "invariants" in data:
            inv = data["invariants"]
            invariants = WeightedTuple(tuple(inv["weights"]), tuple(field.from_json(v) for v in inv["values"]))
        discovery = tuple(data["discovery"]) if "discovery" in data else None
        return cls(theta, vanishing_count(theta), data["key"], model, fp, invariants, discovery)  # type: ignore[arg-type]


class Genus2Class(NamedTuple):
    fingerprint: InvariantFingerprint
    model: HyperellipticModel
    theta: SquaredThetaNullPoint

    @property
    def key(self) -> str:
        return self.fingerprint.hexdigest()


class Counts(NamedTuple):
    """the list sizes of the genus 3 walk"""
    L1: int
    L2: int
    L3: int
    L4: int

    @property
    def total(self) -> int:
        return self.L1 + self.L2 + self.L3 + self.L4


class EnumerationResult(NamedTuple):
    p: int
    counts: Counts
    lambda1: int
    lambda2: int
    records: Tuple[NodeRecord, ...]
    stats: Dict[str, Any]

    def curves(self, kind: VarietyKind) -> List[NodeRecord]:
        """records of one kind, sorted by key"""
        return sorted((r for r in self.records if r.kind.kind is kind), key=lambda r: r.key)

    @property
    def quartics(self) -> List[NodeRecord]:
        return self.curves(VarietyKind.PLANE_QUARTIC)

    @property
    def hyperelliptic(self) -> List[NodeRecord]:
        return self.curves(VarietyKind.HYPERELLIPTIC3)

    def sorted_records(self) -> List[NodeRecord]:
        """all records in an order independent of the discovery order"""
        return sorted(self.records, key=lambda r: (r.kind.kind.value, r.key))

    def summary(self) -> Dict[str, Any]:
        c = self.counts
        data = {
            "p": self.p,
            "L1": c.L1,
            "L2": c.L2,
            "L3": c.L3,
            "L4": c.L4,
            "total": c.total,
            "Lambda1": self.lambda1,
            "Lambda2": self.lambda2,
        }
        data.update(self.stats)
        return data

    def counts_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        writer.writerow(["p", "L1", "L2", "L3", "L4", "total", "compl"])
        c = self.counts
        writer.writerow([self.p, c.L1, c.L2, c.L3, c.L4, c.total, self.stats.get("compl")])
        return buf.getvalue()

    def iter_jsonl(self, emit_invariants: bool = False) -> Iterator[str]:
        for record in self.sorted_records():
            yield json.dumps(record.to_json(emit_invariants), sort_keys=True)


# --- genus 2 ----------------------------------------------------------------

def enumerate_dim2(
    p: FieldLike,
    seeds: Optional[Sequence[EllipticSeed]] = None,
) -> List[Genus2Class]:
    """one null-point per isomorphism class of superspecial genus 2 curves

    Breadth first search over the 15 outgoing edges of every node,
    starting from all products of two supersingular elliptic curves.
    Products reached along the way are not enqueued again.

    Raises
    ------
    ConnectivityError
        if the frontier runs dry without a single Jacobian
    """
    field = _as_field(p)
    if seeds is None:
        seeds = supersingular_lambdas(field)
    table = coset_reps(2)

    frontier = [
        product_theta(seeds[i].theta, seeds[j].theta)
        for i, j in combinations_with_replacement(range(len(seeds)), 2)
    ]
    found: Dict[str, Genus2Class] = {}
    cursor = 0
    while cursor < len(frontier):
        theta = frontier[cursor]
        cursor += 1
        for rep in table.reps:
            child = isogeny_step(act(rep, theta))
            if vanishing_count(child).n_van == 1:
                continue
            model = rosenhain_g2(child)
            fp = fingerprint(igusa(model))
            key = fp.hexdigest()
            if key not in found:
                found[key] = Genus2Class(fp, model, child)
                frontier.append(child)
                _log.debug(f"p={field.p}: genus 2 class #{len(found)} {key}")

    if not found:
        raise ConnectivityError(f"no genus 2 Jacobian reachable for p={field.p}")
    _log.info(f"p={field.p}: {len(found)} superspecial genus 2 classes")
    return list(found.values())


# --- genus 3 ----------------------------------------------------------------

class _Child(NamedTuple):
    """picklable outcome of one edge leading to a Jacobian"""
    coset: int
    values: Tuple[Tuple[int, int], ...]
    n_van: int
    key: str
    model: Dict[str, Any]
    fingerprint: Dict[str, Any]
    invariants: Dict[str, Any]


def _pack(theta: SquaredThetaNullPoint) -> Tuple[Tuple[int, int], ...]:
    return tuple((v.c0, v.c1) for v in theta.values)


def _unpack(field: PrimeField, values: Sequence[Tuple[int, int]]) -> SquaredThetaNullPoint:
    g = {4: 1, 16: 2, 64: 3}[len(values)]
    return SquaredThetaNullPoint.from_values(g, [field(c0, c1) for c0, c1 in values])


@lru_cache(maxsize=1 << 16)
def _classify_codomain(
    p: int,
    values: Tuple[Tuple[int, int], ...],
    debug_checks: bool,
) -> Optional[Tuple[int, str, Dict[str, Any], Dict[str, Any], Dict[str, Any]]]:
    field = PrimeField(p)
    theta = _unpack(field, values)
    if debug_checks and not check_product_relation(theta):
        raise SingularOrCorrupt("codomain violates the product relation", null_point=theta)
    n_van = vanishing_count(theta).n_van
    model: CurveModel
    if n_van == 0:
        model = weber_quartic(theta)
        inv = dixmier_ohno(model)
    elif n_van == 1:
        model = rosenhain_g3(theta)
        inv = shioda(model)
    else:
        return None
    fp = fingerprint(inv)
    return n_van, fp.hexdigest(), model.to_json(), fp.to_json(), inv.to_json()


class _Expansion(NamedTuple):
    """codomains reached from one node and the Jacobians among them"""
    edges: int
    children: List[_Child]


def _expand_node(
    args: Tuple[int, Tuple[Tuple[int, int], ...], bool],
) -> _Expansion:
    """all Jacobian neighbours of a node, in coset order"""
    p, values, debug_checks = args
    field = PrimeField(p)
    theta = _unpack(field, values)
    if debug_checks and not check_product_relation(theta):
        raise SingularOrCorrupt("node violates the product relation", null_point=theta)
    edges = 0
    out = []
    for idx, rep in enumerate(coset_reps(3).reps):
        child = _pack(isogeny_step(act(rep, theta)))
        result = _classify_codomain(p, child, debug_checks)
        edges += 1
        if result is not None:
            out.append(_Child(idx, child, *result))
    return _Expansion(edges, out)


def _product_seeds(
    seeds: Sequence[EllipticSeed],
    genus2: Sequence[Genus2Class],
) -> List[NodeRecord]:
    records = []
    for i, j, k in combinations_with_replacement(range(len(seeds)), 3):
        theta = product_theta(seeds[i].theta, product_theta(seeds[j].theta, seeds[k].theta))
        key = "|".join(_j_key(seeds[x].j) for x in (i, j, k))
        records.append(NodeRecord(theta, vanishing_count(theta), key))
    for seed in seeds:
        for cls in genus2:
            theta = product_theta(seed.theta, cls.theta)
            key = f"{_j_key(seed.j)}|{cls.key}"
            records.append(NodeRecord(theta, vanishing_count(theta), key))
    for record in records:
        if record.kind.kind not in (VarietyKind.E_X_E_X_E, VarietyKind.E_X_JAC2):
            raise SingularOrCorrupt(
                f"product seed classified as {record.kind.kind.value}",
                null_point=record.theta,
            )
    return records


def _record_from_child(field: PrimeField, child: _Child, parent: int) -> NodeRecord:
    theta = _unpack(field, child.values)
    inv = child.invariants
    return NodeRecord(
        theta=theta,
        kind=vanishing_count(theta),
        key=child.key,
        model=curve_from_json(child.model, field),
        fingerprint=InvariantFingerprint.from_json(child.fingerprint, field),
        invariants=WeightedTuple(tuple(inv["weights"]), tuple(field.from_json(v) for v in inv["values"])),
        discovery=(parent, child.coset),
    )


class _WalkState:
    """S, its cursor and the set of committed Jacobian keys"""

    def __init__(self, field: PrimeField, records: List[NodeRecord], lambda1: int, lambda2: int) -> None:
        self.field = field
        self.records = records
        self.lambda1 = lambda1
        self.lambda2 = lambda2
        self.cursor = 0
        self.compl = 0
        self.edges = 0
        self.seconds = 0.0
        self.keys: Set[str] = {r.key for r in records if r.is_jacobian}

    @property
    def jacobians(self) -> int:
        return len(self.keys)

    def commit(self, parent: int, children: Iterable[_Child]) -> int:
        """append unseen children in coset order, return how many were new"""
        new = 0
        for child in children:
            if child.key in self.keys:
                continue
            self.keys.add(child.key)
            self.records.append(_record_from_child(self.field, child, parent))
            self.compl = parent + 1
            new += 1
        return new

    def to_json(self) -> Dict[str, Any]:
        return {
            "format_version": FORMAT_VERSION,
            "p": self.field.p,
            "cursor": self.cursor,
            "compl": self.compl,
            "edges": self.edges,
            "seconds": self.seconds,
            "lambda1": self.lambda1,
            "lambda2": self.lambda2,
            "records": [r.to_json(emit_invariants=True) for r in self.records],
        }

    @classmethod
    def from_json(cls, data: Dict[str, Any], field: PrimeField) -> "_WalkState":
        check_format_version(data["format_version"])
        if int(data["p"]) != field.p:
            raise ValueError(f"checkpoint is for p={data['p']}, not p={field.p}")
        records = [NodeRecord.from_json(r, field) for r in data["records"]]
        state = cls(field, records, int(data["lambda1"]), int(data["lambda2"]))
        state.cursor = int(data["cursor"])
        state.compl = int(data["compl"])
        state.edges = int(data["edges"])
        state.seconds = float(data["seconds"])
        if not 0 <= state.cursor <= len(records):
            raise ValueError(f"checkpoint cursor {state.cursor} out of range")
        return state


def _initial_state(field: PrimeField, shuffle_seeds: Optional[int] = None) -> _WalkState:
    seeds = supersingular_lambdas(field)
    genus2 = enumerate_dim2(field, seeds)
    records = _product_seeds(seeds, genus2)
    if shuffle_seeds is not None:
        random.Random(shuffle_seeds).shuffle(records)
    _log.info(f"p={field.p}: {len(records)} product seeds")
    return _WalkState(field, records, len(seeds), len(genus2))


def enumerate_dim3(
    p: FieldLike,
    *,
    threads: Optional[int] = None,
    batch_size: Optional[int] = None,
    checkpoint: Optional[Union[str, Path]] = None,
    checkpoint_every: Optional[int] = None,
    stop_at_count: Optional[int] = None,
    debug_checks: Optional[bool] = None,
    shuffle_seeds: Optional[int] = None,
) -> EnumerationResult:
    """list every superspecial genus 3 curve in characteristic p

    The list S starts with all products E x E x E and E x Jac(C); nodes
    are processed in list order and every unseen Jacobian codomain is
    appended. Nodes are expanded in batches, possibly by a pool of
    worker processes; the results are committed in node order and then
    coset order, so S does not depend on the number of workers.

    Parameters
    ----------
    p:
        the prime, or its field
    threads:
        number of worker processes (1 expands in-process)
    batch_size:
        nodes expanded per round
    checkpoint:
        path of a json checkpoint; resumed from if it exists and always
        written when the walk stops
    checkpoint_every:
        also write the checkpoint after at least this many processed nodes
        (0 only writes it when the walk stops)
    stop_at_count:
        stop as soon as this many Jacobian classes are known
    debug_checks:
        verify the product relation on every visited node
    shuffle_seeds:
        if given, process the product seeds in an order shuffled by this seed

    Unset arguments are taken from the settings.

    Raises
    ------
    ConnectivityError
        if every node was processed without reaching a single Jacobian
    """
    field = _as_field(p)
    threads = int(_settings_default("threads", threads))
    batch_size = int(_settings_default("batch_size", batch_size))
    checkpoint_every = int(_settings_default("checkpoint_every", checkpoint_every))
    debug_checks = bool(_settings_default("debug_checks", debug_checks))
    checkpoint_path = Path(checkpoint) if checkpoint is not None else None

    if checkpoint_path is not None and checkpoint_path.is_file():
        state = _WalkState.from_json(load_json_from_path(checkpoint_path), field)
        _log.warning(f"p={field.p}: resuming at node {state.cursor} of {len(state.records)}")
    else:
        state = _initial_state(field, shuffle_seeds)

    def save() -> None:
        if checkpoint_path is not None:
            dump_json_atomic(checkpoint_path, state.to_json())
            _log.info(f"p={field.p}: checkpoint at node {state.cursor}")

    def done() -> bool:
        return stop_at_count is not None and state.jacobians >= stop_at_count

    started = time.perf_counter()
    seconds_before = state.seconds
    last_saved = state.cursor
    pool = multiprocessing.Pool(processes=threads) if threads > 1 else None
    try:
        while state.cursor < len(state.records) and not done():
            start = state.cursor
            batch = state.records[start:start + batch_size]
            jobs = [(field.p, _pack(r.theta), debug_checks) for r in batch]
            expanded = pool.map(_expand_node, jobs) if pool is not None else map(_expand_node, jobs)
            for offset, expansion in enumerate(expanded):
                state.commit(start + offset, expansion.children)
                state.edges += expansion.edges
                state.cursor = start + offset + 1
                if done():
                    break
            state.seconds = seconds_before + time.perf_counter() - started
            _log.info(
                f"p={field.p}: processed {state.cursor}/{len(state.records)} nodes, "
                f"{state.jacobians} Jacobian classes"
            )
            if checkpoint_every and state.cursor - last_saved >= checkpoint_every:
                save()
                last_saved = state.cursor
    finally:
        if pool is not None:
            pool.close()
            pool.join()
        # the last state is written however the run stops
        state.seconds = seconds_before + time.perf_counter() - started
        save()
    if state.cursor >= len(state.records) and not state.jacobians:
        raise ConnectivityError(f"no genus 3 Jacobian reachable for p={field.p}")

    kinds = [r.kind.kind for r in state.records]
    counts = Counts(
        L1=kinds.count(VarietyKind.PLANE_QUARTIC),
        L2=kinds.count(VarietyKind.HYPERELLIPTIC3),
        L3=kinds.count(VarietyKind.E_X_JAC2),
        L4=kinds.count(VarietyKind.E_X_E_X_E),
    )
    stats = {
        "nodes": state.cursor,
        "edges": state.edges,
        "seconds": round(state.seconds, 3),
        "compl": state.compl,
        "compl_ratio": round(state.compl / counts.total, 4) if counts.total else None,
    }
    _log.info(f"p={field.p}: {counts}, {stats}")
    return EnumerationResult(field.p, counts, state.lambda1, state.lambda2, tuple(state.records), stats)


def check_closure(
    result: EnumerationResult,
    samples: int = 5,
    rng_seed: Optional[int] = None,
) -> Set[str]:
    """re-expand random recorded nodes and return keys missing from the result"""
    rng = random.Random(_settings_default("rng_seed", rng_seed))
    known = {r.key for r in result.records if r.is_jacobian}
    picks = rng.sample(range(len(result.records)), min(samples, len(result.records)))
    unseen: Set[str] = set()
    for idx in picks:
        theta = result.records[idx].theta
        for child in _expand_node((result.p, _pack(theta), False)).children:
            if child.key not in known:
                unseen.add(child.key)
    return unseen


# --- single hyperelliptic curves --------------------------------------------

def known_families(p: FieldLike) -> List[Tuple[str, HyperellipticModel]]:
    """the superspecial families y^2 = x^7 - 1, x^7 - x, x^8 - 1 applicable to p"""
    field = _as_field(p)
    q = field.p
    one, zero = field.one, field.zero
    out = []
    if q % 7 == 6:
        out.append(("x^7-1", HyperellipticModel.from_coeffs(field, [-one] + [zero] * 6 + [one])))
    if q % 4 == 3:
        out.append(("x^7-x", HyperellipticModel.from_coeffs(field, [zero, -one] + [zero] * 5 + [one])))
    if q % 8 == 7:
        out.append(("x^8-1", HyperellipticModel.from_coeffs(field, [-one] + [zero] * 7 + [one])))
    return out


def _legendre_orbit(lam: FieldElement) -> List[FieldElement]:
    one = lam.field.one
    return [lam, one / lam, one - lam, one / (one - lam), lam / (lam - one), (lam - one) / lam]


def _random_walk(field: PrimeField, rng_seed: int, step_cap: int) -> HyperellipticModel:
    lam = any_supersingular_lambda(field)
    theta1 = next((t for t in map(elliptic_theta, _legendre_orbit(lam)) if t is not None), None)
    if theta1 is None:
        raise GaveUp(f"no Legendre parameter with rational theta constants for p={field.p}")
    theta = product_theta(theta1, product_theta(theta1, theta1))
    rng = random.Random(rng_seed)
    reps = coset_reps(3).reps
    for step in range(1, step_cap + 1):
        theta = isogeny_step(act(rng.choice(reps), theta))
        if vanishing_count(theta).n_van == 1:
            _log.info(f"p={field.p}: hyperelliptic node after {step} steps")
            return rosenhain_g3(theta)
    raise GaveUp(f"no hyperelliptic node within {step_cap} steps for p={field.p}", null_point=theta)


def _find(field: PrimeField, rng_seed: int, step_cap: int) -> Tuple[HyperellipticModel, str]:
    families = known_families(field)
    if families:
        method, model = families[0]
        return model, method
    return _random_walk(field, rng_seed, step_cap), "walk"


def find_hyperelliptic(
    p: FieldLike,
    rng_seed: Optional[int] = None,
    step_cap: Optional[int] = None,
) -> HyperellipticModel:
    """a superspecial hyperelliptic genus 3 curve

    Returns the first applicable known family, otherwise walks randomly
    from E x E x E until a hyperelliptic node appears. The walk is
    replayable from ``rng_seed``.

    Raises
    ------
    GaveUp
        if the walk exceeds ``step_cap`` steps
    """
    field = _as_field(p)
    rng_seed = int(_settings_default("rng_seed", rng_seed))
    step_cap = int(_settings_default("step_cap", step_cap))
    model, _ = _find(field, rng_seed, step_cap)
    return model


def sweep_hyperelliptic(
    primes: Iterable[int],
    rng_seed: Optional[int] = None,
    step_cap: Optional[int] = None,
) -> Iterator[Tuple[int, HyperellipticModel, str]]:
    """yield (p, model, method) for every prime > 7 in ``primes``"""
    rng_seed = int(_settings_default("rng_seed", rng_seed))
    step_cap = int(_settings_default("step_cap", step_cap))
    for p in primes:
        if p <= 7 or not is_prime(p):
            continue
        model, method = _find(PrimeField(p), rng_seed, step_cap)
        yield p, model, method
