import json

import pytest

from sspwalk.classify import VarietyKind
from sspwalk.enumeration import Counts
from sspwalk.enumeration import NodeRecord
from sspwalk.enumeration import check_closure
from sspwalk.enumeration import enumerate_dim2
from sspwalk.enumeration import enumerate_dim3
from sspwalk.enumeration import find_hyperelliptic
from sspwalk.enumeration import known_counts
from sspwalk.enumeration import known_families
from sspwalk.enumeration import sweep_hyperelliptic
from sspwalk.exceptions import GaveUp
from sspwalk.verify import is_superspecial


def _counts(result):
    c = result.counts
    return c.L1, c.L2, c.L3, c.L4, c.total


def _check_compl(result):
    # depends on the traversal order, so only its range is fixed
    compl = result.stats["compl"]
    assert isinstance(compl, int)
    assert 0 < compl <= result.stats["nodes"] <= result.counts.total


def test_known_counts():
    assert known_counts(11) == (10, 1, 4, 4, 19, 7)
    assert known_counts(13) == (18, 1, 3, 1, 23, 5)
    assert known_counts(5) is None
    assert Counts(1, 2, 3, 4).total == 10


def test_enumerate_dim2(genus2_11):
    assert len(genus2_11) == 2
    assert len({c.key for c in genus2_11}) == 2
    assert all(is_superspecial(c.model) for c in genus2_11)


def test_enumerate_dim2_13():
    assert len(enumerate_dim2(13)) == 3


@pytest.mark.slow
@pytest.mark.parametrize("p,count", [(17, 5), (19, 7)])
def test_enumerate_dim2_slow(p, count):
    assert len(enumerate_dim2(p)) == count


def test_enumerate_dim3_11(enumeration11):
    assert _counts(enumeration11) == known_counts(11)[:5]
    _check_compl(enumeration11)
    assert enumeration11.lambda1 == 2
    assert enumeration11.lambda2 == 2
    assert enumeration11.stats["nodes"] == 19
    assert enumeration11.stats["edges"] == 135 * 19


def test_enumerate_dim3_13(enumeration13):
    assert _counts(enumeration13) == known_counts(13)[:5]
    _check_compl(enumeration13)
    assert enumeration13.lambda1 == 1
    assert enumeration13.lambda2 == 3


@pytest.mark.slow
@pytest.mark.parametrize("p", [17, 19])
def test_enumerate_dim3_slow(p):
    result = enumerate_dim3(p, threads=2, checkpoint_every=0)
    assert _counts(result) == known_counts(p)[:5]
    _check_compl(result)


def test_all_curves_are_superspecial(enumeration11):
    curves = enumeration11.quartics + enumeration11.hyperelliptic
    assert len(curves) == 11
    assert all(is_superspecial(r.model) for r in curves)
    assert len({r.key for r in curves}) == 11


def test_record_order(enumeration11):
    kinds = [r.kind.kind for r in enumeration11.records]
    # products first, then discoveries in walk order
    assert kinds[:4] == [VarietyKind.E_X_E_X_E] * 4
    assert kinds[4:8] == [VarietyKind.E_X_JAC2] * 4
    discoveries = [r.discovery for r in enumeration11.records[8:]]
    assert discoveries == sorted(discoveries)
    assert max(parent for parent, _ in discoveries) + 1 == enumeration11.stats["compl"]


def test_outputs(enumeration11):
    summary = enumeration11.summary()
    assert summary["p"] == 11
    assert summary["total"] == 19
    assert summary["Lambda1"] == 2
    compl = enumeration11.stats["compl"]
    assert enumeration11.counts_csv() == f"p,L1,L2,L3,L4,total,compl\n11,10,1,4,4,19,{compl}\n"

    lines = list(enumeration11.iter_jsonl())
    assert len(lines) == 19
    first = json.loads(lines[0])
    assert "invariants" not in first
    assert {"kind", "n_van", "key", "theta"} <= set(first)
    with_inv = [json.loads(x) for x in enumeration11.iter_jsonl(emit_invariants=True)]
    assert sum("invariants" in x for x in with_inv) == 11


def test_node_record_json(f11, enumeration11):
    record = enumeration11.quartics[0]
    back = NodeRecord.from_json(record.to_json(emit_invariants=True), f11)
    assert back == record


def test_closure(enumeration11):
    assert check_closure(enumeration11, samples=5, rng_seed=1) == set()


def test_stop_at_count(f11):
    result = enumerate_dim3(f11, threads=1, checkpoint_every=0, stop_at_count=3)
    assert result.counts.L1 + result.counts.L2 >= 3
    assert result.stats["nodes"] <= 19


def test_checkpoint_resume(f11, tmp_path, enumeration11):
    ckpt = tmp_path / "walk.json"
    partial = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=1, stop_at_count=2)
    assert ckpt.is_file()
    assert partial.stats["nodes"] < 19

    resumed = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=1)
    assert _counts(resumed) == known_counts(11)[:5]
    _check_compl(resumed)
    assert [r.key for r in resumed.records] == [r.key for r in enumeration11.records]


def test_checkpoint_wrong_prime(f11, f13, tmp_path):
    ckpt = tmp_path / "walk.json"
    enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=1, stop_at_count=1)
    with pytest.raises(ValueError):
        enumerate_dim3(f13, threads=1, checkpoint=ckpt)


def _artifacts(result):
    summary = {k: v for k, v in result.summary().items() if k != "seconds"}
    return (
        json.dumps(summary, sort_keys=True),
        list(result.iter_jsonl(emit_invariants=True)),
        result.counts_csv(),
    )


def test_worker_count_does_not_change_output(f11, enumeration11):
    result = enumerate_dim3(f11, threads=2, batch_size=3, checkpoint_every=0)
    assert [r.key for r in result.records] == [r.key for r in enumeration11.records]
    assert _artifacts(result) == _artifacts(enumeration11)


@pytest.mark.slow
def test_worker_count_does_not_change_output_17():
    one = enumerate_dim3(17, threads=1, checkpoint_every=0)
    eight = enumerate_dim3(17, threads=8, batch_size=16, checkpoint_every=0)
    assert _artifacts(one) == _artifacts(eight)


@pytest.mark.slow
@pytest.mark.parametrize("p,methods", [(19, ["x^7-x"]), (23, ["x^7-x", "x^8-1"])])
def test_known_families_are_enumerated(p, methods):
    from sspwalk.invariants import fingerprint
    from sspwalk.invariants import shioda

    result = enumerate_dim3(p, threads=4, checkpoint_every=0)
    keys = {r.key for r in result.hyperelliptic}
    families = dict(known_families(p))
    assert sorted(families) == sorted(methods)
    for method in methods:
        assert fingerprint(shioda(families[method])).hexdigest() in keys


def test_known_families():
    assert [m for m, _ in known_families(23)] == ["x^7-x", "x^8-1"]
    assert [m for m, _ in known_families(13)] == ["x^7-1"]
    assert known_families(17) == []


@pytest.mark.parametrize("p,method", [(11, "x^7-x"), (13, "x^7-1")])
def test_find_hyperelliptic_family(p, method):
    model = find_hyperelliptic(p)
    assert model == dict(known_families(p))[method]
    assert is_superspecial(model)


def test_find_hyperelliptic_walk():
    model = find_hyperelliptic(17, rng_seed=3)
    assert model.g == 3
    assert len(model.lambdas) == 5
    assert is_superspecial(model)
    assert find_hyperelliptic(17, rng_seed=3) == model


def test_find_hyperelliptic_gives_up():
    with pytest.raises(GaveUp):
        find_hyperelliptic(17, step_cap=0)


def test_sweep():
    out = list(sweep_hyperelliptic([4, 7, 9, 11, 13, 17], rng_seed=0))
    assert [p for p, _, _ in out] == [11, 13, 17]
    assert [m for _, _, m in out] == ["x^7-x", "x^7-1", "walk"]


def test_sign_choice_does_not_change_classes(quartic_nodes11):
    from sspwalk.enumeration import _classify_codomain
    from sspwalk.enumeration import _pack
    from sspwalk.symplectic import act
    from sspwalk.symplectic import coset_reps
    from sspwalk.theta import isogeny_step

    theta = quartic_nodes11[0].theta
    flip = (1, -1, 1, 1, -1, 1, 1, 1)
    for rep in coset_reps(3).reps[::9]:
        moved = act(rep, theta)
        plain = _classify_codomain(11, _pack(isogeny_step(moved)), False)
        signed = _classify_codomain(11, _pack(isogeny_step(moved, signs=flip)), False)
        assert (plain is None) == (signed is None)
        if plain is not None:
            assert plain[:2] == signed[:2]


def test_p13_curves(f13, enumeration13):
    from sspwalk.invariants import fingerprint
    from sspwalk.invariants import shioda

    (hyperelliptic,) = enumeration13.hyperelliptic
    method, model = known_families(f13)[0]
    assert method == "x^7-1"
    assert fingerprint(shioda(model)).hexdigest() == hyperelliptic.key
    assert all(is_superspecial(r.model) for r in enumeration13.quartics)


def test_seed_order_does_not_change_classes(f11, enumeration11):
    result = enumerate_dim3(f11, threads=1, checkpoint_every=0, shuffle_seeds=5)
    assert _counts(result) == known_counts(11)[:5]
    assert {r.key for r in result.records} == {r.key for r in enumeration11.records}


def test_no_jacobian_reachable(f11, monkeypatch):
    from sspwalk import enumeration
    from sspwalk.exceptions import ConnectivityError

    monkeypatch.setattr(enumeration, "_expand_node", lambda args: enumeration._Expansion(135, []))
    with pytest.raises(ConnectivityError):
        enumerate_dim3(f11, threads=1, checkpoint_every=0)


def test_checkpoint_written_when_stopping(f11, tmp_path, enumeration11):
    ckpt = tmp_path / "walk.json"
    partial = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=0, stop_at_count=2)
    assert ckpt.is_file()
    state = json.loads(ckpt.read_text())
    assert state["cursor"] == partial.stats["nodes"]
    assert state["edges"] == 135 * state["cursor"]

    resumed = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=0)
    assert _artifacts(resumed) == _artifacts(enumeration11)


@pytest.mark.parametrize("name", ["walk.ckpt", "walk.json.xz"])
def test_checkpoint_file_names(f11, tmp_path, name):
    ckpt = tmp_path / name
    enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=0, stop_at_count=1)
    resumed = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=0)
    assert _counts(resumed) == known_counts(11)[:5]


def test_checkpoint_written_on_interrupt(f11, tmp_path, monkeypatch, enumeration11):
    from sspwalk import enumeration

    expand = enumeration._expand_node
    calls = []

    def interrupted(args):
        calls.append(args)
        if len(calls) == 3:
            raise KeyboardInterrupt
        return expand(args)

    ckpt = tmp_path / "walk.json"
    monkeypatch.setattr(enumeration, "_expand_node", interrupted)
    with pytest.raises(KeyboardInterrupt):
        enumerate_dim3(f11, threads=1, batch_size=1, checkpoint=ckpt, checkpoint_every=0)
    assert json.loads(ckpt.read_text())["cursor"] == 2

    monkeypatch.setattr(enumeration, "_expand_node", expand)
    resumed = enumerate_dim3(f11, threads=1, checkpoint=ckpt, checkpoint_every=0)
    assert _artifacts(resumed) == _artifacts(enumeration11)


def test_edges_are_counted(f11, e3_theta11):
    from sspwalk.enumeration import _expand_node
    from sspwalk.enumeration import _pack

    expansion = _expand_node((11, _pack(e3_theta11), False))
    assert expansion.edges == 135
    assert len(expansion.children) <= 135
