import io
import json
from collections import namedtuple
from contextlib import redirect_stdout
from pathlib import Path

import pytest

from sspwalk.__main__ import main

_Output = namedtuple("_Output", "return_code stdout")

X7_MINUS_1 = json.dumps({"type": "hyperelliptic", "coeffs": [-1, 0, 0, 0, 0, 0, 0, 1]})


def run(func, argv1):
    f = io.StringIO()
    with redirect_stdout(f):
        return_code = func(argv1)
    return _Output(return_code, f.getvalue().rstrip())


def test_no_args():
    assert main([]) == 1


def test_version():
    from sspwalk import __version__
    assert run(main, ['--version']) == (0, __version__)


def test_config_cmd(tmp_path):
    assert main(['config']) == 0  # shows help

    assert run(main, ['config', '-l']).stdout
    assert "step_cap" in run(main, ['config', '-l', '--default']).stdout

    sspwalk_toml = Path(tmp_path) / ".sspwalk.toml"
    sspwalk_toml.touch()

    # error when folder does not exist
    with pytest.raises(SystemExit):
        assert run(main, ['config', '-l', '-o', str(tmp_path / "not-there")])
    # error when file exists
    assert run(main, ['config', '-l', '-o', str(tmp_path)]).return_code == 1
    # force allows overwrite
    assert run(main, ['config', '-l', '-o', str(tmp_path), '--force']).return_code == 0
    assert run(main, ['config', '--search-tree']).return_code == 0


@pytest.mark.parametrize("p", ["1", "9", "7", "abc"])
def test_invalid_prime(p):
    with pytest.raises(SystemExit):
        run(main, ['enumerate3', '--p', p])


def test_missing_prime():
    for cmd in ('enumerate2', 'enumerate3', 'find-hyp', 'verify', 'seeds'):
        assert run(main, [cmd]).return_code == 2


def test_enumerate2_cmd():
    out = run(main, ['enumerate2', '--p', '11'])
    assert out.return_code == 0
    lines = [json.loads(line) for line in out.stdout.splitlines()]
    assert len(lines) == 2
    assert lines == sorted(lines, key=lambda x: x["key"])


def test_enumerate3_cmd(tmp_path):
    out = run(main, ['enumerate3', '--p', '11', '--known-count', '--out-dir', str(tmp_path)])
    assert out.return_code == 0
    summary = json.loads(out.stdout.splitlines()[-1])
    assert (summary["L1"], summary["L2"], summary["total"]) == (10, 1, 19)
    assert summary["header"]["p"] == 11
    assert summary["header"]["nonresidue"] == 2

    assert json.loads((tmp_path / "summary.json").read_text())["total"] == 19
    assert len((tmp_path / "curves.jsonl").read_text().splitlines()) == 19
    # the last column depends on traversal order
    assert (tmp_path / "counts.csv").read_text().splitlines()[1].startswith("11,10,1,4,4,19,")


def test_enumerate3_usage_errors(tmp_path):
    assert run(main, ['enumerate3', '--p', '11', '--threads', '0']).return_code == 2
    assert run(main, ['enumerate3', '--p', '101', '--known-count']).return_code == 2
    bad = tmp_path / "checkpoint.txt"
    bad.write_text("not a checkpoint")
    assert run(main, ['enumerate3', '--p', '11', '--checkpoint', str(bad)]).return_code == 2


@pytest.mark.parametrize("name", ["walk.json", "walk.ckpt", "walk.json.xz"])
def test_enumerate3_checkpoint_resume(tmp_path, name):
    ckpt = tmp_path / name
    out = run(main, ['enumerate3', '--p', '11', '--checkpoint', str(ckpt), '--stop-at-count', '2'])
    assert out.return_code == 0
    assert ckpt.is_file()

    out = run(main, ['enumerate3', '--p', '11', '--checkpoint', str(ckpt)])
    assert out.return_code == 0
    summary = json.loads(out.stdout.splitlines()[-1])
    assert (summary["L1"], summary["L2"], summary["total"]) == (10, 1, 19)


def test_enumerate3_negative_checkpoint_interval(tmp_path):
    ckpt = tmp_path / "walk.json"
    out = run(main, ['enumerate3', '--p', '11', '--checkpoint', str(ckpt), '--checkpoint-every', '-1'])
    assert out.return_code == 2
    assert not ckpt.exists()


def test_enumerate3_internal_error(monkeypatch, tmp_path, e3_theta11):
    from sspwalk import enumeration
    from sspwalk.exceptions import SingularOrCorrupt

    def broken(*args, **kwargs):
        raise SingularOrCorrupt("node violates the product relation", null_point=e3_theta11)

    monkeypatch.setattr(enumeration, "enumerate_dim3", broken)
    out = run(main, ['enumerate3', '--p', '11', '--out-dir', str(tmp_path)])
    assert out.return_code == 3
    assert "ERROR: SingularOrCorrupt" in out.stdout

    diagnostic = json.loads((tmp_path / "diagnostic.json").read_text())
    assert diagnostic["error"] == "SingularOrCorrupt"
    assert diagnostic["p"] == 11
    assert len(diagnostic["null_point"]["values"]) == 64


@pytest.mark.parametrize("p,method", [("13", "x^7-1"), ("11", "x^7-x")])
def test_find_hyp_cmd(p, method):
    out = run(main, ['find-hyp', '--p', p])
    assert out.return_code == 0
    assert out.stdout.splitlines()[0] == f"method: {method}"
    assert json.loads(out.stdout.splitlines()[-1])["method"] == method


def test_verify_cmd(tmp_path):
    out = run(main, ['verify', '--p', '13', '--curve', X7_MINUS_1])
    assert out.return_code == 0
    assert out.stdout.splitlines()[0] == "Cartier-Manin matrix:"
    assert out.stdout.endswith("superspecial: true")

    out = run(main, ['verify', '--p', '11', '--curve', X7_MINUS_1])
    assert out.stdout.endswith("superspecial: false")

    fn = tmp_path / "curve.json"
    fn.write_text(X7_MINUS_1)
    assert run(main, ['verify', '--p', '13', '--curve', str(fn)]).stdout.endswith("superspecial: true")


@pytest.mark.parametrize(
    "curve", [
        "{not json",
        json.dumps({"type": "hyperelliptic", "coeffs": [1, 1]}),
        json.dumps({"type": "hyperelliptic", "coeffs": [0, 0, 1, 1]}),
        json.dumps({"type": "conic"}),
        json.dumps({"type": "quartic"}),
    ]
)
def test_verify_malformed(curve):
    out = run(main, ['verify', '--p', '11', '--curve', curve])
    assert out.return_code == 2
    assert out.stdout.startswith("ERROR: malformed curve")


def test_export_cosets_cmd(tmp_path):
    out = run(main, ['export-cosets', '--g', '2'])
    assert out.return_code == 0
    assert json.loads(out.stdout)["count"] == 15

    fn = tmp_path / "cosets.json"
    assert run(main, ['export-cosets', '-o', str(fn)]).return_code == 0
    assert json.loads(fn.read_text())["count"] == 135


def test_seeds_cmd():
    out = run(main, ['seeds', '--p', '11'])
    assert out.return_code == 0
    assert len(json.loads(out.stdout)) == 2


def test_sweep_cmd():
    out = run(main, ['sweep', '--start', '11', '--stop', '14'])
    assert out.return_code == 0
    assert [json.loads(line)["p"] for line in out.stdout.splitlines()] == [11, 13]
    assert run(main, ['sweep', '--start', '5']).return_code == 2
    assert run(main, ['sweep', '--start', '20', '--stop', '20']).return_code == 2
