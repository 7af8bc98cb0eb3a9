import pytest

from sspwalk.curves import HyperellipticModel
from sspwalk.curves import QuarticModel
from sspwalk.exceptions import NotSmooth
from sspwalk.field import PrimeField
from sspwalk.forms import Form
from sspwalk.verify import cartier_manin_hyperelliptic
from sspwalk.verify import hasse_witt_quartic
from sspwalk.verify import is_superspecial
from sspwalk.verify import verify_json

X7_MINUS_1 = [-1, 0, 0, 0, 0, 0, 0, 1]
X7_MINUS_X = [0, -1, 0, 0, 0, 0, 0, 1]


def _fermat(p):
    field = PrimeField(p)
    x, y, z = (Form.variable(field, 3, v) for v in range(3))
    return QuarticModel.from_form(x ** 4 + y ** 4 + z ** 4)


@pytest.mark.parametrize(
    "p,coeffs,zero", [
        (11, X7_MINUS_1, False),
        (11, X7_MINUS_X, True),
        (13, X7_MINUS_1, True),
    ]
)
def test_cartier_manin(p, coeffs, zero):
    model = HyperellipticModel.from_coeffs(PrimeField(p), coeffs)
    matrix = cartier_manin_hyperelliptic(model)
    assert matrix.g == 3
    assert len(matrix.entries) == 3
    assert matrix.is_zero() is zero
    assert is_superspecial(model) is zero


def test_cartier_manin_from_coefficients(f11):
    coeffs = [f11(c) for c in X7_MINUS_X]
    assert cartier_manin_hyperelliptic(coeffs).is_zero()


@pytest.mark.parametrize("p,zero", [(11, True), (13, False)])
def test_hasse_witt_fermat(p, zero):
    model = _fermat(p)
    matrix = hasse_witt_quartic(model)
    assert matrix.g == 3
    assert matrix.is_zero() is zero
    assert is_superspecial(model) is zero


def test_not_smooth(f11):
    with pytest.raises(NotSmooth):
        cartier_manin_hyperelliptic([f11(0), f11(0), f11(1), f11(1)])
    with pytest.raises(NotSmooth):
        cartier_manin_hyperelliptic([f11(1), f11(1)])
    x, y, z = (Form.variable(f11, 3, v) for v in range(3))
    with pytest.raises(NotSmooth):
        hasse_witt_quartic(QuarticModel.from_form(x ** 4 + y ** 4 + x * y * z * z))


def test_verify_json(f13):
    data = {"type": "hyperelliptic", "coeffs": X7_MINUS_1}
    matrix = verify_json(data, f13)
    assert matrix.is_zero()
    out = matrix.to_json()
    assert out["g"] == 3
    assert out["entries"] == [[[0, 0]] * 3] * 3
    assert str(matrix).count("\n") == 2


def test_verify_json_quartic(f11):
    data = _fermat(11).to_json()
    assert verify_json(data, f11).is_zero()
    with pytest.raises(ValueError):
        verify_json({"type": "quartic", "coeffs": [1, 2]}, f11)


def test_verify_is_independent_of_the_theta_pipeline():
    import subprocess
    import sys

    code = (
        "import sys, sspwalk.verify; "
        "print(' '.join(sorted(m for m in sys.modules if m.startswith('sspwalk'))))"
    )
    out = subprocess.run([sys.executable, "-c", code], capture_output=True, text=True, check=True)
    loaded = set(out.stdout.split())
    assert "sspwalk.verify" in loaded
    for name in ("theta", "symplectic", "reconstruct", "invariants", "seeds", "enumeration"):
        assert f"sspwalk.{name}" not in loaded
