import pytest

from sspwalk.curves import HyperellipticModel
from sspwalk.curves import QuarticModel
from sspwalk.exceptions import NotSmooth
from sspwalk.forms import Form
from sspwalk.invariants import InvariantFingerprint
from sspwalk.invariants import WeightedTuple
from sspwalk.invariants import curve_invariants
from sspwalk.invariants import dixmier_ohno
from sspwalk.invariants import fingerprint
from sspwalk.invariants import igusa
from sspwalk.invariants import igusa_from_form
from sspwalk.invariants import quartic_discriminant
from sspwalk.invariants import shioda
from sspwalk.invariants import shioda_from_form
from sspwalk.invariants import transvectant

BINARY_MATRIX = [[1, 2], [3, 5]]
TERNARY_MATRIX = [[1, 2, 0], [0, 1, 3], [4, 0, 1]]


def test_fingerprint_scaling(f11, rng):
    t = WeightedTuple((2, 4, 6, 8, 10), tuple(f11.random_element(rng, nonzero=True) for _ in range(5)))
    for _ in range(5):
        c = f11.random_element(rng, nonzero=True)
        assert fingerprint(t.scaled(c)) == fingerprint(t)


def test_fingerprint_odd_weights(f13, rng):
    # gcd of the supported weights is 1
    values = (f13.zero, f13(3), f13(5, 2), f13.zero)
    t = WeightedTuple((2, 3, 5, 7), values)
    fp = fingerprint(t)
    assert fp.pivot == 1
    assert fingerprint(t.scaled(f13(4, 9))) == fp
    assert not fp.normalized[0]


def test_fingerprint_separates(f11):
    a = WeightedTuple((2, 4), (f11(1), f11(1)))
    b = WeightedTuple((2, 4), (f11(1), f11(2)))
    assert fingerprint(a) != fingerprint(b)


def test_fingerprint_errors(f11):
    with pytest.raises(ValueError):
        fingerprint(WeightedTuple((2, 4), (f11.zero, f11.zero)))
    with pytest.raises(ValueError):
        fingerprint(WeightedTuple((2, 4), (f11.one,)))


def test_fingerprint_json(f11, rng):
    t = WeightedTuple((3, 6, 9), tuple(f11.random_element(rng, nonzero=True) for _ in range(3)))
    fp = fingerprint(t)
    assert InvariantFingerprint.from_json(fp.to_json(), f11) == fp
    assert len(fp.hexdigest()) == 32


def test_transvectant_errors(f11):
    x = Form.variable(f11, 2, 0)
    with pytest.raises(ValueError):
        transvectant(x, x * x, 2)
    with pytest.raises(ValueError):
        transvectant(Form.variable(f11, 3, 0), x, 1)


def test_transvectant_order_zero_is_product(f11):
    x, y = Form.variable(f11, 2, 0), Form.variable(f11, 2, 1)
    f = x * x + y * y
    assert transvectant(f, x, 0) == f * x


def test_igusa_gl2_invariance(f11):
    model = HyperellipticModel.from_lambdas(f11, [2, 3, 4])
    f = model.binary_form()
    assert fingerprint(igusa_from_form(f.substitute(BINARY_MATRIX))) == fingerprint(igusa(model))
    assert fingerprint(igusa_from_form(f.scale(7))) == fingerprint(igusa(model))


def test_shioda_gl2_invariance(f13):
    model = HyperellipticModel.from_lambdas(f13, [2, 3, 4, 5, 6])
    f = model.binary_form()
    assert fingerprint(shioda_from_form(f.substitute(BINARY_MATRIX))) == fingerprint(shioda(model))


def test_binary_invariant_errors(f11):
    with pytest.raises(ValueError):
        igusa(HyperellipticModel.from_lambdas(f11, [2, 3, 4, 5, 6]))
    with pytest.raises(ValueError):
        shioda(HyperellipticModel.from_lambdas(f11, [2, 3, 4]))
    x, y = Form.variable(f11, 2, 0), Form.variable(f11, 2, 1)
    with pytest.raises(NotSmooth):
        igusa_from_form((x * x) * (x + y) * (x - y) * (x.scale(2) + y) * y)


def test_dixmier_ohno_gl3_invariance(quartic_nodes11):
    model = quartic_nodes11[0].model
    moved = QuarticModel.from_form(model.form().substitute(TERNARY_MATRIX))
    assert fingerprint(dixmier_ohno(moved)) == fingerprint(dixmier_ohno(model))
    assert len(dixmier_ohno(model).values) == 13


def _random_invertible(field, rng, n=3):
    while True:
        m = [[field.random_element(rng) for _ in range(n)] for _ in range(n)]
        det = (
            m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
            - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
            + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
        )
        if det:
            return m


@pytest.mark.slow
def test_dixmier_ohno_random_gl3_invariance(f11, rng, quartic_nodes11):
    model = quartic_nodes11[0].model
    expected = fingerprint(dixmier_ohno(model))
    for _ in range(100):
        matrix = _random_invertible(f11, rng)
        moved = QuarticModel.from_form(model.form().substitute(matrix))
        assert fingerprint(dixmier_ohno(moved)) == expected


def test_singular_quartic(f11):
    x, y, z = (Form.variable(f11, 3, v) for v in range(3))
    singular = QuarticModel.from_form(x ** 4 + y ** 4 + x * y * z * z)
    assert not quartic_discriminant(singular)
    with pytest.raises(NotSmooth):
        dixmier_ohno(singular)


def test_curve_invariants_dispatch(f11, quartic_nodes11):
    model = HyperellipticModel.from_lambdas(f11, [2, 3, 4])
    assert curve_invariants(model) == igusa(model)
    quartic = quartic_nodes11[0].model
    assert curve_invariants(quartic) == dixmier_ohno(quartic)


def test_known_hyperelliptic_curve_is_found(f11, hyperelliptic_nodes11):
    # y^2 = x^7 - x is superspecial for p = 3 mod 4
    model = HyperellipticModel.from_coeffs(f11, [0, -1, 0, 0, 0, 0, 0, 1])
    key = fingerprint(shioda(model)).hexdigest()
    assert key in {r.key for r in hyperelliptic_nodes11}


def test_fermat_quartic_is_found(f11, quartic_nodes11):
    x, y, z = (Form.variable(f11, 3, v) for v in range(3))
    fermat = QuarticModel.from_form(x ** 4 + y ** 4 + z ** 4)
    key = fingerprint(dixmier_ohno(fermat)).hexdigest()
    assert key in {r.key for r in quartic_nodes11}
