import pytest

from sspwalk.forms import Form
from sspwalk.forms import monomial_index
from sspwalk.forms import monomials


def test_monomial_order():
    mons = monomials(3, 4)
    assert len(mons) == 15
    assert mons[0] == (4, 0, 0)
    assert mons[1] == (3, 1, 0)
    assert mons[-1] == (0, 0, 4)
    assert monomials(2, 3) == ((3, 0), (2, 1), (1, 2), (0, 3))
    idx = monomial_index(3, 4)
    assert all(idx[e] == i for i, e in enumerate(mons))


def _random_form(field, rng, nvars, degree):
    values = [field.random_element(rng) for _ in monomials(nvars, degree)]
    return Form.from_values(field, nvars, degree, values)


def test_product_evaluates_pointwise(f11, rng):
    f = _random_form(f11, rng, 3, 2)
    g = _random_form(f11, rng, 3, 3)
    fg = f * g
    assert fg.degree == 5
    for _ in range(10):
        pt = [f11.random_element(rng) for _ in range(3)]
        assert fg.evaluate(pt) == f.evaluate(pt) * g.evaluate(pt)


def test_linear_operations(f11, rng):
    f = _random_form(f11, rng, 2, 4)
    g = _random_form(f11, rng, 2, 4)
    assert (f + g) - g == f
    assert f + (-f) == Form(f11, 2, 4)
    assert (f - f).is_zero()
    assert f.scale(3) == f + f + f
    with pytest.raises(ValueError):
        _ = f + _random_form(f11, rng, 2, 3)


def test_power(f11):
    x, y = Form.variable(f11, 2, 0), Form.variable(f11, 2, 1)
    s = (x + y) ** 3
    assert [c for c in s.values()] == [1, 3, 3, 1]
    assert (x ** 0).constant() == 1


def test_derivative(f11):
    x, y, z = (Form.variable(f11, 3, v) for v in range(3))
    f = x * x * y + z * z * z
    assert f.derivative(0) == (x * y).scale(2)
    assert f.derivative(2, times=2) == z.scale(6)
    assert f.derivative(1, times=2).is_zero()
    assert f.derivative(0, times=5).degree == 0


def test_contract(f11):
    x, y = Form.variable(f11, 2, 0), Form.variable(f11, 2, 1)
    # d/dx applied to x^2 y
    assert x.contract(x * x * y) == (x * y).scale(2)
    # d^2/dxdy applied to x^2 y
    assert (x * y).contract(x * x * y) == x.scale(2)
    with pytest.raises(ValueError):
        (x * x * y).contract(x)


def test_substitute(f11, rng):
    f = _random_form(f11, rng, 3, 4)
    identity = [[1, 0, 0], [0, 1, 0], [0, 0, 1]]
    assert f.substitute(identity) == f

    m = [[f11.random_element(rng) for _ in range(3)] for _ in range(3)]
    g = f.substitute(m)
    for _ in range(5):
        pt = [f11.random_element(rng) for _ in range(3)]
        image = [sum((m[i][j] * pt[j] for j in range(3)), f11.zero) for i in range(3)]
        assert g.evaluate(pt) == f.evaluate(image)


def test_terms_and_coefficients(f11):
    f = Form.from_terms(f11, 3, 2, {(2, 0, 0): 1, (0, 1, 1): 5})
    assert dict(f.terms()) == {(2, 0, 0): f11(1), (0, 1, 1): f11(5)}
    assert f.coefficient((0, 1, 1)) == 5
    assert f.coefficient((1, 1, 0)) == 0
    with pytest.raises(ValueError):
        f.constant()
