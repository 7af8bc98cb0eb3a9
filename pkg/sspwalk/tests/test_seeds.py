import pytest

from sspwalk.curves import HyperellipticModel
from sspwalk.field import PrimeField
from sspwalk.seeds import any_supersingular_lambda
from sspwalk.seeds import elliptic_theta
from sspwalk.seeds import hasse_polynomial
from sspwalk.seeds import j_invariant
from sspwalk.seeds import product_theta
from sspwalk.seeds import seeds_to_json
from sspwalk.seeds import supersingular_lambdas
from sspwalk.seeds import supersingular_roots
from sspwalk.verify import cartier_manin_hyperelliptic


def test_hasse_polynomial():
    assert hasse_polynomial(11) == [1, 3, 1, 1, 3, 1]
    assert len(hasse_polynomial(13)) == 7


def test_j_invariant(f11):
    assert j_invariant(f11(-1)) == 1728 % 11
    assert j_invariant(f11(2)) == j_invariant(f11(2).inverse())


@pytest.mark.parametrize("p,count", [(11, 2), (13, 1), (17, 2), (19, 2)])
def test_supersingular_class_count(p, count):
    seeds = supersingular_lambdas(PrimeField(p))
    assert len(seeds) == count
    assert len({s.j for s in seeds}) == count


@pytest.mark.parametrize("p", [11, 13, 17])
def test_roots_are_supersingular(p):
    field = PrimeField(p)
    roots = supersingular_roots(field)
    assert len(roots) == (p - 1) // 2
    assert len(set(roots)) == len(roots)
    assert any_supersingular_lambda(field) == roots[0]
    for lam in roots:
        model = HyperellipticModel.from_lambdas(field, [lam])
        assert cartier_manin_hyperelliptic(model).is_zero()


@pytest.mark.parametrize("p", [11, 13])
def test_ordinary_lambdas_have_nonzero_matrix(p):
    field = PrimeField(p)
    roots = set(supersingular_roots(field))
    checked = 0
    for lam in field.elements():
        if lam == 0 or lam == 1 or lam in roots:
            continue
        model = HyperellipticModel.from_lambdas(field, [lam])
        assert not cartier_manin_hyperelliptic(model).is_zero()
        checked += 1
    assert checked == p * p - 2 - len(roots)


def test_elliptic_theta(seeds11):
    for seed in seeds11:
        theta = seed.theta
        assert theta.g == 1
        assert not theta.values[3]
        assert all(theta.values[i] for i in range(3))
        # entries are sqrt(lam) and sqrt(lam - 1) up to the common factor
        assert theta.values[0] ** 2 == seed.lam * theta.values[2] ** 2
        assert theta.values[1] ** 2 == (seed.lam - 1) * theta.values[2] ** 2


def test_elliptic_theta_missing_root(f11):
    nonsquares = [x for x in f11.elements() if x and not f11.is_square(x)]
    assert elliptic_theta(nonsquares[0]) is None


def test_product_is_associative(seeds11):
    e1, e2 = seeds11[0].theta, seeds11[1].theta
    left = product_theta(product_theta(e1, e2), e1)
    right = product_theta(e1, product_theta(e2, e1))
    assert left == right


def test_product_genus(e3_theta11, seeds11):
    with pytest.raises(ValueError):
        product_theta(e3_theta11, seeds11[0].theta)
    with pytest.raises(ValueError):
        product_theta(e3_theta11, e3_theta11)
    assert product_theta(seeds11[0].theta, seeds11[0].theta).g == 2


def test_seeds_to_json(seeds11):
    data = seeds_to_json(seeds11)
    assert len(data) == 2
    assert set(data[0]) == {"lambda", "j", "theta"}
