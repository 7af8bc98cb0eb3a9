import pytest

from sspwalk.classify import VarietyKind
from sspwalk.classify import vanishing_count
from sspwalk.classify import vanishing_indices
from sspwalk.exceptions import SingularOrCorrupt
from sspwalk.seeds import product_theta
from sspwalk.theta import SquaredThetaNullPoint
from sspwalk.theta import even_indices


def test_triple_product(e3_theta11):
    t = vanishing_count(e3_theta11)
    assert (t.g, t.n_van) == (3, 9)
    assert t.kind is VarietyKind.E_X_E_X_E
    assert not t.is_jacobian


def test_double_product(seeds11):
    t = vanishing_count(product_theta(seeds11[0].theta, seeds11[1].theta))
    assert (t.g, t.n_van) == (2, 1)
    assert t.kind is VarietyKind.E_X_E


def test_elliptic_times_genus2(seeds11, genus2_11):
    theta = product_theta(seeds11[0].theta, genus2_11[0].theta)
    t = vanishing_count(theta)
    assert t.n_van == 6
    assert t.kind is VarietyKind.E_X_JAC2
    assert len(vanishing_indices(theta)) == 6


def test_genus2_jacobian(genus2_11):
    t = vanishing_count(genus2_11[0].theta)
    assert t.kind is VarietyKind.JACOBIAN2
    assert t.is_jacobian


def test_neighbours_have_admissible_counts(neighbours11):
    kinds = {vanishing_count(t).kind for t in neighbours11}
    assert kinds <= set(VarietyKind)
    assert all(vanishing_count(t).g == 3 for t in neighbours11)


def test_walk_kinds(quartic_nodes11, hyperelliptic_nodes11):
    assert all(r.kind.kind is VarietyKind.PLANE_QUARTIC for r in quartic_nodes11)
    assert all(r.kind.kind is VarietyKind.HYPERELLIPTIC3 for r in hyperelliptic_nodes11)


@pytest.mark.parametrize("n_zero", [2, 3, 5, 10])
def test_inadmissible_counts(f11, n_zero):
    values = [f11.zero] * 64
    for k, i in enumerate(even_indices(3)):
        values[i] = f11.zero if k < n_zero else f11(k + 1, 1)
    theta = SquaredThetaNullPoint.from_values(3, values, normalize=False)
    with pytest.raises(SingularOrCorrupt) as e:
        vanishing_count(theta)
    assert e.value.null_point is theta
