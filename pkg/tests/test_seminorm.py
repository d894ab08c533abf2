import random
from fractions import Fraction

import pytest

from l1homology import corpus
from l1homology.complex import (
    Chain,
    HomologyClass,
    SimplicialMap,
    boundary,
    build_complex,
    fundamental_cycle,
    homology_basis,
    is_homologous,
    l1_norm,
)
from l1homology.errors import NotACocycle, NotACycle, NotClosed, NotOrientable, PairingNotOne
from l1homology.lp import Status
from l1homology.selftest import random_chain, random_class
from l1homology.seminorm import (
    Cochain,
    cocycle_basis,
    dual_certificate,
    l1_seminorm,
    simplicial_volume_upper,
    solve_seminorm,
    verify_certificate,
)


def fundamental_class(X):
    return HomologyClass(X, fundamental_cycle(X))


def test_boundary_class_has_zero_seminorm(triangle):
    z = boundary(Chain(2, {(0, 1, 2): 3}))
    value, chain = l1_seminorm(HomologyClass(triangle, z))
    assert value == 0 and chain.is_zero()


def test_tetrahedron_fundamental_class(tetra):
    # C_3 = 0, so the class has a single representative
    alpha = fundamental_class(tetra)
    value, chain = l1_seminorm(alpha)
    assert value == 4
    assert chain == alpha.cycle


def test_genus2_at_least_four(genus2):
    value, _ = l1_seminorm(fundamental_class(genus2))
    assert value >= 4


def test_optimal_chain_is_homologous(torus):
    rng = random.Random(3)
    for alpha in homology_basis(torus, 1):
        z = alpha.cycle + boundary(random_chain(torus, 2, rng))
        value, chain = l1_seminorm(HomologyClass(torus, z))
        assert l1_norm(chain) == value <= l1_norm(z)
        assert is_homologous(torus, chain, z)[0]


def test_torus_generators_need_three_edges(torus):
    # a loop of fewer than 3 edges cannot be essential in a simplicial complex
    for alpha in homology_basis(torus, 1):
        assert l1_seminorm(alpha)[0] == 3


def test_tetrahedron_certificate(tetra):
    alpha = fundamental_class(tetra)
    cert = dual_certificate(alpha)
    assert cert.pairing == 1 and cert.sup_norm == Fraction(1, 4)
    for s, a in alpha.cycle.terms.items():
        assert cert.cochain(s) == a / 4
    assert verify_certificate(cert.cochain, alpha) == 4


def test_scaled_certificate_rejected(tetra):
    alpha = fundamental_class(tetra)
    phi = dual_certificate(alpha).cochain
    with pytest.raises(PairingNotOne):
        verify_certificate(2 * phi, alpha)


def test_non_cocycle_rejected(torus):
    alpha = homology_basis(torus, 1)[0]
    phi = dual_certificate(alpha).cochain
    values = dict(phi.values)
    edge = next(iter(values))
    values[edge] += 1
    with pytest.raises(NotACocycle):
        verify_certificate(Cochain(torus, 1, values), alpha)


def test_boundary_has_no_certificate(triangle):
    z = boundary(Chain(2, {(0, 1, 2): 1}))
    alpha = HomologyClass(triangle, z)
    assert dual_certificate(alpha) is None
    assert all(phi.pair(z) == 0 for phi in cocycle_basis(triangle, 1))


def test_genus2_certificate_closes_gap(genus2):
    alpha = fundamental_class(genus2)
    cert = dual_certificate(alpha)
    assert cert.bound == l1_seminorm(alpha)[0]
    assert verify_certificate(cert.cochain, alpha) == cert.bound


def test_strong_duality_on_lp(torus):
    for alpha in homology_basis(torus, 1) + homology_basis(torus, 2):
        res = solve_seminorm(alpha)
        assert res.solution.status is Status.OPTIMAL
        dual_value = sum(b * y for b, y in zip(res.program.b, res.solution.dual))
        assert dual_value == res.value
        assert all(s >= 0 for s in res.program.dual_slack(res.solution.dual))


@pytest.mark.parametrize("seed", range(4))
def test_weak_duality_against_any_cocycle(seed):
    rng = random.Random(seed)
    for _ in range(10):
        alpha = random_class(rng)
        value = l1_seminorm(alpha)[0]
        for phi in cocycle_basis(alpha.complex, alpha.degree):
            p = phi.pair(alpha.cycle)
            if p:
                phi = (1 / p) * phi
                assert verify_certificate(phi, alpha) <= value


@pytest.mark.parametrize("q", [Fraction(2), Fraction(-3, 2), Fraction(0), Fraction(1, 7)])
def test_scale_equivariance(torus, q):
    alpha = homology_basis(torus, 1)[1]
    assert l1_seminorm(alpha.scaled(q))[0] == abs(q) * l1_seminorm(alpha)[0]


def test_vanishing_iff_boundary():
    rng = random.Random(8)
    for _ in range(25):
        alpha = random_class(rng)
        zero = Chain(alpha.degree, {})
        bounds = is_homologous(alpha.complex, alpha.cycle, zero)[0]
        assert (l1_seminorm(alpha)[0] == 0) == bounds
        if bounds:
            assert all(phi.pair(alpha.cycle) == 0 for phi in cocycle_basis(alpha.complex, alpha.degree))


def test_functoriality_under_covering_projection(double_cover):
    total_cycle = Chain(1, {(0, 1): 1, (1, 2): 1, (2, 3): 1, (3, 4): 1, (4, 5): 1, (0, 5): -1})
    alpha = HomologyClass(double_cover.total, total_cycle)
    g = double_cover.as_map()
    image = HomologyClass(double_cover.base, g.push_chain(total_cycle))
    assert l1_seminorm(image)[0] <= l1_seminorm(alpha)[0] == 6


def test_functoriality_under_random_maps(torus):
    rng = random.Random(4)
    target = build_complex([[0, 1, 2], [0, 2, 3], [1, 2, 3], [0, 1, 3]])
    for _ in range(10):
        vmap = {v: rng.randrange(4) for v in torus.vertices}
        g = SimplicialMap(torus, target, vmap)
        for alpha in homology_basis(torus, 1) + homology_basis(torus, 2):
            image = HomologyClass(target, g.push_chain(alpha.cycle))
            assert l1_seminorm(image)[0] <= l1_seminorm(alpha)[0]


def test_volume_tetrahedron(tetra):
    assert simplicial_volume_upper(tetra, 0) == [4]


def test_volume_genus2(genus2):
    values = simplicial_volume_upper(genus2, 0)
    assert values[0] >= 4


def test_volume_torus_nonnegative(torus):
    values = simplicial_volume_upper(torus, 1)
    assert len(values) == 2 and all(v >= 0 for v in values)


def test_volume_errors(rp2, triangle):
    with pytest.raises(NotOrientable):
        simplicial_volume_upper(rp2, 0)
    with pytest.raises(NotClosed):
        simplicial_volume_upper(triangle, 0)


def test_seminorm_rejects_non_cycle(triangle):
    with pytest.raises(NotACycle):
        l1_seminorm(HomologyClass(triangle, Chain(1, {(0, 1): 1})))
