"""Seeded random instances and the measure-chain property suite.

Everything takes an explicit :class:`random.Random` so runs are reproducible.
"""
from __future__ import annotations

import random
from fractions import Fraction
from functools import lru_cache
from itertools import combinations

from . import linalg
from .complex import (
    Chain,
    HomologyClass,
    SimplicialComplex,
    boundary,
    build_complex,
    homology_basis,
    l1_norm,
)
from .measure import (
    BoundedFunction,
    boundary_measure,
    include_chain,
    is_measure_cocycle,
    kronecker,
    measure_seminorm,
    total_variation,
    v2_extend,
)
from .seminorm import cocycle_basis, l1_seminorm


def random_rational(rng: random.Random, size: int = 5) -> Fraction:
    return Fraction(rng.randint(-size, size), rng.randint(1, 3))


def random_chain(X: SimplicialComplex, k: int, rng: random.Random, density: float = 0.5) -> Chain:
    terms = {s: random_rational(rng) for s in X[k] if rng.random() < density}
    return Chain(k, terms)


def random_function(X: SimplicialComplex, k: int, rng: random.Random) -> BoundedFunction:
    return BoundedFunction(X, k, {s: random_rational(rng) for s in X[k]})


@lru_cache(maxsize=None)
def _cycle_space(X: SimplicialComplex, k: int):
    if k == 0:
        return [[Fraction(int(i == j)) for j in range(X.n(0))] for i in range(X.n(0))]
    return linalg.nullspace(X.boundary_matrix(k), X.n(k))


@lru_cache(maxsize=None)
def _cocycle_space(X: SimplicialComplex, k: int):
    return [list(phi.values.values()) for phi in cocycle_basis(X, k)]


def random_cycle(X: SimplicialComplex, k: int, rng: random.Random) -> Chain:
    vec = [Fraction(0)] * X.n(k)
    for basis_vec in _cycle_space(X, k):
        q = rng.randint(-3, 3)
        if q:
            vec = [a + q * b for a, b in zip(vec, basis_vec)]
    return X.from_vector(k, vec)


def random_cocycle(X: SimplicialComplex, k: int, rng: random.Random) -> BoundedFunction:
    vals = [Fraction(0)] * X.n(k)
    for basis_vec in _cocycle_space(X, k):
        q = random_rational(rng, 3)
        vals = [a + q * b for a, b in zip(vals, basis_vec)]
    return BoundedFunction(X, k, dict(zip(X[k], vals)))


def random_complex(rng: random.Random, n_vertices: int = 7, n_facets: int = 7, dim: int = 2) -> SimplicialComplex:
    pool = list(combinations(range(n_vertices), dim + 1))
    facets = rng.sample(pool, min(n_facets, len(pool)))
    return build_complex([list(f) for f in facets])


def random_class(rng: random.Random) -> HomologyClass:
    """A random cycle of degree 1 or 2 on a random small complex, possibly null-homologous."""
    while True:
        dim = rng.choice((2, 2, 3))
        X = random_complex(rng, n_vertices=rng.randint(4, 7), n_facets=rng.randint(3, 8), dim=dim)
        k = rng.randint(1, dim - 1)
        z = random_cycle(X, k, rng)
        if not z.is_zero():
            return HomologyClass(X, z)


def measure_selftest(X: SimplicialComplex, samples: int = 50, seed: int = 0) -> list[tuple[str, bool]]:
    """Run the measure-chain properties on ``X``; returns ``(name, passed)`` pairs."""
    rng = random.Random(seed)
    degrees = range(X.dim + 1)
    results = []

    ok = True
    for _ in range(samples):
        c = random_chain(X, rng.choice(degrees), rng)
        ok &= total_variation(include_chain(c)) == l1_norm(c)
    results.append(("norm preservation of the inclusion", ok))

    ok = True
    for _ in range(samples):
        if X.dim < 1:
            break
        c = random_chain(X, rng.randint(1, X.dim), rng)
        ok &= boundary_measure(include_chain(c)) == include_chain(boundary(c))
    results.append(("inclusion commutes with boundary", ok))

    ok = True
    for _ in range(samples):
        if X.dim < 2:
            break
        mu = include_chain(random_chain(X, rng.randint(2, X.dim), rng))
        ok &= boundary_measure(boundary_measure(mu)).is_zero()
    results.append(("boundary squares to zero", ok))

    ok = True
    for _ in range(samples):
        k = rng.choice(degrees)
        f, g = random_function(X, k, rng), random_function(X, k, rng)
        mu, nu = (include_chain(random_chain(X, k, rng)) for _ in range(2))
        a, b = random_rational(rng), random_rational(rng)
        fg = BoundedFunction(X, k, {s: a * f(s) + b * g(s) for s in X[k]})
        ok &= kronecker(fg, mu) == a * kronecker(f, mu) + b * kronecker(g, mu)
        ok &= kronecker(f, a * mu + b * nu) == a * kronecker(f, mu) + b * kronecker(f, nu)
        ok &= abs(kronecker(f, mu)) <= f.sup_norm() * total_variation(mu)
    results.append(("kronecker bilinear and bounded", ok))

    ok = True
    for _ in range(samples):
        k = rng.choice(degrees)
        f, c = random_function(X, k, rng), random_chain(X, k, rng)
        ok &= v2_extend(f).pair(c) == kronecker(f, include_chain(c))
    results.append(("linear extension matches integration", ok))

    ok = True
    checked = 0
    for _ in range(samples):
        k = rng.randint(1, X.dim) if X.dim >= 1 else 0
        mu = include_chain(random_cycle(X, k, rng))
        f = random_cocycle(X, k, rng)
        pairing = kronecker(f, mu)
        if pairing == 0:
            continue
        f = (1 / pairing) * f
        ok &= is_measure_cocycle(f)
        ok &= measure_seminorm(mu, X) * f.sup_norm() >= 1
        checked += 1
    results.append((f"measure duality bound ({checked} pairs)", ok))

    ok = True
    for k in degrees:
        for alpha in homology_basis(X, k):
            ok &= measure_seminorm(include_chain(alpha.cycle), X) == l1_seminorm(alpha)[0]
    results.append(("isometry on homology basis", ok))
    return results

