"""The ℓ¹-seminorm of homology classes and bounded-cocycle certificates for it.

For a cycle z of degree k on a finite complex the seminorm of its class is

    min ‖z + ∂b‖₁  over (k+1)-chains b,

which we solve as ``min Σ(u + v)`` subject to ``u - v - ∂b⁺ + ∂b⁻ = z`` with all
variables nonnegative. The LP dual is ``max ⟨y, z⟩`` over cochains y with
``|y| <= 1`` that vanish on boundaries, so an optimal dual rescaled by the
optimal value is a cocycle φ with ⟨φ, z⟩ = 1 and 1/‖φ‖∞ equal to the seminorm.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from . import linalg
from .complex import (
    Chain,
    HomologyClass,
    Simplex,
    SimplicialComplex,
    fundamental_cycle,
    subdivide,
)
from .errors import DegreeMismatch, NotACocycle, PairingNotOne
from .lp import LinearProgram, LPSolution, Status, solve


@dataclass(frozen=True)
class Cochain:
    """A rational function on all k-simplices of a complex (bounded since the domain is finite)."""

    complex: SimplicialComplex
    degree: int
    values: Mapping[Simplex, Fraction]

    def __post_init__(self):
        vals = {tuple(s): Fraction(v) for s, v in self.values.items()}
        if set(vals) != set(self.complex[self.degree]):
            raise ValueError(f"cochain must be defined on exactly the {self.degree}-simplices")
        object.__setattr__(self, "values", {s: vals[s] for s in self.complex[self.degree]})

    @classmethod
    def from_vector(cls, X: SimplicialComplex, k: int, vec) -> "Cochain":
        return cls(X, k, dict(zip(X[k], vec)))

    def __call__(self, simplex: Simplex) -> Fraction:
        return self.values[tuple(simplex)]

    def pair(self, c: Chain) -> Fraction:
        """Kronecker pairing ⟨φ, c⟩ = Σ a_σ φ(σ)."""
        if c.degree != self.degree:
            raise DegreeMismatch(f"cochain degree {self.degree}, chain degree {c.degree}")
        return sum((a * self.values[s] for s, a in c._items()), Fraction(0))

    def sup_norm(self) -> Fraction:
        return max((abs(v) for v in self.values.values()), default=Fraction(0))

    def coboundary(self) -> "Cochain":
        """(δφ)(τ) = φ(∂τ)."""
        X, k = self.complex, self.degree
        out = {}
        for t in X[k + 1]:
            out[t] = sum(
                ((-1) ** j * self.values[t[:j] + t[j + 1:]] for j in range(len(t))), Fraction(0)
            )
        return Cochain(X, k + 1, out)

    def is_cocycle(self) -> bool:
        return all(v == 0 for v in self.coboundary().values.values())

    def __rmul__(self, q) -> "Cochain":
        q = Fraction(q)
        return Cochain(self.complex, self.degree, {s: q * v for s, v in self.values.items()})


@dataclass(frozen=True)
class DualCertificate:
    cochain: Cochain
    pairing: Fraction
    sup_norm: Fraction

    @property
    def bound(self) -> Fraction:
        return 1 / self.sup_norm


@dataclass(frozen=True)
class SeminormResult:
    value: Fraction
    optimal_chain: Chain
    solution: LPSolution
    program: LinearProgram


def cocycle_basis(X: SimplicialComplex, k: int) -> list[Cochain]:
    """Basis of the k-cocycles, i.e. of the kernel of the transposed (k+1)-th boundary."""
    D = X.boundary_matrix(k + 1)
    transposed = [[D[i][j] for i in range(X.n(k))] for j in range(X.n(k + 1))]
    if not transposed:
        transposed = [[Fraction(0)] * X.n(k)]
    return [Cochain.from_vector(X, k, v) for v in linalg.nullspace(transposed, X.n(k))]


def seminorm_program(X: SimplicialComplex, z: Chain) -> LinearProgram:
    """LP with columns [u | v | b⁺ | b⁻] and one row per k-simplex."""
    k = z.degree
    nk, nb = X.n(k), X.n(k + 1)
    rows: list[dict[int, Fraction]] = [{i: Fraction(1), nk + i: Fraction(-1)} for i in range(nk)]
    for j, t in enumerate(X[k + 1]):
        for pos in range(len(t)):
            i = X.index(t[:pos] + t[pos + 1:])
            sign = (-1) ** pos
            rows[i][2 * nk + j] = Fraction(-sign)
            rows[i][2 * nk + nb + j] = Fraction(sign)
    cost = [1] * (2 * nk) + [0] * (2 * nb)
    return LinearProgram(cost, rows, X.to_vector(z))


def solve_seminorm(alpha: HomologyClass) -> SeminormResult:
    X, z = alpha.complex, alpha.cycle
    lp = seminorm_program(X, z)
    sol = solve(lp)
    # u = v = 0, b = 0 is never infeasible and the objective is bounded by 0
    assert sol.status is Status.OPTIMAL, sol.status
    nk = X.n(z.degree)
    chain = X.from_vector(z.degree, [sol.primal[i] - sol.primal[nk + i] for i in range(nk)])
    return SeminormResult(sol.value, chain, sol, lp)


def l1_seminorm(alpha: HomologyClass) -> tuple[Fraction, Chain]:
    """Exact ℓ¹-seminorm of the class and a cycle in the class attaining it."""
    res = solve_seminorm(alpha)
    return res.value, res.optimal_chain


def dual_certificate(alpha: HomologyClass) -> DualCertificate | None:
    """Normalized optimal cocycle, or None when the class has seminorm zero."""
    res = solve_seminorm(alpha)
    if res.value == 0:
        return None
    X, k = alpha.complex, alpha.degree
    phi = Cochain.from_vector(X, k, [y / res.value for y in res.solution.dual])
    return DualCertificate(phi, phi.pair(alpha.cycle), phi.sup_norm())


def verify_certificate(phi: Cochain, alpha: HomologyClass) -> Fraction:
    """Re-check a certificate by plain arithmetic and return the lower bound 1/‖φ‖∞.

    Does not touch the LP solver.
    """
    if phi.degree != alpha.degree:
        raise DegreeMismatch(f"cochain degree {phi.degree}, class degree {alpha.degree}")
    if phi.complex != alpha.complex:
        raise ValueError("cochain and class live on different complexes")
    for t, v in phi.coboundary().values.items():
        if v != 0:
            raise NotACocycle(f"φ(∂{list(t)}) = {v}")
    pairing = phi.pair(alpha.cycle)
    if pairing != 1:
        raise PairingNotOne(f"⟨φ, α⟩ = {pairing}")
    return 1 / phi.sup_norm()


def simplicial_volume_upper(X: SimplicialComplex, rounds: int) -> list[Fraction]:
    """Seminorm of the fundamental class after 0, 1, ..., ``rounds`` barycentric subdivisions.

    Each value bounds the simplicial volume from above.
    """
    if rounds < 0:
        raise ValueError("rounds must be nonnegative")
    values = []
    z = fundamental_cycle(X)
    for i in range(rounds + 1):
        values.append(l1_seminorm(HomologyClass(X, z))[0])
        if i < rounds:
            sd = subdivide(X)
            X, z = sd.complex, sd(z)
    return values
