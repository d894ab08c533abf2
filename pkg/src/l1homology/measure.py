"""Finitely supported signed measure chains on the simplices of a complex.

A measure k-chain here is a finite sum of weighted atoms ``Σ m_σ δ_σ``. Only
atoms on simplices of the ambient complex are representable; general measures
on mapping spaces with compact determination set have no finite encoding.
With finite support every subset is measurable, total variation is the sum of
absolute masses and integration is a finite sum.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complex import (
    Chain,
    Simplex,
    SimplicialComplex,
    SimplicialMap,
    _Combination,
    faces,
)
from .errors import DegreeError, DegreeMismatch, NotACycle
from .lp import LinearProgram, Status, solve
from .seminorm import Cochain


class MeasureChain(_Combination):
    """Atomic signed measure ``Σ m_σ δ_σ`` with finite support."""

    __slots__ = ()

    @classmethod
    def atom(cls, simplex: Simplex, mass=1) -> "MeasureChain":
        return cls(len(simplex) - 1, {tuple(simplex): mass})

    @property
    def masses(self) -> dict[Simplex, Fraction]:
        return dict(self._terms)

    def measure_of(self, subset) -> Fraction:
        """μ(A) for a set A of simplices."""
        return sum((self[s] for s in subset if s in self._terms), Fraction(0))


@dataclass(frozen=True)
class BoundedFunction:
    """A function on all k-simplices, to be integrated against measure k-chains."""

    complex: SimplicialComplex
    degree: int
    values: Mapping[Simplex, Fraction]

    def __post_init__(self):
        vals = {tuple(s): Fraction(v) for s, v in self.values.items()}
        if set(vals) != set(self.complex[self.degree]):
            raise ValueError(f"function must be defined on exactly the {self.degree}-simplices")
        object.__setattr__(self, "values", {s: vals[s] for s in self.complex[self.degree]})

    def __call__(self, simplex: Simplex) -> Fraction:
        return self.values[tuple(simplex)]

    def sup_norm(self) -> Fraction:
        return max((abs(v) for v in self.values.values()), default=Fraction(0))

    def __rmul__(self, q) -> "BoundedFunction":
        q = Fraction(q)
        return BoundedFunction(self.complex, self.degree, {s: q * v for s, v in self.values.items()})


def include_chain(c: Chain) -> MeasureChain:
    """Send Σ a_σ σ to Σ a_σ δ_σ."""
    return MeasureChain(c.degree, c.terms)


def total_variation(mu: MeasureChain) -> Fraction:
    """sup_A μ(A) - inf_A μ(A); attained by the positive and negative atom sets."""
    positive = sum((m for m in mu.masses.values() if m > 0), Fraction(0))
    negative = sum((m for m in mu.masses.values() if m < 0), Fraction(0))
    return positive - negative


def pushforward(mu: MeasureChain, g: SimplicialMap) -> MeasureChain:
    """Image measure under a simplicial map.

    An atom on σ goes to the atom on g∘σ; reordering the image vertices into
    canonical order contributes the permutation sign, and atoms with a
    degenerate image are dropped.
    """
    acc: dict[Simplex, Fraction] = {}
    for s, m in mu.masses.items():
        sign, image = g.image(s)
        if sign:
            acc[image] = acc.get(image, Fraction(0)) + sign * m
    return MeasureChain(mu.degree, acc)


def face_pushforward(mu: MeasureChain, j: int) -> MeasureChain:
    """Image under σ ↦ σ∘∂_j, i.e. restriction of every atom to its j-th face."""
    return MeasureChain(mu.degree - 1, [(s[:j] + s[j + 1:], m) for s, m in mu.masses.items()])


def boundary_measure(mu: MeasureChain) -> MeasureChain:
    if mu.degree < 1:
        raise DegreeError("boundary of a measure 0-chain is not defined")
    out = MeasureChain(mu.degree - 1, {})
    for j in range(mu.degree + 1):
        out = out + (-1) ** j * face_pushforward(mu, j)
    return out


def kronecker(f: BoundedFunction, mu: MeasureChain) -> Fraction:
    """∫ f dμ."""
    if f.degree != mu.degree:
        raise DegreeMismatch(f"function degree {f.degree}, measure degree {mu.degree}")
    return sum((f(s) * m for s, m in mu.masses.items()), Fraction(0))


def measure_coboundary(f: BoundedFunction) -> BoundedFunction:
    """(δf)(σ) = (-1)^(k+1) Σ_j (-1)^j f(∂_j σ)."""
    X, k = f.complex, f.degree
    sign = (-1) ** (k + 1)
    out = {t: sign * sum((s * f(face) for s, face in faces(t)), Fraction(0)) for t in X[k + 1]}
    return BoundedFunction(X, k + 1, out)


def is_measure_cocycle(f: BoundedFunction) -> bool:
    return all(v == 0 for v in measure_coboundary(f).values.values())


def v2_extend(f: BoundedFunction) -> Cochain:
    """Linear extension of f from simplices to simplicial chains."""
    return Cochain(f.complex, f.degree, f.values)


def measure_seminorm(mu: MeasureChain, X: SimplicialComplex) -> Fraction:
    """min ‖μ + ∂ν‖ over measure (k+1)-chains ν supported on X.

    The constraint columns are the boundaries of single atoms, computed with
    :func:`boundary_measure`.
    """
    k = mu.degree
    if not X.contains_chain(mu):
        raise ValueError("measure is not supported on the complex")
    if k >= 1 and not boundary_measure(mu).is_zero():
        raise NotACycle("measure chain has nonzero boundary")
    atoms = X[k]
    n, nb = len(atoms), X.n(k + 1)
    rows: list[dict[int, Fraction]] = [{i: Fraction(1), n + i: Fraction(-1)} for i in range(n)]
    for j, t in enumerate(X[k + 1]):
        for s, m in boundary_measure(MeasureChain.atom(t)).masses.items():
            i = X.index(s)
            rows[i][2 * n + j] = -m
            rows[i][2 * n + nb + j] = m
    lp = LinearProgram([1] * (2 * n) + [0] * (2 * nb), rows, [mu[s] for s in atoms])
    sol = solve(lp)
    assert sol.status is Status.OPTIMAL, sol.status
    return sol.value
