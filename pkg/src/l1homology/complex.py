"""Finite simplicial complexes, oriented chains and their homology over Q.

Simplices are strictly increasing tuples of nonnegative vertex ids. The
increasing order is the canonical orientation; orientation signs live on the
coefficients of a chain, never on the simplex.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, permutations
from typing import Iterable, Iterator, Mapping, Sequence

from . import linalg
from .errors import DegreeError, InvalidFacet, NotACycle, NotClosed, NotOrientable

Simplex = tuple[int, ...]


def permutation_sign(seq: Sequence[int]) -> int:
    """Sign of the permutation sorting ``seq`` (entries must be distinct)."""
    sign = 1
    seen = list(seq)
    for i in range(len(seen)):
        for j in range(i + 1, len(seen)):
            if seen[i] > seen[j]:
                sign = -sign
    return sign


def orient(vertices: Sequence[int]) -> tuple[int, Simplex]:
    """Return ``(sign, canonical simplex)`` for an ordered vertex list.

    ``sign`` is 0 when a vertex repeats (degenerate simplex).
    """
    canon = tuple(sorted(vertices))
    if len(set(canon)) != len(canon):
        return 0, canon
    return permutation_sign(vertices), canon


def faces(simplex: Simplex) -> Iterator[tuple[int, Simplex]]:
    """Yield ``((-1)^j, j-th face)`` for j = 0..k."""
    for j in range(len(simplex)):
        yield (-1) ** j, simplex[:j] + simplex[j + 1:]


class _Combination:
    """Sparse rational combination of canonical simplices of a fixed degree."""

    __slots__ = ("degree", "_terms")

    def __init__(self, degree: int, terms: Mapping[Simplex, object] | Iterable = ()):
        self.degree = degree
        items = terms.items() if isinstance(terms, Mapping) else terms
        acc: dict[Simplex, Fraction] = {}
        for simplex, coeff in items:
            simplex = tuple(simplex)
            if len(simplex) != degree + 1 or any(
                a >= b for a, b in zip(simplex, simplex[1:])
            ):
                raise ValueError(f"{simplex} is not a canonical {degree}-simplex")
            acc[simplex] = acc.get(simplex, Fraction(0)) + Fraction(coeff)
        self._terms = {s: acc[s] for s in sorted(acc) if acc[s] != 0}

    @classmethod
    def from_oriented(cls, degree: int, items: Iterable[tuple[Sequence[int], object]]):
        """Build from arbitrarily ordered vertex lists, folding orientation into coefficients."""
        acc: dict[Simplex, Fraction] = {}
        for vertices, coeff in items:
            sign, canon = orient(vertices)
            if sign:
                acc[canon] = acc.get(canon, Fraction(0)) + sign * Fraction(coeff)
        return cls(degree, acc)

    def _items(self):
        return self._terms.items()

    def __getitem__(self, simplex: Simplex) -> Fraction:
        return self._terms.get(tuple(simplex), Fraction(0))

    def __iter__(self):
        return iter(self._terms)

    def __len__(self) -> int:
        return len(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def support(self) -> list[Simplex]:
        return list(self._terms)

    def _check(self, other):
        if type(other) is not type(self):
            return NotImplemented
        if other.degree != self.degree:
            raise DegreeError(f"degree {self.degree} vs {other.degree}")
        return None

    def __add__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        acc = dict(self._terms)
        for s, a in other._items():
            acc[s] = acc.get(s, Fraction(0)) + a
        return type(self)(self.degree, acc)

    def __neg__(self):
        return type(self)(self.degree, {s: -a for s, a in self._items()})

    def __sub__(self, other):
        if self._check(other) is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        q = Fraction(scalar)
        return type(self)(self.degree, {s: q * a for s, a in self._items()})

    def __eq__(self, other):
        if type(other) is not type(self):
            return NotImplemented
        return self.degree == other.degree and self._terms == other._terms

    __hash__ = None

    def __repr__(self):
        body = " + ".join(f"{a}*{list(s)}" for s, a in self._items()) or "0"
        return f"{type(self).__name__}(deg={self.degree}: {body})"


class Chain(_Combination):
    """A simplicial k-chain ``sum a_s * s`` with exact rational coefficients."""

    __slots__ = ()

    @property
    def terms(self) -> dict[Simplex, Fraction]:
        return dict(self._terms)


@dataclass(frozen=True)
class SimplicialComplex:
    """Finite complex closed under faces; simplices sorted lexicographically per degree."""

    simplices: tuple[tuple[Simplex, ...], ...]
    _index: tuple[dict, ...] = field(repr=False, compare=False, default=())

    def __post_init__(self):
        object.__setattr__(
            self, "_index", tuple({s: i for i, s in enumerate(row)} for row in self.simplices)
        )

    @property
    def dim(self) -> int:
        return len(self.simplices) - 1

    @property
    def vertices(self) -> list[int]:
        return [s[0] for s in self.simplices[0]]

    @property
    def facets(self) -> list[Simplex]:
        """Maximal simplices, in degree then lexicographic order."""
        covered = set()
        for row in self.simplices[1:]:
            for s in row:
                covered.update(f for _, f in faces(s))
        return [s for row in self.simplices for s in row if s not in covered]

    def n(self, k: int) -> int:
        """Number of k-simplices (0 outside 0..dim)."""
        return len(self.simplices[k]) if 0 <= k <= self.dim else 0

    def __getitem__(self, k: int) -> tuple[Simplex, ...]:
        return self.simplices[k] if 0 <= k <= self.dim else ()

    def index(self, simplex: Simplex) -> int:
        return self._index[len(simplex) - 1][tuple(simplex)]

    def __contains__(self, simplex) -> bool:
        simplex = tuple(simplex)
        k = len(simplex) - 1
        return 0 <= k <= self.dim and simplex in self._index[k]

    def contains_chain(self, c: _Combination) -> bool:
        return all(s in self for s in c)

    def boundary_matrix(self, k: int) -> list[list[Fraction]]:
        """Dense matrix of the boundary C_k -> C_{k-1}; rows are (k-1)-simplices."""
        rows = [[Fraction(0)] * self.n(k) for _ in range(self.n(k - 1))]
        if k >= 1:
            for j, s in enumerate(self[k]):
                for sign, f in faces(s):
                    rows[self.index(f)][j] += sign
        return rows

    def to_vector(self, c: _Combination) -> list[Fraction]:
        v = [Fraction(0)] * self.n(c.degree)
        for s, a in c._items():
            v[self.index(s)] = a
        return v

    def from_vector(self, k: int, vec: Sequence, cls=Chain):
        return cls(k, {s: a for s, a in zip(self[k], vec) if a != 0})


def build_complex(facets: Iterable[Sequence[int]]) -> SimplicialComplex:
    """Closure of ``facets`` under taking faces."""
    facets = [list(f) for f in facets]
    if not facets:
        raise InvalidFacet("no facets given")
    by_degree: dict[int, set[Simplex]] = {}
    for f in facets:
        if not f:
            raise InvalidFacet("empty facet")
        if any(not isinstance(v, int) or isinstance(v, bool) or v < 0 for v in f):
            raise InvalidFacet(f"vertex ids must be nonnegative integers: {f}")
        if len(set(f)) != len(f):
            raise InvalidFacet(f"repeated vertex in facet {f}")
        f = tuple(sorted(f))
        for r in range(1, len(f) + 1):
            by_degree.setdefault(r - 1, set()).update(combinations(f, r))
    dim = max(by_degree)
    return SimplicialComplex(tuple(tuple(sorted(by_degree[k])) for k in range(dim + 1)))


def boundary(c: Chain) -> Chain:
    """Alternating face sum; defined for degree >= 1."""
    if c.degree < 1:
        raise DegreeError("boundary of a 0-chain is not defined")
    acc: dict[Simplex, Fraction] = {}
    for s, a in c._items():
        for sign, f in faces(s):
            acc[f] = acc.get(f, Fraction(0)) + sign * a
    return Chain(c.degree - 1, acc)


def is_cycle(c: Chain) -> bool:
    return c.degree == 0 or boundary(c).is_zero()


def l1_norm(c: _Combination) -> Fraction:
    return sum((abs(a) for _, a in c._items()), Fraction(0))


@dataclass(frozen=True)
class HomologyClass:
    complex: SimplicialComplex
    cycle: Chain

    def __post_init__(self):
        if not self.complex.contains_chain(self.cycle):
            raise ValueError("cycle is not supported on the complex")
        if not is_cycle(self.cycle):
            raise NotACycle(f"boundary of {self.cycle!r} is nonzero")

    @property
    def degree(self) -> int:
        return self.cycle.degree

    def scaled(self, q) -> "HomologyClass":
        return HomologyClass(self.complex, q * self.cycle)


def _boundary_rows(X: SimplicialComplex, k: int):
    if k == 0:
        return [[Fraction(0)] * X.n(0)]
    return X.boundary_matrix(k)


def _columns(rows, ncols):
    return [[row[j] for row in rows] for j in range(ncols)]


def betti_numbers(X: SimplicialComplex) -> list[int]:
    ranks = [linalg.rank(X.boundary_matrix(k), X.n(k)) if k else 0 for k in range(X.dim + 2)]
    return [X.n(k) - ranks[k] - ranks[k + 1] for k in range(X.dim + 1)]


def homology_basis(X: SimplicialComplex, k: int) -> list[HomologyClass]:
    """Cycles whose classes form a basis of H_k(X; Q).

    Kernel vectors of the k-th boundary are taken in order and kept when they
    are independent of the image of the (k+1)-th boundary and the cycles
    already chosen.
    """
    if not 0 <= k <= X.dim:
        raise DegreeError(f"degree {k} outside 0..{X.dim}")
    n = X.n(k)
    span = linalg.EchelonBasis(n)
    for col in _columns(X.boundary_matrix(k + 1), X.n(k + 1)):
        span.add(col)
    basis = []
    for z in linalg.nullspace(_boundary_rows(X, k), n):
        if span.add(z):
            basis.append(HomologyClass(X, X.from_vector(k, z)))
    return basis


def is_homologous(
    X: SimplicialComplex, z1: Chain, z2: Chain
) -> tuple[bool, Chain | None]:
    """Decide whether z1 - z2 bounds; on success also return b with ∂b = z1 - z2."""
    for z in (z1, z2):
        if not is_cycle(z):
            raise NotACycle(f"{z!r} is not a cycle")
    if z1.degree != z2.degree:
        raise DegreeError("cycles of different degree")
    k = z1.degree
    diff = z1 - z2
    if diff.is_zero():
        return True, Chain(k + 1, {})
    if X.n(k + 1) == 0:
        return False, None
    x = linalg.solve(X.boundary_matrix(k + 1), X.to_vector(diff), X.n(k + 1))
    if x is None:
        return False, None
    return True, X.from_vector(k + 1, x)


def fundamental_cycle(X: SimplicialComplex) -> Chain:
    """Coherent ±1 orientation of the top simplices of a closed pseudomanifold.

    Within each strongly connected piece the smallest facet gets +1.
    """
    d = X.dim
    if d == 0:
        raise NotClosed("a 0-dimensional complex has no ridges")
    top = X[d]
    cofaces: dict[Simplex, list[tuple[Simplex, int]]] = {r: [] for r in X[d - 1]}
    for s in top:
        for sign, r in faces(s):
            cofaces[r].append((s, sign))
    for r, cf in cofaces.items():
        if len(cf) != 2:
            raise NotClosed(f"ridge {list(r)} lies in {len(cf)} facets")
    if set(X.facets) != set(top):
        raise NotClosed("complex is not pure")

    orientation: dict[Simplex, int] = {}
    for start in top:
        if start in orientation:
            continue
        orientation[start] = 1
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for sign, r in faces(s):
                (a, sa), (b, sb) = cofaces[r]
                other, so = (b, sb) if a == s else (a, sa)
                # the two induced orientations of r must cancel
                want = -orientation[s] * sign * so
                if other in orientation:
                    if orientation[other] != want:
                        raise NotOrientable(f"sign conflict across ridge {list(r)}")
                else:
                    orientation[other] = want
                    queue.append(other)
    return Chain(d, orientation)


@dataclass(frozen=True)
class SimplicialMap:
    """Vertex map between complexes that sends simplices to (possibly degenerate) simplices."""

    source: SimplicialComplex
    target: SimplicialComplex
    vertex_map: Mapping[int, int]

    def __post_init__(self):
        for row in self.source.simplices:
            for s in row:
                image = tuple(sorted({self.vertex_map[v] for v in s}))
                if image not in self.target:
                    raise ValueError(f"image of {list(s)} is not a simplex of the target")

    def image(self, simplex: Simplex) -> tuple[int, Simplex]:
        """``(sign, canonical image)``; sign 0 for a degenerate image."""
        return orient([self.vertex_map[v] for v in simplex])

    def push_chain(self, c: Chain) -> Chain:
        return Chain.from_oriented(
            c.degree, [([self.vertex_map[v] for v in s], a) for s, a in c._items()]
        )


@dataclass(frozen=True)
class Subdivision:
    """Barycentric subdivision together with its chain map.

    Vertex ``i`` of the subdivided complex is the barycenter of the i-th
    simplex of the original complex in degree-then-lexicographic order, so a
    flag of faces listed by increasing dimension is already canonically ordered.
    """

    original: SimplicialComplex
    complex: SimplicialComplex
    barycenter: Mapping[Simplex, int]

    def chain_map(self, c: Chain) -> Chain:
        acc: dict[Simplex, Fraction] = {}
        for s, a in c._items():
            for t, sign in self._sd_simplex(s).items():
                acc[t] = acc.get(t, Fraction(0)) + sign * a
        return Chain(c.degree, acc)

    __call__ = chain_map

    def _sd_simplex(self, s: Simplex) -> dict[Simplex, int]:
        # Sd(s) = b_s * Sd(∂s); here written out as the signed sum over vertex orderings
        out: dict[Simplex, int] = {}
        for perm in permutations(range(len(s))):
            # flag: s ⊃ s minus v_perm[0] ⊃ ... ; barycenters listed from the top down
            flag = []
            remaining = list(s)
            for p in perm:
                flag.append(self.barycenter[tuple(remaining)])
                remaining.remove(s[p])
            sign, canon = orient(flag)
            out[canon] = out.get(canon, 0) + sign * permutation_sign(perm)
        return out


def subdivide(X: SimplicialComplex) -> Subdivision:
    barycenter: dict[Simplex, int] = {}
    for row in X.simplices:
        for s in row:
            barycenter[s] = len(barycenter)
    flags = []
    for top in X.facets:
        for perm in permutations(top):
            flags.append([barycenter[tuple(sorted(perm[: i + 1]))] for i in range(len(perm))])
    return Subdivision(X, build_complex(flags), barycenter)
