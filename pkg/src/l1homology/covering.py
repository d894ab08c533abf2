"""Simplicial covering maps, unique lifting and a canonical section.

A covering is given explicitly by a total complex, a base complex and a
vertex projection. The projection must map the closed star of every total
vertex bijectively onto the closed star of its image; this is what makes
lifts through a prescribed vertex unique.
"""
from __future__ import annotations

from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .complex import Chain, Simplex, SimplicialComplex, SimplicialMap, orient
from .errors import BadBasepoint, NotACovering


@dataclass(frozen=True)
class CoveringMap:
    total: SimplicialComplex
    base: SimplicialComplex
    projection: Mapping[int, int]

    def project(self, simplex: Simplex) -> Simplex:
        return tuple(sorted(self.projection[v] for v in simplex))

    def fiber(self, base_vertex: int) -> list[int]:
        return sorted(v for v in self.total.vertices if self.projection[v] == base_vertex)

    def as_map(self) -> SimplicialMap:
        return SimplicialMap(self.total, self.base, self.projection)


@dataclass(frozen=True)
class Section:
    """Choice of one total simplex over every base simplex."""

    assignment: Mapping[Simplex, Simplex]

    def __call__(self, simplex: Simplex) -> Simplex:
        return self.assignment[tuple(simplex)]

    def push_chain(self, cover: CoveringMap, c: Chain) -> Chain:
        """s_*(c); the sign makes the vertexwise projection land on the canonical order."""
        out: dict[Simplex, Fraction] = {}
        for s, a in c.terms.items():
            lift = self(s)
            sign, _ = orient([cover.projection[v] for v in lift])
            out[lift] = out.get(lift, Fraction(0)) + sign * a
        return Chain(c.degree, out)


def _star(X: SimplicialComplex, v: int) -> list[Simplex]:
    return [s for row in X.simplices for s in row if v in s]


def _components(X: SimplicialComplex) -> list[set[int]]:
    parent = {v: v for v in X.vertices}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for a, b in X[1]:
        parent[find(a)] = find(b)
    groups: dict[int, set[int]] = defaultdict(set)
    for v in X.vertices:
        groups[find(v)].add(v)
    return sorted(groups.values(), key=min)


def validate_cover(
    total: SimplicialComplex, base: SimplicialComplex, vertex_projection: Mapping[int, int]
) -> CoveringMap:
    """Check the covering axioms and wrap the data, or raise NotACovering."""
    proj = dict(vertex_projection)
    missing = [v for v in total.vertices if v not in proj]
    if missing:
        raise NotACovering(f"projection undefined on total vertices {missing}")
    extra = sorted(set(proj) - set(total.vertices))
    if extra:
        raise NotACovering(f"projection given for unknown vertices {extra}")
    if not set(proj.values()) <= set(base.vertices):
        raise NotACovering("projection leaves the base vertex set")
    for row in total.simplices:
        for s in row:
            image = [proj[v] for v in s]
            if len(set(image)) != len(image):
                raise NotACovering(f"simplex {list(s)} collapses under the projection")
            if tuple(sorted(image)) not in base:
                raise NotACovering(f"image of {list(s)} is not a base simplex")
    for v in total.vertices:
        star = _star(total, v)
        images = [tuple(sorted(proj[w] for w in s)) for s in star]
        if len(set(images)) != len(images):
            raise NotACovering(f"projection is not injective on the star of vertex {v}")
        if set(images) != set(_star(base, proj[v])):
            raise NotACovering(f"star of vertex {v} does not cover the star of {proj[v]}")
    counts: dict[int, int] = defaultdict(int)
    for v in total.vertices:
        counts[proj[v]] += 1
    for comp in _components(base):
        sizes = {counts[b] for b in comp}
        if len(sizes) != 1 or 0 in sizes:
            raise NotACovering(
                f"fiber sizes {sorted((b, counts[b]) for b in comp)} not constant over component"
            )
    return CoveringMap(total, base, proj)


def lift_simplex(cover: CoveringMap, simplex: Simplex, basepoint: int) -> Simplex:
    """The unique total simplex over ``simplex`` containing ``basepoint``.

    ``basepoint`` must lie over the first vertex of ``simplex``.
    """
    simplex = tuple(simplex)
    if simplex not in cover.base:
        raise ValueError(f"{list(simplex)} is not a base simplex")
    if cover.projection.get(basepoint) != simplex[0]:
        raise BadBasepoint(f"vertex {basepoint} does not lie over {simplex[0]}")
    lifts = [s for s in _star(cover.total, basepoint) if cover.project(s) == simplex]
    assert len(lifts) == 1, f"star condition violated for {simplex} at {basepoint}"
    return lifts[0]


def build_section(cover: CoveringMap) -> Section:
    """Lift every base simplex through the smallest vertex over its first vertex."""
    fibers = {b: cover.fiber(b) for b in cover.base.vertices}
    assignment = {}
    for row in cover.base.simplices:
        for s in row:
            assignment[s] = lift_simplex(cover, s, fibers[s[0]][0])
    return Section(assignment)


def verify_section(cover: CoveringMap, section: Section) -> bool:
    """True iff every base simplex is assigned a total simplex projecting back onto it."""
    for row in cover.base.simplices:
        for s in row:
            lift = section.assignment.get(s)
            if lift is None or tuple(lift) not in cover.total:
                return False
            if cover.project(lift) != s:
                return False
    return True
