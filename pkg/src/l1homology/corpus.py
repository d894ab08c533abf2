"""Bundled example instances, loaded from the package's ``data`` directory."""
from __future__ import annotations

import json
from importlib import resources

from .complex import SimplicialComplex
from .covering import CoveringMap
from .serialize import complex_from_json, cover_from_json

COMPLEXES = ("boundary_tetrahedron", "triangle", "torus7", "genus2", "rp2_6")
COVERS = ("circle_double_cover",)


def path(name: str):
    return resources.files(__package__) / "data" / f"{name}.json"


def raw(name: str) -> dict:
    return json.loads(path(name).read_text())


def load_complex(name: str) -> SimplicialComplex:
    return complex_from_json(raw(name))


def load_cover(name: str) -> CoveringMap:
    return cover_from_json(raw(name))
