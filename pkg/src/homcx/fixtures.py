"""The built-in test-bed complexes.

Small enough to enumerate everything, chosen to cover contractible
spaces, spheres, a wedge, and a torsion case (the 6-vertex projective
plane).
"""

from __future__ import annotations

from .graphs import Graph
from .simplicial import SimplicialComplex

__all__ = ["CORE_FIXTURE_NAMES", "core_fixture", "looped_edge_graph"]

# 10 facets of the antipodal-icosahedron triangulation; every edge lies
# in two of them and every vertex link is a 5-cycle.
_RP2_FACETS = [
    [1, 2, 3],
    [1, 2, 6],
    [1, 3, 4],
    [1, 4, 5],
    [1, 5, 6],
    [2, 3, 5],
    [2, 4, 5],
    [2, 4, 6],
    [3, 4, 6],
    [3, 5, 6],
]

_BUILDERS = {
    "point": lambda: SimplicialComplex.from_facets([[1]]),
    "delta1": lambda: SimplicialComplex.from_facets([[1, 2]]),
    "path2": lambda: SimplicialComplex.from_facets([[1, 2], [2, 3]]),
    "boundary_delta2": lambda: SimplicialComplex.from_facets(
        [[1, 2], [1, 3], [2, 3]]
    ),
    "delta2": lambda: SimplicialComplex.from_facets([[1, 2, 3]]),
    "boundary_delta3": lambda: SimplicialComplex.from_facets(
        [[1, 2, 3], [1, 2, 4], [1, 3, 4], [2, 3, 4]]
    ),
    "wedge_triangles": lambda: SimplicialComplex.from_facets(
        [[1, 2], [1, 3], [2, 3], [3, 4], [3, 5], [4, 5]]
    ),
    "rp2": lambda: SimplicialComplex.from_facets(_RP2_FACETS),
}

CORE_FIXTURE_NAMES = tuple(_BUILDERS)


def core_fixture(name: str) -> SimplicialComplex:
    try:
        return _BUILDERS[name]()
    except KeyError:
        raise ValueError(
            f"unknown fixture {name!r}; choose from {', '.join(CORE_FIXTURE_NAMES)}"
        ) from None


def looped_edge_graph() -> Graph:
    """Two vertices a, b with the edge (a, b) and a loop at b."""
    return Graph(["a", "b"], [["a", "b"], ["b", "b"]])
