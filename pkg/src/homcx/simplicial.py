"""Finite abstract simplicial complexes, face posets, order complexes.

A complex is stored by its facets (inclusion-maximal simplices); the
downward closure is implicit and materialized on demand.  Simplices are
frozensets of vertex labels.  The canonical simplex order used everywhere
is dimension ascending, then lexicographic on the sorted vertex keys.
"""

from __future__ import annotations

from itertools import combinations
from typing import Any, Iterable, Iterator

from .canon import render_label, simplex_key, sorted_labels

__all__ = [
    "SimplicialComplex",
    "Poset",
    "from_facets",
    "all_simplices",
    "skeleton",
    "face_poset",
    "order_complex",
    "barycentric_subdivision",
    "euler_characteristic",
    "maximal_sets",
    "complex_to_dict",
    "complex_from_dict",
    "load_complex",
    "save_complex",
]


def maximal_sets(sets: Iterable[frozenset]) -> list[frozenset]:
    """Inclusion-maximal members of a family of frozensets."""
    pool = sorted(set(sets), key=len, reverse=True)
    kept: list[frozenset] = []
    for s in pool:
        if not any(s < t for t in kept):
            kept.append(s)
    return kept


class SimplicialComplex:
    """Abstract simplicial complex over opaque hashable vertex labels."""

    def __init__(self, facets: Iterable[Iterable[Any]]):
        normalized = []
        for f in facets:
            fs = frozenset(f)
            if not fs:
                raise ValueError("empty simplex")
            normalized.append(fs)
        self._facets = frozenset(maximal_sets(normalized))
        self._vertices: tuple | None = None
        self._simplices: tuple[frozenset, ...] | None = None
        self._simplex_set: frozenset | None = None

    @classmethod
    def from_facets(cls, facets: Iterable[Iterable[Any]]) -> "SimplicialComplex":
        """Build from facet lists.  A repeated label inside one facet is an
        input error, not a convenience."""
        checked = []
        for f in facets:
            listed = list(f)
            if len(listed) != len(set(listed)):
                raise ValueError(f"duplicate vertex label in facet {listed!r}")
            checked.append(listed)
        return cls(checked)

    @classmethod
    def from_simplices(cls, simplices: Iterable[frozenset]) -> "SimplicialComplex":
        """Build from an explicit, already downward-closed simplex set.

        The closure is trusted, not re-verified; the given set seeds the
        memoized simplex cache.
        """
        simplex_set = frozenset(simplices)
        X = cls(maximal_sets(simplex_set))
        X._simplex_set = simplex_set
        return X

    @property
    def facets(self) -> frozenset:
        return self._facets

    @property
    def vertices(self) -> tuple:
        if self._vertices is None:
            seen = set()
            for f in self._facets:
                seen.update(f)
            self._vertices = tuple(sorted_labels(seen))
        return self._vertices

    @property
    def dim(self) -> int:
        if not self._facets:
            return -1
        return max(len(f) for f in self._facets) - 1

    def simplex_set(self) -> frozenset:
        if self._simplex_set is None:
            closure = set()
            for f in self._facets:
                members = sorted_labels(f)
                for r in range(1, len(members) + 1):
                    closure.update(map(frozenset, combinations(members, r)))
            self._simplex_set = frozenset(closure)
        return self._simplex_set

    def simplices(self) -> tuple[frozenset, ...]:
        """All simplices in canonical order."""
        if self._simplices is None:
            self._simplices = tuple(sorted(self.simplex_set(), key=simplex_key))
        return self._simplices

    def simplices_of_dim(self, k: int) -> list[frozenset]:
        return [s for s in self.simplices() if len(s) == k + 1]

    def f_vector(self) -> tuple[int, ...]:
        counts = [0] * (self.dim + 1)
        for s in self.simplex_set():
            counts[len(s) - 1] += 1
        return tuple(counts)

    def __contains__(self, simplex: Iterable[Any]) -> bool:
        fs = frozenset(simplex)
        if not fs:
            return False
        if self._simplex_set is not None:
            return fs in self._simplex_set
        return any(fs <= f for f in self._facets)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self._facets == other._facets

    def __hash__(self) -> int:
        return hash(self._facets)

    def __len__(self) -> int:
        return len(self.simplex_set())

    def __repr__(self) -> str:
        return (
            f"SimplicialComplex({len(self.vertices)} vertices, "
            f"{len(self._facets)} facets, dim {self.dim})"
        )


class Poset:
    """Finite poset described by its elements and upper covering relations.

    ``elements`` fixes the canonical element order; ``upper_covers`` maps
    each element to the elements covering it.
    """

    def __init__(self, elements: Iterable[Any], upper_covers: dict):
        self.elements = tuple(elements)
        index = {e: i for i, e in enumerate(self.elements)}
        if len(index) != len(self.elements):
            raise ValueError("duplicate poset element")
        self.upper_covers = {
            e: tuple(upper_covers.get(e, ())) for e in self.elements
        }
        for e, ups in self.upper_covers.items():
            for u in ups:
                if u not in index:
                    raise ValueError(f"cover target {u!r} is not an element")
        self._index = index

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self) -> Iterator:
        return iter(self.elements)

    def index(self, element: Any) -> int:
        return self._index[element]

    def cover_pairs(self) -> list[tuple[Any, Any]]:
        return [(e, u) for e in self.elements for u in self.upper_covers[e]]

    def minimal_elements(self) -> list:
        covered = set()
        for ups in self.upper_covers.values():
            covered.update(ups)
        return [e for e in self.elements if e not in covered]

    def maximal_chains(self) -> list[tuple]:
        """All maximal chains, each as a tuple bottom to top."""
        chains: list[tuple] = []
        stack = [(e,) for e in reversed(self.minimal_elements())]
        while stack:
            chain = stack.pop()
            ups = self.upper_covers[chain[-1]]
            if not ups:
                chains.append(chain)
                continue
            for u in reversed(ups):
                stack.append(chain + (u,))
        return chains


def from_facets(facets: Iterable[Iterable[Any]]) -> SimplicialComplex:
    return SimplicialComplex.from_facets(facets)


def all_simplices(X: SimplicialComplex) -> tuple[frozenset, ...]:
    return X.simplices()


def skeleton(X: SimplicialComplex, k: int) -> SimplicialComplex:
    if k < 0:
        raise ValueError("skeleton dimension must be non-negative")
    if k >= X.dim:
        return SimplicialComplex(X.facets)
    return SimplicialComplex.from_simplices(
        s for s in X.simplex_set() if len(s) <= k + 1
    )


def face_poset(X: SimplicialComplex) -> Poset:
    """Poset of the simplices of X ordered by inclusion.

    Covering relations are codimension-one containments, which in a
    downward-closed family are all the covers there are.
    """
    simplex_set = X.simplex_set()
    vertices = X.vertices
    covers: dict[frozenset, tuple] = {}
    for s in X.simplices():
        ups = [
            s | {v}
            for v in vertices
            if v not in s and (s | {v}) in simplex_set
        ]
        covers[s] = tuple(sorted(ups, key=simplex_key))
    return Poset(X.simplices(), covers)


def order_complex(P: Poset) -> SimplicialComplex:
    """Complex of chains of P.  Facets are the maximal chains."""
    if len(P) == 0:
        return SimplicialComplex([])
    return SimplicialComplex(map(frozenset, P.maximal_chains()))


def barycentric_subdivision(X: SimplicialComplex, k: int = 1) -> SimplicialComplex:
    """k-fold subdivision: vertices of each stage are the simplices of the
    previous one, simplices are inclusion chains."""
    if not isinstance(k, int) or k < 1:
        raise ValueError("subdivision depth must be a positive integer")
    Y = X
    for _ in range(k):
        Y = order_complex(face_poset(Y))
    return Y


def euler_characteristic(X: SimplicialComplex) -> int:
    return sum(
        count if d % 2 == 0 else -count for d, count in enumerate(X.f_vector())
    )


# ---------------------------------------------------------------------------
# JSON form: {"facets": [["1", "2"], ["2", "3"]]}, labels rendered to strings.

def complex_to_dict(X: SimplicialComplex) -> dict:
    facets = sorted(X.facets, key=simplex_key)
    return {
        "facets": [
            [render_label(v) for v in sorted_labels(f)] for f in facets
        ]
    }


def complex_from_dict(data: dict) -> SimplicialComplex:
    if not isinstance(data, dict) or "facets" not in data:
        raise ValueError('complex JSON needs a "facets" key')
    facets = data["facets"]
    if not isinstance(facets, list) or not all(
        isinstance(f, list) and all(isinstance(v, str) for v in f) for f in facets
    ):
        raise ValueError('"facets" must be a list of lists of string labels')
    return SimplicialComplex.from_facets(facets)


def load_complex(path: str) -> SimplicialComplex:
    import json

    with open(path) as fh:
        return complex_from_dict(json.load(fh))


def save_complex(X: SimplicialComplex, path: str) -> None:
    import json

    with open(path, "w") as fh:
        json.dump(complex_to_dict(X), fh, indent=2, sort_keys=True)
        fh.write("\n")
