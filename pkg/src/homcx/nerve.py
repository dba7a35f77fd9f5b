"""Covers by subcomplexes and their nerves.

The star cover of a complex X covers the union of closed vertex stars
inside the containment graph of X: one full simplex per vertex of X,
spanned by everything comparable with that vertex.  Its nerve reproduces
X itself, label for label, and every intersection of pieces is again a
full simplex, which is exactly the hypothesis a nerve argument needs.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Any

from .canon import label_key, render_label, simplex_key, sorted_labels
from .graphs import build_g_kx
from .simplicial import SimplicialComplex

__all__ = [
    "Cover",
    "NerveHypothesesReport",
    "star_cover",
    "nerve_of_cover",
    "cover_union",
    "verify_nerve_theorem_hypotheses",
    "cover_to_dict",
]


@dataclass(frozen=True)
class Cover:
    """Indexed family of subcomplexes."""

    index: tuple
    pieces: dict

    def piece(self, i: Any) -> SimplicialComplex:
        return self.pieces[i]


@dataclass(frozen=True)
class NerveHypothesesReport:
    passed: bool
    intersections_checked: int
    failures: tuple


def star_cover(X: SimplicialComplex) -> Cover:
    """One piece per vertex x of X: the full simplex on the neighborhood
    of {x} in the containment graph of X."""
    if X.dim < 0:
        raise ValueError("star cover of the empty complex is undefined")
    G = build_g_kx(X, 1)
    pieces = {}
    for x in X.vertices:
        nb = G.neighbors(frozenset([x]))
        pieces[x] = SimplicialComplex([nb])
    return Cover(index=tuple(X.vertices), pieces=pieces)


def _piece_sets(cover: Cover) -> dict:
    return {i: set(cover.pieces[i].simplex_set()) for i in cover.index}


def nerve_of_cover(cover: Cover) -> SimplicialComplex:
    """Nerve: a finite set of indices spans a simplex exactly when the
    corresponding pieces share at least one simplex."""
    sets = _piece_sets(cover)
    order = sorted(cover.index, key=label_key)
    simplices: list[frozenset] = []

    def grow(chosen: list, common: set, rest: list):
        simplices.append(frozenset(chosen))
        for n, i in enumerate(rest):
            meet = common & sets[i] if chosen else sets[i]
            if meet:
                grow(chosen + [i], meet, rest[n + 1 :])

    for n, i in enumerate(order):
        if sets[i]:
            grow([i], sets[i], order[n + 1 :])
    if not simplices:
        return SimplicialComplex([])
    return SimplicialComplex.from_simplices(simplices)


def cover_union(cover: Cover) -> SimplicialComplex:
    union: set = set()
    for i in cover.index:
        union |= cover.pieces[i].simplex_set()
    return SimplicialComplex.from_simplices(union) if union else SimplicialComplex([])


def _is_full_simplex(simplices: set) -> bool:
    top = max(simplices, key=len)
    if not all(s <= top for s in simplices):
        return False
    return len(simplices) == 2 ** len(top) - 1


def verify_nerve_theorem_hypotheses(cover: Cover) -> NerveHypothesesReport:
    """Check that every nonempty intersection of pieces is a full simplex
    (in particular nonempty intersections are contractible, so the nerve
    has the same homotopy type as the union)."""
    sets = _piece_sets(cover)
    order = sorted(cover.index, key=label_key)
    checked = 0
    failures: list[tuple] = []
    stack = [((i,), sets[i]) for i in reversed(order) if sets[i]]
    while stack:
        chosen, common = stack.pop()
        checked += 1
        if not _is_full_simplex(common):
            failures.append(chosen)
        start = order.index(chosen[-1]) + 1
        for i in order[start:]:
            meet = common & sets[i]
            if meet:
                stack.append((chosen + (i,), meet))
    return NerveHypothesesReport(
        passed=not failures,
        intersections_checked=checked,
        failures=tuple(failures),
    )


def cover_to_dict(cover: Cover) -> dict:
    return {
        render_label(i): {
            "facets": [
                [render_label(v) for v in sorted_labels(f)]
                for f in sorted(cover.pieces[i].facets, key=simplex_key)
            ]
        }
        for i in cover.index
    }
