"""Simplicial collapses with replayable certificates.

A collapsible pair is a facet together with a free proper face (a face
contained in no other facet); collapsing removes the whole interval
between them.  The filtration built here interpolates between the
neighborhood complex of the containment graph of X and the union of the
closed vertex stars, one simplex of X at a time, and the verifier turns
each stage into an explicit certificate of elementary collapses.

Intermediate complexes are handled as explicit simplex sets, so every
certificate can be replayed by set arithmetic alone.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass
from itertools import combinations
from typing import Any, Iterable

from .canon import label_key, render_label, simplex_key, sorted_labels
from .graphs import Graph, build_g_kx
from .simplicial import SimplicialComplex, maximal_sets

__all__ = [
    "CollapsiblePair",
    "CollapseStep",
    "CollapseCertificate",
    "Filtration",
    "StalledCollapse",
    "free_face_pairs",
    "perform_collapse",
    "greedy_collapse",
    "kl_filtration",
    "verify_kl_collapse_sequence",
    "replay_certificate",
    "certificate_to_dict",
]


class StalledCollapse(Exception):
    """A prescribed collapse scheme could not reach its target."""

    def __init__(self, message: str, stage: int | None = None,
                 stuck: SimplicialComplex | None = None):
        super().__init__(message)
        self.stage = stage
        self.stuck = stuck


@dataclass(frozen=True)
class CollapsiblePair:
    sigma: frozenset  # the facet
    tau: frozenset  # its free face


@dataclass(frozen=True)
class CollapseStep:
    pair: CollapsiblePair
    removed: tuple  # the closed interval [tau, sigma], canonical order


@dataclass(frozen=True)
class CollapseCertificate:
    """A sequence of collapses, grouped into stages, from start to end."""

    start: SimplicialComplex
    end: SimplicialComplex
    stages: tuple  # tuple of tuples of CollapseStep

    @property
    def steps(self) -> tuple:
        return tuple(s for stage in self.stages for s in stage)

    def removed_in_stage(self, i: int) -> frozenset:
        return frozenset(s for step in self.stages[i] for s in step.removed)


@dataclass(frozen=True)
class Filtration:
    """Nested complexes K_1 .. K_{p-q+1} on the simplices of X.

    ``order`` lists the vertices of the containment graph by dimension
    descending; the last q entries are the vertices of X.  K_l is
    generated by the neighborhoods of the tail of the order starting at
    position l.
    """

    order: tuple
    p: int
    q: int
    complexes: tuple
    graph: Graph


def _interval(tau: frozenset, sigma: frozenset) -> tuple:
    ext = sorted_labels(sigma - tau)
    faces = []
    for r in range(len(ext) + 1):
        for extra in combinations(ext, r):
            faces.append(tau | frozenset(extra))
    return tuple(sorted(faces, key=simplex_key))


def _free_facet(S: set | frozenset, tau: frozenset, vertices: Iterable[Any]):
    """The unique facet of S properly containing tau, or None.

    In a downward-closed family tau is a free face exactly when the set
    of one-vertex extensions of tau inside S assembles to a single
    simplex of S; that simplex is then the facet.
    """
    ext = [v for v in vertices if v not in tau and (tau | {v}) in S]
    if not ext:
        return None
    sigma = tau | frozenset(ext)
    return sigma if sigma in S else None


def free_face_pairs(X: SimplicialComplex) -> list[CollapsiblePair]:
    """All collapsible pairs of X, sorted by facet then free face."""
    S = X.simplex_set()
    V = X.vertices
    pairs = []
    for tau in X.simplices():
        sigma = _free_facet(S, tau, V)
        if sigma is not None:
            pairs.append(CollapsiblePair(sigma=sigma, tau=tau))
    return sorted(pairs, key=lambda p: (simplex_key(p.sigma), simplex_key(p.tau)))


def perform_collapse(X: SimplicialComplex, pair: CollapsiblePair) -> SimplicialComplex:
    """Remove the interval of a collapsible pair; rejects invalid pairs."""
    S = X.simplex_set()
    sigma = _free_facet(S, pair.tau, X.vertices)
    if sigma is None or sigma != pair.sigma:
        raise ValueError(
            f"({render_label(pair.sigma)}, {render_label(pair.tau)}) "
            "is not a collapsible pair here"
        )
    removed = set(_interval(pair.tau, pair.sigma))
    return SimplicialComplex.from_simplices(S - removed)


def greedy_collapse(X: SimplicialComplex) -> tuple[SimplicialComplex, CollapseCertificate]:
    """Collapse free faces until none remain.

    Vertices are relabelled to integers and each simplex carries a live
    cofacet count plus the vertex sum of its cofacets, so the unique
    cofacet of a count-one face is recovered in constant time.  A heap
    pops the canonically first face whose lone cofacet is maximal; stale
    entries are revalidated on pop.  Running dry is conclusive: a face
    whose only containing facet sits several dimensions up always yields
    a codimension-one free pair against that facet, so no free face of
    any kind survives.
    """
    fwd = {lab: i for i, lab in enumerate(X.vertices)}
    back = X.vertices
    S = {frozenset(fwd[v] for v in s) for s in X.simplex_set()}
    cof_count = {s: 0 for s in S}
    cof_vsum = {s: 0 for s in S}
    for s in S:
        for v in s:
            f = s - {v}
            if f:
                cof_count[f] += 1
                cof_vsum[f] += v

    def hkey(f: frozenset) -> tuple:
        return (len(f), tuple(sorted(f)))

    heap = [(hkey(f), f) for f in S if cof_count[f] == 1]
    heapq.heapify(heap)
    steps: list[CollapseStep] = []

    def drop(gamma: frozenset) -> None:
        S.remove(gamma)
        for v in gamma:
            f = gamma - {v}
            if not f or f not in S:
                continue
            cof_count[f] -= 1
            cof_vsum[f] -= v
            if cof_count[f] == 1:
                heapq.heappush(heap, (hkey(f), f))
            elif cof_count[f] == 0:
                # f just became maximal; its count-one faces may be free now
                for w in f:
                    g = f - {w}
                    if g and g in S and cof_count[g] == 1:
                        heapq.heappush(heap, (hkey(g), g))

    while heap:
        _, tau = heapq.heappop(heap)
        if tau not in S or cof_count[tau] != 1:
            continue
        sigma = tau | {cof_vsum[tau]}
        if cof_count.get(sigma) != 0 or sigma not in S:
            continue
        drop(sigma)
        drop(tau)
        sigma_lab = frozenset(back[v] for v in sigma)
        tau_lab = frozenset(back[v] for v in tau)
        steps.append(
            CollapseStep(
                pair=CollapsiblePair(sigma=sigma_lab, tau=tau_lab),
                removed=_interval(tau_lab, sigma_lab),
            )
        )
    remaining = frozenset(frozenset(back[v] for v in s) for s in S)
    result = SimplicialComplex.from_simplices(remaining) if S else SimplicialComplex([])
    cert = CollapseCertificate(start=X, end=result, stages=(tuple(steps),))
    return result, cert


def kl_filtration(X: SimplicialComplex) -> Filtration:
    """The nested neighborhood-generated complexes of the containment
    graph of X, indexed from all simplices down to the vertex stars."""
    G = build_g_kx(X, 1)
    order = tuple(
        sorted(
            G.vertices,
            key=lambda s: (-len(s), tuple(sorted(label_key(v) for v in s))),
        )
    )
    p = len(order)
    q = sum(1 for s in order if len(s) == 1)
    if p == q:
        raise ValueError("filtration undefined: no positive-dimensional simplex")
    if any(len(s) != 1 for s in order[p - q :]):
        raise AssertionError("vertex tail out of place in filtration order")
    complexes = []
    for l in range(1, p - q + 2):
        gens = [G.neighbors(order[i]) for i in range(l - 1, p)]
        complexes.append(SimplicialComplex(maximal_sets(gens)))
    return Filtration(order=order, p=p, q=q, complexes=tuple(complexes), graph=G)


def verify_kl_collapse_sequence(F: Filtration) -> CollapseCertificate:
    """Collapse each K_l onto K_{l+1} by removing the simplices through
    sigma_l, and certify every stage.

    Stage l first collapses (N(sigma_l), N(sigma_l) minus sigma_l), then
    repeatedly collapses (sigma, sigma minus sigma_l) for the canonically
    first sigma whose reduced face is free, restarting after each
    removal.  Only simplices outside K_{l+1} are eligible: freeness alone
    does not stop the scan from eating into the target complex, which
    also has pairs of this shape.  Raises StalledCollapse, carrying the
    stuck complex, if a stage cannot reach its target.
    """
    V = F.graph.vertices
    stages: list[tuple] = []
    for l in range(1, F.p - F.q + 1):
        sig = F.order[l - 1]
        S = set(F.complexes[l - 1].simplex_set())
        target = set(F.complexes[l].simplex_set())
        steps: list[CollapseStep] = []

        def apply(sigma: frozenset, tau: frozenset):
            removed = _interval(tau, sigma)
            if not target.isdisjoint(removed):
                raise StalledCollapse(
                    f"stage {l}: a collapse would remove part of the next complex",
                    stage=l,
                    stuck=SimplicialComplex.from_simplices(frozenset(S)),
                )
            S.difference_update(removed)
            steps.append(
                CollapseStep(pair=CollapsiblePair(sigma=sigma, tau=tau), removed=removed)
            )

        first_sigma = frozenset(F.graph.neighbors(sig))
        first_tau = first_sigma - {sig}
        if not first_tau or _free_facet(S, first_tau, V) != first_sigma:
            raise StalledCollapse(
                f"stage {l}: the neighborhood of {render_label(sig)} has no free "
                "reduced face",
                stage=l,
                stuck=SimplicialComplex.from_simplices(frozenset(S)),
            )
        apply(first_sigma, first_tau)
        candidates = sorted((s for s in S if sig in s and s not in target), key=simplex_key)
        progressed = True
        while progressed:
            progressed = False
            for sigma in candidates:
                if sigma not in S:
                    continue
                tau = sigma - {sig}
                if not tau or tau in target:
                    continue
                if _free_facet(S, tau, V) == sigma:
                    apply(sigma, tau)
                    progressed = True
                    break
        if S != target:
            raise StalledCollapse(
                f"stage {l}: collapse stalled before reaching the next complex",
                stage=l,
                stuck=SimplicialComplex.from_simplices(frozenset(S)),
            )
        stages.append(tuple(steps))
    return CollapseCertificate(
        start=F.complexes[0], end=F.complexes[-1], stages=tuple(stages)
    )


def replay_certificate(cert: CollapseCertificate) -> bool:
    """Re-run a certificate from its start complex by set arithmetic,
    revalidating every pair.  Returns True or raises ValueError."""
    S = set(cert.start.simplex_set())
    V = cert.start.vertices
    for n, step in enumerate(cert.steps):
        sigma = _free_facet(S, step.pair.tau, V)
        if sigma is None or sigma != step.pair.sigma:
            raise ValueError(f"step {n}: pair is not collapsible at replay time")
        removed = _interval(step.pair.tau, step.pair.sigma)
        if removed != step.removed:
            raise ValueError(f"step {n}: removed interval does not match")
        S.difference_update(removed)
    if S != set(cert.end.simplex_set()):
        raise ValueError("replay did not reach the certified end complex")
    return True


def certificate_to_dict(cert: CollapseCertificate) -> dict:
    def render_simplex(s: frozenset) -> list[str]:
        return [render_label(v) for v in sorted_labels(s)]

    return {
        "start": {"facets": [render_simplex(f) for f in sorted(cert.start.facets, key=simplex_key)]},
        "end": {"facets": [render_simplex(f) for f in sorted(cert.end.facets, key=simplex_key)]},
        "stages": [
            [
                {
                    "facet": render_simplex(step.pair.sigma),
                    "free_face": render_simplex(step.pair.tau),
                    "removed": [render_simplex(r) for r in step.removed],
                }
                for step in stage
            ]
            for stage in cert.stages
        ],
    }
