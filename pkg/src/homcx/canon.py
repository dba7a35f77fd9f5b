"""Canonical ordering and rendering of vertex labels.

Vertex labels are opaque hashable tokens: ints, strings, frozensets of
labels (subdivision vertices are labelled by the simplex they subdivide),
or any object exposing a ``canonical_key()`` method.  Every enumeration
the package emits is sorted with :func:`label_key`, so output is stable
across runs regardless of hash randomization.
"""

from __future__ import annotations

from typing import Any, Iterable

__all__ = ["label_key", "simplex_key", "sorted_labels", "render_label"]


def label_key(label: Any) -> tuple:
    """Total order on labels.  Ints sort numerically, then strings, then
    frozensets (recursively by sorted member keys), then anything with a
    canonical_key method, then everything else by repr."""
    if isinstance(label, bool):
        return (4, repr(label))
    if isinstance(label, int):
        return (0, label)
    if isinstance(label, str):
        return (1, label)
    if isinstance(label, frozenset):
        return (2, tuple(sorted(label_key(m) for m in label)))
    key = getattr(label, "canonical_key", None)
    if key is not None:
        return (3, key())
    return (4, repr(label))


def simplex_key(simplex: frozenset) -> tuple:
    """Sort key for simplices: dimension first, then member keys."""
    return (len(simplex), tuple(sorted(label_key(v) for v in simplex)))


def sorted_labels(labels: Iterable[Any]) -> list:
    return sorted(labels, key=label_key)


def render_label(label: Any) -> str:
    """Canonical string form of a label, e.g. frozenset({1, 2}) -> "{1,2}"."""
    if isinstance(label, frozenset):
        return "{" + ",".join(render_label(v) for v in sorted_labels(label)) + "}"
    return str(label)
