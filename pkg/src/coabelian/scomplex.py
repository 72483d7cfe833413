"""Finite simplicial complexes and their reduced homology over a field.

Homology is always augmented: the empty simplex sits in degree -1, so the
empty complex has reduced Betti number 1 in degree -1 and every nonempty
complex has 0 there.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Callable, Hashable, Iterable, Sequence

from .errors import InvalidArgumentError
from .exactfield import FieldSpec, Matrix, rank
from .graph import DEFAULT_CLIQUE_CEILING, Graph, enumerate_cliques

Simplex = tuple  # strictly increasing tuple of vertex indices


@dataclass(frozen=True)
class SimplicialComplex:
    """``simplices[d]`` is the sorted tuple of ``d``-simplices."""

    vertex_labels: tuple
    simplices: tuple[tuple[Simplex, ...], ...]

    @classmethod
    def from_simplices(cls, vertex_labels: Sequence, simplices: Iterable[Iterable[int]]) -> SimplicialComplex:
        """Smallest complex containing ``simplices`` (closed under faces)."""
        found: set[Simplex] = set()
        for s in simplices:
            s = tuple(sorted(set(s)))
            if not s or s in found:
                continue
            for k in range(1, len(s) + 1):
                found.update(combinations(s, k))
        return cls._from_set(tuple(vertex_labels), found)

    @classmethod
    def _from_set(cls, labels: tuple, found: Iterable[Simplex]) -> SimplicialComplex:
        by_dim: dict[int, list] = {}
        for s in found:
            if s:
                by_dim.setdefault(len(s) - 1, []).append(s)
        top = max(by_dim, default=-1)
        return cls(labels, tuple(tuple(sorted(by_dim.get(d, ()))) for d in range(top + 1)))

    @property
    def dimension(self) -> int:
        """Top dimension; -1 for the empty complex."""
        return len(self.simplices) - 1

    def faces(self, d: int) -> tuple[Simplex, ...]:
        if d == -1:
            return ((),)
        if 0 <= d < len(self.simplices):
            return self.simplices[d]
        return ()

    def count(self, d: int) -> int:
        return len(self.faces(d))

    @cached_property
    def _all(self) -> frozenset:
        return frozenset(s for layer in self.simplices for s in layer) | {()}

    def __contains__(self, s) -> bool:
        return tuple(s) in self._all

    @property
    def is_empty(self) -> bool:
        return not self.simplices

    def to_json(self) -> dict:
        return {"simplices": {str(d): [list(s) for s in layer] for d, layer in enumerate(self.simplices)}}

    def __str__(self) -> str:
        return json.dumps(self.to_json())


def flag_complex(g: Graph, dim_cap: int | None = None, ceiling: int = DEFAULT_CLIQUE_CEILING,
                 within: Iterable[int] | None = None) -> SimplicialComplex:
    """Clique complex of ``g`` truncated at dimension ``dim_cap``.

    With ``within`` the complex is that of the induced subgraph, but vertex
    indices still refer to ``g``.
    """
    cap = None if dim_cap is None else dim_cap + 1
    cliques = enumerate_cliques(g, cap, ceiling=ceiling, within=within)
    return SimplicialComplex._from_set(g.vertices, cliques)


def order_complex(elements: Sequence[Hashable], less_than: Callable[[object, object], bool],
                  dim_cap: int | None = None, ceiling: int = DEFAULT_CLIQUE_CEILING) -> SimplicialComplex:
    """Complex of chains of a finite strict partial order.

    Simplex vertices are indices into ``elements``.
    """
    n = len(elements)
    rel = [[bool(less_than(a, b)) for b in elements] for a in elements]
    for i in range(n):
        if rel[i][i]:
            raise InvalidArgumentError(f"relation is not irreflexive at {elements[i]!r}")
        for j in range(n):
            if rel[i][j] and rel[j][i]:
                raise InvalidArgumentError(f"relation is not antisymmetric on {elements[i]!r}, {elements[j]!r}")
            if rel[i][j]:
                for k in range(n):
                    if rel[j][k] and not rel[i][k]:
                        raise InvalidArgumentError("relation is not transitive")
    # chains are exactly the cliques of the comparability graph
    comparability = Graph.from_edges(
        [str(i) for i in range(n)],
        [(i, j) for i in range(n) for j in range(i + 1, n) if rel[i][j] or rel[j][i]],
    )
    c = flag_complex(comparability, dim_cap, ceiling=ceiling)
    return SimplicialComplex(tuple(elements), c.simplices)


def link(c: SimplicialComplex, s: Iterable[int]) -> SimplicialComplex:
    """Simplices disjoint from ``s`` whose union with ``s`` is a simplex of ``c``."""
    s = tuple(sorted(s))
    if s not in c:
        raise InvalidArgumentError(f"{list(s)} is not a simplex of the complex")
    if not s:
        return c
    ss = set(s)
    found = []
    for layer in c.simplices[len(s):]:
        for t in layer:
            if ss.issubset(t):
                found.append(tuple(v for v in t if v not in ss))
    return SimplicialComplex._from_set(c.vertex_labels, found)


def boundary_matrix(c: SimplicialComplex, d: int, field: FieldSpec) -> Matrix:
    """Augmented boundary from ``d``-chains to ``(d-1)``-chains.

    Deleting the r-th smallest vertex (r counted from 1) contributes
    ``(-1)**(r-1)``.  For ``d = 0`` this is the augmentation onto the empty
    simplex; for ``d = -1`` the zero map out of the empty simplex.
    """
    if d < -1:
        raise InvalidArgumentError("boundary degree must be at least -1")
    cols = c.faces(d)
    if d == -1:
        return Matrix.zeros(0, 1, field)
    rows = c.faces(d - 1)
    index = {t: i for i, t in enumerate(rows)}
    entries = [[0] * len(cols) for _ in rows]
    for j, s in enumerate(cols):
        for r in range(len(s)):
            entries[index[s[:r] + s[r + 1:]]][j] = -1 if r % 2 else 1
    return Matrix.from_rows(entries, field, len(cols))


def reduced_betti(c: SimplicialComplex, j: int, field: FieldSpec) -> int:
    if j < -1:
        raise InvalidArgumentError("reduced homology starts in degree -1")
    return c.count(j) - rank(boundary_matrix(c, j, field)) - rank(boundary_matrix(c, j + 1, field))


def reduced_betti_numbers(c: SimplicialComplex, field: FieldSpec, top: int | None = None) -> dict[int, int]:
    """Reduced Betti numbers in degrees ``-1..top`` (default: the complex's dimension).

    Each boundary rank is computed once and shared between adjacent degrees.
    """
    if top is None:
        top = c.dimension
    ranks = {d: rank(boundary_matrix(c, d, field)) for d in range(0, top + 2)}
    ranks[-1] = 0
    return {j: c.count(j) - ranks[j] - ranks[j + 1] for j in range(-1, top + 1)}


def first_nonacyclic_degree(c: SimplicialComplex, m: int, field: FieldSpec) -> tuple[int, int] | None:
    """``(degree, betti)`` of the lowest degree ``<= m`` with nonzero reduced homology, else None."""
    if m < -1:
        return None
    prev = rank(boundary_matrix(c, 0, field))
    if 1 - prev:
        return -1, 1 - prev
    for j in range(0, m + 1):
        nxt = rank(boundary_matrix(c, j + 1, field))
        b = c.count(j) - prev - nxt
        if b:
            return j, b
        prev = nxt
    return None


def is_acyclic_up_to(c: SimplicialComplex, m: int, field: FieldSpec) -> bool:
    """True iff reduced homology vanishes in every degree ``-1..m``; vacuous for ``m < -1``."""
    return first_nonacyclic_degree(c, m, field) is None
