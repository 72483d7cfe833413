"""Finite simple graphs with a fixed vertex order.

Vertices are addressed by their index in ``Graph.vertices``; that order is
normative for every sign convention downstream.  Adjacency is stored as one
bitmask per vertex, which caps graphs at 64 vertices.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import InvalidArgumentError, ParseError, ResourceLimitError

MAX_VERTICES = 64
DEFAULT_CLIQUE_CEILING = 10**6

Clique = tuple  # strictly increasing tuple of vertex indices


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _mask(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class Graph:
    vertices: tuple[str, ...]
    neighbours: tuple[int, ...] = field(repr=False)

    def __post_init__(self):
        if len(self.vertices) > MAX_VERTICES:
            raise ResourceLimitError(f"graphs are limited to {MAX_VERTICES} vertices, got {len(self.vertices)}")
        if len(set(self.vertices)) != len(self.vertices):
            raise InvalidArgumentError("duplicate vertex name")
        for i, nb in enumerate(self.neighbours):
            if nb >> i & 1:
                raise InvalidArgumentError(f"loop at vertex {self.vertices[i]!r}")
            for j in _bits(nb):
                if not self.neighbours[j] >> i & 1:
                    raise InvalidArgumentError("adjacency is not symmetric")

    @classmethod
    def from_edges(cls, vertices: Sequence, edges: Iterable[tuple[int, int]]) -> Graph:
        """Build a graph from vertex names and index pairs."""
        vertices = tuple(str(v) for v in vertices)
        nb = [0] * len(vertices)
        for a, b in edges:
            if a == b:
                raise InvalidArgumentError(f"loop at vertex {vertices[a]!r}")
            nb[a] |= 1 << b
            nb[b] |= 1 << a
        return cls(vertices, tuple(nb))

    @property
    def order(self) -> int:
        return len(self.vertices)

    def index(self, name: str) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise InvalidArgumentError(f"unknown vertex {name!r}") from None

    def adjacent(self, a: int, b: int) -> bool:
        return bool(self.neighbours[a] >> b & 1)

    def edges(self) -> list[tuple[int, int]]:
        return [(a, b) for a in range(self.order) for b in _bits(self.neighbours[a]) if a < b]

    def is_clique(self, members: Iterable[int]) -> bool:
        members = list(members)
        return all(self.adjacent(a, b) for i, a in enumerate(members) for b in members[i + 1:])

    def induced(self, subset: Iterable[int]) -> Graph:
        """Full subgraph on ``subset``, vertices kept in the original order."""
        keep = sorted(set(subset))
        pos = {v: i for i, v in enumerate(keep)}
        return Graph.from_edges(
            [self.vertices[v] for v in keep],
            [(pos[a], pos[b]) for a, b in self.edges() if a in pos and b in pos],
        )

    def names(self, members: Iterable[int]) -> list[str]:
        return [self.vertices[v] for v in members]

    def to_json(self) -> dict:
        return {
            "vertices": list(self.vertices),
            "edges": [[self.vertices[a], self.vertices[b]] for a, b in self.edges()],
        }


def parse_graph(text: bytes | str) -> Graph:
    """Parse the graph JSON schema ``{"vertices": [...], "edges": [[u, v], ...]}``."""
    if isinstance(text, bytes):
        try:
            text = text.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise ParseError(f"not UTF-8: {exc}") from None
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} col {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "$")
    vertices = doc.get("vertices")
    if not isinstance(vertices, list):
        raise ParseError("missing or non-array 'vertices'", "vertices")
    index: dict[str, int] = {}
    for i, name in enumerate(vertices):
        if not isinstance(name, str):
            raise ParseError(f"vertex name must be a string, got {name!r}", f"vertices[{i}]")
        if name in index:
            raise ParseError(f"duplicate vertex name {name!r}", f"vertices[{i}]")
        index[name] = i
    if len(vertices) > MAX_VERTICES:
        raise ResourceLimitError(f"graphs are limited to {MAX_VERTICES} vertices, got {len(vertices)}")
    edges = doc.get("edges", [])
    if not isinstance(edges, list):
        raise ParseError("'edges' must be an array", "edges")
    pairs = []
    for i, e in enumerate(edges):
        loc = f"edges[{i}]"
        if not (isinstance(e, list) and len(e) == 2):
            raise ParseError("edge must be a pair of vertex names", loc)
        a, b = e
        for end in (a, b):
            if end not in index:
                raise ParseError(f"unknown vertex {end!r}", loc)
        if a == b:
            raise ParseError(f"loop edge at {a!r}", loc)
        pairs.append((index[a], index[b]))
    return Graph.from_edges(vertices, pairs)


def enumerate_cliques(
    g: Graph,
    size_cap: int | None = None,
    ceiling: int = DEFAULT_CLIQUE_CEILING,
    within: Iterable[int] | None = None,
) -> list[Clique]:
    """All cliques with at most ``size_cap`` vertices, empty clique first, in lexicographic order.

    ``within`` restricts the search to cliques inside a vertex subset.
    """
    if size_cap is None:
        size_cap = g.order
    if size_cap < 0:
        raise InvalidArgumentError("size_cap must be non-negative")
    allowed = (1 << g.order) - 1 if within is None else _mask(within)
    out: list[Clique] = [()]

    def extend(clique: tuple, candidates: int) -> None:
        if len(clique) >= size_cap:
            return
        for v in _bits(candidates):
            bigger = clique + (v,)
            out.append(bigger)
            if len(out) > ceiling:
                raise ResourceLimitError(f"more than {ceiling} cliques")
            # only higher-indexed common neighbours keep the output sorted
            extend(bigger, candidates & g.neighbours[v] & ~((2 << v) - 1))

    extend((), allowed)
    return out


def max_clique_size(g: Graph, ceiling: int = DEFAULT_CLIQUE_CEILING) -> int:
    return max(len(c) for c in enumerate_cliques(g, ceiling=ceiling))


def link_in_graph(g: Graph, w: Iterable[int]) -> frozenset[int]:
    """Vertices outside ``w`` adjacent to every member of ``w``; all vertices for ``w = ()``."""
    w = tuple(w)
    if not g.is_clique(w) or len(set(w)) != len(w):
        raise InvalidArgumentError(f"{g.names(w)} is not a clique")
    mask = (1 << g.order) - 1
    for v in w:
        mask &= g.neighbours[v]
    return frozenset(_bits(mask))


def is_connected(g: Graph, subset: Iterable[int]) -> bool:
    """True iff the induced subgraph on ``subset`` is nonempty and connected."""
    target = _mask(subset)
    if not target:
        return False
    seen = target & -target
    frontier = seen
    while frontier:
        reach = 0
        for v in _bits(frontier):
            reach |= g.neighbours[v]
        frontier = reach & target & ~seen
        seen |= frontier
    return seen == target


def is_dominant(g: Graph, subset: Iterable[int]) -> bool:
    return undominated_vertex(g, subset) is None


def undominated_vertex(g: Graph, subset: Iterable[int]) -> int | None:
    """First vertex outside ``subset`` with no neighbour inside it, if any."""
    target = _mask(subset)
    for v in range(g.order):
        if not target >> v & 1 and not g.neighbours[v] & target:
            return v
    return None
