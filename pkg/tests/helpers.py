"""Independent brute-force oracles and shared fixtures for the test suite."""

from fractions import Fraction
from itertools import combinations, permutations, product

from coabelian.character import Character
from coabelian.exactfield import FieldSpec
from coabelian.graph import Graph

Q = FieldSpec()


def det(rows, field):
    """Leibniz determinant; only for tiny square matrices."""
    n = len(rows)
    total = field.zero
    for perm in permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = field.one
        for i, j in enumerate(perm):
            term = field.mul(term, rows[i][j])
        total = field.sub(total, term) if inversions % 2 else field.add(total, term)
    return total


def rank_by_minors(rows, field):
    """Largest size of a nonzero minor."""
    if not rows or not rows[0]:
        return 0
    m, n = len(rows), len(rows[0])
    for k in range(min(m, n), 0, -1):
        for ri in combinations(range(m), k):
            for ci in combinations(range(n), k):
                if det([[rows[i][j] for j in ci] for i in ri], field) != 0:
                    return k
    return 0


def rank_by_span(rows, p):
    """Rank over GF(p) from the size of the row space (p**rank vectors)."""
    span = {tuple([0] * len(rows[0]))} if rows else {()}
    for r in rows:
        span = {tuple((a + c * b) % p for a, b in zip(v, r)) for v in span for c in range(p)}
    size, k = len(span), 0
    while size > 1:
        size //= p
        k += 1
    return k


def cliques_by_subsets(g: Graph, cap: int):
    out = []
    for k in range(cap + 1):
        for s in combinations(range(g.order), k):
            if all(g.adjacent(a, b) for a, b in combinations(s, 2)):
                out.append(s)
    return sorted(out)


def supports_by_enumeration(rows, p):
    """All supports of nonzero combinations of ``rows`` over GF(p), by brute force."""
    out = set()
    for coeffs in product(range(p), repeat=len(rows)):
        if any(coeffs):
            vec = [sum(c * int(r[j]) for c, r in zip(coeffs, rows)) % p for j in range(len(rows[0]))]
            if any(vec):
                out.add(frozenset(j for j, a in enumerate(vec) if a))
    return out


def graph(names, edges):
    names = [str(v) for v in names]
    return Graph.from_edges(names, [(names.index(str(a)), names.index(str(b))) for a, b in edges])


def char(values, field=Q):
    return Character.of([Fraction(v) if isinstance(v, str) else v for v in values], field)


C4 = graph("1234", [(1, 2), (2, 3), (3, 4), (4, 1)])
TRIANGLE = graph("123", [(1, 2), (2, 3), (1, 3)])
PATH3 = graph("123", [(1, 2), (2, 3)])
EDGE = graph("12", [(1, 2)])
TWO_POINTS = graph("12", [])
# living path 1-3-2 plus dead vertex 4 joined to 1 and 2
DISCRIMINATOR = graph("1234", [(1, 3), (2, 3), (1, 4), (2, 4)])

RP2_FACETS = [(1, 2, 4), (1, 2, 6), (1, 3, 5), (1, 3, 6), (1, 4, 5),
              (2, 3, 4), (2, 3, 5), (2, 5, 6), (3, 4, 6), (4, 5, 6)]


def rp2_subdivision() -> Graph:
    """Comparability graph of the face poset of the 6-vertex projective plane.

    Its flag complex is the barycentric subdivision (31 vertices).
    """
    faces = set()
    for f in RP2_FACETS:
        for k in (1, 2, 3):
            faces.update(combinations(f, k))
    faces = sorted(faces, key=lambda s: (len(s), s))
    names = ["".join(map(str, s)) for s in faces]
    edges = [(i, j) for i, a in enumerate(faces) for j, b in enumerate(faces)
             if i < j and set(a) < set(b)]
    return Graph.from_edges(names, edges)
