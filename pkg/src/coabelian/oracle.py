"""Brute-force graded homology of a codimension one ideal N.

Tensoring the clique resolution of the trivial module with K over U(N)
gives free K[v]-modules on the cliques.  In the renormalized basis the
differential deletes living vertices only, with sign (-1)**(r-1), and
multiplies by v.  Grading c_σ in degree |σ| and v in degree 1 makes every
internal degree a finite complex, so dim H_i(N, K)_d is plain linear algebra.

The finite complex C_• on cliques (same differential without v, clique
of size i+1 in degree i) governs the stable part: for d > i,
dim H_i(N, K)_d = dim H_{i-1}(C_•).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .character import Character, dead_cliques, living_subgraph
from .decider import OracleWitness, Verdict, link_of_dead_clique
from .errors import InternalInconsistencyError, InvalidArgumentError
from .exactfield import FieldSpec, Matrix, rank
from .graph import DEFAULT_CLIQUE_CEILING, Clique, Graph, enumerate_cliques, max_clique_size
from .scomplex import reduced_betti


def _differential(sources: list[Clique], targets: list[Clique], coefficient, field: FieldSpec) -> Matrix:
    """Matrix deleting the r-th vertex with sign (-1)**(r-1) times ``coefficient(vertex)``."""
    index = {t: i for i, t in enumerate(targets)}
    entries = [[0] * len(sources) for _ in targets]
    for j, s in enumerate(sources):
        for r, v in enumerate(s):
            c = coefficient(v)
            if c == 0:
                continue
            entries[index[s[:r] + s[r + 1:]]][j] = field.neg(c) if r % 2 else c
    return Matrix.from_rows(entries, field, len(sources))


@dataclass(frozen=True)
class CliqueChainComplex:
    """``basis[m]`` lists cliques of size m (shifted degree m - 1); ``dbar[m]``: size m -> size m - 1."""

    basis: tuple[tuple[Clique, ...], ...]
    dbar: tuple[Matrix, ...]
    field: FieldSpec
    max_clique_size: int

    @property
    def top_degree(self) -> int:
        return len(self.basis) - 2

    def boundary(self, size: int) -> Matrix:
        if 1 <= size < len(self.basis):
            return self.dbar[size]
        rows = len(self.basis[size - 1]) if 0 <= size - 1 < len(self.basis) else 0
        cols = len(self.basis[size]) if 0 <= size < len(self.basis) else 0
        return Matrix.zeros(rows, cols, self.field)


def build_C(g: Graph, chi: Character, field: FieldSpec | None = None, n: int = 1,
            ceiling: int = DEFAULT_CLIQUE_CEILING) -> CliqueChainComplex:
    """C_• on cliques of size at most ``n + 1``; checks d̄∘d̄ = 0."""
    f = field or chi.field
    if f != chi.field:
        chi = Character.of(chi.values, f)
    living = living_subgraph(g, chi)
    cliques = enumerate_cliques(g, n + 1, ceiling=ceiling)
    by_size: list[list[Clique]] = [[] for _ in range(n + 2)]
    for c in cliques:
        by_size[len(c)].append(c)
    alive = lambda v: f.one if v in living else f.zero  # noqa: E731
    dbar = [Matrix.zeros(0, 1, f)]
    for size in range(1, n + 2):
        dbar.append(_differential(by_size[size], by_size[size - 1], alive, f))
    for size in range(2, n + 2):
        if not (dbar[size - 1] @ dbar[size]).is_zero():
            raise InternalInconsistencyError(f"d̄∘d̄ ≠ 0 at clique size {size}")
    return CliqueChainComplex(
        tuple(tuple(b) for b in by_size), tuple(dbar), f, max_clique_size(g, ceiling=ceiling)
    )


def homology_C(C: CliqueChainComplex, i: int) -> int:
    """dim H_i(C_•) for shifted degree i (cliques of size i + 1)."""
    if not -1 <= i <= C.top_degree - 1:
        raise InvalidArgumentError(f"degree {i} outside the built range -1..{C.top_degree - 1}")
    size = i + 1
    return len(C.basis[size]) - rank(C.boundary(size)) - rank(C.boundary(size + 1))


def decomposition_check(g: Graph, chi: Character, field: FieldSpec | None = None, i: int = 0) -> bool:
    """dim H_i(C_•) equals the sum over dead cliques w of dim H̃_{i-|w|}(lk w)."""
    f = field or chi.field
    if f != chi.field:
        chi = Character.of(chi.values, f)
    C = build_C(g, chi, f, i + 1)
    lhs = homology_C(C, i)
    rhs = sum(
        reduced_betti(link_of_dead_clique(g, chi, w), i - len(w), f)
        for w in dead_cliques(g, chi, i + 1)
    )
    return lhs == rhs


@dataclass
class GradedHomologyTable:
    """``entries[i][d] = dim H_i(N, K)_d`` for ``0 <= i <= n`` and ``i <= d <= degree_bound``."""

    entries: dict[int, dict[int, int]]
    degree_bound: int
    image_dims: dict[int, int] = field(default_factory=dict)  # rank d̄ into cliques of size i
    c_homology: dict[int, int] = field(default_factory=dict)  # shifted degree -> dim H(C_•)

    def dim(self, i: int, d: int) -> int:
        """Graded piece, zero below the homological degree."""
        if d > self.degree_bound:
            raise InvalidArgumentError(f"degree {d} beyond the computed bound {self.degree_bound}")
        return self.entries[i].get(d, 0)

    def total(self, i: int) -> int:
        return sum(self.entries[i].values())


class _GradedSlices:
    """Degree-d slices of the complex of free K[v]-modules on cliques.

    Position i in internal degree d has basis {c_σ v^(d-i) : |σ| = i} when
    d >= i; the differential lands in v^(d-i+1).  Position 0 has no outgoing
    map because the resolution is tensored without its augmentation.
    """

    def __init__(self, g: Graph, chi: Character, top_size: int, renormalized: bool = True):
        f = chi.field
        self.field = f
        self.by_size: list[list[Clique]] = [[] for _ in range(top_size + 1)]
        for c in enumerate_cliques(g, top_size):
            self.by_size[len(c)].append(c)
        living = chi.support
        if renormalized:
            self.coefficient = lambda v: f.one if v in living else f.zero
        else:
            self.coefficient = lambda v: chi[v]
        self._rank_cache: dict[tuple[int, int], int] = {}

    def dim(self, i: int, d: int) -> int:
        if i < 0 or i >= len(self.by_size) or d < i:
            return 0
        return len(self.by_size[i])

    def matrix(self, i: int, d: int) -> Matrix:
        """Differential from position i to position i - 1 in internal degree d."""
        f = self.field
        if i <= 0 or d < i or i >= len(self.by_size):
            rows = self.dim(i - 1, d) if i >= 1 else 0
            return Matrix.zeros(rows, self.dim(i, d), f)
        power = d - i
        sources = [(s, power) for s in self.by_size[i]]
        targets = {(t, power + 1): r for r, t in enumerate(self.by_size[i - 1])}
        entries = [[0] * len(sources) for _ in targets]
        for j, (s, e) in enumerate(sources):
            for r, v in enumerate(s):
                c = self.coefficient(v)
                if c == 0:
                    continue
                entries[targets[(s[:r] + s[r + 1:], e + 1)]][j] = f.neg(c) if r % 2 else c
        return Matrix.from_rows(entries, f, len(sources))

    def rank(self, i: int, d: int) -> int:
        key = (i, d)
        if key not in self._rank_cache:
            self._rank_cache[key] = rank(self.matrix(i, d))
        return self._rank_cache[key]

    def homology(self, i: int, d: int) -> int:
        if i + 1 >= len(self.by_size) and self.dim(i, d):
            raise InvalidArgumentError(f"slices were built without cliques of size {i + 1}")
        return self.dim(i, d) - self.rank(i, d) - self.rank(i + 1, d)

    def check_square_zero(self, i: int, d: int) -> None:
        if i >= 2 and d >= i:
            if not (self.matrix(i - 1, d) @ self.matrix(i, d)).is_zero():
                raise InternalInconsistencyError(f"d∘d ≠ 0 at position {i}, degree {d}")


def graded_H(g: Graph, chi: Character, field: FieldSpec | None = None, n: int = 1, D: int | None = None,
             renormalized: bool = True) -> GradedHomologyTable:
    """Exact dims of H_i(N, K)_d for ``i <= n`` and internal degrees ``d <= D``."""
    f = field or chi.field
    if f != chi.field:
        chi = Character.of(chi.values, f)
    living_subgraph(g, chi)
    if D is None:
        D = max(n, max_clique_size(g) + 2)
    if D < n:
        raise InvalidArgumentError(f"degree bound {D} is below n = {n}")
    slices = _GradedSlices(g, chi, n + 1, renormalized)
    entries: dict[int, dict[int, int]] = {}
    for i in range(n + 1):
        entries[i] = {}
        for d in range(i, D + 1):
            slices.check_square_zero(i + 1, d)
            entries[i][d] = slices.homology(i, d)
    C = build_C(g, chi, f, n)
    c_hom = {j: homology_C(C, j) for j in range(-1, n)}
    image = {i: rank(C.boundary(i + 1)) for i in range(n + 1)}
    return GradedHomologyTable(entries, D, image, c_hom)


def split_prediction(table: GradedHomologyTable, i: int, d: int) -> int:
    """Right-hand side of the split sequence in internal degree d.

    Im d̂_i sits on cliques of size i, so contributes in degree i only;
    H_{i-1}(C_•) also lives on cliques of size i and is tensored with K[v].
    """
    image = table.image_dims.get(i, 0) if d == i else 0
    stable = table.c_homology.get(i - 1, 0) if d >= i else 0
    return image + stable


def fp_oracle(g: Graph, chi: Character, n: int, field: FieldSpec | None = None,
              renormalized: bool = True) -> Verdict:
    """FP_n iff every H_i(N, K), 1 <= i <= n, vanishes in internal degrees s+1 and s+2.

    s is the largest clique size.  Beyond s each graded piece equals
    dim H_{i-1}(C_•), so the two probes must agree.
    """
    if n < 0:
        raise InvalidArgumentError("n must be non-negative")
    f = field or chi.field
    if f != chi.field:
        chi = Character.of(chi.values, f)
    living_subgraph(g, chi)
    if n == 0:
        return Verdict(True, 0, None, ("FP_0 holds unconditionally",))
    s = max_clique_size(g)
    notes = (f"probed internal degrees {s + 1} and {s + 2}",)
    slices = _GradedSlices(g, chi, min(n, s) + 1, renormalized)
    for i in range(1, n + 1):
        if i > s:
            break  # no cliques of size i, so H_i(N, K) = 0
        lo, hi = slices.homology(i, s + 1), slices.homology(i, s + 2)
        if lo != hi:
            raise InternalInconsistencyError(
                f"H_{i}(N) is {lo} in degree {s + 1} but {hi} in degree {s + 2}"
            )
        if lo:
            return Verdict(False, n, OracleWitness(i, s + 1, lo), notes)
    return Verdict(True, n, None, notes)
