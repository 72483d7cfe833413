"""Decision procedures for FP_n of coabelian ideals.

Codimension one ideals are decided through links of dead cliques in the
flag complex of the living subgraph; general coabelian ideals by running the
codimension one test on one character per realizable support.  A separate
sufficient condition works with order complexes of cliques of full corank.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Union

from .character import (
    Character,
    CharacterSpace,
    Support,
    dead_cliques,
    living_subgraph,
    restriction_rank,
    supports_with_witnesses,
)
from .errors import InvalidArgumentError
from .exactfield import FieldSpec
from .graph import Clique, Graph, enumerate_cliques, is_connected, link_in_graph, undominated_vertex
from .scomplex import (
    SimplicialComplex,
    first_nonacyclic_degree,
    flag_complex,
    order_complex,
    reduced_betti_numbers,
)


class Convention(enum.Enum):
    """How the link condition depends on the size of the dead clique.

    SHIFTED asks for reduced homology of lk(w) to vanish up to n - 1 - |w|;
    UNIFORM asks for n - 1 regardless of |w|.
    """

    SHIFTED = "shifted"
    UNIFORM = "uniform"


@dataclass(frozen=True)
class LinkWitness:
    """Nonzero reduced Betti number of the link of a dead clique."""

    dead_clique: Clique
    degree: int
    betti: int

    def to_json(self, g: Graph) -> dict:
        return {"dead_clique": g.names(self.dead_clique), "degree": self.degree, "betti": self.betti}


@dataclass(frozen=True)
class PosetWitness:
    """Nonzero reduced Betti number of the order complex above ``clique``."""

    clique: Clique
    degree: int
    betti: int

    def to_json(self, g: Graph) -> dict:
        return {"clique": g.names(self.clique), "degree": self.degree, "betti": self.betti}


@dataclass(frozen=True)
class GenerationWitness:
    reason: str  # "not connected" or "not dominant"
    vertex: int | None = None

    def to_json(self, g: Graph) -> dict:
        out: dict = {"reason": self.reason}
        if self.vertex is not None:
            out["vertex"] = g.vertices[self.vertex]
        return out


@dataclass(frozen=True)
class OracleWitness:
    """A nonzero graded piece of H_i(N, K) above the stabilization degree."""

    homological_degree: int
    internal_degree: int
    dim: int

    def to_json(self, g: Graph) -> dict:
        return {"homological_degree": self.homological_degree,
                "internal_degree": self.internal_degree, "dim": self.dim}


@dataclass(frozen=True)
class SupportWitness:
    support: Support
    inner: "Verdict"

    def to_json(self, g: Graph) -> dict:
        return {"support": g.names(sorted(self.support)), "inner": self.inner.to_json(g)}


Witness = Union[LinkWitness, PosetWitness, GenerationWitness, OracleWitness, SupportWitness]


@dataclass(frozen=True)
class Verdict:
    holds: bool
    n: int
    witness: Witness | None = None
    notes: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.holds == (self.witness is not None):
            raise InvalidArgumentError("a witness is present exactly when the verdict fails")

    def to_json(self, g: Graph) -> dict:
        return {
            "holds": self.holds,
            "n": self.n,
            "witness": None if self.witness is None else self.witness.to_json(g),
            "notes": list(self.notes),
        }


def link_of_dead_clique(g: Graph, chi: Character, w: Iterable[int]) -> SimplicialComplex:
    """lk(w) in the flag complex of Γ intersected with the flag complex of the living subgraph.

    That intersection is the flag complex of the living vertices adjacent to
    all of ``w``; vertex indices refer to ``g``.
    """
    living = living_subgraph(g, chi)
    return flag_complex(g, within=link_in_graph(g, w) & living)


def _as_convention(conv) -> Convention:
    return conv if isinstance(conv, Convention) else Convention(str(conv).lower())


def fp_codim1(g: Graph, chi: Character, n: int, conv: Convention | str = Convention.SHIFTED) -> Verdict:
    """Decide FP_n of the codimension one ideal cut out by ``chi``."""
    conv = _as_convention(conv)
    if n < 0:
        raise InvalidArgumentError("n must be non-negative")
    living = living_subgraph(g, chi)
    if n == 0:
        return Verdict(True, 0)
    notes = (f"convention={conv.value}",)
    cap = n if conv is Convention.SHIFTED else None
    for w in dead_cliques(g, chi, cap):
        target = n - 1 - len(w) if conv is Convention.SHIFTED else n - 1
        lk = flag_complex(g, dim_cap=target + 1, within=link_in_graph(g, w) & living)
        bad = first_nonacyclic_degree(lk, target, chi.field)
        if bad is not None:
            return Verdict(False, n, LinkWitness(w, *bad), notes)
    return Verdict(True, n, None, notes)


def fg_corollaryE(g: Graph, chi: Character) -> Verdict:
    """Finite generation: the living subgraph must be connected and dominant."""
    living = living_subgraph(g, chi)
    if not is_connected(g, living):
        return Verdict(False, 1, GenerationWitness("not connected"), ("living subgraph is not connected",))
    v = undominated_vertex(g, living)
    if v is not None:
        return Verdict(False, 1, GenerationWitness("not dominant", v),
                       (f"vertex {g.vertices[v]} has no living neighbour",))
    return Verdict(True, 1, None, ("living subgraph is connected and dominant",))


def fp_ideal(g: Graph, sp: CharacterSpace, n: int, conv: Convention | str = Convention.SHIFTED,
             ceiling: int | None = None) -> Verdict:
    """FP_n of the coabelian ideal annihilated by ``sp``.

    Runs the codimension one test for one character per realizable support;
    the answer only depends on the support.
    """
    if sp.basis.cols != g.order:
        raise InvalidArgumentError("character space and graph disagree on the vertex count")
    kw = {} if ceiling is None else {"ceiling": ceiling}
    supports = supports_with_witnesses(sp, **kw)
    notes = (f"{len(supports)} realizable living subgraphs checked over {sp.field}",)
    for support, chi in supports.items():
        inner = fp_codim1(g, chi, n, conv)
        if not inner.holds:
            return Verdict(False, n, SupportWitness(support, inner), notes)
    return Verdict(True, n, None, notes)


NO_CONCLUSION = "sufficient condition only: a failed check gives no conclusion about FP_n"


def thmG_sufficient(g: Graph, sp: CharacterSpace, n: int) -> Verdict:
    """Sufficient condition for FP_n from order complexes of full-corank cliques.

    ``holds=True`` guarantees FP_n; ``holds=False`` means no conclusion.
    """
    if sp.basis.cols != g.order:
        raise InvalidArgumentError("character space and graph disagree on the vertex count")
    k = sp.k
    cliques = enumerate_cliques(g)
    full = [a for a in cliques if restriction_rank(sp, a) == k]
    full_sets = [frozenset(a) for a in full]
    for z in cliques:
        if restriction_rank(sp, z) == k:
            continue
        target = n - len(z) - 1
        if target < -1:
            continue
        zs = frozenset(z)
        above = [a for a in full_sets if zs < a]
        oc = order_complex(above, lambda a, b: a < b, dim_cap=target + 1)
        bad = first_nonacyclic_degree(oc, target, sp.field)
        if bad is not None:
            return Verdict(False, n, PosetWitness(z, *bad), (NO_CONCLUSION,))
    return Verdict(True, n, None, ("FP_n guaranteed",))


def p1_complex(g: Graph, chi: Character, z: Iterable[int]) -> SimplicialComplex:
    """Order complex of the cliques that contain ``z`` and meet the living subgraph."""
    living = living_subgraph(g, chi)
    zs = frozenset(z)
    poset = [frozenset(a) for a in enumerate_cliques(g) if zs <= set(a) and living & set(a)]
    return order_complex(poset, lambda a, b: a < b)


def cross_check_p1_p2(g: Graph, chi: Character, z: Iterable[int]) -> bool:
    """Compare reduced Betti numbers of the P1 order complex and the living link of ``z``."""
    z = tuple(sorted(z))
    living = living_subgraph(g, chi)
    if any(v in living for v in z) or not g.is_clique(z):
        raise InvalidArgumentError(f"{g.names(z)} is not a dead clique")
    a = p1_complex(g, chi, z)
    b = link_of_dead_clique(g, chi, z)
    top = max(a.dimension, b.dimension)
    f = chi.field
    return reduced_betti_numbers(a, f, top) == reduced_betti_numbers(b, f, top)


def witness_betti(g: Graph, chi: Character, witness: LinkWitness, field: FieldSpec | None = None) -> int:
    """Recompute the Betti number a :class:`LinkWitness` cites."""
    lk = link_of_dead_clique(g, chi, witness.dead_clique)
    top = max(lk.dimension, witness.degree)
    return reduced_betti_numbers(lk, field or chi.field, top)[witness.degree]
