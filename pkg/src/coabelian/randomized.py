"""Seeded random instances and the invariant suites run by ``selftest``."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterator

from .character import Character, CharacterSpace, dead_cliques
from .decider import Convention, cross_check_p1_p2, fg_corollaryE, fp_codim1, fp_ideal, thmG_sufficient
from .exactfield import FieldSpec, Matrix, rank
from .graph import Graph, max_clique_size
from .oracle import decomposition_check, fp_oracle, graded_H, split_prediction

_RATIONAL_VALUES = [Fraction(x) for x in (1, -1, 2, -3)] + [Fraction(1, 2), Fraction(-2, 3), Fraction(5, 4)]


def random_graph(rng: random.Random, order: int, edge_probability: float = 0.5) -> Graph:
    edges = [(a, b) for a in range(order) for b in range(a + 1, order) if rng.random() < edge_probability]
    return Graph.from_edges([str(v + 1) for v in range(order)], edges)


def random_scalar(rng: random.Random, f: FieldSpec, zero_probability: float = 0.3):
    if rng.random() < zero_probability:
        return f.zero
    if f.is_rational:
        return rng.choice(_RATIONAL_VALUES)
    return rng.randrange(1, f.p)


def random_character(rng: random.Random, order: int, f: FieldSpec) -> Character:
    while True:
        chi = Character.of([random_scalar(rng, f) for _ in range(order)], f)
        if not chi.is_zero():
            return chi


def random_space(rng: random.Random, order: int, f: FieldSpec, k: int) -> CharacterSpace:
    while True:
        rows = [random_character(rng, order, f).values for _ in range(k)]
        m = Matrix.from_rows(rows, f, order)
        if rank(m) == k:
            return CharacterSpace(m)


def discriminator() -> tuple[Graph, Character]:
    """Living path 1-3-2 plus dead vertex 4 joined to 1 and 2."""
    g = Graph.from_edges(["1", "2", "3", "4"], [(0, 2), (1, 2), (0, 3), (1, 3)])
    return g, Character.of([1, 1, 1, 0], FieldSpec())


@dataclass
class Instance:
    graph: Graph
    chi: Character
    n: int

    @property
    def field(self) -> FieldSpec:
        return self.chi.field


def instances(seed: int, count: int, max_vertices: int = 7, fields: tuple[FieldSpec, ...] = (FieldSpec(),),
              max_n: int = 4, include_discriminator: bool = True) -> Iterator[Instance]:
    """``count`` instances; the first is the discriminator graph when requested."""
    rng = random.Random(seed)
    for idx in range(count):
        if idx == 0 and include_discriminator:
            g, chi = discriminator()
            if fields[0] != chi.field:
                chi = Character.of(chi.values, fields[0])
            yield Instance(g, chi, 1)
            continue
        f = fields[idx % len(fields)]
        order = rng.randint(1, max_vertices)
        g = random_graph(rng, order)
        yield Instance(g, random_character(rng, order, f), rng.randint(1, max_n))


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list[str] = field(default_factory=list)

    def record(self, ok: bool, label: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 10:
                self.failures.append(label)


def _label(inst: Instance) -> str:
    g = inst.graph
    edges = ",".join(f"{g.vertices[a]}{g.vertices[b]}" for a, b in g.edges())
    vals = ",".join(str(a) for a in inst.chi.values)
    return f"V={len(g.vertices)} E=[{edges}] chi=({vals}) over {inst.field} n={inst.n}"


def check_arbitration(inst: Instance, conv: Convention = Convention.SHIFTED) -> bool:
    return all(
        fp_codim1(inst.graph, inst.chi, n, conv).holds == fp_oracle(inst.graph, inst.chi, n).holds
        for n in range(inst.n + 1)
    )


def check_corollary_e(inst: Instance) -> bool:
    return fg_corollaryE(inst.graph, inst.chi).holds == fp_codim1(inst.graph, inst.chi, 1).holds


def check_decomposition(inst: Instance, max_i: int = 4) -> bool:
    return all(decomposition_check(inst.graph, inst.chi, inst.field, i) for i in range(-1, max_i + 1))


def check_p1_p2(inst: Instance) -> bool:
    return all(cross_check_p1_p2(inst.graph, inst.chi, z) for z in dead_cliques(inst.graph, inst.chi))


def check_split(inst: Instance) -> bool:
    """Split sequence identity in every degree, and stabilization at s+1..s+3."""
    g, chi = inst.graph, inst.chi
    s = max_clique_size(g)
    table = graded_H(g, chi, inst.field, inst.n, s + 3)
    for i in range(1, inst.n + 1):
        for d, dim in table.entries[i].items():
            if dim != split_prediction(table, i, d):
                return False
        for d in (s + 1, s + 2, s + 3):
            if table.dim(i, d) != table.c_homology[i - 1]:
                return False
    return True


def check_theorem_g(inst: Instance, rng: random.Random) -> bool:
    """Sufficient condition implies the decision, for k = 1 and a random k = 2 space."""
    g = inst.graph
    spaces = [CharacterSpace.spanned_by(inst.chi)]
    if g.order >= 2:
        spaces.append(random_space(rng, g.order, inst.field, 2))
    for sp in spaces:
        for n in range(inst.n + 1):
            if thmG_sufficient(g, sp, n).holds and not fp_ideal(g, sp, n).holds:
                return False
    return True


SUITES: dict[str, Callable] = {
    "arbitration": check_arbitration,
    "corollary_e": check_corollary_e,
    "decomposition": check_decomposition,
    "p1_p2": check_p1_p2,
    "split": check_split,
    "theorem_g": check_theorem_g,
}


def run_suites(seed: int, count: int, max_vertices: int, fields: tuple[FieldSpec, ...],
               conv: Convention = Convention.SHIFTED, max_n: int = 4) -> list[SuiteResult]:
    results = {name: SuiteResult(name) for name in SUITES}
    rng = random.Random(seed + 1)
    for inst in instances(seed, count, max_vertices, fields, max_n):
        label = _label(inst)
        results["arbitration"].record(check_arbitration(inst, conv), label)
        results["corollary_e"].record(check_corollary_e(inst), label)
        results["decomposition"].record(check_decomposition(inst), label)
        results["p1_p2"].record(check_p1_p2(inst), label)
        results["split"].record(check_split(inst), label)
        results["theorem_g"].record(check_theorem_g(inst, rng), label)
    return list(results.values())
