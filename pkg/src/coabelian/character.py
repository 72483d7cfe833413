"""Characters on the vertex set and spaces of characters.

A character assigns a field element to each vertex.  A space of characters is
given by a basis matrix with one row per basis character; it stands for the
coabelian ideal on which every character in the span vanishes.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from typing import Iterable, Mapping

from .errors import InvalidArgumentError, ParseError, ResourceLimitError
from .exactfield import FieldSpec, Matrix, Scalar, kernel_basis, rank
from .graph import DEFAULT_CLIQUE_CEILING, Clique, Graph, enumerate_cliques

DEFAULT_ENUMERATION_CEILING = 10**6

Support = frozenset  # vertex indices with nonzero character value


@dataclass(frozen=True)
class Character:
    values: tuple
    field: FieldSpec

    def __post_init__(self):
        for a in self.values:
            if not self.field.is_canonical(a):
                raise InvalidArgumentError(f"{a!r} is not a canonical element of {self.field}")

    @classmethod
    def of(cls, values: Iterable, field: FieldSpec) -> Character:
        return cls(tuple(field(a) for a in values), field)

    def __len__(self) -> int:
        return len(self.values)

    def __getitem__(self, v: int) -> Scalar:
        return self.values[v]

    @property
    def support(self) -> Support:
        return frozenset(v for v, a in enumerate(self.values) if a != 0)

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.values)

    def to_json(self, g: Graph) -> dict:
        return {
            "field": str(self.field),
            "values": {name: self.field.format_scalar(a) for name, a in zip(g.vertices, self.values)},
        }


@dataclass(frozen=True)
class CharacterSpace:
    """Row space of ``basis``; rows must be linearly independent."""

    basis: Matrix

    def __post_init__(self):
        if self.basis.rows < 1:
            raise InvalidArgumentError("a character space needs at least one basis character")
        if rank(self.basis) != self.basis.rows:
            raise InvalidArgumentError("basis characters are linearly dependent")

    @classmethod
    def of(cls, rows: Iterable[Iterable], field: FieldSpec) -> CharacterSpace:
        return cls(Matrix.from_rows([list(r) for r in rows], field))

    @classmethod
    def spanned_by(cls, chi: Character) -> CharacterSpace:
        return cls(Matrix(1, len(chi), chi.values, chi.field))

    @property
    def field(self) -> FieldSpec:
        return self.basis.field

    @property
    def k(self) -> int:
        return self.basis.rows

    def combination(self, coefficients) -> Character:
        f = self.field
        vals = [f.zero] * self.basis.cols
        for c, i in zip(coefficients, range(self.k)):
            if c != 0:
                row = self.basis.row(i)
                vals = [f.add(x, f.mul(c, y)) for x, y in zip(vals, row)]
        return Character(tuple(vals), f)

    def to_json(self, g: Graph) -> dict:
        f = self.field
        return {
            "field": str(f),
            "basis": [
                {name: f.format_scalar(a) for name, a in zip(g.vertices, self.basis.row(i))}
                for i in range(self.k)
            ],
        }


def _require_nonzero(chi: Character) -> None:
    if chi.is_zero():
        raise InvalidArgumentError("χ must be non-zero")


def living_subgraph(g: Graph, chi: Character) -> Support:
    if len(chi) != g.order:
        raise InvalidArgumentError(f"character has {len(chi)} values for {g.order} vertices")
    _require_nonzero(chi)
    return chi.support


def dead_cliques(g: Graph, chi: Character, size_cap: int | None = None,
                 ceiling: int = DEFAULT_CLIQUE_CEILING) -> list[Clique]:
    """Cliques (the empty one included) all of whose vertices have character value zero."""
    living = living_subgraph(g, chi)
    dead = [v for v in range(g.order) if v not in living]
    return enumerate_cliques(g, size_cap, ceiling=ceiling, within=dead)


def restriction_rank(sp: CharacterSpace, subset: Iterable[int]) -> int:
    """Rank of the basis matrix restricted to the columns in ``subset``."""
    cols = sorted(set(subset))
    if not cols:
        return 0
    return rank(sp.basis.select_columns(cols))


def realizable_supports(sp: CharacterSpace, ceiling: int = DEFAULT_ENUMERATION_CEILING) -> set[Support]:
    return set(supports_with_witnesses(sp, ceiling))


def supports_with_witnesses(sp: CharacterSpace,
                            ceiling: int = DEFAULT_ENUMERATION_CEILING) -> dict[Support, Character]:
    """Every support realized by a nonzero character of ``sp``, each with one witness.

    Keys are inserted in a deterministic order (sorted by member tuple).
    """
    if sp.field.is_rational:
        found = _rational_supports(sp)
    else:
        found = _enumerate_projective(sp, ceiling)
    return {s: found[s] for s in sorted(found, key=lambda s: tuple(sorted(s)))}


def projective_points(k: int, p: int) -> Iterable[tuple[int, ...]]:
    """Coefficient vectors in GF(p)^k with first nonzero entry 1."""
    for lead in range(k):
        for tail in itertools.product(range(p), repeat=k - lead - 1):
            yield (0,) * lead + (1,) + tail


def _enumerate_projective(sp: CharacterSpace, ceiling: int) -> dict[Support, Character]:
    p, k = sp.field.p, sp.k
    count = (p**k - 1) // (p - 1)
    if count > ceiling:
        raise ResourceLimitError(f"{count} projective points over GF({p}) exceed the ceiling {ceiling}")
    found: dict[Support, Character] = {}
    for coeffs in projective_points(k, p):
        chi = sp.combination(coeffs)
        found.setdefault(chi.support, chi)
    return found


def _rational_supports(sp: CharacterSpace) -> dict[Support, Character]:
    # Over an infinite field the support V \ Z is realizable iff Z is a flat of
    # the column matroid of rank < k: the characters vanishing on Z form a
    # nonzero subspace not covered by the finitely many hyperplanes {χ(v) = 0}.
    ncols, k = sp.basis.cols, sp.k
    memo: dict[frozenset, int] = {}

    def rk(cols: frozenset) -> int:
        if cols not in memo:
            memo[cols] = restriction_rank(sp, cols)
        return memo[cols]

    def closure(cols: frozenset) -> frozenset:
        r = rk(cols)
        return cols | {v for v in range(ncols) if v not in cols and rk(cols | {v}) == r}

    start = closure(frozenset())
    flats = {start}
    todo = [start]
    while todo:
        flat = todo.pop()
        for v in range(ncols):
            if v in flat:
                continue
            bigger = closure(flat | {v})
            if rk(bigger) < k and bigger not in flats:
                flats.add(bigger)
                todo.append(bigger)
    everything = frozenset(range(ncols))
    return {everything - z: witness_for_support(sp, z) for z in flats}


def witness_for_support(sp: CharacterSpace, zeros: Iterable[int]) -> Character:
    """A character of ``sp`` vanishing exactly on ``zeros``.

    Scans ``sum t**i * q_i`` for t = 1, 2, ... over a basis q_i of the
    characters vanishing on ``zeros``.
    """
    zeros = frozenset(zeros)
    target = frozenset(range(sp.basis.cols)) - zeros
    f = sp.field
    if zeros:
        # coefficient vectors c with c . basis vanishing on the zero columns
        coeffs = kernel_basis(sp.basis.select_columns(sorted(zeros)).transpose())
    else:
        coeffs = Matrix.identity(sp.k, f)
    if coeffs.rows == 0:
        raise InvalidArgumentError(f"no nonzero character vanishes on {sorted(zeros)}")
    vanishing = [sp.combination(coeffs.row(i)) for i in range(coeffs.rows)]
    limit = sp.basis.cols * coeffs.rows + 2
    for t in range(1, limit + 1):
        vals = [f.zero] * sp.basis.cols
        for i, q in enumerate(vanishing):
            s = f(t**i)
            vals = [f.add(x, f.mul(s, y)) for x, y in zip(vals, q.values)]
        chi = Character(tuple(vals), f)
        if chi.support == target:
            return chi
    raise InvalidArgumentError(f"support {sorted(target)} is not realizable")


def _value(text, field: FieldSpec, loc: str) -> Scalar:
    if isinstance(text, bool):
        raise ParseError(f"bad scalar {text!r}", loc)
    if isinstance(text, int):
        return field(text)
    if not isinstance(text, str):
        raise ParseError(f"scalar must be a string 'a' or 'a/b', got {text!r}", loc)
    try:
        return field.parse_scalar(text)
    except ParseError as exc:
        raise ParseError(str(exc), loc) from None
    except ValueError as exc:
        raise ParseError(str(exc), loc) from None


def _vertex_values(g: Graph, mapping, field: FieldSpec, loc: str) -> list[Scalar]:
    if not isinstance(mapping, Mapping):
        raise ParseError("expected an object mapping vertex names to values", loc)
    vals = [field.zero] * g.order
    for name, text in mapping.items():
        if name not in g.vertices:
            raise ParseError(f"unknown vertex {name!r}", loc)
        vals[g.vertices.index(name)] = _value(text, field, f"{loc}.{name}")
    return vals


def _load(text: bytes | str) -> dict:
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", f"line {exc.lineno} col {exc.colno}") from None
    if not isinstance(doc, dict):
        raise ParseError("expected a JSON object", "$")
    return doc


def _field_of(doc: dict, override: FieldSpec | None) -> FieldSpec:
    if override is not None:
        return override
    try:
        return FieldSpec.parse(doc.get("field", "Q"))
    except (AttributeError, ValueError) as exc:
        raise ParseError(str(exc), "field") from None


def parse_character(text: bytes | str, g: Graph, field: FieldSpec | None = None) -> Character:
    """Parse ``{"field": ..., "values": {name: "a/b", ...}}``; vertices left out get 0.

    A ``field`` argument overrides the document's field; values are then
    read as rationals and reduced into it.
    """
    doc = _load(text)
    f = _field_of(doc, field)
    return Character(tuple(_vertex_values(g, doc.get("values"), f, "values")), f)


def parse_character_space(text: bytes | str, g: Graph, field: FieldSpec | None = None) -> CharacterSpace:
    doc = _load(text)
    f = _field_of(doc, field)
    basis = doc.get("basis")
    if not isinstance(basis, list) or not basis:
        raise ParseError("'basis' must be a nonempty array", "basis")
    rows = [_vertex_values(g, b, f, f"basis[{i}]") for i, b in enumerate(basis)]
    return CharacterSpace(Matrix.from_rows(rows, f, g.order))
