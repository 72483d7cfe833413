"""Exact arithmetic over the rationals and prime fields.

Rational scalars are :class:`fractions.Fraction`; prime-field scalars are
plain ``int`` residues in ``range(p)``.  A :class:`FieldSpec` carries the
field and knows how to add, multiply, invert and (de)serialize its scalars.
Matrices are dense, immutable and row-major.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Iterable, Sequence, Union

from .errors import MalformedInputError, ParseError

Scalar = Union[Fraction, int]

MAX_PRIME = 2**31


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p % 2 == 0:
        return p == 2
    for q in range(3, isqrt(p) + 1, 2):
        if p % q == 0:
            return False
    return True


@dataclass(frozen=True)
class FieldSpec:
    """The ground field: ``FieldSpec()`` is Q, ``FieldSpec(p)`` is GF(p)."""

    p: int | None = None

    def __post_init__(self):
        if self.p is not None:
            if isinstance(self.p, bool) or not isinstance(self.p, int):
                raise MalformedInputError(f"field characteristic must be an int, got {self.p!r}")
            if not (2 <= self.p < MAX_PRIME) or not is_prime(self.p):
                raise MalformedInputError(f"GF:{self.p} is not a prime field below 2^31")

    @classmethod
    def parse(cls, text: str) -> FieldSpec:
        text = text.strip()
        if text == "Q":
            return cls()
        if text.startswith("GF:"):
            try:
                p = int(text[3:])
            except ValueError:
                raise ParseError(f"bad field spec {text!r}") from None
            return cls(p)
        raise ParseError(f"bad field spec {text!r}; expected 'Q' or 'GF:<p>'")

    def __str__(self) -> str:
        return "Q" if self.p is None else f"GF:{self.p}"

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    # scalars

    @property
    def zero(self) -> Scalar:
        return Fraction(0) if self.p is None else 0

    @property
    def one(self) -> Scalar:
        return Fraction(1) if self.p is None else 1

    def __call__(self, value) -> Scalar:
        """Coerce an int, Fraction or numeric string into this field."""
        if isinstance(value, str):
            return self.parse_scalar(value)
        if isinstance(value, bool):
            value = int(value)
        if self.p is None:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            raise MalformedInputError(f"cannot coerce {value!r} into Q")
        if isinstance(value, int):
            return value % self.p
        if isinstance(value, Fraction):
            if value.denominator % self.p == 0:
                raise MalformedInputError(f"{value} has no image in GF({self.p})")
            return value.numerator * pow(value.denominator, -1, self.p) % self.p
        raise MalformedInputError(f"cannot coerce {value!r} into GF({self.p})")

    def is_canonical(self, a) -> bool:
        if self.p is None:
            return type(a) is Fraction
        return type(a) is int and 0 <= a < self.p

    def add(self, a: Scalar, b: Scalar) -> Scalar:
        return a + b if self.p is None else (a + b) % self.p

    def sub(self, a: Scalar, b: Scalar) -> Scalar:
        return a - b if self.p is None else (a - b) % self.p

    def neg(self, a: Scalar) -> Scalar:
        return -a if self.p is None else (-a) % self.p

    def mul(self, a: Scalar, b: Scalar) -> Scalar:
        return a * b if self.p is None else (a * b) % self.p

    def inv(self, a: Scalar) -> Scalar:
        if a == 0:
            raise ZeroDivisionError(f"zero has no inverse in {self}")
        return 1 / a if self.p is None else pow(a, -1, self.p)

    def div(self, a: Scalar, b: Scalar) -> Scalar:
        return self.mul(a, self.inv(b))

    def parse_scalar(self, text: str) -> Scalar:
        try:
            value = Fraction(text.strip())
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"bad scalar {text!r}; expected 'a' or 'a/b'") from None
        if "." in text or "e" in text.lower():
            raise ParseError(f"bad scalar {text!r}; decimals are not exact field elements")
        return self(value)

    def format_scalar(self, a: Scalar) -> str:
        return str(a)


Q = FieldSpec()


@dataclass(frozen=True)
class Matrix:
    """Dense ``rows x cols`` matrix over ``field`` with row-major ``entries``."""

    rows: int
    cols: int
    entries: tuple
    field: FieldSpec

    def __post_init__(self):
        if self.rows < 0 or self.cols < 0:
            raise MalformedInputError("matrix dimensions must be non-negative")
        if len(self.entries) != self.rows * self.cols:
            raise MalformedInputError(
                f"{self.rows}x{self.cols} matrix needs {self.rows * self.cols} entries, "
                f"got {len(self.entries)}"
            )
        for a in self.entries:
            if not self.field.is_canonical(a):
                raise MalformedInputError(f"entry {a!r} is not a canonical element of {self.field}")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence], field: FieldSpec, cols: int | None = None) -> Matrix:
        rows = [list(r) for r in rows]
        if cols is None:
            cols = len(rows[0]) if rows else 0
        if any(len(r) != cols for r in rows):
            raise MalformedInputError("ragged rows")
        return cls(len(rows), cols, tuple(field(a) for r in rows for a in r), field)

    @classmethod
    def zeros(cls, rows: int, cols: int, field: FieldSpec) -> Matrix:
        return cls(rows, cols, (field.zero,) * (rows * cols), field)

    @classmethod
    def identity(cls, n: int, field: FieldSpec) -> Matrix:
        return cls.from_rows([[int(i == j) for j in range(n)] for i in range(n)], field)

    def row(self, i: int) -> tuple:
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def to_rows(self) -> list[list]:
        return [list(self.row(i)) for i in range(self.rows)]

    def __getitem__(self, ij: tuple[int, int]) -> Scalar:
        i, j = ij
        return self.entries[i * self.cols + j]

    def transpose(self) -> Matrix:
        return Matrix(
            self.cols, self.rows,
            tuple(self.entries[i * self.cols + j] for j in range(self.cols) for i in range(self.rows)),
            self.field,
        )

    def select_columns(self, columns: Iterable[int]) -> Matrix:
        columns = list(columns)
        return Matrix.from_rows([[r[j] for j in columns] for r in self.to_rows()], self.field, len(columns))

    def __matmul__(self, other: Matrix) -> Matrix:
        if self.field != other.field:
            raise MalformedInputError(f"cannot multiply matrices over {self.field} and {other.field}")
        if self.cols != other.rows:
            raise MalformedInputError(f"shape mismatch {self.rows}x{self.cols} @ {other.rows}x{other.cols}")
        f = self.field
        ocols = [other.entries[j::other.cols] for j in range(other.cols)] if other.cols else []
        out = []
        for i in range(self.rows):
            r = self.row(i)
            for c in ocols:
                s = sum(a * b for a, b in zip(r, c) if a and b)
                out.append(f(s))
        return Matrix(self.rows, other.cols, tuple(out), f)

    def apply(self, x: Sequence[Scalar]) -> list[Scalar]:
        """Return ``m @ x`` for a column vector given as a sequence."""
        if len(x) != self.cols:
            raise MalformedInputError("vector length does not match column count")
        f = self.field
        return [f(sum(a * b for a, b in zip(self.row(i), x) if a and b)) for i in range(self.rows)]

    def is_zero(self) -> bool:
        return all(a == 0 for a in self.entries)


def _check(m: Matrix) -> None:
    if not isinstance(m, Matrix):
        raise MalformedInputError(f"expected a Matrix, got {type(m).__name__}")
    for a in m.entries:
        if not m.field.is_canonical(a):
            raise MalformedInputError(f"entry {a!r} is not a canonical element of {m.field}")


def _integer_rank(rows: list[list[int]], ncols: int) -> int:
    # Fraction-free elimination; rows are rescaled by their content to keep entries small.
    rank = 0
    rows = [r for r in rows if any(r)]
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[rank], rows[pivot] = rows[pivot], rows[rank]
        prow = rows[rank]
        a = prow[col]
        for i in range(rank + 1, len(rows)):
            b = rows[i][col]
            if b:
                g = gcd(a, b)
                ra, rb = a // g, b // g
                new = [ra * x - rb * y for x, y in zip(rows[i], prow)]
                content = 0
                for x in new:
                    if x:
                        content = gcd(content, x)
                        if content == 1:
                            break
                if content > 1:
                    new = [x // content for x in new]
                rows[i] = new
        rank += 1
        if rank == len(rows):
            break
    return rank


def rref(m: Matrix) -> tuple[list[list[Scalar]], list[int]]:
    """Reduced row echelon form of ``m`` as ``(nonzero rows, pivot columns)``."""
    _check(m)
    f = m.field
    rows = [list(r) for r in m.to_rows()]
    pivots: list[int] = []
    r = 0
    for col in range(m.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col] != 0), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = f.inv(rows[r][col])
        rows[r] = [f.mul(x, inv) for x in rows[r]]
        prow = rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col] != 0:
                c = rows[i][col]
                rows[i] = [f.sub(x, f.mul(c, y)) for x, y in zip(rows[i], prow)]
        pivots.append(col)
        r += 1
        if r == len(rows):
            break
    return rows[:r], pivots


def rank(m: Matrix) -> int:
    """Rank of ``m`` over its field."""
    _check(m)
    if m.rows == 0 or m.cols == 0:
        return 0
    if m.field.is_rational:
        dens = 1
        for a in m.entries:
            if a.denominator != 1:
                dens = dens * a.denominator // gcd(dens, a.denominator)
        rows = [[int(a * dens) for a in m.row(i)] for i in range(m.rows)]
        return _integer_rank(rows, m.cols)
    p = m.field.p
    rows = [list(m.row(i)) for i in range(m.rows) if any(m.row(i))]
    r = 0
    for col in range(m.cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        prow = rows[r]
        inv = pow(prow[col], -1, p)
        for i in range(r + 1, len(rows)):
            c = rows[i][col]
            if c:
                c = c * inv % p
                rows[i] = [(x - c * y) % p for x, y in zip(rows[i], prow)]
        r += 1
        if r == len(rows):
            break
    return r


def kernel_basis(m: Matrix) -> Matrix:
    """Rows spanning the right null space ``{x : m x = 0}``."""
    f = m.field
    reduced, pivots = rref(m)
    pivot_set = set(pivots)
    free = [j for j in range(m.cols) if j not in pivot_set]
    basis = []
    for j in free:
        x = [f.zero] * m.cols
        x[j] = f.one
        for row, pc in zip(reduced, pivots):
            x[pc] = f.neg(row[j])
        basis.append(x)
    return Matrix(len(basis), m.cols, tuple(a for x in basis for a in x), f)
