"""Exact dense linear algebra over the integers and rationals.

Matrices are small (the package targets sets of at most a few dozen
elements), so everything is plain row-major tuples of Python ints or
fractions.Fraction values.  Two independent determinant routines are
provided on purpose: fraction-free Bareiss elimination as the workhorse and
naive cofactor expansion as a small-n oracle, so each can certify the other
in tests.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm

from .errors import DimensionMismatch, SingularMatrix
from . import divstruct

__all__ = [
    "ExactMatrix",
    "RationalMatrix",
    "NonIntegralWitness",
    "power_gcd_matrix",
    "power_lcm_matrix",
    "det",
    "det_cofactor",
    "inverse",
    "mul",
    "as_integer_matrix",
    "to_json_obj",
    "to_csv_text",
]


def _check_square(rows) -> int:
    n = len(rows)
    if n == 0 or any(len(r) != n for r in rows):
        raise DimensionMismatch("matrix must be square and nonempty")
    return n


class ExactMatrix:
    """Immutable square matrix with integer entries."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(r) for r in rows)
        self.n = _check_square(rows)
        for r in rows:
            for v in r:
                if not isinstance(v, int) or isinstance(v, bool):
                    raise DimensionMismatch(f"integer matrix got entry {v!r}")
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> ExactMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, i: int) -> tuple[int, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (ExactMatrix, RationalMatrix)):
            return NotImplemented
        return self.n == other.n and all(
            self.rows[i][j] == other.rows[i][j] for i in range(self.n) for j in range(self.n)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"ExactMatrix({[list(r) for r in self.rows]!r})"


class RationalMatrix:
    """Immutable square matrix with Fraction entries (auto-reduced)."""

    __slots__ = ("n", "rows")

    def __init__(self, rows):
        rows = tuple(tuple(Fraction(v) for v in r) for r in rows)
        self.n = _check_square(rows)
        self.rows = rows

    @classmethod
    def identity(cls, n: int) -> RationalMatrix:
        return cls(tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n)))

    def __getitem__(self, i: int) -> tuple[Fraction, ...]:
        return self.rows[i]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (ExactMatrix, RationalMatrix)):
            return NotImplemented
        return self.n == other.n and all(
            self.rows[i][j] == other.rows[i][j] for i in range(self.n) for j in range(self.n)
        )

    def __hash__(self) -> int:
        return hash(self.rows)

    def __repr__(self) -> str:
        return f"RationalMatrix({[[str(v) for v in r] for r in self.rows]!r})"


@dataclass(frozen=True)
class NonIntegralWitness:
    """First row-major entry (0-based) with denominator > 1."""

    row: int
    col: int
    value: Fraction


def _check_exponent(a: int) -> None:
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"exponent must be a positive integer, got {a!r}")


def power_gcd_matrix(s: divstruct.DivisorSet, a: int) -> ExactMatrix:
    """Matrix with entry (i, j) = gcd(x_i, x_j)**a over the ascending elements."""
    _check_exponent(a)
    n = len(s)
    return ExactMatrix(
        tuple(tuple(s.pair_gcd(i, j) ** a for j in range(n)) for i in range(n))
    )


def power_lcm_matrix(s: divstruct.DivisorSet, b: int) -> ExactMatrix:
    """Matrix with entry (i, j) = lcm(x_i, x_j)**b over the ascending elements."""
    _check_exponent(b)
    xs = s.elements
    return ExactMatrix(
        tuple(tuple(lcm(xi, xj) ** b for xj in xs) for xi in xs)
    )


def det(m: ExactMatrix) -> int:
    """Determinant by fraction-free Bareiss elimination (exact, no Fractions)."""
    n = m.n
    a = [list(r) for r in m.rows]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for r in range(k + 1, n):
                if a[r][k] != 0:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Sylvester's identity guarantees this division is exact
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = a[k][k]
    return sign * a[n - 1][n - 1]


def det_cofactor(m: ExactMatrix) -> int:
    """Determinant by first-row cofactor expansion; oracle for small n only."""

    def go(rows: tuple[tuple[int, ...], ...]) -> int:
        k = len(rows)
        if k == 1:
            return rows[0][0]
        total = 0
        rest = rows[1:]
        for j, v in enumerate(rows[0]):
            if v == 0:
                continue
            minor = tuple(r[:j] + r[j + 1 :] for r in rest)
            total += (-1) ** j * v * go(minor)
        return total

    return go(m.rows)


def inverse(m: ExactMatrix | RationalMatrix) -> RationalMatrix:
    """Exact inverse by Gauss-Jordan elimination over Fractions."""
    n = m.n
    work = [[Fraction(v) for v in r] for r in m.rows]
    aug = [work[i] + [Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    for col in range(n):
        pivot = next((r for r in range(col, n) if aug[r][col] != 0), None)
        if pivot is None:
            raise SingularMatrix("matrix has determinant zero")
        aug[col], aug[pivot] = aug[pivot], aug[col]
        pv = aug[col][col]
        aug[col] = [v / pv for v in aug[col]]
        for r in range(n):
            if r != col and aug[r][col] != 0:
                factor = aug[r][col]
                aug[r] = [v - factor * w for v, w in zip(aug[r], aug[col])]
    return RationalMatrix(tuple(tuple(row[n:]) for row in aug))


def mul(a: ExactMatrix | RationalMatrix, b: ExactMatrix | RationalMatrix) -> RationalMatrix:
    """Exact matrix product, entries reduced."""
    if a.n != b.n:
        raise DimensionMismatch(f"cannot multiply {a.n}x{a.n} by {b.n}x{b.n}")
    n = a.n
    return RationalMatrix(
        tuple(
            tuple(sum(Fraction(a.rows[i][k]) * b.rows[k][j] for k in range(n)) for j in range(n))
            for i in range(n)
        )
    )


def as_integer_matrix(m: RationalMatrix | ExactMatrix) -> ExactMatrix | NonIntegralWitness:
    """Integer form of m, or the first row-major non-integral entry as a witness."""
    if isinstance(m, ExactMatrix):
        return m
    for i in range(m.n):
        for j in range(m.n):
            v = m.rows[i][j]
            if v.denominator != 1:
                return NonIntegralWitness(i, j, v)
    return ExactMatrix(tuple(tuple(int(v) for v in r) for r in m.rows))


def _entry_json(v):
    if isinstance(v, Fraction):
        if v.denominator == 1:
            return int(v)
        return {"n": v.numerator, "d": v.denominator}
    return v


def to_json_obj(m: ExactMatrix | RationalMatrix) -> list[list]:
    """Nested arrays; non-integral entries become {"n": numerator, "d": denominator}."""
    return [[_entry_json(v) for v in r] for r in m.rows]


def _entry_csv(v) -> str:
    if isinstance(v, Fraction) and v.denominator != 1:
        return f"{v.numerator}/{v.denominator}"
    return str(int(v))


def to_csv_text(m: ExactMatrix | RationalMatrix) -> str:
    """One row per line, comma-separated, fractions rendered as p/q."""
    return "\n".join(",".join(_entry_csv(v) for v in r) for r in m.rows) + "\n"
