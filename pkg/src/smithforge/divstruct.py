"""Finite sets of distinct positive integers and their divisibility structure.

The central object is DivisorSet: an immutable, ascending tuple of distinct
positive integers together with eagerly computed structure caches (pairwise
gcd table, greatest-type divisors, gcd-closedness, and the pairwise lcm/meet
condition described below).

A greatest-type divisor of x inside S is an element d in S with d | x and
d < x such that no other element of S sits strictly between d and x in the
divisibility order.  The "lcm/meet condition" asks that for every x whose
greatest-type divisor list y_1 < y_2 < ... has at least two entries, each
pair satisfies lcm(y_i, y_j) = x and gcd(y_i, y_j) is itself a greatest-type
divisor of both y_i and y_j.  Factor-closed sets always satisfy it; divisor
chains satisfy it vacuously.  Most of the closed-form machinery in
smithcore is only valid on sets that pass this check.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from math import gcd, lcm

from .errors import (
    BadIndex,
    DuplicateElement,
    EmptyInput,
    MalformedInput,
    NoGtds,
    NonPositive,
    NotAnElement,
    NotAProperDivisor,
    NotGcdClosed,
)
from .ntheory import divisors, gcd_of

__all__ = [
    "ConditionGWitness",
    "ConditionGReport",
    "DivisorSet",
    "new_set",
    "parse_set_text",
    "load_set_file",
]

REASON_LCM = "lcm-not-x"
REASON_MEET_Y1 = "meet-not-gtd-of-y1"
REASON_MEET_Y2 = "meet-not-gtd-of-y2"


@dataclass(frozen=True)
class ConditionGWitness:
    """First structural failure found, in ascending-x then lexicographic-pair order."""

    x: int
    y1: int
    y2: int
    reason: str


@dataclass(frozen=True)
class ConditionGReport:
    holds: bool
    witness: ConditionGWitness | None = None


class DivisorSet:
    """Immutable ascending set of distinct positive integers.

    All structure caches are filled in at construction time, so instances
    are safe to share and hash.  Inputs may arrive in any order; the stored
    tuple is always sorted ascending, and every downstream verdict is
    therefore independent of the presentation order.
    """

    __slots__ = ("elements", "_index", "_gcd_table", "_gtds", "_gcd_closed", "_condition_g")

    def __init__(self, values):
        vals = list(values)
        if not vals:
            raise EmptyInput("a set needs at least one element")
        for v in vals:
            if not isinstance(v, int) or isinstance(v, bool) or v < 1:
                raise NonPositive(v)
        vals.sort()
        for prev, cur in zip(vals, vals[1:]):
            if prev == cur:
                raise DuplicateElement(cur)
        self.elements: tuple[int, ...] = tuple(vals)
        self._index = {x: i for i, x in enumerate(self.elements)}
        n = len(vals)
        self._gcd_table = tuple(
            tuple(gcd(vals[i], vals[j]) for j in range(n)) for i in range(n)
        )
        self._gtds = tuple(self._compute_gtds(x) for x in self.elements)
        self._gcd_closed = all(
            self._gcd_table[i][j] in self._index for i in range(n) for j in range(i + 1, n)
        )
        self._condition_g = self._compute_condition_g() if self._gcd_closed else None

    def _compute_gtds(self, x: int) -> tuple[int, ...]:
        below = [d for d in self.elements if d < x and x % d == 0]
        # maximal under divisibility: nothing of S strictly between d and x
        return tuple(d for d in below if not any(e != d and e % d == 0 for e in below))

    def _compute_condition_g(self) -> ConditionGReport:
        for x in self.elements:
            gtds = self._gtds[self._index[x]]
            if len(gtds) < 2:
                continue
            for y1, y2 in combinations(gtds, 2):
                if lcm(y1, y2) != x:
                    return ConditionGReport(False, ConditionGWitness(x, y1, y2, REASON_LCM))
                meet = gcd(y1, y2)
                if meet not in self._gtds[self._index[y1]]:
                    return ConditionGReport(False, ConditionGWitness(x, y1, y2, REASON_MEET_Y1))
                if meet not in self._gtds[self._index[y2]]:
                    return ConditionGReport(False, ConditionGWitness(x, y1, y2, REASON_MEET_Y2))
        return ConditionGReport(True)

    # -- container protocol ------------------------------------------------

    def __len__(self) -> int:
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, value: object) -> bool:
        return value in self._index

    def __eq__(self, other: object) -> bool:
        return isinstance(other, DivisorSet) and self.elements == other.elements

    def __hash__(self) -> int:
        return hash(self.elements)

    def __repr__(self) -> str:
        return f"DivisorSet({list(self.elements)!r})"

    def index_of(self, value: int) -> int:
        """Position of value in the ascending element tuple."""
        try:
            return self._index[value]
        except KeyError:
            raise NotAnElement(value) from None

    def pair_gcd(self, i: int, j: int) -> int:
        return self._gcd_table[i][j]

    # -- structure predicates ----------------------------------------------

    def is_gcd_closed(self) -> bool:
        """True when every pairwise gcd is again an element."""
        return self._gcd_closed

    def is_factor_closed(self) -> bool:
        """True when every divisor of every element is again an element."""
        return all(all(d in self._index for d in divisors(x)) for x in self.elements)

    def is_chain(self) -> bool:
        """True when each element divides the next, ascending."""
        return all(b % a == 0 for a, b in zip(self.elements, self.elements[1:]))

    def gcd_closure(self) -> DivisorSet:
        """Smallest gcd-closed superset (iterated pairwise gcds)."""
        cur = set(self.elements)
        while True:
            new = {gcd(a, b) for a, b in combinations(cur, 2)} - cur
            if not new:
                return DivisorSet(cur)
            cur |= new

    # -- greatest-type divisors ----------------------------------------------

    def greatest_type_divisors(self, x: int) -> tuple[int, ...]:
        """Ascending in-set proper divisors of x maximal in the divisibility order.

        Empty exactly when x has no proper divisor inside the set (always the
        case for the minimum element).
        """
        return self._gtds[self.index_of(x)]

    def meet_of_gtds(self, x: int, positions) -> int:
        """gcd of the greatest-type divisors of x selected by 0-based positions."""
        gtds = self.greatest_type_divisors(x)
        chosen = sorted(set(positions))
        if not chosen:
            raise BadIndex("need at least one position")
        for p in chosen:
            if not isinstance(p, int) or not 0 <= p < len(gtds):
                raise BadIndex(f"position {p!r} out of range for {len(gtds)} divisors")
        return gcd_of(gtds[p] for p in chosen)

    def gtd_quotients(self, x: int) -> tuple[int, ...]:
        """x // d for each greatest-type divisor d of x, in the same order."""
        gtds = self.greatest_type_divisors(x)
        if not gtds:
            raise NoGtds(f"{x} has no greatest-type divisor in the set")
        return tuple(x // d for d in gtds)

    def interval_set(self, z: int, x: int) -> tuple[int, ...]:
        """Elements u with z | u and u | x, for a proper in-set divisor z of x."""
        self.index_of(z)
        self.index_of(x)
        if z >= x or x % z != 0:
            raise NotAProperDivisor(f"{z} is not a proper divisor of {x}")
        return tuple(u for u in self.elements if u % z == 0 and x % u == 0)

    # -- the pairwise lcm/meet condition ------------------------------------

    def check_condition_g(self) -> ConditionGReport:
        """Verdict plus first witness; defined on gcd-closed sets only."""
        if self._condition_g is None:
            raise NotGcdClosed("the structure condition is only defined on gcd-closed sets")
        return self._condition_g


def new_set(values) -> DivisorSet:
    """Construct a DivisorSet; alias kept for symmetry with the CLI wording."""
    return DivisorSet(values)


def parse_set_text(text: str) -> DivisorSet:
    """Parse a set literal: JSON {"elements": [...]} or whitespace-separated ints."""
    stripped = text.strip()
    if not stripped:
        raise EmptyInput("empty set literal")
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
        except json.JSONDecodeError as exc:
            raise MalformedInput(f"unparseable JSON set literal: {exc}") from None
        if not isinstance(obj, dict) or "elements" not in obj:
            raise MalformedInput("JSON set literal must be an object with an 'elements' array")
        return DivisorSet(obj["elements"])
    try:
        values = [int(tok) for tok in stripped.split()]
    except ValueError as exc:
        raise MalformedInput(f"bad token in set literal: {exc}") from None
    return DivisorSet(values)


def load_set_file(path: str) -> DivisorSet:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_set_text(fh.read())
