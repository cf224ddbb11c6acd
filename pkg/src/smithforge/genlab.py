"""Deterministic generators for test corpora and the divisibility-failure search.

All randomness flows through random.Random(seed), so every generator is a
pure function of its arguments: the same bounds and seed always produce the
same stream, which is what makes corpus and findings files byte-identical
across runs.

The search enumerates gcd-closed candidate sets and exponent pairs, skips
every combination already guaranteed to divide (sets passing the lcm/meet
condition with a | b), certifies the rest, and yields only the failures.
"""

from __future__ import annotations

import json
import random
from dataclasses import dataclass
from itertools import combinations
from typing import Iterator

from .divstruct import ConditionGReport, ConditionGWitness, DivisorSet
from .errors import MalformedInput, NonPositive
from .ntheory import divisors
from .smithcore import (
    KIND_GCD,
    KIND_LCM,
    DivisibilityCertificate,
    certificate_to_json_obj,
    certify_divisibility,
)

__all__ = [
    "DEFAULT_MAX_N",
    "DEFAULT_MAX_ELEM",
    "DEFAULT_MAX_EXP",
    "CorpusEntry",
    "SearchFinding",
    "fc_closure",
    "gen_chain",
    "derive_tags",
    "gen_condition_g",
    "gen_gcd_closed",
    "build_corpus",
    "corpus_entry_to_json_obj",
    "write_corpus",
    "read_corpus",
    "search_failures",
    "finding_to_json_obj",
    "write_findings",
]

DEFAULT_MAX_N = 6
DEFAULT_MAX_ELEM = 5000
DEFAULT_MAX_EXP = 4

TAG_FC = "fc"
TAG_GCD_CLOSED = "gcd-closed"
TAG_CONDITION_G = "condition-G"
TAG_CHAIN = "chain"


@dataclass(frozen=True)
class CorpusEntry:
    """A generated set plus re-derivable tags and its generation provenance."""

    set: DivisorSet
    tags: tuple[str, ...]
    gen: str
    seed: int


@dataclass(frozen=True)
class SearchFinding:
    """One certified divisibility failure discovered by the search."""

    set: DivisorSet
    a: int
    b: int
    kind: str
    certificate: DivisibilityCertificate
    condition_g: ConditionGReport


def fc_closure(values) -> DivisorSet:
    """Smallest factor-closed set containing the given values."""
    out: set[int] = set()
    for v in values:
        if not isinstance(v, int) or v < 1:
            raise NonPositive(v)
        out.update(divisors(v))
    if not out:
        return DivisorSet(values)
    return DivisorSet(out)


def gen_chain(start: int, ratios) -> DivisorSet:
    """Divisor chain start, start*r1, start*r1*r2, ... (each ratio >= 2).

    Every element of a chain has at most one greatest-type divisor, so the
    lcm/meet condition holds vacuously.
    """
    if not isinstance(start, int) or start < 1:
        raise NonPositive(start)
    vals = [start]
    for r in ratios:
        if not isinstance(r, int) or r < 2:
            raise NonPositive(r)
        vals.append(vals[-1] * r)
    return DivisorSet(vals)


def derive_tags(s: DivisorSet) -> tuple[str, ...]:
    """Recompute the structural tags from scratch (fixed canonical order)."""
    tags = []
    if s.is_factor_closed():
        tags.append(TAG_FC)
    if s.is_gcd_closed():
        tags.append(TAG_GCD_CLOSED)
        if s.check_condition_g().holds:
            tags.append(TAG_CONDITION_G)
    if s.is_chain():
        tags.append(TAG_CHAIN)
    return tuple(tags)


def _bounded(s: DivisorSet, max_size: int, max_elem: int) -> bool:
    return len(s) <= max_size and s.elements[-1] <= max_elem


def _random_gcd_closure(rng: random.Random, max_size: int, max_elem: int) -> DivisorSet | None:
    k = rng.randint(2, max(2, max_size))
    pool = range(1, max_elem + 1)
    vals = rng.sample(pool, min(k, max_elem))
    closed = DivisorSet(vals).gcd_closure()
    return closed if _bounded(closed, max_size, max_elem) else None


def _random_divisor_closure(rng: random.Random, max_size: int, max_elem: int) -> DivisorSet | None:
    """gcd closure of a random divisor subset of a random top element; yields
    much denser divisibility structure than independent sampling."""
    x = rng.randint(4, max(4, max_elem))
    divs = divisors(x)
    if len(divs) < 3:
        return None
    k = rng.randint(2, max(2, min(max_size - 1, len(divs) - 1)))
    chosen = set(rng.sample(divs[:-1], min(k, len(divs) - 1))) | {x}
    closed = DivisorSet(chosen).gcd_closure()
    return closed if _bounded(closed, max_size, max_elem) else None


def _interleave(*streams: Iterator[DivisorSet]) -> Iterator[DivisorSet]:
    live = list(streams)
    while live:
        for stream in list(live):
            try:
                yield next(stream)
            except StopIteration:
                live.remove(stream)


def gen_condition_g(max_size: int, max_elem: int, seed: int) -> Iterator[DivisorSet]:
    """Endless deduplicated stream of sets passing the lcm/meet condition.

    Interleaves three sources: factor closures of small seeds (these always
    pass), random divisor chains (pass vacuously), and random gcd closures
    filtered through the checker.  Deterministic for a fixed seed.
    """
    rng = random.Random(seed)

    def fc_stream() -> Iterator[DivisorSet]:
        for k in range(1, min(max_elem, 400) + 1):
            s = fc_closure([k])
            if _bounded(s, max_size, max_elem):
                yield s

    def chain_stream() -> Iterator[DivisorSet]:
        for _ in range(256):
            start = rng.randint(1, 8)
            length = rng.randint(1, max(1, max_size - 1))
            ratios = [rng.randint(2, 6) for _ in range(length)]
            s = gen_chain(start, ratios)
            if _bounded(s, max_size, max_elem):
                yield s

    def closure_stream() -> Iterator[DivisorSet]:
        while True:
            s = _random_gcd_closure(rng, max_size, max_elem)
            if s is not None and s.check_condition_g().holds:
                yield s

    seen: set[tuple[int, ...]] = set()
    for s in _interleave(fc_stream(), chain_stream(), closure_stream()):
        if s.elements not in seen and s.check_condition_g().holds:
            seen.add(s.elements)
            yield s


def gen_gcd_closed(max_size: int, max_elem: int, seed: int) -> Iterator[DivisorSet]:
    """Endless deduplicated stream of random gcd-closed sets (no further filter).

    Alternates independent-sample closures with divisor-subset closures; the
    latter produce sets with rich greatest-type-divisor structure, including
    plenty that fail the lcm/meet condition.
    """
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    while True:
        flavor = _random_gcd_closure if rng.random() < 0.5 else _random_divisor_closure
        s = flavor(rng, max_size, max_elem)
        if s is not None and s.elements not in seen:
            seen.add(s.elements)
            yield s


def build_corpus(count: int, max_size: int, max_elem: int, seed: int) -> list[CorpusEntry]:
    """Deterministic mixed corpus: alternating lcm/meet-condition sets and
    unconstrained gcd-closed sets, tagged, deduplicated, `count` entries."""
    cond = gen_condition_g(max_size, max_elem, seed)
    plain = gen_gcd_closed(max_size, max_elem, seed + 1)
    entries: list[CorpusEntry] = []
    seen: set[tuple[int, ...]] = set()
    # one checked set per two unconstrained ones keeps both families well fed
    sources = (("condition-g", cond), ("gcd-closed", plain), ("gcd-closed", plain))
    i = 0
    while len(entries) < count:
        gen_name, stream = sources[i % len(sources)]
        i += 1
        s = next(stream)
        if s.elements in seen:
            continue
        seen.add(s.elements)
        entries.append(CorpusEntry(s, derive_tags(s), gen_name, seed))
    return entries


def corpus_entry_to_json_obj(entry: CorpusEntry) -> dict:
    return {
        "elements": list(entry.set.elements),
        "tags": list(entry.tags),
        "provenance": {"gen": entry.gen, "seed": entry.seed},
    }


def write_corpus(entries, path: str) -> None:
    """JSON-lines, one entry per line, stable key order."""
    with open(path, "w", encoding="utf-8") as fh:
        for entry in entries:
            fh.write(json.dumps(corpus_entry_to_json_obj(entry), sort_keys=True))
            fh.write("\n")


def read_corpus(path: str) -> list[CorpusEntry]:
    entries = []
    with open(path, "r", encoding="utf-8") as fh:
        for line in fh:
            line = line.strip()
            if not line:
                continue
            try:
                obj = json.loads(line)
            except json.JSONDecodeError as exc:
                raise MalformedInput(f"bad corpus line: {exc}") from None
            entries.append(
                CorpusEntry(
                    DivisorSet(obj["elements"]),
                    tuple(obj["tags"]),
                    obj["provenance"]["gen"],
                    obj["provenance"]["seed"],
                )
            )
    return entries


def _systematic_candidates(max_n: int, max_elem: int) -> Iterator[DivisorSet]:
    """Exhaustive small gcd-closed sets, smallest first; guarantees the search
    examines every tiny candidate before any random exploration."""
    bound = min(max_elem, 10)
    for k in range(1, min(max_n, 4) + 1):
        for combo in combinations(range(1, bound + 1), k):
            s = DivisorSet(combo)
            if s.is_gcd_closed():
                yield s


def search_failures(
    max_n: int = DEFAULT_MAX_N,
    max_elem: int = DEFAULT_MAX_ELEM,
    max_exp: int = DEFAULT_MAX_EXP,
    kinds: tuple[str, ...] = (KIND_GCD, KIND_LCM),
    seed: int = 0,
    candidates: int = 200,
) -> Iterator[SearchFinding]:
    """Certify divisibility over candidate sets and yield only the failures.

    Combinations covered by the closed-form guarantee (lcm/meet condition
    holds and a | b) are provably "divides" and are never examined, so every
    finding lives in the complementary territory.  Candidate order, and
    hence finding order, is deterministic for a fixed seed.
    """
    for kind in kinds:
        if kind not in (KIND_GCD, KIND_LCM):
            raise ValueError(f"unknown kind {kind!r}")
    rng = random.Random(seed)
    seen: set[tuple[int, ...]] = set()
    examined = 0

    def candidate_stream() -> Iterator[DivisorSet]:
        yield from _systematic_candidates(max_n, max_elem)
        while True:
            s = _random_gcd_closure(rng, max_n, max_elem)
            if s is not None:
                yield s

    for s in candidate_stream():
        if examined >= candidates:
            return
        if s.elements in seen:
            continue
        seen.add(s.elements)
        examined += 1
        report = s.check_condition_g()
        for a in range(1, max_exp + 1):
            for b in range(1, max_exp + 1):
                if report.holds and b % a == 0:
                    continue
                for kind in kinds:
                    cert = certify_divisibility(s, a, b, kind)
                    if cert.verdict == "does-not-divide":
                        yield SearchFinding(s, a, b, kind, cert, report)


def _witness_obj(w: ConditionGWitness | None):
    if w is None:
        return None
    return {"x": w.x, "y1": w.y1, "y2": w.y2, "reason": w.reason}


def finding_to_json_obj(finding: SearchFinding) -> dict:
    return {
        "set": list(finding.set.elements),
        "a": finding.a,
        "b": finding.b,
        "kind": finding.kind,
        "certificate": certificate_to_json_obj(finding.certificate),
        "condition_g": {
            "holds": finding.condition_g.holds,
            "witness": _witness_obj(finding.condition_g.witness),
        },
    }


def write_findings(findings, path: str) -> int:
    """Stream findings to a JSON-lines file; returns the number written."""
    count = 0
    with open(path, "w", encoding="utf-8") as fh:
        for finding in findings:
            fh.write(json.dumps(finding_to_json_obj(finding), sort_keys=True))
            fh.write("\n")
            count += 1
    return count
