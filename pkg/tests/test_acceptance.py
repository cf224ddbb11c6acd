"""Acceptance suite: every core guarantee of the package, checked exactly.

Each criterion is a zero-tolerance check (all arithmetic in the package is
exact, so there is nothing to approximate).  Running this file under pytest
emits one ``[PASS]``/``[FAIL]`` line per criterion in the terminal summary;
running it directly (``python3 tests/test_acceptance.py``) prints the same
lines as they happen and exits nonzero on any failure.
"""

from __future__ import annotations

import contextlib
import io
import json
import os
import tempfile
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import pytest

import corpusgen
import structcheck

from smithforge import cli, exmat, genlab, smithcore
from smithforge.divstruct import DivisorSet
from smithforge.exmat import NonIntegralWitness
from smithforge.smithcore import KIND_GCD, KIND_LCM

DET_EXPONENTS = (1, 2, 3)
CERTIFY_PAIRS = ((1, 1), (1, 2), (1, 3), (1, 4), (2, 2), (2, 4), (3, 3), (3, 6), (4, 4))
KERNEL_PAIRS = ((1, 2), (1, 3), (2, 4), (3, 6))


def criterion_01_range_determinant():
    for n in range(1, 13):
        s = DivisorSet(range(1, n + 1))
        for a in DET_EXPONENTS:
            assert exmat.det(exmat.power_gcd_matrix(s, a)) == smithcore.smith_determinant(n, a)


def criterion_02_squarefree_sum_determinant():
    for n in range(2, 13):
        s = DivisorSet(range(2, n + 1))
        for a in (1, 2):
            assert exmat.det(exmat.power_gcd_matrix(s, a)) == smithcore.squarefree_sum_determinant(
                n, a
            )


def criterion_03_determinant_factors_over_corpus():
    sets = corpusgen.gcd_closed_sets()
    assert len(sets) >= 200
    assert all(len(s) <= 8 and s.elements[-1] <= 10_000 for s in sets)
    assert all(s.is_gcd_closed() for s in sets)
    for s in sets:
        for a in DET_EXPONENTS:
            expected = 1
            for x in s:
                expected *= smithcore.alpha(s, a, x)
            assert exmat.det(exmat.power_gcd_matrix(s, a)) == expected


def criterion_04_alpha_routes_agree():
    for s in corpusgen.gcd_closed_sets():
        for a in DET_EXPONENTS:
            for x in s:
                assert smithcore.alpha(s, a, x) == smithcore.alpha_from_gtds(
                    s, lambda d: d**a, x
                )
    for s in corpusgen.condition_g_sets():
        for a in DET_EXPONENTS:
            for x in s:
                if s.greatest_type_divisors(x):
                    assert smithcore.alpha(s, a, x) == smithcore.alpha_product(s, a, x)


def criterion_05_inverse_coeff_routes_agree():
    for s in corpusgen.gcd_closed_sets():
        for xi in s:
            for xj in s:
                assert smithcore.inverse_coeff(s, xi, xj) == smithcore.inverse_coeff_delta(
                    s, xi, xj
                )
    for s in corpusgen.condition_g_sets():
        for xi in s:
            for xj in s:
                assert smithcore.inverse_coeff(s, xi, xj) == smithcore.inverse_coeff_pattern(
                    s, xi, xj
                )


def criterion_06_structured_inverse():
    for s in corpusgen.gcd_closed_sets():
        for a in DET_EXPONENTS:
            assert smithcore.structured_inverse(s, a) == exmat.inverse(
                exmat.power_gcd_matrix(s, a)
            )


def criterion_07_kernel_closed_forms():
    for s in corpusgen.condition_g_sets():
        x1 = s.elements[0]
        for a, b in KERNEL_PAIRS:
            for xm in s.elements:
                has_gtds = bool(s.greatest_type_divisors(xm))
                for xl in s.elements:
                    f = smithcore.gcd_kernel(s, a, b, xl, xm)
                    g = smithcore.lcm_kernel(s, a, b, xl, xm)
                    assert f.denominator == 1 and g.denominator == 1
                    if has_gtds:
                        assert f == smithcore.gcd_kernel_closed(s, a, b, xl, xm)
                        assert g == smithcore.lcm_kernel_closed(s, a, b, xl, xm)
                    else:
                        assert xm == x1
                        assert f == Fraction(x1 ** (b - a))
                        assert g == Fraction(xl**b, x1**a)


def criterion_08_certificates_divide_on_condition_sets():
    for s in corpusgen.condition_g_sets():
        base = {a: exmat.power_gcd_matrix(s, a) for a in {a for a, _ in CERTIFY_PAIRS}}
        for a, b in CERTIFY_PAIRS:
            for kind in (KIND_GCD, KIND_LCM):
                cert = smithcore.certify_divisibility(s, a, b, kind)
                assert cert.verdict == "divides", (s.elements, a, b, kind)
                assert cert.fg_path_agrees
                target = (
                    exmat.power_gcd_matrix(s, b)
                    if kind == KIND_GCD
                    else exmat.power_lcm_matrix(s, b)
                )
                assert exmat.mul(cert.quotient, base[a]) == target


def criterion_09_negative_control():
    s = DivisorSet([1, 2])
    cert = smithcore.certify_divisibility(s, 2, 3, KIND_GCD)
    assert cert.verdict == "does-not-divide"
    assert cert.witness == NonIntegralWitness(row=1, col=0, value=Fraction(-4, 3))
    with contextlib.redirect_stdout(io.StringIO()):
        code = cli.main(["certify", "--set", "1,2", "--a", "2", "--b", "3"])
    assert code == 1


def criterion_10_structure_identities():
    totals = [0] * 6
    for s in corpusgen.condition_g_sets():
        totals[0] += structcheck.check_quotients_pairwise_coprime(s)
        totals[1] += structcheck.check_meet_times_product(s)
        totals[2] += structcheck.check_extended_meet_is_gtd(s)
        totals[3] += structcheck.check_gcd_splits_off_quotients(s)
        totals[4] += structcheck.check_collapse_identities(s)
        totals[5] += structcheck.check_alternating_power_sum(s)
    assert all(t > 0 for t in totals), totals
    assert structcheck.check_divides_transfer(bound=500) > 0
    assert structcheck.check_lcm_distributes(bound=200) > 0
    assert structcheck.check_lcm_distributes_r3(samples=20_000, bound=500, seed=11) == 20_000


def criterion_11_deterministic_artifacts():
    with tempfile.TemporaryDirectory() as tmp:
        c1, c2 = os.path.join(tmp, "c1.jsonl"), os.path.join(tmp, "c2.jsonl")
        genlab.write_corpus(genlab.build_corpus(40, 6, 2000, seed=17), c1)
        genlab.write_corpus(genlab.build_corpus(40, 6, 2000, seed=17), c2)
        with open(c1, "rb") as f1, open(c2, "rb") as f2:
            assert f1.read() == f2.read()

        f1p, f2p = os.path.join(tmp, "f1.jsonl"), os.path.join(tmp, "f2.jsonl")
        genlab.write_findings(genlab.search_failures(seed=0, candidates=60, max_exp=3), f1p)
        genlab.write_findings(genlab.search_failures(seed=0, candidates=60, max_exp=3), f2p)
        with open(f1p, "rb") as f1, open(f2p, "rb") as f2:
            payload = f1.read()
            assert payload and payload == f2.read()

    s = DivisorSet([1, 2, 3, 6])
    dump1 = json.dumps(
        smithcore.certificate_to_json_obj(smithcore.certify_divisibility(s, 1, 2, KIND_LCM)),
        sort_keys=True,
    )
    dump2 = json.dumps(
        smithcore.certificate_to_json_obj(smithcore.certify_divisibility(s, 1, 2, KIND_LCM)),
        sort_keys=True,
    )
    assert dump1 == dump2


@dataclass(frozen=True)
class Criterion:
    num: int
    desc: str
    fn: Callable[[], None]


CRITERIA = (
    Criterion(1, "det on {1..n} equals the Jordan totient product (n <= 12, a in {1,2,3})", criterion_01_range_determinant),
    Criterion(2, "det on {2..n} equals the squarefree reciprocal-sum form (n <= 12, a in {1,2})", criterion_02_squarefree_sum_determinant),
    Criterion(3, "det equals the product of alpha factors across the 220-set corpus (a in {1,2,3})", criterion_03_determinant_factors_over_corpus),
    Criterion(4, "alpha divisor-sum, subset, and quotient-product forms agree across the corpus", criterion_04_alpha_routes_agree),
    Criterion(5, "inverse coefficients: Moebius, delta-subset, and sign-pattern routes agree", criterion_05_inverse_coeff_routes_agree),
    Criterion(6, "structured inverse equals the Gauss-Jordan inverse across the corpus (a in {1,2,3})", criterion_06_structured_inverse),
    Criterion(7, "kernels are integral and match their closed forms on condition sets (a | b pairs)", criterion_07_kernel_closed_forms),
    Criterion(8, "certificates report divides on condition sets (9 exponent pairs, both kinds)", criterion_08_certificates_divide_on_condition_sets),
    Criterion(9, "negative control {1,2}, a=2, b=3: does-not-divide, witness (1,0) = -4/3, CLI exit 1", criterion_09_negative_control),
    Criterion(10, "structure identities hold: per-set checks, divides-transfer, lcm distributivity", criterion_10_structure_identities),
    Criterion(11, "corpus, findings, and certificate artifacts are byte-identical across runs", criterion_11_deterministic_artifacts),
)

RESULTS: dict[int, tuple[str, str]] = {}


def summary_lines() -> list[str]:
    return [f"[{status}] criterion {num:02d}: {desc}" for num, (status, desc) in sorted(RESULTS.items())]


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"{c.num:02d}")
def test_criterion(criterion: Criterion):
    try:
        criterion.fn()
    except Exception:
        RESULTS[criterion.num] = ("FAIL", criterion.desc)
        print(f"[FAIL] criterion {criterion.num:02d}: {criterion.desc}")
        raise
    RESULTS[criterion.num] = ("PASS", criterion.desc)
    print(f"[PASS] criterion {criterion.num:02d}: {criterion.desc}")


def main() -> int:
    failures = 0
    for criterion in CRITERIA:
        try:
            criterion.fn()
        except Exception as exc:
            failures += 1
            print(f"[FAIL] criterion {criterion.num:02d}: {criterion.desc} ({type(exc).__name__}: {exc})")
        else:
            print(f"[PASS] criterion {criterion.num:02d}: {criterion.desc}")
    print(f"{len(CRITERIA) - failures}/{len(CRITERIA)} criteria passed")
    return 1 if failures else 0


if __name__ == "__main__":
    raise SystemExit(main())
