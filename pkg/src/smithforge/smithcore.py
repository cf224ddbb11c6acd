"""Structure theory for power gcd and power lcm matrices on gcd-closed sets.

For a gcd-closed set S = {x_1 < ... < x_n} and exponent a, the power gcd
matrix (gcd(x_i, x_j)**a) factors through per-element quantities:

* alpha(x_k): the sum of Jordan totients J_a(d) over divisors d of x_k that
  divide no smaller element of S.  The determinant of the power gcd matrix
  is exactly prod_k alpha(x_k), and each alpha admits two reformulations
  implemented here: an inclusion-exclusion sum over subsets of the
  greatest-type divisors of x_k, and (on sets passing the lcm/meet
  condition, see divstruct) a closed product over the gtd quotients.

* c[i][j]: integer coefficients, defined by a Moebius sum, through which the
  inverse of the power gcd matrix is expressed entrywise as
  inv[i][j] = sum over common in-set multiples x_k of x_i and x_j of
  c[i][k] * c[j][k] / alpha(x_k).

* kernels f and g: rational building blocks combining the c table with gcd
  (respectively lcm) powers.  Summed against the c table they reproduce,
  entry by entry, the exact quotients
  (power matrix with exponent b) * inverse(power gcd matrix with exponent a),
  giving a second, linear-algebra-free route to those quotients.  On sets
  passing the lcm/meet condition with a | b the kernels collapse to integral
  closed forms, which is the engine behind the divisibility certificates.

certify_divisibility always evaluates the quotient along both routes and
refuses to answer (InternalMismatch) if they ever disagree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from math import gcd, lcm, prod

from .divstruct import DivisorSet
from .errors import (
    BadRange,
    ConditionGFails,
    InternalMismatch,
    NoGtds,
    NotDivisibleExponents,
    NotGcdClosed,
)
from .exmat import (
    ExactMatrix,
    NonIntegralWitness,
    RationalMatrix,
    as_integer_matrix,
    inverse,
    mul,
    power_gcd_matrix,
    power_lcm_matrix,
    to_json_obj,
)
from .ntheory import delta, divisors, gcd_of, is_squarefree, jordan_totient, mobius

__all__ = [
    "KIND_GCD",
    "KIND_LCM",
    "alpha",
    "alpha_from_gtds",
    "alpha_product",
    "inverse_coeff",
    "inverse_coeff_delta",
    "inverse_coeff_pattern",
    "structured_inverse",
    "gcd_kernel",
    "lcm_kernel",
    "gcd_kernel_closed",
    "lcm_kernel_closed",
    "quotient_from_kernels",
    "DivisibilityCertificate",
    "certify_divisibility",
    "certificate_to_json_obj",
    "smith_determinant",
    "squarefree_sum_determinant",
]

KIND_GCD = "gcd"
KIND_LCM = "lcm"


def _require_gcd_closed(s: DivisorSet) -> None:
    if not s.is_gcd_closed():
        raise NotGcdClosed("operation requires a gcd-closed set")


def _require_condition_g(s: DivisorSet) -> None:
    report = s.check_condition_g()
    if not report.holds:
        raise ConditionGFails(witness=report.witness)


def _check_exponent(a: int) -> None:
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"exponent must be a positive integer, got {a!r}")


def _check_kind(kind: str) -> None:
    if kind not in (KIND_GCD, KIND_LCM):
        raise ValueError(f"kind must be {KIND_GCD!r} or {KIND_LCM!r}, got {kind!r}")


# -- per-element determinant factors ---------------------------------------


def alpha(s: DivisorSet, a: int, x: int) -> int:
    """Sum of J_a over divisors of x that divide no smaller element of S.

    These are the per-element factors of det(power gcd matrix): on a
    gcd-closed set the determinant equals the product of alpha over all
    elements.  For the minimum element every divisor survives the filter,
    so alpha(x_1) = x_1**a.
    """
    _require_gcd_closed(s)
    _check_exponent(a)
    smaller = s.elements[: s.index_of(x)]
    total = 0
    for d in divisors(x):
        if any(t % d == 0 for t in smaller):
            continue
        total += jordan_totient(a, d)
    return total


def alpha_from_gtds(s: DivisorSet, f, x: int) -> int:
    """Inclusion-exclusion form of alpha over subsets of the gtds of x.

    f is an arithmetic function handle (int -> int); each subset J of the
    greatest-type divisors of x contributes (-1)**|J| * f(gcd(J + {x})).
    With f = (d -> d**a) this equals alpha(s, a, x).
    """
    _require_gcd_closed(s)
    gtds = s.greatest_type_divisors(x)
    total = 0
    for k in range(len(gtds) + 1):
        for sub in combinations(gtds, k):
            m = gcd_of(sub + (x,))
            total += (-1) ** k * f(m)
    return total


def alpha_product(s: DivisorSet, a: int, x: int) -> int:
    """Closed form: (meet of all gtds)**a * prod over gtds d of ((x/d)**a - 1).

    Valid on gcd-closed sets passing the lcm/meet condition; x must have at
    least one greatest-type divisor (so the minimum element is excluded).
    """
    _require_gcd_closed(s)
    _require_condition_g(s)
    _check_exponent(a)
    gtds = s.greatest_type_divisors(x)
    if not gtds:
        raise NoGtds(f"{x} has no greatest-type divisor in the set")
    meet = gcd_of(gtds)
    return meet**a * prod((x // d) ** a - 1 for d in gtds)


@lru_cache(maxsize=None)
def _alpha_vec(s: DivisorSet, a: int) -> tuple[int, ...]:
    return tuple(alpha(s, a, x) for x in s.elements)


# -- inverse coefficients ----------------------------------------------------


def inverse_coeff(s: DivisorSet, xi: int, xj: int) -> int:
    """Moebius-sum definition: sum of mobius(d) over d with d*xi | xj such
    that d*xi divides no element smaller than xj."""
    _require_gcd_closed(s)
    s.index_of(xi)
    j = s.index_of(xj)
    if xj % xi != 0:
        return 0
    smaller = s.elements[:j]
    total = 0
    for d in divisors(xj // xi):
        dxi = d * xi
        if any(t % dxi == 0 for t in smaller):
            continue
        total += mobius(d)
    return total


def _c_delta_core(s: DivisorSet, i: int, j: int) -> int:
    xs = s.elements
    xi, xj = xs[i], xs[j]
    if xj % xi != 0:
        return 0
    if i == j:
        return 1
    # quotient set {x_t / x_i : x_i | x_t, x_t <= x_j}; inclusion-exclusion
    # with the convolution identity delta keeps only subsets with meet 1
    quotients = DivisorSet(t // xi for t in xs[: j + 1] if t % xi == 0)
    target = xj // xi
    gtds = quotients.greatest_type_divisors(target)
    total = 0
    for k in range(len(gtds) + 1):
        for sub in combinations(gtds, k):
            total += (-1) ** k * delta(gcd_of(sub + (target,)))
    return total


def inverse_coeff_delta(s: DivisorSet, xi: int, xj: int) -> int:
    """Case-reduced form: 0 unless xi | xj, 1 at xi = xj, else a delta-weighted
    inclusion-exclusion over the quotient set of in-set multiples of xi up to xj.

    Agrees with inverse_coeff everywhere on gcd-closed sets.
    """
    _require_gcd_closed(s)
    return _c_delta_core(s, s.index_of(xi), s.index_of(xj))


def inverse_coeff_pattern(s: DivisorSet, xr: int, xm: int) -> int:
    """Coefficient pattern on sets passing the lcm/meet condition: 1 on the
    diagonal, (-1)**k when xr is the meet of exactly k gtds of xm, else 0.

    Distinct gtd subsets have distinct meets on such sets, so the exponent
    k is well defined.
    """
    _require_gcd_closed(s)
    _require_condition_g(s)
    r = s.index_of(xr)
    m = s.index_of(xm)
    if r == m:
        return 1
    gtds = s.greatest_type_divisors(xm)
    for k in range(1, len(gtds) + 1):
        for sub in combinations(gtds, k):
            if gcd_of(sub) == xr:
                return (-1) ** k
    return 0


@lru_cache(maxsize=None)
def _c_table(s: DivisorSet) -> tuple[tuple[int, ...], ...]:
    _require_gcd_closed(s)
    n = len(s)
    return tuple(tuple(_c_delta_core(s, i, j) for j in range(n)) for i in range(n))


def structured_inverse(s: DivisorSet, a: int) -> RationalMatrix:
    """Inverse of the power gcd matrix assembled from the c table and alphas:
    entry (i, j) sums c[i][k] * c[j][k] / alpha(x_k) over common in-set
    multiples x_k of x_i and x_j."""
    _require_gcd_closed(s)
    _check_exponent(a)
    xs = s.elements
    n = len(xs)
    c = _c_table(s)
    alphas = _alpha_vec(s, a)
    entries = [
        [
            sum(
                (Fraction(c[i][k] * c[j][k], alphas[k]) for k in range(n)
                 if xs[k] % xs[i] == 0 and xs[k] % xs[j] == 0),
                Fraction(0),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    return RationalMatrix(entries)


# -- quotient kernels --------------------------------------------------------


def gcd_kernel(s: DivisorSet, a: int, b: int, xl: int, xm: int) -> Fraction:
    """f(l, m) = (1/alpha_a(x_m)) * sum over in-set divisors x_r of x_m of
    c[r][m] * gcd(x_l, x_r)**b."""
    _require_gcd_closed(s)
    _check_exponent(a)
    _check_exponent(b)
    s.index_of(xl)
    m = s.index_of(xm)
    c = _c_table(s)
    alphas = _alpha_vec(s, a)
    total = sum(
        c[r][m] * gcd(xl, xr) ** b for r, xr in enumerate(s.elements) if xm % xr == 0
    )
    return Fraction(total, alphas[m])


def lcm_kernel(s: DivisorSet, a: int, b: int, xl: int, xm: int) -> Fraction:
    """g(l, m): same shape as gcd_kernel with lcm(x_l, x_r)**b inside."""
    _require_gcd_closed(s)
    _check_exponent(a)
    _check_exponent(b)
    s.index_of(xl)
    m = s.index_of(xm)
    c = _c_table(s)
    alphas = _alpha_vec(s, a)
    total = sum(
        c[r][m] * lcm(xl, xr) ** b for r, xr in enumerate(s.elements) if xm % xr == 0
    )
    return Fraction(total, alphas[m])


def _closed_form_guard(s: DivisorSet, a: int, b: int, xm: int) -> tuple[int, ...]:
    _require_gcd_closed(s)
    _require_condition_g(s)
    _check_exponent(a)
    _check_exponent(b)
    if b % a != 0:
        raise NotDivisibleExponents(a, b)
    gtds = s.greatest_type_divisors(xm)
    if not gtds:
        raise NoGtds(f"{xm} has no greatest-type divisor in the set")
    return gtds


def gcd_kernel_closed(s: DivisorSet, a: int, b: int, xl: int, xm: int) -> Fraction:
    """Closed form of gcd_kernel on sets passing the lcm/meet condition with
    a | b: zero unless x_m | x_l, else
    meet**(b-a) * prod over gtd quotients P of (P**b - 1)/(P**a - 1)."""
    gtds = _closed_form_guard(s, a, b, xm)
    s.index_of(xl)
    if xl % xm != 0:
        return Fraction(0)
    meet = gcd_of(gtds)
    out = Fraction(meet ** (b - a))
    for d in gtds:
        p = xm // d
        out *= Fraction(p**b - 1, p**a - 1)
    return out


def lcm_kernel_closed(s: DivisorSet, a: int, b: int, xl: int, xm: int) -> Fraction:
    """Closed form of lcm_kernel: zero unless gcd(x_l, x_m) divides the meet
    of the gtds, else the gcd_kernel product times (x_l / gcd(x_l, x_m))**b."""
    gtds = _closed_form_guard(s, a, b, xm)
    s.index_of(xl)
    meet = gcd_of(gtds)
    d0 = gcd(xl, xm)
    if meet % d0 != 0:
        return Fraction(0)
    out = Fraction(meet ** (b - a)) * (xl // d0) ** b
    for d in gtds:
        p = xm // d
        out *= Fraction(p**b - 1, p**a - 1)
    return out


def quotient_from_kernels(s: DivisorSet, a: int, b: int, kind: str) -> RationalMatrix:
    """Exact quotient (power matrix, exponent b) * inverse(power gcd matrix,
    exponent a), assembled without linear algebra: entry (i, j) sums
    c[j][t] * kernel(i, t) over in-set multiples x_t of x_j."""
    _require_gcd_closed(s)
    _check_exponent(a)
    _check_exponent(b)
    _check_kind(kind)
    kernel = gcd_kernel if kind == KIND_GCD else lcm_kernel
    xs = s.elements
    n = len(xs)
    c = _c_table(s)
    kern = [[kernel(s, a, b, xs[i], xs[t]) for t in range(n)] for i in range(n)]
    entries = [
        [
            sum(
                (c[j][t] * kern[i][t] for t in range(n) if xs[t] % xs[j] == 0),
                Fraction(0),
            )
            for j in range(n)
        ]
        for i in range(n)
    ]
    return RationalMatrix(entries)


# -- divisibility certificates ------------------------------------------------


@dataclass(frozen=True)
class DivisibilityCertificate:
    """Outcome of an exact divisibility check in the integer matrix ring.

    verdict is "divides" (quotient holds the integer quotient matrix) or
    "does-not-divide" (witness holds the first non-integral entry).
    fg_path_agrees records that the kernel route reproduced the
    linear-algebra quotient; a certificate is never issued otherwise.
    """

    set: DivisorSet
    a: int
    b: int
    kind: str
    verdict: str
    quotient: ExactMatrix | None = None
    witness: NonIntegralWitness | None = None
    fg_path_agrees: bool = True


def certify_divisibility(s: DivisorSet, a: int, b: int, kind: str) -> DivisibilityCertificate:
    """Decide whether the power gcd matrix with exponent a divides, in the
    integer matrix ring, the power matrix of the given kind with exponent b.

    The quotient is computed twice: once as an exact Gauss-Jordan inverse
    followed by a product, and once from the c-table kernels.  Any
    disagreement raises InternalMismatch instead of returning an answer.
    """
    _require_gcd_closed(s)
    _check_exponent(a)
    _check_exponent(b)
    _check_kind(kind)
    base = power_gcd_matrix(s, a)
    target = power_gcd_matrix(s, b) if kind == KIND_GCD else power_lcm_matrix(s, b)
    via_linalg = mul(target, inverse(base))
    via_kernels = quotient_from_kernels(s, a, b, kind)
    if via_linalg != via_kernels:
        raise InternalMismatch(
            f"kernel quotient disagrees with linear-algebra quotient on {s!r} (a={a}, b={b}, kind={kind})"
        )
    result = as_integer_matrix(via_linalg)
    if isinstance(result, NonIntegralWitness):
        return DivisibilityCertificate(s, a, b, kind, "does-not-divide", witness=result)
    return DivisibilityCertificate(s, a, b, kind, "divides", quotient=result)


def certificate_to_json_obj(cert: DivisibilityCertificate) -> dict:
    obj: dict = {
        "set": list(cert.set.elements),
        "a": cert.a,
        "b": cert.b,
        "kind": cert.kind,
        "verdict": cert.verdict,
        "cross_checks": {"fg_path_agrees": cert.fg_path_agrees},
    }
    if cert.quotient is not None:
        obj["quotient"] = to_json_obj(cert.quotient)
    if cert.witness is not None:
        obj["witness"] = {
            "row": cert.witness.row,
            "col": cert.witness.col,
            "value": {"n": cert.witness.value.numerator, "d": cert.witness.value.denominator},
        }
    return obj


# -- consecutive-range determinant closed forms -------------------------------


def smith_determinant(n: int, a: int) -> int:
    """det of the power gcd matrix on {1, ..., n}: prod of J_a(1..n)."""
    if not isinstance(n, int) or n < 1:
        raise BadRange(f"need n >= 1, got {n!r}")
    _check_exponent(a)
    return prod(jordan_totient(a, k) for k in range(1, n + 1))


def squarefree_sum_determinant(n: int, a: int) -> int:
    """det of the power gcd matrix on {2, ..., n}: the Jordan totient product
    times the sum of 1/J_a(t) over squarefree t <= n, evaluated exactly."""
    if not isinstance(n, int) or n < 2:
        raise BadRange(f"need n >= 2, got {n!r}")
    _check_exponent(a)
    total = prod(jordan_totient(a, k) for k in range(1, n + 1)) * sum(
        Fraction(1, jordan_totient(a, t)) for t in range(1, n + 1) if is_squarefree(t)
    )
    if total.denominator != 1:
        raise InternalMismatch("squarefree reciprocal sum failed to clear denominators")
    return int(total)
